"""From a hyperfield to its system of subsets and back again."""
from hyperkit.bridge import elimination_profile, hypersystem_of, recover_hyperring, table_diff
from hyperkit.catalog import build

K = build("krasner")            # {0, 1} with 1 ⊞ 1 = {0, 1}
S = hypersystem_of(K)
print(S.labels)                 # the singletons plus the one new set {0,1}

# each element of the system is a subset; inclusion is the surpassing relation
for i in range(S.n):
    print(S.label(i), sorted(S.members[i]))

print(elimination_profile(S).summary())

K2 = recover_hyperring(S)
print("diff against the original:", table_diff(K, K2))

# the same with the hyperfield of signs: four elements, 1 + (-1) being the whole set
P = build("signs")
SP = hypersystem_of(P)
print(SP.labels, recover_hyperring(SP) == P)
