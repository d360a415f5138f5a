"""The negative fixtures: where the axioms break, and the witnesses the checks report."""
from hyperkit.bridge import elimination_profile, hypersystem_of, large_set_ideal
from hyperkit.catalog import viro_multigroup
from hyperkit.families import phase_product_discrepancy
from hyperkit.hyper import check_hypergroup, check_reversibility_equivalence, integers_mod
from hyperkit.hyper import quotient_hyperring

# Viro's multigroup: unique negatives, but reversibility fails, and with it
# additivity of S -> -S
M = viro_multigroup()
print(check_hypergroup(M).summary())
print(check_reversibility_equivalence(M).summary())

# F_11 modulo {±1}: enlarge the balancing ideal by every set of size >= 4 and
# tangible balancing stops holding
H = quotient_hyperring(integers_mod(11), [1, 10])
S = hypersystem_of(H)
print(S.n, "sets in the hypersystem")
rep = elimination_profile(S, large_set_ideal(S, 4))
print(rep.summary())

# the setwise product of two phase cones is not the distributed product
print(phase_product_discrepancy(4))
