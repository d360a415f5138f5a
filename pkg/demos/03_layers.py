"""Layered extensions: rebuilding the supertropical and signed tropical windows."""
from fractions import Fraction

from hyperkit.bridge import find_isomorphism, hypersystem_of
from hyperkit.catalog import build
from hyperkit.constructions import layered, layered_hyper, layered_formula_mismatches
from hyperkit.constructions import symmetrize_bipotent
from hyperkit.families import maxplus_window, phase_window, phased_tropical_contains
from hyperkit.families import supertropical_window

G = [Fraction(-1), Fraction(0), Fraction(1, 2), Fraction(1)]

# layers {1, 1ᵛ} from the Krasner hypersystem give the supertropical semiring
A = layered(hypersystem_of(build("krasner")), G)
print(A.labels)
print(find_isomorphism(A, supertropical_window(G)))

# layers {1, -1, ∞} give signed (symmetrized) max-plus
B = layered(hypersystem_of(build("signs")), G)
print(find_isomorphism(B, symmetrize_bipotent(maxplus_window(G))))

# phase layers, read as point sets spilling to lower grades, match the phased
# tropical hyperfield formula entry by entry
C = layered_hyper(phase_window(4), [0, 1])
print(C.n, "elements;", len(layered_formula_mismatches(C, phased_tropical_contains)), "mismatches")
