"""Finite hyperrings, triples and systems: tables, verification and constructions."""
from .carrier import (UNDEF, ClosureCapExceeded, DomainError, HKError, HyperTable, ParseError,
                      PreconditionError, ResourceError, System, UnsupportedError, ValidationError,
                      canonical_subset, closure_under)
from .report import AxiomResult, Report
from .systems import SurpassSpec, check_system, check_triple, classify
from .hyper import check_hypergroup, check_hyperring, quotient_hyperring, integers_mod
from .bridge import (elimination_profile, find_isomorphism, hypersystem_of, recover_hyperring,
                     retraction_suite)

__version__ = "0.1.0"

__all__ = [
    "UNDEF", "ClosureCapExceeded", "DomainError", "HKError", "HyperTable", "ParseError",
    "PreconditionError", "ResourceError", "System", "UnsupportedError", "ValidationError",
    "canonical_subset", "closure_under", "AxiomResult", "Report", "SurpassSpec", "check_system",
    "check_triple", "classify", "check_hypergroup", "check_hyperring", "quotient_hyperring",
    "integers_mod", "elimination_profile", "find_isomorphism", "hypersystem_of",
    "recover_hyperring", "retraction_suite",
]
