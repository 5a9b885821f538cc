"""State complexity of operations on prefix-closed regular languages."""
from .automata import (
    AlphabetError,
    AutomatonError,
    Cdfa,
    Idfa,
    Nfa,
    PreconditionError,
    accepts,
    canonical_form,
    determinize,
    enumerate_language,
    equivalent,
    find_counterexample,
    is_prefix_closed,
    isc,
    minimize_cdfa,
    minimize_idfa,
    prefix_violation,
    sc,
    trim,
)
from .census import CensusTable, enumerate_class, star_collapse_check, star_census
from .fooling import FoolingCertificate, Verdict, check, proof_fooling_set, search_fooling
from .ops import OPERATIONS, OpResult, construct
from .textio import ParseError, parse_automaton, parse_certificate, read_automaton
from .witnesses import (
    FAMILIES,
    THEOREMS,
    BoundReport,
    WitnessSpec,
    bound_report,
    make_witness,
    reconstruct_witness,
    validate_witness,
)

__all__ = [
    "AlphabetError", "AutomatonError", "BoundReport", "CensusTable", "Cdfa", "FAMILIES",
    "FoolingCertificate", "Idfa", "Nfa", "OPERATIONS", "OpResult", "ParseError",
    "PreconditionError", "THEOREMS", "Verdict", "WitnessSpec", "accepts", "bound_report",
    "canonical_form", "check", "construct", "determinize", "enumerate_class",
    "enumerate_language", "equivalent", "find_counterexample", "is_prefix_closed", "isc",
    "make_witness", "minimize_cdfa", "minimize_idfa", "proof_fooling_set", "parse_automaton",
    "parse_certificate", "prefix_violation", "star_collapse_check", "read_automaton",
    "reconstruct_witness", "sc", "search_fooling", "star_census", "trim", "validate_witness",
]
