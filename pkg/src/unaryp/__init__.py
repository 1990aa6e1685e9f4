"""Unary and self-reproducing P systems: languages, canonical forms, trade-offs."""

from .factorcore import (
    FactorVector,
    add,
    factorize,
    gpf,
    nth_prime,
    partial_leq,
    prime_index,
    subtract,
    to_integer,
)
from .model import (
    Diagnostic,
    GeneralPSystem,
    InvalidSystemError,
    UnaryPSystem,
    as_general,
    as_unary,
    permute,
    plus_to_star,
    size,
    strip_identities,
    validate,
)
from .semantics import (
    Configuration,
    enumerate_plus,
    enumerate_star,
    member_plus,
    member_star,
    simulate_reachable,
)
from .monoid import (
    CanonicalForm,
    MonoidRepr,
    NotContextFree,
    Singleton,
    build_repr,
    canonicalize,
    classify_context_free,
    equivalent,
    equivalent_plus,
    equivalent_star,
    is_irreducible,
    minimize,
    monoid_member,
    rebuild,
)
from .complexity import (
    TradeoffReport,
    check_power_bound,
    check_quadratic_bound,
    equivalent_systems,
    iterated_reduction_sizes,
    prime_power_family,
    reduce_once,
    reduction_chain,
    tradeoff_report,
    unary_systems,
    worst_case_family,
)
from .textformat import ParseError, SystemDocument, load, parse, parse_json, serialize, to_json

__version__ = "0.1.0"
