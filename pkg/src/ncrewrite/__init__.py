"""Noncommutative free-algebra rewriting engine with Turing-machine encodings."""

from .words import (
    EPS,
    AlphabetError,
    Word,
    parse_word,
    phi_alphabet,
    psi_alphabet,
    word_to_str,
)
from .orders import (
    DEGLEX,
    NILPOTENCY,
    ZERO_DIVISOR,
    ReductionOrder,
    compare_nilp,
    compare_zd,
    deg_t,
    height,
    nilpotency_order,
    weighted_degree,
    zerodivisor_order,
)
from .rewrite import (
    BudgetExhausted,
    Matcher,
    Polynomial,
    Presentation,
    Rule,
    concat,
    equal_in_algebra,
    format_polynomial,
    normalize,
    parse_polynomial,
    power_normalize,
    reduce_once,
)
from .groebner import (
    Ambiguity,
    OrderAuditReport,
    audit_order,
    audit_orientation,
    find_ambiguities,
    resolve_ambiguity,
)
from .turing import (
    Move,
    RunResult,
    TMConfig,
    TMSpec,
    format_config,
    format_tm_spec,
    minsky_utm,
    parse_config,
    parse_tm_spec,
    tiny_halting_machine,
    tiny_looping_machine,
    tm_run,
    tm_step,
)
from .encodings import (
    decode_structure,
    encode_config,
    format_presentation,
    make_presentation,
    nilpotency_presentation,
    parse_presentation,
    zerodivisor_presentation,
)
from .harness import (
    DecisionOutcome,
    LockstepReport,
    annihilate_bounded,
    cancellation_probe,
    htilde,
    lockstep,
    nilpotent_bounded,
    zerodivisor_witness_bounded,
)

__all__ = [name for name in dir() if not name.startswith("_")]

__version__ = "0.1.0"
