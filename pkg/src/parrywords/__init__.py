"""Words generated by simple Parry morphisms: Dumont-Thomas numeration,
anti-Lyndon combinatorics, and string attractors of fixed-point prefixes."""

from .attractors import (
    Attractor,
    ConditionReport,
    ConjectureReport,
    ConjectureRow,
    DivergenceRow,
    ProfileEntry,
    ProfileResult,
    attractor_for_prefix,
    candidate_attractor,
    check_conditions,
    conjecture_report,
    divergence_table,
    expected_profile_size,
    is_attractor,
    power_prefix_len,
    power_prefix_len_direct,
    profile,
    smallest_attractor,
    window_start,
    windows_cover_all,
)
from .errors import (
    CapError,
    DomainError,
    Error,
    InconclusiveError,
    NotInLanguageError,
    ParameterError,
    ScopeError,
)
from .lyndon import (
    INVERSE,
    STANDARD,
    LetterOrder,
    anti_lyndon_root,
    anti_lyndon_stream,
    conjugates,
    duval_factorization,
    gen_cmp,
    is_anti_lyndon,
    is_lyndon,
    is_max_conjugate,
    is_primitive,
    lex_cmp,
    longest_anti_lyndon_prefix,
    smallest_period,
)
from .numeration import (
    NumerationAutomaton,
    ParryReduction,
    automatic_letter,
    build_automaton,
    digit_ceiling,
    enumerate_language,
    greedy_rep,
    in_language,
    is_greedy,
    reduce_parry,
    rep,
    project_letters,
    val,
    val_unchecked,
)
from .words import (
    MAX_ALPHABET,
    ParamWord,
    Word,
    apply_morphism,
    block,
    block_length,
    format_symbols,
    iter_params,
    lengths,
    param_word,
    parse_symbols,
    prefix,
)

__version__ = "0.1.0"

__all__ = [
    "Attractor",
    "CapError",
    "ConditionReport",
    "ConjectureReport",
    "ConjectureRow",
    "DivergenceRow",
    "DomainError",
    "Error",
    "INVERSE",
    "InconclusiveError",
    "LetterOrder",
    "MAX_ALPHABET",
    "NotInLanguageError",
    "NumerationAutomaton",
    "ParamWord",
    "ParameterError",
    "ParryReduction",
    "ProfileEntry",
    "ProfileResult",
    "STANDARD",
    "ScopeError",
    "Word",
    "anti_lyndon_root",
    "anti_lyndon_stream",
    "apply_morphism",
    "attractor_for_prefix",
    "automatic_letter",
    "block",
    "block_length",
    "build_automaton",
    "candidate_attractor",
    "check_conditions",
    "conjecture_report",
    "conjugates",
    "digit_ceiling",
    "divergence_table",
    "duval_factorization",
    "enumerate_language",
    "expected_profile_size",
    "format_symbols",
    "gen_cmp",
    "greedy_rep",
    "in_language",
    "is_anti_lyndon",
    "is_attractor",
    "is_greedy",
    "is_lyndon",
    "is_max_conjugate",
    "is_primitive",
    "iter_params",
    "lengths",
    "lex_cmp",
    "longest_anti_lyndon_prefix",
    "param_word",
    "parse_symbols",
    "power_prefix_len",
    "power_prefix_len_direct",
    "prefix",
    "profile",
    "project_letters",
    "reduce_parry",
    "rep",
    "smallest_attractor",
    "smallest_period",
    "val",
    "val_unchecked",
    "window_start",
    "windows_cover_all",
]
