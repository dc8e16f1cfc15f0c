"""Doubling construction on finite groups and its Moufang classification."""

from .analysis import (
    DIASS_CANDIDATE_TRIPLES,
    DiassCandidates,
    PropertyReport,
    analyze,
    analyze_table,
    diass_candidates,
    diass_triples,
    loop_gate,
)
from .classify import (
    ClassificationReport,
    canonical_json,
    enumerate_matrices,
    report_csv,
    search_bol_not_moufang,
    verify_classification,
)
from .doubling import DoubledMagma, build_double, chein, double_table
from .errors import (
    BadArgumentError,
    BudgetError,
    GroupSpecError,
    HypothesisError,
    IdentitySyntaxError,
    InverseUndefinedError,
    NotAGroupError,
    NotALoopError,
    SearchCapError,
    TableFormatError,
)
from .groups import (
    Group,
    GroupSpec,
    build_group,
    center_index,
    is_abelian,
    is_elementary_abelian_2,
    parse_group_spec,
    squares_central,
    validate_group,
)
from .identities import (
    BUILTINS,
    Counterexample,
    Identity,
    check_identity,
    format_term,
    get_builtin,
    parse_identity,
)
from .morphisms import (
    are_anti_isomorphic,
    are_isomorphic,
    bar_inverse_map,
    verify_homomorphism,
)
from .pairops import (
    NAMED_MATRICES,
    OpMatrix,
    PairOp,
    all_matrices,
    apply,
    compose,
    opposite_matrix,
    quarter_matrix,
    t_transform,
    transform,
)
from .tables import CayleyTable, format_table_text, is_latin, parse_table_text

__version__ = "0.1.0"
