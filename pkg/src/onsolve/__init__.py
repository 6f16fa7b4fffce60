"""Boolean equation consistency over finite Boolean algebras, decided and
solved constructively through orthonormal expansion and block elimination."""

from .algebra import (
    Algebra,
    AlgebraElement,
    AlgebraMismatchError,
    B0,
    complement,
    join,
    leq,
    meet,
)
from .function import (
    BoolFunction,
    Term,
    cofactor,
    minterm_function,
    parse,
    shannon_pos,
    shannon_sop,
    term_to_function,
    to_expression,
)
from .oracle import BudgetExceededError, OracleReport, brute_class_membership, brute_consistency
from .orthonormal import (
    CoefficientInterval,
    ClassMembership,
    NonIndicatorError,
    NotNormalError,
    NotOrthogonalError,
    OrthonormalSet,
    OrthonormalityError,
    ZeroMemberError,
    coefficient_interval,
    class_inequality,
    expand,
    expand_in_terms,
    format_on_set,
    from_blocks,
    is_in_class,
    ladder_terms,
    minterm_set,
    parse_on_set,
    verify_on,
)
from .parsing import ExpressionSyntaxError, parse_element
from .solver import (
    Assignment,
    ClassConsistency,
    EliminationStage,
    EliminationTrace,
    InapplicableClassError,
    InconsistentTraceError,
    b0_coefficient,
    b0_consistency,
    block_eliminant,
    consecutive_split,
    consistency_on_class,
    delta_tuple,
    eliminate_blocks,
    eliminate_variable,
    extract_solution,
    necessary_condition,
    render_trace,
    solve_dual_linear_coon,
    solve_linear_on,
    solve_minterm_equation,
    solve_on_system,
)

__version__ = "0.1.0"

__all__ = [
    "Algebra",
    "AlgebraElement",
    "AlgebraMismatchError",
    "Assignment",
    "B0",
    "BoolFunction",
    "BudgetExceededError",
    "ClassConsistency",
    "ClassMembership",
    "CoefficientInterval",
    "EliminationStage",
    "EliminationTrace",
    "ExpressionSyntaxError",
    "InapplicableClassError",
    "InconsistentTraceError",
    "NonIndicatorError",
    "NotNormalError",
    "NotOrthogonalError",
    "OracleReport",
    "OrthonormalSet",
    "OrthonormalityError",
    "Term",
    "ZeroMemberError",
    "b0_coefficient",
    "b0_consistency",
    "block_eliminant",
    "brute_class_membership",
    "brute_consistency",
    "class_inequality",
    "coefficient_interval",
    "cofactor",
    "complement",
    "consecutive_split",
    "consistency_on_class",
    "delta_tuple",
    "eliminate_blocks",
    "eliminate_variable",
    "expand",
    "expand_in_terms",
    "extract_solution",
    "format_on_set",
    "from_blocks",
    "is_in_class",
    "join",
    "ladder_terms",
    "leq",
    "meet",
    "minterm_function",
    "minterm_set",
    "necessary_condition",
    "parse",
    "parse_element",
    "parse_on_set",
    "render_trace",
    "shannon_pos",
    "shannon_sop",
    "solve_dual_linear_coon",
    "solve_linear_on",
    "solve_minterm_equation",
    "solve_on_system",
    "term_to_function",
    "to_expression",
    "verify_on",
]
