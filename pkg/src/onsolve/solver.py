"""Consistency tests and constructive solvers for Boolean equations f(X) = 0.

The pieces fit together as follows.  Single-variable elimination multiplies
the two cofactors.  Its generalization expands f over an orthonormal set on a
block of variables and multiplies the coefficient functions, producing an
eliminant over the remaining variables; iterating over a variable split
drives the table down to a constant whose vanishing decides consistency.
Back-substitution then rebuilds a concrete solution stage by stage, using the
explicit solutions of the linear ON equation, of minterm systems, and of
systems phi_i(X) = beta_i defined by an ON set.
"""

from __future__ import annotations

import hashlib
from dataclasses import dataclass

import numpy as np

from .algebra import Algebra, AlgebraElement, complement, join_all, meet, meet_all
from .function import BoolFunction, point_bits
from .orthonormal import (
    OrthonormalSet,
    is_in_class,
    minterm_set,
    ladder_terms,
    term_set,
)

Assignment = dict[int, AlgebraElement]
"""Solution map: 0-based variable index -> element."""


class InapplicableClassError(ValueError):
    """The function admits no constant-coefficient expansion over the ON set."""


class InconsistentTraceError(ValueError):
    """Back-substitution was asked for on an inconsistent trace."""


def delta_tuple(algebra: Algebra, n: int, i: int) -> tuple[AlgebraElement, ...]:
    """The ON n-tuple with 1 in position i and 0 elsewhere."""
    if not 0 <= i < n:
        raise IndexError(f"position {i} out of range for n={n}")
    return tuple(algebra.one if j == i else algebra.zero for j in range(n))


def eliminate_variable(f: BoolFunction, i: int) -> BoolFunction:
    """Product of the two cofactors on variable i.

    f(X, y) = 0 is consistent exactly when the returned function (which no
    longer depends on variable i, though the arity is kept) is 0-consistent.
    """
    return f.cofactor(i, 1) * f.cofactor(i, 0)


def solve_linear_on(a, sigma=None) -> tuple[AlgebraElement, ...] | None:
    """ON solution of sum(a_i * z_i) = 0, or None when prod(a_i) != 0.

    The solution z_s(1) = a_s(1)', z_s(i) = a_s(1)..a_s(i-1) a_s(i)' follows
    the permutation ``sigma`` (0-based, default identity).
    """
    a = list(a)
    n = len(a)
    if n < 1:
        raise ValueError("need at least one coefficient")
    algebra = a[0].algebra
    if sigma is None:
        sigma = tuple(range(n))
    else:
        sigma = tuple(sigma)
        if sorted(sigma) != list(range(n)):
            raise ValueError(f"sigma must be a permutation of 0..{n - 1}")
    if not meet_all(a, algebra).is_zero:
        return None
    z: list[AlgebraElement | None] = [None] * n
    prefix = algebra.one
    for i in sigma:
        z[i] = meet(prefix, complement(a[i]))
        prefix = meet(prefix, a[i])
    return tuple(z)


def solve_dual_linear_coon(b) -> tuple[AlgebraElement, ...] | None:
    """Co-ON solution of prod(b_i + xi_i) = 1, or None when sum(b_i) != 1.

    xi_1 = b_1', xi_i = b_1 + .. + b_(i-1) + b_i'.
    """
    b = list(b)
    if not b:
        raise ValueError("need at least one coefficient")
    algebra = b[0].algebra
    if not join_all(b, algebra).is_one:
        return None
    out = []
    prefix = algebra.zero
    for x in b:
        out.append(prefix + complement(x))
        prefix = prefix + x
    return tuple(out)


def _solve_minterm_system(beta, n: int, algebra: Algebra) -> Assignment:
    """Solution of the system minterm_j(X) = beta_j for an ON tuple beta,
    by the expansion formula x_i = sum of beta_j over j with x_i positive."""
    values = {}
    for i in range(n):
        values[i] = join_all(
            (beta[j] for j in range(1 << n) if j >> (n - 1 - i) & 1), algebra)
    return values


def solve_minterm_equation(alpha) -> Assignment | None:
    """Solution of sum(alpha_j * minterm_j(X)) = 0, or None if prod != 0.

    Builds the ON tuple beta_0 = alpha_0', beta_j = alpha_0..alpha_(j-1)
    alpha_j' (running product from index 0) and solves minterm_j(X) = beta_j.
    """
    alpha = list(alpha)
    total = len(alpha)
    if total == 0 or total & (total - 1):
        raise ValueError("coefficient list length must be a power of two")
    n = total.bit_length() - 1
    algebra = alpha[0].algebra
    if not meet_all(alpha, algebra).is_zero:
        return None
    beta = []
    prefix = algebra.one
    for a in alpha:
        beta.append(meet(prefix, complement(a)))
        prefix = meet(prefix, a)
    return _solve_minterm_system(beta, n, algebra)


def is_on_system(items, algebra: Algebra) -> bool:
    """Pairwise products zero and sum one."""
    items = list(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if not meet(items[i], items[j]).is_zero:
                return False
    return join_all(items, algebra).is_one


def solve_on_system(onset: OrthonormalSet, beta,
                    representatives=None) -> Assignment | None:
    """Solution Z of the system phi_i(X) = beta_i, or None when beta is not
    an ON tuple of the set's order.

    One minterm index is chosen in each block (``representatives``; default
    the smallest index) to carry beta_i; the rest are forced to 0 and the
    resulting minterm system is solved by the expansion formula.
    """
    beta = list(beta)
    if len(beta) != onset.order:
        raise ValueError(f"expected {onset.order} constants, got {len(beta)}")
    algebra = onset.algebra
    if not is_on_system(beta, algebra):
        return None
    if representatives is None:
        representatives = [min(block) for block in onset.blocks]
    else:
        representatives = list(representatives)
        if len(representatives) != onset.order:
            raise ValueError("one representative per block required")
        for i, (k, block) in enumerate(zip(representatives, onset.blocks)):
            if k not in block:
                raise ValueError(f"representative {k} not in block {i + 1}")
    full = [algebra.zero] * (1 << onset.n)
    for k, b in zip(representatives, beta):
        full[k] = b
    return _solve_minterm_system(full, onset.n, algebra)


@dataclass(frozen=True)
class ClassConsistency:
    """Decision for f = 0 with f in the constant-coefficient class."""

    consistent: bool
    constants: tuple[AlgebraElement, ...]
    witness: Assignment | None


def consistency_on_class(f: BoolFunction, onset: OrthonormalSet) -> ClassConsistency:
    """Decide f = 0 for f in the constant class of the ON set.

    The equation is consistent exactly when the product of the expansion
    constants is 0; a witness is then built by solving the associated linear
    ON equation and the induced system phi_i(X) = beta_i.
    """
    membership = is_in_class(f, onset)
    if not membership:
        raise InapplicableClassError(
            "function admits no constant-coefficient expansion over this ON set")
    constants = membership.constants
    witness = None
    beta = solve_linear_on(constants)
    consistent = beta is not None
    if consistent:
        witness = solve_on_system(onset, beta)
        check = f.evaluate(tuple(witness[i] for i in range(f.n)))
        if not check.is_zero:
            raise AssertionError("internal error: constructed witness fails")
    return ClassConsistency(consistent, constants, witness)


def necessary_condition(f: BoolFunction, onset: OrthonormalSet) -> BoolFunction:
    """Function whose 0-consistency is necessary for that of f = 0.

    For f in the constant class this is the constant product of the expansion
    constants, and the condition is then also sufficient.  Outside the class
    it falls back to the product of the pointwise coefficient functions
    f*phi_i, which is sound but usually weak.
    """
    membership = is_in_class(f, onset)
    if membership:
        product = meet_all(membership.constants, f.algebra)
        return BoolFunction.constant(f.algebra, f.n, product, var_cap=f.n)
    out = BoolFunction.constant(f.algebra, f.n, f.algebra.one, var_cap=f.n)
    for phi in onset.members():
        out = out * (f * phi)
    return out


# ---------------------------------------------------------------------------
# Block elimination


def _block_rows(f: BoolFunction, block: tuple[int, ...]) -> np.ndarray:
    """Reshape f's table to (2**b, 2**rest): row A holds the restriction of f
    to block assignment A, as a table over the remaining variables (original
    order).  The first block variable is the most significant bit of A."""
    n = f.n
    b = len(block)
    tensor = f.table.reshape((2,) * n) if n else f.table.reshape((1, 1))
    if n == 0:
        return tensor
    moved = np.moveaxis(tensor, block, range(b))
    return np.ascontiguousarray(moved).reshape(1 << b, 1 << (n - b))


def _stage_expand(f: BoolFunction, block: tuple[int, ...],
                  phi: OrthonormalSet) -> tuple[list[np.ndarray], np.ndarray]:
    """Coefficient tables (over the remaining variables) of f's expansion in
    the ON set on the block, plus the eliminant table (their product)."""
    rows = _block_rows(f, block)
    coeffs = []
    for block_indices in phi.blocks:
        idx = sorted(block_indices)
        if len(idx) == 1:
            coeffs.append(rows[idx[0]].copy())
            continue
        sub = rows[idx]
        low = np.bitwise_or.reduce(sub, axis=0)
        high = np.bitwise_and.reduce(sub, axis=0)
        if not np.array_equal(low, high):
            raise InapplicableClassError(
                "no coefficient over the remaining variables exists for a "
                "member of the block ON set; the function is outside the class")
        coeffs.append(low)
    eliminant = coeffs[0].copy()
    for c in coeffs[1:]:
        eliminant &= c
    return coeffs, eliminant


def _local_onset(policy: str, width: int, algebra: Algebra) -> OrthonormalSet:
    if policy == "minterm":
        return minterm_set(width, algebra, var_cap=width)
    if policy == "ladder":
        return term_set(width, ladder_terms(width), algebra)
    raise ValueError('phi policy must be "minterm" or "ladder"')


def block_eliminant(f: BoolFunction, block,
                    phi: OrthonormalSet | None = None) -> BoolFunction:
    """Eliminant of f after removing a block of variables.

    ``phi`` is an ON set over the block's own variables (first block variable
    = most significant minterm bit); None means the block minterms, for which
    the expansion always exists.  The result ranges over the remaining
    variables in their original order, and f = 0 is consistent exactly when
    the eliminant is 0-consistent.
    """
    block = tuple(block)
    if len(set(block)) != len(block):
        raise ValueError("block repeats a variable")
    for i in block:
        if not 0 <= i < f.n:
            raise IndexError(f"variable index {i} out of range for n={f.n}")
    if phi is None:
        phi = minterm_set(len(block), f.algebra, var_cap=len(block))
    elif phi.n != len(block) or phi.algebra != f.algebra:
        raise ValueError("ON set does not match the block")
    _, eliminant = _stage_expand(f, block, phi)
    return BoolFunction(f.algebra, f.n - len(block), eliminant)


@dataclass(frozen=True)
class EliminationStage:
    """One step of block elimination, kept for reporting and back-substitution."""

    block: tuple[int, ...]            # original indices eliminated here
    remaining: tuple[int, ...]        # original indices the eliminant ranges over
    phi: OrthonormalSet               # ON set over the block's local variables
    coeffs: tuple[BoolFunction, ...]  # expansion coefficients over `remaining`
    eliminant: BoolFunction           # product of the coefficients


@dataclass(frozen=True)
class EliminationTrace:
    """Eliminants f_1 .. f_r of f under a variable split, ending in a constant."""

    algebra: Algebra
    n: int
    split: tuple[tuple[int, ...], ...]
    policy: str
    stages: tuple[EliminationStage, ...]
    final: AlgebraElement

    @property
    def consistent(self) -> bool:
        return self.final.is_zero


def consecutive_split(n: int, block_size: int) -> list[list[int]]:
    """Variables 0..n-1 in consecutive blocks; the last may be smaller."""
    if block_size < 1:
        raise ValueError("block size must be positive")
    return [list(range(s, min(s + block_size, n)))
            for s in range(0, n, block_size)]


def eliminate_blocks(f: BoolFunction, split,
                     phi_policy: str = "minterm") -> EliminationTrace:
    """Run block elimination over a split of the variables.

    ``split`` lists the blocks (original variable indices) in elimination
    order and must partition 0..n-1.  The equation f = 0 is consistent
    exactly when the trace's final constant is 0.
    """
    split = tuple(tuple(b) for b in split)
    flat = [i for b in split for i in b]
    if sorted(flat) != list(range(f.n)):
        raise ValueError("split must partition the variable indices")
    if any(not b for b in split):
        raise ValueError("split contains an empty block")

    remaining = list(range(f.n))
    g = f
    stages = []
    for block in split:
        positions = tuple(remaining.index(i) for i in block)
        phi = _local_onset(phi_policy, len(block), f.algebra)
        coeff_tables, eliminant_table = _stage_expand(g, positions, phi)
        remaining = [i for i in remaining if i not in block]
        width = len(remaining)
        coeffs = tuple(BoolFunction(f.algebra, width, t) for t in coeff_tables)
        g = BoolFunction(f.algebra, width, eliminant_table)
        stages.append(EliminationStage(block, tuple(remaining), phi, coeffs, g))
    return EliminationTrace(f.algebra, f.n, split, phi_policy,
                            tuple(stages), g.coeff(0))


def extract_solution(trace: EliminationTrace) -> Assignment:
    """Rebuild a solution of f = 0 from a consistent elimination trace.

    Walks the stages backwards; at each one the coefficients are evaluated at
    the partial assignment and one ON member with vanishing coefficient is
    asserted equal to 1.  Over the two-element algebra the pivot is the
    highest-index vanishing block (matching the worked-example convention of
    preferring the all-positive minterm) and the block's smallest minterm
    fixes the bits; over larger algebras the stage is solved through the
    linear ON equation and the induced ON system.
    """
    if not trace.consistent:
        raise InconsistentTraceError(f"final eliminant is {trace.final}, not 0")
    algebra = trace.algebra
    values: Assignment = {}
    for stage in reversed(trace.stages):
        point = tuple(values[i] for i in stage.remaining)
        constants = [c.evaluate(point) for c in stage.coeffs]
        if algebra.atom_count <= 1:
            pivot = max(
                (i for i, a in enumerate(constants) if a.is_zero), default=None)
            if pivot is None:
                raise InconsistentTraceError(
                    "no vanishing coefficient at the partial assignment")
            rep = min(stage.phi.blocks[pivot])
            bits = point_bits(rep, len(stage.block))
            for var, bit in zip(stage.block, bits):
                values[var] = algebra.one if bit else algebra.zero
        else:
            beta = solve_linear_on(constants)
            if beta is None:
                raise InconsistentTraceError(
                    "coefficient product nonzero at the partial assignment")
            local = solve_on_system(stage.phi, beta)
            for j, var in enumerate(stage.block):
                values[var] = local[j]
    return values


def render_trace(trace: EliminationTrace,
                 var_names: list[str] | None = None) -> str:
    """Human-readable stage report of an elimination trace."""

    def name(i: int) -> str:
        return var_names[i] if var_names else f"x{i + 1}"

    def table_digest(table: np.ndarray) -> str:
        if table.dtype == object:
            raw = repr(list(table)).encode()
        else:
            raw = np.ascontiguousarray(table).tobytes()
        return hashlib.sha1(raw).hexdigest()[:8]

    lines = [f"elimination trace: n={trace.n}, algebra=2^"
             f"{trace.algebra.atom_count}, policy={trace.policy}"]
    for s, stage in enumerate(trace.stages, start=1):
        digest = table_digest(stage.eliminant.table)
        zero_coeffs = sum(1 for c in stage.coeffs if c.is_zero)
        lines.append(
            f"  stage {s}: eliminate {{{', '.join(name(i) for i in stage.block)}}}"
            f" via ON order {stage.phi.order};"
            f" coefficients: {len(stage.coeffs)} ({zero_coeffs} zero);"
            f" eliminant over {len(stage.remaining)} vars"
            f" ({1 << len(stage.remaining)} entries, digest {digest})")
    lines.append(f"  final constant: {trace.final}"
                 f" -> {'CONSISTENT' if trace.consistent else 'INCONSISTENT'}")
    return "\n".join(lines)


# ---------------------------------------------------------------------------
# Two-element-algebra corollaries


def _require_b0(f: BoolFunction) -> None:
    if f.algebra.atom_count != 1:
        raise ValueError("this test is specific to the two-element algebra")


def b0_coefficient(f: BoolFunction, phi: BoolFunction) -> AlgebraElement | None:
    """Constant coefficient of phi in a two-element-algebra expansion of f.

    Returns 0 when f*phi is identically zero, 1 when f'*phi is, and None when
    neither holds (no constant works, so f is outside the class for phi).
    """
    _require_b0(f)
    if (f * phi).is_zero:
        return f.algebra.zero
    if (~f * phi).is_zero:
        return f.algebra.one
    return None


def b0_consistency(f: BoolFunction, onset: OrthonormalSet, target: int = 0) -> bool:
    """Decide f = target (0 or 1) over the two-element algebra by tautology
    scans: f = 0 is consistent iff f*phi_i is identically zero for some i
    (dually with f' for target 1).  Requires f in the constant class."""
    _require_b0(f)
    if target not in (0, 1):
        raise ValueError("target must be 0 or 1")
    if not is_in_class(f, onset):
        raise InapplicableClassError(
            "function admits no constant-coefficient expansion over this ON set")
    g = f if target == 0 else ~f
    return any((g * phi).is_zero for phi in onset.members())
