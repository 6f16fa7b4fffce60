"""Shared generators and independent reference implementations.

The evaluation and satisfiability oracles here deliberately avoid the code
paths they are used to check: evaluation goes literal by literal through the
minterm sum, and satisfaction of CNF clauses is checked straight off the
literal lists.
"""

from __future__ import annotations

import itertools
import random

import numpy as np

from onsolve import Algebra, AlgebraElement, BoolFunction, complement, join, meet
from onsolve.function import point_bits

B0 = Algebra(1)
B2 = Algebra(2)
B3 = Algebra(3)


def rand_element(algebra: Algebra, rng: random.Random) -> AlgebraElement:
    return algebra.element(rng.getrandbits(algebra.atom_count))


def rand_function(algebra: Algebra, n: int, rng: random.Random) -> BoolFunction:
    return BoolFunction.from_coeffs(
        algebra, n, [rand_element(algebra, rng) for _ in range(1 << n)])


def rand_b0_function(n: int, np_rng: np.random.Generator) -> BoolFunction:
    table = np_rng.integers(0, 2, size=1 << n).astype(bool)
    return BoolFunction(B0, n, table)


def rand_partition(total: int, m: int, rng: random.Random) -> list[set[int]]:
    """Random partition of range(total) into exactly m nonempty blocks."""
    assert 1 <= m <= total
    indices = list(range(total))
    rng.shuffle(indices)
    cuts = sorted(rng.sample(range(1, total), m - 1))
    blocks = []
    start = 0
    for cut in cuts + [total]:
        blocks.append(set(indices[start:cut]))
        start = cut
    return blocks


def all_points(algebra: Algebra, n: int):
    """Every tuple of B**n, mask-lexicographic."""
    for masks in itertools.product(range(algebra.size), repeat=n):
        yield tuple(algebra.element(m) for m in masks)


def minterm_sum_eval(f: BoolFunction, point) -> AlgebraElement:
    """Independent evaluation: sum over j of coeff_j * minterm_j(Z), with the
    minterm computed literal by literal."""
    algebra = f.algebra
    out = algebra.zero
    for j in range(1 << f.n):
        mu = algebra.one
        for z, bit in zip(point, point_bits(j, f.n)):
            mu = meet(mu, z if bit else complement(z))
        out = join(out, meet(f.coeff(j), mu))
    return out


def is_on_tuple(items, algebra: Algebra) -> bool:
    items = list(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if not meet(items[i], items[j]).is_zero:
                return False
    total = algebra.zero
    for x in items:
        total = join(total, x)
    return total.is_one


def is_coon_tuple(items, algebra: Algebra) -> bool:
    items = list(items)
    for i in range(len(items)):
        for j in range(i + 1, len(items)):
            if not join(items[i], items[j]).is_one:
                return False
    total = algebra.one
    for x in items:
        total = meet(total, x)
    return total.is_zero


# ---------------------------------------------------------------------------
# CNF utilities


def random_cnf(n: int, m: int, rng: random.Random,
               width: int = 3) -> list[list[int]]:
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), min(width, n))
        clauses.append([v if rng.random() < 0.5 else -v for v in variables])
    return clauses


def planted_cnf(n: int, m: int, rng: random.Random,
                width: int = 3) -> tuple[list[list[int]], list[int]]:
    """Random CNF guaranteed satisfiable by a hidden assignment."""
    hidden = [rng.randint(0, 1) for _ in range(n)]
    clauses = []
    for _ in range(m):
        variables = rng.sample(range(1, n + 1), min(width, n))
        lits = [v if rng.random() < 0.5 else -v for v in variables]
        if not any(_lit_true(l, hidden) for l in lits):
            fix = rng.randrange(len(lits))
            v = abs(lits[fix])
            lits[fix] = v if hidden[v - 1] else -v
        clauses.append(lits)
    return clauses, hidden


def _lit_true(lit: int, bits: list[int]) -> bool:
    value = bits[abs(lit) - 1]
    return bool(value) if lit > 0 else not value


def clauses_satisfied(clauses: list[list[int]], bits: list[int]) -> bool:
    return all(any(_lit_true(l, bits) for l in clause) for clause in clauses)


def model_bits(model, n: int) -> list[int]:
    """A two-element-algebra assignment as a 0/1 list."""
    return [1 if model[i].is_one else 0 for i in range(n)]
