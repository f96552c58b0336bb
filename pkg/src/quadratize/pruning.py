"""The two lower-bound pruning rules.

Both rules answer: can the current variable set still be extended to a
monomial quadratization of order strictly below N?  They return True when
that is provably impossible, and are sound but not complete (False promises
nothing).

Rule 1 bounds how many nonsquares r additional variables could cover: each
new variable z covers at most mult(z) nonsquares of the form z*v with v a
current variable (mult taken from the quotient multiset), and products of
two new variables cover at most r(r+1)/2 more.

Rule 2 replaces r(r+1)/2 by the maximum edge count of a pseudograph on r
vertices containing no closed 4-edge walk with pairwise-distinct adjacent
edges; loops correspond to squares, hence the count of even-degree members.
The bound is applied to a subset of the nonsquares with pairwise-distinct
products, which is what forbids such walks in the covering graph.
"""

from __future__ import annotations

from collections import Counter
from math import isqrt

from .polynomials import Monomial
from .state import SearchState

# Exact maximum edge counts, row n = vertices, column m = allowed loops
# (0 <= m <= n).  A pseudograph of this kind never has more than n loops,
# so lookups clamp m to n.  Rows up to 7 are exact; beyond that
# c4_capacity falls back to an analytic bound.
C4_CAPACITY_TABLE: dict[int, tuple[int, ...]] = {
    1: (0, 1),
    2: (1, 2, 2),
    3: (3, 3, 4, 4),
    4: (4, 5, 5, 6, 6),
    5: (6, 6, 7, 7, 8, 8),
    6: (7, 8, 9, 9, 9, 10, 10),
    7: (9, 10, 11, 12, 12, 12, 12, 12),
}


def c4_capacity(n: int, m: int) -> int:
    """Upper bound (exact for n <= 7) on edges of the loop-limited graphs above."""
    if n <= 0:
        return 0
    m = min(m, n)
    row = C4_CAPACITY_TABLE.get(n)
    if row is not None:
        return row[m]
    # floor(n/2 * (1 + sqrt(4n - 3))) + m, computed exactly in integers
    return (n + isqrt(n * n * (4 * n - 3))) // 2 + m


def quotient_multiplicities(targets, var_monomials) -> list[int]:
    """Multiplicities of the quotient multiset {t/v : v divides t}, descending.

    Every divisible (target, variable) pair counts, including v = 1 and v = t.
    """
    counts: Counter[Monomial] = Counter()
    for t in targets:
        for v in var_monomials:
            q = tuple(a - b for a, b in zip(t, v))
            if min(q) >= 0:
                counts[q] += 1
    return sorted(counts.values(), reverse=True)


def build_squarefree_subset(monomials) -> tuple[Monomial, ...]:
    """Greedy subset whose pairwise products (squares included) are all distinct.

    Traversal order: total degree descending, then ascending exponent order;
    a candidate is kept iff it preserves distinctness of all products.
    """
    chosen: list[Monomial] = []
    products: set[Monomial] = set()
    for m in sorted(monomials, key=lambda m: (-sum(m), m)):
        new_products = [tuple(a + b for a, b in zip(m, e)) for e in chosen]
        new_products.append(tuple(2 * a for a in m))
        if any(p in products for p in new_products):
            continue
        chosen.append(m)
        products.update(new_products)
    return tuple(chosen)


def smallest_k_quadratic(count: int, mult: list[int]) -> int:
    """Least k with count <= mult[1] + ... + mult[k] + k(k+1)/2."""
    k, prefix = 0, 0
    while count > prefix + k * (k + 1) // 2:
        k += 1
        if k <= len(mult):
            prefix += mult[k - 1]
    return k


def smallest_k_c4(count: int, mult: list[int], loops: int) -> int:
    """Least k with count <= mult[1] + ... + mult[k] + c4_capacity(k, loops)."""
    k, prefix = 0, 0
    while count > prefix + c4_capacity(k, loops):
        k += 1
        if k <= len(mult):
            prefix += mult[k - 1]
    return k


def prune_by_quadratic_bound(state: SearchState, incumbent_order: int) -> bool:
    """True if no extension can quadratize with fewer than incumbent_order vars."""
    var_monomials = [m for _, m in state.vars_sorted]
    mult = quotient_multiplicities(state.nonsquares, var_monomials)
    k = smallest_k_quadratic(len(state.nonsquares), mult)
    return k + len(state.new_vars) >= incumbent_order


def prune_by_c4_bound(state: SearchState, incumbent_order: int) -> bool:
    """Same contract as prune_by_quadratic_bound, via the graph capacity bound."""
    subset = build_squarefree_subset(state.nonsquares)
    var_monomials = [m for _, m in state.vars_sorted]
    mult = quotient_multiplicities(subset, var_monomials)
    loops = sum(1 for m in subset if all(e % 2 == 0 for e in m))
    k = smallest_k_c4(len(subset), mult, loops)
    return k + len(state.new_vars) >= incumbent_order
