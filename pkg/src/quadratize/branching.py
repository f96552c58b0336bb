"""Branching: pick the cheapest nonsquare and split over its factorizations."""

from __future__ import annotations

from dataclasses import dataclass

from .polynomials import Monomial, decompositions, divisor_count, grlex_key
from .state import SearchState


@dataclass(frozen=True)
class ChildSubproblem:
    added: tuple[Monomial, ...]  # 1 or 2 monomials, disjoint from the parent's vars
    order_key: int


def select_branch_monomial(state: SearchState) -> Monomial:
    """The nonsquare with the fewest factorizations; graded-lex breaks ties."""
    if not state.nonsquares:
        raise ValueError("no nonsquares to branch on")
    return min(state.nonsquares, key=lambda m: (divisor_count(m), grlex_key(m)))


def generate_children(state: SearchState) -> list[ChildSubproblem]:
    """One child per factorization of the selected nonsquare, cheapest first.

    A child adds the factors not already among the generalized variables
    (always at least one).  Children whose additions coincide are merged.
    The sort key is the child's sum of variable degrees plus n times its
    variable count; ties break on the added monomials in graded-lex order.
    """
    m = select_branch_monomial(state)
    n = state.system.num_vars
    children: dict[tuple[Monomial, ...], ChildSubproblem] = {}
    for m1, m2 in decompositions(m):
        added = tuple(sorted({f for f in (m1, m2) if f not in state.vars_set},
                             key=grlex_key))
        if not added or added in children:
            continue
        degree_sum = state.degree_sum + sum(sum(f) for f in added)
        var_count = len(state.vars_sorted) + len(added)
        children[added] = ChildSubproblem(added, degree_sum + n * var_count)
    return sorted(children.values(),
                  key=lambda c: (c.order_key, tuple(grlex_key(f) for f in c.added)))
