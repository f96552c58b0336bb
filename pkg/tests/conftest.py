"""Shared fixtures: worked example systems and the random test corpus."""

import random
from fractions import Fraction
from math import comb

import pytest

from quadratize.bruteforce import box_candidates
from quadratize.parsing import parse_system
from quadratize.polynomials import ODESystem, Polynomial
from quadratize.solver import bnb_search, per_variable_degrees

WORKED_EXAMPLES = {
    "scalar_x5": "x' = x^5",
    "fig_x4_x3": "x' = x^4 + x^3",
    "two_var_counterexample": "x1' = x2^4\nx2' = x1^2",
    "rabinovich_fabrikant": (
        "x' = y*(z - 1 + x^2) + a*x\n"
        "y' = x*(3*z + 1 - x^2) + a*y\n"
        "z' = -2*z*(b + x*y)\n"
    ),
}


@pytest.fixture(scope="session")
def worked_systems():
    return {name: parse_system(text) for name, text in WORKED_EXAMPLES.items()}


def random_polynomial_system(rng: random.Random) -> ODESystem:
    """A small random system: up to 3 variables, total degree at most 4."""
    n = rng.choice((1, 1, 2, 2, 2, 3, 3))
    per_var_cap = 4 if n <= 2 else 3
    num_params = rng.choice((0, 0, 0, 1))
    variables = tuple(f"x{i}" for i in range(1, n + 1))
    parameters = ("a",) if num_params else ()

    def random_monomial():
        while True:
            mono = tuple(rng.randint(0, per_var_cap) for _ in range(n))
            if sum(mono) <= 4:
                return mono

    rhs = []
    for _ in range(n):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            mono = random_monomial()
            params = (rng.randint(0, 1),) if num_params else ()
            coeff = Fraction(rng.choice((-3, -2, -1, 1, 2, 3)),
                             rng.choice((1, 1, 2)))
            key = (mono, params)
            terms[key] = terms.get(key, Fraction(0)) + coeff
        rhs.append(Polynomial(terms))
    if num_params and not any(params != (0,) for poly in rhs for _, params in poly.terms):
        # cancellation can leave a declared parameter unused; drop it so the
        # system echoes through the text format unchanged
        parameters = ()
        rhs = [Polynomial({(mono, ()): coeff
                           for (mono, _), coeff in poly.terms.items()})
               for poly in rhs]
    return ODESystem(variables, parameters, tuple(rhs))


def wide_box(system: ODESystem) -> tuple[int, ...]:
    """The uniform box with every bound equal to the largest variable degree."""
    degree = max(per_variable_degrees(system), default=0)
    return (degree,) * system.num_vars


def _oracle_feasible(system: ODESystem, order: int) -> bool:
    # Exhaustive certification must stay desk scale: bound the number of
    # candidate subsets the oracle will enumerate up to the claimed order.
    pool = len(box_candidates(system, wide_box(system)))
    if pool > 64:
        return False
    return sum(comb(pool, k) for k in range(order + 1)) <= 200_000


def build_random_corpus(count: int, seed: int) -> list[ODESystem]:
    """Random systems whose optimum is certifiable by the brute-force oracle."""
    rng = random.Random(seed)
    corpus = []
    while len(corpus) < count:
        system = random_polynomial_system(rng)
        result, _ = bnb_search(system)
        if _oracle_feasible(system, result.order):
            corpus.append(system)
    return corpus


@pytest.fixture(scope="session")
def random_corpus():
    return build_random_corpus(count=50, seed=20240811)
