import random
from fractions import Fraction
from math import ceil

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from quadratize.parsing import parse_system
from quadratize.polynomials import (
    ODESystem,
    Polynomial,
    decompositions,
    divisor_count,
    lie_derivative,
    monomial_div,
    monomial_mul,
    unit_monomial,
    variable_monomial,
)

monomials = st.lists(st.integers(0, 4), min_size=1, max_size=3).map(tuple)


def paired_monomials():
    return st.integers(1, 3).flatmap(
        lambda n: st.tuples(
            st.lists(st.integers(0, 4), min_size=n, max_size=n).map(tuple),
            st.lists(st.integers(0, 4), min_size=n, max_size=n).map(tuple),
        )
    )


class TestMonomialOps:
    def test_mul(self):
        assert monomial_mul((1,), (1,)) == (2,)
        assert monomial_mul((0, 0), (1, 2)) == (1, 2)
        assert monomial_mul((1, 2), (0, 1)) == (1, 3)

    def test_div(self):
        assert monomial_div((3,), (1,)) == (2,)
        assert monomial_div((1,), (2,)) is None
        assert monomial_div((1, 2), (0, 2)) == (1, 0)

    def test_divisor_count(self):
        assert divisor_count((3,)) == 4
        assert divisor_count((0, 0)) == 1
        assert divisor_count((2, 1)) == 6

    def test_decompositions_examples(self):
        assert decompositions((3,)) == (((0,), (3,)), ((1,), (2,)))
        assert decompositions((2,)) == (((0,), (2,)), ((1,), (1,)))
        assert decompositions((1, 1)) == (((0, 0), (1, 1)), ((0, 1), (1, 0)))

    @given(monomials.filter(lambda m: sum(m) > 0))
    @settings(max_examples=100, deadline=None)
    def test_decompositions_count_and_products(self, m):
        pairs = decompositions(m)
        assert len(pairs) == ceil(divisor_count(m) / 2)
        assert len(set(pairs)) == len(pairs)
        for m1, m2 in pairs:
            assert monomial_mul(m1, m2) == m
        assert list(pairs) == sorted(pairs, key=lambda p: p[0])

    @given(paired_monomials())
    @settings(max_examples=100, deadline=None)
    def test_div_inverts_mul(self, pair):
        a, b = pair
        assert monomial_div(monomial_mul(a, b), b) == a


class TestPolynomial:
    def test_support(self):
        p = parse_system("x' = x^4 + x^3").rhs[0]
        assert p.support() == {(3,), (4,)}
        assert Polynomial.zero().support() == frozenset()

    def test_cancellation(self):
        p = Polynomial({((2,), ()): Fraction(2)})
        q = Polynomial({((2,), ()): Fraction(-2)})
        assert (p + q).support() == frozenset()
        assert (p + q).is_zero()

    def test_param_terms_stay_separate(self):
        # a*x + x has one support monomial but two irreducible terms
        sys = parse_system("x' = a*x + x")
        poly = sys.rhs[0]
        assert poly.support() == {(1,)}
        assert len(poly.terms) == 2

    def test_canonicalization_is_insertion_order_independent(self):
        rng = random.Random(7)
        entries = [(((i % 3, i % 2), (i % 2,)), Fraction(i - 4)) for i in range(9)]
        reference = None
        for _ in range(10):
            rng.shuffle(entries)
            acc = Polynomial.zero()
            for key, coeff in entries:
                acc = acc + Polynomial({key: coeff})
            if reference is None:
                reference = acc
            assert acc == reference
            assert acc.terms == reference.terms


class TestLieDerivative:
    def test_scalar_power(self):
        sys = parse_system("x' = x^5")
        assert lie_derivative((4,), sys) == Polynomial({((8,), ()): Fraction(4)})

    def test_two_variable(self):
        sys = parse_system("x1' = x2^4\nx2' = x1^2")
        assert lie_derivative((3, 0), sys) == Polynomial({((2, 4), ()): Fraction(3)})

    def test_unit_derivative_is_zero(self):
        sys = parse_system("x' = x^5")
        assert lie_derivative((0,), sys).is_zero()

    @given(paired_monomials(), st.integers(0, 10_000))
    @settings(max_examples=60, deadline=None)
    def test_leibniz_rule(self, pair, seed):
        u, v = pair
        n = len(u)
        rng = random.Random(seed)
        rhs = []
        for _ in range(n):
            terms = {}
            for _ in range(rng.randint(1, 2)):
                mono = tuple(rng.randint(0, 3) for _ in range(n))
                terms[(mono, ())] = Fraction(rng.choice((-2, -1, 1, 2, 3)))
            rhs.append(Polynomial(terms))
        sys = ODESystem(tuple(f"x{i}" for i in range(n)), (), tuple(rhs))

        product_deriv = lie_derivative(monomial_mul(u, v), sys)
        as_poly = lambda m: Polynomial({(m, ()): Fraction(1)})
        expanded = as_poly(u) * lie_derivative(v, sys) + as_poly(v) * lie_derivative(u, sys)
        assert product_deriv == expanded


class TestODESystem:
    def test_rejects_shared_names(self):
        with pytest.raises(ValueError):
            ODESystem(("x",), ("x",), (Polynomial.zero(),))

    def test_rejects_wrong_arity(self):
        with pytest.raises(ValueError):
            ODESystem(("x", "y"), (), (Polynomial.zero(),))

    def test_rejects_negative_exponents(self):
        with pytest.raises(ValueError):
            ODESystem(("x",), (), (Polynomial({((-1,), ()): Fraction(1)}),))

    def test_rejects_mismatched_term_shape(self):
        with pytest.raises(ValueError):
            ODESystem(("x",), (), (Polynomial({((1, 1), ()): Fraction(1)}),))

    def test_unit_and_variable_monomials(self):
        assert unit_monomial(3) == (0, 0, 0)
        assert variable_monomial(3, 1) == (0, 1, 0)
