"""Exact sparse arithmetic for monomials and polynomials over ODE state variables.

Representation conventions:

  Monomial   = tuple of integer exponents, one per state variable, in the
               system's variable order.  The all-zeros tuple is the monomial 1.
               Negative exponents are permitted only in Laurent contexts
               (they never occur inside an ODESystem right-hand side).

  Polynomial = dict mapping (monomial, parameter exponents) -> Fraction.
               Parameters (symbolic constants such as reaction rates) carry
               their own exponent tuple so that e.g. a*x and x stay separate
               terms of the same state monomial x; sums of such terms are not
               representable as a single rational-times-parameter coefficient.
               Zero coefficients are dropped eagerly, so equality of dicts is
               equality of polynomials.

All values are immutable after construction and safe to share between threads.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

Monomial = tuple[int, ...]
ParamExponents = tuple[int, ...]
TermKey = tuple[Monomial, ParamExponents]


def unit_monomial(num_vars: int) -> Monomial:
    """The monomial 1 (all exponents zero)."""
    return (0,) * num_vars


def variable_monomial(num_vars: int, index: int) -> Monomial:
    """The monomial consisting of the single variable at `index`."""
    exps = [0] * num_vars
    exps[index] = 1
    return tuple(exps)


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_div(m: Monomial, v: Monomial) -> Monomial | None:
    """Componentwise quotient m / v, or None if some exponent would go negative."""
    q = tuple(x - y for x, y in zip(m, v))
    if min(q) < 0:
        return None
    return q


def total_degree(m: Monomial) -> int:
    return sum(m)


def grlex_key(m: Monomial) -> tuple[int, Monomial]:
    """Sort key for graded lexicographic order: degree first, then exponents."""
    return (sum(m), m)


def divisor_count(m: Monomial) -> int:
    """Number of monomial divisors of m, i.e. the product of (exponent + 1)."""
    count = 1
    for d in m:
        count *= d + 1
    return count


def divisors(m: Monomial):
    """All monomial divisors of m (itertools.product order)."""
    return (tuple(d) for d in product(*(range(e + 1) for e in m)))


_DECOMP_CACHE: dict[Monomial, tuple[tuple[Monomial, Monomial], ...]] = {}


def decompositions(m: Monomial) -> tuple[tuple[Monomial, Monomial], ...]:
    """All unordered factorizations m = m1 * m2 into two monomials.

    Includes (1, m).  Each pair appears once with m1 <= m2 in tuple order,
    and the list is sorted by m1's exponent vector.  The number of pairs is
    always ceil(divisor_count(m) / 2).
    """
    cached = _DECOMP_CACHE.get(m)
    if cached is not None:
        return cached
    pairs = []
    for d in divisors(m):
        rest = tuple(x - y for x, y in zip(m, d))
        if d <= rest:
            pairs.append((d, rest))
    pairs.sort()
    result = tuple(pairs)
    _DECOMP_CACHE[m] = result
    return result


class Polynomial:
    """Sparse polynomial with exact rational-times-parameter coefficients."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict[TermKey, Fraction] | None = None):
        clean: dict[TermKey, Fraction] = {}
        if terms:
            for key, coeff in terms.items():
                if coeff:
                    clean[key] = coeff if isinstance(coeff, Fraction) else Fraction(coeff)
        self.terms = clean

    @classmethod
    def zero(cls) -> "Polynomial":
        return cls()

    @classmethod
    def from_term(cls, coeff, mono: Monomial, params: ParamExponents = ()) -> "Polynomial":
        return cls({(mono, params): Fraction(coeff)})

    def is_zero(self) -> bool:
        return not self.terms

    def support(self) -> frozenset[Monomial]:
        """The set of state monomials carrying a nonzero coefficient."""
        return frozenset(mono for mono, _ in self.terms)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        if not other.terms:
            return self
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            acc = out.get(key)
            if acc is None:
                out[key] = coeff
            else:
                acc = acc + coeff
                if acc:
                    out[key] = acc
                else:
                    del out[key]
        result = Polynomial.__new__(Polynomial)
        result.terms = out
        return result

    def __neg__(self) -> "Polynomial":
        result = Polynomial.__new__(Polynomial)
        result.terms = {key: -coeff for key, coeff in self.terms.items()}
        return result

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        return self + (-other)

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out: dict[TermKey, Fraction] = {}
        for (m1, p1), c1 in self.terms.items():
            for (m2, p2), c2 in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(m1, m2)),
                    tuple(a + b for a, b in zip(p1, p2)),
                )
                acc = out.get(key)
                coeff = c1 * c2
                if acc is None:
                    out[key] = coeff
                else:
                    acc = acc + coeff
                    if acc:
                        out[key] = acc
                    else:
                        del out[key]
        result = Polynomial.__new__(Polynomial)
        result.terms = out
        return result

    def term_scaled(self, factor, mono_shift: Monomial) -> "Polynomial":
        """Multiply by a rational constant times a (possibly Laurent) monomial."""
        factor = Fraction(factor)
        if not factor:
            return Polynomial.zero()
        result = Polynomial.__new__(Polynomial)
        result.terms = {
            (tuple(a + b for a, b in zip(mono, mono_shift)), params): coeff * factor
            for (mono, params), coeff in self.terms.items()
        }
        return result

    def sorted_terms(self) -> list[tuple[Monomial, ParamExponents, Fraction]]:
        """Terms in canonical order: graded-lex on the state monomial, then params."""
        keys = sorted(self.terms, key=lambda k: (grlex_key(k[0]), k[1]))
        return [(mono, params, self.terms[(mono, params)]) for mono, params in keys]

    def max_exponents(self, num_vars: int) -> tuple[int, ...]:
        """Per-variable maximum exponent over the support (all zeros if empty)."""
        maxes = [0] * num_vars
        for mono, _ in self.terms:
            for i, e in enumerate(mono):
                if e > maxes[i]:
                    maxes[i] = e
        return tuple(maxes)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Polynomial):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __repr__(self) -> str:
        if not self.terms:
            return "Polynomial(0)"
        parts = [f"{coeff}*{mono}|{params}" for mono, params, coeff in self.sorted_terms()]
        return "Polynomial(" + " + ".join(parts) + ")"


@dataclass(frozen=True)
class ODESystem:
    """A polynomial ODE system x_i' = f_i(x) with optional symbolic parameters.

    Parameters are symbols that occur in right-hand sides but have no equation;
    they live in coefficients and contribute no exponent to state monomials.
    """

    variables: tuple[str, ...]
    parameters: tuple[str, ...]
    rhs: tuple[Polynomial, ...]
    # Memo for Lie derivatives of monomials along this system.  Populating it
    # is idempotent, so sharing between threads is harmless.
    _lie_cache: dict = field(default_factory=dict, compare=False, repr=False)

    def __post_init__(self):
        if not self.variables:
            raise ValueError("system must have at least one variable")
        names = list(self.variables) + list(self.parameters)
        if len(set(names)) != len(names):
            raise ValueError("variable and parameter names must be distinct")
        if len(self.rhs) != len(self.variables):
            raise ValueError("need exactly one right-hand side per variable")
        n, np_ = len(self.variables), len(self.parameters)
        for poly in self.rhs:
            for mono, params in poly.terms:
                if len(mono) != n or len(params) != np_:
                    raise ValueError("term shape does not match the declared symbols")
                if min(mono) < 0:
                    raise ValueError("negative exponents are not allowed in a system")

    @property
    def num_vars(self) -> int:
        return len(self.variables)


def lie_derivative(z: Monomial, system: ODESystem) -> Polynomial:
    """Time derivative of the monomial z along the system: sum_s f_s * dz/dx_s.

    Valid for Laurent monomials (negative exponents) as well; the result is
    fully expanded and canonical, with cancellation removing zero terms.
    """
    cached = system._lie_cache.get(z)
    if cached is not None:
        return cached[0]
    result = Polynomial.zero()
    for s, e in enumerate(z):
        if e:
            shifted = z[:s] + (e - 1,) + z[s + 1:]
            result = result + system.rhs[s].term_scaled(e, shifted)
    system._lie_cache[z] = (result, result.support())
    return result


def lie_derivative_support(z: Monomial, system: ODESystem) -> frozenset[Monomial]:
    """Support of lie_derivative(z, system), memoized alongside the polynomial."""
    cached = system._lie_cache.get(z)
    if cached is None:
        lie_derivative(z, system)
        cached = system._lie_cache[z]
    return cached[1]
