"""Sparse multivariate polynomials with exact rational coefficients.

A polynomial in ``nvars`` variables ``x1 .. xn`` is a map from exponent
tuples to nonzero :class:`fractions.Fraction` coefficients.  The zero
polynomial has an empty map.  Instances are treated as immutable.
"""

from __future__ import annotations

import math
from fractions import Fraction
from math import comb
from typing import Dict, Iterable, Iterator, Optional, Sequence, Tuple, Union

Monomial = Tuple[int, ...]
Scalar = Union[int, Fraction]

#: Order (multiplicity) of the zero polynomial.
INFINITE = math.inf


def degrevlex_key(m: Monomial):
    """Sort key for degree-reverse-lexicographic order with x1 > x2 > ... > xn.

    Larger key means larger monomial; ``1`` is the least monomial.
    """
    return (sum(m), tuple(-e for e in reversed(m)))


def deglex_key(m: Monomial):
    return (sum(m), m)


def monomial_divides(a: Monomial, b: Monomial) -> bool:
    return all(x <= y for x, y in zip(a, b))


def monomial_lcm(a: Monomial, b: Monomial) -> Monomial:
    return tuple(max(x, y) for x, y in zip(a, b))


def monomial_mul(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x + y for x, y in zip(a, b))


def monomial_quotient(a: Monomial, b: Monomial) -> Monomial:
    return tuple(x - y for x, y in zip(a, b))


def monomials_of_degree(n: int, degree: int) -> Iterator[Monomial]:
    """All exponent tuples of length ``n`` with the given total degree."""
    if n == 1:
        yield (degree,)
        return
    for first in range(degree, -1, -1):
        for rest in monomials_of_degree(n - 1, degree - first):
            yield (first,) + rest


def monomials_below(n: int, bound: int) -> Iterator[Monomial]:
    """All exponent tuples of total degree strictly less than ``bound``."""
    for degree in range(bound):
        yield from monomials_of_degree(n, degree)


class Polynomial:
    """Exact sparse polynomial over the rationals."""

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Optional[Dict[Monomial, Scalar]] = None):
        if nvars < 1:
            raise ValueError("nvars must be positive")
        clean: Dict[Monomial, Fraction] = {}
        if terms:
            for mono, coeff in terms.items():
                if len(mono) != nvars:
                    raise ValueError(f"exponent {mono} does not have length {nvars}")
                if any(e < 0 for e in mono):
                    raise ValueError(f"negative exponent in {mono}")
                if coeff:
                    clean[tuple(mono)] = Fraction(coeff)
        self.nvars = nvars
        self.terms = clean

    @classmethod
    def _raw(cls, nvars: int, terms: Dict[Monomial, Fraction]) -> "Polynomial":
        # trusted constructor: terms already canonical
        p = object.__new__(cls)
        p.nvars = nvars
        p.terms = terms
        return p

    # -- constructors -----------------------------------------------------

    @classmethod
    def zero(cls, nvars: int) -> "Polynomial":
        return cls._raw(nvars, {})

    @classmethod
    def constant(cls, nvars: int, c: Scalar) -> "Polynomial":
        return cls(nvars, {(0,) * nvars: c})

    @classmethod
    def variable(cls, nvars: int, i: int) -> "Polynomial":
        """The variable ``x_i`` (1-based)."""
        if not 1 <= i <= nvars:
            raise IndexError(f"variable index {i} outside 1..{nvars}")
        e = [0] * nvars
        e[i - 1] = 1
        return cls._raw(nvars, {tuple(e): Fraction(1)})

    @classmethod
    def monomial(cls, exponents: Sequence[int], coeff: Scalar = 1) -> "Polynomial":
        return cls(len(exponents), {tuple(exponents): coeff})

    @classmethod
    def gens(cls, nvars: int) -> Tuple["Polynomial", ...]:
        return tuple(cls.variable(nvars, i) for i in range(1, nvars + 1))

    # -- basic protocol ---------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.nvars == other.nvars and self.terms == other.terms
        if isinstance(other, (int, Fraction)):
            return self.terms == ({(0,) * self.nvars: Fraction(other)} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.nvars, frozenset(self.terms.items())))

    def __repr__(self) -> str:
        from .parser import format_polynomial

        return f"Polynomial({self.nvars}, {format_polynomial(self)!r})"

    def __str__(self) -> str:
        from .parser import format_polynomial

        return format_polynomial(self)

    def __len__(self) -> int:
        return len(self.terms)

    # -- ring operations --------------------------------------------------

    def _coerce(self, other) -> "Polynomial":
        if isinstance(other, Polynomial):
            if other.nvars != self.nvars:
                raise ValueError(f"nvars mismatch: {self.nvars} vs {other.nvars}")
            return other
        if isinstance(other, (int, Fraction)):
            return Polynomial.constant(self.nvars, other)
        raise TypeError(f"cannot combine Polynomial with {type(other).__name__}")

    def __add__(self, other) -> "Polynomial":
        other = self._coerce(other)
        out = dict(self.terms)
        for m, c in other.terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial._raw(self.nvars, out)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial._raw(self.nvars, {m: -c for m, c in self.terms.items()})

    def __sub__(self, other) -> "Polynomial":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "Polynomial":
        return self._coerce(other) - self

    def scale(self, c: Scalar) -> "Polynomial":
        c = Fraction(c)
        if not c:
            return Polynomial.zero(self.nvars)
        return Polynomial._raw(self.nvars, {m: v * c for m, v in self.terms.items()})

    def __mul__(self, other) -> "Polynomial":
        if isinstance(other, (int, Fraction)):
            return self.scale(other)
        other = self._coerce(other)
        out: Dict[Monomial, Fraction] = {}
        for m1, c1 in self.terms.items():
            for m2, c2 in other.terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                out[m] = out.get(m, 0) + c1 * c2
        return Polynomial._raw(self.nvars, {m: c for m, c in out.items() if c})

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "Polynomial":
        if not isinstance(e, int) or e < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = Polynomial.constant(self.nvars, 1)
        base = self
        while e:
            if e & 1:
                result = result * base
            e >>= 1
            if e:
                base = base * base
        return result

    # -- inspection -------------------------------------------------------

    def coefficient(self, mono: Sequence[int]) -> Fraction:
        return self.terms.get(tuple(mono), Fraction(0))

    def constant_term(self) -> Fraction:
        return self.coefficient((0,) * self.nvars)

    def is_constant(self) -> bool:
        return all(sum(m) == 0 for m in self.terms)

    def degree(self):
        """Total degree; ``-INFINITE`` for the zero polynomial."""
        if not self.terms:
            return -INFINITE
        return max(sum(m) for m in self.terms)

    def order_at_origin(self):
        """Least total degree of a nonzero term; :data:`INFINITE` for zero."""
        if not self.terms:
            return INFINITE
        return min(sum(m) for m in self.terms)

    def homogeneous_component(self, degree: int) -> "Polynomial":
        return Polynomial._raw(
            self.nvars, {m: c for m, c in self.terms.items() if sum(m) == degree}
        )

    def homogeneous_components(self) -> Dict[int, "Polynomial"]:
        parts: Dict[int, Dict[Monomial, Fraction]] = {}
        for m, c in self.terms.items():
            parts.setdefault(sum(m), {})[m] = c
        return {d: Polynomial._raw(self.nvars, t) for d, t in sorted(parts.items())}

    def truncate(self, bound: int) -> "Polynomial":
        """Drop all terms of total degree ``>= bound``."""
        return Polynomial._raw(
            self.nvars, {m: c for m, c in self.terms.items() if sum(m) < bound}
        )

    def leading_monomial(self, key=degrevlex_key) -> Monomial:
        if not self.terms:
            raise ValueError("zero polynomial has no leading monomial")
        return max(self.terms, key=key)

    def leading_coefficient(self, key=degrevlex_key) -> Fraction:
        return self.terms[self.leading_monomial(key)]

    def monic(self, key=degrevlex_key) -> "Polynomial":
        return self.scale(1 / self.leading_coefficient(key))

    def __call__(self, *point: Scalar) -> Fraction:
        return self.evaluate(point)

    def evaluate(self, point: Sequence[Scalar]) -> Fraction:
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        pt = [Fraction(a) for a in point]
        total = Fraction(0)
        for m, c in self.terms.items():
            term = c
            for a, e in zip(pt, m):
                if e:
                    term *= a**e
            total += term
        return total

    # -- calculus and substitution ---------------------------------------

    def partial(self, i: int) -> "Polynomial":
        """Formal partial derivative with respect to ``x_i`` (1-based)."""
        if not 1 <= i <= self.nvars:
            raise IndexError(f"variable index {i} outside 1..{self.nvars}")
        k = i - 1
        out = {}
        for m, c in self.terms.items():
            e = m[k]
            if e:
                out[m[:k] + (e - 1,) + m[k + 1:]] = c * e
        return Polynomial._raw(self.nvars, out)

    def gradient(self) -> Tuple["Polynomial", ...]:
        return tuple(self.partial(i) for i in range(1, self.nvars + 1))

    def translate(self, point: Sequence[Scalar]) -> "Polynomial":
        """Return ``q`` with ``q(y) = p(y + point)``."""
        if len(point) != self.nvars:
            raise ValueError(f"point has length {len(point)}, expected {self.nvars}")
        shift = [Fraction(a) for a in point]
        if not any(shift):
            return self
        n = self.nvars
        # (y_k + a_k)^e expanded once per (k, e)
        cache: Dict[Tuple[int, int], Dict[int, Fraction]] = {}

        def power(k: int, e: int) -> Dict[int, Fraction]:
            key = (k, e)
            if key not in cache:
                a = shift[k]
                cache[key] = {
                    j: comb(e, j) * a ** (e - j) for j in range(e + 1) if a or j == e
                }
            return cache[key]

        out: Dict[Monomial, Fraction] = {}
        for m, c in self.terms.items():
            partial_terms = {(): c}
            for k in range(n):
                nxt = {}
                for prefix, pc in partial_terms.items():
                    for j, bc in power(k, m[k]).items():
                        if bc:
                            nxt[prefix + (j,)] = pc * bc
                partial_terms = nxt
            for mono, v in partial_terms.items():
                out[mono] = out.get(mono, 0) + v
        return Polynomial._raw(n, {m: c for m, c in out.items() if c})

    def divide(self, q: "Polynomial", key=degrevlex_key) -> Tuple["Polynomial", "Polynomial"]:
        """Multivariate division by a single divisor.

        Returns ``(quotient, remainder)`` with ``self == q*quotient + remainder``
        and no term of the remainder divisible by the leading monomial of ``q``.
        """
        q = self._coerce(q)
        if q.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        lm = q.leading_monomial(key)
        lc = q.terms[lm]
        rest = dict(self.terms)
        quot: Dict[Monomial, Fraction] = {}
        rem: Dict[Monomial, Fraction] = {}
        while rest:
            m = max(rest, key=key)
            c = rest[m]
            if monomial_divides(lm, m):
                shift = monomial_quotient(m, lm)
                f = c / lc
                quot[shift] = quot.get(shift, 0) + f
                for qm, qc in q.terms.items():
                    t = monomial_mul(qm, shift)
                    v = rest.get(t, 0) - f * qc
                    if v:
                        rest[t] = v
                    else:
                        rest.pop(t, None)
            else:
                rem[m] = c
                del rest[m]
        n = self.nvars
        return (
            Polynomial._raw(n, {m: c for m, c in quot.items() if c}),
            Polynomial._raw(n, rem),
        )

    def exact_divide(self, q: "Polynomial") -> Optional["Polynomial"]:
        """``h`` with ``self == q*h`` if ``q`` divides ``self``, else ``None``."""
        quot, rem = self.divide(q)
        return quot if rem.is_zero() else None


class VectorField:
    """A polynomial vector field ``sum a_i d/dx_i``."""

    __slots__ = ("components",)

    def __init__(self, components: Iterable[Polynomial]):
        comps = tuple(components)
        if not comps:
            raise ValueError("a vector field needs at least one component")
        n = comps[0].nvars
        if len(comps) != n or any(c.nvars != n for c in comps):
            raise ValueError(f"expected {n} components in {n} variables")
        if all(c.is_zero() for c in comps):
            raise ValueError("vector field is identically zero")
        self.components = comps

    @classmethod
    def radial(cls, nvars: int) -> "VectorField":
        return cls(Polynomial.gens(nvars))

    @property
    def nvars(self) -> int:
        return len(self.components)

    def __iter__(self):
        return iter(self.components)

    def __eq__(self, other) -> bool:
        return isinstance(other, VectorField) and self.components == other.components

    def __hash__(self) -> int:
        return hash(self.components)

    def __repr__(self) -> str:
        return "VectorField(" + "; ".join(str(c) for c in self.components) + ")"

    def __call__(self, p: Polynomial) -> Polynomial:
        return self.apply(p)

    def apply(self, p: Polynomial) -> Polynomial:
        """``v(p) = sum a_i * dp/dx_i``."""
        if p.nvars != self.nvars:
            raise ValueError(f"nvars mismatch: {p.nvars} vs {self.nvars}")
        total = Polynomial.zero(self.nvars)
        for i, a in enumerate(self.components, start=1):
            if a:
                total = total + a * p.partial(i)
        return total

    def translate(self, point: Sequence[Scalar]) -> "VectorField":
        return VectorField(c.translate(point) for c in self.components)

    def vanishes_at_origin(self) -> bool:
        return all(not c.constant_term() for c in self.components)

    def degree(self) -> int:
        return max(c.degree() for c in self.components if c)


def apply_vector_field(v: VectorField, p: Polynomial) -> Polynomial:
    return v.apply(p)
