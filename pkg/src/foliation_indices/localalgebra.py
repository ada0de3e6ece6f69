"""Dimensions of local quotient algebras ``O_{n,0} / I``.

Everything runs through reduced Groebner bases for the degree reverse
lexicographic order.  The local dimension at the origin is obtained from
the truncated algebras ``Q[x] / (I + m^N)`` (``m = <x1, ..., xn>``): their
dimensions ``d_N`` increase with ``N``, and once ``d_N == d_{N+1}`` we have
``m^N`` inside ``I + m^{N+1}``, so by Nakayama ``m^N`` lies in ``I O_{n,0}``
and ``d_N`` is the local dimension.

When a truncation bound ``N`` is in force, the monomials of degree ``N`` are
never stored: terms of degree ``>= N`` are dropped on sight, and the
S-pairs between a basis element and those monomials are generated
explicitly (see :func:`_boundary_products`).
"""

from __future__ import annotations

import heapq
import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from .polynomial import (
    Monomial,
    Polynomial,
    degrevlex_key,
    monomial_divides,
    monomial_lcm,
    monomial_mul,
    monomial_quotient,
    monomials_below,
    monomials_of_degree,
)

log = logging.getLogger(__name__)

DEFAULT_NMAX = 64

Terms = Dict[Monomial, Fraction]


@dataclass(frozen=True)
class MonomialOrder:
    """Degree reverse lexicographic order, ``x1 > x2 > ... > xn``."""

    kind: str = "degrevlex"

    def __post_init__(self):
        if self.kind != "degrevlex":
            raise ValueError(f"unsupported monomial order {self.kind!r}")

    @staticmethod
    def key(m: Monomial):
        return degrevlex_key(m)


DEGREVLEX = MonomialOrder()


class _Elem:
    __slots__ = ("lm", "terms")

    def __init__(self, terms: Terms):
        lm = max(terms, key=degrevlex_key)
        lc = terms[lm]
        if lc != 1:
            terms = {m: c / lc for m, c in terms.items()}
        self.lm = lm
        self.terms = terms


def _truncated(terms: Terms, bound: Optional[int]) -> Terms:
    if bound is None:
        return dict(terms)
    return {m: c for m, c in terms.items() if sum(m) < bound}


def _reduce(p: Terms, basis: Sequence[_Elem], bound: Optional[int]) -> Terms:
    """Full reduction of ``p`` modulo ``basis`` (and ``m^bound`` if given)."""
    p = _truncated(p, bound)
    rem: Terms = {}
    while p:
        m = max(p, key=degrevlex_key)
        c = p.pop(m)
        for g in basis:
            if monomial_divides(g.lm, m):
                shift = monomial_quotient(m, g.lm)
                for gm, gc in g.terms.items():
                    if gm == g.lm:
                        continue
                    t = monomial_mul(gm, shift)
                    if bound is not None and sum(t) >= bound:
                        continue
                    v = p.get(t, 0) - c * gc
                    if v:
                        p[t] = v
                    else:
                        p.pop(t, None)
                break
        else:
            rem[m] = c
    return rem


def _spoly(f: _Elem, g: _Elem, bound: Optional[int]) -> Terms:
    lcm = monomial_lcm(f.lm, g.lm)
    sf = monomial_quotient(lcm, f.lm)
    sg = monomial_quotient(lcm, g.lm)
    out: Terms = {}
    for m, c in f.terms.items():
        if m != f.lm:
            t = monomial_mul(m, sf)
            out[t] = out.get(t, 0) + c
    for m, c in g.terms.items():
        if m != g.lm:
            t = monomial_mul(m, sg)
            out[t] = out.get(t, 0) - c
    return _truncated({m: c for m, c in out.items() if c}, bound)


def _boundary_products(g: _Elem, n: int, bound: int) -> Iterable[Terms]:
    """S-polynomials of ``g`` against the degree-``bound`` monomials.

    Modulo ``m^bound`` these are ``x^a * g`` for ``|a| = bound - deg(lm g)``;
    only tail terms of degree below ``deg(lm g)`` survive the truncation.
    """
    d = sum(g.lm)
    low = {m: c for m, c in g.terms.items() if sum(m) < d}
    if not low:
        return
    for alpha in monomials_of_degree(n, bound - d):
        prod = {monomial_mul(m, alpha): c for m, c in low.items()}
        prod = {m: c for m, c in prod.items() if sum(m) < bound}
        if prod:
            yield prod


def _interreduce(elems: List[_Elem], bound: Optional[int]) -> List[_Elem]:
    # minimal basis: drop elements whose leading monomial is a multiple of another's
    minimal: List[_Elem] = []
    for g in sorted(elems, key=lambda e: degrevlex_key(e.lm)):
        if not any(monomial_divides(h.lm, g.lm) for h in minimal):
            minimal.append(g)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        tail = {m: c for m, c in g.terms.items() if m != g.lm}
        tail = _reduce(tail, others, bound)
        tail[g.lm] = Fraction(1)
        reduced.append(_Elem(tail))
    reduced.sort(key=lambda e: degrevlex_key(e.lm), reverse=True)
    return reduced


def _buchberger(polys: Iterable[Terms], n: int, bound: Optional[int]) -> List[_Elem]:
    basis: List[_Elem] = []
    pending: set = set()
    heap: list = []
    counter = itertools.count()

    def add(terms: Terms) -> None:
        g = _Elem(terms)
        t = len(basis)
        basis.append(g)
        for i, h in enumerate(basis[:-1]):
            lcm = monomial_lcm(h.lm, g.lm)
            pending.add((i, t))
            heapq.heappush(heap, (sum(lcm), degrevlex_key(lcm), next(counter), ("pair", i, t)))
        if bound is not None:
            for prod in _boundary_products(g, n, bound):
                heapq.heappush(heap, (bound, (), next(counter), ("poly", prod)))

    for p in polys:
        r = _reduce(p, basis, bound)
        if r:
            add(r)

    while heap:
        *_, item = heapq.heappop(heap)
        if item[0] == "poly":
            s = item[1]
        else:
            _, i, j = item
            pending.discard((i, j))
            f, g = basis[i], basis[j]
            # product criterion
            if all(a == 0 or b == 0 for a, b in zip(f.lm, g.lm)):
                continue
            lcm = monomial_lcm(f.lm, g.lm)
            # chain criterion
            if any(
                k != i
                and k != j
                and monomial_divides(basis[k].lm, lcm)
                and (min(i, k), max(i, k)) not in pending
                and (min(j, k), max(j, k)) not in pending
                for k in range(len(basis))
            ):
                continue
            s = _spoly(f, g, bound)
        r = _reduce(s, basis, bound)
        if r:
            add(r)

    return _interreduce(basis, bound)


def _to_poly(e: _Elem, n: int) -> Polynomial:
    return Polynomial._raw(n, dict(e.terms))


@dataclass(frozen=True)
class GroebnerBasis:
    """Reduced Groebner basis with monic generators.

    ``truncation`` is ``N`` when the basis is that of ``I + m^N``; the
    degree-``N`` monomials belonging to the basis are listed in
    ``generators`` like any other element.
    """

    generators: Tuple[Polynomial, ...]
    nvars: int
    order: MonomialOrder = DEGREVLEX
    truncation: Optional[int] = None
    _elems: Tuple[_Elem, ...] = field(default=(), repr=False, compare=False)

    @property
    def leading_monomials(self) -> Tuple[Monomial, ...]:
        return tuple(g.leading_monomial() for g in self.generators)

    def normal_form(self, p: Polynomial) -> Polynomial:
        return normal_form(p, self)

    def contains(self, p: Polynomial) -> bool:
        return normal_form(p, self).is_zero()

    def is_unit_ideal(self) -> bool:
        return any(sum(m) == 0 for m in self.leading_monomials)

    def is_zero_dimensional(self) -> bool:
        lms = self.leading_monomials
        return all(
            any(m[i] > 0 and sum(m) == m[i] for m in lms) for i in range(self.nvars)
        ) or self.is_unit_ideal()

    def standard_monomials(self) -> List[Monomial]:
        """Monomials outside the leading-term ideal (the staircase).

        Raises ``ValueError`` if the quotient is infinite dimensional.
        """
        if not self.is_zero_dimensional():
            raise ValueError("quotient is not finite dimensional")
        lms = self.leading_monomials
        if any(sum(m) == 0 for m in lms):
            return []
        caps = []
        for i in range(self.nvars):
            caps.append(min(m[i] for m in lms if m[i] > 0 and sum(m) == m[i]))
        out = []
        for mono in itertools.product(*(range(c) for c in caps)):
            if not any(monomial_divides(lm, mono) for lm in lms):
                out.append(mono)
        out.sort(key=degrevlex_key)
        return out


def buchberger(generators: Sequence[Polynomial], order: MonomialOrder = DEGREVLEX) -> GroebnerBasis:
    """Reduced Groebner basis of the ideal spanned by ``generators``."""
    gens = [g for g in generators]
    if not gens:
        raise ValueError("need at least one generator")
    n = gens[0].nvars
    if any(g.nvars != n for g in gens):
        raise ValueError("generators live in different polynomial rings")
    if all(g.is_zero() for g in gens):
        raise ValueError("need at least one nonzero generator")
    elems = _buchberger((g.terms for g in gens if g), n, None)
    return GroebnerBasis(tuple(_to_poly(e, n) for e in elems), n, order, None, tuple(elems))


def truncated_groebner(generators: Sequence[Polynomial], bound: int, nvars: Optional[int] = None) -> GroebnerBasis:
    """Reduced Groebner basis of ``I + m^bound``."""
    if bound < 1:
        raise ValueError("truncation bound must be at least 1")
    n = _nvars(generators, nvars)
    elems = _buchberger((g.terms for g in generators if g), n, bound)
    lms = [e.lm for e in elems]
    border = [
        Polynomial._raw(n, {m: Fraction(1)})
        for m in monomials_of_degree(n, bound)
        if not any(monomial_divides(lm, m) for lm in lms)
    ]
    border.sort(key=lambda p: degrevlex_key(next(iter(p.terms))), reverse=True)
    gens = tuple(_to_poly(e, n) for e in elems) + tuple(border)
    return GroebnerBasis(gens, n, DEGREVLEX, bound, tuple(elems))


def _nvars(generators: Sequence[Polynomial], nvars: Optional[int]) -> int:
    ns = {g.nvars for g in generators}
    if nvars is not None:
        ns.add(nvars)
    if len(ns) != 1:
        raise ValueError("cannot determine a single number of variables")
    return ns.pop()


def normal_form(p: Polynomial, gb: GroebnerBasis) -> Polynomial:
    """Unique remainder of ``p`` under division by ``gb``."""
    if p.nvars != gb.nvars:
        raise ValueError(f"nvars mismatch: {p.nvars} vs {gb.nvars}")
    elems = gb._elems or tuple(_Elem(dict(g.terms)) for g in gb.generators)
    return Polynomial._raw(p.nvars, _reduce(p.terms, elems, gb.truncation))


def _count_standard(n: int, bound: int, lms: Sequence[Monomial]) -> int:
    if any(sum(m) == 0 for m in lms):
        return 0
    return sum(
        1 for mono in monomials_below(n, bound) if not any(monomial_divides(lm, mono) for lm in lms)
    )


def truncated_quotient_dim(ideal: Sequence[Polynomial], N: int, nvars: Optional[int] = None) -> int:
    """``dim Q[x] / (I + m^N)`` as a count of standard monomials."""
    n = _nvars(ideal, nvars)
    if N < 1:
        raise ValueError("N must be at least 1")
    elems = _buchberger((g.terms for g in ideal if g), n, N)
    return _count_standard(n, N, [e.lm for e in elems])


@dataclass(frozen=True)
class LocalDimResult:
    dim: int
    truncation_level: int
    certified: bool


def local_dim(ideal: Sequence[Polynomial], n_max: int = DEFAULT_NMAX, nvars: Optional[int] = None) -> LocalDimResult:
    """Dimension of ``O_{n,0} / I O_{n,0}`` certified by Nakayama stabilization.

    ``d_N`` is computed for ``N = 1, 2, ..., n_max``; the first ``N`` with
    ``d_N == d_{N+1}`` gives a certified result.  Otherwise the last value
    is returned with ``certified=False`` and must not be used downstream.
    """
    if n_max < 2:
        raise ValueError("n_max must be at least 2")
    n = _nvars(ideal, nvars)
    prev = truncated_quotient_dim(ideal, 1, n)
    for N in range(1, n_max):
        cur = truncated_quotient_dim(ideal, N + 1, n)
        if cur == prev:
            return LocalDimResult(prev, N, True)
        prev = cur
    log.debug("local_dim did not stabilize by N=%d (last value %d)", n_max, prev)
    return LocalDimResult(prev, n_max, False)
