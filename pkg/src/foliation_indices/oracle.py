"""Brute-force cross-check for truncated quotient dimensions.

Independent of the Groebner machinery: the space ``Q[x]/m^N`` is spanned by
the monomials of degree ``< N``; the ideal ``I + m^N`` maps onto the span of
all truncated products ``x^a * g``.  The quotient dimension is the monomial
count minus the rank of that span, computed by fraction-free integer
elimination.
"""

from __future__ import annotations

from math import comb, gcd, lcm
from typing import Dict, List, Optional, Sequence

from .polynomial import Polynomial, monomials_below

#: Largest monomial basis the oracle accepts.
MAX_MONOMIALS = 5000


def _primitive(row: Dict[int, int]) -> Dict[int, int]:
    g = 0
    for v in row.values():
        g = gcd(g, v)
        if g == 1:
            break
    if g > 1:
        row = {k: v // g for k, v in row.items()}
    lead = min(row)
    if row[lead] < 0:
        row = {k: -v for k, v in row.items()}
    return row


def integer_rank(rows: List[Dict[int, int]]) -> int:
    """Rank of a sparse integer matrix (rows map column -> nonzero entry)."""
    pivots: Dict[int, Dict[int, int]] = {}
    for row in rows:
        row = {k: v for k, v in row.items() if v}
        while row:
            lead = min(row)
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = _primitive(row)
                break
            a, b = piv[lead], row[lead]
            new = {k: a * v for k, v in row.items()}
            for k, v in piv.items():
                w = new.get(k, 0) - b * v
                if w:
                    new[k] = w
                else:
                    new.pop(k, None)
            row = _primitive(new) if new else new
    return len(pivots)


def oracle_quotient_dim(ideal: Sequence[Polynomial], N: int, nvars: Optional[int] = None) -> int:
    """``dim Q[x] / (I + m^N)`` by exhaustive linear algebra.

    An empty ``ideal`` is the zero ideal (then ``nvars`` is required).
    Refuses (``ValueError``) when more than :data:`MAX_MONOMIALS` monomials
    would be needed.
    """
    ns = {g.nvars for g in ideal}
    if nvars is not None:
        ns.add(nvars)
    if len(ns) != 1:
        raise ValueError("cannot determine a single number of variables")
    n = ns.pop()
    if N < 1:
        raise ValueError("N must be at least 1")
    size = comb(N - 1 + n, n)
    if size > MAX_MONOMIALS:
        raise ValueError(f"oracle refuses: {size} monomials exceeds {MAX_MONOMIALS}")
    basis = list(monomials_below(n, N))
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for g in ideal:
        if g.is_zero():
            continue
        order = g.order_at_origin()
        # integer scaling of g
        den = 1
        for c in g.terms.values():
            den = lcm(den, c.denominator)
        ints = {m: int(c * den) for m, c in g.terms.items()}
        for alpha in monomials_below(n, N - order):
            row = {}
            for m, c in ints.items():
                t = tuple(a + b for a, b in zip(m, alpha))
                j = index.get(t)
                if j is not None:
                    row[j] = c
            if row:
                rows.append(row)
    return len(basis) - integer_rank(rows)
