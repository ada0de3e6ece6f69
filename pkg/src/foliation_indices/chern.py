"""Global characteristic numbers on projective space.

Cohomology of ``P^n`` is ``Z[h]/h^(n+1)`` and integration picks the
coefficient of ``h^n``.  The relevant total Chern classes are::

    c(T P^n) = (1 + h)^(n+1)
    c([D])   = 1 + k h              (D of degree k)
    c(T_F)   = 1 + (1 - d) h        (foliation of degree d, T_F = O(1 - d))

Each global quantity is computed twice, by series arithmetic and by a
closed formula, and a disagreement raises :class:`InternalInconsistency`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple


class InternalInconsistency(RuntimeError):
    """Two independent evaluations of the same number disagree."""


class TruncatedSeries:
    """Integer power series in ``h`` modulo ``h^(n+1)``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Sequence[int], n: Optional[int] = None):
        coeffs = [int(c) for c in coeffs]
        if n is None:
            n = len(coeffs) - 1
        if n < 0:
            raise ValueError("truncation degree must be non-negative")
        coeffs = (coeffs + [0] * (n + 1))[: n + 1]
        self.coeffs = tuple(coeffs)

    @property
    def n(self) -> int:
        return len(self.coeffs) - 1

    @classmethod
    def one(cls, n: int) -> "TruncatedSeries":
        return cls([1], n)

    @classmethod
    def linear(cls, a: int, n: int) -> "TruncatedSeries":
        """``1 + a h``."""
        return cls([1, a], n)

    @classmethod
    def h(cls, n: int, scale: int = 1) -> "TruncatedSeries":
        return cls([0, scale], n)

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i <= self.n else 0

    def __eq__(self, other) -> bool:
        return isinstance(other, TruncatedSeries) and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"TruncatedSeries({list(self.coeffs)})"

    def _check(self, other: "TruncatedSeries") -> None:
        if other.n != self.n:
            raise ValueError(f"truncation mismatch: {self.n} vs {other.n}")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._check(other)
        return TruncatedSeries([a - b for a, b in zip(self.coeffs, other.coeffs)])

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries([-a for a in self.coeffs])

    def __mul__(self, other) -> "TruncatedSeries":
        if isinstance(other, int):
            return TruncatedSeries([a * other for a in self.coeffs])
        self._check(other)
        n = self.n
        out = [0] * (n + 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j in range(n + 1 - i):
                    out[i + j] += a * other.coeffs[j]
        return TruncatedSeries(out)

    __rmul__ = __mul__

    def __pow__(self, e: int) -> "TruncatedSeries":
        if e < 0:
            return self.inverse() ** (-e)
        result = TruncatedSeries.one(self.n)
        for _ in range(e):
            result = result * self
        return result

    def inverse(self) -> "TruncatedSeries":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise ValueError("only series with constant term +-1 are invertible over Z")
        n = self.n
        inv = [0] * (n + 1)
        inv[0] = c0  # 1/c0 == c0 for c0 = +-1
        for m in range(1, n + 1):
            s = sum(self.coeffs[i] * inv[m - i] for i in range(1, m + 1))
            inv[m] = -s * c0
        return TruncatedSeries(inv)

    def integral(self) -> int:
        """Coefficient of ``h^n``."""
        return self.coeffs[-1]


def tangent_class(n: int) -> TruncatedSeries:
    return TruncatedSeries.linear(1, n) ** (n + 1)


def divisor_class(n: int, k: int) -> TruncatedSeries:
    return TruncatedSeries.linear(k, n)


def foliation_tangent_class(n: int, d: int) -> TruncatedSeries:
    return TruncatedSeries.linear(1 - d, n)


def virtual_class(n: int, d: int, k: int) -> TruncatedSeries:
    """``c(TP^n - [D] - T_F)``."""
    return tangent_class(n) * divisor_class(n, k).inverse() * foliation_tangent_class(n, d).inverse()


def adjunction_class(n: int, k: int) -> TruncatedSeries:
    """``c(TP^n - [D])``."""
    return tangent_class(n) * divisor_class(n, k).inverse()


def _on_divisor(series: TruncatedSeries, k: int) -> int:
    # integrating over D multiplies by c_1([D]) = k h
    return (series * TruncatedSeries.h(series.n, k)).integral()


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


# -- the top Chern number of TP^n - [D] - T_F --------------------------------


def integral_X_series(n: int, d: int, k: int) -> int:
    return virtual_class(n, d, k).integral()


def integral_X_double_sum(n: int, d: int, k: int) -> int:
    return sum(
        comb(n + 1, n - i - j) * (-k) ** j * (d - 1) ** i
        for i in range(n + 1)
        for j in range(n - i + 1)
    )


def integral_X_closed(n: int, d: int, k: int) -> int:
    return sum((-1) ** i * (k - 1) ** i * d ** (n - i) for i in range(n + 1))


def integral_X(n: int, d: int, k: int) -> int:
    """``int_{P^n} c_n(TP^n - [D] - T_F)``, checked three ways."""
    closed = integral_X_closed(n, d, k)
    series = integral_X_series(n, d, k)
    double = integral_X_double_sum(n, d, k)
    if not closed == series == double:
        raise InternalInconsistency(
            f"integral_X(n={n}, d={d}, k={k}): closed {closed}, series {series}, double sum {double}"
        )
    return closed


# -- Baum-Bott ------------------------------------------------------------------


def baum_bott_series(n: int, d: int) -> int:
    return (tangent_class(n) * foliation_tangent_class(n, d).inverse()).integral()


def baum_bott_total(n: int, d: int) -> int:
    """Total Milnor number ``d^n + ... + d + 1`` of a degree-``d`` foliation on ``P^n``."""
    if d < 0:
        raise ValueError("foliation degree must be non-negative")
    closed = sum(d**i for i in range(n + 1))
    series = baum_bott_series(n, d)
    if closed != series:
        raise InternalInconsistency(f"baum_bott_total(n={n}, d={d}): {closed} vs {series}")
    return closed


# -- GSV and Schwartz totals ------------------------------------------------------


def gsv_total_closed(n: int, d: int, k: int) -> int:
    return sum((1 - (1 - k) ** (n - i)) * d**i for i in range(n))


def gsv_total_series(n: int, d: int, k: int) -> int:
    """``int_D c_{n-1}(TP^n - [D] - T_F)``."""
    return _on_divisor(virtual_class(n, d, k), k)


def gsv_total(n: int, d: int, k: int) -> int:
    closed = gsv_total_closed(n, d, k)
    series = gsv_total_series(n, d, k)
    if closed != series:
        raise InternalInconsistency(f"gsv_total(n={n}, d={d}, k={k}): closed {closed}, series {series}")
    return closed


def schwartz_total(n: int, d: int, k: int, mu_list: Sequence[int] = ()) -> int:
    """Total Schwartz index over ``S(F, D)``.

    Route 1: GSV total plus ``(-1)^n sum(mu)``.  Route 2: Baum-Bott total
    minus the top Chern number plus ``(-1)^n sum(mu)``.
    """
    correction = _sign(n) * sum(mu_list)
    first = gsv_total(n, d, k) + correction
    second = baum_bott_total(n, d) - integral_X(n, d, k) + correction
    if first != second:
        raise InternalInconsistency(f"schwartz_total(n={n}, d={d}, k={k}): {first} vs {second}")
    return first


def euler_char_hypersurface(n: int, k: int, mu_list: Sequence[int] = ()) -> int:
    """``chi(D)`` for a degree-``k`` hypersurface of ``P^n`` with the given Milnor numbers."""
    if k < 1:
        raise ValueError("hypersurface degree must be at least 1")
    return _on_divisor(adjunction_class(n, k), k) + _sign(n) * sum(mu_list)


def schwartz_total_via_integrals(n: int, d: int, k: int, mu_list: Sequence[int] = ()) -> int:
    """``int_D c_{n-1}(TX-[D]-T_F) - int_D c_{n-1}(TX-[D]) + chi(D)``, checked against :func:`schwartz_total`."""
    value = (
        gsv_total_series(n, d, k)
        - _on_divisor(adjunction_class(n, k), k)
        + euler_char_hypersurface(n, k, mu_list)
    )
    expected = schwartz_total(n, d, k, mu_list)
    if value != expected:
        raise InternalInconsistency(
            f"schwartz_total_via_integrals(n={n}, d={d}, k={k}): {value} vs {expected}"
        )
    return value


# -- Poincare-problem arithmetic ---------------------------------------------------


def milnor_bound_lhs(n: int, k: int) -> int:
    """``sum_{j<n} C(n,j) (-k)^(n-j)``."""
    return sum(comb(n, j) * (-k) ** (n - j) for j in range(n))


def milnor_bound_rhs(n: int, d: int, k: int) -> int:
    """``sum_{i=1}^{n-1} sum_{j<i} C(i,j) (-1)^(i-j+1) k^(i-j) d^(n-i)``."""
    return sum(
        comb(i, j) * (-1) ** (i - j + 1) * k ** (i - j) * d ** (n - i)
        for i in range(1, n)
        for j in range(i)
    )


def rearrangement_sides(n: int, d: int, k: int) -> Tuple[int, int]:
    """Both sides of the identity used to pass from the Schwartz bound to the degree bound."""
    lhs = sum(d**j for j in range(n + 1)) - sum((1 - k) ** (n - i) * d**i for i in range(n + 1))
    rhs = milnor_bound_rhs(n, d, k) - milnor_bound_lhs(n, k)
    return lhs, rhs


def negative_total_check(n: int, d: int, k: int) -> bool:
    """``k > d + 2`` implies a negative GSV total; vacuously true otherwise."""
    if k < 1 or d < 0 or n < 2:
        raise ValueError("need k >= 1, d >= 0, n >= 2")
    return k <= d + 2 or gsv_total_closed(n, d, k) < 0


@dataclass(frozen=True)
class SweepFailure:
    identity: str
    n: int
    d: int
    k: int
    lhs: int
    rhs: int


@dataclass
class SweepResult:
    n_max: int
    d_max: int
    k_max: int
    triples: int = 0
    checks: Dict[str, int] = field(default_factory=dict)
    failures: List[SweepFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def failures_for(self, identity: str) -> List[SweepFailure]:
        return [f for f in self.failures if f.identity == identity]


SWEEP_IDENTITIES = (
    "integral_series",
    "integral_double_sum",
    "rearrangement",
    "gsv_total_series",
    "schwartz_routes",
    "baum_bott_series",
    "negative_gsv_total",
)


def identity_sweep(n_max: int = 8, d_max: int = 10, k_max: int = 10) -> SweepResult:
    """Check every global identity exactly on ``2<=n<=n_max, 0<=d<=d_max, 1<=k<=k_max``."""
    if n_max < 2 or d_max < 0 or k_max < 1:
        raise ValueError("sweep bounds too small")
    result = SweepResult(n_max, d_max, k_max)
    for name in SWEEP_IDENTITIES:
        result.checks[name] = 0

    def record(name, n, d, k, lhs, rhs):
        result.checks[name] += 1
        if lhs != rhs:
            result.failures.append(SweepFailure(name, n, d, k, lhs, rhs))

    for n in range(2, n_max + 1):
        for d in range(d_max + 1):
            record("baum_bott_series", n, d, 0, baum_bott_series(n, d), sum(d**i for i in range(n + 1)))
            for k in range(1, k_max + 1):
                result.triples += 1
                closed = integral_X_closed(n, d, k)
                record("integral_series", n, d, k, integral_X_series(n, d, k), closed)
                record("integral_double_sum", n, d, k, integral_X_double_sum(n, d, k), closed)
                record("rearrangement", n, d, k, *rearrangement_sides(n, d, k))
                record("gsv_total_series", n, d, k, gsv_total_closed(n, d, k), gsv_total_series(n, d, k))
                via = (
                    gsv_total_series(n, d, k)
                    - _on_divisor(adjunction_class(n, k), k)
                    + euler_char_hypersurface(n, k)
                )
                record("schwartz_routes", n, d, k, via, sum(d**i for i in range(n + 1)) - closed)
                if k > d + 2:
                    # inequality sum < 0; lhs is the sum, rhs the bound 0
                    s = gsv_total_closed(n, d, k)
                    result.checks["negative_gsv_total"] += 1
                    if s >= 0:
                        result.failures.append(SweepFailure("negative_gsv_total", n, d, k, s, 0))
    return result


@dataclass(frozen=True)
class GlobalData:
    n: int
    d: int
    k: int
    mu_list: Tuple[int, ...] = ()

    def __post_init__(self):
        if self.n < 1 or self.d < 0 or self.k < 1:
            raise ValueError("need n >= 1, d >= 0, k >= 1")
        if any(m < 1 for m in self.mu_list):
            raise ValueError("Milnor numbers of singular points are positive")

    def integral_X(self) -> int:
        return integral_X(self.n, self.d, self.k)

    def baum_bott_total(self) -> int:
        return baum_bott_total(self.n, self.d)

    def gsv_total(self) -> int:
        return gsv_total(self.n, self.d, self.k)

    def schwartz_total(self) -> int:
        return schwartz_total(self.n, self.d, self.k, self.mu_list)

    def euler_char(self) -> int:
        return euler_char_hypersurface(self.n, self.k, self.mu_list)


def poincare_bound_checks(
    g: GlobalData,
    s1: Optional[int] = None,
    s2: Optional[int] = None,
    sing_d_in_sing_f: bool = True,
) -> Dict[str, dict]:
    """Degree bounds and the Euler-characteristic obstruction.

    Each entry has a ``status`` of ``holds``, ``fails``,
    ``hypotheses-not-met`` or ``not-evaluated`` plus the compared values.
    ``s1``/``s2`` count singular points of ``D`` and smooth points of ``D``
    where the field vanishes.
    """
    even = g.n % 2 == 0
    out = {}

    if even and sing_d_in_sing_f and all(m == 1 for m in g.mu_list):
        status = "holds" if g.k <= g.d + 2 else "fails"
    else:
        status = "hypotheses-not-met"
    out["degree_bound"] = {"status": status, "lhs": g.k, "rhs": g.d + 2}

    lhs = milnor_bound_lhs(g.n, g.k) - sum(m - 1 for m in g.mu_list)
    rhs = milnor_bound_rhs(g.n, g.d, g.k)
    if even and sing_d_in_sing_f:
        status = "holds" if lhs <= rhs else "fails"
    else:
        status = "hypotheses-not-met"
    out["milnor_sum_bound"] = {"status": status, "lhs": lhs, "rhs": rhs}

    chi = g.euler_char()
    if s1 is None or s2 is None:
        status = "not-evaluated"
    elif not even or not sing_d_in_sing_f:
        status = "hypotheses-not-met"
    else:
        status = "holds" if chi > s1 + s2 else "fails"
    out["euler_obstruction"] = {
        "status": status,
        "lhs": chi,
        "rhs": None if s1 is None or s2 is None else s1 + s2,
    }

    s = gsv_total_closed(g.n, g.d, g.k)
    out["negative_gsv_total"] = {
        "status": ("holds" if s < 0 else "fails") if g.k > g.d + 2 else "hypotheses-not-met",
        "lhs": s,
        "rhs": 0,
    }
    return out

