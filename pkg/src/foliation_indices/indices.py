"""Local indices of a foliation along an invariant hypersurface at a point.

All indices reduce to dimensions of local algebras at the origin, so the
data ``(f, v)`` are first translated so that the point sits at 0.  The GSV
index is computed with the homological-index formulas::

    n even:  GSV = dim O/<f, a> - dim O/<f, J_f>
    n odd:   GSV = dim O/<a> - dim O/<v(f)/f, a> + dim O/<f, J_f>

and the Schwartz index from ``Sch = GSV + (-1)^n mu(D)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, Optional, Sequence, Tuple

from .localalgebra import DEFAULT_NMAX, local_dim
from .polynomial import Polynomial, Scalar, VectorField


class IndexRefusal(Exception):
    """An index cannot be computed for this input."""


class NotInvariant(IndexRefusal):
    """``f`` does not divide ``v(f)``."""

    def __init__(self, remainder: Polynomial, message: str = ""):
        self.remainder = remainder
        super().__init__(message or f"hypersurface not invariant: v(f) mod f = {remainder}")


class UncertifiedDimension(IndexRefusal):
    def __init__(self, quantity: str, value: int, n_max: int):
        self.quantity = quantity
        self.value = value
        self.n_max = n_max
        super().__init__(
            f"{quantity}: local dimension not certified up to N={n_max} "
            "(non-isolated singularity or N_max too small)"
        )


class RegularPoint(IndexRefusal):
    """The point is singular neither for the foliation nor for the hypersurface."""


@dataclass(frozen=True)
class LocalContext:
    """Germ data at the origin after translation."""

    n: int
    f: Polynomial
    v: VectorField
    point_on_D: bool
    point_sing_D: bool
    point_sing_F: bool
    _dims: Dict[str, Tuple[int, int]] = field(default_factory=dict, compare=False, repr=False)

    @classmethod
    def at_point(cls, f: Polynomial, v: VectorField, point: Optional[Sequence[Scalar]] = None) -> "LocalContext":
        n = f.nvars
        if n < 2:
            raise ValueError("ambient dimension n = 1 is not supported")
        if v.nvars != n:
            raise ValueError(f"vector field has {v.nvars} components, expected {n}")
        if f.is_zero():
            raise ValueError("hypersurface equation is identically zero")
        if point is not None:
            if len(point) != n:
                raise ValueError(f"point has {len(point)} coordinates, expected {n}")
            f = f.translate(point)
            v = v.translate(point)
        on_d = not f.constant_term()
        sing_d = on_d and all(not df.constant_term() for df in f.gradient())
        return cls(n, f, v, on_d, sing_d, v.vanishes_at_origin())

    @property
    def case(self) -> Optional[str]:
        """Which of the four residue cases the point belongs to, if any."""
        if self.point_sing_F and not self.point_on_D:
            return "a"
        if self.point_sing_F and not self.point_sing_D:
            return "b"
        if self.point_sing_F:
            return "c"
        if self.point_sing_D:
            return "d"
        return None

    def dim(self, name: str, ideal: Sequence[Polynomial], n_max: int) -> int:
        """Certified local dimension, memoized per context under ``name``."""
        hit = self._dims.get(name)
        if hit is not None:
            return hit[0]
        res = local_dim(list(ideal), n_max, nvars=self.n)
        if not res.certified:
            raise UncertifiedDimension(name, res.dim, n_max)
        self._dims[name] = (res.dim, res.truncation_level)
        return res.dim

    @property
    def certification(self) -> Dict[str, int]:
        return {name: level for name, (_, level) in sorted(self._dims.items())}


@dataclass(frozen=True)
class PointIndices:
    n: int
    case: Optional[str]
    mu_F: Optional[int] = None
    mu_D: Optional[int] = None
    tjurina: Optional[int] = None
    multiplicity: Optional[int] = None
    gsv: Optional[int] = None
    schwartz: Optional[int] = None
    residue_cn: Optional[int] = None
    cofactor: Optional[Polynomial] = None
    certification: Dict[str, int] = field(default_factory=dict)
    notes: Tuple[str, ...] = ()


def _sign(n: int) -> int:
    return -1 if n % 2 else 1


def check_invariance(ctx: LocalContext) -> Polynomial:
    """Cofactor ``h = v(f)/f``; raises :class:`NotInvariant` if ``f`` does not divide ``v(f)``."""
    vf = ctx.v.apply(ctx.f)
    quot, rem = vf.divide(ctx.f)
    if rem:
        raise NotInvariant(rem)
    return quot


def milnor_foliation(ctx: LocalContext, n_max: int = DEFAULT_NMAX) -> int:
    """``dim O/<a_1..a_n>``; 0 by convention at a regular point of the field."""
    if not ctx.point_sing_F:
        return 0
    return ctx.dim("mu_F", ctx.v.components, n_max)


def milnor_hypersurface(ctx: LocalContext, n_max: int = DEFAULT_NMAX) -> int:
    """Milnor number ``dim O/J_f``; 0 at a smooth point of ``D``."""
    if not ctx.point_on_D:
        raise IndexRefusal("point is not on the hypersurface")
    if not ctx.point_sing_D:
        return 0
    return ctx.dim("mu_D", ctx.f.gradient(), n_max)


def tjurina(ctx: LocalContext, n_max: int = DEFAULT_NMAX) -> int:
    """Tjurina number ``dim O/<f, J_f>``."""
    if not ctx.point_on_D:
        raise IndexRefusal("point is not on the hypersurface")
    if not ctx.point_sing_D:
        return 0
    return ctx.dim("tau", (ctx.f,) + ctx.f.gradient(), n_max)


def multiplicity(ctx: LocalContext) -> int:
    if not ctx.point_on_D:
        raise IndexRefusal("point is not on the hypersurface")
    return int(ctx.f.order_at_origin())


def gsv(ctx: LocalContext, n_max: int = DEFAULT_NMAX, cofactor: Optional[Polynomial] = None) -> int:
    if not ctx.point_on_D:
        raise IndexRefusal("GSV index is defined only at points of the hypersurface")
    if cofactor is None:
        cofactor = check_invariance(ctx)
    tau = tjurina(ctx, n_max)
    a = ctx.v.components
    if ctx.n % 2 == 0:
        return ctx.dim("f+a", (ctx.f,) + a, n_max) - tau
    mu_f = milnor_foliation(ctx, n_max)
    if cofactor.constant_term() or not ctx.point_sing_F:
        middle = 0  # a unit in the ideal
    else:
        middle = ctx.dim("h+a", (cofactor,) + a, n_max)
    return mu_f - middle + tau


def schwartz(ctx: LocalContext, n_max: int = DEFAULT_NMAX, gsv_value: Optional[int] = None) -> int:
    if gsv_value is None:
        gsv_value = gsv(ctx, n_max)
    return gsv_value + _sign(ctx.n) * milnor_hypersurface(ctx, n_max)


def residue_cn(ctx: LocalContext, indices: PointIndices) -> int:
    """Top-Chern residue from the point's Milnor and Schwartz indices."""
    sign = _sign(ctx.n)
    case = ctx.case
    if case == "a":
        return indices.mu_F
    if case == "b":
        return indices.mu_F - indices.schwartz
    if case == "c":
        return indices.mu_F - indices.schwartz + sign * indices.mu_D
    if case == "d":
        return -indices.schwartz + sign * indices.mu_D
    raise RegularPoint("point is regular for both the foliation and the hypersurface")


def _univariate_gcd(a: list, b: list) -> list:
    # coefficient lists, lowest degree first
    def trim(p):
        while p and p[-1] == 0:
            p.pop()
        return p

    a, b = trim(list(a)), trim(list(b))
    while b:
        r = list(a)
        while len(r) >= len(b) and r:
            q = r[-1] / b[-1]
            shift = len(r) - len(b)
            for i, c in enumerate(b):
                r[shift + i] -= q * c
            trim(r)
        a, b = b, r
    return a


def distinct_tangent_lines(f: Polynomial) -> int:
    """Number of distinct lines in the tangent cone of a plane curve germ at 0."""
    if f.nvars != 2 or f.is_zero():
        raise ValueError("expected a nonzero polynomial in two variables")
    m = int(f.order_at_origin())
    cone = f.homogeneous_component(m)
    g = [Fraction(0)] * (m + 1)
    for (i, _), c in cone.terms.items():
        g[i] = c
    at_infinity = 1 if g[m] == 0 else 0
    while g and g[-1] == 0:
        g.pop()
    deg = len(g) - 1
    if deg <= 0:
        return at_infinity
    dg = [i * g[i] for i in range(1, len(g))]
    common = len(_univariate_gcd(g, dg)) - 1
    return deg - common + at_infinity


def local_bound_checks(ctx: LocalContext, ind: PointIndices) -> Dict[str, str]:
    """Positivity and lower-bound checks; each verdict is holds/fails/not-applicable."""

    def verdict(cond: bool) -> str:
        return "holds" if cond else "fails"

    out = {}
    if ctx.point_sing_F and ctx.point_on_D and ind.gsv is not None:
        if ctx.n % 2 == 0:
            out["positivity"] = verdict(ind.schwartz > 0)
        else:
            out["positivity"] = verdict(ind.gsv > 0)
    else:
        out["positivity"] = "not-applicable"
    if ctx.n % 2 == 1 and ctx.point_sing_F and ctx.point_sing_D and ind.gsv is not None:
        out["tjurina_le_gsv"] = verdict(ind.tjurina <= ind.gsv)
        bound = Fraction((ind.multiplicity - 1) ** ctx.n, ctx.n)
        out["multiplicity_le_gsv"] = verdict(bound <= ind.gsv)
    else:
        out["tjurina_le_gsv"] = "not-applicable"
        out["multiplicity_le_gsv"] = "not-applicable"
    return out


def compute_indices(ctx: LocalContext, n_max: int = DEFAULT_NMAX) -> PointIndices:
    """Every index applicable at the point.

    Raises :class:`NotInvariant` on a point of ``D`` where the standing
    hypothesis fails, :class:`UncertifiedDimension` when a needed local
    dimension does not stabilize, :class:`RegularPoint` for a point in none
    of the four residue cases.
    """
    case = ctx.case
    if case is None:
        raise RegularPoint("point is regular for both the foliation and the hypersurface")
    notes = []
    mu_f = milnor_foliation(ctx, n_max)
    values = dict(mu_F=mu_f)
    if ctx.point_on_D:
        cof = check_invariance(ctx)
        g = gsv(ctx, n_max, cofactor=cof)
        mu_d = milnor_hypersurface(ctx, n_max)
        values.update(
            mu_D=mu_d,
            tjurina=tjurina(ctx, n_max),
            multiplicity=multiplicity(ctx),
            gsv=g,
            schwartz=schwartz(ctx, n_max, gsv_value=g),
            cofactor=cof,
        )
        if ctx.n == 2 and ctx.point_sing_D:
            lines = distinct_tangent_lines(ctx.f)
            if lines >= 2:
                notes.append("n=2 multi-branch curve point: GSV from homological formula")
            else:
                notes.append("n=2 singular curve point with one tangent line: branch count undetermined")
    if case == "d":
        notes.append("point of Sing(D) outside Sing(F)")
    partial = PointIndices(ctx.n, case, **values)
    res = residue_cn(ctx, partial)
    return PointIndices(
        ctx.n,
        case,
        residue_cn=res,
        certification=ctx.certification,
        notes=tuple(notes),
        **values,
    )


def germ_indices(f: Polynomial, v: VectorField, point: Optional[Sequence[Scalar]] = None, n_max: int = DEFAULT_NMAX) -> PointIndices:
    """Convenience wrapper: translate, classify and compute."""
    return compute_indices(LocalContext.at_point(f, v, point), n_max)
