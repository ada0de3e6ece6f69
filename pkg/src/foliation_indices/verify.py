"""Scenario verification: local indices at every listed point, global
characteristic numbers on ``P^n``, and the identities tying them together.
"""

from __future__ import annotations

import json
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

from . import chern
from .indices import (
    IndexRefusal,
    LocalContext,
    NotInvariant,
    PointIndices,
    compute_indices,
    local_bound_checks,
)
from .localalgebra import DEFAULT_NMAX
from .polynomial import Polynomial, VectorField

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class Chart:
    chart_id: int
    f: Polynomial
    v: VectorField


@dataclass(frozen=True)
class ScenarioPoint:
    chart_id: int
    coords: Tuple[Fraction, ...]
    label: str


@dataclass(frozen=True)
class Scenario:
    n: int
    d: int
    k: int
    complete: bool
    charts: Tuple[Chart, ...]
    points: Tuple[ScenarioPoint, ...]
    expectations: Dict[str, int] = field(default_factory=dict)

    def chart(self, chart_id: int) -> Chart:
        for ch in self.charts:
            if ch.chart_id == chart_id:
                return ch
        raise KeyError(chart_id)


def foliation_degree_affine(v: VectorField) -> int:
    """Degree of the projective foliation read off an affine chart.

    With ``m`` the largest component degree, the top parts ``a_i^(m)`` of
    the form ``g * x_i`` for a common ``g`` are tangent to the hyperplane at
    infinity's radial direction, and the degree is ``m - 1``; otherwise ``m``.
    """
    m = v.degree()
    tops = [c.homogeneous_component(m) for c in v.components]
    x = Polynomial.gens(v.nvars)
    g = None
    for top, xi in zip(tops, x):
        if top:
            g = top.exact_divide(xi)
            break
    if g is not None and all(top == g * xi for top, xi in zip(tops, x)):
        return m - 1
    return m


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


@dataclass
class PointReport:
    label: str
    chart_id: int
    coords: Tuple[Fraction, ...]
    case: Optional[str] = None
    indices: Optional[PointIndices] = None
    checks: Dict[str, str] = field(default_factory=dict)
    refusal: Optional[str] = None

    def to_dict(self) -> dict:
        ind = self.indices
        out = {
            "label": self.label,
            "chart": self.chart_id,
            "coords": [_fmt(c) for c in self.coords],
            "case": self.case,
            "refusal": self.refusal,
            "checks": dict(sorted(self.checks.items())),
        }
        for name in ("mu_F", "mu_D", "tjurina", "multiplicity", "gsv", "schwartz", "residue_cn"):
            out[name] = getattr(ind, name) if ind else None
        out["cofactor"] = str(ind.cofactor) if ind and ind.cofactor is not None else None
        out["certification"] = dict(ind.certification) if ind else {}
        out["notes"] = list(ind.notes) if ind else []
        return out


@dataclass
class Verdict:
    status: str  # "pass", "fail", "not-applicable" or "skipped: <reason>"
    lhs: object = None
    rhs: object = None
    detail: str = ""

    @property
    def failed(self) -> bool:
        return self.status == "fail"

    def to_dict(self) -> dict:
        return {"status": self.status, "lhs": self.lhs, "rhs": self.rhs, "detail": self.detail}


@dataclass
class IndexReport:
    n: int
    d: int
    k: int
    complete: bool
    points: List[PointReport] = field(default_factory=list)
    global_values: Dict[str, int] = field(default_factory=dict)
    verdicts: Dict[str, Verdict] = field(default_factory=dict)
    warnings: List[str] = field(default_factory=list)

    @property
    def refused(self) -> bool:
        return any(p.refusal for p in self.points)

    @property
    def failed(self) -> bool:
        return any(v.failed for v in self.verdicts.values())

    @property
    def failures(self) -> List[str]:
        return [name for name, v in sorted(self.verdicts.items()) if v.failed]

    def to_dict(self) -> dict:
        return {
            "scenario": {"n": self.n, "d": self.d, "k": self.k, "complete": self.complete},
            "points": [p.to_dict() for p in self.points],
            "globals": dict(sorted(self.global_values.items())),
            "verdicts": {name: v.to_dict() for name, v in sorted(self.verdicts.items())},
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=2) + "\n"

    def to_table(self) -> str:
        cols = ("label", "case", "mu_F", "mu_D", "tjurina", "multiplicity", "gsv", "schwartz", "residue_cn")
        rows = [cols]
        for p in self.points:
            d = p.to_dict()
            rows.append(tuple("-" if d[c] is None else str(d[c]) for c in cols))
        widths = [max(len(r[i]) for r in rows) for i in range(len(cols))]
        lines = [f"scenario n={self.n} d={self.d} k={self.k} complete={str(self.complete).lower()}", ""]
        for r in rows:
            lines.append("  ".join(s.rjust(w) for s, w in zip(r, widths)).rstrip())
        for p in self.points:
            if p.refusal:
                lines.append(f"refused {p.label}: {p.refusal}")
        lines.append("")
        lines.append("globals:")
        for name, value in sorted(self.global_values.items()):
            lines.append(f"  {name} = {value}")
        lines.append("")
        lines.append("verdicts:")
        for name, v in sorted(self.verdicts.items()):
            extra = ""
            if v.lhs is not None or v.rhs is not None:
                extra = f"  ({v.lhs} vs {v.rhs})"
            if v.detail:
                extra += f"  {v.detail}"
            lines.append(f"  {name}: {v.status}{extra}")
        if self.warnings:
            lines.append("")
            lines.append("warnings:")
            lines.extend(f"  {w}" for w in self.warnings)
        return "\n".join(lines) + "\n"


def _equality(lhs: int, rhs: int, detail: str = "") -> Verdict:
    return Verdict("pass" if lhs == rhs else "fail", lhs, rhs, detail)


_BOUND_STATUS = {"holds": "pass", "fails": "fail", "hypotheses-not-met": "not-applicable", "not-evaluated": "not-applicable"}


def run_scenario(s: Scenario, n_max: int = DEFAULT_NMAX) -> IndexReport:
    """Compute every index and verdict for a scenario.

    Raises :class:`NotInvariant` (naming the point) if the hypersurface is
    not invariant at a point of it.  Uncertified local dimensions refuse
    only that point and downgrade the global verdicts to skipped.
    """
    report = IndexReport(s.n, s.d, s.k, s.complete)

    for ch in s.charts:
        deg = foliation_degree_affine(ch.v)
        if deg != s.d:
            report.warnings.append(
                f"chart {ch.chart_id}: affine degree rule gives {deg}, declared d={s.d}"
            )

    for pt in s.points:
        ch = s.chart(pt.chart_id)
        pr = PointReport(pt.label, pt.chart_id, pt.coords)
        report.points.append(pr)
        ctx = LocalContext.at_point(ch.f, ch.v, pt.coords)
        pr.case = ctx.case
        try:
            pr.indices = compute_indices(ctx, n_max)
        except NotInvariant as exc:
            raise NotInvariant(
                exc.remainder,
                f"point {pt.label} (chart {pt.chart_id}): hypersurface not invariant, "
                f"v(f) mod f = {exc.remainder}",
            ) from None
        except IndexRefusal as exc:
            pr.refusal = str(exc)
            log.debug("point %s refused: %s", pt.label, exc)
            report.warnings.append(f"point {pt.label}: {exc}")
            continue
        pr.checks = local_bound_checks(ctx, pr.indices)
        for note in pr.indices.notes:
            report.warnings.append(f"point {pt.label}: {note}")

    done = [p for p in report.points if p.indices is not None]
    on_d = [p for p in done if p.indices.gsv is not None]
    sing_d = [p for p in on_d if p.indices.mu_D]
    mu_list = tuple(p.indices.mu_D for p in sing_d)
    g = chern.GlobalData(s.n, s.d, s.k, mu_list)

    report.global_values = {
        "integral_X": g.integral_X(),
        "baum_bott_total": g.baum_bott_total(),
        "gsv_total": g.gsv_total(),
        "schwartz_total": g.schwartz_total(),
        "chi_D": g.euler_char(),
    }

    # local checks do not need the full point list
    for name in ("positivity", "tjurina_le_gsv", "multiplicity_le_gsv"):
        applicable = [p for p in done if p.checks.get(name) in ("holds", "fails")]
        if not applicable:
            report.verdicts[name] = Verdict("not-applicable")
        else:
            bad = [p.label for p in applicable if p.checks[name] == "fails"]
            report.verdicts[name] = Verdict(
                "fail" if bad else "pass",
                detail=("violated at " + ", ".join(bad)) if bad else f"{len(applicable)} point(s)",
            )

    skip = None
    if report.refused:
        skip = "skipped: refused points"
    elif not s.complete:
        skip = "skipped: incomplete"
        report.warnings.append("scenario not declared complete: global identities skipped")

    global_names = ("residue_sum", "schwartz_sum", "gsv_sum", "baum_bott_sum",
                    "degree_bound", "milnor_sum_bound", "euler_obstruction")
    if skip:
        for name in global_names:
            report.verdicts[name] = Verdict(skip)
    else:
        report.verdicts["residue_sum"] = _equality(
            sum(p.indices.residue_cn for p in done), g.integral_X()
        )
        report.verdicts["schwartz_sum"] = _equality(
            sum(p.indices.schwartz for p in on_d), g.schwartz_total()
        )
        report.verdicts["gsv_sum"] = _equality(sum(p.indices.gsv for p in on_d), g.gsv_total())
        total_mu = sum(p.indices.mu_F for p in done)
        expected = g.baum_bott_total()
        report.verdicts["baum_bott_sum"] = _equality(
            total_mu, expected, f"deficit {expected - total_mu}" if total_mu != expected else ""
        )
        s1 = len(sing_d)
        s2 = sum(1 for p in on_d if p.case == "b")
        sing_d_in_sing_f = all(p.case != "d" for p in done)
        bounds = chern.poincare_bound_checks(g, s1, s2, sing_d_in_sing_f)
        for name in ("degree_bound", "milnor_sum_bound", "euler_obstruction"):
            b = bounds[name]
            report.verdicts[name] = Verdict(_BOUND_STATUS[b["status"]], b["lhs"], b["rhs"])

    for name, value in sorted(s.expectations.items()):
        actual = report.global_values[name]
        report.verdicts[f"expect_{name}"] = _equality(actual, value)

    return report


def load_scenario(path) -> Scenario:
    from .parser import parse_scenario

    with open(path, encoding="utf-8") as fh:
        return parse_scenario(fh.read())
