from fractions import Fraction

import pytest

from foliation_indices.indices import (
    LocalContext,
    NotInvariant,
    RegularPoint,
    UncertifiedDimension,
    check_invariance,
    compute_indices,
    local_bound_checks,
    distinct_tangent_lines,
    germ_indices,
    gsv,
    milnor_foliation,
    milnor_hypersurface,
    multiplicity,
    tjurina,
)
from foliation_indices.oracle import oracle_quotient_dim
from foliation_indices.polynomial import Polynomial, VectorField

from conftest import P, V


def fermat(n, k):
    return sum((xi ** k for xi in Polynomial.gens(n)), Polynomial.zero(n))


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_fermat_cone_radial(k):
    ind = germ_indices(fermat(4, k), VectorField.radial(4))
    assert ind.case == "c"
    assert ind.mu_D == (k - 1) ** 4
    assert ind.mu_F == 1
    assert ind.gsv == 1 - (k - 1) ** 4
    assert ind.schwartz == 1
    assert ind.residue_cn == (k - 1) ** 4
    assert ind.multiplicity == k


def test_milnor_numbers_agree_with_oracle():
    f = P("x1^2 - x2^3", 2)
    ctx = LocalContext.at_point(f, V("3*x1 ; 2*x2", 2))
    mu = milnor_hypersurface(ctx)
    assert mu == 2 == oracle_quotient_dim(list(f.gradient()), 6)
    assert tjurina(ctx) == 2 == oracle_quotient_dim([f, *f.gradient()], 6)
    assert milnor_foliation(ctx) == 1


@pytest.mark.parametrize(
    "f, v, n, expected_gsv, expected_sch",
    [
        ("x1^2 + x2^2 + x3^2", "x1 ; x2 ; x3", 3, 2, 1),
        ("x1^3 + x2^3 + x3^3", "x1 ; x2 ; x3", 3, 9, 1),
        ("x1^2 - x2^3", "3*x1 ; 2*x2", 2, -1, 1),
        ("x1*x2", "x1 ; x2", 2, 0, 1),
        ("x1^2 + x2^2 + x3^3", "3*x1 ; 3*x2 ; 2*x3", 3, 3, 1),
        ("x1^2 + x2^2 + x3^2 + x4^3", "3*x1 ; 3*x2 ; 3*x3 ; 2*x4", 4, -1, 1),
        ("x1", "x1^2 ; x2 ; x3", 3, 1, 1),
        ("x2", "x1 ; 2*x2", 2, 1, 1),
        ("x1^2 + x2^2 + x3^2 + x4^2 + x5^2", "x1 ; x2 ; x3 ; x4 ; x5", 5, 2, 1),
    ],
)
def test_gsv_and_schwartz(f, v, n, expected_gsv, expected_sch):
    ind = germ_indices(P(f, n), V(v, n))
    assert ind.gsv == expected_gsv
    assert ind.schwartz == expected_sch


def test_gsv_at_smooth_point_equals_milnor_number_of_restriction():
    # on the smooth line x2 = 0 the restricted field is x1^2 d/dx1, index 2
    ind = germ_indices(P("x2", 2), V("-x1^2 ; x2 - x1*x2", 2))
    assert (ind.case, ind.gsv, ind.schwartz, ind.mu_F) == ("b", 2, 2, 2)


def test_translation_to_point():
    f = P("x2", 2)
    v = V("x1 - x1^2 ; 2*x2 - x1*x2", 2)
    ind = germ_indices(f, v, (1, 0))
    assert (ind.case, ind.mu_F, ind.gsv) == ("b", 1, 1)
    shifted = germ_indices(f.translate((Fraction(1, 2), 0)), v.translate((Fraction(1, 2), 0)), (Fraction(1, 2), 0))
    assert shifted == ind


def test_cases():
    radial = VectorField.radial(2)
    assert LocalContext.at_point(P("1 + x1", 2), radial).case == "a"
    assert LocalContext.at_point(P("x1", 2), radial).case == "b"
    assert LocalContext.at_point(P("x1*x2", 2), radial).case == "c"
    assert LocalContext.at_point(P("x1*x2", 2), V("1 ; 0", 2)).case == "d"
    assert LocalContext.at_point(P("x1", 2), V("0 ; 1", 2)).case is None


def test_case_d_singularity_is_never_isolated():
    # an invariant hypersurface through a non-vanishing field is a product along the flow
    with pytest.raises(UncertifiedDimension):
        germ_indices(P("x2^3 - x3^2", 3), V("1 ; 0 ; 0", 3), n_max=12)


def test_case_a_only_has_residue():
    ind = germ_indices(P("1", 2), V("-x1 ; x1 - x2", 2))
    assert ind.case == "a"
    assert ind.residue_cn == ind.mu_F == 1
    assert ind.gsv is None and ind.mu_D is None


def test_not_invariant_reports_remainder():
    with pytest.raises(NotInvariant) as info:
        germ_indices(P("x1", 2), V("x2 ; x1", 2))
    assert info.value.remainder == P("x2", 2)


def test_invariance_cofactor():
    ctx = LocalContext.at_point(P("x1^2 - x2^3", 2), V("3*x1 ; 2*x2", 2))
    assert check_invariance(ctx) == 6


def test_regular_point_refused():
    with pytest.raises(RegularPoint):
        germ_indices(P("x1", 2), V("0 ; 1", 2))


def test_uncertified_refusal():
    with pytest.raises(UncertifiedDimension):
        germ_indices(fermat(4, 3), VectorField.radial(4), n_max=4)
    # non-isolated singular locus of D
    with pytest.raises(UncertifiedDimension):
        germ_indices(P("x1^2", 2), VectorField.radial(2), n_max=10)


def test_n_equal_one_rejected():
    with pytest.raises(ValueError):
        LocalContext.at_point(P("x1", 1), V("x1", 1))


def test_multiplicity():
    ctx = LocalContext.at_point(P("x1^3 + x2^4", 2), VectorField.radial(2))
    assert multiplicity(ctx) == 3


@pytest.mark.parametrize(
    "f, lines",
    [("x1*x2", 2), ("x1^2 - x2^3", 1), ("x1^2 - x2^2", 2), ("x2^2", 1), ("x1^3 - x1*x2^2", 3), ("x1^2*x2 + x2^4", 2)],
)
def test_distinct_tangent_lines(f, lines):
    assert distinct_tangent_lines(P(f, 2)) == lines


def test_local_bounds_on_cubic_cone():
    ctx = LocalContext.at_point(P("x1^3 + x2^3 + x3^3", 3), VectorField.radial(3))
    ind = compute_indices(ctx)
    checks = local_bound_checks(ctx, ind)
    assert checks == {"positivity": "holds", "tjurina_le_gsv": "holds", "multiplicity_le_gsv": "holds"}
    assert ind.tjurina == 8 and ind.gsv == 9


def test_even_dimension_skips_odd_only_bounds():
    ctx = LocalContext.at_point(fermat(4, 2), VectorField.radial(4))
    checks = local_bound_checks(ctx, compute_indices(ctx))
    assert checks["tjurina_le_gsv"] == "not-applicable"
    assert checks["positivity"] == "holds"


def test_certification_levels_recorded():
    ind = germ_indices(fermat(4, 3), VectorField.radial(4))
    assert ind.certification["mu_D"] == 5
    assert all(level >= 1 for level in ind.certification.values())


def test_gsv_direct_call_matches_compute():
    ctx = LocalContext.at_point(P("x1^2 + x2^2 + x3^3", 3), V("3*x1 ; 3*x2 ; 2*x3", 3))
    assert gsv(ctx) == compute_indices(ctx).gsv
