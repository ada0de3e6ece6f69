from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foliation_indices import chern
from foliation_indices.chern import (
    GlobalData,
    TruncatedSeries,
    baum_bott_total,
    euler_char_hypersurface,
    gsv_total,
    identity_sweep,
    integral_X,
    negative_total_check,
    gsv_total_closed,
    poincare_bound_checks,
    schwartz_total,
    schwartz_total_via_integrals,
)

triples = st.tuples(st.integers(2, 8), st.integers(0, 10), st.integers(1, 10))


def test_series_arithmetic():
    one_plus_h = TruncatedSeries.linear(1, 3)
    assert (one_plus_h ** 4).coeffs == (1, 4, 6, 4)
    inv = one_plus_h.inverse()
    assert inv.coeffs == (1, -1, 1, -1)
    assert (inv * one_plus_h) == TruncatedSeries.one(3)
    with pytest.raises(ValueError):
        TruncatedSeries([2, 1], 1).inverse()


def test_tangent_class_of_projective_space():
    # chi(P^n) = n + 1
    for n in range(1, 8):
        assert chern.tangent_class(n).integral() == n + 1


@pytest.mark.parametrize("n, d, k, value", [(4, 0, 3, 16), (2, 2, 1, 4), (2, 1, 2, 1), (2, 1, 1, 1), (3, 0, 3, -8)])
def test_integral_X(n, d, k, value):
    assert integral_X(n, d, k) == value


@pytest.mark.parametrize("n, d, value", [(4, 0, 1), (2, 1, 3), (3, 2, 15), (2, 2, 7)])
def test_baum_bott_total(n, d, value):
    assert baum_bott_total(n, d) == value


@pytest.mark.parametrize("n, d, k, value", [(2, 1, 1, 2), (4, 0, 3, -15), (3, 0, 3, 9), (3, 0, 2, 2)])
def test_gsv_total(n, d, k, value):
    assert gsv_total(n, d, k) == value


@pytest.mark.parametrize("n, d, k, mu, value", [(4, 0, 3, [16], 1), (3, 1, 2, [1], 3), (2, 1, 1, [], 2)])
def test_schwartz_total(n, d, k, mu, value):
    assert schwartz_total(n, d, k, mu) == value
    assert schwartz_total_via_integrals(n, d, k, mu) == value


@pytest.mark.parametrize("n, k, mu, value", [(3, 2, [], 4), (2, 1, [], 2), (4, 3, [16], 10), (2, 3, [], 0), (3, 3, [8], 1)])
def test_euler_characteristic(n, k, mu, value):
    assert euler_char_hypersurface(n, k, mu) == value


def test_smooth_hypersurface_euler_characteristic_closed_form():
    # chi of a smooth degree-k hypersurface in P^n: ((1-k)^(n+1) - 1)/k + n + 1
    for n in range(2, 7):
        for k in range(1, 7):
            assert euler_char_hypersurface(n, k) == ((1 - k) ** (n + 1) - 1) // k + n + 1


@given(triples)
@settings(max_examples=100, deadline=None)
def test_three_routes_agree(t):
    n, d, k = t
    assert chern.integral_X_series(n, d, k) == chern.integral_X_closed(n, d, k) == chern.integral_X_double_sum(n, d, k)
    lhs, rhs = chern.rearrangement_sides(n, d, k)
    assert lhs == rhs


def test_sweep_box_identities():
    result = identity_sweep(8, 10, 10)
    assert result.triples == 7 * 11 * 10
    for name in chern.SWEEP_IDENTITIES:
        if name != "negative_gsv_total":
            assert result.failures_for(name) == [], name


def test_inequality_for_even_dimension():
    for n in range(2, 9, 2):
        for d in range(11):
            for k in range(d + 3, 11):
                assert gsv_total_closed(n, d, k) < 0


def test_inequality_has_odd_dimension_counterexamples():
    # the cubic cone in P^3 under the radial foliation realises this total
    assert gsv_total_closed(3, 0, 3) == 9
    assert not negative_total_check(3, 0, 3)
    assert gsv_total_closed(3, 2, 9) == 423
    bad = identity_sweep(8, 10, 10).failures_for("negative_gsv_total")
    assert bad and {f.n % 2 for f in bad} == {1}


def test_negative_total_check_vacuous_below_threshold():
    assert negative_total_check(3, 5, 7)
    with pytest.raises(ValueError):
        negative_total_check(1, 0, 3)


def test_degree_bound_hypotheses():
    g = GlobalData(4, 0, 2, (1,))
    checks = poincare_bound_checks(g)
    assert checks["degree_bound"]["status"] == "holds"
    assert poincare_bound_checks(GlobalData(4, 0, 3, (16,)))["degree_bound"]["status"] == "hypotheses-not-met"
    assert poincare_bound_checks(GlobalData(3, 0, 2, (1,)))["degree_bound"]["status"] == "hypotheses-not-met"
    assert checks["euler_obstruction"]["status"] == "not-evaluated"


def test_milnor_sum_bound_values():
    checks = poincare_bound_checks(GlobalData(4, 0, 3, (16,)))
    assert checks["milnor_sum_bound"] == {"status": "holds", "lhs": 0, "rhs": 0}
    assert chern.milnor_bound_lhs(2, 3) == sum(comb(2, j) * (-3) ** (2 - j) for j in range(2))


def test_euler_obstruction_hypotheses():
    holds = poincare_bound_checks(GlobalData(2, 1, 1, ()), s1=0, s2=1)
    assert holds["euler_obstruction"]["status"] == "holds"
    # a line with two simple zeros: chi = 2 = s1 + s2
    equal = poincare_bound_checks(GlobalData(2, 1, 1, ()), s1=0, s2=2)
    assert equal["euler_obstruction"]["status"] == "fails"
    assert poincare_bound_checks(GlobalData(2, 1, 1, ()), 0, 1, sing_d_in_sing_f=False)["euler_obstruction"]["status"] == "hypotheses-not-met"
    assert poincare_bound_checks(GlobalData(3, 1, 1, ()), s1=0, s2=1)["euler_obstruction"]["status"] == "hypotheses-not-met"


def test_global_data_validation():
    with pytest.raises(ValueError):
        GlobalData(2, -1, 1)
    with pytest.raises(ValueError):
        GlobalData(2, 1, 0)
