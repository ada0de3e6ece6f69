from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from foliation_indices.parser import (
    ParseError,
    format_polynomial,
    format_scenario,
    parse_polynomial,
    parse_scenario,
)
from foliation_indices.polynomial import Polynomial

from conftest import fixture_path


@pytest.mark.parametrize(
    "text, n, expected",
    [
        ("x1^2 - 1/2*x1*x2 + 3", 2, Polynomial(2, {(2, 0): 1, (1, 1): Fraction(-1, 2), (0, 0): 3})),
        ("-x1", 1, Polynomial(1, {(1,): -1})),
        ("(x1 + x2)^2", 2, Polynomial(2, {(2, 0): 1, (1, 1): 2, (0, 2): 1})),
        ("2*(x1 - 1)*x2", 2, Polynomial(2, {(1, 1): 2, (0, 1): -2})),
        ("0", 3, Polynomial.zero(3)),
        ("  x3 ^ 2  ", 3, Polynomial(3, {(0, 0, 2): 1})),
    ],
)
def test_parse_examples(text, n, expected):
    assert parse_polynomial(text, n) == expected


def test_format_example():
    assert format_polynomial(parse_polynomial("3 - 1/2*x2*x1 + x1^2", 2)) == "x1^2 - 1/2*x1*x2 + 3"
    assert format_polynomial(Polynomial.zero(2)) == "0"


@pytest.mark.parametrize(
    "text, column",
    [
        ("x1 + * x2", 6),
        ("x3", 1),
        ("x1 x2", 4),
        ("1/0", 3),
        ("(x1 + 1", 8),
        ("x1 + $", 6),
        ("x1 - -x2", 6),
    ],
)
def test_parse_errors_carry_position(text, column):
    with pytest.raises(ParseError) as info:
        parse_polynomial(text, 2)
    assert info.value.line == 1
    assert info.value.column == column


def test_implicit_multiplication_is_rejected():
    with pytest.raises(ParseError):
        parse_polynomial("2x1", 1)


terms = st.dictionaries(
    st.tuples(st.integers(0, 4), st.integers(0, 4), st.integers(0, 2)),
    st.fractions(min_value=-9, max_value=9, max_denominator=7),
    max_size=6,
)


@given(terms)
@settings(max_examples=100, deadline=None)
def test_format_parse_round_trip(t):
    p = Polynomial(3, t)
    assert parse_polynomial(format_polynomial(p), 3) == p


GOOD = """\
# a comment line
scenario n=2 d=1 k=1 complete=true
chart 0
hypersurface x2   # trailing comment
vectorfield x1 ; 2*x2
point chart=0 at 0,-1/2 label=a
point chart=0 at 1,0
expect gsv_total = -3
"""


def test_parse_scenario_fields():
    s = parse_scenario(GOOD)
    assert (s.n, s.d, s.k, s.complete) == (2, 1, 1, True)
    assert s.charts[0].f == parse_polynomial("x2", 2)
    assert s.points[0].coords == (0, Fraction(-1, 2))
    assert s.points[0].label == "a"
    assert s.points[1].label == "p1"
    assert s.expectations == {"gsv_total": -3}


def test_format_scenario_round_trip():
    s = parse_scenario(GOOD)
    assert parse_scenario(format_scenario(s)) == s


@pytest.mark.parametrize("name", ["fermat_cone_k3", "p2_diagonal_line", "p3_smooth_quadric"])
def test_fixture_round_trip(name):
    s = parse_scenario(fixture_path(name).read_text())
    assert parse_scenario(format_scenario(s)) == s


@pytest.mark.parametrize(
    "text, line",
    [
        ("", 1),
        ("chart 0\n", 1),
        ("scenario n=2 d=1 k=1\n", 1),
        ("scenario n=2 d=1 k=0 complete=true\n", 1),
        ("scenario n=2 d=1 k=1 complete=yes\n", 1),
        ("scenario n=2 d=1 k=1 complete=true\nchart 0\nhypersurface x1\nvectorfield x1 ; x2\npoint chart=1 at 0,0\n", 5),
        ("scenario n=2 d=1 k=1 complete=true\nchart 0\nhypersurface x1\nvectorfield x1 ; x2 ; x1\n", 4),
        ("scenario n=2 d=1 k=1 complete=true\nchart 0\nhypersurface x1\nvectorfield x1 ; x2\npoint chart=0 at 0\n", 5),
        ("scenario n=2 d=1 k=1 complete=true\nchart 0\nhypersurface x1\npoint chart=0 at 0,0\n", 2),
        ("scenario n=2 d=1 k=1 complete=true\nchart 0\nhypersurface x1\nvectorfield x1 ; x2\nexpect mu = 3\n", 5),
        ("scenario n=2 d=1 k=1 complete=true\nchart 0\nhypersurface x1\nhypersurface x2\n", 4),
        ("scenario n=2 d=1 k=1 complete=true\nfrobnicate\n", 2),
    ],
)
def test_scenario_errors(text, line):
    with pytest.raises(ParseError) as info:
        parse_scenario(text)
    assert info.value.line == line


def test_malformed_fixture_reports_column():
    with pytest.raises(ParseError) as info:
        parse_scenario(fixture_path("germ_malformed").read_text())
    assert (info.value.line, info.value.column) == (3, 19)
