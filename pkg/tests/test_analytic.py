import cmath
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from zolotarev import analytic as A
from zolotarev.errors import DomainError, UsageError, VerificationFailure

NODES, WEIGHTS = np.polynomial.legendre.leggauss(12)


def quad_value(dp, t):
    """Integral of ``dp`` along the segment from 0 to ``t`` (exact for degree < 24)."""
    t = complex(t)
    s = 0.5 * t * (NODES + 1)
    return complex(0.5 * t * np.sum(WEIGHTS * dp(s)))


def annulus(lo=0.1, hi=3.0):
    return st.tuples(st.floats(lo, hi), st.floats(0, 2 * math.pi)).map(lambda rt: cmath.rect(*rt))


def test_deg5_b_equals_one():
    _, data = A.deg5_family(1)
    assert abs(data.values[0] - 4) < 1e-12
    assert A.deg5_closed_forms(1)[0] == 4


def test_deg5_domain():
    with pytest.raises(DomainError):
        A.deg5_family(0)


@settings(max_examples=100, deadline=None)
@given(annulus())
def test_deg5_closed_forms_against_quadrature(b):
    c = -1 / (5 * b)

    def dp(x):
        return 20 * (x * x - 1) * (x - b) * (x - c)
    _, data = A.deg5_family(b)
    v1, vb, vc = A.deg5_closed_forms(b)
    for t, v in ((1, v1), (-1, v1), (b, vb), (c, vc)):
        q = quad_value(dp, t)
        assert abs(q - v) <= 1e-9 * max(1, abs(v))
    assert data.values == tuple(complex(A.deg5_family(b)[0](t)) for t in (1, -1, b, c))


def test_q_exact_zeros():
    assert A.deg5_degeneracy(0, 0) == 0
    assert sum(c for c, i, j in A.Q_TERMS if j == 0) == 0
    for x, y in ((1, 0), (0.2, 0), (0, 1 / math.sqrt(3)), (-1, 0), (-0.2, 0)):
        assert abs(A.deg5_degeneracy(x, y)) <= 1e-9


@given(st.floats(-2, 2))
def test_q_inner_on_axes(t):
    # the inner factor restricted to the axes, factored by hand
    on_x = t ** 2 * (t ** 2 - 1) ** 2 * (25 * t ** 2 - 1) ** 2 * (5 * t ** 2 + 1) ** 2
    on_y = -t ** 2 * (t ** 2 + 1) ** 2 * (5 * t ** 2 - 1) ** 2 * (25 * t ** 2 + 1) ** 2
    scale = 1 + A.deg5_degeneracy_scale(1, 1) * max(1, abs(t)) ** 14
    assert abs(A._q_inner(t, 0) - on_x) <= 1e-12 * scale
    assert abs(A._q_inner(0, t) - on_y) <= 1e-12 * scale


def test_inner_factor_meets_imaginary_axis_at_one_over_root_five():
    assert abs(A._q_inner(0, 1 / math.sqrt(5))) < 1e-12
    assert abs(A._q_inner(0, 1 / math.sqrt(3))) > 1
    for x in (1, 0.2):
        assert abs(A._q_inner(x, 0)) < 1e-12


@given(st.floats(-2, 2), st.floats(-2, 2))
def test_q_symmetry(x, y):
    q = A.deg5_degeneracy(x, y)
    tol = 1e-12 * (1 + A.deg5_degeneracy_scale(x, y))
    assert abs(A.deg5_degeneracy(-x, y) + q) <= tol
    assert abs(A.deg5_degeneracy(x, -y) + q) <= tol
    assert abs(A.deg5_degeneracy(-x, -y) - q) <= tol


def test_collinear_examples():
    assert A.collinear_middle(0, 1, 2, 1e-9) == 1
    assert A.collinear_middle(2, 0, 1, 1e-9) == 2
    assert A.collinear_middle(0, 1j, 1, 1e-9) is None
    with pytest.raises(VerificationFailure):
        A.collinear_middle(0, 1e-12, 1, 1e-9)


def test_curve_points_are_collinear():
    pts = A.deg5_degeneracy_points(50)
    assert len(pts) == 50
    for b in pts:
        assert abs(A._q_inner(b.real, b.imag)) <= 1e-6 * A.deg5_degeneracy_scale(1, 1)
        assert A.collinear_middle(*A.deg5_critical_triangle(b), 1e-6) is not None


def test_off_curve_points_are_not_collinear():
    rng = np.random.default_rng(7)
    hits = 0
    n = 0
    while n < 50:
        b = cmath.rect(rng.uniform(0.2, 2.5), rng.uniform(0, 2 * math.pi))
        if abs(A.deg5_degeneracy(b.real, b.imag)) < 1e-3 * A.deg5_degeneracy_scale(b.real, b.imag):
            continue
        n += 1
        hits += A.collinear_middle(*A.deg5_critical_triangle(b), 1e-6) is not None
    assert hits == 0


def test_shabat_parameters():
    r1, r2 = A.deg5_shabat_parameters()
    assert abs(r1 - 0.10) <= 0.01 and abs(r2 - 1.89) <= 0.01

    def f(t):
        _, vb, vc = A.deg5_closed_forms(t)
        return (vb - vc).real
    for r in (r1, r2):
        assert f(r - 1e-6) * f(r + 1e-6) < 0
    # p(b) = p(c) reduces to 5 b^2 - 10 b + 1 = 0 on this branch
    assert r1 == pytest.approx(1 - 2 / math.sqrt(5), abs=1e-9)
    assert r2 == pytest.approx(1 + 2 / math.sqrt(5), abs=1e-9)
    for r in (r1, r2):
        assert A.deg5_family(r)[1].distinct_value_count(1e-6) == 2


def test_imaginary_axis_shabat_point():
    # b = c = i/sqrt(5) merges two critical points; i/sqrt(3) leaves three values
    assert A.deg5_family(1j / math.sqrt(5))[1].distinct_value_count(1e-6) == 2
    assert A.deg5_family(1j / math.sqrt(3))[1].distinct_value_count(1e-6) == 3


def test_deg6_at_i():
    a, b, c = A.deg6_coefficients(1j)
    assert abs(a) < 1e-15 and abs(b + 1) < 1e-15
    assert A.deg6_family(1j)[1].distinct_value_count(1e-9) == 2


@pytest.mark.parametrize("z", [0, math.sqrt(3 / 5), -math.sqrt(3 / 5)])
def test_deg6_domain(z):
    with pytest.raises(DomainError):
        A.deg6_family(z)


@settings(max_examples=100, deadline=None)
@given(st.tuples(st.floats(-2, 2), st.floats(-2, 2)).map(lambda t: complex(*t))
       .filter(lambda z: abs(z) > 0.05 and abs(5 * z * z - 3) > 0.05))
def test_deg6_identities(z):
    p, data = A.deg6_family(z, check=False)
    a, b, c = A.deg6_coefficients(z)

    def dp(x):
        return (x * x - 1) * (x * x + a * x + b) * (x - c)
    v = data.values
    scale = max(1, *(abs(x) for x in v))
    assert abs(v[0] - v[1]) <= 1e-9 * scale
    assert abs(v[2] - v[3]) <= 1e-9 * scale
    for t, val in zip(data.points, v):
        assert abs(dp(t)) <= 1e-9 * max(1, abs(t)) ** 5
        assert abs(quad_value(dp, t) - val) <= 1e-9 * scale


@pytest.mark.parametrize("z,tol", [(1j, 1e-9), (1.73, 0.02), (0.44j, 0.02)])
def test_deg6_vertices(z, tol):
    assert A.deg6_family(z)[1].distinct_value_count(tol) == 2


def test_intro_identity():
    recs = {r.check: r for r in A.intro_report()}
    assert recs["p(1)-p(a)"].passed
    a = A.INTRO_A
    assert abs((a * a + 1) * (a - 1)) > 1  # a is a genuine fourth critical point
    p = A.intro_polynomial()
    assert abs(p.deriv()(a)) < 1e-12


def test_intro_displayed_values_follow_prefactor_five():
    # the expected approximations are reproduced by 5 times the primitive, not 6
    assert all(r.passed for r in A.intro_report(scale=5))
    assert not all(r.passed for r in A.intro_report(scale=6))


def test_report_records_serialize():
    d = A.intro_report()[0].as_dict()
    assert list(d) == ["check", "expected", "actual", "tolerance", "pass"]
    assert isinstance(d["pass"], bool)
    assert A.parse_complex(d["expected"]) == complex(-6.1, -0.4)


@pytest.mark.parametrize("text,z", [("1+2i", 1 + 2j), ("-0.5-1.25i", -0.5 - 1.25j), ("3", 3),
                                    ("2i", 2j), ("-i", -1j), ("1e-3+1e2i", 0.001 + 100j)])
def test_parse_complex(text, z):
    assert A.parse_complex(text) == z


@pytest.mark.parametrize("text", ["", "1+2j", "i+1", "1++2i", "abc"])
def test_parse_complex_rejects(text):
    with pytest.raises(UsageError):
        A.parse_complex(text)


@given(st.complex_numbers(max_magnitude=1e6, allow_nan=False, allow_infinity=False))
def test_complex_round_trip(z):
    assert abs(A.parse_complex(A.format_complex(z)) - z) <= 1e-12 * max(1, abs(z))
