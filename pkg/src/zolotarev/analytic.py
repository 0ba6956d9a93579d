r"""
Numeric checks on explicit Zolotarev families.

* degree 5: `p = 20\int (x^2-1)(x-b)(x-c)\,dx` with `5bc = -1`, and the
  curve in the `b = x + iy` plane where the critical-value triangle is flat;
* degree 6: `p = \int (x^2-1)(x^2+ax+b)(x-c)\,dx` on its rational
  parametrisation by `z`;
* the degree-5 example `p = 6\int (x^2+1)(x-1)(x-a)\,dx`.

Integration constants are 0 throughout; every claim compares
differences of critical values.
"""
import cmath
import math
import re
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from scipy.optimize import bisect

from .errors import DomainError, UsageError, VerificationFailure

IDENTITY_RTOL = 1e-9

# Inner factor of the flat-triangle curve; the full polynomial is x*y times this.
# (coefficient, power of x, power of y)
Q_TERMS = (
    (15625, 14, 0), (78125, 12, 2), (140625, 10, 4), (78125, 8, 6),
    (-78125, 6, 8), (-140625, 4, 10), (-78125, 2, 12), (-15625, 0, 14),
    (-26250, 12, 0), (-142500, 10, 2), (-333750, 8, 4), (-435000, 6, 6),
    (-333750, 4, 8), (-142500, 2, 10), (-26250, 0, 12),
    (5775, 10, 0), (16125, 8, 2), (10350, 6, 4), (-10350, 4, 6),
    (-16125, 2, 8), (-5775, 0, 10),
    (4660, 8, 0), (20480, 6, 2), (31512, 4, 4), (20480, 2, 6), (4660, 0, 8),
    (231, 6, 0), (183, 4, 2), (-183, 2, 4), (-231, 0, 6),
    (-42, 4, 0), (-60, 2, 2), (-42, 0, 4),
    (1, 2, 0), (-1, 0, 2),
)


def format_complex(z, digits=12):
    z = complex(z)
    re_, im_ = round(z.real, digits) + 0.0, round(z.imag, digits) + 0.0
    return "%s%s%si" % (repr(re_), "-" if math.copysign(1, im_) < 0 else "+", repr(abs(im_)))


def parse_complex(text):
    """Parse ``"a+bi"``, ``"a-bi"``, ``"bi"`` or ``"a"`` (decimal reals)."""
    s = text.strip().replace(" ", "")
    if not re.fullmatch(r"[+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?([+-](\d+\.?\d*|\.\d+)?([eE][+-]?\d+)?i)?"
                        r"|[+-]?(\d+\.?\d*|\.\d+)?([eE][+-]?\d+)?i", s):
        raise UsageError("not a complex literal: %r" % text)
    try:
        return complex(s.replace("i", "j"))
    except ValueError:
        raise UsageError("not a complex literal: %r" % text) from None


@dataclass(frozen=True)
class CriticalData:
    points: tuple
    values: tuple

    def distinct_value_count(self, tol):
        """Number of clusters of critical values, joining values within ``tol``."""
        vals = list(self.values)
        parent = list(range(len(vals)))

        def find(i):
            while parent[i] != i:
                i = parent[i]
            return i
        for i in range(len(vals)):
            for j in range(i + 1, len(vals)):
                if abs(vals[i] - vals[j]) <= tol:
                    parent[find(i)] = find(j)
        return len({find(i) for i in range(len(vals))})


def antiderivative(*factors, scale=1):
    """``scale`` times the primitive (constant 0) of a product of polynomials.

    Factors are coefficient sequences in ascending order.
    """
    prod = Polynomial([1])
    for f in factors:
        prod = prod * Polynomial(np.asarray(f, dtype=complex))
    return (scale * prod).integ()


def _close(u, v, rtol=IDENTITY_RTOL):
    return abs(u - v) <= rtol * max(1.0, abs(u), abs(v))


def deg5_closed_forms(b):
    """Critical values at ``1`` (equal to that at ``-1``), ``b`` and ``c = -1/(5b)``."""
    return (5 * b - 1 / b,
            -b ** 5 + 3 * b ** 3 + 2 * b,
            1 / (3125 * b ** 5) - 3 / (125 * b ** 3) - 2 / (5 * b))


def deg5_family(b):
    """Polynomial and critical data of the degree-5 family at parameter ``b``."""
    b = complex(b)
    if b == 0:
        raise DomainError("b = 0 is outside the family")
    c = -1 / (5 * b)
    p = antiderivative([-1, 0, 1], [-b, 1], [-c, 1], scale=20)
    pts = (1, -1, b, c)
    vals = tuple(complex(p(t)) for t in pts)
    v1, vb, vc = deg5_closed_forms(b)
    for direct, closed, what in ((vals[0], v1, "p(1)"), (vals[1], v1, "p(-1)"),
                                 (vals[2], vb, "p(b)"), (vals[3], vc, "p(c)")):
        if not _close(direct, closed):
            raise VerificationFailure("%s: closed form %r != direct %r" % (what, closed, direct))
    return p, CriticalData(tuple(complex(t) for t in pts), vals)


def _q_inner(x, y, terms=None):
    terms = Q_TERMS if terms is None else terms
    return math.fsum(c * x ** i * y ** j for c, i, j in terms)


def deg5_degeneracy(x, y, terms=None):
    """The flat-triangle polynomial at ``b = x + iy`` (``x*y`` factor included)."""
    return x * y * _q_inner(x, y, terms)


def deg5_degeneracy_scale(x, y, terms=None):
    """Sum of absolute term values; the natural size to judge ``|Q|`` against."""
    terms = Q_TERMS if terms is None else terms
    return abs(x * y) * math.fsum(abs(c * x ** i * y ** j) for c, i, j in terms)


def collinear_middle(v1, v2, v3, tol):
    """Index of the value strictly between the other two, if the three are collinear.

    Collinearity is judged by the cross product normalised by the squared
    length of the outer segment.
    """
    vs = (complex(v1), complex(v2), complex(v3))
    for i in range(3):
        for j in range(i + 1, 3):
            if abs(vs[i] - vs[j]) <= tol * max(1.0, abs(vs[i]), abs(vs[j])):
                raise VerificationFailure("critical values %d and %d nearly coincide" % (i, j))
    for mid in range(3):
        a, b = (vs[k] for k in range(3) if k != mid)
        seg = b - a
        w = (vs[mid] - a) * seg.conjugate() / abs(seg) ** 2
        if abs(w.imag) <= tol and 0 < w.real < 1:
            return mid
    return None


def deg5_critical_triangle(b):
    """The three distinct critical values of the degree-5 family."""
    v1, vb, vc = deg5_closed_forms(complex(b))
    return v1, vb, vc


def deg5_shabat_parameters(lo=0.02, hi=3.0, steps=3000):
    """Positive real ``b`` where ``p(b) = p(c)``; expected two of them."""
    def f(t):
        _, vb, vc = deg5_closed_forms(t)
        return (vb - vc).real
    grid = np.linspace(lo, hi, steps + 1)
    fv = [f(t) for t in grid]
    roots = []
    for t0, t1, f0, f1 in zip(grid, grid[1:], fv, fv[1:]):
        if f0 == 0:
            roots.append(float(t0))
        elif f0 * f1 < 0:
            roots.append(bisect(f, t0, t1, xtol=1e-12, rtol=4 * np.finfo(float).eps))
    if len(roots) != 2:
        raise VerificationFailure("expected two positive Shabat parameters, found %d" % len(roots))
    return tuple(roots)


def deg5_degeneracy_points(count, r_min=0.05, r_max=3.0, samples=600, seed=0):
    """Points of the flat-triangle curve off the axes, by bisection along rays.

    Rays start at the origin at pseudo-random angles; each sign change of
    the inner factor along a ray is refined by bisection.
    """
    rng = np.random.default_rng(seed)
    out = []
    for _ in range(50 * count):
        if len(out) == count:
            break
        theta = rng.uniform(0.05, math.pi / 2 - 0.05) + rng.integers(4) * math.pi / 2

        def g(r):
            return _q_inner(r * math.cos(theta), r * math.sin(theta))
        rs = np.linspace(r_min, r_max, samples)
        gs = [g(r) for r in rs]
        for r0, r1, g0, g1 in zip(rs, rs[1:], gs, gs[1:]):
            if g0 * g1 < 0:
                r = bisect(g, r0, r1, xtol=1e-14)
                out.append(complex(r * math.cos(theta), r * math.sin(theta)))
                break
    if len(out) < count:
        raise VerificationFailure("found only %d of %d curve points" % (len(out), count))
    return out


def deg6_coefficients(z):
    z = complex(z)
    if z == 0 or abs(5 * z * z - 3) == 0:
        raise DomainError("z = %s is a pole of the parametrisation" % format_complex(z))
    s3 = math.sqrt(3)
    return (s3 * (z * z + 1) / (2 * z),
            (z * z - 1) / 2,
            s3 * (z * z + 1) / (z * (5 * z * z - 3)))


def deg6_family(z, check=True):
    """Polynomial and critical data of the degree-6 family at parameter ``z``.

    Critical points are ordered ``1, -1, r1, r2, c`` with ``r1, r2`` the
    roots of ``x^2 + a x + b``.
    """
    a, b, c = deg6_coefficients(z)
    p = antiderivative([-1, 0, 1], [b, a, 1], [-c, 1])
    disc = cmath.sqrt(a * a - 4 * b)
    r1, r2 = (-a + disc) / 2, (-a - disc) / 2
    pts = (1, -1, r1, r2, c)
    vals = tuple(complex(p(t)) for t in pts)
    if check:
        if not _close(vals[0], vals[1]):
            raise VerificationFailure("p(1) != p(-1) at z = %s" % format_complex(z))
        if not _close(vals[2], vals[3]):
            raise VerificationFailure("quadratic roots disagree at z = %s" % format_complex(z))
    return p, CriticalData(tuple(complex(t) for t in pts), vals)


INTRO_A = complex(-2 / 3, math.sqrt(35) / 3)
INTRO_DISPLAYED = (("p(i)", 1j, complex(-6.1, -0.4)),
                   ("p(-i)", -1j, complex(7, 5.3)),
                   ("p(1)", 1, complex(-3, 5.7)),
                   ("p(a)", INTRO_A, complex(-3, 5.7)))


def intro_polynomial(scale=6):
    return antiderivative([1, 0, 1], [-1, 1], [-INTRO_A, 1], scale=scale)


@dataclass(frozen=True)
class CheckRecord:
    check: str
    expected: object
    actual: object
    tolerance: float
    passed: bool

    def as_dict(self):
        def fmt(v):
            return format_complex(v) if isinstance(v, complex) else v
        return {"check": self.check, "expected": fmt(self.expected), "actual": fmt(self.actual),
                "tolerance": self.tolerance, "pass": self.passed}


def intro_report(scale=6):
    """Check records for the degree-5 example, without raising."""
    p = intro_polynomial(scale)
    recs = []
    for name, t, shown in INTRO_DISPLAYED:
        v = complex(p(t))
        recs.append(CheckRecord(name, shown, v, 0.1, bool(abs(v - shown) <= 0.1)))
    d = complex(p(1) - p(INTRO_A))
    recs.append(CheckRecord("p(1)-p(a)", 0j, d, IDENTITY_RTOL,
                            bool(abs(d) <= IDENTITY_RTOL * max(1.0, abs(p(1))))))
    return recs


def verify_intro_example(scale=6):
    recs = intro_report(scale)
    bad = [r.check for r in recs if not r.passed]
    if bad:
        raise VerificationFailure("example values off: " + ", ".join(bad))
    return recs
