"""
Degree 5: where the critical-value triangle goes flat
======================================================

For p = 20 int (x^2-1)(x-b)(x-c) dx with 5bc = -1 the critical values
5b - 1/b, p(b) and p(c) are collinear exactly on the curve Q(x, y) = 0,
b = x + iy. Sample the curve, test collinearity, and locate the real
parameters where two critical values merge.
"""
import math

from zolotarev import analytic as A

pts = A.deg5_degeneracy_points(8)
for b in pts:
    tri = A.deg5_critical_triangle(b)
    print("b = %-30s middle value index %s" % (A.format_complex(b, 6), A.collinear_middle(*tri, 1e-6)))

# off the curve the triangle is honest
b = 0.7 + 0.7j
print("\nb = %s: Q = %.3g, middle %s" % (A.format_complex(b), A.deg5_degeneracy(b.real, b.imag),
                                         A.collinear_middle(*A.deg5_critical_triangle(b), 1e-6)))

r1, r2 = A.deg5_shabat_parameters()
print("\nreal parameters with p(b) = p(c): %.6f, %.6f" % (r1, r2))
for r in (r1, r2):
    print("  distinct critical values:", A.deg5_family(r)[1].distinct_value_count(1e-6))

# on the imaginary axis the inner factor of Q only touches zero at
# b = i/sqrt(5), where b and c collide
for y in (1 / math.sqrt(5), 1 / math.sqrt(3)):
    _, data = A.deg5_family(1j * y)
    print("b = %.6fi: inner Q %.3g, distinct values %d"
          % (y, A._q_inner(0, y), data.distinct_value_count(1e-6)))
