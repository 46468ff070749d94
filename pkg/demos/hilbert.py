"""Walking across the determinant divisor on a two-point chart."""

from thinflat.hilbert import classify_point, point_to_series, t2_point
from thinflat.series import syntactic_algebra

for a in [(0, 1), (1, 0), (2, 3), (0, 0)]:
    p = t2_point(a)
    c = classify_point(p)
    z = point_to_series(p)
    print(f"a={a}: det={c.det} m={c.m} on divisor={c.in_Dk} series={z} d={syntactic_algebra(z).d}")
