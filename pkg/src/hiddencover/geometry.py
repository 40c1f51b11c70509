"""Exact rational planar primitives: points, orientation, ray/segment intersection.

All arithmetic is arbitrary-precision rational (fractions.Fraction); there is no
floating-point path anywhere, so every predicate is decided exactly.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

Rational = Fraction


class GeometryError(Exception):
    pass


class CollinearOverlapError(GeometryError):
    """Ray and edge lie on the same line and overlap in more than a point."""


class DegenerateSegmentError(GeometryError):
    pass


def parse_rational(text: str) -> Fraction:
    """Parse 'a' or 'a/b' into a canonical Fraction."""
    text = text.strip()
    if "/" in text:
        num, den = text.split("/", 1)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


@dataclass(frozen=True)
class Point:
    x: Fraction
    y: Fraction

    def __repr__(self) -> str:
        return f"Point({format_rational(self.x)}, {format_rational(self.y)})"


def pt(x, y) -> Point:
    """Point from ints, Fractions or 'a/b' strings."""
    if isinstance(x, str):
        x = parse_rational(x)
    if isinstance(y, str):
        y = parse_rational(y)
    return Point(Fraction(x), Fraction(y))


class Orientation(enum.Enum):
    LEFT = 1
    COLLINEAR = 0
    RIGHT = -1


def cross_sign(a: Point, b: Point, c: Point) -> int:
    """Sign of the exact cross product (b - a) x (c - a)."""
    d = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x)
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def orientation(a: Point, b: Point, c: Point) -> Orientation:
    """Side of c relative to the directed line a->b.

    LEFT means a counter-clockwise turn is made at b on the chain a,b,c;
    COLLINEAR iff the cross product is exactly zero.
    """
    return Orientation(cross_sign(a, b, c))


def midpoint(a: Point, b: Point) -> Point:
    return Point((a.x + b.x) / 2, (a.y + b.y) / 2)


def on_segment(a: Point, b: Point, q: Point) -> bool:
    """True iff q lies on the closed segment ab (exact)."""
    if cross_sign(a, b, q) != 0:
        return False
    return (min(a.x, b.x) <= q.x <= max(a.x, b.x)
            and min(a.y, b.y) <= q.y <= max(a.y, b.y))


def ray_edge_intersection(origin: Point, through: Point,
                          edge: tuple[Point, Point]) -> Point | None:
    """Intersection of the ray origin->through, strictly beyond `through`,
    with the closed segment `edge`.

    Returns None when the ray misses the edge, meets it not strictly beyond
    `through`, or is parallel to it.  Raises CollinearOverlapError when ray
    and edge are collinear and share more than a point, because there is no
    unique intersection to report.
    """
    if origin == through:
        raise DegenerateSegmentError("ray needs two distinct points")
    c, d = edge
    rx, ry = through.x - origin.x, through.y - origin.y
    ex, ey = d.x - c.x, d.y - c.y
    denom = rx * ey - ry * ex
    if denom == 0:
        if cross_sign(origin, through, c) == 0:
            # Collinear: overlap unless the edge sits behind/at `through`.
            beyond_c = _ray_param(origin, through, c) > 1
            beyond_d = _ray_param(origin, through, d) > 1
            if beyond_c or beyond_d:
                raise CollinearOverlapError("ray and edge overlap")
        return None
    # origin + t*(through-origin) == c + u*(d-c)
    acx, acy = c.x - origin.x, c.y - origin.y
    t = (acx * ey - acy * ex) / denom
    u = (acx * ry - acy * rx) / denom
    if t <= 1 or u < 0 or u > 1:
        return None
    return Point(origin.x + t * rx, origin.y + t * ry)


def _ray_param(origin: Point, through: Point, q: Point) -> Fraction:
    # q assumed collinear with origin->through
    if through.x != origin.x:
        return (q.x - origin.x) / (through.x - origin.x)
    return (q.y - origin.y) / (through.y - origin.y)


def segments_properly_intersect(s1: tuple[Point, Point],
                                s2: tuple[Point, Point]) -> bool:
    """True iff the closed segments share a point interior to at least one.

    Touching only at an endpoint of both segments is not an intersection;
    collinear overlap of positive length is.
    """
    a, b = s1
    c, d = s2
    if a == b or c == d:
        raise DegenerateSegmentError("zero-length segment")
    o1 = cross_sign(c, d, a)
    o2 = cross_sign(c, d, b)
    o3 = cross_sign(a, b, c)
    o4 = cross_sign(a, b, d)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    # Collinear configurations: positive-length overlap counts.
    if o1 == o2 == o3 == o4 == 0:
        lo1, hi1 = _segment_interval(a, b)
        lo2, hi2 = _segment_interval(c, d)
        lo = max(lo1, lo2)
        hi = min(hi1, hi2)
        return lo < hi
    # T-contact: an endpoint of one in the interior of the other.
    if o1 == 0 and _strictly_between(c, d, a):
        return True
    if o2 == 0 and _strictly_between(c, d, b):
        return True
    if o3 == 0 and _strictly_between(a, b, c):
        return True
    if o4 == 0 and _strictly_between(a, b, d):
        return True
    return False


def _segment_interval(a: Point, b: Point):
    # 1-D shadow of a collinear family, using the dominant axis
    if a.x != b.x:
        return (min(a.x, b.x), max(a.x, b.x))
    return (min(a.y, b.y), max(a.y, b.y))


def _strictly_between(a: Point, b: Point, q: Point) -> bool:
    # q collinear with ab assumed
    if a.x != b.x:
        return min(a.x, b.x) < q.x < max(a.x, b.x)
    return min(a.y, b.y) < q.y < max(a.y, b.y)
