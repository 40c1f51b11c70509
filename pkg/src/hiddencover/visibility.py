"""Exact visibility testing inside a simple polygon.

Visibility is closed: a segment that runs along the boundary or grazes a
reflex vertex still counts, because containment is tested against the closed
region.  Everything is decided with exact rational predicates.
"""

from __future__ import annotations

from fractions import Fraction

from .geometry import GeometryError, Point, cross_sign, on_segment
from .polygon import Polygon


class PointOutsidePolygonError(GeometryError):
    pass


def point_in_polygon(q: Point, poly: Polygon) -> bool:
    """Closed containment test: boundary points count as inside."""
    vs = poly.vertices
    n = len(vs)
    for i in range(n):
        if on_segment(vs[i], vs[(i + 1) % n], q):
            return True
    inside = False
    for i in range(n):
        a = vs[i]
        b = vs[(i + 1) % n]
        if (a.y > q.y) != (b.y > q.y):
            # exact x coordinate of the edge at height q.y
            x_cross = a.x + (q.y - a.y) * (b.x - a.x) / (b.y - a.y)
            if x_cross > q.x:
                inside = not inside
    return inside


def _contact_params(p: Point, q: Point, poly: Polygon) -> list[Fraction] | None:
    """Parameters in [0,1] where segment pq touches the boundary.

    Returns None when pq properly crosses some edge (definitely blocked).
    """
    params: list[Fraction] = []
    dx, dy = q.x - p.x, q.y - p.y
    for a, b in poly.edges():
        o1 = cross_sign(p, q, a)
        o2 = cross_sign(p, q, b)
        o3 = cross_sign(a, b, p)
        o4 = cross_sign(a, b, q)
        if o1 * o2 < 0 and o3 * o4 < 0:
            return None
        if o1 == 0 and o2 == 0:
            # collinear edge: record the overlap interval endpoints
            for c in (a, b):
                t = _param_on(p, dx, dy, c)
                if 0 <= t <= 1:
                    params.append(t)
            continue
        if o1 == 0 and on_segment(p, q, a):
            params.append(_param_on(p, dx, dy, a))
        if o2 == 0 and on_segment(p, q, b):
            params.append(_param_on(p, dx, dy, b))
        if o3 == 0 and on_segment(a, b, p):
            params.append(Fraction(0))
        if o4 == 0 and on_segment(a, b, q):
            params.append(Fraction(1))
    return params


def _param_on(p: Point, dx: Fraction, dy: Fraction, c: Point) -> Fraction:
    if dx != 0:
        return (c.x - p.x) / dx
    return (c.y - p.y) / dy


def sees(p: Point, q: Point, poly: Polygon) -> bool:
    """True iff the closed segment pq stays inside the closed polygon.

    Both points must lie in the closed region (raises otherwise).  The test
    finds every boundary contact of pq exactly and checks the midpoint of
    each gap between consecutive contacts for containment, so segments that
    graze reflex vertices or run along edges are handled correctly.
    """
    if not point_in_polygon(p, poly):
        raise PointOutsidePolygonError(f"{p} is outside the polygon")
    if not point_in_polygon(q, poly):
        raise PointOutsidePolygonError(f"{q} is outside the polygon")
    return _sees_unchecked(p, q, poly)


def _sees_unchecked(p: Point, q: Point, poly: Polygon) -> bool:
    if p == q:
        return True
    params = _contact_params(p, q, poly)
    if params is None:
        return False
    cuts = sorted(set(params) | {Fraction(0), Fraction(1)})
    dx, dy = q.x - p.x, q.y - p.y
    for t1, t2 in zip(cuts, cuts[1:]):
        tm = (t1 + t2) / 2
        mid = Point(p.x + tm * dx, p.y + tm * dy)
        if not point_in_polygon(mid, poly):
            return False
    return True


class VisibilityGraph:
    """Symmetric visibility relation over 1-based vertex indices."""

    def __init__(self, n: int, adjacent_pairs: set[frozenset[int]]):
        self.n = n
        self._pairs = adjacent_pairs

    def adjacent(self, i: int, j: int) -> bool:
        if i == j:
            return False
        return frozenset((i, j)) in self._pairs

    def missing_pairs(self) -> set[frozenset[int]]:
        """Vertex pairs that do NOT see each other."""
        out = set()
        for i in range(1, self.n + 1):
            for j in range(i + 1, self.n + 1):
                if not self.adjacent(i, j):
                    out.add(frozenset((i, j)))
        return out

    def neighbors(self, i: int) -> set[int]:
        return {j for j in range(1, self.n + 1) if self.adjacent(i, j)}


def visibility_graph(poly: Polygon) -> VisibilityGraph:
    """All-pairs vertex visibility; O(n^2) sees() calls (oracle machinery)."""
    n = poly.n
    vs = poly.vertices
    pairs: set[frozenset[int]] = set()
    for i in range(n):
        for j in range(i + 1, n):
            if j == i + 1 or (i == 0 and j == n - 1):
                pairs.add(frozenset((i + 1, j + 1)))  # boundary neighbours always see
            elif _sees_unchecked(vs[i], vs[j], poly):
                pairs.add(frozenset((i + 1, j + 1)))
    return VisibilityGraph(n, pairs)
