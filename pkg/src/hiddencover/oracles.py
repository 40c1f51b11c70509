"""Independent brute-force verification of solver output.

Everything here is exact.  Hot paths run on homogeneous integer coordinates
(x, y, w), each point carrying its own denominator, so predicates are pure
integer arithmetic regardless of how unrelated the rational coordinates'
denominators are (no global common denominator is ever formed).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import GeometryError, Point
from .polygon import Polygon
from .solvers import ConvexCover, CoverMode, HiddenSet, Solution
from .visibility import (
    PointOutsidePolygonError,
    _sees_unchecked,
    visibility_graph,
)


class BruteForceLimitError(GeometryError):
    pass


@dataclass(frozen=True)
class VerificationReport:
    valid: bool
    violations: tuple[tuple[str, object], ...]

    @staticmethod
    def from_violations(violations) -> "VerificationReport":
        vs = tuple(violations)
        return VerificationReport(valid=not vs, violations=vs)


# ---------------------------------------------------------------------------
# homogeneous integer kernel

def _hom(p: Point) -> tuple[int, int, int]:
    xd, yd = p.x.denominator, p.y.denominator
    if xd == 1 and yd == 1:
        return (p.x.numerator, p.y.numerator, 1)
    w = xd // math.gcd(xd, yd) * yd
    return (p.x.numerator * (w // xd), p.y.numerator * (w // yd), w)


def _hom_all(points) -> list[tuple[int, int, int]]:
    return [_hom(p) for p in points]


def _unhom(q) -> Point:
    return Point(Fraction(q[0], q[2]), Fraction(q[1], q[2]))


def _orient(a, b, q) -> int:
    """Sign of the affine cross product (b-a) x (q-a) for homogeneous points."""
    if a[2] == 1 and b[2] == 1 and q[2] == 1:
        d = (b[0] - a[0]) * (q[1] - a[1]) - (b[1] - a[1]) * (q[0] - a[0])
    else:
        d = (a[0] * (b[1] * q[2] - b[2] * q[1])
             - a[1] * (b[0] * q[2] - b[2] * q[0])
             + a[2] * (b[0] * q[1] - b[1] * q[0]))
    if d > 0:
        return 1
    if d < 0:
        return -1
    return 0


def _cmp_coord(a, b, axis: int) -> int:
    lhs = a[axis] * b[2]
    rhs = b[axis] * a[2]
    return (lhs > rhs) - (lhs < rhs)


def _on_hom_segment(a, b, q) -> bool:
    if _orient(a, b, q) != 0:
        return False
    for axis in (0, 1):
        ca, cb = _cmp_coord(q, a, axis), _cmp_coord(q, b, axis)
        if ca * cb > 0:
            return False
    return True


def _strict_cross(a, b, c, d) -> bool:
    """Strict transversal crossing of segments ab and cd."""
    o1 = _orient(a, b, c)
    o2 = _orient(a, b, d)
    if o1 == 0 or o2 == 0 or o1 == o2:
        return False
    o3 = _orient(c, d, a)
    o4 = _orient(c, d, b)
    return o3 != 0 and o4 != 0 and o3 != o4


def _floor_div(num: int, den: int) -> int:
    return num // den


def _ceil_div(num: int, den: int) -> int:
    return -((-num) // den)


def _hom_box(points) -> tuple[int, int, int, int]:
    """Conservative integer bounding box (floor/ceil of rational coords)."""
    x_lo = min(_floor_div(p[0], p[2]) for p in points)
    x_hi = max(_ceil_div(p[0], p[2]) for p in points)
    y_lo = min(_floor_div(p[1], p[2]) for p in points)
    y_hi = max(_ceil_div(p[1], p[2]) for p in points)
    return (x_lo, x_hi, y_lo, y_hi)


def _midpoint_hom(a, b):
    if a[2] == 1 and b[2] == 1:
        return (a[0] + b[0], a[1] + b[1], 2)
    return (a[0] * b[2] + b[0] * a[2], a[1] * b[2] + b[1] * a[2], 2 * a[2] * b[2])


class _IntervalBuckets:
    """Constant-time 1-D interval prefilter (used on the y axis: funnel and
    pseudotriangle pieces tile into narrow bands along the chains)."""

    def __init__(self, intervals):
        lo = min(iv[0] for iv in intervals)
        hi = max(iv[1] for iv in intervals)
        self.lo = lo
        span = max(1, hi - lo)
        self.cell = max(1, span // max(1, len(intervals)))
        self.nbuckets = span // self.cell + 2
        self.buckets: list[list[int]] = [[] for _ in range(self.nbuckets)]
        for idx, (iv_lo, iv_hi) in enumerate(intervals):
            first = max(0, (iv_lo - lo) // self.cell)
            last = min(self.nbuckets - 1, (iv_hi - lo) // self.cell)
            for b in range(first, last + 1):
                self.buckets[b].append(idx)

    def candidates(self, q_lo: int, q_hi: int):
        first = max(0, (q_lo - self.lo) // self.cell)
        last = min(self.nbuckets - 1, (q_hi - self.lo) // self.cell)
        if first > last:
            return ()
        if first == last:
            return self.buckets[first]
        out: list[int] = []
        seen = set()
        for b in range(first, last + 1):
            for idx in self.buckets[b]:
                if idx not in seen:
                    seen.add(idx)
                    out.append(idx)
        return out


class _HomRing:
    """Polygon ring in homogeneous coordinates with a y-bucket edge index."""

    def __init__(self, points: list[tuple[int, int, int]]):
        self.ring = points
        n = len(points)
        self.edges = [(points[i], points[(i + 1) % n]) for i in range(n)]
        self.all_int = all(p[2] == 1 for p in points)
        intervals = []
        for a, b in self.edges:
            lo = min(_floor_div(a[1], a[2]), _floor_div(b[1], b[2]))
            hi = max(_ceil_div(a[1], a[2]), _ceil_div(b[1], b[2]))
            intervals.append((lo, hi))
        self.intervals = intervals
        self.index = _IntervalBuckets(intervals)

    def contains(self, q) -> bool:
        """Closed point-in-polygon; only edges near q's y are examined."""
        if q[2] == 1 and self.all_int:
            return self._contains_int(q[0], q[1])
        qy_lo = _floor_div(q[1], q[2])
        parity = 0
        for e in self.index.candidates(qy_lo, _ceil_div(q[1], q[2])):
            a, b = self.edges[e]
            if _on_hom_segment(a, b, q):
                return True
            ca = _cmp_coord(a, q, 1)
            cb = _cmp_coord(b, q, 1)
            if ca <= 0 < cb:       # upward edge, half-open rule
                if _orient(a, b, q) > 0:
                    parity ^= 1
            elif cb <= 0 < ca:     # downward edge
                if _orient(a, b, q) < 0:
                    parity ^= 1
        return parity == 1

    def _contains_int(self, qx: int, qy: int) -> bool:
        # inlined integer-only version of contains (hot in sampling)
        parity = 0
        for e in self.index.candidates(qy, qy):
            (ax, ay, _), (bx, by, _) = self.edges[e]
            if ay == qy and ax == qx:
                return True  # exactly at a vertex (covers local maxima)
            up = ay <= qy
            if up == (by <= qy):
                if ay == qy and by == qy and min(ax, bx) <= qx <= max(ax, bx):
                    return True
                continue
            cr = (bx - ax) * (qy - ay) - (by - ay) * (qx - ax)
            if cr == 0:
                return True
            if up:
                if cr > 0:
                    parity ^= 1
            elif cr < 0:
                parity ^= 1
        return parity == 1

    def area2(self) -> Fraction:
        s = Fraction(0)
        ring = self.ring
        n = len(ring)
        for i in range(n):
            a, b = ring[i], ring[(i + 1) % n]
            s += Fraction(a[0] * b[1] - b[0] * a[1], a[2] * b[2])
        return abs(s)


# ---------------------------------------------------------------------------
# hidden-set validity

def check_hidden_set(poly: Polygon, hidden: HiddenSet) -> VerificationReport:
    """All-pairs invisibility check via sees().

    Most blocked pairs are confirmed in O(1): a segment leaving a boundary
    point into the exterior side of its own edge (or exterior wedge of its
    own vertex) cannot stay inside, and otherwise a transversally-crossing
    boundary edge is searched outward from each point's location.  Only the
    remaining pairs run the full exact visibility test.
    """
    pts = list(hidden.points)
    n = poly.n
    ring = _hom_all(poly.vertices)
    hom_ring = _HomRing(ring)
    qs = _hom_all(pts)
    edges = hom_ring.edges
    vertex_at = {v: i for i, v in enumerate(ring)}
    loc: list[int] = []
    exits: list = []
    for raw, q in zip(pts, qs):
        vid = vertex_at.get(q)
        if vid is not None:
            loc.append(vid)
            exits.append(("vertex", vid))
            continue
        at = None
        for e in range(n):
            if _on_hom_segment(edges[e][0], edges[e][1], q):
                at = e
                break
        if at is None:
            if not hom_ring.contains(q):
                raise PointOutsidePolygonError(f"hidden point {raw} outside the polygon")
            loc.append(0)
            exits.append(None)
        else:
            loc.append(at)
            exits.append(("edge", at))

    def reflex_vertex(v: int) -> bool:
        return _orient(ring[v - 1], ring[v], ring[(v + 1) % n]) > 0

    def exits_immediately(i: int, q) -> bool:
        tag = exits[i]
        if tag is None:
            return False
        kind, idx = tag
        if kind == "edge":
            a, b = edges[idx]
            return _orient(a, b, q) > 0
        prev_edge, next_edge = edges[(idx - 1) % n], edges[idx]
        left_prev = _orient(prev_edge[0], prev_edge[1], q) > 0
        left_next = _orient(next_edge[0], next_edge[1], q) > 0
        if reflex_vertex(idx):
            return left_prev and left_next
        return left_prev or left_next

    violations = []
    m = len(pts)
    for i in range(m):
        for j in range(i + 1, m):
            if exits_immediately(i, qs[j]) or exits_immediately(j, qs[i]):
                continue
            if _blocked_nearby(edges, n, qs[i], qs[j], loc[i], loc[j]):
                continue
            if _sees_unchecked(pts[i], pts[j], poly):
                violations.append(("visible-pair", (pts[i], pts[j])))
    return VerificationReport.from_violations(violations)


def _blocked_nearby(edges, n, a, b, la, lb) -> bool:
    seen = set()
    for d in range(n):
        for base, sign in ((la, 1), (la, -1), (lb, 1), (lb, -1)):
            e = (base + sign * d) % n
            if e in seen:
                continue
            seen.add(e)
            c, dd = edges[e]
            if _strict_cross(a, b, c, dd):
                return True
        if len(seen) == n:
            return False
    return False


# ---------------------------------------------------------------------------
# convex-piece primitives (homogeneous tuples)

def _piece_area2(vs) -> Fraction:
    s = Fraction(0)
    for i in range(len(vs)):
        a, b = vs[i], vs[(i + 1) % len(vs)]
        s += Fraction(a[0] * b[1] - b[0] * a[1], a[2] * b[2])
    return s


def _piece_convex(vs) -> bool:
    """Clockwise weak convexity: no left turn, no reversal, positive area."""
    k = len(vs)
    if k < 3 or len(set(vs)) != k:
        return False
    for i in range(k):
        a, b, c = vs[i - 1], vs[i], vs[(i + 1) % k]
        cr = _orient(a, b, c)
        if cr > 0:
            return False
        if cr == 0:
            # collinear: forbid doubling back (common positive denominator)
            dot = ((b[0] * a[2] - a[0] * b[2]) * (c[0] * b[2] - b[0] * c[2])
                   + (b[1] * a[2] - a[1] * b[2]) * (c[1] * b[2] - b[1] * c[2]))
            if dot <= 0:
                return False
    return _piece_area2(vs) < 0  # clockwise


def _point_in_convex(vs, q, strict: bool = False) -> bool:
    for i in range(len(vs)):
        cr = _orient(vs[i], vs[(i + 1) % len(vs)], q)
        if cr > 0 or (strict and cr == 0):
            return False
    return True


def _centroid_hom(vs):
    cx = Fraction(0)
    cy = Fraction(0)
    for x, y, w in vs:
        cx += Fraction(x, w)
        cy += Fraction(y, w)
    k = len(vs)
    return _hom(Point(cx / k, cy / k))


def _piece_inside_poly(vs, box, hom_ring: _HomRing, edge_index, edge_boxes) -> bool:
    k = len(vs)
    for e in edge_index.candidates(box[2], box[3]):
        eb = edge_boxes[e]
        if eb[0] > box[1] or eb[1] < box[0] or eb[2] > box[3] or eb[3] < box[2]:
            continue
        c, d = hom_ring.edges[e]
        for i in range(k):
            if _strict_cross(vs[i], vs[(i + 1) % k], c, d):
                return False
        if _point_in_convex(vs, c, strict=True):
            return False
    return hom_ring.contains(_centroid_hom(vs))


def _interiors_overlap(vs1, b1, vs2, b2) -> bool:
    if b1[0] >= b2[1] or b2[0] >= b1[1] or b1[2] >= b2[3] or b2[2] >= b1[3]:
        return False
    for i in range(len(vs1)):
        for j in range(len(vs2)):
            if _strict_cross(vs1[i], vs1[(i + 1) % len(vs1)],
                             vs2[j], vs2[(j + 1) % len(vs2)]):
                return True
    for v in vs1:
        if _point_in_convex(vs2, v, strict=True):
            return True
    for v in vs2:
        if _point_in_convex(vs1, v, strict=True):
            return True
    for vs_a, vs_b in ((vs1, vs2), (vs2, vs1)):
        if _point_in_convex(vs_b, _centroid_hom(vs_a), strict=True):
            return True
    return False


_DIRECT_DISJOINT_LIMIT = 80
_SAMPLE_SEED = 322407991
_SAMPLE_GRID = 1024


def interior_samples(poly: Polygon, count: int, seed: int = _SAMPLE_SEED) -> list[Point]:
    """Deterministic pseudo-random points in the closed polygon (rejection
    sampling from the bounding box on a fixed rational grid)."""
    rng = random.Random(seed)
    g = _SAMPLE_GRID
    hom = _hom_all(poly.vertices)
    if all(v[2] == 1 for v in hom):
        # integer polygon: work on the g-times grid so queries stay w == 1
        hom_ring = _HomRing([(x * g, y * g, 1) for x, y, _ in hom])
        query_w = 1
        box = _hom_box(hom)
        x_lo, x_hi, y_lo, y_hi = (box[0] * g, box[1] * g, box[2] * g, box[3] * g)
    else:
        hom_ring = _HomRing(hom)
        query_w = g
        box = _hom_box(hom)
        x_lo, x_hi, y_lo, y_hi = (box[0] * g, box[1] * g, box[2] * g, box[3] * g)
    out: list[Point] = []
    attempts = 0
    limit = max(400, count * 80)
    x_span = x_hi - x_lo + 1
    y_span = y_hi - y_lo + 1
    rnd = rng.random
    contains = hom_ring.contains
    while len(out) < count and attempts < limit:
        attempts += 1
        qx = x_lo + int(rnd() * x_span)
        qy = y_lo + int(rnd() * y_span)
        if contains((qx, qy, query_w)):
            out.append(Point(Fraction(qx, g), Fraction(qy, g)))
    return out


def check_cover(poly: Polygon, cover: ConvexCover, samples: int = 1000) -> VerificationReport:
    """Full-cover validity: every piece convex and inside the polygon, pieces
    pairwise interior-disjoint, union equal to the polygon.

    Union equality is certified exactly by the piece-area sum (sound because
    containment and disjointness hold for a valid decomposition); coverage is
    additionally probed at all polygon vertices, edge midpoints, piece
    corners and `samples` deterministic interior points.  Pairwise
    disjointness is tested directly up to a piece-count limit, beyond which
    the exact area certificate plus containment implies it.
    """
    if cover.mode is not CoverMode.FULL:
        raise ValueError("check_cover expects a full-cover; use check_vertex_cover")
    hom_ring = _HomRing(_hom_all(poly.vertices))
    piece_hom = [_hom_all(piece.vertices) for piece in cover.pieces]
    violations = list(_check_pieces_inside(hom_ring, piece_hom))

    area2 = sum((abs(_piece_area2(vs)) for vs in piece_hom), Fraction(0))
    poly_area2 = hom_ring.area2()
    if area2 != poly_area2:
        violations.append(("area-mismatch", (area2 / 2, poly_area2 / 2)))

    bad = {idx for kind, idx in violations if kind in ("non-convex-piece", "piece-not-inside")}
    good = [i for i in range(len(piece_hom)) if i not in bad]
    pboxes = [_hom_box(vs) for vs in piece_hom]
    if len(good) <= _DIRECT_DISJOINT_LIMIT:
        for ii in range(len(good)):
            for jj in range(ii + 1, len(good)):
                gi, gj = good[ii], good[jj]
                if _interiors_overlap(piece_hom[gi], pboxes[gi],
                                      piece_hom[gj], pboxes[gj]):
                    violations.append(("overlapping-pieces", (gi, gj)))

    targets = list(hom_ring.ring)
    n = len(hom_ring.ring)
    for i in range(n):
        targets.append(_midpoint_hom(hom_ring.ring[i], hom_ring.ring[(i + 1) % n]))
    for vs in piece_hom:
        targets.extend(vs)
    sample_pts = interior_samples(poly, samples)
    targets.extend(_hom_all(sample_pts))

    if piece_hom:
        piece_index = _IntervalBuckets([(b[2], b[3]) for b in pboxes])
    for q in targets:
        hit = False
        if piece_hom:
            qy_lo = _floor_div(q[1], q[2])
            qy_hi = _ceil_div(q[1], q[2])
            for idx in piece_index.candidates(qy_lo, qy_hi):
                bx = pboxes[idx]
                if qy_hi < bx[2] or qy_lo > bx[3]:
                    continue
                if _point_in_convex(piece_hom[idx], q):
                    hit = True
                    break
        if not hit:
            violations.append(("uncovered-point", _unhom(q)))
    return VerificationReport.from_violations(violations)


def _check_pieces_inside(hom_ring: _HomRing, piece_hom):
    edge_boxes = []
    for a, b in hom_ring.edges:
        edge_boxes.append((min(_floor_div(a[0], a[2]), _floor_div(b[0], b[2])),
                           max(_ceil_div(a[0], a[2]), _ceil_div(b[0], b[2])),
                           min(_floor_div(a[1], a[2]), _floor_div(b[1], b[2])),
                           max(_ceil_div(a[1], a[2]), _ceil_div(b[1], b[2]))))
    edge_index = _IntervalBuckets([(b[2], b[3]) for b in edge_boxes])
    for idx, vs in enumerate(piece_hom):
        if not _piece_convex(vs):
            yield ("non-convex-piece", idx)
        elif not _piece_inside_poly(vs, _hom_box(vs), hom_ring, edge_index, edge_boxes):
            yield ("piece-not-inside", idx)


def check_vertex_cover(poly: Polygon, cover: ConvexCover) -> VerificationReport:
    """Vertex-cover validity: pieces convex and inside the polygon, and every
    polygon vertex contained in at least one piece."""
    if cover.mode is not CoverMode.VERTEX:
        raise ValueError("check_vertex_cover expects a vertex-cover")
    hom_ring = _HomRing(_hom_all(poly.vertices))
    piece_hom = [_hom_all(piece.vertices) for piece in cover.pieces]
    violations = list(_check_pieces_inside(hom_ring, piece_hom))
    bad = {idx for kind, idx in violations}
    usable = [vs for i, vs in enumerate(piece_hom) if i not in bad]
    for i, q in enumerate(hom_ring.ring):
        if not any(_point_in_convex(vs, q) for vs in usable):
            violations.append(("uncovered-vertex", i + 1))
    return VerificationReport.from_violations(violations)


# ---------------------------------------------------------------------------
# exact maximum hidden vertex set

def brute_force_hvs(poly: Polygon, limit: int = 18) -> tuple[int, tuple[int, ...]]:
    """Exact maximum independent set of the visibility graph by depth-first
    branch and bound with a remaining-count bound; returns (size, 1-based
    indices) of the lexicographically smallest optimum."""
    n = poly.n
    if n > limit:
        raise BruteForceLimitError(f"n={n} exceeds brute-force limit {limit}")
    graph = visibility_graph(poly)
    adj = [0] * n
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i != j and graph.adjacent(i, j):
                adj[i - 1] |= 1 << (j - 1)

    best_size = -1
    best_set: tuple[int, ...] = ()

    def dfs(idx: int, chosen: list[int], forbidden: int):
        nonlocal best_size, best_set
        if len(chosen) + (n - idx) <= best_size:
            return
        if idx == n:
            if len(chosen) > best_size:
                best_size = len(chosen)
                best_set = tuple(chosen)
            return
        if not forbidden & (1 << idx):
            chosen.append(idx)
            dfs(idx + 1, chosen, forbidden | adj[idx])
            chosen.pop()
        dfs(idx + 1, chosen, forbidden)

    dfs(0, [], 0)
    return best_size, tuple(i + 1 for i in best_set)


# ---------------------------------------------------------------------------
# homestead certification

def certify_homestead(poly: Polygon, sol: Solution, samples: int = 1000) -> VerificationReport:
    """Accepts iff the hidden set is valid, the cover is valid in its mode and
    the two have equal size.

    A hidden set can never outnumber a convex cover (no two hidden points fit
    in one convex piece), so equality pins both at the shared optimum: the
    polygon is certified as one where the two quantities coincide.
    """
    violations = list(check_hidden_set(poly, sol.hidden).violations)
    if sol.cover.mode is CoverMode.FULL:
        violations.extend(check_cover(poly, sol.cover, samples=samples).violations)
    else:
        violations.extend(check_vertex_cover(poly, sol.cover).violations)
    if len(sol.hidden) != len(sol.cover):
        violations.append(("cardinality-mismatch", (len(sol.hidden), len(sol.cover))))
    return VerificationReport.from_violations(violations)
