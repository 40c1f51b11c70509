"""Hidden-set and convex-cover solvers.

Three algorithm families: the exact funnel solver (hidden midpoints plus a
quad strip / triangle fan, with edge-extension clipping and iteration on the
shrinking window), its hidden-vertex-set adaptation (parity-based placement,
no Steiner points), and the pseudotriangle 2-approximation that splits along
the extension of e_1 into two funnels.

The funnel recursion is a loop over an index window into a working vertex
array; each clip replaces one array slot with the synthetic point p.  Both
chains are treated symmetrically, so no mirroring of the input is needed.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (
    GeometryError,
    Point,
    cross_sign,
    midpoint,
    ray_edge_intersection,
)
from .polygon import (
    FunnelPolygon,
    NotAPseudotriangleError,
    Polygon,
    Pseudotriangle,
)


class InternalGeometryError(GeometryError):
    """A state the algorithm's correctness argument rules out; indicates a
    predicate bug or an input outside the supported class."""


@dataclass
class SolveStats:
    orientation_tests: int = 0
    intersection_tests: int = 0

    @property
    def predicate_evaluations(self) -> int:
        return self.orientation_tests + self.intersection_tests

    def merge(self, other: "SolveStats") -> None:
        self.orientation_tests += other.orientation_tests
        self.intersection_tests += other.intersection_tests


@dataclass(frozen=True)
class HiddenSet:
    points: tuple[Point, ...]
    vertex_indices: tuple[int, ...] | None = None  # 1-based, vertex variant only

    def __len__(self) -> int:
        return len(self.points)


class CoverMode(enum.Enum):
    FULL = "full-cover"
    VERTEX = "vertex-cover"


@dataclass(frozen=True)
class ConvexPiece:
    vertices: tuple[Point, ...]

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class ConvexCover:
    pieces: tuple[ConvexPiece, ...]
    mode: CoverMode

    def __len__(self) -> int:
        return len(self.pieces)


@dataclass
class Solution:
    hidden: HiddenSet
    cover: ConvexCover
    split_point: Point | None = None
    stats: SolveStats = field(default_factory=SolveStats)


def strongly_visible_pair(funnel: FunnelPolygon, i: int) -> bool:
    """Whether edges e_i and e_{n-i} bound a convex quadrilateral inside the
    funnel, decided by the two O(1) orientation guards.

    The degenerate pairing that shares the apex (possible only when n is odd
    and i is maximal, e.g. the n=3 base case) counts as strongly visible.
    """
    n, t = funnel.n, funnel.t
    if i < 1 or i > t - 1 or n - i < t:
        raise IndexError(f"pair index {i} out of range for funnel with n={n}, t={t}")
    if i + 1 >= n - i:
        return True
    va, vb = funnel.vertex(i), funnel.vertex(i + 1)
    wc, wd = funnel.vertex(n - i), funnel.vertex(n - i + 1)
    blocked_left = cross_sign(va, vb, wc) > 0
    blocked_right = cross_sign(wd, wc, vb) < 0
    return not blocked_left and not blocked_right


def solve_funnel(funnel: FunnelPolygon) -> Solution:
    """Maximum hidden set and minimum convex cover of a funnel, |H| = |C|.

    Case 1 (all edge pairs strongly visible): hidden points on the midpoints
    of the longer chain's edges, a quadrilateral strip across the funnel and
    a triangle fan below the apex.  Case 2: clip along the lowest blocked
    edge's extension and iterate on the subfunnel above the cut.
    """
    funnel.check()
    stats = SolveStats()
    work = list(funnel.base.vertices)
    lo, hi, apex = 0, len(work) - 1, funnel.t - 1
    hidden: list[Point] = []
    pieces: list[ConvexPiece] = []
    split_point: Point | None = None

    def orient(p1: Point, p2: Point, p3: Point) -> int:
        stats.orientation_tests += 1
        return cross_sign(p1, p2, p3)

    while True:
        left, right = apex - lo, hi - apex
        if left < 1 or right < 1:
            raise InternalGeometryError("window lost a chain")
        failure = None
        k = 1
        while k <= left and k <= right and lo + k < hi - k:
            blocked_left = orient(work[lo + k - 1], work[lo + k], work[hi - k]) > 0
            blocked_right = orient(work[hi - k + 1], work[hi - k], work[lo + k]) < 0
            if blocked_left or blocked_right:
                failure = (k, blocked_left, blocked_right)
                break
            k += 1
        if failure is None:
            _emit_case1_full(work, lo, hi, apex, hidden, pieces)
            break
        k, blocked_left, blocked_right = failure
        if blocked_left and k < left:
            clip = _clip(work, work[lo + k - 1], work[lo + k], hi - k, 1, stats)
            for j in range(1, k + 1):
                hidden.append(midpoint(work[lo + j - 1], work[lo + j]))
            for j in range(1, k):
                pieces.append(_quad(work[lo + j - 1], work[lo + j],
                                    work[hi - j], work[hi - j + 1]))
            m1 = hi - k + 1
            if clip == work[m1]:
                pieces.append(ConvexPiece((work[lo + k - 1], work[lo + k], work[m1])))
            else:
                pieces.append(ConvexPiece((work[lo + k - 1], work[lo + k], clip, work[m1])))
                work[m1] = clip
                if split_point is None:
                    split_point = clip
            lo, hi = lo + k, m1
        elif blocked_right and k < right:
            clip = _clip(work, work[hi - k + 1], work[hi - k], lo + k - 1, -1, stats)
            for j in range(1, k + 1):
                hidden.append(midpoint(work[hi - j], work[hi - j + 1]))
            for j in range(1, k):
                pieces.append(_quad(work[lo + j - 1], work[lo + j],
                                    work[hi - j], work[hi - j + 1]))
            m0 = lo + k - 1
            if clip == work[m0]:
                pieces.append(ConvexPiece((work[m0], work[hi - k], work[hi - k + 1])))
            else:
                pieces.append(ConvexPiece((work[m0], clip, work[hi - k], work[hi - k + 1])))
                work[m0] = clip
                if split_point is None:
                    split_point = clip
            lo, hi = m0, hi - k
        else:
            raise InternalGeometryError(
                "blocked pair adjacent to the apex; extension would leave the funnel")

    return Solution(hidden=HiddenSet(tuple(hidden)),
                    cover=ConvexCover(tuple(pieces), CoverMode.FULL),
                    split_point=split_point,
                    stats=stats)


def _quad(a: Point, b: Point, c: Point, d: Point) -> ConvexPiece:
    return ConvexPiece((a, b, c, d))


def _clip(work: list[Point], origin: Point, through: Point, partner_top: int,
          direction: int, stats: SolveStats) -> Point:
    """Intersection of the extension of origin->through with the partner edge
    (work[partner_top], work[partner_top+1]).

    A hit below the partner edge would make the clipped piece overlap the
    recursion window, so the walk toward the base (`direction` +1 on the
    right chain, -1 on the left) exists only to produce a precise diagnostic;
    its cost is charged to edges the recursion discards.
    """
    edge = (work[partner_top], work[partner_top + 1])
    stats.intersection_tests += 1
    hit = ray_edge_intersection(origin, through, edge)
    if hit is not None:
        return hit
    for step in range(1, len(work)):
        lo_i = partner_top + direction * step
        if lo_i < 0 or lo_i + 1 >= len(work):
            break
        stats.intersection_tests += 1
        if ray_edge_intersection(origin, through, (work[lo_i], work[lo_i + 1])) is not None:
            raise InternalGeometryError(
                f"edge extension hit {step} edges past its partner")
    raise InternalGeometryError("edge extension missed the opposite chain")


def _emit_case1_full(work: list[Point], lo: int, hi: int, apex: int,
                     hidden: list[Point], pieces: list[ConvexPiece]) -> None:
    left, right = apex - lo, hi - apex
    if left >= right:
        for j in range(1, left + 1):
            hidden.append(midpoint(work[lo + j - 1], work[lo + j]))
        for j in range(1, right):
            pieces.append(_quad(work[lo + j - 1], work[lo + j],
                                work[hi - j], work[hi - j + 1]))
        for j in range(right, left + 1):
            pieces.append(ConvexPiece((work[lo + j - 1], work[lo + j], work[apex + 1])))
    else:
        for j in range(1, right + 1):
            hidden.append(midpoint(work[hi - j], work[hi - j + 1]))
        for j in range(1, left):
            pieces.append(_quad(work[lo + j - 1], work[lo + j],
                                work[hi - j], work[hi - j + 1]))
        for j in range(left, right + 1):
            pieces.append(ConvexPiece((work[apex - 1], work[hi - j], work[hi - j + 1])))


def solve_funnel_vertices(funnel: FunnelPolygon) -> Solution:
    """Maximum hidden vertex set and a convex cover of the vertices, |H| = |C|.

    Case 1 places hidden vertices at alternating positions along the longer
    chain (odd depths, apex included when the parity reaches it) and keeps
    only the alternating pieces, plus an apex triangle when the chain length
    is even.  Case 2 consumes the window below the lowest blocked pair with
    the same alternation; no new vertex is ever introduced.

    The recursion window is a subchain of the input, not a subfunnel, so a
    fan triangle can degenerate when the chains curve sharply; such fans are
    replaced by certified slivers hugging their chain edge (see _fan_piece).
    """
    funnel.check()
    stats = SolveStats()
    work = funnel.base.vertices
    boundary = funnel.base
    lo, hi, apex = 0, len(work) - 1, funnel.t - 1
    hidden_idx: list[int] = []
    pieces: list[ConvexPiece] = []

    def orient(p1: Point, p2: Point, p3: Point) -> int:
        stats.orientation_tests += 1
        return cross_sign(p1, p2, p3)

    while True:
        if hi - lo <= 1:
            # One or two vertices left; the apex is always among them.
            if not (lo <= apex <= hi):
                raise InternalGeometryError("terminal window lost the apex")
            hidden_idx.append(apex)
            pieces.append(_checked_piece(work[apex - 1], work[apex], work[apex + 1]))
            break
        left, right = apex - lo, hi - apex
        failure = None
        k = 1
        while k <= left and k <= right and lo + k < hi - k:
            blocked_left = orient(work[lo + k - 1], work[lo + k], work[hi - k]) > 0
            blocked_right = orient(work[hi - k + 1], work[hi - k], work[lo + k]) < 0
            if blocked_left or blocked_right:
                failure = (k, blocked_left, blocked_right)
                break
            k += 1
        if failure is None:
            _emit_case1_vertex(work, lo, hi, apex, boundary, hidden_idx, pieces)
            break
        k, blocked_left, blocked_right = failure
        odd = k % 2 == 1
        if blocked_left and (k < left or not odd):
            for d in range(1, k + 1, 2):
                hidden_idx.append(lo + d - 1)
            for j in range(1, k, 2):
                pieces.append(_checked_piece(work[lo + j - 1], work[lo + j],
                                             work[hi - j], work[hi - j + 1]))
            if odd:
                a, b, c = work[lo + k - 1], work[lo + k], work[hi - k + 1]
                if cross_sign(a, b, c) < 0:
                    pieces.append(ConvexPiece((a, b, c)))
                    lo, hi = lo + k + 1, hi - k
                else:
                    # degenerate triangle: cover the blocked pair with a
                    # sliver and leave the opposite vertex in the window
                    pieces.append(_edge_sliver(a, b, boundary))
                    lo, hi = lo + k + 1, hi - k + 1
            else:
                lo, hi = lo + k, hi - k
        elif blocked_right and (k < right or not odd):
            for d in range(1, k + 1, 2):
                hidden_idx.append(hi - d + 1)
            for j in range(1, k, 2):
                pieces.append(_checked_piece(work[lo + j - 1], work[lo + j],
                                             work[hi - j], work[hi - j + 1]))
            if odd:
                a, b, c = work[lo + k - 1], work[hi - k], work[hi - k + 1]
                if cross_sign(a, b, c) < 0:
                    pieces.append(ConvexPiece((a, b, c)))
                    lo, hi = lo + k, hi - k - 1
                else:
                    pieces.append(_edge_sliver(work[hi - k], work[hi - k + 1], boundary))
                    lo, hi = lo + k - 1, hi - k - 1
            else:
                lo, hi = lo + k, hi - k
        else:
            raise InternalGeometryError(
                "blocked pair adjacent to the apex; no piece placement available")

    hidden_idx.sort()
    return Solution(
        hidden=HiddenSet(tuple(work[i] for i in hidden_idx),
                         vertex_indices=tuple(i + 1 for i in hidden_idx)),
        cover=ConvexCover(tuple(pieces), CoverMode.VERTEX),
        stats=stats)


def _emit_case1_vertex(work, lo: int, hi: int, apex: int, boundary: Polygon,
                       hidden_idx: list[int], pieces: list[ConvexPiece]) -> None:
    left, right = apex - lo, hi - apex
    if left >= right:
        big, small = left, right
        for d in range(1, big + 2, 2):
            hidden_idx.append(lo + d - 1)
        for j in range(1, big + 1, 2):
            if j <= small - 1:
                pieces.append(_checked_piece(work[lo + j - 1], work[lo + j],
                                             work[hi - j], work[hi - j + 1]))
            else:
                pieces.append(_fan_piece(work[lo + j - 1], work[lo + j],
                                         work[apex + 1], False, boundary))
    else:
        big, small = right, left
        for d in range(1, big + 2, 2):
            hidden_idx.append(hi - d + 1)
        for j in range(1, big + 1, 2):
            if j <= small - 1:
                pieces.append(_checked_piece(work[lo + j - 1], work[lo + j],
                                             work[hi - j], work[hi - j + 1]))
            else:
                pieces.append(_fan_piece(work[hi - j], work[hi - j + 1],
                                         work[apex - 1], True, boundary))
    if big % 2 == 0:
        # The apex sits at odd depth big+1: hidden but not yet covered.
        pieces.append(_checked_piece(work[apex - 1], work[apex], work[apex + 1]))


def _checked_piece(*corners: Point) -> ConvexPiece:
    """Piece whose clockwise weak convexity is asserted at build time."""
    k = len(corners)
    for i in range(k):
        a, b, c = corners[i - 1], corners[i], corners[(i + 1) % k]
        cr = cross_sign(a, b, c)
        if cr > 0:
            raise InternalGeometryError("piece construction lost convexity")
        if cr == 0:
            dot = (b.x - a.x) * (c.x - b.x) + (b.y - a.y) * (c.y - b.y)
            if dot <= 0:
                raise InternalGeometryError("degenerate piece construction")
    return ConvexPiece(corners)


def _fan_piece(a: Point, b: Point, fan: Point, fan_first: bool,
               boundary: Polygon) -> ConvexPiece:
    """Fan triangle over the chain edge (a, b) given in boundary order,
    falling back to a certified sliver hugging the edge when the fan vertex
    lies on the wrong side.

    The fallback handles recursion windows that are no longer funnels (their
    chains may curl past the would-be fan vertex); a thin triangle on the
    interior side of a boundary edge always exists, and the emitted one is
    verified against the polygon exactly.
    """
    if cross_sign(a, b, fan) < 0:
        return ConvexPiece((fan, a, b) if fan_first else (a, b, fan))
    return _edge_sliver(a, b, boundary)


def _edge_sliver(a: Point, b: Point, boundary: Polygon) -> ConvexPiece:
    nx, ny = b.y - a.y, a.x - b.x  # inward normal of a clockwise boundary edge
    mx, my = (a.x + b.x) / 2, (a.y + b.y) / 2
    height = Fraction(1, 4)
    for _ in range(256):
        z = Point(mx + nx * height, my + ny * height)
        if _triangle_inside(a, b, z, boundary):
            return ConvexPiece((a, b, z))  # clockwise: z is on the interior side
        height /= 4
    raise InternalGeometryError("could not fit a sliver inside the polygon")


def _triangle_inside(a: Point, b: Point, z: Point, boundary: Polygon) -> bool:
    vs = boundary.vertices
    n = len(vs)
    sides = ((a, z), (z, b))
    for i in range(n):
        c, d = vs[i], vs[(i + 1) % n]
        for u, v in sides:
            o1 = cross_sign(u, v, c)
            o2 = cross_sign(u, v, d)
            if o1 * o2 < 0:
                o3 = cross_sign(c, d, u)
                o4 = cross_sign(c, d, v)
                if o3 * o4 < 0:
                    return False
        if _strictly_in_triangle(a, b, z, c):
            return False
    # z itself must be interior (crossing parity; z is never on the boundary
    # when the crossings above are absent and the triangle has positive area)
    parity = False
    for i in range(n):
        c, d = vs[i], vs[(i + 1) % n]
        if (c.y > z.y) != (d.y > z.y):
            x_cross = c.x + (z.y - c.y) * (d.x - c.x) / (d.y - c.y)
            if x_cross > z.x:
                parity = not parity
    return parity


def _strictly_in_triangle(a: Point, b: Point, z: Point, q: Point) -> bool:
    if cross_sign(a, b, z) > 0:  # counter-clockwise triple
        return (cross_sign(a, b, q) > 0 and cross_sign(b, z, q) > 0
                and cross_sign(z, a, q) > 0)
    return (cross_sign(b, a, q) > 0 and cross_sign(a, z, q) > 0
            and cross_sign(z, b, q) > 0)


def split_pseudotriangle(ps: Pseudotriangle) -> tuple[Point, FunnelPolygon, FunnelPolygon]:
    """Split a (non-funnel) pseudotriangle along the extension of e_1.

    The extension of v_1->v_2 lands at p on the middle chain R2 (edge e_i);
    P1 = v_2..v_i, p and P2 = p, v_{i+1}, .., v_n, v_1 are funnels meeting
    along the cut with disjoint interiors.  A hit exactly at a chain vertex
    makes that vertex the split point and introduces no new vertex.
    """
    p, f1, f2, _, _, _ = _split_counted(ps, SolveStats())
    return p, f1, f2


def _split_counted(ps: Pseudotriangle, stats: SolveStats):
    ps.check()
    n, t, s = ps.n, ps.t, ps.s
    if ps.chain_sizes()[2] < 2:
        raise NotAPseudotriangleError("funnel input: R3 is a single edge")
    v1, v2 = ps.vertex(1), ps.vertex(2)
    hits: list[tuple[Point, int]] = []
    for e in range(t, s):
        stats.intersection_tests += 1
        cand = ray_edge_intersection(v1, v2, (ps.vertex(e), ps.vertex(e + 1)))
        if cand is not None:
            hits.append((cand, e))
    if not hits:
        raise InternalGeometryError("extension of e_1 missed the middle chain")
    # First hit along the ray (unique unless the line re-crosses the chain).
    p, i = min(hits, key=lambda h: _ray_order_key(v1, v2, h[0]))
    if p == ps.vertex(i):
        i -= 1
    if p in (ps.vertex(t), ps.vertex(s)):
        raise InternalGeometryError("extension of e_1 hit a pseudotriangle corner")
    synthetic = p != ps.vertex(i + 1)

    p1_verts = [ps.vertex(j) for j in range(2, i + 1)]
    p1_verts.append(p if synthetic else ps.vertex(i + 1))
    f1 = FunnelPolygon(Polygon(p1_verts), t - 1)

    if synthetic:
        p2_verts = [p] + [ps.vertex(j) for j in range(i + 1, n + 1)] + [ps.vertex(1)]
        f2 = FunnelPolygon(Polygon(p2_verts), s - i + 1)
    else:
        p2_verts = [ps.vertex(j) for j in range(i + 1, n + 1)] + [ps.vertex(1)]
        f2 = FunnelPolygon(Polygon(p2_verts), s - i)
    f1.check()
    f2.check()
    return p, f1, f2, i, synthetic, stats


def _ray_order_key(origin: Point, through: Point, q: Point):
    if through.x != origin.x:
        return (q.x - origin.x) / (through.x - origin.x)
    return (q.y - origin.y) / (through.y - origin.y)


def solve_pseudo(ps: Pseudotriangle) -> Solution:
    """2-approximation of maximum hidden set and minimum convex cover in a
    pseudotriangle: split into two funnels, solve each exactly, take the
    larger hidden set and the union cover, so |C| <= 2|H|."""
    stats = SolveStats()
    p, f1, f2, _, _, _ = _split_counted(ps, stats)
    s1 = solve_funnel(f1)
    s2 = solve_funnel(f2)
    stats.merge(s1.stats)
    stats.merge(s2.stats)
    hidden = s1.hidden if len(s1.hidden) >= len(s2.hidden) else s2.hidden
    cover = ConvexCover(s1.cover.pieces + s2.cover.pieces, CoverMode.FULL)
    return Solution(hidden=hidden, cover=cover, split_point=p, stats=stats)


def solve_pseudo_vertices(ps: Pseudotriangle) -> Solution:
    """Vertex variant of the pseudotriangle 2-approximation.

    The split point p takes part in both funnel solves as an ordinary vertex;
    if it ends up hidden it is shifted to v_{i+1} (in P1) or v_i (in P2),
    which stays invisible to the rest of the set.  Pieces cover every true
    vertex of the input; p needs no piece accounting of its own.
    """
    stats = SolveStats()
    p, f1, f2, i, synthetic, _ = _split_counted(ps, stats)
    s1 = solve_funnel_vertices(f1)
    s2 = solve_funnel_vertices(f2)
    stats.merge(s1.stats)
    stats.merge(s2.stats)
    n = ps.n

    def originals_p1(local: int) -> int:
        # P1 = v_2 .. v_i (+ p); local 1-based
        return local + 1

    def originals_p2(local: int) -> int:
        # P2 = (p,) v_{i+1} .. v_n, v_1
        offset = 1 if synthetic else 0
        orig = i + local - offset
        return 1 if orig == n + 1 else orig

    h1: list[int] = []
    for local in s1.hidden.vertex_indices:
        if synthetic and local == f1.n:
            h1.append(i + 1)  # p shifted to v_{i+1}
        else:
            h1.append(originals_p1(local))
    h2: list[int] = []
    for local in s2.hidden.vertex_indices:
        if synthetic and local == 1:
            h2.append(i)  # p shifted to v_i
        else:
            h2.append(originals_p2(local))

    chosen = h1 if len(h1) >= len(h2) else h2
    chosen = sorted(set(chosen))
    cover = ConvexCover(s1.cover.pieces + s2.cover.pieces, CoverMode.VERTEX)
    return Solution(
        hidden=HiddenSet(tuple(ps.vertex(j) for j in chosen),
                         vertex_indices=tuple(chosen)),
        cover=cover,
        split_point=p,
        stats=stats)
