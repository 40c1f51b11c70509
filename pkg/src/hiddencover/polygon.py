"""Polygon model: simplicity validation, clockwise + strict-reflex normalization,
and classification into funnels / pseudotriangles with canonical relabeling."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .geometry import (
    GeometryError,
    Orientation,
    Point,
    cross_sign,
    orientation,
    segments_properly_intersect,
)


class PolygonError(GeometryError):
    pass


class NotSimpleError(PolygonError):
    def __init__(self, message: str, edge_pair: tuple[int, int] | None = None):
        super().__init__(message)
        self.edge_pair = edge_pair


class DegenerateVertexError(PolygonError):
    pass


class NotAFunnelError(PolygonError):
    pass


class NotAPseudotriangleError(PolygonError):
    pass


class Polygon:
    """Simple polygon stored as a clockwise vertex cycle (x right, y up)."""

    __slots__ = ("vertices", "_signed_area")

    def __init__(self, vertices: Sequence[Point]):
        self.vertices: tuple[Point, ...] = tuple(vertices)
        self._signed_area: Fraction | None = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex(self, i: int) -> Point:
        return self.vertices[i % len(self.vertices)]

    def edges(self):
        vs = self.vertices
        n = len(vs)
        for i in range(n):
            yield vs[i], vs[(i + 1) % n]

    def signed_area(self) -> Fraction:
        if self._signed_area is None:
            s = Fraction(0)
            vs = self.vertices
            for i in range(len(vs)):
                a = vs[i]
                b = vs[(i + 1) % len(vs)]
                s += a.x * b.y - b.x * a.y
            self._signed_area = s / 2
        return self._signed_area

    def area(self) -> Fraction:
        return abs(self.signed_area())

    def turn(self, i: int) -> Orientation:
        """Orientation of the turn at vertex i (LEFT = reflex in a CW polygon)."""
        return orientation(self.vertex(i - 1), self.vertex(i), self.vertex(i + 1))

    def __eq__(self, other) -> bool:
        return isinstance(other, Polygon) and self.vertices == other.vertices

    def __repr__(self) -> str:
        return f"Polygon({list(self.vertices)!r})"


def validate_simple(vertices: Sequence[Point]) -> Polygon:
    """Validate a vertex cycle and return it as a clockwise Polygon.

    Counter-clockwise input is reversed; self-intersection, repeated
    consecutive vertices and zero area are rejected.
    """
    vs = list(vertices)
    n = len(vs)
    if n < 3:
        raise DegenerateVertexError(f"polygon needs at least 3 vertices, got {n}")
    for i in range(n):
        if vs[i] == vs[(i + 1) % n]:
            raise DegenerateVertexError(f"consecutive vertices {i} and {(i + 1) % n} coincide")
    if len(set(vs)) != n:
        raise NotSimpleError("repeated vertex (polygon touches itself)")
    poly = Polygon(vs)
    area2 = poly.signed_area()
    if area2 == 0:
        raise NotSimpleError("polygon has zero area")
    if area2 > 0:
        vs.reverse()
        poly = Polygon(vs)
    edges = [(poly.vertices[i], poly.vertices[(i + 1) % n]) for i in range(n)]
    boxes = [(min(a.x, b.x), max(a.x, b.x), min(a.y, b.y), max(a.y, b.y))
             for a, b in edges]
    for i in range(n):
        xlo, xhi, ylo, yhi = boxes[i]
        for j in range(i + 1, n):
            bx = boxes[j]
            if bx[0] > xhi or bx[1] < xlo or bx[2] > yhi or bx[3] < ylo:
                continue
            adjacent = (j == i + 1) or (i == 0 and j == n - 1)
            if adjacent:
                # Adjacent edges may meet only at the shared vertex.
                if _adjacent_edges_overlap(edges[i], edges[j]):
                    raise NotSimpleError(f"adjacent edges {i} and {j} overlap", (i, j))
            elif segments_properly_intersect(edges[i], edges[j]):
                raise NotSimpleError(f"edges {i} and {j} intersect", (i, j))
    return poly


def _adjacent_edges_overlap(e1: tuple[Point, Point], e2: tuple[Point, Point]) -> bool:
    a, b = e1
    c, d = e2
    if cross_sign(a, b, c) != 0 or cross_sign(a, b, d) != 0:
        return False
    # Collinear neighbours: they fold back onto each other iff the far
    # endpoints lie on the same side of the shared vertex.
    shared = b if (b == c or b == d) else a
    other1 = a if shared == b else b
    other2 = d if shared == c else c
    dx1, dy1 = other1.x - shared.x, other1.y - shared.y
    dx2, dy2 = other2.x - shared.x, other2.y - shared.y
    return dx1 * dx2 + dy1 * dy2 > 0


def normalize_strict(p: Polygon) -> Polygon:
    """Drop every vertex whose incident edges are collinear.

    The result has a strict turn at every vertex; fails if fewer than 3
    vertices survive.
    """
    vs = list(p.vertices)
    changed = True
    while changed:
        changed = False
        out = []
        n = len(vs)
        for i in range(n):
            if cross_sign(vs[i - 1], vs[i], vs[(i + 1) % n]) == 0:
                changed = True
            else:
                out.append(vs[i])
        vs = out
        if len(vs) < 3:
            raise DegenerateVertexError("normalization left fewer than 3 vertices")
    return Polygon(vs)


@dataclass(frozen=True)
class FunnelPolygon:
    """Funnel: convex edge e_n = v_n v_1 plus reflex chains v_1..v_t and v_t..v_n.

    `t` is the 1-based apex index after canonical rotation.  Either chain may
    be the longer one; the solvers are symmetric in the two chains.
    """

    base: Polygon
    t: int

    @property
    def n(self) -> int:
        return self.base.n

    def vertex(self, i: int) -> Point:
        """1-based vertex access matching the v_i notation."""
        return self.base.vertices[(i - 1) % self.base.n]

    @staticmethod
    def from_polygon(poly: Polygon, t: int) -> "FunnelPolygon":
        f = FunnelPolygon(poly, t)
        f.check()
        return f

    def check(self) -> None:
        poly, t, n = self.base, self.t, self.base.n
        if not (2 <= t <= n - 1):
            raise NotAFunnelError(f"apex index t={t} out of range for n={n}")
        for i in range(n):
            turn = poly.turn(i)
            idx1 = i + 1
            if idx1 in (1, t, n):
                if turn is not Orientation.RIGHT:
                    raise NotAFunnelError(f"vertex {idx1} must be strictly convex")
            elif turn is not Orientation.LEFT:
                raise NotAFunnelError(f"chain vertex {idx1} must be strictly reflex")


@dataclass(frozen=True)
class Pseudotriangle:
    """Exactly three convex vertices v_1, v_t, v_s joined by reflex chains."""

    base: Polygon
    t: int
    s: int

    @property
    def n(self) -> int:
        return self.base.n

    def vertex(self, i: int) -> Point:
        return self.base.vertices[(i - 1) % self.base.n]

    def chain_sizes(self) -> tuple[int, int, int]:
        """Edge counts of R1, R2, R3."""
        return (self.t - 1, self.s - self.t, self.n - self.s + 1)

    @staticmethod
    def from_polygon(poly: Polygon, t: int, s: int) -> "Pseudotriangle":
        ps = Pseudotriangle(poly, t, s)
        ps.check()
        return ps

    def check(self) -> None:
        poly, n = self.base, self.base.n
        if not (1 < self.t < self.s <= n):
            raise NotAPseudotriangleError(f"corner indices t={self.t}, s={self.s} invalid")
        for i in range(n):
            turn = poly.turn(i)
            if i + 1 in (1, self.t, self.s):
                if turn is not Orientation.RIGHT:
                    raise NotAPseudotriangleError(f"vertex {i + 1} must be strictly convex")
            elif turn is not Orientation.LEFT:
                raise NotAPseudotriangleError(f"chain vertex {i + 1} must be strictly reflex")


class PolygonClass(enum.Enum):
    FUNNEL = "funnel"
    PSEUDOTRIANGLE = "pseudotriangle"
    OTHER_SIMPLE = "other-simple"
    NOT_SIMPLE = "not-simple"


@dataclass(frozen=True)
class Classification:
    kind: PolygonClass
    funnel: FunnelPolygon | None = None
    pseudotriangle: Pseudotriangle | None = None

    @property
    def t(self) -> int | None:
        if self.funnel is not None:
            return self.funnel.t
        if self.pseudotriangle is not None:
            return self.pseudotriangle.t
        return None

    @property
    def s(self) -> int | None:
        return self.pseudotriangle.s if self.pseudotriangle is not None else None


def classify(p: Polygon) -> Classification:
    """Classify a normalized polygon as funnel, pseudotriangle or other.

    Funnels are rotated so the convex edge is v_n v_1 (a funnel is detected by
    two adjacent convex vertices); a triangle classifies as Funnel(t=2).
    Pseudotriangles are rotated so v_1 starts the longest chain.  Rotation is
    the only relabeling used, which keeps the clockwise orientation intact.
    """
    n = p.n
    convex = [i for i in range(n) if p.turn(i) is Orientation.RIGHT]
    if len(convex) != 3:
        return Classification(PolygonClass.OTHER_SIMPLE)
    c0, c1, c2 = convex
    base_candidates = []
    for a, b in ((c0, c1), (c1, c2), (c2, c0)):
        if (a + 1) % n == b:
            base_candidates.append((a, b))
    if base_candidates:
        # Funnel: rotate so the convex edge endpoints become v_n, v_1.
        # Ties (triangles, double-adjacent corners) break on the coordinate
        # sequence, so the result is independent of the input rotation.
        best = None
        for a, b in base_candidates:
            vs = p.vertices[b:] + p.vertices[:b]
            apex = next(i for i in range(n) if (b + i) % n in convex and i not in (0, n - 1))
            t = apex + 1
            key = (t < n - t, tuple((v.x, v.y) for v in vs))
            if best is None or key < best[0]:
                best = (key, vs, t)
        _, vs, t = best
        return Classification(PolygonClass.FUNNEL,
                              funnel=FunnelPolygon(Polygon(vs), t))
    # Pseudotriangle: pick the rotation whose chain-size triple is greatest,
    # breaking ties on the coordinate sequence (rotation independence).
    best = None
    for start in convex:
        vs = p.vertices[start:] + p.vertices[:start]
        corners = sorted(((c - start) % n for c in convex))
        t, s = corners[1] + 1, corners[2] + 1
        sizes = (t - 1, s - t, n - s + 1)
        key = (tuple(-x for x in sizes), tuple((v.x, v.y) for v in vs))
        if best is None or key < best[0]:
            best = (key, vs, t, s)
    _, vs, t, s = best
    return Classification(PolygonClass.PSEUDOTRIANGLE,
                          pseudotriangle=Pseudotriangle(Polygon(vs), t, s))
