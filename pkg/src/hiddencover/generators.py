"""Seeded generation of valid funnel polygons and pseudotriangles.

Funnels: both chains are built from strictly increasing integer slope
sequences over unit x-steps, which guarantees strict reflexivity and
simplicity without rejection sampling.  Pseudotriangles: three strictly
concave integer sag profiles bulging into a large triangle, scaled so the
chains stay in disjoint strips near their sides.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from fractions import Fraction

from .geometry import Point
from .polygon import FunnelPolygon, Polygon, Pseudotriangle, classify
from .solvers import InternalGeometryError


@dataclass(frozen=True)
class GenConfig:
    """Either `n` (funnel) or `chains` (pseudotriangle edge counts) is set."""
    n: int | None = None
    chains: tuple[int, int, int] | None = None
    seed: int = 0
    coord_range: int | None = None

    def effective_range(self, minimum: int) -> int:
        rng = self.coord_range if self.coord_range is not None else max(minimum, 16)
        if rng < minimum:
            raise ValueError(f"coord_range {rng} below required minimum {minimum}")
        return rng


def gen_funnel(cfg: GenConfig) -> FunnelPolygon:
    """Deterministic funnel with integer coordinates; classifies as Funnel."""
    if cfg.n is None or cfg.n < 3:
        raise ValueError("funnel generation needs n >= 3")
    n = cfg.n
    span = cfg.effective_range(n)
    rng = random.Random(cfg.seed)
    symmetric = n >= 5 and n % 2 == 1 and rng.random() < 0.35
    if symmetric:
        # Mirror-symmetric slope profiles satisfy every strong-visibility
        # guard, so these instances are always Case 1.
        left_edges = right_edges = (n - 1) // 2
    else:
        left_edges = rng.randint(1, n - 2)
        right_edges = n - 1 - left_edges

    def chain_slopes(count: int) -> list[int]:
        # A randomized lower bound makes steep/shallow chain mixes (and with
        # them Case 2 instances) common across seeds.
        lo = rng.choice((1, 1, 1 + span // 6, 1 + span // 3))
        return sorted(rng.sample(range(lo, lo + 2 * span + count), count))

    lslopes = chain_slopes(left_edges)
    if symmetric:
        rslopes = list(lslopes)
    else:
        rslopes = chain_slopes(right_edges)
        gap = sum(lslopes) - sum(rslopes)
        if gap > 0:
            rslopes[-1] += gap
        elif gap < 0:
            lslopes[-1] -= gap

    verts = [Point(Fraction(0), Fraction(0))]
    height = 0
    for j, slope in enumerate(lslopes, start=1):
        height += slope
        verts.append(Point(Fraction(j), Fraction(height)))
    rights = [Point(Fraction(n - 1), Fraction(0))]
    height = 0
    for j, slope in enumerate(rslopes[:-1], start=1):
        height += slope
        rights.append(Point(Fraction(n - 1 - j), Fraction(height)))
    verts.extend(reversed(rights))
    funnel = FunnelPolygon(Polygon(verts), left_edges + 1)
    if left_edges == 1 or right_edges == 1:
        # A 1-edge chain makes the apex adjacent to a base corner, giving a
        # second valid base-edge reading; return the canonical labeling.
        funnel = classify(funnel.base).funnel
    return funnel


def gen_pseudotriangle(cfg: GenConfig) -> Pseudotriangle:
    """Deterministic pseudotriangle from chain edge counts (n1 >= n2 >= n3 >= 2)."""
    if cfg.chains is None:
        raise ValueError("pseudotriangle generation needs chain sizes")
    n1, n2, n3 = cfg.chains
    if not (n1 >= n2 >= n3 >= 2):
        raise ValueError("chain sizes must satisfy n1 >= n2 >= n3 >= 2 "
                         "(n3 = 1 would be a funnel)")
    n = n1 + n2 + n3
    cfg.effective_range(n)
    rng = random.Random(cfg.seed)

    def sag_profile(k: int) -> list[int]:
        # Strictly concave zero-sum increments: positive interior heights.
        deltas = sorted(rng.sample(range(1, 3 * k + 1), k), reverse=True)
        total = sum(deltas)
        increments = [k * d - total for d in deltas]
        heights = []
        h = 0
        for inc in increments[:-1]:
            h += inc
            heights.append(h)
        return heights  # k-1 interior heights, all > 0

    sags = [sag_profile(k) for k in (n1, n2, n3)]
    h_max = max(max(s) for s in sags)
    base = math.lcm(n1, n2, n3)
    scale = base * max(1, -(-25 * (h_max + 1) // base))

    corners = [(0, 0), (scale, 2 * scale), (2 * scale, 0)]
    dirs = [(1, 2), (1, -2), (-1, 0)]          # primitive side directions
    normals = [(2, -1), (-2, -1), (0, 1)]      # inward right-normals

    verts: list[Point] = []
    for side, k in enumerate((n1, n2, n3)):
        cx, cy = corners[side]
        nxt = corners[(side + 1) % 3]
        step = ((nxt[0] - cx) // k, (nxt[1] - cy) // k)
        nx, ny = normals[side]
        verts.append(Point(Fraction(cx), Fraction(cy)))
        for i, h in enumerate(sags[side], start=1):
            verts.append(Point(Fraction(cx + i * step[0] + h * nx),
                               Fraction(cy + i * step[1] + h * ny)))
    ps = Pseudotriangle(Polygon(verts), n1 + 1, n1 + n2 + 1)
    try:
        ps.check()
    except Exception as exc:  # scale dominance failed; would be a logic bug
        raise InternalGeometryError(f"generated pseudotriangle invalid: {exc}") from exc
    return ps
