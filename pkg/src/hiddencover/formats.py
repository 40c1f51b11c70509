"""Polygon text format and SolutionDocument JSON (exact rationals as strings)."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import GeometryError, Point, format_rational, parse_rational
from .polygon import Polygon, normalize_strict, validate_simple
from .solvers import ConvexCover, ConvexPiece, CoverMode, HiddenSet, Solution, SolveStats


class ParseError(GeometryError):
    def __init__(self, message: str, line: int | None = None):
        where = f" (line {line})" if line is not None else ""
        super().__init__(message + where)
        self.line = line


def parse_polygon_text(text: str, validate: bool = True) -> Polygon:
    """Parse the polygon file format:

        line 1:      n
        lines 2..n+1: x y   (each coordinate `a` or `a/b`)

    Comments start with '#'.  The polygon is validated (unless `validate` is
    False, which skips the quadratic simplicity check but still orients the
    cycle clockwise) and strict-reflex normalized.
    """
    rows: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            rows.append((lineno, stripped))
    if not rows:
        raise ParseError("empty polygon file")
    lineno, head = rows[0]
    try:
        n = int(head)
    except ValueError:
        raise ParseError(f"expected vertex count, got {head!r}", lineno)
    if len(rows) - 1 != n:
        raise ParseError(f"expected {n} vertex lines, found {len(rows) - 1}")
    pts = []
    for lineno, row in rows[1:]:
        parts = row.split()
        if len(parts) != 2:
            raise ParseError(f"expected 'x y', got {row!r}", lineno)
        try:
            pts.append(Point(parse_rational(parts[0]), parse_rational(parts[1])))
        except (ValueError, ZeroDivisionError) as exc:
            raise ParseError(f"bad coordinate: {exc}", lineno)
    if validate:
        poly = validate_simple(pts)
    else:
        poly = Polygon(pts)
        if poly.signed_area() == 0:
            raise ParseError("polygon has zero area")
        if poly.signed_area() > 0:
            poly = Polygon(list(reversed(pts)))
    return normalize_strict(poly)


def emit_polygon_text(poly: Polygon) -> str:
    lines = [str(poly.n)]
    for v in poly.vertices:
        lines.append(f"{format_rational(v.x)} {format_rational(v.y)}")
    return "\n".join(lines) + "\n"


def _point_json(p: Point) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def _point_from_json(item) -> Point:
    return Point(parse_rational(item[0]), parse_rational(item[1]))


@dataclass
class SolutionDocument:
    """Everything a solve produces, JSON round-trippable without loss."""

    polygon: Polygon
    kind: str                 # "funnel" | "pseudotriangle"
    variant: str              # "full" | "vertex"
    hidden: HiddenSet
    cover: ConvexCover
    split_point: Point | None = None
    stats: SolveStats = field(default_factory=SolveStats)
    elapsed_seconds: float = 0.0
    verification: dict = field(default_factory=dict)

    @property
    def solution(self) -> Solution:
        return Solution(hidden=self.hidden, cover=self.cover,
                        split_point=self.split_point, stats=self.stats)

    def to_json_dict(self) -> dict:
        return {
            "polygon": [_point_json(v) for v in self.polygon.vertices],
            "kind": self.kind,
            "variant": self.variant,
            "hidden": {
                "points": [_point_json(p) for p in self.hidden.points],
                "vertex_indices": list(self.hidden.vertex_indices)
                if self.hidden.vertex_indices is not None else None,
            },
            "cover": {
                "mode": self.cover.mode.value,
                "pieces": [[_point_json(v) for v in piece.vertices]
                           for piece in self.cover.pieces],
            },
            "split_point": _point_json(self.split_point)
            if self.split_point is not None else None,
            "stats": {
                "orientation_tests": self.stats.orientation_tests,
                "intersection_tests": self.stats.intersection_tests,
                "elapsed_seconds": self.elapsed_seconds,
            },
            "verification": self.verification,
        }

    @staticmethod
    def from_json_dict(data: dict) -> "SolutionDocument":
        hidden = data["hidden"]
        idx = hidden.get("vertex_indices")
        stats = SolveStats(
            orientation_tests=data["stats"]["orientation_tests"],
            intersection_tests=data["stats"]["intersection_tests"])
        return SolutionDocument(
            polygon=Polygon([_point_from_json(v) for v in data["polygon"]]),
            kind=data["kind"],
            variant=data["variant"],
            hidden=HiddenSet(tuple(_point_from_json(p) for p in hidden["points"]),
                             tuple(idx) if idx is not None else None),
            cover=ConvexCover(
                tuple(ConvexPiece(tuple(_point_from_json(v) for v in piece))
                      for piece in data["cover"]["pieces"]),
                CoverMode(data["cover"]["mode"])),
            split_point=_point_from_json(data["split_point"])
            if data["split_point"] is not None else None,
            stats=stats,
            elapsed_seconds=data["stats"]["elapsed_seconds"],
            verification=data["verification"],
        )

    def dumps(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2) + "\n"

    @staticmethod
    def loads(text: str) -> "SolutionDocument":
        return SolutionDocument.from_json_dict(json.loads(text))


def violations_to_json(violations) -> list:
    """Render oracle violation witnesses into JSON-able structures."""
    out = []
    for kind, witness in violations:
        out.append([kind, _witness_json(witness)])
    return out


def _witness_json(witness):
    if isinstance(witness, Point):
        return _point_json(witness)
    if isinstance(witness, Fraction):
        return format_rational(witness)
    if isinstance(witness, (list, tuple)):
        return [_witness_json(w) for w in witness]
    return witness
