"""Hidden sets and convex covers in funnel polygons and pseudotriangles."""

from .geometry import (
    CollinearOverlapError,
    GeometryError,
    Orientation,
    Point,
    Rational,
    midpoint,
    orientation,
    pt,
    ray_edge_intersection,
    segments_properly_intersect,
)
from .polygon import (
    Classification,
    DegenerateVertexError,
    FunnelPolygon,
    NotSimpleError,
    Polygon,
    PolygonClass,
    Pseudotriangle,
    classify,
    normalize_strict,
    validate_simple,
)
from .visibility import VisibilityGraph, point_in_polygon, sees, visibility_graph
from .solvers import (
    ConvexCover,
    ConvexPiece,
    CoverMode,
    HiddenSet,
    InternalGeometryError,
    Solution,
    SolveStats,
    solve_funnel,
    solve_funnel_vertices,
    solve_pseudo,
    solve_pseudo_vertices,
    split_pseudotriangle,
    strongly_visible_pair,
)
from .oracles import (
    BruteForceLimitError,
    VerificationReport,
    brute_force_hvs,
    certify_homestead,
    check_cover,
    check_hidden_set,
    check_vertex_cover,
    interior_samples,
)
from .generators import GenConfig, gen_funnel, gen_pseudotriangle
from .formats import SolutionDocument, emit_polygon_text, parse_polygon_text
from .svg import render_svg

__all__ = [
    "BruteForceLimitError", "Classification", "CollinearOverlapError",
    "ConvexCover", "ConvexPiece", "CoverMode", "DegenerateVertexError",
    "FunnelPolygon", "GenConfig", "GeometryError", "HiddenSet",
    "InternalGeometryError", "NotSimpleError", "Orientation", "Point",
    "Polygon", "PolygonClass", "Pseudotriangle", "Rational", "Solution",
    "SolutionDocument", "SolveStats", "VerificationReport", "VisibilityGraph",
    "brute_force_hvs", "certify_homestead", "check_cover", "check_hidden_set",
    "check_vertex_cover", "classify", "emit_polygon_text", "gen_funnel",
    "gen_pseudotriangle", "interior_samples", "midpoint", "normalize_strict",
    "orientation", "parse_polygon_text", "point_in_polygon", "pt",
    "ray_edge_intersection", "render_svg", "sees", "segments_properly_intersect",
    "solve_funnel", "solve_funnel_vertices", "solve_pseudo",
    "solve_pseudo_vertices", "split_pseudotriangle", "strongly_visible_pair",
    "validate_simple", "visibility_graph",
]
__version__ = "0.1.0"
