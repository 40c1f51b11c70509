import pytest

from hiddencover import (
    GenConfig,
    SolutionDocument,
    emit_polygon_text,
    gen_funnel,
    parse_polygon_text,
    pt,
    solve_funnel,
    solve_pseudo,
)
from hiddencover.formats import ParseError


FIX_F3_TEXT = "3\n0 0\n2 4\n4 0\n"
FIX_F4_TEXT = "4\n0 0\n4 1\n6 4\n5 0\n"


def test_parse_f3():
    poly = parse_polygon_text(FIX_F3_TEXT)
    assert poly.vertices == (pt(0, 0), pt(2, 4), pt(4, 0))


def test_parse_f4():
    poly = parse_polygon_text(FIX_F4_TEXT)
    assert poly.vertices == (pt(0, 0), pt(4, 1), pt(6, 4), pt(5, 0))


def test_parse_zero_area_rejected():
    with pytest.raises(Exception):
        parse_polygon_text("3\n0 0\n1 1\n2 2\n")


def test_parse_rational_coordinates():
    poly = parse_polygon_text("3\n0 0\n16/3 4/3\n4 -1\n")
    assert poly.vertices[0] == pt(0, 0)


def test_parse_comments_and_errors():
    poly = parse_polygon_text("# triangle\n3\n0 0  # origin\n2 4\n4 0\n")
    assert poly.n == 3
    with pytest.raises(ParseError):
        parse_polygon_text("3\n0 0\nx y\n4 0\n")
    with pytest.raises(ParseError):
        parse_polygon_text("3\n0 0\n2 4\n")  # wrong vertex count


def test_validation_errors_propagate():
    from hiddencover import DegenerateVertexError
    with pytest.raises(DegenerateVertexError):
        parse_polygon_text("2\n0 0\n1 1\n")


def test_polygon_roundtrip():
    for seed in range(8):
        funnel = gen_funnel(GenConfig(n=9, seed=seed))
        text = emit_polygon_text(funnel.base)
        assert parse_polygon_text(text).vertices == funnel.base.vertices


def test_solution_document_roundtrip(fix_f4, funnel_f4):
    sol = solve_funnel(funnel_f4)
    doc = SolutionDocument(polygon=fix_f4, kind="funnel", variant="full",
                           hidden=sol.hidden, cover=sol.cover,
                           split_point=sol.split_point, stats=sol.stats,
                           elapsed_seconds=0.125,
                           verification={"hidden_set_valid": True})
    loaded = SolutionDocument.loads(doc.dumps())
    assert loaded.polygon.vertices == doc.polygon.vertices
    assert loaded.hidden == doc.hidden
    assert loaded.cover == doc.cover
    assert loaded.split_point == doc.split_point  # exact rationals preserved
    assert loaded.stats.orientation_tests == doc.stats.orientation_tests
    assert loaded.elapsed_seconds == doc.elapsed_seconds
    assert loaded.verification == doc.verification
    # a second roundtrip is byte-identical
    assert loaded.dumps() == doc.dumps()


def test_solution_document_roundtrip_pseudo(fix_p6, pseudo_p6):
    sol = solve_pseudo(pseudo_p6)
    doc = SolutionDocument(polygon=fix_p6, kind="pseudotriangle", variant="full",
                           hidden=sol.hidden, cover=sol.cover,
                           split_point=sol.split_point, stats=sol.stats)
    loaded = SolutionDocument.loads(doc.dumps())
    assert loaded.split_point == sol.split_point
    assert loaded.cover == sol.cover


def test_no_validate_skips_simplicity_but_orients():
    text = "3\n0 0\n4 0\n2 4\n"  # counter-clockwise
    poly = parse_polygon_text(text, validate=False)
    assert poly.signed_area() < 0
