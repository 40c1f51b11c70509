import random
from fractions import Fraction

import pytest

from hiddencover import (
    ConvexCover,
    ConvexPiece,
    CoverMode,
    GenConfig,
    HiddenSet,
    brute_force_hvs,
    certify_homestead,
    check_cover,
    check_hidden_set,
    check_vertex_cover,
    gen_funnel,
    interior_samples,
    point_in_polygon,
    pt,
    solve_funnel,
    solve_funnel_vertices,
    solve_pseudo,
)
from hiddencover.oracles import BruteForceLimitError
from hiddencover.visibility import PointOutsidePolygonError


class TestCheckHiddenSet:
    def test_valid_pair(self, fix_f5):
        hidden = HiddenSet((pt(1, 1), pt(Fraction(5, 2), Fraction(7, 2))))
        assert check_hidden_set(fix_f5, hidden).valid

    def test_visible_pair_reported(self, fix_f5):
        hidden = HiddenSet((pt(1, 1), pt(2, 1)))
        report = check_hidden_set(fix_f5, hidden)
        assert not report.valid
        assert report.violations[0][0] == "visible-pair"

    def test_singleton_valid(self, fix_f4):
        assert check_hidden_set(fix_f4, HiddenSet((pt(2, Fraction(1, 2)),))).valid

    def test_outside_point_raises(self, fix_f5):
        with pytest.raises(PointOutsidePolygonError):
            check_hidden_set(fix_f5, HiddenSet((pt(-3, -3),)))

    def test_interior_points_allowed(self, fix_f5):
        # Hidden points are not required to be on the boundary by the check.
        hidden = HiddenSet((pt(1, Fraction(1, 2)), pt(4, Fraction(3, 2))))
        report = check_hidden_set(fix_f5, hidden)
        assert isinstance(report.valid, bool)


class TestCheckCover:
    def test_solver_cover_valid(self, fix_f5, funnel_f5):
        sol = solve_funnel(funnel_f5)
        assert check_cover(fix_f5, sol.cover, samples=1000).valid

    def test_missing_piece_detected(self, fix_f5, funnel_f5):
        sol = solve_funnel(funnel_f5)
        broken = ConvexCover(sol.cover.pieces[:-1], CoverMode.FULL)
        report = check_cover(fix_f5, broken, samples=200)
        assert not report.valid
        kinds = {kind for kind, _ in report.violations}
        assert "uncovered-point" in kinds or "area-mismatch" in kinds

    def test_nonconvex_piece_detected(self, fix_f5):
        bad = ConvexPiece((pt(0, 0), pt(2, 2), pt(4, 2), pt(3, 3)))
        cover = ConvexCover((bad,), CoverMode.FULL)
        report = check_cover(fix_f5, cover, samples=50)
        assert ("non-convex-piece", 0) in report.violations

    def test_piece_outside_detected(self, fix_f5):
        # Convex piece poking out of the funnel across the left chain.
        bad = ConvexPiece((pt(0, 0), pt(1, 4), pt(4, 2)))
        cover = ConvexCover((bad,), CoverMode.FULL)
        report = check_cover(fix_f5, cover, samples=50)
        assert ("piece-not-inside", 0) in report.violations

    def test_overlap_detected(self, fix_f3):
        tri = ConvexPiece((pt(0, 0), pt(2, 4), pt(4, 0)))
        inner = ConvexPiece((pt(1, 1), pt(2, 3), pt(3, 1)))
        cover = ConvexCover((tri, inner), CoverMode.FULL)
        report = check_cover(fix_f3, cover, samples=50)
        kinds = {kind for kind, _ in report.violations}
        assert "overlapping-pieces" in kinds
        assert "area-mismatch" in kinds

    def test_mode_guard(self, fix_f5, funnel_f5):
        vsol = solve_funnel_vertices(funnel_f5)
        with pytest.raises(ValueError):
            check_cover(fix_f5, vsol.cover)


class TestCheckVertexCover:
    def test_solver_output_valid(self, fix_f5, funnel_f5):
        assert check_vertex_cover(fix_f5, solve_funnel_vertices(funnel_f5).cover).valid

    def test_missing_apex_piece(self, fix_f5, funnel_f5):
        sol = solve_funnel_vertices(funnel_f5)
        broken = ConvexCover(sol.cover.pieces[:1], CoverMode.VERTEX)
        report = check_vertex_cover(fix_f5, broken)
        assert ("uncovered-vertex", 3) in report.violations

    def test_hull_piece_not_inside(self, fix_f5):
        hull = ConvexPiece((pt(0, 0), pt(3, 5), pt(6, 0)))
        report = check_vertex_cover(fix_f5, ConvexCover((hull,), CoverMode.VERTEX))
        assert ("piece-not-inside", 0) in report.violations


class TestBruteForce:
    def test_f3(self, fix_f3):
        assert brute_force_hvs(fix_f3) == (1, (1,))

    def test_f5(self, fix_f5):
        assert brute_force_hvs(fix_f5) == (2, (1, 3))

    def test_f4(self, fix_f4):
        assert brute_force_hvs(fix_f4) == (2, (1, 3))

    def test_limit_refused(self):
        funnel = gen_funnel(GenConfig(n=20, seed=1))
        with pytest.raises(BruteForceLimitError):
            brute_force_hvs(funnel.base, limit=18)

    def test_deterministic(self, fix_p6):
        assert brute_force_hvs(fix_p6) == brute_force_hvs(fix_p6)


class TestCertifyHomestead:
    def test_f5_certified(self, fix_f5, funnel_f5):
        assert certify_homestead(fix_f5, solve_funnel(funnel_f5), samples=200).valid

    def test_f3_certified(self, fix_f3, funnel_f3):
        assert certify_homestead(fix_f3, solve_funnel(funnel_f3), samples=50).valid

    def test_p6_not_homestead(self, fix_p6, pseudo_p6):
        sol = solve_pseudo(pseudo_p6)
        report = certify_homestead(fix_p6, sol, samples=200)
        assert not report.valid
        assert ("cardinality-mismatch", (2, 3)) in report.violations
        # while the component checks themselves pass
        assert check_hidden_set(fix_p6, sol.hidden).valid
        assert check_cover(fix_p6, sol.cover, samples=200).valid

    def test_soundness_vs_brute_force(self):
        # Whenever the certificate accepts, the brute-force optimum can not
        # exceed the cover size (hidden vertex sets are hidden sets).
        for seed in range(30):
            n = random.Random(seed).randint(4, 14)
            funnel = gen_funnel(GenConfig(n=n, seed=seed))
            sol = solve_funnel(funnel)
            if certify_homestead(funnel.base, sol, samples=40).valid:
                assert brute_force_hvs(funnel.base)[0] <= len(sol.cover)

    def test_piece_deletion_rejected(self):
        for seed in (2, 9, 31):
            funnel = gen_funnel(GenConfig(n=9, seed=seed))
            sol = solve_funnel(funnel)
            for drop in range(len(sol.cover.pieces)):
                pieces = tuple(p for i, p in enumerate(sol.cover.pieces) if i != drop)
                report = check_cover(funnel.base, ConvexCover(pieces, CoverMode.FULL),
                                     samples=120)
                assert not report.valid


def test_interior_samples_inside_and_deterministic(fix_f5):
    a = interior_samples(fix_f5, 64)
    b = interior_samples(fix_f5, 64)
    assert a == b
    assert len(a) == 64
    assert all(point_in_polygon(q, fix_f5) for q in a)


def test_samples_never_contradict_exact_checks(fix_f4, funnel_f4):
    # Sampling coverage agrees with the exact certificate on solver output.
    sol = solve_funnel(funnel_f4)
    report = check_cover(fix_f4, sol.cover, samples=2000)
    assert report.valid
