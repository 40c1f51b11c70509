import pytest

from hiddencover import classify, normalize_strict, pt, validate_simple


def make_polygon(coords):
    return normalize_strict(validate_simple([pt(x, y) for x, y in coords]))


@pytest.fixture
def fix_f3():
    """Triangle funnel, apex t=2."""
    return make_polygon([(0, 0), (2, 4), (4, 0)])


@pytest.fixture
def fix_f5():
    """Case-1 funnel, apex t=3."""
    return make_polygon([(0, 0), (2, 2), (3, 5), (4, 2), (6, 0)])


@pytest.fixture
def fix_f4():
    """Case-2 funnel, apex t=3."""
    return make_polygon([(0, 0), (4, 1), (6, 4), (5, 0)])


@pytest.fixture
def fix_p6():
    """Pseudotriangle with convex vertices 1, 3, 5."""
    return make_polygon([(0, 0), (3, 3), (4, 6), (5, 3), (8, 0), (4, 1)])


@pytest.fixture
def funnel_f3(fix_f3):
    return classify(fix_f3).funnel


@pytest.fixture
def funnel_f5(fix_f5):
    return classify(fix_f5).funnel


@pytest.fixture
def funnel_f4(fix_f4):
    return classify(fix_f4).funnel


@pytest.fixture
def pseudo_p6(fix_p6):
    return classify(fix_p6).pseudotriangle
