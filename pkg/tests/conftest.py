import pytest

from scrollcalc import Scroll

TEST_SCROLLS = (
    Scroll(1, 1),
    Scroll(1, 2),
    Scroll(2, 2),
    Scroll(1, 3),
    Scroll(2, 3),
)


@pytest.fixture(params=TEST_SCROLLS, ids=lambda s: f"S({s.a0},{s.a1})")
def scroll(request) -> Scroll:
    return request.param
