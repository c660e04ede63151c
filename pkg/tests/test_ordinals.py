import pytest
from hypothesis import given
from hypothesis import strategies as st

from jtalg.ordinals import Ord, OrdinalSyntaxError, format_ord, parse_ord

ords = st.builds(Ord, st.integers(min_value=0, max_value=50),
                 st.integers(min_value=0, max_value=10**6))


def test_literals():
    assert parse_ord("7") == Ord(0, 7)
    assert parse_ord("w") == Ord(1, 0)
    assert parse_ord("w+4") == Ord(1, 4)
    assert parse_ord("w*3") == Ord(3, 0)
    assert parse_ord("w*2+9") == Ord(2, 9)
    assert parse_ord(" w+1 ") == Ord(1, 1)
    assert parse_ord("w+0") == Ord(1, 0)


@pytest.mark.parametrize("bad", ["", "w*", "w-1", "3+w", "w*0", "ww", "w*2+", "x"])
def test_bad_literals(bad):
    with pytest.raises(OrdinalSyntaxError):
        parse_ord(bad)


@given(ords)
def test_roundtrip(o):
    assert parse_ord(format_ord(o)) == o


def test_order_is_lexicographic():
    assert Ord(0, 10**9) < Ord(1, 0) < Ord(1, 1) < Ord(2, 0)
    assert max(Ord(1, 5), Ord(2, 0)) == Ord(2, 0)


def test_parts():
    o = Ord(2, 7)
    assert o.limit_part() == Ord(2, 0)
    assert o.plus(3) == Ord(2, 10)
    assert not o.is_base and Ord(0, 3).is_base


def test_negative_parts_rejected():
    with pytest.raises(ValueError):
        Ord(-1, 0)
    with pytest.raises(ValueError):
        Ord(0, -2)
