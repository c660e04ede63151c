import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from jtalg.jomega import (TABLE_BLOCK, jw_descent, jw_handle, jw_left, jw_mul,
                          jw_right, jw_table, jw_unpair, jw_verify)

naturals = st.integers(min_value=0, max_value=10**30)


def test_seed_cells():
    assert jw_mul(0, 0) == 1
    assert jw_mul(0, 1) == 2
    assert jw_mul(1, 0) == 0


def test_known_products():
    assert jw_mul(3, 4) == 32
    assert jw_mul(4, 4) == 40
    assert jw_mul(2, 2) == 12


def test_table_block():
    assert jw_table(5, 5) == [list(row) for row in TABLE_BLOCK]
    assert jw_table(5, 5)[2] == [3, 7, 12, 18, 25]


def test_unpair_examples():
    assert jw_unpair(13) == (1, 3)
    assert jw_unpair(23) == (4, 2)
    assert jw_unpair(0) == (1, 0)
    assert jw_left(13) == 1
    assert jw_right(23) == 2


def test_descent_examples():
    assert jw_descent(13) == [13, 1, 0]
    assert jw_descent(0) == [0]
    assert jw_descent(40) == [40, 4, 1, 0]


@given(naturals)
def test_unpair_inverts_mul(n):
    p, q = jw_unpair(n)
    assert jw_mul(p, q) == n


@given(st.integers(min_value=0, max_value=10**15),
       st.integers(min_value=0, max_value=10**15))
def test_mul_inverts_unpair(p, q):
    assert jw_unpair(jw_mul(p, q)) == (p, q)


@given(st.integers(min_value=1, max_value=10**30))
def test_regressive(n):
    p, q = jw_unpair(n)
    assert p < n and q < n


@given(naturals)
@settings(max_examples=50)
def test_descent_reaches_zero(n):
    chain = jw_descent(n)
    assert chain[-1] == 0
    assert all(a > b for a, b in zip(chain, chain[1:]))


def test_every_cell_unique_on_window():
    seen = {}
    for p in range(60):
        for q in range(60):
            v = jw_mul(p, q)
            assert v not in seen
            seen[v] = (p, q)
    # the filled window covers an initial segment of the naturals
    covered = {v for v in seen if v < 60 * 60 // 2}
    assert covered == set(range(60 * 60 // 2))


def test_verify():
    report = jw_verify(2000)
    assert report.ok
    assert report.values_checked == 2001
    assert report.pairs_checked == 2001 * 2002 // 2
    payload = report.to_json()
    assert payload["ok"] is True and payload["failures"] == []


def test_verify_rejects_tiny_bounds():
    with pytest.raises(ValueError):
        jw_verify(2)


def test_handle_probe_is_identity():
    alg = jw_handle()
    assert [alg.probe_enumerator(i) for i in range(5)] == [0, 1, 2, 3, 4]
    assert alg.contains(7) and not alg.contains(-1) and not alg.contains(True)
