import math
import random

import numpy as np
import pytest

from rprime import (
    FieldSpecError,
    build_tables,
    count_rprime_mobius,
    ideal_count,
    load_table,
    local_series,
    save_table,
)
from rprime.fields import SplittingType


def test_local_series_inert_quadratic():
    a, b = local_series(SplittingType(((1, 2),)), 3, 81)
    assert a == [1, 0, 1, 0, 1]
    assert b == [1, 0, -1, 0, 0]


def test_local_series_split_quadratic():
    a, b = local_series(SplittingType(((1, 1), (1, 1))), 5, 625)
    assert a == [1, 2, 3, 4, 5]
    assert b == [1, -2, 1, 0, 0]


def test_local_series_ramified_quadratic():
    a, b = local_series(SplittingType(((2, 1),)), 2, 16)
    assert a == [1, 1, 1, 1, 1]
    assert b == [1, -1, 0, 0, 0]


def test_tables_rational_field_is_mobius(field_q):
    table = build_tables(field_q, 30)
    assert table.a[1:].tolist() == [1] * 30
    mobius = [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert table.b[1:11].tolist() == mobius


def test_tables_gaussian_counts(field_qi):
    table = build_tables(field_qi, 10)
    assert table.a[1:11].tolist() == [1, 1, 0, 1, 2, 0, 0, 1, 1, 2]


def test_tables_low_class_number_counts(fields):
    table = build_tables(fields["Qsqrtm5"], 6)
    assert table.a[1:7].tolist() == [1, 1, 2, 1, 1, 2]


def test_tables_starting_values(fields, table_q_1e4, table_qi_1e4):
    for table in (table_q_1e4, table_qi_1e4):
        assert table.a[1] == 1 and table.b[1] == 1
        assert np.all(np.abs(table.b) <= table.a)


def test_tables_multiplicative_spot_check(table_qi_1e4):
    rng = random.Random(77)
    a = table_qi_1e4.a
    b = table_qi_1e4.b
    checked = 0
    while checked < 1000:
        u = rng.randrange(2, 200)
        v = rng.randrange(2, table_qi_1e4.N // u)
        if math.gcd(u, v) != 1:
            continue
        assert a[u * v] == a[u] * a[v]
        assert b[u * v] == b[u] * b[v]
        checked += 1


def test_ideal_count_floor_semantics(table_q_1e4):
    assert ideal_count(table_q_1e4, 0.5) == 0
    assert ideal_count(table_q_1e4, 10.7) == 10
    assert ideal_count(table_q_1e4, 10**4) == 10**4


def test_ideal_count_gaussian_anchor(table_qi_1e4):
    assert ideal_count(table_qi_1e4, 100) == 79


def test_ideal_count_range_error(table_q_1e4):
    with pytest.raises(ValueError, match="exceeds"):
        ideal_count(table_q_1e4, 10**4 + 1)


def test_mobius_count_examples(table_q_1e4):
    assert count_rprime_mobius(table_q_1e4, 10, 2, 1) == 63
    assert count_rprime_mobius(table_q_1e4, 10, 1, 2) == 7


def test_mobius_count_unit_only(fields, table_q_1e4, table_qi_1e4):
    for table in (table_q_1e4, table_qi_1e4):
        for x in (1, 2, 17, 100, 9999):
            assert count_rprime_mobius(table, x, 1, 1) == 1


def test_mobius_count_real_x(table_q_1e4):
    assert count_rprime_mobius(table_q_1e4, 10.9, 2, 1) == 63


def test_mobius_count_range_checks(table_q_1e4):
    with pytest.raises(ValueError):
        count_rprime_mobius(table_q_1e4, 0.5, 1, 1)
    with pytest.raises(ValueError):
        count_rprime_mobius(table_q_1e4, 2 * 10**4, 1, 1)


def test_mobius_count_python_int_fallback_matches(table_qi_1e4, monkeypatch):
    import rprime.sieve as sieve_mod

    fast = count_rprime_mobius(table_qi_1e4, 5000, 3, 1)
    monkeypatch.setattr(sieve_mod, "_INT64_SAFE", 0)
    slow = count_rprime_mobius(table_qi_1e4, 5000, 3, 1)
    assert fast == slow


def test_table_cache_roundtrip(tmp_path, field_qi, table_qi_1e4):
    path = tmp_path / "qi.tab"
    save_table(table_qi_1e4, str(path))
    loaded = load_table(field_qi, str(path))
    assert loaded.N == table_qi_1e4.N
    assert np.array_equal(loaded.a, table_qi_1e4.a)
    assert np.array_equal(loaded.b, table_qi_1e4.b)
    assert np.array_equal(loaded.I_prefix, table_qi_1e4.I_prefix)


def test_table_cache_rejects_wrong_field(tmp_path, field_q, table_qi_1e4):
    path = tmp_path / "qi.tab"
    save_table(table_qi_1e4, str(path))
    with pytest.raises(FieldSpecError, match="fingerprint"):
        load_table(field_q, str(path))


def test_table_cache_rejects_garbage(tmp_path, field_q):
    path = tmp_path / "junk.tab"
    path.write_bytes(b"not a cache at all")
    with pytest.raises(FieldSpecError, match="not a table cache"):
        load_table(field_q, str(path))


def test_tables_are_read_only(table_q_1e4):
    with pytest.raises(ValueError):
        table_q_1e4.a[3] = 99
