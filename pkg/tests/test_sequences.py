import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from invseq import sequences as sq
from invseq.avoidance import iter_avoiders, parse_pattern


def test_number_families():
    assert [sq.catalan(n) for n in range(8)] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert [sq.large_schroder(n) for n in range(7)] == [1, 2, 6, 22, 90, 394, 1806]
    assert sq.bell_numbers(8) == [1, 1, 2, 5, 15, 52, 203, 877]
    assert sq.euler_zigzag(9) == [1, 1, 1, 2, 5, 16, 61, 272, 1385]
    assert [sq.baxter(n) for n in range(1, 8)] == [1, 2, 6, 22, 92, 422, 2074]
    assert [sq.stirling2(5, k) for k in range(1, 6)] == [1, 15, 25, 10, 1]


def test_registry_a7():
    want = {"identity": 7, "class12": 12, "fibonacci": 21, "lazy_caterer": 22, "class33": 33,
            "powers_of_two": 64, "grassmannian": 121, "class151": 151, "class185": 185, "class193": 193,
            "class233": 233, "catalan": 429, "nexus": 523, "bell": 877, "class304": 304,
            "central_binomial": 924, "euler_updown": 1385, "class1694": 1694, "large_schroder": 1806,
            "baxter": 2074, "class2549": 2549, "semi_baxter": 2958, "class2958_snab": 2958,
            "class3207": 3207, "class805": 805, "class1016": 1016, "class1079A": 1079, "factorial": 5040}
    for name, a7 in want.items():
        assert sq.known_sequence(name, 7)[-1] == a7, name
    assert sq.known_sequence("class805", 7) == [1, 2, 6, 20, 68, 233, 805]
    assert sq.known_sequence("uc_any_ne_ne", 6) == [1, 2, 3, 3, 3, 3]
    with pytest.raises(KeyError):
        sq.known_sequence("nope", 3)


def test_triangles():
    assert sq.triangle_row("s304", 3) == [0, 3, 1]
    assert sum(sq.s_triangle_304_header(3, k) for k in range(1, 4)) == 10
    assert sq.triangle_row("nexus", 3) == [1, 3, 1]
    assert sq.snab_2958(3, 1, -1) == 2
    assert [sq.snab_total(n) for n in range(1, 8)] == [1, 2, 6, 23, 104, 530, 2958]
    assert all(sq.snab_total(n) == sq.snab_total_split(n) for n in range(1, 9))


def test_series():
    assert sq.series_solve("I_catalan", 10)[:8] == [1, 1, 2, 5, 14, 42, 132, 429]
    assert sq.series_solve("A200753", 10)[7] == 1694
    assert sq.series_solve("E_1806C", 10)[7] == 1806
    assert sq.series_solve("A_805", 10)[:8] == [1, 1, 2, 6, 20, 68, 233, 805]
    assert sq.series_solve("A_805_cases", 10)[:5] == [1, 2, 5, 15, 48]
    assert sq.closed_1806c(8)[1:8] == [1, 2, 6, 22, 90, 394, 1806]


def test_power_series_arithmetic():
    inv = sq.ps_inv([1, -1], 6)
    assert inv == [1] * 7
    root = sq.ps_sqrt([1, -4], 6)
    assert sq.ps_mul(root, root, 6) == [1, -4, 0, 0, 0, 0, 0]
    assert not any(isinstance(c, float) for c in root)


@given(st.integers(0, 25))
def test_closed_805_against_catalan(n):
    assert sq.closed_805(n)[n] == sq.catalan(n + 1) - sum(sq.catalan(i) for i in range(1, n + 1))


def test_succession_rule():
    levels = sq.omega_semi_levels(2)
    assert levels[0] == {(1, 1): 1}
    assert levels[1] == {(1, 2): 1, (2, 1): 1}
    assert sq.omega_semi_level_counts(7)[-1] == 2958
    assert sq.active_sites_101_201((0,)) == ([0, 1], (1, 1))
    w = parse_pattern("101,201")
    for n in range(1, 7):
        assert sum(1 for _ in iter_avoiders(n, w)) == sq.omega_semi_level_counts(n)[-1]


def test_fingerprint():
    hits = sq.fingerprint([1, 2, 5, 14, 42, 132, 429])
    assert any(h["id"] == "A000108" and h["n_of_first"] == 1 for h in hits)
    assert sq.fingerprint([0, 0, 0, 0, 0]) == []
    assert sq.fingerprint([3, 1, 4, 15, 9, 26, 5]) == []
    with pytest.raises(ValueError):
        sq.fingerprint([1, 2])


def test_database_override(tmp_path, monkeypatch):
    db = [{"id": "X1", "description": "test", "offset": 1, "terms": [9, 8, 7, 6, 5, 4]}]
    (tmp_path / "sequences.json").write_text(json.dumps(db))
    monkeypatch.setenv("INVSEQ_DATA", str(tmp_path))
    assert sq.data_dir() == tmp_path
    assert sq.fingerprint([8, 7, 6, 5, 4]) == [{"id": "X1", "description": "test", "align": 1, "n_of_first": 2}]


def test_database_entries_well_formed():
    db = sq.load_known_sequences()
    assert len({e["id"] for e in db}) == len(db)
    for e in db:
        assert e["terms"] and all(isinstance(t, int) for t in e["terms"])
        if "rows" in e:
            assert [t for row in e["rows"] for t in row] == e["terms"]
