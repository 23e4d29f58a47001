import pytest

from superschur.shapes import Partition, SkewShape
from superschur.tableaux import (Comparison, ShapeMismatchError, SkewTableau,
                                 canonical_column, canonical_row,
                                 clausen_column, clausen_compare_col,
                                 clausen_compare_row, clausen_row, content,
                                 is_anti_semistandard, is_lattice,
                                 is_semistandard, is_shifted_yamanouchi,
                                 place_word, row_word, shifted_word)

P = Partition


def tab(outer, inner, rows):
    return SkewTableau(SkewShape(P(outer), P(inner)), tuple(tuple(r) for r in rows))


# the two running examples: GL(2|3) weight (2,2|1,1) and GL(3|3) weight (5,4,4|3,2,1)
T_SMALL = tab((2, 2), (1,), [(None, 4), (3, 5)])
T_BIG = tab((3, 3, 3, 3, 1), (3, 2),
            [(None,) * 3, (None, None, 4), (4, 5, 5), (5, 6, 6), (6,)])


def test_entry_layout_is_validated():
    with pytest.raises(ValueError):
        tab((2, 2), (1,), [(4, 4), (3, 5)])
    with pytest.raises(ValueError):
        tab((2, 2), (1,), [(None, 4), (3,)])


def test_content():
    assert content(T_SMALL, 5) == (0, 0, 1, 1, 1)
    assert content(T_BIG, 6) == (0, 0, 0, 2, 3, 3)
    empty = tab((1,), (1,), [(None,)])
    assert content(empty, 3) == (0, 0, 0)


def test_is_semistandard():
    assert is_semistandard(T_SMALL)
    assert is_semistandard(T_BIG)
    assert not is_semistandard(tab((3, 3, 1), (2, 1), [(None, None, 6), (None, 4, 4), (5,)]))
    assert is_semistandard(tab((1,), (), [(7,)]))


def test_is_anti_semistandard():
    assert is_anti_semistandard(tab((5, 5, 4), (3, 2, 1),
                                    [(None, None, None, 3, 1),
                                     (None, None, 3, 2, 1),
                                     (None, 3, 2, 1)]))
    assert not is_anti_semistandard(tab((2,), (), [(1, 2)]))
    # column 1 above 2 makes the companion of the small example fail
    assert not is_anti_semistandard(tab((2, 2, 1), (1, 1),
                                        [(None, 1), (None, 2), (2,)]))
    assert is_anti_semistandard(tab((2, 2, 1), (1, 1),
                                    [(None, 2), (None, 1), (2,)]))


def test_row_word():
    assert row_word(T_SMALL) == (4, 5, 3)
    assert row_word(T_BIG) == (4, 5, 5, 4, 6, 6, 5, 6)
    assert row_word(tab((1,), (1,), [(None,)])) == ()


def test_place_word():
    assert place_word(T_SMALL) == (2, 2, 1)
    t = tab((3, 3), (1,), [(None, 4, 3), (3, 5, 4)])
    assert place_word(t) == (3, 2, 3, 2, 1)
    assert place_word(tab((4,), (1,), [(None, 9, 9, 9)])) == (4, 3, 2)


def test_canonical_fillings():
    assert canonical_column(SkewShape(P((2, 2, 2)), P((1,)))).rows == \
        ((None, 2), (1, 2), (1, 2))
    assert canonical_row(SkewShape(P((3, 2)), P(())), 2).rows == \
        ((3, 3, 3), (4, 4))
    assert canonical_column(SkewShape(P(()), P(()))).rows == ()


def test_shifted_word():
    # prefix lists the leg rows: symbol m+i repeated leg[i] times
    assert shifted_word(T_SMALL, P((1, 1)), 2) == (3, 4, 4, 5, 3)
    assert "".join(map(str, shifted_word(T_BIG, P((3, 2, 1)), 3))) == \
        "44455645546656"
    assert shifted_word(T_SMALL, P(()), 2) == row_word(T_SMALL)


def test_is_lattice():
    assert is_lattice((4, 4, 4, 5, 5, 6, 4, 5, 5, 4, 6, 6, 5, 6), 3)
    assert not is_lattice((5, 4), 3)
    assert is_lattice((), 7)
    assert not is_lattice((3, 4, 4, 5, 3), 2)
    assert is_lattice((3, 4, 3, 5, 4), 2)


def test_shifted_yamanouchi():
    assert is_shifted_yamanouchi(T_BIG, P((3, 2, 1)), 3)
    # the small running example fails: its second letter outruns the shift
    assert not is_shifted_yamanouchi(T_SMALL, P((1, 1)), 2)
    other = tab((2, 2), (1,), [(None, 3), (4, 5)])
    assert is_shifted_yamanouchi(other, P((1, 1)), 2)
    # enough slack in the leg makes any filling pass
    wide = tab((2,), (), [(4, 3)])
    assert is_shifted_yamanouchi(wide, P((9, 5)), 2)


def test_shifted_yamanouchi_matches_lattice_route():
    for t, leg, m in [(T_SMALL, P((1, 1)), 2), (T_BIG, P((3, 2, 1)), 3),
                      (tab((2, 2), (1,), [(None, 3), (4, 5)]), P((1, 1)), 2)]:
        assert is_shifted_yamanouchi(t, leg, m) == \
            is_lattice(shifted_word(t, leg, m), m)


def test_clausen_matrices_golden():
    c = clausen_column(T_BIG, 3, 3)
    assert c.data == ((2, 1, 1), (5, 3, 2), (8, 5, 3))
    r = clausen_row(T_BIG, 3, 3)
    assert r.data == ((1, 1, 1), (2, 4, 4), (2, 5, 7), (2, 5, 8))


def test_clausen_empty():
    empty = tab((1,), (1,), [(None,)])
    assert clausen_column(empty, 2, 2).data == ((0,), (0,))
    assert clausen_row(empty, 2, 2).data == ()


def _row_perms(t):
    from itertools import permutations
    cells_by_row = {}
    for c in t.shape.cells():
        cells_by_row.setdefault(c[0], []).append(c)
    rows = sorted(cells_by_row.values())
    outs = []

    def rec(i, cur):
        if i == len(rows):
            outs.append(SkewTableau.from_entries(
                t.shape, {c: t[cur.get(c, c)] for c in t.shape.cells()}))
            return
        for perm in permutations(rows[i]):
            for a, b in zip(rows[i], perm):
                cur[a] = b
            rec(i + 1, cur)

    rec(0, {})
    return outs


def test_clausen_row_matrix_invariant_under_row_permutations():
    base = clausen_row(T_SMALL, 2, 3).data
    for t in _row_perms(T_SMALL):
        assert clausen_row(t, 2, 3).data == base


def test_clausen_column_matrix_invariant_under_column_permutations():
    t = tab((2, 2), (), [(4, 5), (5, 3)])
    flipped = tab((2, 2), (), [(5, 5), (4, 3)])
    assert clausen_column(t, 2, 3).data == clausen_column(flipped, 2, 3).data


def test_comparators():
    a = clausen_column(T_SMALL, 2, 3)
    assert clausen_compare_col(a, a) is Comparison.EQUAL_MATRICES
    other = tab((2, 2), (1,), [(None, 3), (4, 5)])
    b = clausen_column(other, 2, 3)
    one = clausen_compare_col(a, b)
    rev = clausen_compare_col(b, a)
    assert {one, rev} == {Comparison.LESS_STRICT, Comparison.GREATER_STRICT}
    with pytest.raises(ShapeMismatchError):
        clausen_compare_col(a, clausen_row(T_SMALL, 2, 3))


def test_comparator_rejects_different_sizes():
    a = clausen_column(T_SMALL, 2, 3)
    b = clausen_column(T_BIG, 3, 3)
    with pytest.raises(ShapeMismatchError):
        clausen_compare_col(a, b)


def test_words_have_equal_length():
    for t in (T_SMALL, T_BIG):
        assert len(row_word(t)) == len(place_word(t)) == t.size


def test_json_roundtrip():
    d = T_SMALL.to_json()
    assert d["rows"] == [[None, 4], [3, 5]]
    assert SkewTableau.from_json(d) == T_SMALL
