import pytest

from superschur.lr import (CellBijection, NotMarkedError, ShapeOverflowError,
                           embed_plus, enumerate_lr, enumerate_marked,
                           enumerate_pictures, enumerate_ssyt, is_behaved,
                           is_marked, is_picture, lr_coefficient,
                           lr_sum_identity, marked_picture_correspondence,
                           opp, picture_readings, picture_to_marked,
                           reposition, restrict_plus)
from superschur.shapes import HookSplit, Partition, SkewShape, hook_split
from superschur.tableaux import SkewTableau, is_anti_semistandard, is_semistandard

P = Partition


def tab(outer, inner, rows):
    return SkewTableau(SkewShape(P(outer), P(inner)), tuple(tuple(r) for r in rows))


def test_enumerate_ssyt_counts():
    assert len(enumerate_ssyt(SkewShape(P((1,)), P(())), (1,))) == 1
    assert len(enumerate_ssyt(SkewShape(P((2, 1)), P(())), (1, 1, 1))) == 2
    assert enumerate_ssyt(SkewShape(P((2, 1)), P(())), (1, 1)) == []


def test_enumerate_ssyt_is_sorted_by_reading_word():
    tabs = enumerate_ssyt(SkewShape(P((2, 2)), P((1,))), (0, 0, 1, 1, 1))
    from superschur.tableaux import row_word
    words = [row_word(t) for t in tabs]
    assert words == sorted(words)


def test_lr_coefficient_goldens():
    assert lr_coefficient(P((3, 1)), P((3, 1)), P(())) == 1
    assert lr_coefficient(P((2, 1)), P((1,)), P((1, 1))) == 1
    assert lr_coefficient(P((2, 2)), P((1,)), P((2, 1))) == 1
    assert lr_coefficient(P((3, 3)), P((1,)), P((2, 2, 1))) == 0
    assert lr_coefficient(P((2, 1)), P((3,)), P((1,))) == 0  # no containment
    # classical multiplicity-two example
    assert lr_coefficient(P((4, 3, 2, 1)), P((2, 1)), P((3, 2, 1, 1))) == 2


def test_reposition_small_example():
    t = tab((2, 2), (1,), [(None, 4), (3, 5)])
    pair = reposition(t, P((1, 1)), P((2, 2, 1)), 2)
    assert pair.t_minus == tab((2, 2, 1), (1, 1), [(None, 1), (None, 2), (2,)])
    assert pair.rpos.as_dict() == {(1, 2): (2, 2), (2, 1): (1, 2), (2, 2): (3, 1)}


def test_reposition_big_example():
    t = tab((3, 3, 3, 3, 1), (3, 2),
            [(None,) * 3, (None, None, 4), (4, 5, 5), (5, 6, 6), (6,)])
    pair = reposition(t, P((3, 2, 1)), P((5, 5, 4)), 3)
    assert pair.t_minus == tab((5, 5, 4), (3, 2, 1),
                               [(None, None, None, 3, 1),
                                (None, None, 3, 2, 1),
                                (None, 3, 2, 1)])


def test_reposition_empty():
    t = tab((1,), (1,), [(None,)])
    pair = reposition(t, P((1,)), P((1,)), 2)
    assert pair.t_minus.size == 0


def test_reposition_overflow():
    t = tab((2,), (), [(3, 3)])
    with pytest.raises(ShapeOverflowError):
        reposition(t, P(()), P((1, 1)), 2)


def test_opp_examples():
    t5 = tab((3, 3), (1,), [(None, 4, 3), (3, 5, 4)])
    assert opp(t5, 2) == tab((2, 2, 1), (), [(3, 1), (2, 3), (2,)])
    t6 = tab((6, 5, 4, 3, 1), (3, 2),
             [(None, None, None, 4, 4, 4), (None, None, 4, 5, 5),
              (4, 5, 5, 6), (5, 6, 6), (6,)])
    assert opp(t6, 3) == tab((5, 5, 4), (),
                             [(6, 5, 4, 3, 1), (5, 4, 3, 2, 1), (4, 3, 2, 1)])
    empty = tab((1,), (1,), [(None,)])
    assert opp(empty, 2).size == 0


def test_behaved():
    t5 = tab((3, 3), (1,), [(None, 4, 3), (3, 5, 4)])
    assert not is_behaved(t5, 2)
    t6 = tab((6, 5, 4, 3, 1), (3, 2),
             [(None, None, None, 4, 4, 4), (None, None, 4, 5, 5),
              (4, 5, 5, 6), (5, 6, 6), (6,)])
    assert is_behaved(t6, 3)


def test_embed_and_restrict():
    lam = HookSplit(2, 3, P((2, 2)), P((1, 1)))
    t = tab((2, 2), (1,), [(None, 4), (3, 5)])
    ambient = embed_plus(t, lam, P((1,)))
    assert ambient == tab((3, 3), (1,), [(None, 4, 3), (3, 5, 4)])
    assert restrict_plus(ambient, 2) == t


def test_is_marked():
    # in the small instance exactly one of the two semistandard fillings works
    good = tab((2, 2), (1,), [(None, 3), (4, 5)])
    bad = tab((2, 2), (1,), [(None, 4), (3, 5)])
    assert is_marked(good, P((1, 1)), P((2, 2, 1)), 2)
    assert not is_marked(bad, P((1, 1)), P((2, 2, 1)), 2)
    big = tab((3, 3, 3, 3, 1), (3, 2),
              [(None,) * 3, (None, None, 4), (4, 5, 5), (5, 6, 6), (6,)])
    assert is_marked(big, P((3, 2, 1)), P((5, 5, 4)), 3)
    not_ss = tab((3, 3, 1), (2, 1), [(None, None, 6), (None, 4, 4), (5,)])
    assert not is_marked(not_ss, P((1, 1)), P((3, 2, 1)), 3)


def test_marked_but_ambient_not_lattice():
    # narrow arm: the embedded tableau is neither semistandard nor lattice
    lam = HookSplit(2, 4, P((2, 2)), P((1, 1)))
    t = tab((2, 2), (), [(3, 5), (4, 6)])
    assert is_marked(t, P((1, 1)), P((2, 2, 1, 1)), 2)
    ambient = embed_plus(t, lam, P(()))
    from superschur.tableaux import is_lattice, row_word
    assert not is_semistandard(ambient)
    assert not is_lattice(row_word(ambient), 2)


def test_enumerate_marked_counts():
    lam = HookSplit(2, 3, P((2, 2)), P((1, 1)))
    pairs = enumerate_marked(lam, P((1,)), P((2, 2, 1)))
    assert len(pairs) == 1
    assert pairs[0].t_plus == tab((2, 2), (1,), [(None, 3), (4, 5)])
    # trivial instance: a single empty member
    lam2 = HookSplit(2, 2, P((2, 1)), P((1,)))
    assert len(enumerate_marked(lam2, P((2, 1)), P((1,)))) == 1
    # content mismatch gives nothing
    assert enumerate_marked(lam, P((1,)), P((3, 2, 1))) == []


def test_marked_count_equals_wide_arm_lr_coefficient():
    # shifting the arm by n rows makes the count an honest LR coefficient
    for lam, mu, nu in [
        (HookSplit(2, 3, P((2, 2)), P((1, 1))), P((1,)), P((2, 2, 1))),
        (HookSplit(2, 2, P((1, 1)), P((1,))), P((1,)), P((1, 1))),
        (HookSplit(2, 2, P((2, 1)), P(())), P((1,)), P((2,))),
    ]:
        wide = HookSplit(lam.m, lam.n,
                         Partition(tuple(lam.plus[i] + lam.n for i in range(1, lam.m + 1))),
                         lam.minus)
        mu_wide = Partition(tuple(mu[i] + lam.n for i in range(1, lam.m + 1)))
        got = len(enumerate_marked(lam, mu, nu))
        want = lr_coefficient(wide.conjugate_whole(), mu_wide.conjugate(), nu)
        assert got == want


def test_pictures_golden():
    dom = SkewShape(P((3, 3, 2, 1)), P((2,)))
    img = SkewShape(P((4, 2, 2, 1)), P((1, 1)))
    fwd = {(1, 3): (1, 2), (2, 1): (1, 4), (2, 2): (1, 3), (2, 3): (2, 2),
           (3, 1): (3, 2), (3, 2): (3, 1), (4, 1): (4, 1)}
    f = CellBijection(tuple(sorted(fwd.items())), dom, img)
    assert is_picture(f)
    e_plus, e_minus = picture_readings(f)
    assert e_plus == tab((3, 3, 2, 1), (2,), [(None, None, 1), (1, 1, 2), (3, 3), (4,)])
    assert e_minus == tab((4, 2, 2, 1), (1, 1),
                          [(None, 3, 2, 1), (None, 3), (2, 1), (1,)])
    assert is_semistandard(e_plus)
    assert is_anti_semistandard(e_minus)


def test_identity_on_vertical_domino_is_picture():
    s = SkewShape(P((1, 1)), P(()))
    f = CellBijection((((1, 1), (1, 1)), ((2, 1), (2, 1))), s, s)
    assert is_picture(f)


def test_horizontal_to_vertical_is_not_picture():
    dom = SkewShape(P((2,)), P(()))
    img = SkewShape(P((1, 1)), P(()))
    f = CellBijection((((1, 1), (1, 1)), ((1, 2), (2, 1))), dom, img)
    assert not is_picture(f)


def test_marked_picture_correspondence_roundtrip():
    lam = HookSplit(2, 3, P((2, 2)), P((1, 1)))
    for pair in enumerate_marked(lam, P((1,)), P((2, 2, 1))):
        f = marked_picture_correspondence(pair)
        assert is_picture(f)
        back = picture_to_marked(f, 2)
        assert back.t_plus == pair.t_plus
        assert back.rpos == pair.rpos
    bad = reposition(tab((2, 2), (1,), [(None, 4), (3, 5)]),
                     P((1, 1)), P((2, 2, 1)), 2)
    with pytest.raises(NotMarkedError):
        marked_picture_correspondence(bad)


def test_picture_count_matches_marked_count():
    lam = HookSplit(2, 3, P((2, 2)), P((1, 1)))
    dom = SkewShape(lam.plus.conjugate(), P((1,)).conjugate())
    img = SkewShape(P((2, 2, 1)), lam.minus)
    assert len(enumerate_pictures(dom, img)) == \
        len(enumerate_marked(lam, P((1,)), P((2, 2, 1))))


def test_lr_sum_identity():
    lam = HookSplit(2, 2, P((2, 1)), P((1,)))
    lhs, rhs = lr_sum_identity(lam, P((2, 1)), P((1,)))
    assert lhs == rhs == 1
    lam2 = HookSplit(2, 3, P((3, 3)), P((1, 1)))
    lhs2, rhs2 = lr_sum_identity(lam2, P((2, 1)), P((2, 2, 1)))
    assert lhs2 == rhs2


def test_lr_word_filter():
    # the single semistandard filling of content (2,1) reads lattice
    assert len(enumerate_ssyt(SkewShape(P((2, 2)), P((1,))), (2, 1))) == 1
    assert len(enumerate_lr(SkewShape(P((2, 2)), P((1,))), (2, 1))) == 1
    # content (1,1,1) admits semistandard fillings but no lattice one
    assert len(enumerate_ssyt(SkewShape(P((2, 2)), P((1,))), (1, 1, 1))) == 2
    assert enumerate_lr(SkewShape(P((2, 2)), P((1,))), (1, 1, 1)) == []
