import types
from collections import Counter

import pytest
from hypothesis import given, settings, strategies as st

from zolotarev.cactus import Color, Passport, enumerate_cacti, select
from zolotarev.degeneration import (BiTree, Side, TriTree, borders, contract, crossing,
                                    degenerate, slot_middle, transform)
from zolotarev.errors import UsageError
from zolotarev.perm import Perm, compose, cycle_type, cycles

DEG5 = Passport(5, 1, 1, 2)
DEG6 = Passport(6, 2, 2, 1)
DEG7 = Passport(7, 2, 2, 2)
FAMILIES = [(DEG5, "any"), (DEG6, "symmetric"), (DEG7, "alternating"), (DEG7, "psl27")]


def family(pp, g):
    return select(enumerate_cacti(pp), g)


def toy_star():
    # p = x^2 over a segment through 0: g_mid = (1 2), ends fixed
    pp = types.SimpleNamespace(n=2, color_symmetries=(((0, 1, 2), False),))
    sm = Perm.parse("(1 3 2 4)", 4)   # L1 -> R1 -> L2 -> R2
    return TriTree(pp, Color.CIRC, sm, Perm.identity(4))


def relabel(t, s):
    """Conjugate both rotations by a dart permutation keeping L and R apart."""
    from zolotarev.perm import conjugate
    return TriTree(t.passport, t.middle, conjugate(t.sigma_mid, s), conjugate(t.sigma_ends, s))


def test_toy_star():
    t = toy_star()
    t.check()
    assert list(cycle_type(compose(t.sigma_mid, t.sigma_ends)).elements()) == [4]
    swap = Perm.parse("(1 2)(3 4)", 4)
    assert relabel(t, swap).canon == t.canon
    for side in Side:
        b = contract(t, side)
        assert sorted(cycle_type(b.rho_merged).elements()) == [1, 1] or \
            sorted(cycle_type(b.rho_plain).elements()) == [1, 1]
        assert len(cycles(compose(b.rho_merged, b.rho_plain))) == 1
    assert contract(t, Side.MERGE_PREDECESSOR).canon == contract(t, Side.MERGE_SUCCESSOR).canon


def test_toy_path_word():
    # a path with two edges: one centre of degree 2, two leaves
    b = BiTree(Perm.parse("(1 2)", 2), Perm.identity(2))
    assert b.canon == contract(toy_star(), Side.MERGE_SUCCESSOR).canon


@pytest.mark.parametrize("pp,g", FAMILIES)
def test_tree_shape(pp, g):
    for c in family(pp, g):
        for col in Color:
            t = degenerate(c, col)
            n = pp.n
            assert t.sigma_mid.n == 2 * n
            assert len(cycles(compose(t.sigma_mid, t.sigma_ends))) == 1
            mid_degrees = sorted(len(x) for x in cycles(t.sigma_mid))
            expect_mid = sorted(2 * len(x) for x in cycles(c.perm(col)))
            assert mid_degrees == expect_mid
            ends = sorted(len(x) for x in cycles(t.sigma_ends))
            expect_ends = sorted([len(x) for x in cycles(c.perm(col.pred))]
                                 + [len(x) for x in cycles(c.perm(col.succ))])
            assert ends == expect_ends
            for side in Side:
                b = contract(t, side)
                assert len(cycles(compose(b.rho_merged, b.rho_plain))) == 1


def dart_relabelings(n):
    return st.tuples(st.permutations(range(n)), st.permutations(range(n))).map(
        lambda ab: Perm([x + 1 for x in ab[0]] + [n + x + 1 for x in ab[1]]))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(enumerate_cacti(DEG7)), st.sampled_from(list(Color)), dart_relabelings(7))
def test_word_is_relabeling_invariant(c, col, s):
    t = degenerate(c, col)
    u = relabel(t, s)
    u.check()
    assert u.canon == t.canon
    for side in Side:
        assert contract(u, side).canon == contract(t, side).canon


@pytest.mark.parametrize("pp,g,words,mult", [
    (DEG5, "any", 8, {2: 7, 1: 1}),
    (DEG6, "symmetric", 18, {2: 18}),
    (DEG7, "alternating", 22, {2: 20, 1: 2}),
])
def test_slot_arithmetic(pp, g, words, mult):
    cs = family(pp, g)
    w = Counter(degenerate(c, col).canon for c in cs for col in Color)
    assert len(w) == words
    assert Counter(w.values()) == Counter(mult)
    assert 3 * len(cs) == sum(w.values())


@pytest.mark.parametrize("pp,g,trees", [(DEG5, "any", 4), (DEG6, "symmetric", 8)])
def test_tree_counts(pp, g, trees):
    ws = {contract(degenerate(c, col), side).canon
          for c in family(pp, g) for col in Color for side in Side}
    assert len(ws) == trees


@pytest.mark.parametrize("pp,g", FAMILIES)
def test_transform_involution_and_matching(pp, g):
    cs = family(pp, g)
    keys = {c.key: c for c in cs}
    words = Counter(degenerate(c, col).canon for c in cs for col in Color)
    for c in cs:
        for col in Color:
            d = transform(c, col)
            assert d.key in keys
            _, m2 = crossing(c, col)
            w = degenerate(c, col).canon
            assert degenerate(d, m2).canon == w
            back, col2 = crossing(keys[d.key], m2)
            # colours of a rotation-fixed class are only defined up to its stabilizer
            assert back == c.triple and slot_middle(c, col2) == slot_middle(c, col)
            if words[w] == 1:
                assert d.key == c.key
            assert d.passport == c.passport
            assert keys[d.key].group == c.group


def test_psl_slots_need_stabilizer():
    cs = family(DEG7, "psl27")
    slots = {(c.id, slot_middle(c, col)) for c in cs for col in Color}
    assert len(slots) == 4 * 3 + 2 * 1
    w = Counter(degenerate(c, m).canon for c, m in
                ((next(x for x in cs if x.id == i), m) for i, m in slots))
    assert set(w.values()) <= {1, 2}


def test_crossing_needs_reflection():
    c = enumerate_cacti(Passport(7, 1, 2, 3))[0]
    with pytest.raises(UsageError):
        transform(c, Color.STAR)


def test_serialization():
    c = enumerate_cacti(DEG5)[0]
    t = borders(c)[0]
    d = t.as_dict()
    assert set(d) == {"n", "middle", "sigma_mid", "sigma_ends", "canon"}
    assert d["middle"] == "star"
    assert "L" in d["sigma_mid"] and "R" in d["sigma_mid"]
    assert set(contract(t, Side.MERGE_SUCCESSOR).as_dict()) == {"n", "rho_merged", "rho_plain", "canon"}
