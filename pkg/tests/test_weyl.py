from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sphmin.weyl import RootSystem, WeylError, enumerate_weyl, is_reduced, twisted_length

A3 = RootSystem.of_type("A3")


@pytest.mark.parametrize("label,count", [
    ("A1", 1), ("A3", 6), ("B3", 9), ("C3", 9), ("D4", 12), ("G2", 6), ("F4", 24), ("E6", 36),
])
def test_positive_root_counts(label, count):
    rs = RootSystem.of_type(label)
    pos = [b for b in rs.roots if rs.is_positive_root(b)]
    assert len(pos) == count
    assert len(rs.roots) == 2 * count


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "D4", "G2", "F4", "E6"])
def test_cartan_shape_and_root_coordinates(label):
    rs = RootSystem.of_type(label)
    for i in range(rs.rank):
        assert rs.cartan[i][i] == 2
        assert all(rs.cartan[i][j] <= 0 for j in range(rs.rank) if j != i)
    for b in rs.roots:
        coords = rs.root_coords(b)
        assert all(c >= 0 for c in coords) or all(c <= 0 for c in coords)


def test_pairing_examples():
    w1, w2 = A3.fundamental_weight(0), A3.fundamental_weight(1)
    assert A3.pairing(w1, 0) == 1
    assert A3.pairing(A3.simple_root(1), 0) == -1
    assert A3.pairing(A3.star(w2), 1) == 1
    with pytest.raises((WeylError, IndexError)):
        A3.pairing(w1, 7)


def test_reflect_examples():
    w1, a1, a2 = A3.fundamental_weight(0), A3.simple_root(0), A3.simple_root(1)
    assert A3.reflect(0, w1) == tuple(x - y for x, y in zip(w1, a1))
    assert A3.reflect(1, w1) == w1
    assert A3.reflect(1, a2) == tuple(-x for x in a2)


def test_length_examples():
    assert A3.identity().length() == 0
    assert A3.longest().length() == 6
    assert A3.element([2, 1]).length() == 2


def test_twisted_length_examples(slsp2):
    y = slsp2.y
    assert [i + 1 for i in y.word] == [3, 2]
    assert twisted_length(A3.identity(), y) == 0
    assert twisted_length(slsp2.tau(1), y) == 1
    assert twisted_length(slsp2.tau_word([1, 2, 0, 1]), y) == 4


@pytest.mark.parametrize("label,order", [("A1", 2), ("A3", 24), ("B3", 48), ("D4", 192), ("G2", 12)])
def test_enumeration_sizes(label, order):
    rs = RootSystem.of_type(label)
    elems = list(enumerate_weyl(rs))
    assert len(elems) == len(set(elems)) == order == rs.order


def test_a1_by_length():
    rs = RootSystem.of_type("A1")
    assert sorted(w.length() for w in enumerate_weyl(rs)) == [0, 1]


def test_permutation_round_trip():
    for w in enumerate_weyl(A3):
        assert A3.from_permutation(A3.to_permutation(w)) == w


def test_is_reduced():
    assert is_reduced(A3, [0, 1, 0])
    assert not is_reduced(A3, [0, 0])
    assert not is_reduced(A3, [0, 1, 0, 1])


def test_longest_negates_star():
    for label in ["A3", "D4", "E6", "B3"]:
        rs = RootSystem.of_type(label)
        w0 = rs.longest()
        assert w0.length() == len(rs.roots) // 2
        for i in range(rs.rank):
            lam = rs.fundamental_weight(i)
            assert rs.star(lam) == tuple(-x for x in w0.apply(lam))


def test_bad_type_rejected():
    with pytest.raises(WeylError):
        RootSystem.of_type("Q7")


TYPES = ["A3", "B3", "C3", "D4", "G2", "F4"]


@st.composite
def element_pair(draw):
    rs = RootSystem.of_type(draw(st.sampled_from(TYPES)))
    word = st.lists(st.integers(0, rs.rank - 1), max_size=12)
    return rs, draw(word), draw(word)


@settings(max_examples=80, deadline=None)
@given(element_pair())
def test_canonical_word_round_trip(data):
    rs, word, _ = data
    w = rs.element(word)
    assert rs.element(w.word) == w
    assert rs.element(w.alt_word()) == w
    assert len(w.word) == w.length() == len(w.alt_word())
    assert is_reduced(rs, w.word)


@settings(max_examples=80, deadline=None)
@given(element_pair())
def test_length_subadditive_and_parity(data):
    rs, a, b = data
    v, w = rs.element(a), rs.element(b)
    lvw = (v * w).length()
    assert lvw <= v.length() + w.length()
    assert (lvw - v.length() - w.length()) % 2 == 0
    assert v.inverse().length() == v.length()
    assert (v * w).inverse() == w.inverse() * v.inverse()


@settings(max_examples=60, deadline=None)
@given(element_pair())
def test_action_permutes_roots(data):
    rs, word, _ = data
    w = rs.element(word)
    roots = set(rs.roots)
    assert {w.apply(b) for b in roots} == roots
    inversions = sum(1 for b in roots if rs.is_positive_root(b) and not rs.is_positive_root(w.apply(b)))
    assert inversions == w.length()


@settings(max_examples=60, deadline=None)
@given(element_pair())
def test_twisted_length_additivity_definition(data):
    from sphmin.weyl import twisted_length_additive

    rs, a, b = data
    v, w = rs.element(a), rs.element(b)
    y = rs.element(b[:3])
    expected = twisted_length(v * w, y) == twisted_length(v, y) + twisted_length(w, y)
    assert twisted_length_additive(v, w, y) == expected
