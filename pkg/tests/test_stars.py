from __future__ import annotations

import pytest

from sphmin.pair import PairError, catalog
from sphmin.stars import R, star_diagram

N2K1 = (
    ". *   . *   . *    . *\n"
    "* . = . * - * . +- . *\n"
    "* .   * .   . *    . *\n"
    ". *   * .   * .    . *\n"
)


def test_R_sets():
    assert R(2, 1) == {2, 3}
    assert R(3, 0) == frozenset()
    assert R(3, 3) == {1, 2, 3, 4, 5, 6}


def test_n2_k1_identity():
    d = star_diagram(2, 1)
    assert d.render() == N2K1
    assert d.columns == [".**.", "*..*", "..**", "**..", ".*.*", "*.*.", "....", "****"]
    assert d.ops == ["=", "-", "+-"]
    assert len(d.terms()) == 4


def test_unicode_render():
    text = star_diagram(2, 1).render(unicode=True)
    assert "★" in text and "·" in text and "±" in text and "*" not in text


@pytest.mark.parametrize("n", [2, 3, 4])
def test_star_counts(n):
    pair = catalog("slsp", n)
    for k in range(1, n):
        for w in [pair.big.identity(), pair.tau(0), pair.tau(n - 1)]:
            d = star_diagram(n, k, w)
            allowed = {0, 2 * k, 2 * (k - 1), 2 * (k + 1), 2 * n}
            assert all(len(c) == 2 * n for c in d.columns)
            assert all(c.count("*") in allowed for c in d.columns)
            lines = d.render().splitlines()
            assert len(lines) == 2 * n and all(line == line.rstrip() for line in lines)


def test_bad_k():
    with pytest.raises(PairError):
        star_diagram(3, 3)
    with pytest.raises(PairError):
        star_diagram(3, 0)
