from __future__ import annotations

import pytest

from sphmin.claims import (PLUS, build_action_table, claim1_expansion, compare_with_golden,
                           golden_table, hypothesis_ws, render_table, satisfies_hypothesis,
                           table_cell, verify_all, verify_claim2, verify_claim3,
                           z_delta_symbol)
from sphmin.pair import catalog
from sphmin.weyl import twisted_length

PAIRS = [("slsp", 2, None), ("slsp", 3, None), ("slsp", 4, None), ("spin", 4, None),
         ("spin", 5, None), ("e6f4", None, None), ("b3g2", None, None),
         ("diagonal", None, "A2"), ("diagonal", None, "A3"), ("diagonal", None, "B2")]


@pytest.mark.parametrize("fam,n,typ", PAIRS)
def test_claim_suite_passes(fam, n, typ):
    p = catalog(fam, n, typ)
    for key in p.basis_keys:
        for rep in verify_all(p, key):
            assert rep.ok, rep.line()


@pytest.mark.parametrize("fam,n", [("slsp", 3), ("slsp", 4), ("e6f4", None), ("b3g2", None)])
def test_printed_tables_match(fam, n):
    p = catalog(fam, n)
    for key in p.basis_keys:
        rep = compare_with_golden(p, key)
        assert rep.ok and rep.trials == sum(len(r) for r in golden_table(p, key).values())


def test_table_examples():
    for n in (2, 3, 4):
        p = catalog("slsp", n)
        for k in range(1, n):
            ex = p.exchange_data(2 * k)
            d = 2 * (n - k) - 1
            assert table_cell(p, ex.b, p.big.identity(), d) == PLUS
            assert table_cell(p, ex.b, ex.hw, d) == -1
    b3 = catalog("b3g2")
    ex = b3.exchange_data(3)
    assert table_cell(b3, ex.b, ex.hw, 2) == -1


def test_table_shape_and_render():
    p = catalog("e6f4")
    entries = build_action_table(p, 6)
    assert len(entries) == 6 * 2 * len(p.exchange_data(6).U)
    text = render_table(p, 6)
    assert len(text.splitlines()) == 7 and "d5" in text and "t4.t3.t1" in text


def test_claim2_values():
    rep = verify_claim2(catalog("slsp", 2), 2)
    assert rep.details["lhs"] == rep.details["rhs"] == [0, 0, 0]
    rep = verify_claim2(catalog("spin", 4), 1)
    assert rep.details["lhs"] == [0, 0, 0, 0]
    assert verify_claim2(catalog("e6f4"), 6).ok


def test_claim3_slsp_and_spin():
    assert verify_claim3(catalog("slsp", 3), 2).ok
    p = catalog("spin", 5)
    ex = p.exchange_data(1)
    yb = p.y.apply(p.big.star(ex.b))
    small = p.small
    for i, u in enumerate(ex.U[1:], start=1):
        # v_i y w1* restricts to a short root e_i of the small group
        r = p.restrict_weight(u.apply(yb))
        assert any(r) and small.is_root(tuple(r)) or any(p.restrict_weight((u * ex.hw).apply(yb)))


def test_assertion_examples():
    p = catalog("slsp", 2)
    ex = p.exchange_data(2)
    assert p.tau(1) * p.big.identity() in ex.U
    e6 = catalog("e6f4")
    ex = e6.exchange_data(6)
    v3, v4 = ex.U[3], ex.U[4]
    assert e6.tau(4) * v3 * ex.hw == v4
    assert e6.tau(4) * v4 * ex.hw == v3
    for n in (4, 5):
        sp = catalog("spin", n)
        ex = sp.exchange_data(1)
        assert sp.tau(n - 1) * ex.U[n - 1] * ex.hw in ex.U


def test_claim1_terms_cancel_in_pairs():
    for n in (2, 3, 4):
        p = catalog("slsp", n)
        for k in range(1, n):
            ex = p.exchange_data(2 * k)
            d = 2 * (n - k) - 1
            raw = sum(1 for lab, v in ex.columns() if z_delta_symbol(p, ex.b, v, d) is not None)
            assert raw == 2
            assert not claim1_expansion(p, 2 * k, d)
            far = [i for i in range(p.big.rank) if abs(i - d) >= 2]
            for i in far:
                assert all(z_delta_symbol(p, ex.b, v, i) is None for _, v in ex.columns())
    e6 = catalog("e6f4")
    ex = e6.exchange_data(6)
    hits = [lab for lab, v in ex.columns() if z_delta_symbol(e6, ex.b, v, 4) is not None]
    assert len(hits) == 2 and not claim1_expansion(e6, 6, 4)


def test_hypothesis_ws_contains_identity_and_is_exact():
    p = catalog("slsp", 2)
    ws = hypothesis_ws(p, 2)
    assert ws == [p.big.identity()]
    p3 = catalog("slsp", 3)
    for key in p3.basis_keys:
        ws = hypothesis_ws(p3, key)
        assert p3.big.identity() in ws and len(ws) == 30
        ex = p3.exchange_data(key)
        for w in ws[:5]:
            for u in ex.U:
                v = u * ex.hw
                assert twisted_length(w * v, p3.y) == twisted_length(w, p3.y) + twisted_length(v, p3.y)


def test_hypothesis_ws_spin4_is_trivial():
    p = catalog("spin", 4)
    ws = hypothesis_ws(p, 1)
    assert ws == [p.big.identity()]
    sampled = hypothesis_ws(p, 1, sample=5, seed=3)
    assert set(sampled) <= set(ws)


def test_hypothesis_ws_diagonal():
    p = catalog("diagonal", small_type="A2")
    for key in p.basis_keys:
        ws = hypothesis_ws(p, key)
        assert len(ws) == 9
        assert all(satisfies_hypothesis(p, key, w) for w in ws)


def test_hypothesis_ws_sampling_deterministic():
    p = catalog("slsp", 4)
    a = hypothesis_ws(p, 2, sample=5, seed=11)
    b = hypothesis_ws(p, 2, sample=5, seed=11)
    assert a == b and a[0] == p.big.identity()
    assert all(satisfies_hypothesis(p, 2, w) for w in a)
