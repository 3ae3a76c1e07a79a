from __future__ import annotations

from fractions import Fraction

import pytest

from sphmin import linalg as la
from sphmin.claims import hypothesis_ws
from sphmin.minors import (check_braid, compute_epsilon, epsilon_report, f_b,
                           realize, verify_bar_lemmas, verify_characterisation,
                           verify_claim1_numeric, verify_exchange, verify_open_cell,
                           random_weyl, verify_pinning, verify_twist,
                           verify_weight_dependence, verify_z_independence)
from sphmin.pair import Unsupported, catalog
from sphmin.rng import SplitMix64
from sphmin.weyl import twisted_length_additive

REALIZED = [("slsp", 2, None), ("slsp", 3, None), ("spin", 4, None), ("spin", 5, None),
            ("diagonal", None, "A2"), ("diagonal", None, "A3")]
IDS = ["slsp2", "slsp3", "spin4", "spin5", "diagA2", "diagA3"]


@pytest.fixture(params=REALIZED, ids=IDS)
def real(request):
    fam, n, typ = request.param
    return realize(catalog(fam, n, typ))


@pytest.fixture(scope="module")
def r2():
    return realize(catalog("slsp", 2))


def some_elements(big, count, seed=0):
    rng = SplitMix64(seed)
    return [big.identity()] + [random_weyl(big, rng) for _ in range(count - 1)]


def diag(*d):
    return tuple(tuple(d[i] if i == j else 0 for j in range(len(d))) for i in range(len(d)))


def d2(x, r1, r2_, c1, c2):
    return x[r1 - 1][c1 - 1] * x[r2_ - 1][c2 - 1] - x[r1 - 1][c2 - 1] * x[r2_ - 1][c1 - 1]


# ---- explicit matrices ------------------------------------------------------------------

def test_bar_s_alpha1(r2):
    assert r2.bar_s(0) == ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))


def test_bar_s_alpha3_sign(r2):
    # x_{alpha_3}(t) carries -t, so the -1 lands below the diagonal
    assert r2.bar_s(2) == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0))


def test_ybar(r2):
    assert r2.bar(r2.pair.y) == ((1, 0, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, -1, 0, 0))


def test_tilde_delta1_and_delta3(r2):
    p = r2.pair
    assert r2.tilde(p.tau(0)) == ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (-1, 0, 0, 0))
    assert r2.tilde(p.tau(2)) == ((1, 0, 0, 0), (0, 0, -1, 0), (0, 1, 0, 0), (0, 0, 0, 1))


def test_bar_s_order_four(real):
    for i in range(real.big.rank):
        s = real.bar_s(i)
        assert la.matmul_all([s] * 4, real.dim) == real.I
        assert real.K_member(la.matmul(s, s))


def test_bar_identity_and_braid(real):
    assert real.bar(real.big.identity()) == real.I
    for w in some_elements(real.big, 30):
        assert check_braid(real, w)


def test_bar_product_in_K(r2):
    big = r2.big
    elems = list(big.enumerate())
    for v in elems[::5]:
        for w in elems[::3]:
            m = la.matmul_all([r2.bar(v), r2.bar(w), la.inverse(r2.bar(v * w))], 4)
            assert r2.K_member(m)


def test_tilde_multiplicative_when_additive(r2):
    y = r2.pair.y
    elems = list(r2.big.enumerate())
    hits = 0
    for v in elems[::2]:
        for w in elems[::3]:
            if twisted_length_additive(v, w, y):
                hits += 1
                assert r2.tilde(v * w) == la.matmul(r2.tilde(v), r2.tilde(w))
    assert hits > 10


def test_small_bar_in_subgroup(r2):
    p = r2.pair
    for j in range(p.small.rank):
        assert r2.in_subgroup(r2.bar(p.lift(p.small.s(j))))


def test_diagonal_tilde_equals_bar():
    r = realize(catalog("diagonal", small_type="A2"))
    for w in r.big.enumerate():
        if all(i < 2 for i in w.word):
            assert r.tilde(w) == r.bar(w)


# ---- torus K ----------------------------------------------------------------------------

def test_K_membership(r2):
    assert r2.K_member(r2.I)
    assert r2.K_member(diag(-1, -1, 1, 1))
    assert not r2.K_member(diag(-1, 1, 1, 1))
    assert len(r2.K) == 8


# ---- minors -----------------------------------------------------------------------------

def test_explicit_polynomials(r2):
    p = r2.pair
    for t in range(20):
        g = r2.sample_group(SplitMix64(100).split(t))
        assert r2.eval_minor(2, p.big.identity(), g) == d2(g, 2, 3, 1, 4) + d2(g, 2, 3, 2, 3)
        assert r2.eval_minor(2, p.tau(1), g) == d2(g, 3, 4, 1, 4) + d2(g, 3, 4, 2, 3)


def test_minor_normalised_at_tilde(real):
    for key in real.pair.basis_keys:
        for w in some_elements(real.big, 25, 1):
            assert real.eval_minor(key, w, real.tilde(w)) == 1


def test_fast_route_matches_definition(real):
    key = real.pair.basis_keys[0]
    elems = some_elements(real.big, 12, 2)
    for t, w in enumerate(elems):
        g = real.sample_group(SplitMix64(5).split(t))
        assert real.eval_minor(key, w, g) == real.eval_minor_definition(key, w, g)


def test_bad_key_rejected(r2):
    with pytest.raises(ValueError):
        r2.eval_minor(1, r2.big.identity(), r2.I)


def test_unsupported_realizations():
    for fam, n, typ in [("e6f4", None, None), ("b3g2", None, None), ("diagonal", None, "B2")]:
        with pytest.raises(Unsupported):
            realize(catalog(fam, n, typ))


# ---- sampling ---------------------------------------------------------------------------

def test_sampling_deterministic(real):
    assert real.sample_group(9) == real.sample_group(9)
    assert real.sample_group(9) != real.sample_group(10)
    assert real.in_group(real.sample_group(3))


def test_subgroup_samples(real):
    for s in range(5):
        m = real.sample_subgroup(s)
        assert real.in_subgroup(m) and real.in_group(m)


def test_slsp_subgroup_preserves_form(r2):
    m = r2.sample_subgroup(4)
    assert la.matmul_all([la.transpose(m), r2.omega, m], 4) == r2.omega


def test_yUy_is_unipotent(real):
    m = real.sample_unipotent_yUy(8)
    n = tuple(tuple(m[i][j] - real.I[i][j] for j in range(real.dim)) for i in range(real.dim))
    assert la.matmul_all([n] * real.dim, real.dim) == tuple(
        tuple(0 for _ in range(real.dim)) for _ in range(real.dim))


# ---- lemma checks -----------------------------------------------------------------------

def test_pinning(real):
    assert verify_pinning(real).ok


def test_open_cell(real):
    assert verify_open_cell(real, trials=20, seed=1).ok


def test_bar_lemmas(real):
    assert verify_bar_lemmas(real, trials=10, seed=2).ok


def test_weight_dependence(real):
    for key in real.pair.basis_keys:
        assert verify_weight_dependence(real, key, trials=4, seed=3, max_pairs=10).ok


def test_characterisation_and_twist(real):
    key = real.pair.basis_keys[-1]
    for w in some_elements(real.big, 5, 3):
        assert verify_characterisation(real, key, w, trials=4, seed=4).ok
        assert verify_twist(real, key, w, trials=4, seed=4).ok


def test_claim1_numeric(real):
    for key in real.pair.basis_keys:
        assert verify_claim1_numeric(real, key, trials=3, seed=5).ok


# ---- epsilon and the exchange identity ----------------------------------------------------

def test_f_b_is_minus_one_on_sl4(r2):
    e = r2.big.identity()
    for t in range(15):
        g = r2.sample_group(SplitMix64(6).split(t))
        assert f_b(r2, 2, e, g) == -1


def test_spin_norm_preserved():
    r = realize(catalog("spin", 4))
    e = r.big.identity()
    vals = {f_b(r, 1, e, r.sample_group(s)) for s in range(10)}
    assert vals <= {1, -1} and len(vals) == 1


@pytest.mark.parametrize("fam,n,typ,expected", [
    ("slsp", 2, None, {2: -1}), ("slsp", 3, None, {2: -1, 4: -1}),
    ("spin", 4, None, {1: 1}), ("spin", 5, None, {1: -1}),
    ("diagonal", None, "A2", {1: 1, 2: 1}), ("diagonal", None, "A3", {1: 1, 2: 1, 3: 1}),
])
def test_epsilon_values(fam, n, typ, expected):
    r = realize(catalog(fam, n, typ))
    for key, eps in expected.items():
        assert compute_epsilon(r, key) == eps
        rep = epsilon_report(r, key)
        assert rep.details["agrees"] and rep.status == "recorded"


def test_exchange_identity(real):
    for key in real.pair.basis_keys:
        ws = hypothesis_ws(real.pair, key, limit=800) if real.big.order <= 800 else \
            hypothesis_ws(real.pair, key, sample=3, seed=1)
        for w in ws[:4]:
            rep = verify_exchange(real, key, w, trials=3, seed=7)
            assert rep.ok, rep.line()


def test_exchange_detects_wrong_epsilon(r2):
    rep = verify_exchange(r2, 2, r2.big.identity(), trials=2, seed=1, epsilon=1)
    assert not rep.ok and rep.witnesses


def test_z_independence(r2):
    rep = verify_z_independence(r2, 2, r2.big.identity(), trials=5, seed=8)
    assert rep.ok
    assert rep.details["signs"] and all(s["sign"] in (1, -1) for s in rep.details["signs"])


def test_in_group_rejects_non_members(r2):
    assert not r2.in_group(diag(2, 1, 1, 1))
    assert r2.in_group(diag(2, Fraction(1, 2), 1, 1))
    so = realize(catalog("spin", 4))
    assert not so.in_group(diag(*([2] + [1] * 7)))
