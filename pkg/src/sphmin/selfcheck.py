"""The acceptance suite: eight criteria with their golden data and time budgets.

Each ``criterion_N`` returns a :class:`VerificationReport`; ``BUDGET_S``
holds the wall-clock bound in seconds.  The golden matrices, polynomials and
star displays below are transcribed from the worked examples they check.
"""
from __future__ import annotations

from . import linalg as la
from .claims import compare_with_golden, hypothesis_ws, verify_all
from .minors import (compute_epsilon, f_b, realize, verify_bar_lemmas,
                     verify_characterisation, verify_exchange, verify_twist,
                     verify_z_independence)
from .pair import catalog
from .report import VerificationReport
from .rng import SplitMix64
from .stars import star_diagram

BUDGET_S = {1: 1, 2: 5, 3: 10, 4: 30, 5: 60, 6: 300, 7: 120, 8: 1}

TITLES = {
    1: "bar and tilde matrices for (SL4, Sp4)",
    2: "six explicit minors of w_2 on SL4",
    3: "f_{w_2} = -1 on SL4, epsilon = -1",
    4: "infinitesimal action tables",
    5: "claims 2, 3, stabiliser, hw in small Weyl group, assertion, formal claim 1",
    6: "exchange identity, exact numeric trials",
    7: "lemma suite (characterisation, twist, bar, z-independence)",
    8: "star diagrams",
}

# ---- criterion 1 -----------------------------------------------------------------------

GOLDEN_MATRICES = {
    "s1": ((0, -1, 0, 0), (1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)),
    "s2": ((1, 0, 0, 0), (0, 0, -1, 0), (0, 1, 0, 0), (0, 0, 0, 1)),
    "s3": ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 0, 1), (0, 0, -1, 0)),
    "ybar": ((1, 0, 0, 0), (0, 0, -1, 0), (0, 0, 0, 1), (0, -1, 0, 0)),
    "ybar_inv": ((1, 0, 0, 0), (0, 0, 0, -1), (0, -1, 0, 0), (0, 0, 1, 0)),
    "st1": ((0, 0, 0, 1), (0, 1, 0, 0), (0, 0, 1, 0), (-1, 0, 0, 0)),
    "st2": ((1, 0, 0, 0), (0, 0, 0, 1), (0, 0, 1, 0), (0, -1, 0, 0)),
    "st3": ((1, 0, 0, 0), (0, 0, -1, 0), (0, 1, 0, 0), (0, 0, 0, 1)),
}


def criterion_1() -> VerificationReport:
    rep = VerificationReport("criterion-1/matrices")
    pair = catalog("slsp", 2)
    real = realize(pair)
    computed = {f"s{i + 1}": real.bar_s(i) for i in range(3)}
    computed["ybar"] = real.bar(pair.y)
    computed["ybar_inv"] = la.inverse(real.bar(pair.y))
    for i in range(3):
        computed[f"st{i + 1}"] = real.tilde(pair.tau(i))
    for name, want in GOLDEN_MATRICES.items():
        rep.trials += 1
        if computed[name] != want:
            rep.fail(matrix=name, expected=want, computed=computed[name])
    if [i + 1 for i in pair.y.word] != [3, 2]:
        rep.fail(issue="y is not s3 s2", y=pair.y.word_str())
    return rep.finish()


# ---- criterion 2 -----------------------------------------------------------------------


def _d(x, r1, r2, c1, c2):
    """2x2 minor with 1-based rows/columns."""
    return x[r1 - 1][c1 - 1] * x[r2 - 1][c2 - 1] - x[r1 - 1][c2 - 1] * x[r2 - 1][c1 - 1]


GOLDEN_POLYNOMIALS = [
    ((), lambda x: _d(x, 2, 3, 1, 4) + _d(x, 2, 3, 2, 3)),
    ((2, 3, 1, 2), lambda x: -_d(x, 1, 4, 1, 4) - _d(x, 1, 4, 2, 3)),
    ((2,), lambda x: _d(x, 3, 4, 1, 4) + _d(x, 3, 4, 2, 3)),
    ((3, 1, 2), lambda x: _d(x, 1, 2, 1, 4) + _d(x, 1, 2, 2, 3)),
    ((3, 2), lambda x: -_d(x, 2, 4, 1, 4) - _d(x, 2, 4, 2, 3)),
    ((1, 2), lambda x: -_d(x, 1, 3, 1, 4) - _d(x, 1, 3, 2, 3)),
]


def criterion_2(samples: int = 50, seed: int = 2) -> VerificationReport:
    rep = VerificationReport("criterion-2/explicit-minors")
    pair = catalog("slsp", 2)
    real = realize(pair)
    for t in range(samples):
        g = real.sample_group(SplitMix64(seed).split(t))
        if not real.in_group(g):
            rep.fail(trial=t, issue="sample not in SL4")
        for word, poly in GOLDEN_POLYNOMIALS:
            rep.trials += 1
            w = pair.tau_word([i - 1 for i in word])
            got, want = real.eval_minor(2, w, g), poly(g)
            if got != want:
                rep.fail(trial=t, tau_word=list(word), expected=want, computed=got)
    return rep.finish()


# ---- criterion 3 -----------------------------------------------------------------------


def criterion_3(samples: int = 200, seed: int = 3) -> VerificationReport:
    rep = VerificationReport("criterion-3/f-w2-is-minus-one")
    pair = catalog("slsp", 2)
    real = realize(pair)
    e = pair.big.identity()
    for t in range(samples):
        g = real.sample_group(SplitMix64(seed).split(t))
        rep.trials += 1
        val = f_b(real, 2, e, g)
        if val != -1:
            rep.fail(trial=t, value=val)
    eps = compute_epsilon(real, 2)
    conj = (-1) ** len(pair.exchange_data(2).U)
    rep.details = {"epsilon": eps, "predicted": conj}
    if eps != -1 or conj != -1:
        rep.fail(epsilon=eps, predicted=conj)
    return rep.finish()


# ---- criterion 4 -----------------------------------------------------------------------


def criterion_4() -> VerificationReport:
    rep = VerificationReport("criterion-4/tables")
    cases = [(catalog("slsp", n), 2 * k) for n in range(2, 6) for k in range(1, n)]
    cases += [(catalog("e6f4"), 6), (catalog("e6f4"), 1), (catalog("b3g2"), 3)]
    for pair, key in cases:
        sub = compare_with_golden(pair, key)
        rep.trials += sub.trials
        if sub.status != "pass":
            rep.fail(table=sub.statement_id, witnesses=sub.witnesses[:3])
    rep.details["tables"] = len(cases)
    return rep.finish()


# ---- criterion 5 -----------------------------------------------------------------------

CLAIM_CASES = ([("slsp", n, None) for n in range(2, 7)] + [("spin", n, None) for n in range(4, 9)]
               + [("e6f4", None, None), ("b3g2", None, None),
                  ("diagonal", None, "A2"), ("diagonal", None, "A3")])


def criterion_5() -> VerificationReport:
    rep = VerificationReport("criterion-5/claims")
    for fam, n, typ in CLAIM_CASES:
        pair = catalog(fam, n, typ)
        for key in pair.basis_keys:
            for sub in verify_all(pair, key):
                rep.trials += 1
                if not sub.ok:
                    rep.fail(check=sub.statement_id, witnesses=sub.witnesses[:3])
    return rep.finish()


# ---- criterion 6 -----------------------------------------------------------------------


def criterion_6(seed: int = 6) -> VerificationReport:
    rep = VerificationReport("criterion-6/exchange-identity")
    summary = {}

    def run(pair, key, ws, trials):
        real = realize(pair)
        eps = compute_epsilon(real, key)
        for w in ws:
            sub = verify_exchange(real, key, w, trials, seed, epsilon=eps)
            rep.trials += sub.trials
            if not sub.ok:
                rep.fail(check=sub.statement_id, witnesses=sub.witnesses[:2])
        summary[f"{pair.name}/b=w{key}"] = {"epsilon": eps, "w_count": len(ws), "trials": trials}

    p = catalog("slsp", 2)
    run(p, 2, hypothesis_ws(p, 2), 100)
    p = catalog("slsp", 3)
    for key in p.basis_keys:
        run(p, key, hypothesis_ws(p, key), 20)
    p = catalog("spin", 4)
    exhaustive = hypothesis_ws(p, 1)
    sampled = hypothesis_ws(p, 1, sample=20, seed=seed)
    if not set(sampled) <= set(exhaustive):
        rep.fail(issue="sampled w outside the exhaustive hypothesis set")
    summary["spin(4)/hypothesis_set"] = [w.word_str() for w in exhaustive]
    run(p, 1, sampled, 50)
    p = catalog("diagonal", None, "A2")
    for key in p.basis_keys:
        run(p, key, hypothesis_ws(p, key), 50)
    rep.details = summary
    return rep.finish()


# ---- criterion 7 -----------------------------------------------------------------------


def criterion_7(trials: int = 50, seed: int = 7) -> VerificationReport:
    rep = VerificationReport("criterion-7/lemma-suite")
    counts = {}

    def add(sub):
        rep.trials += sub.trials
        name = sub.statement_id.split("/")[0]
        counts[name] = counts.get(name, 0) + sub.trials
        if not sub.ok:
            rep.fail(check=sub.statement_id, witnesses=sub.witnesses[:2])

    for fam, n, typ in [("slsp", 2, None), ("slsp", 3, None), ("spin", 4, None),
                        ("diagonal", None, "A2")]:
        pair = catalog(fam, n, typ)
        real = realize(pair)
        e = pair.big.identity()
        for key in pair.basis_keys:
            ex = pair.exchange_data(key)
            for w in (e, ex.U[-1], ex.hw):
                add(verify_characterisation(real, key, w, trials, seed))
                add(verify_twist(real, key, w, trials, seed))
            add(verify_z_independence(real, key, e, trials, seed))
        add(verify_bar_lemmas(real, trials, seed))
    rep.details["trials_by_check"] = counts
    return rep.finish()


# ---- criterion 8 -----------------------------------------------------------------------

GOLDEN_STARS = {
    (2, 1, ()): (
        ". *   . *   . *    . *\n"
        "* . = . * - * . +- . *\n"
        "* .   * .   . *    . *\n"
        ". *   * .   * .    . *\n"
    ),
    (3, 2, ()): (
        ". *   . *   . *    . *\n"
        "* .   . *   * .    . *\n"
        "* * = * * - * * +- * *\n"
        "* *   * *   * *    * *\n"
        "* .   * .   . *    . *\n"
        ". *   * .   * .    . *\n"
    ),
    (3, 2, (4,)): (
        ". *   . *   . *    . *\n"
        "* .   . *   * .    . *\n"
        "* . = * . - . * +- . *\n"
        "* *   * *   * *    * *\n"
        "* *   * *   * *    * *\n"
        ". *   * .   * .    . *\n"
    ),
}

GOLDEN_STAR_COLUMNS = {
    (2, 1, ()): [".**.", "*..*", "..**", "**..", ".*.*", "*.*.", "....", "****"],
    (3, 2, ()): [".****.", "*.**.*", "..****", "****..", ".***.*", "*.***.", "..**..", "******"],
    (3, 2, (4,)): [".****.", "*..***", "..****", "**.**.", ".*.***", "*.***.", "...**.", "******"],
}


def criterion_8() -> VerificationReport:
    rep = VerificationReport("criterion-8/star-diagrams")
    for (n, k, tau), text in GOLDEN_STARS.items():
        pair = catalog("slsp", n)
        w = pair.tau_word([i - 1 for i in tau])
        d = star_diagram(n, k, w)
        rep.trials += 1
        if d.columns != GOLDEN_STAR_COLUMNS[(n, k, tau)]:
            rep.fail(n=n, k=k, tau=list(tau), columns=d.columns)
        if d.render() != text:
            rep.fail(n=n, k=k, tau=list(tau), rendered=d.render())
    return rep.finish()


CRITERIA = {1: criterion_1, 2: criterion_2, 3: criterion_3, 4: criterion_4,
             5: criterion_5, 6: criterion_6, 7: criterion_7, 8: criterion_8}


def run_criterion(number: int) -> tuple[VerificationReport, bool]:
    """Run one criterion; the flag says whether it met its time budget."""
    rep = CRITERIA[number]()
    return rep, rep.runtime_ms <= 1000 * BUDGET_S[number]


def summary_line(number: int, rep: VerificationReport, in_budget: bool) -> str:
    ok = rep.ok and in_budget
    timing = f"{rep.runtime_ms / 1000:.2f}s/{BUDGET_S[number]}s"
    note = "" if in_budget else " over time budget"
    return (f"criterion {number}: {'PASS' if ok else 'FAIL'} [{timing}] "
            f"{TITLES[number]} (checks={rep.trials}){note}")
