from __future__ import annotations

import json
from fractions import Fraction

import pytest

from sphmin import linalg as la
from sphmin.report import VerificationReport
from sphmin.rng import SplitMix64


def test_splitmix64_reference_vectors():
    r = SplitMix64(1234567)
    assert [r.next() for _ in range(3)] == [6457827717110365317, 3203168211198807973,
                                            9817491932198370423]
    assert SplitMix64(0).next() == 0xE220A8397B1DCDAF


def test_rng_helpers():
    r = SplitMix64(3)
    assert all(0 <= r.below(5) < 5 for _ in range(100))
    assert {r.param() for _ in range(200)} == {-3, -2, -1, 1, 2, 3}
    assert SplitMix64(4).split(2).next() == SplitMix64(4).split(2).next()
    assert SplitMix64(4).split(2).next() != SplitMix64(4).split(3).next()


def test_det_and_inverse_exact():
    m = ((2, 1, 0), (1, 3, 1), (0, 1, 4))
    assert la.det(m) == 18
    assert la.matmul(m, la.inverse(m)) == la.identity(3)
    mixed = ((Fraction(1, 2), 1), (3, 4))
    assert la.det(mixed) == Fraction(-1) and isinstance(la.det(mixed), int)
    assert la.det(((0, 1), (1, 0))) == -1
    assert la.det(((1, 2), (2, 4))) == 0
    with pytest.raises(ZeroDivisionError):
        la.inverse(((1, 2), (2, 4)))


def test_minor_and_rationals():
    m = ((1, 2, 3), (4, 5, 6), (7, 8, 10))
    assert la.minor(m, [0, 1], [0, 1]) == -3
    assert la.parse_rational("-3/6") == Fraction(-1, 2)
    assert la.parse_rational("4/2") == 2 and isinstance(la.parse_rational("4/2"), int)
    assert la.format_rational(Fraction(6, 3)) == "2"


def test_report_lifecycle():
    rep = VerificationReport("x", trials=3)
    assert rep.ok and bool(rep)
    rep.fail(value=Fraction(1, 3), vec=(1, 2))
    rep.finish()
    assert not rep.ok and rep.status == "fail" and rep.witnesses
    doc = rep.to_json()
    assert json.loads(json.dumps(doc)) == doc
    assert doc["witnesses"][0]["value"] == "1/3"
    assert rep.line().startswith("[FAIL] x")
