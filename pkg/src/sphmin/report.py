"""Structured pass/fail records shared by the claim checks, the numeric checks and the CLI."""
from __future__ import annotations

import time
from dataclasses import dataclass, field


def _jsonable(x):
    from fractions import Fraction
    from .weyl import WeylElem

    if isinstance(x, Fraction):
        return str(x)
    if isinstance(x, WeylElem):
        return x.word_str()
    if isinstance(x, dict):
        return {str(k): _jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return x


@dataclass
class VerificationReport:
    statement_id: str
    status: str = "pass"  # pass | fail | recorded
    trials: int = 0
    witnesses: list = field(default_factory=list)
    runtime_ms: int = 0
    details: dict = field(default_factory=dict)
    _t0: float = field(default_factory=time.perf_counter, repr=False)

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def __bool__(self) -> bool:
        return self.ok

    def fail(self, **witness) -> None:
        self.status = "fail"
        self.witnesses.append(witness)

    def finish(self) -> "VerificationReport":
        self.runtime_ms = int((time.perf_counter() - self._t0) * 1000)
        if self.status == "fail" and not self.witnesses:
            self.witnesses.append({"note": "no witness captured"})
        return self

    def to_json(self, timing: bool = True) -> dict:
        """JSON-ready dict; ``timing=False`` drops ``runtime_ms`` for reproducible files."""
        doc = {
            "statement_id": self.statement_id,
            "status": self.status,
            "trials": self.trials,
            "witnesses": _jsonable(self.witnesses[:5]),
            "details": _jsonable(self.details),
        }
        if timing:
            doc["runtime_ms"] = self.runtime_ms
        return doc

    def line(self) -> str:
        tag = {"pass": "PASS", "fail": "FAIL", "recorded": "INFO"}[self.status]
        extra = f" trials={self.trials}" if self.trials else ""
        return f"[{tag}] {self.statement_id}{extra} ({self.runtime_ms} ms)"
