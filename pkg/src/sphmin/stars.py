"""Star diagrams for the (SL_2n, Sp_2n) exchange relation.

The minor ``Delta^{w_2k}_w`` is determined by the row set ``w(R_k)``, drawn as a
column of ``2n`` symbols: a star for rows in the set and a dot otherwise.  The
relation for ``w`` becomes a row of column pairs joined by ``=``, ``-`` and
``+-``; in ASCII mode stars are ``*`` and dots are ``.``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .pair import PairError, catalog
from .weyl import WeylElem, twisted_length

STAR, DOT = "*", "."
UNICODE = {"*": "★", ".": "·", "+-": "±"}


def R(n: int, k: int) -> frozenset:
    """``R_k`` as 1-based rows: the ``2k`` central indices (``R_0`` empty, ``R_n`` all)."""
    return frozenset(range(n - k + 1, n + k + 1))


def apply_perm(perm: tuple, rows) -> frozenset:
    return frozenset(perm[r - 1] for r in rows)


def column(n: int, rows) -> str:
    return "".join(STAR if i in rows else DOT for i in range(1, 2 * n + 1))


@dataclass
class StarDiagram:
    n: int
    k: int
    w: WeylElem
    columns: list  # strings of length 2n, in display order
    ops: list  # operator before each term after the first: "=", "-", "+", "+-"

    def terms(self) -> list[tuple[str, str]]:
        return [tuple(self.columns[i:i + 2]) for i in range(0, len(self.columns), 2)]

    def render(self, unicode: bool = False) -> str:
        height = 2 * self.n
        mid = self.n - 1
        lines = []
        for r in range(height):
            parts = []
            for t, (a, b) in enumerate(self.terms()):
                if t:
                    op = self.ops[t - 1]
                    parts.append(op if r == mid else " " * len(op))
                parts.append(f"{a[r]} {b[r]}")
            line = " ".join(parts).rstrip()
            if unicode:
                line = "".join(UNICODE.get(ch, ch) for ch in line).replace("+-", UNICODE["+-"])
            lines.append(line)
        return "\n".join(lines) + "\n"


def star_diagram(n: int, k: int, w: WeylElem | None = None) -> StarDiagram:
    if not 1 <= k < n:
        raise PairError(f"need 1 <= k < n, got n={n}, k={k}")
    pair = catalog("slsp", n)
    big = pair.big
    w = big.identity() if w is None else w
    ex = pair.exchange_data(2 * k)
    rk = R(n, k)

    def col(v: WeylElem, rows=rk) -> str:
        return column(n, apply_perm(big.to_permutation(v), rows))

    cols, ops = [], []
    for idx, u in enumerate(ex.U):
        cols += [col(w * u), col(w * u * ex.hw)]
        if idx:
            # the term moves to the right-hand side, so its sign flips
            rhs_sign = 1 if twisted_length(u, pair.y) % 2 else -1
            if idx == 1:
                ops.append("=" if rhs_sign > 0 else "= -")
            else:
                ops.append("+" if rhs_sign > 0 else "-")
    cols += [col(w, R(n, k - 1)), col(w, R(n, k + 1))]
    ops.append("+-")
    return StarDiagram(n, k, w, cols, ops)
