"""Root systems and Weyl groups in fundamental-weight coordinates.

A weight is a tuple of integers ``(<l, a_1^v>, ..., <l, a_r^v>)``; the simple
root ``a_j`` is column ``j`` of the Cartan matrix ``a[i][j] = <a_j, a_i^v>``.
Simple indices are 0-based internally; words and labels shown to users are
1-based (Bourbaki numbering).

A Weyl group element is stored as its integer action matrix on weights.  A
word ``[i1, ..., im]`` denotes the product ``s_i1 * ... * s_im`` (composition
of maps, rightmost factor applied first).
"""
from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterator, Sequence

Weight = tuple


class WeylError(ValueError):
    pass


def _cartan_for(kind: str, m: int) -> list[list[int]]:
    a = [[2 if i == j else 0 for j in range(m)] for i in range(m)]

    def link(i, j, aij=-1, aji=-1):
        a[i][j], a[j][i] = aij, aji

    if kind == "A":
        for i in range(m - 1):
            link(i, i + 1)
    elif kind == "B":
        if m < 2:
            raise WeylError("B_m needs m >= 2")
        for i in range(m - 2):
            link(i, i + 1)
        # alpha_m short: <alpha_{m-1}, alpha_m^v> = -2
        link(m - 2, m - 1, -1, -2)
    elif kind == "C":
        if m < 2:
            raise WeylError("C_m needs m >= 2")
        for i in range(m - 2):
            link(i, i + 1)
        link(m - 2, m - 1, -2, -1)
    elif kind == "D":
        if m < 3:
            raise WeylError("D_m needs m >= 3")
        for i in range(m - 2):
            link(i, i + 1)
        link(m - 3, m - 1)
    elif kind == "E":
        if m != 6:
            raise WeylError("only E6 is supported")
        for i, j in ((0, 2), (2, 3), (3, 4), (4, 5), (1, 3)):
            link(i, j)
    elif kind == "F":
        if m != 4:
            raise WeylError("F4 only")
        link(0, 1)
        link(1, 2, -1, -2)  # alpha_1, alpha_2 long; alpha_3, alpha_4 short
        link(2, 3)
    elif kind == "G":
        if m != 2:
            raise WeylError("G2 only")
        link(0, 1, -3, -1)  # alpha_1 short
    else:
        raise WeylError(f"unknown type {kind}")
    return a


def _weyl_order(kind: str, m: int) -> int:
    return {
        "A": lambda: math.factorial(m + 1),
        "B": lambda: 2 ** m * math.factorial(m),
        "C": lambda: 2 ** m * math.factorial(m),
        "D": lambda: 2 ** (m - 1) * math.factorial(m),
        "E": lambda: 51840,
        "F": lambda: 1152,
        "G": lambda: 12,
    }[kind]()


_LABEL = re.compile(r"^([A-G])(\d+)$")


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Cartan data, positive roots and Weyl-group helpers for one system."""

    label: str
    cartan: tuple
    components: tuple = ()  # ((label, offset, rank), ...) for products
    order: int = 0
    positive_roots: tuple = field(default=(), repr=False)
    positive_root_coords: tuple = field(default=(), repr=False)

    def __post_init__(self):
        pos, coords = _positive_roots(self.cartan)
        object.__setattr__(self, "positive_roots", tuple(pos))
        object.__setattr__(self, "positive_root_coords", tuple(coords))
        object.__setattr__(self, "_pos_set", frozenset(pos))
        object.__setattr__(self, "_root_coords", dict(zip(pos, coords)))
        object.__setattr__(self, "_cache", {})

    @classmethod
    def of_type(cls, label: str) -> "RootSystem":
        label = label.strip().upper()
        if "X" in label:
            return cls.product([cls.of_type(p) for p in label.split("X")])
        m = _LABEL.match(label)
        if not m:
            raise WeylError(f"bad type label {label!r}")
        kind, rank = m.group(1), int(m.group(2))
        if rank < 1:
            raise WeylError("rank must be positive")
        cartan = _cartan_for(kind, rank)
        return cls(label, tuple(map(tuple, cartan)), ((label, 0, rank),),
                   _weyl_order(kind, rank))

    @classmethod
    def product(cls, factors: Sequence["RootSystem"]) -> "RootSystem":
        r = sum(f.rank for f in factors)
        a = [[0] * r for _ in range(r)]
        comps, off, order = [], 0, 1
        for f in factors:
            for i in range(f.rank):
                for j in range(f.rank):
                    a[off + i][off + j] = f.cartan[i][j]
            comps.extend((lab, off + o, rk) for lab, o, rk in f.components)
            off += f.rank
            order *= f.order
        label = "x".join(f.label for f in factors)
        return cls(label, tuple(map(tuple, a)), tuple(comps), order)

    # ---- lattice basics -------------------------------------------------
    @property
    def rank(self) -> int:
        return len(self.cartan)

    def simple_root(self, j: int) -> Weight:
        return tuple(row[j] for row in self.cartan)

    @property
    def simple_roots(self) -> tuple:
        return tuple(self.simple_root(j) for j in range(self.rank))

    def fundamental_weight(self, i: int) -> Weight:
        return tuple(int(k == i) for k in range(self.rank))

    def zero(self) -> Weight:
        return (0,) * self.rank

    def pairing(self, lam: Weight, i: int) -> int:
        """``<lam, alpha_i^v>``; this is just a coordinate read."""
        if not 0 <= i < self.rank:
            raise IndexError(f"simple index {i} out of range for {self.label}")
        return lam[i]

    def reflect(self, i: int, lam: Weight) -> Weight:
        c = lam[i]
        if c == 0:
            return tuple(lam)
        return tuple(x - c * row[i] for x, row in zip(lam, self.cartan))

    def is_root(self, beta: Weight) -> bool:
        beta = tuple(beta)
        return beta in self._pos_set or tuple(-x for x in beta) in self._pos_set

    def is_positive_root(self, beta: Weight) -> bool:
        return tuple(beta) in self._pos_set

    @property
    def roots(self) -> tuple:
        return self.positive_roots + tuple(tuple(-x for x in b) for b in self.positive_roots)

    def root_coords(self, beta: Weight) -> tuple:
        """Coordinates of a root in the simple-root basis."""
        beta = tuple(beta)
        if beta in self._pos_set:
            return self._root_coords[beta]
        neg = tuple(-x for x in beta)
        if neg in self._pos_set:
            return tuple(-x for x in self._root_coords[neg])
        raise WeylError(f"{beta} is not a root of {self.label}")

    def coroot_pairing(self, lam: Weight, beta: Weight) -> int:
        """``<lam, beta^v>`` for an arbitrary root, by walking beta to a simple root."""
        if not self.is_root(beta):
            raise WeylError(f"{beta} is not a root")
        lam, beta = tuple(lam), tuple(beta)
        sign = 1
        if not self.is_positive_root(beta):
            beta, sign = tuple(-x for x in beta), -1
        while True:
            for i in range(self.rank):
                if beta == self.simple_root(i):
                    return sign * lam[i]
            i = next(i for i in range(self.rank) if beta[i] > 0)
            beta, lam = self.reflect(i, beta), self.reflect(i, lam)

    def dominant(self, lam: Weight) -> bool:
        return all(x >= 0 for x in lam)

    # ---- group elements ---------------------------------------------------
    def identity(self) -> "WeylElem":
        return WeylElem(self, tuple(tuple(int(i == j) for j in range(self.rank))
                                    for i in range(self.rank)))

    def s(self, i: int) -> "WeylElem":
        key = ("s", i)
        if key not in self._cache:
            r = self.rank
            alpha = self.simple_root(i)
            m = tuple(tuple(int(a == b) - (alpha[a] if b == i else 0) for b in range(r))
                      for a in range(r))
            self._cache[key] = WeylElem(self, m)
        return self._cache[key]

    def element(self, word: Sequence[int]) -> "WeylElem":
        out = self.identity()
        for i in word:
            out = out * self.s(i)
        return out

    def longest(self) -> "WeylElem":
        if "w0" not in self._cache:
            img, word = (1,) * self.rank, []
            while True:
                i = next((k for k in range(self.rank) if img[k] > 0), None)
                if i is None:
                    break
                img = self.reflect(i, img)
                word.insert(0, i)
            self._cache["w0"] = self.element(word)
        return self._cache["w0"]

    def star(self, lam: Weight) -> Weight:
        """``lam* = -w0 lam``."""
        return tuple(-x for x in self.longest().apply(lam))

    def from_matrix(self, m: Sequence[Sequence[int]]) -> "WeylElem | None":
        """Return the Weyl element with this action, or None if there is none."""
        m = tuple(tuple(row) for row in m)
        cur = WeylElem(self, m)
        word = []
        for _ in range(len(self.positive_roots) + 1):
            for i in range(self.rank):
                img = cur.apply(self.simple_root(i))
                if not self.is_root(img):
                    return None
                if not self.is_positive_root(img):
                    cur = cur * self.s(i)
                    word.append(i)
                    break
            else:
                if cur.is_identity():
                    return self.element(word[::-1])
                return None
        return None

    def enumerate(self, max_elements: int = 10 ** 6) -> Iterator["WeylElem"]:
        """Every element exactly once, breadth-first by length."""
        if self.order > max_elements:
            raise WeylError(f"|W({self.label})| = {self.order} exceeds cap {max_elements}")
        rho = (1,) * self.rank
        start = self.identity()
        seen = {rho}
        frontier = [(rho, start.action)]
        while frontier:
            nxt = []
            for img, mat in frontier:
                yield WeylElem(self, mat)
                for i in range(self.rank):
                    if img[i] > 0:  # l(s_i w) = l(w) + 1
                        new = self.reflect(i, img)
                        if new not in seen:
                            seen.add(new)
                            alpha = self.simple_root(i)
                            mi = mat[i]
                            nxt.append((new, tuple(
                                tuple(x - alpha[r] * y for x, y in zip(row, mi))
                                for r, row in enumerate(mat))))
            frontier = nxt

    # ---- type A permutations ---------------------------------------------
    def _require_type_a(self):
        if len(self.components) != 1 or not self.label.startswith("A"):
            raise WeylError("permutation model only for a single type A system")

    def from_permutation(self, perm: Sequence[int]) -> "WeylElem":
        """``perm`` is one-line notation ``[w(1) ... w(N)]`` of S_N, N = rank + 1."""
        self._require_type_a()
        p = list(perm)
        if sorted(p) != list(range(1, self.rank + 2)):
            raise WeylError(f"not a permutation of 1..{self.rank + 1}: {perm}")
        word = []
        while True:
            i = next((k for k in range(len(p) - 1) if p[k] > p[k + 1]), None)
            if i is None:
                break
            p[i], p[i + 1] = p[i + 1], p[i]
            word.append(i)
        return self.element(word[::-1])

    def to_permutation(self, w: "WeylElem") -> tuple:
        self._require_type_a()
        out = []
        for j in range(1, self.rank + 2):
            r = j
            for i in reversed(w.word):
                if r == i + 1:
                    r = i + 2
                elif r == i + 2:
                    r = i + 1
            out.append(r)
        return tuple(out)

    def __repr__(self):
        return f"RootSystem({self.label})"


def _positive_roots(cartan) -> tuple[list, list]:
    r = len(cartan)
    simple = [tuple(int(i == j) for i in range(r)) for j in range(r)]
    found = set(simple)
    order = list(simple)
    layer = list(simple)
    while layer:
        nxt = []
        for beta in layer:
            for i in range(r):
                # <beta, alpha_i^v> from root coordinates
                pair = sum(cartan[i][j] * beta[j] for j in range(r))
                p = 0
                down = list(beta)
                while True:
                    down[i] -= 1
                    if tuple(down) in found:
                        p += 1
                    else:
                        break
                if p - pair > 0:
                    up = list(beta)
                    up[i] += 1
                    up = tuple(up)
                    if up not in found:
                        found.add(up)
                        order.append(up)
                        nxt.append(up)
        layer = nxt
    order.sort(key=lambda c: (sum(c), c))
    weights = [tuple(sum(cartan[i][j] * c[j] for j in range(r)) for i in range(r)) for c in order]
    return weights, order


class WeylElem:
    """Weyl group element; equality and hashing go through the action matrix."""

    __slots__ = ("system", "action", "_word")

    def __init__(self, system: RootSystem, action):
        self.system = system
        self.action = action
        self._word = None

    def __eq__(self, other):
        return isinstance(other, WeylElem) and self.action == other.action

    def __hash__(self):
        return hash(self.action)

    def __mul__(self, other: "WeylElem") -> "WeylElem":
        a, b = self.action, other.action
        bt = tuple(zip(*b))
        return WeylElem(self.system, tuple(
            tuple(sum(x * y for x, y in zip(row, col)) for col in bt) for row in a))

    def apply(self, lam: Weight) -> Weight:
        return tuple(sum(x * y for x, y in zip(row, lam)) for row in self.action)

    act_on_root = apply

    def inverse(self) -> "WeylElem":
        return self.system.element(self.word[::-1])

    def is_identity(self) -> bool:
        return all(self.action[i][j] == (i == j) for i in range(len(self.action))
                   for j in range(len(self.action)))

    def has_right_descent(self, i: int) -> bool:
        return not self.system.is_positive_root(self.apply(self.system.simple_root(i)))

    @property
    def word(self) -> list:
        """Canonical reduced word: greedily strip the smallest right descent."""
        if self._word is None:
            cur, stripped = self, []
            while True:
                i = next((k for k in range(self.system.rank) if cur.has_right_descent(k)), None)
                if i is None:
                    break
                stripped.append(i)
                cur = cur * self.system.s(i)
            self._word = stripped[::-1]
        return list(self._word)

    def alt_word(self) -> list:
        """A second reduced word (largest right descent first), for braid checks."""
        cur, stripped = self, []
        while True:
            i = next((k for k in reversed(range(self.system.rank))
                      if cur.has_right_descent(k)), None)
            if i is None:
                return stripped[::-1]
            stripped.append(i)
            cur = cur * self.system.s(i)

    def length(self) -> int:
        return len(self.word)

    def inversions(self) -> int:
        return sum(1 for b in self.system.positive_roots
                   if not self.system.is_positive_root(self.apply(b)))

    def word_str(self, prefix: str = "s") -> str:
        w = self.word
        return ".".join(f"{prefix}{i + 1}" for i in w) if w else "e"

    def __repr__(self):
        return f"WeylElem({self.system.label}: {self.word_str()})"


def is_reduced(system: RootSystem, word: Sequence[int]) -> bool:
    return len(word) == system.element(word).length()


def twisted_length(w: WeylElem, y: WeylElem) -> int:
    """``l(y^-1 w y)``: length of ``w`` with respect to the simple system ``y Delta``."""
    return (y.inverse() * w * y).length()


def twisted_length_additive(v: WeylElem, w: WeylElem, y: WeylElem) -> bool:
    return twisted_length(v * w, y) == twisted_length(v, y) + twisted_length(w, y)


def enumerate_weyl(system: RootSystem, max_elements: int = 10 ** 6) -> Iterator[WeylElem]:
    return system.enumerate(max_elements)
