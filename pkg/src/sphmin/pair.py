"""Catalog of spherical pairs of minimal rank with their exchange data.

The restriction ``X(T) -> X(T^)`` is the 0/1 folding matrix sending the
fundamental weight of a simple root to the fundamental weight of its image.
Everything here is Weyl-group combinatorics; matrix models live in
:mod:`sphmin.minors`.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product as iproduct
from typing import Sequence

from .weyl import RootSystem, Weight, WeylElem

FAMILIES = ("diagonal", "slsp", "spin", "e6f4", "b3g2")

# E6 diagram symmetry, 0-based: (1,6)(3,5)
E6_SIGMA = {0: 5, 5: 0, 2: 4, 4: 2, 1: 1, 3: 3}


class PairError(ValueError):
    """Bad parameters or a violated construction invariant."""


class Unsupported(PairError):
    """Parameters outside the supported catalog or sizes."""


@dataclass(frozen=True, eq=False)
class ExchangeData:
    key: int  # fundamental-weight index of b (diagonal: index of the small simple root)
    name: str
    b: Weight
    hw: WeylElem
    U: tuple
    lambda_b: Weight
    a_row: tuple
    hw_label: str = ""
    U_labels: tuple = ()

    def columns(self) -> list[tuple[str, WeylElem]]:
        """``U_b`` interleaved with ``U_b * hw``: e, hw, u1, u1 hw, ..."""
        out = []
        for lab, u in zip(self.U_labels, self.U):
            out.append((lab, u))
            out.append((f"{lab}*hw" if lab != "e" else "hw", u * self.hw))
        return out


def _vec_add(a, b):
    return tuple(x + y for x, y in zip(a, b))


def _vec_scale(c, a):
    return tuple(c * x for x in a)


@dataclass(eq=False)
class SphericalPair:
    family: str
    n: int | None
    big: RootSystem
    small: RootSystem
    folding: tuple  # folding[j] = small simple index of big simple index j
    z: WeylElem
    expected_basis_keys: tuple
    A: tuple
    small_type: str = ""
    exchange: dict = field(default_factory=dict)
    basis_keys: tuple = ()

    def __post_init__(self):
        self.y = self.z.inverse()
        self._fibers = {}
        for j, jh in enumerate(self.folding):
            self._fibers.setdefault(jh, []).append(j)

    # ---- naming ---------------------------------------------------------
    @property
    def name(self) -> str:
        if self.family == "diagonal":
            return f"diagonal({self.small_type})"
        if self.n is not None:
            return f"{self.family}({self.n})"
        return self.family

    def basis_weight(self, key: int) -> Weight:
        if self.family == "diagonal":
            w = self.small.fundamental_weight(key - 1)
            return tuple(w) + tuple(self.small.star(w))
        return self.big.fundamental_weight(key - 1)

    @property
    def basis(self) -> tuple:
        return tuple(self.basis_weight(k) for k in self.basis_keys)

    # ---- restriction ------------------------------------------------------
    def restrict_weight(self, lam: Weight) -> Weight:
        out = [0] * self.small.rank
        for j, x in enumerate(lam):
            out[self.folding[j]] += x
        return tuple(out)

    def restrict_root(self, beta: Weight) -> Weight:
        if not self.big.is_root(beta):
            raise PairError(f"{beta} is not a root of {self.big.label}")
        img = self.restrict_weight(beta)
        if not self.small.is_root(img):
            raise PairError(f"restriction of {beta} is not a root of {self.small.label}")
        return img

    def root_fiber(self, beta_hat: Weight) -> list:
        beta_hat = tuple(beta_hat)
        if not self.small.is_root(beta_hat):
            raise PairError(f"{beta_hat} is not a root of {self.small.label}")
        return [b for b in self.big.roots if self.restrict_weight(b) == beta_hat]

    def classify(self, beta: Weight) -> int:
        """1 or 2: size of the fiber of the restriction of ``beta``."""
        return len(self.root_fiber(self.restrict_root(beta)))

    def label_pn(self, beta_hat: Weight) -> tuple:
        fib = self.root_fiber(beta_hat)
        if len(fib) != 2:
            raise PairError("fiber has size 1; no p/n labelling")
        neg = [b for b in fib if not self.big.is_positive_root(self.z.apply(b))]
        if len(neg) != 1:
            raise PairError(f"z sends {len(neg)} roots of the fiber to negative roots")
        (bn,) = neg
        (bp,) = [b for b in fib if b != bn]
        return bp, bn

    def simple_fiber(self, jh: int) -> list[int]:
        """Big simple indices over small simple index ``jh``, p-root first."""
        fib = list(self._fibers[jh])
        if len(fib) == 2:
            bp, bn = self.label_pn(self.small.simple_root(jh))
            fib.sort(key=lambda j: 0 if self.big.simple_root(j) == bp else 1)
        return fib

    def lift_reduced_word(self, word_hat: Sequence[int]) -> list[int]:
        word_hat = list(word_hat)
        if len(word_hat) != self.small.element(word_hat).length():
            raise PairError(f"{word_hat} is not reduced in {self.small.label}")
        out = []
        for jh in word_hat:
            out.extend(self.simple_fiber(jh))
        return out

    def lift(self, w_hat: WeylElem) -> WeylElem:
        return self.big.element(self.lift_reduced_word(w_hat.word))

    def _section(self, lam_hat: Weight) -> Weight:
        out = [0] * self.big.rank
        for jh, x in enumerate(lam_hat):
            out[self._fibers[jh][0]] = x
        return tuple(out)

    def induced_small(self, w: WeylElem) -> WeylElem | None:
        """The element of W^ that ``w`` induces on restricted weights, if any."""
        r_small = self.small.rank
        cols = [self.restrict_weight(w.apply(self._section(self.small.fundamental_weight(j))))
                for j in range(r_small)]
        m = tuple(tuple(cols[j][i] for j in range(r_small)) for i in range(r_small))
        # w must preserve the kernel of the restriction
        for i in range(self.big.rank):
            e = self.big.fundamental_weight(i)
            lhs = self.restrict_weight(w.apply(e))
            img = self.restrict_weight(e)
            rhs = tuple(sum(m[a][b] * img[b] for b in range(r_small)) for a in range(r_small))
            if lhs != rhs:
                return None
        return self.small.from_matrix(m)

    def in_small_weyl(self, w: WeylElem) -> bool:
        w_hat = self.induced_small(w)
        return w_hat is not None and self.lift(w_hat) == w

    def small_weyl_elements(self, max_elements: int = 10 ** 5) -> list[WeylElem]:
        return [self.lift(wh) for wh in self.small.enumerate(max_elements)]

    # ---- y-twisted notation ------------------------------------------------
    def tau(self, i: int) -> WeylElem:
        """``tau_i = y s_i y^-1`` (0-based ``i``)."""
        return self.y * self.big.s(i) * self.z

    def delta(self, i: int) -> Weight:
        return self.y.apply(self.big.simple_root(i))

    def tau_word(self, word: Sequence[int]) -> WeylElem:
        return self.y * self.big.element(word) * self.z

    # ---- spherical weights ---------------------------------------------------
    def is_spherical(self, lam: Weight) -> bool:
        return self.big.dominant(lam) and not any(self.restrict_weight(self.y.apply(lam)))

    def spherical_basis(self, bound: int = 2) -> list[Weight]:
        """Free generators of ``{lam dominant : rho(y lam) = 0}`` within a box."""
        r = self.big.rank
        cols = [self.restrict_weight(self.y.apply(self.big.fundamental_weight(i)))
                for i in range(r)]
        half = r // 2

        def images(idx):
            out = {}
            for coeffs in iproduct(range(bound + 1), repeat=len(idx)):
                img = [0] * self.small.rank
                for c, i in zip(coeffs, idx):
                    if c:
                        for a in range(len(img)):
                            img[a] += c * cols[i][a]
                out.setdefault(tuple(img), []).append(coeffs)
            return out

        left, right = images(range(half)), images(range(half, r))
        kernel = []
        for img, lcs in left.items():
            neg = tuple(-x for x in img)
            for lc in lcs:
                for rc in right.get(neg, ()):
                    kernel.append(lc + rc)
        kernel = [k for k in kernel if any(k)]
        kernel.sort(key=sum)
        gens = []
        for x in kernel:
            below = any(k != x and all(a <= b for a, b in zip(k, x)) for k in kernel
                        if sum(k) < sum(x))
            if not below:
                gens.append(x)
        return gens

    # ---- exchange data ---------------------------------------------------------
    def exchange_data(self, key: int) -> ExchangeData:
        try:
            return self.exchange[key]
        except KeyError:
            raise PairError(f"{key} does not index an element of the spherical basis") from None

    def to_json(self) -> dict:
        def words(w):
            return [i + 1 for i in w.word]
        return {
            "family": self.family,
            "n": self.n,
            "small_type": self.small_type or None,
            "big": {"label": self.big.label, "cartan": [list(r) for r in self.big.cartan]},
            "small": {"label": self.small.label, "cartan": [list(r) for r in self.small.cartan]},
            "folding": {str(j + 1): jh + 1 for j, jh in enumerate(self.folding)},
            "z_word": words(self.z),
            "y_word": words(self.y),
            "basis": [list(b) for b in self.basis],
            "basis_keys": list(self.basis_keys),
            "A": [list(r) for r in self.A],
            "exchange": {
                str(k): {
                    "name": e.name,
                    "b": list(e.b),
                    "hw_word": words(e.hw),
                    "hw_tau": e.hw_label,
                    "U_words": [words(u) for u in e.U],
                    "U_tau": list(e.U_labels),
                    "lambda_b": list(e.lambda_b),
                    "A_row": list(e.a_row),
                }
                for k, e in self.exchange.items()
            },
        }


def _tau_label(word: Sequence[int]) -> str:
    return ".".join(f"t{i}" for i in word) if word else "e"


def _attach_exchange(pair: SphericalPair, key: int, hw_word, U_words, *, direct=False):
    """``hw_word``/``U_words`` are 1-based tau-words unless ``direct`` (then s-words)."""
    if direct:
        make = lambda w: pair.big.element([i - 1 for i in w])
        lab = lambda w: ".".join(f"s{i}" for i in w) if w else "e"
    else:
        make = lambda w: pair.tau_word([i - 1 for i in w])
        lab = _tau_label
    pos = pair.basis_keys.index(key)
    a_row = tuple(pair.A[pos])
    lam = pair.big.zero()
    for other, a in zip(pair.basis_keys, a_row):
        if other != key:
            lam = _vec_add(lam, _vec_scale(-a, pair.basis_weight(other)))
    b = pair.basis_weight(key)
    name = f"(w{key},w{key}*)" if pair.family == "diagonal" else f"w{key}"
    pair.exchange[key] = ExchangeData(
        key=key, name=name, b=b, hw=make(hw_word),
        U=tuple(make(u) for u in U_words), lambda_b=lam, a_row=a_row,
        hw_label=lab(hw_word), U_labels=tuple(lab(u) for u in U_words),
    )


def _check(pair: SphericalPair) -> None:
    big, small = pair.big, pair.small
    if set(pair.folding) != set(range(small.rank)):
        raise PairError("folding is not surjective")
    for beta in big.roots:
        pair.restrict_root(beta)
    if not (pair.y * pair.z).is_identity():
        raise PairError("y != z^-1")
    for bh in small.positive_roots:
        fib = pair.root_fiber(bh)
        if len(fib) == 2:
            a, b = fib
            if (big.coroot_pairing(a, b) or big.coroot_pairing(b, a)
                    or big.is_root(_vec_add(a, b))
                    or big.is_root(tuple(x - y for x, y in zip(a, b)))):
                raise PairError(f"fiber over {bh} is not strongly orthogonal")
            pair.label_pn(bh)
        elif len(fib) != 1:
            raise PairError(f"fiber over {bh} has size {len(fib)}")
    found = sorted(tuple(g) for g in pair.spherical_basis(2))
    expected = sorted(tuple(pair.basis_weight(k)) for k in pair.expected_basis_keys)
    if found != expected:
        raise PairError(f"spherical basis scan {found} != catalog {expected}")
    if sorted(tuple(g) for g in pair.spherical_basis(3)) != found:
        raise PairError("basis scan with bound 3 found extra generators")
    for ex in pair.exchange.values():
        if ex.U[0] != big.identity():
            raise PairError("U_b must start with e")
        for other, a in zip(pair.basis_keys, ex.a_row):
            if other != ex.key and a > 0:
                raise PairError("lambda_b would have a negative coefficient")
        if not pair.in_small_weyl(ex.hw):
            raise PairError(f"hw_{ex.key} is not in the small Weyl group")
        target = pair.y.apply(big.star(ex.lambda_b))
        yb = pair.y.apply(big.star(ex.b))
        if _vec_add(yb, ex.hw.apply(yb)) != target:
            raise PairError(f"exchange row for {ex.key} does not match y b* + hw y b*")
        for u in ex.U:
            if u.apply(target) != target:
                raise PairError(f"U_{ex.key} does not stabilise y lambda_b*")


def catalog(family: str, n: int | None = None, small_type: str | None = None,
            check: bool = True) -> SphericalPair:
    family = family.lower()
    if family in ("diag", "diagonal"):
        family = "diagonal"
    if family not in FAMILIES:
        raise PairError(f"unknown family {family!r}; choose from {FAMILIES}")
    key = (family, n, small_type.upper() if small_type else None, check)
    if key in _CACHE:
        return _CACHE[key]

    if family == "slsp":
        if n is None or n < 2:
            raise Unsupported("slsp needs n >= 2")
        big = RootSystem.of_type(f"A{2 * n - 1}")
        small = RootSystem.of_type(f"C{n}")
        folding = tuple(min(i, 2 * n - i) - 1 for i in range(1, 2 * n))
        perm = list(range(1, 2 * n, 2)) + list(range(2 * n, 0, -2))
        z = big.from_permutation(perm)
        keys = tuple(2 * k for k in range(1, n))
        A = tuple(tuple(2 if a == b else (-1 if abs(a - b) == 1 else 0)
                        for b in range(n - 1)) for a in range(n - 1))
        pair = SphericalPair(family, n, big, small, folding, z, keys, A, basis_keys=keys)
        for k in range(1, n):
            a = 2 * (n - k)
            _attach_exchange(pair, 2 * k, [a, a + 1, a - 1, a], [[], [a], [a + 1, a]])

    elif family == "spin":
        if n is None or n < 4:
            raise Unsupported("spin needs n >= 4")
        big = RootSystem.of_type(f"D{n}")
        small = RootSystem.of_type(f"B{n - 1}")
        folding = tuple(min(i, n - 2) for i in range(n))
        z = big.element(list(range(n - 1)))
        pair = SphericalPair(family, n, big, small, folding, z, (1,), ((2,),), basis_keys=(1,))
        hw = list(range(1, n)) + [n] + list(range(n - 2, 0, -1))
        U = [list(range(j, 0, -1)) for j in range(n)]
        _attach_exchange(pair, 1, hw, U)

    elif family == "e6f4":
        big = RootSystem.of_type("E6")
        small = RootSystem.of_type("F4")
        folding = (3, 0, 2, 1, 2, 3)
        z = big.element([i - 1 for i in (6, 1, 3, 4, 5, 4, 3, 2, 4, 3, 5, 1)])
        keys = (1, 6)
        pair = SphericalPair(family, None, big, small, folding, z, keys,
                             ((2, -1), (-1, 2)), basis_keys=keys)
        hw6 = [1, 3, 4, 2, 5, 4, 3, 1]
        U6 = [[], [1], [3, 1], [4, 3, 1], [2, 4, 3, 1]]
        sig = lambda w: [E6_SIGMA[i - 1] + 1 for i in w]
        _attach_exchange(pair, 1, sig(hw6), [sig(u) for u in U6])
        _attach_exchange(pair, 6, hw6, U6)

    elif family == "b3g2":
        big = RootSystem.of_type("B3")
        small = RootSystem.of_type("G2")
        folding = (0, 1, 0)
        z = big.element([2, 1, 2])
        pair = SphericalPair(family, None, big, small, folding, z, (3,), ((2,),),
                             basis_keys=(3,))
        _attach_exchange(pair, 3, [3, 2, 3, 1, 2, 3], [[], [3], [2, 3], [3, 2, 3]])

    else:
        if not small_type:
            raise PairError("diagonal needs a small type, e.g. A2")
        small = RootSystem.of_type(small_type)
        if len(small.components) != 1:
            raise Unsupported("diagonal pair needs a simple small group")
        if small.rank > 6:
            raise Unsupported("diagonal pair supported up to rank 6")
        big = RootSystem.product([small, small])
        r = small.rank
        folding = tuple(list(range(r)) + list(range(r)))
        z = big.element(small.longest().word)
        keys = tuple(range(1, r + 1))
        # exchange exponents are the columns of the Cartan matrix: with
        # a[i][j] = <alpha_j, alpha_i^vee>, w_a + s_a w_a = sum_j -a[j][a] w_j
        A = tuple(zip(*small.cartan))
        pair = SphericalPair(family, None, big, small, folding, z, keys, A,
                             small_type=small.label, basis_keys=keys)
        for a in keys:
            _attach_exchange(pair, a, [a, a + r], [[], [a]], direct=True)

    if check:
        _check(pair)
    _CACHE[key] = pair
    return pair


_CACHE: dict = {}


def parse_pair(text: str) -> SphericalPair:
    """``slsp:3``, ``spin:4``, ``e6f4``, ``b3g2``, ``diagonal:A2``."""
    fam, _, arg = text.partition(":")
    fam = fam.lower()
    if fam in ("diag", "diagonal"):
        return catalog("diagonal", small_type=arg or None)
    if arg:
        if not arg.isdigit():
            raise PairError(f"expected an integer rank after ':', got {arg!r}")
        return catalog(fam, int(arg))
    return catalog(fam)
