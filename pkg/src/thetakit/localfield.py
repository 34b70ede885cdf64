"""Tame local-field model: k*/k*^n coordinates and norm-residue symbols.

For an odd prime p with n | p - 1, the class of a nonzero rational in
Q_p*/Q_p*^n is recorded as (v, w): the p-adic valuation mod n and the
discrete log (base the least primitive root g_p) of the unit part's residue,
mod n.  zeta_n is g_p^((p-1)/n), so symbol values are dlogs relative to it.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np
import sympy

from .cohomology import PeriodIndexReport
from .finmod import FiniteAbelianGroup, check_guard

DLOG_GUARD = 10**4


@dataclass(frozen=True)
class UnitClass:
    v: int
    w: int

    def __iter__(self):
        return iter((self.v, self.w))


@dataclass(frozen=True)
class TameLocalModel:
    p: int
    n: int

    def __post_init__(self):
        if self.p == 2 or not sympy.isprime(self.p):
            raise ValueError("p must be an odd prime")
        if self.n < 2 or (self.p - 1) % self.n:
            raise ValueError(f"tame model needs n | p - 1, got n={self.n}, p={self.p}")
        check_guard("discrete-log table", self.p, DLOG_GUARD)

    @cached_property
    def primitive_root(self) -> int:
        return int(sympy.primitive_root(self.p))

    @cached_property
    def dlog_table(self) -> dict[int, int]:
        table, x = {}, 1
        for k in range(self.p - 1):
            table[x] = k
            x = x * self.primitive_root % self.p
        return table

    @property
    def s_minus_one(self) -> int:
        """dlog of -1 mod n, i.e. (p - 1)/2 mod n."""
        return (self.p - 1) // 2 % self.n

    def classes(self) -> list[UnitClass]:
        return [UnitClass(v, w) for v in range(self.n) for w in range(self.n)]

    def add(self, a: UnitClass, b: UnitClass) -> UnitClass:
        return UnitClass((a.v + b.v) % self.n, (a.w + b.w) % self.n)

    def neg(self, a: UnitClass) -> UnitClass:
        return UnitClass(-a.v % self.n, -a.w % self.n)

    def minus(self, a: UnitClass) -> UnitClass:
        """Class of the field element -a (not the inverse class)."""
        return UnitClass(a.v, (a.w + self.s_minus_one) % self.n)

    def scale(self, k: int, a: UnitClass) -> UnitClass:
        return UnitClass(k * a.v % self.n, k * a.w % self.n)

    def representative(self, a: UnitClass) -> int:
        """p^v * g_p^w, an integer in the class."""
        return self.p**a.v * self.primitive_root**a.w


def _valuation(x: int, p: int) -> int:
    k = 0
    while x % p == 0:
        x //= p
        k += 1
    return k


def reduce(a: Fraction | int | tuple[int, int], model: TameLocalModel) -> UnitClass:
    """Class of a nonzero rational in k*/k*^n."""
    if isinstance(a, tuple):
        a = Fraction(*a)
    a = Fraction(a)
    if a == 0:
        raise ValueError("0 has no class in k*/k*^n")
    p = model.p
    vn, vd = _valuation(abs(a.numerator), p), _valuation(a.denominator, p)
    num = a.numerator // p**vn
    den = a.denominator // p**vd
    residue = num * pow(den, -1, p) % p
    return UnitClass((vn - vd) % model.n, model.dlog_table[residue] % model.n)


def tame_symbol(a: UnitClass, b: UnitClass, model: TameLocalModel) -> int:
    """<a, b>_n = v_b w_a - v_a w_b + v_a v_b dlog(-1)  (mod n)."""
    n = model.n
    return (b.v * a.w - a.v * b.w + a.v * b.v * model.s_minus_one) % n


def tame_symbol_from_integers(a: int, b: int, model: TameLocalModel) -> int:
    """Same symbol via (-1)^(v(a)v(b)) a^v(b) / b^v(a) mod p, raised to (p-1)/n."""
    p, n = model.p, model.n
    va, vb = _valuation(abs(a), p), _valuation(abs(b), p)
    num = (-1) ** (va * vb) * a**vb
    den = b**va
    unit = Fraction(num, den)
    # strip the (cancelling) powers of p
    u = unit.numerator // p**_valuation(abs(unit.numerator), p)
    d = unit.denominator // p**_valuation(unit.denominator, p)
    residue = u * pow(d, -1, p) % p
    root = pow(residue, (p - 1) // n, p)
    zeta = pow(model.primitive_root, (p - 1) // n, p)
    for k in range(n):
        if pow(zeta, k, p) == root:
            return k
    raise AssertionError("power residue is not an n-th root of unity")


def symbol_table(model: TameLocalModel) -> list[list[int]]:
    cls = model.classes()
    return [[tame_symbol(a, b, model) for b in cls] for a in cls]


def conic_solvable(a: int, b: int, p: int) -> bool:
    """Does z^2 = a x^2 + b y^2 have a nonzero p-adic solution?  (p odd)

    The class representatives have valuations <= 1, so every primitive
    solution mod p^3 has a partial derivative of valuation <= 1 and lifts by
    Hensel's lemma; conversely a p-adic solution reduces to one.  So it is
    enough to search primitive solutions mod p^3.
    """
    q = p**3
    r = np.arange(q, dtype=np.int64)
    sq = r * r % q
    unit = r % p != 0
    unit_squares = np.zeros(q, dtype=bool)
    unit_squares[sq[unit]] = True
    all_squares = np.zeros(q, dtype=bool)
    all_squares[sq] = True
    rhs = (a * sq[:, None] + b * sq[None, :]) % q
    xy_primitive = unit[:, None] | unit[None, :]
    ok = np.where(xy_primitive, all_squares[rhs], unit_squares[rhs])
    return bool(ok.any())


def hilbert_symbol_oracle(a: UnitClass, b: UnitClass, model: TameLocalModel) -> int:
    """n = 2 symbol from conic solvability: 0 if solvable else 1."""
    if model.n != 2:
        raise ValueError("the conic oracle covers n = 2 only")
    p = model.p
    ra, rb = model.representative(a), model.representative(b)
    return 0 if conic_solvable(ra, rb, p) else 1


def delta_symbols(a: Sequence[UnitClass], b: Sequence[UnitClass], C1: Sequence[UnitClass],
                  C2: Sequence[UnitClass], model: TameLocalModel) -> int:
    """sum_i <a_i, b_i> + sum_i (<C1_i, b_i> + <a_i, C2_i>)  in Z/n."""
    if not (len(a) == len(b) == len(C1) == len(C2)):
        raise ValueError("symbol lists must have equal length g")
    total = 0
    for ai, bi, c1, c2 in zip(a, b, C1, C2):
        total += tame_symbol(ai, bi, model) + tame_symbol(c1, bi, model) + tame_symbol(ai, c2, model)
    return total % model.n


# ---------------------------------------------------------------------------
# character model for splitting fields


@dataclass(frozen=True)
class CharacterTuple:
    """Characters of (Z/n)^r, each a coefficient vector c with chi(x) = c.x mod n."""

    n: int
    r: int
    characters: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        chars = tuple(tuple(int(c) % self.n for c in ch) for ch in self.characters)
        if any(len(ch) != self.r for ch in chars):
            raise ValueError("each character needs r coefficients")
        object.__setattr__(self, "characters", chars)

    @property
    def ambient(self) -> FiniteAbelianGroup:
        return FiniteAbelianGroup((self.n,) * self.r)

    def kernel_intersection(self) -> list[tuple[int, ...]]:
        return [
            x for x in self.ambient.elements
            if all(sum(c * xi for c, xi in zip(ch, x)) % self.n == 0 for ch in self.characters)
        ]

    def period(self) -> int:
        orders = [self.n // math.gcd(self.n, math.gcd(*ch)) if any(ch) else 1 for ch in self.characters]
        return math.lcm(*orders) if orders else 1


def character_index(t: CharacterTuple) -> PeriodIndexReport:
    """Splitting data of the class (chi_1, ..., chi_m) in H^1((Z/n)^r, (Z/n)^m).

    A subgroup splits the tuple iff every chi_i vanishes on it, so the
    splitting subgroups are exactly the subgroups of the intersection of the
    kernels, which is therefore the unique minimal one.
    """
    if t.r == 0:
        return PeriodIndexReport(1, 1, 1, 1, {"index": (), "mindex": (), "galois_index": ()})
    A = t.ambient
    kernel = t.kernel_intersection()
    idx = A.order // len(kernel)
    witness = tuple(A.index(x) for x in kernel)
    return PeriodIndexReport(
        period=t.period(),
        index=idx,
        mindex=idx,
        galois_index=idx,
        witnesses={"index": witness, "mindex": witness, "galois_index": witness},
    )


def independent_characters(n: int, r: int) -> CharacterTuple:
    """The r coordinate projections of (Z/n)^r."""
    return CharacterTuple(n, r, tuple(tuple(int(i == j) for j in range(r)) for i in range(r)))


# ---------------------------------------------------------------------------
# Lang-Tate coordinates


@dataclass(frozen=True)
class LangTateModel:
    """Free model in which the uniformizer classes T_1..T_2g are independent.

    A coordinate is an element of the subgroup generated by the T_i, written
    as its exponent vector in (Z/n)^(2g); its Kummer character on
    Gamma_ab = (Z/n)^(2g) has that same coefficient vector.
    """

    n: int
    g: int

    @property
    def rank(self) -> int:
        return 2 * self.g

    def T(self, i: int, e: int = 1) -> tuple[int, ...]:
        if not 1 <= i <= self.rank:
            raise ValueError(f"uniformizer index must be in 1..{self.rank}")
        return tuple(e % self.n if j == i - 1 else 0 for j in range(self.rank))

    def one(self) -> tuple[int, ...]:
        return (0,) * self.rank

    def parse(self, text: str) -> tuple[int, ...]:
        """'1', 'T3', 'T1*T2^2' -> exponent vector."""
        text = text.strip()
        if text == "1":
            return self.one()
        vec = [0] * self.rank
        for factor in text.split("*"):
            factor = factor.strip()
            if not factor.startswith("T"):
                raise ValueError(f"coordinate {text!r} is outside the uniformizer subgroup")
            base, _, exp = factor[1:].partition("^")
            i = int(base)
            if not 1 <= i <= self.rank:
                raise ValueError(f"coordinate {text!r} names T{i}, outside T1..T{self.rank}")
            vec[i - 1] += int(exp) if exp else 1
        return tuple(v % self.n for v in vec)


def lang_tate_index(coords: Sequence[Sequence[int] | str], model: LangTateModel) -> int:
    if len(coords) != model.rank:
        raise ValueError(f"expected {model.rank} coordinates")
    vectors = []
    for c in coords:
        vec = model.parse(c) if isinstance(c, str) else tuple(int(x) % model.n for x in c)
        if len(vec) != model.rank:
            raise ValueError("coordinate outside the designated uniformizer subgroup")
        vectors.append(vec)
    return character_index(CharacterTuple(model.n, model.rank, tuple(vectors))).index


def pure_uniformizer_count(coords: Sequence[Sequence[int]], n: int) -> int:
    """Number of coordinates equal to a unit power of a single T_i."""
    count = 0
    for vec in coords:
        nz = [x for x in vec if x % n]
        if len(nz) == 1 and math.gcd(nz[0], n) == 1:
            count += 1
    return count


# ---------------------------------------------------------------------------
# nonvanishing search


Tuple = tuple[UnitClass, ...]


def tuple_group(model: TameLocalModel, g: int) -> list[Tuple]:
    """((Z/n)^2)^(2g) in lexicographic order of (v1, w1, v2, w2, ...)."""
    cls = model.classes()
    check_guard("tuple group", len(cls) ** (2 * g))
    return [tuple(t) for t in itertools.product(cls, repeat=2 * g)]


def heisenberg_delta(t: Tuple, model: TameLocalModel) -> int:
    g = len(t) // 2
    trivial = [UnitClass(0, 0)] * g
    return delta_symbols(t[:g], t[g:], trivial, trivial, model)


def prop28_search(H: Iterable[Tuple], model: TameLocalModel, g: int) -> Tuple | None:
    """First nonzero t (lexicographic) with Delta(h + t) != 0 for every h in H."""
    H = [tuple(h) for h in H]
    zero = tuple(UnitClass(0, 0) for _ in range(2 * g))
    for t in tuple_group(model, g):
        if t == zero:
            continue
        if all(
            heisenberg_delta(tuple(model.add(a, b) for a, b in zip(h, t)), model) != 0 for h in H
        ):
            return t
    return None
