"""Brute-force group cohomology H^1, H^2 of finite Gamma-modules.

Cochains are stored as tuples of element *indices* of the module (index
order is lexicographic order on residue vectors), so the canonical class
representative is simply the lexicographically least tuple in its coset.
Degree-2 cochains are flattened row-major: ``values[s * |Gamma| + t]``.
"""

from __future__ import annotations

import itertools
import math
import weakref
from dataclasses import dataclass, field
from typing import Callable, Iterable, Sequence

import numpy as np
import sympy

from .finmod import (
    FiniteAbelianGroup,
    GammaModule,
    GuardExceeded,
    check_guard,
    guard_limit,
)


class CocycleError(ValueError):
    pass


# ---------------------------------------------------------------------------
# cochains


@dataclass(frozen=True)
class Cocycle1:
    module: GammaModule = field(compare=False)
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.module.group.order:
            raise CocycleError("a 1-cochain needs one value per group element")

    @classmethod
    def from_vectors(cls, module: GammaModule, vectors: Sequence[Sequence[int]]) -> "Cocycle1":
        return cls(module, tuple(module.module.index(v) for v in vectors))

    def vector(self, s: int):
        return self.module.module.elements[self.values[s]]

    def vectors(self) -> list[tuple[int, ...]]:
        return [self.vector(s) for s in self.module.group.elements]

    def is_cocycle(self) -> bool:
        G, add, act = self.module.group, self.module.module.add_table, self.module.act_table
        v = self.values
        return all(
            v[G.table[s][t]] == add[v[s], act[s, v[t]]] for s in G.elements for t in G.elements
        )

    def check(self) -> "Cocycle1":
        if not self.is_cocycle():
            raise CocycleError(f"not a 1-cocycle: {self.vectors()}")
        return self

    def __add__(self, other: "Cocycle1") -> "Cocycle1":
        add = self.module.module.add_table
        return Cocycle1(self.module, tuple(int(add[a, b]) for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Cocycle1":
        neg = self.module.module.neg_table
        return Cocycle1(self.module, tuple(int(neg[a]) for a in self.values))

    def __sub__(self, other: "Cocycle1") -> "Cocycle1":
        return self + (-other)

    def scale(self, k: int) -> "Cocycle1":
        M = self.module.module
        return Cocycle1(self.module, tuple(M.scale_index(k, a) for a in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class Cocycle2:
    module: GammaModule = field(compare=False)
    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if len(self.values) != self.module.group.order ** 2:
            raise CocycleError("a 2-cochain needs one value per pair of group elements")

    @classmethod
    def from_function(cls, module: GammaModule, fn: Callable[[int, int], Sequence[int]]) -> "Cocycle2":
        G, M = module.group, module.module
        return cls(module, tuple(M.index(fn(s, t)) for s in G.elements for t in G.elements))

    def value(self, s: int, t: int) -> int:
        return self.values[s * self.module.group.order + t]

    def vector(self, s: int, t: int):
        return self.module.module.elements[self.value(s, t)]

    def rows(self) -> list[list[tuple[int, ...]]]:
        G = self.module.group
        return [[self.vector(s, t) for t in G.elements] for s in G.elements]

    def is_cocycle(self) -> bool:
        return cocycle2_defect(self.module, self.values) is None

    def is_normalized(self) -> bool:
        N = self.module.group.order
        return all(self.values[t] == 0 and self.values[t * N] == 0 for t in range(N))

    def check(self) -> "Cocycle2":
        if not self.is_cocycle():
            raise CocycleError("not a 2-cocycle")
        return self

    def __add__(self, other: "Cocycle2") -> "Cocycle2":
        add = self.module.module.add_table
        return Cocycle2(self.module, tuple(int(add[a, b]) for a, b in zip(self.values, other.values)))

    def __neg__(self) -> "Cocycle2":
        neg = self.module.module.neg_table
        return Cocycle2(self.module, tuple(int(neg[a]) for a in self.values))

    def __sub__(self, other: "Cocycle2") -> "Cocycle2":
        return self + (-other)

    def scale(self, k: int) -> "Cocycle2":
        M = self.module.module
        return Cocycle2(self.module, tuple(M.scale_index(k, a) for a in self.values))

    def is_zero(self) -> bool:
        return not any(self.values)


def cocycle2_defect(module: GammaModule, values: Sequence[int]):
    """First triple (s, t, u) violating the 2-cocycle identity, or None."""
    G = module.group
    N = G.order
    add, act = module.module.add_table, module.act_table
    c = np.asarray(values, dtype=np.int64).reshape(N, N)
    mt = G.mul_table
    s = np.arange(N)[:, None, None]
    t = np.arange(N)[None, :, None]
    u = np.arange(N)[None, None, :]
    # s.c(t,u) - c(st,u) + c(s,tu) - c(s,t)
    lhs = add[act[s, c[t, u]], c[s, mt[t, u]]]
    rhs = add[c[mt[s, t], u], c[s, t]]
    bad = np.argwhere(lhs != rhs)
    if len(bad):
        return tuple(int(v) for v in bad[0])
    return None


def coboundary1(module: GammaModule, m: Sequence[int] | int) -> Cocycle1:
    """s -> s.m - m."""
    M = module.module
    i = m if isinstance(m, (int, np.integer)) else M.index(m)
    neg = M.neg_table[i]
    return Cocycle1(module, tuple(int(M.add_table[module.act_table[s, i], neg]) for s in module.group.elements))


def coboundary2(module: GammaModule, cochain: Sequence[int]) -> Cocycle2:
    """(s, t) -> s.m(t) - m(st) + m(s) for a 1-cochain given by element indices."""
    return Cocycle2(module, tuple(_coboundary2_array(module, np.asarray([cochain]))[0].tolist()))


def _coboundary2_array(module: GammaModule, cochains: np.ndarray) -> np.ndarray:
    """Vectorised d^1 on a (K, N) array of 1-cochains; returns (K, N*N)."""
    G, M = module.group, module.module
    N = G.order
    add, neg, act, mt = M.add_table, M.neg_table, module.act_table, G.mul_table
    m = cochains
    s = np.arange(N)[:, None]
    t = np.arange(N)[None, :]
    first = act[s, m[:, t]]  # (K, N, N): s . m(t)
    out = add[add[first, neg[m[:, mt]]], m[:, s]]
    return out.reshape(len(cochains), N * N)


# ---------------------------------------------------------------------------
# cocycle and coboundary enumeration (cached per module)


class _Complex:
    def __init__(self, module: GammaModule):
        self.module = module
        self._z1 = self._b1 = self._z2 = self._b2 = None

    # degree 1 --------------------------------------------------------------
    def z1(self) -> list[tuple[int, ...]]:
        if self._z1 is None:
            self._z1 = _enumerate_z1(self.module)
        return self._z1

    def b1(self) -> frozenset[tuple[int, ...]]:
        if self._b1 is None:
            M = self.module
            self._b1 = frozenset(coboundary1(M, i).values for i in range(M.module.order))
        return self._b1

    # degree 2 --------------------------------------------------------------
    def z2(self) -> list[tuple[int, ...]]:
        if self._z2 is None:
            self._z2 = _enumerate_z2(self.module)
        return self._z2

    def b2(self) -> frozenset[tuple[int, ...]]:
        if self._b2 is None:
            self._b2 = frozenset(map(tuple, self.b2_array().tolist()))
        return self._b2

    def b2_array(self) -> np.ndarray:
        M = self.module
        N, order = M.group.order, M.module.order
        check_guard("coboundaries B^2", order ** max(N - 1, 0))
        grid = np.array(list(itertools.product(range(order), repeat=N - 1)), dtype=np.int64)
        grid = grid.reshape(-1, N - 1)
        cochains = np.hstack([np.zeros((len(grid), 1), dtype=np.int64), grid])
        return np.unique(_coboundary2_array(M, cochains), axis=0)


_complexes: "weakref.WeakKeyDictionary[GammaModule, _Complex]" = weakref.WeakKeyDictionary()


def _complex(module: GammaModule) -> _Complex:
    cx = _complexes.get(module)
    if cx is None:
        cx = _complexes[module] = _Complex(module)
    return cx


def _enumerate_z1(module: GammaModule) -> list[tuple[int, ...]]:
    """All 1-cocycles, determined by their values on a generating set."""
    G, M = module.group, module.module
    gens = G.generators
    check_guard("cocycles Z^1", M.order ** len(gens))
    add, act = M.add_table, module.act_table
    out = []
    for images in itertools.product(range(M.order), repeat=len(gens)):
        values = {0: 0}
        stack = [0]
        ok = True
        while stack and ok:
            g = stack.pop()
            for s, v in zip(gens, images):
                # xi(g s) = xi(g) + g . xi(s)
                h = G.table[g][s]
                val = int(add[values[g], act[g, v]])
                if h in values:
                    if values[h] != val:
                        ok = False
                        break
                else:
                    values[h] = val
                    stack.append(h)
        if not ok:
            continue
        xi = Cocycle1(module, tuple(values[g] for g in G.elements))
        if xi.is_cocycle():
            out.append(xi.values)
    return sorted(out)


def _enumerate_z2(module: GammaModule) -> list[tuple[int, ...]]:
    """All normalized 2-cocycles by backtracking with forced values.

    Variables c(s, t), s, t != id, are assigned in row-major order.  Each
    cocycle identity (s, t, u) is attached to the last of its variables to be
    assigned; since every coefficient in the identity is invertible it forces
    that variable's value.
    """
    G, M = module.group, module.module
    N = G.order
    if N == 1:
        return [(0,)]
    check_guard("cocycles Z^2", M.order ** (N - 1) * M.order)
    add, neg, act, mt = M.add_table, M.neg_table, module.act_table, G.mul_table
    inv_act = act[list(G.inverses)]
    pos = lambda s, t: s * N + t
    variables = [pos(s, t) for s in range(1, N) for t in range(1, N)]
    order = {v: i for i, v in enumerate(variables)}

    # identity (s,t,u): s.c(t,u) - c(st,u) + c(s,tu) - c(s,t) = 0
    checks: dict[int, list[tuple[int, int, int]]] = {v: [] for v in variables}
    force: dict[int, tuple[str, int, int, int]] = {}
    for s in range(1, N):
        for t in range(1, N):
            for u in range(1, N):
                terms = {
                    "tu": pos(t, u),
                    "stu": pos(mt[s, t], u),
                    "s_tu": pos(s, mt[t, u]),
                    "st": pos(s, t),
                }
                last = max((order[p], p) for p in terms.values() if p in order)[1]
                checks[last].append((s, t, u))
                roles = [r for r, p in terms.items() if p == last]
                if len(roles) == 1 and last not in force:
                    force[last] = (roles[0], s, t, u)

    def solve(c, role, s, t, u):
        a_tu = c[pos(t, u)]
        a_stu = c[pos(mt[s, t], u)]
        a_s_tu = c[pos(s, mt[t, u])]
        a_st = c[pos(s, t)]
        if role == "tu":
            return int(inv_act[s, add[add[a_stu, neg[a_s_tu]], a_st]])
        if role == "stu":
            return int(add[add[act[s, a_tu], a_s_tu], neg[a_st]])
        if role == "s_tu":
            return int(add[add[a_stu, a_st], neg[act[s, a_tu]]])
        return int(add[add[act[s, a_tu], neg[a_stu]], a_s_tu])

    def holds(c, s, t, u):
        return add[act[s, c[pos(t, u)]], c[pos(s, mt[t, u])]] == add[c[pos(mt[s, t], u)], c[pos(s, t)]]

    limit = guard_limit()
    visited = 0
    out: list[tuple[int, ...]] = []
    c = [0] * (N * N)

    def rec(k: int):
        nonlocal visited
        if k == len(variables):
            out.append(tuple(c))
            return
        var = variables[k]
        c[var] = 0
        candidates = [solve(c, *force[var])] if var in force else range(M.order)
        for val in candidates:
            visited += 1
            if visited > limit:
                raise GuardExceeded("cocycles Z^2", visited, limit)
            c[var] = val
            if all(holds(c, *r) for r in checks[var]):
                rec(k + 1)
        c[var] = 0

    rec(0)
    return sorted(out)


def z1(module: GammaModule) -> list[Cocycle1]:
    return [Cocycle1(module, v) for v in _complex(module).z1()]


def z2(module: GammaModule) -> list[Cocycle2]:
    return [Cocycle2(module, v) for v in _complex(module).z2()]


def _normalized(c: Cocycle2) -> Cocycle2:
    """c minus the coboundary of the constant cochain c(1, 1); c(1, t) = c(s, 1) = 0 after."""
    m = c.values[0]
    if m == 0:
        return c
    return c - coboundary2(c.module, (m,) * c.module.group.order)


def is_coboundary(c: Cocycle1 | Cocycle2) -> bool:
    cx = _complex(c.module)
    if isinstance(c, Cocycle1):
        return c.values in cx.b1()
    return _normalized(c).values in cx.b2()


# ---------------------------------------------------------------------------
# classes


@dataclass(frozen=True)
class CohClass:
    """A cohomology class, held through its lexicographically least cocycle."""

    degree: int
    representative: Cocycle1 | Cocycle2

    @property
    def module(self) -> GammaModule:
        return self.representative.module

    def __eq__(self, other):
        if not isinstance(other, CohClass):
            return NotImplemented
        return (
            self.degree == other.degree
            and self.module is other.module
            and self.representative.values == other.representative.values
        )

    def __hash__(self):
        return hash((self.degree, id(self.module), self.representative.values))

    def is_trivial(self) -> bool:
        return is_coboundary(self.representative)

    def __add__(self, other: "CohClass") -> "CohClass":
        return cohomology_class(self.representative + other.representative)

    def __neg__(self) -> "CohClass":
        return cohomology_class(-self.representative)

    def scale(self, k: int) -> "CohClass":
        return cohomology_class(self.representative.scale(k))


def cohomology_class(c: Cocycle1 | Cocycle2) -> CohClass:
    """Class of a cocycle with its canonical (lex-least) representative."""
    c.check()
    cx = _complex(c.module)
    if isinstance(c, Cocycle1):
        add = c.module.module.add_table
        best = min(tuple(int(add[a, b]) for a, b in zip(c.values, bnd)) for bnd in cx.b1())
        return CohClass(1, Cocycle1(c.module, best))
    add = c.module.module.add_table
    c = _normalized(c)
    coset = add[np.asarray(c.values, dtype=np.int64)[None, :], cx.b2_array()]
    best = min(map(tuple, coset.tolist()))
    return CohClass(2, Cocycle2(c.module, best))


def _classes(reps: list[tuple[int, ...]], boundaries: Iterable[tuple[int, ...]], module, cls, degree):
    add = module.module.add_table
    bnds = np.array(sorted(boundaries), dtype=np.int64)
    claimed: set[tuple[int, ...]] = set()
    out = []
    for z in reps:  # sorted, so the first unclaimed element is its coset's minimum
        if z in claimed:
            continue
        coset = add[np.asarray(z, dtype=np.int64)[None, :], bnds]
        claimed.update(map(tuple, coset.tolist()))
        out.append(CohClass(degree, cls(module, z)))
    return out


def h1(module: GammaModule) -> list[CohClass]:
    cx = _complex(module)
    return _classes(cx.z1(), cx.b1(), module, Cocycle1, 1)


def h2(module: GammaModule) -> list[CohClass]:
    cx = _complex(module)
    return _classes(cx.z2(), cx.b2(), module, Cocycle2, 2)


def period(x: CohClass) -> int:
    rep = x.representative
    exp = x.module.module.exponent
    for k in range(1, exp + 1):
        if exp % k == 0 and is_coboundary(rep.scale(k)):
            return k
    raise AssertionError("class order must divide the module exponent")


def restrict(x: CohClass, subgroup: Iterable[int]) -> CohClass:
    """Restriction to a subgroup H, as a class over the restricted module."""
    sub_module, emb = x.module.restrict(subgroup)
    rep = x.representative
    if x.degree == 1:
        return cohomology_class(Cocycle1(sub_module, tuple(rep.values[g] for g in emb)))
    return cohomology_class(
        Cocycle2(sub_module, tuple(rep.value(a, b) for a in emb for b in emb))
    )


def splits_on(xi: Cocycle1, subgroup: Iterable[int]) -> bool:
    """Is the restriction of a 1-cocycle to H a coboundary? (scan over M)"""
    M = xi.module
    H = sorted(set(subgroup))
    add, neg, act = M.module.add_table, M.module.neg_table, M.act_table
    for m in range(M.module.order):
        if all(xi.values[h] == add[act[h, m], neg[m]] for h in H):
            return True
    return False


# ---------------------------------------------------------------------------
# period / index invariants


@dataclass
class PeriodIndexReport:
    period: int
    index: int
    mindex: int
    galois_index: int
    witnesses: dict[str, tuple[int, ...] | None]
    index_attained: bool = True

    def as_dict(self) -> dict:
        return {
            "period": self.period,
            "index": self.index,
            "mindex": self.mindex,
            "galois_index": self.galois_index,
            "index_attained": self.index_attained,
            "witnesses": {k: list(v) if v is not None else None for k, v in self.witnesses.items()},
        }


def splitting_subgroups(x: CohClass) -> list[frozenset[int]]:
    if x.degree != 1:
        raise ValueError("splitting subgroups are only computed for degree-1 classes")
    G = x.module.group
    return [H for H in G.subgroups if splits_on(x.representative, H)]


def index(x: CohClass) -> PeriodIndexReport:
    if x.degree != 1:
        raise ValueError("the index of degree-2 classes is not modelled")
    G = x.module.group
    splitting = splitting_subgroups(x)
    degrees = [G.order // len(H) for H in splitting]
    idx = math.gcd(*degrees)
    best = min(splitting, key=lambda H: (G.order // len(H), sorted(H)))
    normal = [H for H in splitting if G.is_normal(H)]
    gal_best = min(normal, key=lambda H: (G.order // len(H), sorted(H)))
    attained = [H for H in splitting if G.order // len(H) == idx]
    return PeriodIndexReport(
        period=period(x),
        index=idx,
        mindex=G.order // len(best),
        galois_index=math.gcd(*(G.order // len(H) for H in normal)),
        witnesses={
            "index": tuple(sorted(attained[0])) if attained else None,
            "mindex": tuple(sorted(best)),
            "galois_index": tuple(sorted(gal_best)),
        },
        index_attained=bool(attained),
    )


@dataclass
class Prop9Verdict:
    period: int
    index: int
    components: list[tuple[int, CohClass, int]]  # (prime, component, its index)
    period_divides_index: bool
    same_prime_support: bool
    product_formula: bool
    components_sum_to_class: bool

    @property
    def holds(self) -> bool:
        return (
            self.period_divides_index
            and self.same_prime_support
            and self.product_formula
            and self.components_sum_to_class
        )


def primary_components(x: CohClass) -> list[tuple[int, CohClass]]:
    """x = sum of its p-primary parts, via CRT idempotents of Z/period."""
    n = period(x)
    out = []
    for p, a in sorted(sympy.factorint(n).items()):
        q = p**a
        rest = n // q
        # u = 1 mod q, u = 0 mod rest
        u = rest * pow(rest, -1, q) % n
        out.append((p, x.scale(u)))
    return out


def check_prop9(x: CohClass) -> Prop9Verdict:
    rep = index(x)
    comps = [(p, c, index(c).index) for p, c in primary_components(x)]
    total = None
    for _, c, _ in comps:
        total = c if total is None else total + c
    sums_ok = (total == x) if comps else x.is_trivial()
    return Prop9Verdict(
        period=rep.period,
        index=rep.index,
        components=comps,
        period_divides_index=rep.index % rep.period == 0,
        same_prime_support=set(sympy.primefactors(rep.period)) == set(sympy.primefactors(rep.index)),
        product_formula=math.prod(i for _, _, i in comps) == rep.index,
        components_sum_to_class=sums_ok,
    )


@dataclass
class LenstraResult:
    subgroup: frozenset[int]
    is_subgroup: bool
    coset_values: dict[tuple[int, ...], tuple[int, ...]]  # coset sH -> xi(s) as a vector
    injective: bool
    splits: bool

    @property
    def degree(self) -> int:
        return len(self.coset_values)


def lenstra_subgroup(xi: Cocycle1) -> LenstraResult:
    """H = {s : xi(s) = 0}; xi is constant on cosets sH and injective on them."""
    xi.check()
    G = xi.module.group
    H = frozenset(s for s in G.elements if xi.values[s] == 0)
    is_sub = G.is_subgroup(H)
    cosets: dict[tuple[int, ...], tuple[int, ...]] = {}
    constant = True
    for s in G.elements:
        coset = tuple(sorted(G.table[s][h] for h in H))
        vals = {xi.values[g] for g in coset}
        constant &= len(vals) == 1
        cosets[coset] = xi.vector(s)
    injective = constant and len(set(cosets.values())) == len(cosets)
    return LenstraResult(H, is_sub, cosets, injective, is_sub and splits_on(xi, H))


# ---------------------------------------------------------------------------
# cup products and connecting maps


def cup(a: Cocycle1, b: Cocycle1, pairing: Callable[[tuple, tuple], Sequence[int]], target: GammaModule) -> Cocycle2:
    """c(s, t) = pairing(a(s), s.b(t))."""
    A, B, C = a.module.module, b.module.module, target.module
    for x in A.elements:
        for y in B.elements:
            for x2 in A.elements:
                lhs = C.normalize(pairing(A.add(x, x2), y))
                rhs = C.add(pairing(x, y), pairing(x2, y))
                if lhs != rhs:
                    raise ValueError("pairing is not bilinear")
            for y2 in B.elements:
                if C.normalize(pairing(x, B.add(y, y2))) != C.add(pairing(x, y), pairing(x, y2)):
                    raise ValueError("pairing is not bilinear")
    return Cocycle2.from_function(
        target, lambda s, t: pairing(a.vector(s), b.module.apply_vector(s, b.vector(t)))
    )


@dataclass(frozen=True, eq=False)
class ShortExactSequence:
    """0 -> A -i-> B -p-> C -> 0, maps given on basis vectors (columns)."""

    A: GammaModule
    B: GammaModule
    C: GammaModule
    inclusion: tuple[tuple[int, ...], ...]
    projection: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        A, B, C = self.A, self.B, self.C
        if not (A.group is B.group is C.group):
            raise ValueError("all three modules must share the acting group")
        inc = [self.include(a) for a in A.module.elements]
        if len(set(inc)) != A.module.order:
            raise ValueError("inclusion is not injective")
        proj = {b: self.project(b) for b in B.module.elements}
        if set(proj.values()) != set(C.module.elements):
            raise ValueError("projection is not surjective")
        kernel = {b for b, c in proj.items() if c == C.module.zero}
        if kernel != set(inc):
            raise ValueError("image of inclusion differs from kernel of projection")
        for s in A.group.elements:
            for a in A.module.elements:
                if self.include(A.apply_vector(s, a)) != B.apply_vector(s, self.include(a)):
                    raise ValueError("inclusion is not Gamma-equivariant")
            for b in B.module.elements:
                if self.project(B.apply_vector(s, b)) != C.apply_vector(s, proj[b]):
                    raise ValueError("projection is not Gamma-equivariant")

    @staticmethod
    def _apply(images, target: FiniteAbelianGroup, x):
        out = target.zero
        for coeff, img in zip(x, images):
            out = target.add(out, target.scale(coeff, img))
        return out

    def include(self, a):
        return self._apply(self.inclusion, self.B.module, a)

    def project(self, b):
        return self._apply(self.projection, self.C.module, b)

    def section(self, which: str = "least") -> dict[tuple[int, ...], tuple[int, ...]]:
        pre: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
        for b in self.B.module.elements:  # lexicographic order
            pre.setdefault(self.project(b), []).append(b)
        pick = (lambda bs: bs[0]) if which == "least" else (lambda bs: bs[-1])
        return {c: pick(bs) for c, bs in pre.items()}

    @property
    def pullback(self) -> dict[tuple[int, ...], tuple[int, ...]]:
        return {self.include(a): a for a in self.A.module.elements}


def connecting2(ses: ShortExactSequence, x: CohClass | Cocycle1, section: str = "least") -> CohClass:
    """delta: H^1(C) -> H^2(A) through a set-theoretic section C -> B."""
    xi = x.representative if isinstance(x, CohClass) else x
    xi.check()
    if xi.module is not ses.C:
        raise ValueError("class must live on the quotient module of the sequence")
    lift = ses.section(section)
    Bm = ses.B.module
    pull = ses.pullback
    b = [lift[xi.vector(s)] for s in ses.B.group.elements]
    G = ses.B.group

    def value(s, t):
        v = Bm.add(Bm.add(b[s], ses.B.apply_vector(s, b[t])), Bm.neg(b[G.table[s][t]]))
        if v not in pull:
            raise CocycleError("lifted coboundary does not land in A; sequence is not exact")
        return pull[v]

    return cohomology_class(Cocycle2.from_function(ses.A, value))


def pushforward2(c: Cocycle2, images: Sequence[Sequence[int]], target: GammaModule) -> Cocycle2:
    """Apply the module map given by basis images to a 2-cochain."""
    T = target.module

    def f(x):
        out = T.zero
        for coeff, img in zip(x, images):
            out = T.add(out, T.scale(coeff, img))
        return out

    return Cocycle2.from_function(target, lambda s, t: f(c.vector(s, t)))
