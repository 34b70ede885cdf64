"""Finite abelian groups, finite (Galois-stand-in) groups and modules over them.

Everything here is table driven: groups are small enough (|Gamma| <= 24,
|M| <= 256) that every structural claim is checked by exhaustion when an
object is built.  Elements of a :class:`FiniteAbelianGroup` are residue
vectors; internally they are addressed by their position in lexicographic
order, so comparing indices is the same as comparing residue vectors.
"""

from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass
from functools import cached_property, reduce
from typing import Callable, Iterable, Sequence

import numpy as np

DEFAULT_GUARD = 10**7
GUARD_ENV = "THETAKIT_GUARD_OVERRIDE"

Vector = tuple[int, ...]


class GuardExceeded(RuntimeError):
    """An enumeration would exceed its size guard."""

    def __init__(self, guard: str, requested: int, limit: int):
        self.guard = guard
        self.requested = requested
        self.limit = limit
        super().__init__(
            f"size guard '{guard}' exceeded: {requested} candidates > limit {limit} "
            f"(set {GUARD_ENV} to raise it)"
        )


def guard_limit(default: int = DEFAULT_GUARD) -> int:
    raw = os.environ.get(GUARD_ENV)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"{GUARD_ENV} must be an integer, got {raw!r}") from None
    return max(value, default)


def check_guard(guard: str, requested: int, default: int = DEFAULT_GUARD) -> None:
    limit = guard_limit(default)
    if requested > limit:
        raise GuardExceeded(guard, requested, limit)


def lcm(*values: int) -> int:
    return reduce(lambda a, b: a * b // math.gcd(a, b), values, 1)


# ---------------------------------------------------------------------------
# finite abelian groups of elementary-divisor type


@dataclass(frozen=True)
class FiniteAbelianGroup:
    """Z/d1 x ... x Z/dr.

    ``make_group`` insists on an elementary-divisor chain d1 | ... | dr;
    direct sums such as H + H^* for H of mixed type keep their summands'
    order and need not be chained.
    """

    divisors: tuple[int, ...]

    def __post_init__(self):
        divisors = tuple(int(d) for d in self.divisors)
        object.__setattr__(self, "divisors", divisors)
        if not divisors:
            raise ValueError("divisor list must be non-empty")
        if any(d < 2 for d in divisors):
            raise ValueError(f"every elementary divisor must be >= 2, got {divisors}")

    @property
    def rank(self) -> int:
        return len(self.divisors)

    @property
    def order(self) -> int:
        return math.prod(self.divisors)

    @property
    def exponent(self) -> int:
        return math.lcm(*self.divisors)

    @cached_property
    def elements(self) -> tuple[Vector, ...]:
        return tuple(itertools.product(*(range(d) for d in self.divisors)))

    @cached_property
    def _index(self) -> dict[Vector, int]:
        return {x: i for i, x in enumerate(self.elements)}

    def index(self, x: Sequence[int]) -> int:
        return self._index[self.normalize(x)]

    def element(self, i: int) -> Vector:
        return self.elements[i]

    def normalize(self, x: Sequence[int]) -> Vector:
        if len(x) != self.rank:
            raise ValueError(f"expected a vector of length {self.rank}, got {tuple(x)}")
        return tuple(int(a) % d for a, d in zip(x, self.divisors))

    @property
    def zero(self) -> Vector:
        return (0,) * self.rank

    def add(self, x: Sequence[int], y: Sequence[int]) -> Vector:
        return tuple((a + b) % d for a, b, d in zip(x, y, self.divisors))

    def neg(self, x: Sequence[int]) -> Vector:
        return tuple(-a % d for a, d in zip(x, self.divisors))

    def scale(self, k: int, x: Sequence[int]) -> Vector:
        return tuple(k * a % d for a, d in zip(x, self.divisors))

    def element_order(self, x: Sequence[int]) -> int:
        return lcm(*(d // math.gcd(a, d) for a, d in zip(x, self.divisors)))

    def basis(self) -> list[Vector]:
        return [tuple(int(i == j) for j in range(self.rank)) for i in range(self.rank)]

    # index-level tables used by the enumerators
    @cached_property
    def add_table(self) -> np.ndarray:
        els = np.array(self.elements, dtype=np.int64).reshape(self.order, self.rank)
        div = np.array(self.divisors, dtype=np.int64)
        weights = np.array(
            [math.prod(self.divisors[i + 1:]) for i in range(self.rank)], dtype=np.int64
        )
        sums = (els[:, None, :] + els[None, :, :]) % div
        return (sums * weights).sum(axis=-1)

    @cached_property
    def neg_table(self) -> np.ndarray:
        return np.array([self.index(self.neg(x)) for x in self.elements], dtype=np.int64)

    def scale_index(self, k: int, i: int) -> int:
        return self.index(self.scale(k, self.elements[i]))

    def __str__(self):
        return " x ".join(f"Z/{d}" for d in self.divisors)


def make_group(divisors: Iterable[int]) -> FiniteAbelianGroup:
    divisors = tuple(int(d) for d in divisors)
    for a, b in zip(divisors, divisors[1:]):
        if a < 1 or b % a:
            raise ValueError(f"divisors must form a chain d_i | d_(i+1), got {divisors}")
    return FiniteAbelianGroup(divisors)


def direct_sum(*groups: FiniteAbelianGroup) -> FiniteAbelianGroup:
    """Concatenated summands, in order."""
    return FiniteAbelianGroup(tuple(d for G in groups for d in G.divisors))


# ---------------------------------------------------------------------------
# finite groups given by multiplication tables


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """A finite group on {0, ..., N-1}; element 0 is the identity."""

    name: str
    table: tuple[tuple[int, ...], ...]
    labels: tuple[str, ...] = ()
    verify: bool = True

    def __post_init__(self):
        n = len(self.table)
        if not self.labels:
            object.__setattr__(self, "labels", tuple(str(i) for i in range(n)))
        if not self.verify:
            return
        mt = self.mul_table
        if mt.shape != (n, n) or mt.min() < 0 or mt.max() >= n:
            raise ValueError("multiplication table must be a total map on the element set")
        if not (np.array_equal(mt[0], np.arange(n)) and np.array_equal(mt[:, 0], np.arange(n))):
            raise ValueError("element 0 must be a two-sided identity")
        for row in mt:
            if len(set(row.tolist())) != n:
                raise ValueError("multiplication table is not a Latin square")
        left = mt[mt, :]  # left[a, b, c] = (ab)c
        right = mt[np.arange(n)[:, None, None], mt[None, :, :]]  # a(bc)
        if not np.array_equal(left, right):
            raise ValueError("multiplication table is not associative")

    @cached_property
    def mul_table(self) -> np.ndarray:
        return np.array(self.table, dtype=np.int64)

    @property
    def order(self) -> int:
        return len(self.table)

    @property
    def identity(self) -> int:
        return 0

    @property
    def elements(self) -> range:
        return range(self.order)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @cached_property
    def inverses(self) -> tuple[int, ...]:
        return tuple(row.index(0) for row in self.table)

    def inv(self, a: int) -> int:
        return self.inverses[a]

    def power(self, a: int, k: int) -> int:
        k %= self.element_order(a)
        out = 0
        for _ in range(k):
            out = self.table[out][a]
        return out

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    @cached_property
    def is_abelian(self) -> bool:
        mt = self.mul_table
        return bool(np.array_equal(mt, mt.T))

    def closure(self, gens: Iterable[int]) -> frozenset[int]:
        current = np.array(sorted({0, *gens}), dtype=np.int64)
        mt = self.mul_table
        while True:
            nxt = np.union1d(current, mt[np.ix_(current, current)].ravel())
            if len(nxt) == len(current):
                return frozenset(nxt.tolist())
            current = nxt

    @cached_property
    def generators(self) -> tuple[int, ...]:
        """A small generating set, chosen greedily in element order."""
        gens: list[int] = []
        span = frozenset({0})
        while len(span) < self.order:
            best = max(
                (g for g in self.elements if g not in span),
                key=lambda g: (len(self.closure([*gens, g])), -g),
            )
            gens.append(best)
            span = self.closure(gens)
        return tuple(gens)

    def is_subgroup(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        if 0 not in s:
            return False
        return all(self.table[a][self.inverses[b]] in s for a in s for b in s)

    def is_normal(self, subset: Iterable[int]) -> bool:
        s = set(subset)
        return all(
            self.table[self.table[g][h]][self.inverses[g]] in s for g in self.elements for h in s
        )

    @cached_property
    def subgroups(self) -> tuple[frozenset[int], ...]:
        """All subgroups, sorted by (order, sorted elements)."""
        cyclic = {self.closure([g]) for g in self.elements}
        found = set(cyclic)
        frontier = list(cyclic)
        while frontier:
            new = []
            for S in frontier:
                for C in cyclic:
                    if C <= S:
                        continue
                    T = self.closure(S | C)
                    if T not in found:
                        found.add(T)
                        new.append(T)
            frontier = new
        return tuple(sorted(found, key=lambda s: (len(s), sorted(s))))

    def subgroup(self, subset: Iterable[int], name: str | None = None) -> tuple["FiniteGroup", tuple[int, ...]]:
        """Return the subgroup as a group in its own right plus its embedding."""
        elems = tuple(sorted(set(subset)))
        if not self.is_subgroup(elems):
            raise ValueError(f"{sorted(elems)} is not a subgroup of {self.name}")
        pos = {g: i for i, g in enumerate(elems)}
        table = tuple(tuple(pos[self.table[a][b]] for b in elems) for a in elems)
        sub = FiniteGroup(
            name or f"{self.name}|{list(elems)}",
            table,
            tuple(self.labels[g] for g in elems),
            verify=False,
        )
        return sub, elems

    def coset_index(self, subset: Iterable[int]) -> int:
        return self.order // len(set(subset))

    def __repr__(self):
        return f"FiniteGroup({self.name!r}, order={self.order})"


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise ValueError("cyclic group order must be positive")
    table = tuple(tuple((a + b) % n for b in range(n)) for a in range(n))
    return FiniteGroup(f"C{n}", table, tuple(str(a) for a in range(n)))


def direct_product(G: FiniteGroup, H: FiniteGroup, name: str | None = None) -> FiniteGroup:
    m = H.order
    table = tuple(
        tuple(G.table[a // m][b // m] * m + H.table[a % m][b % m] for b in range(G.order * m))
        for a in range(G.order * m)
    )
    labels = tuple(f"({g},{h})" for g in G.labels for h in H.labels)
    return FiniteGroup(name or f"{G.name}x{H.name}", table, labels)


def klein_four() -> FiniteGroup:
    return direct_product(cyclic_group(2), cyclic_group(2), "V4")


def permutation_group(perms: Sequence[Sequence[int]], name: str) -> FiniteGroup:
    """Group on an explicit list of permutations closed under composition.

    Composition is (p*q)(i) = p(q(i)); the identity must be listed first.
    """
    perms = [tuple(p) for p in perms]
    pos = {p: i for i, p in enumerate(perms)}
    if perms[0] != tuple(range(len(perms[0]))):
        raise ValueError("identity permutation must come first")
    table = tuple(tuple(pos[tuple(p[q[i]] for i in range(len(p)))] for q in perms) for p in perms)
    return FiniteGroup(name, table, tuple("".join(map(str, p)) for p in perms))


def symmetric_group(k: int) -> FiniteGroup:
    return permutation_group(list(itertools.permutations(range(k))), f"S{k}")


def abelian_as_group(A: FiniteAbelianGroup, name: str | None = None) -> FiniteGroup:
    table = tuple(tuple(int(v) for v in row) for row in A.add_table)
    labels = tuple("".join(map(str, x)) for x in A.elements)
    return FiniteGroup(name or str(A), table, labels, verify=A.order <= 64)


def homomorphisms_to_cyclic(G: FiniteGroup, n: int) -> list[tuple[int, ...]]:
    """All homomorphisms G -> Z/n as value tuples, in lexicographic order."""
    gens = G.generators
    out = []
    for images in itertools.product(range(n), repeat=len(gens)):
        values = _extend_hom(G, gens, images, n)
        if values is not None:
            out.append(values)
    return sorted(out)


def _extend_hom(G: FiniteGroup, gens, images, n) -> tuple[int, ...] | None:
    values: dict[int, int] = {0: 0}
    queue = [0]
    while queue:
        g = queue.pop()
        for s, v in zip(gens, images):
            h = G.table[g][s]
            val = (values[g] + v) % n
            if h in values:
                if values[h] != val:
                    return None
            else:
                values[h] = val
                queue.append(h)
    for a in G.elements:
        for b in G.elements:
            if values[G.table[a][b]] != (values[a] + values[b]) % n:
                return None
    return tuple(values[g] for g in G.elements)


# ---------------------------------------------------------------------------
# modules


@dataclass(frozen=True, eq=False)
class GammaModule:
    """A finite abelian group M with an action of a finite group Gamma.

    ``action[s]`` lists the images of the standard basis vectors of M under the
    element with index s; the automorphism is extended additively.
    """

    group: FiniteGroup
    module: FiniteAbelianGroup
    action: tuple[tuple[Vector, ...], ...]
    name: str = ""

    def __post_init__(self):
        G, M = self.group, self.module
        action = tuple(tuple(M.normalize(v) for v in imgs) for imgs in self.action)
        object.__setattr__(self, "action", action)
        if len(action) != G.order or any(len(imgs) != M.rank for imgs in action):
            raise ValueError("action must give one basis image per generator per group element")
        for imgs in action:
            for img, d in zip(imgs, M.divisors):
                if M.scale(d, img) != M.zero:
                    raise ValueError(f"basis image {img} has order not dividing {d}")
        table = self.act_table
        for s in G.elements:
            if len(set(table[s].tolist())) != M.order:
                raise ValueError(f"action of element {G.labels[s]} is not bijective")
        if not np.array_equal(table[0], np.arange(M.order)):
            raise ValueError("identity must act trivially")
        for s in G.elements:
            for t in G.elements:
                if not np.array_equal(table[G.table[s][t]], table[s][table[t]]):
                    raise ValueError("action is not compatible with the group law")

    def apply_vector(self, s: int, x: Sequence[int]) -> Vector:
        M = self.module
        out = M.zero
        for coeff, img in zip(x, self.action[s]):
            out = M.add(out, M.scale(coeff, img))
        return out

    @cached_property
    def act_table(self) -> np.ndarray:
        M = self.module
        return np.array(
            [[M.index(self.apply_vector(s, x)) for x in M.elements] for s in self.group.elements],
            dtype=np.int64,
        ).reshape(self.group.order, M.order)

    def act(self, s: int, i: int) -> int:
        """Action on element indices."""
        return int(self.act_table[s, i])

    @cached_property
    def is_trivial(self) -> bool:
        return bool((self.act_table == np.arange(self.module.order)).all())

    def restrict(self, subset: Iterable[int]) -> tuple["GammaModule", tuple[int, ...]]:
        sub, emb = self.group.subgroup(subset)
        return GammaModule(sub, self.module, tuple(self.action[g] for g in emb), self.name), emb

    def __repr__(self):
        return f"GammaModule({self.name or self.module}, Gamma={self.group.name})"


def trivial_module(G: FiniteGroup, M: FiniteAbelianGroup, name: str = "") -> GammaModule:
    basis = tuple(M.basis())
    return GammaModule(G, M, tuple(basis for _ in G.elements), name or f"{M} trivial")


def scalar_module(G: FiniteGroup, M: FiniteAbelianGroup, units: Sequence[int], name: str = "") -> GammaModule:
    """Gamma acting on M through multiplication by ``units[s]``."""
    return GammaModule(
        G, M, tuple(tuple(M.scale(u, b) for b in M.basis()) for u in units), name
    )


def matrix_module(G: FiniteGroup, M: FiniteAbelianGroup, matrices: Sequence[Sequence[Sequence[int]]], name: str = "") -> GammaModule:
    """Gamma acting by matrices; column j is the image of basis vector j."""
    action = tuple(tuple(tuple(row[j] for row in mat) for j in range(M.rank)) for mat in matrices)
    return GammaModule(G, M, action, name)


def module_direct_sum(A: GammaModule, B: GammaModule, name: str = "") -> GammaModule:
    if A.group is not B.group:
        raise ValueError("summands must share the acting group")
    M = direct_sum(A.module, B.module)
    za, zb = A.module.zero, B.module.zero
    action = tuple(
        tuple(img + zb for img in A.action[s]) + tuple(za + img for img in B.action[s])
        for s in A.group.elements
    )
    return GammaModule(A.group, M, action, name or f"{A.name} + {B.name}")


# ---------------------------------------------------------------------------
# roots of unity in dlog coordinates


@dataclass(frozen=True, eq=False)
class MuN:
    """mu_n written additively as Z/n relative to a fixed generator zeta_n."""

    n: int
    group: FiniteGroup | None = None
    units: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 2:
            raise ValueError("mu_n needs n >= 2")
        if self.units is None:
            return
        if self.group is None:
            raise ValueError("a Gamma-action on mu_n needs the acting group")
        units = tuple(u % self.n for u in self.units)
        object.__setattr__(self, "units", units)
        if len(units) != self.group.order:
            raise ValueError("one unit per group element required")
        if any(math.gcd(u, self.n) != 1 for u in units):
            raise ValueError("mu_n action must be by units mod n")
        G = self.group
        for s in G.elements:
            for t in G.elements:
                if units[G.table[s][t]] != units[s] * units[t] % self.n:
                    raise ValueError("mu_n action is not a homomorphism into (Z/n)^x")

    def unit(self, s: int) -> int:
        return 1 if self.units is None else self.units[s]

    def act(self, s: int, a: int) -> int:
        return self.unit(s) * a % self.n

    @property
    def is_trivial(self) -> bool:
        return self.units is None or all(u == 1 for u in self.units)

    def as_module(self, G: FiniteGroup | None = None) -> GammaModule:
        G = G or self.group
        if G is None:
            raise ValueError("need an acting group")
        units = [self.unit(s) for s in G.elements] if self.units is not None else [1] * G.order
        return scalar_module(G, FiniteAbelianGroup((self.n,)), units, f"mu_{self.n}")


def evaluate_character(M: FiniteAbelianGroup, n: int, coeffs: Sequence[int], x: Sequence[int]) -> int:
    """Value in Z/n (dlog) of the character with coefficient vector ``coeffs`` at x.

    The i-th generator of Z/d_i is sent to coeffs[i] * (n / d_i).
    """
    return sum(c * a * (n // d) for c, a, d in zip(coeffs, x, M.divisors)) % n


def dual_module(M: GammaModule, mu: MuN) -> GammaModule:
    """Hom(M, mu_n) with (s.l)(m) = s(l(s^-1 m))."""
    A = M.module
    n = mu.n
    if n % A.exponent:
        raise ValueError(f"exponent {A.exponent} of M does not divide n = {n}")
    G = M.group
    action = []
    for s in G.elements:
        s_inv = G.inv(s)
        imgs = []
        for c in A.basis():
            vals = [mu.act(s, evaluate_character(A, n, c, M.apply_vector(s_inv, b))) for b in A.basis()]
            imgs.append(tuple(v // (n // d) for v, d in zip(vals, A.divisors)))
        action.append(tuple(imgs))
    return GammaModule(G, A, tuple(action), f"dual({M.name or A})")


def evaluation_map(M: GammaModule, mu: MuN) -> dict[Vector, Vector]:
    """m -> (l -> l(m)) as a map M -> M** in coefficient coordinates."""
    A = M.module
    n = mu.n
    return {
        x: tuple(evaluate_character(A, n, c, x) // (n // d) for c, d in zip(A.basis(), A.divisors))
        for x in A.elements
    }


# ---------------------------------------------------------------------------
# bilinear pairings into mu_n


@dataclass(frozen=True, eq=False)
class SymplecticPairing:
    """Bilinear pairing K x K -> Z/n given by a dlog Gram matrix."""

    space: FiniteAbelianGroup
    n: int
    matrix: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        mat = tuple(tuple(int(v) % self.n for v in row) for row in self.matrix)
        object.__setattr__(self, "matrix", mat)
        r = self.space.rank
        if len(mat) != r or any(len(row) != r for row in mat):
            raise ValueError("Gram matrix shape does not match the space")
        for i, di in enumerate(self.space.divisors):
            for j, dj in enumerate(self.space.divisors):
                if (di * mat[i][j]) % self.n or (dj * mat[i][j]) % self.n:
                    raise ValueError("Gram matrix does not define a well-defined pairing")

    def __call__(self, P: Sequence[int], Q: Sequence[int]) -> int:
        return sum(
            P[i] * self.matrix[i][j] * Q[j] for i in range(len(P)) for j in range(len(Q))
        ) % self.n

    @cached_property
    def table(self) -> np.ndarray:
        els = np.array(self.space.elements, dtype=np.int64)
        mat = np.array(self.matrix, dtype=np.int64)
        return (els @ mat @ els.T) % self.n

    def is_alternating(self) -> bool:
        return bool((np.diag(self.table) == 0).all())

    def is_bilinear(self) -> bool:
        add = self.space.add_table
        t = self.table
        left = t[add, :]  # e(P+Q, R)
        if not np.array_equal(left, (t[:, None, :] + t[None, :, :]) % self.n):
            return False
        right = t[:, add]  # e(P, Q+R)
        return bool(np.array_equal(right, (t[:, :, None] + t[:, None, :]) % self.n))

    def is_nondegenerate(self) -> bool:
        t = self.table
        return bool((t[1:] != 0).any(axis=1).all())

    def is_symplectic(self) -> bool:
        return self.is_bilinear() and self.is_alternating() and self.is_nondegenerate()

    def induced_dual_map_is_bijective(self) -> bool:
        """P -> e(P, .) is injective on K and |K*| = |K|."""
        rows = {tuple(row.tolist()) for row in self.table}
        return len(rows) == self.space.order

    def preserved_by(self, matrix: Sequence[Sequence[int]]) -> bool:
        """Does the (column) matrix g satisfy e(gP, gQ) = e(P, Q)?"""
        g = np.array(matrix, dtype=np.int64)
        J = np.array(self.matrix, dtype=np.int64)
        return bool(np.array_equal((g.T @ J @ g) % self.n, J % self.n))


def standard_symplectic(g: int, n: int) -> SymplecticPairing:
    """dlog Gram matrix [[0, I], [-I, 0]] on (Z/n)^(2g), basis x_1..x_g, y_1..y_g."""
    if g < 1 or n < 2:
        raise ValueError("need g >= 1 and n >= 2")
    mat = [[0] * (2 * g) for _ in range(2 * g)]
    for i in range(g):
        mat[i][g + i] = 1
        mat[g + i][i] = n - 1
    return SymplecticPairing(FiniteAbelianGroup((n,) * (2 * g)), n, tuple(map(tuple, mat)))


# ---------------------------------------------------------------------------
# catalog of standard test instances


def catalog_groups() -> dict[str, FiniteGroup]:
    groups = {f"C{k}": cyclic_group(k) for k in range(1, 9)}
    groups["V4"] = klein_four()
    groups["S3"] = symmetric_group(3)
    return groups


def sign_character(G: FiniteGroup) -> tuple[int, ...] | None:
    """Least nontrivial homomorphism G -> Z/2, if any."""
    homs = [h for h in homomorphisms_to_cyclic(G, 2) if any(h)]
    return homs[0] if homs else None


CATALOG_MODULES = ("Z2", "Z3", "Z4", "Z6", "Z2^2", "Z3-neg", "Z4-neg", "Z2^2-swap")


def catalog_module(G: FiniteGroup, key: str) -> GammaModule | None:
    """Build a named catalog module over G; None if G lacks the needed sign."""
    trivial = {"Z2": (2,), "Z3": (3,), "Z4": (4,), "Z6": (6,), "Z2^2": (2, 2)}
    if key in trivial:
        return trivial_module(G, FiniteAbelianGroup(trivial[key]), key)
    sign = sign_character(G)
    if sign is None:
        return None
    if key == "Z3-neg":
        return scalar_module(G, FiniteAbelianGroup((3,)), [(-1) ** e for e in sign], key)
    if key == "Z4-neg":
        return scalar_module(G, FiniteAbelianGroup((4,)), [(-1) ** e for e in sign], key)
    if key == "Z2^2-swap":
        swap = ((0, 1), (1, 0))
        ident = ((1, 0), (0, 1))
        return matrix_module(
            G, FiniteAbelianGroup((2, 2)), [swap if e else ident for e in sign], key
        )
    raise KeyError(f"unknown catalog module {key!r}")


def catalog_pairs(
    max_group: int = 12, max_module: int = 16, group_filter: Callable[[str], bool] | None = None
) -> list[tuple[str, str, GammaModule]]:
    out = []
    for gname, G in catalog_groups().items():
        if G.order > max_group or (group_filter and not group_filter(gname)):
            continue
        for key in CATALOG_MODULES:
            M = catalog_module(G, key)
            if M is not None and M.module.order <= max_module:
                out.append((gname, key, M))
    return out
