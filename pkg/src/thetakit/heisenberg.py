"""Finite Heisenberg groups and their centrally-trivial automorphisms.

All groups here are central extensions of a finite abelian K by Z/d (mu_d in
dlog coordinates) with law

    (a, P) * (a', P') = (a + a' + F(P, P'), P + P')

for a bilinear F.  The Heisenberg group H(delta) uses F((x,l),(x',l')) = l'(x);
the variant group uses F = e/2.  Elements are flat tuples (a, P_1, ..., P_r).

Commutators are taken as [A, B] = A B A^-1 B^-1, and the commutator pairing is
e(P, Q) = F(P, Q) - F(Q, P).  For the Heisenberg group that is l'(x) - l(x'),
so e(x_i, y_i) = +1: the standard basis is zeta_n-symplectic.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

import numpy as np

from .finmod import (
    FiniteAbelianGroup,
    GammaModule,
    GuardExceeded,
    MuN,
    SymplecticPairing,
    check_guard,
    direct_sum,
    guard_limit,
    make_group,
    standard_symplectic,
)

Element = tuple[int, ...]
Matrix = tuple[tuple[int, ...], ...]


class CentralExtension:
    """Z/d x K with the cocycle F (a dlog Gram matrix over Z/d)."""

    def __init__(self, K: FiniteAbelianGroup, d: int, form: Sequence[Sequence[int]], name: str = ""):
        self.K = K
        self.d = d
        self.form = np.array(form, dtype=np.int64) % d
        self.name = name or f"Ext({K}, Z/{d})"
        r = K.rank
        if self.form.shape != (r, r):
            raise ValueError("form must be an r x r matrix")
        for i, di in enumerate(K.divisors):
            for j, dj in enumerate(K.divisors):
                if (di * self.form[i, j]) % d or (dj * self.form[i, j]) % d:
                    raise ValueError("form is not well defined on K")
        self._div = np.array((d,) + K.divisors, dtype=np.int64)

    @property
    def order(self) -> int:
        return self.d * self.K.order

    @property
    def rank(self) -> int:
        return self.K.rank

    @property
    def identity(self) -> Element:
        return (0,) * (1 + self.rank)

    @cached_property
    def elements(self) -> tuple[Element, ...]:
        return tuple((a,) + P for a in range(self.d) for P in self.K.elements)

    @cached_property
    def _index(self) -> dict[Element, int]:
        return {e: i for i, e in enumerate(self.elements)}

    def index(self, a: Sequence[int]) -> int:
        return self._index[self.normalize(a)]

    def normalize(self, a: Sequence[int]) -> Element:
        return tuple(int(v) % m for v, m in zip(a, self._div))

    @cached_property
    def element_array(self) -> np.ndarray:
        return np.array(self.elements, dtype=np.int64)

    def F(self, P: Sequence[int], Q: Sequence[int]) -> int:
        return int(np.asarray(P) @ self.form @ np.asarray(Q)) % self.d

    def mul(self, a: Sequence[int], b: Sequence[int]) -> Element:
        P, Q = a[1:], b[1:]
        alpha = (a[0] + b[0] + self.F(P, Q)) % self.d
        return (alpha,) + self.K.add(P, Q)

    def inv(self, a: Sequence[int]) -> Element:
        P = a[1:]
        return ((-a[0] + self.F(P, P)) % self.d,) + self.K.neg(P)

    def power(self, a: Sequence[int], k: int) -> Element:
        out = self.identity
        for _ in range(k):
            out = self.mul(out, a)
        return out

    def commutator(self, a, b) -> Element:
        return self.mul(self.mul(a, b), self.mul(self.inv(a), self.inv(b)))

    def mul_arrays(self, A: np.ndarray, B: np.ndarray) -> np.ndarray:
        """Vectorised law on broadcastable (..., 1 + r) arrays."""
        P, Q = A[..., 1:], B[..., 1:]
        f = ((P @ self.form) * Q).sum(axis=-1)
        out = np.concatenate([(A[..., :1] + B[..., :1] + f[..., None]), P + Q], axis=-1)
        return out % self._div

    @cached_property
    def form_table(self) -> np.ndarray:
        """F(P, Q) for all pairs of K-element indices (exact float matmul)."""
        Ek = np.array(self.K.elements, dtype=np.float64).reshape(self.K.order, self.rank)
        table = (Ek @ self.form.astype(np.float64)) @ Ek.T
        return np.rint(table).astype(np.int64) % self.d

    def pairing_value(self, P: Sequence[int], Q: Sequence[int]) -> int:
        """Commutator pairing e(P, Q) = F(P, Q) - F(Q, P) in Z/d."""
        return (self.F(P, Q) - self.F(Q, P)) % self.d

    @cached_property
    def pairing(self) -> SymplecticPairing:
        return SymplecticPairing(self.K, self.d, tuple(map(tuple, (self.form - self.form.T) % self.d)))

    def center(self) -> list[Element]:
        """Elements commuting with everything, found by scanning the group law."""
        E = self.element_array
        out = []
        for i, a in enumerate(E):
            if np.array_equal(self.mul_arrays(a[None, :], E), self.mul_arrays(E, a[None, :])):
                out.append(self.elements[i])
        return out

    def scalars(self) -> list[Element]:
        return [(a,) + self.K.zero for a in range(self.d)]

    def check_associative(self) -> bool:
        E = self.element_array
        for a in E:
            ab = self.mul_arrays(a[None, None, :], E[:, None, :])  # a*b for all b
            left = self.mul_arrays(ab, E[None, :, :])
            bc = self.mul_arrays(E[:, None, :], E[None, :, :])
            right = self.mul_arrays(a[None, None, :], bc)
            if not np.array_equal(left, right):
                return False
        return True

    def __repr__(self):
        return f"{type(self).__name__}({self.name}, order={self.order})"


class HeisenbergGroup(CentralExtension):
    """H(delta) on mu_d x H x H^*, with l(x) = sum l_i x_i (d / d_i)."""

    def __init__(self, divisors: Sequence[int]):
        H = make_group(divisors)
        d = H.exponent
        g = H.rank
        form = np.zeros((2 * g, 2 * g), dtype=np.int64)
        for i, di in enumerate(H.divisors):
            form[i, g + i] = d // di
        super().__init__(direct_sum(H, H), d, form, f"H{tuple(H.divisors)}")
        self.H = H
        self.g = g

    @classmethod
    def of_type(cls, n: int, g: int) -> "HeisenbergGroup":
        return cls((n,) * g)

    def element(self, alpha: int, x: Sequence[int], l: Sequence[int]) -> Element:
        return self.normalize((alpha, *x, *l))

    def split(self, a: Sequence[int]) -> tuple[int, tuple[int, ...], tuple[int, ...]]:
        return a[0], tuple(a[1:1 + self.g]), tuple(a[1 + self.g:])

    def ell_of_x(self, l: Sequence[int], x: Sequence[int]) -> int:
        d = self.d
        return sum(li * xi * (d // di) for li, xi, di in zip(l, x, self.H.divisors)) % d

    @property
    def generators(self) -> list[Element]:
        """x_1..x_g, y_1..y_g (the center generator z = (1, 0) is kept fixed)."""
        return [(0,) + tuple(int(i == j) for j in range(2 * self.g)) for i in range(2 * self.g)]

    @property
    def z(self) -> Element:
        return (1,) + self.K.zero


def commutator_pairing(G: CentralExtension, P: Sequence[int], Q: Sequence[int]) -> int:
    return G.pairing_value(P, Q)


def lift_commutator(G: CentralExtension, P: Sequence[int], Q: Sequence[int], a: int = 0, b: int = 0) -> int:
    """dlog of the commutator of the lifts (a, P), (b, Q); raises if not central."""
    c = G.commutator((a, *P), (b, *Q))
    if any(c[1:]):
        raise AssertionError("commutator of lifts is not central")
    return c[0]


def center(G: CentralExtension) -> list[Element]:
    return G.center()


def variant_group(e: SymplecticPairing) -> CentralExtension:
    """mu_d x K with law (a + a' + e(P, P')/2, P + P'); needs d odd."""
    d = e.n
    if d % 2 == 0:
        raise ValueError("the variant group needs 2 invertible mod d (d odd)")
    half = (d + 1) // 2
    form = (np.array(e.matrix, dtype=np.int64) * half) % d
    return CentralExtension(e.space, d, form, f"H'({e.space}, Z/{d})")


def sp_action(V: CentralExtension, matrix: Sequence[Sequence[int]], a: Sequence[int]) -> Element:
    """(a, P) -> (a, gP) on the variant group."""
    g = np.array(matrix, dtype=np.int64)
    return V.normalize((a[0], *(g @ np.asarray(a[1:]))))


class PhiYU:
    """The isomorphism H -> H' sending w1 w2 alpha to (alpha + s e(w1, w2)/2, w1, w2).

    The sign s is fixed at construction by testing the homomorphism property
    on all pairs; the first of s = +1, -1 that passes is kept.
    """

    def __init__(self, H: HeisenbergGroup):
        if H.d % 2 == 0:
            raise ValueError("Phi_YU needs d odd")
        self.H = H
        self.target = variant_group(H.pairing)
        self.half = (H.d + 1) // 2
        for sign in (1, -1):
            self.sign = sign
            if self.is_homomorphism():
                break
        else:
            raise AssertionError("neither sign convention gives a homomorphism")

    def central_part(self, a: Sequence[int]) -> int:
        """alpha in the unique expression a = w1 * w2 * alpha."""
        _, x, l = self.H.split(a)
        return (a[0] - self.H.ell_of_x(l, x)) % self.H.d

    def __call__(self, a: Sequence[int]) -> Element:
        H = self.H
        _, x, l = H.split(a)
        g = H.g
        e12 = H.pairing_value(tuple(x) + (0,) * g, (0,) * g + tuple(l))
        alpha = (self.central_part(a) + self.sign * self.half * e12) % H.d
        return (alpha, *a[1:])

    def map_arrays(self, A: np.ndarray) -> np.ndarray:
        H = self.H
        g = H.g
        x, l = A[..., 1:1 + g], A[..., 1 + g:]
        w = np.array([H.d // di for di in H.H.divisors], dtype=np.int64)
        lx = (l * x * w).sum(axis=-1)
        alpha = (A[..., 0] - lx + self.sign * self.half * lx) % H.d
        return np.concatenate([alpha[..., None], A[..., 1:]], axis=-1)

    def inverse(self, b: Sequence[int]) -> Element:
        H = self.H
        _, x, l = H.split(b)
        lx = H.ell_of_x(l, x)
        return ((b[0] + lx - self.sign * self.half * lx) % H.d, *b[1:])

    def is_homomorphism(self) -> bool:
        """Phi(a * b) = Phi(a) *' Phi(b) for every pair of elements.

        Phi has the form (alpha, P) -> (alpha + shift(P), P), checked first on
        all elements; the pair check then runs over K x K index tables, which
        covers every pair of group elements.
        """
        H, V = self.H, self.target
        E = H.element_array
        img = self.map_arrays(E)
        K = H.K
        zero_lifts = np.hstack([np.zeros((K.order, 1), dtype=np.int64),
                                np.array(K.elements, dtype=np.int64).reshape(K.order, -1)])
        shift = self.map_arrays(zero_lifts)[:, 0]
        p_index = np.arange(H.order) % K.order  # elements are ordered (alpha, P)
        if not np.array_equal(img[:, 1:], E[:, 1:]):
            return False
        if not np.array_equal(img[:, 0], (E[:, 0] + shift[p_index]) % H.d):
            return False
        lhs = (H.form_table + shift[K.add_table]) % H.d
        rhs = (shift[:, None] + shift[None, :] + V.form_table) % H.d
        return bool(np.array_equal(lhs, rhs))

    def is_bijective(self) -> bool:
        img = self.map_arrays(self.H.element_array)
        return len({tuple(r) for r in img.tolist()}) == self.H.order

    def trivial_on_center(self) -> bool:
        return all(self(z) == z for z in self.H.scalars())

    def trivial_on_quotient(self) -> bool:
        img = self.map_arrays(self.H.element_array)
        return bool(np.array_equal(img[:, 1:], self.H.element_array[:, 1:]))


def phi_yu(H: HeisenbergGroup) -> PhiYU:
    return PhiYU(H)


# ---------------------------------------------------------------------------
# symplectic groups


def sp_group(g: int, n: int) -> list[Matrix]:
    """All 2g x 2g matrices over Z/n preserving the standard form, sorted."""
    e = standard_symplectic(g, n)
    J = np.array(e.matrix, dtype=np.int64)
    dim = 2 * g
    vectors = [np.array(v, dtype=np.int64) for v in itertools.product(range(n), repeat=dim)]
    limit = guard_limit()
    visited = 0
    cols: list[np.ndarray] = []
    out: list[Matrix] = []

    def rec(j: int):
        nonlocal visited
        if j == dim:
            mat = np.stack(cols, axis=1) % n
            out.append(tuple(map(tuple, mat.tolist())))
            return
        for v in vectors:
            visited += 1
            if visited > limit:
                raise GuardExceeded("symplectic group", visited, limit)
            if all((cols[i] @ J @ v) % n == J[i, j] for i in range(j)) and (v @ J @ v) % n == J[j, j]:
                cols.append(v)
                rec(j + 1)
                cols.pop()

    rec(0)
    return sorted(out)


def mat_mul(a: Matrix, b: Matrix, n: int) -> Matrix:
    return tuple(map(tuple, ((np.array(a) @ np.array(b)) % n).tolist()))


def identity_matrix(dim: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(dim)) for i in range(dim))


# ---------------------------------------------------------------------------
# centrally trivial automorphisms


@dataclass(frozen=True)
class CentrallyTrivialAut:
    """An automorphism fixing the center, stored by its generator images."""

    group: HeisenbergGroup = field(compare=False, repr=False)
    images: tuple[Element, ...]

    def __call__(self, a: Sequence[int]) -> Element:
        H = self.group
        _, x, l = H.split(a)
        out = ((a[0] - H.ell_of_x(l, x)) % H.d,) + H.K.zero
        for img, k in zip(self.images, tuple(x) + tuple(l)):
            out = H.mul(out, H.power(img, k))
        return out

    @cached_property
    def permutation(self) -> tuple[int, ...]:
        return tuple(self.group.index(self(a)) for a in self.group.elements)

    @cached_property
    def matrix(self) -> Matrix:
        """Induced map on K; column j is the image of basis vector j."""
        cols = [img[1:] for img in self.images]
        return tuple(tuple(c[i] for c in cols) for i in range(len(cols)))

    def compose(self, other: "CentrallyTrivialAut") -> "CentrallyTrivialAut":
        """self after other."""
        return CentrallyTrivialAut(self.group, tuple(self(img) for img in other.images))

    def is_automorphism(self) -> bool:
        H = self.group
        perm = self.permutation
        if len(set(perm)) != H.order:
            return False
        E = H.element_array
        img = E[list(perm)]
        idx = {e: i for i, e in enumerate(H.elements)}
        for i in range(H.order):
            prod = H.mul_arrays(E[i][None, :], E)
            lhs = img[[idx[tuple(r)] for r in prod.tolist()]]
            rhs = H.mul_arrays(img[i][None, :], img)
            if not np.array_equal(lhs, rhs):
                return False
        return True

    def fixes_center(self) -> bool:
        return all(self(z) == z for z in self.group.scalars())

    def preserves_pairing(self) -> bool:
        return self.group.pairing.preserved_by(self.matrix)


@dataclass
class G1Result:
    n: int
    g: int
    automorphisms: list[CentrallyTrivialAut]
    g2: list[CentrallyTrivialAut]
    quotient_image: list[Matrix]

    @property
    def order(self) -> int:
        return len(self.automorphisms)

    def as_dict(self) -> dict:
        return {
            "n": self.n,
            "g": self.g,
            "g1_order": self.order,
            "g2_order": len(self.g2),
            "quotient_image_order": len(self.quotient_image),
        }


def enumerate_g1(H: HeisenbergGroup) -> G1Result:
    """All automorphisms of H(n, g) fixing the center, by generator-image search.

    H(n, g) is presented by x_i, y_i, z with z central, x_i^n = y_i^n = 1,
    [x_i, x_j] = [y_i, y_j] = 1 and [x_i, y_j] = z^(delta_ij); an assignment
    of images satisfying these relations (z fixed) extends to an endomorphism,
    which is an automorphism iff it is onto.
    """
    if len(set(H.H.divisors)) != 1:
        raise ValueError("enumerate_g1 supports type (n, ..., n) only")
    n, g = H.d, H.g
    gens = H.generators
    check_guard("centrally trivial automorphisms", H.order ** len(gens))
    candidates = [a for a in H.elements if H.power(a, n) == H.identity]
    target_comm = {
        (i, j): H.commutator(gens[i], gens[j]) for i in range(len(gens)) for j in range(i)
    }
    auts: list[CentrallyTrivialAut] = []
    chosen: list[Element] = []

    def rec(k: int):
        if k == len(gens):
            aut = CentrallyTrivialAut(H, tuple(chosen))
            if len(set(aut.permutation)) == H.order:
                auts.append(aut)
            return
        for a in candidates:
            if all(H.commutator(a, chosen[j]) == target_comm[(k, j)] for j in range(k)):
                chosen.append(a)
                rec(k + 1)
                chosen.pop()

    rec(0)
    ident = identity_matrix(2 * g)
    g2 = [a for a in auts if a.matrix == ident]
    image = sorted({a.matrix for a in auts})
    return G1Result(n, g, auts, g2, image)


def character_automorphism(H: HeisenbergGroup, chi: Sequence[int]) -> CentrallyTrivialAut:
    """(a, P) -> (a + chi(P), P) for chi in K^* given by dlog values on the basis."""
    images = tuple((int(c) % H.d,) + gen[1:] for c, gen in zip(chi, H.generators))
    return CentrallyTrivialAut(H, images)


def symplectic_section(phi: PhiYU, matrix: Sequence[Sequence[int]]) -> CentrallyTrivialAut:
    """Phi^-1 o (g acting on H') o Phi, restricted to the generators."""
    H = phi.H
    images = tuple(phi.inverse(sp_action(phi.target, matrix, phi(gen))) for gen in H.generators)
    return CentrallyTrivialAut(H, images)


@dataclass
class SplittingCheck:
    section_in_g1: bool
    section_lifts: bool
    section_is_homomorphism: bool
    image_is_full_sp: bool
    g2_is_dual: bool

    @property
    def holds(self) -> bool:
        return all(vars(self).values())


def verify_split_sequence(result: G1Result, sp: list[Matrix] | None = None) -> SplittingCheck:
    """1 -> K^* -> G1 -> Sp(K) -> 0 is split exact (odd n)."""
    H = result.automorphisms[0].group
    n = result.n
    sp = sp if sp is not None else sp_group(result.g, n)
    phi = PhiYU(H)
    g1 = set(result.automorphisms)
    section = {m: symplectic_section(phi, m) for m in sp}
    in_g1 = all(s in g1 for s in section.values())
    lifts = all(s.matrix == m for m, s in section.items())
    hom = all(
        section[mat_mul(a, b, n)] == section[a].compose(section[b]) for a in sp for b in sp
    )
    dual = {character_automorphism(H, chi) for chi in itertools.product(range(n), repeat=2 * result.g)}
    return SplittingCheck(
        section_in_g1=in_g1,
        section_lifts=lifts,
        section_is_homomorphism=hom,
        image_is_full_sp=set(result.quotient_image) == set(sp),
        g2_is_dual=dual == set(result.g2) and len(dual) == n ** (2 * result.g),
    )


# ---------------------------------------------------------------------------
# twisted Galois actions


class TwistedAction:
    """Gamma acting on H(delta) by s* = t_{chi_s} o sec(S_s) o s_0.

    ``K_module`` gives the untwisted action s_0 on K = H + H^* (its second half
    must carry the dual action), ``mu`` the action on the center, ``chi`` the
    K^*-valued twisting cocycle as a list of dlog coefficient vectors (one per
    group element) and ``S`` optional symplectic matrices (odd d only).
    """

    def __init__(self, H: HeisenbergGroup, K_module: GammaModule, mu: MuN,
                 chi: Sequence[Sequence[int]] | None = None, S: Sequence[Matrix] | None = None):
        self.H = H
        self.K_module = K_module
        self.mu = mu
        G = K_module.group
        self.gamma = G
        zero = (0,) * H.rank
        self.chi = [tuple(c) for c in chi] if chi is not None else [zero] * G.order
        ident = identity_matrix(H.rank)
        self.S = [tuple(map(tuple, m)) for m in S] if S is not None else [ident] * G.order
        self._phi = PhiYU(H) if any(m != ident for m in self.S) else None
        self._sections = (
            [symplectic_section(self._phi, m) for m in self.S] if self._phi else None
        )
        self.check()

    def chi_value(self, s: int, P: Sequence[int]) -> int:
        return sum(c * p for c, p in zip(self.chi[s], P)) % self.H.d

    def base(self, s: int, a: Sequence[int]) -> Element:
        return (self.mu.act(s, a[0]), *self.K_module.apply_vector(s, a[1:]))

    def act(self, s: int, a: Sequence[int]) -> Element:
        b = self.base(s, a)
        if self._sections is not None:
            b = self._sections[s](b)
        return ((b[0] + self.chi_value(s, b[1:])) % self.H.d, *b[1:])

    def act_on_K(self, s: int, P: Sequence[int]) -> tuple[int, ...]:
        return self.act(s, (0, *P))[1:]

    def check(self) -> None:
        H, G = self.H, self.gamma
        for s in G.elements:
            for a in H.elements:
                for b in H.elements:
                    if self.act(s, H.mul(a, b)) != H.mul(self.act(s, a), self.act(s, b)):
                        raise ValueError("twisted action does not respect the group law")
        for s in G.elements:
            for t in G.elements:
                st = G.table[s][t]
                for a in H.elements:
                    if self.act(st, a) != self.act(s, self.act(t, a)):
                        raise ValueError("twisting data fails the cocycle condition")

    def twisted_K_module(self) -> GammaModule:
        K = self.H.K
        action = tuple(tuple(self.act_on_K(s, b) for b in K.basis()) for s in self.gamma.elements)
        return GammaModule(self.gamma, K, action, f"{self.K_module.name} (twisted)")

    def fixed_center(self) -> list[Element]:
        return [z for z in self.H.scalars() if all(self.act(s, z) == z for s in self.gamma.elements)]


def twist_action(H: HeisenbergGroup, K_module: GammaModule, mu: MuN,
                 chi: Sequence[Sequence[int]] | None = None,
                 S: Sequence[Matrix] | None = None) -> TwistedAction:
    return TwistedAction(H, K_module, mu, chi, S)
