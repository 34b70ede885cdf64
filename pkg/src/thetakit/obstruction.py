"""The period-index obstruction map Delta: H^1(Gamma, K) -> H^2(Gamma, mu_n).

Two independent computations are provided.  ``delta`` evaluates the closed
formula

    Delta(eta)(s, t) = chi_s(s.eta(t)) + f(eta(s), s.eta(t))       (dlog)

split into its linear (chi) and quadratic (f) parts; ``delta_via_connecting``
runs the coboundary N_s * s(N_t) * N_st^-1 through the twisted Heisenberg group
with the lifts N_s = (0, eta(s)).  Because both use the same lifts they must
agree cocycle by cocycle.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .cohomology import (
    CocycleError,
    CohClass,
    Cocycle1,
    Cocycle2,
    cohomology_class,
    cup,
    is_coboundary,
    z1,
)
from .finmod import (
    FiniteAbelianGroup,
    FiniteGroup,
    GammaModule,
    MuN,
    cyclic_group,
    dual_module,
    klein_four,
    module_direct_sum,
    scalar_module,
    sign_character,
    trivial_module,
)
from .heisenberg import HeisenbergGroup, Matrix, TwistedAction, identity_matrix


class LagrangianThetaData:
    """K = H + H^* with Gamma-stable summands, a K^*-valued cocycle chi and mu_n.

    ``chi`` is a 1-cocycle on dual(K) (coefficient vectors are dlog values on
    the basis of K).  ``S`` optionally adds a symplectic twist; such data is
    accepted by the connecting-map route only.
    """

    def __init__(self, H_module: GammaModule, mu: MuN, chi: Cocycle1 | None = None,
                 S: Sequence[Matrix] | None = None, name: str = ""):
        H = H_module.module
        if len(set(H.divisors)) != 1 or H.exponent != mu.n:
            raise ValueError("Lagrangian data needs H = (Z/n)^g with n the order of mu_n")
        self.name = name
        self.gamma: FiniteGroup = H_module.group
        self.n = mu.n
        self.g = H.rank
        self.mu = mu
        self.mu_module = mu.as_module(self.gamma)
        self.H_module = H_module
        self.K_module = module_direct_sum(H_module, dual_module(H_module, mu), "K")
        self.K_dual = dual_module(self.K_module, mu)
        self.heisenberg = HeisenbergGroup(H.divisors)
        if chi is None:
            chi = Cocycle1(self.K_dual, (0,) * self.gamma.order)
        if chi.module is not self.K_dual:
            chi = Cocycle1.from_vectors(self.K_dual, chi.vectors())
        chi.check()
        self.chi = chi
        ident = identity_matrix(2 * self.g)
        self.S = [tuple(map(tuple, m)) for m in S] if S is not None else [ident] * self.gamma.order
        self.pure_chi = all(m == ident for m in self.S)
        self.action = TwistedAction(
            self.heisenberg, self.K_module, mu, [chi.vector(s) for s in self.gamma.elements],
            None if self.pure_chi else self.S,
        )
        self.eta_module = self.K_module if self.pure_chi else self.action.twisted_K_module()
        self._check_structure()
        self._delta_cache: dict[tuple[int, ...], ObstructionRecord] = {}

    def f(self, P: Sequence[int], Q: Sequence[int]) -> int:
        """f((x, l), (x', l')) = l'(x)."""
        return self.heisenberg.F(P, Q)

    def e(self, P: Sequence[int], Q: Sequence[int]) -> int:
        return self.heisenberg.pairing_value(P, Q)

    def chi_value(self, s: int, P: Sequence[int]) -> int:
        return sum(c * p for c, p in zip(self.chi.vector(s), P)) % self.n

    def _check_structure(self) -> None:
        K = self.K_module.module
        g = self.g
        H_part = [P for P in K.elements if not any(P[g:])]
        D_part = [P for P in K.elements if not any(P[:g])]
        for part in (H_part, D_part):
            if any(self.e(P, Q) for P in part for Q in part):
                raise ValueError("summands of K are not isotropic")
            for s in self.gamma.elements:
                if {self.K_module.apply_vector(s, P) for P in part} != set(part):
                    raise ValueError("summands of K are not Gamma-stable")
        for P in K.elements:
            for Q in K.elements:
                if (self.f(P, Q) - self.f(Q, P)) % self.n != self.e(P, Q):
                    raise ValueError("f does not antisymmetrize to e")

    def __repr__(self):
        return f"LagrangianThetaData({self.name or self.gamma.name}, n={self.n}, g={self.g})"


@dataclass
class ObstructionRecord:
    input: CohClass
    eta: Cocycle1
    delta: Cocycle2
    delta_class: CohClass
    linear_part: Cocycle2
    quadratic_part: Cocycle2
    modulus: int = 0

    def __post_init__(self):
        if not self.modulus:
            self.modulus = self.delta.module.module.exponent

    def as_dict(self) -> dict:
        G = self.delta.module.group
        table = lambda c: [[c.vector(s, t)[0] for t in G.elements] for s in G.elements]
        return {
            "eta": [list(v) for v in self.eta.vectors()],
            "input_class": [list(v) for v in self.input.representative.vectors()],
            "delta": table(self.delta),
            "linear_part": table(self.linear_part),
            "quadratic_part": table(self.quadratic_part),
            "delta_class": table(self.delta_class.representative),
            "delta_class_trivial": self.delta_class.is_trivial(),
        }


def _cochain(module: GammaModule, fn) -> Cocycle2:
    return Cocycle2.from_function(module, lambda s, t: (fn(s, t),))


def delta(data: LagrangianThetaData, eta: Cocycle1) -> ObstructionRecord:
    if not data.pure_chi:
        raise ValueError("the closed formula covers chi-twists only; use delta_via_connecting")
    if eta.module is not data.eta_module:
        eta = Cocycle1.from_vectors(data.eta_module, eta.vectors())
    cached = data._delta_cache.get(eta.values)
    if cached is not None:
        return cached
    if not eta.is_cocycle():
        raise CocycleError("eta is not a 1-cocycle for the K-action")
    G, Km = data.gamma, data.K_module
    moved = {(s, t): Km.apply_vector(s, eta.vector(t)) for s in G.elements for t in G.elements}
    linear = _cochain(data.mu_module, lambda s, t: data.chi_value(s, moved[s, t]))
    quadratic = _cochain(data.mu_module, lambda s, t: data.f(eta.vector(s), moved[s, t]))
    total = (linear + quadratic).check()
    rec = data._delta_cache[eta.values] = ObstructionRecord(
        input=cohomology_class(eta),
        eta=eta,
        delta=total,
        delta_class=cohomology_class(total),
        linear_part=linear,
        quadratic_part=quadratic,
    )
    return rec


def connecting_cocycle(data: LagrangianThetaData, eta: Cocycle1) -> Cocycle2:
    """N_s * s*(N_t) * N_st^-1 with N_s = (0, eta(s)), read off in the center."""
    if eta.module is not data.eta_module:
        eta = Cocycle1.from_vectors(data.eta_module, eta.vectors())
    if not eta.is_cocycle():
        raise CocycleError("eta is not a 1-cocycle for the twisted K-action")
    Hg, G, act = data.heisenberg, data.gamma, data.action
    lift = lambda s: (0, *eta.vector(s))

    def value(s, t):
        prod = Hg.mul(Hg.mul(lift(s), act.act(s, lift(t))), Hg.inv(lift(G.table[s][t])))
        if any(prod[1:]):
            raise AssertionError("coboundary of the lifts is not central")
        return prod[0]

    return _cochain(data.mu_module, value).check()


def delta_via_connecting(data: LagrangianThetaData, eta: Cocycle1) -> CohClass:
    return cohomology_class(connecting_cocycle(data, eta))


@dataclass
class QuadraticityReport:
    B: Cocycle2
    B_symmetric: bool
    linear_additive: bool
    linear_scaling: bool
    quadratic_scaling: bool

    @property
    def holds(self) -> bool:
        return self.B_symmetric and self.linear_additive and self.linear_scaling and self.quadratic_scaling


def quadraticity_report(data: LagrangianThetaData, eta: Cocycle1, eta2: Cocycle1) -> QuadraticityReport:
    """B(eta, eta') = Delta(eta + eta') - Delta(eta) - Delta(eta') and scaling laws."""
    d1, d2, d12 = delta(data, eta), delta(data, eta2), delta(data, eta + eta2)
    B = d12.delta - d1.delta - d2.delta
    B_rev = delta(data, eta2 + eta).delta - d2.delta - d1.delta
    linear_add = d12.linear_part == d1.linear_part + d2.linear_part
    lin_scale = quad_scale = True
    for a in range(data.n):
        da = delta(data, eta.scale(a))
        lin_scale &= da.linear_part == d1.linear_part.scale(a)
        quad_scale &= da.quadratic_part == d1.quadratic_part.scale(a * a)
    return QuadraticityReport(B, B == B_rev, linear_add, lin_scale, quad_scale)


def bilinear_defect_is_coboundary(data: LagrangianThetaData, a: Cocycle1, b: Cocycle1, c: Cocycle1) -> bool:
    """B(a + b, c) - B(a, c) - B(b, c) is a coboundary."""
    def B(x, y):
        return delta(data, x + y).delta - delta(data, x).delta - delta(data, y).delta

    return is_coboundary(B(a + b, c) - B(a, c) - B(b, c))


def torsion_check(rec: ObstructionRecord, n: int) -> bool:
    """Is n times the obstruction class trivial?"""
    return is_coboundary(rec.delta.scale(n))


def f_cup(data: LagrangianThetaData, eta: Cocycle1) -> Cocycle2:
    """Cup product of the H- and H^*-components of eta under (x, l) -> l(x)."""
    g = data.g
    Hm = data.H_module
    Dm = dual_module(Hm, data.mu)
    a = Cocycle1.from_vectors(Hm, [v[:g] for v in eta.vectors()])
    b = Cocycle1.from_vectors(Dm, [v[g:] for v in eta.vectors()])
    pairing = lambda x, l: (sum(xi * li for xi, li in zip(x, l)) % data.n,)
    return cup(a, b, pairing, data.mu_module)


# ---------------------------------------------------------------------------
# catalog


def _data(G: FiniteGroup, n: int, h_units=None, mu_units=None, chi_pick: int | None = None, name: str = ""):
    H = FiniteAbelianGroup((n,))
    Hm = trivial_module(G, H, f"Z/{n}") if h_units is None else scalar_module(G, H, h_units, f"Z/{n}-tw")
    mu = MuN(n) if mu_units is None else MuN(n, G, tuple(mu_units))
    base = LagrangianThetaData(Hm, mu, name=name)
    if chi_pick is None:
        return base
    nonzero = [c for c in z1(base.K_dual) if not c.is_zero()]
    if not nonzero:
        return None
    return LagrangianThetaData(Hm, mu, nonzero[min(chi_pick, len(nonzero) - 1)], name=name)


def catalog_lagrangian() -> list[LagrangianThetaData]:
    """Lagrangian instances with g = 1 over Gamma in {C2, V4}, n in {2, 3}.

    Trivial-action data with chi = 0 and (for n = 2) a nonzero chi; for n = 3,
    where every chi is zero on trivial modules, H carries the sign action; one
    instance lets Gamma act on mu_3 by inversion.
    """
    out = []
    for gname, G in (("C2", cyclic_group(2)), ("V4", klein_four())):
        sign = [(-1) ** e for e in sign_character(G)]
        for n in (2, 3):
            out.append(_data(G, n, name=f"{gname}/n={n}/trivial/chi=0"))
            d = _data(G, n, chi_pick=0, name=f"{gname}/n={n}/trivial/chi!=0")
            if d is not None:
                out.append(d)
        out.append(_data(G, 3, h_units=sign, name=f"{gname}/n=3/sign/chi=0"))
        out.append(_data(G, 3, h_units=sign, chi_pick=0, name=f"{gname}/n=3/sign/chi!=0"))
    G = cyclic_group(2)
    out.append(_data(G, 3, mu_units=[1, -1], chi_pick=0, name="C2/n=3/cyclotomic/chi!=0"))
    return out
