"""Brute-force reference computations used by the tests.

Nothing here calls the library's cohomology or index code; only group tables
and module actions are read from the library objects.
"""

from __future__ import annotations

import itertools
import math

import numpy as np


def subgroups(G) -> list[frozenset[int]]:
    """All subgroups generated by at most two elements (enough for the catalog)."""
    def closure(gens):
        out = {G.identity}
        frontier = list(out)
        while frontier:
            a = frontier.pop()
            for g in gens:
                b = G.mul(a, g)
                if b not in out:
                    out.add(b)
                    frontier.append(b)
        return frozenset(out)

    return sorted({closure((a, b)) for a in G.elements for b in G.elements}, key=lambda s: (len(s), sorted(s)))


def _sub(M, x, y):
    return M.module.add(x, M.module.neg(y))


def splits_on(M, xi, S) -> bool:
    """xi (a list of vectors indexed by Gamma) is s.m - m on S for some m."""
    return any(all(xi[s] == _sub(M, M.apply_vector(s, m), m) for s in S) for m in M.module.elements)


def scale(M, xi, k):
    return [M.module.scale(k, v) for v in xi]


def period(M, xi) -> int:
    G = M.group
    k = 1
    while not splits_on(M, scale(M, xi, k), G.elements):
        k += 1
    return k


def index_and_mindex(M, xi) -> tuple[int, int]:
    G = M.group
    degrees = [G.order // len(S) for S in subgroups(G) if splits_on(M, xi, S)]
    return math.gcd(*degrees), min(degrees)


def cocycles1(M) -> list[tuple]:
    """Every map Gamma -> M satisfying xi(st) = xi(s) + s.xi(t)."""
    G, A = M.group, M.module
    out = []
    for values in itertools.product(A.elements, repeat=G.order - 1):
        xi = [A.zero, *values]
        if all(xi[G.mul(s, t)] == A.add(xi[s], M.apply_vector(s, xi[t])) for s in G.elements for t in G.elements):
            out.append(tuple(xi))
    return out


def coboundaries2_scalar(G, n: int, unit) -> set[tuple[int, ...]]:
    """All (s, t) -> s.f(t) - f(st) + f(s) in Z/n, s acting by multiplication by unit(s)."""
    out = set()
    for f in itertools.product(range(n), repeat=G.order):
        out.add(tuple(
            (unit(s) * f[t] - f[G.mul(s, t)] + f[s]) % n for s in G.elements for t in G.elements
        ))
    return out


# ---------------------------------------------------------------------------
# subgroups of (Z/n)^r as boolean masks


def abelian_subgroup_masks(n: int, r: int) -> tuple[np.ndarray, np.ndarray]:
    """(elements as an N x r array, boolean matrix with one row per subgroup)."""
    elems = np.array(list(itertools.product(range(n), repeat=r)), dtype=np.int64).reshape(-1, r)
    N = len(elems)
    weights = n ** np.arange(r - 1, -1, -1)
    add = ((elems[:, None, :] + elems[None, :, :]) % n) @ weights
    cyclic = {}
    for i in range(N):
        mask = np.zeros(N, dtype=bool)
        mask[(np.arange(n)[:, None] * elems[i] % n) @ weights] = True
        cyclic[mask.tobytes()] = mask
    cyc = list(cyclic.values())
    seen = {}
    start = np.zeros(N, dtype=bool)
    start[0] = True
    frontier = [start]
    seen[start.tobytes()] = start
    while frontier:
        nxt = []
        for S in frontier:
            members = np.flatnonzero(S)
            for C in cyc:
                if (C & ~S).any():
                    U = np.zeros(N, dtype=bool)
                    U[add[np.ix_(members, np.flatnonzero(C))].ravel()] = True
                    key = U.tobytes()
                    if key not in seen:
                        seen[key] = U
                        nxt.append(U)
        frontier = nxt
    return elems, np.array(list(seen.values()))
