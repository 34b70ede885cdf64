import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thetakit import finmod as fm


def _chain(factors):
    out, d = [], 1
    for f in factors:
        d *= f
        out.append(d)
    return out


# elementary divisor chains d_1 | d_2 | ...
divisor_lists = st.lists(st.integers(2, 3), min_size=1, max_size=3).map(_chain)


def test_abelian_group_basics():
    A = fm.FiniteAbelianGroup((2, 4))
    assert A.order == 8 and A.exponent == 4 and A.rank == 2
    assert list(A.elements) == sorted(A.elements)
    assert A.index(A.element(5)) == 5
    assert A.element_order((1, 1)) == 4
    assert A.normalize((3, -1)) == (1, 3)


def test_make_group():
    A = fm.make_group([2, 4])
    assert A.order == 8 and A.exponent == 4
    assert len(set(A.elements)) == 8
    assert all(A.add(x, y) in A.elements for x in A.elements for y in A.elements)
    for bad in ([], [1], [0], [2, 3], [4, 2]):
        with pytest.raises(ValueError):
            fm.make_group(bad)


def test_unchained_sum_has_lcm_exponent():
    A = fm.direct_sum(fm.make_group([2, 4]), fm.make_group([2, 4]))
    assert A.divisors == (2, 4, 2, 4) and A.exponent == 4 and A.order == 64


@given(divisor_lists, st.data())
@settings(max_examples=40, deadline=None)
def test_abelian_group_laws(divs, data):
    A = fm.make_group(divs)
    x, y, z = (data.draw(st.sampled_from(A.elements)) for _ in range(3))
    assert A.add(x, y) == A.add(y, x)
    assert A.add(A.add(x, y), z) == A.add(x, A.add(y, z))
    assert A.add(x, A.neg(x)) == A.zero
    assert A.scale(A.element_order(x), x) == A.zero


def test_add_table_matches_add():
    A = fm.FiniteAbelianGroup((3, 3))
    for i, x in enumerate(A.elements):
        for j, y in enumerate(A.elements):
            assert A.add_table[i, j] == A.index(A.add(x, y))


@pytest.mark.parametrize("name", sorted(fm.catalog_groups()))
def test_catalog_groups_are_groups(name):
    G = fm.catalog_groups()[name]
    T = G.mul_table
    # T[T][a, b, c] = (ab)c and T[:, T][a, b, c] = a(bc)
    assert np.array_equal(T[T], T[:, T])
    for a in G.elements:
        assert G.mul(a, G.inv(a)) == G.identity == 0


@pytest.mark.parametrize("name, count", [("C1", 1), ("C6", 4), ("C8", 4), ("V4", 5), ("S3", 6)])
def test_subgroup_counts(name, count):
    G = fm.catalog_groups()[name]
    assert len(G.subgroups) == count
    assert all(G.is_subgroup(S) for S in G.subgroups)


def test_normality_in_s3():
    G = fm.symmetric_group(3)
    normal = [S for S in G.subgroups if G.is_normal(S)]
    assert sorted(len(S) for S in normal) == [1, 3, 6]


def _brute_homs(G, n):
    out = []
    for f in itertools.product(range(n), repeat=G.order):
        if all(f[G.mul(a, b)] == (f[a] + f[b]) % n for a in G.elements for b in G.elements):
            out.append(f)
    return sorted(out)


@pytest.mark.parametrize("name, n", [("C4", 2), ("C4", 4), ("V4", 2), ("S3", 2), ("S3", 3), ("C3", 3)])
def test_homomorphisms_to_cyclic_matches_brute_force(name, n):
    G = fm.catalog_groups()[name]
    assert sorted(fm.homomorphisms_to_cyclic(G, n)) == _brute_homs(G, n)


@pytest.mark.parametrize("gname, mname", [(g, m) for g, m, _ in fm.catalog_pairs(6, 16)])
def test_catalog_actions_compose(gname, mname):
    M = fm.catalog_module(fm.catalog_groups()[gname], mname)
    G = M.group
    for s in G.elements:
        for t in G.elements:
            for x in M.module.elements:
                assert M.apply_vector(G.mul(s, t), x) == M.apply_vector(s, M.apply_vector(t, x))


def test_module_rejects_incompatible_action():
    G = fm.cyclic_group(3)
    A = fm.FiniteAbelianGroup((3,))
    with pytest.raises(ValueError):
        fm.scalar_module(G, A, [1, -1, 1])  # a generator of order 3 cannot act by -1


def test_sign_character():
    assert fm.sign_character(fm.cyclic_group(3)) is None
    s = fm.sign_character(fm.symmetric_group(3))
    assert sorted(s) == [0, 0, 0, 1, 1, 1]


def test_dual_module_is_equivariant():
    G = fm.symmetric_group(3)
    M = fm.catalog_module(G, "Z3-neg")
    mu = fm.MuN(3)
    D = fm.dual_module(M, mu)
    A = M.module
    for s in G.elements:
        for l in A.elements:
            for x in A.elements:
                lhs = fm.evaluate_character(A, 3, D.apply_vector(s, l), M.apply_vector(s, x))
                assert lhs == mu.act(s, fm.evaluate_character(A, 3, l, x))


def test_mu_n_action_must_be_units():
    with pytest.raises(ValueError):
        fm.MuN(4, fm.cyclic_group(2), (1, 2))


def test_standard_symplectic():
    e = fm.standard_symplectic(2, 3)
    assert e.is_symplectic() and e.induced_dual_map_is_bijective()
    degenerate = fm.SymplecticPairing(fm.FiniteAbelianGroup((3, 3)), 3, ((0, 0), (0, 0)))
    assert not degenerate.is_nondegenerate()
    swap = ((0, 1), (1, 0))
    assert fm.standard_symplectic(1, 3).preserved_by(((0, 2), (1, 0)))
    assert not fm.standard_symplectic(1, 3).preserved_by(swap)


def test_guard_names_itself(monkeypatch):
    monkeypatch.delenv(fm.GUARD_ENV, raising=False)
    with pytest.raises(fm.GuardExceeded) as err:
        fm.check_guard("demo", 10**8)
    assert err.value.guard == "demo" and "demo" in str(err.value)


def test_guard_override(monkeypatch):
    monkeypatch.setenv(fm.GUARD_ENV, str(10**9))
    fm.check_guard("demo", 10**8)
    monkeypatch.setenv(fm.GUARD_ENV, "lots")
    with pytest.raises(ValueError):
        fm.guard_limit()
