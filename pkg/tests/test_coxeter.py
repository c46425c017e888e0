import pytest
from fractions import Fraction

from twistlattice import intlinalg as la
from twistlattice.coxeter import (INFINITE, OrbitCase, analyze_orbit, invariant_chamber_test,
                                  invariant_generators, order_from_pairings, pair_order,
                                  restricted_product, root_orbits, roots_from_vectors)
from twistlattice.errors import (ActionDoesNotPreserveRoots, EqualRoots, SignIncoherentOrbit,
                                 UnequalNorms)
from twistlattice.groups import action_from_generators
from twistlattice.lattice import make_lattice
from twistlattice.reflections import make_root, reflection
from oracles import pair_order_oracle

U = make_lattice([[0, 1], [1, 0]])
UA2 = make_lattice([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, -2, 1], [0, 0, 1, -2]])
UA1A1 = make_lattice([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, -2, 0], [0, 0, 0, -2]])
SWAP34 = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]]


def exact_order(beta, alpha):
    k = pair_order_oracle(beta, alpha)
    return INFINITE if k is None else k


@pytest.mark.parametrize("beta", [-2, -4, -6])
@pytest.mark.parametrize("alpha", range(-3, 4))
def test_pair_order_matches_matrix_powers(beta, alpha):
    assert order_from_pairings(beta, alpha) == exact_order(beta, alpha)


def test_restricted_product_has_the_oracle_order():
    for beta in (-2, -4, -6):
        for alpha in range(-3, 4):
            k = pair_order_oracle(beta, alpha)
            m = restricted_product(beta, alpha)
            if k is not None:
                cur = la.identity(2)
                for _ in range(k):
                    cur = la.mat_mul(cur, m)
                assert cur == la.identity(2)


def test_pair_order_examples():
    L = make_lattice([[2, 0, 0], [0, -2, 1], [0, 1, -2]])
    assert pair_order(make_root(L, (0, 1, 0)), make_root(L, (0, 0, 1))) == 3
    M = make_lattice([[2, 0, 0], [0, -2, 0], [0, 0, -2]])
    assert pair_order(make_root(M, (0, 1, 0)), make_root(M, (0, 0, 1))) == 2
    assert order_from_pairings(-2, 2) == INFINITE
    with pytest.raises(EqualRoots):
        pair_order(make_root(M, (0, 1, 0)), make_root(M, (0, -1, 0)))
    with pytest.raises(UnequalNorms):
        pair_order(make_root(M, (0, 1, 0)), make_root(M, (0, 1, 1)))


def test_root_orbits():
    swap = action_from_generators(U, [[[0, 1], [1, 0]]])
    assert [len(o.roots) for o in root_orbits(roots_from_vectors(U, [(1, -1)]), swap)] == [1]
    act = action_from_generators(UA2, [SWAP34])
    orbits = root_orbits(roots_from_vectors(UA2, [(0, 0, 1, 0), (0, 0, 0, 1)]), act)
    assert [len(o.roots) for o in orbits] == [2]
    trivial = action_from_generators(UA2, [])
    assert len(root_orbits(roots_from_vectors(UA2, [(0, 0, 1, 0), (0, 0, 0, 1)]), trivial)) == 2
    with pytest.raises(ActionDoesNotPreserveRoots):
        root_orbits(roots_from_vectors(UA2, [(0, 0, 1, 0)]), act)


def test_case_b_orbit():
    act = action_from_generators(UA2, [SWAP34])
    (orbit,) = root_orbits(roots_from_vectors(UA2, [(0, 0, 1, 0), (0, 0, 0, 1)]), act)
    rep = analyze_orbit(orbit)
    assert rep.case is OrbitCase.B and rep.composite_root == (0, 0, 1, 1)
    e1, e2 = (make_root(UA2, v) for v in [(0, 0, 1, 0), (0, 0, 0, 1)])
    r1, r2 = reflection(e1), reflection(e2)
    assert la.mat_mul(la.mat_mul(r1, r2), r1) == [list(r) for r in reflection(make_root(UA2, (0, 0, 1, 1)))]
    assert rep.longest_is_sum_reflection
    gens, skipped = invariant_generators([rep])
    assert gens == [rep.sum_reflection] and skipped == []
    for m in act.matrices:
        assert tuple(la.mat_vec(m, rep.composite_root)) == rep.composite_root
        assert la.mat_key(la.mat_mul(la.mat_mul(m, rep.longest_element), la.inverse(m))) == \
            tuple(tuple(Fraction(x) for x in row) for row in rep.longest_element)


def test_case_a_orbit_reports_true_longest_element():
    act = action_from_generators(UA1A1, [SWAP34])
    (orbit,) = root_orbits(roots_from_vectors(UA1A1, [(0, 0, 1, 0), (0, 0, 0, 1)]), act)
    rep = analyze_orbit(orbit)
    assert rep.case is OrbitCase.A and rep.components == 2
    e1, e2 = (make_root(UA1A1, v) for v in [(0, 0, 1, 0), (0, 0, 0, 1)])
    assert rep.longest_element == la.mat_key(la.mat_mul(reflection(e1), reflection(e2)))
    assert not rep.longest_is_sum_reflection
    assert la.det(rep.longest_element) == 1


def test_singleton_orbit_and_chamber_test():
    swap = action_from_generators(U, [[[0, 1], [1, 0]]])
    (orbit,) = root_orbits(roots_from_vectors(U, [(1, -1)]), swap)
    rep = analyze_orbit(orbit)
    assert rep.case is OrbitCase.A and rep.longest_element == reflection(make_root(U, (1, -1)))
    assert invariant_chamber_test((1, 1), [rep])
    assert not invariant_chamber_test((2, 1), [rep])
    assert invariant_chamber_test((2, 1), [])


def test_sign_incoherent_pair():
    neg_swap = [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, -1], [0, 0, -1, 0]]
    L = make_lattice([[0, 1, 0, 0], [1, 0, 0, 0], [0, 0, -2, -1], [0, 0, -1, -2]])
    act = action_from_generators(L, [neg_swap])
    (orbit,) = root_orbits(roots_from_vectors(L, [(0, 0, 1, 0), (0, 0, 0, 1)]), act)
    with pytest.raises(SignIncoherentOrbit):
        analyze_orbit(orbit)


def test_infinite_orbit():
    # (e1, e2) = 3 gives alpha = 3, beyond the finite range
    M = make_lattice([[2, 0, 0], [0, -2, 3], [0, 3, -2]])
    swap = [[1, 0, 0], [0, 0, 1], [0, 1, 0]]
    act = action_from_generators(M, [swap])
    (orbit,) = root_orbits(roots_from_vectors(M, [(0, 1, 0), (0, 0, 1)]), act)
    rep = analyze_orbit(orbit)
    assert rep.case is OrbitCase.INFINITE and not rep.finite
    assert invariant_generators([rep]) == ([], [rep])
