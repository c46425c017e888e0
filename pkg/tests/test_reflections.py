import pytest
from hypothesis import given, strategies as st

from twistlattice import intlinalg as la
from twistlattice.cones import positive_cone
from twistlattice.errors import NonIntegralReflection, NotARoot, NotInPositiveCone, WalkDiverged
from twistlattice.lattice import inner, is_isometry, make_lattice
from twistlattice.reflections import (apply_word, chamber_walk, is_in_chamber, make_root, reflect,
                                      reflection, wall_system)

U = make_lattice([[0, 1], [1, 0]])
P = positive_cone(U, (1, 1))


def test_reflection_example():
    r = make_root(U, (1, -1))
    assert tuple(la.mat_vec(reflection(r), (1, 0))) == (0, 1)
    assert reflect(r, (1, -1)) == (-1, 1)
    assert la.mat_mul(reflection(r), reflection(r)) == la.identity(2)


def test_root_validation():
    with pytest.raises(NotARoot):
        make_root(U, (1, 1))
    with pytest.raises(NonIntegralReflection):
        make_root(make_lattice([[2, 1], [1, -4]]), (0, 1))


def test_walk_examples():
    walls = wall_system(U, [(1, -1)])
    assert chamber_walk((2, 1), walls, P) == ((1, 2), [0])
    assert chamber_walk((1, 2), walls, P) == ((1, 2), [])
    assert chamber_walk((1, 1), walls, P) == ((1, 1), [])
    with pytest.raises(NotInPositiveCone):
        chamber_walk((-2, -1), walls, P)


def test_is_in_chamber_examples():
    walls = wall_system(U, [(1, -1)])
    assert is_in_chamber((1, 1), walls)
    assert not is_in_chamber((1, 0), walls)
    assert is_in_chamber((5, -3), wall_system(U, []))


def test_iteration_cap():
    walls = wall_system(U, [(1, -1)])
    with pytest.raises(WalkDiverged):
        chamber_walk((2, 1), walls, P, iteration_cap=0)
    assert chamber_walk((2, 1), walls, P, iteration_cap=1) == ((1, 2), [0])


lorentz = make_lattice([[2, 0, 0], [0, -2, 0], [0, 0, -2]])


@given(st.lists(st.integers(-3, 3), min_size=3, max_size=3).filter(any))
def test_reflection_is_integral_isometric_involution(v):
    n = inner(lorentz, v, v)
    if n >= 0:
        return
    if any((2 * x) % n for x in (2 * v[0], -2 * v[1], -2 * v[2])):
        with pytest.raises(NonIntegralReflection):
            make_root(lorentz, v)
        return
    r = make_root(lorentz, v)
    m = reflection(r)
    assert is_isometry(lorentz, m)
    assert la.mat_mul(m, m) == la.identity(3)
    assert tuple(la.mat_vec(m, v)) == tuple(-x for x in v)


@given(st.integers(1, 6), st.integers(1, 6), st.integers(0, 6),
       st.lists(st.tuples(st.integers(-3, 3), st.integers(-3, 3)), min_size=1, max_size=6))
def test_walk_properties(a, b, shift, pairs):
    h = (4, 1, 1)  # interior point; roots are chosen with (r, h) > 0 so the walk terminates
    p = positive_cone(lorentz, h)
    roots = []
    for y, z in pairs:
        for x in range(-4, 5):
            v = (x, y, z)
            if any(v) and inner(lorentz, v, v) == -2 and inner(lorentz, v, h) > 0:
                roots.append(v)
                break
    if not roots:
        return
    walls = wall_system(lorentz, roots)
    x = (a + shift + 3, a - b, b - shift)
    if inner(lorentz, x, x) <= 0 or inner(lorentz, x, h) <= 0:
        return
    image, word = chamber_walk(x, walls, p)
    assert is_in_chamber(image, walls)
    assert inner(lorentz, image, image) == inner(lorentz, x, x)
    assert apply_word(walls, word, x) == image
    assert chamber_walk(image, walls, p)[1] == []
