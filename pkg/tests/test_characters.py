from itertools import combinations

import pytest

from cyclicblocks.brauer_tree import exceptional_bundle, star_tree
from cyclicblocks.characters import (
    CharacterConsistencyError,
    b_level_character,
    exceptional_orbits,
    nilpotent_level_character,
    omega_twist,
    t_and_d0,
    xi,
    xi_complement,
    xi_complement_nondivisible,
)
from cyclicblocks.classification import enumerate_trivial_source
from cyclicblocks.characters import character_of
from cyclicblocks.local_reps import CyclicGroupData, EndoPermParams, cap_dim

W = EndoPermParams


def block_params(n):
    pool = tuple(range(1, n))
    return [W(c) for size in range(len(pool) + 1) for c in combinations(pool, size)]


def test_exceptional_orbits_examples():
    small = exceptional_orbits(7, 1, 3)
    assert small.a == 2
    assert small.orbits == ((1, 2, 4), (3, 5, 6))
    assert small.representatives == (1, 3)

    nine = exceptional_orbits(3, 2, 2)
    assert nine.a == 8
    assert nine.orbits == ((1, 8), (2, 7), (3, 6), (4, 5))
    assert nine.representatives == (1, 2, 3, 4)

    trivial = exceptional_orbits(5, 1, 1)
    assert trivial.a == 1
    assert trivial.representatives == (1, 2, 3, 4)


def test_exceptional_orbits_rejects_non_divisor():
    with pytest.raises(ValueError):
        exceptional_orbits(7, 1, 4)


def test_orbit_valuation_is_constant():
    for p, n in ((3, 3), (5, 2), (7, 2), (13, 1)):
        for e in range(1, p):
            if (p - 1) % e:
                continue
            for orbit in exceptional_orbits(p, n, e).orbits:
                vals = set()
                for kappa in orbit:
                    v = 0
                    while kappa % p == 0:
                        kappa //= p
                        v += 1
                    vals.add(v)
                assert len(vals) == 1


def test_t_and_d0_examples():
    assert t_and_d0(W(()), 1) == (-1, 1)
    assert t_and_d0(W(()), 5) == (-1, 1)
    assert t_and_d0(W((1, 3, 4)), 2) == (0, 0)
    assert t_and_d0(W((1, 2, 4)), 4) == (1, 1)


def test_xi_examples():
    kd_like = star_tree(1, 3, 2, W(()), -1)
    part = xi(kd_like, 1)
    assert part.exceptional == (0, 0, 1, 0, 0, 1, 0, 0)  # reps 1..8, ones at 3, 6

    star = star_tree(2, 3, 2, W(()), -1)
    part = xi(star, 1)
    assert part.exceptional == (0, 0, 1, 0)  # reps (1, 2, 3, 4), one at 3
    assert xi(star, 2).exceptional == (0, 0, 0, 0)


def test_xi_complement_examples():
    star = star_tree(2, 3, 2, W(()), -1)
    comp = xi_complement(star, 1)
    assert comp.exceptional == (1, 1, 0, 1)
    assert xi_complement(star, 2).exceptional == (1, 1, 1, 1)
    assert (xi(star, 1) + comp) == exceptional_bundle(star)


def test_xi_count_law_on_grid():
    for p in (3, 5, 7):
        for n in (1, 2, 3):
            g = CyclicGroupData(p, n)
            for e in range(1, p):
                if (p - 1) % e or (p ** n - 1) // e <= 1:
                    continue
                for w in block_params(n):
                    star = star_tree(e, p, n, w, -1)
                    for i in range(1, n + 1):
                        _, d0 = t_and_d0(w, i)
                        dim = cap_dim(w, g, i) * p ** (n - i)
                        assert (dim - d0) % e == 0
                        part = xi(star, i)
                        assert sum(part.exceptional) == (dim - d0) // e
                        assert part.is_zero_one


def test_complement_audit():
    # the non-divisibility assembly matches the true complement exactly for
    # odd t and undershoots by the full bundle for even t
    for p, n in ((3, 2), (3, 3), (5, 2)):
        for e in range(1, p):
            if (p - 1) % e or (p ** n - 1) // e <= 1:
                continue
            for w in block_params(n):
                star = star_tree(e, p, n, w, -1)
                for i in range(1, n + 1):
                    t, _ = t_and_d0(w, i)
                    literal = xi_complement_nondivisible(star, i)
                    comp = xi_complement(star, i).exceptional
                    if t % 2 != 0:
                        assert literal == comp
                    else:
                        assert literal == tuple(c - 1 for c in comp)


def test_nilpotent_level_character_examples():
    assert nilpotent_level_character(W(()), 3, 2, 1).mults == (
        1, 0, 0, 1, 0, 0, 1, 0, 0,
    )
    assert nilpotent_level_character(W((1,)), 3, 2, 2).mults == (
        0, 0, 0, 1, 0, 0, 1, 0, 0,
    )
    assert nilpotent_level_character(W((1,)), 3, 2, 1).mults == (
        1, 0, 0, 1, 0, 0, 1, 0, 0,
    )


def test_b_level_character_examples():
    star = star_tree(2, 3, 2, W(()), -1)
    chi = b_level_character(star, 1, 1)
    assert chi.nonexceptional == (1, 0)
    assert chi.exceptional == (0, 0, 1, 0)
    top = b_level_character(star, 2, 1)
    assert top.nonexceptional == (1, 0)
    assert top.exceptional == (0, 0, 0, 0)

    shifted = star_tree(2, 3, 2, W((1,)), -1)
    chi = b_level_character(shifted, 2, 1)
    assert chi.nonexceptional == (0, 0)
    assert sum(chi.exceptional) == 1


def test_b_level_character_requires_genuine_star():
    wrong = star_tree(2, 3, 2, W(()), 1)
    with pytest.raises(ValueError):
        b_level_character(wrong, 1, 1)


def test_b_level_matches_enumeration_on_star():
    for w in (W(()), W((1,))):
        star = star_tree(2, 3, 2, w, -1)
        for i in (1, 2):
            enumerated = sorted(
                (c.nonexceptional, c.exceptional)
                for c in (
                    character_of(star, i, path)
                    for path in enumerate_trivial_source(star, i)
                )
            )
            expected = sorted(
                (c.nonexceptional, c.exceptional)
                for c in (b_level_character(star, i, x) for x in (1, 2))
            )
            assert enumerated == expected


def test_omega_twist():
    star = star_tree(2, 3, 2, W(()), -1)
    part = xi(star, 1)
    assert omega_twist(part, 2) == part
    assert omega_twist(omega_twist(part, 1), 1) == part
    zero = xi(star, 2)
    assert omega_twist(zero, 1) == exceptional_bundle(star)
    assert omega_twist(part, 1) == xi_complement(star, 1)


def test_omega_twist_rejects_non_01():
    star = star_tree(2, 3, 2, W(()), -1)
    doubled = xi(star, 1) + xi(star, 1)
    with pytest.raises(ValueError):
        omega_twist(doubled, 1)


def test_xi_needs_exceptional_vertex():
    from cyclicblocks.brauer_tree import BlockDescriptor, Edge

    m1 = BlockDescriptor(
        p=3,
        n=1,
        e=2,
        vertices=("A", "B", "C"),
        signs={"A": 1, "B": -1, "C": 1},
        edges=(Edge("E1", ("A", "B")), Edge("E2", ("B", "C"))),
        cyclic_order={"A": ("E1",), "B": ("E1", "E2"), "C": ("E2",)},
        exceptional=None,
        w=W(()),
    )
    with pytest.raises(ValueError):
        xi(m1, 1)
