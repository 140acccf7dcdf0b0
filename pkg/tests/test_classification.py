import pytest

from cyclicblocks.brauer_tree import (
    BlockDescriptor,
    Edge,
    group_algebra_block,
    star_tree,
)
from cyclicblocks.characters import character_of
from cyclicblocks.classification import (
    ClassificationError,
    admissible,
    candidate_paths,
    enumerate_projective,
    enumerate_trivial_source,
    m1_enumerate,
)
from cyclicblocks.local_reps import CyclicGroupData, EndoPermParams, perm_module_character

W = EndoPermParams


def path_block(signs=(1, -1, 1), w=(1,)):
    # A - B - exc, p = 3, n = 2, e = 2
    return BlockDescriptor(
        p=3,
        n=2,
        e=2,
        vertices=("A", "B", "exc"),
        signs={"A": signs[0], "B": signs[1], "exc": signs[2]},
        edges=(Edge("E1", ("A", "B")), Edge("E2", ("B", "exc"))),
        cyclic_order={"A": ("E1",), "B": ("E1", "E2"), "exc": ("E2",)},
        exceptional="exc",
        w=W(w),
    )


def by_type(paths):
    out = {}
    for p in paths:
        out.setdefault(p.type_tag, []).append(p)
    return out


def test_candidate_shapes_on_star():
    star = star_tree(2, 3, 2, W(()), -1)
    shapes = by_type(candidate_paths(star, 1))
    assert len(shapes.get(2, [])) == 2  # one per leaf
    assert len(shapes.get(7, [])) == 2  # ordered consecutive pairs at centre
    for tag in (1, 3, 4, 5, 6):
        assert tag not in shapes


def test_candidate_shapes_on_self_block():
    kd = group_algebra_block(3, 2)
    shapes = by_type(candidate_paths(kd, 1))
    assert len(shapes.get(2, [])) == 1
    assert len(shapes.get(3, [])) == 1
    assert set(shapes) == {2, 3}


def test_hook_candidates_only_at_full_vertex_with_trivial_parameter():
    star = star_tree(2, 3, 2, W(()), -1)
    assert 1 not in by_type(candidate_paths(star, 1))
    assert len(by_type(candidate_paths(star, 2))[1]) == 2
    shifted = star_tree(2, 3, 2, W((1,)), -1)
    assert 1 not in by_type(candidate_paths(shifted, 2))


def test_candidates_on_path_tree_shapes():
    desc = path_block()
    shapes = by_type(candidate_paths(desc, 1))
    assert len(shapes[2]) == 1  # leaf A
    assert len(shapes[3]) == 1  # exceptional vertex is a leaf
    assert len(shapes[4]) == 1 and shapes[4][0].extra_edges == ("E1",)
    assert len(shapes[5]) == 1 and shapes[5][0].extra_edges == ("E1",)
    assert 6 not in shapes  # needs degree >= 3
    assert 7 not in shapes  # exceptional vertex is a leaf


def test_admissible_star_examples():
    star = star_tree(2, 3, 2, W(()), -1)
    two = by_type(candidate_paths(star, 1))[2][0]
    assert admissible(star, 1, two) == ("ii", 2)

    flipped = star_tree(2, 3, 2, W(()), 1)
    seven = by_type(candidate_paths(flipped, 1))[7][0]
    assert admissible(flipped, 1, seven) == ("i", 3)


def test_admissible_type7_needs_matching_divisibility():
    star = star_tree(2, 3, 2, W(()), -1)
    sevens = by_type(candidate_paths(star, 1)).get(7, [])
    assert len(sevens) == 2
    for cand in sevens:
        assert admissible(star, 1, cand) is None


def test_enumerate_star_and_self_block():
    star = star_tree(2, 3, 2, W(()), -1)
    modules = enumerate_trivial_source(star, 1)
    assert [m.type_tag for m in modules] == [2, 2]
    assert {m.spine_vertices[0] for m in modules} == {"v1", "v2"}

    hooks = enumerate_trivial_source(star, 2)
    assert [m.type_tag for m in hooks] == [1, 1]
    assert {m.spine_vertices[0] for m in hooks} == {"v1", "v2"}

    kd = group_algebra_block(3, 2)
    for i in (1, 2):
        assert len(enumerate_trivial_source(kd, i)) == 1


def test_hooks_at_positive_exceptional_vertex_afford_the_bundle():
    flipped = star_tree(2, 3, 2, W(()), 1)
    hooks = enumerate_trivial_source(flipped, 2)
    assert [m.type_tag for m in hooks] == [1, 1]
    assert all(m.spine_vertices == ("exc",) for m in hooks)
    for m in hooks:
        char = character_of(flipped, 2, m)
        assert char.nonexceptional == (0, 0)
        assert char.exceptional == (1, 1, 1, 1)


def test_enumerate_path_tree_both_orientations():
    genuine = path_block(signs=(1, -1, 1))
    assert [m.type_tag for m in enumerate_trivial_source(genuine, 1)] == [2, 3]
    assert [m.type_tag for m in enumerate_trivial_source(genuine, 2)] == [4, 5]

    flipped = path_block(signs=(-1, 1, -1))
    assert [m.type_tag for m in enumerate_trivial_source(flipped, 1)] == [4, 5]


def test_unrealisable_orientation_is_surfaced_not_suppressed():
    # exceptional leaf, negative, with the cap dimension at the full group
    # equal to e: no block realises this, and the enumeration says so
    flipped = path_block(signs=(-1, 1, -1))
    with pytest.raises(ClassificationError) as err:
        enumerate_trivial_source(flipped, 2)
    assert err.value.expected == 2
    assert [m.type_tag for m in err.value.paths] == [2]


def test_enumerated_paths_are_pairwise_distinct():
    star = star_tree(6, 7, 2, W((1,)), -1)
    for i in (1, 2):
        modules = enumerate_trivial_source(star, i)
        assert len(set(modules)) == len(modules)


def test_characters_of_enumerated_modules_are_01():
    for w in (W(()), W((1,))):
        for signs in ((1, -1, 1), (-1, 1, -1)):
            desc = path_block(signs=signs, w=w.indices)
            for i in (1, 2):
                try:
                    modules = enumerate_trivial_source(desc, i)
                except ClassificationError:
                    continue
                for m in modules:
                    assert character_of(desc, i, m).is_zero_one


def test_self_block_closure_small():
    kd = group_algebra_block(3, 2)
    g = CyclicGroupData(3, 2)
    for i in (1, 2):
        module = enumerate_trivial_source(kd, i)[0]
        char = character_of(kd, i, module)
        relabelled = (char.nonexceptional[0],) + char.exceptional
        assert relabelled == perm_module_character(g, i).mults


def test_enumerate_projective():
    star = star_tree(3, 7, 1, W(()), -1)
    pims = enumerate_projective(star)
    assert len(pims) == 3
    for pim in pims:
        assert sum(pim.character.nonexceptional) == 1
        assert pim.character.exceptional == (1,) * star.m

    kd = group_algebra_block(3, 1)
    (pim,) = enumerate_projective(kd)
    assert pim.character.nonexceptional == (1,)
    assert pim.character.exceptional == (1, 1)


def test_m1_enumeration():
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
    result = m1_enumerate(m1)
    assert len(result.pims) == 2
    assert len(result.hooks) == 4
    assert all(h.character.exceptional == () for h in result.hooks)
    with pytest.raises(ValueError):
        m1_enumerate(group_algebra_block(3, 1))
    with pytest.raises(ValueError):
        candidate_paths(m1, 1)


def test_vertex_index_bounds():
    star = star_tree(2, 3, 2, W(()), -1)
    with pytest.raises(ValueError):
        enumerate_trivial_source(star, 0)
    with pytest.raises(ValueError):
        enumerate_trivial_source(star, 3)


def _all_labelled_trees(nv):
    # every labelled tree on nv vertices, decoded from its Pruefer sequence
    from itertools import product

    if nv == 2:
        yield [(0, 1)]
        return
    for seq in product(range(nv), repeat=nv - 2):
        degree = [1] * nv
        for v in seq:
            degree[v] += 1
        pool = sorted(v for v in range(nv) if degree[v] == 1)
        edges = []
        for v in seq:
            leaf = pool.pop(0)
            edges.append((leaf, v))
            degree[v] -= 1
            if degree[v] == 1:
                k = 0
                while k < len(pool) and pool[k] < v:
                    k += 1
                pool.insert(k, v)
        edges.append((pool[0], pool[1]))
        yield edges


def test_exhaustive_small_trees_have_e_modules():
    # every labelled tree on 3 and 5 vertices, every exceptional placement,
    # every planar order at the busiest vertex, both sign orientations and
    # both parameters: the admissible set has size e, except in the single
    # configuration no block realises (negative exceptional leaf with cap
    # dimension e at the full vertex), which must fail loudly with e - 1
    from itertools import permutations

    from cyclicblocks.local_reps import cap_dim

    p, n = 5, 2
    g = CyclicGroupData(p, n)
    for e in (2, 4):
        nv = e + 1
        for pairs in _all_labelled_trees(nv):
            names = [f"v{k}" for k in range(nv)]
            edges = tuple(
                Edge(f"E{k + 1}", (names[a], names[b]))
                for k, (a, b) in enumerate(pairs)
            )
            incident = {
                v: [ed.id for ed in edges if v in ed.ends] for v in names
            }
            hub = max(names, key=lambda v: len(incident[v]))
            for hub_order in permutations(incident[hub]):
                cyclic = {v: tuple(incident[v]) for v in names}
                cyclic[hub] = hub_order
                for exc in names:
                    depth = {exc: 0}
                    stack = [exc]
                    while stack:
                        v = stack.pop()
                        for eid in cyclic[v]:
                            ed = next(x for x in edges if x.id == eid)
                            other = ed.ends[1] if ed.ends[0] == v else ed.ends[0]
                            if other not in depth:
                                depth[other] = depth[v] + 1
                                stack.append(other)
                    for orientation in (1, -1):
                        signs = {
                            v: orientation * (-1) ** (depth[v] % 2) for v in names
                        }
                        for w in (W(()), W((1,))):
                            desc = BlockDescriptor(
                                p=p, n=n, e=e,
                                vertices=tuple(names), signs=signs, edges=edges,
                                cyclic_order=cyclic, exceptional=exc, w=w,
                            )
                            guarded = (
                                len(incident[exc]) == 1
                                and signs[exc] == -1
                                and cap_dim(w, g, n) == e
                            )
                            for i in (1, 2):
                                try:
                                    assert len(enumerate_trivial_source(desc, i)) == e
                                except ClassificationError as err:
                                    assert guarded and i == n
                                    assert len(err.paths) == e - 1
