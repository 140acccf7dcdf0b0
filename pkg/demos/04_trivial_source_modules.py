"""Enumerating trivial source modules and their ordinary characters.

For every vertex order p^i the block has exactly e trivial source modules;
each is a typed path on the tree, and its lift's character splits into a
non-exceptional part read off the path and an exceptional part shared by
all non-hook modules with that vertex.
"""

from cyclicblocks.brauer_tree import group_algebra_block, star_tree
from cyclicblocks.characters import character_of, exceptional_orbits, xi
from cyclicblocks.classification import enumerate_projective, enumerate_trivial_source
from cyclicblocks.local_reps import EndoPermParams

star = star_tree(2, 3, 2, EndoPermParams(()), -1)
orbits = exceptional_orbits(3, 2, 2)
print("exceptional orbit representatives:", orbits.representatives)

for i in (1, 2):
    print(f"\nvertex order 3^{i}:")
    for module in enumerate_trivial_source(star, i):
        char = character_of(star, i, module)
        print(
            f"  shape {module.type_tag} case {module.case_tag}"
            f" multiplicity {module.multiplicity}:"
            f" spine {module.spine_vertices},"
            f" character {char.nonexceptional} | {char.exceptional}"
        )

# the shared exceptional part and its orbit representatives
part = xi(star, 1)
reps = [r for r, c in zip(orbits.representatives, part.exceptional) if c]
print("\nshared exceptional part at level 1 sits at representatives:", reps)

# vertex order 1: the projective modules, one per edge
print("\nprojectives:")
for pim in enumerate_projective(star):
    print(f"  edge {pim.edge_id}: {pim.character.nonexceptional} | {pim.character.exceptional}")

# the one-edge block of the cyclic group algebra reproduces the permutation
# characters of the group itself
kd = group_algebra_block(3, 2)
print("\ngroup algebra block:")
for i in (1, 2):
    module = enumerate_trivial_source(kd, i)[0]
    char = character_of(kd, i, module)
    print(f"  vertex order 3^{i}: {char.nonexceptional} | {char.exceptional}")
