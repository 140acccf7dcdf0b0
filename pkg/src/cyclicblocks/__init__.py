"""Trivial source characters in p-blocks with cyclic defect groups.

Given a block descriptor (odd prime p, defect exponent n, inertial index e,
Brauer tree with planar embedding and vertex signs, endo-permutation
parameter of the source algebra), this package enumerates the trivial
source modules of the block per vertex and computes the ordinary character
of each module's trivial source lift, with independent brute-force oracles
for every closed form it uses.
"""

from .brauer_tree import (
    BlockCharacter,
    BlockDescriptor,
    Edge,
    group_algebra_block,
    hook_characters,
    pim_character,
    star_tree,
    successor,
    validate,
)
from .characters import (
    OrbitStructure,
    b_level_character,
    character_of,
    exceptional_orbits,
    nilpotent_level_character,
    omega_twist,
    t_and_d0,
    xi,
    xi_complement,
)
from .classification import (
    ClassificationError,
    PathDescriptor,
    candidate_paths,
    enumerate_projective,
    enumerate_trivial_source,
    m1_enumerate,
)
from .cyclotomic import (
    ClassFunction,
    CyclicCharacter,
    CyclotomicInteger,
    decompose,
    inner_product,
    lambda_character,
    reduce_canonical,
    zeta_power,
)
from .local_reps import (
    CyclicGroupData,
    EndoPermParams,
    IndecomposableModule,
    cap_dim,
    cap_dim_recursive,
    char_det1_endoperm,
    heller_relative,
    induce_character,
    morita_correspondent_character,
    perm_module_character,
    restricted_cap_params,
    u_module_dimension,
)
from .oracle import (
    ConsistencyReport,
    GridSpec,
    consistency_suite,
    det1_char_by_recursion,
    perm_character_by_fixed_points,
    random_corpus,
)

__all__ = [
    "BlockCharacter",
    "BlockDescriptor",
    "ClassFunction",
    "ClassificationError",
    "ConsistencyReport",
    "CyclicCharacter",
    "CyclicGroupData",
    "CyclotomicInteger",
    "Edge",
    "EndoPermParams",
    "GridSpec",
    "IndecomposableModule",
    "OrbitStructure",
    "PathDescriptor",
    "b_level_character",
    "candidate_paths",
    "cap_dim",
    "cap_dim_recursive",
    "char_det1_endoperm",
    "character_of",
    "consistency_suite",
    "decompose",
    "det1_char_by_recursion",
    "enumerate_projective",
    "enumerate_trivial_source",
    "exceptional_orbits",
    "group_algebra_block",
    "heller_relative",
    "hook_characters",
    "induce_character",
    "inner_product",
    "lambda_character",
    "m1_enumerate",
    "morita_correspondent_character",
    "nilpotent_level_character",
    "omega_twist",
    "perm_character_by_fixed_points",
    "perm_module_character",
    "pim_character",
    "random_corpus",
    "reduce_canonical",
    "restricted_cap_params",
    "star_tree",
    "successor",
    "t_and_d0",
    "u_module_dimension",
    "validate",
    "xi",
    "xi_complement",
    "zeta_power",
]
