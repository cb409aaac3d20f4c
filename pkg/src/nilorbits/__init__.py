"""Exact partition calculus for symplectic nilpotent orbits.

Modules:

* ``partitions`` -- partition arithmetic, collapses, expansions, duality;
* ``arthur``     -- formal global parameters and their attached partitions;
* ``roots``      -- type-C roots, torus gradings, signed permutations;
* ``spmatrix``   -- exact matrices in Sp for the antidiagonal form;
* ``exchange``   -- root-exchange sequences and their mechanical verifier;
* ``exponents``  -- cuspidal exponents, constant-term and descent tables;
* ``corpus``     -- the golden reproduction corpus;
* ``cli``        -- the command line front end.
"""

from .errors import InvariantBreach, ValidationError
from .partitions import (
    Order,
    Partition,
    PartitionClass,
    barbasch_vogan_dual,
    classify,
    compose_descent,
    decrement_tail,
    dominance_compare,
    enumerate_partitions,
    format_partition,
    lex_compare,
    normalize,
    parse_partition,
    sp_expansion,
    special_sp_collapse,
    symplectic_collapse,
    transpose,
)

__all__ = [
    "InvariantBreach",
    "Order",
    "Partition",
    "PartitionClass",
    "ValidationError",
    "barbasch_vogan_dual",
    "classify",
    "compose_descent",
    "decrement_tail",
    "dominance_compare",
    "enumerate_partitions",
    "format_partition",
    "lex_compare",
    "normalize",
    "parse_partition",
    "sp_expansion",
    "special_sp_collapse",
    "symplectic_collapse",
    "transpose",
]
