"""Finite orthocomplemented lattices, regular equivalences and dimension functions,
with an exact model on the subspaces of Q^n."""
from .builders import (
    decompose_central,
    gen_boolean,
    gen_hexagon,
    gen_horizontal_sum,
    gen_pentagon,
    gen_product,
    gen_two_generator_ortho,
    is_isomorphic,
)
from .dimension import (
    classify_type,
    decompose_minimal_orthogonal,
    dimension_function,
    find_reference,
    is_affine_reference,
    is_irreducible,
    is_type_I,
    min_below,
    minimal_elements,
)
from .equivalence import (
    EquivRelation,
    class_divide,
    enumerate_regular_relations,
    perspectivity,
    verify_regular,
)
from .fileformat import parse_lattice_file, serialize
from .kernels import BACKEND
from .lattice import Lattice, Poset, build_from_covers, validate_complete_lattice
from .modularity import check_distributive, check_modular, find_pentagon
from .ortho import (
    OrthoLattice,
    attach_orthocomplement,
    center,
    check_r_property,
    commutant,
    commutes,
    is_abelian,
    is_factorial,
    reduced_lattice,
    relative_complement,
)
from .subspace import Subspace, SubspaceLattice, s_canonicalize
from .suite import run_property_suite

__version__ = "0.1.0"
