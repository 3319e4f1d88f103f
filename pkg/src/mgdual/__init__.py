"""Multi-graded Macaulay dual spaces of polynomial ideals over the rationals."""

from .dual import (
    DualTable,
    Functional,
    GradedIdeal,
    closedness_subspace,
    dual_space,
    eval_functional,
    hilbert,
    hilbert_table,
    phi_g,
    phi_i,
    psi_g,
)
from .grading import (
    Grading,
    degree_of,
    in_weight_semigroup,
    lattice_points_below,
    monomials_of_degree,
    sort_lattice_points,
    validate_grading,
)
from .idealops import (
    DualPresentation,
    containment,
    dual_at,
    elements_of_degree,
    ideal_intersection,
    ideal_sum,
    membership,
    multiplicity,
    quotient,
    saturate,
    witness,
)
from .linalg import Subspace, kernel, preimage, rref, subspace_intersect, subspace_sum
from .oracle import oracle_hilbert, oracle_membership, oracle_quotient_hilbert
from .polynomial import Polynomial

__version__ = "0.1.0"
