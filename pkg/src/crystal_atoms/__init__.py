"""Type A crystal combinatorics: Demazure crystals, crystal Demazure atoms,
atomic operators, extremal subsets and tensor products."""

from .crystal import CrystalGraph, CrystalSubset, character, generate, i_strings, levi_branch
from .demazure import (
    E_set,
    F_set,
    atom_decomposition,
    atom_via_difference,
    atom_via_operators,
    atomic_operator,
    demazure_crystal,
    right_key,
    schubert_crystal,
)
from .extremal import (
    e_closure,
    extremal_closure,
    is_extremal,
    is_strongly_atom_positive,
    is_weakly_atom_positive,
    lowest_weight_elements,
)
from .poly import Polynomial, atom_polynomial, expand_in_atoms, key_polynomial
from .tableau import Tableau
from .tensor import TensorCrystal, build_tensor, decompose, demazure_tensor_test
from .weyl import LowerOrderIdeal, WeylElement

__version__ = "0.1.0"
