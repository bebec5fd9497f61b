"""Exact computations with type-A noncrossing partitions, fully commutative elements and Temperley-Lieb bases."""
from .braid import BraidWord, lift_standard_form
from .coxeter import StandardCoxeterElement, enumerate_std, from_cycle, from_left_set, from_word, linear_coxeter
from .fc import FullyCommutative, enumerate_fc, normal_form, phi
from .laurent import LaurentPolynomial
from .nc import NoncrossingPartition, SequencePair, enumerate_nc, involution, psi1, psi2
from .perm import Permutation
from .stdform import extract_w, linear_extension, standard_form, vertical_vector
from .tl import TemperleyLieb, TLElement, base_change, check_triangular, omega

__version__ = "0.1.0"

__all__ = [
    "BraidWord",
    "FullyCommutative",
    "LaurentPolynomial",
    "NoncrossingPartition",
    "Permutation",
    "SequencePair",
    "StandardCoxeterElement",
    "TLElement",
    "TemperleyLieb",
    "base_change",
    "check_triangular",
    "enumerate_fc",
    "enumerate_nc",
    "enumerate_std",
    "extract_w",
    "from_cycle",
    "from_left_set",
    "from_word",
    "involution",
    "lift_standard_form",
    "linear_coxeter",
    "linear_extension",
    "normal_form",
    "omega",
    "phi",
    "psi1",
    "psi2",
    "standard_form",
    "vertical_vector",
]
