"""Exact Lie-algebra computations behind the automorphism groups of smooth Fano threefolds."""

from ._kernels import BACKEND
from .exactmath import Matrix, kernel_basis, minimal_polynomial, rank, rref, semisimple_part
from .fanodb import FanoDB, load
from .lieaction import AlgElement, AmbientAlgebra, act, bracket, sl2_in_sld
from .lieclassify import LieSignature, expected_signature, match, parse_group, signature
from .polyring import Ideal, Polynomial, RingSpec, contains
from .sl2rep import decompose, invariant_vectors, parse_character
from .stabilizer import Subalgebra, joint_stabilizer, stabilizer

__version__ = "0.1.0"
