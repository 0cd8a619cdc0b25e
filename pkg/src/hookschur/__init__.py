"""Exact hook Schur function and character computations.

Submodules: ``partitions``, ``polyring``, ``symfun``, ``glchar``,
``superchar``, ``tensorprod``, ``report`` and ``cli``.
"""

from .glchar import (
    GlCharacter,
    NonCharacter,
    branching_gl_sum,
    decompose_character,
    gl_character,
    lr_coefficients,
    mixed_tensor_coefficients,
)
from .partitions import GeneralizedPartition, Partition, SkewShape
from .polyring import HalfSeries, LaurentPoly
from .superchar import (
    AffineWeight,
    Weight,
    affine_character_mn,
    affine_character_nn,
    character,
    h_of,
    integrable_weight,
    odd_reflect_chain,
    q_character,
    verify_duality_symmetry,
    verify_q_identity,
    weight_of,
)
from .symfun import HookTableau, hook_schur_q, hook_schur_skew, hook_schur_tableau, schur, skew_schur
from .tensorprod import TensorDecomposition, tensor_decompose, verify_tensor_against_branching

__version__ = "0.1.0"
