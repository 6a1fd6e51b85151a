"""yangianpp: exact fixed-point representations of shifted affine Yangians.

Builds the raising/lowering action on 3D plane partitions (Hilbert-scheme
side) and on finite-type pyramid partitions (resolved-conifold side), and
verifies the shifted-Yangian relation suite with exact rational (or prime
field) arithmetic.
"""

from .errors import (
    CapExceeded,
    DenominatorNotCancelled,
    InconsistentShift,
    NotRegular,
    PoleAtPoint,
    Resonance,
    RetrySpecialization,
    SignInconsistent,
    YangianppError,
)
from .exact import Fp, LinForm, Params, TruncSeries, expand, random_params
from .partitions3d import Partition3D, box_weight, enumerate_plane_partitions
from .pyramid import ERC, PyramidPartition, Stone, build_erc, enumerate_pyramids
from .relations import OperatorSet, RelationReport, full_suite, run_suite
from .reps import (
    FixedPointBasis,
    Geometry,
    Representation,
    SparseOperator,
    detect_shift,
    h_rat,
    psi_eigen,
)
from .shuffle import Kernel, SymPoly, shuffle_mul

__all__ = [
    "CapExceeded",
    "DenominatorNotCancelled",
    "ERC",
    "FixedPointBasis",
    "Fp",
    "Geometry",
    "InconsistentShift",
    "Kernel",
    "LinForm",
    "NotRegular",
    "OperatorSet",
    "Params",
    "Partition3D",
    "PoleAtPoint",
    "PyramidPartition",
    "RelationReport",
    "Representation",
    "Resonance",
    "RetrySpecialization",
    "SignInconsistent",
    "SparseOperator",
    "Stone",
    "SymPoly",
    "TruncSeries",
    "YangianppError",
    "box_weight",
    "build_erc",
    "detect_shift",
    "enumerate_plane_partitions",
    "enumerate_pyramids",
    "expand",
    "full_suite",
    "h_rat",
    "psi_eigen",
    "random_params",
    "run_suite",
    "shuffle_mul",
]

__version__ = "0.1.0"
