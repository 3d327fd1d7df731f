"""Reed-Muller-Fourier spectra of p-valued logic functions, with
compact representations for rotation-symmetric and symmetric functions.

The transform is exact mod-p integer arithmetic (p >= 2, prime or
not), self-inverse, and Kronecker structured; the hot kernel is a
compiled extension when available, with an identical pure-Python
fallback (see kernel_backend()).
"""

from ._backend import kernel_backend
from .basis import (
    SpectrumBasis,
    basis_from_json,
    basis_to_json,
    build_basis,
    compact_spectrum,
    load_or_build_basis,
    sum_and_classify,
)
from .domain import (
    ValueVector,
    assignment_of,
    index_of,
    map_rows,
    parse_value_vector,
    parse_values,
    serialize_value_vector,
    serialize_values,
    value_vector_from_json,
    value_vector_to_json,
)
from .errors import (
    DomainError,
    MatrixSizeError,
    NotCompressibleError,
    ParseError,
    RmfError,
    UnsupportedArityError,
)
from .orbits import (
    FULL_SYMMETRIC,
    ROTATION,
    CompactVector,
    Orbit,
    OrbitTable,
    SymmetryClass,
    build_orbit_table,
    build_symmetric_table,
    classify,
    compress,
    elementary_function,
    expand,
    kappa,
    orbit_count,
    orbit_of,
    rotate,
)
from .transform import (
    DENSE_SIZE_CAP,
    ArgPermutation,
    RmfMatrix,
    apply_arg_permutation,
    basic_matrix,
    rmf_transform,
    transform_matrix,
)

__version__ = "0.1.0"

__all__ = [
    "ArgPermutation",
    "CompactVector",
    "DENSE_SIZE_CAP",
    "DomainError",
    "FULL_SYMMETRIC",
    "MatrixSizeError",
    "NotCompressibleError",
    "Orbit",
    "OrbitTable",
    "ParseError",
    "ROTATION",
    "RmfError",
    "RmfMatrix",
    "SpectrumBasis",
    "SymmetryClass",
    "UnsupportedArityError",
    "ValueVector",
    "apply_arg_permutation",
    "assignment_of",
    "basic_matrix",
    "basis_from_json",
    "basis_to_json",
    "build_basis",
    "build_orbit_table",
    "build_symmetric_table",
    "classify",
    "compact_spectrum",
    "compress",
    "elementary_function",
    "expand",
    "index_of",
    "kappa",
    "kernel_backend",
    "load_or_build_basis",
    "map_rows",
    "orbit_count",
    "orbit_of",
    "parse_value_vector",
    "parse_values",
    "rmf_transform",
    "rotate",
    "serialize_value_vector",
    "serialize_values",
    "sum_and_classify",
    "transform_matrix",
    "value_vector_from_json",
    "value_vector_to_json",
]
