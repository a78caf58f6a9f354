"""CSS stabilizer codes from combinatorial hypermaps.

Build face, edge, and full-complex codes from a permutation pair, take
the dual / triangle-dual / contrary hypermaps, reduce face codes to
surface-code cell complexes, and machine-check every equivalence between
those constructions.
"""

from .perm import (
    Cycles,
    CycleParseError,
    Permutation,
    as_partition,
    compose,
    connected_components,
    cycle_decomposition,
    format_cycles,
    identity,
    inverse,
    is_transitive,
    parse_cycles,
    random_permutation,
)
from .gf2 import (
    BitMatrix,
    echelon_form,
    from_rows,
    from_strings,
    identity_matrix,
    in_row_space,
    is_zero,
    kernel_basis,
    mat_vec,
    multiply,
    rank,
    render,
    row_reduce,
    to_strings,
    transpose,
    zeros,
)
from .hypermap import (
    PER_EDGE,
    PER_FACE,
    DisconnectedError,
    Hypermap,
    ParseError,
    SpecialDartError,
    SpecialDarts,
    check_nabla_identity,
    contrary,
    default_special_darts,
    dual,
    euler_characteristic,
    format_hypermap,
    genus,
    nabla,
    parse_hypermap,
    random_corpus,
    random_hypermap,
    special_darts,
    triangle_dual,
)
from .chain import (
    EDGE,
    FACE,
    FULL,
    QuotientCode,
    RawComplex,
    edge_code,
    expansion_counts,
    face_code,
    full_code,
    raw_complex,
)
from .css import (
    CommutationError,
    CssCode,
    DistanceResult,
    assemble,
    distance,
    stabilizer_strings,
)
from .reduce import (
    CellComplex,
    CheckResult,
    SurfaceReport,
    reduce_to_surface,
    validate_surface,
)
from .cli import (
    VerificationReport,
    export_json,
    export_walsh_dot,
    parse_json,
    run_verification,
)

__version__ = "0.1.0"
