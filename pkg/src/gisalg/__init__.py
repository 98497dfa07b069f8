"""Graph inverse semigroups over finite directed multigraphs.

Elements are pairs of coinitial paths plus a zero.  The package builds the
semigroup from a graph description, does the arithmetic, classifies closed
inverse subsemigroups, decides conjugacy between them, and counts cosets,
with a brute-force bounded oracle for cross-checking.  Hot kernels run from
a compiled extension when available and from a pure Python twin otherwise;
``BACKEND`` names the one in use and the ``GISALG_PURE`` environment
variable forces the fallback.
"""

from gisalg._backend import BACKEND
from gisalg.conjugacy import are_conjugate, conjugator
from gisalg.cosets import (
    Coset,
    coset_elements_bounded,
    coset_of,
    coset_representatives,
    index,
    index_verdict,
    same_coset,
)
from gisalg.elements import (
    ZERO,
    Element,
    element_key,
    enumerate_elements,
    idempotent,
    inverse,
    multiply,
    natural_leq,
    parse_element,
    top,
    up_set,
)
from gisalg.errors import (
    CompositionError,
    ConstructionError,
    GisalgError,
    InfiniteIndexError,
    NotACosetError,
    ParseError,
    UnknownVertexError,
    WrongKindError,
    ZeroUpSetError,
)
from gisalg.fixtures import FIXTURE_PATTERNS, bouquet, chain, fixture, loop1, loopx, loopxf
from gisalg.graphs import (
    INFINITE,
    Count,
    Graph,
    Path,
    check_escape_witness,
    circuit_shift,
    concat,
    count_N,
    count_paths_from,
    find_escape_circuit,
    is_circuit,
    is_suffix,
    iter_paths,
    parse_graph,
    parse_path,
    path_literal,
    paths_conjugate,
    power,
    primitive_root,
    rotate_circuit,
    strip_common_prefix,
    suffix_comparable,
    suffixes,
)
from gisalg.oracle import (
    BoundedUniverse,
    closure_saturate,
    idem_left,
    index_profile,
)
from gisalg.subsemigroups import (
    IMPROPER,
    ClosedInverseSubsemigroup,
    CycleType,
    FiniteChain,
    Improper,
    InfiniteChain,
    bounded_elements,
    classify,
    generated,
    make,
    membership,
    min_idempotent,
    parse_subsemigroup,
    root,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "BoundedUniverse",
    "ClosedInverseSubsemigroup",
    "CompositionError",
    "ConstructionError",
    "Coset",
    "Count",
    "CycleType",
    "Element",
    "FIXTURE_PATTERNS",
    "FiniteChain",
    "GisalgError",
    "Graph",
    "IMPROPER",
    "INFINITE",
    "Improper",
    "InfiniteChain",
    "InfiniteIndexError",
    "NotACosetError",
    "ParseError",
    "Path",
    "UnknownVertexError",
    "WrongKindError",
    "ZERO",
    "ZeroUpSetError",
    "are_conjugate",
    "bouquet",
    "bounded_elements",
    "chain",
    "check_escape_witness",
    "circuit_shift",
    "classify",
    "closure_saturate",
    "concat",
    "conjugator",
    "coset_elements_bounded",
    "coset_of",
    "coset_representatives",
    "count_N",
    "count_paths_from",
    "element_key",
    "enumerate_elements",
    "find_escape_circuit",
    "fixture",
    "generated",
    "idem_left",
    "idempotent",
    "index",
    "index_profile",
    "index_verdict",
    "inverse",
    "is_circuit",
    "is_suffix",
    "iter_paths",
    "loop1",
    "loopx",
    "loopxf",
    "make",
    "membership",
    "min_idempotent",
    "multiply",
    "natural_leq",
    "parse_element",
    "parse_graph",
    "parse_path",
    "parse_subsemigroup",
    "path_literal",
    "paths_conjugate",
    "power",
    "primitive_root",
    "root",
    "rotate_circuit",
    "same_coset",
    "strip_common_prefix",
    "suffix_comparable",
    "suffixes",
    "top",
    "up_set",
    "__version__",
]
