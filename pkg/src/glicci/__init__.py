"""Stanley-Reisner combinatorics and squarefree Gorenstein liaison.

The top-level namespace re-exports the everyday entry points; the
submodules hold the rest.
"""

from .complex import SimplicialComplex, load_complex, parse_complex
from .errors import GlicciError
from .fields import GF2, GF3, QQ, FieldSpec
from .homology import BettiTable, depth_report, hilbert_series, hochster_betti, is_level, reduced_homology
from .ideal import (
    SquarefreeMonomialIdeal,
    bdl_compose,
    colon_by_variable,
    complex_of_ideal,
    stanley_reisner_ideal,
    variable_free_part,
)
from .liaison import (
    GlicciCertificate,
    build_glicci_certificate,
    certificate_length_stats,
    verify_glicci_certificate,
)
from .recognizers import (
    PropertyVerdict,
    is_2cm,
    is_cohen_macaulay,
    is_extendably_shellable,
    is_gorenstein,
    is_matroid,
    is_shellable,
    is_shifted,
    is_vertex_decomposable,
    is_weakly_vertex_decomposable,
)
from .stanley import (
    StanleyDecomposition,
    depth_vs_sdepth,
    is_partitionable,
    partition_from_shelling,
    sdepth,
    sdepth_of,
    stanley_decomposition_2cm_codim3,
    stanley_decomposition_codim2,
    verify_decomposition,
)

__version__ = "0.1.0"
