"""Facial parity edge coloring of 2-edge-connected plane multigraphs."""

from fpec.errors import (
    BoundViolation,
    ContractionError,
    FpecError,
    InstanceTooLargeError,
    InternalCheckError,
    NotBridgelessError,
    NotConnectedError,
    PartialColoringError,
    PlaneMapError,
    SearchBudgetExceeded,
)
from fpec.fpe import FpeResult, compact_palette, fpe_color
from fpec.generators import GenSpec, generate
from fpec.oddcolor import (
    OddColoring,
    exact_odd_chromatic_index,
    find_k_bridges,
    forest_two_color,
    k_bridge_four_color,
    odd_bundle_color,
    odd_color_component,
)
from fpec.planemap import BundledMultigraph, PlaneMap, dumps, parse
from fpec.qfo import QfoColoring, facially_proper_four_color, permute_palette, qfo_color
from fpec.verify import (
    CheckReport,
    check_facially_proper,
    check_fpe,
    check_odd,
    check_quasi_facially_odd,
    exact_chi_fp,
)

__version__ = "0.1.0"
