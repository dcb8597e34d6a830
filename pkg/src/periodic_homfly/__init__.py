"""Exact HOMFLYPT polynomials and mod-p obstructions to periodicity of links."""

from .polyring import (
    NotDivisibleError,
    PolyParseError,
    VPoly,
    VZPoly,
    exact_div_vv,
    in_vp_subring,
    parse_poly,
    reduce_mod,
    z_coefficient,
)
from .diagram import (
    BraidWord,
    DiagramError,
    LinkDiagram,
    add_axis_cable,
    braid_closure,
    braid_power,
    format_pd,
    linking_data,
    parse_braid,
    parse_pd,
)
from .homfly import CrossingLimitError, homfly, homfly_coeffs
from .periodic import (
    EquivariantTriple,
    FactorPresentation,
    PeriodicityError,
    make_extended,
    make_torus_extended,
    skein_triple,
    validate_factor,
)
from .criteria import CriterionReport, check_diagram, check_congruences, lowest_coefficient_formula, skein_residual
from .corpus import CorpusRecord, ScanReport, bundled_corpus, cross_check, ingest, scan

__version__ = "0.1.0"
