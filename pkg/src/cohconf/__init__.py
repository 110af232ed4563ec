"""cohconf: coherent configurations, association schemes, and the parameter
families of configurations with prescribed stratum dimensions.

Core surface:

* exact arithmetic        — exactnum (Rational = fractions.Fraction,
  QuadraticNumber a + b*sqrt(d))
* data model/verification — core (RelationPartition, CoherentConfig,
  verify_coherence, symmetrize, predicates)
* coherent closure        — wl (PairColoring, from_graph, wl_closure)
* spectra                 — spectra (srg_spectrum, basic_feasibility,
  stratum_dimensions, trace_identities, perron_check, complement_params)
* parameter families      — families (wielandt_family, type_I .. type_VIII,
  classify)
* constructions           — constructions (Paley, triangular, Steiner,
  block/line/distance graphs, orbitals)
* file format / CLI       — schemefile, cli

Hot kernels run through a compiled extension when built, with a pure-Python
fallback (see cohconf._kernels; benchmark via ``python -m cohconf.bench``).
"""

from ._kernels import backend_name
from .core import (
    CoherentConfig,
    Graph,
    RelationPartition,
    is_association_scheme,
    is_commutative,
    symmetrize,
    verify_coherence,
)
from .exactnum import QuadraticNumber, Rational, normalize_sqrt, quad_arith, sqrt_exact
from .families import (
    ClassificationMatch,
    EpsilonCertificate,
    FamilyCase,
    FamilyTag,
    NonexistenceVerdict,
    ParameterReport,
    ReportVerdict,
    classify,
    divisibility_lemma_check,
    type_I,
    type_II,
    type_III,
    type_IV,
    type_V_check,
    type_VI_check,
    type_VII,
    type_VII_replay,
    type_VIII_check,
    wielandt_family,
    wielandt_reports,
)
from .schemefile import emit_report, parse_scheme, write_scheme
from .spectra import (
    FeasibilityVerdict,
    MultiplicityPattern,
    SpectralTable,
    SrgParams,
    SrgSpectrum,
    basic_feasibility,
    complement_params,
    perron_check,
    srg_spectrum,
    stratum_dimensions,
    trace_identities,
)
from .wl import PairColoring, from_graph, wl_closure

__version__ = "0.1.0"

__all__ = [
    "CoherentConfig",
    "ClassificationMatch",
    "EpsilonCertificate",
    "FamilyCase",
    "FamilyTag",
    "FeasibilityVerdict",
    "Graph",
    "MultiplicityPattern",
    "NonexistenceVerdict",
    "PairColoring",
    "ParameterReport",
    "QuadraticNumber",
    "Rational",
    "RelationPartition",
    "ReportVerdict",
    "SpectralTable",
    "SrgParams",
    "SrgSpectrum",
    "backend_name",
    "basic_feasibility",
    "classify",
    "complement_params",
    "divisibility_lemma_check",
    "emit_report",
    "from_graph",
    "is_association_scheme",
    "is_commutative",
    "normalize_sqrt",
    "parse_scheme",
    "perron_check",
    "quad_arith",
    "sqrt_exact",
    "srg_spectrum",
    "stratum_dimensions",
    "symmetrize",
    "trace_identities",
    "type_I",
    "type_II",
    "type_III",
    "type_IV",
    "type_V_check",
    "type_VI_check",
    "type_VII",
    "type_VII_replay",
    "type_VIII_check",
    "verify_coherence",
    "wielandt_family",
    "wielandt_reports",
    "wl_closure",
    "write_scheme",
]
