import logging

from PyCayley_Cohomology._linalg import RationalMatrix, rank, kernel_basis, image_basis
from PyCayley_Cohomology._complex import (
    BettiTable,
    CochainComplex,
    ChainMap,
    DoubleComplex,
    cohomology,
    shift,
    cone,
    totalize,
    is_quasi_iso,
)
from PyCayley_Cohomology._simplicial import (
    SimplicialComplex,
    Subcomplex,
    OpenModel,
    closure,
    barycentric_subdivision,
    full_subcomplex,
    open_model,
    cochain_complex,
    restriction_map,
    relative_cochain_complex,
)
from PyCayley_Cohomology._resolution import SpacePairInstance, intersection_level, resolution_double_complex, verify_resolution
from PyCayley_Cohomology._cover import (
    CoverInstance,
    carrier_for_blocks,
    deepest_intersection,
    pseudo_mv_double_complex,
    comparison_map,
    verify_final,
    verify_theorem,
)
from PyCayley_Cohomology._rewriter import (
    CoverTerm,
    FormalComplex,
    RewriteStep,
    RewriteTrace,
    initial_complex,
    mv_step,
    reduce,
    realize,
    verify_trace,
)
from PyCayley_Cohomology._grassmann import PluckerIndex, PluckerMonomialSection, plucker_sections, rank_one_check
from PyCayley_Cohomology._instances import (
    InstanceFile,
    parse_instance,
    load_instance,
    dump_instance,
    generate_random,
    generate_suite_instance,
)
from PyCayley_Cohomology._report import Report, Status
from PyCayley_Cohomology._formatter import JsonReportFormatter, TableReportFormatter
from PyCayley_Cohomology._formatter.abstract import AbstractReportFormatter
from PyCayley_Cohomology._suite import SuiteResult, run_suite


logging.getLogger(__name__).addHandler(logging.NullHandler())


__all__ = [
    "RationalMatrix",
    "rank",
    "kernel_basis",
    "image_basis",
    "BettiTable",
    "CochainComplex",
    "ChainMap",
    "DoubleComplex",
    "cohomology",
    "shift",
    "cone",
    "totalize",
    "is_quasi_iso",
    "SimplicialComplex",
    "Subcomplex",
    "OpenModel",
    "closure",
    "barycentric_subdivision",
    "full_subcomplex",
    "open_model",
    "cochain_complex",
    "restriction_map",
    "relative_cochain_complex",
    "SpacePairInstance",
    "intersection_level",
    "resolution_double_complex",
    "verify_resolution",
    "CoverInstance",
    "carrier_for_blocks",
    "deepest_intersection",
    "pseudo_mv_double_complex",
    "comparison_map",
    "verify_final",
    "verify_theorem",
    "CoverTerm",
    "FormalComplex",
    "RewriteStep",
    "RewriteTrace",
    "initial_complex",
    "mv_step",
    "reduce",
    "realize",
    "verify_trace",
    "PluckerIndex",
    "PluckerMonomialSection",
    "plucker_sections",
    "rank_one_check",
    "InstanceFile",
    "parse_instance",
    "load_instance",
    "dump_instance",
    "generate_random",
    "generate_suite_instance",
    "Report",
    "Status",
    "AbstractReportFormatter",
    "JsonReportFormatter",
    "TableReportFormatter",
    "SuiteResult",
    "run_suite",
]
