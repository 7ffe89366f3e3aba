"""Fiber cone invariants evaluated through an IdealCalculus."""

from fibercone.invariants.classify import classify
from fibercone.invariants.cohen_macaulay import (
    cm_test,
    fiber_quotient_lengths,
    g1_coefficient,
    sally_suite,
    superficial_limit_check,
)
from fibercone.invariants.gorenstein import (
    gorbound_check,
    gorenstein_test,
    socle_decomposition,
    w_criterion,
)
from fibercone.invariants.hilbert import (
    bhattacharya,
    f0,
    hf_fiber,
    hilbert_numerator,
    hs_samuel,
    mixed_multiplicity,
    mixed_multiplicity_table,
    multiplicity_e,
    multrees_prediction,
)
from fibercone.invariants.models import (
    FiberReport,
    GorensteinCriterion,
    StabilizationPolicy,
    StabilizedValue,
)
from fibercone.invariants.reduction import (
    reduction_number,
    valabrega_valla,
    valabrega_valla_certificate,
)
from fibercone.invariants.report import build_fiber_report
from fibercone.invariants.stabilization import stabilize

__all__ = [
    "FiberReport",
    "GorensteinCriterion",
    "StabilizationPolicy",
    "StabilizedValue",
    "bhattacharya",
    "build_fiber_report",
    "classify",
    "cm_test",
    "f0",
    "fiber_quotient_lengths",
    "g1_coefficient",
    "gorbound_check",
    "gorenstein_test",
    "hf_fiber",
    "hilbert_numerator",
    "hs_samuel",
    "mixed_multiplicity",
    "mixed_multiplicity_table",
    "multiplicity_e",
    "multrees_prediction",
    "reduction_number",
    "sally_suite",
    "socle_decomposition",
    "stabilize",
    "superficial_limit_check",
    "valabrega_valla",
    "valabrega_valla_certificate",
    "w_criterion",
]
