"""Assemble every invariant of (I, J) into a FiberReport."""

from __future__ import annotations

import logging
from typing import Any

from fibercone.calculus import IdealCalculus
from fibercone.errors import InvariantViolationError
from fibercone.invariants.classify import classify
from fibercone.invariants.cohen_macaulay import cm_test
from fibercone.invariants.gorenstein import gorbound_check, gorenstein_test, w_criterion
from fibercone.invariants.hilbert import hilbert_numerator, mixed_multiplicity, multiplicity_e
from fibercone.invariants.models import FiberReport, StabilizationPolicy
from fibercone.invariants.reduction import valabrega_valla_certificate
from fibercone.invariants.stabilization import resolve_policy

logger = logging.getLogger(__name__)


def build_fiber_report(
    calc: IdealCalculus[Any], I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> FiberReport:
    """Compute the full report for I with minimal reduction J.

    Raises:
        InvariantViolationError: If the assembled numbers contradict each other
    """
    policy = resolve_policy(policy)
    d = calc.dimension
    logger.info("Building fiber report", extra={"dimension": d})

    cm = cm_test(calc, I, J, policy)
    numerator = hilbert_numerator(calc, I, policy)
    report = FiberReport(
        dimension=d,
        mu=calc.mu(I),
        colength=calc.colength(I),
        e=multiplicity_e(calc, I, J, policy),
        f0=numerator.f0,
        mixed=[mixed_multiplicity(calc, I, d - j, j, policy) for j in range(d + 1)],
        reduction_number=cm.reduction_number,
        h_lengths=cm.lengths,
        numerator=numerator,
        flags=classify(calc, I, J, policy),
        vv=valabrega_valla_certificate(calc, I, J, policy, reduction=cm.reduction_number),
        cm=cm,
        gorenstein=gorenstein_test(calc, I, J, policy),
        w=w_criterion(calc, I, J, policy),
        gorbound=gorbound_check(calc, I, J, policy),
    )

    if sum(report.numerator.coefficients) != report.f0:
        raise InvariantViolationError("Numerator does not sum to f0", f0=report.f0)
    if cm.verdict:
        last = max(n for n, length in enumerate(cm.lengths) if length)
        if last != cm.reduction_number:
            raise InvariantViolationError(
                "Reduction number differs from the top nonzero fiber length",
                reduction_number=cm.reduction_number,
                lengths=cm.lengths,
            )
    return report
