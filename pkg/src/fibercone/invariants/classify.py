"""Ideal classes of Sally, Goto and mixed-multiplicity type, with their identities."""

from __future__ import annotations

import logging
from typing import Any

from fibercone.calculus import IdealCalculus
from fibercone.errors import InvariantViolationError
from fibercone.invariants.cohen_macaulay import cm_test, fiber_piece
from fibercone.invariants.hilbert import mixed_multiplicity, multiplicity_e
from fibercone.invariants.models import ClassifyReport, InvariantCheck, StabilizationPolicy
from fibercone.invariants.stabilization import resolve_policy

logger = logging.getLogger(__name__)


def classify(
    calc: IdealCalculus[Any], I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> ClassifyReport:
    """Flags for (I, J) plus every identity that must hold between the numbers.

    Raises:
        InvariantViolationError: If an identity fails
    """
    policy = resolve_policy(policy)
    d = calc.dimension
    m = calc.maximal_ideal()

    e = multiplicity_e(calc, I, J, policy)
    cm = cm_test(calc, I, J, policy)
    r = cm.reduction_number
    mu = calc.mu(I)
    colength = calc.colength(I)
    e_top = mixed_multiplicity(calc, I, 1, d - 1, policy)
    length_i2_ji = calc.length_quotient(calc.power(I, 2), calc.product(J, I))
    length_mi_mj = calc.length_quotient(calc.product(m, I), calc.product(m, J))

    min_mixed = e_top == mu - d + 1
    almost_min_mixed = e_top == mu - d + 2
    checks = [
        InvariantCheck(
            name="route_agreement",
            holds=e.routes_agree,
            detail=f"colength(J) = {e.by_reduction}, Samuel route = {e.by_samuel.value}",
        ),
        InvariantCheck(
            name="chuai_bound",
            holds=e.value >= mu - d + colength,
            detail=f"e(I) = {e.value} >= mu(I) - d + l(R/I) = {mu - d + colength}",
        ),
        InvariantCheck(
            name="goto_identity",
            holds=length_mi_mj == e.value - mu + d - colength,
            detail=f"l(mI/mJ) = {length_mi_mj}, e - mu + d - l(R/I) = "
            f"{e.value - mu + d - colength}",
        ),
        InvariantCheck(
            name="mixed_lower_bound",
            holds=e_top >= mu - d + 1,
            detail=f"e_(d-1)(m|I) = {e_top} >= mu(I) - d + 1 = {mu - d + 1}",
        ),
    ]
    if min_mixed:
        checks.append(
            InvariantCheck(
                name="minimal_mixed_cm",
                holds=cm.verdict == (r <= 1),
                detail=f"cm = {cm.verdict}, r = {r}",
            )
        )
    if almost_min_mixed:
        checks.append(
            InvariantCheck(
                name="almost_minimal_mixed_dichotomy",
                holds=cm.f0 in (e_top, e_top - 1),
                detail=f"f0 = {cm.f0}, e_(d-1)(m|I) = {e_top}",
            )
        )
        if cm.f0 == e_top:
            piece = fiber_piece(calc, I, J, 2)
            checks.append(
                InvariantCheck(
                    name="almost_minimal_mixed_cm",
                    holds=cm.verdict == (r == 2 and piece == 1),
                    detail=f"cm = {cm.verdict}, r = {r}, l(I^2/(JI + mI^2)) = {piece}",
                )
            )
        elif cm.f0 == e_top - 1:
            checks.append(
                InvariantCheck(
                    name="almost_minimal_mixed_cm",
                    holds=cm.verdict == (r <= 1),
                    detail=f"cm = {cm.verdict}, r = {r}",
                )
            )

    report = ClassifyReport(
        sally=length_i2_ji == 1,
        goto_min_mult=calc.equals(calc.product(m, I), calc.product(m, J)),
        goto_almost_min_mult=length_mi_mj == 1,
        min_mixed=min_mixed,
        almost_min_mixed=almost_min_mixed,
        mu=mu,
        colength=colength,
        e=e.value,
        e_top=e_top,
        f0=cm.f0,
        reduction_number=r,
        length_i2_ji=length_i2_ji,
        length_mi_mj=length_mi_mj,
        checks=checks,
    )
    failed = [c for c in checks if not c.holds]
    if failed:
        raise InvariantViolationError(
            "Classification identities fail",
            failed=[c.name for c in failed],
            details=[c.detail for c in failed],
        )
    logger.debug(
        "Classified ideal",
        extra={"sally": report.sally, "min_mixed": min_mixed, "reduction_number": r},
    )
    return report
