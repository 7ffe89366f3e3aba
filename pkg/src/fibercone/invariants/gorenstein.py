"""Gorenstein fiber cones.

The verdict comes from the socle of F(I)/JF(I):

    socle = sum over 1 <= n <= r-1 of ((I^(n+1)m + JI^n : I) meet I^n) / (I^n m + JI^(n-1))
            plus I^r / (mI^r + JI^(r-1))

and F(I) is Gorenstein iff it is Cohen-Macaulay with socle length 1. The
reduction-number specific criteria are evaluated alongside and must agree.
"""

from __future__ import annotations

import logging
from typing import Any

from fibercone.calculus import IdealCalculus
from fibercone.errors import BadParametersError, InvariantViolationError
from fibercone.invariants.cohen_macaulay import cm_test, fiber_piece
from fibercone.invariants.hilbert import hilbert_numerator
from fibercone.invariants.models import (
    GorboundReport,
    GorensteinCriterion,
    GorensteinVerdict,
    InvariantCheck,
    StabilizationPolicy,
    WCriterionReport,
)
from fibercone.invariants.reduction import reduction_number, valabrega_valla_certificate
from fibercone.invariants.stabilization import resolve_policy

logger = logging.getLogger(__name__)

Calc = IdealCalculus[Any]


def _socle_pieces(calc: Calc, I: Any, J: Any, r: int) -> list[tuple[int, str | None]]:
    """(length, witness) for each socle summand, bottom pieces first."""
    m = calc.maximal_ideal()
    pieces = []
    for n in range(1, r):
        power = calc.power(I, n)
        target = calc.sum(
            calc.product(m, calc.power(I, n + 1)), calc.product(J, power)
        )
        upper = calc.intersect(calc.colon(target, I), power)
        lower = calc.sum(calc.product(m, power), calc.product(J, calc.power(I, n - 1)))
        pieces.append((calc.length_quotient(upper, lower), calc.witness(upper, lower)))
    top = calc.power(I, r)
    lower = calc.sum(calc.product(m, top), calc.product(J, calc.power(I, r - 1)))
    pieces.append((calc.length_quotient(top, lower), calc.witness(top, lower)))
    return pieces


def socle_decomposition(
    calc: Calc,
    I: Any,
    J: Any,
    policy: StabilizationPolicy | None = None,
    *,
    reduction: int | None = None,
) -> list[int]:
    """Lengths of the r socle summands of F(I)/JF(I).

    Raises:
        BadParametersError: If r = 0 (F(I)/JF(I) is the residue field)
    """
    r = reduction if reduction is not None else reduction_number(calc, I, J, policy)
    if r < 1:
        raise BadParametersError("Socle decomposition needs reduction number >= 1", r=r)
    return [length for length, _ in _socle_pieces(calc, I, J, r)]


def gorenstein_test(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> GorensteinVerdict:
    """Gorenstein verdict from the socle route, cross-checked by the specialized criteria.

    Raises:
        InvariantViolationError: If a specialized criterion contradicts the verdict
    """
    policy = resolve_policy(policy)
    cm = cm_test(calc, I, J, policy)
    r = cm.reduction_number
    if not cm.verdict:
        return GorensteinVerdict(
            verdict=False, criterion=GorensteinCriterion.NOT_COHEN_MACAULAY, reduction_number=r
        )
    if r == 0:
        return GorensteinVerdict(
            verdict=True, criterion=GorensteinCriterion.POLYNOMIAL_RING, reduction_number=0
        )

    pieces = _socle_pieces(calc, I, J, r)
    lengths = [length for length, _ in pieces]
    verdict = sum(lengths) == 1
    witness = next((w for length, w in pieces[:-1] if length), pieces[-1][1])

    d = calc.dimension
    mu = calc.mu(I)
    checks = [
        InvariantCheck(
            name="macaulay_symmetry",
            holds=not verdict or hilbert_numerator(calc, I, policy).is_palindromic,
            detail="Gorenstein implies a palindromic numerator",
        )
    ]
    if r == 1:
        checks.append(
            InvariantCheck(
                name="reduction_one",
                holds=verdict == (mu == d + 1),
                detail=f"mu(I) = {mu}, d + 1 = {d + 1}",
            )
        )
    if r == 2:
        m = calc.maximal_ideal()
        square = calc.power(I, 2)
        colon = calc.intersect(
            calc.colon(calc.sum(calc.product(m, square), calc.product(J, I)), I), I
        )
        colon_ok = calc.equals(colon, calc.sum(calc.product(m, I), J))
        top = calc.length_quotient(
            square, calc.sum(calc.product(m, square), calc.product(J, I))
        )
        checks.append(
            InvariantCheck(
                name="reduction_two",
                holds=verdict == (colon_ok and top == 1),
                detail=f"colon criterion {colon_ok}, l(I^2/(mI^2 + JI)) = {top}",
            )
        )
    if r >= 3:
        excess = calc.length_quotient(calc.power(I, 2), calc.product(J, I))
        if excess == 1:
            checks.append(
                InvariantCheck(
                    name="sally_reduction_three",
                    holds=not verdict or mu == d + 1,
                    detail=f"mu(I) = {mu}",
                )
            )
        piece = fiber_piece(calc, I, J, r - 1)
        checks.append(
            InvariantCheck(
                name="reduction_three",
                holds=not verdict or mu == d + piece,
                detail=f"mu(I) = {mu}, d + l(I^(r-1)/(mI^(r-1) + JI^(r-2))) = {d + piece}",
            )
        )

    failed = [c.name for c in checks if not c.holds]
    if failed:
        raise InvariantViolationError("Gorenstein criteria disagree", failed=failed)
    return GorensteinVerdict(
        verdict=verdict,
        criterion=GorensteinCriterion.SOCLE,
        reduction_number=r,
        socle_lengths=lengths,
        witness=witness,
        checks=checks,
    )


def w_criterion(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> WCriterionReport:
    """Compare W = I meet (mJ : I) with mI + J and report the standing hypotheses.

    The hypotheses are: F(I) Cohen-Macaulay, G(I) Cohen-Macaulay through the
    Valabrega-Valla certificate, l(mI/mJ) = 1 and r = 2. When all hold the
    comparison must agree with :func:`gorenstein_test`.

    Raises:
        InvariantViolationError: If applicable and the comparison disagrees with the verdict
    """
    policy = resolve_policy(policy)
    m = calc.maximal_ideal()
    mj = calc.product(m, J)
    mi = calc.product(m, I)
    W = calc.intersect(I, calc.colon(mj, I))
    reference = calc.sum(mi, J)
    equal = calc.equals(W, reference)
    witness = None
    if not equal:
        witness = calc.witness(W, reference) or calc.witness(reference, W)

    cm = cm_test(calc, I, J, policy)
    vv = valabrega_valla_certificate(calc, I, J, policy, reduction=cm.reduction_number)
    hypotheses = {
        "fiber_cone_cm": cm.verdict,
        "associated_graded_cm": vv.holds,
        "almost_minimal_multiplicity": calc.length_quotient(mi, mj) == 1,
        "reduction_number_two": cm.reduction_number == 2,
    }
    report = WCriterionReport(hypotheses=hypotheses, w_equals=equal, witness=witness)
    if report.applicable:
        report.gorenstein = gorenstein_test(calc, I, J, policy).verdict
        if report.gorenstein != equal:
            raise InvariantViolationError(
                "W criterion disagrees with the socle verdict",
                w_equals=equal,
                gorenstein=report.gorenstein,
            )
    return report


def gorbound_check(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> GorboundReport:
    """l((J:I)/J) against l(R/I) and mu(I) against mu(m) + d.

    The comparisons are asserted only when I has almost minimal
    multiplicity, G(I) is Cohen-Macaulay and F(I) is Gorenstein.

    Raises:
        InvariantViolationError: If the hypotheses hold and a comparison fails
    """
    policy = resolve_policy(policy)
    m = calc.maximal_ideal()
    d = calc.dimension
    colon_length = calc.length_quotient(calc.colon(J, I), J)
    colength = calc.colength(I)
    mu = calc.mu(I)
    bound = calc.mu(m) + d

    almost = calc.length_quotient(calc.product(m, I), calc.product(m, J)) == 1
    hypotheses_hold = (
        almost
        and valabrega_valla_certificate(calc, I, J, policy).holds
        and gorenstein_test(calc, I, J, policy).verdict
    )
    report = GorboundReport(
        colon_length=colon_length,
        colength=colength,
        mu=mu,
        mu_bound=bound,
        hypotheses_hold=hypotheses_hold,
        lengths_equal=colon_length == colength,
        mu_bounded=mu <= bound,
    )
    if hypotheses_hold and not (report.lengths_equal and report.mu_bounded):
        raise InvariantViolationError(
            "Gorenstein bound fails under its hypotheses",
            colon_length=colon_length,
            colength=colength,
            mu=mu,
            mu_bound=bound,
        )
    return report
