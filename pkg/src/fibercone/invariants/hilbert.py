"""Hilbert functions, multiplicities and mixed multiplicities.

Every "for large n" quantity is read off a finite difference of an exactly
computed length function and accepted through :func:`stabilize`.

Usage:
    numerator = hilbert_numerator(calc, I)
    numerator.coefficients    # [1, 2, 1] for I = (t^7, t^17, t^33) in k[[S]]
    mixed_multiplicity(calc, I, 1, calc.dimension - 1)
"""

from __future__ import annotations

import logging
import math
from typing import Any

from fibercone.calculus import IdealCalculus
from fibercone.errors import (
    BadDegreesError,
    InvariantViolationError,
    NegativePowerError,
)
from fibercone.invariants.models import (
    HilbertNumerator,
    MixedMultiplicityTable,
    MultiplicityCertificate,
    MultreesPrediction,
    StabilizationPolicy,
    StabilizedValue,
)
from fibercone.invariants.reduction import reduction_number
from fibercone.invariants.stabilization import backward_difference, resolve_policy, stabilize

logger = logging.getLogger(__name__)

Calc = IdealCalculus[Any]


# ============================================================================
# Length functions
# ============================================================================


def hf_fiber(calc: Calc, I: Any, n: int) -> int:
    """HF(F(I), n) = l(I^n/mI^n) = mu(I^n)."""
    if n < 0:
        raise NegativePowerError("Hilbert function needs n >= 0", exponent=n)
    return calc.mu(calc.power(I, n))


def hs_samuel(calc: Calc, I: Any, n: int) -> int:
    """l(R/I^n)."""
    if n < 0:
        raise NegativePowerError("Hilbert-Samuel function needs n >= 0", exponent=n)
    return calc.colength(calc.power(I, n))


def bhattacharya(calc: Calc, I: Any, r: int, s: int) -> int:
    """BF(r, s) = l(R/m^r I^s), built as m * (m^(r-1) I^s) so products are reused."""
    if r < 0 or s < 0:
        raise NegativePowerError("Bhattacharya function needs r, s >= 0", r=r, s=s)
    m = calc.maximal_ideal()
    ideal = calc.power(I, s)
    for _ in range(r):
        ideal = calc.product(m, ideal)
    return calc.colength(ideal)


# ============================================================================
# Multiplicities
# ============================================================================


def f0(calc: Calc, I: Any, policy: StabilizationPolicy | None = None) -> StabilizedValue:
    """Fiber cone multiplicity: the eventual (d-1)-st difference of mu(I^n)."""
    policy = resolve_policy(policy)
    d = calc.dimension
    return stabilize(
        lambda n: backward_difference(lambda k: hf_fiber(calc, I, k), n, d - 1),
        policy,
        start=max(1, d - 1),
        label="f0",
    )


def samuel_multiplicity(
    calc: Calc, I: Any, policy: StabilizationPolicy | None = None
) -> StabilizedValue:
    """e(I) as the eventual d-th difference of l(R/I^n)."""
    policy = resolve_policy(policy)
    d = calc.dimension
    return stabilize(
        lambda n: backward_difference(lambda k: hs_samuel(calc, I, k), n, d),
        policy,
        start=d,
        label="e(I)",
    )


def multiplicity_e(
    calc: Calc,
    I: Any,
    J: Any | None = None,
    policy: StabilizationPolicy | None = None,
) -> MultiplicityCertificate:
    """e(I) through the Samuel function and, when J is given, as colength(J).

    Raises:
        DimensionMismatchError: If mu(J) != d
        NotContainedError: If J is not inside I
        NotAReductionError: If J is not a reduction of I within the budget
    """
    policy = resolve_policy(policy)
    by_samuel = samuel_multiplicity(calc, I, policy)
    by_reduction = None
    if J is not None:
        reduction_number(calc, I, J, policy)
        by_reduction = calc.colength(J)
    certificate = MultiplicityCertificate(
        value=by_reduction if by_reduction is not None else by_samuel.value,
        by_reduction=by_reduction,
        by_samuel=by_samuel,
    )
    if not certificate.routes_agree:
        logger.warning(
            "Multiplicity routes disagree",
            extra={"by_reduction": by_reduction, "by_samuel": by_samuel.value},
        )
    return certificate


def hilbert_numerator(
    calc: Calc, I: Any, policy: StabilizationPolicy | None = None
) -> HilbertNumerator:
    """Coefficients of HS(F(I), t) * (1 - t)^d.

    h_k is the d-th difference of mu(I^k) with mu(I^k) = 0 for k < 0; the list
    ends where h_k vanishes for good.

    Raises:
        StabilizationFailedError: If h_k does not settle at zero
        InvariantViolationError: If h(1) differs from f0
    """
    policy = resolve_policy(policy)
    d = calc.dimension

    def hf(k: int) -> int:
        return hf_fiber(calc, I, k) if k >= 0 else 0

    tail = stabilize(
        lambda k: backward_difference(hf, k, d),
        policy,
        start=0,
        label="Hilbert numerator",
        target=0,
    )
    coefficients = [backward_difference(hf, k, d) for k in range(tail.stabilized_at)]
    multiplicity = f0(calc, I, policy).value
    if sum(coefficients) != multiplicity:
        raise InvariantViolationError(
            "Numerator evaluated at 1 differs from f0",
            numerator=coefficients,
            f0=multiplicity,
        )
    return HilbertNumerator(
        coefficients=coefficients,
        denominator_power=d,
        f0=multiplicity,
        stabilized_at=tail.stabilized_at,
    )


# ============================================================================
# Mixed multiplicities
# ============================================================================


def _grid_difference(bf: Any, n: int, i: int, j: int) -> int:
    """Delta_r^i Delta_s^j of bf at (n, n)."""
    return sum(
        (-1) ** (a + b) * math.comb(i, a) * math.comb(j, b) * bf(n - a, n - b)
        for a in range(i + 1)
        for b in range(j + 1)
    )


def mixed_multiplicity(
    calc: Calc, I: Any, i: int, j: int, policy: StabilizationPolicy | None = None
) -> int:
    """e_(i,j)(m|I) for i + j = d; e_(1,d-1) is e_(d-1)(m|I).

    Raises:
        BadDegreesError: If i or j is negative or i + j != d
    """
    d = calc.dimension
    if i < 0 or j < 0 or i + j != d:
        raise BadDegreesError("Mixed multiplicity degrees must sum to d", i=i, j=j, d=d)
    policy = resolve_policy(policy)
    value = stabilize(
        lambda n: _grid_difference(lambda r, s: bhattacharya(calc, I, r, s), n, i, j),
        policy,
        start=d,
        label=f"e_({i},{j})",
    )
    return value.value


def mixed_multiplicity_table(
    calc: Calc, I: Any, policy: StabilizationPolicy | None = None
) -> MixedMultiplicityTable:
    """Every Bhattacharya coefficient e_(i,j) with i + j <= d.

    Extraction runs top-down: once all coefficients of total degree above k
    are known, their binomial terms are subtracted from BF and the pure
    differences of the residual give the degree-k coefficients.
    """
    policy = resolve_policy(policy)
    d = calc.dimension
    table = MixedMultiplicityTable(dimension=d)

    for k in range(d, -1, -1):
        known = dict(table.entries)

        def residual(r: int, s: int, known: dict[tuple[int, int], int] = known) -> int:
            value = bhattacharya(calc, I, r, s)
            for (a, b), e in known.items():
                value -= e * math.comb(r + a, a) * math.comb(s + b, b)
            return value

        for j in range(k + 1):
            i = k - j
            value = stabilize(
                lambda n, i=i, j=j: _grid_difference(residual, n, i, j),
                policy,
                start=d,
                label=f"e_({i},{j})",
            )
            table.entries[(i, j)] = value.value
            table.stabilized_at[(i, j)] = value.stabilized_at

    logger.debug("Bhattacharya coefficients extracted", extra={"entries": len(table.entries)})
    return table


def multrees_prediction(
    calc: Calc,
    I: Any,
    policy: StabilizationPolicy | None = None,
    *,
    table: MixedMultiplicityTable | None = None,
    observed: HilbertNumerator | None = None,
) -> MultreesPrediction:
    """Numerator sum_j g(j) (1-t)^(d-j-1), exact when BF = BP for all r, s >= 0.

    A mismatch with the observed numerator is a diagnostic, not an error.
    """
    policy = resolve_policy(policy)
    d = calc.dimension
    if table is None:
        table = mixed_multiplicity_table(calc, I, policy)
    if observed is None:
        observed = hilbert_numerator(calc, I, policy)

    g = [sum(i * table.get(i, j) for i in range(1, d - j + 1)) for j in range(d)]
    predicted = [0] * d
    for j, weight in enumerate(g):
        power = d - j - 1
        for a in range(power + 1):
            predicted[a] += weight * (-1) ** a * math.comb(power, a)
    while len(predicted) > 1 and predicted[-1] == 0:
        predicted.pop()

    prediction = MultreesPrediction(g=g, predicted=predicted, observed=observed.coefficients)
    if not prediction.matches:
        logger.info(
            "Bhattacharya prediction differs from the numerator",
            extra={"predicted": predicted, "observed": observed.coefficients},
        )
    return prediction

