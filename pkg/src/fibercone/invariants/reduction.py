"""Reduction numbers and the Valabrega-Valla certificate."""

from __future__ import annotations

import logging
from typing import Any

from fibercone.calculus import IdealCalculus
from fibercone.errors import (
    DimensionMismatchError,
    InvariantViolationError,
    NotAReductionError,
    NotContainedError,
)
from fibercone.invariants.models import StabilizationPolicy, VVCertificate
from fibercone.invariants.stabilization import resolve_policy

logger = logging.getLogger(__name__)

Calc = IdealCalculus[Any]


def check_reduction_shape(calc: Calc, I: Any, J: Any) -> None:
    """J must be d-generated and contained in I.

    Raises:
        DimensionMismatchError: If mu(J) != d
        NotContainedError: If J is not inside I
    """
    d = calc.dimension
    if calc.mu(J) != d:
        raise DimensionMismatchError(
            "A minimal reduction needs exactly d generators", mu=calc.mu(J), d=d
        )
    if not calc.subset(J, I):
        raise NotContainedError(
            "Reduction must be contained in the ideal", witness=calc.witness(J, I)
        )


def reduction_number(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> int:
    """Least n with J I^n = I^(n+1).

    Raises:
        DimensionMismatchError: If mu(J) != d
        NotContainedError: If J is not inside I
        NotAReductionError: If no n <= n_max works
        InvariantViolationError: If the equality does not persist to n + 1
    """
    policy = resolve_policy(policy)
    check_reduction_shape(calc, I, J)
    for n in range(policy.n_max + 1):
        if not calc.equals(calc.product(J, calc.power(I, n)), calc.power(I, n + 1)):
            continue
        if not calc.equals(calc.product(J, calc.power(I, n + 1)), calc.power(I, n + 2)):
            raise InvariantViolationError(
                "J I^n = I^(n+1) holds but fails one degree later", degree=n
            )
        logger.debug("Reduction number found", extra={"reduction_number": n})
        return n
    raise NotAReductionError(
        "J is not a reduction of I within the budget", n_max=policy.n_max
    )


def valabrega_valla_certificate(
    calc: Calc,
    I: Any,
    J: Any,
    policy: StabilizationPolicy | None = None,
    *,
    reduction: int | None = None,
) -> VVCertificate:
    """Check I^n meet J = J I^(n-1) for n = 1..r+1 and report the first failure.

    Past r the equality holds automatically because I^n = J I^(n-1).
    """
    r = reduction if reduction is not None else reduction_number(calc, I, J, policy)
    for n in range(1, r + 2):
        left = calc.intersect(calc.power(I, n), J)
        right = calc.product(J, calc.power(I, n - 1))
        if not calc.equals(left, right):
            return VVCertificate(
                holds=False,
                checked_through=n,
                failed_degree=n,
                witness=calc.witness(left, right),
            )
    return VVCertificate(holds=True, checked_through=r + 1)


def valabrega_valla(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> bool:
    """True when G(I) is Cohen-Macaulay by the Valabrega-Valla criterion for J."""
    return valabrega_valla_certificate(calc, I, J, policy).holds
