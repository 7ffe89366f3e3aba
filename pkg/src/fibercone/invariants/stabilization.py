"""Eventual values of integer sequences and finite differences."""

from __future__ import annotations

import logging
import math
from collections.abc import Callable

from fibercone.config import settings
from fibercone.errors import StabilizationFailedError
from fibercone.invariants.models import StabilizationPolicy, StabilizedValue

logger = logging.getLogger(__name__)

Sequence = Callable[[int], int]


def resolve_policy(policy: StabilizationPolicy | None) -> StabilizationPolicy:
    """Given policy, or the one configured in settings."""
    return policy if policy is not None else settings.policy()


def stabilize(
    sequence: Sequence,
    policy: StabilizationPolicy,
    *,
    start: int,
    label: str,
    target: int | None = None,
) -> StabilizedValue:
    """Accept the first value constant over a window and confirmed at two more indices.

    Args:
        sequence: Integer sequence, evaluated at most once per index
        policy: Window and budget
        start: First index evaluated
        label: Name used in logs and errors
        target: When given, only a run of this value is accepted

    Returns:
        The accepted value with the index where its run began

    Raises:
        StabilizationFailedError: If no run is accepted within n_max
    """
    seen: dict[int, int] = {}

    def at(n: int) -> int:
        if n not in seen:
            seen[n] = sequence(n)
        return seen[n]

    run_value: int | None = None
    run_start = start
    for n in range(start, policy.n_max + 1):
        value = at(n)
        if value != run_value:
            run_value, run_start = value, n
        if n - run_start + 1 < policy.window:
            continue
        if target is not None and value != target:
            continue
        through = n + 2
        if through > policy.n_max:
            break
        if at(n + 1) == value and at(n + 2) == value:
            logger.debug(
                f"{label} stabilized",
                extra={"value": value, "stabilized_at": run_start, "verified_through": through},
            )
            return StabilizedValue(value=value, stabilized_at=run_start, verified_through=through)

    raise StabilizationFailedError(
        f"{label} did not stabilize",
        n_max=policy.n_max,
        window=policy.window,
        last_values=[seen[k] for k in sorted(seen)[-policy.window :]],
    )


def backward_difference(f: Sequence, n: int, order: int) -> int:
    """Delta^order f(n) with Delta f(n) = f(n) - f(n-1)."""
    return sum((-1) ** a * math.comb(order, a) * f(n - a) for a in range(order + 1))
