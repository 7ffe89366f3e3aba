"""Cohen-Macaulay criteria for fiber cones.

F(I) is Cohen-Macaulay iff f0(I) = l(F(I)/JF(I)), and l(F(I)/JF(I)) is the
sum of l(I^n/(mI^n + JI^(n-1))) over n = 0..r. The Sally suite, the g1
coefficient and the superficial limit formula are further consequences
evaluated against the same data.
"""

from __future__ import annotations

import logging
from collections.abc import Sequence
from typing import Any

from fibercone.calculus import IdealCalculus
from fibercone.errors import (
    BadParametersError,
    DimensionMismatchError,
    InvariantViolationError,
    NotContainedError,
    NotSallyError,
)
from fibercone.invariants.hilbert import (
    hf_fiber,
    hilbert_numerator,
    mixed_multiplicity,
    multiplicity_e,
)
from fibercone.invariants.models import (
    CMCertificate,
    G1Report,
    SallyReport,
    StabilizationPolicy,
    SuperficialReport,
)
from fibercone.invariants.reduction import reduction_number
from fibercone.invariants.stabilization import resolve_policy, stabilize

logger = logging.getLogger(__name__)

Calc = IdealCalculus[Any]


def fiber_piece(calc: Calc, I: Any, J: Any, n: int) -> int:
    """l(I^n/(mI^n + JI^(n-1))), the degree-n length of F(I)/JF(I)."""
    if n == 0:
        return 1
    top = calc.power(I, n)
    bottom = calc.sum(
        calc.product(calc.maximal_ideal(), top),
        calc.product(J, calc.power(I, n - 1)),
    )
    return calc.length_quotient(top, bottom)


def fiber_quotient_lengths(
    calc: Calc,
    I: Any,
    J: Any,
    policy: StabilizationPolicy | None = None,
    *,
    reduction: int | None = None,
) -> list[int]:
    """[1, mu(I) - d, l(I^2/(mI^2 + JI)), ...] up to n = r."""
    r = reduction if reduction is not None else reduction_number(calc, I, J, policy)
    return [fiber_piece(calc, I, J, n) for n in range(r + 1)]


def cm_test(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> CMCertificate:
    """Compare f0 with l(F(I)/JF(I)).

    When F(I) is Cohen-Macaulay the numerator must coincide with the list of
    fiber lengths term by term.

    Raises:
        InvariantViolationError: If the verdict is true but the numerator differs
    """
    policy = resolve_policy(policy)
    r = reduction_number(calc, I, J, policy)
    lengths = fiber_quotient_lengths(calc, I, J, policy, reduction=r)
    numerator = hilbert_numerator(calc, I, policy)
    certificate = CMCertificate(
        verdict=numerator.f0 == sum(lengths),
        f0=numerator.f0,
        colength_fiber=sum(lengths),
        lengths=lengths,
        reduction_number=r,
    )
    if certificate.verdict and numerator.coefficients != lengths:
        raise InvariantViolationError(
            "Cohen-Macaulay fiber cone with numerator different from the fiber lengths",
            numerator=numerator.coefficients,
            lengths=lengths,
        )
    logger.debug(
        "Cohen-Macaulay test",
        extra={"verdict": certificate.verdict, "f0": certificate.f0, "lengths": lengths},
    )
    return certificate


def sally_suite(
    calc: Calc, I: Any, J: Any, policy: StabilizationPolicy | None = None
) -> SallyReport:
    """Evaluate the conditions equivalent for a Sally ideal, each on its own.

    Raises:
        NotSallyError: If l(I^2/JI) != 1
        InvariantViolationError: If the conditions do not agree
    """
    policy = resolve_policy(policy)
    square = calc.power(I, 2)
    ji = calc.product(J, I)
    excess = calc.length_quotient(square, ji)
    if excess != 1:
        raise NotSallyError("Sally suite needs l(I^2/JI) = 1", length=excess)

    d = calc.dimension
    mu = calc.mu(I)
    m = calc.maximal_ideal()
    certificate = cm_test(calc, I, J, policy)
    r = certificate.reduction_number
    numerator = hilbert_numerator(calc, I, policy)

    conditions: dict[str, bool | None] = {
        "cohen_macaulay": certificate.verdict,
        "m_i2_equals_m_ji": calc.equals(calc.product(m, square), calc.product(m, ji)),
        "numerator_shape": numerator.coefficients == [1, mu - d] + [1] * (r - 1),
        "f0_formula": numerator.f0 == mu - d + r,
        "mu_powers": None,
        "mu_square": None,
    }
    if d == 1:
        conditions["mu_powers"] = all(
            hf_fiber(calc, I, k) == mu + k - 1 for k in range(2, r + 1)
        )
        conditions["mu_square"] = hf_fiber(calc, I, 2) == mu + 1

    report = SallyReport(conditions=conditions)
    if not report.consistent:
        raise InvariantViolationError(
            "Equivalent conditions for a Sally ideal disagree", conditions=conditions
        )
    return report


def g1_coefficient(
    calc: Calc, I: Any, x: Any, policy: StabilizationPolicy | None = None
) -> G1Report:
    """g1(I) = sum over n >= 1 of l(mI^n/xmI^(n-1)) minus 1, in dimension one.

    Also returns sum l((mI^n + xI^(n-1))/xI^(n-1)) - 1; the two agree exactly
    when F(I) is Cohen-Macaulay.

    Raises:
        DimensionMismatchError: If d != 1
        NotContainedError: If x is not inside I
        NotAReductionError: If x does not generate a reduction of I
    """
    if calc.dimension != 1:
        raise DimensionMismatchError("g1 is computed in dimension one only", d=calc.dimension)
    policy = resolve_policy(policy)
    reduction_number(calc, I, x, policy)
    m = calc.maximal_ideal()
    xm = calc.product(x, m)

    def term(n: int) -> int:
        return calc.length_quotient(
            calc.product(m, calc.power(I, n)), calc.product(xm, calc.power(I, n - 1))
        )

    def cm_term(n: int) -> int:
        base = calc.product(x, calc.power(I, n - 1))
        return calc.length_quotient(
            calc.sum(calc.product(m, calc.power(I, n)), base), base
        )

    tail = stabilize(term, policy, start=1, label="g1 terms", target=0)
    cm_tail = stabilize(cm_term, policy, start=1, label="g1 criterion terms", target=0)
    terms = [term(n) for n in range(1, tail.stabilized_at)]
    cm_sum = sum(cm_term(n) for n in range(1, cm_tail.stabilized_at)) - 1
    return G1Report(
        g1=sum(terms) - 1,
        terms=terms,
        stabilized_at=tail.stabilized_at,
        cm_sum=cm_sum,
    )


def superficial_limit_check(
    calc: Calc,
    I: Any,
    a_list: Sequence[Any],
    x: Any,
    policy: StabilizationPolicy | None = None,
    *,
    variant: str = "m",
) -> SuperficialReport:
    """Compare f0 with reference - lim l(mI^n/(xI^n + L m I^(n-1))).

    Variant "m" takes x in m and the reference e_(d-1)(m|I); variant "I" takes
    x in I and the reference e(I). x and the d - 1 entries of a_list are ring
    elements of the calculus; L = (a_1, ..., a_(d-1)) must lie in I. The
    denominator is assembled from products of these elements with powers of I
    on top of (x, L) m I^n, which it contains. Rees-superficiality is not
    certified.

    Raises:
        DimensionMismatchError: If a_list does not have d - 1 entries
        BadParametersError: If the variant is unknown
        NotContainedError: If an element lies outside its required ideal
        PrecisionExhaustedError: If (x, L) cannot be certified m-primary
    """
    policy = resolve_policy(policy)
    d = calc.dimension
    if variant not in ("m", "I"):
        raise BadParametersError("Superficial variant must be 'm' or 'I'", variant=variant)
    if len(a_list) != d - 1:
        raise DimensionMismatchError(
            "Superficial sequence needs d - 1 elements besides x", given=len(a_list), d=d
        )
    m = calc.maximal_ideal()
    home = m if variant == "m" else I
    for element, container, label in [*((a, I, "I") for a in a_list), (x, home, variant)]:
        if not calc.contains(container, element):
            raise NotContainedError(
                f"Superficial element outside {label}", witness=calc.render(element)
            )

    sequence = calc.ideal([x, *a_list])

    def length(n: int) -> int:
        top = calc.product(m, calc.power(I, n))
        floor = calc.product(sequence, top)
        tail = calc.product(m, calc.power(I, n - 1))
        denominator = calc.sum_of_multiples(
            floor, [(x, calc.power(I, n)), *((a, tail) for a in a_list)]
        )
        return calc.length_quotient(top, denominator)

    limit = stabilize(length, policy, start=1, label="superficial limit")
    if variant == "m":
        reference = mixed_multiplicity(calc, I, 1, d - 1, policy)
    else:
        reference = multiplicity_e(calc, I, None, policy).value
    report = SuperficialReport(
        variant=variant,
        limit=limit,
        reference=reference,
        f0=hilbert_numerator(calc, I, policy).f0,
    )
    if not report.consistent:
        logger.info(
            "Superficial limit formula not matched",
            extra={"predicted": report.predicted_f0, "f0": report.f0},
        )
    return report
