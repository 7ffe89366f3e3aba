"""Built-in example suite: five worked examples and the e = 4..8 semigroup family.

Each example is a session text plus named assertions. Every assertion is
reported as ``paper.<id>.<name> = pass|fail``; a FiberConeError raised while
evaluating one counts as its failure and is named on a following ``.error``
line.
"""

from __future__ import annotations

import logging
from collections.abc import Callable

from pydantic import BaseModel, ConfigDict, Field

from fibercone.cli.report import Report
from fibercone.cli.session import Workspace, parse_session
from fibercone.errors import BadParametersError, FiberConeError
from fibercone.invariants import (
    cm_test,
    gorbound_check,
    gorenstein_test,
    hilbert_numerator,
    mixed_multiplicity,
    multiplicity_e,
    reduction_number,
    sally_suite,
    superficial_limit_check,
    valabrega_valla,
    w_criterion,
)

logger = logging.getLogger(__name__)

Assertion = Callable[[Workspace], bool]


class Example(BaseModel):
    """A session with the facts it must reproduce."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    id: str
    session: str
    assertions: list[tuple[str, Assertion]] = Field(default_factory=list)

    def check(self, name: str) -> Callable[[Assertion], Assertion]:
        def register(fn: Assertion) -> Assertion:
            self.assertions.append((name, fn))
            return fn

        return register


# ----------------------------------------------------------------------------
# Small helpers over a workspace
# ----------------------------------------------------------------------------


def _ij(ws: Workspace) -> tuple[object, object]:
    return ws.ideal("I"), ws.ideal("J")


def _length(ws: Workspace, a: object, b: object) -> int:
    return ws.calc.length_quotient(a, b)


def _mul(ws: Workspace, *ideals: object) -> object:
    result = ideals[0]
    for ideal in ideals[1:]:
        result = ws.calc.product(result, ideal)
    return result


def _sq(ws: Workspace, ideal: object) -> object:
    return ws.calc.power(ideal, 2)


def _contains(ws: Workspace, ideal: object, element: str) -> bool:
    return ws.calc.contains(ideal, ws.element(element))


def _sally_length_one(ws: Workspace) -> bool:
    I, J = _ij(ws)
    return _length(ws, _sq(ws, I), _mul(ws, J, I)) == 1


def _cube_is_j_square(ws: Workspace) -> bool:
    I, J = _ij(ws)
    return reduction_number(ws.calc, I, J, ws.policy) == 2 and ws.calc.equals(
        ws.calc.power(I, 3), _mul(ws, J, _sq(ws, I))
    )


def _superficial_consistent(ws: Workspace) -> bool:
    x = ws.resolve_element("J")
    return superficial_limit_check(ws.calc, ws.ideal("I"), [], x, ws.policy).consistent


def _socle_colon(ws: Workspace) -> object:
    """((mI^2 + JI) : I) meet I."""
    I, J = _ij(ws)
    m = ws.calc.maximal_ideal()
    top = ws.calc.sum(_mul(ws, m, _sq(ws, I)), _mul(ws, J, I))
    return ws.calc.intersect(ws.calc.colon(top, I), I)


# ----------------------------------------------------------------------------
# The worked examples
# ----------------------------------------------------------------------------


def _example_6_1() -> Example:
    ex = Example(
        id="6.1",
        session="ring semigroup 6 11 15 31\nideal I = t^6, t^11, t^31\nideal J = t^6\n",
    )
    ex.check("sally_length")(_sally_length_one)
    ex.check("reduction_number_two")(_cube_is_j_square)

    @ex.check("valabrega_valla")
    def _(ws: Workspace) -> bool:
        return valabrega_valla(ws.calc, *_ij(ws), ws.policy)

    @ex.check("t37_in_m_i2_not_m_ji")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        return _contains(ws, _mul(ws, m, _sq(ws, I)), "t^37") and not _contains(
            ws, _mul(ws, m, J, I), "t^37"
        )

    @ex.check("not_cohen_macaulay")
    def _(ws: Workspace) -> bool:
        return not cm_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("sally_conditions_all_false")
    def _(ws: Workspace) -> bool:
        report = sally_suite(ws.calc, *_ij(ws), ws.policy)
        return not any(report.conditions.values())

    ex.check("superficial_limit")(_superficial_consistent)
    return ex


def _example_6_2() -> Example:
    ex = Example(
        id="6.2",
        session="ring semigroup 7 15 17 33\nideal I = t^7, t^17, t^33\nideal J = t^7\n",
    )
    ex.check("sally_length")(_sally_length_one)
    ex.check("reduction_number_two")(_cube_is_j_square)

    @ex.check("valabrega_valla")
    def _(ws: Workspace) -> bool:
        return valabrega_valla(ws.calc, *_ij(ws), ws.policy)

    @ex.check("m_i2_equals_m_ji")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        return ws.calc.equals(_mul(ws, m, _sq(ws, I)), _mul(ws, m, J, I))

    @ex.check("cohen_macaulay")
    def _(ws: Workspace) -> bool:
        return cm_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("numerator")
    def _(ws: Workspace) -> bool:
        numerator = hilbert_numerator(ws.calc, ws.ideal("I"), ws.policy)
        return numerator.coefficients == [1, 2, 1] and numerator.denominator_power == 1

    @ex.check("f0")
    def _(ws: Workspace) -> bool:
        return hilbert_numerator(ws.calc, ws.ideal("I"), ws.policy).f0 == 4

    @ex.check("not_gorenstein")
    def _(ws: Workspace) -> bool:
        return not gorenstein_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("socle_witness_t33")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        bottom = ws.calc.sum(J, _mul(ws, ws.calc.maximal_ideal(), I))
        return _contains(ws, _socle_colon(ws), "t^33") and not _contains(ws, bottom, "t^33")

    ex.check("superficial_limit")(_superficial_consistent)
    return ex


def _example_6_3() -> Example:
    ex = Example(
        id="6.3",
        session="ring semigroup 4 5 6 7\nideal I = t^4, t^5, t^6\nideal J = t^4\n",
    )
    ex.check("sally_length")(_sally_length_one)
    ex.check("reduction_number_two")(_cube_is_j_square)

    @ex.check("m_i_equals_m_j")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        return ws.calc.equals(_mul(ws, m, I), _mul(ws, m, J))

    @ex.check("cohen_macaulay")
    def _(ws: Workspace) -> bool:
        return cm_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("t11_in_i2_meet_j_not_ji")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        meet = ws.calc.intersect(_sq(ws, I), J)
        return _contains(ws, meet, "t^11") and not _contains(ws, _mul(ws, J, I), "t^11")

    @ex.check("valabrega_valla_fails")
    def _(ws: Workspace) -> bool:
        return not valabrega_valla(ws.calc, *_ij(ws), ws.policy)

    @ex.check("gorenstein")
    def _(ws: Workspace) -> bool:
        return gorenstein_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("colon_equals_m_i_plus_j")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        reference = ws.calc.sum(_mul(ws, ws.calc.maximal_ideal(), I), J)
        return ws.calc.equals(_socle_colon(ws), reference)

    ex.check("superficial_limit")(_superficial_consistent)
    return ex


def _example_6_4() -> Example:
    ex = Example(
        id="6.4",
        session="ring local x y\nideal I = x^3, x^2*y, y^3\nideal J = x^3, y^3\n",
    )
    ex.check("sally_length")(_sally_length_one)

    @ex.check("m_i_over_m_j_length")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        return _length(ws, _mul(ws, m, I), _mul(ws, m, J)) == 1

    @ex.check("m_i2_equals_m_ji")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        return ws.calc.equals(_mul(ws, m, _sq(ws, I)), _mul(ws, m, J, I))

    @ex.check("mu_is_d_plus_one")
    def _(ws: Workspace) -> bool:
        return ws.calc.mu(ws.ideal("I")) == 3 == ws.calc.dimension + 1

    @ex.check("x4y2_in_i2_meet_j_not_ji")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        meet = ws.calc.intersect(_sq(ws, I), J)
        return _contains(ws, meet, "x^4*y^2") and not _contains(ws, _mul(ws, J, I), "x^4*y^2")

    @ex.check("valabrega_valla_fails")
    def _(ws: Workspace) -> bool:
        return not valabrega_valla(ws.calc, *_ij(ws), ws.policy)

    @ex.check("gorenstein")
    def _(ws: Workspace) -> bool:
        return gorenstein_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("w_differs_without_graded_cm")
    def _(ws: Workspace) -> bool:
        report = w_criterion(ws.calc, *_ij(ws), ws.policy)
        return (
            not report.w_equals
            and not report.applicable
            and report.hypotheses["associated_graded_cm"] is False
        )

    @ex.check("multiplicity")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        return multiplicity_e(ws.calc, I, J, ws.policy).value == 9

    return ex


def _example_6_5() -> Example:
    ex = Example(
        id="6.5",
        session="ring local x y z\n"
        "ideal I = x^3, y^3, z^3, x*y, y*z, z*x\n"
        "ideal J = x^3+y*z, y^3+z^3+x*z, x*z+x*y\n",
    )

    @ex.check("reduction_number_one")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        return ws.calc.equals(_sq(ws, I), _mul(ws, J, I)) and (
            reduction_number(ws.calc, I, J, ws.policy) == 1
        )

    @ex.check("m_i_over_m_j_length")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        return _length(ws, _mul(ws, m, I), _mul(ws, m, J)) == 1

    @ex.check("cohen_macaulay")
    def _(ws: Workspace) -> bool:
        return cm_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("numerator")
    def _(ws: Workspace) -> bool:
        return hilbert_numerator(ws.calc, ws.ideal("I"), ws.policy).coefficients == [1, 3]

    @ex.check("f0")
    def _(ws: Workspace) -> bool:
        return hilbert_numerator(ws.calc, ws.ideal("I"), ws.policy).f0 == 4

    @ex.check("minimal_mixed_multiplicity")
    def _(ws: Workspace) -> bool:
        I = ws.ideal("I")
        d = ws.calc.dimension
        e_top = mixed_multiplicity(ws.calc, I, 1, d - 1, ws.policy)
        return e_top == 4 == ws.calc.mu(I) - d + 1

    @ex.check("z3_in_colon_not_m_i_plus_j")
    def _(ws: Workspace) -> bool:
        I, J = _ij(ws)
        m = ws.calc.maximal_ideal()
        W = ws.calc.intersect(ws.calc.colon(_mul(ws, m, J), I), I)
        reference = ws.calc.sum(_mul(ws, m, I), J)
        return _contains(ws, W, "z^3") and not _contains(ws, reference, "z^3")

    @ex.check("not_gorenstein")
    def _(ws: Workspace) -> bool:
        return not gorenstein_test(ws.calc, *_ij(ws), ws.policy).verdict

    @ex.check("colon_length_equals_colength")
    def _(ws: Workspace) -> bool:
        bound = gorbound_check(ws.calc, *_ij(ws), ws.policy)
        return bound.colon_length == 7 == bound.colength

    @ex.check("mu_equals_bound")
    def _(ws: Workspace) -> bool:
        bound = gorbound_check(ws.calc, *_ij(ws), ws.policy)
        return bound.mu == 6 == bound.mu_bound

    return ex


def _family_member(e: int) -> Example:
    gens = " ".join(str(g) for g in range(e, 2 * e - 1))
    ex = Example(id=f"family.e{e}", session=f"ring semigroup {gens}\nideal J = t^{e}\n")

    @ex.check("symmetric")
    def _(ws: Workspace) -> bool:
        return bool(ws.calc.semigroup.is_symmetric())

    @ex.check("conductor")
    def _(ws: Workspace) -> bool:
        return bool(ws.calc.semigroup.conductor == 2 * e)

    @ex.check("embedding_dimension")
    def _(ws: Workspace) -> bool:
        return ws.calc.mu(ws.ideal("m")) == e - 1

    @ex.check("m_cube_is_j_m_square")
    def _(ws: Workspace) -> bool:
        m, J = ws.ideal("m"), ws.ideal("J")
        return ws.calc.equals(ws.calc.power(m, 3), _mul(ws, J, _sq(ws, m))) and (
            reduction_number(ws.calc, m, J, ws.policy) <= 2
        )

    @ex.check("gorenstein")
    def _(ws: Workspace) -> bool:
        return gorenstein_test(ws.calc, ws.ideal("m"), ws.ideal("J"), ws.policy).verdict

    return ex


def build_examples() -> list[Example]:
    """Every example in run order."""
    return [
        _example_6_1(),
        _example_6_2(),
        _example_6_3(),
        _example_6_4(),
        _example_6_5(),
        *(_family_member(e) for e in range(4, 9)),
    ]


def select_examples(examples: list[Example], only: str | None) -> list[Example]:
    """Examples whose id equals ``only`` or starts with ``only.``.

    Raises:
        BadParametersError: If nothing matches
    """
    if only is None:
        return examples
    chosen = [ex for ex in examples if ex.id == only or ex.id.startswith(only + ".")]
    if not chosen:
        raise BadParametersError(
            f"No example matches {only!r}", known=", ".join(ex.id for ex in examples)
        )
    return chosen


def run_examples(only: str | None = None, overrides: dict[str, int] | None = None) -> Report:
    """Run the suite; exit code 1 when any assertion fails."""
    report = Report()
    passed = failed = 0
    for example in select_examples(build_examples(), only):
        prefix = f"paper.{example.id}"
        try:
            ws = Workspace.open(parse_session(example.session), overrides)
        except FiberConeError as exc:
            logger.warning("Example session failed to open", extra={"example": example.id})
            report.add(f"{prefix}.session", "fail")
            report.add(f"{prefix}.session.error", exc.kind)
            failed += len(example.assertions)
            continue

        for name, assertion in example.assertions:
            error: FiberConeError | None = None
            try:
                ok = bool(assertion(ws))
            except FiberConeError as exc:
                ok, error = False, exc
            report.add(f"{prefix}.{name}", "pass" if ok else "fail")
            if error is not None:
                report.add(f"{prefix}.{name}.error", error.kind)
            if ok:
                passed += 1
            else:
                failed += 1
                logger.info(
                    "Example assertion failed", extra={"example": example.id, "assertion": name}
                )

    report.extend("paper.summary", {"passed": passed, "failed": failed, "total": passed + failed})
    report.exit_code = 1 if failed else 0
    return report
