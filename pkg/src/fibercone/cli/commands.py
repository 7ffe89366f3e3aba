"""Session commands: each one evaluates an invariant and returns a Report.

Usage:
    workspace = Workspace.open(parse_session(text))
    report = run_command(workspace, "series", ["I"])
    print(report.render(), end="")
"""

from __future__ import annotations

import logging
from collections.abc import Callable
from typing import Any

from pydantic import BaseModel, ConfigDict

from fibercone.cli.report import Report
from fibercone.cli.session import SETTING_KEYS, RingKind, Workspace
from fibercone.errors import BadParametersError
from fibercone.invariants import (
    build_fiber_report,
    classify,
    cm_test,
    g1_coefficient,
    gorenstein_test,
    hilbert_numerator,
    mixed_multiplicity,
    multrees_prediction,
    reduction_number,
    sally_suite,
    superficial_limit_check,
    valabrega_valla_certificate,
)
from fibercone.invariants.models import (
    ClassifyReport,
    CMCertificate,
    GorboundReport,
    GorensteinVerdict,
    HilbertNumerator,
    MultiplicityCertificate,
    VVCertificate,
    WCriterionReport,
)

logger = logging.getLogger(__name__)


# ============================================================================
# Sections shared by several commands
# ============================================================================


def _multiplicity_lines(report: Report, e: MultiplicityCertificate) -> None:
    report.extend(
        "e",
        {
            "value": e.value,
            "by_reduction": e.by_reduction,
            "by_samuel": e.by_samuel.value,
            "stabilized_at": e.by_samuel.stabilized_at,
            "routes_agree": e.routes_agree,
        },
    )


def _cm_lines(report: Report, cm: CMCertificate) -> None:
    report.extend(
        "cm",
        {
            "verdict": cm.verdict,
            "f0": cm.f0,
            "colength_fiber": cm.colength_fiber,
            "h_lengths": cm.lengths,
            "reduction_number": cm.reduction_number,
        },
    )


def _series_lines(report: Report, numerator: HilbertNumerator) -> None:
    report.extend(
        "series",
        {
            "numerator": numerator.coefficients,
            "denominator_power": numerator.denominator_power,
            "f0": numerator.f0,
            "stabilized_at": numerator.stabilized_at,
            "palindromic": numerator.is_palindromic,
        },
    )


def _vv_lines(report: Report, vv: VVCertificate) -> None:
    report.extend(
        "vv",
        {
            "holds": vv.holds,
            "checked_through": vv.checked_through,
            "failed_degree": vv.failed_degree,
            "witness": vv.witness,
        },
    )


def _gorenstein_lines(report: Report, verdict: GorensteinVerdict) -> None:
    report.extend(
        "gorenstein",
        {
            "verdict": verdict.verdict,
            "criterion": verdict.criterion,
            "reduction_number": verdict.reduction_number,
            "socle_lengths": verdict.socle_lengths,
            "witness": verdict.witness,
        },
    )
    for check in verdict.checks:
        report.add(f"gorenstein.check.{check.name}", check.holds)


def _w_lines(report: Report, w: WCriterionReport) -> None:
    report.extend("w.hypothesis", dict(w.hypotheses))
    report.extend(
        "w",
        {
            "applicable": w.applicable,
            "w_equals": w.w_equals,
            "witness": w.witness,
            "gorenstein": w.gorenstein,
        },
    )


def _gorbound_lines(report: Report, bound: GorboundReport) -> None:
    report.extend("gorbound", bound.model_dump())


def _flag_lines(report: Report, flags: ClassifyReport) -> None:
    report.extend(
        "flags",
        {
            "sally": flags.sally,
            "goto_min_mult": flags.goto_min_mult,
            "goto_almost_min_mult": flags.goto_almost_min_mult,
            "min_mixed": flags.min_mixed,
            "almost_min_mixed": flags.almost_min_mixed,
            "length_i2_ji": flags.length_i2_ji,
            "length_mi_mj": flags.length_mi_mj,
            "e_top": flags.e_top,
        },
    )
    for check in flags.checks:
        report.add(f"flags.check.{check.name}", check.holds)


# ============================================================================
# Commands
# ============================================================================


def cmd_report(ws: Workspace, I: str, J: str) -> Report:
    """Every invariant of (I, J)."""
    full = build_fiber_report(ws.calc, ws.ideal(I), ws.ideal(J), ws.policy)
    report = Report()
    report.extend(
        "report",
        {"dimension": full.dimension, "mu": full.mu, "colength": full.colength},
    )
    _multiplicity_lines(report, full.e)
    report.add("f0", full.f0)
    report.add("mixed.top", full.mixed)
    report.add("reduction_number", full.reduction_number)
    _series_lines(report, full.numerator)
    _flag_lines(report, full.flags)
    _vv_lines(report, full.vv)
    _cm_lines(report, full.cm)
    _gorenstein_lines(report, full.gorenstein)
    _w_lines(report, full.w)
    _gorbound_lines(report, full.gorbound)
    return report


def cmd_cm(ws: Workspace, I: str, J: str) -> Report:
    report = Report()
    _cm_lines(report, cm_test(ws.calc, ws.ideal(I), ws.ideal(J), ws.policy))
    return report


def cmd_gorenstein(ws: Workspace, I: str, J: str) -> Report:
    report = Report()
    _gorenstein_lines(report, gorenstein_test(ws.calc, ws.ideal(I), ws.ideal(J), ws.policy))
    return report


def cmd_series(ws: Workspace, I: str) -> Report:
    """Hilbert series numerator with the prediction from the mixed multiplicities."""
    ideal = ws.ideal(I)
    numerator = hilbert_numerator(ws.calc, ideal, ws.policy)
    prediction = multrees_prediction(ws.calc, ideal, ws.policy, observed=numerator)
    report = Report()
    _series_lines(report, numerator)
    report.add("series.predicted_numerator", prediction.predicted)
    report.add("series.prediction_matches", prediction.matches)
    return report


def cmd_mixed(ws: Workspace, I: str, i: str, j: str) -> Report:
    degrees = _integers(i=i, j=j)
    value = mixed_multiplicity(ws.calc, ws.ideal(I), degrees["i"], degrees["j"], ws.policy)
    report = Report()
    report.extend("mixed", {**degrees, "value": value})
    return report


def cmd_vv(ws: Workspace, I: str, J: str) -> Report:
    report = Report()
    _vv_lines(report, valabrega_valla_certificate(ws.calc, ws.ideal(I), ws.ideal(J), ws.policy))
    return report


def cmd_superficial(ws: Workspace, I: str, x: str, *a_list: str, variant: str = "m") -> Report:
    """Superficial limit formula; x and the a's are elements or principal ideal names."""
    result = superficial_limit_check(
        ws.calc,
        ws.ideal(I),
        [ws.resolve_element(a) for a in a_list],
        ws.resolve_element(x),
        ws.policy,
        variant=variant,
    )
    report = Report()
    report.extend(
        "superficial",
        {
            "variant": result.variant,
            "limit": result.limit.value,
            "limit_stabilized_at": result.limit.stabilized_at,
            "reference": result.reference,
            "f0": result.f0,
            "predicted_f0": result.predicted_f0,
            "consistent": result.consistent,
            "certified": result.certified,
        },
    )
    return report


def cmd_sally(ws: Workspace, I: str, J: str) -> Report:
    result = sally_suite(ws.calc, ws.ideal(I), ws.ideal(J), ws.policy)
    report = Report()
    report.extend("sally.condition", result.conditions)
    report.extend("sally", {"consistent": result.consistent, "verdict": result.verdict})
    return report


def cmd_g1(ws: Workspace, I: str, x: str) -> Report:
    result = g1_coefficient(ws.calc, ws.ideal(I), ws.ideal(x), ws.policy)
    report = Report()
    report.extend(
        "g1",
        {
            "value": result.g1,
            "terms": result.terms,
            "stabilized_at": result.stabilized_at,
            "cm_sum": result.cm_sum,
            "cm_by_g1": result.cm_by_g1,
        },
    )
    return report


def cmd_classify(ws: Workspace, I: str, J: str) -> Report:
    flags = classify(ws.calc, ws.ideal(I), ws.ideal(J), ws.policy)
    report = Report()
    report.extend(
        "classify",
        {
            "mu": flags.mu,
            "colength": flags.colength,
            "e": flags.e,
            "f0": flags.f0,
            "reduction_number": flags.reduction_number,
        },
    )
    _flag_lines(report, flags)
    return report


def _field_invariants(ws: Workspace, I: str, J: str) -> dict[str, object]:
    ideal, reduction = ws.ideal(I), ws.ideal(J)
    return {
        "colength": ws.calc.colength(ideal),
        "mu": ws.calc.mu(ideal),
        "reduction_number": reduction_number(ws.calc, ideal, reduction, ws.policy),
        "numerator": hilbert_numerator(ws.calc, ideal, ws.policy).coefficients,
        "cm": cm_test(ws.calc, ideal, reduction, ws.policy).verdict,
    }


def cmd_crosscheck(ws: Workspace, I: str, J: str) -> Report:
    """Recompute the basic invariants over GF(p), p the configured prime.

    Raises:
        BadParametersError: If the session is not a local ring over the rationals
    """
    ring = ws.session.ring
    if ring.kind is not RingKind.LOCAL or ring.characteristic != 0:
        raise BadParametersError(
            "Cross-check needs a local ring over the rationals", ring=ring.text()
        )
    modular = Workspace.open(
        ws.session.model_copy(
            update={"ring": ring.model_copy(update={"characteristic": ws.config.prime})}
        ),
        ws.config.model_dump(include=set(SETTING_KEYS)),
    )
    rational_values = _field_invariants(ws, I, J)
    modular_values = _field_invariants(modular, I, J)
    agree = rational_values == modular_values

    report = Report(exit_code=0 if agree else 1)
    report.add("crosscheck.prime", ws.config.prime)
    report.extend("crosscheck.rational", rational_values)
    report.extend("crosscheck.modular", modular_values)
    report.add("crosscheck.agree", agree)
    if not agree:
        logger.warning(
            "Prime field disagrees with the rationals", extra={"prime": ws.config.prime}
        )
    return report


def cmd_show(ws: Workspace) -> Report:
    """The parsed session: ring, effective settings and minimal generators."""
    report = Report()
    report.add("session.ring", ws.session.ring.text())
    report.add("session.dimension", ws.calc.dimension)
    for key in ("n_max", "window", "truncation", "guard", "doubling_budget"):
        report.add(f"session.setting.{key}", getattr(ws.config, key))
    for name, ideal in ws.ideals.items():
        report.add(f"session.ideal.{name}", ", ".join(ws.calc.describe(ideal)))
    return report


# ============================================================================
# Dispatch
# ============================================================================


def _integers(**values: str) -> dict[str, int]:
    try:
        return {key: int(value) for key, value in values.items()}
    except ValueError as exc:
        raise BadParametersError("Expected integers", original_error=exc, **values) from exc


class Command(BaseModel):
    """A command name with its handler and argument shape."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    handler: Callable[..., Report]
    usage: str
    min_args: int
    max_args: int | None

    def accepts(self, count: int) -> bool:
        return count >= self.min_args and (self.max_args is None or count <= self.max_args)


COMMANDS: dict[str, Command] = {
    "report": Command(handler=cmd_report, usage="report I J", min_args=2, max_args=2),
    "cm": Command(handler=cmd_cm, usage="cm I J", min_args=2, max_args=2),
    "gorenstein": Command(handler=cmd_gorenstein, usage="gorenstein I J", min_args=2, max_args=2),
    "series": Command(handler=cmd_series, usage="series I", min_args=1, max_args=1),
    "mixed": Command(handler=cmd_mixed, usage="mixed I i j", min_args=3, max_args=3),
    "vv": Command(handler=cmd_vv, usage="vv I J", min_args=2, max_args=2),
    "superficial": Command(
        handler=cmd_superficial, usage="superficial I x [a ...]", min_args=2, max_args=None
    ),
    "sally": Command(handler=cmd_sally, usage="sally I J", min_args=2, max_args=2),
    "g1": Command(handler=cmd_g1, usage="g1 I x", min_args=2, max_args=2),
    "classify": Command(handler=cmd_classify, usage="classify I J", min_args=2, max_args=2),
    "crosscheck": Command(
        handler=cmd_crosscheck, usage="crosscheck I J", min_args=2, max_args=2
    ),
    "show": Command(handler=cmd_show, usage="show", min_args=0, max_args=0),
}


def run_command(
    ws: Workspace, name: str, args: list[str], *, variant: str = "m"
) -> Report:
    """Run one command on an opened workspace.

    Raises:
        BadParametersError: If the command is unknown or the argument count is wrong
    """
    command = COMMANDS.get(name)
    if command is None:
        raise BadParametersError(
            f"Unknown command {name!r}", known=", ".join(sorted(COMMANDS))
        )
    if not command.accepts(len(args)):
        raise BadParametersError("Wrong number of arguments", usage=command.usage)
    logger.debug("Running command", extra={"command": name, "arguments": args})

    options: dict[str, Any] = {"variant": variant} if name == "superficial" else {}
    return command.handler(ws, *args, **options)
