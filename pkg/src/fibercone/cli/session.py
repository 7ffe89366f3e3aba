"""Session files: one ring, named ideals and settings.

Grammar (line oriented, ``#`` starts a comment)::

    ring semigroup <g1> <g2> ...
    ring local <vars...> [trunc <N>] [char <p>]
    ideal <Name> = <gen> [, <gen> ...]
    set <key> <value>

Semigroup generators are written ``t^k``; local generators are polynomial
expressions in the declared variables using ``+ - * ^``, parentheses and
integer (or rational) coefficients.

Usage:
    session = parse_session(Path("sessions/example_6_2.fc").read_text())
    workspace = Workspace.open(session)
    workspace.ideal("I")
"""

from __future__ import annotations

import logging
import re
import tokenize
from collections.abc import Mapping
from enum import Enum
from fractions import Fraction
from typing import Any

import sympy
from pydantic import BaseModel, ConfigDict, Field
from sympy.parsing.sympy_parser import convert_xor, parse_expr, standard_transformations
from sympy.polys.polyerrors import BasePolynomialError

from fibercone.artinian import LocalCalculus, TruncatedLocalRing, field_for
from fibercone.config import Settings
from fibercone.errors import (
    BadParametersError,
    ConstantTermGeneratorError,
    ExponentNotInSemigroupError,
    SessionSyntaxError,
    UnknownIdealError,
    UnknownVariableError,
)
from fibercone.invariants.models import StabilizationPolicy
from fibercone.semigroup import NumericalSemigroup, SemigroupCalculus

logger = logging.getLogger(__name__)

SETTING_KEYS = ("n_max", "window", "truncation", "guard", "doubling_budget")

_NAME = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")
_IDENTIFIER = re.compile(r"[A-Za-z_][A-Za-z0-9_]*")
_EXPRESSION_CHARS = re.compile(r"^[A-Za-z0-9_\s+\-*^()/]+$")
_SEMIGROUP_GEN = re.compile(r"^t(?:\s*\^\s*(\d+))?$")
_TRANSFORMATIONS = (*standard_transformations, convert_xor)

Terms = dict[tuple[int, ...], Fraction]


# ============================================================================
# Models
# ============================================================================


class RingKind(str, Enum):
    """Backend selected by the ring line."""

    SEMIGROUP = "semigroup"
    LOCAL = "local"


class RingSpec(BaseModel):
    """The session's ring line."""

    kind: RingKind
    generators: list[int] = Field(default_factory=list, description="Semigroup generators")
    variables: list[str] = Field(default_factory=list, description="Local ring variables")
    truncation: int | None = Field(None, ge=2, description="Truncation order N")
    characteristic: int = Field(0, ge=0, description="0 for the rationals, else a prime")

    def text(self) -> str:
        if self.kind is RingKind.SEMIGROUP:
            return "ring semigroup " + " ".join(str(g) for g in self.generators)
        words = ["ring local", *self.variables]
        if self.truncation is not None:
            words += ["trunc", str(self.truncation)]
        if self.characteristic:
            words += ["char", str(self.characteristic)]
        return " ".join(words)


class IdealSpec(BaseModel):
    """A named ideal with its parsed generators."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    name: str
    line: int
    generators: list[str]
    exponents: list[int] = Field(default_factory=list)
    terms: list[Terms] = Field(default_factory=list)


class Session(BaseModel):
    """A parsed session file."""

    ring: RingSpec
    ideals: dict[str, IdealSpec] = Field(default_factory=dict)
    settings: dict[str, int] = Field(default_factory=dict)


# ============================================================================
# Parsing
# ============================================================================


def _parse_semigroup_gen(text: str, line: int | None) -> int:
    match = _SEMIGROUP_GEN.match(text)
    if match is None:
        names = [n for n in _IDENTIFIER.findall(text) if n != "t"]
        if names:
            raise UnknownVariableError(
                f"Unknown variable {names[0]!r}; semigroup generators use t", line=line
            )
        raise SessionSyntaxError(f"Expected t^k, got {text!r}", line=line)
    exponent = int(match.group(1) or 1)
    if exponent == 0:
        raise ConstantTermGeneratorError("Generator t^0 is a unit", line=line)
    return exponent


def parse_polynomial(text: str, variables: list[str], *, line: int | None = None) -> Terms:
    """Exponent -> coefficient map of a polynomial in the given variables.

    Raises:
        UnknownVariableError: If a name other than the variables occurs
        SessionSyntaxError: If the text is not a polynomial expression
        ConstantTermGeneratorError: If the constant term is nonzero
    """
    if not _EXPRESSION_CHARS.match(text):
        raise SessionSyntaxError(f"Unexpected character in {text!r}", line=line)
    for name in _IDENTIFIER.findall(text):
        if name not in variables:
            raise UnknownVariableError(f"Unknown variable {name!r}", line=line, name=name)

    symbols = [sympy.Symbol(v) for v in variables]
    try:
        expr = parse_expr(
            text,
            local_dict=dict(zip(variables, symbols, strict=True)),
            transformations=_TRANSFORMATIONS,
        )
        poly = sympy.Poly(expr, *symbols)
    except (SyntaxError, tokenize.TokenError, TypeError, BasePolynomialError) as exc:
        raise SessionSyntaxError(
            f"Cannot parse {text!r} as a polynomial", line=line, original_error=exc
        ) from exc
    if not (poly.domain.is_ZZ or poly.domain.is_QQ):
        raise SessionSyntaxError(
            f"{text!r} is not a polynomial with rational coefficients", line=line
        )

    terms: Terms = {}
    for monom, coeff in poly.terms():
        rational = sympy.Rational(coeff)
        terms[tuple(int(e) for e in monom)] = Fraction(int(rational.p), int(rational.q))
    zero = (0,) * len(variables)
    if terms.get(zero, 0) != 0:
        raise ConstantTermGeneratorError(
            f"Generator {text!r} has a nonzero constant term", line=line
        )
    terms.pop(zero, None)
    return terms


def _parse_ring(words: list[str], line: int) -> RingSpec:
    if len(words) < 2 or words[1] not in ("semigroup", "local"):
        raise SessionSyntaxError("Expected 'ring semigroup ...' or 'ring local ...'", line=line)
    if words[1] == "semigroup":
        try:
            gens = [int(w) for w in words[2:]]
        except ValueError as exc:
            raise SessionSyntaxError(
                "Semigroup generators must be integers", line=line, original_error=exc
            ) from exc
        return RingSpec(kind=RingKind.SEMIGROUP, generators=gens)

    variables: list[str] = []
    options: dict[str, int] = {}
    rest = words[2:]
    k = 0
    while k < len(rest):
        word = rest[k]
        if word in ("trunc", "char"):
            if k + 1 >= len(rest) or not rest[k + 1].isdigit():
                raise SessionSyntaxError(f"'{word}' needs an integer", line=line)
            options[word] = int(rest[k + 1])
            k += 2
            continue
        if options or not _NAME.match(word) or word in variables:
            raise SessionSyntaxError(f"Bad variable name {word!r}", line=line)
        variables.append(word)
        k += 1
    if not variables:
        raise SessionSyntaxError("Local ring needs at least one variable", line=line)
    if options.get("trunc", 2) < 2:
        raise SessionSyntaxError("Truncation must be at least 2", line=line)
    return RingSpec(
        kind=RingKind.LOCAL,
        variables=variables,
        truncation=options.get("trunc"),
        characteristic=options.get("char", 0),
    )


def parse_session(text: str) -> Session:
    """Parse session text.

    Raises:
        SessionSyntaxError: On malformed lines, a missing or repeated ring, or duplicate names
        UnknownVariableError: If a generator uses an undeclared variable
        ConstantTermGeneratorError: If a generator has a nonzero constant term
    """
    ring: RingSpec | None = None
    ideals: dict[str, IdealSpec] = {}
    values: dict[str, int] = {}

    for number, raw in enumerate(text.splitlines(), start=1):
        content = raw.split("#", 1)[0].strip()
        if not content:
            continue
        head = content.split(None, 1)[0]

        if head == "ring":
            if ring is not None:
                raise SessionSyntaxError("Only one ring per session", line=number)
            ring = _parse_ring(content.split(), number)

        elif head == "ideal":
            if ring is None:
                raise SessionSyntaxError("Ideal defined before the ring", line=number)
            declaration = content[len("ideal") :]
            if "=" not in declaration:
                raise SessionSyntaxError("Expected 'ideal <Name> = <gens>'", line=number)
            name, _, body = (part.strip() for part in declaration.partition("="))
            if not _NAME.match(name):
                raise SessionSyntaxError(f"Bad ideal name {name!r}", line=number)
            if name in ideals:
                raise SessionSyntaxError(f"Ideal {name!r} defined twice", line=number)
            gens = [g.strip() for g in body.split(",")]
            if not body.strip() or any(not g for g in gens):
                raise SessionSyntaxError("Empty generator", line=number)
            spec = IdealSpec(name=name, line=number, generators=gens)
            if ring.kind is RingKind.SEMIGROUP:
                spec.exponents = [_parse_semigroup_gen(g, number) for g in gens]
            else:
                spec.terms = [parse_polynomial(g, ring.variables, line=number) for g in gens]
            ideals[name] = spec

        elif head == "set":
            words = content.split()
            if len(words) != 3 or words[1] not in SETTING_KEYS:
                raise SessionSyntaxError(
                    f"Expected 'set <key> <int>' with key in {', '.join(SETTING_KEYS)}",
                    line=number,
                )
            try:
                values[words[1]] = int(words[2])
            except ValueError as exc:
                raise SessionSyntaxError(
                    "Setting value must be an integer", line=number, original_error=exc
                ) from exc

        else:
            raise SessionSyntaxError(f"Unknown statement {head!r}", line=number)

    if ring is None:
        raise SessionSyntaxError("Session defines no ring")
    return Session(ring=ring, ideals=ideals, settings=values)


# ============================================================================
# Workspace
# ============================================================================


def effective_settings(session: Session, overrides: Mapping[str, int] | None = None) -> Settings:
    """Command-line overrides, then session values, then environment and defaults.

    Raises:
        BadParametersError: If the merged values are out of range
    """
    merged: dict[str, Any] = dict(session.settings)
    if session.ring.truncation is not None:
        merged["truncation"] = session.ring.truncation
    merged.update({k: v for k, v in (overrides or {}).items() if v is not None})
    try:
        return Settings(**merged)
    except ValueError as exc:
        raise BadParametersError("Invalid settings", original_error=exc, **merged) from exc


class Workspace:
    """A session opened on its backend: the calculus and every named ideal."""

    def __init__(self, session: Session, calc: Any, ideals: dict[str, Any], config: Settings):
        self.session = session
        self.calc = calc
        self.ideals = ideals
        self.config = config

    @classmethod
    def open(cls, session: Session, overrides: Mapping[str, int] | None = None) -> Workspace:
        """Build the ring and every named ideal.

        Raises:
            BadParametersError: If settings or ring parameters are invalid
            BudgetExceededError: If no truncation within the budget certifies the ideals
        """
        config = effective_settings(session, overrides)
        ring = session.ring
        if ring.kind is RingKind.SEMIGROUP:
            calc: Any = SemigroupCalculus(NumericalSemigroup.from_generators(ring.generators))
            ideals = {name: calc.ideal(spec.exponents) for name, spec in session.ideals.items()}
        else:
            base = TruncatedLocalRing(
                len(ring.variables),
                config.truncation,
                field_for(ring.characteristic),
                ring.variables,
                guard=config.guard,
            )
            generators = {
                name: [base.poly(terms) for terms in spec.terms]
                for name, spec in session.ideals.items()
            }
            calc, ideals = LocalCalculus.build(base, generators, budget=config.doubling_budget)
        logger.info(
            "Session opened",
            extra={"ring": ring.text(), "ideals": sorted(ideals), "dimension": calc.dimension},
        )
        return cls(session, calc, ideals, config)

    @property
    def policy(self) -> StabilizationPolicy:
        try:
            return self.config.policy()
        except ValueError as exc:
            raise BadParametersError(
                "Invalid stabilization policy",
                original_error=exc,
                window=self.config.window,
                n_max=self.config.n_max,
            ) from exc

    def ideal(self, name: str) -> Any:
        """Named ideal; ``m`` names the maximal ideal unless the session defines it.

        Raises:
            UnknownIdealError: If the session defines no such ideal
        """
        if name in self.ideals:
            return self.ideals[name]
        if name == "m":
            return self.calc.maximal_ideal()
        raise UnknownIdealError(
            f"No ideal named {name!r}", known=", ".join(sorted(self.ideals)) or "none"
        )

    def element(self, text: str) -> Any:
        """One ring element written in session syntax: t^k gives k, else a Poly.

        Raises:
            ExponentNotInSemigroupError: If t^k is not an element of the ring
        """
        ring = self.session.ring
        if ring.kind is RingKind.SEMIGROUP:
            exponent = _parse_semigroup_gen(text, None)
            if not self.calc.semigroup.contains(exponent):
                raise ExponentNotInSemigroupError(
                    f"t^{exponent} is not an element of the ring", exponent=exponent
                )
            return exponent
        return self.calc.ring.poly(parse_polynomial(text, ring.variables))

    def resolve_element(self, text: str) -> Any:
        """Generator of a principal session ideal named text, else text parsed as an element.

        Raises:
            BadParametersError: If the named ideal has several generators
        """
        spec = self.session.ideals.get(text)
        if spec is None:
            return self.element(text)
        if len(spec.generators) != 1:
            raise BadParametersError(
                f"Ideal {text!r} is not principal", generators=", ".join(spec.generators)
            )
        return self.element(spec.generators[0])

    def canonical_text(self) -> str:
        """Session text rebuilt from the parsed ring, settings and ideals."""
        lines = [self.session.ring.text()]
        lines += [f"set {k} {v}" for k, v in self.session.settings.items()]
        for name, ideal in self.ideals.items():
            lines.append(f"ideal {name} = {', '.join(self.calc.describe(ideal))}")
        return "\n".join(lines) + "\n"
