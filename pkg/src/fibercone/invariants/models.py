"""Pydantic models for fiber cone invariants.

This module defines the records produced by :mod:`fibercone.invariants`:
- Stabilization policy and stabilized values
- Multiplicity, Hilbert series and mixed multiplicity data
- Cohen-Macaulay, Gorenstein and Sally criteria with their evidence
- The aggregated FiberReport
"""

from __future__ import annotations

from enum import Enum

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

# ============================================================================
# 1. Stabilization
# ============================================================================


class StabilizationPolicy(BaseModel):
    """How "for all large n" is decided.

    A value is accepted once it repeats over ``window`` consecutive indices,
    then re-verified at the next two indices. No index beyond ``n_max`` is
    ever evaluated.
    """

    model_config = ConfigDict(frozen=True)

    window: int = Field(default=3, ge=2, description="Consecutive equal values required")
    n_max: int = Field(default=40, ge=4, description="Largest index explored")

    @model_validator(mode="after")
    def validate_budget(self) -> StabilizationPolicy:
        """Leave room for a full window plus the two verification indices."""
        if self.n_max < self.window + 2:
            raise ValueError(
                f"n_max must be at least window + 2, got n_max={self.n_max}, "
                f"window={self.window}"
            )
        return self


class StabilizedValue(BaseModel):
    """Eventual value of an integer sequence."""

    model_config = ConfigDict(frozen=True)

    value: int = Field(..., description="Accepted limit")
    stabilized_at: int = Field(..., ge=0, description="First index of the accepting run")
    verified_through: int = Field(..., ge=0, description="Last index checked")


# ============================================================================
# 2. Multiplicities and Hilbert series
# ============================================================================


class MultiplicityCertificate(BaseModel):
    """e(I) by both routes."""

    value: int = Field(..., description="Reported multiplicity")
    by_reduction: int | None = Field(None, description="colength(J) for a verified reduction J")
    by_samuel: StabilizedValue = Field(..., description="Stabilized d-th difference of l(R/I^n)")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def routes_agree(self) -> bool:
        return self.by_reduction is None or self.by_reduction == self.by_samuel.value


class HilbertNumerator(BaseModel):
    """HS(F(I), t) written as h(t) / (1 - t)^d."""

    coefficients: list[int] = Field(..., min_length=1, description="h_0, h_1, ... of h(t)")
    denominator_power: int = Field(..., ge=1, description="d")
    f0: int = Field(..., description="Fiber cone multiplicity, equal to h(1)")
    stabilized_at: int = Field(..., ge=0, description="Index from which h_k vanishes")

    @property
    def is_palindromic(self) -> bool:
        return self.coefficients == self.coefficients[::-1]


class MixedMultiplicityTable(BaseModel):
    """Coefficients e_(i,j) of the Bhattacharya polynomial of (m, I).

    BP(r, s) = sum over i + j <= d of e_(i,j) * C(r+i, i) * C(s+j, j); the
    first slot belongs to m, the second to I.
    """

    dimension: int = Field(..., ge=1)
    entries: dict[tuple[int, int], int] = Field(default_factory=dict)
    stabilized_at: dict[tuple[int, int], int] = Field(default_factory=dict)

    def get(self, i: int, j: int) -> int:
        return self.entries[(i, j)]

    def top(self) -> list[int]:
        """e_(d,0), e_(d-1,1), ..., e_(0,d)."""
        d = self.dimension
        return [self.entries[(d - j, j)] for j in range(d + 1)]


class MultreesPrediction(BaseModel):
    """Numerator predicted from the Bhattacharya coefficients."""

    g: list[int] = Field(..., description="g(j) = sum_i i * e_(i,j) for j = 0..d-1")
    predicted: list[int] = Field(..., description="Predicted numerator coefficients")
    observed: list[int] = Field(..., description="Numerator computed from mu(I^n)")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def matches(self) -> bool:
        return self.predicted == self.observed


# ============================================================================
# 3. Certificates and criteria
# ============================================================================


class InvariantCheck(BaseModel):
    """One identity or implication that was evaluated."""

    name: str
    holds: bool
    detail: str = ""


class VVCertificate(BaseModel):
    """I^n intersected with J equals J I^(n-1), checked for n = 1..r+1."""

    holds: bool
    checked_through: int = Field(..., ge=1)
    failed_degree: int | None = None
    witness: str | None = Field(None, description="Element of the intersection outside J I^(n-1)")


class CMCertificate(BaseModel):
    """F(I) is Cohen-Macaulay iff f0 equals l(F(I)/JF(I))."""

    verdict: bool
    f0: int
    colength_fiber: int = Field(..., description="l(F(I)/JF(I))")
    lengths: list[int] = Field(..., description="l(I^n/(mI^n + JI^(n-1))) for n = 0..r")
    reduction_number: int = Field(..., ge=0)


class GorensteinCriterion(str, Enum):
    """Which route decided the Gorenstein verdict."""

    NOT_COHEN_MACAULAY = "not_cohen_macaulay"
    POLYNOMIAL_RING = "polynomial_ring"
    SOCLE = "socle"


class GorensteinVerdict(BaseModel):
    """Gorenstein verdict for F(I) with the specialized cross-checks."""

    verdict: bool
    criterion: GorensteinCriterion
    reduction_number: int | None = None
    socle_lengths: list[int] = Field(default_factory=list)
    witness: str | None = Field(None, description="Socle element outside the bottom piece")
    checks: list[InvariantCheck] = Field(default_factory=list)


class WCriterionReport(BaseModel):
    """W = I meet (mJ : I) compared with mI + J.

    The comparison decides the Gorenstein property only when every standing
    hypothesis holds.
    """

    hypotheses: dict[str, bool]
    w_equals: bool
    witness: str | None = None
    gorenstein: bool | None = Field(None, description="Verdict from the socle route, if applicable")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def applicable(self) -> bool:
        return all(self.hypotheses.values())


class GorboundReport(BaseModel):
    """Data of the bound l((J:I)/J) = l(R/I), mu(I) <= mu(m) + d."""

    colon_length: int = Field(..., description="l((J:I)/J)")
    colength: int = Field(..., description="l(R/I)")
    mu: int
    mu_bound: int = Field(..., description="mu(m) + d")
    hypotheses_hold: bool
    lengths_equal: bool
    mu_bounded: bool


class SallyReport(BaseModel):
    """Equivalent conditions for a Sally ideal; None marks a condition that does not apply."""

    conditions: dict[str, bool | None]

    @computed_field  # type: ignore[prop-decorator]
    @property
    def consistent(self) -> bool:
        values = {v for v in self.conditions.values() if v is not None}
        return len(values) <= 1

    @computed_field  # type: ignore[prop-decorator]
    @property
    def verdict(self) -> bool:
        return all(v for v in self.conditions.values() if v is not None)


class SuperficialReport(BaseModel):
    """Consistency of f0 = reference - lim l(mI^n/(xI^n + L m I^(n-1)))."""

    variant: str = Field(..., pattern="^(m|I)$")
    limit: StabilizedValue
    reference: int = Field(..., description="e_(d-1)(m|I) for variant m, e(I) for variant I")
    f0: int
    certified: bool = Field(
        default=False, description="Rees-superficiality of the sequence is never certified"
    )

    @computed_field  # type: ignore[prop-decorator]
    @property
    def predicted_f0(self) -> int:
        return self.reference - self.limit.value

    @computed_field  # type: ignore[prop-decorator]
    @property
    def consistent(self) -> bool:
        return self.predicted_f0 == self.f0


class G1Report(BaseModel):
    """g1(I) in dimension one and the matching Cohen-Macaulay test."""

    g1: int
    terms: list[int] = Field(..., description="l(mI^n/xmI^(n-1)) for n >= 1 until they vanish")
    stabilized_at: int
    cm_sum: int = Field(..., description="sum of l((mI^n + xI^(n-1))/xI^(n-1)) minus 1")

    @computed_field  # type: ignore[prop-decorator]
    @property
    def cm_by_g1(self) -> bool:
        return self.g1 == self.cm_sum


# ============================================================================
# 4. Classification and the full report
# ============================================================================


class ClassifyReport(BaseModel):
    """Flags for the ideal classes, with the numbers they were read from."""

    sally: bool
    goto_min_mult: bool
    goto_almost_min_mult: bool
    min_mixed: bool
    almost_min_mixed: bool

    mu: int
    colength: int
    e: int
    e_top: int = Field(..., description="e_(d-1)(m|I) = e_(1,d-1)")
    f0: int
    reduction_number: int
    length_i2_ji: int = Field(..., description="l(I^2/JI)")
    length_mi_mj: int = Field(..., description="l(mI/mJ)")
    checks: list[InvariantCheck] = Field(default_factory=list)


class FiberReport(BaseModel):
    """Everything computed for a pair (I, J)."""

    dimension: int
    mu: int
    colength: int
    e: MultiplicityCertificate
    f0: int
    mixed: list[int] = Field(..., description="e_(d,0), ..., e_(0,d)")
    reduction_number: int
    h_lengths: list[int]
    numerator: HilbertNumerator
    flags: ClassifyReport
    vv: VVCertificate
    cm: CMCertificate
    gorenstein: GorensteinVerdict
    w: WCriterionReport
    gorbound: GorboundReport
