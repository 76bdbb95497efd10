"""Closed formulas for weighted gap sums over a numerical semigroup.

The quantity computed throughout is

    sum over every gap n of  lambda**n * n**mu

for a nonzero exact weight lambda and a nonnegative exponent mu.  All
formulas reduce the sum to the Apery set of a pivot generator a: the gaps
in residue class i are reps[i] - a, reps[i] - 2a, ... and the geometric
structure of each class collapses into rational functions of lambda.

Which formula applies depends on lambda:

  * lambda**a != 1: the general Eulerian-number formula (any mu), with
    specialised forms for mu = 1 and mu = 2;
  * lambda**a == 1, lambda != 1: a root-of-unity form for mu = 1;
  * lambda == 1: a Bernoulli-number form (any mu), pure power sums;
  * two and three generators additionally admit fully closed forms with
    no Apery set at all, under divisibility side conditions.

``dispatch_sum`` picks the right route automatically; every route is
cross-checked against brute-force enumeration in the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import comb, gcd, lcm

from .combinatorics import bernoulli, eulerian
from .exactnum import QQ, FieldElement, Scalar, to_element
from .semigroup import GeneratorSet, NotCoprime, apery_set, validate_generators


class InvalidWeight(ValueError):
    """The weight is zero (or otherwise not a usable scalar)."""


class PreconditionViolated(ValueError):
    """A power-of-lambda hypothesis of the requested formula fails."""


class ConditionNotMet(ValueError):
    """A structural side condition on the generators fails."""


class Formula(str, Enum):
    GENERAL = "general_thm1"
    MU2 = "mu2_thm2"
    MU1 = "mu1_thm3"
    MU1_ROU = "mu1_rou_thm4"
    UNWEIGHTED = "unweighted_thm5"
    ALTERNATING = "alternating_cor1"
    TWO_VAR = "two_var_closed"
    TWO_VAR_DEGENERATE = "two_var_degenerate"
    THREE_VAR = "three_var_thm6"
    THREE_VAR_DEGENERATE = "three_var_thm7"
    ORACLE = "oracle"


@dataclass(frozen=True)
class SumRequest:
    """A fully specified sum: generators, exponent mu, nonzero weight."""

    A: GeneratorSet
    mu: int
    lam: FieldElement

    def __post_init__(self):
        object.__setattr__(self, "lam", to_element(self.lam))
        if self.mu < 0:
            raise ValueError("mu must be nonnegative")
        if self.lam.is_zero():
            raise InvalidWeight("weight must be nonzero")


@dataclass(frozen=True)
class SumResult:
    """Exact value plus provenance: which formula ran, and on which pivot."""

    value: FieldElement
    formula_used: Formula
    pivot_used: int | None = None


def _check_nonzero(lam: FieldElement) -> None:
    if lam.is_zero():
        raise PreconditionViolated("weight must be nonzero")


def _empty(A: GeneratorSet) -> bool:
    return 1 in A


def _zero(lam: FieldElement, formula: Formula) -> SumResult:
    return SumResult(lam.field.zero, formula, None)


def _pick_pivot(A: GeneratorSet, lam: FieldElement, want_unit_power: bool = False) -> int | None:
    """Smallest generator whose lambda power is (not) 1."""
    for a in A:
        if (lam ** a).is_one() == want_unit_power:
            return a
    return None


def _rep_power_sums(reps, lam: FieldElement, mu: int) -> list[FieldElement]:
    """S[t] = sum_i reps[i]**t * lam**reps[i] for t = 0..mu, with 0**0 == 1."""
    pows = [lam**m for m in reps]
    sums = []
    for t in range(mu + 1):
        acc = lam.field.zero
        for m, p in zip(reps, pows):
            acc = acc + (m**t) * p  # 0**0 == 1 covers the i = 0 term
        sums.append(acc)
    return sums


def weighted_power_sum(
    A: GeneratorSet, mu: int, lam: Scalar, pivot: int | None = None
) -> SumResult:
    """General formula for any mu >= 0, valid when lambda**pivot != 1.

    sum_{n=0}^{mu} (-a)^n / (L-1)^{n+1} * C(mu,n)
                 * sum_{j=0}^{n} E(n, n-j) L^j * S[mu-n]
      + (-1)^{mu+1} / (lambda-1)^{mu+1} * sum_{j=0}^{mu} E(mu, mu-j) lambda^j

    with a the pivot, L = lambda**a, E the Eulerian numbers and S the
    weighted power sums over the Apery set.
    """
    lam = to_element(lam)
    _check_nonzero(lam)
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if _empty(A):
        return _zero(lam, Formula.GENERAL)
    if lam.is_one():
        raise PreconditionViolated("weight 1 needs the unweighted power-sum formula")
    if pivot is None:
        pivot = _pick_pivot(A, lam, want_unit_power=False)
        assert pivot is not None  # coprimality forces one unless lambda == 1
    La = lam**pivot
    if La.is_one():
        raise PreconditionViolated(f"lambda**{pivot} == 1; choose another pivot")

    reps = apery_set(A, pivot).reps
    S = _rep_power_sums(reps, lam, mu)
    d_inv = (La - 1).inverse()
    lam1_inv = (lam - 1).inverse()

    total = lam.field.zero
    d_inv_pow = d_inv
    La_pows = [lam.field.one]
    for _ in range(mu):
        La_pows.append(La_pows[-1] * La)
    for n in range(mu + 1):
        inner = lam.field.zero
        for j in range(n + 1):
            e = eulerian(n, n - j)
            if e:
                inner = inner + e * La_pows[j]
        total = total + ((-pivot) ** n * comb(mu, n)) * d_inv_pow * inner * S[mu - n]
        d_inv_pow = d_inv_pow * d_inv

    tail = lam.field.zero
    lam_pow = lam.field.one
    for j in range(mu + 1):
        e = eulerian(mu, mu - j)
        if e:
            tail = tail + e * lam_pow
        lam_pow = lam_pow * lam
    total = total + (-1) ** (mu + 1) * lam1_inv ** (mu + 1) * tail
    return SumResult(total, Formula.GENERAL, pivot)


def weighted_sum_mu2(A: GeneratorSet, lam: Scalar, pivot: int | None = None) -> SumResult:
    """Specialised mu = 2 formula (lambda**pivot != 1)."""
    lam = to_element(lam)
    _check_nonzero(lam)
    if _empty(A):
        return _zero(lam, Formula.MU2)
    if lam.is_one():
        raise PreconditionViolated("weight 1 needs the unweighted power-sum formula")
    if pivot is None:
        pivot = _pick_pivot(A, lam, want_unit_power=False)
    La = lam**pivot
    if La.is_one():
        raise PreconditionViolated(f"lambda**{pivot} == 1; choose another pivot")
    reps = apery_set(A, pivot).reps
    pows = [lam**m for m in reps]
    s0 = sum(pows[1:], pows[0])
    s1 = sum((m * p for m, p in zip(reps, pows)), lam.field.zero)
    s2 = sum((m * m * p for m, p in zip(reps, pows)), lam.field.zero)
    d_inv = (La - 1).inverse()
    lam1_inv = (lam - 1).inverse()
    a = pivot
    value = (
        d_inv * s2
        - 2 * a * La * d_inv**2 * s1
        + a * a * La * (La + 1) * d_inv**3 * s0
        - lam * (lam + 1) * lam1_inv**3
    )
    return SumResult(value, Formula.MU2, pivot)


def weighted_sum_mu1(A: GeneratorSet, lam: Scalar, pivot: int | None = None) -> SumResult:
    """Specialised mu = 1 formula (lambda**pivot != 1)."""
    lam = to_element(lam)
    _check_nonzero(lam)
    if _empty(A):
        return _zero(lam, Formula.MU1)
    if lam.is_one():
        raise PreconditionViolated("weight 1 needs the unweighted power-sum formula")
    if pivot is None:
        pivot = _pick_pivot(A, lam, want_unit_power=False)
    La = lam**pivot
    if La.is_one():
        raise PreconditionViolated(f"lambda**{pivot} == 1; choose another pivot")
    reps = apery_set(A, pivot).reps
    pows = [lam**m for m in reps]
    s0 = sum(pows[1:], pows[0])
    s1 = sum((m * p for m, p in zip(reps, pows)), lam.field.zero)
    d_inv = (La - 1).inverse()
    lam1_inv = (lam - 1).inverse()
    value = d_inv * s1 - pivot * La * d_inv**2 * s0 + lam * lam1_inv**2
    return SumResult(value, Formula.MU1, pivot)


def weighted_sum_mu1_rou(A: GeneratorSet, lam: Scalar, pivot: int | None = None) -> SumResult:
    """mu = 1 when lambda**pivot == 1 but lambda != 1 (root-of-unity weight).

    (1/2a) sum_{i=1}^{a-1} reps[i]^2 lambda^i
      - (1/2) sum_{i=1}^{a-1} reps[i] lambda^i + lambda/(lambda-1)^2
    """
    lam = to_element(lam)
    _check_nonzero(lam)
    if _empty(A):
        return _zero(lam, Formula.MU1_ROU)
    if lam.is_one():
        raise PreconditionViolated("weight must differ from 1")
    if pivot is None:
        pivot = _pick_pivot(A, lam, want_unit_power=True)
        if pivot is None:
            raise PreconditionViolated("no generator a with lambda**a == 1")
    if not (lam**pivot).is_one():
        raise PreconditionViolated(f"lambda**{pivot} != 1; this form needs a unit power")
    reps = apery_set(A, pivot).reps
    a = pivot
    sq = lam.field.zero
    lin = lam.field.zero
    lam_pow = lam.field.one
    for i in range(1, a):
        lam_pow = lam_pow * lam
        m = reps[i]
        sq = sq + (m * m) * lam_pow
        lin = lin + m * lam_pow
    lam1_inv = (lam - 1).inverse()
    value = Fraction(1, 2 * a) * sq - Fraction(1, 2) * lin + lam * lam1_inv**2
    return SumResult(value, Formula.MU1_ROU, pivot)


def unweighted_power_sum(A: GeneratorSet, mu: int, pivot: int | None = None) -> SumResult:
    """Pure power sum over the gaps (weight 1), via Bernoulli numbers.

    sum_{kappa=0}^{mu} sum_{j=1}^{kappa+1} C(mu,kappa) C(kappa+1,j)
        (-1)^{j-1}/(kappa+1) * a^{kappa-j} B_{kappa-j+1}
        * sum_{i=1}^{a-1} (reps[i]-i)^j reps[i]^{mu-kappa}
    """
    if mu < 0:
        raise ValueError("mu must be nonnegative")
    if _empty(A):
        return _zero(QQ.one, Formula.UNWEIGHTED)
    if pivot is None:
        pivot = A.min
    reps = apery_set(A, pivot).reps
    a = pivot
    total = Fraction(0)
    for kappa in range(mu + 1):
        for j in range(1, kappa + 2):
            inner = sum(
                (reps[i] - i) ** j * reps[i] ** (mu - kappa) for i in range(1, a)
            )
            if inner == 0:
                continue
            total += (
                comb(mu, kappa)
                * comb(kappa + 1, j)
                * Fraction((-1) ** (j - 1), kappa + 1)
                * Fraction(a) ** (kappa - j)
                * bernoulli(kappa - j + 1)
                * inner
            )
    assert total.denominator == 1
    return SumResult(QQ.from_rational(total), Formula.UNWEIGHTED, pivot)


def alternating_sum(A: GeneratorSet, pivot: int | None = None) -> SumResult:
    """sum (-1)^n n over the gaps, via an odd pivot a:

    -(1/2) sum (-1)^{reps[i]} reps[i] + (a/4) sum (-1)^{reps[i]} + (a-1)/4
    """
    if _empty(A):
        return _zero(QQ.one, Formula.ALTERNATING)
    if pivot is None:
        pivot = next(a for a in A if a % 2 == 1)  # gcd 1 forces an odd generator
    if pivot % 2 == 0:
        raise PreconditionViolated("the alternating form needs an odd pivot")
    reps = apery_set(A, pivot).reps
    a = pivot
    signed = sum((-1) ** reps[i] * reps[i] for i in range(1, a))
    signs = sum((-1) ** reps[i] for i in range(1, a))
    value = Fraction(-signed, 2) + Fraction(a * signs, 4) + Fraction(a - 1, 4)
    assert value.denominator == 1
    return SumResult(QQ.from_rational(value), Formula.ALTERNATING, pivot)


# ---------------------------------------------------------------------------
# fully closed two- and three-generator forms (mu = 1)


def closed_two_var(a: int, b: int, lam: Scalar) -> SumResult:
    """Closed form for two generators with lambda**a != 1 and lambda**b != 1:

    lambda/(lambda-1)^2 + ab L^{ab} / ((L^a-1)(L^b-1))
      - (L^{ab}-1)((a+b)L^{a+b} - a L^a - b L^b) / ((L^a-1)^2 (L^b-1)^2)

    written with L = lambda.
    """
    A = validate_generators([a, b])
    if len(A) != 2:
        raise ConditionNotMet("two distinct generators are required")
    lam = to_element(lam)
    _check_nonzero(lam)
    if _empty(A):
        return _zero(lam, Formula.TWO_VAR)
    pa, pb = lam**a, lam**b
    if pa.is_one() or pb.is_one():
        raise PreconditionViolated("lambda**a and lambda**b must both differ from 1")
    inv_a = (pa - 1).inverse()
    inv_b = (pb - 1).inverse()
    lam1_inv = (lam - 1).inverse()
    pab = lam ** (a * b)
    value = (
        lam * lam1_inv**2
        + (a * b) * pab * inv_a * inv_b
        - (pab - 1) * ((a + b) * pa * pb - a * pa - b * pb) * inv_a**2 * inv_b**2
    )
    return SumResult(value, Formula.TWO_VAR, None)


def closed_two_var_degenerate(a: int, b: int, lam: Scalar) -> SumResult:
    """Closed form for two generators when lambda**b == 1 (lambda != 1):

    lambda/(lambda-1)^2 + (a-1)ab/(2(L^a-1)) - a^2 L^a/(L^a-1)^2
    """
    A = validate_generators([a, b])
    if len(A) != 2:
        raise ConditionNotMet("two distinct generators are required")
    lam = to_element(lam)
    _check_nonzero(lam)
    if _empty(A):
        return _zero(lam, Formula.TWO_VAR_DEGENERATE)
    if lam.is_one():
        raise PreconditionViolated("weight must differ from 1")
    pa, pb = lam**a, lam**b
    if not pb.is_one():
        raise PreconditionViolated("this form needs lambda**b == 1")
    if pa.is_one():
        raise PreconditionViolated("lambda**a must differ from 1")
    inv_a = (pa - 1).inverse()
    lam1_inv = (lam - 1).inverse()
    value = (
        lam * lam1_inv**2
        + Fraction((a - 1) * a * b, 2) * inv_a
        - (a * a) * pa * inv_a**2
    )
    return SumResult(value, Formula.TWO_VAR_DEGENERATE, None)


@dataclass(frozen=True)
class ThreeVarContext:
    """Three generators a, b, c with gcd(a,b,c) = 1 and a | lcm(b,c).

    Under those conditions gcd(a,b) * gcd(a,c) = a, and the Apery set of a
    is the grid {bx + cy} with 0 <= x < gcd(a,c) and 0 <= y < gcd(a,b),
    which is what makes a fully closed form possible.
    """

    a: int
    b: int
    c: int
    gcd_ab: int = field(init=False)
    gcd_ac: int = field(init=False)
    lcm_ab: int = field(init=False)
    lcm_ac: int = field(init=False)

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if min(a, b, c) < 1:
            raise ValueError("generators must be positive")
        if gcd(a, b, c) != 1:
            raise NotCoprime(f"gcd({a},{b},{c}) != 1")
        if lcm(b, c) % a != 0:
            raise ConditionNotMet(f"{a} does not divide lcm({b},{c}) = {lcm(b, c)}")
        object.__setattr__(self, "gcd_ab", gcd(a, b))
        object.__setattr__(self, "gcd_ac", gcd(a, c))
        object.__setattr__(self, "lcm_ab", lcm(a, b))
        object.__setattr__(self, "lcm_ac", lcm(a, c))

    # unweighted statistics also collapse to closed forms in this setting

    def frobenius(self) -> int:
        return self.lcm_ab + self.lcm_ac - (self.a + self.b + self.c)

    def genus(self) -> int:
        g = self.frobenius()
        assert (g + 1) % 2 == 0
        return (g + 1) // 2

    def gap_sum(self) -> int:
        a, b, c = self.a, self.b, self.c
        l1, l2 = self.lcm_ab, self.lcm_ac
        total = (
            a * a + b * b + c * c
            + 3 * (a * b * c + a * b + b * c + c * a)
            - 3 * (a + b + c) * (l1 + l2)
            + 2 * (l1 * l1 + l2 * l2)
            - 1
        )
        assert total % 12 == 0
        return total // 12


def closed_three_var(ctx: ThreeVarContext, lam: Scalar) -> SumResult:
    """Closed form with l1 = lcm(a,b), l2 = lcm(a,c), all lambda powers != 1:

    [l1(L^{l2}-1) + l2(L^{l1}-1) + (l1+l2-a-b-c)(L^{l1}-1)(L^{l2}-1)] / D
      - (L^{l1}-1)(L^{l2}-1)/D * (a/(L^a-1) + b/(L^b-1) + c/(L^c-1))
      + L/(L-1)^2,        D = (L^a-1)(L^b-1)(L^c-1)
    """
    lam = to_element(lam)
    _check_nonzero(lam)
    a, b, c = ctx.a, ctx.b, ctx.c
    if 1 in (a, b, c):
        return _zero(lam, Formula.THREE_VAR)
    pa, pb, pc = lam**a, lam**b, lam**c
    if pa.is_one() or pb.is_one() or pc.is_one():
        raise PreconditionViolated("all three lambda powers must differ from 1")
    l1, l2 = ctx.lcm_ab, ctx.lcm_ac
    q1 = lam**l1 - 1
    q2 = lam**l2 - 1
    den_inv = ((pa - 1) * (pb - 1) * (pc - 1)).inverse()
    lam1_inv = (lam - 1).inverse()
    head = (l1 * q2 + l2 * q1 + (l1 + l2 - a - b - c) * q1 * q2) * den_inv
    harmonic = (
        a * (pa - 1).inverse() + b * (pb - 1).inverse() + c * (pc - 1).inverse()
    )
    value = head - q1 * q2 * den_inv * harmonic + lam * lam1_inv**2
    return SumResult(value, Formula.THREE_VAR, None)


def closed_three_var_degenerate(ctx: ThreeVarContext, lam: Scalar) -> SumResult:
    """Closed form when lambda**c == 1 but lambda**a != 1 and lambda**b != 1:

    l2(L^{l1}-1)/(c(L^a-1)(L^b-1))
        * (l1 + l2/2 - a - b - c/2 - a/(L^a-1) - b/(L^b-1))
      + l1 l2/(c(L^a-1)(L^b-1)) + L/(L-1)^2
    """
    lam = to_element(lam)
    _check_nonzero(lam)
    a, b, c = ctx.a, ctx.b, ctx.c
    if 1 in (a, b, c):
        return _zero(lam, Formula.THREE_VAR_DEGENERATE)
    if lam.is_one():
        raise PreconditionViolated("weight must differ from 1")
    pa, pb, pc = lam**a, lam**b, lam**c
    if pa.is_one() or pb.is_one():
        raise PreconditionViolated("lambda**a and lambda**b must differ from 1")
    if not pc.is_one():
        raise PreconditionViolated("this form needs lambda**c == 1")
    l1, l2 = ctx.lcm_ab, ctx.lcm_ac
    inv_ab = ((pa - 1) * (pb - 1)).inverse()
    lam1_inv = (lam - 1).inverse()
    inner = (
        Fraction(2 * l1 + l2 - 2 * a - 2 * b - c, 2)
        - a * (pa - 1).inverse()
        - b * (pb - 1).inverse()
    )
    value = (
        Fraction(l2, c) * (lam**l1 - 1) * inv_ab * inner
        + Fraction(l1 * l2, c) * inv_ab
        + lam * lam1_inv**2
    )
    return SumResult(value, Formula.THREE_VAR_DEGENERATE, None)


# ---------------------------------------------------------------------------


def dispatch_sum(req: SumRequest) -> SumResult:
    """Route a request to the applicable formula.

    Empty gap set -> 0; weight 1 -> the Bernoulli power-sum form; otherwise
    the general form on the smallest pivot a with lambda**a != 1 (one always
    exists for lambda != 1 because the generators are coprime).
    """
    lam = req.lam
    if lam.is_zero():
        raise InvalidWeight("weight must be nonzero")
    if _empty(req.A):
        return SumResult(lam.field.zero, Formula.ORACLE, None)
    if lam.is_one():
        return unweighted_power_sum(req.A, req.mu)
    pivot = _pick_pivot(req.A, lam, want_unit_power=False)
    assert pivot is not None
    return weighted_power_sum(req.A, req.mu, lam, pivot)
