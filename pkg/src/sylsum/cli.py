"""Command-line interface.

Subcommands:

  apery      minimal representatives per residue class mod a pivot
  frobenius  the largest gap
  genus      the number of gaps
  gaps       the full gap list
  sum        weighted gap sum, routed through the formula dispatcher
  verify     sum plus an independent brute-force cross-check
  closed3    three-generator closed forms (generators taken in given order)

Weights are written in a small exact grammar:

  -3/2                 a rational
  zeta(8)^3            a power of a primitive root of unity
  q(5; 0, -1/5)        r0 + r1*sqrt(d)   (here -1/sqrt(5))
  nf([c0,..,cd]; [e0,..,e_{d-1}])   coefficients in Q[x]/(c0+..+cd x^d)

Exit codes: 0 success, 2 invalid input, 3 formula precondition violated,
4 zero divisor met in a user-supplied reducible coefficient ring.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from fractions import Fraction

from .exactnum import (
    FieldElement,
    InvalidField,
    NumberField,
    ZeroDivisor,
    QQ,
    canonical_str,
    cyclotomic_field,
    element_to_obj,
    pretty_str,
    quadratic_field,
)
from .oracle import brute_force_weighted_sum, cross_validate
from .semigroup import (
    EmptyGenerators,
    NonPositive,
    NotCoprime,
    apery_set,
    frobenius_number,
    gap_set,
    sylvester_number,
    validate_generators,
)
from .sums import (
    ConditionNotMet,
    Formula,
    InvalidWeight,
    PreconditionViolated,
    SumRequest,
    SumResult,
    ThreeVarContext,
    alternating_sum,
    closed_three_var,
    closed_three_var_degenerate,
    closed_two_var,
    closed_two_var_degenerate,
    dispatch_sum,
    unweighted_power_sum,
    weighted_power_sum,
    weighted_sum_mu1,
    weighted_sum_mu1_rou,
    weighted_sum_mu2,
)


class ParseError(ValueError):
    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


_RAT = r"[+-]?\d+(?:\s*/\s*\d+)?"
_RE_RATIONAL = re.compile(rf"\s*({_RAT})\s*$")
_RE_ZETA = re.compile(r"\s*zeta\(\s*(\d+)\s*\)\s*(?:\^\s*([+-]?\d+))?\s*$")
_RE_QUAD = re.compile(rf"\s*q\(\s*([+-]?\d+)\s*;\s*({_RAT})\s*,\s*({_RAT})\s*\)\s*$")
_RE_NF = re.compile(r"\s*nf\(\s*\[([^]]*)\]\s*;\s*\[([^]]*)\]\s*\)\s*$")


def _fraction(text: str, s: str) -> Fraction:
    try:
        return Fraction(text.replace(" ", ""))
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"bad rational {text!r}", s.find(text)) from None


def parse_element(s: str) -> FieldElement:
    """Parse the weight grammar; zero is allowed here."""
    m = _RE_RATIONAL.match(s)
    if m:
        return QQ.from_rational(_fraction(m.group(1), s))
    m = _RE_ZETA.match(s)
    if m:
        n = int(m.group(1))
        if n < 1:
            raise ParseError("zeta index must be >= 1", s.find(m.group(1)))
        k = int(m.group(2)) if m.group(2) else 1
        return cyclotomic_field(n).generator ** (k % n)
    m = _RE_QUAD.match(s)
    if m:
        field = quadratic_field(int(m.group(1)))
        return field.element([_fraction(m.group(2), s), _fraction(m.group(3), s)])
    m = _RE_NF.match(s)
    if m:
        modulus = [_fraction(t, s) for t in m.group(1).split(",")]
        coeffs = [_fraction(t, s) for t in m.group(2).split(",")] if m.group(2).strip() else []
        field = NumberField(modulus)
        if len(coeffs) > field.degree:
            raise ParseError(
                f"expected at most {field.degree} coefficients, got {len(coeffs)}",
                s.find("[", s.find(";")),
            )
        return field.element(coeffs)
    raise ParseError(f"unrecognised weight syntax {s!r}", 0)


class LambdaSpec:
    """A parsed, nonzero weight; ``raw`` round-trips through the grammar."""

    __slots__ = ("raw", "resolved")

    def __init__(self, raw: str, resolved: FieldElement):
        self.raw = raw
        self.resolved = resolved

    def __eq__(self, other):
        return isinstance(other, LambdaSpec) and self.resolved == other.resolved

    def __repr__(self):
        return f"LambdaSpec({self.raw!r})"


def parse_lambda(s: str) -> LambdaSpec:
    resolved = parse_element(s)
    if resolved.is_zero():
        raise InvalidWeight("weight must be nonzero")
    return LambdaSpec(s, resolved)


def format_lambda(spec: LambdaSpec) -> str:
    return canonical_str(spec.resolved)


# ---------------------------------------------------------------------------


def _parse_gens(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip() != ""]
    except ValueError:
        raise ParseError(f"bad generator list {text!r}") from None


def _value_obj(value: FieldElement) -> dict:
    obj = element_to_obj(value)
    obj["text"] = canonical_str(value)
    obj["pretty"] = pretty_str(value)
    return obj


def _forced_result(A, mu: int, lam: FieldElement, name: str) -> SumResult:
    """Run one specific formula, still enforcing its own preconditions."""
    try:
        formula = Formula(name)
    except ValueError:
        raise ParseError(f"unknown formula {name!r}") from None

    def need(cond: bool, msg: str):
        if not cond:
            raise PreconditionViolated(msg)

    gens = A.gens
    if formula is Formula.GENERAL:
        return weighted_power_sum(A, mu, lam)
    if formula is Formula.MU2:
        need(mu == 2, "mu2_thm2 computes the mu = 2 sum")
        return weighted_sum_mu2(A, lam)
    if formula is Formula.MU1:
        need(mu == 1, "mu1_thm3 computes the mu = 1 sum")
        return weighted_sum_mu1(A, lam)
    if formula is Formula.MU1_ROU:
        need(mu == 1, "mu1_rou_thm4 computes the mu = 1 sum")
        return weighted_sum_mu1_rou(A, lam)
    if formula is Formula.UNWEIGHTED:
        need(lam.is_one(), "unweighted_thm5 needs weight 1")
        return unweighted_power_sum(A, mu)
    if formula is Formula.ALTERNATING:
        need(mu == 1, "alternating_cor1 computes the mu = 1 sum")
        need(lam == -1, "alternating_cor1 needs weight -1")
        return alternating_sum(A)
    if formula is Formula.TWO_VAR:
        need(len(gens) == 2, "two_var_closed needs exactly two generators")
        return closed_two_var(gens[0], gens[1], lam)
    if formula is Formula.TWO_VAR_DEGENERATE:
        need(len(gens) == 2, "two_var_degenerate needs exactly two generators")
        need(mu == 1, "two_var_degenerate computes the mu = 1 sum")
        return closed_two_var_degenerate(gens[0], gens[1], lam)
    if formula is Formula.THREE_VAR:
        need(len(gens) == 3, "three_var_thm6 needs exactly three generators")
        need(mu == 1, "three_var_thm6 computes the mu = 1 sum")
        return closed_three_var(ThreeVarContext(*gens), lam)
    if formula is Formula.THREE_VAR_DEGENERATE:
        need(len(gens) == 3, "three_var_thm7 needs exactly three generators")
        need(mu == 1, "three_var_thm7 computes the mu = 1 sum")
        return closed_three_var_degenerate(ThreeVarContext(*gens), lam)
    # Formula.ORACLE
    return SumResult(brute_force_weighted_sum(A, mu, lam), Formula.ORACLE, None)


def _emit(envelope: dict, lines: list[str], args) -> None:
    if args.format == "json":
        print(json.dumps(envelope))
    else:
        if lines:
            print(lines[0])
        if not args.quiet:
            for line in lines[1:]:
                print(line)


def _cmd_apery(args) -> tuple[dict, list[str]]:
    A = validate_generators(_parse_gens(args.gens))
    ap = apery_set(A, args.pivot)
    result = {"pivot": ap.pivot, "reps": list(ap.reps)}
    lines = [",".join(str(m) for m in ap.reps), f"pivot: {ap.pivot}"]
    inputs = {"gens": list(A.gens), "pivot": args.pivot}
    return {"inputs": inputs, "result": result, "pivot": ap.pivot}, lines


def _cmd_frobenius(args) -> tuple[dict, list[str]]:
    A = validate_generators(_parse_gens(args.gens))
    g = frobenius_number(A)
    lines = ["undefined" if g is None else str(g)]
    return {"inputs": {"gens": list(A.gens)}, "result": g}, lines


def _cmd_genus(args) -> tuple[dict, list[str]]:
    A = validate_generators(_parse_gens(args.gens))
    n = sylvester_number(A)
    return {"inputs": {"gens": list(A.gens)}, "result": n}, [str(n)]


def _cmd_gaps(args) -> tuple[dict, list[str]]:
    A = validate_generators(_parse_gens(args.gens))
    gaps = list(gap_set(A))
    return (
        {"inputs": {"gens": list(A.gens)}, "result": gaps},
        [",".join(str(n) for n in gaps)],
    )


def _sum_lines(result: SumResult) -> list[str]:
    lines = [pretty_str(result.value), f"canonical: {canonical_str(result.value)}"]
    lines.append(f"formula: {result.formula_used.value}")
    if result.pivot_used is not None:
        lines.append(f"pivot: {result.pivot_used}")
    return lines


def _cmd_sum(args) -> tuple[dict, list[str]]:
    A = validate_generators(_parse_gens(args.gens))
    spec = parse_lambda(args.weight)
    if args.force_formula:
        result = _forced_result(A, args.mu, spec.resolved, args.force_formula)
    else:
        result = dispatch_sum(SumRequest(A, args.mu, spec.resolved))
    envelope = {
        "inputs": {"gens": list(A.gens), "mu": args.mu, "lambda": spec.raw},
        "result": _value_obj(result.value),
        "formula_used": result.formula_used.value,
        "pivot": result.pivot_used,
    }
    return envelope, _sum_lines(result)


def _cmd_verify(args) -> tuple[dict, list[str]]:
    A = validate_generators(_parse_gens(args.gens))
    spec = parse_lambda(args.weight)
    report = cross_validate(SumRequest(A, args.mu, spec.resolved))
    envelope = {
        "inputs": {"gens": list(A.gens), "mu": args.mu, "lambda": spec.raw},
        "result": {
            "agrees": report.agrees,
            "formula_value": _value_obj(report.formula_value),
            "oracle_value": _value_obj(report.oracle_value),
            "gap_count": report.gap_count,
        },
        "formula_used": report.formula_used.value,
        "pivot": None,
    }
    lines = [
        "true" if report.agrees else "false",
        f"formula_value: {pretty_str(report.formula_value)}",
        f"oracle_value: {pretty_str(report.oracle_value)}",
        f"formula: {report.formula_used.value}",
        f"gap_count: {report.gap_count}",
    ]
    return envelope, lines


def _cmd_closed3(args) -> tuple[dict, list[str]]:
    gens = _parse_gens(args.gens)
    if len(gens) != 3:
        raise ParseError("closed3 needs exactly three generators a,b,c")
    if min(gens) <= 0:
        raise NonPositive("generators must be positive")
    spec = parse_lambda(args.weight)
    ctx = ThreeVarContext(*gens)
    lam = spec.resolved
    pa, pb, pc = lam ** ctx.a, lam ** ctx.b, lam ** ctx.c
    if pa.is_one() or pb.is_one():
        raise PreconditionViolated(
            "lambda**a and lambda**b must differ from 1 for the closed three-variable forms"
        )
    if pc.is_one():
        result = closed_three_var_degenerate(ctx, lam)
    else:
        result = closed_three_var(ctx, lam)
    envelope = {
        "inputs": {"gens": gens, "lambda": spec.raw},
        "result": _value_obj(result.value),
        "formula_used": result.formula_used.value,
        "pivot": None,
    }
    return envelope, _sum_lines(result)


_HANDLERS = {
    "apery": _cmd_apery,
    "frobenius": _cmd_frobenius,
    "genus": _cmd_genus,
    "gaps": _cmd_gaps,
    "sum": _cmd_sum,
    "verify": _cmd_verify,
    "closed3": _cmd_closed3,
}


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--quiet", action="store_true")

    parser = argparse.ArgumentParser(
        prog="sylsum", description="Exact weighted gap sums over numerical semigroups."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("apery", parents=[common])
    p.add_argument("--gens", required=True)
    p.add_argument("--pivot", type=int, default=None)

    for name in ("frobenius", "genus", "gaps"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("--gens", required=True)

    p = sub.add_parser("sum", parents=[common])
    p.add_argument("--gens", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--lambda", dest="weight", required=True)
    p.add_argument(
        "--force-formula",
        choices=[f.value for f in Formula],
        default=None,
    )

    p = sub.add_parser("verify", parents=[common])
    p.add_argument("--gens", required=True)
    p.add_argument("--mu", type=int, required=True)
    p.add_argument("--lambda", dest="weight", required=True)

    p = sub.add_parser("closed3", parents=[common])
    p.add_argument("--gens", required=True)
    p.add_argument("--lambda", dest="weight", required=True)

    return parser


def _error_record(exc: Exception) -> str:
    return json.dumps({"error": type(exc).__name__, "message": str(exc)})


def run_command(argv: list[str]) -> int:
    """Execute one CLI invocation; returns the process exit code."""
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return 0 if e.code in (0, None) else 2

    start = time.perf_counter()
    try:
        envelope, lines = _HANDLERS[args.command](args)
    except (PreconditionViolated, ConditionNotMet) as exc:
        print(_error_record(exc), file=sys.stderr)
        return 3
    except ZeroDivisor as exc:
        print(_error_record(exc), file=sys.stderr)
        return 4
    except (
        ParseError,
        InvalidWeight,
        InvalidField,
        NotCoprime,
        NonPositive,
        EmptyGenerators,
        ValueError,
    ) as exc:
        print(_error_record(exc), file=sys.stderr)
        return 2

    elapsed_ms = int(round((time.perf_counter() - start) * 1000))
    full = {"command": args.command}
    full.update(envelope)
    full.setdefault("formula_used", None)
    full.setdefault("pivot", None)
    full["elapsed_ms"] = elapsed_ms
    _emit(full, lines, args)

    if args.command == "verify" and not full["result"]["agrees"]:
        return 1
    return 0


def main(argv: list[str] | None = None) -> int:
    return run_command(sys.argv[1:] if argv is None else argv)


if __name__ == "__main__":
    sys.exit(main())
