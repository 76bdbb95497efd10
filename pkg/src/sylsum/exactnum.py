"""Exact scalar arithmetic in Q and in quotient rings Q[x]/(f).

Every weight and every computed sum in this package is an element of some
number field, represented as a polynomial residue with ``fractions.Fraction``
coefficients.  The rational field itself is the degree-1 quotient Q[x]/(x),
so a single element type covers rational weights, roots of unity and
quadratic irrationals alike.

Conventions:
  * moduli are monic with degree >= 1, stored constant term first;
  * arithmetic is ring arithmetic: the modulus is never checked for
    irreducibility, and only inversion can fail (``ZeroDivisor``);
  * ``e ** 0 == 1`` for every element, including zero.
"""

from __future__ import annotations

import functools
from fractions import Fraction
from math import gcd as gcd_int
from typing import Iterable, Sequence, Union

Rational = Fraction

Scalar = Union[int, Fraction, "FieldElement"]


class InvalidField(ValueError):
    """Field constructor arguments do not describe a valid field."""


class FieldMismatch(ValueError):
    """Operands belong to different fields."""


class ZeroDivisor(ArithmeticError):
    """Inversion failed because the element divides zero (reducible modulus)."""


class DivideByZero(ZeroDivisionError):
    """Inversion of the zero element."""


# ---------------------------------------------------------------------------
# polynomial helpers over Fraction, constant term first, no trailing zeros


def _trim(p: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(p)
    while n > 0 and p[n - 1] == 0:
        n -= 1
    return tuple(p[:n])


def _padd(p, q):
    if len(p) < len(q):
        p, q = q, p
    out = list(p)
    for i, c in enumerate(q):
        out[i] += c
    return _trim(out)


def _pneg(p):
    return tuple(-c for c in p)


def _pmul(p, q):
    if not p or not q:
        return ()
    out = [Fraction(0)] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return _trim(out)


def _pdivmod(p, q):
    """Polynomial division over Q; q must be nonzero."""
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    rem = list(p)
    dq = len(q) - 1
    lead = q[-1]
    quot = [Fraction(0)] * max(len(p) - dq, 0)
    for i in range(len(rem) - 1, dq - 1, -1):
        c = rem[i]
        if c == 0:
            continue
        f = c / lead
        quot[i - dq] = f
        for j in range(dq + 1):
            rem[i - dq + j] -= f * q[j]
    return _trim(quot), _trim(rem)


def _pxgcd(p, q):
    """Extended Euclid over Q[x]: returns (g, u, v) with u*p + v*q = g."""
    r0, r1 = _trim(p), _trim(q)
    u0, u1 = (Fraction(1),), ()
    v0, v1 = (), (Fraction(1),)
    while r1:
        quo, rem = _pdivmod(r0, r1)
        r0, r1 = r1, rem
        u0, u1 = u1, _padd(u0, _pneg(_pmul(quo, u1)))
        v0, v1 = v1, _padd(v0, _pneg(_pmul(quo, v1)))
    return r0, u0, v0


def _fraction_str(q: Fraction) -> str:
    return str(q)  # "p/q" or "p"


# ---------------------------------------------------------------------------


class NumberField:
    """The quotient ring Q[x]/(f) for a monic polynomial f of degree >= 1.

    ``tag`` records how the field was built (``("cyclotomic", n)`` or
    ``("quadratic", d)``) and is cosmetic: equality and hashing use the
    modulus alone, so e.g. the fourth cyclotomic field and Q(sqrt(-1))
    are the same field.
    """

    __slots__ = ("modulus", "label", "tag")

    def __init__(self, modulus: Iterable, label: str | None = None, tag=None):
        coeffs = tuple(Fraction(c) for c in modulus)
        if len(coeffs) < 2:
            raise InvalidField("modulus must have degree >= 1")
        if coeffs[-1] != 1:
            raise InvalidField("modulus must be monic")
        self.modulus = coeffs
        self.label = label if label is not None else f"Q[x]/({_poly_str(coeffs)})"
        self.tag = tag

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    def element(self, coeffs: Iterable) -> "FieldElement":
        """Build an element from polynomial coefficients (constant first).

        Longer coefficient lists are reduced modulo the field modulus,
        shorter ones are zero padded.
        """
        poly = _trim([Fraction(c) for c in coeffs])
        if len(poly) > self.degree:
            _, poly = _pdivmod(poly, self.modulus)
        padded = list(poly) + [Fraction(0)] * (self.degree - len(poly))
        return FieldElement(self, tuple(padded))

    def from_rational(self, value) -> "FieldElement":
        return self.element([Fraction(value)])

    @property
    def zero(self) -> "FieldElement":
        return self.from_rational(0)

    @property
    def one(self) -> "FieldElement":
        return self.from_rational(1)

    @property
    def generator(self) -> "FieldElement":
        """The residue of x in this field."""
        return self.element([0, 1])

    def __eq__(self, other):
        if isinstance(other, NumberField):
            return self.modulus == other.modulus
        return NotImplemented

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"NumberField({self.label})"


class FieldElement:
    """An element of a :class:`NumberField`, immutable after construction.

    Supports +, -, *, /, ** and exact equality.  Integers and Fractions
    coerce to constants of the same field, so formula code can mix scalars
    freely.  Equality against elements of a *different* field is defined
    only when at least one side is rational valued; otherwise it raises
    ``FieldMismatch`` rather than guessing.
    """

    __slots__ = ("field", "coeffs")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        if len(coeffs) != field.degree:
            raise InvalidField("coefficient count must equal the field degree")
        self.field = field
        self.coeffs = coeffs

    # -- predicates --------------------------------------------------------

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def is_one(self) -> bool:
        return self.coeffs[0] == 1 and all(c == 0 for c in self.coeffs[1:])

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self!r} is not rational valued")
        return self.coeffs[0]

    def __bool__(self):
        return not self.is_zero()

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, FieldElement):
            if other.field != self.field:
                if other.is_rational():
                    return self.field.from_rational(other.coeffs[0])
                raise FieldMismatch(
                    f"cannot combine elements of {self.field.label} and {other.field.label}"
                )
            return other
        if isinstance(other, (int, Fraction)):
            return self.field.from_rational(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return FieldElement(self.field, tuple(a - b for a, b in zip(self.coeffs, o.coeffs)))

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            q = Fraction(other)
            return FieldElement(self.field, tuple(c * q for c in self.coeffs))
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        prod = _pmul(_trim(self.coeffs), _trim(o.coeffs))
        return self.field.element(prod)

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        """Multiplicative inverse by the extended Euclidean algorithm."""
        if self.is_zero():
            raise DivideByZero(f"zero has no inverse in {self.field.label}")
        g, u, _ = _pxgcd(_trim(self.coeffs), self.field.modulus)
        if len(g) != 1:
            raise ZeroDivisor(
                f"{self!r} is a zero divisor modulo {_poly_str(self.field.modulus)}"
            )
        return self.field.element(_pmul(u, (1 / g[0],)))

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o * self.inverse()

    def __pow__(self, exponent: int):
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one  # 0**0 == 1 by convention
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if isinstance(other, FieldElement):
            if other.field == self.field:
                return self.coeffs == other.coeffs
            if self.is_rational() or other.is_rational():
                return (
                    self.is_rational()
                    and other.is_rational()
                    and self.coeffs[0] == other.coeffs[0]
                )
            raise FieldMismatch(
                f"cannot compare elements of {self.field.label} and {other.field.label}"
            )
        return NotImplemented

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        return hash((self.field.modulus, self.coeffs))

    def __repr__(self):
        return f"<{pretty_str(self)} in {self.field.label}>"


# ---------------------------------------------------------------------------
# built-in fields

#: The rational field, realised as Q[x]/(x) so elements are bare constants.
QQ = NumberField((0, 1), label="Q", tag=("rational",))


@functools.lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[Fraction, ...]:
    # (x^n - 1) divided by the cyclotomic polynomials of all proper divisors
    poly = [Fraction(-1)] + [Fraction(0)] * (n - 1) + [Fraction(1)]
    poly = _trim(poly)
    for d in range(1, n):
        if n % d == 0:
            quo, rem = _pdivmod(poly, _cyclotomic_poly(d))
            assert not rem
            poly = quo
    return poly


def cyclotomic_field(n: int) -> NumberField:
    """Q adjoined a primitive n-th root of unity, as Q[x]/(Phi_n)."""
    if n < 1:
        raise InvalidField("cyclotomic index must be >= 1")
    return NumberField(_cyclotomic_poly(n), label=f"Q(zeta_{n})", tag=("cyclotomic", n))


def zeta(n: int) -> FieldElement:
    """A primitive n-th root of unity (the generator of ``cyclotomic_field(n)``)."""
    return cyclotomic_field(n).generator


def _is_squarefree(n: int) -> bool:
    n = abs(n)
    p = 2
    while p * p <= n:
        if n % (p * p) == 0:
            return False
        if n % p == 0:
            n //= p
        p += 1
    return True


def quadratic_field(d: int) -> NumberField:
    """Q(sqrt(d)) as Q[x]/(x^2 - d), for squarefree d not in {0, 1}."""
    if d in (0, 1):
        raise InvalidField(f"no quadratic field for d={d}")
    if not _is_squarefree(d):
        raise InvalidField(f"d={d} is not squarefree")
    return NumberField((-d, 0, 1), label=f"Q(sqrt({d}))", tag=("quadratic", d))


def sqrt_of(d: int) -> FieldElement:
    """sqrt(d) as the generator of ``quadratic_field(d)``."""
    return quadratic_field(d).generator


def to_element(value: Scalar, field: NumberField | None = None) -> FieldElement:
    """Coerce an int, Fraction or FieldElement into a field element.

    Plain numbers land in ``field`` (default Q).  A FieldElement is returned
    unchanged unless a different target field is requested, in which case it
    must be rational valued.
    """
    if isinstance(value, FieldElement):
        if field is None or field == value.field:
            return value
        return field.from_rational(value.as_rational())
    return (field or QQ).from_rational(Fraction(value))


# ---------------------------------------------------------------------------
# text forms


def _poly_str(coeffs: Sequence[Fraction], symbol: str = "x", ascending: bool = False) -> str:
    order = range(len(coeffs)) if ascending else range(len(coeffs) - 1, -1, -1)
    terms = []
    for k in order:
        c = coeffs[k]
        if c == 0:
            continue
        if k == 0:
            body = _fraction_str(abs(c))
        else:
            mon = symbol if k == 1 else f"{symbol}^{k}"
            body = mon if abs(c) == 1 else f"{_fraction_str(abs(c))}*{mon}"
        sign = "-" if c < 0 else ("+" if terms else "")
        terms.append(sign + body)
    return "".join(terms) if terms else "0"


def canonical_str(e: FieldElement) -> str:
    """Canonical text form, re-parseable by the CLI weight grammar.

    Rationals print as ``p/q``; pure powers of a cyclotomic generator as
    ``zeta(n)^k``; elements of Q(sqrt(d)) as ``q(d; r0, r1)``; everything
    else as ``nf([modulus]; [coeffs])``.
    """
    field = e.field
    if field == QQ:
        return _fraction_str(e.coeffs[0])
    tag = field.tag or ()
    if tag[:1] == ("cyclotomic",):
        nonzero = [k for k, c in enumerate(e.coeffs) if c != 0]
        if len(nonzero) == 1 and e.coeffs[nonzero[0]] == 1:
            return f"zeta({tag[1]})^{nonzero[0]}"
    if tag[:1] == ("quadratic",):
        return f"q({tag[1]}; {_fraction_str(e.coeffs[0])}, {_fraction_str(e.coeffs[1])})"
    mod = ",".join(_fraction_str(c) for c in field.modulus)
    coeffs = ",".join(_fraction_str(c) for c in e.coeffs)
    return f"nf([{mod}]; [{coeffs}])"


def pretty_str(e: FieldElement) -> str:
    """Human-oriented rendering: a polynomial in zeta(n), sqrt(d) or x,
    constant term first, over a common denominator, e.g.
    ``(-443+391*sqrt(-3))/2``."""
    if e.is_rational():
        return _fraction_str(e.coeffs[0])
    tag = e.field.tag or ()
    if tag[:1] == ("cyclotomic",):
        symbol = f"zeta({tag[1]})"
    elif tag[:1] == ("quadratic",):
        symbol = f"sqrt({tag[1]})"
    else:
        symbol = "x"
    denom = 1
    for c in e.coeffs:
        denom = denom * c.denominator // gcd_int(denom, c.denominator)
    if denom == 1:
        return _poly_str(e.coeffs, symbol, ascending=True)
    scaled = [c * denom for c in e.coeffs]
    return f"({_poly_str(scaled, symbol, ascending=True)})/{denom}"


def element_to_obj(e: FieldElement) -> dict:
    """JSON-ready dict: coefficient strings plus the modulus, bit exact."""
    return {
        "coeffs": [_fraction_str(c) for c in e.coeffs],
        "modulus": [_fraction_str(c) for c in e.field.modulus],
        "label": e.field.label,
    }


def element_from_obj(obj: dict) -> FieldElement:
    """Inverse of :func:`element_to_obj` (field tag is not restored)."""
    modulus = tuple(Fraction(c) for c in obj["modulus"])
    if modulus == QQ.modulus:
        field = QQ
    else:
        field = NumberField(modulus, label=obj.get("label"))
    return field.element([Fraction(c) for c in obj["coeffs"]])
