"""Exact combinatorial coefficients: Eulerian numbers, Bernoulli numbers,
and the Bernoulli closed form for power sums.

The Eulerian triangle entry(n, m) counts permutations of 1..n with exactly
m ascents and is evaluated by the alternating binomial sum
sum_{k=0}^{m+1} (-1)^k C(n+1, k) (m-k+1)^n with 0**0 == 1, so entry(0, 0)
is 1.  Bernoulli numbers follow the x/(e^x - 1) convention, i.e. B_1 = -1/2.

Both tables are memoized per process; growth is append-only behind a lock
so concurrent readers are safe.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from math import comb


class EulerianTable:
    """Lazily grown triangle of Eulerian numbers.

    Row n holds entries for 0 <= m <= n; the diagonal entry (n, n) is 0
    for n >= 1 and the row sums to n!.
    """

    def __init__(self):
        self._rows: list[list[int]] = [[1]]
        self._lock = threading.Lock()

    @staticmethod
    def _entry(n: int, m: int) -> int:
        total = 0
        for k in range(m + 2):
            base = m - k + 1
            power = 1 if n == 0 else base**n
            total += (-1) ** k * comb(n + 1, k) * power
        return total

    def value(self, n: int, m: int) -> int:
        if n < 0:
            raise ValueError("row index must be nonnegative")
        if m < 0 or m >= max(n, 1):
            return 0
        if n >= len(self._rows):
            with self._lock:
                while len(self._rows) <= n:
                    r = len(self._rows)
                    self._rows.append([self._entry(r, j) for j in range(r + 1)])
        return self._rows[n][m]

    def row(self, n: int) -> tuple[int, ...]:
        self.value(n, 0)
        return tuple(self._rows[n])


class BernoulliCache:
    """Bernoulli numbers B_0, B_1, ... via the defining recurrence
    sum_{j=0}^{n} C(n+1, j) B_j = 0 with B_0 = 1."""

    def __init__(self):
        self._values: list[Fraction] = [Fraction(1)]
        self._lock = threading.Lock()

    def value(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError("index must be nonnegative")
        if n >= len(self._values):
            with self._lock:
                while len(self._values) <= n:
                    r = len(self._values)
                    acc = sum(
                        comb(r + 1, j) * self._values[j] for j in range(r)
                    )
                    self._values.append(Fraction(-acc, r + 1))
        return self._values[n]


_EULERIAN = EulerianTable()
_BERNOULLI = BernoulliCache()


def eulerian(n: int, m: int) -> int:
    """Eulerian number for n >= 0; 0 outside the triangle."""
    return _EULERIAN.value(n, m)


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2."""
    return _BERNOULLI.value(n)


def faulhaber_sum(ell: int, kappa: int) -> Fraction:
    """sum_{j=1}^{ell} j**kappa, by the Bernoulli closed form.

    Exact for arbitrarily large ``ell``; the result is an integer-valued
    Fraction.
    """
    if ell < 0:
        raise ValueError("upper limit must be nonnegative")
    if kappa < 0:
        raise ValueError("exponent must be nonnegative")
    total = Fraction(0)
    for i in range(1, kappa + 2):
        total += comb(kappa + 1, i) * (-1) ** (kappa - i + 1) * bernoulli(kappa - i + 1) * ell**i
    return total / (kappa + 1)
