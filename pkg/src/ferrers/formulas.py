"""Closed-form path counts: Catalan, Fuss-Catalan, coprime-rectangle,
prime-side, ballot, line-avoiding and Bizley's formula.

All arithmetic is exact.  Quotients that are integers in theory go through
:func:`_exact_div`, which refuses to round.
"""
from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial, gcd, prod
from typing import Iterable, Iterator

from .errors import (
    DomainViolation,
    InexactDivision,
    InexactFinalResult,
    InvalidSize,
    NotCoprime,
    NotPrime,
)


def _exact_div(num: int, den: int) -> int:
    q, r = divmod(num, den)
    if r:
        raise InexactDivision(f"{num} / {den} is not an integer")
    return q


def _positive(**kwargs):
    for name, value in kwargs.items():
        if value < 1:
            raise InvalidSize(f"{name} must be positive, got {value}")


@lru_cache(maxsize=None)
def catalan(n: int) -> int:
    if n < 0:
        raise InvalidSize(f"n must be nonnegative, got {n}")
    return _exact_div(comb(2 * n, n), n + 1)


def fuss_catalan(a: int, k: int) -> int:
    """Paths in the ``a x ak`` lattice: ``C(ak + a, a) / (ak + 1)``."""
    _positive(a=a, k=k)
    return _exact_div(comb(a * k + a, a), a * k + 1)


def general_catalan(a: int, b: int) -> int:
    """Paths in the ``a x b`` lattice for coprime sides: ``C(a + b, a) / (a + b)``."""
    _positive(a=a, b=b)
    if gcd(a, b) != 1:
        raise NotCoprime(f"gcd({a}, {b}) = {gcd(a, b)}")
    return _exact_div(comb(a + b, a), a + b)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


def dyck_count_prime(p: int, b: int) -> int:
    """Paths in the ``p x b`` lattice when ``p`` is prime."""
    _positive(b=b)
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime")
    if b % p:
        return _exact_div(comb(p + b, p), p + b)
    return _exact_div(comb(p + b + 1, p), p + b + 1)


def ballot_general(a: int, b: int, k: int) -> Fraction:
    """``(b - ka + 1) / b * C(a + b, a)`` as printed, for ``k >= 1`` and ``b > ak``.

    Returned as a Fraction; the value is not always an integer.
    """
    _positive(a=a, b=b)
    if k < 1 or b <= a * k:
        raise DomainViolation(f"need k >= 1 and b > a*k, got a={a}, b={b}, k={k}")
    return Fraction(b - k * a + 1, b) * comb(a + b, a)


def avoid_line_count(n: int, k: int) -> int:
    """``C(2(k+1)n, 2n) - (k-1) * sum_{i<2n} C(2(k+1)n, i)``, evaluated as printed.

    The result is a signed integer; it can go negative for large ``k``.
    """
    _positive(n=n)
    if k < 0:
        raise DomainViolation(f"k must be nonnegative, got {k}")
    top = 2 * (k + 1) * n
    return comb(top, 2 * n) - (k - 1) * sum(comb(top, i) for i in range(2 * n))


def partitions(d: int, largest: int | None = None) -> Iterator[tuple[int, ...]]:
    """Integer partitions of ``d`` as weakly decreasing tuples."""
    if largest is None:
        largest = d
    if d == 0:
        yield ()
        return
    for first in range(min(d, largest), 0, -1):
        for rest in partitions(d - first, first):
            yield (first,) + rest


def z_of(parts: Iterable[int]) -> int:
    """Centraliser size ``prod_j j**m_j * m_j!`` for multiplicities ``m_j``."""
    counts = Counter(parts)
    return prod(j**m * factorial(m) for j, m in counts.items())


def _bizley_terms(m: int, n: int) -> tuple[int, int, int, list[Fraction]]:
    _positive(m=m, n=n)
    d = gcd(m, n)
    a, b = m // d, n // d
    # phi[j] = C(j(a+b), ja) / (j(a+b))
    phi = [Fraction(0)] + [
        Fraction(comb(j * (a + b), j * a), j * (a + b)) for j in range(1, d + 1)
    ]
    return d, a, b, phi


def bizley_count(m: int, n: int) -> int:
    """Paths in the ``m x n`` lattice weakly below the diagonal, any gcd.

    With ``d = gcd(m, n)`` this is the degree-``d`` coefficient of
    ``exp(sum_j phi_j t**j)``, computed by the recurrence
    ``k h_k = sum_{j<=k} j phi_j h_{k-j}``.
    """
    d, _, _, phi = _bizley_terms(m, n)
    h = [Fraction(1)]
    for k in range(1, d + 1):
        h.append(sum(j * phi[j] * h[k - j] for j in range(1, k + 1)) / k)
    result = h[d]
    if result.denominator != 1:
        raise InexactFinalResult(f"bizley_count({m}, {n}) came out as {result}")
    return result.numerator


def bizley_partition_sum(m: int, n: int) -> int:
    """Same count as :func:`bizley_count`, summed over partitions of the gcd.

    Each partition ``lam`` of ``d`` contributes ``prod_i (lam_i phi_{lam_i}) / z_lam``.
    """
    d, _, _, phi = _bizley_terms(m, n)
    total = sum(
        Fraction(prod(part * phi[part] for part in lam), z_of(lam)) for lam in partitions(d)
    )
    if total.denominator != 1:
        raise InexactFinalResult(f"bizley_partition_sum({m}, {n}) came out as {total}")
    return total.numerator
