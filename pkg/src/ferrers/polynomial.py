"""Formal integer combinations of products of Catalan numbers.

A monomial is a descending tuple of staircase sizes, each at least 2:
``(3, 2)`` stands for ``C3*C2`` and ``()`` for the constant 1.
"""
from __future__ import annotations

from typing import Iterable, Iterator, Mapping

from .errors import NegativeCount
from .formulas import catalan

Monomial = tuple[int, ...]


def _monomial(sizes: Iterable[int]) -> Monomial:
    # C_1 = C_0 = 1 drop out of products
    return tuple(sorted((n for n in sizes if n >= 2), reverse=True))


class CatalanPolynomial:
    """Immutable mapping from monomials to nonzero integer coefficients."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | Iterable[tuple[Monomial, int]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        merged: dict[Monomial, int] = {}
        for mono, coeff in items:
            key = _monomial(mono)
            merged[key] = merged.get(key, 0) + coeff
        self._terms = {k: v for k, v in merged.items() if v}
        self._hash = None

    @classmethod
    def staircase(cls, n: int) -> "CatalanPolynomial":
        """``C_n`` as a polynomial; ``C_1`` is the constant 1."""
        return cls({(n,): 1})

    @classmethod
    def one(cls) -> "CatalanPolynomial":
        return cls({(): 1})

    @classmethod
    def zero(cls) -> "CatalanPolynomial":
        return cls()

    @property
    def terms(self) -> dict[Monomial, int]:
        return dict(self._terms)

    def __iter__(self) -> Iterator[tuple[Monomial, int]]:
        for mono in sorted(self._terms, reverse=True):
            yield mono, self._terms[mono]

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, CatalanPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    @classmethod
    def _canonical(cls, terms: dict[Monomial, int]) -> "CatalanPolynomial":
        # keys already canonical monomials; only zero coefficients are dropped
        p = object.__new__(cls)
        p._terms = {k: v for k, v in terms.items() if v}
        p._hash = None
        return p

    def __add__(self, other: "CatalanPolynomial") -> "CatalanPolynomial":
        merged = dict(self._terms)
        for mono, coeff in other._terms.items():
            merged[mono] = merged.get(mono, 0) + coeff
        return CatalanPolynomial._canonical(merged)

    def __neg__(self):
        return CatalanPolynomial({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other: "CatalanPolynomial") -> "CatalanPolynomial":
        merged: dict[Monomial, int] = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                mono = tuple(sorted(m1 + m2, reverse=True)) if m1 and m2 else m1 or m2
                merged[mono] = merged.get(mono, 0) + c1 * c2
        return CatalanPolynomial._canonical(merged)

    def value(self) -> int:
        """Signed value with every ``C_n`` replaced by the Catalan number."""
        total = 0
        for mono, coeff in self._terms.items():
            term = coeff
            for n in mono:
                term *= catalan(n)
            total += term
        return total

    def to_json(self) -> list[dict]:
        return [{"coeff": c, "monomial": list(m)} for m, c in self]

    @classmethod
    def from_json(cls, data: list[dict]) -> "CatalanPolynomial":
        return cls((tuple(t["monomial"]), int(t["coeff"])) for t in data)

    def __str__(self):
        if not self._terms:
            return "0"
        out = []
        for mono, coeff in self:
            factors = []
            i = 0
            while i < len(mono):
                j = i
                while j < len(mono) and mono[j] == mono[i]:
                    j += 1
                power = j - i
                factors.append(f"C{mono[i]}" + (f"^{power}" if power > 1 else ""))
                i = j
            body = "*".join(factors)
            mag = abs(coeff)
            if not body:
                text = str(mag)
            elif mag == 1:
                text = body
            else:
                text = f"{mag}*{body}"
            if not out:
                out.append(text if coeff > 0 else f"-{text}")
            else:
                out.append(("+ " if coeff > 0 else "- ") + text)
        return " ".join(out)

    def __repr__(self):
        return f"CatalanPolynomial({str(self)!r})"


def evaluate(p: CatalanPolynomial) -> int:
    """Path count represented by ``p``; refuses a negative total."""
    v = p.value()
    if v < 0:
        raise NegativeCount(f"{p} evaluates to {v}")
    return v
