"""Dense integer polynomials in the power basis, plus falling-factorial conversion."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable


@dataclass(frozen=True)
class IntPolynomial:
    """Polynomial with exact integer coefficients, constant term first.

    Trailing zero coefficients are stripped, so the zero polynomial has
    ``coeffs == ()`` and degree -1.
    """

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        c = [int(a) for a in coeffs]
        while c and c[-1] == 0:
            c.pop()
        object.__setattr__(self, "coeffs", tuple(c))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def coefficient(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __call__(self, x):
        acc = 0
        for a in reversed(self.coeffs):
            acc = acc * x + a
        return acc

    def __add__(self, other: "IntPolynomial") -> "IntPolynomial":
        size = max(len(self.coeffs), len(other.coeffs))
        return IntPolynomial(self.coefficient(i) + other.coefficient(i) for i in range(size))

    def __mul__(self, other: "IntPolynomial") -> "IntPolynomial":
        if not self.coeffs or not other.coeffs:
            return IntPolynomial(())
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPolynomial(out)

    def shift(self, y: int) -> "IntPolynomial":
        """The polynomial ``x -> self(x + y)``."""
        out = IntPolynomial(())
        for a in reversed(self.coeffs):
            out = out * IntPolynomial((y, 1)) + IntPolynomial((a,))
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_list())

    def to_list(self) -> list[str]:
        return [str(a) for a in self.coeffs] or ["0"]

    @classmethod
    def from_list(cls, items) -> "IntPolynomial":
        return cls(int(a) for a in items)

    def __str__(self):
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            a = self.coeffs[i]
            if a == 0:
                continue
            mag = abs(a)
            body = "" if (mag == 1 and i) else str(mag)
            if i == 1:
                body += "x"
            elif i > 1:
                body += f"x^{i}"
            sign = "-" if a < 0 else "+"
            terms.append((sign, body))
        first_sign, first = terms[0]
        text = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            text += f" {sign} {body}"
        return text


ONE = IntPolynomial((1,))
X = IntPolynomial((0, 1))


@lru_cache(maxsize=None)
def stirling1_signed(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows ``s(j, i)`` for ``j <= n``: ``x(x-1)...(x-j+1) = sum_i s(j, i) x^i``."""
    rows = [(1,)]
    for j in range(1, n + 1):
        prev = rows[-1]
        row = [0] * (j + 1)
        for i, a in enumerate(prev):
            row[i + 1] += a
            row[i] -= (j - 1) * a
        rows.append(tuple(row))
    return tuple(rows)


@lru_cache(maxsize=None)
def stirling2(n: int) -> tuple[tuple[int, ...], ...]:
    """Rows ``S(i, j)`` for ``i <= n``: ``x^i = sum_j S(i, j) x(x-1)...(x-j+1)``."""
    rows = [(1,)]
    for i in range(1, n + 1):
        prev = rows[-1]
        row = [0] * (i + 1)
        for j, a in enumerate(prev):
            row[j] += j * a
            row[j + 1] += a
        rows.append(tuple(row))
    return tuple(rows)


def from_falling(counts) -> IntPolynomial:
    """Power-basis form of ``sum_j counts[j] * x(x-1)...(x-j+1)``."""
    n = len(counts) - 1
    table = stirling1_signed(max(n, 0))
    out = [0] * (n + 1)
    for j, c in enumerate(counts):
        if c:
            for i, s in enumerate(table[j]):
                out[i] += c * s
    return IntPolynomial(out)


def to_falling(P: IntPolynomial) -> list[int]:
    """Falling-factorial coefficients of P (inverse of :func:`from_falling`)."""
    n = max(P.degree, 0)
    table = stirling2(n)
    out = [0] * (n + 1)
    for i, a in enumerate(P.coeffs):
        if a:
            for j, s in enumerate(table[i]):
                out[j] += a * s
    return out
