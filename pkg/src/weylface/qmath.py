"""Exact rational vector/matrix helpers shared by the rest of the package."""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Sequence, Tuple

QVector = Tuple[Fraction, ...]
QMatrix = Tuple[QVector, ...]


def qvec(values: Iterable) -> QVector:
    return tuple(Fraction(v) for v in values)


def zero(n: int) -> QVector:
    return (Fraction(0),) * n


def add(x: Sequence[Fraction], y: Sequence[Fraction]) -> QVector:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a + b for a, b in zip(x, y))


def sub(x: Sequence[Fraction], y: Sequence[Fraction]) -> QVector:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return tuple(a - b for a, b in zip(x, y))


def scale(c, x: Sequence[Fraction]) -> QVector:
    c = Fraction(c)
    return tuple(c * a for a in x)


def neg(x: Sequence[Fraction]) -> QVector:
    return tuple(-a for a in x)


def dot(x: Sequence[Fraction], y: Sequence[Fraction]) -> Fraction:
    if len(x) != len(y):
        raise ValueError(f"dimension mismatch: {len(x)} vs {len(y)}")
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def vsum(vectors: Iterable[Sequence[Fraction]], n: int) -> QVector:
    total = [Fraction(0)] * n
    for v in vectors:
        for i, a in enumerate(v):
            total[i] += a
    return tuple(total)


def matvec(m: Sequence[Sequence], x: Sequence) -> QVector:
    return tuple(sum((Fraction(a) * b for a, b in zip(row, x)), Fraction(0)) for row in m)


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> QMatrix:
    cols = list(zip(*b))
    return tuple(
        tuple(sum((Fraction(x) * y for x, y in zip(row, col)), Fraction(0)) for col in cols)
        for row in a
    )


def transpose(m: Sequence[Sequence]) -> QMatrix:
    return tuple(tuple(Fraction(v) for v in col) for col in zip(*m))


def identity(n: int) -> QMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n))


def solve(m: Sequence[Sequence], rhs: Sequence[Sequence], field=Fraction) -> QMatrix:
    """Solve ``m @ X = rhs`` for square nonsingular ``m`` by Gauss-Jordan.

    ``rhs`` is a matrix (list of rows); raises ``ZeroDivisionError`` when
    ``m`` is singular.  Entries are coerced through ``field``.
    """
    n = len(m)
    k = len(rhs[0]) if n else 0
    aug = [[field(v) for v in m[i]] + [field(v) for v in rhs[i]] for i in range(n)]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if piv is None:
            raise ZeroDivisionError("singular matrix")
        aug[col], aug[piv] = aug[piv], aug[col]
        p = aug[col][col]
        aug[col] = [v / p for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                f = aug[r][col]
                aug[r] = [a - f * b for a, b in zip(aug[r], aug[col])]
    return tuple(tuple(row[n:n + k]) for row in aug)


def inverse(m: Sequence[Sequence]) -> QMatrix:
    return solve(m, identity(len(m)))


def leading_minors(m: Sequence[Sequence]) -> list[Fraction]:
    out = []
    for k in range(1, len(m) + 1):
        out.append(det([row[:k] for row in m[:k]]))
    return out


def det(m: Sequence[Sequence]) -> Fraction:
    a = [[Fraction(v) for v in row] for row in m]
    n = len(a)
    result = Fraction(1)
    for col in range(n):
        piv = next((r for r in range(col, n) if a[r][col] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != col:
            a[col], a[piv] = a[piv], a[col]
            result = -result
        p = a[col][col]
        result *= p
        for r in range(col + 1, n):
            f = a[r][col] / p
            if f:
                a[r] = [x - f * y for x, y in zip(a[r], a[col])]
    return result


def primitive(x: Sequence[Fraction]) -> QVector:
    """Scale a nonzero rational vector to integer entries with gcd 1.

    The direction (sign) is preserved.
    """
    x = [Fraction(v) for v in x]
    if not any(x):
        raise ValueError("zero vector has no primitive form")
    lcm = 1
    for v in x:
        lcm = lcm * v.denominator // gcd(lcm, v.denominator)
    ints = [int(v * lcm) for v in x]
    g = 0
    for v in ints:
        g = gcd(g, v)
    return tuple(Fraction(v // g) for v in ints)


def fmt(q: Fraction) -> str:
    """Canonical text form: ``p/q`` in lowest terms with ``q > 0``; integers as ``p``."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not an exact rational: {text!r}") from exc
