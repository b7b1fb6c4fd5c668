"""Arithmetic carried out directly on metallic codes."""

from __future__ import annotations

import enum

from .numeration import (
    Grade,
    MetallicCode,
    Representation,
    decode,
    resolve,
    seq_m,
    zero,
)


class Ordering(enum.Enum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    def __str__(self) -> str:
        return self.name.lower()


def _same_grade(a: Representation, b: Representation) -> Grade:
    if a.grade != b.grade:
        raise ValueError(f"grade mismatch: p={a.grade.p} vs p={b.grade.p}")
    return a.grade


def _padded(a: Representation, b: Representation) -> tuple[list[int], list[int]]:
    n = max(len(a), len(b))
    return [a.place(i) for i in range(n)], [b.place(i) for i in range(n)]


def add(a: Representation, b: Representation) -> MetallicCode:
    """Digit-wise sum, carry rounds, then pattern elimination, to a fixpoint."""
    g = _same_grade(a, b)
    x, y = _padded(a, b)
    return MetallicCode(g, resolve(g, [u + v for u, v in zip(x, y)]))


def compare(a: MetallicCode, b: MetallicCode) -> Ordering:
    """Lexicographic order of zero-padded canonical codes."""
    _same_grade(a, b)
    for v in (a, b):
        if not isinstance(v, MetallicCode):
            raise TypeError("compare needs canonical codes")
    x, y = _padded(a, b)
    for u, v in zip(reversed(x), reversed(y)):
        if u != v:
            return Ordering.GREATER if u > v else Ordering.LESS
    return Ordering.EQUAL


def power(grade: Grade, k: int) -> MetallicCode:
    """The code 1 0^k of m_k."""
    return MetallicCode(grade, (1,) + (0,) * k)


def complement(b: MetallicCode, k: int) -> MetallicCode:
    """The code c with c + b = m_k, computed by liftings on d c^{k-2} d.

    An inversion is a place where b's digit exceeds the minuend's. It is
    resolved by borrowing one unit at the lowest higher place j where the
    minuend still exceeds b, saving the minuend's places 0..j-1 in an
    accumulator and rewriting them as d c^{j-2} d, whose value is m_j. When
    j is the place right above the inversion this is the textbook lifting.
    Borrowing at j keeps every digit non-negative, which covers a leading
    digit of b equal to d.
    """
    g = b.grade
    if k < 0:
        raise ValueError("k must be >= 0")
    target = seq_m(g, k)
    bv = decode(b)
    if bv > target:
        raise ValueError(f"{b} exceeds m_{k}")
    if bv == target:
        return zero(g)
    if k == 0:
        return MetallicCode(g, (1,))
    if k == 1:
        beta = b.place(0)
        return power(g, 1) if beta == 0 else MetallicCode(g, (g.d + 1 - beta,))
    d, c = g.d, g.c
    low_b = [b.place(i) for i in range(k)]
    low_a = [d] + [c] * (k - 2) + [d]
    saved: list[int] = [0] * k
    limit = 4 * k * k + 16
    for _ in range(limit):
        inv = next((i for i in range(k - 1, -1, -1) if low_b[i] > low_a[i]), None)
        if inv is None:
            break
        j = next((i for i in range(inv + 1, k) if low_a[i] > low_b[i]), None)
        if j is None:
            raise RuntimeError(f"no place to borrow from while complementing {b}")
        for i in range(j):
            saved[i] += low_a[i]
        low_a[j] -= 1
        if j == 1:
            low_a[0] = d + 1  # value m_1 = p-2 as a single intermediate digit
        else:
            low_a[0] = d
            for i in range(1, j - 1):
                low_a[i] = c
            low_a[j - 1] = d
    else:
        raise RuntimeError(f"liftings did not settle while complementing {b}")
    diff = [u - v for u, v in zip(low_a, low_b)]
    head = MetallicCode(g, resolve(g, diff))
    acc = MetallicCode(g, resolve(g, saved))
    return add(head, acc)


def subtract(a: MetallicCode, b: MetallicCode) -> MetallicCode:
    """a - b via ((alpha-1-beta) m_k) + complement(b_low, k) + a_low."""
    g = _same_grade(a, b)
    order = compare(a, b)
    if order is Ordering.LESS:
        raise ValueError(f"{a} < {b}: negative results are not representable")
    if order is Ordering.EQUAL:
        return zero(g)
    x, y = _padded(a, b)
    k = max(i for i in range(len(x)) if x[i] != y[i])
    alpha, beta = x[k], y[k]
    a_low = MetallicCode(g, tuple(reversed(x[:k])) or (0,))
    b_low = MetallicCode(g, tuple(reversed(y[:k])) or (0,))
    result = add(complement(b_low, k), a_low)
    m_k = power(g, k)
    for _ in range(alpha - 1 - beta):
        result = add(result, m_k)
    return result


def increment(a: MetallicCode) -> MetallicCode:
    """Code of n+1 from the code of n, branching on the last digit."""
    g = a.grade
    d, c = g.d, g.c
    low = a.low_first()
    if low[0] == d:
        low[0] = 0
        if len(low) == 1:
            low.append(0)
        low[1] += 1
        return MetallicCode(g, resolve(g, low))
    if low[0] < c:
        low[0] += 1
        return MetallicCode(g, tuple(reversed(low)))
    i = 0
    while i < len(low) and low[i] == c:
        i += 1
    stop = low[i] if i < len(low) else 0
    if stop < d:
        low[0] = d
        return MetallicCode(g, tuple(reversed(low)))
    for j in range(i + 1):
        low[j] = 0
    if i + 1 == len(low):
        low.append(0)
    low[i + 1] += 1
    return MetallicCode(g, resolve(g, low))


def decrement(a: MetallicCode) -> MetallicCode:
    """Code of n-1: lower the lowest nonzero digit, refill below with c..c d."""
    g = a.grade
    if a.is_zero:
        raise ValueError("zero has no predecessor")
    low = a.low_first()
    i = next(j for j, x in enumerate(low) if x)
    low[i] -= 1
    for j in range(i - 1):
        low[j] = g.c
    if i >= 1:
        low[i - 1] = g.d
    return MetallicCode(g, tuple(reversed(low)))
