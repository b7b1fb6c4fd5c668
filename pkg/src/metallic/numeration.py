"""Metallic sequences and canonical metallic codes.

For a grade p >= 5 the basis is m_{-1}=0, m_0=1, m_{n+2}=(p-2)m_{n+1}-m_n.
Every n >= 0 has a unique digit string over {0..p-3} that sums to n against
that basis and avoids the factor d c* d, where d = p-3 and c = p-4.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

_SYMBOLS = "0123456789ABC"


@dataclass(frozen=True)
class Grade:
    """The tiling parameter p together with the digit names derived from it."""

    p: int

    def __post_init__(self) -> None:
        if not isinstance(self.p, int) or self.p < 5:
            raise ValueError(f"grade needs an integer p >= 5, got {self.p!r}")

    @property
    def d(self) -> int:
        return self.p - 3

    @property
    def c(self) -> int:
        return self.p - 4

    @property
    def e(self) -> int:
        if self.p == 5:
            raise ValueError("the digit e only exists for p > 5")
        return self.p - 5


def as_grade(grade: Grade | int) -> Grade:
    return grade if isinstance(grade, Grade) else Grade(grade)


# Sequence tables grow on demand, one list per (p, sequence).
_TABLES: dict[tuple[int, str], list[int]] = {}


def _table(p: int, name: str, n: int) -> list[int]:
    key = (p, name)
    tab = _TABLES.get(key)
    if tab is None:
        # stored from index -1 (m, M) or 0 (b); see offsets below
        tab = {"m": [0, 1], "b": [1, p - 3], "M": [0, 1]}[name]
        _TABLES[key] = tab
    offset = 0 if name == "b" else 1
    while len(tab) <= n + offset:
        nxt = (p - 2) * tab[-1] - tab[-2]
        if name == "M":
            nxt += 1
        tab.append(nxt)
    return tab


def seq_m(grade: Grade | int, n: int) -> int:
    """White metallic sequence: number of nodes on level n of the white tree."""
    g = as_grade(grade)
    if n < -1:
        raise ValueError("seq_m is defined for n >= -1")
    return _table(g.p, "m", n)[n + 1]


def seq_b(grade: Grade | int, n: int) -> int:
    """Black metallic sequence: number of nodes on level n of the black tree."""
    g = as_grade(grade)
    if n < 0:
        raise ValueError("seq_b is defined for n >= 0")
    return _table(g.p, "b", n)[n]


def seq_M(grade: Grade | int, n: int) -> int:
    """Partial sums of seq_m; the number of the rightmost white node on level n."""
    g = as_grade(grade)
    if n < -1:
        raise ValueError("seq_M is defined for n >= -1")
    return _table(g.p, "M", n)[n + 1]


def format_digits(grade: Grade | int, digits: Sequence[int]) -> str:
    g = as_grade(grade)
    if g.p <= 13:
        return "".join(_SYMBOLS[x] for x in digits)
    return ".".join(str(x) for x in digits)


def parse_digits(text: str) -> list[int]:
    """Read either text form: '10A2' style or dotted decimal '1.0.10.2'."""
    text = text.strip()
    if not text:
        raise ValueError("empty code")
    if "." in text:
        try:
            out = [int(part) for part in text.split(".")]
        except ValueError:
            raise ValueError(f"bad dotted code {text!r}") from None
        if any(x < 0 for x in out):
            raise ValueError(f"negative digit in {text!r}")
        return out
    out = []
    for ch in text.upper():
        idx = _SYMBOLS.find(ch)
        if idx < 0:
            raise ValueError(f"bad digit {ch!r} in {text!r}")
        out.append(idx)
    return out


def _trim(digits: Iterable[int]) -> tuple[int, ...]:
    digits = tuple(digits)
    i = 0
    while i < len(digits) - 1 and digits[i] == 0:
        i += 1
    return digits[i:] if digits else (0,)


def forbidden_factor(grade: Grade | int, digits: Sequence[int]) -> tuple[int, int] | None:
    """Lowest factor d c^k d, as places (low, high) of its two d's; None if absent.

    `digits` is most-significant first; places count from the right.
    """
    g = as_grade(grade)
    start = None
    for place in range(len(digits)):
        x = digits[-1 - place]
        if x == g.d:
            if start is not None:
                return start, place
            start = place
        elif x != g.c:
            start = None
    return None


@dataclass(frozen=True)
class Representation:
    """A digit string against the m_i basis, not necessarily canonical."""

    grade: Grade
    digits: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "grade", as_grade(self.grade))
        digits = _trim(self.digits)
        if any((not isinstance(x, int)) or x < 0 for x in digits):
            raise ValueError(f"digits must be non-negative integers: {digits}")
        object.__setattr__(self, "digits", digits)

    def place(self, i: int) -> int:
        """Coefficient of m_i (0 beyond the most significant digit)."""
        return self.digits[-1 - i] if 0 <= i < len(self.digits) else 0

    def low_first(self) -> list[int]:
        return list(reversed(self.digits))

    @property
    def value(self) -> int:
        return decode(self)

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_digits(self.grade, self.digits)


@dataclass(frozen=True)
class MetallicCode(Representation):
    """A canonical metallic code; construction rejects anything non-canonical."""

    def __post_init__(self) -> None:
        super().__post_init__()
        g = self.grade
        if any(x > g.d for x in self.digits):
            raise ValueError(f"digit above d={g.d} in {self.digits}")
        if forbidden_factor(g, self.digits) is not None:
            raise ValueError(f"{format_digits(g, self.digits)} contains a factor d c* d")

    @classmethod
    def parse(cls, grade: Grade | int, text: str) -> "MetallicCode":
        return cls(as_grade(grade), tuple(parse_digits(text)))

    @property
    def signature(self) -> int:
        return self.digits[-1]

    @property
    def is_zero(self) -> bool:
        return self.digits == (0,)

    def __repr__(self) -> str:
        return f"MetallicCode(p={self.grade.p}, {str(self)!r})"


def code(grade: Grade | int, text_or_digits: str | Sequence[int]) -> MetallicCode:
    """Convenience constructor from text or a digit sequence."""
    g = as_grade(grade)
    if isinstance(text_or_digits, str):
        return MetallicCode.parse(g, text_or_digits)
    return MetallicCode(g, tuple(text_or_digits))


def decode(rep: Representation) -> int:
    """Sum of digit(i) * m_i; accepts non-canonical representations."""
    g = rep.grade
    total = 0
    n = len(rep.digits)
    for i, x in enumerate(rep.digits):
        if x:
            total += x * seq_m(g, n - 1 - i)
    return total


def is_canonical(rep: Representation | Sequence[int], grade: Grade | int | None = None) -> bool:
    if isinstance(rep, Representation):
        g, digits = rep.grade, rep.digits
    else:
        if grade is None:
            raise TypeError("a grade is needed for a bare digit sequence")
        g, digits = as_grade(grade), tuple(rep)
    if any(x < 0 or x > g.d for x in digits):
        return False
    if len(digits) > 1 and digits[0] == 0:
        return False
    return forbidden_factor(g, digits) is None


def resolve(grade: Grade, low: list[int]) -> tuple[int, ...]:
    """Bring any non-negative representation to canonical form.

    `low` is least-significant first and is consumed. Carry rounds reduce
    digits >= p-2 using (p-2)m_i = m_{i+1} + m_{i-1} (only m_1 at place 0);
    then the lowest factor d c^k d is replaced by its carries. Both steps
    strictly lower the digit sum, so the digit sum bounds the work.
    """
    p, d, c = grade.p, grade.d, grade.c
    budget = sum(low) + len(low) + 1
    steps = 0
    while True:
        # carry rounds over a CarryTable, one entry per place plus overflow
        while any(x >= p - 2 for x in low):
            carry = [0] * (len(low) + 1)
            for i, x in enumerate(low):
                if x >= p - 2:
                    q = x // (p - 2)
                    low[i] -= q * (p - 2)
                    carry[i + 1] += q
                    if i > 0:
                        carry[i - 1] += q
                    steps += q
            if carry[-1] == 0:
                carry.pop()
            low.extend([0] * (len(carry) - len(low)))
            for i, q in enumerate(carry):
                low[i] += q
            if steps > budget:
                raise RuntimeError("carry resolution did not terminate")
        start = None
        hit = None
        for i, x in enumerate(low):
            if x == d:
                if start is not None:
                    hit = (start, i)
                    break
                start = i
            elif x != c:
                start = None
        if hit is None:
            break
        lo_place, hi_place = hit
        for i in range(lo_place, hi_place + 1):
            low[i] = 0
        if hi_place + 1 == len(low):
            low.append(0)
        low[hi_place + 1] += 1
        if lo_place > 0:
            low[lo_place - 1] += 1
        steps += 1
        if steps > budget:
            raise RuntimeError("pattern elimination did not terminate")
    return _trim(reversed(low))


def normalize(rep: Representation) -> MetallicCode:
    """Canonical code with the same value; digits must already be at most d."""
    g = rep.grade
    if any(x > g.d for x in rep.digits):
        raise ValueError(f"normalize expects digits <= d={g.d}; use add for larger digits")
    return MetallicCode(g, resolve(g, rep.low_first()))


def zero(grade: Grade | int) -> MetallicCode:
    return MetallicCode(as_grade(grade), (0,))


def encode(grade: Grade | int, n: int) -> MetallicCode:
    """Greedy most-significant-first digits, then normalize (a no-op in practice)."""
    g = as_grade(grade)
    if n < 0:
        raise ValueError("only non-negative integers have a metallic code")
    if n == 0:
        return zero(g)
    k = 0
    while seq_m(g, k + 1) <= n:
        k += 1
    digits = []
    for i in range(k, -1, -1):
        q, n = divmod(n, seq_m(g, i))
        digits.append(q)
    return normalize(Representation(g, tuple(digits)))


def random_code(grade: Grade | int, length: int, rng) -> MetallicCode:
    """A canonical code of exactly `length` digits, drawn left to right with
    each digit uniform among those that keep the prefix canonical. `rng` is
    a random.Random."""
    g = as_grade(grade)
    if length < 1:
        raise ValueError("length must be >= 1")
    digits: list[int] = []
    open_run = False  # the prefix ends with d c*
    for i in range(length):
        allowed = [a for a in range(1 if i == 0 else 0, g.d + 1) if not (open_run and a == g.d)]
        a = rng.choice(allowed)
        digits.append(a)
        open_run = a == g.d or (open_run and a == g.c)
    return MetallicCode(g, tuple(digits))
