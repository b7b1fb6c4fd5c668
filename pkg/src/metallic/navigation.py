"""Neighbours of tiles and paths to the leading tile.

Sides are numbered counterclockwise from the father's side. In {p,4} a
white tile's sons sit on sides 2..p-1 and side p touches the first son of
the next node; a black tile uses side 2 for the node before its father.
{p+2,3} adds the previous and the next node of the level.

Tiles are addressed inside one sector by white codes, or inside one strip
by black codes. Sides that leave the sector (or strip) are reported as
crossed neighbours with an address on the other side.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arithmetic import decrement, increment, subtract
from .numeration import Grade, MetallicCode, as_grade, decode, seq_M
from .trees import (
    VIRTUAL,
    Slot,
    TreeKind,
    classify,
    initial_slots,
    is_black_rightmost,
    level_of,
    walk_step,
)


class Tiling(str, enum.Enum):
    P4 = "p4"
    P23 = "p23"

    def __str__(self) -> str:
        return self.value


def as_tiling(t: Tiling | str) -> Tiling:
    return t if isinstance(t, Tiling) else Tiling(t)


def side_count(tiling: Tiling | str, grade: Grade | int) -> int:
    g = as_grade(grade)
    return g.p if as_tiling(tiling) is Tiling.P4 else g.p + 2


class CentralTile(Exception):
    """Raised when asking for the father of a leading tile."""


# ------------------------------------------------------------- fathers


def _drop(code: MetallicCode) -> MetallicCode:
    return MetallicCode(code.grade, code.digits[:-1] or (0,))


def father(code: MetallicCode) -> MetallicCode:
    """Father in the white tree, read off the last digits of the code."""
    if code.is_zero:
        raise ValueError("0 is not a node")
    if code.digits == (1,):
        raise CentralTile("the leading tile's father is the central tile")
    sig = code.signature
    head = _drop(code)
    if sig == 0:
        return head
    if sig >= 2:
        return increment(head)
    i = len(code.digits) - 2
    while i >= 0 and code.digits[i] == 1:
        i -= 1
    if i < 0 or code.digits[i] == 0:
        return head
    return increment(head)


def black_father(code: MetallicCode) -> MetallicCode:
    """Father in the black tree: [x]s is a son of x+1, except [x]0 with x on
    the rightmost branch, which is the last son of x."""
    if code.is_zero:
        raise ValueError("0 is not a node")
    if code.digits == (1,):
        raise CentralTile("the root of a strip has no father inside the strip")
    head = _drop(code)
    if code.signature == 0 and is_black_rightmost(head):
        return head
    return increment(head)


# ----------------------------------------------------------- neighbours


@dataclass(frozen=True)
class Neighbor:
    """One side of a tile.

    In white coordinates `sector` is the sector holding the tile (0 for the
    central tile, whose code is None). In black coordinates `shift` is the
    strip offset, +1 for the next strip and -1 for the previous one; a tile
    beyond the whole family of strips has no code and `sector` = +1.
    """

    code: MetallicCode | None
    sector: int = 0
    shift: int = 0
    crossed: bool = False

    @property
    def central(self) -> bool:
        return self.code is None and self.sector == 0 and not self.crossed

    def __str__(self) -> str:
        if self.central:
            return "central"
        where = []
        if self.crossed:
            if self.shift:
                where.append(f"strip {self.shift:+d}")
            elif self.code is None:
                where.append("next sector")
            else:
                where.append(f"sector {self.sector}")
        text = str(self.code) if self.code is not None else "?"
        return text + (f" ({', '.join(where)})" if where else "")


def _append(code: MetallicCode, *digits: int) -> MetallicCode:
    base = () if code.is_zero else code.digits
    return MetallicCode(code.grade, base + digits)


def _next_sector(sector: int, count: int) -> int:
    return sector % count + 1


def _prev_sector(sector: int, count: int) -> int:
    return (sector - 2) % count + 1


def central_neighbors(tiling: Tiling | str, grade: Grade | int) -> tuple[Neighbor, ...]:
    g = as_grade(grade)
    one = MetallicCode(g, (1,))
    return tuple(Neighbor(one, k) for k in range(1, side_count(tiling, g) + 1))


def neighbors_white(
    tiling: Tiling | str, code: MetallicCode, sector: int = 1
) -> tuple[Neighbor, ...]:
    """The S sides of the tile with white code `code` in sector `sector`."""
    tiling = as_tiling(tiling)
    g = code.grade
    count = side_count(tiling, g)
    if not 1 <= sector <= count:
        raise ValueError(f"sector must lie in 1..{count}")
    if code.is_zero:
        raise ValueError("use central_neighbors for the central tile")
    cls = classify(TreeKind.WHITE, code)
    d, c = g.d, g.c
    digits = code.digits
    nxt, prv = _next_sector(sector, count), _prev_sector(sector, count)
    before = decrement(code)
    here = lambda x: Neighbor(x, sector)  # noqa: E731
    out: list[Neighbor] = []

    if cls.root:
        out.append(Neighbor(None, 0))
    else:
        out.append(here(father(code)))

    if cls.status == "black":
        # the leftmost branch is 2, 12, 112, ...
        leftmost = all(x == 1 for x in digits[:-1]) and digits[-1] == 2
        n = len(digits)
        f = father(code)
        out.append(Neighbor(before, prv, crossed=True) if leftmost else here(decrement(f)))
        if tiling is Tiling.P23:
            if leftmost:
                out.append(Neighbor(MetallicCode(g, (1,) * (n + 1)), prv, crossed=True))
            else:
                out.append(here(before))
        out.extend(here(_append(before, s)) for s in range(2, d + 1))
        out.append(here(_append(code, 0)))
        out.append(here(_append(code, 1)))
        if tiling is Tiling.P23:
            out.append(here(increment(code)))
        return tuple(out)

    if tiling is Tiling.P23:
        out.append(Neighbor(MetallicCode(g, (1,)), prv, crossed=True) if cls.root else here(before))
    if cls.type == "wa":
        sons = [_append(before, s) for s in range(1, d + 1)] + [_append(code, 0)]
        lateral = _append(code, 1)
    else:
        low = 1 if cls.type == "w0" else 2
        top = c if cls.type == "w0" else d
        sons = [_append(before, s) for s in range(low, top + 1)]
        sons += [_append(code, 0), _append(code, 1)]
        lateral = _append(code, 2)
    out.extend(here(s) for s in sons)
    rightmost = all(x == 1 for x in digits)
    if rightmost:
        out.append(Neighbor(increment(code), nxt, crossed=True))
        if tiling is Tiling.P23:
            up = MetallicCode(g, (1,)) if cls.root else increment(_drop(code))
            out.append(Neighbor(up, nxt, crossed=True))
    else:
        out.append(here(lateral))
        if tiling is Tiling.P23:
            out.append(here(increment(code)))
    return tuple(out)


def neighbors_black(tiling: Tiling | str, code: MetallicCode) -> tuple[Neighbor, ...]:
    """The S sides of the tile with black code `code`, in strip coordinates."""
    tiling = as_tiling(tiling)
    g = code.grade
    if code.is_zero:
        raise ValueError("0 is not a node")
    cls = classify(TreeKind.BLACK, code)
    d, c = g.d, g.c
    one = MetallicCode(g, (1,))
    before = decrement(code)
    p23 = tiling is Tiling.P23
    inside = lambda x: Neighbor(x)  # noqa: E731
    prev_strip = lambda x: Neighbor(x, shift=-1, crossed=True)  # noqa: E731
    next_strip = lambda x: Neighbor(x, shift=1, crossed=True)  # noqa: E731
    outside = Neighbor(None, sector=1, crossed=True)
    out: list[Neighbor] = []

    if cls.root:
        out.append(prev_strip(one))
        if p23:
            out.append(prev_strip(MetallicCode(g, (1, 0))))
        out.extend(inside(MetallicCode(g, (s,))) for s in range(2, d + 1))
        out.append(inside(MetallicCode(g, (1, 0))))
        out.append(next_strip(one))
        out.append(outside)
        if p23:
            out.append(outside)
        return tuple(out)

    f = black_father(code)
    out.append(inside(f))
    if cls.type == "wa":
        if p23:
            out.append(inside(before))
        out.extend(inside(_append(before, s)) for s in range(0, d + 1))
        out.append(inside(_append(code, 0)))
        if p23:
            out.append(inside(increment(code)))
    elif cls.type == "w0":
        if p23:
            out.append(inside(before))
        out.extend(inside(_append(before, s)) for s in range(0, c + 1))
        out.append(inside(_append(code, 0)))
        out.append(next_strip(increment(f)))
        if p23:
            out.append(next_strip(one if f.digits == (1,) else increment(_drop(f))))
    elif cls.type == "b0":
        out.append(inside(decrement(f)))
        if p23:
            out.append(inside(before))
        out.extend(inside(_append(before, s)) for s in range(0, c + 1))
        out.append(inside(_append(code, 0)))
        if p23:
            out.append(inside(increment(code)))
    else:  # b1, the leftmost node of a level
        out.append(prev_strip(_append(before, 0)))
        if p23:
            out.append(prev_strip(_append(before, 0, 0)))
        out.extend(inside(_append(before, s)) for s in range(1, d + 1))
        out.append(inside(_append(code, 0)))
        if p23:
            out.append(inside(increment(code)))
    return tuple(out)


# ---------------------------------------------------------------- paths


@dataclass(frozen=True)
class PathStep:
    signature: int | None = None
    type: str | None = None
    number: int | None = None
    code: MetallicCode | None = None

    @property
    def status(self) -> str | None:
        if self.type is None:
            return None
        return "black" if self.type.startswith("b") else "white"


@dataclass(frozen=True)
class PathTrace:
    """Nodes from the leading tile down to the target, plus the work done.

    `visits` counts digit reads and table cells written or copied.
    """

    steps: tuple[PathStep, ...]
    visits: int = 0
    meta: dict = field(default_factory=dict, compare=False)

    @property
    def length(self) -> int:
        return len(self.steps) - 1

    def numbers(self) -> list[int | None]:
        return [s.number for s in self.steps]


def _prefix_values(g: Grade, digits: tuple[int, ...]) -> list[int]:
    """Values of all prefixes: v(P a) = (p-2) v(P) - v(P minus its last digit) + a."""
    vals = [0]
    prev = 0
    for a in digits:
        nxt = (g.p - 2) * vals[-1] - prev + a
        prev = vals[-1]
        vals.append(nxt)
    return vals


def _step(slot: Slot, number: int | None) -> PathStep:
    return PathStep(slot.signature, slot.type, number)


def path_top_down(code: MetallicCode, resolve: bool = False) -> PathTrace:
    """Father chain of a white node, read left to right in linear time.

    Two tables follow the candidates P and P+1 for the prefix P read so far.
    When both new candidates hang below the same old one, the other table is
    overwritten from the watermark `first` on; cells before `first` already
    agree, so every cell is copied at most once.
    """
    g = code.grade
    if code.is_zero:
        raise ValueError("0 is not a node")
    n = len(code.digits)
    vals = _prefix_values(g, code.digits) if resolve else None
    lo: list[tuple[Slot, int | None]] = [(VIRTUAL, None)] * (n + 1)
    hi: list[tuple[Slot, int | None]] = [(VIRTUAL, None)] * (n + 1)
    slots = initial_slots(TreeKind.WHITE, g)
    lo[0] = (slots[0], 0 if resolve else None)
    hi[0] = (slots[1], 1 if resolve else None)
    first = 0
    visits = 0
    for j, digit in enumerate(code.digits):
        visits += 1
        slots, fathers = walk_step(TreeKind.WHITE, g, slots, digit)
        if fathers[0] == fathers[1]:
            src, dst = (lo, hi) if fathers[0] == 0 else (hi, lo)
            for h in range(first, j + 1):
                dst[h] = src[h]
                visits += 1
            first = j + 1
        base = vals[j + 1] if vals is not None else None
        lo[j + 1] = (slots[0], base)
        hi[j + 1] = (slots[1], base + 1 if base is not None else None)
        visits += 2
    steps = tuple(_step(s, v) for s, v in lo if not s.virtual)
    return PathTrace(steps, visits)


def path_black(code: MetallicCode, resolve: bool = False) -> PathTrace:
    """Descent inside a strip from its leading tile to the node `code`
    (black numbering), in linear time.

    Three candidates P, P+1, P+2 are tracked per prefix, each with a pointer
    to its father among the previous candidates; the chain is read back once
    at the end.
    """
    g = code.grade
    if code.is_zero:
        raise ValueError("0 is not a node")
    n = len(code.digits)
    vals = _prefix_values(g, code.digits) if resolve else None
    slots = initial_slots(TreeKind.BLACK, g)
    table: list[list[Slot]] = [slots]
    up: list[list[int]] = [[-1, -1, 1]]  # node 2 hangs below the root
    visits = 0
    for digit in code.digits:
        visits += 1
        slots, fathers = walk_step(TreeKind.BLACK, g, slots, digit)
        table.append(slots)
        up.append(fathers)
        visits += 1
    chain: list[PathStep] = []
    j, k = n, 0
    while True:
        slot = table[j][k]
        if slot.virtual:
            break
        number = vals[j] + k if vals is not None else None
        chain.append(_step(slot, number))
        visits += 1
        if j == 0:
            if k == 2:
                k = 1
                continue
            break
        k = up[j][k]
        j -= 1
    chain.reverse()
    return PathTrace(tuple(chain), visits)


def path_bottom_up(code: MetallicCode, resolve: bool = False) -> PathTrace:
    """Father chain by repeated father steps from the right end of the code.

    Each father is a fresh code, so the work is quadratic in the length. A
    run of trailing 1s that was found to stop at a 0 (or at the start) is
    remembered, so the run is scanned once.
    """
    g = code.grade
    if code.is_zero:
        raise ValueError("0 is not a node")
    visits = 0
    fixed = False
    cur = code
    chain = [cur]
    while cur.digits != (1,):
        digits = cur.digits
        sig = digits[-1]
        visits += 1
        head = _drop(cur)
        if sig == 0:
            nxt, fixed = head, False
        elif sig >= 2:
            nxt, fixed = increment(head), False
        else:
            if not fixed:
                i = len(digits) - 2
                while i >= 0 and digits[i] == 1:
                    i -= 1
                    visits += 1
                white = i < 0 or digits[i] == 0
                if i >= 0:
                    visits += 1
                fixed = white
            nxt = head if fixed else increment(head)
        visits += len(nxt.digits)
        cur = nxt
        chain.append(cur)
    chain.reverse()
    steps = tuple(
        PathStep(c.signature, None, decode(c) if resolve else None, c) for c in chain
    )
    return PathTrace(steps, visits)


def strip_of(code: MetallicCode) -> tuple[int, int]:
    """(strip index n, level) of a white node; strip n hangs from the node
    numbered M_n on the rightmost branch."""
    digits = code.digits
    k = len(digits) - 1
    first_other = next((i for i, x in enumerate(digits) if x != 1), None)
    if first_other is None:
        return k, k
    if digits[first_other] != 0:
        return 0, k + 1  # above 1^{k+1}: first node of level k+1 onward
    level = k
    q = first_other
    rest = digits[q + 1 :]
    nxt = next((x for x in rest if x != 1), None)
    n = q if (nxt is not None and nxt >= 2) else q - 1
    return max(n, 0), level


def path_via_strips(code: MetallicCode) -> PathTrace:
    """Father chain of a white node through the strip holding it: walk down
    the rightmost branch to the strip's leading tile M_n, then descend in the
    strip with black numbering."""
    g = code.grade
    if code.is_zero:
        raise ValueError("0 is not a node")
    n, level = strip_of(code)
    j = level - n
    # local white number inside the copy of the tree rooted at M_n,
    # then the black number inside its strip
    local = code
    if n:
        local = subtract(local, MetallicCode(g, (1,) * n + (0,) * (j + 1)))
    if j >= 2:
        local = subtract(local, MetallicCode(g, (1,) * (j - 1)))
    inner = path_black(local, resolve=True)
    steps = [PathStep(1, "w1", seq_M(g, i)) for i in range(n)]
    for i, st in enumerate(inner.steps):
        assert st.number is not None
        shift = (seq_M(g, i - 2) if i >= 2 else 0) + seq_M(g, n + i) - seq_M(g, i)
        steps.append(PathStep(None, st.type if i else "w1", st.number + shift))
    return PathTrace(tuple(steps), inner.visits + n, {"strip": n, "black": local})


def white_level(code: MetallicCode) -> int:
    return level_of(TreeKind.WHITE, code.grade, decode(code))
