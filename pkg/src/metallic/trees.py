"""White and black metallic trees: levels, node types, special sons.

Node types. In the white tree black nodes are b1/b2 (signature 1 or 2),
white nodes are wa (signature 2..d, preferred son last), w0 and w1
(signature 0 and 1, preferred son penultimate). In the black tree the
types are b0, b1, wa and w0. Roots are flagged separately: the white root
behaves as a w1 node, the black root as a leftmost black node.

The top-down walk below reads a code from the left. After j digits with
prefix P it knows the types of the nodes P, P+1 (and P+2 for the black
tree) together with which of them fathers the next candidates. A son of
node x is either [x-1] followed by a digit or [x] followed by 0 (or 1 for
w0/w1 nodes), so one digit at a time is enough.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, Sequence

from .arithmetic import increment
from .numeration import Grade, MetallicCode, as_grade, seq_M, seq_m


class TreeKind(str, enum.Enum):
    WHITE = "white"
    BLACK = "black"

    def __str__(self) -> str:
        return self.value


def as_kind(kind: TreeKind | str) -> TreeKind:
    return kind if isinstance(kind, TreeKind) else TreeKind(kind)


@dataclass(frozen=True)
class NodeClass:
    kind: TreeKind
    type: str
    signature: int
    root: bool = False

    @property
    def status(self) -> str:
        return "black" if self.type.startswith("b") else "white"

    @property
    def role(self) -> str:
        """Coarse role: b, w_l (preferred son last) or w_r (penultimate)."""
        if self.status == "black":
            return "b"
        return "w_l" if self.type == "wa" else "w_r"

    def __str__(self) -> str:
        return self.type + (" (root)" if self.root else "")


@dataclass(frozen=True)
class NodeRef:
    kind: TreeKind
    number: int
    code: MetallicCode
    level: int


def level_of(kind: TreeKind | str, grade: Grade | int, number: int) -> int:
    kind, g = as_kind(kind), as_grade(grade)
    if number < 1:
        raise ValueError("node numbers start at 1")
    bound = seq_M if kind is TreeKind.WHITE else seq_m
    k = 0
    while bound(g, k) < number:
        k += 1
    return k


# ---------------------------------------------------------------- walker


@dataclass(frozen=True)
class Slot:
    """One candidate node of the walk: prefix plus a small offset."""

    type: str  # "v" marks the virtual node 0 above the root
    signature: int
    root: bool = False
    tail: bool = False  # its code ends with d c*

    @property
    def virtual(self) -> bool:
        return self.type == "v"


VIRTUAL = Slot("v", 0)


def initial_slots(kind: TreeKind, g: Grade) -> list[Slot]:
    """Candidates before any digit is read: nodes 0, 1 (and 2 for black)."""
    if kind is TreeKind.WHITE:
        return [VIRTUAL, Slot("w1", 1, root=True)]
    return [VIRTUAL, Slot("b1", 1, root=True), Slot("b1", 2, tail=(g.d == 2))]


def _white_son(slots: Sequence[Slot], t: int, s: int) -> tuple[str, int]:
    x = slots[t]
    if s == 0 and not x.virtual:
        return "w0", t
    if s == 1 and x.type in ("w0", "w1", "v"):
        return "w1", t
    f = slots[t + 1]
    first = 1 if f.type in ("wa", "w0") else 2
    if s < first:
        raise ValueError("digit string is not a node code")
    if s == first:
        return ("b1" if s == 1 else "b2"), t + 1
    return "wa", t + 1


def _black_son(slots: Sequence[Slot], t: int, s: int) -> tuple[str, int]:
    x = slots[t]
    if x.virtual and s == 1:
        return "b1", t
    if s == 0 and (x.type == "w0" or x.root):
        return "w0", t
    f = slots[t + 1]
    first = 2 if f.root else (1 if f.type == "b1" else 0)
    if s < first:
        raise ValueError("digit string is not a node code")
    if s == first:
        return ("b0" if s == 0 else "b1"), t + 1
    return "wa", t + 1


def walk_step(
    kind: TreeKind, g: Grade, slots: Sequence[Slot], digit: int
) -> tuple[list[Slot], list[int]]:
    """Append one digit: new candidate slots and the slot index of each father."""
    son = _white_son if kind is TreeKind.WHITE else _black_son
    width = len(slots)
    out: list[Slot] = []
    fathers: list[int] = []
    t, s = 0, digit
    for delta in range(width):
        if delta:
            # [X]s + 1 is [X](s+1) unless that digit is d or closes d c* d
            if s < g.d and not (s == g.c and slots[t].tail):
                s += 1
            else:
                t, s = t + 1, 0
        typ, father = son(slots, t, s)
        root = slots[t].virtual and father == t
        tail = s == g.d or (s == g.c and slots[t].tail)
        out.append(Slot(typ, s, root=root, tail=tail))
        fathers.append(father)
    return out, fathers


def walk(kind: TreeKind, code: MetallicCode) -> Iterator[tuple[list[Slot], list[int]]]:
    """Yield (slots, fathers) after each digit of `code`, left to right."""
    g = code.grade
    slots = initial_slots(kind, g)
    for digit in code.digits:
        slots, fathers = walk_step(kind, g, slots, digit)
        yield slots, fathers


def classify(kind: TreeKind | str, code: MetallicCode) -> NodeClass:
    kind = as_kind(kind)
    if code.is_zero:
        raise ValueError("0 is not a node")
    slots: list[Slot] = []
    for slots, _ in walk(kind, code):
        pass
    last = slots[0]
    return NodeClass(kind, last.type, code.signature, last.root)


# ------------------------------------------------------------ son words


def sons_signature_word(cls: NodeClass, grade: Grade | int) -> list[tuple[str, int]]:
    """Ordered (type, signature) of the sons of a node of class `cls`."""
    g = as_grade(grade)
    d, c = g.d, g.c
    t = cls.type
    if cls.kind is TreeKind.WHITE:
        if t in ("b1", "b2"):
            return [("b2", 2)] + [("wa", a) for a in range(3, d + 1)] + [("w0", 0)]
        if t == "wa":
            return [("b1", 1)] + [("wa", a) for a in range(2, d + 1)] + [("w0", 0)]
        if t == "w0":
            return [("b1", 1)] + [("wa", a) for a in range(2, c + 1)] + [("w0", 0), ("w1", 1)]
        if t == "w1":
            return [("b2", 2)] + [("wa", a) for a in range(3, d + 1)] + [("w0", 0), ("w1", 1)]
    else:
        if cls.root:
            return [("b1", 2)] + [("wa", a) for a in range(3, d + 1)] + [("w0", 0)]
        if t == "b0":
            return [("b0", 0)] + [("wa", a) for a in range(1, c + 1)]
        if t == "b1":
            return [("b1", 1)] + [("wa", a) for a in range(2, d + 1)]
        if t == "wa":
            return [("b0", 0)] + [("wa", a) for a in range(1, d + 1)]
        if t == "w0":
            return [("b0", 0)] + [("wa", a) for a in range(1, c + 1)] + [("w0", 0)]
    raise ValueError(f"unknown node class {cls}")


def son_count(kind: TreeKind | str, grade: Grade | int, status: str) -> int:
    g = as_grade(grade)
    return g.p - 3 if status == "black" else g.p - 2


# ------------------------------------------------------ special sons


def zero_branch(start: MetallicCode, h: int) -> MetallicCode:
    """The node reached from `start` by h preferred-son steps: h zeros appended."""
    if h < 0:
        raise ValueError("depth must be >= 0")
    if start.is_zero:
        raise ValueError("0 is not a node")
    return MetallicCode(start.grade, start.digits + (0,) * h)


@dataclass(frozen=True)
class SpecialSon:
    code: MetallicCode
    father: MetallicCode
    position: int  # 1-based among the father's sons
    sons: int  # how many sons the father has


def preferred_son(code: MetallicCode) -> SpecialSon:
    """The white-tree son with code [v]0: last son of b/wa, penultimate of w0/w1."""
    cls = classify(TreeKind.WHITE, code)
    n = son_count(TreeKind.WHITE, code.grade, cls.status)
    pos = n - 1 if cls.role == "w_r" else n
    return SpecialSon(zero_branch(code, 1), code, pos, n)


def is_black_rightmost(code: MetallicCode) -> bool:
    """Rightmost black-tree nodes are numbered m_n, with code 1 0^n."""
    return code.digits[0] == 1 and all(x == 0 for x in code.digits[1:])


def successor(code: MetallicCode) -> SpecialSon:
    """Black tree: the node [v]0 is the first son of v+1, or the last son of v
    itself when v is the rightmost node of its level."""
    cls = classify(TreeKind.BLACK, code)
    if is_black_rightmost(code):
        n = son_count(TreeKind.BLACK, code.grade, "black" if cls.root else cls.status)
        return SpecialSon(zero_branch(code, 1), code, n, n)
    nxt = increment(code)
    ncls = classify(TreeKind.BLACK, nxt)
    n = son_count(TreeKind.BLACK, code.grade, ncls.status)
    return SpecialSon(zero_branch(code, 1), nxt, 1, n)


# ------------------------------------------------ white/black numbering


def black_to_white_number(grade: Grade | int, number: int) -> int:
    """Number in the white tree of a black-tree node, the black tree being
    the white tree minus the subtree of the root's last son."""
    g = as_grade(grade)
    level = level_of(TreeKind.BLACK, g, number)
    return number + (seq_M(g, level - 2) if level >= 2 else 0)


def white_to_black_number(grade: Grade | int, number: int) -> int:
    """Inverse of black_to_white_number on nodes outside the removed subtree."""
    g = as_grade(grade)
    level = level_of(TreeKind.WHITE, g, number)
    shift = seq_M(g, level - 2) if level >= 2 else 0
    nb = number - shift
    if nb > seq_m(g, level):
        raise ValueError(f"white node {number} lies in the removed subtree")
    return nb


def penultimate_chain_codes(grade: Grade | int, n: int) -> tuple[MetallicCode, MetallicCode]:
    """Codes of the n-th node of the chain of penultimate sons from the root
    (n >= 2): white code 1 0^n and black code d (c-1)^(n-2) c."""
    g = as_grade(grade)
    if n < 2:
        raise ValueError("n >= 2")
    white = MetallicCode(g, (1,) + (0,) * n)
    black = MetallicCode(g, (g.d,) + (g.c - 1,) * (n - 2) + (g.c,))
    return white, black


def decomposition_vectors(
    kind: TreeKind | str, grade: Grade | int, n: int
) -> list[tuple[str, MetallicCode]]:
    """Codes of the rightmost level-(n+1) nodes of the subtrees rooted at the
    root's sons, labelled by the son's code ("2".."d", "10", "11" for white;
    "2".."d", "10" for black)."""
    kind, g = as_kind(kind), as_grade(grade)
    if n < 1:
        raise ValueError("n >= 1")
    d, c = g.d, g.c
    out: list[tuple[str, MetallicCode]] = []
    if kind is TreeKind.WHITE:
        for a in range(2, d + 1):
            out.append((str(MetallicCode(g, (a,))), MetallicCode(g, (a, 0) + (1,) * (n - 1))))
        out.append(("10", MetallicCode(g, (1, 0) + (1,) * n)))
        out.append(("11", MetallicCode(g, (1,) * (n + 2))))
    else:
        for a in range(2, d + 1):
            out.append((str(MetallicCode(g, (a,))), MetallicCode(g, (a - 1,) + (c,) * (n - 1) + (d,))))
        out.append(("10", MetallicCode(g, (1,) + (0,) * (n + 1))))
    return out
