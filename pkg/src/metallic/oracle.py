"""Brute-force ground truth for small trees.

Trees are grown from the two production rules alone (a black node has one
black son then p-4 white ones, a white node one black son then p-3 white
ones) and numbered breadth first. Codes come from a chain of increments and,
independently, from a backtracking search over the m_i basis. Everything the
library computes by formula is then compared with what the explicit tree
says.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator

from .arithmetic import increment
from .navigation import (
    Tiling,
    black_father,
    father,
    neighbors_black,
    neighbors_white,
    path_black,
    path_bottom_up,
    path_top_down,
    path_via_strips,
    side_count,
    strip_of,
)
from .numeration import Grade, MetallicCode, as_grade, decode, encode, seq_b, seq_M, seq_m
from .trees import (
    TreeKind,
    as_kind,
    black_to_white_number,
    classify,
    decomposition_vectors,
    penultimate_chain_codes,
    preferred_son,
    sons_signature_word,
    successor,
    white_to_black_number,
)

MAX_NODES = 10**7


@dataclass
class TreeSnapshot:
    """Explicit tree; lists are indexed by node number (index 0 unused)."""

    grade: Grade
    kind: TreeKind
    max_level: int
    black: bytearray
    level: list[int]
    father: list[int]
    first_son: list[int]
    son_count: list[int]
    level_start: list[int]
    level_end: list[int]
    _codes: list[MetallicCode] | None = field(default=None, repr=False)

    @property
    def size(self) -> int:
        return len(self.level) - 1

    def nodes(self, upto: int | None = None) -> range:
        top = self.max_level if upto is None else min(upto, self.max_level)
        return range(1, self.level_end[top] + 1) if top >= 0 else range(1, 1)

    def sons(self, v: int) -> range:
        return range(self.first_son[v], self.first_son[v] + self.son_count[v])

    def status(self, v: int) -> str:
        return "black" if self.black[v] else "white"

    def code(self, v: int) -> MetallicCode:
        return codes_by_chain(self, self.level[v])[v]


def build(grade: Grade | int, kind: TreeKind | str, max_level: int) -> TreeSnapshot:
    g, kind = as_grade(grade), as_kind(kind)
    if max_level < 0:
        raise ValueError("max_level must be >= 0")
    black = bytearray([0, 1 if kind is TreeKind.BLACK else 0])
    level, fath = [0, 0], [0, 0]
    first_son, son_count = [0, 0], [0, 0]
    level_start, level_end = [1], [1]
    for lev in range(max_level):
        start = len(level)
        for v in range(level_start[lev], level_end[lev] + 1):
            n = g.p - 4 if black[v] else g.p - 3
            first_son[v] = len(level)
            son_count[v] = n + 1
            if len(level) + n + 1 > MAX_NODES + 1:
                raise ValueError(f"tree exceeds {MAX_NODES} nodes")
            black.append(1)
            black.extend(bytes(n))
            level.extend([lev + 1] * (n + 1))
            fath.extend([v] * (n + 1))
            first_son.extend([0] * (n + 1))
            son_count.extend([0] * (n + 1))
        level_start.append(start)
        level_end.append(len(level) - 1)
    return TreeSnapshot(g, kind, max_level, black, level, fath, first_son, son_count,
                        level_start, level_end)


def codes_by_chain(snapshot: TreeSnapshot, upto: int | None = None) -> list[MetallicCode]:
    """Code of every node up to level `upto`, obtained by incrementing from
    the code of 0; index v holds the code of node v."""
    top = snapshot.max_level if upto is None else min(upto, snapshot.max_level)
    want = snapshot.level_end[top] + 1
    codes = snapshot._codes
    if codes is None:
        codes = snapshot._codes = [MetallicCode(snapshot.grade, (0,))]
    while len(codes) < want:
        codes.append(increment(codes[-1]))
    return codes[:want] if len(codes) > want else codes


def search_code(grade: Grade | int, n: int) -> tuple[int, ...]:
    """Digits of n found by depth-first search over the m_i basis, largest
    digit first, rejecting any d c* d factor as soon as it closes."""
    g = as_grade(grade)
    if n == 0:
        return (0,)
    d, c = g.d, g.c
    k = 0
    while seq_m(g, k + 1) <= n:
        k += 1
    digits: list[int] = []

    def closes(digits: list[int]) -> bool:
        if digits[-1] != d:
            return False
        i = len(digits) - 2
        while i >= 0 and digits[i] == c:
            i -= 1
        return i >= 0 and digits[i] == d

    def go(place: int, rest: int) -> bool:
        if place < 0:
            return rest == 0
        # the lower places can hold at most m_place - 1
        for a in range(min(d, rest // seq_m(g, place)), -1, -1):
            r = rest - a * seq_m(g, place)
            if r > seq_m(g, place) - 1:
                break
            digits.append(a)
            if not closes(digits) and go(place - 1, r):
                return True
            digits.pop()
        return False

    if not go(k, n):
        raise RuntimeError(f"no canonical digits found for {n}")
    return tuple(digits)


# ------------------------------------------------------ oracle classes


def white_types(snap: TreeSnapshot, upto: int | None = None) -> list[str]:
    """b1/b2 for black nodes by signature; w0, w1, wa for white ones."""
    codes = codes_by_chain(snap, upto)
    out = [""] * len(codes)
    for v in range(1, len(codes)):
        sig = codes[v].signature
        if snap.black[v]:
            out[v] = f"b{sig}"
        else:
            out[v] = {0: "w0", 1: "w1"}.get(sig, "wa")
    return out


def black_types(snap: TreeSnapshot) -> list[str]:
    """Black tree: leftmost black nodes are b1, rightmost white nodes w0."""
    out = [""] * (snap.size + 1)
    out[1] = "b1"
    for lev in range(1, snap.max_level + 1):
        lo, hi = snap.level_start[lev], snap.level_end[lev]
        for v in range(lo, hi + 1):
            if snap.black[v]:
                out[v] = "b1" if v == lo else "b0"
            else:
                out[v] = "w0" if v == hi else "wa"
    return out


# ------------------------------------------------------ oracle adjacency

CENTRAL = (0, 0)
OUT = "out"


class Sectors:
    """White tree repeated in S sectors around the central tile; tiles are
    (sector, number) pairs."""

    def __init__(self, snap: TreeSnapshot, tiling: Tiling):
        self.snap = snap
        self.tiling = tiling
        self.count = side_count(tiling, snap.grade)

    def pred(self, t: tuple[int, int]) -> tuple[int, int]:
        s, v = t
        lev = self.snap.level[v]
        if v == self.snap.level_start[lev]:
            return ((s - 2) % self.count + 1, self.snap.level_end[lev])
        return (s, v - 1)

    def succ(self, t: tuple[int, int]) -> tuple[int, int]:
        s, v = t
        lev = self.snap.level[v]
        if v == self.snap.level_end[lev]:
            return (s % self.count + 1, self.snap.level_start[lev])
        return (s, v + 1)

    def up(self, t: tuple[int, int]) -> tuple[int, int]:
        s, v = t
        return CENTRAL if v == 1 else (s, self.snap.father[v])

    def first_son(self, t: tuple[int, int]) -> tuple[int, int]:
        s, v = t
        return (s, self.snap.first_son[v])

    def sides(self, t: tuple[int, int]) -> list[tuple[int, int]]:
        if t == CENTRAL:
            return [(k, 1) for k in range(1, self.count + 1)]
        s, v = t
        snap = self.snap
        out = [self.up(t)]
        if snap.black[v]:
            out.append(self.pred(self.up(t)))
        if self.tiling is Tiling.P23:
            out.append(self.pred(t))
        out.extend((s, w) for w in snap.sons(v))
        nxt = self.succ(t)
        out.append(self.first_son(nxt))
        if self.tiling is Tiling.P23:
            out.append(nxt)
        return out


class Strips:
    """Strips of sector 1: strip n hangs from the rightmost-branch node
    1^(n+1) and loses the subtree of that node's last son."""

    def __init__(self, white: TreeSnapshot, black: TreeSnapshot):
        self.white, self.black = white, black
        self.roots = [1]
        while white.level[self.roots[-1]] < white.max_level:
            r = self.roots[-1]
            self.roots.append(white.first_son[r] + white.son_count[r] - 1)
        self._ranges: dict[int, list[tuple[int, int]]] = {}

    def ranges(self, n: int) -> list[tuple[int, int]]:
        """(first, last) white numbers of strip n on levels n, n+1, ..."""
        if n not in self._ranges:
            w = self.white
            r = self.roots[n]
            lo, out = r, [(r, r)]
            nxt = self.roots[n + 1] if n + 1 < len(self.roots) else None
            for _ in range(w.max_level - w.level[r]):
                lo = w.first_son[lo]
                assert nxt is not None
                out.append((lo, nxt - 1))
                if w.level[nxt] < w.max_level:
                    nxt = w.first_son[nxt]
            self._ranges[n] = out
        return self._ranges[n]

    def locate(self, v: int) -> tuple[int, int]:
        """(strip index, black number) of white node v."""
        lev = self.white.level[v]
        for n in range(lev + 1):
            lo, hi = self.ranges(n)[lev - n]
            if lo <= v <= hi:
                return n, self.black.level_start[lev - n] + v - lo
        raise AssertionError(f"node {v} is in no strip")

    def white_of(self, n: int, b: int) -> int:
        j = self.black.level[b]
        return self.ranges(n)[j][0] + b - self.black.level_start[j]


# ------------------------------------------------------------- checks


@dataclass(frozen=True)
class CheckResult:
    name: str
    p: int
    levels: int
    passed: bool
    witness: str = ""
    count: int = 0

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        tail = f" {self.witness}" if self.witness else ""
        return f"CHECK {self.name} p={self.p} levels={self.levels} {status}{tail}"


class _Fail(Exception):
    pass


def _expect(ok: bool, witness: Callable[[], str] | str) -> None:
    if not ok:
        raise _Fail(witness() if callable(witness) else witness)


class Verifier:
    """All checks for one grade up to a given level, sharing the trees."""

    def __init__(self, grade: Grade | int, levels: int, white: TreeSnapshot | None = None):
        self.g = as_grade(grade)
        self.levels = levels
        if white is None or white.max_level < levels + 2:
            white = build(self.g, TreeKind.WHITE, levels + 2)
        self.white = white
        self.black = build(self.g, TreeKind.BLACK, levels + 1)
        self._cache: dict[str, object] = {}

    # shared data, computed on first use
    def _get(self, key: str, make: Callable[[], object]):
        if key not in self._cache:
            self._cache[key] = make()
        return self._cache[key]

    def wcode(self, v: int) -> MetallicCode:
        return codes_by_chain(self.white, self.levels + 1)[v]

    def bcode(self, v: int) -> MetallicCode:
        return codes_by_chain(self.black, self.levels + 1)[v]

    def wtypes(self) -> list[str]:
        return self._get("wtypes", lambda: white_types(self.white, self.levels + 1))

    def btypes(self) -> list[str]:
        return self._get("btypes", lambda: black_types(self.black))

    def strips(self) -> Strips:
        return self._get("strips", lambda: Strips(self.white, self.black))

    def wnodes(self, upto: int | None = None) -> range:
        return self.white.nodes(self.levels if upto is None else upto)

    def bnodes(self, upto: int | None = None) -> range:
        return self.black.nodes(self.levels if upto is None else upto)

    def run(self, name: str, body: Callable[[], int]) -> CheckResult:
        try:
            count = body()
        except _Fail as exc:
            return CheckResult(name, self.g.p, self.levels, False, str(exc))
        except Exception as exc:  # an exception is a failed check, not a crash
            return CheckResult(name, self.g.p, self.levels, False, f"{type(exc).__name__}: {exc}")
        return CheckResult(name, self.g.p, self.levels, True, "", count)

    def all(self) -> Iterator[CheckResult]:
        for name in CHECKS:
            yield self.run(name, getattr(self, "check_" + name))

    # ---------------------------------------------------------------

    def check_snapshot(self) -> int:
        n = 0
        for snap in (self.white, self.black):
            for v in snap.nodes(snap.max_level - 1):
                for s in snap.sons(v):
                    _expect(snap.father[s] == v and snap.level[s] == snap.level[v] + 1,
                            f"{snap.kind} node {s}")
                    n += 1
                _expect(snap.black[snap.first_son[v]] == 1, f"{snap.kind} first son of {v}")
                _expect(not any(snap.black[s] for s in list(snap.sons(v))[1:]), f"{snap.kind} sons of {v}")
        return n

    def check_level_counts(self) -> int:
        g = self.g
        for k in range(self.white.max_level + 1):
            size = self.white.level_end[k] - self.white.level_start[k] + 1
            _expect(size == seq_m(g, k), f"white level {k}: {size} nodes")
            _expect(self.white.level_end[k] == seq_M(g, k), f"white level {k} ends at {self.white.level_end[k]}")
        for k in range(self.black.max_level + 1):
            size = self.black.level_end[k] - self.black.level_start[k] + 1
            _expect(size == seq_b(g, k), f"black level {k}: {size} nodes")
            _expect(self.black.level_end[k] == seq_m(g, k), f"black level {k} ends at {self.black.level_end[k]}")
        return self.white.max_level + self.black.max_level + 2

    def check_codes(self) -> int:
        top = self.white.level_end[self.levels + 1]
        for v in range(0, top + 1):
            chain = self.wcode(v) if v else MetallicCode(self.g, (0,))
            _expect(encode(self.g, v) == chain, lambda: f"n={v}: encode {encode(self.g, v)} chain {chain}")
            _expect(decode(chain) == v, f"n={v}: decode {chain}")
        for v in range(0, min(top, 5000) + 1):
            found = search_code(self.g, v)
            chain = self.wcode(v).digits if v else (0,)
            _expect(found == chain, lambda: f"n={v}: search {found} chain {chain}")
        return top + 1

    def check_code_tables(self) -> int:
        g = self.g
        count = 0
        for n in range(self.levels + 2):
            cases = [(seq_m(g, n), (1,) + (0,) * n), (seq_M(g, n), (1,) * (n + 1))]
            if n >= 1:
                cases.append((seq_b(g, n), (g.c,) * (n - 1) + (g.d,)))
            for value, digits in cases:
                _expect(self.wcode(value).digits == digits, f"n={n} value {value}")
                count += 1
        return count

    def check_decomposition_vectors(self) -> int:
        count = 0
        for kind, snap, code in ((TreeKind.WHITE, self.white, self.wcode), (TreeKind.BLACK, self.black, self.bcode)):
            for n in range(1, self.levels + 1):
                vectors = decomposition_vectors(kind, self.g, n)
                root_sons = list(snap.sons(1))
                if kind is TreeKind.BLACK:
                    _expect(len(vectors) == len(root_sons), "black vector count")
                else:
                    _expect(len(vectors) == len(root_sons), "white vector count")
                for s, (label, vec) in zip(root_sons, vectors):
                    _expect(str(code(s)) == label, f"{kind} son {s} labelled {label}")
                    v = s
                    for _ in range(n):
                        v = snap.first_son[v] + snap.son_count[v] - 1
                    _expect(code(v) == vec, lambda: f"{kind} n={n} son {label}: {vec} vs {code(v)}")
                    count += 1
                if kind is TreeKind.WHITE:
                    values = sorted((decode(vec) for _, vec in vectors), reverse=True)
                    expected = [seq_M(self.g, n + 1) - k * seq_m(self.g, n) for k in range(self.g.p - 2)]
                    _expect(values == expected, f"white n={n} values {values}")
        return count

    def check_classify(self) -> int:
        wt, bt = self.wtypes(), self.btypes()
        for v in self.wnodes():
            got = classify(TreeKind.WHITE, self.wcode(v))
            want = "w1" if v == 1 else wt[v]
            _expect(got.type == want and got.root == (v == 1), lambda: f"white {self.wcode(v)}: {got} vs {want}")
        for v in self.bnodes():
            got = classify(TreeKind.BLACK, self.bcode(v))
            _expect(got.type == bt[v] and got.root == (v == 1), lambda: f"black {self.bcode(v)}: {got} vs {bt[v]}")
        return len(self.wnodes()) + len(self.bnodes())

    def check_signature_rules(self) -> int:
        wt, bt = self.wtypes(), self.btypes()
        for v in self.wnodes():
            code = self.wcode(v)
            cls = classify(TreeKind.WHITE, code)
            sig = code.signature
            t = wt[v]
            ok = {"b1": sig == 1, "b2": sig == 2, "wa": 2 <= sig <= self.g.d,
                  "w0": sig == 0, "w1": sig == 1}.get(t, False)
            _expect(ok, f"white {code}: type {t}")
            actual = [(wt[s], self.wcode(s).signature) for s in self.white.sons(v)]
            _expect(actual == sons_signature_word(cls, self.g),
                    lambda: f"white {code}: sons {actual}")
        for v in self.bnodes():
            code = self.bcode(v)
            cls = classify(TreeKind.BLACK, code)
            actual = [(bt[s], self.bcode(s).signature) for s in self.black.sons(v)]
            _expect(actual == sons_signature_word(cls, self.g), lambda: f"black {code}: sons {actual}")
        return len(self.wnodes()) + len(self.bnodes())

    def check_preferred_son(self) -> int:
        for v in self.wnodes():
            code = self.wcode(v)
            target = code.digits + (0,)
            sons = list(self.white.sons(v))
            hits = [i for i, s in enumerate(sons) if self.wcode(s).digits == target]
            _expect(len(hits) == 1, f"{code}: {len(hits)} sons end in 0")
            pos = hits[0] + 1
            wt = self.wtypes()[v]
            want = len(sons) - 1 if wt in ("w0", "w1") else len(sons)
            _expect(pos == want, f"{code}: preferred son at {pos}")
            ps = preferred_son(code)
            _expect((ps.position, ps.sons, ps.code.digits) == (pos, len(sons), target), f"{code}: {ps}")
        return len(self.wnodes())

    def check_successor(self) -> int:
        index = {self.bcode(v).digits: v for v in self.bnodes(self.levels + 1)}
        for v in self.bnodes():
            code = self.bcode(v)
            lev = self.black.level[v]
            t = index.get(code.digits + (0,))
            _expect(t is not None, f"{code}0 is not a node")
            if v == self.black.level_end[lev]:
                _expect(t == self.black.level_end[lev + 1] and self.black.father[t] == v, f"{code}: rightmost case")
                host = v
            else:
                _expect(t == self.black.first_son[v + 1], f"{code}: {t} is not the first son of {v + 1}")
                host = v + 1
            pos = t - self.black.first_son[host] + 1
            got = successor(code)
            _expect((decode(got.father), got.position, got.sons) == (host, pos, self.black.son_count[host]),
                    f"{code}: {got}")
        return len(self.bnodes())

    def check_father(self) -> int:
        for v in self.wnodes():
            if v > 1:
                got = father(self.wcode(v))
                _expect(decode(got) == self.white.father[v], f"white {self.wcode(v)}: {got}")
        for v in self.bnodes():
            if v > 1:
                got = black_father(self.bcode(v))
                _expect(decode(got) == self.black.father[v], f"black {self.bcode(v)}: {got}")
        return len(self.wnodes()) + len(self.bnodes()) - 2

    def check_numbering_shift(self) -> int:
        strips = self.strips()
        count = 0
        for b in self.bnodes(self.levels + 1):
            w = strips.white_of(0, b)
            _expect(black_to_white_number(self.g, b) == w, f"black {b} -> white {w}")
            _expect(white_to_black_number(self.g, w) == b, f"white {w} -> black {b}")
            count += 1
        for n in range(2, self.levels + 2):
            wcode, bcode = penultimate_chain_codes(self.g, n)
            # the chain of penultimate sons from the root
            v = 1
            for _ in range(n):
                v = self.white.first_son[v] + self.white.son_count[v] - 2
            _expect(self.wcode(v) == wcode, f"n={n}: white code {self.wcode(v)}")
            strip, b = strips.locate(v)
            _expect(strip == 0 and self.bcode(b) == bcode, f"n={n}: black code {self.bcode(b)}")
            count += 1
        return count

    def check_strip_decomposition(self) -> int:
        strips = self.strips()
        w, bl = self.white, self.black
        count = 0
        for lev in range(self.levels + 1):
            pos = w.level_start[lev]
            for n in range(lev + 1):
                lo, hi = strips.ranges(n)[lev - n]
                _expect(lo == pos, f"level {lev}: strip {n} starts at {lo}")
                _expect(hi - lo + 1 == seq_b(self.g, lev - n), f"level {lev}: strip {n} size")
                pos = hi + 1
            _expect(pos == w.level_end[lev] + 1, f"level {lev}: strips do not cover the level")
        for n in range(self.levels + 1):
            _expect(self.wcode(strips.roots[n]).digits == (1,) * (n + 1), f"strip {n} root")
            for b in bl.nodes(self.levels - n):
                v = strips.white_of(n, b)
                # a strip's leading tile is white in the sector, black as a root
                _expect(b == 1 or w.black[v] == bl.black[b], f"strip {n}: node {b} status")
                if bl.level[b] < self.levels - n:
                    sons = [strips.locate(s) for s in w.sons(v)]
                    inside = [s for k, s in sons if k == n]
                    _expect(inside == list(bl.sons(b)), f"strip {n}: sons of {b}")
                count += 1
        for v in self.wnodes():
            n, b = strips.locate(v)
            got = strip_of(self.wcode(v))
            _expect(got == (n, w.level[v]), f"{self.wcode(v)}: strip {got} vs {(n, w.level[v])}")
        return count

    def _white_model(self, tiling: Tiling, v: int, sector: int = 1) -> list:
        out = []
        for nb in neighbors_white(tiling, self.wcode(v), sector):
            out.append(CENTRAL if nb.central else (nb.sector, decode(nb.code)))
        return out

    def _neighbors_white(self, tiling: Tiling) -> int:
        sectors = Sectors(self.white, tiling)
        count = sectors.count
        model: dict[int, list] = {}
        for v in self.wnodes():
            got = self._white_model(tiling, v)
            want = sectors.sides((1, v))
            _expect(got == want, lambda: f"{tiling} {self.wcode(v)}: {got} vs {want}")
            _expect(len(set(got)) == count, f"{tiling} {self.wcode(v)}: repeated side")
            model[v] = got
        # symmetry on the formula outputs, rotating sector 1 into the others
        def sides_of(t):
            if t == CENTRAL:
                return sectors.sides(CENTRAL)
            s, u = t
            return [x if x == CENTRAL else ((x[0] - 1 + s - 1) % count + 1, x[1]) for x in model[u]]
        for v in self.wnodes(self.levels - 1):
            for t in model[v]:
                _expect((1, v) in sides_of(t), f"{tiling} {self.wcode(v)}: {t} does not see it back")
        return len(model)

    def check_neighbors_p4(self) -> int:
        return self._neighbors_white(Tiling.P4)

    def check_neighbors_p23(self) -> int:
        return self._neighbors_white(Tiling.P23)

    def _neighbors_black(self, tiling: Tiling) -> int:
        strips = self.strips()
        sectors = Sectors(self.white, tiling)
        count = 0
        for b in self.bnodes():
            got = []
            for nb in neighbors_black(tiling, self.bcode(b)):
                got.append(OUT if nb.code is None else (nb.shift, decode(nb.code)))
            want = []
            for t in sectors.sides((1, strips.white_of(1, b))):
                if t == CENTRAL or t[0] != 1:
                    want.append(OUT)
                else:
                    n, x = strips.locate(t[1])
                    want.append((n - 1, x))
            _expect(got == want, lambda: f"{tiling} black {self.bcode(b)}: {got} vs {want}")
            count += 1
        return count

    def check_neighbors_black_p4(self) -> int:
        return self._neighbors_black(Tiling.P4)

    def check_neighbors_black_p23(self) -> int:
        return self._neighbors_black(Tiling.P23)

    def check_path_equivalence(self) -> int:
        wt = self.wtypes()
        for v in self.wnodes():
            chain = [v]
            while chain[-1] != 1:
                chain.append(self.white.father[chain[-1]])
            chain.reverse()
            code = self.wcode(v)
            down = path_top_down(code, resolve=True)
            up = path_bottom_up(code, resolve=True)
            strip = path_via_strips(code)
            for name, trace in (("top_down", down), ("bottom_up", up), ("via_strips", strip)):
                _expect(trace.numbers() == chain, lambda: f"{code} {name}: {trace.numbers()} vs {chain}")
                _expect(trace.length == self.white.level[v], f"{code} {name}: length")
            types = [s.type for s in down.steps]
            _expect(types == [wt[u] if u > 1 else "w1" for u in chain], f"{code} top_down types {types}")
        return len(self.wnodes())

    def check_path_black(self) -> int:
        bt = self.btypes()
        for v in self.bnodes():
            chain = [v]
            while chain[-1] != 1:
                chain.append(self.black.father[chain[-1]])
            chain.reverse()
            trace = path_black(self.bcode(v), resolve=True)
            _expect(trace.numbers() == chain, lambda: f"{self.bcode(v)}: {trace.numbers()} vs {chain}")
            _expect([s.type for s in trace.steps] == [bt[u] for u in chain], f"{self.bcode(v)}: types")
        return len(self.bnodes())


CHECKS = [
    "snapshot",
    "level_counts",
    "codes",
    "code_tables",
    "decomposition_vectors",
    "classify",
    "signature_rules",
    "preferred_son",
    "successor",
    "father",
    "numbering_shift",
    "strip_decomposition",
    "neighbors_p4",
    "neighbors_p23",
    "neighbors_black_p4",
    "neighbors_black_p23",
    "path_equivalence",
    "path_black",
]


def verify_all(snapshot: TreeSnapshot, levels: int | None = None) -> list[CheckResult]:
    """Run every check on a white snapshot. Checks look at nodes up to
    `levels` (default: two below the snapshot's depth, which the neighbour
    and strip checks need as a margin)."""
    if snapshot.kind is not TreeKind.WHITE:
        raise ValueError("verify_all expects a white snapshot")
    if levels is None:
        levels = max(snapshot.max_level - 2, 0)
    return list(Verifier(snapshot.grade, levels, snapshot).all())


def verify(grade: Grade | int, levels: int) -> list[CheckResult]:
    return list(Verifier(grade, levels).all())


def report(results: Iterable[CheckResult]) -> str:
    return "\n".join(r.line() for r in results)
