"""Acceptance criteria, one test each, at their stated tolerances and time
budgets. Each test appends a PASS/FAIL line that is printed after the run."""

import contextlib
import itertools
import random
import subprocess
import sys
import time

import pydot
import pytest

from conftest import ACCEPTANCE
from metallic.arithmetic import Ordering, add, compare, decrement, increment, subtract
from metallic.navigation import path_black, path_bottom_up, path_top_down
from metallic.numeration import (
    Grade,
    MetallicCode,
    Representation,
    decode,
    encode,
    forbidden_factor,
    random_code,
    seq_b,
    seq_M,
    seq_m,
)
from metallic.oracle import verify
from metallic.trees import (
    TreeKind,
    black_to_white_number,
    decomposition_vectors,
    penultimate_chain_codes,
)

ORACLE_RUNS = [(5, 7), (6, 6), (7, 6), (9, 4), (11, 4)]


@contextlib.contextmanager
def criterion(number, title, budget=None):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE.append(f"criterion {number} FAIL {title}: {type(exc).__name__}: {str(exc)[:200]}")
        raise
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed >= budget:
        ACCEPTANCE.append(f"criterion {number} FAIL {title}: {elapsed:.1f}s, budget {budget}s")
        pytest.fail(f"took {elapsed:.1f}s, budget {budget}s")
    ACCEPTANCE.append(f"criterion {number} PASS {title} ({elapsed:.2f}s)")


@pytest.fixture(scope="module")
def oracle_runs():
    """Every check for every desk-scale grade, timed as one batch."""
    start = time.perf_counter()
    results = {}
    for p, levels in ORACLE_RUNS:
        results[(p, levels)] = verify(p, levels)
    return results, time.perf_counter() - start


def test_1_sequences():
    with criterion(1, "sequence fidelity", budget=1.0):
        for p in (5, 7, 9, 11):
            m = [0, 1]  # m_{-1}, m_0
            b = [1, p - 3]
            M = [0, 1]
            for n in range(60):
                m.append((p - 2) * m[-1] - m[-2])
                b.append((p - 2) * b[-1] - b[-2])
                M.append((p - 2) * M[-1] - M[-2] + 1)
            for n in range(-1, 61):
                assert seq_m(p, n) == m[n + 1]
                assert seq_M(p, n) == M[n + 1]
                if n >= 0:
                    assert seq_b(p, n) == b[n]
                    assert seq_M(p, n) == sum(m[1 : n + 2])
            for n in range(60):
                assert seq_b(p, n + 1) == seq_m(p, n + 1) - seq_m(p, n)
                assert seq_M(p, n + 1) == seq_m(p, n + 1) + seq_M(p, n)
        assert (seq_m(5, 4), seq_m(9, 2), seq_b(5, 3), seq_M(5, 3)) == (55, 48, 13, 33)


def test_2_round_trip_and_uniqueness():
    with criterion(2, "numeration round-trip and uniqueness", budget=30.0):
        for p in (5, 7, 9):
            for n in range(20001):
                assert decode(encode(p, n)) == n
        g = Grade(5)
        seen = {}
        for length in range(1, 9):
            for digits in itertools.product(range(g.d + 1), repeat=length):
                if (length == 1 or digits[0]) and forbidden_factor(g, digits) is None:
                    value = decode(Representation(g, digits))
                    assert value not in seen
                    seen[value] = digits
        assert sorted(seen) == list(range(seq_m(g, 8)))


def test_3_arithmetic():
    with criterion(3, "arithmetic oracle equivalence", budget=120.0):
        rng = random.Random(0)
        for p in (5, 7, 9):
            codes = [encode(p, n) for n in range(5001)]
            for a in range(701):
                ca = codes[a]
                for b in range(701):
                    cb = codes[b]
                    assert decode(add(ca, cb)) == a + b
                    assert compare(ca, cb) is Ordering((a > b) - (a < b))
            for _ in range(20000):
                a, b = rng.randrange(5001), rng.randrange(5001)
                ca, cb = codes[a], codes[b]
                assert decode(add(ca, cb)) == a + b
                assert compare(ca, cb) is Ordering((a > b) - (a < b))
                hi, lo = max(a, b), min(a, b)
                assert decode(subtract(codes[hi], codes[lo])) == hi - lo
            for a in range(701):
                for b in range(0, a + 1, 7):
                    assert decode(subtract(codes[a], codes[b])) == a - b
            for n in range(5000):
                assert increment(codes[n]) == codes[n + 1]
                assert decrement(codes[n + 1]) == codes[n]


def _subtree_sizes(p, depth):
    """(size at `depth` below a black node, size below a white node), from
    the production rules alone."""
    out = []
    for start in ((1, 0), (0, 1)):
        black, white = start
        for _ in range(depth):
            black, white = black + white, black * (p - 4) + white * (p - 3)
        out.append(black + white)
    return out


def test_4_code_tables():
    with criterion(4, "code tables and decomposition vectors"):
        for p in (5, 7, 9):
            g = Grade(p)
            for n in range(31):
                assert encode(g, seq_m(g, n)).digits == (1,) + (0,) * n
                assert encode(g, seq_M(g, n)).digits == (1,) * (n + 1)
                if n >= 1:
                    assert encode(g, seq_b(g, n)).digits == (g.c,) * (n - 1) + (g.d,)
            for n in range(1, 11):
                black_size, white_size = _subtree_sizes(p, n)
                # white tree: root sons are one black node then p-3 white ones;
                # level n+1 starts after M_n
                sizes = [black_size] + [white_size] * (p - 3)
                ends = list(itertools.accumulate(sizes, initial=seq_M(g, n)))[1:]
                vectors = decomposition_vectors(TreeKind.WHITE, g, n)
                assert [label for label, _ in vectors] == [str(a) for a in range(2, g.d + 1)] + ["10", "11"]
                assert [decode(v) for _, v in vectors] == ends
                assert [v for _, v in vectors] == [encode(g, e) for e in ends]
                # black tree: the root has one black son and p-4 white ones;
                # level n+1 starts after m_n
                sizes = [black_size] + [white_size] * (p - 4)
                ends = list(itertools.accumulate(sizes, initial=seq_m(g, n)))[1:]
                vectors = decomposition_vectors(TreeKind.BLACK, g, n)
                assert [decode(v) for _, v in vectors] == ends
                assert [v for _, v in vectors] == [encode(g, e) for e in ends]
                if n >= 2:
                    white, black = penultimate_chain_codes(g, n)
                    assert decode(white) == seq_m(g, n)
                    assert black_to_white_number(g, decode(black)) == decode(white)
                    # shift of level n is the white level-(n-2) end
                    assert decode(white) - decode(black) == seq_M(g, n - 2)


def test_5_structure_checks(oracle_runs):
    results, elapsed = oracle_runs
    with criterion(5, f"oracle verify_all at {ORACLE_RUNS}, {elapsed:.1f}s for all runs"):
        failed = [r.line() for rs in results.values() for r in rs if not r.passed]
        assert not failed, failed
        assert elapsed < 300, f"oracle runs took {elapsed:.1f}s"


def test_6_path_equivalence(oracle_runs):
    results, _ = oracle_runs
    with criterion(6, "three path algorithms agree with oracle fathers"):
        for key, rs in results.items():
            named = {r.name: r for r in rs}
            for name in ("path_equivalence", "path_black"):
                assert named[name].passed, named[name].line()
                assert named[name].count > 0, key


def test_7_complexity():
    with criterion(7, "digit-visit counts", budget=60.0):
        rng = random.Random(7)
        for p in (5, 7, 9):
            for length in (250, 500, 1000, 2000):
                for _ in range(3):
                    c = random_code(p, length, rng)
                    assert path_top_down(c).visits <= 16 * length
                    assert path_black(c).visits <= 16 * length
        for k in (50, 100, 200, 400):
            ones = MetallicCode(Grade(5), (1,) * k)
            assert path_bottom_up(ones).visits >= k * k / 4
            assert path_top_down(ones).visits <= 16 * k


def test_8_neighbors(oracle_runs):
    results, _ = oracle_runs
    with criterion(8, "neighbours match oracle adjacency, symmetric, side 1 is father"):
        names = ("neighbors_p4", "neighbors_p23", "neighbors_black_p4", "neighbors_black_p23", "father")
        for key, rs in results.items():
            named = {r.name: r for r in rs}
            for name in names:
                assert named[name].passed, named[name].line()


def test_9_cli():
    with criterion(9, "CLI smoke"):
        cli = [sys.executable, "-m", "metallic.cli"]
        done = subprocess.run(cli + ["verify", "--p", "5", "--levels", "6"], capture_output=True, text=True)
        assert done.returncode == 0, done.stdout + done.stderr
        done = subprocess.run(cli + ["render", "--p", "9", "--levels", "3", "--format", "dot"],
                              capture_output=True, text=True)
        assert done.returncode == 0
        (graph,) = pydot.graph_from_dot_data(done.stdout)
        nodes = [n for n in graph.get_nodes() if n.get_name() not in ("node", "edge", "graph")]
        assert len(nodes) == seq_M(9, 3) == 385
