import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from metallic.numeration import Grade, MetallicCode, code, decode, encode, seq_M, seq_m
from metallic.oracle import Verifier, black_types, build
from metallic.trees import (
    TreeKind,
    black_to_white_number,
    classify,
    decomposition_vectors,
    level_of,
    penultimate_chain_codes,
    preferred_son,
    sons_signature_word,
    successor,
    white_to_black_number,
    zero_branch,
)
from metallic.navigation import father

W, B = TreeKind.WHITE, TreeKind.BLACK


def test_level_of_examples():
    assert level_of(W, 5, 12) == 2
    assert level_of(W, 9, 1) == 0
    assert level_of(B, 5, 8) == 2
    with pytest.raises(ValueError):
        level_of(W, 5, 0)


def test_classify_examples():
    assert classify(W, code(5, "10")).type == "w0"
    assert classify(W, code(5, "2")).type == "b2"
    root = classify(B, code(5, "1"))
    assert root.root and root.status == "black"
    white_root = classify(W, code(5, "1"))
    assert white_root.root and white_root.type == "w1"
    with pytest.raises(ValueError):
        classify(W, code(5, "0"))


def test_black_rightmost_branch_is_w0():
    # m_2 = 24 for p=7 is the rightmost node of level 2 of the black tree
    snap = build(7, B, 2)
    assert snap.level_end[2] == 24
    assert black_types(snap)[24] == "w0"
    assert classify(B, code(7, "100")).type == "w0"


def test_sons_signature_word_examples():
    cls = classify(W, code(9, "11"))
    assert cls.type == "w1"
    word = sons_signature_word(cls, 9)
    assert word == [("b2", 2), ("wa", 3), ("wa", 4), ("wa", 5), ("wa", 6), ("w0", 0), ("w1", 1)]
    b0 = classify(B, code(5, "20"))
    assert b0.type == "b0"
    assert sons_signature_word(b0, 5) == [("b0", 0), ("wa", 1)]
    # p=5: black nodes of the white tree have no wa sons
    assert sons_signature_word(classify(W, code(5, "2")), 5) == [("b2", 2), ("w0", 0)]


@pytest.mark.parametrize("p, text, son, number, position, sons", [
    (5, "1", "10", 3, 2, 3),
    (5, "10", "100", 8, 2, 3),
    (9, "10", "100", 48, 6, 7),
])
def test_preferred_son_examples(p, text, son, number, position, sons):
    ps = preferred_son(code(p, text))
    assert str(ps.code) == son
    assert decode(ps.code) == number
    assert (ps.position, ps.sons) == (position, sons)


def test_successor_examples():
    # black node 2: its successor "20" = 6 is the first son of node 3
    s = successor(code(5, "2"))
    assert (str(s.code), decode(s.code), decode(s.father), s.position) == ("20", 6, 3, 1)
    # black node m_1 = 3 is rightmost: successor m_2 = 8, its own last son
    s = successor(code(5, "10"))
    assert (decode(s.code), decode(s.father), s.position, s.sons) == (8, 3, 3, 3)
    # the root is rightmost on level 0: "10" is its own last son
    s = successor(code(9, "1"))
    assert (str(s.code), decode(s.father), s.position, s.sons) == ("10", 1, 6, 6)
    snap = build(9, B, 1)
    assert snap.level_end[1] == decode(code(9, "10")) and snap.father[7] == 1


def test_numbering_shift_examples():
    assert black_to_white_number(5, 7) == 8
    assert black_to_white_number(5, 1) == 1
    assert black_to_white_number(5, 17) == 21
    assert white_to_black_number(5, 21) == 17
    with pytest.raises(ValueError):
        white_to_black_number(5, 4)  # "11" roots the removed subtree


def test_penultimate_chain_codes():
    white, black = penultimate_chain_codes(5, 3)
    assert (str(white), str(black)) == ("1000", "201")
    assert decode(black) == 17 and decode(white) == 21
    with pytest.raises(ValueError):
        penultimate_chain_codes(5, 1)


def test_decomposition_vector_examples():
    white = dict((label, str(v)) for label, v in decomposition_vectors(W, 9, 2))
    assert white["2"] == "201"
    black = dict((label, str(v)) for label, v in decomposition_vectors(B, 9, 1))
    assert black["2"] == "16"
    assert str(decomposition_vectors(W, 5, 1)[-1][1]) == "111"


@pytest.mark.parametrize("p", [5, 6, 7, 9, 11])
def test_decomposition_vector_values(p):
    g = Grade(p)
    for n in range(1, 11):
        values = sorted((decode(v) for _, v in decomposition_vectors(W, g, n)), reverse=True)
        assert values == [seq_M(g, n + 1) - k * seq_m(g, n) for k in range(p - 2)]


def test_zero_branch_examples():
    assert str(zero_branch(code(5, "10"), 3)) == "10000"
    assert str(zero_branch(code(9, "201"), 2)) == "20100"
    son = zero_branch(code(5, "21"), 1)
    assert str(son) == "210" and father(son) == code(5, "21")
    with pytest.raises(ValueError):
        zero_branch(code(5, "0"), 1)


@pytest.mark.parametrize("p, levels", [(5, 5), (6, 4), (7, 4), (9, 3)])
def test_against_oracle(p, levels):
    v = Verifier(p, levels)
    for name in ("classify", "signature_rules", "preferred_son", "successor", "numbering_shift"):
        result = v.run(name, getattr(v, "check_" + name))
        assert result.passed, result.line()


codes = st.builds(
    lambda p, digits: (p, digits),
    st.sampled_from([5, 6, 7, 9, 11]),
    st.lists(st.integers(0, 20), min_size=1, max_size=40),
)


def _canonical(p, raw):
    from metallic.numeration import normalize, Representation

    g = Grade(p)
    rep = Representation(g, tuple(min(x, g.d) for x in raw))
    c = normalize(rep)
    return c if not c.is_zero else MetallicCode(g, (1,))


@settings(max_examples=200, deadline=None)
@given(codes)
def test_preferred_son_is_w0_and_child(pair):
    c = _canonical(*pair)
    son = zero_branch(c, 1)
    assert classify(W, son).type == "w0"
    assert father(son) == c
