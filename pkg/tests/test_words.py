from itertools import product

import pytest
from hypothesis import given

from bracealg.words import (
    Brace,
    NormalWord,
    as_normal,
    breadth,
    catalan,
    compare,
    degree,
    enumerate_marked,
    enumerate_normal,
    letter_key,
)

from conftest import W, normal_words


def brute_trees(letters, deg):
    """Every labelled planar tree with ``deg`` nodes, built by grafting.

    Independent of the enumeration code: each tree of degree d arises from a
    tree of degree d-1 by attaching a new leaf somewhere, and duplicates are
    removed by string form.
    """
    if deg == 1:
        return {str(NormalWord(x)): NormalWord(x) for x in letters}
    out = {}
    for w in brute_trees(letters, deg - 1).values():
        for grown in _graft(w, letters):
            out[str(grown)] = grown
    return out


def _graft(w, letters):
    for x in letters:
        leaf = NormalWord(x)
        for pos in range(len(w.children) + 1):
            kids = list(w.children)
            kids.insert(pos, leaf)
            yield NormalWord(w.head, kids)
    for i, c in enumerate(w.children):
        for g in _graft(c, letters):
            kids = list(w.children)
            kids[i] = g
            yield NormalWord(w.head, kids)


@pytest.mark.parametrize(
    "text, d",
    [("x1", 1), ("<x1;x2>", 2), ("<<x1;x1>,x2;x1>", 4)],
)
def test_degree(text, d):
    assert degree(W(text)) == d


def test_degree_of_general_word():
    assert degree(Brace(("a",), Brace(("b",), "c"))) == 3


@pytest.mark.parametrize("text, b", [("x1", 1), ("<x1,x1;x1>", 3), ("<<x1;x1>;x1>", 2)])
def test_breadth(text, b):
    assert breadth(W(text)) == b


@pytest.mark.parametrize(
    "u, v, expected",
    [
        ("<x1,x1;x1>", "<<x1;x1>;x1>", "GT"),
        ("<x1;x2>", "<x2;x1>", "GT"),
        ("<x1,x2;x1>", "<x2,x1;x1>", "GT"),
        ("x2", "<x1;x1>", "LT"),
        ("<x1;x2>", "<x1;x2>", "EQ"),
    ],
)
def test_compare(u, v, expected):
    assert compare(W(u), W(v)) == expected


def test_letter_order():
    names = ["y", "x10", "x2", "x1", "x"]
    assert sorted(names, key=letter_key) == ["x", "x1", "x2", "x10", "y"]
    assert sorted("dcab", key=letter_key) == list("abcd")


def test_enumerate_small():
    assert [str(w) for w in enumerate_normal(["x"], 3)] == ["<<x;x>;x>", "<x,x;x>"]
    assert [str(w) for w in enumerate_normal(["x"], 1)] == ["x"]
    two = enumerate_normal(2, 2)
    assert len(two) == 4
    assert {(w.children[0].head, w.head) for w in two} == set(product(["x1", "x2"], repeat=2))
    with pytest.raises(ValueError):
        enumerate_normal(1, 0)


@pytest.mark.parametrize("d", range(1, 6))
@pytest.mark.parametrize("letters", [["x"], ["x1", "x2"]])
def test_enumeration_matches_grafting_oracle(letters, d):
    got = enumerate_normal(letters, d)
    oracle = brute_trees(letters, d)
    assert len(got) == len(set(got)) == len(oracle)
    assert {str(w) for w in got} == set(oracle)
    assert got == sorted(got)


def test_catalan_counts():
    assert [len(enumerate_normal(1, d)) for d in range(1, 8)] == [1, 1, 2, 5, 14, 42, 132]
    for d in range(1, 6):
        assert len(enumerate_normal(2, d)) == 2**d * catalan(d - 1)
        assert len(enumerate_normal(3, d)) == 3**d * catalan(d - 1)


def test_enumerate_marked():
    assert [str(w) for w in enumerate_marked(["x"], 1)] == ["y"]
    assert {str(w) for w in enumerate_marked(["x"], 2)} == {"<y;x>", "<x;y>"}
    for letters in (["x"], ["x1", "x2"]):
        for d in range(1, 5):
            oracle = [w for w in brute_trees(letters + ["y"], d).values() if w.count("y") == 1]
            got = enumerate_marked(letters, d)
            assert {str(w) for w in got} == {str(w) for w in oracle}
            assert got == sorted(got)
    # two tree shapes with three nodes, three places for the marker
    assert len(enumerate_marked(["x"], 3)) == 6


def test_marker_clash_rejected():
    with pytest.raises(ValueError):
        enumerate_marked(["x", "y"], 2)


@pytest.mark.parametrize("d", range(1, 6))
def test_total_order_on_slices(d):
    words = enumerate_normal(["x"], d) + enumerate_normal(["x"], d - 1 if d > 1 else 1)
    for u in words:
        for v in words:
            c = compare(u, v)
            assert (c == "EQ") == (u == v) == (str(u) == str(v))
            assert {c, compare(v, u)} in ({"EQ"}, {"LT", "GT"})
    ws = sorted(set(words))
    for a, b, c in zip(ws, ws[1:], ws[2:]):
        assert a < b < c and a < c


@given(normal_words(), normal_words())
def test_weight_is_injective(u, v):
    assert (u.key == v.key) == (str(u) == str(v))


@given(normal_words(max_degree=5))
def test_as_normal_roundtrip(w):
    assert as_normal(w) == w
    assert degree(w) == len(str(w).replace("<", ",").replace(";", ",").replace(">", ",").replace(",", " ").split())


def test_general_word_not_normal():
    assert as_normal(Brace(("a",), Brace(("b",), "c"))) is None
    assert as_normal(Brace(("a", "b"), "c")) == W("<a,b;c>")
