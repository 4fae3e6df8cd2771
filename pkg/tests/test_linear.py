from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from scomprop.linear import Echelon, LinCombo, as_fraction, format_rational, independent_subset, span_dimension

import strategies


def dense_rank(rows, keys):
    """Oracle: textbook Gaussian elimination on a dense Fraction matrix."""
    mat = [[Fraction(r.get(k, 0)) for k in keys] for r in rows]
    rank, col = 0, 0
    while rank < len(mat) and col < len(keys):
        pivot = next((i for i in range(rank, len(mat)) if mat[i][col] != 0), None)
        if pivot is None:
            col += 1
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        for i in range(len(mat)):
            if i != rank and mat[i][col] != 0:
                factor = mat[i][col] / mat[rank][col]
                mat[i] = [a - factor * b for a, b in zip(mat[i], mat[rank])]
        rank += 1
        col += 1
    return rank


vectors = st.lists(
    st.dictionaries(st.integers(0, 6), strategies.rationals, max_size=5),
    max_size=8,
)


def test_combo_basics():
    v = LinCombo({"a": 1, "b": Fraction(1, 3)})
    assert not (v + (-v))
    assert (v - v) == 0
    assert (LinCombo.basis("b", 2) * Fraction(1, 2)) == LinCombo.basis("b")
    x = LinCombo({"x": 1})
    assert x * Fraction(1, 3) + x * Fraction(2, 3) == x
    assert LinCombo({"a": 0, "b": 1}).keys() == ["b"]
    assert v["zzz"] == 0
    assert (v / 2)["a"] == Fraction(1, 2)


def test_no_floats():
    with pytest.raises(TypeError):
        as_fraction(0.5)
    with pytest.raises(TypeError):
        LinCombo({"a": 0.5})


def test_format_rational():
    assert format_rational(Fraction(6, 7)) == "6/7"
    assert format_rational(Fraction(4, 2)) == "2"
    assert format_rational(Fraction(-1, 3)) == "-1/3"


def test_items_are_sorted():
    v = LinCombo({(2, 1): 1, (1, 2): 3})
    assert [k for k, _ in v.items()] == [(1, 2), (2, 1)]


@given(strategies.rationals, strategies.rationals)
def test_round_trip(a, b):
    x, y = LinCombo.basis("k", a), LinCombo.basis("k", b)
    assert (x + y) - y == x


def test_span_dimension_examples():
    assert span_dimension([]) == 0
    e1, e2 = {1: 1}, {2: 1}
    assert span_dimension([e1, e2, {1: 1, 2: 1}]) == 2
    assert span_dimension([LinCombo(e1), LinCombo({1: -3})]) == 1


@given(vectors)
def test_rank_matches_dense_oracle(rows):
    keys = sorted({k for r in rows for k in r})
    assert span_dimension(rows) == dense_rank(rows, keys)


@given(vectors, st.randoms(use_true_random=False), st.lists(strategies.nonzero_rationals, min_size=8, max_size=8))
def test_rank_invariant_under_permutation_and_scaling(rows, rng, scales):
    shuffled = list(rows)
    rng.shuffle(shuffled)
    scaled = [{k: c * s for k, c in r.items()} for r, s in zip(shuffled, scales)]
    assert span_dimension(scaled) == span_dimension(rows)


@given(vectors)
def test_independent_subset_spans(rows):
    idx = independent_subset(rows)
    assert len(idx) == span_dimension(rows) == span_dimension([rows[i] for i in idx])
    ech = Echelon()
    for i in idx:
        ech.add(rows[i])
    assert all(ech.contains(r) for r in rows)
