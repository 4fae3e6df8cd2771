import pytest
from hypothesis import given
import hypothesis.strategies as st

from scomprop.combinatorics import partitions, surjections
from scomprop.config import Bounds
from scomprop.errors import BoundExceeded
from scomprop.ext import (
    ExtQuery,
    ext_dim,
    ext_symmetric_power,
    ext_table,
    left_ideal_basis,
    sandwich_span,
    sandwich_span_naive,
    table_to_csv,
)
from scomprop.group_algebra import e_sign, e_triv, hook_length_dim, young_idempotent
from scomprop.linear import span_dimension
from scomprop.prop import EMorphism, phi, sandwich


def brute_dim(mu, lam, filling="row"):
    """Oracle: rank of the full sandwiched family, one vector per surjection."""
    a, b = young_idempotent(mu, filling), young_idempotent(lam, filling)
    m, n = sum(lam), sum(mu)
    return span_dimension(sandwich(a, EMorphism.generator(f), b) for f in surjections(m, n))


def test_worked_dimensions():
    assert ext_dim(((1, 1), (1, 1, 1))).dimension == 1
    assert ext_dim(((2,), (2, 1))).dimension == 1
    assert ext_dim(((1, 1), (2, 1))).dimension == 1
    res = ext_dim(((1, 1), (2, 1)))
    assert res.degree == 1
    assert res.to_json(mu="1+1", **{"lambda": "2+1"}) == {"mu": "1+1", "lambda": "2+1", "degree": 1, "dimension": 1}


def test_below_the_diagonal_is_zero():
    res = ext_dim(((2, 1), (1, 1)))
    assert res.dimension == 0 and res.degree == -1 and res.basis == []


@pytest.mark.parametrize("m", range(1, 5))
def test_against_brute_force(m):
    for n in range(1, m + 1):
        for mu in partitions(n):
            for lam in partitions(m):
                assert ext_dim((mu, lam)).dimension == brute_dim(mu, lam)


@pytest.mark.parametrize("m", range(1, 5))
def test_fast_span_equals_naive_span(m):
    for n in range(1, m + 1):
        for mu in partitions(n):
            for lam in partitions(m):
                a, b = young_idempotent(mu), young_idempotent(lam)
                for left, right in ((a, b), (None, b), (a, None), (None, None)):
                    d1, b1 = sandwich_span(left, right, m, n)
                    d2, b2 = sandwich_span_naive(left, right, m, n)
                    assert d1 == d2 == span_dimension(b1 + b2)


@pytest.mark.parametrize("m", range(1, 7))
def test_exterior_family_counts_partitions(m):
    for n in range(1, m + 1):
        assert ext_dim(((1,) * n, (1,) * m)).dimension == len(partitions(m, n))


@pytest.mark.parametrize("m", range(1, 6))
def test_multiplicity_consistency(m):
    for n in range(1, 6):
        total = sum(ext_dim((mu, lam)).dimension * hook_length_dim(mu) * hook_length_dim(lam)
                    for mu in partitions(n) for lam in partitions(m))
        assert total == len(surjections(m, n))


@pytest.mark.parametrize("m", range(1, 5))
def test_basis_is_fixed_by_both_idempotents(m):
    for n in range(1, m + 1):
        for mu in partitions(n):
            for lam in partitions(m):
                res = ext_dim((mu, lam))
                a, b = young_idempotent(mu), young_idempotent(lam)
                assert len(res.basis) == res.dimension == span_dimension(res.basis)
                for x in res.basis:
                    assert sandwich(a, x, b) == x


@pytest.mark.parametrize("m", range(1, 5))
def test_independent_of_tableau_convention(m):
    for n in range(1, m + 1):
        for mu in partitions(n):
            for lam in partitions(m):
                assert ext_dim((mu, lam), filling="column").dimension == ext_dim((mu, lam)).dimension


def test_tensor_against_symmetric():
    for n in range(1, 6):
        for m in range(1, 6):
            res = ext_symmetric_power(n, m)
            assert res.dimension == (1 if n == m else 0)
    res = ext_symmetric_power(2, 2)
    # generated by the image of e_(2)
    assert span_dimension([res.basis[0], phi(e_triv(2))]) == 1
    assert ext_symmetric_power(2, 4).dimension == 0


@given(st.sampled_from([p for n in range(1, 6) for p in partitions(n)]))
def test_left_ideal_basis_has_hook_dimension(lam):
    assert len(left_ideal_basis(young_idempotent(lam), sum(lam))) == hook_length_dim(lam)


def test_left_ideal_of_the_identity_is_everything():
    assert len(left_ideal_basis(None, 3)) == 6
    assert len(left_ideal_basis(e_triv(4), 4)) == 1


def test_bounds():
    with pytest.raises(BoundExceeded):
        ext_dim(((1,), (1,) * 7), Bounds(max_arity=6))
    with pytest.raises(BoundExceeded):
        ext_table(7, 7, "exterior", Bounds(max_arity=6))
    with pytest.raises(ValueError):
        sandwich_span(e_sign(2), e_sign(2), 3, 2)


def test_tables():
    rows = ext_table(5, 3, "exterior")
    entry = next(r for r in rows if (r["m"], r["n"]) == (5, 3))
    assert entry["dimension"] == 2 and entry["degree"] == 2
    assert [(r["m"], r["n"]) for r in rows] == [(m, n) for m in range(1, 6) for n in range(1, 4)]

    rows = ext_table(3, 2, "simple")
    row32 = {(r["mu"], r["lambda"]): r["dimension"] for r in rows if (r["m"], r["n"]) == (3, 2)}
    assert row32[("2", "2+1")] == 1 and row32[("1+1", "1+1+1")] == 1
    assert len(row32) == 6

    rows = ext_table(4, 4, "tensor-symmetric")
    assert all(r["dimension"] == (r["m"] == r["n"]) for r in rows)

    csv_text = table_to_csv(ext_table(2, 2, "exterior"))
    assert csv_text.splitlines()[0] == "family,m,n,mu,lambda,degree,dimension"
    assert csv_text.splitlines()[1] == "exterior,1,1,1,1,0,1"
    with pytest.raises(ValueError):
        ext_table(2, 2, "nonsense")


def test_parallel_table_matches_serial():
    assert ext_table(3, 3, "simple", Bounds(jobs=2)) == ext_table(3, 3, "simple")


def test_query_type():
    q = ExtQuery((2, 1), (3, 1))
    assert (q.n, q.m, q.degree) == (3, 4, 1)
    with pytest.raises(ValueError):
        ExtQuery((1, 2), (3,))
