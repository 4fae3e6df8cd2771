import math
import random
from collections import Counter
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from scomprop.combinatorics import (
    canonical_surjection,
    compose_surjection,
    partitions,
    permutations,
    proj,
    surjections,
)
from scomprop.config import Bounds
from scomprop.errors import ArityError, BoundExceeded
from scomprop.ext import sandwich_span_naive
from scomprop.group_algebra import e_sign
from scomprop.linear import LinCombo
from scomprop.partition_cat import (
    LambdaMorphism,
    basis,
    lambda_symmetry,
    n_ordered_surjections,
    odot,
    p_element,
    p_element_recursive,
    quotient,
    star_basis,
    star_compose,
    star_compose_fast,
    underlying_operad_check,
    verify_prop_axioms,
)
from scomprop.prop import EMorphism, nu_compose, phi



def rho(*parts, c=1):
    return LambdaMorphism.rho(parts, c)


def combo(m, n, terms):
    out = LambdaMorphism.zero(m, n)
    for parts, c in terms.items():
        out = out + LambdaMorphism.rho(parts, c)
    return out


def random_representative(lam, rng):
    """A surjection with fibre sizes ``lam`` up to order, scrambled on both sides."""
    f = canonical_surjection(lam)
    sigma = rng.sample(range(1, len(lam) + 1), len(lam))
    tau = rng.sample(range(1, len(f) + 1), len(f))
    return compose_surjection(sigma, compose_surjection(f, tau))


def brute_star(lam, mu, rng=None):
    """Oracle: average of ``proj(f o sigma o g)`` over ``S_m`` with arbitrary representatives."""
    rng = rng or random.Random(0)
    f = random_representative(lam, rng)
    g = random_representative(mu, rng)
    m = len(f)
    counts = Counter(proj(compose_surjection(f, compose_surjection(s, g))) for s in permutations(m))
    return LambdaMorphism(len(g), len(lam), LinCombo({k: Fraction(c, math.factorial(m)) for k, c in counts.items()}))


# -- goldens ----------------------------------------------------------------------


def test_golden_star():
    want = combo(8, 3, {(4, 3, 1): Fraction(6, 7), (3, 3, 2): Fraction(1, 7)})
    assert star_compose(rho(3, 3, 1), rho(2, 1, 1, 1, 1, 1, 1)) == want


def test_golden_p63():
    want = combo(6, 3, {(4, 1, 1): Fraction(3, 10), (3, 2, 1): Fraction(3, 5), (2, 2, 2): Fraction(1, 10)})
    assert p_element(6, 3) == want
    assert p_element_recursive(6, 3) == want


def test_identities_and_dimensions():
    assert LambdaMorphism.identity(3) == rho(1, 1, 1)
    for m in range(9):
        for n in range(m + 1):
            keys = {proj(f) for f in surjections(m, n)} if m <= 6 else set(partitions(m, n))
            assert {b.terms.keys()[0] for b in basis(m, n)} == keys


# -- star composition --------------------------------------------------------------


@pytest.mark.parametrize("m", range(1, 6))
def test_star_matches_brute_force_with_random_representatives(m):
    rng = random.Random(m)
    for lam in partitions(m):
        for l_ in range(m, m + 3):
            for mu in partitions(l_, m):
                got = LambdaMorphism(l_, len(lam), star_basis(lam, mu))
                assert got == brute_star(lam, mu, rng)


@pytest.mark.parametrize("m", range(1, 9))
def test_fast_path(m):
    for lam in partitions(m):
        want = star_compose(rho(*lam), rho(2, *[1] * (m - 1)))
        assert star_compose_fast(lam) == want


@pytest.mark.parametrize("m", range(0, 9))
def test_p_element_closed_vs_recursive(m):
    for n in range(1 if m else 0, m + 1):
        assert p_element(m, n) == p_element_recursive(m, n)
        if m:
            assert n_ordered_surjections(m, n) == math.comb(m - 1, n - 1)


@pytest.mark.parametrize("m", range(1, 7))
def test_star_coefficients_are_weighted_averages(m):
    for lam in partitions(m):
        for l_ in range(m, m + 3):
            for mu in partitions(l_, m):
                out = star_basis(lam, mu)
                assert out.total() == 1
                assert all(c > 0 and (c * math.factorial(m)).denominator == 1 for _, c in out.items())


@st.composite
def chains(draw, length=3, max_size=6):
    """Composable basis elements, last factor first: ``rho_k * ... * rho_1``."""
    n = draw(st.integers(1, 3))
    sizes = [n]
    for _ in range(length):
        sizes.append(draw(st.integers(sizes[-1], min(max_size, sizes[-1] + 2))))
    out = []
    for lo, hi in zip(sizes, sizes[1:]):
        out.append(rho(*draw(st.sampled_from(partitions(hi, lo)))))
    return out


@given(chains())
def test_star_associativity(ch):
    x, y, z = ch
    assert star_compose(star_compose(x, y), z) == star_compose(x, star_compose(y, z))


def test_star_errors():
    with pytest.raises(ArityError):
        star_compose(rho(2, 1), rho(2, 1))
    with pytest.raises(BoundExceeded):
        star_basis((5, 5), (1,) * 10, Bounds(max_star_arity=9))


def test_star_parallel_matches_serial():
    serial = star_basis((3, 2, 1), (2, 1, 1, 1, 1, 1))
    assert star_basis((3, 2, 1), (2, 1, 1, 1, 1, 1), Bounds(jobs=2)) == serial


# -- relation to E ------------------------------------------------------------------


@pytest.mark.parametrize("m", range(1, 6))
def test_karoubi_consistency(m):
    for n in range(1, m + 1):
        dim, _ = sandwich_span_naive(e_sign(n), e_sign(m), m, n)
        assert dim == len(partitions(m, n))


@pytest.mark.parametrize("m", range(1, 5))
def test_quotient_compatibility(m):
    em = phi(e_sign(m))
    for n in range(1, m + 1):
        for f in surjections(m, n):
            x = EMorphism.generator(f)
            for l_ in range(m, 5):
                for g in surjections(l_, m):
                    y = EMorphism.generator(g)
                    assert star_compose(quotient(x), quotient(y)) == quotient(nu_compose(nu_compose(x, em), y))


def test_quotient_needs_nu():
    with pytest.raises(ValueError):
        quotient(EMorphism.generator((1, 1), "mu"))


# -- monoidal product and symmetry ---------------------------------------------------------


def test_odot_examples():
    for m in range(7):
        assert odot(rho(1), rho(*[1] * m)) == rho(*[1] * (m + 1))
        assert odot(rho(1), rho(2, *[1] * m)) == rho(2, *[1] * (m + 1))
    assert odot(rho(2), rho(2)) == -p_element(4, 2)
    x = rho(3, 1)
    assert odot(LambdaMorphism.identity(0), x) == x == odot(x, LambdaMorphism.identity(0))


def test_interchange_instance():
    a, b = odot(rho(2), rho(1)), odot(rho(2, 1), rho(1))
    lhs = star_compose(a, b)
    rhs = odot(star_compose(rho(2), rho(2, 1)), star_compose(rho(1), rho(1)))
    sign = -1 if (rho(2, 1).degree * rho(1).degree) % 2 else 1
    assert lhs == rhs * sign


def test_symmetry_examples():
    assert lambda_symmetry(3, 0) == rho(1, 1, 1)
    assert lambda_symmetry(1, 1) == -rho(1, 1)


def test_prop_axioms_total_size_five():
    report = verify_prop_axioms(5)
    assert report.passed, report.lines()


def test_operad_remark():
    report = underlying_operad_check(4)
    assert report.passed, report.lines()
