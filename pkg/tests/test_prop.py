import random
from fractions import Fraction

import pytest
from hypothesis import given
import hypothesis.strategies as st

from scomprop.checks import (
    _compose_cases,
    _left_cases,
    _right_cases,
    _tensor_cases,
    interchange_holds,
    oracle_compose,
    oracle_left,
    oracle_phi,
    oracle_right,
    oracle_tensor,
    prop_axioms,
    symmetry_holds,
)
from scomprop.combinatorics import Permutation, compose_surjection, permutations, sign, surjections
from scomprop.errors import ArityError
from scomprop.group_algebra import GroupAlgebraElement, e_sign, e_triv, young_idempotent
from scomprop.prop import (
    EMorphism,
    block_swap,
    mu_compose,
    mu_from_nu,
    mu_left_act,
    mu_left_key,
    mu_right_act,
    mu_tensor,
    nu_act,
    nu_compose,
    nu_from_mu,
    nu_mu_sign,
    nu_tensor,
    phi,
    sandwich,
    symmetry_iso,
)

import strategies


def mu(f, c=1):
    return EMorphism.generator(f, "mu", c)


def nu(f, c=1):
    return EMorphism.generator(f, "nu", c)


# -- mu basis reference -----------------------------------------------------


def test_mu_left_action_examples():
    x = mu((1, 1, 2))
    assert mu_left_act(Permutation.identity(2), x) == x
    assert mu_left_act((2, 1), x) == mu((2, 2, 1))
    assert mu_left_act((2, 1), mu((1, 1, 2, 2))) == -mu((2, 2, 1, 1))


def test_mu_right_action_examples():
    x = mu((1, 1, 2))
    assert mu_right_act(x, Permutation.identity(3)) == x
    assert mu_right_act(x, (2, 1, 3)) == -x
    for s in permutations(3):
        for t in permutations(3):
            assert mu_right_act(mu(s), t) == mu(compose_surjection(s, t))


def test_mu_compose_examples():
    y = mu((1, 2, 2, 3))
    assert mu_compose(EMorphism.identity(3, "mu"), y) == y
    assert mu_compose(mu((1, 1)), mu((1, 1, 2))) == mu((1, 1, 1))
    assert mu_compose(mu((1, 1)), mu((1, 2, 2))) == -mu((1, 1, 1))


def test_mu_tensor_examples():
    x = mu((1, 1))
    assert mu_tensor(x, EMorphism.identity(0, "mu")) == x
    assert mu_tensor(x, mu((1,))) == mu((1, 1, 2))


def test_arity_errors():
    with pytest.raises(ArityError):
        mu_compose(mu((1, 1)), mu((1, 2, 3)))
    with pytest.raises(ArityError):
        nu_compose(nu((1, 1)), nu((1, 2, 3)))
    with pytest.raises(ArityError):
        nu_act((2, 1, 3), nu((1, 1, 2)))
    with pytest.raises(ValueError):
        nu_compose(mu((1,)), nu((1,)))


@given(st.data(), st.integers(0, 2**32))
def test_left_action_is_independent_of_the_word(data, seed):
    f = data.draw(strategies.surjections(max_m=6))
    sigma = data.draw(strategies.permutations(n=max(f)))
    assert mu_left_key(sigma, f, random.Random(seed)) == mu_left_key(sigma, f)


# -- change of basis ---------------------------------------------------------


def test_basis_change_examples():
    for s in permutations(3):
        assert nu_mu_sign(s) == sign(s)
    assert nu_mu_sign((1, 1, 2, 2)) == 1


@given(strategies.surjections(max_m=6), strategies.rationals)
def test_basis_change_round_trip(f, c):
    x = nu(f, c) if c else nu(f)
    assert nu_from_mu(mu_from_nu(x)) == x


# -- nu basis ----------------------------------------------------------------


def test_nu_examples():
    assert nu_compose(nu((1, 1)), nu((1, 2, 2))) == nu((1, 1, 1))
    x = nu((1, 2, 2, 3))
    assert nu_compose(EMorphism.identity(3), x) == x
    assert nu_act(None, x, None) == x
    assert nu_act((2, 1), nu((1, 1, 2))) == -nu((2, 2, 1))
    assert nu_tensor(nu((1,)), nu((1,))) == nu((1, 2))
    assert nu_tensor(nu((1, 1)), nu((1, 1))) == nu((1, 1, 2, 2))


def test_phi_examples():
    assert phi(Permutation.identity(3)) == EMorphism.identity(3)
    assert phi((2, 1)) == -nu((2, 1))
    half = Fraction(1, 2)
    assert phi(e_sign(2)) == nu((1, 2), half) + nu((2, 1), half)


@given(st.data())
def test_phi_multiplicative(data):
    s = data.draw(strategies.permutations(max_n=5))
    t = data.draw(strategies.permutations(n=len(s)))
    a, b = GroupAlgebraElement.of(s), GroupAlgebraElement.of(t)
    assert phi(a * b) == nu_compose(phi(a), phi(b))


def test_symmetry_examples():
    assert symmetry_iso(3, 0) == EMorphism.identity(3)
    assert symmetry_iso(1, 1) == -nu((2, 1))
    assert block_swap(2, 1) == (2, 3, 1)


def test_sandwich_examples():
    f = (1, 2, 2)
    x = nu(f)
    assert sandwich(None, x, None) == x
    assert sandwich(GroupAlgebraElement.identity(2), x, GroupAlgebraElement.identity(3)) == x
    sixth = Fraction(1, 6)
    want = EMorphism.from_terms(3, 2, {g: sixth for g in surjections(3, 2)})
    assert sandwich(e_sign(2), x, e_sign(3)) == want
    third = Fraction(1, 3)
    want = (nu(f, third) + nu(compose_surjection(f, (3, 2, 1)), third)
            - nu(compose_surjection(f, (2, 1, 3)), 2 * third))
    assert sandwich(None, x, young_idempotent((2, 1))) == want
    with pytest.raises(ArityError):
        sandwich(e_sign(3), x, None)


def test_sandwich_agrees_in_both_bases():
    for f in surjections(3, 2):
        for a in (e_sign(2), e_triv(2)):
            for b in (e_sign(3), young_idempotent((2, 1))):
                assert mu_from_nu(sandwich(a, nu(f), b)) == sandwich(a, mu_from_nu(nu(f)), b)


def test_nu_tensor_general_closed_form():
    assert nu_tensor(nu((2, 1)), nu((1, 1))) == nu((2, 1, 3, 3))
    # d(g) = 1, m = 3
    assert nu_tensor(nu((1, 2, 1)), nu((1, 1))) == -nu((1, 2, 1, 3, 3))


# -- the nu basis against the mu reference, exhaustively -------------------------


def test_oracle_compose_exhaustive():
    assert all(oracle_compose(f, h) for f, h in _compose_cases(4))


def test_oracle_actions_exhaustive():
    assert all(oracle_left(s, f) for s, f in _left_cases(4))
    assert all(oracle_right(f, t) for f, t in _right_cases(4))
    assert all(oracle_phi(s) for n in range(5) for s in permutations(n))


def test_oracle_tensor_exhaustive():
    assert all(oracle_tensor(f, g) for f, g in _tensor_cases(4))


@given(st.data())
def test_oracle_random_size_five(data):
    f = data.draw(strategies.surjections(max_m=5))
    h = data.draw(strategies.surjections(min_m=len(f), max_m=5, n=len(f)))
    sigma = data.draw(strategies.permutations(n=max(f)))
    tau = data.draw(strategies.permutations(n=len(f)))
    g = data.draw(strategies.surjections(max_m=5))
    assert oracle_compose(f, h)
    assert oracle_left(sigma, f)
    assert oracle_right(f, tau)
    assert oracle_tensor(f, g)


@given(st.data())
def test_oracle_linear_combinations(data):
    def combo(m, n):
        keys = data.draw(st.lists(st.sampled_from(surjections(m, n)), min_size=1, max_size=4))
        coeffs = data.draw(st.lists(strategies.rationals, min_size=len(keys), max_size=len(keys)))
        return EMorphism.from_terms(m, n, dict(zip(keys, coeffs)))

    l_ = data.draw(st.integers(1, 4))
    m = data.draw(st.integers(1, l_))
    n = data.draw(st.integers(1, m))
    x, y = combo(m, n), combo(l_, m)
    assert mu_from_nu(nu_compose(x, y)) == mu_compose(mu_from_nu(x), mu_from_nu(y))
    assert mu_from_nu(nu_tensor(x, y)) == mu_tensor(mu_from_nu(x), mu_from_nu(y))


# -- prop axioms --------------------------------------------------------------


def test_interchange_instances():
    assert interchange_holds((1, 1), (1, 2, 2), (1,), (1, 1))
    assert interchange_holds((1, 1), (1, 1, 2), (1, 1), (1, 2, 1))


def test_symmetry_instances():
    assert symmetry_holds((1, 1), (1, 1, 2))
    assert symmetry_holds((1,), (1, 2))


def test_prop_axioms_total_size_six():
    report = prop_axioms(6)
    assert report.passed, report.lines()


@given(st.integers(0, 5), st.integers(0, 5))
def test_grading_and_vanishing(m, n):
    if m < n:
        assert surjections(m, n) == []
        return
    for f in surjections(m, n)[:10]:
        assert nu(f).degree == m - n
