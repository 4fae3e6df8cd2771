"""Verification suites exposed by ``scomprop verify``.

Each suite returns a :class:`~scomprop.report.Report`; the CLI exits with
status 2 when any check in it fails.
"""
from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

from .combinatorics import (
    Partition,
    Permutation,
    compose_surjection,
    cross_product,
    iter_surjections_upto,
    partitions,
    permutations,
    surjections,
)
from .config import Bounds
from .ext import ext_dim, ext_symmetric_power
from .group_algebra import GroupAlgebraElement, e_sign, e_triv, young_idempotent
from .partition_cat import (
    LambdaMorphism,
    lambda_symmetry,
    odot,
    p_element,
    p_element_recursive,
    star_compose,
    underlying_operad_check,
    verify_prop_axioms,
)
from .prop import (
    EMorphism,
    mu_compose,
    mu_from_nu,
    mu_left_act,
    mu_right_act,
    mu_tensor,
    nu_act,
    nu_compose,
    nu_tensor,
    phi,
    sandwich,
    symmetry_iso,
)
from .report import Check, Report, run_check


def _nu(f) -> EMorphism:
    return EMorphism.generator(f, "nu")


def _random_surjection(rng: random.Random, m: int, n: int):
    while True:
        f = tuple(rng.randint(1, n) for _ in range(m))
        if len(set(f)) == n:
            return f


# -- nu basis against the mu reference -------------------------------------


def oracle_compose(f, h) -> bool:
    lhs = mu_from_nu(nu_compose(_nu(f), _nu(h)))
    return lhs == mu_compose(mu_from_nu(_nu(f)), mu_from_nu(_nu(h)))


def oracle_left(sigma, f) -> bool:
    return mu_from_nu(nu_act(sigma, _nu(f))) == mu_left_act(sigma, mu_from_nu(_nu(f)))


def oracle_right(f, tau) -> bool:
    return mu_from_nu(nu_act(None, _nu(f), tau)) == mu_right_act(mu_from_nu(_nu(f)), tau)


def oracle_tensor(f, g) -> bool:
    closed = nu_tensor(_nu(f), _nu(g))
    reduced = nu_tensor(_nu(f), _nu(g), method="reduce")
    return closed == reduced and mu_from_nu(closed) == mu_tensor(mu_from_nu(_nu(f)), mu_from_nu(_nu(g)))


def oracle_phi(sigma) -> bool:
    return mu_from_nu(phi(sigma)) == phi(sigma, "mu")


def _compose_cases(max_size: int):
    for h in iter_surjections_upto(max_size):
        for f in iter_surjections_upto(max(h, default=0), max(h, default=0)):
            yield f, h


def _left_cases(max_size: int):
    for f in iter_surjections_upto(max_size):
        for sigma in permutations(max(f, default=0)):
            yield sigma, f


def _right_cases(max_size: int):
    for f in iter_surjections_upto(max_size):
        for tau in permutations(len(f)):
            yield f, tau


def _tensor_cases(max_size: int):
    for f in iter_surjections_upto(max_size):
        for g in iter_surjections_upto(max_size):
            yield f, g


def random_oracle_cases(count: int, max_size: int, seed: int = 0):
    """``count`` random ``(kind, args)`` instances with every arity at most ``max_size``."""
    rng = random.Random(seed)
    kinds = ("compose", "left", "right", "tensor")
    for i in range(count):
        kind = kinds[i % len(kinds)]
        m = rng.randint(1, max_size)
        n = rng.randint(1, m)
        f = _random_surjection(rng, m, n)
        if kind == "compose":
            l_ = rng.randint(m, max_size)
            yield kind, (f, _random_surjection(rng, l_, m))
        elif kind == "left":
            yield kind, (Permutation(rng.sample(range(1, n + 1), n)), f)
        elif kind == "right":
            yield kind, (f, Permutation(rng.sample(range(1, m + 1), m)))
        else:
            m2 = rng.randint(1, max_size)
            yield kind, (f, _random_surjection(rng, m2, rng.randint(1, m2)))


ORACLES: dict[str, Callable[..., bool]] = {
    "compose": oracle_compose,
    "left": oracle_left,
    "right": oracle_right,
    "tensor": oracle_tensor,
}


def nu_mu_oracle(max_size: int = 4, random_count: int = 1000, random_max: int | None = None,
                 seed: int = 0) -> Report:
    """Exhaustive agreement up to ``max_size`` plus random instances one size larger."""
    random_max = max_size + 1 if random_max is None else random_max
    report = Report([
        run_check("oracle-compose", _compose_cases(max_size), oracle_compose),
        run_check("oracle-left-action", _left_cases(max_size), oracle_left),
        run_check("oracle-right-action", _right_cases(max_size), oracle_right),
        run_check("oracle-tensor", _tensor_cases(max_size), oracle_tensor),
        run_check("oracle-phi", ((s,) for n in range(max_size + 1) for s in permutations(n)), oracle_phi),
    ])
    if random_count:
        report.checks.append(run_check(
            f"oracle-random (sizes <= {random_max})",
            random_oracle_cases(random_count, random_max, seed),
            lambda kind, args: ORACLES[kind](*args)))
    return report


# -- prop axioms of E on nu generators ----------------------------------------


def _chains(max_l: int, min_l: int = 0):
    """Composable generator pairs ``(f: m -> n, h: l -> m)`` with ``min_l <= l <= max_l``."""
    for h in iter_surjections_upto(max_l, min_l):
        m = max(h, default=0)
        for f in iter_surjections_upto(m, m):
            yield f, h


def interchange_holds(f, h, g, k) -> bool:
    """``(f (x) g) <> (h (x) k) = (-1)^{d(g) d(h)} (f <> h) (x) (g <> k)``."""
    lhs = nu_compose(nu_tensor(_nu(f), _nu(g)), nu_tensor(_nu(h), _nu(k)))
    rhs = nu_tensor(nu_compose(_nu(f), _nu(h)), nu_compose(_nu(g), _nu(k)))
    d_g = len(g) - max(g, default=0)
    d_h = len(h) - max(h, default=0)
    return lhs == (-rhs if (d_g * d_h) & 1 else rhs)


def symmetry_holds(f, g) -> bool:
    """``(-1)^{d(f) d(g)} (g (x) f) <> s_{m,m'} = s_{n,n'} <> (f (x) g)``."""
    x, y = _nu(f), _nu(g)
    lhs = nu_compose(nu_tensor(y, x), symmetry_iso(x.m, y.m))
    if (x.degree * y.degree) & 1:
        lhs = -lhs
    return lhs == nu_compose(symmetry_iso(x.n, y.n), nu_tensor(x, y))


def prop_axioms(max_total_size: int = 6) -> Report:
    """Prop axioms of ``E`` on nu generators.

    The interchange law is checked for all pairs of composable generator
    chains with nonempty domains of total size at most ``max_total_size``;
    the symmetry axiom and tensor associativity for total domain at most
    ``max_total_size - 1``; composition associativity for domains up to 4.
    """
    big = max_total_size
    small = max(big - 1, 0)
    report = Report()
    report.checks.append(run_check(
        "E-interchange",
        ((f, h, g, k) for f, h in _chains(big - 1, 1) for g, k in _chains(big - len(h), 1)),
        interchange_holds))
    report.checks.append(run_check(
        "E-symmetry",
        ((f, g) for f in iter_surjections_upto(small) for g in iter_surjections_upto(small - len(f))),
        symmetry_holds))
    report.checks.append(run_check(
        "E-compose-associativity",
        ((f, g, h) for g, h in _chains(min(big, 4)) for f in iter_surjections_upto(max(g, default=0),
                                                                                   max(g, default=0))),
        lambda f, g, h: nu_compose(nu_compose(_nu(f), _nu(g)), _nu(h))
        == nu_compose(_nu(f), nu_compose(_nu(g), _nu(h)))))
    report.checks.append(run_check(
        "E-tensor-associativity",
        ((f, g, h) for f in iter_surjections_upto(small) for g in iter_surjections_upto(small - len(f))
         for h in iter_surjections_upto(small - len(f) - len(g))),
        lambda f, g, h: nu_tensor(nu_tensor(_nu(f), _nu(g)), _nu(h))
        == nu_tensor(_nu(f), nu_tensor(_nu(g), _nu(h)))))
    report.checks.append(run_check(
        "E-phi-multiplicative",
        ((s, t) for n in range(min(big, 4) + 1) for s in permutations(n) for t in permutations(n)),
        lambda s, t: phi(compose_surjection(s, t)) == nu_compose(phi(s), phi(t))))
    report.checks.append(run_check(
        "E-grading",
        ((f, h) for f, h in _chains(min(big, 4))),
        lambda f, h: all(len(k) - max(k, default=0) == len(h) - max(f, default=0)
                         for k in nu_compose(_nu(f), _nu(h)).terms.keys())))
    return report


# -- partition quotient -------------------------------------------------------


def partition_prop(max_total_size: int = 4, bounds: Bounds | None = None) -> Report:
    report = verify_prop_axioms(max_total_size, bounds)
    report.checks.append(run_check(
        "lambda-dimension", ((m, n) for m in range(max_total_size + 1) for n in range(m + 1)),
        lambda m, n: len(partitions(m, n)) == len({tuple(sorted(map(f.count, range(1, n + 1)), reverse=True))
                                                   for f in surjections(m, n)})))
    return report


def operad_remark(max_m: int = 4, bounds: Bounds | None = None) -> Report:
    return underlying_operad_check(max_m, bounds)


# -- reproduced identities ----------------------------------------------------


@dataclass
class Claim:
    name: str
    holds: Callable[[], bool]

    def check(self) -> Check:
        try:
            ok = bool(self.holds())
            return Check(self.name, ok, 1, None if ok else "identity does not hold")
        except Exception as exc:  # a crash is a failed identity, reported not raised
            return Check(self.name, False, 1, f"{type(exc).__name__}: {exc}")


def _rho(*parts) -> LambdaMorphism:
    return LambdaMorphism.rho(parts)


def _lam(m: int, n: int, terms: dict) -> LambdaMorphism:
    out = LambdaMorphism.zero(m, n)
    for parts, c in terms.items():
        out = out + LambdaMorphism.rho(parts, c)
    return out


def golden_star() -> bool:
    lhs = star_compose(_rho(3, 3, 1), _rho(2, 1, 1, 1, 1, 1, 1))
    return lhs == _lam(8, 3, {(4, 3, 1): Fraction(6, 7), (3, 3, 2): Fraction(1, 7)})


def golden_p63() -> bool:
    want = _lam(6, 3, {(4, 1, 1): Fraction(3, 10), (3, 2, 1): Fraction(6, 10), (2, 2, 2): Fraction(1, 10)})
    return p_element(6, 3) == want and p_element_recursive(6, 3) == want


def golden_exterior_sandwich() -> bool:
    lhs = sandwich(e_sign(2), _nu((1, 2, 2)), e_sign(3))
    rhs = EMorphism.from_terms(3, 2, {g: Fraction(1, 6) for g in surjections(3, 2)})
    return lhs == rhs and ext_dim(((1, 1), (1, 1, 1))).dimension == 1


def golden_hook_sandwich() -> bool:
    f = (1, 2, 2)
    lhs = sandwich(None, _nu(f), young_idempotent((2, 1)))
    rhs = EMorphism.from_terms(3, 2, {
        compose_surjection(f, Permutation.identity(3)): Fraction(1, 3),
        compose_surjection(f, Permutation.transposition(3, 1, 3)): Fraction(1, 3),
        compose_surjection(f, Permutation.transposition(3, 1, 2)): Fraction(-2, 3),
    })
    return (lhs == rhs and ext_dim(((1, 1), (2, 1))).dimension == 1
            and ext_dim(((2,), (2, 1))).dimension == 1)


def tensor_symmetric_identity(max_size: int = 5) -> bool:
    for n in range(1, max_size + 1):
        for m in range(1, max_size + 1):
            res = ext_symmetric_power(n, m)
            if res.dimension != (1 if m == n else 0) or (res.dimension and res.degree != 0):
                return False
    return True


def exterior_partitions(max_size: int = 6) -> bool:
    for m in range(1, max_size + 1):
        for n in range(1, max_size + 1):
            want = len(partitions(m, n)) if m >= n else 0
            if ext_dim(((1,) * n, (1,) * m)).dimension != want:
                return False
    return True


def _symmetric_basis_is_idempotent_image() -> bool:
    res = ext_symmetric_power(2, 2)
    return res.dimension == 1 and nu_compose(res.basis[0], phi(e_triv(2))) == res.basis[0]


def worked_claims() -> list[Claim]:
    tau12 = Permutation.transposition(3, 1, 2)
    tau13 = Permutation.transposition(3, 1, 3)
    c132 = Permutation((3, 1, 2))
    e21 = GroupAlgebraElement.from_terms(3, {
        Permutation.identity(3): Fraction(1, 3), tau13: Fraction(-1, 3),
        tau12: Fraction(1, 3), c132: Fraction(-1, 3)})
    return [
        Claim("rho(3,3,1) * rho(2,1^6) = (1/7)(6 rho(4,3,1) + rho(3,3,2))", golden_star),
        Claim("P_{6,3} = (1/10)(3 rho(4,1,1) + 6 rho(3,2,1) + rho(2,2,2)), closed and recursive", golden_p63),
        Claim("e(1^2) nu[1,2,2] e(1^3) = (1/6) sum nu_g; dim Ext^1(S(1^2), S(1^3)) = 1",
              golden_exterior_sandwich),
        Claim("nu[1,2,2] e(2,1) = (1/3)(nu_f + nu_{f t13} - 2 nu_{f t12}); "
              "dim Ext^1(S(1^2), S(2,1)) = dim Ext^1(S(2), S(2,1)) = 1", golden_hook_sandwich),
        Claim("Ext(T^n, S^m) is 1 iff m = n in degree 0, for m, n <= 5", tensor_symmetric_identity),
        Claim("dim e(1^n) E(m,n) e(1^m) = |Part(m,n)| for m, n <= 6", exterior_partitions),
        Claim("e(2,1) = (1/3)(1 - t13 + t12 - (132))", lambda: young_idempotent((2, 1)) == e21),
        Claim("e(1^2) = (1/2)(1 - t12) and e(2) = (1/2)(1 + t12)", lambda: (
            e_sign(2) == GroupAlgebraElement.from_terms(2, {(1, 2): Fraction(1, 2), (2, 1): Fraction(-1, 2)})
            and e_triv(2) == GroupAlgebraElement.from_terms(2, {(1, 2): Fraction(1, 2), (2, 1): Fraction(1, 2)}))),
        Claim("nu[1,1] <> nu[1,2,2] = nu[1,1,1]",
              lambda: nu_compose(_nu((1, 1)), _nu((1, 2, 2))) == _nu((1, 1, 1))),
        Claim("t12 . nu[1,1,2] = -nu[2,2,1]", lambda: nu_act((2, 1), _nu((1, 1, 2))) == -_nu((2, 2, 1))),
        Claim("nu_s (x) nu_t = nu[1,1,2,2] for s = t = [1,1]",
              lambda: nu_tensor(_nu((1, 1)), _nu((1, 1))) == _nu(cross_product((1, 1), (1, 1)))),
        Claim("rho(1) (.) rho(1^m) = rho(1^{m+1}) for m <= 6",
              lambda: all(odot(_rho(1), _rho(*[1] * m)) == _rho(*[1] * (m + 1)) for m in range(7))),
        Claim("rho(1) (.) rho(2,1^m) = rho(2,1^{m+1}) for m <= 5",
              lambda: all(odot(_rho(1), _rho(2, *[1] * m)) == _rho(2, *[1] * (m + 1)) for m in range(6))),
        Claim("rho(2) (.) rho(2) = -P_{4,2}", lambda: odot(_rho(2), _rho(2)) == -p_element(4, 2)),
        Claim("s_{1,1} = -rho(1^2)", lambda: lambda_symmetry(1, 1) == -_rho(1, 1)),
        Claim("Ext(T^2, S^2) is spanned by the image of e(2)", _symmetric_basis_is_idempotent_image),
    ]


def worked_examples() -> Report:
    return Report([claim.check() for claim in worked_claims()])


SUITES = {
    "nu-mu-oracle": 4,
    "prop-axioms": 6,
    "partition-prop": 4,
    "paper-examples": None,
    "operad-remark": 4,
}


def run_suite(name: str, max_size: int | None = None, bounds: Bounds | None = None,
              seed: int = 0, random_count: int = 1000) -> Report:
    """Dispatch a named suite; ``max_size`` falls back to the suite default."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; expected one of {', '.join(SUITES)}")
    size = SUITES[name] if max_size is None else max_size
    if name == "nu-mu-oracle":
        return nu_mu_oracle(size, random_count=random_count, seed=seed)
    if name == "prop-axioms":
        return prop_axioms(size)
    if name == "partition-prop":
        return partition_prop(size, bounds)
    if name == "operad-remark":
        return operad_remark(size, bounds)
    return worked_examples()
