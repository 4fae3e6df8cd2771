"""The quotient category E_Lambda on partitions, and its prop structure.

``E_Lambda(m, n)`` has basis ``rho_lambda`` for ``lambda`` a partition of
``m`` into ``n`` parts; ``rho_lambda`` is the class of ``nu_f`` for any
surjection ``f`` with fiber sizes ``lambda`` up to order.
"""
from __future__ import annotations

import itertools
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache, reduce
from typing import Sequence

from .combinatorics import (
    Partition,
    canonical_surjection,
    compositions,
    format_partition,
    partitions,
    proj,
)
from .config import Bounds
from .errors import ArityError, BoundExceeded
from .linear import LinCombo, format_rational
from .prop import EMorphism
from .report import Report, run_check


@dataclass(frozen=True)
class LambdaMorphism:
    """An element of ``E_Lambda(m, n)`` over the partition basis."""

    m: int
    n: int
    terms: LinCombo = field(default_factory=LinCombo)

    @property
    def degree(self) -> int:
        return self.m - self.n

    @classmethod
    def rho(cls, lam: Sequence[int], coeff=1) -> "LambdaMorphism":
        lam = Partition(lam)
        return cls(sum(lam), len(lam), LinCombo.basis(lam, coeff))

    @classmethod
    def identity(cls, m: int) -> "LambdaMorphism":
        return cls.rho((1,) * m)

    @classmethod
    def zero(cls, m: int, n: int) -> "LambdaMorphism":
        return cls(m, n, LinCombo())

    def _like(self, terms: LinCombo) -> "LambdaMorphism":
        return LambdaMorphism(self.m, self.n, terms)

    def _check_same(self, other):
        if (self.m, self.n) != (other.m, other.n):
            raise ArityError(f"E_Lambda({self.m},{self.n}) vs E_Lambda({other.m},{other.n})")

    def __add__(self, other):
        self._check_same(other)
        return self._like(self.terms + other.terms)

    def __sub__(self, other):
        self._check_same(other)
        return self._like(self.terms - other.terms)

    def __neg__(self):
        return self._like(-self.terms)

    def __mul__(self, c):
        return self._like(self.terms.scale(c))

    __rmul__ = __mul__

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "degree": self.degree,
            "terms": [{"key": format_partition(k), "coeff": format_rational(c)} for k, c in self.terms],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({format_rational(c)})rho[{format_partition(k)}]" for k, c in self.terms)


def basis(m: int, n: int) -> list[LambdaMorphism]:
    return [LambdaMorphism.rho(lam) for lam in partitions(m, n)]


def quotient(x: EMorphism) -> LambdaMorphism:
    """``[nu_f] = rho_{proj f}``, extended linearly."""
    if x.basis != "nu":
        raise ValueError("quotient expects a nu-basis morphism")
    return LambdaMorphism(x.m, x.n, x.terms.map_keys(proj))


# -- composition ----------------------------------------------------------


def _star_counts(lam: tuple, mu: tuple, first: int | None = None) -> Counter:
    """Multiset of ``proj(f o sigma o g)`` over ``sigma`` in ``S_m``.

    ``f`` and ``g`` are the canonical representatives of ``lam`` and ``mu``;
    the fiber of ``f o sigma o g`` over ``i`` has size
    ``sum(mu[k] for k with f(sigma(k)) == i)``. ``first`` restricts to
    permutations with ``sigma(1) == first`` (for splitting across workers).
    """
    f = [v - 1 for v in canonical_surjection(lam)]
    m = len(f)
    n = len(lam)
    counts: Counter = Counter()
    if first is None:
        perms = itertools.permutations(range(m))
        head: tuple = ()
    else:
        perms = itertools.permutations([k for k in range(m) if k != first])
        head = (first,)
    for tail in perms:
        sigma = head + tail
        buckets = [0] * n
        for k in range(m):
            buckets[f[sigma[k]]] += mu[k]
        buckets.sort(reverse=True)
        counts[tuple(buckets)] += 1
    return counts


@lru_cache(maxsize=None)
def _star_basis(lam: tuple, mu: tuple, jobs: int = 1) -> LinCombo:
    m = sum(lam)
    if jobs > 1 and m > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = pool.map(_star_counts, [lam] * m, [mu] * m, range(m))
            counts = reduce(lambda a, b: a + b, parts, Counter())
    else:
        counts = _star_counts(lam, mu)
    return LinCombo.from_accumulator(
        {Partition._raw(k): c for k, c in counts.items()}, Fraction(1, math.factorial(m)))


def star_basis(lam: Sequence[int], mu: Sequence[int], bounds: Bounds | None = None) -> LinCombo:
    """``rho_lam * rho_mu = (1/m!) sum_sigma rho_{proj(f o sigma o g)}``."""
    bounds = bounds or Bounds()
    lam, mu = Partition(lam), Partition(mu)
    m = sum(lam)
    if len(mu) != m:
        raise ArityError(f"rho_{format_partition(lam)} cannot follow rho_{format_partition(mu)}")
    if m > bounds.max_star_arity:
        raise BoundExceeded(f"middle arity {m} exceeds the brute-force bound {bounds.max_star_arity}")
    return _star_basis(tuple(lam), tuple(mu), bounds.jobs)


def star_compose(x: LambdaMorphism, y: LambdaMorphism, bounds: Bounds | None = None) -> LambdaMorphism:
    """Composition ``x * y`` for ``x: m -> n`` and ``y: l -> m``."""
    if x.m != y.n:
        raise ArityError(f"cannot compose E_Lambda({x.m},{x.n}) after E_Lambda({y.m},{y.n})")
    out = LinCombo()
    for lam, a in x.terms.as_dict().items():
        for mu, b in y.terms.as_dict().items():
            out = out + star_basis(lam, mu, bounds).scale(a * b)
    return LambdaMorphism(y.m, x.n, out)


def star_compose_fast(lam: Sequence[int]) -> LambdaMorphism:
    """``rho_lam * rho_(2,1^{m-1}) = (1/m) sum_i lam_i rho_{lam + e_i}`` (re-sorted)."""
    lam = Partition(lam)
    m = sum(lam)
    acc: dict = {}
    for i, part in enumerate(lam):
        bumped = list(lam)
        bumped[i] += 1
        key = Partition._raw(sorted(bumped, reverse=True))
        acc[key] = acc.get(key, 0) + part
    return LambdaMorphism(m + 1, len(lam), LinCombo.from_accumulator(acc, Fraction(1, m)))


# -- averaged elements and the monoidal product ---------------------------


def n_ordered_surjections(m: int, n: int) -> int:
    """``|OSurj(m, n)| = C(m-1, n-1)`` (1 for ``m = n = 0``)."""
    if m == n == 0:
        return 1
    if n < 1 or m < n:
        return 0
    return math.comb(m - 1, n - 1)


@lru_cache(maxsize=None)
def p_element(m: int, n: int) -> LambdaMorphism:
    """``P_{m,n}``: uniform average of ``rho_{proj s}`` over order-preserving ``s``."""
    if m < n:
        raise ArityError(f"P_{{{m},{n}}} needs m >= n")
    counts = Counter(Partition._raw(sorted(c, reverse=True)) for c in compositions(m, n))
    return LambdaMorphism(m, n, LinCombo.from_accumulator(counts, Fraction(1, sum(counts.values()))))


def p_element_recursive(m: int, n: int, bounds: Bounds | None = None) -> LambdaMorphism:
    """``P_{n+1,n} * P_{n+2,n+1} * ... * P_{m,m-1}``, starting from ``rho_(1^n)``."""
    if m < n:
        raise ArityError(f"P_{{{m},{n}}} needs m >= n")
    out = LambdaMorphism.identity(n)
    for k in range(n, m):
        out = star_compose(out, LambdaMorphism.rho((2,) + (1,) * (k - 1)), bounds)
    return out


def _is_unit(x: LambdaMorphism) -> bool:
    return x.m == 0 and x.n == 0


def odot(x: LambdaMorphism, y: LambdaMorphism) -> LambdaMorphism:
    """``rho_a (.) rho_b = (-1)^{d(rho_a) n'} P_{m+m', n+n'}``, bilinear.

    ``E_Lambda(0, 0)`` is spanned by the monoidal unit ``rho_()``, which
    multiplies as a scalar on either side.
    """
    if _is_unit(x):
        return y._like(y.terms.scale(x.terms.total()))
    if _is_unit(y):
        return x._like(x.terms.scale(y.terms.total()))
    m, n = x.m + y.m, x.n + y.n
    c = x.terms.total() * y.terms.total()
    if (x.degree * y.n) & 1:
        c = -c
    if not c:
        return LambdaMorphism.zero(m, n)
    return p_element(m, n) * c


def odot_all(*xs: LambdaMorphism) -> LambdaMorphism:
    return reduce(odot, xs, LambdaMorphism.identity(0))


def lambda_symmetry(m: int, m2: int) -> LambdaMorphism:
    """``s_{m,m'} = (-1)^{m m'} rho_(1^{m+m'})``."""
    return LambdaMorphism.identity(m + m2) * (-1 if (m * m2) & 1 else 1)


# -- verification ---------------------------------------------------------


def _basis_upto(max_m: int, min_m: int = 0):
    for m in range(min_m, max_m + 1):
        for n in range(0, m + 1):
            for lam in partitions(m, n):
                yield LambdaMorphism.rho(lam)


def _chains(max_l: int):
    """Composable basis pairs ``(x: m -> n, y: l -> m)`` with ``l <= max_l``."""
    for y in _basis_upto(max_l):
        for x in _basis_upto(y.n, y.n):
            if x.m == y.n:
                yield x, y


def verify_prop_axioms(max_total_size: int = 4, bounds: Bounds | None = None) -> Report:
    """Exhaustively check the prop axioms of ``(E_Lambda, *, (.))`` on basis elements.

    Sizes are measured by total domain: ``l + l'`` for the interchange law,
    ``m + m' (+ m'')`` for the monoidal checks.
    """
    star = lambda a, b: star_compose(a, b, bounds)  # noqa: E731
    big = max_total_size
    report = Report()

    report.checks.append(run_check(
        "identity", ((x,) for x in _basis_upto(big)),
        lambda x: star(LambdaMorphism.identity(x.n), x) == x == star(x, LambdaMorphism.identity(x.m))))

    report.checks.append(run_check(
        "star-associativity",
        ((x, y, z) for y, z in _chains(big) for x in _basis_upto(y.n, y.n) if x.m == y.n),
        lambda x, y, z: star(star(x, y), z) == star(x, star(y, z))))

    report.checks.append(run_check(
        "unit", ((x,) for x in _basis_upto(big)),
        lambda x: odot(LambdaMorphism.identity(0), x) == x == odot(x, LambdaMorphism.identity(0))))

    report.checks.append(run_check(
        "odot-associativity",
        ((a, b, c) for a in _basis_upto(big) for b in _basis_upto(big - a.m)
         for c in _basis_upto(big - a.m - b.m)),
        lambda a, b, c: odot(odot(a, b), c) == odot(a, odot(b, c))))

    report.checks.append(run_check(
        "odot-identities", ((m, m2) for m in range(big + 1) for m2 in range(big + 1 - m)),
        lambda m, m2: odot(LambdaMorphism.identity(m), LambdaMorphism.identity(m2))
        == LambdaMorphism.identity(m + m2)))

    def interchange(lam, beta, lam2, beta2):
        lhs = star(odot(lam, lam2), odot(beta, beta2))
        rhs = odot(star(lam, beta), star(lam2, beta2))
        if (beta.degree * lam2.degree) & 1:
            rhs = -rhs
        return lhs == rhs

    report.checks.append(run_check(
        "interchange",
        ((lam, beta, lam2, beta2) for lam, beta in _chains(big)
         for lam2, beta2 in _chains(big - beta.m)),
        interchange))

    def symmetry(a, b):
        lhs = star(odot(b, a), lambda_symmetry(a.m, b.m))
        if (a.degree * b.degree) & 1:
            lhs = -lhs
        rhs = star(lambda_symmetry(a.n, b.n), odot(a, b))
        return lhs == rhs

    report.checks.append(run_check(
        "symmetry", ((a, b) for a in _basis_upto(big) for b in _basis_upto(big - a.m)), symmetry))

    report.checks.append(run_check(
        "symmetry-involutive", ((m, m2) for m in range(big + 1) for m2 in range(big + 1 - m)),
        lambda m, m2: star(lambda_symmetry(m2, m), lambda_symmetry(m, m2))
        == LambdaMorphism.identity(m + m2)))
    return report


def _mu_corolla(k: int) -> EMorphism:
    return EMorphism.generator((1,) * k, "mu")


def underlying_operad_check(max_m: int = 4, bounds: Bounds | None = None) -> Report:
    """Check ``rho_(m) -> (-1)^{m(m-1)/2} mu_m`` respects operadic composition.

    For every ``k`` and ``(n_1, ..., n_k)`` with ``n_1 + ... + n_k <= max_m``,
    compares ``rho_(k) * (rho_(n_1) (.) ... (.) rho_(n_k))`` in ``E_Lambda``
    against ``mu_k <> (mu_{n_1} (x) ... (x) mu_{n_k})`` computed by the
    free-prop reference, through the sign map.
    """
    from .prop import mu_compose, mu_tensor

    def psi_sign(m: int) -> int:
        return -1 if (m * (m - 1) // 2) & 1 else 1

    def case(ns):
        k = len(ns)
        total = sum(ns)
        lhs = star_compose(LambdaMorphism.rho((k,)),
                           odot_all(*(LambdaMorphism.rho((p,)) for p in ns)), bounds)
        lhs_coeff = lhs.terms[Partition((total,))] * psi_sign(total)
        inner = _mu_corolla(ns[0])
        for p in ns[1:]:
            inner = mu_tensor(inner, _mu_corolla(p))
        rhs = mu_compose(_mu_corolla(k), inner)
        rhs_coeff = rhs.terms[(1,) * total] * psi_sign(k)
        for p in ns:
            rhs_coeff *= psi_sign(p)
        return lhs_coeff == rhs_coeff and len(lhs.terms) == 1

    cases = [(ns,) for total in range(1, max_m + 1) for k in range(1, total + 1)
             for ns in compositions(total, k)]
    report = Report([run_check("operad-composition", cases, case)])
    report.checks.append(run_check(
        "operad-unit", [(m,) for m in range(1, max_m + 1)],
        lambda m: star_compose(LambdaMorphism.rho((m,)), LambdaMorphism.identity(m), bounds)
        == LambdaMorphism.rho((m,))))
    return report
