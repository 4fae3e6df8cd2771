"""Ext dimensions between simple functors via idempotent sandwiches.

``dim Ext^{m-n}(S_mu, S_lambda) = dim e_mu . E(m, n) . e_lambda`` for
``mu`` a partition of ``n`` and ``lambda`` a partition of ``m``.
"""
from __future__ import annotations

import csv
import io
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .combinatorics import (
    Partition,
    Permutation,
    Surjection,
    format_partition,
    ordered_surjections,
    partitions,
    proj,
    sign,
    surjections,
)
from .config import Bounds
from .errors import BoundExceeded
from .group_algebra import GroupAlgebraElement, e_triv, young_idempotent
from .linear import Echelon, LinCombo
from .prop import EMorphism

FAMILIES = ("simple", "exterior", "tensor-symmetric")


@dataclass(frozen=True)
class ExtQuery:
    mu: Partition
    lam: Partition

    def __post_init__(self):
        object.__setattr__(self, "mu", Partition(self.mu))
        object.__setattr__(self, "lam", Partition(self.lam))

    @property
    def n(self) -> int:
        return sum(self.mu)

    @property
    def m(self) -> int:
        return sum(self.lam)

    @property
    def degree(self) -> int:
        return self.m - self.n


@dataclass
class ExtResult:
    dimension: int
    degree: int
    basis: list = field(default_factory=list)

    def to_json(self, **labels) -> dict:
        return {**labels, "degree": self.degree, "dimension": self.dimension}


def _twisted(a: GroupAlgebraElement | None, n: int) -> tuple[int, list]:
    """``(D, [(sigma, D * a_sigma * eps(sigma))])``: the action of ``phi(a)`` on nu keys."""
    if a is None:
        return 1, [(Permutation.identity(n), 1)]
    d, coeffs = a.integral()
    return d, [(s, c * sign(s)) for s, c in coeffs.items()]


def left_ideal_basis(b: GroupAlgebraElement | None, m: int) -> list[GroupAlgebraElement]:
    """A basis of ``K[S_m] . b``, grown from ``b`` by adjacent transpositions."""
    if b is None:
        b = GroupAlgebraElement.identity(m)
    gens = [GroupAlgebraElement.of(Permutation.transposition(m, i, i + 1)) for i in range(1, m)]
    ech = Echelon()
    basis, todo = [], [b]
    while todo:
        x = todo.pop()
        if not ech.add(x.value.as_dict()):
            continue
        basis.append(x)
        todo.extend(g * x for g in gens)
    return basis


def _right_vector(f: tuple, right0: list) -> dict:
    vec: dict = {}
    getf = f.__getitem__
    for tau, c in right0:
        key = tuple(map(getf, tau))
        vec[key] = vec.get(key, 0) + c
    return {k: c for k, c in vec.items() if c}


def _left_vector(vec: dict, left1: list) -> dict:
    out: dict = {}
    for sigma, c in left1:
        get = sigma.__getitem__
        for g, cg in vec.items():
            key = tuple(map(get, g))
            out[key] = out.get(key, 0) + c * cg
    return {k: c for k, c in out.items() if c}


def _span_per_class(generators: dict, a, m: int, n: int, scale_right: int) -> tuple[int, list[EMorphism]]:
    """Push each class's right-reduced family through ``phi(a)`` and take the rank."""
    da, left = _twisted(a, n)
    left1 = [((0,) + tuple(sigma), c) for sigma, c in left]
    scale = Fraction(1, da * scale_right)
    basis: list[EMorphism] = []
    for lam in sorted(generators):
        right_span = Echelon()
        kept = [vec for vec in generators[lam] if vec and right_span.add(vec)]
        both_span = Echelon()
        for vec in kept:
            out = _left_vector(vec, left1)
            if out and both_span.add(out):
                terms = LinCombo.from_accumulator(
                    {Surjection._raw(k): c for k, c in out.items()}, scale)
                basis.append(EMorphism(m, n, terms, "nu"))
    return len(basis), basis


def _check_sizes(a, b, m: int, n: int):
    if b is not None and b.n != m or a is not None and a.n != n:
        raise ValueError("idempotent sizes do not match the arities")


def sandwich_span(a: GroupAlgebraElement | None, b: GroupAlgebraElement | None,
                  m: int, n: int) -> tuple[int, list[EMorphism]]:
    """Rank and a basis of ``span{phi(a) <> nu_f <> phi(b) : f in Surj(m, n)}``.

    ``None`` stands for the identity on that side. Every ``f`` is
    ``s o pi`` with ``s`` order-preserving, and ``nu_s <> phi(pi) = eps(pi)
    nu_{s o pi}``, so the span equals that of ``phi(a) <> nu_s <> phi(y)``
    with ``s`` over compositions of ``m`` into ``n`` parts and ``y`` over a
    basis of the left ideal ``K[S_m] . b``. The right factor is applied
    first and each fibre-size class is reduced on its own before the left
    factor is applied, since both actions preserve ``proj``.
    """
    if m < n:
        return 0, []
    _check_sizes(a, b, m, n)
    ideal = [y.integral() for y in left_ideal_basis(b, m)]
    common = math.lcm(*(d for d, _ in ideal))
    generators: dict = {}
    for s in ordered_surjections(m, n):
        for d, coeffs in ideal:
            right0 = [(tuple(t - 1 for t in tau), c * sign(tau) * (common // d))
                      for tau, c in coeffs.items()]
            generators.setdefault(proj(s), []).append(_right_vector(s, right0))
    return _span_per_class(generators, a, m, n, common)


def sandwich_span_naive(a: GroupAlgebraElement | None, b: GroupAlgebraElement | None,
                        m: int, n: int) -> tuple[int, list[EMorphism]]:
    """Same span as :func:`sandwich_span`, with one generator per surjection."""
    if m < n:
        return 0, []
    _check_sizes(a, b, m, n)
    db, right = _twisted(b, m)
    right0 = [(tuple(t - 1 for t in tau), c) for tau, c in right]
    generators: dict = {}
    for f in surjections(m, n):
        generators.setdefault(proj(f), []).append(_right_vector(f, right0))
    return _span_per_class(generators, a, m, n, db)


def _check_bounds(m: int, n: int, bounds: Bounds):
    if max(m, n) > bounds.max_arity:
        raise BoundExceeded(
            f"arities ({m}, {n}) exceed the work ceiling {bounds.max_arity}"
            " (raise it with --max-arity or SCOMPROP_MAX_ARITY)")


def ext_dim(q: ExtQuery | tuple, bounds: Bounds | None = None, filling: str = "row") -> ExtResult:
    """``dim e_mu . E(m, n) . e_lambda`` with a basis of sandwiched generators."""
    if not isinstance(q, ExtQuery):
        q = ExtQuery(*q)
    bounds = bounds or Bounds.from_env()
    _check_bounds(q.m, q.n, bounds)
    if q.m < q.n:
        return ExtResult(0, q.degree)
    dim, basis = sandwich_span(young_idempotent(q.mu, filling), young_idempotent(q.lam, filling), q.m, q.n)
    return ExtResult(dim, q.degree, basis)


def ext_symmetric_power(n: int, m: int, bounds: Bounds | None = None) -> ExtResult:
    """``Ext(T^n o a, S^m o a) = E(m, n) . e_(m)``."""
    bounds = bounds or Bounds.from_env()
    _check_bounds(m, n, bounds)
    if m < n:
        return ExtResult(0, m - n)
    dim, basis = sandwich_span(None, e_triv(m), m, n)
    return ExtResult(dim, m - n, basis)


def _table_queries(max_m: int, max_n: int, family: str) -> list[tuple]:
    out = []
    for m in range(1, max_m + 1):
        for n in range(1, max_n + 1):
            if family == "simple":
                out.extend((family, mu, lam) for mu in partitions(n) for lam in partitions(m))
            elif family == "exterior":
                out.append((family, Partition((1,) * n), Partition((1,) * m)))
            elif family == "tensor-symmetric":
                out.append((family, n, m))
            else:
                raise ValueError(f"unknown family {family!r}; expected one of {FAMILIES}")
    return out


def _table_row(args) -> dict:
    family, left, right, bounds = args
    if family == "tensor-symmetric":
        n, m = left, right
        res = ext_symmetric_power(n, m, bounds)
        mu, lam = "id", format_partition((m,))
    else:
        res = ext_dim(ExtQuery(left, right), bounds)
        m, n = sum(right), sum(left)
        mu, lam = format_partition(left), format_partition(right)
    return {"family": family, "m": m, "n": n, "mu": mu, "lambda": lam,
            "degree": res.degree, "dimension": res.dimension}


def ext_table(max_m: int, max_n: int, family: str = "simple",
              bounds: Bounds | None = None) -> list[dict]:
    """Dimensions for every query of a family, ordered by ``(m, n, mu, lambda)``."""
    bounds = bounds or Bounds.from_env()
    _check_bounds(max_m, max_n, bounds)
    jobs = [q + (bounds,) for q in _table_queries(max_m, max_n, family)]
    if bounds.jobs > 1:
        with ProcessPoolExecutor(max_workers=bounds.jobs) as pool:
            return list(pool.map(_table_row, jobs))
    return [_table_row(j) for j in jobs]


def table_to_csv(rows: Sequence[dict]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=["family", "m", "n", "mu", "lambda", "degree", "dimension"],
                            lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()
