"""Exact sparse linear combinations and rank over the rationals."""
from __future__ import annotations

import heapq
from fractions import Fraction
from numbers import Rational
from typing import Callable, Generic, Hashable, Iterable, Iterator, Mapping, TypeVar

K = TypeVar("K", bound=Hashable)


def as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"refusing inexact coefficient {x!r}")


def format_rational(x) -> str:
    """``"p/q"``, or ``"p"`` when ``q == 1``."""
    x = as_fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class LinCombo(Generic[K]):
    """A finite linear combination ``sum c_k k`` with exact rational coefficients.

    Zero coefficients are never stored. Iteration follows the natural
    ordering of the keys, so output is deterministic.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[K, object] | Iterable[tuple[K, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict = {}
        for k, c in items:
            c = as_fraction(c)
            if c:
                acc[k] = acc.get(k, 0) + c
        self._terms = {k: c for k, c in acc.items() if c}

    @classmethod
    def _from_clean(cls, terms: dict) -> "LinCombo":
        # caller guarantees Fraction values and no zeros
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def basis(cls, key: K, coeff=1) -> "LinCombo":
        return cls({key: coeff})

    @classmethod
    def from_accumulator(cls, acc: Mapping[K, object], scale=1) -> "LinCombo":
        """Build from a dict of raw (int or Fraction) sums, pruning zeros."""
        scale = as_fraction(scale)
        return cls._from_clean({k: scale * c for k, c in acc.items() if c})

    # -- access ----------------------------------------------------------

    def __getitem__(self, key: K) -> Fraction:
        return self._terms.get(key, Fraction(0))

    coeff = __getitem__

    def __contains__(self, key) -> bool:
        return key in self._terms

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def keys(self) -> list[K]:
        return sorted(self._terms)

    def items(self) -> list[tuple[K, Fraction]]:
        return sorted(self._terms.items(), key=lambda kv: kv[0])

    def __iter__(self) -> Iterator[tuple[K, Fraction]]:
        return iter(self.items())

    def as_dict(self) -> dict[K, Fraction]:
        return dict(self._terms)

    def total(self) -> Fraction:
        return sum(self._terms.values(), Fraction(0))

    # -- arithmetic ------------------------------------------------------

    def __add__(self, other: "LinCombo") -> "LinCombo":
        if not isinstance(other, LinCombo):
            return NotImplemented
        acc = dict(self._terms)
        for k, c in other._terms.items():
            v = acc.get(k, 0) + c
            if v:
                acc[k] = v
            else:
                acc.pop(k, None)
        return LinCombo._from_clean(acc)

    def __neg__(self) -> "LinCombo":
        return LinCombo._from_clean({k: -c for k, c in self._terms.items()})

    def __sub__(self, other: "LinCombo") -> "LinCombo":
        if not isinstance(other, LinCombo):
            return NotImplemented
        return self + (-other)

    def scale(self, c) -> "LinCombo":
        c = as_fraction(c)
        if not c:
            return LinCombo()
        return LinCombo._from_clean({k: c * v for k, v in self._terms.items()})

    def __mul__(self, c) -> "LinCombo":
        try:
            return self.scale(c)
        except TypeError:
            return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, c) -> "LinCombo":
        return self.scale(1 / as_fraction(c))

    def map_keys(self, fn: Callable[[K], object], sign: Callable[[K], int] | None = None) -> "LinCombo":
        """Push forward along ``fn`` (summing collisions), optionally signed per key."""
        acc: dict = {}
        for k, c in self._terms.items():
            if sign is not None:
                c = c * sign(k)
            nk = fn(k)
            acc[nk] = acc.get(nk, 0) + c
        return LinCombo._from_clean({k: c for k, c in acc.items() if c})

    def __eq__(self, other) -> bool:
        if isinstance(other, LinCombo):
            return self._terms == other._terms
        if other == 0:
            return not self._terms
        return NotImplemented

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        return " + ".join(f"({format_rational(c)})*{k!r}" for k, c in self.items())


# -- rank ----------------------------------------------------------------


class Echelon:
    """Incremental row-echelon basis of a span of sparse vectors.

    Rows are stored keyed by their pivot (the smallest key under the
    natural ordering) with the pivot coefficient normalized to 1; every
    other key of a row is larger than its pivot, so reducing a vector
    repeatedly eliminates its smallest key until it vanishes or exposes a
    new pivot.
    """

    def __init__(self):
        self.rows: dict = {}

    def __len__(self) -> int:
        return len(self.rows)

    def reduce(self, vec: Mapping) -> dict:
        v = {k: Fraction(c) for k, c in vec.items() if c}
        heap = list(v)
        heapq.heapify(heap)
        done: dict = {}
        while heap:
            k = heapq.heappop(heap)
            c = v.pop(k, None)
            if c is None:
                continue
            row = self.rows.get(k)
            if row is None:
                done[k] = c
                continue
            for rk, rc in row.items():
                if rk == k:
                    continue
                old = v.get(rk)
                nv = (old or 0) - c * rc
                if nv:
                    v[rk] = nv
                    if old is None:
                        heapq.heappush(heap, rk)
                elif old is not None:
                    del v[rk]
        return done

    def add(self, vec: Mapping) -> bool:
        """Insert ``vec``; return whether it enlarged the span."""
        r = self.reduce(vec)
        if not r:
            return False
        k = min(r)
        c = r[k]
        self.rows[k] = {rk: rc / c for rk, rc in r.items()}
        return True

    def contains(self, vec: Mapping) -> bool:
        return not self.reduce(vec)


def _as_mapping(v) -> Mapping:
    if isinstance(v, LinCombo):
        return v._terms
    terms = getattr(v, "terms", None)
    if isinstance(terms, LinCombo):
        return terms._terms
    return v


def span_dimension(vectors: Iterable) -> int:
    """Rank over the rationals of a family of sparse vectors.

    Accepts ``LinCombo`` instances, objects carrying one in ``.terms``, or
    plain ``{key: coefficient}`` dicts. All keys must be mutually comparable.
    """
    ech = Echelon()
    for v in vectors:
        ech.add(_as_mapping(v))
    return len(ech)


def independent_subset(vectors: list) -> list[int]:
    """Indices of a maximal linearly independent prefix-greedy subfamily."""
    ech = Echelon()
    return [i for i, v in enumerate(vectors) if ech.add(_as_mapping(v))]
