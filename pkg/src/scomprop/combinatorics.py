"""Permutations, surjections and partitions.

All three are stored as tuples of positive integers (1-indexed semantics),
so they hash and compare at C speed and can be used directly as keys of
sparse linear combinations.

* ``Permutation``: images ``(sigma(1), ..., sigma(n))``.
* ``Surjection``: images ``(f(1), ..., f(m))``; the codomain size is
  ``max(images)`` (0 for the empty surjection ``0 -> 0``).
* ``Partition``: weakly decreasing positive parts. Partitions order
  reverse-lexicographically, so ``sorted`` lists ``(4, 3, 1)`` before
  ``(3, 3, 2)``.

Composition is always ``(f o h)(i) = f(h(i))``.
"""
from __future__ import annotations

import itertools
from functools import lru_cache
from typing import Iterable, Iterator, Sequence

from .errors import ArityError


class Surjection(tuple):
    """A surjection ``{1..m} -> {1..n}`` stored as its image sequence."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        self = tuple.__new__(cls, images)
        n = max(self, default=0)
        if set(self) != set(range(1, n + 1)):
            raise ValueError(f"{tuple(self)} is not a surjection onto {{1..{n}}}")
        return self

    @classmethod
    def _raw(cls, images: Iterable[int]) -> "Surjection":
        # no validation; for hot loops whose output is surjective by construction
        return tuple.__new__(cls, images)

    @property
    def m(self) -> int:
        return len(self)

    @property
    def n(self) -> int:
        return max(self, default=0)

    def fiber_sizes(self) -> tuple[int, ...]:
        """``(|f^-1(1)|, ..., |f^-1(n)|)`` in codomain order."""
        counts = [0] * self.n
        for v in self:
            counts[v - 1] += 1
        return tuple(counts)

    def is_order_preserving(self) -> bool:
        return all(a <= b for a, b in zip(self, self[1:]))

    def __repr__(self) -> str:
        return f"{type(self).__name__}({format_seq(self)})"


class Permutation(Surjection):
    """A bijection of ``{1..n}``."""

    __slots__ = ()

    def __new__(cls, images: Iterable[int] = ()):
        self = tuple.__new__(cls, images)
        if sorted(self) != list(range(1, len(self) + 1)):
            raise ValueError(f"{tuple(self)} is not a permutation")
        return self

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return tuple.__new__(cls, range(1, n + 1))

    @classmethod
    def transposition(cls, n: int, i: int, j: int) -> "Permutation":
        """The transposition exchanging ``i`` and ``j`` in ``S_n``."""
        images = list(range(1, n + 1))
        images[i - 1], images[j - 1] = j, i
        return cls(images)

    def inverse(self) -> "Permutation":
        inv = [0] * len(self)
        for i, v in enumerate(self, 1):
            inv[v - 1] = i
        return tuple.__new__(Permutation, inv)


class Partition(tuple):
    """A partition ``lambda_1 >= ... >= lambda_n >= 1``."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        self = tuple.__new__(cls, parts)
        if any(p < 1 for p in self) or any(a < b for a, b in zip(self, self[1:])):
            raise ValueError(f"{tuple(self)} is not a partition")
        return self

    @classmethod
    def _raw(cls, parts: Iterable[int]) -> "Partition":
        return tuple.__new__(cls, parts)

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def conjugate(self) -> "Partition":
        if not self:
            return self
        return tuple.__new__(Partition, [sum(1 for p in self if p > i) for i in range(self[0])])

    # reverse-lexicographic ordering
    def __lt__(self, other):
        return tuple.__gt__(self, other)

    def __le__(self, other):
        return tuple.__ge__(self, other)

    def __gt__(self, other):
        return tuple.__lt__(self, other)

    def __ge__(self, other):
        return tuple.__le__(self, other)

    def __repr__(self) -> str:
        return f"Partition({format_partition(self)})"


# -- sign and composition -------------------------------------------------


def sign(p: Sequence[int]) -> int:
    """Sign of a permutation, by counting inversions."""
    inv = 0
    n = len(p)
    for i in range(n):
        pi = p[i]
        for j in range(i + 1, n):
            if pi > p[j]:
                inv += 1
    return -1 if inv & 1 else 1


def compose_surjection(f: Sequence[int], h: Sequence[int]) -> Surjection:
    """``f o h``; requires ``codomain(h) == domain(f)``."""
    if max(h, default=0) != len(f):
        raise ArityError(f"cannot compose {format_seq(f)} after {format_seq(h)}")
    cls = Permutation if isinstance(f, Permutation) and isinstance(h, Permutation) else Surjection
    return tuple.__new__(cls, [f[i - 1] for i in h])


def cross_product(f: Sequence[int], g: Sequence[int]) -> Surjection:
    """``f x g``: first ``m`` images from ``f``, the rest from ``g`` shifted by ``n``."""
    n = max(f, default=0)
    cls = Permutation if isinstance(f, Permutation) and isinstance(g, Permutation) else Surjection
    return tuple.__new__(cls, tuple(f) + tuple(v + n for v in g))


def fiber_sizes(f: Sequence[int]) -> tuple[int, ...]:
    counts = [0] * max(f, default=0)
    for v in f:
        counts[v - 1] += 1
    return tuple(counts)


def order_preserving(sizes: Sequence[int]) -> Surjection:
    """The order-preserving surjection with the given fiber sizes."""
    return tuple.__new__(Surjection, [i for i, p in enumerate(sizes, 1) for _ in range(p)])


def decompose(f: Sequence[int]) -> tuple[Surjection, Permutation]:
    """Factor ``f = s o a`` with ``s`` order-preserving and ``a`` in ``Sh_f``.

    ``a`` sends the elements of ``f^-1(1)`` (in increasing order) to
    ``1..p_1``, those of ``f^-1(2)`` to ``p_1+1..p_1+p_2``, and so on.
    """
    sizes = fiber_sizes(f)
    offsets = list(itertools.accumulate((0,) + sizes[:-1])) if sizes else []
    alpha = []
    for v in f:
        offsets[v - 1] += 1
        alpha.append(offsets[v - 1])
    return order_preserving(sizes), tuple.__new__(Permutation, alpha)


def is_unshuffle(a: Sequence[int], sizes: Sequence[int]) -> bool:
    """Whether ``a`` is a ``(p_1, ..., p_n)``-unshuffle.

    Structural test: ``a^-1`` is increasing on each consecutive block of
    positions of lengths ``p_1, ..., p_n``.
    """
    if sum(sizes) != len(a):
        return False
    inv = [0] * len(a)
    for i, v in enumerate(a, 1):
        inv[v - 1] = i
    start = 0
    for p in sizes:
        block = inv[start:start + p]
        if any(x > y for x, y in zip(block, block[1:])):
            return False
        start += p
    return True


def proj(f: Sequence[int]) -> Partition:
    """Fiber sizes of ``f`` sorted decreasingly."""
    return tuple.__new__(Partition, sorted(fiber_sizes(f), reverse=True))


def kappa_sizes(sizes: Sequence[int]) -> int:
    """``sum_j (p_j - 1)(p_1 + ... + p_{j-1})``."""
    total = 0
    prefix = 0
    for p in sizes:
        total += (p - 1) * prefix
        prefix += p
    return total


def kappa_sizes_alt(sizes: Sequence[int]) -> int:
    """``sum_k p_k (p_{k+1} - 1 + ... + p_n - 1)``; equals :func:`kappa_sizes`."""
    total = 0
    suffix = 0
    for p in reversed(sizes):
        total += p * suffix
        suffix += p - 1
    return total


def kappa(f: Sequence[int]) -> int:
    sizes = fiber_sizes(f)
    k = kappa_sizes(sizes)
    assert k == kappa_sizes_alt(sizes), sizes
    return k


def canonical_surjection(lam: Sequence[int]) -> Surjection:
    """The order-preserving surjection whose fiber sizes are ``lam`` in order."""
    return order_preserving(lam)


def adjacent_word(sigma: Sequence[int], rng=None) -> list[int]:
    """A word ``[i_1, ..., i_k]`` with ``sigma = t_{i_1} o ... o t_{i_k}``.

    ``t_i`` is the adjacent transposition of ``i`` and ``i+1``. The word is
    reduced; ``rng`` (a ``random.Random``) picks among the available
    descents, giving different reduced words of the same permutation.
    """
    cur = list(sigma)
    pos = {v: i for i, v in enumerate(cur)}
    word = []
    while True:
        # value i+1 placed before value i: t_i o cur has one inversion less
        desc = [i for i in range(1, len(cur)) if pos[i + 1] < pos[i]]
        if not desc:
            break
        i = rng.choice(desc) if rng is not None else desc[0]
        a, b = pos[i], pos[i + 1]
        cur[a], cur[b] = i + 1, i
        pos[i], pos[i + 1] = b, a
        word.append(i)
    return word


# -- enumeration ----------------------------------------------------------


def permutations(n: int) -> list[Permutation]:
    return [tuple.__new__(Permutation, p) for p in itertools.permutations(range(1, n + 1))]


@lru_cache(maxsize=None)
def compositions(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    """Ordered sequences of ``n`` positive integers summing to ``m``, lexicographic."""
    if n == 0:
        return ((),) if m == 0 else ()
    out = []
    for first in range(1, m - n + 2):
        out.extend((first,) + rest for rest in compositions(m - first, n - 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _surjections(m: int, n: int) -> tuple[Surjection, ...]:
    if m < n or (n == 0 and m > 0):
        return ()
    full = set(range(1, n + 1))
    return tuple(
        tuple.__new__(Surjection, f)
        for f in itertools.product(range(1, n + 1), repeat=m)
        if set(f) == full or m == 0
    )


def surjections(m: int, n: int) -> list[Surjection]:
    """All of ``Surj(m, n)``, lexicographic on image sequences."""
    return list(_surjections(m, n))


def ordered_surjections(m: int, n: int) -> list[Surjection]:
    """``OSurj(m, n)``, lexicographic on image sequences."""
    return sorted(order_preserving(c) for c in compositions(m, n))


@lru_cache(maxsize=None)
def _partitions(m: int, n: int, largest: int) -> tuple[tuple[int, ...], ...]:
    if n == 0:
        return ((),) if m == 0 else ()
    out = []
    for first in range(min(largest, m - n + 1), 0, -1):
        out.extend((first,) + rest for rest in _partitions(m - first, n - 1, first))
    return tuple(out)


def partitions(m: int, n: int | None = None) -> list[Partition]:
    """``Part(m, n)`` (or all partitions of ``m``), reverse-lexicographic."""
    if n is None:
        return sorted(p for k in range(m + 1) for p in partitions(m, k))
    return [tuple.__new__(Partition, p) for p in _partitions(m, n, m)]


def unshuffles(f_or_sizes: Sequence[int], *, sizes: bool = False) -> list[Permutation]:
    """``Sh_f``: all ``(p_1, ..., p_n)``-unshuffles for the fiber sizes of ``f``."""
    ps = tuple(f_or_sizes) if sizes else fiber_sizes(f_or_sizes)
    m = sum(ps)
    out = []
    # an unshuffle is the inverse of a shuffle: choose which positions hold each block
    for word in set(itertools.permutations([i for i, p in enumerate(ps, 1) for _ in range(p)])):
        _, a = decompose(word)
        out.append(a)
    assert all(len(a) == m for a in out)
    return sorted(out)


def enumerate_basis(kind: str, m: int, n: int | None = None, f: Sequence[int] | None = None) -> list:
    """Dispatch for the enumeration kinds: ``perm``, ``surj``, ``osurj``, ``part``, ``unshuffle``."""
    if kind == "perm":
        return permutations(m)
    if kind == "surj":
        return surjections(m, n)
    if kind == "osurj":
        return ordered_surjections(m, n) if m >= n else []
    if kind == "part":
        return partitions(m, n)
    if kind == "unshuffle":
        if f is None:
            raise ValueError("unshuffle enumeration needs a surjection f")
        return unshuffles(f)
    raise ValueError(f"unknown enumeration kind {kind!r}")


def iter_surjections_upto(max_m: int, min_m: int = 0) -> Iterator[Surjection]:
    for m in range(min_m, max_m + 1):
        for n in range(0, m + 1):
            yield from _surjections(m, n)


# -- text encodings -------------------------------------------------------


def format_seq(seq: Sequence[int]) -> str:
    return ",".join(str(v) for v in seq)


def format_partition(lam: Sequence[int]) -> str:
    return "+".join(str(v) for v in lam) if lam else "0"


def _ints(text: str, sep: str) -> list[int]:
    text = text.strip()
    if text.startswith("[") and text.endswith("]"):
        text, sep = text[1:-1], ","
    if not text or text in ("0", "()"):
        return []
    try:
        return [int(tok) for tok in text.split(sep)]
    except ValueError:
        raise ValueError(f"cannot parse {text!r}") from None


def parse_surjection(text: str) -> Surjection:
    return Surjection(_ints(text, ","))


def parse_permutation(text: str, n: int | None = None) -> Permutation:
    """Parse ``"2,1,3"``; ``"id"`` needs ``n``."""
    if text.strip() == "id":
        if n is None:
            raise ValueError("'id' needs a known arity")
        return Permutation.identity(n)
    return Permutation(_ints(text, ","))


def parse_partition(text: str) -> Partition:
    """Parse ``"3+2+1"`` or ``"[3,2,1]"``; exponent shorthand ``"2+1^6"`` is accepted."""
    text = text.strip()
    if "^" in text:
        parts = []
        for tok in text.split("+"):
            base, _, exp = tok.partition("^")
            parts.extend([int(base)] * (int(exp) if exp else 1))
        return Partition(parts)
    return Partition(_ints(text, "+"))
