"""The group algebra K[S_n] and its Young idempotents."""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .combinatorics import Partition, Permutation, format_seq, sign
from .errors import ArityError
from .linear import LinCombo, format_rational


@dataclass(frozen=True)
class GroupAlgebraElement:
    n: int
    value: LinCombo

    @classmethod
    def identity(cls, n: int) -> "GroupAlgebraElement":
        return cls(n, LinCombo.basis(Permutation.identity(n)))

    @classmethod
    def of(cls, sigma: Sequence[int], coeff=1) -> "GroupAlgebraElement":
        sigma = Permutation(sigma)
        return cls(len(sigma), LinCombo.basis(sigma, coeff))

    @classmethod
    def from_terms(cls, n: int, terms) -> "GroupAlgebraElement":
        value = LinCombo(terms)
        for sigma in value.keys():
            if len(sigma) != n:
                raise ArityError(f"{sigma!r} is not in S_{n}")
        return cls(n, value)

    def _check(self, other: "GroupAlgebraElement"):
        if self.n != other.n:
            raise ArityError(f"K[S_{self.n}] and K[S_{other.n}] do not mix")

    def __add__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.n, self.value + other.value)

    def __sub__(self, other):
        self._check(other)
        return GroupAlgebraElement(self.n, self.value - other.value)

    def __neg__(self):
        return GroupAlgebraElement(self.n, -self.value)

    def __mul__(self, other):
        if isinstance(other, GroupAlgebraElement):
            return multiply(self, other)
        return GroupAlgebraElement(self.n, self.value.scale(other))

    def __rmul__(self, c):
        return GroupAlgebraElement(self.n, self.value.scale(c))

    def items(self):
        return self.value.items()

    def __len__(self):
        return len(self.value)

    def is_idempotent(self) -> bool:
        return multiply(self, self) == self

    def integral(self) -> tuple[int, dict]:
        """``(D, {sigma: int})`` with ``self = (1/D) * sum``; for fast exact loops."""
        d = math.lcm(*(c.denominator for _, c in self.value.items())) if self.value else 1
        return d, {k: int(c * d) for k, c in self.value.items()}


def multiply(a: GroupAlgebraElement, b: GroupAlgebraElement) -> GroupAlgebraElement:
    """Bilinear extension of ``sigma * tau = sigma o tau``."""
    a._check(b)
    da, ia = a.integral()
    db, ib = b.integral()
    acc: dict = {}
    bitems = [(tuple(i - 1 for i in t), ct) for t, ct in ib.items()]
    for s, cs in ia.items():
        get = s.__getitem__
        for t0, ct in bitems:
            key = tuple(map(get, t0))
            acc[key] = acc.get(key, 0) + cs * ct
    acc = {Permutation._raw(k): c for k, c in acc.items()}
    return GroupAlgebraElement(a.n, LinCombo.from_accumulator(acc, Fraction(1, da * db)))


@lru_cache(maxsize=None)
def e_sign(n: int) -> GroupAlgebraElement:
    """``e_(1^n) = (1/n!) sum eps(sigma) sigma``."""
    c = Fraction(1, math.factorial(n))
    perms = itertools.permutations(range(1, n + 1))
    return GroupAlgebraElement(n, LinCombo._from_clean(
        {tuple.__new__(Permutation, p): c * sign(p) for p in perms}))


@lru_cache(maxsize=None)
def e_triv(n: int) -> GroupAlgebraElement:
    """``e_(n) = (1/n!) sum sigma``."""
    c = Fraction(1, math.factorial(n))
    perms = itertools.permutations(range(1, n + 1))
    return GroupAlgebraElement(n, LinCombo._from_clean(
        {tuple.__new__(Permutation, p): c for p in perms}))


def hook_length_dim(lam: Sequence[int]) -> int:
    """Dimension of the Specht module ``S_lambda`` by the hook-length formula."""
    lam = list(lam)
    n = sum(lam)
    conj = [sum(1 for p in lam if p > j) for j in range(lam[0])] if lam else []
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j - 1) + (conj[j] - i - 1) + 1
    return math.factorial(n) // hooks


def tableau(lam: Sequence[int], filling: str = "row") -> list[list[int]]:
    """Standard filling of the Young diagram: row-major or column-major."""
    if filling == "row":
        out, k = [], 1
        for row in lam:
            out.append(list(range(k, k + row)))
            k += row
        return out
    if filling == "column":
        conj = Partition(lam).conjugate()
        rows = [[0] * row for row in lam]
        k = 1
        for j, height in enumerate(conj):
            for i in range(height):
                rows[i][j] = k
                k += 1
        return rows
    raise ValueError(f"unknown filling {filling!r}")


def _block_group(n: int, blocks: list[list[int]]) -> list[Permutation]:
    """All permutations of ``{1..n}`` preserving each block setwise."""
    out = []
    for images in itertools.product(*(itertools.permutations(b) for b in blocks)):
        perm = list(range(1, n + 1))
        for block, img in zip(blocks, images):
            for src, dst in zip(block, img):
                perm[src - 1] = dst
        out.append(tuple.__new__(Permutation, perm))
    return out


@lru_cache(maxsize=None)
def _young(lam: tuple, filling: str) -> GroupAlgebraElement:
    n = sum(lam)
    t = tableau(lam, filling)
    cols = [[row[j] for row in t if j < len(row)] for j in range(lam[0])] if lam else []
    row_sym = GroupAlgebraElement(n, LinCombo._from_clean(
        {p: Fraction(1) for p in _block_group(n, t)}))
    col_anti = GroupAlgebraElement(n, LinCombo._from_clean(
        {q: Fraction(sign(q)) for q in _block_group(n, cols)}))
    e = (row_sym * col_anti) * Fraction(hook_length_dim(lam), math.factorial(n))
    if not e.is_idempotent():
        raise AssertionError(f"Young symmetrizer for {lam} ({filling}) is not idempotent")
    return e


def young_idempotent(lam: Sequence[int], filling: str = "row") -> GroupAlgebraElement:
    """Primitive idempotent ``e_lambda``: row symmetrizer times column antisymmetrizer.

    Normalized by ``dim S_lambda / n!``. Idempotency is checked on
    construction; results are cached per ``(lambda, filling)``.
    """
    return _young(tuple(Partition(lam)), filling)


def format_element(a: GroupAlgebraElement) -> str:
    if not a.value:
        return "0"
    return " + ".join(f"({format_rational(c)})[{format_seq(s)}]" for s, c in a.items())
