"""The prop E freely generated by the suspended commutative operad.

``E(m, n)`` has one basis vector per surjection ``f: {1..m} -> {1..n}``,
in degree ``m - n``. Two generator systems are implemented:

* ``mu``: ``mu_f = mu_{p_1} (x) ... (x) mu_{p_n}``. Every operation here is
  computed straight from the free-prop construction (Koszul signs on
  adjacent transpositions, block decompositions of the right action,
  operadic composition signs). This is the slow reference.
* ``nu``: ``nu_f = eps(alpha) (-1)^kappa(f) mu_f`` where ``f = s o alpha``.
  Composition is plain composition of surjections and both symmetric
  group actions are by sign.

Morphisms are :class:`EMorphism` values; keys of ``terms`` are surjections.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .combinatorics import (
    Permutation,
    Surjection,
    adjacent_word,
    compose_surjection,
    cross_product,
    decompose,
    fiber_sizes,
    format_seq,
    is_unshuffle,
    kappa,
    kappa_sizes,
    sign,
)
from .errors import ArityError
from .group_algebra import GroupAlgebraElement
from .linear import LinCombo, format_rational

BASES = ("mu", "nu")


@dataclass(frozen=True)
class EMorphism:
    """An element of ``E(m, n)`` written in the ``mu`` or ``nu`` basis."""

    m: int
    n: int
    terms: LinCombo = field(default_factory=LinCombo)
    basis: str = "nu"

    def __post_init__(self):
        if self.basis not in BASES:
            raise ValueError(f"unknown basis {self.basis!r}")

    @property
    def degree(self) -> int:
        return self.m - self.n

    @classmethod
    def generator(cls, f: Sequence[int], basis: str = "nu", coeff=1) -> "EMorphism":
        f = f if isinstance(f, Surjection) else Surjection(f)
        return cls(len(f), f.n, LinCombo.basis(f, coeff), basis)

    @classmethod
    def from_terms(cls, m: int, n: int, terms, basis: str = "nu") -> "EMorphism":
        try:
            value = LinCombo({k if isinstance(k, Surjection) else Surjection(k): c for k, c in dict(terms).items()})
        except ValueError as exc:
            raise ArityError(str(exc)) from None
        for f in value.keys():
            if len(f) != m or max(f, default=0) != n:
                raise ArityError(f"{f!r} is not a key of E({m},{n})")
        return cls(m, n, value, basis)

    @classmethod
    def zero(cls, m: int, n: int, basis: str = "nu") -> "EMorphism":
        return cls(m, n, LinCombo(), basis)

    @classmethod
    def identity(cls, m: int, basis: str = "nu") -> "EMorphism":
        return cls.generator(Permutation.identity(m), basis)

    def _like(self, terms: LinCombo) -> "EMorphism":
        return EMorphism(self.m, self.n, terms, self.basis)

    def _check_same(self, other: "EMorphism"):
        if (self.m, self.n, self.basis) != (other.m, other.n, other.basis):
            raise ArityError("operands live in different hom-spaces or bases")

    def __add__(self, other: "EMorphism") -> "EMorphism":
        self._check_same(other)
        return self._like(self.terms + other.terms)

    def __sub__(self, other: "EMorphism") -> "EMorphism":
        self._check_same(other)
        return self._like(self.terms - other.terms)

    def __neg__(self) -> "EMorphism":
        return self._like(-self.terms)

    def __mul__(self, c) -> "EMorphism":
        return self._like(self.terms.scale(c))

    __rmul__ = __mul__

    def __bool__(self) -> bool:
        return bool(self.terms)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "degree": self.degree,
            "basis": self.basis,
            "terms": [{"key": format_seq(f), "coeff": format_rational(c)} for f, c in self.terms],
        }

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({format_rational(c)}){self.basis}[{format_seq(f)}]" for f, c in self.terms)


def _require(x: EMorphism, basis: str):
    if x.basis != basis:
        raise ValueError(f"expected a {basis}-basis morphism, got {x.basis}")


# -- mu basis: the free-prop reference ------------------------------------


def _mu_adjacent(i: int, f: tuple) -> tuple[int, tuple]:
    """``t_i . mu_f = (-1)^{(p_i - 1)(p_{i+1} - 1)} mu_{t_i o f}``."""
    pi = pj = 0
    img = []
    for v in f:
        if v == i:
            pi += 1
            img.append(i + 1)
        elif v == i + 1:
            pj += 1
            img.append(i)
        else:
            img.append(v)
    s = -1 if ((pi - 1) * (pj - 1)) & 1 else 1
    return s, tuple.__new__(Surjection, img)


def mu_left_key(sigma: Sequence[int], f: Sequence[int], rng=None) -> tuple[int, Surjection]:
    """``sigma . mu_f`` as ``(sign, key)``, along a reduced word of adjacent transpositions."""
    if len(sigma) != max(f, default=0):
        raise ArityError(f"S_{len(sigma)} cannot act on the left of {format_seq(f)}")
    total = 1
    cur = tuple.__new__(Surjection, f)
    for i in reversed(adjacent_word(sigma, rng)):
        s, cur = _mu_adjacent(i, cur)
        total *= s
    return total, cur


def _block_sign(sigma: Sequence[int], sizes: Sequence[int]) -> int:
    """Sign of ``sigma_1 x ... x sigma_n``; asserts ``sigma`` preserves the blocks."""
    start = 0
    for p in sizes:
        block = sigma[start:start + p]
        assert all(start < v <= start + p for v in block), (sigma, sizes)
        start += p
    return sign(sigma)


def mu_right_key(f: Sequence[int], tau: Sequence[int]) -> tuple[int, Surjection]:
    """``mu_f . tau = eps(sigma) mu_{f o tau}`` where ``alpha o tau = sigma o u``."""
    if len(tau) != len(f):
        raise ArityError(f"S_{len(tau)} cannot act on the right of {format_seq(f)}")
    _, alpha = decompose(f)
    f_tau = compose_surjection(f, tau)
    _, u = decompose(f_tau)
    assert is_unshuffle(u, fiber_sizes(f))
    pi = [alpha[t - 1] for t in tau]
    u_inv = u.inverse()
    sigma = [pi[k - 1] for k in u_inv]
    return _block_sign(sigma, fiber_sizes(f)), tuple.__new__(Surjection, f_tau)


def _mu_compose_ordered(s: Sequence[int], t: Sequence[int]) -> int:
    """Sign of ``mu_s <> mu_t`` for order-preserving ``s``, ``t``.

    Product of the operadic signs ``(-1)^kappa`` of each output block with
    the Koszul sign of moving each ``y_j`` past ``x_{j+1}, ..., x_n``.
    """
    p = fiber_sizes(s)
    q = fiber_sizes(t)
    x_deg = [pi - 1 for pi in p]
    y_deg = []
    expo = 0
    start = 0
    for pi in p:
        block = q[start:start + pi]
        start += pi
        expo += kappa_sizes(block)
        y_deg.append(sum(b - 1 for b in block))
    # the y_0 term is empty
    suffix = 0
    for i in range(len(p) - 1, 0, -1):
        suffix += x_deg[i]
        expo += y_deg[i - 1] * suffix
    return -1 if expo & 1 else 1


def mu_compose_key(f: Sequence[int], g: Sequence[int]) -> tuple[int, Surjection]:
    """``mu_f <> mu_g`` as ``(sign, key)``.

    With ``f = s o alpha``: ``mu_f <> mu_g = mu_s <> (alpha . mu_g)``; then
    ``alpha o g = t o beta`` and ``mu_s <> (mu_t . beta) = (mu_s <> mu_t) . beta``.
    """
    if max(g, default=0) != len(f):
        raise ArityError(f"cannot compose {format_seq(f)} after {format_seq(g)}")
    s, alpha = decompose(f)
    s0, key = mu_right_key(s, alpha)
    assert key == tuple(f)
    s1, g1 = mu_left_key(alpha, g)
    t, beta = decompose(g1)
    s2, key = mu_right_key(t, beta)
    assert key == g1
    s3 = _mu_compose_ordered(s, t)
    st = compose_surjection(s, t)
    s4, out = mu_right_key(st, beta)
    return s0 * s1 * s2 * s3 * s4, out


def _bilinear(x: EMorphism, y: EMorphism, key_op, m: int, n: int, basis: str) -> EMorphism:
    acc: dict = {}
    for f, a in x.terms.as_dict().items():
        for g, b in y.terms.as_dict().items():
            sg, k = key_op(f, g)
            acc[k] = acc.get(k, 0) + sg * a * b
    return EMorphism(m, n, LinCombo.from_accumulator(acc), basis)


def _unary(x: EMorphism, key_op) -> EMorphism:
    acc: dict = {}
    for f, a in x.terms.as_dict().items():
        sg, k = key_op(f)
        acc[k] = acc.get(k, 0) + sg * a
    return x._like(LinCombo.from_accumulator(acc))


def mu_compose(x: EMorphism, y: EMorphism) -> EMorphism:
    _require(x, "mu")
    _require(y, "mu")
    if x.m != y.n:
        raise ArityError(f"cannot compose E({x.m},{x.n}) after E({y.m},{y.n})")
    return _bilinear(x, y, mu_compose_key, y.m, x.n, "mu")


def mu_left_act(sigma: Sequence[int], x: EMorphism, rng=None) -> EMorphism:
    _require(x, "mu")
    if len(sigma) != x.n:
        raise ArityError(f"S_{len(sigma)} cannot act on E({x.m},{x.n}) on the left")
    return _unary(x, lambda f: mu_left_key(sigma, f, rng))


def mu_right_act(x: EMorphism, tau: Sequence[int]) -> EMorphism:
    _require(x, "mu")
    if len(tau) != x.m:
        raise ArityError(f"S_{len(tau)} cannot act on E({x.m},{x.n}) on the right")
    return _unary(x, lambda f: mu_right_key(f, tau))


def mu_tensor(x: EMorphism, y: EMorphism) -> EMorphism:
    """Concatenation, no sign."""
    _require(x, "mu")
    _require(y, "mu")
    return _bilinear(x, y, lambda f, g: (1, cross_product(f, g)), x.m + y.m, x.n + y.n, "mu")


# -- change of basis ------------------------------------------------------


def nu_mu_sign(f: Sequence[int]) -> int:
    """``c_f`` with ``nu_f = c_f mu_f``: ``eps(alpha) (-1)^kappa(f)``."""
    _, alpha = decompose(f)
    return sign(alpha) * (-1 if kappa(f) & 1 else 1)


def mu_from_nu(x: EMorphism) -> EMorphism:
    _require(x, "nu")
    return EMorphism(x.m, x.n, x.terms.map_keys(lambda f: f, nu_mu_sign), "mu")


def nu_from_mu(x: EMorphism) -> EMorphism:
    _require(x, "mu")
    return EMorphism(x.m, x.n, x.terms.map_keys(lambda f: f, nu_mu_sign), "nu")


# -- nu basis -------------------------------------------------------------


def _compose_key(f, g):
    return 1, tuple.__new__(Surjection, [f[i - 1] for i in g])


def nu_compose(x: EMorphism, y: EMorphism) -> EMorphism:
    """``nu_f <> nu_h = nu_{f o h}``, extended bilinearly."""
    _require(x, "nu")
    _require(y, "nu")
    if x.m != y.n:
        raise ArityError(f"cannot compose E({x.m},{x.n}) after E({y.m},{y.n})")
    return _bilinear(x, y, _compose_key, y.m, x.n, "nu")


def nu_act_key(sigma: Sequence[int], f: Sequence[int], tau: Sequence[int]) -> tuple[int, Surjection]:
    """``sigma . nu_f . tau = eps(sigma) eps(tau) nu_{sigma o f o tau}``."""
    if len(sigma) != max(f, default=0) or len(tau) != len(f):
        raise ArityError("permutation sizes do not match the surjection")
    return sign(sigma) * sign(tau), tuple.__new__(Surjection, [sigma[f[t - 1] - 1] for t in tau])


def nu_act(sigma: Sequence[int] | None, x: EMorphism, tau: Sequence[int] | None = None) -> EMorphism:
    """Two-sided action; ``None`` stands for the identity on that side."""
    _require(x, "nu")
    sigma = Permutation.identity(x.n) if sigma is None else sigma
    tau = Permutation.identity(x.m) if tau is None else tau
    if len(sigma) != x.n or len(tau) != x.m:
        raise ArityError(f"S_{len(sigma)} x S_{len(tau)} cannot act on E({x.m},{x.n})")
    sg = sign(sigma) * sign(tau)
    return x._like(x.terms.map_keys(
        lambda f: tuple.__new__(Surjection, [sigma[f[t - 1] - 1] for t in tau])).scale(sg))


def _nu_tensor_closed(f, g):
    m = len(f)
    d_g = len(g) - max(g, default=0)
    return (-1 if (d_g * m) & 1 else 1), cross_product(f, g)


def _nu_tensor_reduce(f, g):
    """Reduce to order-preserving factors.

    ``nu_f = eps(alpha) nu_s . alpha`` and actions commute with the
    monoidal product, so ``nu_f (x) nu_g = eps(alpha) eps(beta)
    (nu_s (x) nu_t) . (alpha x beta)`` with the order-preserving sign rule
    ``nu_s (x) nu_t = (-1)^{d(t) m} nu_{s x t}``.
    """
    s, alpha = decompose(f)
    t, beta = decompose(g)
    sg = sign(alpha) * sign(beta)
    sg *= -1 if ((len(t) - max(t, default=0)) * len(s)) & 1 else 1
    st = cross_product(s, t)
    ab = cross_product(alpha, beta)
    s_act, key = nu_act_key(Permutation.identity(max(st, default=0)), st, ab)
    return sg * s_act, key


def nu_tensor(x: EMorphism, y: EMorphism, method: str = "closed") -> EMorphism:
    """Monoidal product in the nu basis.

    ``method="closed"`` applies ``nu_f (x) nu_g = (-1)^{d(g) m} nu_{f x g}``
    directly; ``method="reduce"`` goes through the unshuffle decomposition.
    """
    _require(x, "nu")
    _require(y, "nu")
    op = {"closed": _nu_tensor_closed, "reduce": _nu_tensor_reduce}[method]
    return _bilinear(x, y, op, x.m + y.m, x.n + y.n, "nu")


def phi(a: GroupAlgebraElement | Sequence[int], basis: str = "nu") -> EMorphism:
    """``phi: K[S_n] -> E(n, n)``; ``phi(sigma) = mu_sigma = eps(sigma) nu_sigma``."""
    if not isinstance(a, GroupAlgebraElement):
        a = GroupAlgebraElement.of(a)
    if basis == "mu":
        terms = a.value.map_keys(lambda p: tuple.__new__(Surjection, p))
    else:
        terms = a.value.map_keys(lambda p: tuple.__new__(Surjection, p), sign)
    return EMorphism(a.n, a.n, terms, basis)


def block_swap(m: int, m2: int) -> Permutation:
    """``i -> m2 + i`` for ``i <= m``, ``i -> i - m`` after."""
    return tuple.__new__(Permutation, [m2 + i for i in range(1, m + 1)] + list(range(1, m2 + 1)))


def symmetry_iso(m: int, m2: int, basis: str = "nu") -> EMorphism:
    """The symmetry ``s_{m,m'} = phi(block swap)`` in ``E(m + m', m + m')``."""
    return phi(block_swap(m, m2), basis)


# -- basis-generic entry points ------------------------------------------


def compose(x: EMorphism, y: EMorphism) -> EMorphism:
    if x.basis != y.basis:
        raise ValueError("operands are in different bases")
    return nu_compose(x, y) if x.basis == "nu" else mu_compose(x, y)


def tensor(x: EMorphism, y: EMorphism) -> EMorphism:
    if x.basis != y.basis:
        raise ValueError("operands are in different bases")
    return nu_tensor(x, y) if x.basis == "nu" else mu_tensor(x, y)


def act(sigma: Sequence[int] | None, x: EMorphism, tau: Sequence[int] | None = None) -> EMorphism:
    if x.basis == "nu":
        return nu_act(sigma, x, tau)
    if sigma is not None:
        x = mu_left_act(sigma, x)
    if tau is not None:
        x = mu_right_act(x, tau)
    return x


def sandwich(a: GroupAlgebraElement | None, x: EMorphism, b: GroupAlgebraElement | None = None) -> EMorphism:
    """``phi(a) <> x <> phi(b)``; ``None`` means the identity."""
    if b is not None:
        if b.n != x.m:
            raise ArityError(f"K[S_{b.n}] cannot act on E({x.m},{x.n}) on the right")
        x = compose(x, phi(b, x.basis))
    if a is not None:
        if a.n != x.n:
            raise ArityError(f"K[S_{a.n}] cannot act on E({x.m},{x.n}) on the left")
        x = compose(phi(a, x.basis), x)
    return x
