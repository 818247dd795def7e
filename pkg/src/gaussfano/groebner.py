"""Buchberger's algorithm and the ideal operations built on it.

Everything here is exact.  Gröbner bases are computed with the
Gebauer-Möller installation of Buchberger's criteria and the normal
selection strategy.  A per-computation step budget guards against runaway
inputs; see :func:`step_budget`.
"""

from __future__ import annotations

import os
from contextlib import contextmanager
from contextvars import ContextVar
from itertools import combinations

from .errors import ComputationBudgetExceeded, RingMismatch, ZeroDivisorArgument
from .linalg import divide_exact
from .ring import Polynomial, PolyRing

__all__ = [
    "Ideal",
    "GroebnerBasis",
    "buchberger",
    "normal_form",
    "divide",
    "s_polynomial",
    "ideal_equal",
    "ideal_quotient",
    "intersect",
    "radical_member",
    "eliminate",
    "ideal_dimension",
    "step_budget",
    "DEFAULT_BUDGET",
]

DEFAULT_BUDGET = 10**7

_budget_limit: ContextVar[int | None] = ContextVar("gaussfano_budget", default=None)


def current_budget() -> int:
    limit = _budget_limit.get()
    if limit is not None:
        return limit
    env = os.environ.get("GAUSSFANO_BUDGET")
    if env:
        return int(env)
    return DEFAULT_BUDGET


@contextmanager
def step_budget(limit: int):
    """Cap the number of reduction steps each Gröbner computation may take."""
    token = _budget_limit.set(int(limit))
    try:
        yield
    finally:
        _budget_limit.reset(token)


class _Counter:
    __slots__ = ("left",)

    def __init__(self, limit):
        self.left = limit

    def tick(self):
        self.left -= 1
        if self.left < 0:
            raise ComputationBudgetExceeded("Gröbner basis computation exceeded its step budget")


# -- monomial helpers ------------------------------------------------------------


def _divides(a, b):
    return all(x <= y for x, y in zip(a, b))


def _lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def _coprime(a, b):
    return all(not (x and y) for x, y in zip(a, b))


def s_polynomial(f: Polynomial, g: Polynomial) -> Polynomial:
    mf, mg = f.lm(), g.lm()
    L = _lcm(mf, mg)
    a = tuple(x - y for x, y in zip(L, mf))
    b = tuple(x - y for x, y in zip(L, mg))
    return f.mul_term(1 / f.lc(), a) - g.mul_term(1 / g.lc(), b)


def _reduce(f: Polynomial, G, counter=None) -> Polynomial:
    """Full normal form of ``f`` modulo the list ``G`` (all nonzero, same ring)."""
    if not f or not G:
        return f
    ring = f.ring
    key = ring.sort_key
    leads = [(g.lm(), g.lc(), g) for g in G]
    rem = dict(f._terms)
    out = {}
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        for lm, lc, g in leads:
            if _divides(lm, m):
                if counter is not None:
                    counter.tick()
                q = c / lc
                shift = tuple(x - y for x, y in zip(m, lm))
                for gm, gc in g._terms.items():
                    mm = tuple(x + y for x, y in zip(gm, shift))
                    v = rem.get(mm, 0) - q * gc
                    if v:
                        rem[mm] = v
                    else:
                        rem.pop(mm, None)
                break
        else:
            out[m] = c
            del rem[m]
    return Polynomial(ring, out)


def divide(f: Polynomial, divisors) -> tuple[list[Polynomial], Polynomial]:
    """Multivariate division: ``f = sum(q_i * g_i) + r`` with no term of ``r``
    divisible by any leading monomial."""
    ring = f.ring
    key = ring.sort_key
    divisors = [ring(g) for g in divisors]
    quotients = [dict() for _ in divisors]
    rem = dict(f._terms)
    out = {}
    while rem:
        m = max(rem, key=key)
        c = rem[m]
        for i, g in enumerate(divisors):
            lm = g.lm()
            if _divides(lm, m):
                q = c / g.lc()
                shift = tuple(x - y for x, y in zip(m, lm))
                quotients[i][shift] = quotients[i].get(shift, 0) + q
                for gm, gc in g._terms.items():
                    mm = tuple(x + y for x, y in zip(gm, shift))
                    v = rem.get(mm, 0) - q * gc
                    if v:
                        rem[mm] = v
                    else:
                        rem.pop(mm, None)
                break
        else:
            out[m] = c
            del rem[m]
    qs = [Polynomial.from_dict(ring, q) for q in quotients]
    return qs, Polynomial(ring, out)


# -- Buchberger ------------------------------------------------------------------


class GroebnerBasis:
    """A reduced Gröbner basis: monic, inter-reduced, sorted by leading monomial."""

    def __init__(self, ring: PolyRing, basis, ideal=None):
        self.ring = ring
        self.basis = tuple(basis)
        self.ideal = ideal

    @property
    def order(self) -> str:
        return self.ring.order

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)

    def __repr__(self):
        return f"GroebnerBasis([{', '.join(map(str, self.basis))}], order={self.order!r})"

    def leading_monomials(self):
        return [g.lm() for g in self.basis]

    def is_unit(self) -> bool:
        return any(g.is_constant() for g in self.basis)

    def normal_form(self, f: Polynomial) -> Polynomial:
        return normal_form(f, self)

    def contains(self, f: Polynomial) -> bool:
        return not normal_form(f, self)

    __contains__ = contains


def _pair_key(ring, polys, pair):
    i, j = pair
    L = _lcm(polys[i].lm(), polys[j].lm())
    return (sum(L), ring.sort_key(L), i, j)


def _update(polys, G, B, h):
    """Gebauer-Möller update: add index ``h`` to basis ``G`` and pair set ``B``."""
    lm = [polys[k].lm() for k in range(len(polys))]
    C = sorted((h, g) for g in G)
    D = []
    while C:
        pair = C.pop(0)
        hh, g = pair
        L = _lcm(lm[hh], lm[g])
        if _coprime(lm[hh], lm[g]) or not any(
            _divides(_lcm(lm[hh], lm[o]), L) for _, o in C + D
        ):
            D.append(pair)
    E = [p for p in D if not _coprime(lm[p[0]], lm[p[1]])]
    B_new = set()
    for g1, g2 in B:
        L = _lcm(lm[g1], lm[g2])
        if (
            not _divides(lm[h], L)
            or _lcm(lm[g1], lm[h]) == L
            or _lcm(lm[h], lm[g2]) == L
        ):
            B_new.add((g1, g2))
    B_new.update(E)
    G_new = [g for g in G if not _divides(lm[h], lm[g])]
    G_new.append(h)
    return G_new, B_new


def _interreduce(polys):
    polys = sorted(polys, key=lambda p: p.ring.sort_key(p.lm()))
    # drop non-minimal elements, then tail-reduce
    minimal = []
    for p in polys:
        if not any(_divides(q.lm(), p.lm()) for q in minimal):
            minimal.append(p)
    out = []
    for i, p in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1 :]
        lt = Polynomial(p.ring, {p.lm(): p.lc()})
        tail = _reduce(p - lt, others)
        out.append((lt + tail).monic())
    return out


def buchberger(ideal: Ideal, order: str | None = None) -> GroebnerBasis:
    """Reduced Gröbner basis of ``ideal`` with respect to ``order``."""
    ring = ideal.ring if order is None else ideal.ring.with_order(order)
    counter = _Counter(current_budget())
    gens = [g.change_ring(ring) for g in ideal.gens if g]
    if not gens:
        return GroebnerBasis(ring, [], ideal)
    if any(g.is_constant() for g in gens):
        return GroebnerBasis(ring, [ring.one()], ideal)

    polys: list[Polynomial] = []
    G: list[int] = []
    B: set = set()
    for f in sorted(gens, key=lambda p: (p.total_degree(), ring.sort_key(p.lm()))):
        f = _reduce(f, [polys[k] for k in G], counter)
        if not f:
            continue
        polys.append(f.monic())
        G, B = _update(polys, G, B, len(polys) - 1)

    while B:
        pair = min(B, key=lambda p: _pair_key(ring, polys, p))
        B.discard(pair)
        counter.tick()
        h = _reduce(s_polynomial(polys[pair[0]], polys[pair[1]]), [polys[k] for k in G], counter)
        if not h:
            continue
        if h.is_constant():
            return GroebnerBasis(ring, [ring.one()], ideal)
        polys.append(h.monic())
        G, B = _update(polys, G, B, len(polys) - 1)

    return GroebnerBasis(ring, _interreduce([polys[k] for k in G]), ideal)


def normal_form(f: Polynomial, G: GroebnerBasis) -> Polynomial:
    if f.ring.variables != G.ring.variables:
        raise RingMismatch(f"{f.ring!r} vs {G.ring!r}")
    return _reduce(f.change_ring(G.ring), list(G.basis)).change_ring(f.ring)


# -- ideals ----------------------------------------------------------------------


class Ideal:
    """Ideal given by generators; Gröbner bases are computed lazily and cached."""

    def __init__(self, ring: PolyRing, generators=()):
        self.ring = ring
        gens = []
        for g in generators:
            g = ring(g)
            if g:
                gens.append(g)
        self.gens = tuple(gens)
        self._gb: dict[str, GroebnerBasis] = {}

    def __repr__(self):
        return f"Ideal([{', '.join(map(str, self.gens))}])"

    def __iter__(self):
        return iter(self.gens)

    def __len__(self):
        return len(self.gens)

    def groebner_basis(self, order: str | None = None) -> GroebnerBasis:
        order = order or self.ring.order
        if order not in self._gb:
            self._gb[order] = buchberger(self, order)
        return self._gb[order]

    def contains(self, f) -> bool:
        f = self.ring(f)
        return not normal_form(f, self.groebner_basis())

    __contains__ = contains

    def is_unit(self) -> bool:
        return self.groebner_basis().is_unit()

    def is_homogeneous(self) -> bool:
        return all(g.is_homogeneous() for g in self.gens)

    def __add__(self, other: Ideal) -> Ideal:
        _check_same(self, other)
        return Ideal(self.ring, self.gens + other.gens)

    def change_ring(self, ring: PolyRing) -> Ideal:
        return Ideal(ring, [g.change_ring(ring) for g in self.gens])

    def reduced(self) -> Ideal:
        """Same ideal, generated by its reduced Gröbner basis."""
        return Ideal(self.ring, [g.change_ring(self.ring) for g in self.groebner_basis()])


def _check_same(I: Ideal, J: Ideal):
    if I.ring.variables != J.ring.variables:
        raise RingMismatch(f"{I.ring!r} vs {J.ring!r}")


def ideal_equal(I: Ideal, J: Ideal) -> bool:
    _check_same(I, J)
    GI, GJ = I.groebner_basis(), J.groebner_basis()
    return all(not normal_form(g, GJ) for g in I.gens) and all(
        not normal_form(g, GI) for g in J.gens
    )


def eliminate(I: Ideal, keep) -> Ideal:
    """``I ∩ k[keep]`` as an ideal of the subring on the kept variables."""
    keep = set(keep)
    for v in keep:
        I.ring.index(v)
    kept = [v for v in I.ring.variables if v in keep]
    dropped = [v for v in I.ring.variables if v not in keep]
    sub = PolyRing(kept, I.ring.order)
    if not dropped:
        return Ideal(sub, I.gens)
    big = PolyRing(dropped + kept, f"elim:{len(dropped)}")
    G = buchberger(I.change_ring(big))
    k = len(dropped)
    out = [g for g in G.basis if not any(g.lm()[:k])]
    # block order: a polynomial whose leading monomial avoids the eliminated
    # block avoids it entirely
    return Ideal(sub, [g.change_ring(sub) for g in out])


def intersect(I: Ideal, J: Ideal) -> Ideal:
    _check_same(I, J)
    u = I.ring.fresh_name("u")
    big = PolyRing((u,) + I.ring.variables, I.ring.order)
    U = big.gen(u)
    gens = [U * g.change_ring(big) for g in I.gens]
    gens += [(1 - U) * g.change_ring(big) for g in J.gens]
    E = eliminate(Ideal(big, gens), I.ring.variables)
    return Ideal(I.ring, [g.change_ring(I.ring) for g in E.gens])


def ideal_quotient(I: Ideal, g: Polynomial) -> Ideal:
    """``(I : g) = {f : f*g in I}`` computed as ``(I ∩ (g)) / g``."""
    g = I.ring(g)
    if not g:
        raise ZeroDivisorArgument("ideal quotient by the zero polynomial")
    if g.is_constant():
        return Ideal(I.ring, I.gens)
    cap = intersect(I, Ideal(I.ring, [g]))
    return Ideal(I.ring, [divide_exact(h, g) for h in cap.gens])


def radical_member(f: Polynomial, I: Ideal) -> bool:
    """Rabinowitsch test: ``f`` is in the radical iff ``1 in I + (1 - w*f)``."""
    f = I.ring(f)
    if not f:
        return True
    w = I.ring.fresh_name("w")
    big = PolyRing(I.ring.variables + (w,), I.ring.order)
    W = big.gen(w)
    J = Ideal(big, [g.change_ring(big) for g in I.gens] + [1 - W * f.change_ring(big)])
    return J.is_unit()


def ideal_dimension(I: Ideal) -> int:
    """Krull dimension of ``R/I`` from the leading-term ideal; -1 for the unit ideal."""
    G = I.groebner_basis("degrevlex")
    if G.is_unit():
        return -1
    n = I.ring.nvars
    supports = [frozenset(i for i, x in enumerate(m) if x) for m in G.leading_monomials()]
    for size in range(n, -1, -1):
        for S in combinations(range(n), size):
            S = frozenset(S)
            if not any(sup <= S for sup in supports):
                return size
    return 0
