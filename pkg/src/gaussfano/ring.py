"""Exact multivariate polynomials over the rationals.

A :class:`PolyRing` fixes an ordered tuple of variable names and a monomial
order.  Monomials are exponent tuples; a :class:`Polynomial` is an immutable
mapping from monomials to nonzero :class:`fractions.Fraction` coefficients.

>>> R = PolyRing(["x0", "x1", "x2", "x3"])
>>> F = R("x0*x1 - x2^2")
>>> print(partial(F, "x2"))
-2*x2
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

from .errors import (
    ArityMismatch,
    NegativeExponent,
    NotHomogeneousInST,
    PolySyntaxError,
    RingMismatch,
    UnknownVariable,
)

__all__ = [
    "PolyRing",
    "Polynomial",
    "parse_poly",
    "partial",
    "substitute_line",
    "st_coefficients",
    "as_fraction",
]

_IDENT = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")


def as_fraction(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not coefficients")
    if isinstance(value, (int, Rational)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


# -- monomial orders ---------------------------------------------------------


def _degrevlex_key(e):
    return (sum(e), tuple(-x for x in reversed(e)))


def _lex_key(e):
    return e


@lru_cache(maxsize=None)
def _order_key(order: str):
    if order == "degrevlex":
        return _degrevlex_key
    if order == "lex":
        return _lex_key
    if order.startswith("elim:"):
        k = int(order[5:])

        def key(e):
            return (_degrevlex_key(e[:k]), _degrevlex_key(e[k:]))

        return key
    raise ValueError(f"unknown monomial order {order!r}")


class PolyRing:
    """Polynomial ring ``Q[variables]`` with a fixed monomial order.

    ``order`` is ``"degrevlex"`` (default), ``"lex"``, or ``"elim:k"``: a block
    order that compares the first ``k`` variables by degrevlex before looking
    at the rest, which is what elimination needs.
    """

    __slots__ = ("variables", "order", "sort_key", "_index")

    def __init__(self, variables, order: str = "degrevlex"):
        variables = tuple(variables)
        for v in variables:
            if not isinstance(v, str) or not _IDENT.match(v):
                raise ValueError(f"invalid variable name {v!r}")
        if len(set(variables)) != len(variables):
            raise ValueError(f"duplicate variable names in {variables}")
        self.variables = variables
        self.order = order
        self.sort_key = _order_key(order)
        self._index = {v: i for i, v in enumerate(variables)}

    @property
    def nvars(self) -> int:
        return len(self.variables)

    def index(self, name: str) -> int:
        try:
            return self._index[name]
        except KeyError:
            raise UnknownVariable(name) from None

    def __contains__(self, name) -> bool:
        return name in self._index

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.variables == other.variables
            and self.order == other.order
        )

    def __hash__(self):
        return hash((self.variables, self.order))

    def __repr__(self):
        return f"PolyRing({list(self.variables)!r}, order={self.order!r})"

    def with_order(self, order: str) -> PolyRing:
        if order == self.order:
            return self
        return PolyRing(self.variables, order)

    def fresh_name(self, stem: str) -> str:
        name = stem
        i = 0
        while name in self._index:
            i += 1
            name = f"{stem}{i}"
        return name

    # constructors
    def zero(self) -> Polynomial:
        return Polynomial(self, {})

    def one(self) -> Polynomial:
        return self.constant(1)

    def constant(self, c) -> Polynomial:
        c = as_fraction(c)
        if c == 0:
            return self.zero()
        return Polynomial(self, {(0,) * self.nvars: c})

    def gen(self, name: str) -> Polynomial:
        i = self.index(name)
        e = [0] * self.nvars
        e[i] = 1
        return Polynomial(self, {tuple(e): Fraction(1)})

    def gens(self) -> list[Polynomial]:
        return [self.gen(v) for v in self.variables]

    def monomial(self, exponents, coeff=1) -> Polynomial:
        exponents = tuple(exponents)
        if len(exponents) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} exponents, got {len(exponents)}")
        return Polynomial.from_dict(self, {exponents: coeff})

    def linear_form(self, coeffs) -> Polynomial:
        if len(coeffs) != self.nvars:
            raise ArityMismatch(f"expected {self.nvars} coefficients, got {len(coeffs)}")
        terms = {}
        for i, c in enumerate(coeffs):
            c = as_fraction(c)
            if c:
                e = [0] * self.nvars
                e[i] = 1
                terms[tuple(e)] = c
        return Polynomial(self, terms)

    def __call__(self, value) -> Polynomial:
        if isinstance(value, Polynomial):
            return value.change_ring(self)
        if isinstance(value, str):
            return parse_poly(value, self)
        return self.constant(value)


class Polynomial:
    """Immutable polynomial; arithmetic requires both operands in the same ring."""

    __slots__ = ("ring", "_terms", "_sorted", "_hash")

    def __init__(self, ring: PolyRing, terms: dict):
        # trusted constructor: terms must already be clean (no zeros, Fractions)
        self.ring = ring
        self._terms = terms
        self._sorted = None
        self._hash = None

    @classmethod
    def from_dict(cls, ring: PolyRing, terms) -> Polynomial:
        clean = {}
        for mono, c in dict(terms).items():
            mono = tuple(int(x) for x in mono)
            if len(mono) != ring.nvars:
                raise ArityMismatch(f"monomial {mono} has wrong length for {ring!r}")
            if any(x < 0 for x in mono):
                raise ValueError(f"negative exponent in {mono}")
            c = as_fraction(c)
            if c:
                clean[mono] = clean.get(mono, 0) + c
                if not clean[mono]:
                    del clean[mono]
        return cls(ring, clean)

    # -- structure ------------------------------------------------------------

    @property
    def terms(self) -> list[tuple[Fraction, tuple]]:
        """Coefficient-monomial pairs, strictly descending in the ring's order."""
        if self._sorted is None:
            key = self.ring.sort_key
            self._sorted = [
                (self._terms[m], m) for m in sorted(self._terms, key=key, reverse=True)
            ]
        return self._sorted

    def as_dict(self) -> dict:
        return dict(self._terms)

    def coefficient(self, mono) -> Fraction:
        return self._terms.get(tuple(mono), Fraction(0))

    def is_zero(self) -> bool:
        return not self._terms

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and not any(next(iter(self._terms))))

    def constant_value(self) -> Fraction:
        return self._terms.get((0,) * self.ring.nvars, Fraction(0))

    def lm(self) -> tuple:
        if not self._terms:
            raise ValueError("zero polynomial has no leading monomial")
        if self._sorted is not None:
            return self._sorted[0][1]
        return max(self._terms, key=self.ring.sort_key)

    def lc(self) -> Fraction:
        return self._terms[self.lm()]

    def total_degree(self) -> int:
        if not self._terms:
            return -1
        return max(sum(m) for m in self._terms)

    def degree(self, var: str) -> int:
        i = self.ring.index(var)
        return max((m[i] for m in self._terms), default=-1)

    def is_homogeneous(self) -> bool:
        return len({sum(m) for m in self._terms}) <= 1

    def support(self) -> set[str]:
        used = set()
        for m in self._terms:
            for i, x in enumerate(m):
                if x:
                    used.add(self.ring.variables[i])
        return used

    def monic(self) -> Polynomial:
        if not self._terms:
            return self
        return self * (1 / self.lc())

    # -- conversion -----------------------------------------------------------

    def change_ring(self, ring: PolyRing) -> Polynomial:
        """Reinterpret in ``ring`` by variable name; unused variables may be dropped."""
        if ring == self.ring:
            return self
        if ring.variables == self.ring.variables:
            return Polynomial(ring, self._terms)
        src = self.ring.variables
        mapping = []
        for i, v in enumerate(src):
            mapping.append(ring._index.get(v))
        out = {}
        n = ring.nvars
        for m, c in self._terms.items():
            e = [0] * n
            for i, x in enumerate(m):
                if x:
                    j = mapping[i]
                    if j is None:
                        raise RingMismatch(
                            f"variable {src[i]!r} does not exist in {ring!r}"
                        )
                    e[j] = x
            out[tuple(e)] = c
        return Polynomial(ring, out)

    def _coerce(self, other) -> Polynomial:
        if isinstance(other, Polynomial):
            if other.ring.variables != self.ring.variables:
                raise RingMismatch(f"{other.ring!r} vs {self.ring!r}")
            return other
        return self.ring.constant(other)

    # -- arithmetic -----------------------------------------------------------

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self._terms)
        for m, c in other._terms.items():
            s = out.get(m, 0) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return Polynomial(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Polynomial(self.ring, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Polynomial):
            c = as_fraction(other)
            if not c:
                return self.ring.zero()
            return Polynomial(self.ring, {m: c * v for m, v in self._terms.items()})
        other = self._coerce(other)
        out = {}
        for m1, c1 in self._terms.items():
            for m2, c2 in other._terms.items():
                m = tuple(a + b for a, b in zip(m1, m2))
                s = out.get(m, 0) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = as_fraction(other)
        return self * (1 / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a non-negative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def mul_term(self, coeff: Fraction, mono: tuple) -> Polynomial:
        return Polynomial(
            self.ring,
            {tuple(a + b for a, b in zip(m, mono)): c * coeff for m, c in self._terms.items()},
        )

    def __eq__(self, other):
        if isinstance(other, Polynomial):
            return self.ring.variables == other.ring.variables and self._terms == other._terms
        try:
            return self._terms == self.ring.constant(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self.ring.variables, frozenset(self._terms.items())))
        return self._hash

    # -- evaluation -----------------------------------------------------------

    def evaluate(self, values) -> Fraction:
        """Evaluate at a point given as a sequence or a ``{name: value}`` mapping."""
        if isinstance(values, dict):
            point = [as_fraction(values[v]) for v in self.ring.variables]
        else:
            point = [as_fraction(v) for v in values]
            if len(point) != self.ring.nvars:
                raise ArityMismatch(f"expected {self.ring.nvars} values, got {len(point)}")
        total = Fraction(0)
        for m, c in self._terms.items():
            term = c
            for x, e in zip(point, m):
                if e:
                    term *= x**e
            total += term
        return total

    def compose(self, images, ring: PolyRing) -> Polynomial:
        """Substitute ``images[i]`` (a Polynomial of ``ring``) for the i-th variable."""
        if len(images) != self.ring.nvars:
            raise ArityMismatch(f"expected {self.ring.nvars} images, got {len(images)}")
        images = [ring(im) for im in images]
        powers = [{0: ring.one(), 1: im} for im in images]

        def power(i, e):
            cache = powers[i]
            if e not in cache:
                cache[e] = power(i, e - 1) * images[i]
            return cache[e]

        out = ring.zero()
        for c, m in self.terms:
            term = ring.constant(c)
            for i, e in enumerate(m):
                if e:
                    term = term * power(i, e)
            out = out + term
        return out

    def subs(self, mapping) -> Polynomial:
        """Substitute numbers or same-ring polynomials for some variables."""
        images = []
        for v in self.ring.variables:
            if v in mapping:
                val = mapping[v]
                images.append(val if isinstance(val, Polynomial) else self.ring.constant(val))
            else:
                images.append(self.ring.gen(v))
        return self.compose(images, self.ring)

    # -- printing -------------------------------------------------------------

    def __str__(self):
        if not self._terms:
            return "0"
        parts = []
        for idx, (c, m) in enumerate(self.terms):
            mono = "*".join(
                v if e == 1 else f"{v}^{e}"
                for v, e in zip(self.ring.variables, m)
                if e
            )
            sign = "-" if c < 0 else "+"
            a = abs(c)
            if not mono:
                body = str(a)
            elif a == 1:
                body = mono
            else:
                body = f"{a}*{mono}"
            if idx == 0:
                parts.append(("-" if sign == "-" else "") + body)
            else:
                parts.append(f" {sign} {body}")
        return "".join(parts)

    def __repr__(self):
        return f"Polynomial({str(self)!r})"


# -- parsing -------------------------------------------------------------------

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(.))", re.S)


class _Parser:
    def __init__(self, text: str, ring: PolyRing):
        self.text = text
        self.ring = ring
        self.tokens = []
        pos = 0
        while pos < len(text):
            m = _TOKEN.match(text, pos)
            start = m.start(1) if m.group(1) else m.start(2) if m.group(2) else m.start(3)
            if m.group(3) is not None and m.group(3).isspace():
                break
            if m.group(1):
                self.tokens.append(("int", m.group(1), start))
            elif m.group(2):
                self.tokens.append(("ident", m.group(2), start))
            elif m.group(3) is not None:
                ch = m.group(3)
                if ch not in "+-*/^()":
                    raise PolySyntaxError(f"unexpected character {ch!r}", self._byte(start))
                self.tokens.append((ch, ch, start))
            pos = m.end()
        self.pos = 0

    def _byte(self, char_offset):
        return len(self.text[:char_offset].encode("utf-8"))

    def peek(self):
        if self.pos < len(self.tokens):
            return self.tokens[self.pos]
        return ("eof", "", len(self.text))

    def take(self, kind=None):
        tok = self.peek()
        if kind is not None and tok[0] != kind:
            what = "end of input" if tok[0] == "eof" else repr(tok[1])
            raise PolySyntaxError(f"expected {kind!r}, found {what}", self._byte(tok[2]))
        self.pos += 1
        return tok

    def parse(self) -> Polynomial:
        if not self.tokens:
            raise PolySyntaxError("empty expression", 0)
        result = self.expr()
        tok = self.peek()
        if tok[0] != "eof":
            raise PolySyntaxError(f"unexpected {tok[1]!r}", self._byte(tok[2]))
        return result

    def expr(self) -> Polynomial:
        sign = 1
        if self.peek()[0] in "+-" and self.peek()[0] != "eof":
            sign = -1 if self.take()[0] == "-" else 1
        acc = self.term() * sign
        while self.peek()[0] in ("+", "-"):
            op = self.take()[0]
            t = self.term()
            acc = acc + t if op == "+" else acc - t
        return acc

    def term(self) -> Polynomial:
        acc = self.factor()
        while self.peek()[0] == "*":
            self.take()
            acc = acc * self.factor()
        return acc

    def exponent(self) -> int:
        tok = self.peek()
        if tok[0] == "-":
            raise NegativeExponent("negative exponent", self._byte(tok[2]))
        return int(self.take("int")[1])

    def factor(self) -> Polynomial:
        kind, value, start = self.peek()
        if kind == "int":
            self.take()
            num = int(value)
            if self.peek()[0] == "/":
                self.take()
                dkind, dval, dstart = self.take("int")
                if int(dval) == 0:
                    raise PolySyntaxError("zero denominator", self._byte(dstart))
                return self.ring.constant(Fraction(num, int(dval)))
            return self.ring.constant(num)
        if kind == "ident":
            self.take()
            if value not in self.ring:
                raise UnknownVariable(value, self._byte(start))
            g = self.ring.gen(value)
            if self.peek()[0] == "^":
                self.take()
                return g ** self.exponent()
            return g
        if kind == "(":
            self.take()
            inner = self.expr()
            self.take(")")
            if self.peek()[0] == "^":
                self.take()
                return inner ** self.exponent()
            return inner
        what = "end of input" if kind == "eof" else repr(value)
        raise PolySyntaxError(f"unexpected {what}", self._byte(start))


def parse_poly(text: str, ring: PolyRing) -> Polynomial:
    """Parse ``text`` into a polynomial of ``ring``.

    Grammar: sums and differences of ``*``-products of rational constants
    (``3`` or ``3/4``), variables with optional ``^n`` and parenthesised
    subexpressions.  Implicit multiplication is rejected.
    """
    return _Parser(text, ring).parse()


# -- calculus and line substitution ---------------------------------------------


def partial(F: Polynomial, var: str) -> Polynomial:
    i = F.ring.index(var)
    out = {}
    for m, c in F._terms.items():
        e = m[i]
        if e:
            m2 = m[:i] + (e - 1,) + m[i + 1 :]
            out[m2] = c * e
    return Polynomial(F.ring, out)


def substitute_line(F: Polynomial, psi) -> Polynomial:
    """Pull ``F`` back along a line parametrization ``x_k -> alpha_k*s + beta_k*t``.

    ``psi`` is a :class:`~gaussfano.grassmann.LineParam`; the result lives in
    ``psi.ring`` whose last two variables are ``s`` and ``t``.
    """
    if len(psi.forms) != F.ring.nvars:
        raise ArityMismatch(
            f"line parametrization has {len(psi.forms)} forms, ring has {F.ring.nvars} variables"
        )
    return F.compose(psi.images(), psi.ring)


def st_coefficients(P: Polynomial) -> list[Polynomial]:
    """Coefficients of ``s^i t^(d-i)`` in ``P``, descending ``i``, zeros omitted.

    ``s`` and ``t`` are the last two variables of ``P.ring``; coefficients are
    returned in the ring of the remaining variables.
    """
    ring = P.ring
    if ring.nvars < 2:
        raise ArityMismatch("ring must end with the two line variables")
    base = PolyRing(ring.variables[:-2], ring.order)
    groups: dict[int, dict] = {}
    degree = None
    for m, c in P._terms.items():
        i, j = m[-2], m[-1]
        if degree is None:
            degree = i + j
        elif i + j != degree:
            raise NotHomogeneousInST(f"{P} is not homogeneous in (s, t)")
        groups.setdefault(i, {})[m[:-2]] = c
    return [Polynomial(base, groups[i]) for i in sorted(groups, reverse=True)]
