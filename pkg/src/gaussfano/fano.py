"""Local equations of the Hilbert scheme of lines, and non-reducedness certificates.

On a chart ``C`` of G(2, N+1) the lines contained in ``X = V(I_X)`` are cut
out scheme-theoretically by the coefficients of ``s^i t^(d-i)`` in
``F(psi(x_0), ..., psi(x_N))``, taken over all generators ``F`` of ``I_X``,
where ``psi`` is the chart's symbolic parametrization.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import NotHomogeneous
from .grassmann import Chart, LineRep, chart_param
from .groebner import (
    GroebnerBasis,
    Ideal,
    ideal_equal,
    ideal_quotient,
    normal_form,
    radical_member,
)
from .ring import Polynomial, st_coefficients, substitute_line

__all__ = [
    "FanoChartIdeal",
    "NonReducednessCertificate",
    "Failure",
    "fano_chart_ideal",
    "line_on_variety",
    "nonreduced_certificate",
    "candidate_witnesses",
    "verify_certificate",
]

MAX_CANDIDATES = 32


@dataclass(frozen=True)
class FanoChartIdeal:
    chart: Chart
    ideal: Ideal
    source: Ideal

    @property
    def ring(self):
        return self.ideal.ring

    def groebner_basis(self) -> GroebnerBasis:
        return self.ideal.groebner_basis()

    def vanishes_at(self, point) -> bool:
        return all(g.evaluate(point) == 0 for g in self.ideal.gens)


def fano_chart_ideal(I_X: Ideal, C: Chart) -> FanoChartIdeal:
    if not I_X.is_homogeneous():
        raise NotHomogeneous("the variety ideal must be generated by forms")
    if I_X.ring.nvars != C.N + 1:
        raise ValueError(f"ideal lives in {I_X.ring.nvars} variables, chart expects {C.N + 1}")
    psi = chart_param(C)
    gens = []
    for F in I_X.gens:
        gens.extend(st_coefficients(substitute_line(F, psi)))
    return FanoChartIdeal(C, Ideal(C.ring, gens), I_X)


def line_on_variety(I_X: Ideal, L: LineRep) -> bool:
    psi = L.param()
    return all(not substitute_line(F, psi) for F in I_X.gens)


# -- certificates ---------------------------------------------------------------


@dataclass(frozen=True)
class NonReducednessCertificate:
    """``g`` is a nonzero nilpotent of ``R/I`` (``g^k in I``) whose annihilator
    ``(I : g)`` lies in the radical, so its support is all of ``V(I)``."""

    ideal: Ideal
    g: Polynomial
    k: int
    quotient_generators: tuple[Polynomial, ...]
    quotient_memberships: tuple[bool, ...]

    def to_json(self) -> dict:
        return {
            "status": "certificate",
            "ideal": [str(f) for f in self.ideal.gens],
            "witness": str(self.g),
            "k": self.k,
            "quotient": [
                {"generator": str(q), "in_radical": ok}
                for q, ok in zip(self.quotient_generators, self.quotient_memberships)
            ],
        }


@dataclass(frozen=True)
class Failure:
    reason: str  # WitnessInIdeal | NoNilpotency | QuotientNotInRadical | NoCertificate
    detail: str = ""
    witness: Polynomial | None = field(default=None)

    def __bool__(self):
        return False

    def to_json(self) -> dict:
        out = {"status": "failure", "reason": self.reason, "detail": self.detail}
        if self.witness is not None:
            out["witness"] = str(self.witness)
        return out


def nonreduced_certificate(Fi, g, k_max: int = 4):
    I = Fi.ideal if isinstance(Fi, FanoChartIdeal) else Fi
    if k_max < 2:
        raise ValueError("k_max must be at least 2")
    g = I.ring(g)
    G = I.groebner_basis()
    if not normal_form(g, G):
        return Failure("WitnessInIdeal", f"{g} already lies in the ideal", g)
    k = None
    power = g
    for e in range(2, k_max + 1):
        power = power * g
        if not normal_form(power, G):
            k = e
            break
    if k is None:
        return Failure("NoNilpotency", f"{g}^k not in the ideal for k <= {k_max}", g)
    Q = ideal_quotient(I, g).reduced()
    memberships = tuple(radical_member(q, I) for q in Q.gens)
    if not all(memberships):
        bad = next(q for q, ok in zip(Q.gens, memberships) if not ok)
        return Failure("QuotientNotInRadical", f"{bad} in (I : g) but not in the radical", g)
    return NonReducednessCertificate(I, g, k, Q.gens, memberships)


def candidate_witnesses(Fi) -> list[Polynomial]:
    """Cheap guesses for nilpotents of the chart ring, simplest first.

    Draws on chart variables, their normal forms and square-free parts of the
    generators; keeps only elements outside the ideal.
    """
    from sympy import Poly, sqf_part, symbols

    I = Fi.ideal if isinstance(Fi, FanoChartIdeal) else Fi
    if not I.gens:
        return []
    ring = I.ring
    G = I.groebner_basis()
    pool = []
    for v in ring.gens():
        pool.append(v)
        pool.append(normal_form(v, G))
    syms = symbols(ring.variables)
    for f in I.gens:
        expr = Poly({m: c for c, m in f.terms}, *syms).as_expr()
        part = Poly(sqf_part(expr), *syms)
        r = Polynomial.from_dict(ring, {m: c for m, c in part.terms()})
        if normal_form(r, G) != normal_form(f, G):
            pool.append(r)
    seen = set()
    out = []
    for p in pool:
        if not p or p.is_constant():
            continue
        p = p.monic()
        if p in seen or not normal_form(p, G):
            continue
        seen.add(p)
        out.append(p)
    out.sort(key=lambda p: (p.total_degree(), len(p), ring.sort_key(p.lm())))
    return out[:MAX_CANDIDATES]


def verify_certificate(cert: NonReducednessCertificate, power_bound: int = 8) -> bool:
    """Re-check a certificate from its fields, by routes independent of the producer.

    Memberships are decided in a lex Gröbner basis (the producer uses the
    ring's own order), every listed quotient generator is re-validated by
    ``q*g in I`` and the listed generators must span a freshly recomputed
    ``(I : g)``.
    Radical membership is settled by an explicit power search before falling
    back to the Rabinowitsch test.
    """
    I = cert.ideal
    G = I.groebner_basis("lex")

    def member(f):
        return not normal_form(f.change_ring(G.ring), G)

    if member(cert.g) or not member(cert.g**cert.k):
        return False
    if len(cert.quotient_generators) != len(cert.quotient_memberships):
        return False
    for q in cert.quotient_generators:
        if not member(q * cert.g):
            return False
    listed = Ideal(I.ring, cert.quotient_generators)
    recomputed = ideal_quotient(I.change_ring(G.ring), cert.g.change_ring(G.ring))
    if not ideal_equal(listed.change_ring(G.ring), recomputed):
        return False
    for q in cert.quotient_generators:
        power = q
        for _ in range(max(power_bound, cert.k)):
            if member(power):
                break
            power = power * q
        else:
            if not radical_member(q, I):
                return False
    return True
