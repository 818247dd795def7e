"""Jacobian calculus: singular scheme, tangent spaces, Gauss-map constancy on lines."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import BadCodimension, LineInSingularLocus, LineNotOnVariety, PointNotOnVariety
from .fano import line_on_variety
from .grassmann import LineRep
from .groebner import Ideal, ideal_dimension
from .linalg import determinant, generic_rank, rref
from .ring import Polynomial, as_fraction, partial, substitute_line

__all__ = [
    "TangentSpaceReport",
    "GaussConstancyResult",
    "jacobian",
    "codimension",
    "singular_scheme_ideal",
    "tangent_space",
    "gauss_constant_on_line",
    "generic_jacobian_rank",
]


def jacobian(I_X: Ideal) -> list[list[Polynomial]]:
    """Rows are generators, columns are ring variables."""
    return [[partial(F, v) for v in I_X.ring.variables] for F in I_X.gens]


def codimension(I_X: Ideal) -> int:
    """``N - dim X`` for the projective variety cut out by ``I_X``."""
    N = I_X.ring.nvars - 1
    return N - (ideal_dimension(I_X) - 1)


def singular_scheme_ideal(I_X: Ideal, codim: int | None = None) -> Ideal:
    """``I_X`` plus the ``codim``-sized minors of its Jacobian matrix."""
    N = I_X.ring.nvars - 1
    if codim is None:
        codim = codimension(I_X)
    if codim < 1 or codim > N:
        raise BadCodimension(f"codimension {codim} not in [1, {N}]")
    J = jacobian(I_X)
    gens = list(I_X.gens)
    for rows in combinations(range(len(J)), codim):
        for cols in combinations(range(N + 1), codim):
            gens.append(determinant([[J[r][c] for c in cols] for r in rows]))
    return Ideal(I_X.ring, gens)


@dataclass(frozen=True)
class TangentSpaceReport:
    point: tuple[Fraction, ...]
    conormal_basis: tuple[Polynomial, ...]
    rank: int
    smooth: bool


def tangent_space(I_X: Ideal, p, codim: int | None = None) -> TangentSpaceReport:
    p = tuple(as_fraction(x) for x in p)
    if any(F.evaluate(p) != 0 for F in I_X.gens):
        raise PointNotOnVariety(f"{[str(x) for x in p]} is not on the variety")
    if codim is None:
        codim = codimension(I_X)
    values = [[entry.evaluate(p) for entry in row] for row in jacobian(I_X)]
    R, _ = rref(values, I_X.ring.nvars) if values else ([], [])
    basis = tuple(I_X.ring.linear_form(row) for row in R)
    return TangentSpaceReport(p, basis, len(basis), len(basis) == codim)


@dataclass(frozen=True)
class GaussConstancyResult:
    constant: bool
    generic_rank: int
    coefficient_span_dim: int
    common_conormal: tuple[Polynomial, ...] | None

    def to_json(self) -> dict:
        return {
            "constant": self.constant,
            "generic_rank": self.generic_rank,
            "coefficient_span_dim": self.coefficient_span_dim,
            "common_conormal": None
            if self.common_conormal is None
            else [str(f) for f in self.common_conormal],
        }


def _restricted_jacobian(I_X: Ideal, L: LineRep):
    psi = L.param()
    return [[substitute_line(e, psi) for e in row] for row in jacobian(I_X)]


def generic_jacobian_rank(I_X: Ideal, L: LineRep) -> int:
    """Rank of the Jacobian along ``L`` over the function field of the line."""
    JL = _restricted_jacobian(I_X, L)
    return generic_rank(JL) if JL else 0


def gauss_constant_on_line(I_X: Ideal, L: LineRep, codim: int | None = None) -> GaussConstancyResult:
    """Decide whether every smooth point of ``L`` has the same embedded tangent space.

    Along ``L`` each Jacobian row is a vector of binary forms.  Splitting each
    row by ``(s, t)``-monomial gives constant vectors; their span contains every
    conormal space along the line and has dimension ``codim`` exactly when
    the tangent space never moves.
    """
    if not line_on_variety(I_X, L):
        raise LineNotOnVariety(f"{L} is not contained in the variety")
    if codim is None:
        codim = codimension(I_X)
    JL = _restricted_jacobian(I_X, L)
    grank = generic_rank(JL) if JL else 0
    if grank < codim:
        raise LineInSingularLocus(f"{L} lies in the singular locus (rank {grank} < {codim})")
    n = I_X.ring.nvars
    vectors = []
    for row in JL:
        monos = set()
        for e in row:
            monos.update(e.as_dict())
        for m in sorted(monos, reverse=True):
            vectors.append([e.coefficient(m) for e in row])
    R, _ = rref(vectors, n) if vectors else ([], [])
    span = len(R)
    constant = span == grank
    common = tuple(I_X.ring.linear_form(r) for r in R) if constant else None
    return GaussConstancyResult(constant, grank, span, common)

