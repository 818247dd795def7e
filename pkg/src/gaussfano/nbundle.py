"""Normal bundles of lines on a projective variety.

For a line ``L`` cut out by independent linear forms ``l_1..l_{N-1}``, the
conormal module of ``L`` in ``P^N`` is free on the ``l_i`` (each in degree 1).
Writing every generator ``F_j`` of ``I_X`` as ``sum_i A_ij * l_i`` and
restricting the ``A_ij`` to ``L`` gives a presentation of the conormal module
of ``L`` in ``X`` over ``k[s, t]``.  Its dual is the normal bundle.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import LineInSingularLocus, LineNotOnVariety, NonzeroRemainder
from .fano import line_on_variety
from .gauss import gauss_constant_on_line, generic_jacobian_rank
from .grassmann import LineRep
from .groebner import Ideal, divide, ideal_dimension
from .linalg import nullspace, rref
from .p1mod import GradedMatrix, SplittingType, dual_splitting
from .ring import PolyRing, Polynomial, substitute_line

__all__ = [
    "ConormalPresentation",
    "TheoremCheck",
    "line_equations",
    "conormal_presentation",
    "normal_bundle_splitting",
    "theorem_check",
]


def line_equations(L: LineRep) -> list[list[Fraction]]:
    """RREF basis of the linear forms vanishing on ``L`` (coefficient vectors)."""
    basis = nullspace([list(r) for r in L.matrix], L.N + 1)
    R, _ = rref(basis, L.N + 1)
    return R


@dataclass(frozen=True)
class ConormalPresentation:
    line: LineRep
    ell_basis: tuple[Polynomial, ...]
    quotients: tuple[tuple[Polynomial, ...], ...]  # quotients[j][i] = A_ij
    matrix: GradedMatrix


def _divide_by_linear_forms(F: Polynomial, ell, var_order):
    """``F = sum_i A_i * ell_i`` for linear forms ``ell`` that generate an ideal containing ``F``.

    The forms are brought to echelon shape with respect to ``var_order``
    (tracking the change of basis), so that their leading monomials are
    distinct variables and division has a zero remainder exactly when ``F``
    lies in the ideal.
    """
    ring = F.ring
    n = ring.nvars
    m = len(ell)
    # columns permuted into var_order, augmented with the identity to record H
    coeffs = [[f.coefficient(tuple(int(i == k) for i in range(n))) for k in var_order] for f in ell]
    aug = [row + [Fraction(int(i == j)) for j in range(m)] for i, row in enumerate(coeffs)]
    R, pivots = rref(aug, n + m)
    if len(pivots) < m or pivots[-1] >= n:
        raise ValueError("linear forms are not independent")
    lex = PolyRing(tuple(ring.variables[k] for k in var_order), "lex")
    echelon = []
    for row in R:
        echelon.append(lex.linear_form(row[:n]))
    H = [row[n:] for row in R]  # echelon_k = sum_i H[k][i] * ell_i
    quotients, remainder = divide(F.change_ring(lex), echelon)
    if remainder:
        raise NonzeroRemainder(f"{F} is not in the ideal of the line")
    A = []
    for i in range(m):
        acc = lex.zero()
        for k in range(m):
            if H[k][i]:
                acc = acc + quotients[k] * H[k][i]
        A.append(acc.change_ring(ring))
    return A


def conormal_presentation(
    I_X: Ideal, L: LineRep, ell_basis=None, var_order=None
) -> ConormalPresentation:
    """Presentation ``⊕_j S(-deg F_j) -> ⊕_i S(-1)`` of the conormal module of ``L`` in ``X``.

    ``ell_basis`` (coefficient vectors or linear forms) and ``var_order`` (a
    permutation of variable indices used for the division) default to the
    RREF basis and the ring's own variable order.
    """
    if not line_on_variety(I_X, L):
        raise LineNotOnVariety(f"{L} is not contained in the variety")
    ring = I_X.ring
    if ell_basis is None:
        ell_basis = line_equations(L)
    ell = [f if isinstance(f, Polynomial) else ring.linear_form(f) for f in ell_basis]
    if var_order is None:
        var_order = list(range(ring.nvars))
    psi = L.param()
    for f in ell:
        if substitute_line(f, psi):
            raise ValueError(f"{f} does not vanish on the line")

    quotients = []
    columns = []
    for F in I_X.gens:
        A = _divide_by_linear_forms(F, ell, var_order)
        check = sum((a * l for a, l in zip(A, ell)), ring.zero())
        if check != F:
            raise NonzeroRemainder(f"division of {F} does not reproduce it")
        quotients.append(tuple(A))
        columns.append([substitute_line(a, psi) for a in A])
    entries = [[columns[j][i] for j in range(len(columns))] for i in range(len(ell))]
    matrix = GradedMatrix(
        tuple(1 for _ in ell),
        tuple(F.total_degree() for F in I_X.gens),
        entries,
    )
    return ConormalPresentation(L, tuple(ell), tuple(quotients), matrix)


def _check_line(I_X: Ideal, L: LineRep, codim: int):
    if not line_on_variety(I_X, L):
        raise LineNotOnVariety(f"{L} is not contained in the variety")
    if generic_jacobian_rank(I_X, L) < codim:
        raise LineInSingularLocus(f"{L} lies in the singular locus")


def normal_bundle_splitting(I_X: Ideal, L: LineRep, dim: int | None = None, **presentation_kw) -> SplittingType:
    """Splitting type of ``N_{L/X}`` for a line ``L`` not inside the singular locus."""
    N = I_X.ring.nvars - 1
    if dim is None:
        dim = ideal_dimension(I_X) - 1
    _check_line(I_X, L, N - dim)
    P = conormal_presentation(I_X, L, **presentation_kw)
    return dual_splitting(P.matrix)


@dataclass(frozen=True)
class TheoremCheck:
    line: LineRep
    constant: bool
    splitting: SplittingType
    expected_rank: int
    consistent: bool
    degree_bound_ok: bool
    rank_ok: bool
    common_conormal: tuple[Polynomial, ...] | None = None

    def to_json(self) -> dict:
        return {
            "constant": self.constant,
            "splitting": self.splitting.to_json(),
            "consistent": self.consistent,
            "degree_bound_ok": self.degree_bound_ok,
            "rank_ok": self.rank_ok,
        }


def theorem_check(I_X: Ideal, L: LineRep, dim: int | None = None) -> TheoremCheck:
    """Run the Gauss-map test and the normal-bundle computation independently.

    The Gauss map is constant on ``L`` iff ``N_{L/X} = O(1)^(n-1)``; the
    ``consistent`` field records whether the two computations agree.
    """
    N = I_X.ring.nvars - 1
    if dim is None:
        dim = ideal_dimension(I_X) - 1
    codim = N - dim
    gauss = gauss_constant_on_line(I_X, L, codim)
    split = normal_bundle_splitting(I_X, L, dim)
    all_ones = split.degrees == (1,) * (dim - 1)
    return TheoremCheck(
        line=L,
        constant=gauss.constant,
        splitting=split,
        expected_rank=dim - 1,
        consistent=gauss.constant == all_ones,
        degree_bound_ok=all(a <= 1 for a in split.degrees),
        rank_ok=split.rank == dim - 1,
        common_conormal=gauss.common_conormal,
    )

