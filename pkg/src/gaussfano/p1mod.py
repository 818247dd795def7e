"""Graded modules over ``S = k[s, t]`` and splitting types on the projective line.

A :class:`GradedMatrix` with row degrees ``r_i`` and column degrees ``c_j``
presents a map ``⊕_j S(-c_j) -> ⊕_i S(-r_i)``; entry ``(i, j)`` is a form of
degree ``c_j - r_i``.  Kernels of such maps are free (``S`` has global
dimension 2 and a kernel is a second syzygy-like module of depth 2), which is
what makes the splitting computation finite.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import VerificationWindowMismatch
from .linalg import generic_rank, nullspace, rank
from .ring import PolyRing, Polynomial

__all__ = [
    "S",
    "GradedMatrix",
    "SplittingType",
    "hilbert_function",
    "kernel_free_basis",
    "dual_splitting",
]

S = PolyRing(("s", "t"))

WINDOW = 3
EXTRA_CHECKS = (5, 8)


def _forms(d: int):
    """Monomial basis of ``S_d``: ``s^d, s^(d-1) t, ..., t^d``."""
    if d < 0:
        return []
    return [(d - i, i) for i in range(d + 1)]


def _dim(d: int) -> int:
    return d + 1 if d >= 0 else 0


@dataclass(frozen=True)
class GradedMatrix:
    row_degrees: tuple[int, ...]
    col_degrees: tuple[int, ...]
    entries: tuple[tuple[Polynomial, ...], ...]

    def __post_init__(self):
        rows = tuple(int(r) for r in self.row_degrees)
        cols = tuple(int(c) for c in self.col_degrees)
        entries = tuple(tuple(S(e) for e in row) for row in self.entries)
        if len(entries) != len(rows) or any(len(row) != len(cols) for row in entries):
            raise ValueError("entry shape does not match the degree lists")
        for i, row in enumerate(entries):
            for j, e in enumerate(row):
                if e and (not e.is_homogeneous() or e.total_degree() != cols[j] - rows[i]):
                    raise ValueError(
                        f"entry ({i}, {j}) = {e} is not a form of degree {cols[j] - rows[i]}"
                    )
        object.__setattr__(self, "row_degrees", rows)
        object.__setattr__(self, "col_degrees", cols)
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_strings(cls, row_degrees, col_degrees, entries):
        return cls(row_degrees, col_degrees, [[S(e) for e in row] for row in entries])

    @property
    def shape(self):
        return len(self.row_degrees), len(self.col_degrees)

    def transpose_dual(self) -> GradedMatrix:
        """``φ^T : ⊕ S(r_i) -> ⊕ S(c_j)``, the map induced on ``Hom(-, S)``."""
        nrows, ncols = self.shape
        entries = [[self.entries[i][j] for i in range(nrows)] for j in range(ncols)]
        return GradedMatrix(
            tuple(-c for c in self.col_degrees), tuple(-r for r in self.row_degrees), entries
        )

    def __matmul__(self, other: GradedMatrix) -> GradedMatrix:
        if self.col_degrees != other.row_degrees:
            raise ValueError("degree lists do not compose")
        n, m = self.shape
        k = other.shape[1]
        entries = [
            [sum((self.entries[i][l] * other.entries[l][j] for l in range(m)), S.zero()) for j in range(k)]
            for i in range(n)
        ]
        return GradedMatrix(self.row_degrees, other.col_degrees, entries)

    def is_zero(self) -> bool:
        return all(not e for row in self.entries for e in row)

    def generic_rank(self) -> int:
        n, m = self.shape
        if n == 0 or m == 0:
            return 0
        return generic_rank([list(r) for r in self.entries])

    def degree_matrix(self, d: int):
        """Matrix of ``φ`` in degree ``d`` on monomial bases; columns index the source."""
        target = [(i, mono) for i, r in enumerate(self.row_degrees) for mono in _forms(d - r)]
        index = {key: k for k, key in enumerate(target)}
        columns = []
        for j, c in enumerate(self.col_degrees):
            for mono in _forms(d - c):
                col = [Fraction(0)] * len(target)
                for i in range(len(self.row_degrees)):
                    for m, coeff in self.entries[i][j].as_dict().items():
                        col[index[(i, (m[0] + mono[0], m[1] + mono[1]))]] += coeff
                columns.append(col)
        rows = [[columns[k][r] for k in range(len(columns))] for r in range(len(target))]
        return rows, len(target), len(columns)


@dataclass(frozen=True)
class SplittingType:
    """``⊕ O(a_i)`` on the projective line, degrees sorted descending."""

    degrees: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "degrees", tuple(sorted((int(a) for a in self.degrees), reverse=True)))

    @property
    def rank(self) -> int:
        return len(self.degrees)

    @property
    def degree(self) -> int:
        return sum(self.degrees)

    def __iter__(self):
        return iter(self.degrees)

    def __eq__(self, other):
        if isinstance(other, SplittingType):
            return self.degrees == other.degrees
        if isinstance(other, (list, tuple)):
            return self.degrees == tuple(sorted(other, reverse=True))
        return NotImplemented

    def __hash__(self):
        return hash(self.degrees)

    def __str__(self):
        if not self.degrees:
            return "0"
        return " ⊕ ".join(f"O({a})" for a in self.degrees)

    def to_json(self):
        return list(self.degrees)


def _rank_in_degree(phi: GradedMatrix, d: int) -> int:
    rows, nt, ns = phi.degree_matrix(d)
    if nt == 0 or ns == 0:
        return 0
    return rank(rows)


def hilbert_function(phi: GradedMatrix, d: int) -> int:
    """``dim_k (coker φ)_d``."""
    target = sum(_dim(d - r) for r in phi.row_degrees)
    return target - _rank_in_degree(phi, d)


def _kernel_dim(phi: GradedMatrix, d: int) -> int:
    source = sum(_dim(d - c) for c in phi.col_degrees)
    return source - _rank_in_degree(phi, d)


def _free_dim(degrees, d: int) -> int:
    return sum(_dim(d - e) for e in degrees)


def _vector_to_column(phi: GradedMatrix, d: int, v) -> list[Polynomial]:
    out = []
    k = 0
    for c in phi.col_degrees:
        terms = {}
        for mono in _forms(d - c):
            if v[k]:
                terms[mono] = v[k]
            k += 1
        out.append(Polynomial(S, terms))
    return out


def _column_to_vector(phi: GradedMatrix, d: int, column) -> list[Fraction]:
    v = []
    for c, entry in zip(phi.col_degrees, column):
        for mono in _forms(d - c):
            v.append(entry.coefficient(mono))
    return v


def kernel_free_basis(phi: GradedMatrix) -> GradedMatrix:
    """A free basis of ``ker φ``, returned as the inclusion matrix.

    Generators are peeled off degree by degree: in each degree the kernel
    vectors not already in the span of ``S``-multiples of earlier generators
    contribute new ones.  The result is checked (``φ K = 0`` and Hilbert
    functions agree on a window past the top generator) before returning.
    """
    nrows, ncols = phi.shape
    expected = ncols - phi.generic_rank()
    gens: list[list[Polynomial]] = []
    degrees: list[int] = []
    if expected > 0:
        d = min(phi.col_degrees)
        max_entry = max((e.total_degree() for row in phi.entries for e in row if e), default=0)
        limit = max(phi.col_degrees) + (nrows + 1) * max(max_entry, 1) + 2
        while len(gens) < expected:
            if d > limit:
                raise VerificationWindowMismatch(f"kernel generators not found below degree {limit}")
            residual = _kernel_dim(phi, d) - _free_dim(degrees, d)
            if residual > 0:
                rows, _, ns = phi.degree_matrix(d)
                kernel = nullspace(rows, ns) if rows else [
                    [Fraction(int(i == j)) for j in range(ns)] for i in range(ns)
                ]
                span = []
                for g, e in zip(gens, degrees):
                    for mono in _forms(d - e):
                        shifted = [x.mul_term(Fraction(1), mono) for x in g]
                        span.append(_column_to_vector(phi, d, shifted))
                current = rank(span) if span else 0
                for v in kernel:
                    if residual == 0:
                        break
                    trial = span + [v]
                    r = rank(trial)
                    if r > current:
                        span, current = trial, r
                        gens.append(_vector_to_column(phi, d, v))
                        degrees.append(d)
                        residual -= 1
                if residual:
                    raise VerificationWindowMismatch(f"could not extend the kernel basis in degree {d}")
            d += 1

    K = GradedMatrix(
        phi.col_degrees,
        tuple(degrees),
        [[gens[j][i] for j in range(len(gens))] for i in range(ncols)],
    )
    _verify_kernel(phi, K)
    return K


def _verify_kernel(phi: GradedMatrix, K: GradedMatrix):
    if K.shape[1] and not (phi @ K).is_zero():
        raise VerificationWindowMismatch("φ·K is not zero")
    top = max(K.col_degrees, default=max(phi.col_degrees, default=0))
    window = [top + i for i in range(WINDOW)] + [top + x for x in EXTRA_CHECKS]
    for d in window:
        if _kernel_dim(phi, d) != _free_dim(K.col_degrees, d):
            raise VerificationWindowMismatch(f"kernel Hilbert function differs in degree {d}")


def dual_splitting(phi: GradedMatrix) -> SplittingType:
    """Splitting type of ``Hom((coker φ)~, O)`` on the projective line.

    ``Hom(coker φ, S) = ker φ^T`` is free; a generator in degree ``e`` is a
    summand ``S(-e)``, i.e. ``O(-e)`` after sheafification.
    """
    K = kernel_free_basis(phi.transpose_dual())
    return SplittingType(tuple(-e for e in K.col_degrees))
