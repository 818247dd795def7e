"""Lines in P^N: affine charts of G(2, N+1), canonical matrices, parametrizations.

A chart is addressed by the pair of (1-based) columns that hold the 2x2
identity block; the remaining ``N - 1`` columns carry free coordinates, read
row by row.  With ``N = 3`` and identity columns ``(1, 4)`` the chart matrix is::

    [1  a1_1  a1_2  0]
    [0  a2_1  a2_2  1]

A line is parametrized as ``x_k = row1[k]*s + row2[k]*t``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import ArityMismatch, CoincidentPoints
from .linalg import rank, rref
from .ring import PolyRing, Polynomial, as_fraction

__all__ = [
    "Chart",
    "LineRep",
    "LineParam",
    "charts",
    "parse_chart",
    "line_through",
    "localize",
    "chart_param",
]

LINE_VARS = ("s", "t")


@dataclass(frozen=True)
class Chart:
    N: int
    identity_cols: tuple[int, int]
    names: tuple[str, ...] | None = None

    def __post_init__(self):
        i, j = self.identity_cols
        if not (1 <= i < j <= self.N + 1):
            raise ValueError(f"identity columns {self.identity_cols} out of range for N={self.N}")
        object.__setattr__(self, "identity_cols", (int(i), int(j)))
        if self.names is not None:
            names = tuple(self.names)
            if len(names) != 2 * (self.N - 1):
                raise ArityMismatch(f"chart needs {2 * (self.N - 1)} coordinate names")
            if set(names) & set(LINE_VARS):
                raise ValueError("chart coordinates may not be called 's' or 't'")
            object.__setattr__(self, "names", names)

    @property
    def free_cols(self) -> tuple[int, ...]:
        return tuple(c for c in range(1, self.N + 2) if c not in self.identity_cols)

    @property
    def chart_vars(self) -> tuple[str, ...]:
        if self.names is not None:
            return self.names
        n = self.N - 1
        return tuple(f"a{r}_{k}" for r in (1, 2) for k in range(1, n + 1))

    @property
    def label(self) -> str:
        return f"{self.identity_cols[0]},{self.identity_cols[1]}"

    @property
    def ring(self) -> PolyRing:
        """Coordinate ring of the chart."""
        return PolyRing(self.chart_vars)

    @property
    def param_ring(self) -> PolyRing:
        return PolyRing(self.chart_vars + LINE_VARS)

    def entry_layout(self):
        """For each column: ``(row1, row2)`` entries as ``1``, ``0`` or a variable name."""
        names = self.chart_vars
        n = self.N - 1
        i, j = self.identity_cols
        layout = []
        free_idx = 0
        for c in range(1, self.N + 2):
            if c == i:
                layout.append((1, 0))
            elif c == j:
                layout.append((0, 1))
            else:
                layout.append((names[free_idx], names[n + free_idx]))
                free_idx += 1
        return layout

    def matrix_at(self, point) -> list[list[Fraction]]:
        """The 2x(N+1) matrix of the chart point given as ``{name: value}`` or a sequence."""
        if not isinstance(point, dict):
            point = dict(zip(self.chart_vars, point, strict=True))
        rows = [[], []]
        for col in self.entry_layout():
            for r, e in enumerate(col):
                rows[r].append(as_fraction(point[e]) if isinstance(e, str) else Fraction(e))
        return rows


def charts(N: int) -> list[Chart]:
    """All ``C(N+1, 2)`` charts, in lexicographic order of identity columns."""
    if N < 1:
        raise ValueError("N must be at least 1")
    return [Chart(N, pair) for pair in combinations(range(1, N + 2), 2)]


def parse_chart(text: str, N: int, names=None) -> Chart:
    try:
        i, j = (int(x) for x in text.split(","))
    except ValueError:
        raise ValueError(f"chart must look like 'i,j', got {text!r}") from None
    if i > j:
        i, j = j, i
    return Chart(N, (i, j), names)


class LineRep:
    """A line of P^N as the RREF of a rank-2 ``2 x (N+1)`` rational matrix."""

    __slots__ = ("matrix",)

    def __init__(self, rows):
        R, pivots = rref(rows)
        if len(pivots) != 2:
            raise CoincidentPoints("the two rows do not span a line")
        self.matrix = tuple(tuple(r) for r in R)

    @property
    def N(self) -> int:
        return len(self.matrix[0]) - 1

    def __eq__(self, other):
        return isinstance(other, LineRep) and self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def __repr__(self):
        rows = ["[" + ", ".join(str(x) for x in r) + "]" for r in self.matrix]
        return f"LineRep([{', '.join(rows)}])"

    def point(self, s, t) -> list[Fraction]:
        s, t = as_fraction(s), as_fraction(t)
        return [s * a + t * b for a, b in zip(*self.matrix)]

    def param(self) -> LineParam:
        ring = PolyRing(LINE_VARS)
        forms = tuple((ring.constant(a), ring.constant(b)) for a, b in zip(*self.matrix))
        return LineParam(ring, forms)

    def to_json(self):
        return [[str(x) for x in r] for r in self.matrix]


def line_through(p, q) -> LineRep:
    p = [as_fraction(x) for x in p]
    q = [as_fraction(x) for x in q]
    if len(p) != len(q):
        raise ArityMismatch("points live in different projective spaces")
    if rank([p, q]) < 2:
        raise CoincidentPoints("points coincide (or one is zero)")
    return LineRep([p, q])


@dataclass(frozen=True)
class LineParam:
    """``x_k -> alpha_k*s + beta_k*t``; ``ring`` ends with the variables ``s, t``."""

    ring: PolyRing
    forms: tuple = field()

    def images(self) -> list[Polynomial]:
        s, t = self.ring.gen("s"), self.ring.gen("t")
        return [a * s + b * t for a, b in self.forms]

    def specialize(self, point) -> LineParam:
        """Evaluate the chart coordinates at a rational point."""
        base = self.ring.variables[:-2]
        if not isinstance(point, dict):
            point = dict(zip(base, point, strict=True))
        target = PolyRing(LINE_VARS)
        vals = [as_fraction(point[v]) for v in base]

        def ev(p):
            # p lives in the parametrization ring; s and t do not occur in it
            return target.constant(p.evaluate(vals + [0, 0]))

        return LineParam(target, tuple((ev(a), ev(b)) for a, b in self.forms))

    def matrix(self) -> list[list]:
        return [[a for a, _ in self.forms], [b for _, b in self.forms]]

    def line(self) -> LineRep:
        """Concrete line of a specialized parametrization."""
        rows = [[a.constant_value() for a, _ in self.forms], [b.constant_value() for _, b in self.forms]]
        return LineRep(rows)


def chart_param(C: Chart) -> LineParam:
    ring = C.param_ring
    forms = []
    for col in C.entry_layout():
        forms.append(tuple(ring.gen(e) if isinstance(e, str) else ring.constant(e) for e in col))
    return LineParam(ring, tuple(forms))


def localize(L: LineRep, C: Chart) -> dict[str, Fraction] | None:
    """Chart coordinates of ``L`` in ``C``, or ``None`` when ``L`` is not in the chart."""
    if L.N != C.N:
        raise ArityMismatch(f"line lives in P^{L.N}, chart in G(2, {C.N + 1})")
    i, j = (c - 1 for c in C.identity_cols)
    (a, b), (c, d) = ((L.matrix[0][i], L.matrix[0][j]), (L.matrix[1][i], L.matrix[1][j]))
    det = a * d - b * c
    if det == 0:
        return None
    # M^{-1} L, where M is the 2x2 block in the identity columns
    inv = ((d / det, -b / det), (-c / det, a / det))
    rows = [
        [inv[r][0] * x + inv[r][1] * y for x, y in zip(*L.matrix)]
        for r in range(2)
    ]
    coords = {}
    for col, pair in zip(range(C.N + 1), C.entry_layout()):
        for r, e in enumerate(pair):
            if isinstance(e, str):
                coords[e] = rows[r][col]
    return coords
