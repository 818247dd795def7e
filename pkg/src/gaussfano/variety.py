"""JSON input documents describing a projective variety and lines on it."""

from __future__ import annotations

import json
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .errors import GaussFanoError, NotHomogeneous
from .grassmann import LineRep, line_through
from .groebner import Ideal, ideal_dimension
from .ring import PolyRing, as_fraction, parse_poly


class InvalidInput(GaussFanoError, ValueError):
    pass


@dataclass(frozen=True)
class VarietyFile:
    """``{"variables": [...], "ideal": ["..."], "dim": optional int}``."""

    variables: tuple[str, ...]
    ideal_strings: tuple[str, ...]
    dim: int | None = None

    @classmethod
    def from_dict(cls, doc) -> VarietyFile:
        if not isinstance(doc, dict):
            raise InvalidInput("variety document must be a JSON object")
        unknown = set(doc) - {"variables", "ideal", "dim"}
        if unknown:
            raise InvalidInput(f"unexpected keys: {sorted(unknown)}")
        try:
            variables = tuple(doc["variables"])
            ideal = tuple(doc["ideal"])
        except KeyError as e:
            raise InvalidInput(f"missing key {e.args[0]!r}") from None
        if not all(isinstance(v, str) for v in variables) or len(variables) < 2:
            raise InvalidInput("'variables' must list at least two names")
        if not all(isinstance(f, str) for f in ideal):
            raise InvalidInput("'ideal' must be a list of polynomial strings")
        dim = doc.get("dim")
        if dim is not None and (not isinstance(dim, int) or isinstance(dim, bool)):
            raise InvalidInput("'dim' must be an integer")
        return cls(variables, ideal, dim)

    @classmethod
    def load(cls, path) -> VarietyFile:
        text = Path(path).read_text(encoding="utf-8")
        try:
            doc = json.loads(text)
        except json.JSONDecodeError as e:
            raise InvalidInput(f"{path}: {e}") from None
        return cls.from_dict(doc)

    @classmethod
    def builtin(cls, name: str) -> VarietyFile:
        """One of the bundled examples: cone, quadric, symmetroid, hyperplane, plane_in_p4."""
        text = resources.files("gaussfano.data").joinpath(f"{name}.json").read_text("utf-8")
        return cls.from_dict(json.loads(text))

    @property
    def N(self) -> int:
        return len(self.variables) - 1

    def ring(self) -> PolyRing:
        try:
            return PolyRing(self.variables)
        except ValueError as e:
            raise InvalidInput(str(e)) from None

    def ideal(self, validate: bool = True) -> Ideal:
        ring = self.ring()
        I = Ideal(ring, [parse_poly(f, ring) for f in self.ideal_strings])
        if validate:
            if not I.is_homogeneous():
                raise NotHomogeneous("every generator must be homogeneous")
            if self.dim is not None and ideal_dimension(I) - 1 != self.dim:
                raise InvalidInput(
                    f"declared dim {self.dim} but the ideal has projective dimension "
                    f"{ideal_dimension(I) - 1}"
                )
        return I

    def projective_dim(self, I: Ideal | None = None) -> int:
        if self.dim is not None:
            return self.dim
        return ideal_dimension(I if I is not None else self.ideal(validate=False)) - 1


def parse_line(doc, N: int) -> LineRep:
    """``{"points": [p, q]}`` or ``{"matrix": [row1, row2]}``; entries int or ``"p/q"``."""
    if isinstance(doc, str):
        doc = json.loads(doc)
    if not isinstance(doc, dict) or len(doc) != 1 or not ({"points", "matrix"} & set(doc)):
        raise InvalidInput('line must be {"points": [[...],[...]]} or {"matrix": [[...],[...]]}')
    rows = doc.get("points", doc.get("matrix"))
    if len(rows) != 2 or any(len(r) != N + 1 for r in rows):
        raise InvalidInput(f"line needs two rows of {N + 1} entries")
    try:
        rows = [[as_fraction(x) for x in r] for r in rows]
    except (TypeError, ValueError, ZeroDivisionError) as e:
        raise InvalidInput(f"bad rational entry: {e}") from None
    if "points" in doc:
        return line_through(*rows)
    return LineRep(rows)
