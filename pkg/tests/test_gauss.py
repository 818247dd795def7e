from fractions import Fraction

import pytest

from gaussfano import (
    Ideal,
    PolyRing,
    gauss_constant_on_line,
    ideal_equal,
    line_through,
    singular_scheme_ideal,
    tangent_space,
)
from gaussfano.corpus import corpus_lines, symmetric_minors
from gaussfano.errors import BadCodimension, LineInSingularLocus, LineNotOnVariety, PointNotOnVariety
from gaussfano.gauss import codimension, jacobian
from gaussfano.groebner import ideal_dimension, radical_member

SAMPLES = [(1, 0), (0, 1), (1, 1), (1, -1), (1, 2)]


def span_equal(forms_a, forms_b):
    ring = forms_a[0].ring
    return ideal_equal(Ideal(ring, list(forms_a)), Ideal(ring, list(forms_b)))


class TestSingularScheme:
    def test_cone(self, cone):
        J = singular_scheme_ideal(cone, 1)
        R = cone.ring
        assert list(J.gens) == [R("x0*x1 - x2^2"), R("x1"), R("x0"), R("-2*x2")]
        # the vertex is the only singular point
        assert ideal_equal(J, Ideal(R, [R("x0"), R("x1"), R("x2")]))

    def test_symmetroid(self, symmetroid):
        J = singular_scheme_ideal(symmetroid, 1)
        assert ideal_equal(J, Ideal(symmetroid.ring, symmetric_minors(symmetroid.ring)))

    def test_smooth_quadric(self, quadric):
        J = singular_scheme_ideal(quadric, 1)
        assert ideal_dimension(J) == 0
        for v in quadric.ring.gens():
            assert radical_member(v, J)

    @pytest.mark.parametrize("codim", [0, 4])
    def test_bad_codimension(self, cone, codim):
        with pytest.raises(BadCodimension):
            singular_scheme_ideal(cone, codim)

    def test_codimension(self, cone, symmetroid):
        assert codimension(cone) == 1
        assert codimension(symmetroid) == 1

    def test_higher_codimension(self):
        # twisted cubic: singular scheme is empty
        R = PolyRing(("x0", "x1", "x2", "x3"))
        I = Ideal(R, [R("x0*x2 - x1^2"), R("x1*x3 - x2^2"), R("x0*x3 - x1*x2")])
        assert codimension(I) == 2
        J = singular_scheme_ideal(I, 2)
        assert ideal_dimension(J) <= 0


class TestTangentSpace:
    def test_symmetroid_plane_point(self, symmetroid):
        rep = tangent_space(symmetroid, [1, 0, 0, 1, 0, 0], 1)
        assert [str(f) for f in rep.conormal_basis] == ["T5"]
        assert rep.smooth and rep.rank == 1

    def test_cone_smooth_point(self, cone):
        rep = tangent_space(cone, [1, 0, 0, 0], 1)
        assert [str(f) for f in rep.conormal_basis] == ["x1"]
        assert rep.smooth

    def test_cone_vertex(self, cone):
        rep = tangent_space(cone, [0, 0, 0, 1], 1)
        assert rep.rank == 0 and not rep.smooth

    def test_not_on_variety(self, cone):
        with pytest.raises(PointNotOnVariety):
            tangent_space(cone, [1, 1, 0, 0], 1)


class TestGaussConstancy:
    def test_cone_ruling(self, cone):
        L = line_through([1, 0, 0, 0], [0, 0, 0, 1])
        res = gauss_constant_on_line(cone, L, 1)
        assert res.constant
        assert [str(f) for f in res.common_conormal] == ["x1"]

    @pytest.mark.parametrize("L", corpus_lines()["symmetroid_pi"], ids=str)
    def test_symmetroid_plane_lines(self, symmetroid, L):
        res = gauss_constant_on_line(symmetroid, L, 1)
        assert res.constant
        assert [str(f) for f in res.common_conormal] == ["T5"]

    def test_quadric_ruling(self, quadric):
        res = gauss_constant_on_line(quadric, line_through([1, 0, 0, 0], [0, 0, 1, 0]), 1)
        assert not res.constant
        assert res.coefficient_span_dim == 2 and res.generic_rank == 1
        assert res.common_conormal is None

    def test_not_on_variety(self, cone):
        with pytest.raises(LineNotOnVariety):
            gauss_constant_on_line(cone, line_through([1, 0, 0, 0], [0, 1, 0, 0]), 1)

    def test_line_in_singular_locus(self):
        R = PolyRing(("x0", "x1", "x2", "x3"))
        I = Ideal(R, [R("x0*x1")])
        with pytest.raises(LineInSingularLocus):
            gauss_constant_on_line(I, line_through([0, 0, 1, 0], [0, 0, 0, 1]), 1)

    def test_to_json(self, cone):
        doc = gauss_constant_on_line(cone, line_through([1, 0, 0, 0], [0, 0, 0, 1]), 1).to_json()
        assert doc == {"constant": True, "generic_rank": 1, "coefficient_span_dim": 1, "common_conormal": ["x1"]}


def _all_instances():
    from gaussfano.corpus import VARIETY_OF
    from gaussfano.variety import VarietyFile

    for key, lines in corpus_lines().items():
        vf = VarietyFile.builtin(VARIETY_OF[key])
        for i, L in enumerate(lines):
            yield pytest.param(vf, L, id=f"{key}-{i}")


@pytest.mark.parametrize("vf, L", list(_all_instances()))
def test_pointwise_consistency(vf, L):
    I_X = vf.ideal()
    codim = vf.N - vf.dim
    res = gauss_constant_on_line(I_X, L, codim)
    assert res.coefficient_span_dim >= res.generic_rank
    smooth_reports = []
    for s, t in SAMPLES:
        rep = tangent_space(I_X, L.point(s, t), codim)
        if rep.smooth:
            smooth_reports.append(rep)
    assert len(smooth_reports) >= 3
    if res.constant:
        for rep in smooth_reports:
            assert span_equal(rep.conormal_basis, res.common_conormal)
    else:
        spans = {tuple(str(f) for f in rep.conormal_basis) for rep in smooth_reports}
        assert len(spans) > 1


def test_gradient_on_plane(symmetroid):
    grad = jacobian(symmetroid)[0]
    for p0, p1, p3 in [(1, 0, 3), (2, 1, 1), (Fraction(1, 2), 3, -1)]:
        P = [p0, p1, 0, p3, 0, 0]
        assert [g.evaluate(P) for g in grad] == [0, 0, 0, 0, 0, p0 * p3 - p1 * p1]
