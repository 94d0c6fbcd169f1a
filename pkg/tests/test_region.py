"""Region membership, the diagonal slice, boundary sampling, rendering."""

import xml.etree.ElementTree as ET
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilwords.dynamics import XYPoint
from nilwords.region import (
    CONDITIONS,
    EpsilonPolicy,
    Membership,
    boundary_sample,
    diagonal_interval,
    membership,
    render_region,
)
from nilwords.scalar import DIAGONAL_FIXED_POINT, Mode, Scalar

S = DIAGONAL_FIXED_POINT.value

unit_coords = st.fractions(min_value=0, max_value=1, max_denominator=64)


def exact_point(x, y):
    return XYPoint(Scalar.exact(Fraction(x)), Scalar.exact(Fraction(y)))


def classify(x, y):
    return membership(XYPoint.of_floats(x, y))


class TestMembership:
    def test_endpoints(self):
        for p in (exact_point(1, 0), exact_point(0, 1)):
            verdict = membership(p)
            assert verdict.status is Membership.ENDPOINT_MEMBER
            assert verdict.failed_condition is None
            assert verdict.is_member()
        assert classify(1.0, 0.0).status is Membership.ENDPOINT_MEMBER

    def test_interior_examples(self):
        for x, y in ((0.36, 0.36), (0.9, 0.05), (0.05, 0.9), (0.25, 0.5)):
            verdict = classify(x, y)
            assert verdict.status is Membership.INTERIOR_MEMBER, (x, y)
            assert verdict.is_member()

    def test_limit_point_excluded_by_exact_tie(self):
        verdict = membership(exact_point(Fraction(1, 3), Fraction(1, 3)))
        assert verdict.status is Membership.OUTSIDE
        assert verdict.failed_condition == "4x>3(1-y)^2"
        assert verdict.boundary_equality

    def test_or_clause_failure(self):
        verdict = classify(0.5, 0.5)
        assert verdict.status is Membership.OUTSIDE
        assert verdict.failed_condition == "or-clause"
        assert not verdict.boundary_equality

    def test_first_failure_in_fixed_order(self):
        assert classify(1.5, 1.5).failed_condition == "x<1"
        assert classify(0.5, 1.5).failed_condition == "y<1"
        assert classify(0.01, 0.5).failed_condition == "4x>3(1-y)^2"
        assert classify(0.9, 0.001).failed_condition == "4y>3(1-x)^2"

    def test_square_edge_ties(self):
        verdict = membership(exact_point(1, Fraction(1, 2)))
        assert verdict.failed_condition == "x<1"
        assert verdict.boundary_equality

    def test_margin_policy(self):
        p = XYPoint.of_floats(0.345, 0.345)
        assert membership(p).status is Membership.INTERIOR_MEMBER
        wide = EpsilonPolicy.for_mode(Mode.FLOAT, 0.1)
        verdict = membership(p, wide)
        assert verdict.status is Membership.OUTSIDE
        assert verdict.failed_condition == "4x>3(1-y)^2"

    def test_margin_validation(self):
        with pytest.raises(ValueError):
            EpsilonPolicy.for_mode(Mode.EXACT, 0.1)
        with pytest.raises(ValueError):
            EpsilonPolicy.for_mode(Mode.FLOAT, -0.5)
        assert EpsilonPolicy.for_mode(Mode.EXACT).eps == 0

    def test_condition_order_is_pinned(self):
        assert CONDITIONS == (
            "x<1",
            "y<1",
            "4x>3(1-y)^2",
            "4y>3(1-x)^2",
            "or-clause",
        )

    @given(unit_coords, unit_coords)
    def test_swap_symmetry(self, x, y):
        a = membership(exact_point(x, y))
        b = membership(exact_point(y, x))
        assert a.status is b.status

    @given(unit_coords, unit_coords)
    def test_exact_and_float_agree_off_ties(self, x, y):
        exact = membership(exact_point(x, y))
        if exact.boundary_equality:
            return
        # denominators up to 64 keep every float computation exact too
        approx = classify(float(x), float(y))
        assert approx.status is exact.status


class TestDiagonal:
    def test_interval_ends(self):
        interval = diagonal_interval()
        assert interval.lower.to_float() == pytest.approx(1 / 3, abs=1e-15)
        assert interval.upper is DIAGONAL_FIXED_POINT
        assert interval.lower_open
        assert interval.upper_closed

    def test_membership_matches_interval(self):
        inside = (1 / 3 + 1e-6, 0.35, 0.36, 0.38, S)
        outside = (0.0, 0.2, 1 / 3, S + 1e-6, 0.5, 0.9, 1.0)
        for d in inside:
            assert classify(d, d).status is Membership.INTERIOR_MEMBER, d
        for d in outside:
            assert classify(d, d).status is Membership.OUTSIDE, d

    def test_fixed_point_is_the_last_member(self):
        # 1 ulp above s the disjunction already fails
        import math

        above = math.nextafter(S, 1.0)
        assert classify(S, S).status is Membership.INTERIOR_MEMBER
        assert classify(above, above).failed_condition == "or-clause"


class TestBoundarySample:
    def test_labels_and_counts(self):
        curves = boundary_sample(33)
        assert [c.label for c in curves] == [
            "x=1",
            "y=1",
            "4x=3(1-y)^2",
            "4y=3(1-x)^2",
            "x=(1-y)^2",
            "y=(1-x)^2",
        ]
        assert all(len(c.points) == 33 for c in curves)

    def test_anchor_points(self):
        by_label = {c.label: c for c in boundary_sample(5)}
        assert by_label["x=1"].points[0] == (1.0, 0.0)
        assert by_label["x=1"].points[-1] == (1.0, 1.0)
        assert by_label["4x=3(1-y)^2"].points[0] == (0.75, 0.0)
        assert by_label["4x=3(1-y)^2"].points[-1] == (0.0, 1.0)
        assert by_label["x=(1-y)^2"].points[0] == (1.0, 0.0)
        assert by_label["x=(1-y)^2"].points[-1] == (0.0, 1.0)

    def test_points_satisfy_curve_equations(self):
        by_label = {c.label: c for c in boundary_sample(65)}
        for x, y in by_label["4y=3(1-x)^2"].points:
            assert 4 * y == pytest.approx(3 * (1 - x) ** 2, abs=1e-12)
        for x, y in by_label["y=(1-x)^2"].points:
            assert y == pytest.approx((1 - x) ** 2, abs=1e-12)

    def test_stays_in_unit_square(self):
        for curve in boundary_sample(257):
            for x, y in curve.points:
                assert 0.0 <= x <= 1.0 and 0.0 <= y <= 1.0

    def test_count_validation(self):
        with pytest.raises(ValueError):
            boundary_sample(1)


class TestRender:
    def test_svg_structure(self, tmp_path):
        out = tmp_path / "region.svg"
        summary = render_region(str(out), format="svg", count=64, resolution=128)
        root = ET.parse(out).getroot()
        ns = {"svg": "http://www.w3.org/2000/svg"}
        paths = root.findall(".//svg:path[@class='boundary']", ns)
        assert len(paths) == 6
        labels = {p.get("data-label") for p in paths}
        assert "4x=3(1-y)^2" in labels and "y=(1-x)^2" in labels
        circles = root.findall(".//svg:circle[@class='marker']", ns)
        assert len(circles) == 4
        assert len(root.findall(".//svg:rect", ns)) > 100
        assert summary.format == "svg"
        assert summary.path == str(out)

    def test_svg_marker_positions(self, tmp_path):
        out = tmp_path / "region.svg"
        render_region(str(out), format="svg", count=16, resolution=32)
        root = ET.parse(out).getroot()
        ns = {"svg": "http://www.w3.org/2000/svg"}
        found = {
            c.get("data-label"): (float(c.get("cx")), float(c.get("cy")))
            for c in root.findall(".//svg:circle[@class='marker']", ns)
        }
        assert found["endpoint-(1,0)"] == (1.0, 0.0)
        assert found["endpoint-(0,1)"] == (0.0, 1.0)
        lx, ly = found["limit-(1/3,1/3)"]
        assert lx == pytest.approx(1 / 3, abs=1e-12)
        sx, sy = found["diagonal-fixed-point"]
        assert sx == pytest.approx(S, abs=1e-9)
        assert sy == pytest.approx(S, abs=1e-9)

    def test_shading_probes(self, tmp_path):
        out = tmp_path / "region.svg"
        summary = render_region(str(out), format="svg", count=16, resolution=256)
        assert summary.cell_shaded(0.36, 0.36)
        assert summary.cell_shaded(0.9, 0.05)
        assert not summary.cell_shaded(0.5, 0.5)
        assert not summary.cell_shaded(0.1, 0.1)

    def test_mask_agrees_with_membership(self, tmp_path):
        out = tmp_path / "region.svg"
        resolution = 64
        summary = render_region(str(out), count=16, resolution=resolution)
        for j in range(resolution):
            for i in range(resolution):
                cx = (i + 0.5) / resolution
                cy = (j + 0.5) / resolution
                expected = classify(cx, cy).status is Membership.INTERIOR_MEMBER
                assert bool(summary.inside_mask[j, i]) == expected, (cx, cy)

    def test_csv_output(self, tmp_path):
        out = tmp_path / "region.csv"
        summary = render_region(str(out), format="csv", count=20)
        lines = out.read_text().splitlines()
        assert lines[0] == "curve_label,x,y"
        assert len(lines) == 1 + 6 * 20
        label, x, y = lines[1].split(",")
        assert label == "x=1"
        float(x), float(y)
        assert summary.format == "csv"

    def test_unknown_format(self, tmp_path):
        with pytest.raises(ValueError):
            render_region(str(tmp_path / "r.bin"), format="png")
