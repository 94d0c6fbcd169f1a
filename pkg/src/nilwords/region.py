"""The admissible planar region and its rendering.

The region is cut out of the unit square by five conditions in fixed order:
x < 1, y < 1, 4x > 3(1-y)^2, 4y > 3(1-x)^2, and the non-strict disjunction
(x <= (1-y)^2 or y <= (1-x)^2), together with the two isolated endpoints
(1, 0) and (0, 1).  Membership reports the first violated condition and
whether the violation is an exact tie, since boundary points other than the
endpoints are deliberately classified outside rather than adjudicated.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional, Sequence, Tuple

import numpy as np

from .scalar import DIAGONAL_FIXED_POINT, Mode, Scalar
from .dynamics import XYPoint

__all__ = [
    "Membership",
    "RegionVerdict",
    "EpsilonPolicy",
    "CONDITIONS",
    "membership",
    "DiagonalInterval",
    "diagonal_interval",
    "BoundaryCurve",
    "boundary_sample",
    "RenderSummary",
    "render_region",
]


class Membership(Enum):
    INTERIOR_MEMBER = "InteriorMember"
    ENDPOINT_MEMBER = "EndpointMember"
    OUTSIDE = "Outside"


# Identifiers of the five conditions, in the order they are checked.
CONDITIONS = ("x<1", "y<1", "4x>3(1-y)^2", "4y>3(1-x)^2", "or-clause")


@dataclass(frozen=True)
class RegionVerdict:
    status: Membership
    failed_condition: Optional[str] = None
    boundary_equality: bool = False

    def is_member(self) -> bool:
        return self.status is not Membership.OUTSIDE


@dataclass(frozen=True)
class EpsilonPolicy:
    """Margin demanded of the strict conditions; zero means plain strictness.

    The margin is a testing convenience for float mode only, so exact mode
    requires eps = 0.  The non-strict disjunction never takes a margin.
    """

    eps: Scalar

    def __post_init__(self):
        if self.eps < 0:
            raise ValueError("margin must be nonnegative")
        if self.eps.mode is Mode.EXACT and self.eps != 0:
            raise ValueError("exact mode does not admit a nonzero margin")

    @staticmethod
    def for_mode(mode: Mode, eps: float = 0.0) -> "EpsilonPolicy":
        if mode is Mode.EXACT:
            if eps != 0.0:
                raise ValueError("exact mode does not admit a nonzero margin")
            return EpsilonPolicy(Scalar.zero(mode))
        return EpsilonPolicy(Scalar.of_float(eps))


def membership(p: XYPoint, policy: Optional[EpsilonPolicy] = None) -> RegionVerdict:
    """Classify a planar point against the five conditions.

    Endpoint checks come first; then each strict condition must clear the
    policy margin, and the disjunction must hold non-strictly.  The verdict
    names the first failure and flags an exact tie on a strict condition.
    """
    if policy is None:
        policy = EpsilonPolicy.for_mode(p.mode)
    eps = policy.eps
    x, y = p.x, p.y
    if (x == 1 and y == 0) or (x == 0 and y == 1):
        return RegionVerdict(Membership.ENDPOINT_MEMBER)
    one_minus_x = 1 - x
    one_minus_y = 1 - y
    strict_margins = (
        ("x<1", one_minus_x),
        ("y<1", one_minus_y),
        ("4x>3(1-y)^2", 4 * x - 3 * one_minus_y * one_minus_y),
        ("4y>3(1-x)^2", 4 * y - 3 * one_minus_x * one_minus_x),
    )
    for name, margin in strict_margins:
        if not (margin > eps):
            return RegionVerdict(Membership.OUTSIDE, name, margin == 0)
    or_holds = (one_minus_y * one_minus_y - x >= 0) or (
        one_minus_x * one_minus_x - y >= 0
    )
    if not or_holds:
        return RegionVerdict(Membership.OUTSIDE, "or-clause", False)
    return RegionVerdict(Membership.INTERIOR_MEMBER)


@dataclass(frozen=True)
class DiagonalInterval:
    """The diagonal slice of the region: the half-open interval (1/3, s].

    On x = y the strict conditions reduce to 3x^2 - 10x + 3 < 0, whose root
    in (0, 1) is 1/3, and the disjunction to x^2 - 3x + 1 >= 0, whose root
    is the diagonal fixed point s.  The upper end is irrational, so both
    ends are reported as float-mode scalars.
    """

    lower: Scalar = field(default_factory=lambda: Scalar.of_float(1 / 3))
    upper: Scalar = DIAGONAL_FIXED_POINT
    lower_open: bool = True
    upper_closed: bool = True


def diagonal_interval() -> DiagonalInterval:
    return DiagonalInterval()


@dataclass(frozen=True)
class BoundaryCurve:
    label: str
    points: Tuple[Tuple[float, float], ...]


def boundary_sample(count: int) -> List[BoundaryCurve]:
    """Sample the six bounding curves at `count` parameter values each.

    Every curve is parameterized over [0, 1] by the free coordinate and
    already lies inside the unit square, so clipping never discards points.
    """
    if count < 2:
        raise ValueError("need at least 2 sample points per curve")
    ts = [i / (count - 1) for i in range(count)]

    def clip(c: float) -> float:
        return min(1.0, max(0.0, c))

    curves = [
        BoundaryCurve("x=1", tuple((1.0, t) for t in ts)),
        BoundaryCurve("y=1", tuple((t, 1.0) for t in ts)),
        BoundaryCurve(
            "4x=3(1-y)^2", tuple((clip(0.75 * (1 - t) ** 2), t) for t in ts)
        ),
        BoundaryCurve(
            "4y=3(1-x)^2", tuple((t, clip(0.75 * (1 - t) ** 2)) for t in ts)
        ),
        BoundaryCurve("x=(1-y)^2", tuple((clip((1 - t) ** 2), t) for t in ts)),
        BoundaryCurve("y=(1-x)^2", tuple((t, clip((1 - t) ** 2)) for t in ts)),
    ]
    return curves


MARKERS = (
    ("endpoint-(1,0)", 1.0, 0.0),
    ("endpoint-(0,1)", 0.0, 1.0),
    ("limit-(1/3,1/3)", 1 / 3, 1 / 3),
    ("diagonal-fixed-point", DIAGONAL_FIXED_POINT.value, DIAGONAL_FIXED_POINT.value),
)


@dataclass(frozen=True)
class RenderSummary:
    path: str
    format: str
    resolution: int
    markers: Tuple[Tuple[str, float, float], ...]
    inside_mask: np.ndarray

    def cell_shaded(self, x: float, y: float) -> bool:
        """Whether the shading grid covers the cell containing (x, y)."""
        n = self.resolution
        i = min(n - 1, max(0, int(x * n)))
        j = min(n - 1, max(0, int(y * n)))
        return bool(self.inside_mask[j, i])


def _interior_mask(resolution: int, eps: float) -> np.ndarray:
    """Vectorized interior test on the grid of cell centers.

    Mirrors `membership` for float points away from the endpoints; a
    property test keeps the two in agreement.
    """
    centers = (np.arange(resolution) + 0.5) / resolution
    xs = centers[np.newaxis, :]
    ys = centers[:, np.newaxis]
    qx = 4 * xs - 3 * (1 - ys) ** 2
    qy = 4 * ys - 3 * (1 - xs) ** 2
    or_clause = (xs <= (1 - ys) ** 2) | (ys <= (1 - xs) ** 2)
    return (
        (1 - xs > eps) & (1 - ys > eps) & (qx > eps) & (qy > eps) & or_clause
    )


def _svg_rects(mask: np.ndarray) -> List[str]:
    """Run-length encode each grid row into shaded rectangles."""
    n = mask.shape[0]
    h = 1.0 / n
    rects = []
    for j in range(n):
        row = mask[j]
        i = 0
        while i < n:
            if row[i]:
                start = i
                while i < n and row[i]:
                    i += 1
                rects.append(
                    f'<rect x="{start * h:.8f}" y="{j * h:.8f}" '
                    f'width="{(i - start) * h:.8f}" height="{h:.8f}"/>'
                )
            else:
                i += 1
    return rects


def _svg_document(mask: np.ndarray, curves: Sequence[BoundaryCurve]) -> str:
    lines = [
        '<?xml version="1.0" encoding="UTF-8"?>',
        '<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        'width="640" height="640" viewBox="-0.05 -0.05 1.1 1.1">',
        '<rect x="-0.05" y="-0.05" width="1.1" height="1.1" fill="white"/>',
        # Flip to mathematical orientation: y grows upward.
        '<g transform="matrix(1 0 0 -1 0 1)">',
        '<g id="shading" fill="#9ecae1" stroke="none">',
    ]
    lines.extend(_svg_rects(mask))
    lines.append("</g>")
    lines.append(
        '<g id="boundary" fill="none" stroke="#1f3552" stroke-width="0.004">'
    )
    for index, curve in enumerate(curves):
        steps = " ".join(f"L {x:.6f} {y:.6f}" for x, y in curve.points[1:])
        x0, y0 = curve.points[0]
        lines.append(
            f'<path id="curve-{index}" class="boundary" '
            f'data-label="{curve.label}" d="M {x0:.6f} {y0:.6f} {steps}">'
            f"<title>{curve.label}</title></path>"
        )
    lines.append("</g>")
    lines.append('<g id="markers" fill="#b2182b" stroke="none">')
    for label, mx, my in MARKERS:
        lines.append(
            f'<circle class="marker" data-label="{label}" '
            f'cx="{mx!r}" cy="{my!r}" r="0.012"/>'
        )
    lines.append("</g>")
    lines.append("</g>")
    lines.append("</svg>")
    return "\n".join(lines)


def render_region(
    out: str,
    format: str = "svg",
    count: int = 512,
    resolution: int = 512,
    eps: float = 0.0,
) -> RenderSummary:
    """Write the region picture (SVG) or the boundary polylines (CSV).

    The SVG shades grid cells whose centers pass the interior test, draws
    the six labeled boundary curves, and marks the two endpoints, the
    excluded limit point, and the diagonal fixed point.
    """
    curves = boundary_sample(count)
    mask = _interior_mask(resolution, eps)
    if format == "svg":
        text = _svg_document(mask, curves)
    elif format == "csv":
        rows = ["curve_label,x,y"]
        for curve in curves:
            rows.extend(f"{curve.label},{x!r},{y!r}" for x, y in curve.points)
        text = "\n".join(rows) + "\n"
    else:
        raise ValueError(f"unknown render format {format!r}")
    with open(out, "w", encoding="utf-8") as handle:
        handle.write(text)
    return RenderSummary(
        path=out,
        format=format,
        resolution=resolution,
        markers=MARKERS,
        inside_mask=mask,
    )
