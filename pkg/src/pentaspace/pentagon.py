"""Edge-length tuples of pentagon spaces and their bending-flow moment polytopes.

Label the pentagon's vertices A..E and cut it along the diagonals AC and
AD. The lengths ``(d1, d2)`` of those diagonals generate two commuting
circle actions when ``a1 != a2`` and ``a4 != a5``; the image of
``(d1, d2)`` is cut out by the triangle inequalities of ABC, ADE and ACD.
"""

from __future__ import annotations

import math

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Iterable

from .errors import NotNearlyRegular, NotPositive, NotToricGeneric, ShapeAssertion
from .geometry import ConvexPolygon, HalfPlane, intersect_forms
from .rational import Vec2, as_rational, canonical, format_rational

CORNERS = ("LL", "HL", "LH", "HH")
_PAIRS = tuple(combinations(range(5), 2))


class EdgeLengths(tuple):
    """Five positive rational edge lengths ``(a1, ..., a5)``.

    The same tuple is also read as the coordinates of a symplectic class in
    the standard 5-dimensional basis of second cohomology.
    """

    def __new__(cls, values: Iterable):
        vals = tuple(Fraction(v) if type(v) is int else as_rational(v) for v in values)
        if len(vals) != 5:
            raise ValueError(f"need exactly 5 edge lengths, got {len(vals)}")
        if any(v.numerator <= 0 for v in vals):
            raise NotPositive(f"edge lengths must be positive: {_fmt(vals)}")
        den = math.lcm(*(v.denominator for v in vals))
        # positive integer multiple of the tuple; predicates only need signs
        return cls._trusted(vals, tuple(v.numerator * (den // v.denominator) for v in vals))

    @classmethod
    def _trusted(cls, vals: tuple, scaled: tuple) -> EdgeLengths:
        self = super().__new__(cls, vals)
        self._scaled = scaled
        return self

    @classmethod
    def parse(cls, texts: Iterable[str]) -> EdgeLengths:
        return cls(texts)

    @property
    def total(self) -> Fraction:
        return sum(self, Fraction(0))

    @property
    def is_integral(self) -> bool:
        return all(v.denominator == 1 for v in self)

    def swap(self, i: int, j: int) -> EdgeLengths:
        vals, scaled = list(self), list(self._scaled)
        vals[i], vals[j] = vals[j], vals[i]
        scaled[i], scaled[j] = scaled[j], scaled[i]
        return EdgeLengths._trusted(tuple(vals), tuple(scaled))

    def scaled(self, t) -> EdgeLengths:
        return EdgeLengths(v * t for v in self)

    def __repr__(self):
        return f"EdgeLengths({_fmt(self)})"


def _fmt(vals) -> str:
    return ", ".join(format_rational(v) for v in vals)


def pair_slacks(a: EdgeLengths) -> dict[tuple[int, int], Fraction]:
    """``(sum of the other three) - (a_i + a_j)`` for each pair ``i < j``."""
    total = a.total
    return {(i, j): total - 2 * (a[i] + a[j]) for i, j in _PAIRS}


def _scaled_slacks(a: EdgeLengths) -> list[int]:
    v = a._scaled
    total = sum(v)
    return [total - 2 * (v[i] + v[j]) for i, j in _PAIRS]


def is_smooth(a: EdgeLengths) -> bool:
    """No pair of edges has the same total length as the other three."""
    return all(s != 0 for s in _scaled_slacks(a))


def is_nearly_regular(a: EdgeLengths) -> bool:
    """Every pair of edges is strictly shorter than the other three together."""
    return all(s > 0 for s in _scaled_slacks(a))


def is_toric_generic(a: EdgeLengths) -> bool:
    v = a._scaled
    return v[0] != v[1] and v[3] != v[4]


@dataclass(frozen=True)
class MomentPolytope:
    """Image of the diagonal-length map, with normalization metadata.

    ``lengths`` is the tuple after swapping so that ``a1 > a2`` and
    ``a4 > a5``; ``swapped`` records which of the two swaps happened.
    ``cut_corners`` names the corners of the bounding rectangle
    ``[a1-a2, a1+a2] x [a4-a5, a4+a5]`` that are not polygon vertices,
    using L/H for the low/high end of d1 then d2.
    """

    polygon: ConvexPolygon
    lengths: EdgeLengths
    swapped: tuple[bool, bool]
    cut_corners: frozenset[str]

    @property
    def rectangle(self) -> dict[str, Vec2]:
        return {k: Vec2(*p) for k, p in _rectangle(self.lengths).items()}

    @property
    def vertices(self) -> tuple[Vec2, ...]:
        return self.polygon.vertices


def _rectangle(a: EdgeLengths) -> dict[str, tuple]:
    a1, a2, _, a4, a5 = (canonical(v) for v in a)
    lo1, hi1, lo2, hi2 = a1 - a2, a1 + a2, a4 - a5, a4 + a5
    return {"LL": (lo1, lo2), "HL": (hi1, lo2), "LH": (lo1, hi2), "HH": (hi1, hi2)}


def normalize(a: EdgeLengths) -> tuple[EdgeLengths, tuple[bool, bool]]:
    """Swap so that ``a1 >= a2`` and ``a4 >= a5``."""
    s12 = a[0] < a[1]
    s45 = a[3] < a[4]
    if s12:
        a = a.swap(0, 1)
    if s45:
        a = a.swap(3, 4)
    return a, (s12, s45)


def _moment_forms(a: EdgeLengths) -> list[tuple[int, int, int]]:
    # the seven inequalities multiplied through by the common denominator
    s1, s2, s3, s4, s5 = a._scaled
    t = s1 * a[0].denominator // a[0].numerator  # the common denominator
    return [
        (t, 0, s1 - s2),           # d1 >= a1 - a2
        (-t, 0, -(s1 + s2)),       # d1 <= a1 + a2
        (0, t, s4 - s5),           # d2 >= a4 - a5
        (0, -t, -(s4 + s5)),       # d2 <= a4 + a5
        (t, t, s3),                # d1 + d2 >= a3
        (t, -t, -s3),              # d2 <= d1 + a3
        (-t, t, -s3),              # d1 <= d2 + a3
    ]


def moment_half_planes(a: EdgeLengths) -> list[HalfPlane]:
    """The seven triangle-inequality half-planes in the (d1, d2) plane.

    Assumes ``a`` is already normalized (``a1 > a2``, ``a4 > a5``).
    """
    a1, a2, a3, a4, a5 = (canonical(v) for v in a)
    return [
        HalfPlane(1, 0, a1 - a2),
        HalfPlane(-1, 0, -(a1 + a2)),
        HalfPlane(0, 1, a4 - a5),
        HalfPlane(0, -1, -(a4 + a5)),
        HalfPlane(1, 1, a3),
        HalfPlane(1, -1, -a3),
        HalfPlane(-1, 1, -a3),
    ]


def moment_polytope(a: EdgeLengths) -> MomentPolytope:
    """Moment polytope of a nearly-regular, toric-generic pentagon space.

    Raises
    ------
    NotNearlyRegular, NotToricGeneric
        If the tuple is outside the domain.
    ShapeAssertion
        If the result is not a heptagon with three rectangle corners cut.
    """
    a = a if isinstance(a, EdgeLengths) else EdgeLengths(a)
    if not is_nearly_regular(a):
        raise NotNearlyRegular(f"{a!r} is not nearly-regular")
    if not is_toric_generic(a):
        raise NotToricGeneric(f"{a!r} is not toric-generic (needs a1 != a2 and a4 != a5)")
    norm, swapped = normalize(a)
    polygon = intersect_forms(_moment_forms(norm))
    if len(polygon) != 7:
        raise ShapeAssertion(f"expected 7 vertices, got {len(polygon)} for {a!r}")
    verts = {(v.x, v.y) for v in polygon.vertices}
    cut = frozenset(name for name, p in _rectangle(norm).items() if p not in verts)
    if len(cut) != 3:
        raise ShapeAssertion(f"expected 3 cut corners, got {sorted(cut)} for {a!r}")
    return MomentPolytope(polygon, norm, swapped, cut)


def nearly_regular_tuples(max_entry: int, min_entry: int = 1, toric_generic: bool = True):
    """Yield every integral nearly-regular tuple with entries in ``[min_entry, max_entry]``.

    Lexicographic order. Nearly-regular means ``2 (a_i + a_j) < total`` for
    every pair, so once ``a1..a4`` are fixed the admissible ``a5`` form an
    open interval and no candidate has to be tested one by one.
    """
    rng = range(min_entry, max_entry + 1)
    for a1, a2, a3, a4 in product(rng, repeat=4):
        if toric_generic and a1 == a2:
            continue
        four = (a1, a2, a3, a4)
        s4 = a1 + a2 + a3 + a4
        m1, m2 = sorted(four)[-2:][::-1]
        # pairs without a5 need a5 > 2 (m1 + m2) - s4; pairs with a5 need a5 < s4 - 2 m1
        lo = max(min_entry, 2 * (m1 + m2) - s4 + 1)
        hi = min(max_entry, s4 - 2 * m1 - 1)
        for a5 in range(lo, hi + 1):
            if toric_generic and a5 == a4:
                continue
            yield EdgeLengths((a1, a2, a3, a4, a5))


def generic_perturbation(a: EdgeLengths) -> EdgeLengths:
    """A nearby toric-generic tuple in the same nearly-regular chamber.

    Only the coordinates involved in a tie (``a1 == a2`` or ``a4 == a5``)
    move, each by a quarter of the smallest pair slack, which changes any
    slack by at most half of it.
    """
    if not is_nearly_regular(a):
        raise NotNearlyRegular(f"{a!r} is not nearly-regular")
    if is_toric_generic(a):
        return a
    eps = min(pair_slacks(a).values()) / 4
    vals = list(a)
    if vals[0] == vals[1]:
        vals[0] += eps
    if vals[3] == vals[4]:
        vals[3] += eps
    return EdgeLengths(vals)
