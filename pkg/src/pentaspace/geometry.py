"""Convex rational polygons in the plane and lattice-point counting.

Two independent routes to the number of lattice points in a lattice
polygon live here: :func:`pick_count` (area and boundary gcds) and
:func:`lattice_count_brute` (column-by-column scan). Boundary points are
counted as inside by both.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Iterator

from .errors import EmptyOrUnbounded, GeometryError, NonLatticePolygon
from .rational import Vec2, canonical


@dataclass(frozen=True)
class HalfPlane:
    """The closed region ``a*x + b*y >= c``."""

    a: Fraction | int
    b: Fraction | int
    c: Fraction | int
    # (A, B, C) integers with A x + B y >= C the same half-plane
    integer_form: tuple[int, int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        a, b, c = self.a, self.b, self.c
        if not (type(a) is int and type(b) is int and type(c) is int):
            a, b, c = canonical(a), canonical(b), canonical(c)
        if a == 0 and b == 0:
            raise ValueError("half-plane normal must be nonzero")
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        if type(a) is int and type(b) is int and type(c) is int:
            form = (a, b, c)
        else:
            den = math.lcm(a.denominator, b.denominator, c.denominator)
            form = tuple(v.numerator * (den // v.denominator) for v in (a, b, c))
        object.__setattr__(self, "integer_form", form)

    @property
    def normal(self) -> Vec2:
        return Vec2(self.a, self.b)

    def value(self, p: Vec2) -> Fraction:
        return self.a * p.x + self.b * p.y - self.c

    def contains(self, p: Vec2) -> bool:
        A, B, C = self.integer_form
        # clear the point's denominators; d > 0 keeps the inequality direction
        d = p.x.denominator * p.y.denominator
        return (
            A * p.x.numerator * p.y.denominator + B * p.y.numerator * p.x.denominator >= C * d
        )

    def boundary_intersection(self, other: HalfPlane) -> Vec2 | None:
        """Meet of the two boundary lines, or None when they are parallel."""
        a1, b1, c1 = self.integer_form
        a2, b2, c2 = other.integer_form
        det = a1 * b2 - b1 * a2
        if det == 0:
            return None
        return Vec2(Fraction(c1 * b2 - b1 * c2, det), Fraction(a1 * c2 - c1 * a2, det))


def _turn(o: Vec2, p: Vec2, q: Vec2) -> Fraction:
    return (p.x - o.x) * (q.y - o.y) - (p.y - o.y) * (q.x - o.x)


@dataclass(frozen=True)
class ConvexPolygon:
    """Strictly convex polygon with rational vertices in counterclockwise order.

    Construction validates the invariants: at least three vertices, every
    corner a strict left turn, and the vertices fanning counterclockwise
    around the first one (which rules out star polygons).
    """

    vertices: tuple[Vec2, ...]

    def __post_init__(self):
        verts = self.vertices
        if not all(type(v) is Vec2 for v in verts):
            verts = tuple(v if isinstance(v, Vec2) else Vec2(*v) for v in verts)
        object.__setattr__(self, "vertices", tuple(verts))
        n = len(verts)
        if n < 3:
            raise GeometryError(f"polygon needs at least 3 vertices, got {n}")
        for i in range(n):
            if _turn(verts[i - 1], verts[i], verts[(i + 1) % n]) <= 0:
                raise GeometryError("vertices are not strictly convex and counterclockwise")
        v0 = verts[0]
        for i in range(1, n - 1):
            if _turn(v0, verts[i], verts[i + 1]) <= 0:
                raise GeometryError("vertex sequence winds more than once")

    def __len__(self):
        return len(self.vertices)

    def __iter__(self):
        return iter(self.vertices)

    @property
    def is_lattice(self) -> bool:
        return all(v.is_integral for v in self.vertices)

    def edges(self) -> Iterator[tuple[Vec2, Vec2]]:
        n = len(self.vertices)
        for i in range(n):
            yield self.vertices[i], self.vertices[(i + 1) % n]

    @cached_property
    def _edge_planes(self) -> tuple[HalfPlane, ...]:
        planes = []
        for p, q in self.edges():
            d = q - p
            planes.append(HalfPlane(-d.y, d.x, -d.y * p.x + d.x * p.y))
        return tuple(planes)

    def edge_half_planes(self) -> list[HalfPlane]:
        """One supporting half-plane per edge, interior on the left."""
        return list(self._edge_planes)

    def contains(self, p: Vec2) -> bool:
        return all(h.contains(p) for h in self.edge_half_planes())

    def vertex_set(self) -> frozenset[Vec2]:
        return frozenset(self.vertices)

    def normalized(self) -> ConvexPolygon:
        """Same polygon, rotated to start at its lexicographically smallest vertex."""
        k = self.vertices.index(min(self.vertices))
        return ConvexPolygon(self.vertices[k:] + self.vertices[:k])


def _cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def _hull(pts: list) -> list:
    # pts sorted and distinct; returns the strictly convex ccw hull
    def chain(seq):
        out: list = []
        for p in seq:
            while len(out) >= 2 and _cross(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    return chain(pts)[:-1] + chain(reversed(pts))[:-1]


def _from_hull(hull: list) -> ConvexPolygon:
    # monotone-chain output is strictly convex and ccw already; skip revalidation
    P = object.__new__(ConvexPolygon)
    object.__setattr__(P, "vertices", tuple(Vec2(x, y) for x, y in hull))
    return P


def convex_hull(points: Iterable) -> ConvexPolygon:
    """Convex hull by Andrew's monotone chain; collinear points are dropped.

    The result starts at the lexicographically smallest vertex. Raises
    :class:`EmptyOrUnbounded` when the points span no area.
    """
    pts = sorted({(canonical(x), canonical(y)) for x, y in points})
    if len(pts) < 3:
        raise EmptyOrUnbounded(f"{len(pts)} distinct points span no area")
    hull = _hull(pts)
    if len(hull) < 3:
        raise EmptyOrUnbounded("points are collinear")
    return _from_hull(hull)


def _ratio(num: int, den: int) -> Fraction | int:
    q, r = divmod(num, den)
    return q if r == 0 else Fraction(num, den)


def _is_unbounded(forms: list[tuple[int, int, int]]) -> bool:
    # A nonzero recession cone always has a boundary ray orthogonal to some normal.
    if not forms:
        return True
    for a, b, _ in forms:
        for dx, dy in ((-b, a), (b, -a)):
            for ga, gb, _ in forms:
                if ga * dx + gb * dy < 0:
                    break
            else:
                return True
    return False


def intersect_forms(forms: list[tuple[int, int, int]]) -> ConvexPolygon:
    """Bounded intersection of integer half-planes ``A x + B y >= C``.

    Every pair of boundary lines is intersected and the meeting points
    lying in all half-planes are kept; their hull is the region. This is
    cubic in the number of planes, which is fine for the handful used here.
    Redundant planes simply contribute no vertices.
    """
    if _is_unbounded(forms):
        raise EmptyOrUnbounded("intersection is unbounded")
    candidates = set()
    for i, (a1, b1, c1) in enumerate(forms):
        for a2, b2, c2 in forms[i + 1:]:
            D = a1 * b2 - b1 * a2
            if D == 0:
                continue
            X, Y = c1 * b2 - b1 * c2, a1 * c2 - c1 * a2
            if D < 0:
                X, Y, D = -X, -Y, -D
            for A, B, C in forms:
                if A * X + B * Y < C * D:
                    break
            else:
                candidates.add((_ratio(X, D), _ratio(Y, D)))
    hull = _hull(sorted(candidates)) if len(candidates) >= 3 else []
    if len(hull) < 3:
        raise EmptyOrUnbounded("intersection has empty interior")
    return _from_hull(hull)


def intersect_half_planes(planes: Iterable[HalfPlane]) -> ConvexPolygon:
    """Bounded intersection of closed half-planes as a convex polygon."""
    return intersect_forms([h.integer_form for h in planes])


def twice_area(P: ConvexPolygon) -> Fraction:
    return sum((p.cross(q) for p, q in P.edges()), Fraction(0))


def area(P: ConvexPolygon) -> Fraction:
    """Exact shoelace area."""
    return twice_area(P) / 2


def _require_lattice(P: ConvexPolygon):
    if not P.is_lattice:
        raise NonLatticePolygon("polygon has non-integral vertices")


def boundary_lattice_count(P: ConvexPolygon) -> int:
    """Lattice points on the boundary: the sum over edges of gcd(|dx|, |dy|)."""
    _require_lattice(P)
    total = 0
    for p, q in P.edges():
        d = q - p
        total += math.gcd(abs(d.x.numerator), abs(d.y.numerator))
    return total


def column_range(P: ConvexPolygon, x: int) -> tuple[int, int] | None:
    """Integer y-range ``(lo, hi)`` of the polygon on the vertical line at ``x``."""
    lo: int | None = None
    hi: int | None = None
    for h in P._edge_planes:
        A, B, C = h.integer_form
        rhs = C - A * x
        if B > 0:
            bound = -(-rhs // B)  # ceil(rhs / B)
            lo = bound if lo is None else max(lo, bound)
        elif B < 0:
            bound = rhs // B  # floor(rhs / B) when dividing by a negative
            hi = bound if hi is None else min(hi, bound)
        elif A * x < C:
            return None
    if lo > hi:
        return None
    return lo, hi


def _x_span(P: ConvexPolygon) -> range:
    xs = [v.x for v in P.vertices]
    return range(math.ceil(min(xs)), math.floor(max(xs)) + 1)


def lattice_points(P: ConvexPolygon) -> Iterator[Vec2]:
    """All integer points of the closed polygon, column by column."""
    for x in _x_span(P):
        r = column_range(P, x)
        if r is not None:
            for y in range(r[0], r[1] + 1):
                yield Vec2(x, y)


def lattice_count_brute(P: ConvexPolygon) -> int:
    """Count integer points in the closed polygon by scanning columns.

    Works for any rational polygon; does not use area or boundary data.
    """
    total = 0
    for x in _x_span(P):
        r = column_range(P, x)
        if r is not None:
            total += r[1] - r[0] + 1
    return total


def pick_count(P: ConvexPolygon) -> int:
    """Lattice points of a lattice polygon as area + boundary/2 + 1."""
    _require_lattice(P)
    n = area(P) + Fraction(boundary_lattice_count(P), 2) + 1
    if n.denominator != 1:
        raise GeometryError(f"Pick sum {n} is not an integer")
    return n.numerator
