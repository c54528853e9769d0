"""Search for Duistermaat-Heckman functions of a hypothetical circle action.

Normalize the moment map so its minimum is 0. On an integral symplectic
4-manifold the critical values are then integers and the DH function is
a concave, piecewise-linear, nonnegative function on ``[0, L]`` with
integer slopes, breaking only at critical values. A profile is stored by
its values at ``0, 1, ..., L``.

Constraints used by the search:

* the minimum level is a sphere, so ``DH(0) >= 1``;
* the number of lattice points under the graph equals the Riemann-Roch
  number;
* there are at least ``min_critical`` critical values (3 rules out
  ``CP^2`` and sphere bundles over a sphere, whose ``b2`` is too small);
* an isolated fixed point at the top forces the last slope to have
  absolute value at most 1 (:func:`karshon_filter`).

Taken as assumptions, not re-derived: integer slopes at interior critical
levels, and that extremal level sets are points or spheres.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import BoundsTooSmall, InvalidProfile, VerificationFailed
from .invariants import REGULAR, euler_characteristic, rr_closed_form
from .rational import format_rational

ASSUMPTIONS = (
    "critical values are integers once the minimum is normalized to 0",
    "slopes are integers at every level, not only at the extrema",
    "the minimum level set is a sphere (the non-isolated extremum)",
    "fewer than 3 critical values would make the space CP^2 or an S^2-bundle over S^2",
    "at an isolated extremal fixed point the DH slope has absolute value at most 1",
)


@dataclass(frozen=True, order=True)
class DHProfile:
    """Candidate DH function given by its values at ``0..L``."""

    values: tuple[int, ...]

    def __post_init__(self):
        vals = tuple(int(v) for v in self.values)
        object.__setattr__(self, "values", vals)
        if len(vals) < 2:
            raise InvalidProfile("support must have positive length")
        if vals[0] < 1:
            raise InvalidProfile("DH(0) must be at least 1")
        if vals[-1] < 0:
            raise InvalidProfile("DH is nonnegative")
        if any(v <= 0 for v in vals[1:-1]):
            raise InvalidProfile("DH must be positive inside the moment interval")
        s = self.slopes
        if any(s[k + 1] > s[k] for k in range(len(s) - 1)):
            raise InvalidProfile(f"{vals} is not concave")

    @property
    def support(self) -> int:
        return len(self.values) - 1

    @property
    def slopes(self) -> tuple[int, ...]:
        """``s_k = v_k - v_{k-1}`` for ``k = 1..L``."""
        v = self.values
        return tuple(v[k] - v[k - 1] for k in range(1, len(v)))

    @property
    def top_is_isolated(self) -> bool:
        return self.values[-1] == 0

    def to_dict(self) -> dict:
        return {
            "values": [str(v) for v in self.values],
            "slopes": [str(s) for s in self.slopes],
            "critical_values": [str(c) for c in sorted(critical_values(self))],
            "enclosed": str(enclosed_lattice_points(self)),
        }


def critical_values(p: DHProfile) -> set[int]:
    """Endpoints plus every interior integer where the slope changes."""
    s = p.slopes
    crit = {0, p.support}
    crit.update(k for k in range(1, p.support) if s[k - 1] != s[k])
    return crit


def enclosed_lattice_points(p: DHProfile) -> int:
    """Integer points ``(x, y)`` with ``0 <= x <= L`` and ``0 <= y <= DH(x)``."""
    return sum(v + 1 for v in p.values)


@dataclass(frozen=True)
class DHConstraints:
    target_enclosed: int
    min_critical_values: int = 3
    max_support: int | None = None
    max_value: int | None = None

    def __post_init__(self):
        if self.target_enclosed < 1:
            raise BoundsTooSmall("target must be at least 1")
        if self.min_critical_values < 1:
            raise BoundsTooSmall("min_critical_values must be at least 1")
        for name in ("max_support", "max_value"):
            if getattr(self, name) is None:
                object.__setattr__(self, name, self.target_enclosed)
            elif getattr(self, name) < 1:
                raise BoundsTooSmall(f"{name} must be at least 1")


def _concave_sequences(c: DHConstraints, prune: bool) -> Iterator[tuple[int, ...]]:
    # Depth-first over value sequences; each column adds at least one point,
    # so with pruning a branch dies as soon as the running count reaches the target.
    target = c.target_enclosed

    def extend(vals: list[int], used: int):
        if len(vals) >= 2:
            yield tuple(vals)
            if vals[-1] == 0:
                return  # zero can only be the last value
        if len(vals) - 1 >= c.max_support:
            return
        if prune and used >= target:
            return
        hi = c.max_value
        if len(vals) >= 2:
            hi = min(hi, 2 * vals[-1] - vals[-2])
        if prune:
            hi = min(hi, target - used - 1)
        for v in range(hi + 1):
            vals.append(v)
            yield from extend(vals, used + v + 1)
            vals.pop()

    top = c.max_value if not prune else min(c.max_value, target - 1)
    for v0 in range(1, top + 1):
        yield from extend([v0], v0 + 1)


def enumerate_dh(c: DHConstraints, prune: bool = True) -> list[DHProfile]:
    """All valid profiles enclosing exactly ``target`` points with enough critical values.

    Exhaustive when ``max_support`` and ``max_value`` are at least the
    target (every column holds at least one point). Results are sorted
    lexicographically by their values.
    """
    if c.max_support < c.target_enclosed or c.max_value < c.target_enclosed:
        raise BoundsTooSmall(
            f"max_support and max_value must be >= target {c.target_enclosed} "
            "for the search to be exhaustive"
        )
    found = []
    for vals in _concave_sequences(c, prune):
        if sum(vals) + len(vals) != c.target_enclosed:
            continue
        p = DHProfile(vals)
        if len(critical_values(p)) >= c.min_critical_values:
            found.append(p)
    return sorted(found)


def karshon_filter(profiles: Iterable[DHProfile]) -> list[DHProfile]:
    """Drop profiles whose isolated top fixed point has a slope steeper than 1."""
    return [p for p in profiles if not p.top_is_isolated or abs(p.slopes[-1]) <= 1]


@dataclass
class NoCircleActionReport:
    passed: bool
    target: int
    min_critical: int
    euler: int
    non_toric: bool
    pre_filter: list[DHProfile]
    post_filter: list[DHProfile]
    notes: list[str] = field(default_factory=list)
    assumptions: tuple[str, ...] = ASSUMPTIONS

    def to_dict(self) -> dict:
        return {
            "passed": self.passed,
            "target": str(self.target),
            "min_critical": str(self.min_critical),
            "euler_characteristic": str(self.euler),
            "non_toric": self.non_toric,
            "pre_filter": [p.to_dict() for p in self.pre_filter],
            "post_filter": [p.to_dict() for p in self.post_filter],
            "notes": self.notes,
            "assumptions": list(self.assumptions),
        }


def verify_no_circle_action(
    target: int | None = None, min_critical: int = 3, strict: bool = True
) -> NoCircleActionReport:
    """Check that no DH function fits the regular pentagon space.

    With the defaults the target is the Riemann-Roch number of the regular
    pentagon space (6). The report also records the non-toric check: a
    toric structure would give a lattice heptagon, which has at least 7
    lattice points, one more than the Riemann-Roch number.

    ``strict`` raises :class:`VerificationFailed` when candidates survive;
    pass ``strict=False`` for what-if runs with overridden parameters.
    """
    rr = rr_closed_form(REGULAR)
    euler = euler_characteristic(REGULAR)
    non_toric = euler > rr
    if target is None:
        target = int(rr)
    pre = enumerate_dh(DHConstraints(target, min_critical))
    post = karshon_filter(pre)
    notes = []
    if target != rr:
        verdict = "admits candidates" if post else "admits no candidates"
        notes.append(f"hypothetical RR={target} {verdict} (actual RR is {format_rational(rr)})")
    if min_critical != 3:
        notes.append(f"critical-value bound overridden to {min_critical}")
    report = NoCircleActionReport(
        passed=not post and non_toric,
        target=target,
        min_critical=min_critical,
        euler=euler,
        non_toric=non_toric,
        pre_filter=pre,
        post_filter=post,
        notes=notes,
    )
    if strict and not report.passed:
        raise VerificationFailed(
            f"{len(post)} DH profile(s) survive: {[p.values for p in post]}", report
        )
    return report
