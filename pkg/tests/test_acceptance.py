"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line.

Runtime bounds use the best of a few repetitions so that scheduler noise
on a shared machine does not decide the outcome.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from conftest import ACCEPTANCE_LINES
from pentaspace.cli import run
from pentaspace.errors import EmptyOrUnbounded
from pentaspace.geometry import area, convex_hull, lattice_count_brute, pick_count
from pentaspace.invariants import (
    MONOMIALS,
    RRPoly,
    euler_characteristic,
    fit_rr_polynomial,
    moment_lattice_count,
    rr_closed_form,
    sample_tuples,
    symplectic_volume,
)
from pentaspace.pentagon import moment_polytope, nearly_regular_tuples


def best_of(fn, repeat=3):
    times, result = [], None
    for _ in range(repeat):
        start = time.perf_counter()
        result = fn()
        times.append(time.perf_counter() - start)
    return result, min(times)


@contextmanager
def criterion(number, label):
    detail = {}
    try:
        yield detail
    except BaseException as exc:
        ACCEPTANCE_LINES.append(f"[{number}] FAIL {label}: {exc!r}".splitlines()[0])
        print(ACCEPTANCE_LINES[-1])
        raise
    extra = ", ".join(f"{k}={v}" for k, v in detail.items())
    ACCEPTANCE_LINES.append(f"[{number}] PASS {label}" + (f" ({extra})" if extra else ""))
    print(ACCEPTANCE_LINES[-1])


def expected_coefficient(m):
    degree = sum(m)
    if degree == 0:
        return Fraction(1)
    if degree == 1:
        return Fraction(1, 2)
    return Fraction(-3, 2) if max(m) == 2 else Fraction(1)


@pytest.fixture(scope="module")
def sweep():
    return list(nearly_regular_tuples(10))


def test_1_regular_pentagon_rr():
    with criterion(1, "invariants 1 1 1 1 1 gives rr = 6 in under 1 ms") as d:
        argv = ["invariants", "1", "1", "1", "1", "1"]
        run(argv)  # parser construction and imports are one-off costs
        report, t = best_of(lambda: run(argv), repeat=20)
        assert report.exit_status == 0
        assert report.results["rr"] == "6"
        assert rr_closed_form((1, 1, 1, 1, 1)) == 6
        d["ms"] = f"{t * 1e3:.3f}"
        assert t < 1e-3


def test_2_euler_characteristic(sweep):
    with criterion(2, "every sweep polytope (entries <= 10) is a heptagon; euler = 7") as d:
        def heptagons():
            return sum(len(moment_polytope(a).polygon) == 7 for a in nearly_regular_tuples(10))

        n7, t = best_of(heptagons)
        assert n7 == len(sweep) == 5560
        assert all(euler_characteristic(a) == 7 for a in sweep)
        for argv in (["1", "1", "1", "1", "1"], ["3", "2", "3", "3", "2"], ["4", "3", "4", "4", "3"]):
            report = run(["invariants", *argv])
            assert report.results["euler"] == "7", argv
            assert report.results["betti"] == ["1", "5", "1"]
        d["tuples"] = n7
        d["s"] = f"{t:.3f}"
        assert t < 1.0


def test_3_triple_oracle_lattice_agreement():
    with criterion(3, "brute = Pick = RR on 200 random tuples with entries <= 12") as d:
        pool = list(nearly_regular_tuples(12))
        picked = random.Random(2024).sample(pool, 200)

        def agree():
            bad = []
            for a in picked:
                P = moment_polytope(a).polygon
                if not (lattice_count_brute(P) == pick_count(P) == rr_closed_form(a)):
                    bad.append(a)
                if area(P) != symplectic_volume(a):
                    bad.append(a)
            return bad

        bad, t = best_of(agree)
        assert bad == []
        d["s"] = f"{t:.3f}"
        assert t < 5.0


def test_4_polynomial_determination():
    with criterion(4, "fit on 30 samples recovers the RR coefficients exactly") as d:
        tuples = sample_tuples(30, seed=0)

        def fit():
            return fit_rr_polynomial([(a, moment_lattice_count(a)) for a in tuples])

        poly, t = best_of(fit)
        for m in MONOMIALS:
            assert poly.coefficient(m) == expected_coefficient(m), m
        assert poly == RRPoly.closed_form()
        d["s"] = f"{t:.3f}"
        assert t < 1.0


def test_5_volume_identities(sweep):
    with criterion(5, "volume = polytope area on the sweep and = degree-2 part of the fit") as d:
        for a in sweep:
            assert symplectic_volume(a) == area(moment_polytope(a).polygon), a
        tuples = sample_tuples(30, seed=0)
        poly = fit_rr_polynomial([(a, moment_lattice_count(a)) for a in tuples])
        quadratic = poly.homogeneous_part(2)
        for a in sweep[::97] + tuples:
            assert quadratic(a) == symplectic_volume(a), a
        d["tuples"] = len(sweep)


def test_6_no_circle_action():
    with criterion(6, "dh 6/3 gives only (1,2,0), none survive the filter; verify exits 0") as d:
        argv = ["dh", "--target", "6", "--min-critical", "3"]
        report, t = best_of(lambda: run(argv))
        pre = [tuple(p["values"]) for p in report.results["pre_filter"]]
        assert pre == [("1", "2", "0")]
        assert report.results["post_filter"] == []
        verify, tv = best_of(lambda: run(["verify"]))
        assert verify.exit_status == 0
        d["dh_ms"] = f"{t * 1e3:.1f}"
        d["verify_ms"] = f"{tv * 1e3:.1f}"
        assert t < 0.1 and tv < 0.1


def test_7_negative_controls():
    with criterion(7, "dh 7/3 and dh 6/2 both leave candidates after the filter") as d:
        for target, crit in ((7, 3), (6, 2)):
            argv = ["dh", "--target", str(target), "--min-critical", str(crit)]
            report, t = best_of(lambda: run(argv))
            assert report.results["post_filter"], argv
            d[f"{target}/{crit}_ms"] = f"{t * 1e3:.1f}"
            assert t < 0.1


def test_8_pick_on_random_hulls():
    with criterion(8, "Pick = brute count on 600 random lattice hulls") as d:
        rng = random.Random(8)
        polys = []
        while len(polys) < 600:
            k = rng.randint(3, 12)
            r = rng.choice((3, 10, 40))
            pts = [(rng.randint(-r, r), rng.randint(-r, r)) for _ in range(k)]
            try:
                polys.append(convex_hull(pts))
            except EmptyOrUnbounded:
                continue

        def agree():
            return [P for P in polys if pick_count(P) != lattice_count_brute(P)]

        bad, t = best_of(agree)
        assert bad == []
        d["s"] = f"{t:.3f}"
        assert t < 10.0
