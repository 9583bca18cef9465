"""Acceptance suite: one test per contractual guarantee, one line printed each.

Run with ``pytest -s tests/test_acceptance.py`` to see the per-item report
lines; without ``-s`` pytest captures them.  Every comparison is exact
rational arithmetic — there are no tolerances anywhere, only equality —
and the stated time budgets are asserted, not just hoped for.
"""

import functools
import itertools
import subprocess
import sys
import time
from fractions import Fraction

from malcev5.alternative import AElement
from malcev5.checks import run_suite
from malcev5.core import UElement
from malcev5.envelope import (
    associator_u,
    clear_memos,
    mul_cde_closed,
    mul_u,
    mul_u_closed,
)

U = UElement.from_monomial


def criterion(number, text):
    """Print a single PASS/FAIL report line around the wrapped test body."""

    def wrap(fn):
        @functools.wraps(fn)
        def run():
            start = time.perf_counter()
            try:
                fn()
            except BaseException:
                elapsed = time.perf_counter() - start
                print(f"acceptance {number:02d}: FAIL ({elapsed:.2f}s) {text}", flush=True)
                raise
            elapsed = time.perf_counter() - start
            print(f"acceptance {number:02d}: PASS ({elapsed:.2f}s) {text}", flush=True)

        return run

    return wrap


def cde_monomials(bound):
    out = []
    for k, l, m in itertools.product(range(bound + 1), repeat=3):
        if k + l + m <= bound:
            out.append((0, 0, k, l, m))
    return out


@criterion(1, "power-associativity witness (abd, abd, abd) is exact, under 1 s")
def test_01_power_associativity_witness():
    clear_memos()
    abd = U((1, 1, 0, 1, 0))
    start = time.perf_counter()
    got = associator_u(abd, abd, abd)
    elapsed = time.perf_counter() - start
    want = UElement(
        {
            (1, 1, 1, 2, 1): Fraction(1, 6),
            (1, 1, 0, 1, 2): Fraction(-1, 6),
            (0, 0, 2, 2, 1): Fraction(-1, 6),
            (0, 0, 1, 1, 2): Fraction(11, 36),
            (0, 0, 0, 0, 3): Fraction(-1, 12),
        }
    )
    assert got == want
    assert elapsed < 1.0, f"witness took {elapsed:.3f}s"


@criterion(2, "alternator witnesses (ab,ab,d) and (bd,bd,a^2) are exact, under 1 s")
def test_02_alternator_witnesses():
    clear_memos()
    start = time.perf_counter()
    ab, d = U((1, 1, 0, 0, 0)), U((0, 0, 0, 1, 0))
    first = associator_u(ab, ab, d)
    bd, a2 = U((0, 1, 0, 1, 0)), U((2, 0, 0, 0, 0))
    second = associator_u(bd, bd, a2)
    elapsed = time.perf_counter() - start
    assert first == Fraction(-1, 6) * U((0, 0, 1, 0, 1))
    assert second == Fraction(1, 18) * U((0, 0, 0, 0, 2))
    assert elapsed < 1.0, f"alternators took {elapsed:.3f}s"


@criterion(3, "closed form, recursions, and operators agree on all 252^2 pairs, under 5 min")
def test_03_triple_route_agreement():
    report = run_suite("oracle", max_degree=5, samples=1000, seed=0)
    assert report.passed, report.render()
    assert report.duration < 300.0, f"oracle suite took {report.duration:.1f}s"


@criterion(4, "c,d,e corner: single-sum product to degree 6, associative to degree 4")
def test_04_cde_subalgebra():
    for x in cde_monomials(6):
        for y in cde_monomials(6):
            assert mul_cde_closed(x, y) == mul_u_closed(x, y), (x, y)
    small = [U(m) for m in cde_monomials(4)]
    for xe in small:
        for ye in small:
            xy = mul_u(xe, ye)
            for ze in small:
                assert mul_u(xy, ze) == mul_u(xe, mul_u(ye, ze))


@criterion(5, "operator realization: faithful to degree 6, commutator table, straightening")
def test_05_operator_suite():
    report = run_suite("operators", max_degree=5, samples=1000, seed=0)
    assert report.passed, report.render()


@criterion(6, "nucleus relations to degree 4 and the Malcev identity on seeded triples")
def test_06_nucleus_and_malcev():
    nucleus = run_suite("nucleus", max_degree=5, samples=1000, seed=0)
    assert nucleus.passed, nucleus.render()
    malcev = run_suite("malcev", max_degree=5, samples=200, seed=0)
    assert malcev.passed, malcev.render()


@criterion(7, "projection is a homomorphism on all monomial pairs of degree <= 5")
def test_07_quotient_homomorphism():
    report = run_suite("homomorphism", max_degree=5, samples=1000, seed=0)
    assert report.passed, report.render()


@criterion(8, "quotient is alternative on 1000 seeded elements; closed associator to exponent 3")
def test_08_alternativity():
    report = run_suite("alternative", max_degree=5, samples=1000, seed=0)
    assert report.passed, report.render()


@criterion(9, "degree-1 commutators and ideal membership certify the embedding")
def test_09_speciality():
    report = run_suite("special", max_degree=5, samples=1000, seed=0)
    assert report.passed, report.render()


def run_cli(*argv):
    proc = subprocess.run(
        [sys.executable, "-m", "malcev5.cli", *argv],
        capture_output=True,
        timeout=600,
    )
    return proc.returncode, proc.stdout, proc.stderr


@criterion(10, "command-line goldens print byte-identically across repeated runs")
def test_10_cli_goldens():
    goldens = [
        (
            ("assoc", "abd", "abd", "abd"),
            0,
            b"1/6 abcd^2e - 1/6 abde^2 - 1/6 c^2d^2e + 11/36 cde^2 - 1/12 e^3\n",
        ),
        (("assoc", "--algebra", "a", "ab", "ab", "d"), 0, b"0\n"),
        (("check", "special"), 0, b"special: PASS (max-degree=5, samples=1000, seed=0)\n"),
    ]
    for argv, want_code, want_out in goldens:
        code1, out1, _ = run_cli(*argv)
        code2, out2, _ = run_cli(*argv)
        assert code1 == code2 == want_code, (argv, code1, code2)
        assert out1 == want_out, (argv, out1)
        assert out2 == out1, f"stdout differs across runs of {argv}"
