"""Acceptance gate: the ten headline criteria, one line each.

Each criterion delegates to the corresponding named suite; a suite is a
certificate whose rows are the individual checks.  On failure the full
certificate is printed so the failing row is visible."""

import time

import pytest

from catbench.suites import run_suite

CRITERIA = [
    ("laws", "1. monad laws hold for every bundled monad over all probes"),
    ("cartesian", "2. cartesianness certificates; hypercartesian iff groupoid"),
    ("kleisli", "3. Kleisli calculus: E-maps, pullbacks, cancellability, isos"),
    ("carac", "4. G-algebra structures match groupoid structures, with round trips"),
    ("mmain", "5. T-categories translate to Kleisli categories and back"),
    ("dfib", "6. slice-monad algebras match discrete fibrations"),
    ("mmmain", "7. G-categories with cartesian 0-leg are plain categories"),
    ("tx-tcat", "8. functors as T-categories; T-groupoids track groupoid domains"),
    ("operad", "9. the two-cell operad and its slice monad of algebras"),
    ("structural", "10. shifts, coreflection, tbar, and the unit equalizer"),
]


@pytest.mark.parametrize("suite,label", CRITERIA, ids=[c[0] for c in CRITERIA])
def test_acceptance(suite, label):
    start = time.monotonic()
    cert = run_suite(suite)
    elapsed = time.monotonic() - start
    verdict = "PASS" if cert.ok else "FAIL"
    print(f"{verdict} {label} ({elapsed:.1f}s)")
    if not cert.ok:
        print("\n".join(cert.lines()))
    assert elapsed < 60.0, f"suite {suite} exceeded the 60s budget"
    assert cert.ok, f"criterion failed: {label}"
