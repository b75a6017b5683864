"""Acceptance criteria 1-10 at full trial counts, exact equality throughout.

Each criterion prints one PASS/FAIL line.  Run directly for the table alone:

    python -m tests.test_acceptance
"""
import pytest

from ccsym.suites import DEFAULT_SEED, SUITES

TITLES = {
    1: "determinant closed form, p,q in [1,6], F5[e]/(e^4) and F2[e]/(e^3)",
    2: "determinant oracle = closed formula, 200 pairs x 3 rings",
    3: "antisymmetry and bimultiplicativity, 500 triples x 3 rings",
    4: "reparameterization invariance, 100 (f, g, tau) x 3 rings",
    5: "residue recovery over F7 and Q, plus (t^-1, t) -> -1",
    6: "exp-log formula over Q[e]/(e^5), 100 pairs",
    7: "reciprocity on P^1 over F7 (with Weil) and F5[e]/(e^4), plus (t, 1-t)",
    8: "residue theorem on P^1 over F7 and Q, plus dt/(t(t-1))",
    9: "ghost homomorphism over Q (N <= 8) and integrality mod 2, 3",
    10: "Witt reciprocity over F2 (N=4) and F3 (N=3), ghost identity over Q",
}
TIME_LIMIT = 60.0


def _line(i, res) -> str:
    ok = res.passed and res.seconds < TIME_LIMIT
    status = "PASS" if ok else "FAIL"
    return f"[{status}] criterion {i:2d}: {TITLES[i]} ({res.trials} checks, {res.seconds:.1f}s)"


@pytest.mark.parametrize("criterion", sorted(SUITES))
def test_criterion(criterion, capsys):
    res = SUITES[criterion](DEFAULT_SEED)
    with capsys.disabled():
        print("\n" + _line(criterion, res))
    assert not res.failures, res.failures
    assert res.trials > 0
    assert res.seconds < TIME_LIMIT


if __name__ == "__main__":
    import sys

    results = {i: SUITES[i](DEFAULT_SEED) for i in sorted(SUITES)}
    for i, res in results.items():
        print(_line(i, res))
    sys.exit(0 if all(r.passed and r.seconds < TIME_LIMIT for r in results.values()) else 1)
