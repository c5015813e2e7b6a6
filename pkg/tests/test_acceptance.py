"""Acceptance criteria 1-8, each on its full grid at exact equality.

Every test prints one line ``PASS criterion N: ...`` or ``FAIL criterion N: ...``.
Run directly (``python tests/test_acceptance.py``) for just those lines.
"""

from __future__ import annotations

import sys
import time

import pytest

from flagq.suites import GridConfig, run_suite

def _emit(capsys, line: str) -> None:
    if capsys is None:
        print(line, flush=True)
    else:
        with capsys.disabled():
            print("\n" + line, flush=True)


def _run(name: str, cfg: GridConfig | None = None):
    t0 = time.perf_counter()
    rep = run_suite(name, cfg, threads=1)
    return rep, time.perf_counter() - t0


def _conclude(capsys, n: int, title: str, ok: bool, detail: str) -> None:
    _emit(capsys, f"{'PASS' if ok else 'FAIL'} criterion {n}: {title}; {detail}")
    assert ok, detail


def criterion_1(capsys=None):
    rep, dt = _run("worked-examples")
    ok = rep.passed and len(rep.results) == 2 and dt < 1.0
    fails = "; ".join(d for _, good, d in rep.results if not good)
    _conclude(capsys, 1, "worked decompositions reproduce the printed coefficients", ok,
              f"{len(rep.results)} shapes, {dt:.2f}s (limit 1s){' ' + fails if fails else ''}")


def criterion_2(capsys=None):
    rep, dt = _run("pfaffian-eq", GridConfig(max_lambda=5, max_rows=3, max_flag=3, nx=(1, 2, 3)))
    n = len(rep.results)
    ok = rep.passed and n >= 100 and dt < 300
    _conclude(capsys, 2, "Pfaffian formula equals the tableau sum on r<=3, lambda_1<=5, f_i<=3, n_x<=3", ok,
              f"{n - len(rep.failures)}/{n} cases equal, {dt:.1f}s (limit 300s)")


def criterion_3(capsys=None):
    rep, dt = _run("monomial-q", GridConfig(max_lambda=5, max_rows=3, nx=(2, 3)))
    n = len(rep.results)
    ok = rep.passed and n > 0 and dt < 120
    _conclude(capsys, 3, "monomial tableau sum = Pfaffian = tableau sum for factorial Q, n_x in {2,3}", ok,
              f"{n - len(rep.failures)}/{n} cases, {dt:.1f}s (limit 120s)")


def criterion_4(capsys=None):
    rep, dt = _run("jacobi-trudi", GridConfig(max_lambda=4, max_rows=3, max_flag=4))
    n = len(rep.results)
    ok = rep.passed and n > 0 and dt < 120
    _conclude(capsys, 4, "flagged Jacobi-Trudi determinant and weight-preserving path bijection", ok,
              f"{n - len(rep.failures)}/{n} skew shapes, {dt:.1f}s (limit 120s)")


def criterion_5(capsys=None):
    rep, dt = _run("pfaffian-calculus")
    n = len(rep.results)
    kinds = sorted({k[0] for k, _, _ in rep.results})
    ok = rep.passed and dt < 180
    _conclude(capsys, 5, "Schur-Pfaffian calculus (oracle r<=4, a_i<=5; antisymmetry; sign rule; zero/negative tails)",
              ok, f"{n - len(rep.failures)}/{n} checks over {','.join(kinds)}, {dt:.1f}s (limit 180s)")


def criterion_6(capsys=None):
    rep, dt = _run("identities")
    n = len(rep.results)
    core = [r for r in rep.results if r[0][0] in ("telescope", "row-expansion")]
    ok = rep.passed and len(core) == 6 * 6 * 4 * 4 * 2 + 5 * 5 * 4 * 2 and dt < 120
    _conclude(capsys, 6, "generating-function identities on the stated grids", ok,
              f"{n - len(rep.failures)}/{n} identities ({len(core)} on the required grids), {dt:.1f}s (limit 120s)")


def criterion_7(capsys=None):
    rep, dt = _run("vexillary")
    eq, dt2 = _run("vexillary-equivalence")
    dt += dt2
    n = len(rep.results)
    details = [d for _, good, d in rep.results if not good]
    hyp = sum(d.startswith("shape ") for d in details)
    routes = sum("routes differ" in d for d in details)
    swap = sum("swap" in d for d in details)
    ok = rep.passed and eq.passed and dt < 300
    _conclude(
        capsys, 7, "vexillary triples k_r<=3, p_1,q_1<=4", ok,
        f"{n} essential triples: shape hypotheses fail on {hyp}, route mismatches {routes}, "
        f"swap mismatches {swap}; {len(eq.results) - len(eq.failures)}/{len(eq.results)} equivalent "
        f"triples agree; {dt:.1f}s (limit 300s)"
        + ("" if not details else f"; first failure: {details[0]}"),
    )


def criterion_8(capsys=None):
    rep, dt = _run("structure", GridConfig(max_lambda=5, max_rows=3, max_flag=3, nx=(1, 2, 3)))
    n = len(rep.results)
    pf = sum(1 for k, _, _ in rep.results if k[0] == "pf2det")
    ok = rep.passed and pf > 0
    _conclude(capsys, 8, "homogeneity, x-symmetry, serialisation round trips, Pf^2 = det up to 6x6", ok,
              f"{n - len(rep.failures)}/{n} checks ({pf} random skew matrices), {dt:.1f}s")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5, criterion_6, criterion_7, criterion_8]


@pytest.mark.parametrize("criterion", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 9)])
def test_acceptance(criterion, capsys):
    criterion(capsys)


if __name__ == "__main__":
    failed = 0
    for c in CRITERIA:
        try:
            c()
        except AssertionError:
            failed += 1
    sys.exit(1 if failed else 0)
