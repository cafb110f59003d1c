"""One test per acceptance criterion; conftest prints a PASS/FAIL line for each."""

import contextlib
import io
import json
import random
import subprocess
import sys
import time
from fractions import Fraction

import numpy as np
import pytest

from drgcheck.cli import main
from drgcheck.feasibility import Condition, Connectivity, Outcome, run_nonexistence_chain
from drgcheck.io import (
    format_array,
    parse_array,
    read_batch,
    read_json_report,
    render_report,
    scan_batch,
)
from drgcheck.model import IntersectionArray, derive_parameters
from drgcheck.oracle import (
    EIGEN_TOL,
    catalog,
    icosahedron,
    johnson_graph,
    local_graph,
    max_coclique,
    petersen_graph,
    second_largest_eigenvalue,
    validate_lemmas,
)
from drgcheck.spectral import AlgebraicNumber, spectrum

from helpers import (
    TARGET,
    brute_force_alpha,
    random_arrays,
    random_graph,
    symmetric_intersection_matrix,
)

REQUIRED_ARRAYS = ["{3,2;1,1}", "{2,1;1,1}", "{6,2;1,4}", "{4,2;1,2}", "{5,2,1;1,2,5}",
                   "{3,2,2;1,1,3}", "{3,2,1;1,2,3}"] + [f"{{{k};1}}" for k in range(1, 7)]


def _step(verdict, condition):
    return next(s for s in verdict.trace if s.condition is condition)


def test_criterion_1_target_reproduction():
    out = io.StringIO()
    start = time.perf_counter()
    with contextlib.redirect_stdout(out):
        code = main(["check", "{55,36,11;1,4,45}"])
    elapsed = time.perf_counter() - start
    assert code == 1
    text = out.getvalue()
    for line in ("eigenvalues: 55, 19, -1, -5",
                 "multiplicities: 1, 77, 363, 231",
                 "terwilliger bound: 8 < a1 = 18 => local graph connected",
                 "guaranteed coclique: 4",
                 "koolen-park at c=4: 3 >= 7/2 FAILS",
                 "verdict: INFEASIBLE"):
        assert line in text

    v = run_nonexistence_chain(TARGET)
    assert v.status == "infeasible"
    assert v.spectrum.eigenvalues == (55, 19, -1, -5)
    assert all(isinstance(t, Fraction) for t in v.spectrum.eigenvalues)
    assert v.spectrum.multiplicities == (1, 77, 363, 231)
    assert _step(v, Condition.TERWILLIGER_BOUND).inputs["B"] == 8
    assert _step(v, Condition.LOCAL_CONNECTIVITY).inputs["connectivity"] == Connectivity.CONNECTED.value
    assert _step(v, Condition.COCLIQUE_GUARANTEE).inputs["size"] == 4
    kp = v.killer_step
    assert kp.condition is Condition.KOOLEN_PARK and kp.outcome is Outcome.VIOLATED
    assert (kp.inputs["c"], kp.inputs["rhs"], kp.inputs["lhs"]) == (4, Fraction(7, 2), 3)
    assert elapsed < 0.050, f"check took {elapsed * 1000:.1f} ms"


def test_criterion_2_catalog_soundness():
    arrays = {str(e.array) for e in catalog()} | set(REQUIRED_ARRAYS)
    assert len(arrays) >= 10
    for text in sorted(arrays):
        v = run_nonexistence_chain(parse_array(text))
        assert v.status == "inconclusive", f"{text} killed by {v.killer_step}"


def test_criterion_3_lemma_validation():
    start = time.perf_counter()
    reports = {e.name: validate_lemmas(e.graph) for e in catalog()}
    elapsed = time.perf_counter() - start
    for name, rep in reports.items():
        assert rep.passed, f"{name}: {rep.failures()}"

    # prism local graph of J(5,2) meets B = 1
    j52 = reports["J(5,2)"]
    l2 = [c for c in j52.checks if c.lemma == "L2"]
    assert all(abs(c.measured - 1.0) <= EIGEN_TOL and c.bound == 1 for c in l2)
    # pentagon local graph of the icosahedron meets B = (sqrt5 - 1)/2
    golden = (5 ** 0.5 - 1) / 2
    for c in (c for c in reports["icosahedron"].checks if c.lemma == "L2"):
        assert abs(c.measured - golden) <= EIGEN_TOL
        assert abs(float(c.bound) - golden) <= EIGEN_TOL
    # Petersen: equality in the coclique inequality at c = 3
    for c in (c for c in reports["Petersen"].checks if c.lemma == "L1"):
        assert c.outcome == "pass" and c.measured == c.bound == 0 and c.note == "c=3"
    assert elapsed < 5.0, f"lemma validation took {elapsed:.2f} s"


def test_criterion_4_spectral_identities():
    arrays = [e.array for e in catalog()] + [TARGET]
    for arr in arrays:
        dp = derive_parameters(arr)
        sp = spectrum(arr, dp)
        assert sp.power_trace(0) == dp.n
        assert sp.power_trace(1) == 0
        assert sp.power_trace(2) == dp.n * arr.b0
        numeric = np.sort(np.linalg.eigvalsh(symmetric_intersection_matrix(arr)))[::-1]
        for theta, x in zip(sp.eigenvalues, numeric):
            if isinstance(theta, AlgebraicNumber):
                r = theta.refined(Fraction(1, 10**9))
                assert r.lo - EIGEN_TOL <= x <= r.hi + EIGEN_TOL
            else:
                assert abs(float(theta) - x) <= EIGEN_TOL


def test_criterion_5_coclique_oracle_equivalence():
    graphs = [local_graph(e.graph, x) for e in catalog() for x in range(e.graph.vertex_count)]
    rng = random.Random(2024)
    for _ in range(50):
        graphs.append(random_graph(rng, rng.randint(1, 18), rng.random()))
    for g in graphs:
        witness = max_coclique(g)
        assert witness.verify(g)
        assert witness.size == brute_force_alpha(g)


_THROUGHPUT_SCRIPT = r"""
import sys, time
sys.path.insert(0, {tests!r})
from helpers import random_arrays
from drgcheck.io import read_batch, scan_batch
text = "\n".join(str(a) for a in random_arrays(6, 1000))
records = read_batch(text)
start = time.perf_counter()
scan_batch(records, workers=1)
print(time.perf_counter() - start)
"""


def test_criterion_6_batch_throughput():
    # fresh interpreter so no cache from earlier tests helps
    from pathlib import Path

    script = _THROUGHPUT_SCRIPT.format(tests=str(Path(__file__).parent))
    out = subprocess.run([sys.executable, "-c", script], capture_output=True, text=True, check=True)
    elapsed = float(out.stdout.strip())

    arrays = random_arrays(6, 1000)
    assert all(a.d <= 6 for a in arrays)
    records = read_batch("\n".join(str(a) for a in arrays))
    first = render_report(scan_batch(records, workers=1), "json")
    again = render_report(scan_batch(records, workers=1), "json")
    parallel = render_report(scan_batch(records, workers=2), "json")
    assert first == again == parallel
    assert elapsed < 2.0, f"1000 arrays took {elapsed:.2f} s"


def test_criterion_7_round_trip_and_schema():
    arrays = random_arrays(7, 100)
    for arr in arrays:
        text = format_array(arr)
        assert parse_array(text) == arr
        assert format_array(parse_array(text)) == text

    verdicts = scan_batch(read_batch("\n".join(map(str, arrays)) + "\n{3,2;1}\n"))
    payload = render_report(verdicts, "json")
    objects = json.loads(payload)
    assert len({tuple(sorted(o)) for o in objects}) == 1
    parsed = read_json_report(payload)
    for v, (arr, status, index, condition) in zip(verdicts[:-1], parsed):
        assert arr == str(v.array) and status == v.status
        assert index == v.killer
        assert condition == (v.killer_step.condition.value if v.infeasible else None)
    assert parsed[-1][1] == "parse-error"
    assert any(p[1] == "infeasible" for p in parsed) and any(p[1] == "inconclusive" for p in parsed)


@pytest.mark.parametrize("graph,expected", [(johnson_graph(5, 2), 1.0), (petersen_graph(), 0.0)])
def test_local_second_eigenvalue_examples(graph, expected):
    assert abs(second_largest_eigenvalue(local_graph(graph, 0)) - expected) <= EIGEN_TOL


def test_icosahedron_local_graph_is_pentagon():
    loc = local_graph(icosahedron(), 0)
    assert loc.regular_degree() == 2 and loc.vertex_count == 5 and loc.is_connected()
