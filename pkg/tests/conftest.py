import time

import pytest

from ruelle_bands.liealg.algebra import build_algebra
from ruelle_bands.reps import branch_to_M
from ruelle_bands.spectrum import weight_term

# criterion id -> (title, time limit in seconds)
CRITERIA = {
    1: ("rho norm and root multiplicity, real hyperbolic n = 1..8", 5),
    2: ("weight term matches the closed form", 10),
    3: ("H^3 golden fixture", 1),
    4: ("curvature -1 eigenvalue -lambda(lambda+n)+m", 5),
    5: ("Casimir cross-oracle n = 2..5", 30),
    6: ("structure gate n <= 4, both families", 60),
    7: ("numeric Iwasawa / Phi suite", 30),
    8: ("spectrum property suite, 10^4 exact checks", 10),
    9: ("Jordan decision table, 6 cells", 1),
}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(n): acceptance criterion number")
    config._criterion_results = {}


@pytest.fixture
def timed(request):
    """Yield a context that fails the test if the criterion's time limit is exceeded."""
    marker = request.node.get_closest_marker("criterion")
    limit = CRITERIA[marker.args[0]][1]
    # time each criterion cold, independent of test order
    for fn in (build_algebra, branch_to_M, weight_term):
        fn.cache_clear()
    t0 = time.perf_counter()
    yield limit
    elapsed = time.perf_counter() - t0
    request.node.user_properties.append(("elapsed", elapsed))
    assert elapsed < limit, f"took {elapsed:.2f} s, limit {limit} s"


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    results = item.config._criterion_results
    cid = marker.args[0]
    if rep.failed:
        results[cid] = (False, dict(item.user_properties).get("elapsed", 0.0))
    elif rep.when == "teardown" and cid not in results:
        results[cid] = (True, dict(item.user_properties).get("elapsed", 0.0))


def pytest_terminal_summary(terminalreporter, config):
    results = config._criterion_results
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for cid, (title, limit) in CRITERIA.items():
        if cid not in results:
            continue
        ok, elapsed = results[cid]
        status = "PASS" if ok else "FAIL"
        terminalreporter.write_line(f"criterion {cid}: {status}  {title}  ({elapsed:.2f} s, limit {limit} s)")
