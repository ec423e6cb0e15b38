from qcs.verify import WARN_CHECKS, format_report, run_suite


def test_suite_passes_and_reports_known_warns():
    results = run_suite(seed=0)
    statuses = {r.name: r.status for r in results}
    assert all(s in ("PASS", "WARN") for s in statuses.values()), statuses
    for name in WARN_CHECKS:
        assert statuses[name] == "WARN"
    warn_count = sum(1 for s in statuses.values() if s == "WARN")
    assert warn_count == len(WARN_CHECKS)


def test_report_is_reproducible():
    first = format_report(run_suite(seed=4), seed=4)
    second = format_report(run_suite(seed=4), seed=4)
    assert first == second
    assert first.endswith("result: PASS\n")
    assert "summary:" in first


def test_different_seeds_still_pass():
    for seed in (1, 9):
        results = run_suite(seed=seed)
        assert all(r.status != "FAIL" for r in results)
