def pytest_terminal_summary(terminalreporter):
    from tests.test_acceptance import CRITERIA, RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for cid, desc, _ in CRITERIA:
        if cid in RESULTS:
            mark = "PASS" if RESULTS[cid] else "FAIL"
            terminalreporter.write_line(f"[{mark}] {cid}: {desc}")
