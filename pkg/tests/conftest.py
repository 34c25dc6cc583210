def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per acceptance criterion at the end of the run."""
    entries = []
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance" in nodeid and "::" in nodeid:
                entries.append((nodeid.split("::")[-1], status))
    if not entries:
        return
    terminalreporter.write_sep("=", "acceptance criteria")
    for name, status in sorted(set(entries)):
        verdict = "PASS" if status == "passed" else "FAIL"
        terminalreporter.write_line(f"{verdict}  {name}")
