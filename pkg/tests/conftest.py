from collections import defaultdict

CRITERIA = {
    1: "exhaustive synthesis for n = 2..5",
    2: "sampled synthesis for n = 6, 7",
    3: "base cycles for n = 5..14",
    4: "8-cycle classification completeness",
    5: "girth and short-cycle absence",
    6: "stored small-dimension cycles",
    7: "23-cycles of the unsigned pancake graph P_4",
    8: "vertex, edge and density formulas",
    9: "lemma properties and inequality observations",
    10: "CLI determinism",
}

_members = {}
_outcomes = defaultdict(list)


def pytest_collection_modifyitems(items):
    for item in items:
        mark = item.get_closest_marker("criterion")
        if mark is not None:
            _members[item.nodeid] = mark.args[0]


def pytest_runtest_logreport(report):
    num = _members.get(report.nodeid)
    if num is None:
        return
    if report.when == "call" or report.outcome != "passed":
        _outcomes[num].append((report.nodeid, report.outcome))


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for num, title in CRITERIA.items():
        results = _outcomes.get(num)
        if not results:
            tr.write_line(f"ACCEPTANCE criterion {num}: NOT RUN  {title}")
            continue
        bad = [nid.split("::")[-1] for nid, outcome in results if outcome != "passed"]
        status = "FAIL" if bad else "PASS"
        detail = f"  failing: {', '.join(bad)}" if bad else ""
        tr.write_line(f"ACCEPTANCE criterion {num}: {status}  {title} ({len(results)} checks){detail}")
