import functools

from asmtour.bijection import phi, phi_any_order, psi
from asmtour.enumeration import enumerate_ocmt, enumerate_tournaments, standard

ACCEPTANCE_RESULTS = []


def record(criterion, ok, detail=""):
    ACCEPTANCE_RESULTS.append((criterion, ok, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for criterion, ok, detail in sorted(ACCEPTANCE_RESULTS, key=lambda r: r[0]):
        terminalreporter.write_line(f"[{'PASS' if ok else 'FAIL'}] {criterion}" + (f": {detail}" if detail else ""))


@functools.lru_cache(maxsize=None)
def reachable_states(n, random_orders=3):
    """Every triangle met by phi, psi and a few random raising orders, order n."""
    seen = {}
    for o in enumerate_ocmt(standard(n)):
        traces = [phi(o)[1]] + [phi_any_order(o, seed)[1] for seed in range(random_orders)]
        for tr in traces:
            seen[tr.initial] = None
            for s in tr.steps:
                seen[s.after] = None
    for t in enumerate_tournaments(n):
        tr = psi(t)[1]
        for s in tr.steps:
            seen[s.before] = None
            seen[s.after] = None
    return tuple(seen)
