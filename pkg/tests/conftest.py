from hypothesis import settings

from crosscap.diagram import ComponentSpec, CurveGluing, CutDiagram, ONE_SIDED, TWO_SIDED
from crosscap.surface import Surface

# randomized suites are reproducible: examples derive from the test itself
settings.register_profile("fixed", derandomize=True, deadline=None, print_blob=True)
settings.load_profile("fixed")


def N(g, n=0):
    return Surface(False, g, n)


def orient(cid, genus, slots, signs):
    return ComponentSpec(cid, True, genus, tuple(slots), tuple(signs))


def nonorient(cid, genus, slots):
    return ComponentSpec(cid, False, genus, tuple(slots))


def two(i, a, b):
    return CurveGluing(i, TWO_SIDED, (a, b))


def one(i, s):
    return CurveGluing(i, ONE_SIDED, (s,))


def diagram(target, comps, exterior=(), curves=()):
    return CutDiagram(target, tuple(comps), tuple(exterior), tuple(curves))


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    if mod is None or not mod.REPORT:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(mod.REPORT):
        terminalreporter.write_line(mod.REPORT[k])
