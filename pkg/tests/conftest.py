"""Shared rings and a resolution cache for the whole suite.

The rings here are the recurring cast: a compressed Gorenstein ring, a
tensor-product ring with modules of every curvature class, a Golod ring,
a complete intersection, a hypersurface, and the constructed sums and
quotients between them.  Resolutions are cached per (ring, module) so
the acceptance tests and the unit tests share the expensive prefixes.
"""

import pytest

from golodkit import (
    QQ,
    ModulePresentation,
    connected_sum,
    make_ring,
    resolve,
    teter_quotient,
)

COMPRESSED_RELS = ("x*z", "z^2 + x*y", "y^2*z", "x^2", "y^3")
EXAMPLE_RELS = ("w^2", "x^2", "x*y", "y^2", "z^2")
STRETCHED_RELS = ("x*y", "x*z", "y*z", "x^2 - y^2", "x^2 - z^2")
FIVEVAR_RELS = (
    "2*x1*x3 + x2*x3",
    "x1*x4 + x2*x4",
    "x3^2 - x2*x5 + 2*x1*x5",
    "x4^2 - x2*x5 + x1*x5",
    "x1^2",
    "x2^2",
    "x3*x4",
    "x3*x5",
    "x4*x5",
    "x5^2",
)


@pytest.fixture(scope="session")
def compressed_ring():
    return make_ring(QQ, ("x", "y", "z"), COMPRESSED_RELS)


@pytest.fixture(scope="session")
def example_ring():
    """Length-12 tensor ring carrying modules of curvature 0, 1, and 2."""
    return make_ring(QQ, ("w", "x", "y", "z"), EXAMPLE_RELS)


@pytest.fixture(scope="session")
def golod_ring():
    return make_ring(QQ, ("x", "y"), ("x^2", "x*y", "y^2"))


@pytest.fixture(scope="session")
def ci_ring():
    return make_ring(QQ, ("x", "y"), ("x^2", "y^2"))


@pytest.fixture(scope="session")
def hypersurface_ring():
    return make_ring(QQ, ("z",), ("z^3",))


@pytest.fixture(scope="session")
def connsum_ring(ci_ring, hypersurface_ring):
    return connected_sum(ci_ring, hypersurface_ring)


@pytest.fixture(scope="session")
def stretched_ring():
    return make_ring(QQ, ("x", "y", "z"), STRETCHED_RELS)


@pytest.fixture(scope="session")
def fivevar_ring():
    """Five-variable Gorenstein ring with an exact pair of zero divisors."""
    return make_ring(QQ, tuple(f"x{i}" for i in range(1, 6)), FIVEVAR_RELS)


@pytest.fixture(scope="session")
def teter_ring(ci_ring):
    return teter_quotient(ci_ring)


class ResolutionCache:
    """Reuses deep resolution prefixes across tests.

    Betti prefixes of a deterministic minimal resolution do not depend
    on how far the computation ran, so a deeper cached run answers any
    shallower request.  Kernel-dimension audits are tied to the final
    step, so those requests only reuse an exact-depth hit.
    """

    def __init__(self):
        self._store = {}

    def get(self, key, ring, module, steps, with_kernel=False):
        cur = self._store.get(key)
        if cur is not None:
            if with_kernel:
                if cur.steps == steps and cur.last_kernel_dims is not None:
                    return cur
            elif cur.steps >= steps:
                return cur
        res = resolve(ring, module, steps, with_kernel=with_kernel)
        better = (
            cur is None
            or res.steps > cur.steps
            or (res.steps == cur.steps and cur.last_kernel_dims is None)
        )
        if better:
            self._store[key] = res
        return res

    def betti(self, key, ring, module, steps):
        return self.get(key, ring, module, steps).betti.totals[: steps + 1]


@pytest.fixture(scope="session")
def rescache():
    return ResolutionCache()


def k_over(ring):
    return ModulePresentation.residue_field(ring)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    """One pass/fail line per end-to-end scenario in test_acceptance.py."""
    verdicts = {}
    for status in ("passed", "failed", "error"):
        for rep in terminalreporter.stats.get(status, []):
            nodeid = getattr(rep, "nodeid", "")
            if "test_acceptance.py::test_criterion_" not in nodeid:
                continue
            tail = nodeid.split("::test_criterion_")[1]
            num = int(tail.split("_")[0])
            ok = status == "passed"
            verdicts[num] = verdicts.get(num, True) and ok
    if not verdicts:
        return
    terminalreporter.write_line("")
    terminalreporter.write_line("end-to-end scenarios:")
    for num in sorted(verdicts):
        word = "pass" if verdicts[num] else "FAIL"
        terminalreporter.write_line(f"  criterion {num:2d}: {word}")
