"""Minimal free resolutions: presentations, Betti numbers, certificates."""

import dataclasses

import pytest

from golodkit import (
    BudgetExceededError,
    ModulePresentation,
    ValidationError,
    exactness_certificate,
    minimalize,
    resolve,
)
from golodkit.resolution import matrix_cap

from conftest import k_over


def test_presentation_validation(ci_ring, golod_ring):
    x = ci_ring.element("x")
    one = ci_ring.one()
    with pytest.raises(ValidationError):
        ModulePresentation(ci_ring, (0, 0), ((x,),))  # column too short
    with pytest.raises(ValidationError):
        ModulePresentation(ci_ring, (0,), ((one + x,),))  # not homogeneous
    with pytest.raises(ValidationError):
        # x lands in degree 1, y shifted by the degree-1 generator in 2
        ModulePresentation(ci_ring, (0, 1), ((x, ci_ring.element("y")),))
    with pytest.raises(ValidationError):
        ModulePresentation(ci_ring, (0,), ((ci_ring.zero(),),))
    with pytest.raises(ValidationError):
        ModulePresentation(ci_ring, (0,), ((golod_ring.element("x"),),))
    with pytest.raises(ValidationError):
        ModulePresentation.cyclic(ci_ring, ("x^2",))  # zero in the quotient


def test_residue_field_presentation(ci_ring):
    k = k_over(ci_ring)
    assert k.gen_degrees == (0,)
    assert len(k.columns) == ci_ring.nvars
    assert k.label == "k"
    assert [k.column_degree(j) for j in range(2)] == [1, 1]


def test_minimalize_drops_duplicate_relations(ci_ring):
    M = ModulePresentation.cyclic(ci_ring, ("x", "x", "x"))
    mm = minimalize(M)
    assert mm.gen_degrees == (0,)
    assert len(mm.columns) == 1
    # R/(x) here is k[y]/(y^2)
    assert mm.module_dims == {0: 1, 1: 1}
    assert mm.total_dim == 2


def test_minimalize_prunes_unit_entries(ci_ring):
    # the relation e1 = -y e0 makes the second generator redundant
    col = (ci_ring.element("y"), ci_ring.one())
    M = ModulePresentation(ci_ring, (0, 1), (col,))
    mm = minimalize(M)
    assert mm.gen_degrees == (0,)
    assert mm.columns == ()
    assert mm.total_dim == ci_ring.length
    assert mm.top_degree == 2


def test_betti_residue_field_complete_intersection(ci_ring, rescache):
    res = rescache.get("ci.k", ci_ring, k_over(ci_ring), 5)
    assert res.betti.totals[:6] == (1, 2, 3, 4, 5, 6)
    assert res.complete


def test_betti_residue_field_golod(golod_ring, rescache):
    res = rescache.get("golod.k", golod_ring, k_over(golod_ring), 5)
    assert res.betti.totals[:6] == (1, 2, 4, 8, 16, 32)


def test_betti_residue_field_hypersurface(hypersurface_ring, rescache):
    res = rescache.get("hyp.k", hypersurface_ring, k_over(hypersurface_ring), 5)
    assert res.betti.totals[:6] == (1, 1, 1, 1, 1, 1)
    # the periodic pattern z, z^2, z, ... shows in the degree shifts
    shifts = [fd[0] for fd in res.free_degrees]
    assert shifts == [0, 1, 3, 4, 6, 7]


def test_graded_betti_compressed(compressed_ring, rescache):
    res = rescache.get("compressed.k", compressed_ring, k_over(compressed_ring), 3)
    b = res.betti
    assert b.totals[:4] == (1, 3, 8, 21)
    assert b.entry(1, 1) == 3
    assert b.entry(2, 2) == 6
    assert b.entry(2, 3) == 2
    assert b.entry(3, 3) == 12
    assert b.entry(3, 4) == 9
    assert b.entry(2, 7) == 0
    assert b.steps >= 3
    assert "21" in str(b)


def test_cyclic_module_periodic(hypersurface_ring):
    M = ModulePresentation.cyclic(hypersurface_ring, ("z",))
    res = resolve(hypersurface_ring, M, 4)
    assert res.betti.totals == (1, 1, 1, 1, 1)


def test_certificate_clean(ci_ring, rescache):
    res = rescache.get("ci.k.cert", ci_ring, k_over(ci_ring), 3, with_kernel=True)
    cert = exactness_certificate(res)
    assert cert.ok and bool(cert)
    assert cert.minimal
    assert cert.composes_to_zero
    assert cert.euler_ok
    assert cert.failures == []
    assert cert.euler_range[0] == 0
    # every ledger row balances
    assert all(lhs == rhs for _, lhs, rhs in cert.ledger)


def test_certificate_flags_unit_entry(ci_ring, rescache):
    res = rescache.get("ci.k.cert", ci_ring, k_over(ci_ring), 3, with_kernel=True)
    doctored = list(res.differentials)
    doctored[0] = ((ci_ring.one(),),) + doctored[0][1:]
    bad = dataclasses.replace(res, differentials=tuple(doctored))
    cert = exactness_certificate(bad)
    assert not cert.minimal
    assert not cert.ok
    assert any("unit entry" in f for f in cert.failures)


def test_certificate_flags_broken_composition(ci_ring, rescache):
    res = rescache.get("ci.k.cert", ci_ring, k_over(ci_ring), 3, with_kernel=True)
    y = ci_ring.element("y")
    zero = ci_ring.zero()
    # replace a genuine syzygy column of d_2 with a non-syzygy
    doctored = list(res.differentials)
    doctored[1] = ((y, zero),) + doctored[1][1:]
    d1 = res.differentials[0]
    image = d1[0][0] * y
    assert not image.is_zero()  # the doctored column really is bad
    bad = dataclasses.replace(res, differentials=tuple(doctored))
    cert = exactness_certificate(bad)
    assert cert.minimal
    assert not cert.composes_to_zero
    assert not cert.ok


def test_certificate_flags_euler_mismatch(ci_ring, rescache):
    res = rescache.get("ci.k.cert", ci_ring, k_over(ci_ring), 3, with_kernel=True)
    assert res.last_kernel_dims is not None
    kd = dict(res.last_kernel_dims)
    some = min(kd) if kd else 0
    kd[some] = kd.get(some, 0) + 1
    bad = dataclasses.replace(res, last_kernel_dims=kd)
    cert = exactness_certificate(bad)
    assert not cert.euler_ok
    assert any("Euler" in f for f in cert.failures)


def test_matrix_budget(monkeypatch, ci_ring):
    monkeypatch.setenv("GOLODKIT_MAX_MATRIX", "1")
    assert matrix_cap() == 1
    res = resolve(ci_ring, k_over(ci_ring), 4)
    assert not res.complete
    assert res.note and "stopped" in res.note
    cert = exactness_certificate(res)
    assert not cert.ok
    assert any("incomplete" in f for f in cert.failures)
    # steps that minimalize alone provides still work under the cap
    shallow = resolve(ci_ring, k_over(ci_ring), 1)
    assert shallow.complete
    assert shallow.last_kernel_dims is None
    assert shallow.note and "kernel" in shallow.note


def test_matrix_cap_validation(monkeypatch):
    monkeypatch.setenv("GOLODKIT_MAX_MATRIX", "abc")
    with pytest.raises(ValidationError):
        matrix_cap()
    monkeypatch.setenv("GOLODKIT_MAX_MATRIX", "0")
    with pytest.raises(ValidationError):
        matrix_cap()
    monkeypatch.delenv("GOLODKIT_MAX_MATRIX")
    assert matrix_cap() >= 1000


def test_resolve_validation(ci_ring, golod_ring):
    with pytest.raises(ValidationError):
        resolve(ci_ring, k_over(ci_ring), -1)
    with pytest.raises(ValidationError):
        resolve(golod_ring, k_over(ci_ring), 2)
