"""Koszul homology ranks against closed forms and the socle."""

import pytest

from golodkit import koszul_homology, make_ring, QQ


RANKS = [
    ("hypersurface_ring", (1, 1)),
    ("ci_ring", (1, 2, 1)),
    ("golod_ring", (1, 3, 2)),
    ("compressed_ring", (1, 5, 5, 1)),
    ("example_ring", (1, 5, 9, 7, 2)),
    ("fivevar_ring", (1, 10, 21, 21, 10, 1)),
]


@pytest.mark.parametrize("name,ranks", RANKS)
def test_homology_ranks(request, name, ranks):
    ring = request.getfixturevalue(name)
    h = koszul_homology(ring)
    assert h.edim == ring.nvars
    assert h.ranks == ranks
    assert h.rank(0) == 1
    assert h.rank(len(ranks) + 3) == 0


@pytest.mark.parametrize("name", [n for n, _ in RANKS])
def test_euler_characteristic_vanishes(request, name):
    # the complex is exact in the Artinian case except for its homology,
    # and length(R) * chi(exterior algebra) = 0 forces the ranks to
    # cancel alternately
    ring = request.getfixturevalue(name)
    h = koszul_homology(ring)
    assert sum((-1) ** i * r for i, r in enumerate(h.ranks)) == 0


@pytest.mark.parametrize("name", [n for n, _ in RANKS])
def test_top_homology_is_socle(request, name):
    ring = request.getfixturevalue(name)
    h = koszul_homology(ring)
    assert h.ranks[-1] == ring.invariants().socle_dimension


def test_graded_refinement(ci_ring):
    h = koszul_homology(ci_ring)
    assert sum(r for _, r in h.graded[1]) == h.ranks[1]
    # both Koszul relations of (x^2, y^2) sit in internal degree 2
    assert dict(h.graded[1]) == {2: 2}
    assert dict(h.graded[0]) == {0: 1}
    assert dict(h.graded[2]) == {4: 1}


def test_ci_relation_count():
    # for a complete intersection h_1 equals the number of relations
    # and the whole homology is its exterior algebra
    from math import comb

    ring = make_ring(QQ, ("x", "y", "z"), ("x^2", "y^2", "z^3"))
    h = koszul_homology(ring)
    assert h.ranks == tuple(comb(3, i) for i in range(4))


def test_field_itself():
    k = make_ring(QQ, (), ())
    h = koszul_homology(k)
    assert h.ranks == (1,)
