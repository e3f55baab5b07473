"""Three modules over one ring, one for each growth class.

Over S = Q[w,x,y,z]/(w^2, x^2, xy, y^2, z^2) the cyclic modules S/(z),
S/(w), and S/(x,y) have curvature 1, 1, and 2.  Tor between S/(z) and
either of the others vanishes from degree 1 on, and the classifier puts
every reconstructed growth rate into {0, 1, curv k} as it must.
"""

from golodkit import (
    QQ,
    ModulePresentation,
    TruncatedSeries,
    classify_curvature,
    curvature_from_denominator,
    make_ring,
    pade_reconstruct,
    resolve,
    tor,
)

DEPTH = 8

S = make_ring(QQ, ("w", "x", "y", "z"), ("w^2", "x^2", "x*y", "y^2", "z^2"))
M = ModulePresentation.cyclic(S, ("z",), label="S/(z)")
N = ModulePresentation.cyclic(S, ("x", "y"), label="S/(x,y)")
W = ModulePresentation.cyclic(S, ("w",), label="S/(w)")
k = ModulePresentation.residue_field(S)

print(f"ring: {S}")
print()


def growth(module):
    res = resolve(S, module, DEPTH)
    betti = res.betti.totals
    rs = pade_reconstruct(TruncatedSeries(betti), 3, 4)
    est = curvature_from_denominator(rs)
    return betti, rs, est


betti_k, rs_k, est_k = growth(k)
print(f"k:      betti {betti_k}")
print(f"        series {rs_k}, curvature exactly {est_k.exact}")

for module in (M, W, N):
    betti, rs, est = growth(module)
    tag = classify_curvature(est, est_k)
    print(f"{module.label}: betti {betti}")
    print(f"        series {rs}, curvature {est.exact}, class {tag!r}")
print()

for left, right in ((M, W), (M, N)):
    table = tor(S, left, right, DEPTH)
    gone = all(d == 0 for d in table.dims[1:])
    print(f"Tor({left.label}, {right.label}): dims {table.dims}")
    print(f"  vanishes from degree 1 on: {gone}")
