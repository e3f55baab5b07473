"""Socle quotients and connected sums against their series calculus.

Starting from the complete intersection S = Q[x,y]/(x^2,y^2) and the
hypersurface T = Q[z]/(z^3), this script builds the socle quotient of S
and the connected sum S # T, resolves the residue field over each, and
checks the directly computed numbers against the transformed series.
"""

from golodkit import (
    QQ,
    IntPolynomial,
    ModulePresentation,
    RationalSeries,
    TruncatedSeries,
    connected_sum,
    connected_sum_series,
    expand,
    levin_quotient_series,
    make_ring,
    resolve,
    series_compare,
    teter_quotient,
)


def betti_of_k(ring, steps):
    k = ModulePresentation.residue_field(ring)
    return resolve(ring, k, steps).betti.totals


S = make_ring(QQ, ("x", "y"), ("x^2", "y^2"))
T = make_ring(QQ, ("z",), ("z^3",))
P_S = RationalSeries.make(
    IntPolynomial.one(), IntPolynomial.of([1, -2, 1]), "user-asserted"
)
P_T = RationalSeries.make(
    IntPolynomial.one(), IntPolynomial.of([1, -1]), "user-asserted"
)

print(f"S = {S}: series of k is 1/(1-t)^2")
print(f"T = {T}: series of k is 1/(1-t)")
print()

# socle quotient of S
Q = teter_quotient(S)
direct = betti_of_k(Q, 10)
ls = levin_quotient_series(P_S)
predicted = expand(ls, 10)
print(f"socle quotient {Q}")
print(f"  direct betti    {direct}")
print(f"  series {ls} gives {predicted.coefficients}")
print(f"  verdict: {series_compare(TruncatedSeries(direct), predicted)}")
assert direct == predicted.coefficients

# socle quotient of T: a hypersurface stays a hypersurface
lt = levin_quotient_series(P_T)
print(f"socle quotient of T keeps its series: {lt}")
for w in lt.warnings:
    print(f"  note: {w}")
print()

# connected sum
C = connected_sum(S, T)
inv = C.invariants()
print(f"S # T = {C}")
print(f"  hilbert {inv.hilbert}, length {C.length} = {S.length} + {T.length} - 2")
cs = connected_sum_series(ls, lt)
direct = betti_of_k(C, 8)
predicted = expand(cs, 8)
print(f"  direct betti    {direct}")
print(f"  series {cs} gives {predicted.coefficients}")
assert direct == predicted.coefficients
print("  agreement exact")
