"""Tour of the symbol function and the operator norms it determines.

Run:  python demos/01_symbol_and_norms.py
"""

import math

from leraykit import (
    MeasureTag,
    SymbolQuery,
    boundedness_interval,
    hf_limit,
    holder_conjugate,
    holder_partner,
    leray_norm,
    monotonicity_scan,
    symbol_value,
)

# ----------------------------------------------------------------------
# 1. Mode norms are sqrt(J); at gamma = 2 with Lebesgue measure they are
#    identically 1 (the transform coincides with the orthogonal projection).
# ----------------------------------------------------------------------
print("J(1, 2, k) for k = 0..5:")
for k in range(6):
    v = symbol_value(SymbolQuery(2.0, 1.0, k))
    print(f"  k={k}:  J = {float(v.value):.15f}  (radius {float(v.error_radius):.1e})")

# ----------------------------------------------------------------------
# 2. Boundedness intervals widen with k; the k = 0 interval decides
#    boundedness of the full transform.
# ----------------------------------------------------------------------
print("\nboundedness intervals at gamma = 5:")
for k in range(4):
    lo, hi = boundedness_interval(5.0, k)
    print(f"  I_{k}(5) = ({lo:g}, {hi:g})")

# ----------------------------------------------------------------------
# 3. Monotonicity in k depends on the measure: the pairing exponent
#    d = gamma - 1 decreases, the preferred exponent d = (gamma+1)/3
#    increases toward the universal high-frequency limit.
# ----------------------------------------------------------------------
gamma = 5.0
for d, label in ((4.0, "pairing"), (2.0, "preferred"), (3.0, "intermediate")):
    result = monotonicity_scan(gamma, d, k_max=80)
    extra = f" (turning at k = {result.witness_k})" if result.witness_k is not None else ""
    print(f"\nk -> J({d:g}, 5, k) is {result.classification.value}{extra}")
    for k in (0, 1, 10, 80):
        print(f"  k={k:3d}: sqrt(J) = {float(symbol_value(SymbolQuery(gamma, d, k)).sqrt().value):.9f}")
print(f"high-frequency limit at gamma = 5: {hf_limit(5.0):.9f}")

# ----------------------------------------------------------------------
# 4. Closed-form norms, and the supremum search when no formula applies.
# ----------------------------------------------------------------------
print("\noperator norms:")
for gamma, measure in ((2.0, MeasureTag.generic(0.0)),
                       (3.0, MeasureTag.pairing()),
                       (4.0, MeasureTag.preferred()),
                       (3.0, MeasureTag.lebesgue()),
                       (5.0, MeasureTag.generic(3.0))):
    res = leray_norm(gamma, measure)
    where = "supremum = HF limit" if res.attained_at is None else f"attained at k = {res.attained_at}"
    print(f"  gamma={gamma:g} {measure.kind:>9}:  {float(res.value.value):.12f}  [{res.method}; {where}]")
print(f"  check: pairing at gamma=3 equals 3/(2 sqrt 2) = {3 / (2 * math.sqrt(2)):.12f}")

# ----------------------------------------------------------------------
# 5. Hölder conjugation gamma -> gamma/(gamma-1) matches symbol functions
#    mode for mode once the exponent is carried across correctly.
# ----------------------------------------------------------------------
gamma, d = 3.0, 2.4
gs, d2 = holder_partner(gamma, d)
print(f"\nconjugate of gamma = {gamma:g} is {holder_conjugate(gamma):g}; partner of d = {d:g} is d' = {d2:g}")
for k in (0, 5, 20):
    a = symbol_value(SymbolQuery(gamma, d, k))
    b = symbol_value(SymbolQuery(gs, d2, k))
    print(f"  k={k:2d}:  {float(a.value):.15f}  vs  {float(b.value):.15f}")
