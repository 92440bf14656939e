"""The polygamma combination phi(r, q) and its comparison with 1.

Whether k -> J(d, gamma, k) increases or decreases is decided by whether
phi(r, q) = 2r psi'(r+1-q) + r^2 psi''(r+1-q) stays above or below 1 for
r > q, where q parameterizes the measure line d = (1-q)(gamma-2) + 1.

Run:  python demos/02_polygamma_inequalities.py
"""

from leraykit import phi, phi_sandwich, polygamma, polygamma_sandwich, theta

# ----------------------------------------------------------------------
# 1. Certified polygamma values: each result carries an error radius.
# ----------------------------------------------------------------------
print("psi'(1)  =", float(polygamma(1, 1.0).value), " (zeta(2) = pi^2/6)")
print("psi''(2) =", float(polygamma(2, 2.0).value))
lo, hi = polygamma_sandwich(1, 1.0)
print(f"closed-form sandwich for psi'(1): ({lo}, {hi})")

# ----------------------------------------------------------------------
# 2. theta(r, q) = r^2 psi'(r+1-q) is the antiderivative of phi in r.
# ----------------------------------------------------------------------
r, q, h = 2.0, 0.5, 1e-5
fd = (float(theta(r + h, q).value) - float(theta(r - h, q).value)) / (2 * h)
print(f"\ncentral difference of theta at (2, 1/2): {fd:.10f}")
print(f"phi(2, 1/2)                            : {float(phi(r, q).value):.10f}")

# ----------------------------------------------------------------------
# 3. The dichotomy: phi < 1 for q <= 0 or q >= 1, phi > 1 at q = 2/3.
#    The margins shrink like 1/r^2 but stay certified (radii ~ 1e-24).
# ----------------------------------------------------------------------
print("\nphi(r, q) against 1:")
print(f"{'r':>8} | {'q=0':>12} | {'q=1':>12} | {'q=2/3':>12}")
for r in (1.25, 3.0, 10.0, 100.0, 1000.0):
    row = [float(phi(r, qq).value) - 1 for qq in (0.0, 1.0, 2.0 / 3.0)]
    print(f"{r:8g} | {row[0]:+12.3e} | {row[1]:+12.3e} | {row[2]:+12.3e}")

# ----------------------------------------------------------------------
# 4. The elementary rational sandwich is not sharp enough to decide the
#    comparison with 1 on its own -- its upper bound eventually exceeds 1
#    even where phi < 1.  That is what makes the certificates interesting.
# ----------------------------------------------------------------------
print("\nsandwich bounds at q = 0:")
for r in (1.0, 5.0, 25.0):
    lo, hi = phi_sandwich(r, 0.0)
    print(f"  r={r:4g}: {lo:.6f} < phi = {float(phi(r, 0.0).value):.6f} < {hi:.6f}"
          f"   (upper bound {'exceeds' if hi > 1 else 'below'} 1)")
