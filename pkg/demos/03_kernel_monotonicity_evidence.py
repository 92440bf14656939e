"""Complete-monotonicity evidence through the Laplace kernel quadratic.

F_q(x) is a Laplace transform with density M(t, q)/(e^t - 1)^3; complete
monotonicity (which forces phi(r, q) < 1) holds exactly while M(t, q)
keeps a single sign.  The roots s2(t) < s1(t) of the quadratic describe
the forbidden band: q = 2/3 sits inside it, which is why the preferred
measure needs the separate summation argument.

Run:  python demos/03_kernel_monotonicity_evidence.py
"""

from leraykit import cm_numeric_certificate, f_q, m_kernel, quadratic_roots
from leraykit.bwcert import S2_SMALL_T_LIMIT, one_minus_s1

# ----------------------------------------------------------------------
# 1. The root band (s2(t), s1(t)): starts at ((3-sqrt3)/6, (3+sqrt3)/6)
#    and the upper root approaches 1 from below.
# ----------------------------------------------------------------------
print(f"small-t limit of s2: {S2_SMALL_T_LIMIT:.6f}")
print(f"{'t':>8} | {'s2':>10} | {'s1':>10} | {'1 - s1':>10}")
for t in (1e-4, 0.1, 1.0, 5.0, 20.0, 40.0):
    s1, s2 = quadratic_roots(t)
    print(f"{t:8g} | {s2:10.6f} | {s1:10.6f} | {one_minus_s1(t):10.3e}")

# ----------------------------------------------------------------------
# 2. Kernel signs: positive outside the band, negative inside.
# ----------------------------------------------------------------------
print("\nM(t, q) at t = 1:")
for q in (-1.0, 0.0, 0.3, 2.0 / 3.0, 1.0, 2.0):
    print(f"  q={q:5.2f}:  {m_kernel(1.0, q):+.6f}")

# ----------------------------------------------------------------------
# 3. F_q through both routes (polygamma vs Laplace quadrature) and its
#    finite differences; q = 2/3 eventually goes negative outright.
# ----------------------------------------------------------------------
print("\nF_q(x) values (theta route, cross-checked against quadrature):")
for q in (0.0, 2.0 / 3.0):
    vals = [float(f_q(x, q, cross_check=(x == 1.0)).value) for x in (1.0, 2.0, 4.0, 8.0)]
    print(f"  q={q:5.3f}: " + "  ".join(f"{v:+.6f}" for v in vals))

# ----------------------------------------------------------------------
# 4. Certificates: numeric evidence for/against complete monotonicity.
# ----------------------------------------------------------------------
print("\ncertificates:")
for q in (-2.0, 0.0, 1.0, 3.0, 2.0 / 3.0):
    cert = cm_numeric_certificate(q)
    line = f"  q={q:6.3f}: {cert.verdict}"
    if cert.verdict == "refutes":
        line += f"  (kernel witness t = {cert.witnesses['kernel_witness_t']:.3f})"
    print(line)
