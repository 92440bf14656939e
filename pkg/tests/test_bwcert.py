"""Kernel quadratic, F_q routes, and complete-monotonicity evidence."""

import math

import pytest

from leraykit.bwcert import (
    S2_SMALL_T_LIMIT,
    cm_numeric_certificate,
    bw_certificate_suite,
    discriminant,
    discriminant_factored,
    f_q,
    g0,
    g1,
    g2,
    h0,
    h1,
    m_kernel,
    one_minus_s1,
    quadratic_roots,
)
from leraykit.errors import DomainError

T_GRID = [10 ** (-4 + 5.7 * i / 39) for i in range(40)]  # log grid 1e-4 .. 50


def test_g_positivity_on_grid():
    for t in T_GRID:
        assert g0(t) > 0 and g1(t) > 0 and g2(t) > 0, t


def test_h_functions_vanish_at_zero_and_stay_positive():
    # h0 and h1 vanish to third/second order; both positive for t > 0
    assert h0(1e-4) == pytest.approx((1e-12) / 6, rel=1e-3)
    assert h1(1e-4) == pytest.approx((1e-8) / 2, rel=1e-3)
    for t in T_GRID:
        assert h0(t) > 0 and h1(t) > 0


def test_m_kernel_examples():
    for t in (0.1, 1.0, 5.0):
        assert m_kernel(t, 0.0) == g0(t) > 0
    # leading small-t coefficient q^2 - q + 1/6 at q = 1/2 is -1/12
    assert m_kernel(1e-3, 0.5) == pytest.approx(-8.333e-11, rel=2e-3)
    # shrinking-t oracle for the t^3 coefficient
    for q in (0.3, 0.5):
        lead = q * q - q + 1 / 6
        ratios = [m_kernel(t, q) / t ** 3 for t in (1e-2, 1e-3, 1e-4)]
        assert ratios[-1] == pytest.approx(lead, rel=1e-3)
    # positive for q outside the root band, on a wide grid
    for q in (-1.0, 0.0, 1.0, 2.0):
        for t in T_GRID:
            assert m_kernel(t, q) > 0, (t, q)
    with pytest.raises(DomainError):
        m_kernel(0.0, 1.0)


def test_discriminant_identity_and_positivity():
    for t in T_GRID:
        fac = discriminant_factored(t)
        assert fac > 0
        if t >= 1e-2:  # the unfactored difference cancels below this
            assert discriminant(t) == pytest.approx(fac, rel=1e-10)


def test_cosh_inequality_inner_factor():
    # (e^t - 1)^2 - t^2 e^t > 0 is the inner factor of the discriminant
    for t in T_GRID:
        assert discriminant_factored(t) / (4 * (math.exp(t) - 1) ** 2 if t < 500 else 1) > 0


def test_quadratic_roots_examples():
    s1, s2 = quadratic_roots(1e-4)
    assert s2 == pytest.approx(S2_SMALL_T_LIMIT, abs=1e-4)
    assert 0 < s2 < s1 < 1
    gap = one_minus_s1(50.0)
    assert 0 < gap < 1e-6  # s1 approaches 1 from below
    s1, s2 = quadratic_roots(1.0)
    assert 0 < s2 < s1 < 1
    with pytest.raises(DomainError):
        quadratic_roots(-1.0)


def test_root_ordering_and_residual_on_grid():
    for t in T_GRID:
        if t > 30:
            continue  # 1 - s1 underflows double resolution near 1 beyond ~45
        s1, s2 = quadratic_roots(t)
        assert 0 < s2 < s1 < 1, t
        scale = g0(t) + abs(g1(t)) + g2(t)
        for s in (s1, s2):
            assert abs(m_kernel(t, s)) / scale < 1e-8, t


def test_one_minus_s1_matches_direct_at_moderate_t():
    for t in (0.5, 1.0, 2.5, 5.0, 10.0):
        s1, _ = quadratic_roots(t)
        assert one_minus_s1(t) == pytest.approx(1 - s1, rel=1e-9)


def test_f_q_positive_and_decreasing_at_q0():
    xs = (0.5, 1.0, 2.0, 4.0, 8.0)
    vals = [f_q(x, 0.0, cross_check=(x == 0.5)) for x in xs]
    for v in vals:
        assert v.separated_above(0)
    for a, b in zip(vals, vals[1:]):
        assert float(a.value) > float(b.value)


def test_f_q_alternating_differences_at_q1():
    h = 0.5
    for x in (0.5, 1.5, 3.0):
        vals = [f_q(x + i * h, 1.0, cross_check=False) for i in range(4)]
        d1 = vals[1] - vals[0]
        d2 = vals[2] - 2 * vals[1] + vals[0]
        d3 = vals[3] - 3 * vals[2] + 3 * vals[1] - vals[0]
        assert (-d1).separated_above(0)
        assert d2.separated_above(0)
        assert (-d3).separated_above(0)


def test_f_q_integrand_negative_somewhere_at_two_thirds():
    assert any(m_kernel(t, 2.0 / 3.0) < 0 for t in T_GRID)


def test_f_q_domain():
    with pytest.raises(DomainError):
        f_q(0.0, 0.5)


def test_phi_below_one_on_supported_q_grid():
    """phi(r, q) stays below 1 with certified margins for the q ranges the
    kernel positivity covers, r on a log-offset grid up to 1e3."""
    from leraykit.specialfn import phi

    for q in (-5.0, -1.0, 2.0, 5.0):
        for i in range(25):
            r = q + 0.05 * ((1000.0 - q) / 0.05) ** (i / 24.0)
            v = phi(r, q)
            assert v.separated_below(1), (q, r)


def test_s2_grid_evidence_reported():
    # the structure certificate carries the s2 sample values (evidence for
    # the conjectured monotonicity; no invariant asserted)
    suite = bw_certificate_suite()
    structure = next(c for c in suite if c.claim_id == "bw.quadratic.structure")
    grid = structure.witnesses["s2_grid"]
    assert len(grid) >= 5
    assert grid[0][1] == pytest.approx(S2_SMALL_T_LIMIT, abs=1e-3)


def test_cm_certificates():
    assert cm_numeric_certificate(-2.0).verdict == "supports"
    assert cm_numeric_certificate(3.0).verdict == "supports"
    cert = cm_numeric_certificate(2.0 / 3.0)
    assert cert.verdict == "refutes"
    t_wit = cert.witnesses["kernel_witness_t"]
    assert m_kernel(t_wit, 2.0 / 3.0) < 0


def test_cm_certificate_validation():
    with pytest.raises(DomainError):
        cm_numeric_certificate(0.0, orders=9)
    with pytest.raises(DomainError):
        cm_numeric_certificate(0.0, grid=[-1.0])


def test_suite_passes_and_is_json_serializable():
    suite = bw_certificate_suite()
    assert all(c.passed for c in suite)
    ids = {c.claim_id for c in suite}
    assert "bw.cm-refuted.q=2/3" in ids
    for cert in suite:
        cert.to_json()  # must not raise
