"""The spectral symbol function of the sub-Leray operators on M_gamma.

For the measure r^d dr dtheta ds on the hypersurface
Im(zeta_2) = |zeta_1|^gamma (gamma > 1), the k-th Fourier-mode operator has
squared norm

    J(d, gamma, k) = Gamma(A) Gamma(B) / Gamma(k+1)^2
                     * (gamma/2)^(2k+2) * (gamma-1)^(-B),

    A = (2k+1+d)/gamma,  B = 2k+2 - A,

finite exactly when d lies in the open interval
I_k(gamma) = (-2k-1, (2k+2)(gamma-1)+1) (equivalently A > 0 and B > 0).
The mode norm is sqrt(J); the full operator norm is the supremum over k,
and the modes stabilize to the k -> infinity limit
sqrt(gamma / (2 sqrt(gamma-1))) regardless of d.

Everything is computed in log-Gamma space with certified error radii (see
:mod:`leraykit.specialfn`), so strict comparisons between modes can be made
with the radii separating the values.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import List, Optional, Tuple

import mpmath
from mpmath import mpf

from .errors import (
    DegenerateGamma,
    DomainError,
    InconclusiveComparison,
    ToleranceUnreachable,
    UnboundedMode,
)
from .specialfn import DEFAULT_TOL, BoundedFloat, _slack, _to_mpf, log_gamma

__all__ = [
    "SymbolQuery",
    "MeasureTag",
    "HolderReparam",
    "Monotonicity",
    "ScanResult",
    "NormResult",
    "boundedness_interval",
    "symbol_value",
    "holder_conjugate",
    "holder_partner",
    "hf_limit",
    "leray_norm",
    "monotonicity_scan",
    "sup_search",
]


def _require_gamma(gamma: float) -> None:
    if not gamma > 1:
        raise DomainError(f"gamma must exceed 1 (got {gamma})")


def boundedness_interval(gamma: float, k: int) -> Tuple[float, float]:
    """Open interval I_k(gamma) of measure exponents d for which the k-th
    mode operator is bounded.  Nested: I_k is contained in I_{k+1}."""
    _require_gamma(gamma)
    if k < 0:
        raise DomainError("mode index k must be non-negative")
    return (-2 * k - 1, (2 * k + 2) * (gamma - 1) + 1)


def _in_interval_exact(d: float, gamma: float, k: int) -> bool:
    # exact check via Fractions (floats convert exactly)
    dF, gF = Fraction(d), Fraction(gamma)
    return Fraction(-2 * k - 1) < dF < (2 * k + 2) * (gF - 1) + 1


@dataclass(frozen=True)
class SymbolQuery:
    """(gamma, d, k) triple addressing one symbol value / mode norm."""

    gamma: float
    d: float
    k: int

    def __post_init__(self) -> None:
        _require_gamma(self.gamma)
        if self.k < 0:
            raise DomainError("mode index k must be non-negative")

    def is_finite(self) -> bool:
        return _in_interval_exact(self.d, self.gamma, self.k)


@dataclass(frozen=True)
class MeasureTag:
    """A named measure r^d dr dtheta ds.

    kind 'generic' carries an explicit exponent; the distinguished kinds
    resolve their exponent from gamma:

        pairing        d = gamma - 1
        preferred      d = (gamma + 1)/3
        dual_preferred d = (5 gamma - 7)/3
        lebesgue       d = 1
    """

    kind: str
    d: Optional[float] = None

    _KINDS = ("generic", "pairing", "preferred", "dual_preferred", "lebesgue")

    def __post_init__(self) -> None:
        if self.kind not in self._KINDS:
            raise DomainError(f"unknown measure kind {self.kind!r}")
        if self.kind == "generic" and self.d is None:
            raise DomainError("generic measure requires an explicit exponent d")

    @classmethod
    def generic(cls, d: float) -> "MeasureTag":
        return cls("generic", float(d))

    @classmethod
    def pairing(cls) -> "MeasureTag":
        return cls("pairing")

    @classmethod
    def preferred(cls) -> "MeasureTag":
        return cls("preferred")

    @classmethod
    def dual_preferred(cls) -> "MeasureTag":
        return cls("dual_preferred")

    @classmethod
    def lebesgue(cls) -> "MeasureTag":
        return cls("lebesgue")

    def exponent(self, gamma: float) -> float:
        _require_gamma(gamma)
        if self.kind == "generic":
            return float(self.d)  # type: ignore[arg-type]
        if self.kind == "pairing":
            return gamma - 1
        if self.kind == "preferred":
            return (gamma + 1) / 3
        if self.kind == "dual_preferred":
            return (5 * gamma - 7) / 3
        return 1.0


@dataclass(frozen=True)
class HolderReparam:
    """Exponent reparameterization d = a (gamma - 2) + 1.

    The map is a bijection in d for every gamma != 2, and carrying `a`
    across gamma -> gamma* realizes the conjugation symmetry of the symbol.
    The companion parameter q = 1 - a controls the polygamma comparison:
    J(d, gamma, k) is finite for every mode k exactly when
    |q| < gamma / |gamma - 2|.
    """

    a: float

    @property
    def q(self) -> float:
        return 1.0 - self.a

    def exponent(self, gamma: float) -> float:
        _require_gamma(gamma)
        return self.a * (gamma - 2) + 1

    @classmethod
    def from_exponent(cls, gamma: float, d: float) -> "HolderReparam":
        _require_gamma(gamma)
        if gamma == 2:
            raise DegenerateGamma("gamma = 2: every a yields d = 1")
        return cls((d - 1) / (gamma - 2))

    def all_modes_finite(self, gamma: float) -> bool:
        _require_gamma(gamma)
        if gamma == 2:
            return True  # d = 1 sits inside every interval
        return abs(self.q) < gamma / abs(gamma - 2)


def symbol_value(query: "SymbolQuery | Tuple[float, float, int]", tol: float = DEFAULT_TOL) -> BoundedFloat:
    """J(d, gamma, k) > 0 with certified radius; the mode norm is its
    square root.

    Raises UnboundedMode when d lies outside I_k(gamma) (the mode norm is
    infinite there).
    """
    if not isinstance(query, SymbolQuery):
        query = SymbolQuery(*query)
    gamma, d, k = query.gamma, query.d, query.k
    if not query.is_finite():
        lo, hi = boundedness_interval(gamma, k)
        raise UnboundedMode(
            f"d={d} outside the k={k} boundedness interval ({lo:.6g}, {hi:.6g}) for gamma={gamma}"
        )
    g = _to_mpf(gamma)
    a = (2 * k + 1 + _to_mpf(d)) / g
    b = 2 * k + 2 - a
    lg_a = log_gamma(a)
    lg_b = log_gamma(b)
    lg_k = log_gamma(mpf(k + 1))
    ln_half_gamma = _bf_ln(g / 2)
    ln_gm1 = _bf_ln(g - 1)
    log_j = lg_a + lg_b - lg_k * 2 + ln_half_gamma * (2 * k + 2) - ln_gm1 * b
    out = log_j.exp()
    if out.error_radius > tol:
        raise ToleranceUnreachable(
            f"symbol radius {float(out.error_radius):.3e} exceeds tol={tol}"
        )
    return out


def _bf_ln(x: mpf) -> BoundedFloat:
    v = mpmath.ln(x)
    return BoundedFloat(v, _slack(v, 2))


def holder_conjugate(gamma: float) -> float:
    """gamma* = gamma/(gamma - 1); an involution on (1, infinity)."""
    _require_gamma(gamma)
    return gamma / (gamma - 1)


def holder_partner(gamma: float, d: float) -> Tuple[float, float]:
    """The unique (gamma*, d') whose symbol function matches (gamma, d)
    mode for mode: with a = (d-1)/(gamma-2), d' = a(gamma*-2)+1.

    gamma = 2 is degenerate (every exponent reparameterizes to d = 1), so
    no unique partner exists there.
    """
    _require_gamma(gamma)
    if gamma == 2:
        raise DegenerateGamma("gamma = 2: partner exponent is not unique")
    gs = holder_conjugate(gamma)
    a = (d - 1) / (gamma - 2)
    return gs, a * (gs - 2) + 1


def hf_limit(gamma: float) -> float:
    """High-frequency limit of the mode norms: sqrt(gamma/(2 sqrt(gamma-1))).

    Independent of d, and invariant under gamma -> gamma*.
    """
    _require_gamma(gamma)
    return float(_hf_limit_bf(gamma).value)


def _hf_limit_bf(gamma: float) -> BoundedFloat:
    g = _to_mpf(gamma)
    v = mpmath.sqrt(g / (2 * mpmath.sqrt(g - 1)))
    return BoundedFloat(v, _slack(v, 4))


# ----------------------------------------------------------------------
# monotonicity scans
# ----------------------------------------------------------------------
class Monotonicity(str, Enum):
    STRICTLY_DECREASING = "strictly-decreasing"
    STRICTLY_INCREASING = "strictly-increasing"
    NON_MONOTONE = "non-monotone"
    CONSTANT = "constant"


@dataclass(frozen=True)
class ScanResult:
    classification: Monotonicity
    witness_k: Optional[int] = None  # first turning index for NON_MONOTONE


def monotonicity_scan(gamma: float, d: float, k_max: int, tol: float = DEFAULT_TOL) -> ScanResult:
    """Classify k |-> J(d, gamma, k) on 0..k_max with strict comparisons
    separated by the error radii.

    CONSTANT is claimed only for the exactly-constant case gamma = 2, d = 1.
    Raises InconclusiveComparison when adjacent radii overlap (lower tol).
    """
    _require_gamma(gamma)
    if k_max < 1:
        raise DomainError("k_max must be at least 1")
    if not _in_interval_exact(d, gamma, 0):
        lo, hi = boundedness_interval(gamma, 0)
        raise UnboundedMode(
            f"d={d} outside ({lo:.6g}, {hi:.6g}); some scanned modes are unbounded"
        )
    values = [symbol_value(SymbolQuery(gamma, d, k), tol) for k in range(k_max + 1)]

    if gamma == 2 and d == 1:
        for k, v in enumerate(values):
            if not v.contains(1):
                raise InconclusiveComparison(f"expected constant 1, J at k={k} excludes it")
        return ScanResult(Monotonicity.CONSTANT)

    direction = 0  # +1 increasing, -1 decreasing
    for k in range(k_max):
        a, b = values[k], values[k + 1]
        if b.lower > a.upper:
            step = 1
        elif b.upper < a.lower:
            step = -1
        else:
            raise InconclusiveComparison(
                f"J at k={k} and k={k + 1} not separated by radii; lower tol"
            )
        if direction == 0:
            direction = step
        elif step != direction:
            return ScanResult(Monotonicity.NON_MONOTONE, witness_k=k)
    return ScanResult(
        Monotonicity.STRICTLY_INCREASING if direction > 0 else Monotonicity.STRICTLY_DECREASING
    )


# ----------------------------------------------------------------------
# operator norm
# ----------------------------------------------------------------------
@dataclass(frozen=True)
class NormResult:
    """Operator norm value with provenance.

    method is 'closed-form' when a proven formula applies; otherwise
    'sup-search', which scans modes until they stabilize near the
    high-frequency limit.  The stabilization cutoff is a heuristic: the
    limit is proven but no uniform rate is, so the result records how far
    the scan went and whether it stabilized.
    """

    value: BoundedFloat
    method: str
    gamma: float
    d: float
    attained_at: Optional[int] = None  # None: supremum is the HF limit
    k_scanned: int = 0
    stabilized: Optional[bool] = None


def sup_search(
    gamma: float,
    d: float,
    k_cap: int = 2000,
    tol: float = DEFAULT_TOL,
    stabilization_tol: float = 1e-4,
    consecutive: int = 20,
) -> Tuple[BoundedFloat, Optional[int], int, bool]:
    """Scan sqrt(J(d, gamma, k)) for k = 0.. and bracket the supremum.

    Stops once `consecutive` successive values approach the high-frequency
    limit one-sidedly within `stabilization_tol`, or at k_cap.  Returns
    (sup value, argmax index or None when the limit dominates, number of
    modes scanned, stabilized flag).
    """
    limit = _hf_limit_bf(gamma)
    best: BoundedFloat | None = None
    best_k = 0
    run = 0
    run_sign = 0
    k = 0
    stabilized = False
    while k <= k_cap:
        v = symbol_value(SymbolQuery(gamma, d, k), tol).sqrt()
        if best is None or v.value > best.value:
            best, best_k = v, k
        diff = v.value - limit.value
        if abs(diff) < stabilization_tol:
            sign = 1 if diff > 0 else -1
            if run_sign == sign:
                run += 1
            else:
                run_sign, run = sign, 1
            if run >= consecutive:
                stabilized = True
                break
        else:
            run = 0
            run_sign = 0
        k += 1
    assert best is not None
    if limit.value > best.value:
        return limit, None, k, stabilized
    return best, best_k, k, stabilized


def leray_norm(
    gamma: float,
    measure: "MeasureTag | float",
    tol: float = DEFAULT_TOL,
    k_cap: int = 2000,
    stabilization_tol: float = 1e-4,
) -> NormResult:
    """Norm of the full transform on L^2(M_gamma, r^d dr dtheta ds).

    Closed forms (mode of attainment in parentheses):

    * gamma = 2, d in (-1, 3): sqrt(J(d, 2, 0))  = sqrt(pi/2 (1-d) sec(d pi/2))   (k=0)
    * d = 1:                   sqrt(J(1, gamma, 0))                               (k=0)
    * d = gamma - 1 (pairing): sqrt(J(d, gamma, 0)) = gamma/(2 sqrt(gamma-1))     (k=0)
    * d = (gamma+1)/3 (preferred): sqrt(gamma/(2 sqrt(gamma-1)))        (supremum = HF limit)

    Everything else falls back to the mode scan (method 'sup-search').
    Raises UnboundedMode when d is outside I_0(gamma).
    """
    _require_gamma(gamma)
    if isinstance(measure, MeasureTag):
        d = measure.exponent(gamma)
        kind = measure.kind
    else:
        d = float(measure)
        kind = "generic"
    if not _in_interval_exact(d, gamma, 0):
        lo, hi = boundedness_interval(gamma, 0)
        raise UnboundedMode(
            f"d={d} outside ({lo:.6g}, {hi:.6g}); the transform is unbounded on this space"
        )

    def _close(x: float, y: float) -> bool:
        return abs(x - y) < 1e-12

    if kind == "preferred" or _close(d, (gamma + 1) / 3):
        return NormResult(_hf_limit_bf(gamma), "closed-form", gamma, d, attained_at=None)
    if gamma == 2 or kind == "pairing" or kind == "lebesgue" or _close(d, gamma - 1) or _close(d, 1.0):
        value = symbol_value(SymbolQuery(gamma, d, 0), tol).sqrt()
        return NormResult(value, "closed-form", gamma, d, attained_at=0)

    value, argmax, scanned, stabilized = sup_search(
        gamma, d, k_cap=k_cap, tol=tol, stabilization_tol=stabilization_tol
    )
    return NormResult(
        value,
        "sup-search",
        gamma,
        d,
        attained_at=argmax,
        k_scanned=scanned,
        stabilized=stabilized,
    )
