"""Embedded exact constants for the Euler-Maclaurin certificates.

Every table here is stored as data AND independently re-derived by the
pipeline in :mod:`leraykit.emcert`; the certificate suite asserts exact
equality in both directions, so a transcription error on either side is
caught.  Coefficients are ascending-exponent.

Naming: H denotes the rational-plus-logarithm lower bound for the
preferred-mode series excess (see emcert); the three integer polynomials
below are the numerators of its rational part and of the rational parts of
its first two derivatives over the denominators

    D1 = 6250 r^3 (3r+1)^3 (3r+4)^3 (3r+7)^3
    D2 = 3125 r^4 (3r+1)^4 (3r+4)^4 (3r+7)^4
    D3 = 3125 r^5 (3r+1)^5 (3r+4)^5 (3r+7)^5
"""

from __future__ import annotations

from fractions import Fraction
from typing import Dict, List

# numerator of the rational part of H (degree 12)
H_NUM_COEFFS: List[int] = [
    -702464,
    -8805888,
    -44924544,
    -258414880,
    1018286832,
    4962569148,
    11832384015,
    23240472534,
    29834360478,
    23154232644,
    10449759375,
    2501381250,
    246037500,
]

# numerator of the rational part of H' (degree 15)
H1_NUM_COEFFS: List[int] = [
    29503488,
    493129728,
    3546063360,
    14430286080,
    77896979088,
    110838411360,
    -17706703248,
    244982773080,
    1512143688033,
    2940847647885,
    3231415617165,
    2264445221688,
    1025079243543,
    290262740625,
    47054671875,
    3321506250,
]

# numerator of H'' (degree 16); H'' is purely rational
H2_NUM_COEFFS: List[int] = [
    -3304390656,
    -69038161920,
    -640689315840,
    -3491968112640,
    -12471183325440,
    -48684386314944,
    -111582268515360,
    -78421336513920,
    148629164640120,
    378180897173910,
    377142473066319,
    224889469312590,
    92232089533215,
    25224576030090,
    3414213475245,
    66996641106,
    14946778125,
]

H2_AT_ONE_THIRD = Fraction(-437616243, 25600000)
H2_AT_TWO_THIRDS = Fraction(49618, 2278125)

# ----------------------------------------------------------------------
# sign-split of the peak-gap polynomial
#   W(r, Q) = 16 (3r+3Q+1)^3 (3r+3Q-2)^3 - 253125 r^4 (9Q^2 - 3Q - 9r^2 - 2)
# written as W = U - V with positive-coefficient U, V; below are the
# Q^k coefficient polynomials in r (ascending powers of r).
# ----------------------------------------------------------------------
U_COEFFS_BY_QPOW: Dict[int, List[int]] = {
    0: [0, 0, 864, 4752, 502362, 0, 2289789],
    1: [0, 1728, 14256, 0, 701055, 69984],
    2: [864, 14256],
    3: [4752, 0, 0, 233280],
    4: [0, 0, 174960],
    5: [0, 69984],
    6: [11664],
}

V_COEFFS_BY_QPOW: Dict[int, List[int]] = {
    0: [128, 576, 0, 0, 0, 11664],
    1: [576, 0, 0, 15552],
    2: [0, 0, 23328, 116640, 2103165],
    3: [0, 15552, 116640],
    4: [3888, 58320],
    5: [11664],
}

# ----------------------------------------------------------------------
# cleared peak-gap polynomial
#   P(r) = r^18 (U(r, m(r)) - V(r, M(r))),  degree 22,
# with the bracket functions m(r) = 3r/2 + 1/6 + 3/(25r) - 21/(3125 r^3)
# and M(r) = 3r/2 + 1/6 + 3/(25r).
# ----------------------------------------------------------------------
P_COEFFS: List[Fraction] = [
    Fraction(1000376035344, 5 ** 30),
    Fraction(0),
    Fraction(-857465173152, 5 ** 27),
    Fraction(-47636954064, 5 ** 25),
    Fraction(163326699648, 5 ** 24),
    Fraction(6805279152, 5 ** 21),
    Fraction(9694822284, 5 ** 20),
    Fraction(-162030456, 5 ** 17),
    Fraction(-3421928916, 5 ** 17),
    Fraction(-84873096, 5 ** 14),
    Fraction(-922948992, 5 ** 15),
    Fraction(17635968, 5 ** 11),
    Fraction(657460071, 5 ** 12),
    Fraction(10471356, 5 ** 9),
    Fraction(-619164, 5 ** 9),
    Fraction(-3195801, 5 ** 6),
    Fraction(-2065794597, 5 ** 9),
    Fraction(-91854, 5 ** 2),
    Fraction(-629807157, 2 ** 2 * 5 ** 6),
    Fraction(-12267612, 5 ** 4),
    Fraction(-71827641, 2 ** 2 * 5 ** 4),
    Fraction(0),
    Fraction(455625, 2),
]

P_SIGN_CHANGES = 6

P14_AT_ZERO = Fraction(-2159106379702272, 5 ** 7)
P14_AT_TWO_THIRDS = Fraction(18441535745869667168145408, 5 ** 7)
