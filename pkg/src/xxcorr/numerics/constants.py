"""Named mathematical constants used across the package.

Values are pinned to 30+ significant digits from standard tables; only
double precision survives into the arithmetic.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

# zeta'(-1)
_ZETA_PRIME_MINUS1 = -0.165421143700450929213919660242780642764
# Barnes G(1/2) = 2^{1/24} e^{1/8} pi^{-1/4} A_Glaisher^{-3/2}
_BARNES_G_HALF = 0.603244281209446206191429224534702079883


@dataclass(frozen=True)
class Constants:
    """Constants entering the correlator prefactors.

    Attributes
    ----------
    zeta_prime_minus1 : float
        zeta'(-1).
    barnes_g_half : float
        G(1/2).
    lnA : float
        ln A with A = 2^{1/12} exp(3 zeta'(-1)), the constant of ln R_N.
    c0 : float
        Leading correlator prefactor C_0 = 2^{-1/2} pi^{3/2} G(1/2)^4.
    """

    zeta_prime_minus1: float
    barnes_g_half: float

    @property
    def lnA(self) -> float:
        return math.log(2.0) / 12.0 + 3.0 * self.zeta_prime_minus1

    @property
    def A(self) -> float:
        return math.exp(self.lnA)

    @property
    def ln_barnes_g_half(self) -> float:
        return math.log(self.barnes_g_half)

    @property
    def c0(self) -> float:
        return 2.0**-0.5 * math.pi**1.5 * self.barnes_g_half**4

    @property
    def leading_amplitude(self) -> float:
        """C_0 / sqrt(pi), the amplitude of x^{-1/2} in G(x)."""
        return self.c0 / math.sqrt(math.pi)

    def identity_gap(self) -> float:
        """|A^2 - pi G(1/2)^4|; zero up to rounding."""
        return abs(self.A**2 - math.pi * self.barnes_g_half**4)


CONSTANTS = Constants(
    zeta_prime_minus1=_ZETA_PRIME_MINUS1,
    barnes_g_half=_BARNES_G_HALF,
)
