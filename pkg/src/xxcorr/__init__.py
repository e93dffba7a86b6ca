"""Transverse correlator of the XX spin chain, computed two ways.

Subpackages
-----------
numerics
    Gamma / Barnes G / Bernoulli numbers and exact rational power series.
xxchain
    Finite-L eigenstates, the product formfactor formula and brute-force oracles.
luttinger
    Luttinger-liquid predictions: lowest formfactors, prefactors,
    particle-hole factors and their resummation.
toeplitz
    Exact correlator through the Cauchy determinant and its asymptotic series.
"""

__version__ = "0.1.0"
