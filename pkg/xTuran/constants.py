#!/usr/bin/env python
"""
constants.py
Written by Tyler Sutterley (02/2026)
Scales and constants for K_r-free subgraphs of G(n,p)

    Lambda_r(n,p) = n^(r-2) p^(C(r,2)-1)
    a_r = (r-4)/(2(r-3)), b_r = r(r-3)/(2(r-1)^2), c_r = (a_r+b_r)/2
    gamma < (1/2) ((c_r-a_r)/(4r^2+6))^(r-2), zeta = (2 gamma)^(1/(r-2))
    Sigma = 24 r log(r) 2^r max{(zeta p)^-1, np/(zeta^(r-2) Lambda_r)}
    threshold p = C n^(-2/(r+1)) log(n)^(2/((r+1)(r-2)))

UPDATE HISTORY:
    Written 02/2026
"""

from __future__ import annotations

import math
import logging
import dataclasses
from fractions import Fraction
from scipy.special import comb
from xTuran.utilities import as_rational

__all__ = [
    "lambda_r",
    "threshold_p",
    "stopping_constant",
    "abc",
    "gamma_max",
    "zeta",
    "constants",
    "sigma_cap",
    "krcopy_scale",
    "ParamSet",
]


# PURPOSE: natural scale of the number of K_r^- extensions of a pair
def lambda_r(n: int, p, r: int, exact: bool = False):
    """
    Scale ``n^(r-2) p^(C(r,2)-1)`` of ``kappa(xy)``

    Parameters
    ----------
    n: int
        number of vertices
    p: float or Fraction
        edge probability
    r: int
        clique order
    exact: bool, default False
        return an exact ``Fraction``
    """
    if int(n) < 1:
        raise ValueError(f"Number of vertices must be positive: {n}")
    if not (0 <= float(p) <= 1):
        raise ValueError(f"Edge probability outside [0, 1]: {p}")
    e = int(comb(r, 2, exact=True)) - 1
    if exact:
        return Fraction(n) ** (r - 2) * as_rational(p) ** e
    return float(n) ** (r - 2) * float(p) ** e


# PURPOSE: edge probability threshold for t_r(G) = b_r(G)
def threshold_p(n: int, r: int, C: float = 1.0) -> float:
    """
    Threshold ``C n^(-2/(r+1)) log(n)^(2/((r+1)(r-2)))``

    Parameters
    ----------
    n: int
        number of vertices
    r: int
        clique order
    C: float, default 1.0
        leading constant
    """
    if n < 3:
        raise ValueError(f"Threshold requires n >= 3: {n}")
    if r < 3:
        raise ValueError(f"Clique order must be at least 3: {r}")
    return (
        C * n ** (-2.0 / (r + 1)) * math.log(n) ** (2.0 / ((r + 1) * (r - 2)))
    )


def stopping_constant(r: int) -> float:
    """
    Constant ``(2r/(r+1))^(2/((r+1)(r-2)))`` at which every edge of
    ``G(n,p)`` lies in a ``K_r``
    """
    if r < 3:
        raise ValueError(f"Clique order must be at least 3: {r}")
    return (2.0 * r / (r + 1)) ** (2.0 / ((r + 1) * (r - 2)))


# PURPOSE: the rational constants a_r, b_r, c_r
def abc(r: int) -> tuple:
    """
    Rational constants ``(a_r, b_r, c_r)`` for ``r >= 4``

    Parameters
    ----------
    r: int
        clique order
    """
    if r < 4:
        raise ValueError(f"a_r, b_r, c_r are defined for r >= 4: {r}")
    a = Fraction(r - 4, 2 * (r - 3))
    b = Fraction(r * (r - 3), 2 * (r - 1) ** 2)
    return (a, b, (a + b) / 2)


def gamma_max(r: int) -> Fraction:
    """Upper limit ``(1/2)((c_r-a_r)/(4r^2+6))^(r-2)`` for gamma"""
    a, _, c = abc(r)
    return Fraction(1, 2) * ((c - a) / (4 * r**2 + 6)) ** (r - 2)


def zeta(gamma, r: int) -> float:
    """``zeta = (2 gamma)^(1/(r-2))``"""
    if float(gamma) <= 0:
        raise ValueError(f"gamma must be positive: {gamma}")
    return (2.0 * float(gamma)) ** (1.0 / (r - 2))


# PURPOSE: constants for a clique order
def constants(r: int, gamma=None) -> dict:
    """
    Exact constants for a clique order

    Parameters
    ----------
    r: int
        clique order
    gamma: float, Fraction or None, default None
        bad-pair constant (default: half of ``gamma_max``)

    Returns
    -------
    params: dict
        ``a_r``, ``b_r``, ``c_r``, ``gamma_max``, ``gamma`` and ``zeta``
    """
    a, b, c = abc(r)
    gmax = gamma_max(r)
    gamma = gmax / 2 if gamma is None else as_rational(gamma)
    if not (0 < gamma < gmax):
        logging.warning(f"gamma={float(gamma):g} outside (0, {float(gmax):g})")
    return dict(
        a_r=a,
        b_r=b,
        c_r=c,
        gamma_max=gmax,
        gamma=gamma,
        zeta=zeta(gamma, r),
    )


# PURPOSE: cap on the number of bad pairs at a vertex
def sigma_cap(n: int, p: float, r: int, zeta: float) -> float:
    """
    ``Sigma = 24 r log(r) 2^r max{(zeta p)^-1, np/(zeta^(r-2) Lambda_r)}``

    Parameters
    ----------
    n: int
        number of vertices
    p: float
        edge probability
    r: int
        clique order
    zeta: float
        ``(2 gamma)^(1/(r-2))``
    """
    if (zeta <= 0) or (p <= 0):
        raise ValueError(f"zeta and p must be positive: {zeta}, {p}")
    prefactor = 24.0 * r * math.log(r) * 2.0**r
    first = 1.0 / (zeta * p)
    second = n * p / (zeta ** (r - 2) * lambda_r(n, p, r))
    return prefactor * max(first, second)


def krcopy_scale(n: int, p: float, r: int, s: int) -> float:
    """Scale ``n^(r-s) p^(C(r,2)-C(s,2))`` of K_r extensions of an s-clique"""
    if not (0 <= s <= r):
        raise ValueError(f"Need 0 <= s <= r: s={s}, r={r}")
    e = comb(r, 2, exact=True) - comb(s, 2, exact=True)
    return float(n) ** (r - s) * float(p) ** e


@dataclasses.dataclass
class ParamSet:
    """
    Parameters of an experiment and their derived constants

    Attributes
    ----------
    n: int
        number of vertices
    r: int
        clique order
    p: float
        edge probability
    C: float, default 1.0
        threshold constant
    delta: float, default 0.1
        cut balance slack
    alpha: float, default 0.2
        rigidity slack
    gamma: float or None, default None
        bad-pair constant (default: half of ``gamma_max`` for ``r >= 4``)
    """

    n: int
    r: int
    p: float
    C: float = 1.0
    delta: float = 0.1
    alpha: float = 0.2
    gamma: float | Fraction | None = None

    def __post_init__(self):
        if self.r < 3:
            raise ValueError(f"Clique order must be at least 3: {self.r}")
        if self.r >= 4:
            a, b, _ = abc(self.r)
            assert a < b, f"a_r >= b_r for r={self.r}"
            if self.gamma is None:
                self.gamma = gamma_max(self.r) / 2

    @property
    def Lambda(self) -> float:
        return lambda_r(self.n, self.p, self.r)

    @property
    def a_r(self):
        return abc(self.r)[0] if self.r >= 4 else None

    @property
    def b_r(self):
        return abc(self.r)[1] if self.r >= 4 else None

    @property
    def c_r(self):
        return abc(self.r)[2] if self.r >= 4 else None

    @property
    def gamma_max(self):
        return gamma_max(self.r) if self.r >= 4 else None

    @property
    def zeta(self):
        return None if self.gamma is None else zeta(self.gamma, self.r)

    @property
    def sigma(self):
        if (self.zeta is None) or (self.p <= 0):
            return None
        return sigma_cap(self.n, self.p, self.r, self.zeta)

    @property
    def threshold(self) -> float:
        return threshold_p(self.n, self.r, self.C)

    def to_dict(self) -> dict:
        """JSON echo of the parameters and derived constants"""

        def number(x):
            if x is None:
                return None
            return str(x) if isinstance(x, Fraction) else float(x)

        d = dict(n=self.n, r=self.r, p=float(self.p), C=self.C)
        d.update(delta=self.delta, alpha=self.alpha, gamma=number(self.gamma))
        d.update(
            Lambda=self.Lambda,
            a_r=number(self.a_r),
            b_r=number(self.b_r),
            c_r=number(self.c_r),
            gamma_max=number(self.gamma_max),
            zeta=self.zeta,
            sigma=self.sigma,
            threshold=self.threshold if self.n >= 3 else None,
        )
        return d
