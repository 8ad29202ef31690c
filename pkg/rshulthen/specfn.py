""" Special functions: log-gamma, beta, terminating 2F1 and Jacobi polynomials

Jacobi polynomials carry the standard Rodrigues normalization,
P_n(x) = (-1)^n / (2^n n!) (1-x)^-a (1+x)^-b d^n/dx^n [(1-x)^(a+n) (1+x)^(b+n)].
A prefactor written n! 2^2 is read as n! 2^n.
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np

from dataclasses import dataclass

from scipy import special

from rshulthen.errors import DomainError


@dataclass(frozen=True)
class JacobiParams:
    """ Degree and superscripts of P_n^(a_exp, b_exp) """
    n: int
    a_exp: float
    b_exp: float

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 0:
            raise DomainError("Jacobi degree must be a non-negative integer, got {}".format(self.n))
        if self.a_exp <= -1. or self.b_exp <= -1.:
            raise DomainError("Jacobi superscripts must exceed -1, got ({:g}, {:g})".format(
                self.a_exp, self.b_exp))


def log_gamma(x):
    """ Natural log of the gamma function for positive arguments

    Parameters
    ----------
    x : float or ndarray
      Must be > 0

    Returns
    -------
    lng : float or ndarray

    """
    xa = np.asarray(x, dtype=float)
    if np.any(xa <= 0.):
        raise DomainError("log_gamma requires x > 0")
    lng = special.gammaln(xa)
    if np.ndim(lng) == 0:
        return float(lng)
    return lng


def beta_fn(x, y):
    """ Euler beta function Gamma(x)Gamma(y)/Gamma(x+y), in log space

    Parameters
    ----------
    x, y : float
      Both > 0

    Returns
    -------
    B : float
    """
    if x <= 0. or y <= 0.:
        raise DomainError("beta_fn requires positive arguments, got ({:g}, {:g})".format(x, y))
    return float(np.exp(log_gamma(x) + log_gamma(y) - log_gamma(x + y)))


def hyp2f1_terminating(n, b, c, x):
    """ Terminating Gauss series 2F1(-n, b; c; x) as a degree-n polynomial

    Parameters
    ----------
    n : int
      Non-negative; the series stops after the x^n term
    b : float
    c : float
      c + k must not vanish for k = 0..n-1
    x : float or ndarray

    Returns
    -------
    val : float or ndarray

    """
    if int(n) != n or n < 0:
        raise DomainError("hyp2f1_terminating needs a non-negative integer n, got {}".format(n))
    n = int(n)
    for kk in range(n):
        if c + kk == 0.:
            raise DomainError("Pole of 2F1: c + {:d} = 0".format(kk))
    xa = np.asarray(x, dtype=float)
    term = np.ones_like(xa)
    total = np.ones_like(xa)
    for kk in range(n):
        term = term * (kk - n) * (b + kk) / ((c + kk) * (kk + 1.)) * xa
        total = total + term
    if np.ndim(total) == 0:
        return float(total)
    return total


def jacobi_p(p, x):
    """ Jacobi polynomial from its terminating hypergeometric form

    P_n^(a,b)(x) = Gamma(n+a+1) / (n! Gamma(a+1)) 2F1(-n, a+b+n+1; a+1; (1-x)/2)

    For x < 0 the series is summed for (-1)^n P_n^(b,a)(-x), which keeps
    its argument in [0, 1/2].

    Parameters
    ----------
    p : JacobiParams
    x : float or ndarray

    Returns
    -------
    val : float or ndarray
    """
    n, a, b = p.n, p.a_exp, p.b_exp
    if n == 0:
        return np.ones_like(np.asarray(x, dtype=float)) if np.ndim(x) else 1.
    xa = np.asarray(x, dtype=float)

    def _series(aa, bb, xx):
        lnpre = log_gamma(n + aa + 1.) - log_gamma(n + 1.) - log_gamma(aa + 1.)
        return np.exp(lnpre) * hyp2f1_terminating(n, aa + bb + n + 1., aa + 1., (1. - xx) / 2.)

    val = np.where(xa >= 0., _series(a, b, xa), (-1)**n * _series(b, a, -xa))
    if np.ndim(val) == 0:
        return float(val)
    return val


def jacobi_recurrence(p, x):
    """ Jacobi polynomial from the three-term recurrence in the degree

    Independent of jacobi_p; used to cross-check it.

    Parameters
    ----------
    p : JacobiParams
    x : float or ndarray

    Returns
    -------
    val : float or ndarray
    """
    n, a, b = p.n, p.a_exp, p.b_exp
    xa = np.asarray(x, dtype=float)
    pm1 = np.ones_like(xa)
    if n == 0:
        return pm1 if np.ndim(x) else float(pm1)
    pk = (a + 1.) + (a + b + 2.) * (xa - 1.) / 2.
    for kk in range(2, n + 1):
        c2k = 2. * kk + a + b
        num1 = (c2k - 1.) * (c2k * (c2k - 2.) * xa + a * a - b * b)
        num2 = 2. * (kk + a - 1.) * (kk + b - 1.) * c2k
        den = 2. * kk * (kk + a + b) * (c2k - 2.)
        pm1, pk = pk, (num1 * pk - num2 * pm1) / den
    if np.ndim(pk) == 0:
        return float(pk)
    return pk
