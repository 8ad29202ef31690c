""" Parametric Nikiforov-Uvarov shortcut

Handles any equation of the form

  psi'' + (c1 - c2 s) / (s (1 - c3 s)) psi' + (-A s^2 + B s - C) / (s^2 (1 - c3 s)^2) psi = 0

The constants c4..c13, the quantization condition and the polynomial
solution s^c12 (1 - c3 s)^c13 P_n^(c10, c11)(1 - 2 c3 s) follow from the
six input coefficients.  c13 is built from sqrt(c9).
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np

from collections import namedtuple
from dataclasses import dataclass

from rshulthen import specfn
from rshulthen.errors import DomainError, ComplexBranchError, NonNormalizableError


NuFactors = namedtuple('NuFactors', ['rho', 'phi', 'y_n', 'psi'])


@dataclass(frozen=True)
class ParametricODE:
    """ Coefficients of the parametric form; signs as in -A s^2 + B s - C """
    c1: float
    c2: float
    c3: float
    A: float
    B: float
    C: float


@dataclass(frozen=True)
class NuConstants:
    c4: float
    c5: float
    c6: float
    c7: float
    c8: float
    c9: float
    c10: float
    c11: float
    c12: float
    c13: float

    @property
    def sqrt_c8(self):
        return np.sqrt(self.c8)

    @property
    def sqrt_c9(self):
        return np.sqrt(self.c9)


def derive_constants(ode):
    """ Derive c4..c13 from the six coefficients

    Parameters
    ----------
    ode : ParametricODE

    Returns
    -------
    k : NuConstants

    """
    if ode.c3 == 0.:
        raise DomainError("c3 = 0 branch of the NU shortcut is not supported")
    c4 = 0.5 * (1. - ode.c1)
    c5 = 0.5 * (ode.c2 - 2. * ode.c3)
    c6 = c5**2 + ode.A
    c7 = 2. * c4 * c5 - ode.B
    c8 = c4**2 + ode.C
    c9 = ode.c3 * (c7 + ode.c3 * c8) + c6
    if c8 < 0. or c9 < 0.:
        raise ComplexBranchError("Complex NU branch: c8={:g}, c9={:g}".format(c8, c9))
    sc8, sc9 = np.sqrt(c8), np.sqrt(c9)
    # tau'(s) < 0
    dtau = -2. * ode.c3 - 2. * (sc9 + ode.c3 * sc8)
    if not dtau < 0.:
        raise DomainError("tau'(s) = {:g} is not negative".format(dtau))
    c10 = ode.c1 + 2. * c4 + 2. * sc8 - 1.
    c11 = 1. - ode.c1 - 2. * c4 + (2. / ode.c3) * sc9
    c12 = c4 + sc8
    c13 = -c4 + (1. / ode.c3) * (sc9 - c5)
    return NuConstants(c4=c4, c5=c5, c6=c6, c7=c7, c8=c8, c9=c9,
                       c10=c10, c11=c11, c12=c12, c13=c13)


def quantization_residual(k, ode, n):
    """ Left-hand side of the NU energy equation; zero at a quantized solution

    Parameters
    ----------
    k : NuConstants
    ode : ParametricODE
    n : int

    Returns
    -------
    resid : float
    """
    sc8, sc9 = k.sqrt_c8, k.sqrt_c9
    resid = (ode.c2 * n - (2 * n + 1) * k.c5 + (2 * n + 1) * (sc9 + ode.c3 * sc8)
             + n * (n - 1) * ode.c3 + k.c7 + 2. * ode.c3 * k.c8 + 2. * np.sqrt(k.c8 * k.c9))
    return float(resid)


def _chk_normalizable(k, strict=True):
    if k.c10 <= -1. or k.c11 <= -1.:
        raise NonNormalizableError("Need c10 > -1 and c11 > -1, got ({:g}, {:g})".format(k.c10, k.c11))
    if strict:
        bad = (k.c12 <= 0.) or (k.c13 <= 0.)
    else:
        bad = (k.c12 < 0.) or (k.c13 < 0.)
    if bad:
        raise NonNormalizableError("Need c12 > 0 and c13 > 0, got ({:g}, {:g})".format(k.c12, k.c13))


def wavefunction_factors(k, ode, n, strict=True):
    """ Weight, prefactor, Jacobi part and full solution as evaluators

    Parameters
    ----------
    k : NuConstants
    ode : ParametricODE
    n : int
    strict : bool, optional
      If False, a vanishing c12 or c13 is accepted (boundary cases such as
      a ring term switched off)

    Returns
    -------
    factors : NuFactors
      rho(s), phi(s), y_n(s), psi(s) on s in (0, 1/c3), psi unnormalized
    """
    _chk_normalizable(k, strict=strict)
    c3 = float(ode.c3)
    c10, c11, c12, c13 = k.c10, k.c11, k.c12, k.c13
    jp = specfn.JacobiParams(int(n), c10, c11)

    def rho(s):
        s = np.asarray(s, dtype=float)
        return s**c10 * (1. - c3 * s)**c11

    def phi(s):
        s = np.asarray(s, dtype=float)
        return s**c12 * (1. - c3 * s)**c13

    def y_n(s):
        s = np.asarray(s, dtype=float)
        return specfn.jacobi_p(jp, 1. - 2. * c3 * s)

    def psi(s):
        return phi(s) * y_n(s)

    return NuFactors(rho=rho, phi=phi, y_n=y_n, psi=psi)


def psi_hypergeometric(k, ode, n):
    """ Solution written with 2F1(-n, 1 + c10 + c11 + n; c10 + 1; c3 s)

    Differs from wavefunction_factors(...).psi by the constant
    (c10 + 1)_n / n!.

    Returns
    -------
    psi : function
    """
    _chk_normalizable(k, strict=False)
    c3 = float(ode.c3)
    c10, c11, c12, c13 = k.c10, k.c11, k.c12, k.c13
    n = int(n)

    def psi(s):
        s = np.asarray(s, dtype=float)
        return (s**c12 * (1. - c3 * s)**c13
                * specfn.hyp2f1_terminating(n, 1. + c10 + c11 + n, c10 + 1., c3 * s))
    return psi


def ode_residual(ode, func, s, h=1e-4):
    """ Residual of the parametric equation for a trial function

    Derivatives come from five-point central differences.

    Parameters
    ----------
    ode : ParametricODE
    func : function
    s : ndarray
      Interior points, at least 2h away from 0 and 1/c3
    h : float, optional

    Returns
    -------
    resid : ndarray
    scale : ndarray
      Largest magnitude among the three terms at each point
    """
    s = np.asarray(s, dtype=float)
    f0 = func(s)
    fp1, fm1 = func(s + h), func(s - h)
    fp2, fm2 = func(s + 2 * h), func(s - 2 * h)
    d1 = (-fp2 + 8. * fp1 - 8. * fm1 + fm2) / (12. * h)
    d2 = (-fp2 + 16. * fp1 - 30. * f0 + 16. * fm1 - fm2) / (12. * h**2)
    sig = s * (1. - ode.c3 * s)
    t1 = (ode.c1 - ode.c2 * s) / sig * d1
    t2 = (-ode.A * s**2 + ode.B * s - ode.C) / sig**2 * f0
    resid = d2 + t1 + t2
    scale = np.max(np.abs(np.vstack([d2, t1, t2])), axis=0)
    return resid, scale
