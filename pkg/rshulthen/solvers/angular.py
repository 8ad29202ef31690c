""" Module to solve the polar and azimuthal equations

With z = cos^2(theta) the polar equation takes the parametric NU form with
c1 = 1/2, c2 = 3/2, c3 = 1,
A = [lambda + 2(E+M) beta] / 4,  B = [lambda - m^2 - 2(E+M) alpha] / 4,  C = 0.

Only states odd under theta -> pi - theta come out of this substitution
(explicit cos(theta) factor).  The separation constant depends on E
through E+M, so every solution records the energy it was built at.
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np

from dataclasses import dataclass

from scipy.integrate import quad

from rshulthen import nu_engine
from rshulthen.errors import ComplexBranchError


@dataclass(frozen=True)
class AngularSolution:
    m_tilde: float
    lam: float
    l_eff: float
    n_tilde: int
    m: int
    energy_used: float
    alpha: float = 0.
    beta: float = 0.
    coupling: float = 0.   # E+M, or 2 mu in the non-relativistic limit


def m_tilde_c(alpha, beta, coupling, m):
    """ sqrt(m^2 + coupling (alpha+beta)); coupling is 2(E+M) or 4 mu

    Works on arrays; negative radicands raise ComplexBranchError
    """
    rad = np.asarray(m**2 + coupling * (alpha + beta), dtype=float)
    if np.any(rad < 0.):
        raise ComplexBranchError("Complex angular index: m^2 + 2(E+M)(alpha+beta) < 0")
    return np.sqrt(rad)


def l_eff_c(beta, coupling, mt, n_tilde):
    """ sqrt((2 ntilde + m_tilde + 3/2)^2 - coupling beta) - 1/2
    """
    rad = np.asarray((2. * n_tilde + mt + 1.5)**2 - coupling * beta, dtype=float)
    if np.any(rad < 0.):
        raise ComplexBranchError("No real orbital parameter: radicand {}".format(np.min(rad)))
    return np.sqrt(rad) - 0.5


def angular_ode(spec, E, m, lam):
    """ Parametric ODE of the polar equation in z = cos^2(theta)

    Parameters
    ----------
    spec : PotentialSpec
    E : float
      Energy, E > -M
    m : int
    lam : float

    Returns
    -------
    ode : ParametricODE
    """
    cpl = 2. * (E + spec.M)
    return nu_engine.ParametricODE(c1=0.5, c2=1.5, c3=1.,
                                   A=0.25 * (lam + cpl * spec.beta),
                                   B=0.25 * (lam - m**2 - cpl * spec.alpha),
                                   C=0.)


def m_tilde(spec, E, m):
    """ m_tilde = sqrt(m^2 + 2(E+M)(alpha+beta))
    """
    return float(m_tilde_c(spec.alpha, spec.beta, 2. * (E + spec.M), m))


def _solution(alpha, beta, coupling, qn, E):
    mt = float(m_tilde_c(alpha, beta, coupling, qn.m))
    leff = float(l_eff_c(beta, coupling, mt, qn.n_tilde))
    lam = (2. * qn.n_tilde + mt + 1.5)**2 - coupling * beta - 0.25
    return AngularSolution(m_tilde=mt, lam=lam, l_eff=leff, n_tilde=qn.n_tilde, m=qn.m,
                           energy_used=E, alpha=alpha, beta=beta, coupling=coupling / 2.)


def lambda_of(spec, E, qn):
    """ Separation constant and effective orbital parameter at energy E

    Parameters
    ----------
    spec : PotentialSpec
    E : float
    qn : QuantumNumbers

    Returns
    -------
    sol : AngularSolution
    """
    return _solution(spec.alpha, spec.beta, 2. * (E + spec.M), qn, E)


def lambda_nonrel(spec, mu, qn):
    """ Angular solution in the non-relativistic limit, E+M -> 2 mu
    """
    return _solution(spec.alpha, spec.beta, 4. * mu, qn, np.nan)


def lambda_from_nu(spec, E, qn):
    """ Separation constant from the NU quantization condition directly

    lambda enters the condition linearly (through c7 only), so two
    evaluations fix it.

    Returns
    -------
    lam : float
    """
    r0 = nu_engine.quantization_residual(
        nu_engine.derive_constants(angular_ode(spec, E, qn.m, 0.)),
        angular_ode(spec, E, qn.m, 0.), qn.n_tilde)
    r1 = nu_engine.quantization_residual(
        nu_engine.derive_constants(angular_ode(spec, E, qn.m, 1.)),
        angular_ode(spec, E, qn.m, 1.), qn.n_tilde)
    return r0 / (r0 - r1)


def _ode_of(sol):
    cpl = 2. * sol.coupling
    return nu_engine.ParametricODE(c1=0.5, c2=1.5, c3=1.,
                                   A=0.25 * (sol.lam + cpl * sol.beta),
                                   B=0.25 * (sol.lam - sol.m**2 - cpl * sol.alpha),
                                   C=0.)


def theta_unnormalized(sol):
    """ cos(theta) sin(theta)^m_tilde P_ntilde^(1/2, m_tilde)(1 - 2 cos^2 theta)
    """
    ode = _ode_of(sol)
    k = nu_engine.derive_constants(ode)
    factors = nu_engine.wavefunction_factors(k, ode, sol.n_tilde, strict=False)

    def theta_fn(theta):
        theta = np.asarray(theta, dtype=float)
        cost = np.cos(theta)
        # cos(pi/2) rounds to 6e-17
        cost = np.where(np.abs(cost) < 1e-15, 0., cost)
        # phi(z) = |cos| sin^m_tilde ; restore the odd parity
        return np.sign(cost) * factors.psi(cost**2)
    return theta_fn


def theta_normalization(sol):
    """ A_ntilde such that the integral of Theta^2 sin(theta) over (0, pi) is 1
    """
    theta_fn = theta_unnormalized(sol)
    # Theta^2 is symmetric about pi/2
    val, _ = quad(lambda t: theta_fn(t)**2 * np.sin(t), 0., np.pi / 2,
                  epsabs=1e-14, epsrel=1e-12, limit=200)
    return 1. / np.sqrt(2. * val)


def theta_wavefunction(sol):
    """ Normalized polar wavefunction Theta(theta)

    Parameters
    ----------
    sol : AngularSolution

    Returns
    -------
    theta_fn : function
    """
    theta_fn = theta_unnormalized(sol)
    norm = theta_normalization(sol)

    def normed(theta):
        return norm * theta_fn(theta)
    return normed


def phi_wavefunction(m, sign=1):
    """ Azimuthal factor exp(+-i m phi) / sqrt(2 pi)

    Parameters
    ----------
    m : int
    sign : int, optional
      +1 or -1

    Returns
    -------
    phi_fn : function
    """
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")

    def phi_fn(phi):
        phi = np.asarray(phi, dtype=float)
        return np.exp(1j * sign * m * phi) / np.sqrt(2. * np.pi)
    return phi_fn
