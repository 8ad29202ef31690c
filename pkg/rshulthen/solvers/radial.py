""" Module to solve the radial equation under the exponential centrifugal approximation

With s = exp(-r/a) the radial equation becomes the parametric NU form with
c1 = c2 = c3 = 1, A = eps + sigma, B = 2 eps + sigma - lambda, C = eps, where
eps = lambda d0 - a^2 (E^2 - M^2) and sigma = 2 a^2 (E + M) V0.

Quantization reads 2 N sqrt(eps) = sigma - N^2 with N = n + l_eff + 1.
The scan looks for roots of the squared form, so each root is tagged with
the sign of (sigma - N^2)/(2N): only branch +1 roots carry a normalizable
wavefunction.
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np
import warnings

from dataclasses import dataclass, field

from scipy import optimize

from rshulthen import defs
from rshulthen import nu_engine
from rshulthen import specfn
from rshulthen.model import QuantumNumbers, pspin_map
from rshulthen.solvers import angular
from rshulthen.solvers.angular import AngularSolution
from rshulthen.errors import ConfigError, DomainError, NonNormalizableError, ScanWarning


@dataclass(frozen=True)
class RadialParams:
    """ eps (dimensionless energy term) and sigma (coupling) at one energy """
    eps_energy: float
    sigma: float


@dataclass(frozen=True)
class ScanConfig:
    """ Energy grid and refinement settings of the root scan

    npts : int
      Uniform grid points over (-M + xi, M - xi)
    xi_frac : float
      xi in units of M
    xtol : float
      Absolute bisection tolerance on E (fm^-1)
    d0 : float
      Constant of the centrifugal approximation
    """
    npts: int = 20000
    xi_frac: float = 1e-9
    xtol: float = 1e-13
    d0: float = defs.D0

    def __post_init__(self):
        if self.npts < 2:
            raise ConfigError("Scan needs at least 2 grid points, got {}".format(self.npts))
        if not self.xtol > 0.:
            raise ConfigError("Scan tolerance must be positive, got {}".format(self.xtol))
        if not 0. <= self.xi_frac < 1.:
            raise ConfigError("xi_frac must lie in [0, 1), got {}".format(self.xi_frac))

    @classmethod
    def from_dict(cls, sdict):
        pdict = defs.get_scan_dict()
        pdict.update(sdict)
        return cls(npts=int(pdict['npts']), xi_frac=float(pdict['xi_frac']),
                   xtol=float(pdict['xtol']))


@dataclass(frozen=True)
class BoundState:
    """ One root of the energy equation with everything needed downstream

    E is the reported energy.  For a pseudospin state the equation is
    solved with the mapped parameters (spec) at E_solved = -E.
    """
    E: float
    branch: int
    qn: QuantumNumbers
    angular: AngularSolution
    radial: RadialParams
    sqrt_eps: float
    A_nl: float
    N_total: float
    spec: object = field(repr=False, default=None)
    E_solved: float = np.nan
    component: str = 'phi'
    d0: float = defs.D0

    @property
    def lower_prefactor(self):
        """ 1/(E+M), scalar factor of the lower spinor component """
        return 1. / (self.E_solved + self.spec.M)


def _eps_sigma(spec, E, lam, d0):
    E = np.asarray(E, dtype=float)
    # E^2 - M^2 without cancellation near |E| = M
    eps = lam * d0 - spec.a**2 * (E - spec.M) * (E + spec.M)
    sigma = 2. * spec.a**2 * (E + spec.M) * spec.V0
    return eps, sigma


def radial_params(spec, E, lam, d0=defs.D0):
    """ eps and sigma at energy E

    Parameters
    ----------
    spec : PotentialSpec
    E : float
    lam : float
      Separation constant at E
    d0 : float, optional

    Returns
    -------
    rp : RadialParams
    """
    eps, sigma = _eps_sigma(spec, E, lam, d0)
    return RadialParams(eps_energy=float(eps), sigma=float(sigma))


def quantized_sqrt_eps(sigma, l_eff, n):
    """ (sigma - N^2) / (2N) with N = n + l_eff + 1; may be negative
    """
    N = n + l_eff + 1.
    if np.any(N <= 0.):
        raise DomainError("n + l_eff + 1 must be positive, got {}".format(N))
    return (sigma - N**2) / (2. * N)


def energy_residual(spec, qn, E, d0=defs.D0):
    """ F(E) = eps(E) - [quantized sqrt(eps)]^2

    lambda, l_eff and sigma are all re-evaluated at E, so a zero of F is a
    self-consistent solution of the energy equation.

    Parameters
    ----------
    spec : PotentialSpec
    qn : QuantumNumbers
    E : float
      Inside (-M, M)
    d0 : float, optional

    Returns
    -------
    F : float
    """
    if not -spec.M < E < spec.M:
        raise DomainError("E = {:g} outside (-M, M)".format(E))
    sol = angular.lambda_of(spec, E, qn)
    rp = radial_params(spec, E, sol.lam, d0=d0)
    q = quantized_sqrt_eps(rp.sigma, sol.l_eff, qn.n)
    return float(rp.eps_energy - q**2)


def residual_grid(spec, qn, E, d0=defs.D0):
    """ Vectorized energy_residual; NaN where the angular chain has no real solution

    Parameters
    ----------
    spec : PotentialSpec
    qn : QuantumNumbers
    E : ndarray
    d0 : float, optional

    Returns
    -------
    F : ndarray
    bad : ndarray of bool
    """
    E = np.asarray(E, dtype=float)
    cpl = 2. * (E + spec.M)
    with np.errstate(invalid='ignore', divide='ignore'):
        rad_m = qn.m**2 + cpl * (spec.alpha + spec.beta)
        mt = np.sqrt(rad_m)
        rad_l = (2. * qn.n_tilde + mt + 1.5)**2 - cpl * spec.beta
        leff = np.sqrt(rad_l) - 0.5
        N = qn.n + leff + 1.
        eps, sigma = _eps_sigma(spec, E, rad_l - 0.25, d0)
        q = (sigma - N**2) / (2. * N)
        F = eps - q**2
    bad = ~(rad_m >= 0.) | ~(rad_l >= 0.) | ~(N > 0.)
    F = np.where(bad, np.nan, F)
    return F, bad


def _bad_runs(egrid, bad):
    """ (E_lo, E_hi) of every contiguous run of flagged grid points """
    runs = []
    if not np.any(bad):
        return runs
    idx = np.where(bad)[0]
    breaks = np.where(np.diff(idx) > 1)[0]
    starts = np.concatenate([[idx[0]], idx[breaks + 1]])
    ends = np.concatenate([idx[breaks], [idx[-1]]])
    for i0, i1 in zip(starts, ends):
        runs.append((float(egrid[i0]), float(egrid[i1])))
    return runs


def scan_interval(spec, qn, lo, hi, npts, xtol, d0=defs.D0):
    """ Roots of F on [lo, hi] from a uniform grid plus bisection

    Returns
    -------
    roots : list of float
      Ascending
    skipped : list of tuple
      (E_lo, E_hi) subintervals where F is undefined
    """
    egrid = np.linspace(lo, hi, int(npts))
    F, bad = residual_grid(spec, qn, egrid, d0=d0)
    skipped = _bad_runs(egrid, bad)

    def func(e):
        return float(residual_grid(spec, qn, e, d0=d0)[0])

    roots = [float(egrid[ii]) for ii in np.where(F == 0.)[0]]
    with np.errstate(invalid='ignore'):
        flips = np.where(F[:-1] * F[1:] < 0.)[0]
    for ii in flips:
        roots.append(optimize.bisect(func, egrid[ii], egrid[ii + 1], xtol=xtol))
    roots.sort()
    return roots, skipped


def bound_state(spec, qn, E, d0=defs.D0, pspin=False):
    """ Package a root of F as a BoundState

    Parameters
    ----------
    spec : PotentialSpec
      Parameters the equation was solved with
    qn : QuantumNumbers
    E : float
      Root of energy_residual for spec
    d0 : float, optional
    pspin : bool, optional
      Report the pseudospin energy -E and flag the lower component

    Returns
    -------
    state : BoundState
    """
    sol = angular.lambda_of(spec, E, qn)
    rp = radial_params(spec, E, sol.lam, d0=d0)
    N = qn.n + sol.l_eff + 1.
    branch = 1 if rp.sigma > N**2 else -1
    if rp.eps_energy > 0.:
        sqrt_eps = float(np.sqrt(rp.eps_energy))
    else:
        sqrt_eps = np.nan
    if branch == 1 and rp.eps_energy > 0.:
        A_nl = normalization_b5(qn.n, sol.l_eff, sqrt_eps, spec.a)
    else:
        A_nl = np.nan
    return BoundState(E=-E if pspin else E, branch=branch, qn=qn, angular=sol, radial=rp,
                      sqrt_eps=sqrt_eps, A_nl=A_nl, N_total=N, spec=spec, E_solved=E,
                      component='chi' if pspin else 'phi', d0=d0)


def find_bound_states(spec, qn, scan=None, pspin=False, verbose=False, return_skipped=False):
    """ All bound-state energies for one set of quantum numbers

    Parameters
    ----------
    spec : PotentialSpec
    qn : QuantumNumbers
    scan : ScanConfig, optional
    pspin : bool, optional
      Solve the pseudospin problem through the V0 -> -V0, E -> -E map
    verbose : bool, optional
    return_skipped : bool, optional
      Also return the skipped scan subintervals

    Returns
    -------
    states : list of BoundState
      Ascending in E; empty if there is no root
    skipped : list of tuple
      (E_lo, E_hi) where the angular chain has no real solution;
      only with return_skipped=True
    """
    if scan is None:
        scan = ScanConfig()
    if pspin:
        solve_spec, _ = pspin_map(spec, 0.)
    else:
        solve_spec = spec
    xi = scan.xi_frac * spec.M
    if verbose:
        print("Working on (n, ntilde, m) = {}".format(qn.as_tuple()))
    roots, skipped = scan_interval(solve_spec, qn, -spec.M + xi, spec.M - xi,
                                   scan.npts, scan.xtol, d0=scan.d0)
    for elo, ehi in skipped:
        warnings.warn("Skipping E in [{:.9f}, {:.9f}] for {}: no real angular solution".format(
            elo, ehi, qn.as_tuple()), ScanWarning)
    states = []
    for root in roots:
        state = bound_state(solve_spec, qn, root, d0=scan.d0, pspin=pspin)
        # Non-normalizable
        if not state.radial.eps_energy > 0.:
            continue
        states.append(state)
    states.sort(key=lambda st: st.E)
    if return_skipped:
        return states, skipped
    return states


def track_root(spec, qn, E_prev, branch, scan=None, window=0.05, npts=400):
    """ Find the root of the given branch nearest a previous energy

    The search window around E_prev doubles until a root turns up or the
    full (-M, M) range has been covered.

    Parameters
    ----------
    spec : PotentialSpec
    qn : QuantumNumbers
    E_prev : float
      Energy of the root at the previous sweep point
    branch : int
    scan : ScanConfig, optional
    window : float, optional
      Initial half-width (fm^-1)
    npts : int, optional
      Grid points per window

    Returns
    -------
    state : BoundState or None
      None if the root is lost
    """
    if scan is None:
        scan = ScanConfig()
    xi = scan.xi_frac * spec.M
    lo_lim, hi_lim = -spec.M + xi, spec.M - xi
    width = window
    while True:
        lo = max(E_prev - width, lo_lim)
        hi = min(E_prev + width, hi_lim)
        if hi > lo:
            roots, _ = scan_interval(spec, qn, lo, hi, npts, scan.xtol, d0=scan.d0)
            states = [bound_state(spec, qn, root, d0=scan.d0) for root in roots]
            states = [st for st in states if st.branch == branch and st.radial.eps_energy > 0.]
            if len(states) > 0:
                return min(states, key=lambda st: abs(st.E - E_prev))
        if lo <= lo_lim and hi >= hi_lim:
            return None
        width *= 2.


def radial_ode(state):
    """ Parametric ODE of the radial equation in s = exp(-r/a) at the state's energy

    Parameters
    ----------
    state : BoundState

    Returns
    -------
    ode : ParametricODE
    """
    eps, sigma, lam = state.radial.eps_energy, state.radial.sigma, state.angular.lam
    return nu_engine.ParametricODE(c1=1., c2=1., c3=1., A=eps + sigma,
                                   B=2. * eps + sigma - lam, C=eps)


def normalization_b5(n, l_eff, sqrt_eps, a):
    """ A_nl = sqrt(2x n! (n+l+x+1) G(n+2l+2x+2) / [a (n+l+1) G(n+2l+2) G(n+2x+1)])

    x = sqrt(eps).  Gamma ratios are taken in log space.

    Parameters
    ----------
    n : int
    l_eff : float
    sqrt_eps : float
    a : float

    Returns
    -------
    A_nl : float
    """
    x = sqrt_eps
    if not x > 0.:
        raise DomainError("sqrt(eps) must be positive, got {}".format(x))
    if not a > 0.:
        raise DomainError("Range a must be positive, got {}".format(a))
    lin1 = n + l_eff + x + 1.
    lin2 = n + l_eff + 1.
    if lin1 <= 0. or lin2 <= 0.:
        raise DomainError("Non-positive factor in the normalization constant")
    lnA2 = (np.log(2. * x) + specfn.log_gamma(n + 1.) + np.log(lin1)
            + specfn.log_gamma(n + 2. * l_eff + 2. * x + 2.)
            - np.log(a) - np.log(lin2)
            - specfn.log_gamma(n + 2. * l_eff + 2.) - specfn.log_gamma(n + 2. * x + 1.))
    return float(np.exp(0.5 * lnA2))


def normalization_ground(l_eff, sqrt_eps, a):
    """ n = 0 form sqrt((l+x+1) / (a (l+1) B)) with
    B = G(2l+2) G(1+2x) / (2x G(2l+2+2x))
    """
    x = sqrt_eps
    if not x > 0.:
        raise DomainError("sqrt(eps) must be positive, got {}".format(x))
    lnB = (specfn.log_gamma(2. * l_eff + 2.) + specfn.log_gamma(1. + 2. * x)
           - specfn.log_gamma(2. * l_eff + 2. + 2. * x) - np.log(2. * x))
    return float(np.sqrt((l_eff + x + 1.) / (a * (l_eff + 1.)) * np.exp(-lnB)))


def normalization_constant(state):
    """ A_nl of a branch +1 state

    Parameters
    ----------
    state : BoundState

    Returns
    -------
    A_nl : float
    """
    if state.branch != 1:
        raise NonNormalizableError("Negative-branch root at E = {:.9f} has no normalizable"
                                   " wavefunction".format(state.E))
    return normalization_b5(state.qn.n, state.angular.l_eff, state.sqrt_eps, state.spec.a)


def _radial_evaluator(ode, n, a, norm):
    k = nu_engine.derive_constants(ode)
    factors = nu_engine.wavefunction_factors(k, ode, n)

    def u_fn(r):
        r = np.asarray(r, dtype=float)
        return norm * factors.psi(np.exp(-r / a))
    return u_fn


def radial_wavefunction(state, A_override=None):
    """ U(r) = A s^x (1-s)^(l+1) P_n^(2x, 2l+1)(1-2s), s = exp(-r/a)

    Parameters
    ----------
    state : BoundState
    A_override : float, optional
      Use this prefactor instead of A_nl

    Returns
    -------
    u_fn : function
    """
    norm = normalization_constant(state)
    if A_override is not None:
        norm = A_override
    return _radial_evaluator(radial_ode(state), state.qn.n, state.spec.a, norm)


def total_wavefunction(state, sign=1):
    """ Phi(phi) Theta(theta) U(r) / r

    Parameters
    ----------
    state : BoundState
    sign : int, optional
      Sign of the azimuthal exponent

    Returns
    -------
    wf : function(r, theta, phi)
    """
    u_fn = radial_wavefunction(state)
    theta_fn = angular.theta_wavefunction(state.angular)
    phi_fn = angular.phi_wavefunction(state.qn.m, sign=sign)

    def wf(r, theta, phi):
        r = np.asarray(r, dtype=float)
        return phi_fn(phi) * theta_fn(theta) * u_fn(r) / r
    return wf


def nonrel_energy(mu, spec_nr, qn, d0=defs.D0):
    """ Explicit non-relativistic energy

    E = {lambda d0 - [2 mu V0 a^2 / N - N / 2]^2} / (2 mu a^2), N = n + l + 1,
    with the angular chain evaluated at E + M -> 2 mu.

    Parameters
    ----------
    mu : float
      fm^-1
    spec_nr : PotentialSpec
      M is ignored
    qn : QuantumNumbers
    d0 : float, optional

    Returns
    -------
    E : float
      fm^-1
    """
    if not mu > 0.:
        raise DomainError("mu must be positive, got {}".format(mu))
    sol = angular.lambda_nonrel(spec_nr, mu, qn)
    sigma = 4. * mu * spec_nr.a**2 * spec_nr.V0
    q = quantized_sqrt_eps(sigma, sol.l_eff, qn.n)
    return float((sol.lam * d0 - q**2) / (2. * mu * spec_nr.a**2))


def nonrel_kappa(mu, spec_nr, lam, E, d0=defs.D0):
    """ kappa = lambda d0 - 2 mu a^2 E """
    return lam * d0 - 2. * mu * spec_nr.a**2 * E


def nonrel_radial_wavefunction(mu, spec_nr, qn, E, d0=defs.D0):
    """ Normalized non-relativistic U(r) with sqrt(eps) -> sqrt(kappa)

    Parameters
    ----------
    mu : float
    spec_nr : PotentialSpec
    qn : QuantumNumbers
    E : float
      Must be negative
    d0 : float, optional

    Returns
    -------
    u_fn : function
    """
    if not E < 0.:
        raise DomainError("Non-relativistic bound states need E < 0, got {}".format(E))
    sol = angular.lambda_nonrel(spec_nr, mu, qn)
    kappa = nonrel_kappa(mu, spec_nr, sol.lam, E, d0=d0)
    sigma = 4. * mu * spec_nr.a**2 * spec_nr.V0
    ode = nu_engine.ParametricODE(c1=1., c2=1., c3=1., A=kappa + sigma,
                                  B=2. * kappa + sigma - sol.lam, C=kappa)
    norm = normalization_b5(qn.n, sol.l_eff, np.sqrt(kappa), spec_nr.a)
    return _radial_evaluator(ode, qn.n, spec_nr.a, norm)


def nonrel_wavefunction(mu, spec_nr, qn, E, sign=1, d0=defs.D0):
    """ Non-relativistic Phi(phi) Theta(theta) U(r) / r

    Returns
    -------
    wf : function(r, theta, phi)
    """
    u_fn = nonrel_radial_wavefunction(mu, spec_nr, qn, E, d0=d0)
    sol = angular.lambda_nonrel(spec_nr, mu, qn)
    theta_fn = angular.theta_wavefunction(sol)
    phi_fn = angular.phi_wavefunction(qn.m, sign=sign)

    def wf(r, theta, phi):
        r = np.asarray(r, dtype=float)
        return phi_fn(phi) * theta_fn(theta) * u_fn(r) / r
    return wf
