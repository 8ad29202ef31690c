""" Module for independent numerical checks of the analytic solutions

Finite-difference eigensolves of the approximated radial and polar
equations, quadrature normalizations and the Jacobi product integral.
None of the energy checks use the NU quantization condition.
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np
import warnings

from collections import OrderedDict, namedtuple
from dataclasses import dataclass

from scipy import special
from scipy.integrate import quad, IntegrationWarning
from scipy.linalg import eigh_tridiagonal
from scipy.optimize import bisect

from rshulthen import defs
from rshulthen import nu_engine
from rshulthen import specfn
from rshulthen.model import centrifugal_approx
from rshulthen.solvers import angular
from rshulthen.solvers import radial
from rshulthen.errors import BracketError, DomainError, NumericError, RsHulthenWarning


B4Check = namedtuple('B4Check', ['lhs', 'rhs'])


@dataclass(frozen=True)
class Grid1D:
    """ Uniform grid on [lo, hi] with n_points interior nodes

    spacing = (hi - lo) / (n_points + 1); the end points carry the
    boundary conditions and are not unknowns.
    """
    lo: float
    hi: float
    n_points: int

    def __post_init__(self):
        if not self.lo < self.hi:
            raise DomainError("Grid needs lo < hi, got ({:g}, {:g})".format(self.lo, self.hi))
        if int(self.n_points) != self.n_points or self.n_points < 100:
            raise DomainError("Grid needs at least 100 points, got {}".format(self.n_points))

    @property
    def spacing(self):
        return (self.hi - self.lo) / (self.n_points + 1)

    @property
    def points(self):
        return self.lo + self.spacing * np.arange(1, self.n_points + 1)

    @classmethod
    def radial_default(cls, n_points=None):
        odict = defs.get_oracle_dict()
        if n_points is None:
            n_points = odict['radial_npts']
        return cls(odict['r_min'], odict['r_max'], int(n_points))


def _check_k(k, grid):
    if int(k) != k or k < 1:
        raise DomainError("Number of eigenvalues must be a positive integer, got {}".format(k))
    if k > grid.n_points:
        raise DomainError("Asked for {} eigenvalues on a {}-point grid".format(k, grid.n_points))


def count_nodes(vec, frac=1e-8):
    """ Sign changes of a discretized eigenvector, ignoring values below frac*max """
    vec = np.asarray(vec)
    keep = vec[np.abs(vec) > frac * np.max(np.abs(vec))]
    return int(np.sum(keep[:-1] * keep[1:] < 0.))


def _radial_operator(spec, lam, E_coupling, grid, d0):
    """ Diagonal and off-diagonal of the central-difference operator """
    r = grid.points
    h = grid.spacing
    v_eff = (centrifugal_approx(lam, spec.a, r, d0=d0)
             - 2. * (E_coupling + spec.M) * spec.V0 / np.expm1(r / spec.a))
    diag = 2. / h**2 + v_eff
    off = -np.ones(grid.n_points - 1) / h**2
    return diag, off


def radial_fd_states(spec, lam, E_coupling, grid, k, d0=defs.D0):
    """ Lowest k eigenpairs of -d^2/dr^2 + V_eff with Dirichlet ends

    V_eff(r) = centrifugal_approx(lam) - 2(E+M) V0 exp(-r/a) / (1 - exp(-r/a))

    Parameters
    ----------
    spec : PotentialSpec
    lam : float
    E_coupling : float
      Energy entering the (E+M) factor
    grid : Grid1D
    k : int
    d0 : float, optional

    Returns
    -------
    W : ndarray
      Ascending eigenvalues; a bound state has W = E^2 - M^2
    vecs : ndarray
      (n_points, k) eigenvectors
    nodes : ndarray of int
    """
    _check_k(k, grid)
    diag, off = _radial_operator(spec, lam, E_coupling, grid, d0)
    W, vecs = eigh_tridiagonal(diag, off, select='i', select_range=(0, int(k) - 1))
    nodes = np.array([count_nodes(vecs[:, ii]) for ii in range(vecs.shape[1])])
    return W, vecs, nodes


def radial_fd_spectrum(spec, lam, E_coupling, grid, k, d0=defs.D0):
    """ Lowest k eigenvalues of the discretized radial operator

    Returns
    -------
    W : list of float
    """
    _check_k(k, grid)
    diag, off = _radial_operator(spec, lam, E_coupling, grid, d0)
    W = eigh_tridiagonal(diag, off, eigvals_only=True, select='i', select_range=(0, int(k) - 1))
    return [float(w) for w in W]


def radial_fd_level(spec, qn, E, grid, d0=defs.D0):
    """ Eigenvalue of the mode with n nodes, operator built at energy E

    Returns
    -------
    W : float
    nodes : int
    """
    sol = angular.lambda_of(spec, E, qn)
    W, _, nodes = radial_fd_states(spec, sol.lam, E, grid, qn.n + 3, d0=d0)
    match = np.where(nodes == qn.n)[0]
    if len(match) == 0:
        warnings.warn("No eigenvector with {:d} nodes; falling back to index order".format(qn.n),
                      RsHulthenWarning)
        return float(W[qn.n]), int(nodes[qn.n])
    return float(W[match[0]]), qn.n


def radial_fd_defect(state, grid):
    """ W_n - (E^2 - M^2) with the operator built at the analytic energy """
    W, _ = radial_fd_level(state.spec, state.qn, state.E_solved, grid, d0=state.d0)
    E, M = state.E_solved, state.spec.M
    return W - (E - M) * (E + M)


def selfconsistent_energy(spec, qn, grid, bracket, xtol=1e-8, d0=defs.D0):
    """ Root of g(E) = W_n(E) - (E^2 - M^2) by bisection

    Parameters
    ----------
    spec : PotentialSpec
    qn : QuantumNumbers
    grid : Grid1D
    bracket : tuple
      (E_lo, E_hi) with a sign change of g
    xtol : float, optional

    Returns
    -------
    E : float
    """
    def gfunc(E):
        W, _ = radial_fd_level(spec, qn, E, grid, d0=d0)
        return W - (E - spec.M) * (E + spec.M)

    lo, hi = bracket
    glo, ghi = gfunc(lo), gfunc(hi)
    if glo * ghi > 0.:
        raise BracketError("No sign change of g on [{:.6f}, {:.6f}]: ({:g}, {:g})".format(
            lo, hi, glo, ghi))
    return float(bisect(gfunc, lo, hi, xtol=xtol))


def _cell_weights(edges, b_exp):
    """ Integrals of z^(1/2) (1-z)^b over consecutive cells """
    za, zb = edges[:-1], edges[1:]
    full = specfn.beta_fn(1.5, b_exp + 1.)
    # Upper cells from the mirrored incomplete beta
    left = full * (special.betainc(1.5, b_exp + 1., zb) - special.betainc(1.5, b_exp + 1., za))
    right = full * (special.betainc(b_exp + 1., 1.5, 1. - za)
                    - special.betainc(b_exp + 1., 1.5, 1. - zb))
    return np.where(za < 0.5, left, right)


def angular_fd_spectrum(spec, E, m, grid, k):
    """ Lowest k separation constants of the polar equation in z = cos^2(theta)

    Theta = z^(1/2) (1-z)^(m_tilde/2) y(z) carries the boundary behaviour;
    y solves -(rho z (1-z) y')' = L rho y with rho = z^(1/2) (1-z)^m_tilde,
    discretized by a box scheme with exact cell weights.  Then
    lambda = 4 L + (m_tilde + 3/2)^2 - 1/4 - 2(E+M) beta.

    Parameters
    ----------
    spec : PotentialSpec
    E : float
    m : int
    grid : Grid1D
      Over z; lo = 0 and hi = 1 are also unknowns
    k : int

    Returns
    -------
    lams : list of float
      Ascending
    """
    _check_k(k, grid)
    if grid.lo != 0. or grid.hi != 1.:
        raise DomainError("Angular grid must span [0, 1]")
    mt = angular.m_tilde(spec, E, m)
    h = grid.spacing
    nodes = np.linspace(0., 1., grid.n_points + 2)
    mids = 0.5 * (nodes[:-1] + nodes[1:])
    flux = mids**1.5 * (1. - mids)**(mt + 1.) / h
    edges = np.concatenate([[0.], mids, [1.]])
    weights = _cell_weights(edges, mt)
    stiff = np.zeros(len(nodes))
    stiff[:-1] += flux
    stiff[1:] += flux
    inv = 1. / np.sqrt(weights)
    diag = stiff * inv**2
    off = -flux * inv[:-1] * inv[1:]
    lvals = eigh_tridiagonal(diag, off, eigvals_only=True, select='i',
                             select_range=(0, int(k) - 1))
    cpl = 2. * (E + spec.M)
    lams = 4. * lvals + (mt + 1.5)**2 - 0.25 - cpl * spec.beta
    return [float(lam) for lam in lams]


def _quad(func, lo, hi, **kwargs):
    with warnings.catch_warnings():
        warnings.simplefilter('error', IntegrationWarning)
        try:
            val, _ = quad(func, lo, hi, **kwargs)
        except IntegrationWarning as err:
            raise NumericError("Quadrature did not converge: {}".format(err))
    return val


def b4_identity_check(lam, eta, n, third='standard'):
    """ Quadrature against closed form of the Jacobi product integral

    lhs = int_0^1 z^(2lam-1) (1-z)^(2(eta+1)) [2F1(-n, 2(lam+eta+1)+n; c; z)]^2 dz
    rhs = (n+eta+1) n! G(n+2eta+2) G(2lam) G(2lam+1)
          / [(n+eta+lam+1) G(n+2lam+1) G(n+2lam+2eta+2)]

    Parameters
    ----------
    lam : float
      > 0
    eta : float
      > -3/2
    n : int
    third : str, optional
      'standard' takes c = 1 + 2 lam, 'shifted' takes c = 2 + 2 lam

    Returns
    -------
    check : B4Check
    """
    if not lam > 0.:
        raise DomainError("lam must be positive, got {}".format(lam))
    if not eta > -1.5:
        raise DomainError("eta must exceed -3/2, got {}".format(eta))
    if third == 'standard':
        c = 1. + 2. * lam
    elif third == 'shifted':
        c = 2. + 2. * lam
    else:
        raise DomainError("Unknown convention {}".format(third))
    b = 2. * (lam + eta + 1.) + n

    def integrand(z):
        return (z**(2. * lam - 1.) * (1. - z)**(2. * (eta + 1.))
                * specfn.hyp2f1_terminating(n, b, c, z)**2)

    lhs = _quad(integrand, 0., 1., epsabs=1e-14, epsrel=1e-12, limit=200)
    lg = specfn.log_gamma
    lnrhs = (lg(n + 1.) + lg(n + 2. * eta + 2.) + lg(2. * lam) + lg(2. * lam + 1.)
             - lg(n + 2. * lam + 1.) - lg(n + 2. * lam + 2. * eta + 2.))
    rhs = (n + eta + 1.) / (n + eta + lam + 1.) * np.exp(lnrhs)
    return B4Check(lhs=float(lhs), rhs=float(rhs))


def radial_quadrature(u_fn, a):
    """ int_0^inf U^2 dr computed as int_0^1 U(s)^2 a/s ds """
    def integrand(s):
        return u_fn(-a * np.log(s))**2 * a / s
    return _quad(integrand, 0., 1., epsabs=1e-13, epsrel=1e-12, limit=400)


def quadrature_norm(state, A_override=None):
    """ Radial normalization integral of a branch +1 state

    Parameters
    ----------
    state : BoundState
    A_override : float, optional
      Prefactor used in place of A_nl

    Returns
    -------
    norm : float
      1 for a properly normalized state
    """
    u_fn = radial.radial_wavefunction(state, A_override=A_override)
    return radial_quadrature(u_fn, state.spec.a)


def tail_fraction(state, r_max):
    """ Share of the radial norm beyond r_max """
    u_fn = radial.radial_wavefunction(state)
    a = state.spec.a
    s_max = np.exp(-r_max / a)
    return _quad(lambda s: u_fn(-a * np.log(s))**2 * a / s, 0., s_max,
                 epsabs=0., epsrel=1e-10, limit=200)


def radial_ode_residual(state, npts=20, h=1e-4):
    """ Largest relative residual of the s-space radial equation

    Returns
    -------
    worst : float
      max |residual| / scale over npts interior points
    """
    ode = radial.radial_ode(state)
    u_fn = radial.radial_wavefunction(state)
    a = state.spec.a

    def func(s):
        return u_fn(-a * np.log(s))

    svals = np.linspace(0.05, 0.95, npts)
    resid, scale = nu_engine.ode_residual(ode, func, svals, h=h)
    return float(np.max(np.abs(resid) / scale))


def angular_ode_residual(sol, npts=20, h=1e-4):
    """ Largest relative residual of the polar equation in theta

    Theta'' + cot(theta) Theta' + [lambda - (m^2 + 2(E+M)(alpha + beta cos^2)) / sin^2] Theta

    Parameters
    ----------
    sol : AngularSolution
    npts : int, optional
    h : float, optional

    Returns
    -------
    worst : float
    """
    theta_fn = angular.theta_wavefunction(sol)
    tvals = np.linspace(0.1, np.pi - 0.1, npts)
    f0 = theta_fn(tvals)
    fp1, fm1 = theta_fn(tvals + h), theta_fn(tvals - h)
    fp2, fm2 = theta_fn(tvals + 2 * h), theta_fn(tvals - 2 * h)
    d1 = (-fp2 + 8. * fp1 - 8. * fm1 + fm2) / (12. * h)
    d2 = (-fp2 + 16. * fp1 - 30. * f0 + 16. * fm1 - fm2) / (12. * h**2)
    cpl = 2. * sol.coupling
    sin2 = np.sin(tvals)**2
    t1 = d1 * np.cos(tvals) / np.sin(tvals)
    t2 = (sol.lam - (sol.m**2 + cpl * (sol.alpha + sol.beta * np.cos(tvals)**2)) / sin2) * f0
    resid = d2 + t1 + t2
    scale = np.max(np.abs(np.vstack([d2, t1, t2])), axis=0)
    return float(np.max(np.abs(resid) / scale))


def verify_state(state, grid, bracket_width=0.05, xtol=1e-8, max_expand=3):
    """ Oracle energy for one branch +1 state plus a report record

    The bracket around the analytic energy is doubled up to max_expand
    times before giving up.

    Parameters
    ----------
    state : BoundState
    grid : Grid1D
    bracket_width : float, optional
    xtol : float, optional
    max_expand : int, optional

    Returns
    -------
    record : OrderedDict
    """
    spec, qn, E = state.spec, state.qn, state.E_solved
    width = bracket_width
    E_oracle = np.nan
    for _ in range(max_expand + 1):
        lo = max(E - width, -spec.M * (1. - 1e-9))
        hi = min(E + width, spec.M * (1. - 1e-9))
        try:
            E_oracle = selfconsistent_energy(spec, qn, grid, (lo, hi), xtol=xtol, d0=state.d0)
        except BracketError:
            width *= 2.
        else:
            break
    if np.isfinite(E_oracle):
        _, nodes = radial_fd_level(spec, qn, E_oracle, grid, d0=state.d0)
    else:
        nodes = -1
    record = OrderedDict()
    record['n'] = qn.n
    record['ntilde'] = qn.n_tilde
    record['m'] = qn.m
    record['alpha'] = spec.alpha
    record['beta'] = spec.beta
    record['E_analytic'] = E
    record['E_oracle'] = E_oracle
    record['defect'] = abs(E_oracle - E)
    record['r_min'] = grid.lo
    record['r_max'] = grid.hi
    record['npts'] = grid.n_points
    record['nodes'] = nodes
    return record
