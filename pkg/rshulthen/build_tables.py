""" Module to build the output tables of rshulthen
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np
import os, warnings

from collections import OrderedDict
from dataclasses import dataclass, field, replace

from astropy.table import Table

from rshulthen import defs
from rshulthen import model
from rshulthen import oracle
from rshulthen.model import PotentialSpec, QuantumNumbers
from rshulthen.solvers import angular
from rshulthen.solvers import radial
from rshulthen.solvers.radial import ScanConfig
from rshulthen.errors import (ConfigError, DomainError, NumericError,
                              ScanWarning, TableMismatchWarning)


SOLVE_COLUMNS = ['n', 'ntilde', 'm', 'alpha', 'beta', 'E', 'branch', 'l_eff',
                 'lambda', 'sqrt_eps', 'A_nl']
SOLVE_DTYPES = [int, int, int, float, float, float, int, float, float, float, float]


def parse_range(val):
    """ Inclusive integer range from 'k' or 'lo:hi'

    Returns
    -------
    rng : tuple
      (lo, hi)
    """
    sval = str(val).strip()
    try:
        if ':' in sval:
            lo, hi = [int(item) for item in sval.split(':')]
        else:
            lo = hi = int(sval)
    except ValueError:
        raise ConfigError("Bad quantum number range: {}".format(val))
    if lo < 0 or hi < lo:
        raise ConfigError("Empty or negative quantum number range: {}".format(val))
    return (lo, hi)


@dataclass(frozen=True)
class RunConfig:
    """ Everything a command needs: parameters, quantum numbers, scan and output """
    spec: PotentialSpec
    n_range: tuple = (0, 0)
    ntilde_range: tuple = (0, 0)
    m_range: tuple = (0, 0)
    scan: ScanConfig = field(default_factory=ScanConfig)
    fd_points: int = 20000
    out: str = 'rshulthen.csv'
    clobber: bool = False

    def __post_init__(self):
        for key in ['n_range', 'ntilde_range', 'm_range']:
            lo, hi = getattr(self, key)
            if lo < 0 or hi < lo:
                raise ConfigError("Empty range for {:s}: {}".format(key, getattr(self, key)))

    def quantum_numbers(self):
        """ All (n, ntilde, m) in the configured ranges, n slowest """
        qns = []
        for n in range(self.n_range[0], self.n_range[1] + 1):
            for nt in range(self.ntilde_range[0], self.ntilde_range[1] + 1):
                for m in range(self.m_range[0], self.m_range[1] + 1):
                    qns.append(QuantumNumbers(n, nt, m))
        return qns


def run_config(cdict):
    """ Build a RunConfig from merged file and flag values

    Parameters
    ----------
    cdict : dict
      Keys V0, delta, alpha, beta, mass, n, ntilde, m, grid_points, tol,
      out, clobber; missing keys take defaults

    Returns
    -------
    rcfg : RunConfig
    """
    known = ['V0', 'delta', 'alpha', 'beta', 'mass', 'n', 'ntilde', 'm',
             'grid_points', 'tol', 'out', 'clobber']
    for key in cdict.keys():
        if key not in known:
            raise ConfigError("Unknown configuration key: {:s}".format(key))
    try:
        spec = model.spec_from_dict(cdict)
    except DomainError as err:
        raise ConfigError(str(err))
    sdict = defs.get_scan_dict()
    if cdict.get('tol') is not None:
        sdict['xtol'] = cdict['tol']
    npts = cdict.get('grid_points')
    fd_points = defs.get_oracle_dict()['radial_npts']
    try:
        if npts is not None:
            sdict['npts'] = fd_points = int(npts)
        scan = ScanConfig.from_dict(sdict)
    except (TypeError, ValueError) as err:
        raise ConfigError("Bad scan settings: {}".format(err))
    return RunConfig(spec=spec,
                     n_range=parse_range(cdict.get('n', 0)),
                     ntilde_range=parse_range(cdict.get('ntilde', 0)),
                     m_range=parse_range(cdict.get('m', 0)),
                     scan=scan, fd_points=fd_points,
                     out=str(cdict.get('out') or 'rshulthen.csv'),
                     clobber=bool(cdict.get('clobber', False)))


def chk_clobber(outfil, clobber=False):
    """ Simple clobber check
    outfil : str
    clobber : bool, optional
    """
    # Chk clobber
    if os.path.isfile(outfil):
        if clobber:
            warnings.warn("Overwriting previous file {:s}".format(outfil))
            return True
        else:
            warnings.warn("Not overwriting previous file {:s}.  Set clobber=True to do so".format(
                outfil))
            return False
    else:
        return True


def write_table(tbl, outfil, clobber=False, trailer=None):
    """ Write a Table as CSV with fixed formats

    Parameters
    ----------
    tbl : Table
    outfil : str
    clobber : bool, optional
    trailer : list of str, optional
      Comment lines appended after the data, '# ' is prepended

    Returns
    -------
    written : bool
    """
    if not chk_clobber(outfil, clobber=clobber):
        return False
    formats = {}
    for key in tbl.keys():
        if tbl[key].dtype.kind == 'f':
            formats[key] = '%.9f' if key.startswith('E') else '%.12g'
    tbl.write(outfil, format='ascii.csv', formats=formats, overwrite=True)
    if trailer is not None:
        with open(outfil, 'a') as fh:
            for line in trailer:
                fh.write('# {:s}\n'.format(line))
    print("Wrote {:s}".format(outfil))
    return True


def read_table(infil):
    """ Read a CSV written by write_table

    '#' lines, including the trailer after the data, are skipped and
    kept in meta['comments'] without the leading '# '.

    Parameters
    ----------
    infil : str

    Returns
    -------
    tbl : Table
    """
    if not os.path.isfile(infil):
        raise ConfigError("File {:s} does not exist".format(infil))
    tbl = Table.read(infil, format='ascii.csv', comment='#')
    with open(infil, 'r') as fh:
        comments = [line[1:].strip() for line in fh if line.startswith('#')]
    tbl.meta['comments'] = comments
    return tbl


def _empty(names, dtypes):
    return Table(names=names, dtype=dtypes)


def solve_table(spec, qns, scan=None, pspin=False, verbose=False):
    """ Bound states for a list of quantum numbers

    Parameters
    ----------
    spec : PotentialSpec
    qns : list of QuantumNumbers
    scan : ScanConfig, optional
    pspin : bool, optional
    verbose : bool, optional

    Returns
    -------
    tbl : Table
      One row per root; header only if there is none
    """
    rows = []
    for qn in qns:
        states = radial.find_bound_states(spec, qn, scan=scan, pspin=pspin, verbose=verbose)
        for state in states:
            rows.append((qn.n, qn.n_tilde, qn.m, spec.alpha, spec.beta, state.E, state.branch,
                         state.angular.l_eff, state.angular.lam, state.sqrt_eps, state.A_nl))
    if len(rows) == 0:
        return _empty(SOLVE_COLUMNS, SOLVE_DTYPES)
    return Table(rows=rows, names=SOLVE_COLUMNS, dtype=SOLVE_DTYPES)


def table1(scan=None, tol=1e-6, verbose=True):
    """ Recompute the tabulated spectrum and compare cell by cell

    Parameters
    ----------
    scan : ScanConfig, optional
    tol : float, optional
      Largest accepted |dE| (fm^-1) for cells not flagged as suspect

    Returns
    -------
    tbl : Table
      Golden columns plus computed E*_calc, branch b*_ and |dE| columns
    """
    golden = defs.get_table1()
    pdict = defs.get_default_params()
    tbl = golden.copy()
    for pset, rdict in defs.get_param_sets().items():
        spec = PotentialSpec.build(pdict['V0'], pdict['delta'], alpha=rdict['alpha'],
                                   beta=rdict['beta'], mass=pdict['mass'])
        if verbose:
            print("Working on parameter set: {:s}".format(pset))
        calc = np.full((len(tbl), 2), np.nan)
        branches = np.zeros((len(tbl), 2), dtype=int)
        for ii, row in enumerate(golden):
            qn = QuantumNumbers(int(row['n']), int(row['ntilde']), int(row['m']))
            states = radial.find_bound_states(spec, qn, scan=scan)
            if len(states) != 2:
                warnings.warn("Found {:d} roots for {} ({:s})".format(
                    len(states), qn.as_tuple(), pset), TableMismatchWarning)
            for jj, state in enumerate(states[:2]):
                calc[ii, jj] = state.E
                branches[ii, jj] = state.branch
        for jj, col in enumerate(['E1', 'E2']):
            key = '{:s}_{:s}'.format(col, pset)
            tbl[key + '_calc'] = calc[:, jj]
            tbl['b{:d}_{:s}'.format(jj + 1, pset)] = branches[:, jj]
            tbl['dE{:d}_{:s}'.format(jj + 1, pset)] = np.abs(calc[:, jj] - tbl[key])
    # Report
    for ii, row in enumerate(tbl):
        for pset in defs.get_param_sets().keys():
            for jj in (1, 2):
                dE = row['dE{:d}_{:s}'.format(jj, pset)]
                if np.isfinite(dE) and dE <= tol:
                    continue
                msg = "Cell {} E{:d} {:s}: |dE| = {:g}".format(
                    (row['n'], row['ntilde'], row['m']), jj, pset, dE)
                if pset == 'ring' and row['suspect_ring']:
                    msg += " (tabulated value repeats another row)"
                warnings.warn(msg, TableMismatchWarning)
    return tbl


def sweep(spec, qn, param, start, stop, steps, scan=None, verbose=False):
    """ Follow every root found at the first point along a V0 or delta sweep

    Parameters
    ----------
    spec : PotentialSpec
    qn : QuantumNumbers
    param : str
      'V0' or 'delta'
    start, stop : float
    steps : int
      >= 2
    scan : ScanConfig, optional

    Returns
    -------
    tbl : Table
      One row per point per tracked root; lost roots have E = NaN, lost = True
    """
    if param not in ('V0', 'delta'):
        raise ConfigError("Sweep parameter must be V0 or delta, got {}".format(param))
    if not start < stop:
        raise ConfigError("Sweep needs start < stop")
    if steps < 2:
        raise ConfigError("Sweep needs at least 2 steps")
    if scan is None:
        scan = ScanConfig()
    values = np.linspace(start, stop, int(steps))

    def spec_at(val):
        try:
            if param == 'V0':
                return replace(spec, V0=float(val))
            return replace(spec, a=1. / float(val))
        except DomainError as err:
            raise ConfigError(str(err))

    first = radial.find_bound_states(spec_at(values[0]), qn, scan=scan)
    seeds = [(st.E, st.branch) for st in first]
    rows = []
    for ii, val in enumerate(values):
        if verbose:
            print("Working on {:s} = {:g}".format(param, val))
        spec_i = spec_at(val)
        for iroot, (E_prev, branch) in enumerate(seeds):
            if ii == 0:
                state = first[iroot]
            else:
                state = radial.track_root(spec_i, qn, E_prev, branch, scan=scan)
            if state is None:
                warnings.warn("Lost root {:d} at {:s} = {:g}".format(iroot + 1, param, val),
                              ScanWarning)
                rows.append((param, float(val), iroot + 1, branch, np.nan, True))
                continue
            seeds[iroot] = (state.E, branch)
            rows.append((param, float(val), iroot + 1, branch, state.E, False))
    names = ['param', 'value', 'root', 'branch', 'E', 'lost']
    dtypes = ['U5', float, int, int, float, bool]
    if len(rows) == 0:
        return _empty(names, dtypes)
    return Table(rows=rows, names=names, dtype=dtypes)


def wavefunction_table(state, npts=601, r_range=None):
    """ Tabulate U(r) and Theta(theta) of a branch +1 state

    Parameters
    ----------
    state : BoundState
    npts : int, optional
      Points on both grids; odd values put theta = pi/2 on the grid
    r_range : tuple, optional
      Defaults to the oracle (r_min, r_max)

    Returns
    -------
    tbl : Table
      Columns r, U, theta, Theta
    trailer : list of str
      A_nl and quadrature norm
    """
    if r_range is None:
        odict = defs.get_oracle_dict()
        r_range = (odict['r_min'], odict['r_max'])
    u_fn = radial.radial_wavefunction(state)
    theta_fn = angular.theta_wavefunction(state.angular)
    rgrid = np.linspace(r_range[0], r_range[1], npts)
    tgrid = np.linspace(0., np.pi, npts)
    tbl = Table()
    tbl['r'] = rgrid
    tbl['U'] = u_fn(rgrid)
    tbl['theta'] = tgrid
    tbl['Theta'] = theta_fn(tgrid)
    norm = oracle.quadrature_norm(state)
    trailer = ['A_nl = {:.12g}'.format(state.A_nl), 'norm = {:.12f}'.format(norm)]
    return tbl, trailer


def _record(kind, label, analytic, numeric, tol, npts=0, nodes=-1):
    defect = abs(numeric - analytic)
    return OrderedDict([('kind', kind), ('label', label), ('analytic', analytic),
                        ('numeric', numeric), ('defect', defect), ('tol', tol),
                        ('passed', bool(np.isfinite(defect) and defect <= tol)),
                        ('npts', npts), ('nodes', nodes)])


def _default_specs():
    pdict = defs.get_default_params()
    specs = OrderedDict()
    for pset, rdict in defs.get_param_sets().items():
        specs[pset] = PotentialSpec.build(pdict['V0'], pdict['delta'], alpha=rdict['alpha'],
                                          beta=rdict['beta'], mass=pdict['mass'])
    return specs


def _convergence_ratio(state, n_points):
    """ |defect(n_points)| / |defect(2 n_points)| for one state """
    d_coarse = oracle.radial_fd_defect(state, oracle.Grid1D.radial_default(n_points))
    d_fine = oracle.radial_fd_defect(state, oracle.Grid1D.radial_default(2 * n_points))
    if d_fine == 0.:
        return np.inf
    return abs(d_coarse / d_fine)


def verify(scan=None, fd_points=None, qns=None, angular_npts=None, specs=None, verbose=True):
    """ Run the oracle suite on the tabulated parameter sets

    Every branch +1 state gets an energy, norm, tail, polar spectrum and
    two ODE residual records; the first state of each parameter set also
    gets the defect ratio under point doubling.

    Parameters
    ----------
    scan : ScanConfig, optional
    fd_points : int, optional
      Radial finite-difference grid points
    qns : list of QuantumNumbers, optional
      Defaults to all tabulated quantum numbers
    angular_npts : int, optional
    specs : OrderedDict, optional
      label -> PotentialSpec; defaults to the ring and bare settings

    Returns
    -------
    tbl : Table
      One row per check
    passed : bool
    """
    odict = defs.get_oracle_dict()
    grid = oracle.Grid1D.radial_default(n_points=fd_points)
    if angular_npts is None:
        angular_npts = odict['angular_npts']
    zgrid = oracle.Grid1D(0., 1., angular_npts)
    if qns is None:
        qns = [QuantumNumbers(*qn) for qn in defs.table1_qn()]
    if specs is None:
        specs = _default_specs()
    records = []
    for pset, spec in specs.items():
        ratio_done = False
        for qn in qns:
            if verbose:
                print("Working on {} ({:s})".format(qn.as_tuple(), pset))
            for state in radial.find_bound_states(spec, qn, scan=scan):
                if state.branch != 1:
                    continue
                label = '{:s} {:d},{:d},{:d}'.format(pset, qn.n, qn.n_tilde, qn.m)
                rec = oracle.verify_state(state, grid, bracket_width=odict['bracket_width'],
                                          xtol=odict['xtol'])
                records.append(_record('energy', label, state.E, rec['E_oracle'],
                                       odict['energy_tol'], npts=grid.n_points,
                                       nodes=rec['nodes']))
                try:
                    norm = oracle.quadrature_norm(state)
                except NumericError:
                    norm = np.nan
                records.append(_record('norm', label, 1., norm, odict['norm_tol']))
                tail = oracle.tail_fraction(state, grid.hi)
                records.append(_record('tail', label, 0., tail, 1e-10))
                # Polar spectrum at this state's own energy and m
                lams = oracle.angular_fd_spectrum(state.spec, state.E_solved, qn.m, zgrid,
                                                  qn.n_tilde + 1)
                records.append(_record('angular', label, state.angular.lam, lams[qn.n_tilde],
                                       odict['lambda_tol'], npts=zgrid.n_points))
                records.append(_record('ode_radial', label, 0.,
                                       oracle.radial_ode_residual(state),
                                       odict['residual_tol']))
                records.append(_record('ode_angular', label, 0.,
                                       oracle.angular_ode_residual(state.angular),
                                       odict['residual_tol']))
                if not ratio_done:
                    ratio = _convergence_ratio(state, grid.n_points)
                    lo, hi = odict['order_ratio']
                    records.append(_record('convergence', label, 0.5 * (lo + hi), ratio,
                                           0.5 * (hi - lo), npts=grid.n_points))
                    ratio_done = True
    # Jacobi product integral
    for lam, eta, n in [(1., 0., 0), (0.5, -0.5, 0), (1., 0., 1), (2., 1., 2)]:
        for third in ('standard', 'shifted'):
            chk = oracle.b4_identity_check(lam, eta, n, third=third)
            # Only the n = 0 standard cases are hard checks
            hard = (n == 0 and third == 'standard')
            rec = _record('b4_' + third, 'lam={:g} eta={:g} n={:d}'.format(lam, eta, n),
                          chk.rhs, chk.lhs, 1e-8 * abs(chk.rhs) if hard else np.inf)
            records.append(rec)
    tbl = Table(rows=[list(rec.values()) for rec in records], names=list(records[0].keys()),
                dtype=['U12', 'U32', float, float, float, float, bool, int, int])
    passed = bool(np.all(tbl['passed']))
    if verbose:
        print("Checks passed: {:d}/{:d}".format(int(np.sum(tbl['passed'])), len(tbl)))
        for row in tbl[~tbl['passed']]:
            print("FAILED {:s} {:s}: defect {:g} > {:g}".format(
                row['kind'], row['label'], row['defect'], row['tol']))
    return tbl, passed


def potential_grid(spec=None, nr=200, ntheta=90, r_range=(0.1, 20.)):
    """ V(r, theta) on a polar grid with the centrifugal approximation error

    Parameters
    ----------
    spec : PotentialSpec, optional
      Defaults to the display parameters of defs.get_figure1_params()
    nr, ntheta : int, optional
    r_range : tuple, optional
      fm

    Returns
    -------
    tbl : Table
      Columns r, theta, V, centrifugal_relerr
    """
    if spec is None:
        pdict = defs.get_figure1_params()
        spec = PotentialSpec.build(pdict['V0'], pdict['delta'], alpha=pdict['alpha'],
                                   beta=pdict['beta'], mass=pdict['mass'])
    rvals = np.linspace(r_range[0], r_range[1], nr)
    # Stay off the ring singularity at theta = 0, pi
    tvals = np.linspace(0.05, np.pi - 0.05, ntheta)
    rr, tt = np.meshgrid(rvals, tvals, indexing='ij')
    tbl = Table()
    tbl['r'] = rr.ravel()
    tbl['theta'] = tt.ravel()
    tbl['V'] = model.potential_value(spec, rr.ravel(), tt.ravel())
    # Independent of lambda
    tbl['centrifugal_relerr'] = model.centrifugal_error(1., spec.a, rr.ravel())
    return tbl


def nonrel_table(spec, mu, qns):
    """ Non-relativistic energies for a list of quantum numbers

    Parameters
    ----------
    spec : PotentialSpec
    mu : float
      fm^-1
    qns : list of QuantumNumbers

    Returns
    -------
    tbl : Table
    """
    names = ['n', 'ntilde', 'm', 'alpha', 'beta', 'mu', 'E_nl', 'l_eff', 'lambda']
    dtypes = [int, int, int, float, float, float, float, float, float]
    rows = []
    for qn in qns:
        try:
            E_nl = radial.nonrel_energy(mu, spec, qn)
        except DomainError as err:
            warnings.warn("Skipping {}: {}".format(qn.as_tuple(), err), ScanWarning)
            continue
        sol = angular.lambda_nonrel(spec, mu, qn)
        rows.append((qn.n, qn.n_tilde, qn.m, spec.alpha, spec.beta, mu, E_nl,
                     sol.l_eff, sol.lam))
    if len(rows) == 0:
        return _empty(names, dtypes)
    return Table(rows=rows, names=names, dtype=dtypes)
