#!/usr/bin/env python
"""
Compute, tabulate and verify bound states of the Hulthen plus ring-shaped potential
"""
from __future__ import (print_function, absolute_import, division, unicode_literals)

from collections import OrderedDict


def parser(options=None):
    import argparse
    # Shared flags
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", type=str, help="key = value parameter file")
    common.add_argument("--V0", type=float, help="Hulthen depth (fm^-1)")
    common.add_argument("--delta", type=float, help="Screening parameter 1/a (fm^-1)")
    common.add_argument("--mass", type=float, help="Mass M (fm^-1)")
    common.add_argument("--alpha", type=float, help="Ring strength alpha")
    common.add_argument("--beta", type=float, help="Ring strength beta")
    common.add_argument("--n", type=str, help="Radial quantum number, k or lo:hi")
    common.add_argument("--ntilde", type=str, help="Polar quantum number, k or lo:hi")
    common.add_argument("--m", type=str, help="Azimuthal quantum number, k or lo:hi")
    common.add_argument("--grid-points", dest='grid_points', type=int,
                        help="Energy scan points (finite-difference points for verify)")
    common.add_argument("--tol", type=float, help="Bisection tolerance on E (fm^-1)")
    common.add_argument("--out", type=str, help="Output CSV file")
    common.add_argument("--clobber", default=False, action='store_true',
                        help="Clobber existing file?")
    # Parse
    parser = argparse.ArgumentParser(
        description='Bound states of the Dirac equation with Hulthen plus ring-shaped potential')
    sub = parser.add_subparsers(dest='command')
    psolve = sub.add_parser('solve', parents=[common], help="Energies for a range of (n, ntilde, m)")
    psolve.add_argument("--pspin", default=False, action='store_true',
                        help="Pseudospin states via V0 -> -V0, E -> -E")
    sub.add_parser('table1', parents=[common], help="Recompute the tabulated spectrum")
    psweep = sub.add_parser('sweep', parents=[common], help="Energies along a V0 or delta sweep")
    psweep.add_argument("--param", type=str, default='V0', choices=['V0', 'delta'])
    psweep.add_argument("--start", type=float, required=True)
    psweep.add_argument("--stop", type=float, required=True)
    psweep.add_argument("--steps", type=int, default=20)
    pwave = sub.add_parser('wavefunction', parents=[common], help="Tabulate U(r) and Theta(theta)")
    pwave.add_argument("--root", type=int, default=2, help="Root index in ascending E (1-based)")
    pwave.add_argument("--npts", type=int, default=601, help="Points on the r and theta grids")
    sub.add_parser('verify', parents=[common], help="Finite-difference and quadrature checks")
    ppot = sub.add_parser('potential', parents=[common], help="V(r, theta) grid")
    ppot.add_argument("--nr", type=int, default=200)
    ppot.add_argument("--ntheta", type=int, default=90)
    pnr = sub.add_parser('nonrel', parents=[common], help="Non-relativistic energies")
    pnr.add_argument("--mu", type=float, required=True, help="Reduced mass (fm^-1)")

    if options is None:
        args = parser.parse_args()
    else:
        args = parser.parse_args(options)
    return args


def merge_config(pargs):
    """ File values first, then any flag given on the command line """
    from rshulthen import model
    cdict = OrderedDict()
    if pargs.config is not None:
        cdict.update(model.read_config(pargs.config))
    for key in ['V0', 'delta', 'mass', 'alpha', 'beta', 'n', 'ntilde', 'm',
                'grid_points', 'tol', 'out']:
        val = getattr(pargs, key)
        if val is not None:
            cdict[key] = val
    cdict['clobber'] = pargs.clobber
    return cdict


def main(args=None):
    """ Run
    Parameters
    ----------
    args : list, optional

    Returns
    -------
    exit_code : int
    """
    from rshulthen import build_tables
    from rshulthen import defs
    from rshulthen.errors import ConfigError, DomainError, NumericError, BracketError
    from rshulthen.solvers import radial

    # Grab arguments
    pargs = parser(options=args)
    if pargs.command is None:
        print("Choose a command: solve, table1, sweep, wavefunction, verify, potential, nonrel")
        return defs.EXIT_CONFIG

    try:
        cdict = merge_config(pargs)
        rcfg = build_tables.run_config(cdict)
    except ConfigError as err:
        print("Configuration error: {}".format(err))
        return defs.EXIT_CONFIG

    def _write(tbl, trailer=None):
        if not build_tables.write_table(tbl, rcfg.out, clobber=rcfg.clobber, trailer=trailer):
            raise ConfigError("Output file {:s} exists".format(rcfg.out))

    try:
        if pargs.command == 'solve':
            print("Solving for {:d} quantum number sets".format(len(rcfg.quantum_numbers())))
            tbl = build_tables.solve_table(rcfg.spec, rcfg.quantum_numbers(), scan=rcfg.scan,
                                           pspin=pargs.pspin, verbose=True)
            _write(tbl)
        elif pargs.command == 'table1':
            tbl = build_tables.table1(scan=rcfg.scan)
            _write(tbl)
        elif pargs.command == 'sweep':
            qns = rcfg.quantum_numbers()
            if len(qns) != 1:
                raise ConfigError("A sweep takes a single (n, ntilde, m)")
            tbl = build_tables.sweep(rcfg.spec, qns[0], pargs.param, pargs.start, pargs.stop,
                                     pargs.steps, scan=rcfg.scan, verbose=True)
            _write(tbl)
        elif pargs.command == 'wavefunction':
            qns = rcfg.quantum_numbers()
            if len(qns) != 1:
                raise ConfigError("Select a single (n, ntilde, m)")
            states = radial.find_bound_states(rcfg.spec, qns[0], scan=rcfg.scan)
            if not 1 <= pargs.root <= len(states):
                raise DomainError("Root {:d} not found; {:d} roots available".format(
                    pargs.root, len(states)))
            tbl, trailer = build_tables.wavefunction_table(states[pargs.root - 1],
                                                           npts=pargs.npts)
            _write(tbl, trailer=trailer)
        elif pargs.command == 'verify':
            specs, qns = None, None
            if any(key in cdict for key in ['V0', 'delta', 'mass', 'alpha', 'beta']):
                specs = OrderedDict([('config', rcfg.spec)])
            if any(key in cdict for key in ['n', 'ntilde', 'm']):
                qns = rcfg.quantum_numbers()
            tbl, passed = build_tables.verify(fd_points=rcfg.fd_points, qns=qns, specs=specs)
            _write(tbl)
            if not passed:
                return defs.EXIT_VERIFY
        elif pargs.command == 'potential':
            spec = None
            if pargs.config is not None or any(getattr(pargs, key) is not None
                                               for key in ['V0', 'delta', 'alpha', 'beta']):
                spec = rcfg.spec
            tbl = build_tables.potential_grid(spec=spec, nr=pargs.nr, ntheta=pargs.ntheta)
            _write(tbl)
        elif pargs.command == 'nonrel':
            tbl = build_tables.nonrel_table(rcfg.spec, pargs.mu, rcfg.quantum_numbers())
            _write(tbl)
    except ConfigError as err:
        print("Configuration error: {}".format(err))
        return defs.EXIT_CONFIG
    except (DomainError, NumericError, BracketError) as err:
        print("Numeric failure: {}".format(err))
        return defs.EXIT_NUMERIC
    return defs.EXIT_OK


if __name__ == '__main__':
    import sys
    sys.exit(main())
