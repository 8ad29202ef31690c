""" Time the energy root scan over the tabulated quantum numbers
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import cProfile, pstats

from rshulthen import defs
from rshulthen.model import PotentialSpec, QuantumNumbers
from rshulthen.solvers import radial


def time_find_bound_states(npts=20000, ntrials=1):
    """ Time find_bound_states for every tabulated (n, ntilde, m)

    Parameters
    ----------
    npts : int, optional
      Scan grid points
    ntrials : int, optional

    Returns
    -------

    """
    pdict = defs.get_default_params()
    spec = PotentialSpec.build(pdict['V0'], pdict['delta'], alpha=pdict['alpha'],
                               beta=pdict['beta'], mass=pdict['mass'])
    scan = radial.ScanConfig(npts=npts)
    for _ in range(ntrials):
        for qn in defs.table1_qn():
            radial.find_bound_states(spec, QuantumNumbers(*qn), scan=scan)


# Command line execution
if __name__ == '__main__':
    cProfile.run('time_find_bound_states(ntrials=3)', 'find_bound_states.stats')
    stats = pstats.Stats('find_bound_states.stats')
    stats.strip_dirs()
    stats.sort_stats('cumulative')
    stats.print_stats(20)
