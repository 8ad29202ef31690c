""" Module for key definitions in rshulthen
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np

from collections import OrderedDict
from astropy.table import Table


# Greene-Aldrich constant of the centrifugal approximation
D0 = 1. / 12

# Exit codes of the command line scripts
EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def get_default_params():
    """ Potential parameters of the published spectrum

    Returns
    -------
    pdict : dict
      V0 and mass in fm^-1, delta in fm^-1, alpha and beta ring strengths

    """
    pdict = dict(V0=3.4, delta=0.25, mass=5., alpha=1., beta=1.)
    return pdict


def get_figure1_params():
    """ Parameters used to display the potential shape
    Returns
    -------
    pdict : dict
    """
    return dict(V0=0.1, delta=0.1, mass=5., alpha=1., beta=10.)


def get_scan_dict():
    """ Defaults for the energy root scan

    Returns
    -------
    sdict : dict
      npts : number of grid points over (-M, M)
      xi_frac : edge offset xi in units of M
      xtol : absolute tolerance of the bisection refinement

    """
    sdict = dict(npts=20000, xi_frac=1e-9, xtol=1e-13)
    return sdict


def get_oracle_dict():
    """ Defaults for the finite-difference verification

    Returns
    -------
    odict : dict

    """
    odict = dict(r_min=1e-4,        # fm
                 r_max=60.,         # fm ; ~15a for a=4 fm
                 radial_npts=20000,
                 angular_npts=5000,
                 energy_tol=5e-3,   # fm^-1
                 lambda_tol=1e-3,
                 norm_tol=1e-8,
                 residual_tol=1e-6,
                 order_ratio=(3.5, 4.5),  # defect ratio under point doubling
                 bracket_width=0.05,  # fm^-1
                 xtol=1e-8,
                 )
    return odict


def table1_qn():
    """ Quantum numbers (n, ntilde, m) of the tabulated spectrum
    Returns
    -------
    qns : list of tuples
    """
    qns = [(0, 0, 0),
           (1, 0, 0), (1, 0, 1), (1, 1, 0), (1, 1, 1),
           (2, 0, 0), (2, 0, 1), (2, 1, 0), (2, 1, 1), (2, 2, 0), (2, 2, 1),
           (3, 0, 0), (3, 0, 1), (3, 1, 0), (3, 1, 1)]
    return qns


def get_table1():
    """ Bound-state energies (fm^-1) tabulated for V0=3.4, delta=0.25, M=5

    E1 columns are the antiparticle (negative branch) roots, E2 the
    particle (positive branch) roots.

    Returns
    -------
    tbl : Table
      Columns n, ntilde, m, E1_ring, E2_ring (alpha=beta=1),
      E1_bare, E2_bare (alpha=beta=0), suspect_ring

    """
    vals = [
        [-4.995583758, -4.139490168, -4.996058414, -4.720283669],
        [-4.988883706, -3.351144541, -4.990126164, -4.388096150],
        [-4.983219226, -3.181185632, -4.983417636, -3.949703384],
        [-4.972069376, -1.450852722, -4.975125259, -3.429332733],
        [-4.964591276, -1.33435789, -4.965242671, -2.851556752],
        [-4.979466843, -2.494855449, -4.981810530, -3.951310489],
        [-4.972286615, -2.346989231, -4.972714353, -3.431743639],
        [-4.957273060, -0.642877021, -4.962026060, -2.854773363],
        [-4.948594597, -0.544726664, -4.949737250, -2.243800108],
        [-4.927892096, 0.866047610, -4.935838511, -1.619431412],
        [-4.918016190, 0.933230388, -4.920319274, -0.998615904],
        [-4.967330159, -1.644145559, -4.971102883, -3.433355109],
        [-4.958826910, -1.517571480, -4.959607143, -2.857192280],
        [-4.958826910, -1.517571480, -4.946508429, -2.247028930],
        [-4.92998072, 0.1758391135, -4.931796375, -1.623473548],
    ]
    vals = np.array(vals)
    qns = np.array(table1_qn())
    tbl = Table()
    tbl['n'] = qns[:, 0]
    tbl['ntilde'] = qns[:, 1]
    tbl['m'] = qns[:, 2]
    tbl['E1_ring'] = vals[:, 0]
    tbl['E2_ring'] = vals[:, 1]
    tbl['E1_bare'] = vals[:, 2]
    tbl['E2_bare'] = vals[:, 3]
    # Row (3,1,0) repeats row (3,0,1) for alpha=beta=1
    suspect = np.zeros(len(tbl), dtype=bool)
    suspect[(tbl['n'] == 3) & (tbl['ntilde'] == 1) & (tbl['m'] == 0)] = True
    tbl['suspect_ring'] = suspect
    return tbl


def get_param_sets():
    """ The two ring-strength settings of the tabulated spectrum
    Returns
    -------
    psets : OrderedDict
    """
    psets = OrderedDict()
    psets['ring'] = dict(alpha=1., beta=1.)
    psets['bare'] = dict(alpha=0., beta=0.)
    return psets
