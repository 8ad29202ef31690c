""" Physical parameters of the Hulthen plus ring-shaped potential

All quantities are in fm and fm^-1 with hbar = c = 1.
"""
from __future__ import print_function, absolute_import, division, unicode_literals

import numpy as np
import os
import warnings

from collections import OrderedDict
from dataclasses import dataclass, replace

from astropy import units as u
from astropy import constants as const
from astropy.table import Table

from rshulthen import defs
from rshulthen.errors import DomainError, ConfigError, ParameterTypoWarning


def _strip_unit(val, unit):
    """ Convert an astropy Quantity to a float in unit; pass floats through """
    if isinstance(val, u.Quantity):
        return float(val.to(unit).value)
    return float(val)


@dataclass(frozen=True)
class PotentialSpec:
    """ Hulthen depth V0 (fm^-1), range a (fm), ring strengths, mass M (fm^-1)

    pspin flags a parameter set produced by pspin_map; only then may V0
    be non-positive.
    """
    V0: float
    a: float
    alpha: float = 0.
    beta: float = 0.
    M: float = 5.
    pspin: bool = False

    def __post_init__(self):
        if self.a <= 0.:
            raise DomainError("Hulthen range a must be positive, got {:g}".format(self.a))
        if self.M <= 0.:
            raise DomainError("Mass must be positive, got {:g}".format(self.M))
        if (not self.pspin) and self.V0 <= 0.:
            raise DomainError("Hulthen depth V0 must be positive, got {:g}".format(self.V0))

    @property
    def delta(self):
        return 1. / self.a

    @classmethod
    def build(cls, V0, delta, alpha=0., beta=0., mass=5.):
        """ Build from the screening parameter; Quantities are accepted

        Parameters
        ----------
        V0 : float or Quantity
          fm^-1
        delta : float or Quantity
          fm^-1
        alpha, beta : float
        mass : float or Quantity
          fm^-1

        Returns
        -------
        spec : PotentialSpec
        """
        invfm = 1. / u.fm
        delta = _strip_unit(delta, invfm)
        if delta <= 0.:
            raise DomainError("Screening parameter delta must be positive, got {:g}".format(delta))
        return cls(V0=_strip_unit(V0, invfm), a=1. / delta,
                   alpha=float(alpha), beta=float(beta), M=_strip_unit(mass, invfm))


@dataclass(frozen=True)
class QuantumNumbers:
    """ Radial n, angular node number n_tilde, azimuthal m """
    n: int
    n_tilde: int
    m: int

    def __post_init__(self):
        for key in ['n', 'n_tilde', 'm']:
            val = getattr(self, key)
            if int(val) != val or val < 0:
                raise DomainError("Quantum number {:s} must be a non-negative integer, got {}".format(
                    key, val))

    def as_tuple(self):
        return (self.n, self.n_tilde, self.m)


def potential_value(spec, r, theta):
    """ V(r, theta) = -V0 / (exp(r/a) - 1) + (alpha + beta cos^2) / (r^2 sin^2)

    Parameters
    ----------
    spec : PotentialSpec
    r : float or ndarray
      fm, > 0
    theta : float or ndarray
      rad, sin(theta) != 0

    Returns
    -------
    V : float or ndarray
      fm^-1
    """
    r = np.asarray(r, dtype=float)
    theta = np.asarray(theta, dtype=float)
    if np.any(r <= 0.):
        raise DomainError("potential_value requires r > 0")
    sint = np.sin(theta)
    if np.any(np.abs(sint) < 1e-12):
        raise DomainError("Ring-shaped term is singular at theta = 0, pi")
    vh = -spec.V0 / np.expm1(r / spec.a)
    vrs = (spec.alpha + spec.beta * np.cos(theta)**2) / sint**2
    V = vh + vrs / r**2
    if np.ndim(V) == 0:
        return float(V)
    return V


def centrifugal_approx(lam, a, r, d0=defs.D0):
    """ Exponential stand-in for lambda / r^2

    lambda / a^2 [d0 + e^(-r/a) / (1 - e^(-r/a))^2], valid for r << a

    Parameters
    ----------
    lam : float
    a : float
    r : float or ndarray
    d0 : float, optional

    Returns
    -------
    val : float or ndarray
    """
    r = np.asarray(r, dtype=float)
    if np.any(r <= 0.):
        raise DomainError("centrifugal_approx requires r > 0")
    x = r / a
    val = lam / a**2 * (d0 + np.exp(-x) / np.expm1(-x)**2)
    if np.ndim(val) == 0:
        return float(val)
    return val


def centrifugal_error(lam, a, r, d0=defs.D0):
    """ Relative error of centrifugal_approx against lambda / r^2
    """
    r = np.asarray(r, dtype=float)
    exact = lam / r**2
    return (centrifugal_approx(lam, a, r, d0=d0) - exact) / exact


def ring_params_from_hydrogenic(p, sigma_h, eta, units='atomic'):
    """ Ring strengths from the hydrogenic parameterization

    alpha = -p sigma^2 eta^2 a0^2 eps0.  The hydrogenic form gives beta the
    same expression as alpha, which is likely a transcription slip; both are
    returned equal and a ParameterTypoWarning is issued.

    Parameters
    ----------
    p, sigma_h, eta : float
    units : str, optional
      'atomic' (a0 = 1, eps0 = -1/2) or 'fm' (a0 in fm, eps0 in fm^-1)

    Returns
    -------
    alpha, beta : float
    """
    if units == 'atomic':
        a0, eps0 = 1., -0.5
    elif units == 'fm':
        a0 = const.a0.to(u.fm).value
        eps0 = -2. * np.pi * const.Ryd.to(1. / u.fm).value
    else:
        raise ConfigError("Unknown unit system {:s}".format(units))
    alpha = -p * sigma_h**2 * eta**2 * a0**2 * eps0
    warnings.warn("hydrogenic beta repeats the alpha expression; returning beta = alpha",
                  ParameterTypoWarning)
    return alpha, alpha


def pspin_map(spec, E):
    """ Pseudospin mapping V -> -V, E -> -E

    The component swap phi -> chi, chi -> -phi is left to the caller.

    Returns
    -------
    spec_p : PotentialSpec
    E_p : float
    """
    spec_p = replace(spec, V0=-spec.V0, pspin=not spec.pspin)
    return spec_p, -E


def spec_to_dict(spec):
    """ Flat key-value form of a PotentialSpec (delta stored, not a) """
    sdict = OrderedDict()
    sdict['V0'] = spec.V0
    sdict['delta'] = spec.delta
    sdict['alpha'] = spec.alpha
    sdict['beta'] = spec.beta
    sdict['mass'] = spec.M
    return sdict


def spec_from_dict(sdict):
    """ PotentialSpec from a dict with keys V0, delta, alpha, beta, mass

    Missing keys fall back to defs.get_default_params()
    """
    pdict = defs.get_default_params()
    for key in pdict.keys():
        if key in sdict:
            try:
                pdict[key] = float(sdict[key])
            except (TypeError, ValueError):
                raise ConfigError("Bad value for {:s}: {}".format(key, sdict[key]))
    return PotentialSpec.build(pdict['V0'], pdict['delta'], alpha=pdict['alpha'],
                               beta=pdict['beta'], mass=pdict['mass'])


def read_config(cfg_file):
    """ Read a flat key = value file with '#' comments

    Parameters
    ----------
    cfg_file : str

    Returns
    -------
    cdict : OrderedDict
      Values as strings
    """
    if not os.path.isfile(cfg_file):
        raise ConfigError("Config file {:s} does not exist".format(cfg_file))
    try:
        tbl = Table.read(cfg_file, format='ascii.no_header', delimiter='=',
                         comment=r'\s*#', names=('key', 'value'), guess=False)
    except Exception as err:
        raise ConfigError("Unable to parse {:s}: {}".format(cfg_file, err))
    cdict = OrderedDict()
    for row in tbl:
        cdict[str(row['key']).strip()] = str(row['value']).strip()
    return cdict


def write_spec(spec, outfil):
    """ Write a PotentialSpec as a flat key = value file
    """
    with open(outfil, 'w') as fh:
        fh.write('# rshulthen potential parameters (fm^-1)\n')
        for key, val in spec_to_dict(spec).items():
            fh.write('{:s} = {!r}\n'.format(key, float(val)))
