# Module to run tests on the potential model

# TEST_UNICODE_LITERALS

import numpy as np
import os
import pytest

from astropy import units as u
from astropy import constants as const

from rshulthen import defs
from rshulthen import model
from rshulthen.errors import DomainError, ConfigError, ParameterTypoWarning


def data_path(filename):
    data_dir = os.path.join(os.path.dirname(__file__), 'files')
    return os.path.join(data_dir, filename)


def test_potential_spec():
    spec = model.PotentialSpec.build(3.4, 0.25, alpha=1., beta=1., mass=5.)
    assert np.isclose(spec.a, 4.)
    assert np.isclose(spec.delta, 0.25)
    # Quantities
    spec2 = model.PotentialSpec.build(3.4 / u.fm, 0.25 / u.fm, mass=5. / u.fm)
    assert np.isclose(spec2.a, 4.)
    spec3 = model.PotentialSpec.build(3.4, 2.5 / u.nm, mass=5.)
    assert np.isclose(spec3.delta, 2.5e-6)
    # Bad values
    with pytest.raises(DomainError):
        model.PotentialSpec(V0=3.4, a=-1.)
    with pytest.raises(DomainError):
        model.PotentialSpec(V0=-3.4, a=4.)
    with pytest.raises(DomainError):
        model.PotentialSpec(V0=3.4, a=4., M=0.)
    with pytest.raises(DomainError):
        model.PotentialSpec.build(3.4, 0.)


def test_quantum_numbers():
    qn = model.QuantumNumbers(2, 1, 0)
    assert qn.as_tuple() == (2, 1, 0)
    with pytest.raises(DomainError):
        model.QuantumNumbers(-1, 0, 0)
    with pytest.raises(DomainError):
        model.QuantumNumbers(0, 0.5, 0)


def test_potential_value():
    spec = model.PotentialSpec(V0=3.4, a=4., alpha=1., beta=1.)
    # Ring term is alpha / r^2 on the equator
    V = model.potential_value(spec, 4., np.pi / 2)
    assert np.isclose(V, -3.4 / (np.e - 1.) + 1. / 16)
    # theta = pi/4: (alpha + beta/2) / (r^2 / 2)
    V = model.potential_value(spec, 2., np.pi / 4)
    assert np.isclose(V, -3.4 / np.expm1(0.5) + 1.5 / 2.)
    # Arrays
    Varr = model.potential_value(spec, np.array([1., 2.]), np.array([1., 2.]))
    assert Varr.shape == (2,)
    # Singular points
    with pytest.raises(DomainError):
        model.potential_value(spec, 1., 0.)
    with pytest.raises(DomainError):
        model.potential_value(spec, 1., np.pi)
    with pytest.raises(DomainError):
        model.potential_value(spec, 0., 1.)


def test_centrifugal_approx():
    a = 4.
    # lambda/a^2 (d0 + 1/x^2 - 1/12 + ...) -> lambda/r^2
    r = np.array([0.01, 0.1, 0.4])
    approx = model.centrifugal_approx(2., a, r)
    assert np.allclose(approx, 2. / r**2, rtol=1e-6)
    # Relative error is x^4/240 to leading order, independent of lambda
    err = model.centrifugal_error(7., a, 0.4)
    assert np.isclose(err, 0.1**4 / 240, rtol=1e-3)
    assert np.isclose(model.centrifugal_error(1., a, 0.4), err, rtol=1e-10)
    # Grows with r
    errs = model.centrifugal_error(1., a, np.array([0.5, 2., 8.]))
    assert np.all(np.diff(errs) > 0.)
    # Outside r << a: 4 (1/12 + e^-2 / (1 - e^-2)^2) - 1 at r = 2a
    err8 = model.centrifugal_error(2., a, 8.)
    assert 0.05 < err8 < 0.06
    # Large-r limit
    assert abs(model.centrifugal_approx(2., a, 50. * a) - 2. * defs.D0 / a**2) <= 1e-15
    assert abs(model.centrifugal_approx(5.5, 0.5, 25.) - 5.5 * defs.D0 / 0.25) <= 1e-15
    with pytest.raises(DomainError):
        model.centrifugal_approx(2., a, 0.)


def test_ring_params_from_hydrogenic():
    with pytest.warns(ParameterTypoWarning):
        alpha, beta = model.ring_params_from_hydrogenic(1., 2., 1.)
    # -p sigma^2 eta^2 a0^2 eps0 with a0 = 1, eps0 = -1/2
    assert np.isclose(alpha, 2.)
    assert alpha == beta
    # -a0^2 eps0 = 1/(2 m_e) in fm
    with pytest.warns(ParameterTypoWarning):
        alpha_fm, _ = model.ring_params_from_hydrogenic(1., 1., 1., units='fm')
    m_e = (const.m_e * const.c / const.hbar).to(1. / u.fm).value
    assert np.isclose(alpha_fm, 0.5 / m_e, rtol=1e-6)
    with pytest.raises(ConfigError):
        model.ring_params_from_hydrogenic(1., 1., 1., units='cgs')


def test_pspin_map():
    spec = model.PotentialSpec(V0=3.4, a=4., alpha=1., beta=1.)
    spec_p, E_p = model.pspin_map(spec, -4.1)
    assert spec_p.V0 == -3.4
    assert spec_p.pspin
    assert E_p == 4.1
    # Involution
    spec_b, E_b = model.pspin_map(spec_p, E_p)
    assert spec_b == spec
    assert E_b == -4.1


def test_spec_from_dict():
    spec = model.spec_from_dict(dict(V0='2.0', alpha=0.))
    assert spec.V0 == 2.
    assert spec.alpha == 0.
    # Defaults fill the rest
    assert np.isclose(spec.a, 4.)
    assert spec.beta == 1.
    with pytest.raises(ConfigError):
        model.spec_from_dict(dict(V0='deep'))


def test_read_config():
    cdict = model.read_config(data_path('sample.cfg'))
    assert list(cdict.keys())[:5] == ['V0', 'delta', 'alpha', 'beta', 'mass']
    assert float(cdict['V0']) == 3.4
    assert cdict['n'] == '0:1'
    spec = model.spec_from_dict(cdict)
    assert np.isclose(spec.a, 4.)
    with pytest.raises(ConfigError):
        model.read_config(data_path('not_there.cfg'))


def test_write_spec(tmpdir):
    spec = model.PotentialSpec.build(1.5, 0.5, alpha=0.3, beta=0.7, mass=2.)
    outfil = str(tmpdir.join('spec.cfg'))
    model.write_spec(spec, outfil)
    spec2 = model.spec_from_dict(model.read_config(outfil))
    assert spec2 == spec
