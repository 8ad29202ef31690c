# Module to run tests on the finite-difference and quadrature checks

# TEST_UNICODE_LITERALS

import numpy as np
import pytest

from rshulthen import oracle
from rshulthen.model import PotentialSpec, QuantumNumbers
from rshulthen.solvers import angular
from rshulthen.solvers import radial
from rshulthen.errors import BracketError, DomainError


def ring_spec():
    return PotentialSpec.build(3.4, 0.25, alpha=1., beta=1., mass=5.)


def bare_spec():
    return PotentialSpec.build(3.4, 0.25, alpha=0., beta=0., mass=5.)


def ground_state(spec):
    states = radial.find_bound_states(spec, QuantumNumbers(0, 0, 0))
    return [st for st in states if st.branch == 1][0]


def test_grid():
    grid = oracle.Grid1D(0., 1., 999)
    assert np.isclose(grid.spacing, 1e-3)
    assert len(grid.points) == 999
    assert np.isclose(grid.points[0], 1e-3)
    assert np.isclose(grid.points[-1], 0.999)
    with pytest.raises(DomainError):
        oracle.Grid1D(1., 0., 999)
    with pytest.raises(DomainError):
        oracle.Grid1D(0., 1., 50)
    dgrid = oracle.Grid1D.radial_default()
    assert dgrid.lo == 1e-4
    assert dgrid.hi == 60.
    assert dgrid.n_points == 20000


def test_count_nodes():
    assert oracle.count_nodes(np.array([1., 2., -1., -3., 4.])) == 2
    # Values below the floor are noise
    assert oracle.count_nodes(np.array([1., 1e-12, -1e-12, 1e-12, 2.])) == 0


def test_particle_in_box():
    # No potential when E_coupling = -M and lambda = 0
    grid = oracle.Grid1D(0., 10., 999)
    W = oracle.radial_fd_spectrum(bare_spec(), 0., -5., grid, 3)
    expected = [(k + 1)**2 * np.pi**2 / 100. for k in range(3)]
    assert np.allclose(W, expected, rtol=1e-4)
    assert np.all(np.array(W) > 0.)
    W2, vecs, nodes = oracle.radial_fd_states(bare_spec(), 0., -5., grid, 3)
    assert np.allclose(W2, W)
    assert vecs.shape == (999, 3)
    assert list(nodes) == [0, 1, 2]
    with pytest.raises(DomainError):
        oracle.radial_fd_spectrum(bare_spec(), 0., -5., grid, 1000)
    with pytest.raises(DomainError):
        oracle.radial_fd_spectrum(bare_spec(), 0., -5., grid, 0)


def test_radial_defect():
    state = ground_state(bare_spec())
    assert np.isclose(state.E, -4.720283669, atol=1e-6)
    # Bound-state eigenvalue of -d2/dr2 + V_eff is E^2 - M^2 < 0
    grid = oracle.Grid1D.radial_default()
    W, nodes = oracle.radial_fd_level(state.spec, state.qn, state.E, grid)
    assert nodes == 0
    assert W < 0.
    assert abs(W - (state.E**2 - 25.)) <= 5e-3
    defect = oracle.radial_fd_defect(state, grid)
    assert abs(defect) <= 5e-3
    assert np.isclose(defect, W - (state.E**2 - 25.), atol=1e-12)
    # Second-order convergence
    d1 = oracle.radial_fd_defect(state, oracle.Grid1D.radial_default(2000))
    d2 = oracle.radial_fd_defect(state, oracle.Grid1D.radial_default(4000))
    assert 3. < abs(d1 / d2) < 5.


@pytest.mark.parametrize('spec_fn,E', [(bare_spec, -4.720283669), (ring_spec, -4.139490168)])
def test_selfconsistent_energy(spec_fn, E):
    E_fd = oracle.selfconsistent_energy(spec_fn(), QuantumNumbers(0, 0, 0),
                                        oracle.Grid1D.radial_default(), (E - 0.05, E + 0.05))
    assert abs(E_fd - E) <= 5e-3


def test_bracket_error():
    with pytest.raises(BracketError):
        oracle.selfconsistent_energy(bare_spec(), QuantumNumbers(0, 0, 0),
                                     oracle.Grid1D.radial_default(2000), (-3.0, -2.9))


def test_angular_fd_bare():
    grid = oracle.Grid1D(0., 1., 5000)
    lams = oracle.angular_fd_spectrum(bare_spec(), -2., 0, grid, 3)
    assert np.allclose(lams, [2., 12., 30.], atol=1e-3)
    # m = 1: l = 2, 4
    lams = oracle.angular_fd_spectrum(bare_spec(), -2., 1, grid, 2)
    assert np.allclose(lams, [6., 20.], atol=1e-3)
    with pytest.raises(DomainError):
        oracle.angular_fd_spectrum(bare_spec(), -2., 0, oracle.Grid1D(0., 2., 5000), 2)


def test_angular_fd_ring():
    E = -4.139490168
    grid = oracle.Grid1D(0., 1., 5000)
    lams = oracle.angular_fd_spectrum(ring_spec(), E, 0, grid, 3)
    assert np.isclose(lams[0], 9.2868, atol=1e-3)
    for nt in range(3):
        sol = angular.lambda_of(ring_spec(), E, QuantumNumbers(0, nt, 0))
        assert abs(lams[nt] - sol.lam) <= 1e-3
    # m = 1 shifts m_tilde away from m
    lams = oracle.angular_fd_spectrum(ring_spec(), E, 1, grid, 3)
    for nt in range(3):
        sol = angular.lambda_of(ring_spec(), E, QuantumNumbers(0, nt, 1))
        assert sol.m_tilde != 1.
        assert abs(lams[nt] - sol.lam) <= 1e-3


def test_b4_identity():
    chk = oracle.b4_identity_check(1., 0., 0)
    assert np.isclose(chk.lhs, 1. / 12, rtol=1e-10)
    assert np.isclose(chk.rhs, 1. / 12, rtol=1e-12)
    chk = oracle.b4_identity_check(0.5, -0.5, 0)
    assert np.isclose(chk.lhs, 0.5, rtol=1e-10)
    assert np.isclose(chk.rhs, 0.5, rtol=1e-12)
    # n = 1: the closed form matches c = 1 + 2 lam
    chk = oracle.b4_identity_check(1., 0., 1)
    assert np.isclose(chk.lhs, 1. / 54, rtol=1e-10)
    assert np.isclose(chk.rhs, 1. / 54, rtol=1e-12)
    shifted = oracle.b4_identity_check(1., 0., 1, third='shifted')
    assert np.isclose(shifted.lhs, 25. / 960, rtol=1e-10)
    assert not np.isclose(shifted.lhs, shifted.rhs, rtol=1e-3)
    # Non-integer parameters
    chk = oracle.b4_identity_check(2.3, 1.7, 2)
    assert np.isclose(chk.lhs, chk.rhs, rtol=1e-8)
    with pytest.raises(DomainError):
        oracle.b4_identity_check(0., 0., 0)
    with pytest.raises(DomainError):
        oracle.b4_identity_check(1., -2., 0)
    with pytest.raises(DomainError):
        oracle.b4_identity_check(1., 0., 0, third='other')


def test_quadrature_norm():
    state = ground_state(ring_spec())
    assert np.isclose(oracle.quadrature_norm(state), 1., atol=1e-8)
    assert np.isclose(oracle.quadrature_norm(state, A_override=1.), 1. / state.A_nl**2,
                      rtol=1e-8)
    assert oracle.tail_fraction(state, 60.) < 1e-10
    assert oracle.tail_fraction(state, 1.) > 1e-3


def test_verify_state():
    state = ground_state(bare_spec())
    rec = oracle.verify_state(state, oracle.Grid1D.radial_default())
    assert list(rec.keys())[:3] == ['n', 'ntilde', 'm']
    assert rec['E_analytic'] == state.E
    assert rec['defect'] <= 5e-3
    assert rec['nodes'] == 0
    assert rec['npts'] == 20000
