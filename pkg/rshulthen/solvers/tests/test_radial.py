# Module to run tests on the radial solver

# TEST_UNICODE_LITERALS

import numpy as np
import pytest

from scipy import special
from scipy.integrate import quad, dblquad

from rshulthen import oracle
from rshulthen import specfn
from rshulthen.model import PotentialSpec, QuantumNumbers
from rshulthen.solvers import angular
from rshulthen.solvers import radial
from rshulthen.errors import ConfigError, DomainError, NonNormalizableError, ScanWarning


def ring_spec(V0=3.4, delta=0.25):
    return PotentialSpec.build(V0, delta, alpha=1., beta=1., mass=5.)


def bare_spec():
    return PotentialSpec.build(3.4, 0.25, alpha=0., beta=0., mass=5.)


def positive_state(spec, qn):
    states = radial.find_bound_states(spec, qn)
    return [st for st in states if st.branch == 1][0]


def test_radial_params():
    rp = radial.radial_params(ring_spec(), -4.139490168, 9.28684)
    assert np.isclose(rp.eps_energy, 126.608, atol=1e-3)
    assert np.isclose(rp.sigma, 93.6235, atol=1e-4)
    rp = radial.radial_params(ring_spec(), -4.995583758, 2.40756)
    assert np.isclose(rp.eps_energy, 0.90691, atol=2e-5)
    assert np.isclose(rp.sigma, 0.48049, atol=1e-5)
    # Threshold
    rp = radial.radial_params(ring_spec(), 5., 0.)
    assert rp.eps_energy == 0.


def test_quantized_sqrt_eps():
    assert np.isclose(radial.quantized_sqrt_eps(93.6235, 2.58817, 0), 11.2520, atol=1e-4)
    assert np.isclose(radial.quantized_sqrt_eps(0.48049, 1.13019, 0), -0.952316, atol=1e-5)
    N = 0 + 1.5 + 1.
    assert radial.quantized_sqrt_eps(N**2, 1.5, 0) == 0.
    with pytest.raises(DomainError):
        radial.quantized_sqrt_eps(1., -3., 0)


@pytest.mark.parametrize('spec_fn,E', [(ring_spec, -4.139490168), (ring_spec, -4.995583758),
                                       (bare_spec, -4.720283669)])
def test_energy_residual(spec_fn, E):
    assert abs(radial.energy_residual(spec_fn(), QuantumNumbers(0, 0, 0), E)) <= 1e-4
    # Away from a root
    assert abs(radial.energy_residual(spec_fn(), QuantumNumbers(0, 0, 0), E + 0.2)) > 1e-2


def test_energy_residual_domain():
    with pytest.raises(DomainError):
        radial.energy_residual(ring_spec(), QuantumNumbers(0, 0, 0), 5.)
    with pytest.raises(DomainError):
        radial.energy_residual(ring_spec(), QuantumNumbers(0, 0, 0), -6.)


def test_residual_grid():
    qn = QuantumNumbers(1, 1, 1)
    egrid = np.array([-4.9, -3.2, 0.5, 4.2])
    F, bad = radial.residual_grid(ring_spec(), qn, egrid)
    assert not np.any(bad)
    for E, val in zip(egrid, F):
        assert np.isclose(val, radial.energy_residual(ring_spec(), qn, E), rtol=1e-12)


def test_find_ground_ring():
    states = radial.find_bound_states(ring_spec(), QuantumNumbers(0, 0, 0))
    assert len(states) == 2
    assert np.isclose(states[0].E, -4.995583758, atol=1e-6)
    assert np.isclose(states[1].E, -4.139490168, atol=1e-6)
    assert states[0].branch == -1
    assert states[1].branch == 1
    assert np.isnan(states[0].A_nl)
    assert states[1].A_nl > 0.
    assert states[1].component == 'phi'


@pytest.mark.parametrize('spec_fn,qn,expected', [
    (bare_spec, (2, 2, 1), [-4.920319274, -0.998615904]),
    (ring_spec, (2, 2, 0), [-4.927892096, 0.866047610]),
    (bare_spec, (1, 1, 1), [-4.965242671, -2.851556752]),
    ])
def test_find_bound_states(spec_fn, qn, expected):
    states = radial.find_bound_states(spec_fn(), QuantumNumbers(*qn))
    energies = np.array([st.E for st in states])
    assert np.all(np.diff(energies) > 0.)
    for E in expected:
        assert np.min(np.abs(energies - E)) < 1e-6
    # Positive-energy root keeps its flag
    if qn == (2, 2, 0):
        st = states[int(np.argmin(np.abs(energies - 0.866047610)))]
        assert st.branch == 1


def test_state_invariants():
    for spec in [ring_spec(), bare_spec()]:
        for qn in [(0, 0, 0), (1, 0, 1), (2, 1, 0)]:
            states = radial.find_bound_states(spec, QuantumNumbers(*qn))
            for st in states:
                assert -spec.M < st.E < spec.M
                eps = st.radial.eps_energy
                q = radial.quantized_sqrt_eps(st.radial.sigma, st.angular.l_eff, st.qn.n)
                assert abs(eps - q**2) <= 1e-10 * max(1., eps)
                # Branch law
                assert (st.branch == 1) == (st.radial.sigma > st.N_total**2)
                assert st.angular.energy_used == st.E
            # The antiparticle root sits on the negative branch
            assert states[0].branch == -1


def test_non_normalizable():
    states = radial.find_bound_states(ring_spec(), QuantumNumbers(0, 0, 0))
    with pytest.raises(NonNormalizableError):
        radial.normalization_constant(states[0])
    with pytest.raises(NonNormalizableError):
        radial.radial_wavefunction(states[0])
    with pytest.raises(NonNormalizableError):
        radial.total_wavefunction(states[0])


@pytest.mark.parametrize('spec_fn,qn', [(ring_spec, (0, 0, 0)), (bare_spec, (1, 0, 0)),
                                        (ring_spec, (1, 1, 1))])
def test_quadrature_normalization(spec_fn, qn):
    state = positive_state(spec_fn(), QuantumNumbers(*qn))
    assert np.isclose(oracle.quadrature_norm(state), 1., atol=1e-8)
    assert np.isclose(radial.normalization_constant(state), state.A_nl, rtol=1e-14)


def test_radial_shape():
    for qn, nnodes in [((0, 0, 0), 0), ((1, 0, 0), 1), ((2, 0, 0), 2)]:
        state = positive_state(bare_spec(), QuantumNumbers(*qn))
        u_fn = radial.radial_wavefunction(state)
        rvals = np.linspace(0.01, 60., 6000)
        assert oracle.count_nodes(u_fn(rvals)) == nnodes
        # Both ends vanish
        assert abs(u_fn(1e-8)) < 1e-6
        assert abs(u_fn(400.)) < 1e-12


def test_normalization_forms():
    A5 = radial.normalization_b5(0, 1., 1., 4.)
    A7 = radial.normalization_ground(1., 1., 4.)
    assert np.isclose(A5, A7, rtol=1e-12)
    # B(2, 4) = 1/20
    assert np.isclose(specfn.beta_fn(2., 4.), 1. / 20)
    assert np.isclose(A5, np.sqrt(3. / (4. * 2. * specfn.beta_fn(2., 4.))), rtol=1e-12)
    assert np.isclose(A5, np.sqrt(7.5), rtol=1e-12)
    # Non-integer orbital parameter
    assert np.isclose(radial.normalization_b5(0, 2.58817, 11.252, 4.),
                      radial.normalization_ground(2.58817, 11.252, 4.), rtol=1e-12)
    with pytest.raises(DomainError):
        radial.normalization_b5(0, 1., 0., 4.)
    with pytest.raises(DomainError):
        radial.normalization_b5(0, 1., 1., -4.)


def test_normalization_random_triples():
    rstate = np.random.RandomState(1234)
    for l_eff, x, a in zip(rstate.uniform(0., 8., 20), rstate.uniform(0.1, 30., 20),
                           rstate.uniform(0.5, 10., 20)):
        assert np.isclose(radial.normalization_b5(0, l_eff, x, a),
                          radial.normalization_ground(l_eff, x, a), rtol=1e-12)


def test_normalization_first_excited():
    # n = 1, l = 1, sqrt(eps) = 2, a = 1: 20 G(9) / (3 G(5) G(6))
    A = radial.normalization_b5(1, 1., 2., 1.)
    assert np.isclose(A**2, 280. / 3, rtol=1e-12)

    def integrand(s):
        return s**3 * (1. - s)**4 * special.eval_jacobi(1, 4., 3., 1. - 2. * s)**2
    val, _ = quad(integrand, 0., 1., epsabs=1e-14, epsrel=1e-12)
    assert np.isclose(A**2 * val, 1., rtol=1e-10)


def test_total_wavefunction():
    state = positive_state(ring_spec(), QuantumNumbers(0, 0, 0))
    wf = radial.total_wavefunction(state)
    rvals = np.array([0.5, 2., 7.])
    # Node on the equator
    assert np.all(wf(rvals, np.pi / 2, 0.3) == 0.)
    # |wf| does not depend on phi
    for phi in [0., 1., 4.]:
        assert np.allclose(np.abs(wf(rvals, 0.7, phi)), np.abs(wf(rvals, 0.7, 0.)))
    # Separable product
    u_fn = radial.radial_wavefunction(state)
    theta_fn = angular.theta_wavefunction(state.angular)
    assert np.allclose(np.abs(wf(rvals, 0.7, 0.)),
                       np.abs(u_fn(rvals) / rvals * theta_fn(0.7)) / np.sqrt(2. * np.pi))
    # Full normalization; the phi integral gives 2 pi |Phi|^2 = 1
    val, _ = dblquad(lambda t, r: np.abs(wf(r, t, 0.))**2 * r**2 * np.sin(t) * 2. * np.pi,
                     0., 40., 0., np.pi, epsabs=1e-10, epsrel=1e-9)
    assert np.isclose(val, 1., atol=1e-6)


def test_radial_ode_residual():
    for spec, qn in [(ring_spec(), (0, 0, 0)), (bare_spec(), (1, 0, 0)),
                     (ring_spec(), (2, 1, 1))]:
        state = positive_state(spec, QuantumNumbers(*qn))
        assert oracle.radial_ode_residual(state) < 1e-6


def test_pspin():
    qn = QuantumNumbers(0, 0, 0)
    states = radial.find_bound_states(ring_spec(), qn, pspin=True)
    for st in states:
        assert st.component == 'chi'
        assert st.spec.pspin
        assert st.spec.V0 == -3.4
        assert st.E == -st.E_solved
        assert abs(radial.energy_residual(st.spec, qn, st.E_solved)) < 1e-6
        assert np.isfinite(st.lower_prefactor)
    # Spin-symmetric states report the upper component
    states = radial.find_bound_states(ring_spec(), qn)
    assert np.isclose(states[1].lower_prefactor, 1. / (states[1].E + 5.))


def test_scan_config():
    with pytest.raises(ConfigError):
        radial.ScanConfig(npts=1)
    with pytest.raises(ConfigError):
        radial.ScanConfig(xtol=0.)
    with pytest.raises(ConfigError):
        radial.ScanConfig(xi_frac=1.)
    scan = radial.ScanConfig.from_dict(dict(npts='500'))
    assert scan.npts == 500
    assert scan.xtol == 1e-13


def test_scan_skips_complex_ranges():
    # m^2 + 2(E+M)(alpha+beta) < 0 for E + M > 1/4
    spec = PotentialSpec(V0=3.4, a=4., alpha=-1., beta=-1.)
    with pytest.warns(ScanWarning):
        states = radial.find_bound_states(spec, QuantumNumbers(0, 0, 1))
    for st in states:
        assert st.E + spec.M <= 0.25
    # Skipped ranges come back on request
    with pytest.warns(ScanWarning):
        states2, skipped = radial.find_bound_states(spec, QuantumNumbers(0, 0, 1),
                                                    return_skipped=True)
    assert [st.E for st in states2] == [st.E for st in states]
    assert len(skipped) >= 1
    elo, ehi = skipped[0]
    assert 0.25 < elo + spec.M < 0.25 + 1e-3
    assert np.isclose(skipped[-1][1], spec.M, atol=1e-6)
    assert all(lo <= hi for lo, hi in skipped)
    # Coarser grid still finds the ground state
    states = radial.find_bound_states(ring_spec(), QuantumNumbers(0, 0, 0),
                                      scan=radial.ScanConfig(npts=2000))
    assert np.isclose(states[-1].E, -4.139490168, atol=1e-6)


def test_track_root():
    qn = QuantumNumbers(0, 0, 0)
    state = positive_state(ring_spec(), qn)
    deeper = radial.track_root(ring_spec(V0=3.5), qn, state.E, 1)
    assert deeper.branch == 1
    assert deeper.E < state.E
    ref = positive_state(ring_spec(V0=3.5), qn)
    assert np.isclose(deeper.E, ref.E, atol=1e-9)


def test_nonrel_energy():
    spec_nr = PotentialSpec(V0=3.4, a=4.)
    E = radial.nonrel_energy(1., spec_nr, QuantumNumbers(0, 0, 0))
    assert np.isclose(E, (2. / 12 - (108.8 / 2 - 1.)**2) / 32., rtol=1e-12)
    assert np.isclose(E, -89.10604167, atol=1e-7)
    # Bare reduction with l = 2 ntilde + m + 1
    mu = 2.3
    for n, nt, m in [(0, 1, 0), (2, 0, 1), (1, 1, 1)]:
        l = 2 * nt + m + 1
        N = n + l + 1
        ref = (l * (l + 1) / 12. - (2 * mu * 3.4 * 16. / N - N / 2.)**2) / (2 * mu * 16.)
        assert np.isclose(radial.nonrel_energy(mu, spec_nr, QuantumNumbers(n, nt, m)), ref,
                          rtol=1e-12)
    # Random parameter sets
    rstate = np.random.RandomState(42)
    for _ in range(50):
        mu, V0, a = rstate.uniform(0.1, 5.), rstate.uniform(0.1, 5.), rstate.uniform(0.5, 10.)
        n, nt, m = rstate.randint(0, 4, 3)
        spec = PotentialSpec(V0=V0, a=a)
        l = 2 * nt + m + 1
        N = n + l + 1
        ref = (l * (l + 1) / 12. - (2 * mu * V0 * a**2 / N - N / 2.)**2) / (2 * mu * a**2)
        assert np.isclose(radial.nonrel_energy(mu, spec, QuantumNumbers(n, nt, m)), ref,
                          rtol=1e-12)
    with pytest.raises(DomainError):
        radial.nonrel_energy(0., spec_nr, QuantumNumbers(0, 0, 0))


def test_nonrel_limit():
    # V0 = 1/M keeps the binding fixed in units of 1/M
    qn = QuantumNumbers(0, 0, 0)
    gaps = []
    for M in [5., 50., 500.]:
        spec = PotentialSpec(V0=1. / M, a=4., M=M)
        roots, _ = radial.scan_interval(spec, qn, M - 20. / M, M - 1e-3 / M, 2000, 1e-13)
        states = [radial.bound_state(spec, qn, root) for root in roots]
        E = [st.E for st in states if st.branch == 1][0]
        E_nr = radial.nonrel_energy(M, spec, qn)
        assert np.isclose(E_nr * M, -7.026, atol=1e-3)
        gaps.append(abs((E - M) - E_nr) / abs(E_nr))
    assert gaps[0] > gaps[1] > gaps[2]
    assert gaps[2] < 1e-3


def test_nonrel_wavefunction():
    spec_nr = PotentialSpec(V0=3.4, a=4., alpha=0.5, beta=0.5)
    mu = 1.
    qn = QuantumNumbers(1, 0, 1)
    E = radial.nonrel_energy(mu, spec_nr, qn)
    assert E < 0.
    u_fn = radial.nonrel_radial_wavefunction(mu, spec_nr, qn, E)
    assert np.isclose(oracle.radial_quadrature(u_fn, spec_nr.a), 1., atol=1e-8)
    wf = radial.nonrel_wavefunction(mu, spec_nr, qn, E)
    assert np.all(wf(np.array([1., 3.]), np.pi / 2, 0.) == 0.)
    sol = angular.lambda_nonrel(spec_nr, mu, qn)
    assert radial.nonrel_kappa(mu, spec_nr, sol.lam, E) > 0.
    with pytest.raises(DomainError):
        radial.nonrel_radial_wavefunction(mu, spec_nr, qn, 0.)
    with pytest.raises(DomainError):
        radial.nonrel_wavefunction(mu, spec_nr, qn, 1.)
