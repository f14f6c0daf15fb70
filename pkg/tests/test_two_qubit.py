import numpy as np
import pytest

import posqubit.two_qubit as tq
from posqubit.errors import OccupancyNotNormalizedError
from posqubit.qcore import StateVector, eig_hermitian

rng = np.random.default_rng(303)


def test_geometry_validation():
    with pytest.raises(ValueError):
        tq.DotGeometry(kind="spiral")
    with pytest.raises(ValueError):
        tq.DotGeometry(d=-1.0)
    with pytest.raises(ValueError):
        tq.DotGeometry(coulomb_k=-0.5)


def test_parallel_couplings():
    g = tq.DotGeometry(kind=tq.PARALLEL, a=1.0, b=2.0, d1=3.0, coulomb_k=2.0)
    cc = tq.coulomb_couplings(g)
    assert abs(cc.ec11 - 2.0 / 3.0) < 1e-15
    assert cc.ec11 == cc.ec22
    far = 2.0 / np.hypot(3.0, 3.0)
    assert abs(cc.ec12 - far) < 1e-15 and cc.ec12 == cc.ec21


def test_collinear_couplings():
    g = tq.DotGeometry(kind=tq.COLLINEAR, a=0.5, b=0.5, d=2.0, coulomb_k=1.0)
    cc = tq.coulomb_couplings(g)
    assert abs(cc.ec21 - 1.0 / 2.0) < 1e-15
    assert abs(cc.ec11 - 1.0 / 3.0) < 1e-15
    assert abs(cc.ec22 - 1.0 / 3.0) < 1e-15
    assert abs(cc.ec12 - 1.0 / 4.0) < 1e-15
    # ordering by separation: nearest pair strongest
    assert cc.ec21 > cc.ec11 > cc.ec12


def test_perpendicular_couplings_decrease_with_distance():
    g1 = tq.DotGeometry(kind=tq.PERPENDICULAR, a=1.0, b=1.0, d1=1.0, d2=1.0)
    g2 = tq.DotGeometry(kind=tq.PERPENDICULAR, a=1.0, b=1.0, d1=1.0, d2=10.0)
    c1, c2 = tq.coulomb_couplings(g1), tq.coulomb_couplings(g2)
    for name in ("ec11", "ec22", "ec12", "ec21"):
        assert getattr(c2, name) < getattr(c1, name)


def test_build_h4_structure():
    cc = tq.CoulombCouplings(ec11=1.0, ec22=2.0, ec12=3.0, ec21=4.0)
    p = tq.SwapParams(vs=0.5, t_u=0.2, t_l=0.3, couplings=cc)
    h = tq.build_h4(p)
    assert np.allclose(np.diag(h).real, [3.0, 5.0, 4.0, 2.0])
    assert h[0, 1] == 0.3 and h[2, 3] == 0.3
    assert h[0, 2] == 0.2 and h[1, 3] == 0.2
    assert h[0, 3] == 0.0 and h[1, 2] == 0.0
    assert np.max(np.abs(h - h.conj().T)) == 0.0


def test_build_h4_asymmetric_site_energies():
    p = tq.SwapParams(vs=0.0, t_u=0.1, t_l=0.1)
    h = tq.build_h4(p, asymmetric_site_energies=(1.0, 2.0, 3.0, 4.0))
    # index 0 = |0,1>_U |0,1>_L occupies nodes 2 and 2'
    assert h[0, 0].real == 2.0 + 4.0
    assert h[3, 3].real == 1.0 + 3.0


def test_symmetric_eigensystem_vs_numeric():
    for _ in range(200):
        ec1s, ec2s = rng.uniform(0, 5, size=2)
        ts = rng.uniform(0.01, 2.0)
        vs = rng.uniform(-2, 2)
        eig = tq.swap_eigensystem_symmetric(ec1s, ec2s, ts, vs)
        cc = tq.CoulombCouplings(ec11=ec1s, ec22=ec1s, ec12=ec2s, ec21=ec2s)
        h = tq.build_h4(tq.SwapParams(vs=vs, t_u=ts, t_l=ts, couplings=cc))
        numeric, _ = eig_hermitian(h)
        assert np.max(np.abs(eig.sorted_energies - numeric)) < 1e-10
        for vec, e in zip(eig.vectors, eig.energies):
            assert np.max(np.abs(h @ vec - e * vec)) < 1e-9
            assert abs(np.linalg.norm(vec) - 1.0) < 1e-12


def test_entangled_vectors_parameter_free():
    eig = tq.swap_eigensystem_symmetric(1.3, 0.4, 0.7, -0.2)
    r = 1.0 / np.sqrt(2.0)
    assert np.allclose(eig.vectors[0], [-r, 0, 0, r])
    assert np.allclose(eig.vectors[1], [0, -r, r, 0])
    for k in (0, 1):
        fact, two_tau = tq.is_factorizable(eig.vectors[k])
        assert not fact
        assert abs(two_tau - 1.0) < 1e-12


def test_is_factorizable_product_state():
    a = np.array([0.6, 0.8])
    b = np.array([1.0, 1.0]) / np.sqrt(2)
    fact, two_tau = tq.is_factorizable(np.kron(a, b))
    assert fact and two_tau < 1e-12


def test_evolve4_constant_matches_rk4():
    cc = tq.CoulombCouplings(ec11=1.0, ec22=1.0, ec12=0.3, ec21=0.3)
    p = tq.SwapParams(vs=0.2, t_u=0.5, t_l=0.5, couplings=cc)
    h = tq.build_h4(p)
    psi0 = StateVector(np.array([0.0, 1.0, 0.0, 0.0], dtype=complex))
    exact = tq.evolve4(h, psi0, 0.0, 3.0)
    stepped = tq.evolve4(lambda t: h, psi0, 0.0, 3.0, dt=1e-3)
    assert np.max(np.abs(exact.amps - stepped.amps)) < 1e-9
    assert abs(np.linalg.norm(exact.amps) - 1.0) < 1e-12


def test_swap_exchange_dynamics():
    # resonant symmetric structure exchanges |0,1>|1,0> and |1,0>|0,1>
    cc = tq.CoulombCouplings(ec11=1.0, ec22=1.0, ec12=1.0, ec21=1.0)
    p = tq.SwapParams(vs=0.0, t_u=0.4, t_l=0.4, couplings=cc)
    h = tq.build_h4(p)
    psi0 = StateVector(np.array([0.0, 1.0, 0.0, 0.0], dtype=complex))
    eig = tq.swap_eigensystem_symmetric(1.0, 1.0, 0.4, 0.0)
    # full transfer |0,1>|1,0> -> |1,0>|0,1> at t = pi / (2 ts), one
    # period of the E4-E3 splitting
    gap = eig.energies[3] - eig.energies[2]
    t_swap = 2.0 * np.pi / gap
    psi = tq.evolve4(h, psi0, 0.0, t_swap)
    probs = np.abs(psi.amps) ** 2
    assert probs[2] > 0.999
    assert probs[1] < 1e-3


def test_swap_occupancies_sum_rules():
    for _ in range(50):
        amps = rng.normal(size=4) + 1j * rng.normal(size=4)
        amps /= np.linalg.norm(amps)
        p1, p2, p1p, p2p = tq.swap_occupancies(amps)
        assert abs(p1 + p2 - 1.0) < 1e-12
        assert abs(p1p + p2p - 1.0) < 1e-12


def test_cnot_meanfield_h2_values():
    g = tq.DotGeometry(kind=tq.COLLINEAR, a=0.5, b=0.5, d1=1.0, d2=1.0, d3=2.0, coulomb_k=1.0)
    h = tq.cnot_meanfield_h2(g, (0.0, 1.0, 0.0, 0.0), vs2=0.3, t2=0.1)
    # p2 = 1 contributes k/d3 to node 1 and k/(d3+span) to node 2
    assert abs(h[0, 0].real - (0.3 + 1.0 / 2.0)) < 1e-12
    assert abs(h[1, 1].real - (0.3 + 1.0 / 3.0)) < 1e-12
    assert h[0, 1] == 0.1
    # control in the other node biases the target the other way
    h2 = tq.cnot_meanfield_h2(g, (1.0, 0.0, 0.0, 0.0), vs2=0.3, t2=0.1)
    assert h2[0, 0].real < h[0, 0].real


def test_cnot_meanfield_occupancy_guard():
    g = tq.DotGeometry(kind=tq.COLLINEAR, coulomb_k=1.0)
    with pytest.raises(OccupancyNotNormalizedError):
        tq.cnot_meanfield_h2(g, (0.4, 0.3, 0.0, 0.0), 0.0, 0.1)
    with pytest.raises(OccupancyNotNormalizedError):
        tq.cnot_meanfield_h2(g, (-0.1, 1.1, 0.5, 0.5), 0.0, 0.1)
    # absent primed pair (sum 0) is allowed
    tq.cnot_meanfield_h2(g, (0.4, 0.6, 0.0, 0.0), 0.0, 0.1)


def test_cnot_coupled_run_norms_conserved():
    g = tq.DotGeometry(
        kind=tq.COLLINEAR, a=0.5, b=0.5, d=2.0, d1=1.0, d2=1.0, d3=2.0, coulomb_k=0.5
    )
    cc = tq.coulomb_couplings(g)
    p = tq.SwapParams(vs=0.1, t_u=0.3, t_l=0.3, couplings=cc)
    run = tq.cnot_coupled_run(
        p,
        np.array([0.0, 1.0, 0.0, 0.0], dtype=complex),
        0.2,
        0.15,
        np.array([1.0, 0.0], dtype=complex),
        g,
        0.0,
        2.0,
        1e-2,
    )
    assert run.t.shape[0] == run.control.shape[0] == run.target.shape[0]
    assert abs(np.linalg.norm(run.control[-1]) - 1.0) < 1e-12
    assert abs(np.linalg.norm(run.target[-1]) - 1.0) < 1e-12
    # occupancies stay normalized along the way
    assert np.max(np.abs(run.occupancies[:, 0] + run.occupancies[:, 1] - 1.0)) < 1e-12


def test_cnot_control_state_conditions_target():
    # the target phase accumulates differently for the two control states
    g = tq.DotGeometry(
        kind=tq.COLLINEAR, a=0.5, b=0.5, d=2.0, d1=1.0, d2=1.0, d3=2.0, coulomb_k=1.0
    )
    cc = tq.coulomb_couplings(g)
    p = tq.SwapParams(vs=0.0, t_u=1e-6, t_l=1e-6, couplings=cc)
    target0 = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2)
    runs = []
    for control0 in (np.array([0, 1, 0, 0]), np.array([0, 0, 1, 0])):
        runs.append(
            tq.cnot_coupled_run(
                p, control0.astype(complex), 0.0, 0.0, target0, g, 0.0, 10.0, 1e-2
            )
        )
    phase_diff = np.angle(runs[0].target[-1][0] / runs[0].target[-1][1]) - np.angle(
        runs[1].target[-1][0] / runs[1].target[-1][1]
    )
    assert abs(phase_diff) > 0.05


def test_oracle_check_symmetric_close():
    assert tq.oracle_check_symmetric(1.2, 0.7, 0.5, 0.3) < 1e-10
