import math

import numpy as np
import pytest

from kgsep.spectrum import (
    CriticalCouplingError,
    StateLabel,
    SystemConfig,
    binding_energy,
    bound_mass,
    compute_xi,
)
from kgsep.specfun import DomainError

from conftest import bisect_mass, grid_alphas


def test_compute_xi_examples():
    for l in range(4):
        assert compute_xi(l, 1e-9) == pytest.approx(l + 0.5, rel=1e-15)
        assert compute_xi(l, 0.0) == l + 0.5
    assert compute_xi(0, 0.5) == pytest.approx(math.sqrt(3) / 4, rel=1e-15)


@pytest.mark.parametrize("l, alpha", [(0, 1.0), (0, 1.5), (1, 3.0), (2, 7.0)])
def test_critical_coupling(l, alpha):
    with pytest.raises(CriticalCouplingError, match="critical coupling"):
        compute_xi(l, alpha)
    with pytest.raises(CriticalCouplingError):
        bound_mass(StateLabel(0, l), SystemConfig(alpha))


def test_config_validation():
    with pytest.raises(DomainError):
        SystemConfig(0.0)
    with pytest.raises(DomainError):
        SystemConfig(0.5, m=-1.0)
    with pytest.raises(DomainError):
        StateLabel(-1, 0)


@pytest.mark.parametrize(
    "n, l, alpha, big_n, mass, k",
    [
        (2, 0, 0.5, 2.9330127, 1.992774, 0.169857),
        (0, 0, 0.5, 0.9330127, 1.9318517, 0.5176381),  # bisection oracle values
    ],
)
def test_bound_mass_examples(n, l, alpha, big_n, mass, k):
    p = bound_mass(StateLabel(n, l), SystemConfig(alpha))
    assert p.bigN == pytest.approx(big_n, abs=1e-7)
    assert p.mass == pytest.approx(mass, abs=1e-6)
    assert p.k == pytest.approx(k, abs=1e-6)
    assert p.mass == pytest.approx(bisect_mass(n, l, alpha), rel=1e-12)
    assert p.lambda_ == pytest.approx(p.bigN, abs=1e-12)
    assert p.n1 == n + l + 1


def test_free_limit():
    for n, l in [(0, 0), (3, 2)]:
        p = bound_mass(StateLabel(n, l), SystemConfig(1e-7))
        assert p.mass == pytest.approx(2.0, rel=1e-13)
        assert binding_energy(p, SystemConfig(1e-7)) == pytest.approx(1e-14 / (4 * p.bigN**2), rel=1e-6)


def test_binding_energy_example():
    cfg = SystemConfig(0.5)
    p = bound_mass(StateLabel(0, 0), cfg)
    assert binding_energy(p, cfg) == pytest.approx(2 - bisect_mass(0, 0, 0.5), rel=1e-9)
    assert binding_energy(p, cfg) == pytest.approx(0.0681483474, abs=1e-9)


def test_binding_energy_series():
    # 2m - M = m alpha^2 / (4 N^2) (1 - 3 alpha^2 / (16 N^2) + ...)
    alpha = 0.01
    for n, l in [(0, 0), (2, 1), (4, 3)]:
        cfg = SystemConfig(alpha)
        p = bound_mass(StateLabel(n, l), cfg)
        x = alpha**2 / (4 * p.bigN**2)
        assert binding_energy(p, cfg) == pytest.approx(x * (1 - 0.75 * x), rel=1e-8)


@pytest.mark.parametrize("m", [0.5, 1.0, 2.0])
def test_quantization_and_bisection(m):
    for n in range(7):
        for l in range(4):
            for alpha in grid_alphas(l):
                cfg = SystemConfig(alpha, m)
                p = bound_mass(StateLabel(n, l), cfg)
                assert 0 < p.mass < 2 * m and p.k > 0 and p.xi > 0
                assert abs(p.lambda_ - p.bigN) < 1e-10
                assert p.mass == pytest.approx(bisect_mass(n, l, alpha, m), rel=1e-10)


def test_k_equivalence():
    eps = np.finfo(float).eps
    for n in range(7):
        for l in range(4):
            for alpha in grid_alphas(l, start=0.05):
                p = bound_mass(StateLabel(n, l), SystemConfig(alpha))
                naive = math.sqrt((2 - p.mass) * (2 + p.mass))
                # one ulp of M is amplified by 4m^2 / k^2 in the difference form
                assert abs(naive / p.k - 1) <= 1e-12 + 8 * eps * 4 / p.k**2


def test_monotonic_in_n():
    for l in range(4):
        for alpha in grid_alphas(l, step=0.2):
            cfg = SystemConfig(alpha)
            params = [bound_mass(StateLabel(n, l), cfg) for n in range(8)]
            masses = [p.mass for p in params]
            energies = [binding_energy(p, cfg) for p in params]
            assert all(b > a for a, b in zip(masses, masses[1:]))
            assert all(b < a for a, b in zip(energies, energies[1:]))


def test_nonrelativistic_limit():
    alpha = 1e-3
    for n in range(7):
        for l in range(4):
            cfg = SystemConfig(alpha)
            p = bound_mass(StateLabel(n, l), cfg)
            ref = alpha**2 / (4 * p.bigN**2)
            assert abs(binding_energy(p, cfg) - ref) / ref < 1e-5
            assert p.bigN == pytest.approx(p.n1, abs=1e-6)
