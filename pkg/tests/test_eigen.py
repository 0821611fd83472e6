import numpy as np
import pytest

from cfckit.eigen import (
    NotSelfadjoint,
    cluster_eigenvalues,
    cluster_with_labels,
    hermitian_eigen,
    normal_spectral_decomposition,
)
from cfckit.matrix_core import NotNormal, adjoint, fro_norm
from cfckit.sampling import random_normal_matrix, random_unitary, rng_from_seed
from cfckit.scalars import ScalarRing


def test_hermitian_diagonal():
    dec = hermitian_eigen(np.diag([5.0, 2.0]))
    assert np.allclose(dec.lam, [2.0, 5.0])
    assert np.allclose(np.abs(dec.u), np.array([[0, 1], [1, 0]]))


def test_hermitian_hand_examples():
    # char. poly (2 - x)^2 - 1 => {1, 3}
    dec = hermitian_eigen(np.array([[2.0, 1.0], [1.0, 2.0]]))
    assert np.allclose(dec.lam, [1.0, 3.0])
    # char. poly x^2 - 1 => {-1, 1}
    dec = hermitian_eigen(np.array([[0, -1j], [1j, 0]]))
    assert np.allclose(dec.lam, [-1.0, 1.0])


def test_hermitian_rejects_non_selfadjoint():
    with pytest.raises(NotSelfadjoint):
        hermitian_eigen(np.array([[0, 1], [0, 0]], dtype=complex))


def test_normal_diagonal_and_rotation():
    dec = normal_spectral_decomposition(np.diag([1 + 1j, 2 + 0j]))
    assert sorted(dec.lam, key=lambda z: z.real) == pytest.approx([1 + 1j, 2 + 0j])
    # rotation matrix, char. poly x^2 + 1 => {i, -i}
    dec = normal_spectral_decomposition(np.array([[0.0, -1.0], [1.0, 0.0]]))
    assert np.allclose(sorted(dec.lam, key=lambda z: z.imag), [-1j, 1j])


def test_normal_rejects_non_normal():
    with pytest.raises(NotNormal):
        normal_spectral_decomposition(np.array([[0, 1], [0, 0]], dtype=complex))


def test_normal_round_trip_random(rng):
    gen = rng_from_seed(21)
    for n in (1, 2, 5, 8, 16):
        lam = gen.uniform(-1, 1, n) + 1j * gen.uniform(-1, 1, n)
        u = random_unitary(gen, n)
        a = (u * lam) @ adjoint(u)
        dec = normal_spectral_decomposition(a)
        # eigenvalue multiset recovered
        assert np.allclose(
            sorted(dec.lam, key=lambda z: (z.real, z.imag)),
            sorted(lam, key=lambda z: (z.real, z.imag)),
            atol=1e-10,
        )
        # reconstruction and unitarity invariants
        assert fro_norm(a - dec.reconstruct()) <= 1e-10 * max(fro_norm(a), 1.0)
        assert fro_norm(adjoint(dec.u) @ dec.u - np.eye(n)) <= 1e-12 * n


def test_normal_handles_repeated_real_parts():
    # distinct eigenvalues sharing a real part force the two-stage split
    lam = np.array([1 + 1j, 1 - 1j, 2.0 + 0j])
    gen = rng_from_seed(5)
    u = random_unitary(gen, 3)
    a = (u * lam) @ adjoint(u)
    dec = normal_spectral_decomposition(a)
    assert fro_norm(a - dec.reconstruct()) <= 1e-10 * fro_norm(a)


def test_selfadjoint_spectrum_is_real(rng):
    gen = rng_from_seed(9)
    for _ in range(10):
        a = random_normal_matrix(gen, 6, ScalarRing.REAL)
        dec = normal_spectral_decomposition(a)
        assert np.max(np.abs(dec.lam.imag)) <= 1e-12 * max(fro_norm(a), 1.0)


def test_eigenvalues_invariant_under_unitary_conjugation():
    gen = rng_from_seed(13)
    a = random_normal_matrix(gen, 6, ScalarRing.COMPLEX)
    v = random_unitary(gen, 6)
    lam1 = np.sort_complex(normal_spectral_decomposition(a).lam)
    lam2 = np.sort_complex(normal_spectral_decomposition(v @ a @ adjoint(v)).lam)
    assert np.allclose(lam1, lam2, atol=1e-10)


def test_one_by_one_short_circuit():
    dec = normal_spectral_decomposition(np.array([[3 - 2j]]))
    assert dec.lam[0] == 3 - 2j
    assert dec.residual == 0.0


def test_cluster_examples():
    spec = cluster_eigenvalues([1.0, 1.0 + 1e-14, 2.0], 1e-9)
    assert spec.points == pytest.approx((1.0, 2.0))
    assert spec.multiplicities == (2, 1)

    spec = cluster_eigenvalues([3.0], 1.0)
    assert spec.points == ((3 + 0j),)
    assert spec.multiplicities == (1,)

    spec = cluster_eigenvalues([0.0, 1.0, 2.0], 1e-9)
    assert spec.size == 3


def test_cluster_is_nonempty_for_any_matrix():
    gen = rng_from_seed(17)
    for n in range(1, 9):
        a = random_normal_matrix(gen, n, ScalarRing.COMPLEX)
        dec = normal_spectral_decomposition(a)
        spec = cluster_eigenvalues(dec.lam, 1e-8)
        assert spec.size >= 1
        assert sum(spec.multiplicities) == n


def test_cluster_labels_map_members_to_representatives():
    lam = [2.0, 1.0, 1.0 + 1e-12]
    spec, labels = cluster_with_labels(lam, 1e-9)
    assert spec.points[labels[0]] == pytest.approx(2.0)
    assert labels[1] == labels[2]
