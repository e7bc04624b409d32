"""Dense construction, spectra, exact elimination and the exchange relation."""

from __future__ import annotations

import random

import numpy as np
import pytest

from circdet import (
    DomainMismatch,
    GaussInt,
    bareiss_det,
    binomial_row,
    dense_matrix,
    det,
    det_spectral,
    eigenvalues,
    exchange_sign,
    product_in_order,
    unit_roots,
)
from oracles import laplace_det

I = GaussInt(0, 1)


def g(re, im=0):
    return GaussInt(re, im)


def test_dense_right_matches_worked_example():
    row = binomial_row(5, I)
    m = dense_matrix(row, "right")
    assert row == [g(1), g(0, 4), g(-6), g(0, -4), g(1)]
    assert m[1] == [g(1), g(1), g(0, 4), g(-6), g(0, -4)]
    assert m[2] == [g(0, -4), g(1), g(1), g(0, 4), g(-6)]
    assert m[4] == [g(0, 4), g(-6), g(0, -4), g(1), g(1)]


def test_dense_left_matches_definition():
    # The left matrix is reconstructed from the index rule (r, c) -> a[(c+r) % n].
    row = binomial_row(5, I)
    m = dense_matrix(row, "left")
    assert m[0] == row
    assert m[1] == [g(0, 4), g(-6), g(0, -4), g(1), g(1)]
    assert m[4] == [g(1), g(1), g(0, 4), g(-6), g(0, -4)]


def test_dense_trivial_shapes():
    assert dense_matrix([g(7)], "right") == [[g(7)]]
    assert dense_matrix([0, 1, 2], "left") == [[0, 1, 2], [1, 2, 0], [2, 0, 1]]
    with pytest.raises(ValueError):
        dense_matrix([], "right")
    with pytest.raises(ValueError):
        dense_matrix([1, 2], "diagonal")


def test_eigenvalues_identity_row():
    lam = eigenvalues([1, 0, 0, 0])
    assert np.array_equal(lam, np.ones(4, dtype=complex))


def test_eigenvalues_shift_row_are_exact_roots():
    lam = eigenvalues([0, 1, 0, 0])
    assert list(lam) == [1 + 0j, 1j, -1 + 0j, -1j]


def test_eigenvalues_of_family_row():
    lam = eigenvalues(binomial_row(5, I))
    assert lam[0] == pytest.approx(-4 + 0j, rel=1e-12, abs=1e-12)


def test_eigenvalues_reject_non_finite():
    with pytest.raises(ValueError):
        eigenvalues([1.0, float("inf")])


def test_dc_eigenvalue_is_plain_row_sum():
    rng = random.Random(7)
    for n in (2, 5, 9, 16):
        row = [complex(rng.uniform(-9, 9), rng.uniform(-9, 9)) for _ in range(n)]
        lam0 = eigenvalues(row)[0]
        plain = sum(row, start=0j)
        assert abs(lam0 - plain) <= 1e-12 * max(1.0, abs(plain))


def test_det_spectral_examples():
    assert det_spectral([1, 0, 0]) == 1
    assert det_spectral([1, 1]) == 0  # lambda_1 = 1 + e^(pi i) = 0, exactly
    assert det_spectral(binomial_row(5, I)) == pytest.approx(-4 + 0j, rel=1e-12)


def test_det_spectral_zero_row_is_exact_zero():
    for n in (1, 2, 3, 5, 8):
        assert det_spectral([0.0] * n) == 0


def test_det_spectral_matches_lapack_oracle():
    rng = random.Random(11)
    for n in (2, 3, 5, 8, 12):
        row = [complex(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(n)]
        ours = det_spectral(row)
        ref = complex(np.linalg.det(np.asarray(dense_matrix(row), dtype=complex)))
        assert abs(ours - ref) <= 1e-8 * max(1.0, abs(ref))


def test_product_in_order_survives_transient_overflow():
    vals = [1e300 + 0j, 1e300 + 0j, 1e-300 + 0j, 1e-300 + 0j, 2 + 0j]
    assert product_in_order(vals) == pytest.approx(2 + 0j, rel=1e-12)


def test_product_in_order_overflow_raises():
    with pytest.raises(OverflowError):
        product_in_order([1e300 + 0j, 1e300 + 0j])


def test_product_in_order_zero_short_circuits():
    assert product_in_order([1e300 + 0j, 0j, 1e300 + 0j]) == 0


def test_bareiss_trivial_and_2x2():
    assert bareiss_det([[g(7, -3)]]) == g(7, -3)
    assert bareiss_det([[g(1), g(0, 2)], [g(3), g(0, -1)]]) == g(0, -7)


def test_bareiss_against_cofactor_oracle():
    rng = random.Random(3)
    for n in range(1, 7):
        for _ in range(6):
            m = [[g(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)]
                 for _ in range(n)]
            assert bareiss_det(m) == laplace_det(m)


def test_bareiss_zero_pivot_row_swap():
    m = [[g(0), g(1)], [g(1), g(0)]]
    assert bareiss_det(m) == g(-1)
    m = [[g(0), g(2), g(1)], [g(0, 1), g(0), g(0)], [g(1), g(1), g(1)]]
    assert bareiss_det(m) == laplace_det(m)


def test_bareiss_zero_column_short_circuits():
    m = [[g(0), g(1), g(2)], [g(0), g(3), g(4)], [g(0), g(5), g(6)]]
    assert bareiss_det(m) == g(0)


def test_bareiss_singular_family_row():
    row = binomial_row(6, GaussInt(-1, 0))
    assert bareiss_det(dense_matrix(row)) == g(0)


def test_bareiss_rejects_floats():
    with pytest.raises(DomainMismatch):
        bareiss_det([[1.0, 0.0], [0.0, 1.0]])


def test_bareiss_rejects_non_square():
    with pytest.raises(ValueError):
        bareiss_det([[g(1), g(2)]])


def test_bareiss_real_and_gaussian_paths_agree():
    rng = random.Random(5)
    for n in (3, 5, 8):
        m_int = [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
        m_gauss = [[g(v) for v in row] for row in m_int]
        assert bareiss_det(m_int) == bareiss_det(m_gauss)


def test_exchange_sign_values():
    assert [exchange_sign(n) for n in range(1, 9)] == [1, 1, -1, -1, 1, 1, -1, -1]
    with pytest.raises(ValueError):
        exchange_sign(0)


def test_exchange_relation_on_random_rows():
    rng = random.Random(13)
    for trial in range(40):
        n = 1 + trial % 12
        row = [g(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)]
        left = bareiss_det(dense_matrix(row, "left"))
        right = bareiss_det(dense_matrix(row, "right"))
        expected = right if exchange_sign(n) == 1 else -right
        assert left == expected


def test_rotation_smoke():
    # Rotating the first row by s and the row order back by s reproduces the
    # matrix, hence its determinant (an indexing smoke test).
    rng = random.Random(17)
    for trial in range(20):
        n = 2 + trial % 11
        row = [g(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)]
        s = rng.randrange(n)
        rotated = row[s:] + row[:s]
        derived = dense_matrix(rotated)
        derived = [derived[(i + s) % n] for i in range(n)]
        assert derived == dense_matrix(row)
        assert bareiss_det(derived) == bareiss_det(dense_matrix(row))


def test_spectral_exact_agreement_random_rows():
    rng = random.Random(19)
    for n in range(2, 17):
        for _ in range(3):
            row = [g(rng.randint(-5, 5), rng.randint(-5, 5)) for _ in range(n)]
            exact = bareiss_det(dense_matrix(row)).to_complex()
            spectral = det_spectral(row)
            assert abs(spectral - exact) <= 1e-8 * max(1.0, abs(exact))


def test_det_dispatcher():
    assert det([g(1), g(1), g(1)], "left", "exact") == g(0)
    assert det(binomial_row(3, 1), "right", "exact") == g(4)
    assert det(binomial_row(3, I), "left", "exact") == g(0, 2)
    left = det(binomial_row(5, I), "left", "spectral")
    right = det_spectral(binomial_row(5, I))
    assert left == exchange_sign(5) * right
    with pytest.raises(DomainMismatch):
        det([1.5, 2.5], "right", "exact")
    with pytest.raises(ValueError):
        det([g(1)], "right", "cofactor")


def test_unit_roots_quarter_values_are_exact():
    roots = unit_roots(8)
    assert roots[0] == 1
    assert roots[2] == 1j
    assert roots[4] == -1
    assert roots[6] == -1j
    assert abs(roots[1] - complex(2 ** -0.5, 2 ** -0.5)) < 1e-15
