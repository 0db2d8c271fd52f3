"""Seidel matrix, Jacobi eigensolver, and exact charpoly oracle tests."""

import math

import numpy as np
import pytest

from seidelkit import (ConvergenceError, IntPolynomial, adjacency_matrix,
                       add_loops, charpoly_exact, classify_inertia,
                       complement, complete_graph, cycle_graph, empty_graph,
                       integer_root_multiplicity, path_graph, seidel_energy,
                       seidel_inertia, seidel_matrix, seidel_spectrum,
                       spectrum_from_values, sym_eigenvalues)
from conftest import eigvalsh_desc, poly_mul, random_simple_graph


# -- matrices ------------------------------------------------------------------

def test_adjacency_matrix_basics():
    assert np.array_equal(adjacency_matrix(complete_graph(2)),
                          np.array([[0, 1], [1, 0]]))
    assert not adjacency_matrix(empty_graph(4)).any()
    # loop-completed complete graph -> all-ones matrix
    assert np.array_equal(adjacency_matrix(add_loops(complete_graph(3))),
                          np.ones((3, 3), dtype=np.int64))


def test_seidel_matrix_identity():
    rng = np.random.default_rng(3)
    for _ in range(20):
        g = random_simple_graph(rng, int(rng.integers(1, 12)))
        n = g.n
        expected = (np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64)
                    - 2 * adjacency_matrix(g))
        s = seidel_matrix(g)
        assert np.array_equal(s, expected)
        assert not s.diagonal().any()
        off = s[~np.eye(n, dtype=bool)]
        assert np.isin(off, (-1, 1)).all()


def test_seidel_matrix_of_complete_graph():
    for n in (2, 3, 6):
        expected = np.eye(n, dtype=np.int64) - np.ones((n, n), dtype=np.int64)
        assert np.array_equal(seidel_matrix(complete_graph(n)), expected)
        # empty graph: no adjacencies at all
        assert np.array_equal(seidel_matrix(empty_graph(n)), -expected)


def test_seidel_matrix_negates_under_complement():
    rng = np.random.default_rng(17)
    for _ in range(15):
        g = random_simple_graph(rng, int(rng.integers(2, 12)))
        assert np.array_equal(seidel_matrix(complement(g)), -seidel_matrix(g))


def test_seidel_matrix_rejects_loops():
    with pytest.raises(ValueError):
        seidel_matrix(add_loops(empty_graph(2)))


# -- eigensolver ----------------------------------------------------------------

def test_eigenvalues_of_identity():
    spec = sym_eigenvalues(np.eye(6))
    assert np.allclose(spec.values, np.ones(6), atol=1e-12)
    assert spec.groups == ((1.0, 6),)


def test_eigenvalues_match_lapack_oracle():
    rng = np.random.default_rng(99)
    for _ in range(40):
        n = int(rng.integers(1, 26))
        a = rng.integers(-3, 4, size=(n, n))
        a = a + a.T
        ours = sym_eigenvalues(a).values
        assert np.allclose(ours, eigvalsh_desc(a), atol=1e-9)
    # float input
    a = rng.standard_normal((12, 12))
    a = a + a.T
    assert np.allclose(sym_eigenvalues(a).values, eigvalsh_desc(a), atol=1e-9)


def test_eigenvalues_deterministic():
    rng = np.random.default_rng(1234)
    a = rng.integers(-5, 6, size=(15, 15))
    a = a + a.T
    first = sym_eigenvalues(a).values
    second = sym_eigenvalues(a).values
    assert first == second  # bit-for-bit


def test_eigenvalues_input_validation():
    with pytest.raises(ValueError):
        sym_eigenvalues(np.array([[1, 2], [0, 1]]))
    with pytest.raises(ValueError):
        sym_eigenvalues(np.zeros((2, 3)))


def test_convergence_failure_is_reported():
    a = np.array([[0.0, 1.0], [1.0, 0.0]])
    with pytest.raises(ConvergenceError):
        sym_eigenvalues(a, max_sweeps=0)


def test_spectrum_trace_and_frobenius_invariants():
    rng = np.random.default_rng(2024)
    for _ in range(30):
        n = int(rng.integers(1, 16))
        g = random_simple_graph(rng, n)
        spec = seidel_spectrum(g)
        assert spec.n == n
        assert abs(spec.total()) <= 1e-9 * max(n, 1)
        sq = math.fsum(v * v for v in spec.values)
        assert abs(sq - n * (n - 1)) <= 1e-8 * n * n


# -- spectra of named graphs -----------------------------------------------------

def test_seidel_spectrum_complete_graphs():
    # {1^(n-1), 1-n}
    for n in (3, 4, 7):
        spec = seidel_spectrum(complete_graph(n))
        expected = [1.0] * (n - 1) + [1.0 - n]
        assert np.allclose(spec.values, expected, atol=1e-9)
    assert seidel_spectrum(complete_graph(4)).format_grouped() == "{1^3, -3^1}"


def test_seidel_spectrum_small_graphs():
    assert np.allclose(seidel_spectrum(empty_graph(1)).values, [0.0], atol=1e-12)
    # P_3: charpoly x^3 - 3x - 2 = (x+1)^2 (x-2)
    assert np.allclose(seidel_spectrum(path_graph(3)).values, [2, -1, -1],
                       atol=1e-9)
    assert np.allclose(seidel_spectrum(complete_graph(3)).values, [1, 1, -2],
                       atol=1e-9)


def test_seidel_spectrum_c5():
    r5 = math.sqrt(5)
    spec = seidel_spectrum(cycle_graph(5))
    assert np.allclose(spec.values, [r5, r5, 0.0, -r5, -r5], atol=1e-9)


def test_seidel_energy_values():
    for n in (2, 3, 4, 9):
        assert abs(seidel_energy(complete_graph(n)) - (2 * n - 2)) <= 1e-9
    assert abs(seidel_energy(path_graph(3)) - 4.0) <= 1e-9
    assert abs(seidel_energy(complete_graph(3)) - 4.0) <= 1e-9
    assert abs(seidel_energy(cycle_graph(5)) - 4 * math.sqrt(5)) <= 1e-9


def test_seidel_energy_invariant_under_complement():
    rng = np.random.default_rng(31)
    for _ in range(20):
        g = random_simple_graph(rng, int(rng.integers(2, 14)))
        assert abs(seidel_energy(g) - seidel_energy(complement(g))) <= 1e-8


def test_spectrum_negates_under_complement():
    rng = np.random.default_rng(37)
    for _ in range(15):
        g = random_simple_graph(rng, int(rng.integers(2, 12)))
        ours = np.array(seidel_spectrum(g).values)
        comp = np.array(seidel_spectrum(complement(g)).values)
        assert np.allclose(comp, -ours[::-1], atol=1e-9)


# -- inertia ----------------------------------------------------------------------

def test_inertia_cases():
    assert seidel_inertia(complete_graph(2)) == classify_inertia([1.0, -1.0])
    i2 = seidel_inertia(complete_graph(2))
    assert (i2.n_pos, i2.n_zero, i2.n_neg) == (1, 0, 1)
    assert i2.balanced
    i3 = seidel_inertia(complete_graph(3))
    assert (i3.n_pos, i3.n_zero, i3.n_neg) == (2, 0, 1)
    assert not i3.balanced
    i5 = seidel_inertia(cycle_graph(5))
    assert (i5.n_pos, i5.n_zero, i5.n_neg) == (2, 1, 2)
    assert not i5.balanced  # zero eigenvalue spoils balance


def test_inertia_zero_tolerance():
    values = [1.0, 5e-8, -5e-8, -1.0]
    inertia = classify_inertia(values, zero_tol=1e-7)
    assert (inertia.n_pos, inertia.n_zero, inertia.n_neg) == (1, 2, 1)


# -- grouping and formatting --------------------------------------------------------

def test_grouping_and_ambiguity_flag():
    spec = spectrum_from_values([1.0, 1.0 + 1e-12, -3.0])
    assert spec.groups == ((pytest.approx(1.0), 2), (-3.0, 1))
    assert not spec.grouping_ambiguous
    close = spectrum_from_values([5e-8, 0.0], group_tol=1e-8)
    assert len(close.groups) == 2
    assert close.grouping_ambiguous
    assert "near-degenerate" in close.format_grouped()


def test_format_non_integer_values():
    text = spectrum_from_values([math.sqrt(5), -math.sqrt(5)]).format_grouped()
    assert text == "{2.2360679775^1, -2.2360679775^1}"


# -- exact characteristic polynomial -------------------------------------------------

def test_charpoly_p3():
    p = charpoly_exact(seidel_matrix(path_graph(3)))
    assert p.coefficients == (1, 0, -3, -2)
    assert p.format_text() == "x^3 - 3x - 2"


def test_charpoly_zero_matrix():
    p = charpoly_exact(np.zeros((2, 2), dtype=int))
    assert p.coefficients == (1, 0, 0)


def test_charpoly_complete_graphs_against_product_oracle():
    # (x - 1)^(n-1) (x - (1 - n)) expanded by exact polynomial multiplication
    for n in range(2, 13):
        expected = [1]
        for _ in range(n - 1):
            expected = poly_mul(expected, [1, -1])
        expected = poly_mul(expected, [1, -(1 - n)])
        p = charpoly_exact(seidel_matrix(complete_graph(n)))
        assert p.to_list() == expected


def test_charpoly_rejects_non_integer_input():
    with pytest.raises(ValueError):
        charpoly_exact(np.eye(3))  # float dtype


def test_charpoly_constant_term_is_signed_determinant():
    rng = np.random.default_rng(55)
    for _ in range(10):
        n = int(rng.integers(1, 7))
        a = rng.integers(-3, 4, size=(n, n))
        a = a + a.T
        p = charpoly_exact(a)
        det = round(float(np.linalg.det(a)))
        assert p.coefficients[-1] == (-1) ** n * det


def test_integer_root_multiplicity_cases():
    p = IntPolynomial((1, 0, -3, -2))  # (x+1)^2 (x-2)
    assert integer_root_multiplicity(p, -1) == 2
    assert integer_root_multiplicity(p, 2) == 1
    assert integer_root_multiplicity(p, 3) == 0
    assert integer_root_multiplicity(IntPolynomial((1, 0, 0)), 0) == 2
    for n in (2, 5, 9):
        p = charpoly_exact(seidel_matrix(complete_graph(n)))
        assert integer_root_multiplicity(p, 1) == n - 1
        assert integer_root_multiplicity(p, 1 - n) == 1


def test_polynomial_evaluation_and_derivative():
    p = IntPolynomial((1, 0, -3, -2))
    assert p(2) == 0 and p(-1) == 0 and p(0) == -2
    assert p.derivative_at(2) == 3 * 4 - 3


def test_numeric_eigenvalues_satisfy_exact_charpoly():
    # residues |p(sigma)| bounded by eigenvalue error times a derivative
    # bound on the surrounding interval
    rng = np.random.default_rng(77)
    for _ in range(20):
        n = int(rng.integers(2, 9))
        g = random_simple_graph(rng, n)
        p = charpoly_exact(seidel_matrix(g))
        spec = seidel_spectrum(g)
        for sigma in spec.values:
            radius = abs(sigma) + 1.0
            slope_bound = sum(
                (p.degree - k) * abs(c) * radius ** (p.degree - k - 1)
                for k, c in enumerate(p.coefficients[:-1]))
            assert abs(p(sigma)) <= 1e-8 * max(1.0, slope_bound)
        # integer-eigenvalue multiplicities from clustering match the oracle
        for value, mult in spec.groups:
            if abs(value - round(value)) < 1e-6:
                assert mult == integer_root_multiplicity(p, round(value))
