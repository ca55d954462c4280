from fractions import Fraction

import pytest

from toric_implicit.core.embed import build_embedding
from toric_implicit.core.errors import DegenerateSupport
from toric_implicit.core.geometry import LatticePolygon
from toric_implicit.core.linalg import FieldSpec, linear_combination, rank
from toric_implicit.core.poly import BivariatePolynomial, Parametrization, parse_polynomial
from toric_implicit.core.syzygy import (
    curve_matrix,
    default_nu,
    grading_comparison,
    substitution_residual,
    syzygy_matrix,
    syzygy_system,
    verify_syzygies,
)
from toric_implicit.loaders.fixture_loader import FixtureLoader

BILINEAR = ["1", "s", "t", "s*t+1"]


def test_system_layout(example4_map):
    system = syzygy_system(example4_map, 2)
    assert system.matrix.shape == (34, 68)
    assert len(system.source) == 17
    assert system.column_of(1, system.source[3]) == 17 + 3
    # entry (q, (i, p)) is the coefficient of g_i at q - p
    p = system.source[0]
    q = system.target.index((p[0] + 1, p[1] + 6))
    assert system.matrix.entry(q, system.column_of(0, p)) == 1


def test_example4_matrix_shape(example4_matrix):
    assert example4_matrix.shape == (17, 34)
    assert example4_matrix.nvars == 4
    assert not example4_matrix.probabilistic


def test_every_column_is_a_syzygy(example4_matrix, example4_map):
    assert verify_syzygies(example4_matrix, example4_map) == []


def test_substitution_identity(example4_matrix, example4_map):
    assert all(v == 0 for v in substitution_residual(example4_matrix, example4_map, 2, Fraction(-1, 3)))


def test_default_nu_follows_alpha():
    triangle = Parametrization.from_strings(["1", "s", "t", "s+t+1"])
    g = build_embedding(triangle, LatticePolygon(vertices=[(0, 0), (1, 0), (0, 1)]), 1)
    assert default_nu(g) == 0
    square = Parametrization.from_strings(BILINEAR)
    assert default_nu(build_embedding(square, LatticePolygon.rectangle(1, 1), 1)) == 1
    assert default_nu(build_embedding(square, LatticePolygon.rectangle(2, 3), 3)) == 6


def test_bilinear_surface_matrix():
    f = Parametrization.from_strings(BILINEAR)
    g = build_embedding(f, LatticePolygon.rectangle(1, 1), 1)
    M = syzygy_matrix(g, 1)
    # |basis(1)| = 4 rows; 16 unknowns against |basis(2)| = 9 equations of rank 9
    assert M.shape == (4, 7)
    assert verify_syzygies(M, g) == []


def test_prime_field_matches_rational_shape(example4_map):
    M = syzygy_matrix(example4_map, 2, FieldSpec(prime=1000003))
    assert M.shape == (17, 34)
    assert M.probabilistic
    assert verify_syzygies(M, example4_map) == []


def test_custom_triangle_shape():
    job = FixtureLoader.load("example4_custom")
    f = job.parametrization()
    g = build_embedding(f, job.custom_polytope(), job.d)
    assert syzygy_matrix(g, 2).shape == (12, 19)


def test_negative_nu_is_rejected(example4_map):
    with pytest.raises(ValueError):
        syzygy_system(example4_map, -1)


def test_grading_comparison_agrees():
    f = FixtureLoader.load("example5_original").parametrization()
    fine, coarse = grading_comparison(f, 1)
    assert fine.shape == coarse.shape == (45, 59)


def test_grading_comparison_needs_homothety():
    f = Parametrization.from_strings(["s*t^6+2", "s*t^5-3*s*t^3", "s*t^4+5*s^2*t^6", "2+s^2*t^6"])
    with pytest.raises(ValueError):
        grading_comparison(f, 1)


def _curve(*texts):
    return [parse_polynomial(t) for t in texts]


def test_circle_curve_matrix_is_square():
    M = curve_matrix(_curve("1-s^2", "2*s", "1+s^2"), 2, 1)
    assert M.shape == (2, 2)
    assert M.nvars == 3
    assert M.polytope is None


def test_line_curve_matrix_entry():
    M = curve_matrix(_curve("s", "1", "s+1"), 1, 0)
    assert M.shape == (1, 1)
    h = [m.entry(0, 0) for m in M.coeff_matrices]
    assert h[0] == h[1] == -h[2] != 0


def test_curve_matrix_rejects_bad_input():
    with pytest.raises(DegenerateSupport):
        curve_matrix([BivariatePolynomial()] * 3, 2, 1)
    with pytest.raises(ValueError):
        curve_matrix(_curve("s*t", "1", "s"), 2, 1)
    with pytest.raises(ValueError):
        curve_matrix(_curve("s^3", "1", "s"), 2, 1)


def test_curve_matrix_full_rank_at_generic_point():
    M = curve_matrix(_curve("1-s^2", "2*s", "1+s^2"), 2, 1)
    assert rank(linear_combination([3, 5, 7], M.coeff_matrices)) == 2
    assert rank(linear_combination([3, 4, 5], M.coeff_matrices)) == 1
