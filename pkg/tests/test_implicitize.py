import pytest

from toric_implicit.core.errors import DegenerateSupport, InsufficientSamples, SamplingExhausted
from toric_implicit.core.implicit.forms import ImplicitForm, monomials, normalize_coefficients
from toric_implicit.core.implicit.interpolation import (
    expected_degree_product,
    find_implicit_degree,
    fresh_point_failures,
    interpolate_implicit,
    recover_implicit,
    required_samples,
    vanishing_dimension,
)
from toric_implicit.core.implicit.sampling import sample_surface_points
from toric_implicit.core.poly import Parametrization

PLANE = ["s", "t", "1", "1"]


@pytest.fixture(scope="module")
def plane():
    return Parametrization.from_strings(PLANE)


# ---------------------- FORMS ----------------------
def test_monomials_are_graded_lex_descending():
    assert monomials(1) == ((1, 0, 0, 0), (0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1))
    assert len(monomials(6)) == 84
    assert monomials(2, 3)[0] == (2, 0, 0)


def test_normalize_coefficients():
    assert normalize_coefficients({(1, 0): -4, (0, 1): 6}) == {(1, 0): 2, (0, 1): -3}
    assert normalize_coefficients({}) == {}


def test_form_parse_and_print(quadric):
    assert str(quadric) == "2*T1*T2 - 3*T1*T4 - T2*T3 - 2*T2*T4 + 3*T4^2"
    assert ImplicitForm.parse("-4*T1*T2 + 2*T2*T3 + 6*T1*T4 + 4*T2*T4 - 6*T4^2") == quadric
    assert quadric.degree == 2


def test_form_rejects_mixed_degrees():
    with pytest.raises(ValueError):
        ImplicitForm.parse("T1^2 + T2")


def test_sextic_fixture(sextic):
    assert sextic.degree == 6
    assert len(sextic.terms) == 41
    assert sextic.terms[0] == ((4, 0, 2, 0), 2809)
    assert sextic.coefficients[(0, 6, 0, 0)] == 124002
    assert sextic.evaluate((1, 1, 1, 1)) == 5693


# ---------------------- SAMPLING ----------------------
def test_samples_lie_on_the_sextic(example4_job, sextic):
    points = sample_surface_points(example4_job.parametrization(), 3, seed=0)
    assert len(points) == 3
    assert all(sextic.evaluate(p.coordinates) == 0 for p in points)


def test_sampling_is_deterministic(example4_job):
    f = example4_job.parametrization()
    assert sample_surface_points(f, 5, seed=4) == sample_surface_points(f, 5, seed=4)


def test_plane_samples(plane):
    points = sample_surface_points(plane, 10, seed=1)
    assert all(p.coordinates[2] == p.coordinates[3] for p in points)


def test_sampling_exhausted(plane):
    with pytest.raises(SamplingExhausted):
        sample_surface_points(plane, 20, seed=0, height=1)


def test_constant_parametrization_is_rejected():
    with pytest.raises(DegenerateSupport):
        Parametrization.from_strings(["1", "1", "1", "1"])


# ---------------------- INTERPOLATION ----------------------
def test_plane_interpolation(plane):
    points = sample_surface_points(plane, required_samples(1), seed=2)
    assert interpolate_implicit(points, 1) == [ImplicitForm.parse("T3 - T4")]


def test_insufficient_samples(plane):
    points = sample_surface_points(plane, 5, seed=2)
    with pytest.raises(InsufficientSamples):
        interpolate_implicit(points, 2)


def test_example5_quadric(example5_job, quadric):
    f = example5_job.parametrization()
    points = sample_surface_points(f, required_samples(2), seed=0)
    assert vanishing_dimension(points, 1) == 0
    assert interpolate_implicit(points, 2) == [quadric]
    assert fresh_point_failures(quadric, f, count=50, seed=99) == 0


def test_recover_example5(example5_job, quadric):
    recovery = recover_implicit(example5_job.parametrization(), max_degree=3, seed=1)
    assert recovery.degree == 2
    assert recovery.forms == [quadric]
    assert recovery.sample_count == required_samples(3)


@pytest.mark.slow
def test_example4_sextic(example4_job, sextic):
    f = example4_job.parametrization()
    points = sample_surface_points(f, required_samples(6), seed=0, height=12)
    assert find_implicit_degree(points, 6) == 6
    assert interpolate_implicit(points, 5) == []
    forms = interpolate_implicit(points, 6)
    assert forms == [sextic]
    assert fresh_point_failures(forms[0], f, count=50, seed=7, height=12) == 0


def test_expected_degree_product(example4_job):
    assert expected_degree_product(example4_job.parametrization()) == 6
    assert expected_degree_product(Parametrization.from_strings(["1", "s^2", "t^3", "s^2*t^3"])) == 12
    assert expected_degree_product(Parametrization.from_strings(["1", "s", "t", "s*t+1"])) == 2
