import pytest

from toric_implicit.core import orchestrator
from toric_implicit.core.geometry import LatticePolygon
from toric_implicit.core.implicit.interpolation import expected_degree_product
from toric_implicit.core.linalg import prime_field
from toric_implicit.core.syzygy import grading_comparison
from toric_implicit.loaders.fixture_loader import FixtureLoader


def _shape(name, **update):
    job = FixtureLoader.load(name)
    if update:
        job = job.model_copy(update=update)
    return orchestrator.build_matrix(job).shape


@pytest.mark.parametrize("name", [
    "example1",
    "example2",
    "example4",
    "example4_custom",
    "example5",
    "example5_original",
])
def test_matrix_sizes(name):
    expected = FixtureLoader.load(name).expected
    assert _shape(name) == (expected.rows, expected.cols)


def test_example4_rectangle_shape():
    assert _shape("example4_rectangle") == (21, 34)
    assert FixtureLoader.load("example4_rectangle").expected.cols == 34


def test_example1_newton_polygon_is_a_pentagon():
    report = orchestrator.analyze(FixtureLoader.load("example1"))
    assert report.N.vertices == ((0, 0), (2, 1), (2, 3), (1, 3), (0, 2))
    assert report.newton_d == 1
    assert report.predicted_rows == 9


def test_analyze_reports_default_and_override_sizes():
    job = FixtureLoader.load("example4").model_copy(update={"nu": 3})
    report = orchestrator.analyze(job)
    assert (report.nu0, report.basis_nu0, report.basis_nu0_plus_d) == (2, 17, 34)
    assert report.nu == 3
    assert report.basis_nu == 34


@pytest.mark.parametrize("name, d, alpha, nu0, rows", [
    ("example3", 3, 0, 6, 247),
    ("example4", 1, 0, 2, 17),
])
def test_analyze(name, d, alpha, nu0, rows):
    report = orchestrator.analyze(FixtureLoader.load(name))
    assert (report.d, report.alpha, report.nu0, report.predicted_rows) == (d, alpha, nu0, rows)


def test_example3_newton_polygon_has_no_homothety():
    report = orchestrator.analyze(FixtureLoader.load("example3"))
    assert report.newton_d == 1
    assert report.Q == LatticePolygon.rectangle(2, 3)
    assert report.basis_nu_plus_d == 19 * 28


def test_degree_formula_example4():
    f = FixtureLoader.load("example4").parametrization()
    assert expected_degree_product(f) == 6 == FixtureLoader.load("example4").expected.implicit_degree


@pytest.mark.parametrize("name", ["example4", "example5", "example1"])
def test_verify_passes(name):
    report = orchestrator.verify(FixtureLoader.load(name))
    assert report.failed == 0, [c for c in report.checks if not c.passed]


@pytest.mark.slow
@pytest.mark.parametrize("nu, shape", [(4, (117, 200)), (6, (247, 518))])
def test_example3_sizes(nu, shape):
    assert _shape("example3", nu=nu) == shape


@pytest.mark.slow
def test_example3_grading_isomorphism():
    f = FixtureLoader.load("example3").parametrization()
    fine, coarse = grading_comparison(f, 2, Q=LatticePolygon.rectangle(2, 3), d=3, field=prime_field())
    assert fine.shape == coarse.shape == (247, 518)


@pytest.mark.slow
def test_example3_verify():
    report = orchestrator.verify(FixtureLoader.load("example3"))
    assert report.failed == 0


@pytest.mark.stretch
def test_example3_large_degree():
    assert _shape("example3", nu=30) == (5551, 15566)
