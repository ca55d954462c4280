import json
from fractions import Fraction

import numpy as np
import pytest
from pydantic import ValidationError

from toric_implicit.core import orchestrator
from toric_implicit.core.errors import FormatError, NonSquareError, SizeGuardError
from toric_implicit.core.implicit.forms import ImplicitForm
from toric_implicit.core.implicit.sampling import sample_surface_points
from toric_implicit.core.linalg import ExactMatrix, FieldSpec, rank
from toric_implicit.core.poly import parse_polynomial
from toric_implicit.core.repmat.membership import MembershipOracle, evaluate, generic_rank, is_on_surface
from toric_implicit.core.repmat.minors import curve_determinant, minor_gcd, sample_column_sets
from toric_implicit.core.repmat.point import SurfacePoint
from toric_implicit.core.repmat.serialization import deserialize, serialize
from toric_implicit.core.syzygy import RepresentationMatrix, curve_matrix, syzygy_matrix


@pytest.fixture(scope="module")
def circle_matrix():
    return curve_matrix([parse_polynomial(p) for p in ("1-s^2", "2*s", "1+s^2")], 2, 1)


def _off_surface_points(form, count, seed):
    rng = np.random.default_rng(seed)
    points = []
    while len(points) < count:
        coords = [int(v) for v in rng.integers(-6, 7, size=4)]
        if any(coords) and form.evaluate(coords) != 0:
            points.append(SurfacePoint(coordinates=coords))
    return points


# ---------------------- POINTS ----------------------
def test_surface_point_normalization():
    assert SurfacePoint.parse("2:4:0:2").coordinates == (1, 2, 0, 1)
    assert SurfacePoint.parse("0, 3/4, 3, 0").coordinates == (0, 1, 4, 0)
    assert str(SurfacePoint.of(0, 0, 2, 1)) == "(0 : 0 : 1 : 1/2)"


def test_zero_point_is_rejected():
    with pytest.raises(ValidationError):
        SurfacePoint.of(0, 0, 0, 0)


# ---------------------- EVALUATION ----------------------
def test_evaluate_at_basis_vectors(example4_matrix):
    assert evaluate(example4_matrix, (1, 0, 0, 0)) == example4_matrix.coeff_matrices[0]
    assert evaluate(example4_matrix, (0, 0, 0, 1)) == example4_matrix.coeff_matrices[3]


def test_evaluate_is_linear(example4_matrix):
    p, q = (1, 2, 3, 4), (Fraction(1, 2), -1, 0, 5)
    a, b = Fraction(3, 7), -2
    combined = tuple(a * x + b * y for x, y in zip(p, q))
    expected = evaluate(example4_matrix, p).scale(a) + evaluate(example4_matrix, q).scale(b)
    assert evaluate(example4_matrix, combined) == expected


def test_evaluate_checks_arity(example4_matrix):
    with pytest.raises(ValueError):
        evaluate(example4_matrix, (1, 2, 3))


def test_rank_drops_at_image_point(example4_matrix):
    assert rank(evaluate(example4_matrix, (3, -2, 6, 3))) < 17


# ---------------------- MEMBERSHIP ----------------------
def test_generic_rank(example4_matrix, example5_matrix):
    assert generic_rank(example4_matrix) == 17
    assert generic_rank(example5_matrix) == 6


def test_generic_rank_of_zero_matrix():
    zero = ExactMatrix.zeros(2, 3)
    M = RepresentationMatrix(row_basis=((0, 0), (1, 0)), coeff_matrices=(zero,) * 4, nu=1, d=1)
    assert generic_rank(M) == 0


@pytest.mark.parametrize("point, on_surface", [
    ((4, -4, 22, 6), True),
    ((1, 0, 0, 0), True),
    ((1, 1, 1, 1), False),
])
def test_example4_membership(example4_matrix, sextic, point, on_surface):
    verdict = is_on_surface(example4_matrix, SurfacePoint(coordinates=point))
    assert verdict.on_surface is on_surface
    assert (sextic.evaluate(point) == 0) is on_surface
    assert verdict.generic_rank == 17


def test_verdict_is_scale_invariant(example4_matrix):
    oracle = MembershipOracle(example4_matrix)
    for point in [(4, -4, 22, 6), (1, 1, 1, 1)]:
        scaled = tuple(Fraction(-5, 3) * c for c in point)
        assert oracle(point).on_surface == oracle(scaled).on_surface


@pytest.mark.parametrize("name", ["example4", "example5"])
def test_rank_drop_soundness(request, name):
    job = request.getfixturevalue(f"{name}_job")
    M = request.getfixturevalue(f"{name}_matrix")
    form = request.getfixturevalue("sextic" if name == "example4" else "quadric")
    oracle = MembershipOracle(M, seed=3)
    on = sample_surface_points(job.parametrization(), 100, seed=11, height=20)
    assert all(oracle(p).on_surface for p in on)
    off = _off_surface_points(form, 100, seed=5)
    assert not any(oracle(p).on_surface for p in off)


# ---------------------- MINORS ----------------------
def test_sample_column_sets_is_exhaustive_when_small():
    subsets, exhaustive = sample_column_sets(2, 3, 10, seed=0)
    assert exhaustive
    assert subsets == [(0, 1), (0, 2), (1, 2)]
    subsets, exhaustive = sample_column_sets(6, 11, 8, seed=0)
    assert not exhaustive
    assert len(set(subsets)) == 8


def test_minor_gcd_recovers_example5_quadric(example5_matrix, quadric):
    result = minor_gcd(example5_matrix, sample_count=8, seed=0)
    assert result.form == quadric
    assert result.stabilized
    assert result.degree == 2


def test_minor_gcd_of_circle(circle_matrix):
    result = minor_gcd(circle_matrix, sample_count=1)
    assert result.exhaustive
    assert result.form == ImplicitForm.parse("T1^2 + T2^2 - T3^2", nvars=3)


def test_minor_gcd_of_line():
    M = curve_matrix([parse_polynomial(p) for p in ("s", "1", "s+1")], 1, 0)
    assert minor_gcd(M, sample_count=1).form == ImplicitForm.parse("T1 + T2 - T3", nvars=3)


def test_minor_gcd_size_guard(example4_matrix):
    with pytest.raises(SizeGuardError):
        minor_gcd(example4_matrix, sample_count=2)


def test_minor_gcd_is_worker_count_independent(example5_matrix):
    one = minor_gcd(example5_matrix, sample_count=4, seed=2, workers=1)
    four = minor_gcd(example5_matrix, sample_count=4, seed=2, workers=4)
    assert one == four


def test_curve_determinant(circle_matrix, example5_matrix):
    assert curve_determinant(circle_matrix) == ImplicitForm.parse("T1^2 + T2^2 - T3^2", nvars=3)
    with pytest.raises(NonSquareError):
        curve_determinant(example5_matrix)


# ---------------------- SERIALIZATION ----------------------
def test_round_trip(example4_matrix, circle_matrix):
    assert deserialize(serialize(example4_matrix)) == example4_matrix
    assert deserialize(serialize(circle_matrix)) == circle_matrix


def test_prime_field_round_trip(example4_map):
    M = syzygy_matrix(example4_map, 2, FieldSpec(prime=1000003))
    back = deserialize(serialize(M))
    assert back == M
    assert back.field.prime == 1000003


def test_serialization_is_canonical(example4_job, example4_matrix):
    data = serialize(example4_matrix)
    assert data == serialize(orchestrator.build_matrix(example4_job))
    payload = json.loads(data)
    assert list(payload) == sorted(payload)
    assert payload["nu"] == "2"
    assert payload["field"] == "rational"
    assert all("/" in e for row in payload["coeff_matrices"][0] for e in row)


def test_truncated_payload(example4_matrix):
    data = serialize(example4_matrix)[:80]
    with pytest.raises(FormatError) as excinfo:
        deserialize(data)
    assert 0 <= excinfo.value.offset <= 80


def test_malformed_entries(example5_matrix):
    payload = json.loads(serialize(example5_matrix))
    payload["coeff_matrices"][0][0][0] = "1.5"
    with pytest.raises(FormatError):
        deserialize(json.dumps(payload).encode())

    payload = json.loads(serialize(example5_matrix))
    payload["coeff_matrices"][1][2] = payload["coeff_matrices"][1][2][:-1]
    with pytest.raises(FormatError):
        deserialize(json.dumps(payload).encode())

    payload = json.loads(serialize(example5_matrix))
    payload["field"] = {"prime": "12"}
    with pytest.raises(FormatError):
        deserialize(json.dumps(payload).encode())


def test_unknown_key_is_rejected(example5_matrix):
    payload = json.loads(serialize(example5_matrix))
    payload["extra"] = 1
    data = json.dumps(payload, sort_keys=True).encode()
    with pytest.raises(FormatError) as excinfo:
        deserialize(data)
    assert excinfo.value.offset == data.find(b'"extra"')
