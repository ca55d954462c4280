from typing import List, Optional, Sequence, Tuple

import numpy as np

from toric_implicit.core.builders.embedding_builder import EmbeddingBuilder
from toric_implicit.core.embed.newton import newton_data
from toric_implicit.core.embed.toric_embedding import GradedMap
from toric_implicit.core.errors import DivisionByZeroError, NonSquareError
from toric_implicit.core.geometry.lattice import alpha, normalized_area
from toric_implicit.core.implicit.forms import ImplicitForm
from toric_implicit.core.implicit.interpolation import ImplicitRecovery, expected_degree_product, recover_implicit
from toric_implicit.core.implicit.sampling import random_parameter, sample_surface_points
from toric_implicit.core.linalg.exact_linalg import RATIONAL, FieldSpec
from toric_implicit.core.poly.parser import parse_polynomial
from toric_implicit.core.repmat.membership import MembershipOracle
from toric_implicit.core.repmat.minors import curve_determinant
from toric_implicit.core.repmat.point import MembershipVerdict
from toric_implicit.core.repmat.serialization import deserialize, serialize
from toric_implicit.core.states.job_states import AnalyzeReport, CheckResult, JobSpec, VerifyReport
from toric_implicit.core.syzygy.curve import curve_matrix
from toric_implicit.core.syzygy.representation import (
    RepresentationMatrix,
    substitution_residual,
    syzygy_matrix,
    verify_syzygies,
)
from toric_implicit.core.syzygy.system import default_nu
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("orchestrator")

VERIFY_SAMPLES = 3


# ===== EMBEDDING =====
def graded_map(job: JobSpec) -> GradedMap:
    """Parse the job's polynomials and embed them as chosen."""
    builder = EmbeddingBuilder().set_parametrization(job.parametrization())
    if job.embedding == "custom":
        builder.set_polytope(job.custom_polytope(), job.d)
    else:
        builder.use(job.embedding)
    return builder.build()


def analyze(job: JobSpec) -> AnalyzeReport:
    f = job.parametrization()
    nd = newton_data(f)
    g = graded_map(job)
    e = g.embedding
    nu0 = default_nu(g)
    nu = job.nu if job.nu is not None else nu0
    return AnalyzeReport(
        N=nd.N, newton_d=nd.d, Nprime=nd.Nprime, translation=nd.translation,
        embedding=e.label, Q=e.Q, d=e.d, alpha=alpha(e.Q), nu0=nu0, nu=nu,
        basis_nu0=len(e.basis(nu0)), basis_nu0_plus_d=len(e.basis(nu0 + e.d)),
        basis_nu=len(e.basis(nu)), basis_nu_plus_d=len(e.basis(nu + e.d)),
        normalized_area=normalized_area(nd.N),
    )


# ===== MATRICES =====
def build_matrix(job: JobSpec, g: Optional[GradedMap] = None) -> RepresentationMatrix:
    g = g or graded_map(job)
    nu = job.nu if job.nu is not None else default_nu(g)
    logger.info("Building representation matrix", extra={"job": job.name, "nu": nu, "field": job.field})
    return syzygy_matrix(g, nu, job.field_spec())


def member(matrix: bytes, point, seed: int = 0) -> MembershipVerdict:
    return MembershipOracle(deserialize(matrix), seed).verdict(point)


def curve(polynomials: Sequence[str], dc: int, nu: Optional[int] = None,
          field: FieldSpec = RATIONAL) -> Tuple[RepresentationMatrix, Optional[ImplicitForm]]:
    """Moving-line matrix of a plane curve and, when it is square and rational, its determinant."""
    rep = curve_matrix([parse_polynomial(p) for p in polynomials], dc, dc - 1 if nu is None else nu, field)
    if rep.rows != rep.cols or not field.is_rational:
        return rep, None
    try:
        return rep, curve_determinant(rep)
    except (NonSquareError, ValueError):
        logger.warning("Curve matrix has no usable determinant", extra={"shape": rep.shape})
        return rep, None


def implicit(job: JobSpec, max_degree: int, sample_count: Optional[int] = None) -> ImplicitRecovery:
    return recover_implicit(job.parametrization(), max_degree, seed=job.seed, sample_count=sample_count)


# ===== VERIFICATION =====
def _check(name: str, passed: bool, detail: str = "") -> CheckResult:
    if not passed:
        logger.warning("Check failed", extra={"check": name, "detail": detail})
    return CheckResult(name=name, passed=bool(passed), detail=detail)


def _substitution_check(rep: RepresentationMatrix, g: GradedMap, seed: int) -> CheckResult:
    rng = np.random.default_rng(seed)
    tried = attempts = 0
    while tried < VERIFY_SAMPLES and attempts < 10 * VERIFY_SAMPLES:
        attempts += 1
        s, t = random_parameter(rng, 50), random_parameter(rng, 50)
        try:
            residual = substitution_residual(rep, g, s, t)
        except (DivisionByZeroError, ZeroDivisionError):
            continue
        tried += 1
        if any(v != 0 for v in residual):
            return _check("substitution identity", False, f"nonzero residual at s={s}, t={t}")
    return _check("substitution identity", tried > 0, f"{tried} parameters")


def verify(job: JobSpec) -> VerifyReport:
    """Build M for the job and run the consistency checks; a failing check never raises."""
    f = job.parametrization()
    g = graded_map(job)
    rep = build_matrix(job, g)
    checks: List[CheckResult] = []

    failing = verify_syzygies(rep, g)
    checks.append(_check("columns are syzygies", not failing, f"{len(failing)} failing columns"))
    checks.append(_substitution_check(rep, g, job.seed))
    checks.append(_check("rows <= cols", rep.rows <= rep.cols, f"{rep.rows}x{rep.cols}"))

    oracle = MembershipOracle(rep, job.seed)
    checks.append(_check("generically full rank", oracle.generic_rank == rep.rows,
                         f"generic rank {oracle.generic_rank} of {rep.rows}"))

    points = sample_surface_points(f, VERIFY_SAMPLES, job.seed, height=50)
    try:
        drops = sum(1 for p in points if oracle(p).on_surface)
        checks.append(_check("rank drops on surface samples", drops == len(points), f"{drops}/{len(points)}"))
    except DivisionByZeroError as e:
        checks.append(_check("rank drops on surface samples", False, str(e)))

    checks.append(_check("serialization round trip", deserialize(serialize(rep)) == rep))

    expected = job.expected
    if expected is not None:
        if expected.d is not None:
            checks.append(_check("homothety factor", g.d == expected.d, f"d={g.d}, expected {expected.d}"))
        if expected.nu == rep.nu and expected.rows is not None:
            checks.append(_check("row count", rep.rows == expected.rows, f"{rep.rows}, expected {expected.rows}"))
        if expected.nu == rep.nu and expected.cols is not None:
            checks.append(_check("column count", rep.cols == expected.cols, f"{rep.cols}, expected {expected.cols}"))
        if expected.implicit is not None:
            F = ImplicitForm.parse(expected.implicit)
            misses = sum(1 for p in points if F.evaluate(p.coordinates) != 0)
            checks.append(_check("implicit equation vanishes on samples", misses == 0,
                                 f"{misses} of {len(points)} samples off F = 0"))
        if expected.implicit_degree is not None:
            bound = expected_degree_product(f)
            checks.append(_check("degree within Newton area", expected.implicit_degree <= bound,
                                 f"deg F = {expected.implicit_degree}, area bound {bound}"))

    report = VerifyReport(job=job.name, nu=rep.nu, shape=rep.shape, checks=checks)
    logger.info("Verification finished", extra={"job": job.name, "passed": report.passed, "failed": report.failed})
    return report
