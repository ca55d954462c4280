"""Batch command line: analyze | matrix | member | implicit | curve | verify.

Exit codes: 0 success (on the surface, for ``member``), 1 a negative answer
(off the surface, no implicit equation found, a failed check), 2 an error.
"""
import argparse
import json
import sys
from pathlib import Path
from typing import List, Optional, Tuple

from pydantic import ValidationError

from toric_implicit.core import orchestrator
from toric_implicit.core.errors import PolynomialSyntaxError, ToricImplicitError
from toric_implicit.core.linalg.exact_linalg import RATIONAL, prime_field
from toric_implicit.core.repmat.point import SurfacePoint
from toric_implicit.core.repmat.serialization import serialize
from toric_implicit.core.states.job_states import JobSpec
from toric_implicit.loaders.fixture_loader import FixtureLoader
from toric_implicit.loaders.job_loader import load_job
from toric_implicit.utils.atomic_io import write_atomic
from toric_implicit.utils.formatters import render_analyze_report, render_verify_report
from toric_implicit.utils.logger_config import get_logger

logger = get_logger("cli")

EXIT_OK, EXIT_NEGATIVE, EXIT_ERROR = 0, 1, 2


def parse_polytope(text: str) -> List[Tuple[int, int]]:
    """``"0,0;0,3;1,3"`` -> [(0, 0), (0, 3), (1, 3)]."""
    vertices = []
    for chunk in text.split(";"):
        if not chunk.strip():
            continue
        x, y = chunk.split(",")
        vertices.append((int(x), int(y)))
    return vertices


def _add_job_arguments(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--job", type=Path, help="JSON or YAML job file")
    source.add_argument("--fixture", help=f"bundled example, one of: {', '.join(FixtureLoader.available())}")
    source.add_argument("--f", nargs=4, metavar=("F1", "F2", "F3", "F4"), help="the four polynomials inline")
    parser.add_argument("--embedding", choices=["nprime", "n", "rectangle", "custom"])
    parser.add_argument("--polytope", type=parse_polytope, help='custom Q as "x,y;x,y;..."')
    parser.add_argument("--d", type=int, help="scale of the custom Q")
    parser.add_argument("--nu", type=int, help="degree override")
    _add_field_arguments(parser)
    parser.add_argument("--seed", type=int)
    parser.add_argument("--out", type=Path, help="output path (written atomically)")
    parser.add_argument("--json", action="store_true", help="machine-readable output")


def _add_field_arguments(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--field", choices=["rational", "prime"])
    parser.add_argument("--prime", type=int, help="modulus for --field prime")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="toric-implicit",
        description="Matrix representations of rational surfaces through toric embeddings.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    _add_job_arguments(sub.add_parser("analyze", help="Newton polygon, embedding and predicted sizes"))
    _add_job_arguments(sub.add_parser("matrix", help="build and serialize the representation matrix"))
    _add_job_arguments(sub.add_parser("verify", help="build M and run the consistency checks"))

    implicit = sub.add_parser("implicit", help="recover the implicit equation by interpolation")
    _add_job_arguments(implicit)
    implicit.add_argument("--max-degree", type=int, default=6)
    implicit.add_argument("--sample-count", type=int)

    member = sub.add_parser("member", help="rank-drop membership test of a point")
    member.add_argument("--matrix", type=Path, required=True, help="serialized matrix from `matrix`")
    member.add_argument("--point", required=True, help='projective point, e.g. "1:0:0:1"')
    member.add_argument("--seed", type=int, default=0)
    member.add_argument("--json", action="store_true")

    curve = sub.add_parser("curve", help="moving-line matrix and determinant of a plane curve")
    curve.add_argument("--c", nargs=3, required=True, metavar=("C1", "C2", "C3"), help="polynomials in s")
    curve.add_argument("--dc", type=int, required=True, help="degree of the curve parametrization")
    curve.add_argument("--nu", type=int, help="degree; dc - 1 by default")
    _add_field_arguments(curve)
    curve.add_argument("--out", type=Path)
    curve.add_argument("--json", action="store_true")
    return parser


def resolve_job(args: argparse.Namespace) -> JobSpec:
    """Load the job named on the command line, then apply the inline overrides."""
    if args.job is not None:
        base = load_job(args.job).model_dump(exclude_none=True)
    elif args.fixture is not None:
        base = FixtureLoader.load(args.fixture).model_dump(exclude_none=True)
    elif args.f is not None:
        base = {"polynomials": list(args.f)}
    else:
        raise ValueError("one of --job, --fixture or --f is required")

    overrides = {key: getattr(args, key) for key in ("embedding", "polytope", "d", "nu", "field", "prime", "seed")}
    overrides = {k: v for k, v in overrides.items() if v is not None}
    if args.out is not None:
        overrides["out"] = str(args.out)
    if "prime" in overrides and "field" not in overrides:
        overrides["field"] = "prime"
    if "polytope" in overrides and "embedding" not in overrides:
        overrides["embedding"] = "custom"
    return JobSpec.model_validate({**base, **overrides})


def _emit_json(data) -> None:
    print(json.dumps(data, sort_keys=True, indent=2))


def cmd_analyze(args) -> int:
    report = orchestrator.analyze(resolve_job(args))
    if args.json:
        _emit_json(report.model_dump(mode="json"))
    else:
        print(render_analyze_report(report))
    return EXIT_OK


def cmd_matrix(args) -> int:
    job = resolve_job(args)
    rep = orchestrator.build_matrix(job)
    payload = serialize(rep)
    summary = {"nu": rep.nu, "rows": rep.rows, "cols": rep.cols, "nullspace_dimension": rep.cols,
               "field": rep.field.label, "probabilistic": rep.probabilistic}
    caveat = " (prime field: probabilistic, may differ from the rational result)" if rep.probabilistic else ""
    if job.out:
        write_atomic(job.out, payload)
        logger.info("Matrix written", extra={"path": job.out, "bytes": len(payload)})
        if args.json:
            _emit_json(summary)
        else:
            print(f"M_{rep.nu}: {rep.rows}x{rep.cols} -> {job.out}{caveat}")
    else:
        print(payload.decode("ascii"))
        print(f"M_{rep.nu}: {rep.rows}x{rep.cols}, syzygy space of dimension {rep.cols}{caveat}", file=sys.stderr)
    return EXIT_OK


def cmd_member(args) -> int:
    with open(args.matrix, "rb") as f:
        data = f.read()
    point = SurfacePoint.parse(args.point)
    verdict = orchestrator.member(data, point, args.seed)
    if args.json:
        _emit_json(verdict.model_dump())
    else:
        where = "on" if verdict.on_surface else "off"
        print(f"{point} is {where} the surface "
              f"(rank {verdict.evaluated_rank}, generic rank {verdict.generic_rank})")
    return EXIT_OK if verdict.on_surface else EXIT_NEGATIVE


def cmd_implicit(args) -> int:
    job = resolve_job(args)
    recovery = orchestrator.implicit(job, args.max_degree, args.sample_count)
    if args.json:
        _emit_json({"degree": recovery.degree, "forms": [str(f) for f in recovery.forms],
                    "sample_count": recovery.sample_count})
    elif recovery.degree is None:
        print(f"no implicit equation of degree <= {args.max_degree}")
    else:
        print(f"degree {recovery.degree}")
        for form in recovery.forms:
            print(form)
    return EXIT_OK if recovery.forms else EXIT_NEGATIVE


def cmd_curve(args) -> int:
    field = prime_field(args.prime) if args.field == "prime" or args.prime else RATIONAL
    rep, det = orchestrator.curve(args.c, args.dc, args.nu, field)
    if args.out is not None:
        write_atomic(args.out, serialize(rep))
    if args.json:
        _emit_json({"nu": rep.nu, "rows": rep.rows, "cols": rep.cols,
                    "determinant": str(det) if det is not None else None})
    else:
        print(f"M_{rep.nu}: {rep.rows}x{rep.cols}")
        if det is not None:
            print(f"det = {det}")
    return EXIT_OK


def cmd_verify(args) -> int:
    report = orchestrator.verify(resolve_job(args))
    if args.json:
        _emit_json(report.model_dump(mode="json"))
    else:
        print(render_verify_report(report))
    return EXIT_OK if report.failed == 0 else EXIT_NEGATIVE


COMMANDS = {
    "analyze": cmd_analyze,
    "matrix": cmd_matrix,
    "member": cmd_member,
    "implicit": cmd_implicit,
    "curve": cmd_curve,
    "verify": cmd_verify,
}


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except PolynomialSyntaxError as e:
        logger.error("Polynomial syntax error: %s", e)
        print(f"error: {e}\n{e.pointer()}", file=sys.stderr)
    except (ToricImplicitError, ValidationError, ValueError, ZeroDivisionError, OSError) as e:
        logger.debug("%s failed", args.command, exc_info=True)
        print(f"error: {type(e).__name__}: {e}".splitlines()[0], file=sys.stderr)
    return EXIT_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
