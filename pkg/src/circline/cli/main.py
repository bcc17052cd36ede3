"""circline command line: map, verify and plot a shape under a Moebius map.

Exit status: 0 success, 1 verification failed, 2 bad input, 3 I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys

from ..errors import DegenerateRegionError, ParseError
from ..extplane import DEFAULT_TOL
from ..moebius import map_gcircle_case, map_region_case
from ..oracle import verify_gcircle_image, verify_region_image
from ..shapes import Region
from .records import (
    JobSpec,
    describe,
    map_record,
    parse_job,
    parse_viewport,
    point_record,
    shape_record,
    tol_from_scalar,
)
from .svg import emit_svg

log = logging.getLogger("circline")

EXIT_OK, EXIT_FAILED, EXIT_PARSE, EXIT_IO = 0, 1, 2, 3
TOL_ENV = "CIRCLINE_TOL"


class _IOFailure(Exception):
    pass


def image_of(job: JobSpec):
    if isinstance(job.shape, Region):
        return map_region_case(job.transform, job.shape, job.tol)
    return map_gcircle_case(job.transform, job.shape, job.tol)


def map_output(job: JobSpec) -> dict:
    case, image = image_of(job)
    if isinstance(image, Region):
        inf, punctures = image.contains_infinity, [point_record(p) for p in image.punctures]
    else:
        inf, punctures = image.__class__.__name__ == "ExtLine", []
    return {
        "case": case,
        "transform": map_record(job.transform),
        "input": shape_record(job.shape),
        "image": shape_record(image),
        "equation": describe(image),
        "contains_infinity": inf,
        "punctures": punctures,
    }


def verify_output(job: JobSpec):
    case, image = image_of(job)
    predicted = job.predicted if job.predicted is not None else image
    if isinstance(job.shape, Region):
        rep = verify_region_image(job.transform, job.shape, predicted, job.samples, job.seed, job.tol)
    else:
        rep = verify_gcircle_image(job.transform, job.shape, predicted, job.samples, job.seed, job.tol)
    out = {
        "case": case,
        "predicted": shape_record(predicted),
        "passed": rep.passed,
        "samples_forward": rep.samples_forward,
        "samples_backward": rep.samples_backward,
        "max_boundary_residual": rep.max_boundary_residual,
        "residual_tol": rep.residual_tol,
        "failure_count": rep.failure_count,
        "failures": [
            {"point": point_record(f.point), "direction": f.direction.value, "detail": f.detail}
            for f in rep.failures
        ],
    }
    return out, rep.passed


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def run(job: JobSpec, command: str, out_path: str | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    if command == "map":
        stdout.write(dumps(map_output(job)))
        return EXIT_OK
    if command == "verify":
        try:
            out, passed = verify_output(job)
        except DegenerateRegionError as e:
            log.error("%s", e)
            return EXIT_FAILED
        stdout.write(dumps(out))
        return EXIT_OK if passed else EXIT_FAILED
    if command == "plot":
        _, image = image_of(job)
        text = emit_svg(job.shape, image, job.viewport, unit_circle=True)
        if out_path is None:
            stdout.write(text)
        else:
            try:
                with open(out_path, "w", encoding="utf-8") as fh:
                    fh.write(text)
            except OSError as e:
                raise _IOFailure(f"cannot write {out_path}: {e}") from None
        return EXIT_OK
    raise ValueError(f"unknown command {command!r}")


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="circline", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=["map", "verify", "plot"])
    p.add_argument("--input", "-i", help="job record file (default: stdin)")
    p.add_argument("--out", "-o", help="SVG output path for plot (default: stdout)")
    p.add_argument("--tol", type=float, help=f"classification and residual tolerance (env {TOL_ENV})")
    p.add_argument("--samples", type=int, help="oracle samples per direction (default 1000)")
    p.add_argument("--seed", type=int, help="oracle seed (default 0)")
    p.add_argument("--viewport", type=float, nargs=4, metavar=("XMIN", "YMIN", "XMAX", "YMAX"))
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def _read_input(path):
    try:
        if path is None or path == "-":
            return sys.stdin.read()
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as e:
        raise _IOFailure(f"cannot read {path}: {e}") from None


def load_job(args, text) -> JobSpec:
    """Tolerance precedence: --tol, then options.tol in the job, then $CIRCLINE_TOL."""
    base = DEFAULT_TOL
    env = os.environ.get(TOL_ENV)
    if env:
        try:
            base = tol_from_scalar(float(env), DEFAULT_TOL, TOL_ENV)
        except ValueError:
            raise ParseError(TOL_ENV, f"not a number: {env!r}") from None
    job = parse_job(text, base)
    if args.tol is not None:
        job.tol = tol_from_scalar(args.tol, DEFAULT_TOL, "--tol")
    if args.samples is not None:
        if args.samples < 1:
            raise ParseError("--samples", "must be at least 1")
        job.samples = args.samples
    if args.seed is not None:
        job.seed = args.seed
    if args.viewport is not None:
        job.viewport = parse_viewport(args.viewport, "--viewport")
    return job


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING, format="circline: %(message)s")
    try:
        job = load_job(args, _read_input(args.input))
        return run(job, args.command, args.out)
    except ParseError as e:
        log.error("%s", e)
        return EXIT_PARSE
    except _IOFailure as e:
        log.error("%s", e)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
