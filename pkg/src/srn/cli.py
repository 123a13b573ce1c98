"""Command-line surface.

Subcommands: gen, stack, verify, expander, compare, spectral, add.
Exit codes: 0 success, 2 argument error, 3 precondition or verification
failure, 4 I/O or integrity error.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .base import BaseMatrixSpec, add, densify_to, generate_base
from .bridge import check_expander_sr_conditions
from .compose import NetworkSpec, build_network
from .errors import ArgumentError, IntegrityError, PreconditionError
from .expander import ExpanderSpec, compare, generate_expander
from .io import (
    FORMATS,
    detect_format,
    export_mask,
    import_mask,
    report_to_dict,
    witness_to_dict,
)
from .mask import BinaryMask
from .spectral import spectral_gap
from .verify import EXACT_LIMIT_DEFAULT, check_super_regular, regularity_report

DEFAULT_SAMPLES = 2000


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise ArgumentError(f"expected a rational like 1/2 or 0.5, got {text!r}") from exc


def _int_csv(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError as exc:
        raise ArgumentError(f"expected comma-separated integers, got {text!r}") from exc


def _load(path: str):
    data = Path(path).read_bytes()
    return import_mask(data, detect_format(data))


def _flat(obj) -> BinaryMask:
    return obj.to_mask() if hasattr(obj, "to_mask") else obj


def _report_for(mask: BinaryMask, args) -> tuple:
    exact = getattr(args, "exact", False)
    samples = getattr(args, "samples", None)
    seed = getattr(args, "seed", 0) or 0
    if samples is None and not exact and min(mask.rows, mask.cols) > EXACT_LIMIT_DEFAULT:
        samples = DEFAULT_SAMPLES
    return regularity_report(mask, samples=samples, seed=seed), samples, seed


def _cmd_gen(args) -> int:
    spec = BaseMatrixSpec(args.k, _int_csv(args.diagonals))
    mask = generate_base(spec)
    if args.densify is not None:
        mask = densify_to(mask, _fraction(args.densify))
    Path(args.out).write_bytes(export_mask(mask, args.format))
    print(f"wrote {args.out} ({mask.rows}x{mask.cols}, density {mask.density})")
    return 0


def _cmd_stack(args) -> int:
    spec = NetworkSpec.from_sizes(_int_csv(args.sizes), _fraction(args.density), args.seed)
    builds = build_network(spec)
    out_dir = Path(args.out_dir)
    out_dir.mkdir(parents=True, exist_ok=True)
    for index, build in enumerate(builds):
        mask_path = out_dir / f"layer-{index:02d}.srnm"
        report_path = out_dir / f"layer-{index:02d}.report.json"
        mask_path.write_bytes(export_mask(build.mask, "binary"))
        report_path.write_bytes(
            (json.dumps(report_to_dict(build.report), indent=2, sort_keys=True) + "\n").encode()
        )
        flat = build.mask.to_mask()
        print(
            f"wrote {mask_path} ({flat.rows}x{flat.cols}, density {flat.density},"
            f" eps*={build.report.epsilon_star}, delta*={build.report.delta_star})"
        )
    return 0


def _cmd_verify(args) -> int:
    mask = _flat(_load(args.path))
    report, samples, seed = _report_for(mask, args)
    payload = {"path": args.path, "report": report_to_dict(report)}
    status = 0
    if (args.epsilon is None) != (args.delta is None):
        raise ArgumentError("--epsilon and --delta must be given together")
    if args.epsilon is not None:
        ok, witness = check_super_regular(
            mask, _fraction(args.epsilon), _fraction(args.delta), samples=samples, seed=seed
        )
        payload["check"] = {
            "epsilon": args.epsilon,
            "delta": args.delta,
            "ok": ok,
            "witness": witness_to_dict(witness),
        }
        if not ok:
            status = 3
    print(json.dumps(payload, indent=2, sort_keys=True))
    return status


def _cmd_expander(args) -> int:
    mask = generate_expander(ExpanderSpec(args.n, args.n, args.degree, args.seed))
    Path(args.out).write_bytes(export_mask(mask, "binary"))
    print(f"wrote {args.out} ({mask.rows}x{mask.cols}, density {mask.density})")
    return 0


def _cmd_compare(args) -> int:
    masks = [_flat(_load(path)) for path in args.paths]
    labels = [Path(path).name for path in args.paths]
    report = compare(masks, labels, samples=args.samples, seed=args.seed or 0)
    print(report.table())
    return 0


def _cmd_spectral(args) -> int:
    mask = _flat(_load(args.path))
    gamma, lambda2 = spectral_gap(mask)
    degrees = mask.row_degrees
    payload = {
        "path": args.path,
        "gamma": gamma,
        "lambda2": lambda2,
        "degree": int(degrees.max()),
        "uniform_degrees": bool(degrees.min() == degrees.max()),
    }
    print(json.dumps(payload, indent=2, sort_keys=True))
    return 0


def _cmd_add(args) -> int:
    target = _flat(_load(args.target))
    result = add(target, BaseMatrixSpec(args.addend_k, _int_csv(args.addend_diagonals)))
    Path(args.out).write_bytes(export_mask(result, "binary"))
    print(f"wrote {args.out} ({result.rows}x{result.cols}, density {result.density})")
    return 0


def _parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="srn",
        description="Deterministic super-regular layer masks: build, verify, compare, export.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a base mask")
    gen.add_argument("--k", type=int, required=True, help="level; the side is 2**k")
    gen.add_argument("--diagonals", required=True, help="comma-separated diagonal indices (1..4)")
    gen.add_argument("--densify", default=None, help="target density as p/q or decimal")
    gen.add_argument("--out", required=True)
    gen.add_argument("--format", choices=FORMATS, default="binary")
    gen.set_defaults(func=_cmd_gen)

    stack = sub.add_parser("stack", help="build a full stacked network of layer masks")
    stack.add_argument("--sizes", required=True, help="comma-separated layer sizes")
    stack.add_argument("--density", required=True, help="target density as p/q or decimal")
    stack.add_argument("--seed", type=int, required=True)
    stack.add_argument("--out-dir", required=True)
    stack.set_defaults(func=_cmd_stack)

    verify = sub.add_parser("verify", help="balance report, optionally a strict check")
    verify.add_argument("path")
    mode = verify.add_mutually_exclusive_group()
    mode.add_argument("--exact", action="store_true", help="force exact enumeration")
    mode.add_argument("--samples", type=int, default=None, help="sampled verification")
    verify.add_argument("--seed", type=int, default=0)
    verify.add_argument("--epsilon", default=None, help="strict balance threshold")
    verify.add_argument("--delta", default=None, help="strict lower-bound threshold")
    verify.set_defaults(func=_cmd_verify)

    expander = sub.add_parser("expander", help="generate a random regular expander mask")
    expander.add_argument("--n", type=int, required=True)
    expander.add_argument("--degree", type=int, required=True)
    expander.add_argument("--seed", type=int, required=True)
    expander.add_argument("--out", required=True)
    expander.set_defaults(func=_cmd_expander)

    cmp_cmd = sub.add_parser("compare", help="tabulate balance quantities for several masks")
    cmp_cmd.add_argument("paths", nargs="+")
    cmp_cmd.add_argument("--samples", type=int, default=None)
    cmp_cmd.add_argument("--seed", type=int, default=0)
    cmp_cmd.set_defaults(func=_cmd_compare)

    spectral = sub.add_parser("spectral", help="spectral gap of a mask")
    spectral.add_argument("path")
    spectral.set_defaults(func=_cmd_spectral)

    add_cmd = sub.add_parser("add", help="copy a base mask into a larger mask's blocks")
    add_cmd.add_argument("--target", required=True)
    add_cmd.add_argument("--addend-k", type=int, required=True)
    add_cmd.add_argument("--addend-diagonals", required=True)
    add_cmd.add_argument("--out", required=True)
    add_cmd.set_defaults(func=_cmd_add)

    return parser


def main(argv=None) -> int:
    try:
        args = _parser().parse_args(argv)
        return args.func(args)
    except ArgumentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (IntegrityError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4


if __name__ == "__main__":
    sys.exit(main())
