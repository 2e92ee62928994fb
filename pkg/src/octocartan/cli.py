"""Command-line front end.

Subcommands: table | check | decompose | random | visible | realform.
All configuration is by flags (no environment variables) and every command
is deterministic under fixed flags.  Exit codes: 0 success, 1 mathematical
failure, 2 I/O or parse failure, 3 inconclusive.
"""

import argparse
import json
import sys
from dataclasses import dataclass

from . import cayley, groups, linalg, serialize, visible
from .cartan import (
    PAIR_GROUP,
    PAIR_TAGS,
    DecompositionError,
    decompose as _decompose,
)

EXIT_OK = 0
EXIT_MATH = 1
EXIT_PARSE = 2
EXIT_INCONCLUSIVE = 3

# Samples for the visible-action sweep are drawn at this fixed scale.
VISIBLE_SAMPLE_SCALE = 1.0


@dataclass(frozen=True)
class Config:
    tol_membership: float = linalg.DEFAULT_TOL
    tol_residual: float = linalg.DEFAULT_RESIDUAL_TOL
    seed: int = 0
    pair: str = "r2"

    def __post_init__(self):
        if self.tol_membership <= 0 or self.tol_residual <= 0:
            raise ValueError("tolerances must be positive")
        if self.pair not in PAIR_TAGS:
            raise ValueError(f"unknown pair {self.pair!r}")


def _config(args):
    return Config(
        tol_membership=getattr(args, "tol_membership", linalg.DEFAULT_TOL),
        tol_residual=getattr(args, "tol", linalg.DEFAULT_RESIDUAL_TOL),
        seed=getattr(args, "seed", 0),
        pair=getattr(args, "pair", "r2"),
    )


def _read_matrix(path):
    text = sys.stdin.read() if path == "-" else open(path).read()
    return serialize.matrix_from_obj(json.loads(text))


def cmd_table(args):
    print(serialize.dumps(serialize.table_to_obj(cayley.build_mult_table())))
    return EXIT_OK


def cmd_check(args):
    cfg = _config(args)
    g = _read_matrix(args.file)
    rep = groups.classify(g, cfg.tol_membership)
    print(serialize.dumps(serialize.membership_to_obj(rep)))
    return EXIT_OK if rep.member_of(args.group, cfg.tol_membership) else EXIT_MATH


def cmd_decompose(args):
    cfg = _config(args)
    g = _read_matrix(args.file)
    try:
        f = _decompose(cfg.pair, g, cfg.tol_residual, cfg.tol_membership)
    except DecompositionError as exc:
        print(f"decompose failed: {exc}", file=sys.stderr)
        return EXIT_MATH
    except groups.LiftError as exc:
        print(f"lift failed: {exc}", file=sys.stderr)
        return EXIT_MATH
    print(serialize.dumps(serialize.factors_to_obj(f)))
    return EXIT_OK if f.residual <= cfg.tol_residual else EXIT_MATH


def cmd_random(args):
    g = groups.random_element(args.group, seed=args.seed, scale=args.scale)
    print(serialize.dumps(serialize.matrix_to_obj(g)))
    return EXIT_OK


def cmd_visible(args):
    cfg = _config(args)
    s1 = visible.check_s1(cfg.pair)
    group = PAIR_GROUP[cfg.pair]
    v1 = 0.0
    s2 = 0.0
    for i in range(args.samples):
        g = groups.random_element(group, seed=cfg.seed + i,
                                  scale=VISIBLE_SAMPLE_SCALE)
        try:
            f = _decompose(cfg.pair, g, cfg.tol_residual,
                           cfg.tol_membership)
            v1 = max(v1, f.residual)
            s2 = max(s2, visible.check_s2(cfg.pair, g, cfg.tol_residual,
                                          cfg.tol_membership))
        except (DecompositionError, groups.LiftError) as exc:
            print(f"sample {i} failed: {exc}", file=sys.stderr)
            return EXIT_MATH
    report = {
        "pair": cfg.pair,
        "samples": args.samples,
        "v1_residual": v1,
        "s1_residual": s1,
        "s2_residual": s2,
    }
    print(serialize.dumps(report))
    ok = (v1 <= cfg.tol_residual and s1 <= 1e-12 and s2 <= visible.S2_TOL)
    return EXIT_OK if ok else EXIT_MATH


def cmd_realform(args):
    report = visible.real_form_report(args.algebra)
    print(serialize.dumps(serialize.realform_to_obj(report)))
    return EXIT_INCONCLUSIVE if report.inconclusive else EXIT_OK


def _add_tols(p):
    p.add_argument("--tol", type=float, default=linalg.DEFAULT_RESIDUAL_TOL,
                   help="reconstruction residual tolerance")
    p.add_argument("--tol-membership", dest="tol_membership", type=float,
                   default=linalg.DEFAULT_TOL,
                   help="membership / rank decision tolerance")


def build_parser():
    parser = argparse.ArgumentParser(
        prog="octocartan",
        description="Octonion algebra, its matrix groups, and their "
                    "compact-slice-subgroup factorizations.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("table", help="print the multiplication table")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("check", help="classify a matrix against a group")
    p.add_argument("file", help="matrix JSON path, or - for stdin")
    p.add_argument("--group", required=True, choices=groups.GROUP_TAGS)
    _add_tols(p)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("decompose", help="factor a matrix as k * a_theta * h")
    p.add_argument("file", help="matrix JSON path, or - for stdin")
    p.add_argument("--pair", required=True, choices=PAIR_TAGS)
    _add_tols(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("random", help="seeded pseudo-random group element")
    p.add_argument("--group", required=True, choices=groups.RANDOM_GROUP_TAGS)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--scale", type=float, default=1.0)
    p.set_defaults(func=cmd_random)

    p = sub.add_parser("visible", help="verify the slice/involution conditions")
    p.add_argument("--pair", required=True, choices=PAIR_TAGS)
    p.add_argument("--samples", type=int, default=50)
    p.add_argument("--seed", type=int, default=0)
    _add_tols(p)
    p.set_defaults(func=cmd_visible)

    p = sub.add_parser("realform", help="fixed-point real form diagnostics")
    p.add_argument("--algebra", required=True, choices=("g2c", "spin7c", "so7c"))
    p.set_defaults(func=cmd_realform)

    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
