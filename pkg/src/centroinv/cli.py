"""Command line front end.

Subcommands: enumerate (stream a class), stats (statistic distribution as a
q-polynomial), bijection (apply one of the named maps to one object), verify
(run a theorem driver).  Exit code 0 means success, 1 a verification failure,
2 a usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from centroinv import generate, matchings, paths, perms, rsk, signed
from centroinv.distrib import STATS, distribution, table_json, table_tsv
from centroinv.verify import THEOREMS, report_json, report_tsv, verify


def _parse_size(raw: str | None) -> tuple[int, ...] | None:
    if raw is None:
        return None
    return tuple(int(tok) for tok in raw.split(","))


def _want(size: tuple[int, ...] | None, count: int, name: str) -> tuple[int, ...]:
    if size is None or len(size) != count:
        shape = "N" if count == 1 else "A,B"
        raise ValueError(f"bijection {name!r} needs --size {shape}")
    return size


# name -> (input description, apply(text, size_tuple) -> output text)
BIJECTIONS = {
    "excedance-subset": (
        "permutation -> subset",
        lambda text, size: matchings.format_subset(
            matchings.excedance_subset(perms.parse_perm(text))
        ),
    ),
    "subset-involution": (
        "subset -> permutation, needs --size N",
        lambda text, size: perms.format_perm(
            matchings.subset_involution(
                matchings.parse_subset(text, _want(size, 1, "subset-involution")[0])
            )
        ),
    ),
    "subset-matching": (
        "subset -> matching, needs --size N",
        lambda text, size: matchings.format_matching(
            matchings.subset_matching(
                matchings.parse_subset(text, _want(size, 1, "subset-matching")[0])
            )
        ),
    ),
    "involution-matching": (
        "permutation -> matching",
        lambda text, size: matchings.format_matching(
            matchings.involution_matching(perms.parse_perm(text))
        ),
    ),
    "matching-involution": (
        "matching -> permutation, needs --size POINTS",
        lambda text, size: perms.format_perm(
            matchings.matching_permutation(
                matchings.parse_matching(
                    text, _want(size, 1, "matching-involution")[0]
                )
            )
        ),
    ),
    "subset-path": (
        "subset -> path, needs --size N",
        lambda text, size: paths.subset_path(
            matchings.parse_subset(text, _want(size, 1, "subset-path")[0])
        ),
    ),
    "g": (
        "path -> path",
        lambda text, size: paths.g_map(text),
    ),
    "g-inverse": (
        "path -> path",
        lambda text, size: paths.g_inverse(text),
    ),
    "theta": (
        "permutation -> signed window",
        lambda text, size: signed.format_signed(signed.theta(perms.parse_perm(text))),
    ),
    "theta-inverse": (
        "signed window -> permutation",
        lambda text, size: perms.format_perm(
            signed.theta_inverse(signed.parse_signed(text))
        ),
    ),
    "rsk-path": (
        "involution -> path",
        lambda text, size: rsk.involution_path(perms.parse_perm(text)),
    ),
    "theta-rect": (
        "involution -> rectangle path, needs --size A,B",
        lambda text, size: rsk.theta_rect(
            perms.parse_perm(text), *_want(size, 2, "theta-rect")
        ),
    ),
    "theta-rect-inverse": (
        "rectangle path -> involution, needs --size A,B",
        lambda text, size: perms.format_perm(
            rsk.theta_rect_inverse(text, *_want(size, 2, "theta-rect-inverse"))
        ),
    ),
}


def _cmd_enumerate(args) -> int:
    objs = [
        generate.format_object(args.label, obj)
        for obj in generate.generate_class(args.label, args.size)
    ]
    if args.format == "json":
        print(json.dumps({"class": args.label, "size": args.size, "objects": objs}))
    else:
        for line in objs:
            print(line)
    return 0


def _cmd_stats(args) -> int:
    table = distribution(args.label, args.size, args.stat, jobs=args.jobs)
    print(table_json(table) if args.format == "json" else table_tsv(table))
    return 0


def _cmd_bijection(args) -> int:
    _, fn = BIJECTIONS[args.name]
    out = fn(args.text, _parse_size(args.size))
    if args.format == "json":
        print(json.dumps({"name": args.name, "input": args.text, "output": out}))
    else:
        print(out)
    return 0


def _cmd_verify(args) -> int:
    names = sorted(THEOREMS) if args.name == "all" else [args.name]
    reports = [verify(name, args.max_n) for name in names]
    if args.format == "json":
        if len(reports) == 1:
            print(report_json(reports[0]))
        else:
            print("[" + ",".join(report_json(r) for r in reports) + "]")
    else:
        for r in reports:
            if len(reports) > 1:
                print(f"# {r.theorem}")
            print(report_tsv(r))
    return 0 if all(r.ok for r in reports) else 1


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="centroinv",
        description=(
            "Descent statistics on 321-avoiding centrosymmetric involutions: "
            "enumeration, bijections, q-polynomials, theorem verification."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    en = sub.add_parser("enumerate", help="stream every object of a class")
    en.add_argument("--class", dest="label", required=True, choices=generate.CLASS_LABELS)
    en.add_argument("--size", type=int, required=True)
    en.add_argument("--format", choices=("tsv", "json"), default="tsv")
    en.set_defaults(func=_cmd_enumerate)

    st = sub.add_parser("stats", help="statistic distribution over a class")
    st.add_argument("--class", dest="label", required=True, choices=generate.CLASS_LABELS)
    st.add_argument("--size", type=int, required=True)
    st.add_argument("--stat", required=True, choices=STATS)
    st.add_argument("--jobs", type=int, default=1)
    st.add_argument("--format", choices=("tsv", "json"), default="tsv")
    st.set_defaults(func=_cmd_stats)

    bj = sub.add_parser("bijection", help="apply a named map to one object")
    bj.add_argument("--name", required=True, choices=sorted(BIJECTIONS))
    bj.add_argument("--apply", dest="text", required=True, metavar="OBJECT")
    bj.add_argument("--size", default=None, help="context size where needed: N or A,B")
    bj.add_argument("--format", choices=("tsv", "json"), default="tsv")
    bj.set_defaults(func=_cmd_bijection)

    vf = sub.add_parser("verify", help="run a theorem driver")
    vf.add_argument("--name", required=True, choices=sorted(THEOREMS) + ["all"])
    vf.add_argument("--max-n", dest="max_n", type=int, default=None)
    vf.add_argument("--jobs", type=int, default=1, help="accepted for symmetry; drivers run serially")
    vf.add_argument("--format", choices=("tsv", "json"), default="tsv")
    vf.set_defaults(func=_cmd_verify)

    return parser


def main(argv=None) -> int:
    args = _build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
