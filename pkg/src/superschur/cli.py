"""Batch command line interface: enumerate, construct, verify.

Everything speaks JSON and exits with a documented code:
0 all checks pass, 1 a mathematical check failed, 2 bad input,
3 an internal claim was violated (a division or rank certificate failed).
Output is byte-stable for a fixed job description.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import lr, primitive, sweeps
from .shapes import HookSplit, Partition, SkewShape
from .superring import DivisionFailedError, TermLimitExceededError

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_BAD_INPUT = 2
EXIT_CLAIM_VIOLATED = 3


class BadInput(ValueError):
    pass


def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "0", "()"):
        return Partition()
    try:
        return Partition(tuple(int(x) for x in text.split(",")))
    except ValueError as exc:
        raise BadInput(f"bad partition {text!r}: {exc}") from exc


def parse_hook(text: str, m: int, n: int) -> HookSplit:
    if "/" in text:
        plus_text, minus_text = text.split("/", 1)
    else:
        plus_text, minus_text = text, ""
    try:
        return HookSplit(m, n, parse_partition(plus_text), parse_partition(minus_text))
    except ValueError as exc:
        raise BadInput(f"bad hook weight {text!r}: {exc}") from exc


def emit(payload: dict, path: str | None) -> None:
    text = json.dumps(payload, sort_keys=True, indent=2)
    if path:
        with open(path, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def cmd_enumerate(args) -> int:
    lam = parse_hook(args.lam, args.m, args.n)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    if args.kind == "marked":
        items = [p.to_json() for p in lr.enumerate_marked(lam, mu, nu)]
    elif args.kind == "lr":
        cont = tuple(nu[i] for i in range(1, len(nu) + 1))
        shape = SkewShape(lam.conjugate_whole(), mu.conjugate())
        items = [t.to_json() for t in lr.enumerate_lr(shape, cont)]
    elif args.kind == "ssyt":
        shape = SkewShape(lam.plus.conjugate(), mu.conjugate())
        cont = lr.marked_content(lam, nu)
        if cont is None:
            raise BadInput(f"content {nu} does not contain the leg of {lam}")
        items = [t.to_json() for t in lr.enumerate_ssyt(shape, cont)]
    elif args.kind == "pictures":
        domain = SkewShape(lam.plus.conjugate(), mu.conjugate())
        image = SkewShape(nu, lam.minus)
        items = [f.to_json() for f in lr.enumerate_pictures(domain, image)]
    else:
        raise BadInput(f"unknown enumeration kind {args.kind!r}")
    emit({"count": len(items), "items": items}, args.json_out)
    return EXIT_OK


def cmd_construct(args) -> int:
    lam = parse_hook(args.lam, args.m, args.n)
    mu = parse_partition(args.mu)
    nu = parse_partition(args.nu)
    pairs = lr.enumerate_marked(lam, mu, nu)
    vectors = []
    for pair in pairs:
        vec = primitive.build_primitive(pair.t_plus, lam, mu, nu)
        entry = {
            "t_plus": pair.t_plus.to_json(),
            "k": pair.t_plus.size,
            "num_wedge_terms": vec.num_terms(),
            "weight": list(vec.weight_of_terms() or ()),
            "membership": "polynomial",
        }
        if args.mode == "expanded":
            res = primitive.verify_even_primitive(vec)
            entry["primitivity"] = res["pairs"]
            entry["expanded_polynomial"] = res["expanded_polynomial"]
        vectors.append(entry)
    emit({"count": len(vectors), "lambda": str(lam), "mu": mu.to_json(),
          "nu": nu.to_json(), "vectors": vectors}, args.json_out)
    return EXIT_OK


SWEEPS = {
    "det-identities": lambda a: sweeps.det_identities_report(
        max_m=a.m or 4, max_n=a.n or 3, s_max=a.s),
    "cardinality": lambda a: sweeps.cardinality_report(max_size=a.max_size or 6),
    "primitivity": lambda a: sweeps.primitivity_report(max_size=a.max_size or 5),
    "independence": lambda a: sweeps.independence_report(max_size=a.max_size or 5),
    "hook-schur": lambda a: sweeps.characters_report(max_size=a.max_size or 5),
    "structural": lambda a: sweeps.structural_report(max_size=a.max_size or 4),
}


def cmd_verify(args) -> int:
    kind = args.seed_sweep or args.kind
    if kind not in SWEEPS:
        raise BadInput(f"unknown verification sweep {kind!r}; "
                       f"choose from {sorted(SWEEPS)}")
    report = SWEEPS[kind](args)
    if args.inject_perturbation:
        report["all_pass"] = False
        report["injected_perturbation"] = True
    emit(report, args.json_out)
    return EXIT_OK if report["all_pass"] else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    top = argparse.ArgumentParser(prog="superschur")
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--m", type=int, default=None)
        p.add_argument("--n", type=int, default=None)
        p.add_argument("--lambda", dest="lam", default="",
                       help="hook weight, arm/leg as 2,2/1,1")
        p.add_argument("--mu", default="")
        p.add_argument("--nu", default="")
        p.add_argument("--mode", choices=["abstract", "expanded"],
                       default="abstract")
        p.add_argument("--json-out", default=None)
        p.add_argument("--jobs", type=int, default=1,
                       help="accepted for compatibility; runs are sequential "
                            "and output order is fixed by the job description")

    p_enum = sub.add_parser("enumerate")
    p_enum.add_argument("kind", choices=["lr", "marked", "ssyt", "pictures"])
    common(p_enum)
    p_enum.set_defaults(fn=cmd_enumerate, needs_mn=True)

    p_con = sub.add_parser("construct")
    common(p_con)
    p_con.set_defaults(fn=cmd_construct, needs_mn=True)

    p_ver = sub.add_parser("verify")
    p_ver.add_argument("kind", nargs="?", default=None)
    common(p_ver)
    p_ver.add_argument("--s", type=int, default=3)
    p_ver.add_argument("--max-size", type=int, default=None)
    p_ver.add_argument("--seed-sweep", default=None)
    p_ver.add_argument("--inject-perturbation", action="store_true")
    p_ver.set_defaults(fn=cmd_verify, needs_mn=False)
    return top


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.needs_mn and (args.m is None or args.n is None or args.m < 1
                              or args.n < 1):
            raise BadInput("--m and --n are required positive integers")
        return args.fn(args)
    except BadInput as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_BAD_INPUT
    except TermLimitExceededError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_BAD_INPUT
    except (DivisionFailedError, primitive.RankDeficientError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_CLAIM_VIOLATED
    except ValueError as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return EXIT_BAD_INPUT


if __name__ == "__main__":
    sys.exit(main())
