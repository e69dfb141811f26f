"""Command-line interface.

Commands: ``info``, ``check``, ``link``, ``star``, ``verify-lemmas``, ``gen``,
``corpus list``, ``corpus show NAME``.  Complexes are read from facet-list
files (see FORMAT.md) and always written in canonical serialized form.

Exit codes: 0 on success (including "check passed"), 1 when a check ran and
failed (not an Euler complex, or an identity violated), 2 on usage or input
errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from pathlib import Path

from . import generators
from .complexes import Complex
from .counting import (
    verify_all_coface_sums,
    verify_all_link_counts,
    verify_face_parity,
)
from .errors import (
    InputError,
    NotASimplexError,
    ParseError,
    PreconditionError,
    UnknownCorpusError,
)
from .eulercheck import DEFAULT_MAX_FAILURES, EulerReport, check_euler
from .io import corpus_description, corpus_names, load_corpus, parse, serialize
from .operators import link, star

USAGE_ERROR = 2
CHECK_FAILED = 1


def _read_complex(path: str) -> Complex:
    data = Path(path).read_bytes()
    try:
        return parse(data)
    except ParseError as exc:
        raise ParseError(f"{path}: {exc}") from None


def _write_output(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
    else:
        Path(out).write_bytes(text.encode("utf-8"))


def _fmt_tuple(values: tuple[int, ...]) -> str:
    return "(" + ",".join(str(v) for v in values) + ")"


# -- commands ----------------------------------------------------------------


def _cmd_info(args: argparse.Namespace) -> int:
    x = _read_complex(args.file)
    if args.json:
        print(
            json.dumps(
                {
                    "dimension": x.dimension,
                    "pure": x.is_pure,
                    "f_vector": list(x.f_vector),
                    "chi": x.euler_characteristic,
                }
            )
        )
    else:
        purity = "pure" if x.is_pure else "not pure"
        print(
            f"dim {x.dimension}, {purity}, f = {_fmt_tuple(x.f_vector)}, "
            f"chi = {x.euler_characteristic}"
        )
    return 0


def _report_json(report: EulerReport) -> dict:
    parity = None
    if report.parity is not None:
        parity = {
            "lhs": report.parity.lhs,
            "rhs": report.parity.rhs,
            "holds": report.parity.holds,
        }
    return {
        "pure": report.pure,
        "dimension": report.dimension,
        "chi": report.chi,
        "is_euler": report.is_euler,
        "theorem_applicable": report.theorem_applicable,
        "theorem_holds": report.theorem_holds,
        "checks_run": report.checks_run,
        "num_failures": report.num_failures,
        "failures": [
            {
                "simplex": list(c.simplex),
                "link_dim": c.link_dim,
                "link_chi": c.link_chi,
                "expected_chi": c.expected_chi,
            }
            for c in report.failures()
        ],
        "parity_identity": parity,
    }


def _cmd_check(args: argparse.Namespace) -> int:
    x = _read_complex(args.file)
    report = check_euler(
        x, include_passes=args.verbose, max_failures=args.max_failures
    )
    if report.is_euler and report.theorem_applicable:
        report = replace(report, parity=verify_face_parity(x))

    ok = report.is_euler and (
        not report.theorem_applicable
        or (report.theorem_holds is True and report.parity is not None and report.parity.holds)
    )

    if args.json:
        print(json.dumps(_report_json(report)))
        return 0 if ok else CHECK_FAILED

    parity_str = ""
    if not report.pure:
        sizes = sorted({len(f) - 1 for f in x.facets})
        print(
            "NOT AN EULER COMPLEX: not pure "
            f"(facet dimensions {', '.join(map(str, sizes))})"
        )
        return CHECK_FAILED
    if report.is_euler:
        parity = "odd" if report.dimension % 2 else "even"
        if report.theorem_applicable:
            verdict = (
                "theorem verified"
                if ok
                else "THEOREM VIOLATED (this certifies an implementation bug)"
            )
            if report.parity is not None:
                parity_str = (
                    f"face-parity identity: {report.parity.lhs} = {report.parity.rhs}"
                )
        else:
            verdict = "theorem not applicable"
        print(
            f"EULER COMPLEX, dim {report.dimension} ({parity}), "
            f"chi = {report.chi}, {verdict}"
        )
        if parity_str:
            print(parity_str)
        if args.verbose:
            for c in report.checks:
                print(
                    f"  link of {' '.join(c.simplex)}: chi = {c.link_chi}, "
                    f"expected {c.expected_chi} ({'ok' if c.ok else 'FAIL'})"
                )
        return 0 if ok else CHECK_FAILED

    print(f"NOT AN EULER COMPLEX, dim {report.dimension}, chi = {report.chi}")
    shown = report.failures()
    print(f"{report.num_failures} of {report.checks_run} link checks failed:")
    for c in shown:
        print(
            f"  link of {' '.join(c.simplex)}: chi = {c.link_chi}, "
            f"expected {c.expected_chi}"
        )
    if report.num_failures > len(shown):
        print(f"  ... and {report.num_failures - len(shown)} more")
    return CHECK_FAILED


def _cmd_link(args: argparse.Namespace) -> int:
    x = _read_complex(args.file)
    sys.stdout.write(serialize(link(x, args.vertices)))
    return 0


def _cmd_star(args: argparse.Namespace) -> int:
    x = _read_complex(args.file)
    members = star(x, args.vertices).member_labels()
    # a star is generally not a complex, so members are listed one per line
    sys.stdout.write("".join(" ".join(m) + "\n" for m in sorted(members)))
    return 0


def _cmd_verify_lemmas(args: argparse.Namespace) -> int:
    x = _read_complex(args.file)
    coface = verify_all_coface_sums(x)
    linkcount = verify_all_link_counts(x)
    failures = [r for r in coface + linkcount if not r.holds]
    if args.json:
        print(
            json.dumps(
                {
                    "coface_sum": {
                        "checked": len(coface),
                        "failed": sum(not r.holds for r in coface),
                    },
                    "link_count": {
                        "checked": len(linkcount),
                        "failed": sum(not r.holds for r in linkcount),
                    },
                    "failures": [
                        {
                            "identity": r.identity,
                            "params": {k: list(v) if isinstance(v, tuple) else v for k, v in r.params},
                            "lhs": r.lhs,
                            "rhs": r.rhs,
                        }
                        for r in failures
                    ],
                }
            )
        )
    else:
        ok1 = sum(r.holds for r in coface)
        ok2 = sum(r.holds for r in linkcount)
        print(f"coface-sum identity: {ok1}/{len(coface)} hold")
        print(f"link-count identity: {ok2}/{len(linkcount)} hold")
        for r in failures:
            print("  " + r.describe())
    return 0 if not failures else CHECK_FAILED


def _cmd_gen(args: argparse.Namespace) -> int:
    kind = args.kind
    if kind == "boundary-simplex":
        if args.n < 1:
            raise PreconditionError("boundary-simplex needs N >= 1")
        x = generators.simplex_boundary(args.n - 1)
    elif kind == "cross-polytope":
        x = generators.cross_polytope_boundary(args.n)
    elif kind == "cycle":
        x = generators.cycle(args.m)
    elif kind == "cone":
        x = generators.cone(_read_complex(args.file))
    elif kind == "suspension":
        x = generators.suspension(_read_complex(args.file))
    elif kind == "join":
        x = generators.join(_read_complex(args.left), _read_complex(args.right))
    else:  # random
        x = generators.random_pure_complex(
            args.seed, args.n, args.facets, args.vertices
        )
    _write_output(serialize(x), args.out)
    return 0


def _cmd_corpus(args: argparse.Namespace) -> int:
    if args.corpus_cmd == "list":
        for name in corpus_names():
            print(f"{name:22} {corpus_description(name)}")
        return 0
    sys.stdout.write(serialize(load_corpus(args.name)))
    return 0


# -- parser ------------------------------------------------------------------


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="eulerkit",
        description=(
            "Inspect finite abstract simplicial complexes, classify Euler "
            "complexes, and verify the exact counting identities behind the "
            "odd-dimension vanishing theorem."
        ),
    )
    parser.add_argument(
        "--json", dest="json_global", action="store_true", help="emit JSON output"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("info", help="dimension, purity, f-vector, Euler characteristic")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_info)

    p = sub.add_parser("check", help="classify as Euler complex and verify the theorem")
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.add_argument("--verbose", action="store_true", help="list passing link checks too")
    p.add_argument(
        "--max-failures",
        type=int,
        default=DEFAULT_MAX_FAILURES,
        metavar="N",
        help="cap on reported failing links (default %(default)s)",
    )
    p.set_defaults(func=_cmd_check)

    p = sub.add_parser("link", help="print the link of a simplex as a facet file")
    p.add_argument("file")
    p.add_argument("vertices", nargs="+", metavar="LABEL")
    p.set_defaults(func=_cmd_link)

    p = sub.add_parser("star", help="print the star's member simplices, one per line")
    p.add_argument("file")
    p.add_argument("vertices", nargs="+", metavar="LABEL")
    p.set_defaults(func=_cmd_star)

    p = sub.add_parser(
        "verify-lemmas",
        help="check the coface-sum and link-count identities exhaustively",
    )
    p.add_argument("file")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=_cmd_verify_lemmas)

    p = sub.add_parser("gen", help="generate standard complexes")
    gen_sub = p.add_subparsers(dest="kind", required=True)
    g = gen_sub.add_parser("boundary-simplex", help="boundary of the N-simplex")
    g.add_argument("n", type=int, metavar="N")
    g = gen_sub.add_parser(
        "cross-polytope", help="cross-polytope boundary with N antipodal pairs"
    )
    g.add_argument("n", type=int, metavar="N")
    g = gen_sub.add_parser("cycle", help="M-cycle")
    g.add_argument("m", type=int, metavar="M")
    g = gen_sub.add_parser("cone", help="cone over the complex in FILE")
    g.add_argument("file", metavar="FILE")
    g = gen_sub.add_parser("suspension", help="suspension of the complex in FILE")
    g.add_argument("file", metavar="FILE")
    g = gen_sub.add_parser("join", help="join of the complexes in two files")
    g.add_argument("left", metavar="FILE")
    g.add_argument("right", metavar="FILE")
    g = gen_sub.add_parser("random", help="seeded random pure complex")
    g.add_argument("seed", type=int, metavar="SEED")
    g.add_argument("n", type=int, metavar="N")
    g.add_argument("facets", type=int, metavar="F")
    g.add_argument("vertices", type=int, metavar="V")
    for g in gen_sub.choices.values():
        g.add_argument("--out", metavar="PATH", help="write to PATH instead of stdout")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("corpus", help="bundled example complexes")
    corpus_sub = p.add_subparsers(dest="corpus_cmd", required=True)
    corpus_sub.add_parser("list", help="list bundled complexes")
    c = corpus_sub.add_parser("show", help="print a bundled complex")
    c.add_argument("name", metavar="NAME")
    p.set_defaults(func=_cmd_corpus)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "json_global", False):
        if hasattr(args, "json"):
            args.json = True
    try:
        return args.func(args)
    except (
        InputError,
        NotASimplexError,
        PreconditionError,
        UnknownCorpusError,
        OSError,
    ) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_ERROR


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
