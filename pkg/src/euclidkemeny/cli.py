"""``ek`` command-line interface.

Exit codes: 0 success, 2 parse/format error, 3 inadmissible input (parity,
bipartition, no voters), 4 equidistance tie, 5 solver capacity exceeded,
6 verification failure.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from . import io
from .construct import construct
from .errors import BipartitionError, CapacityError, EmptyProfile, InputError, ParityError, TieError, VerificationError
from .generate import (
    random_bipartite_fas,
    random_bipartite_tournament,
    random_parity_tournament,
    random_profile,
    seeded_rng,
)
from .geometry import Norm, coordinate_bit_length, derive_profile
from .pipeline import check_induces, run_pipeline, verify_inducibility
from .solve import kemeny_brute_force, kemeny_dp, slater_ranking
from .svg import render_svg

EXIT_PARSE = 2
EXIT_ADMISSIBILITY = 3
EXIT_TIE = 4
EXIT_CAPACITY = 5
EXIT_VERIFY = 6


class CLIError(Exception):
    def __init__(self, code, message):
        self.code = code
        super().__init__(message)


def _read(path):
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise CLIError(EXIT_PARSE, f"cannot read {path}: {exc.strerror}") from None


def _write(path, text):
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(text)


def _format_ranking(r):
    return " > ".join(map(str, r))


def cmd_construct(args):
    t = io.parse_tournament(_read(args.input))
    e = construct(t, Norm(args.norm))
    _write(args.output, io.format_embedding(e))
    n_voters = sum(v.multiplicity for v in e.voters)
    print(f"norm {args.norm}: {e.n_candidates} candidates, {len(e.voters)} voter records, {n_voters} voters")
    print(f"max coordinate bit length: {coordinate_bit_length(e)}")
    return 0


def cmd_derive(args):
    e, _ = io.parse_embedding(_read(args.input))
    p = derive_profile(e)
    _write(args.output, io.format_profile(p))
    print(f"derived {p.n_voters} voters over {p.n_candidates} candidates")
    return 0


def cmd_kemeny(args):
    p = io.parse_profile(_read(args.input))
    res = kemeny_brute_force(p) if args.brute_force else kemeny_dp(p)
    print(f"ranking: {_format_ranking(res.optimal)}")
    print(f"cost: {res.cost}")
    if res.optima_count is not None:
        print(f"optima: {res.optima_count}")
    return 0


def cmd_slater(args):
    t = io.parse_tournament(_read(args.input))
    res = slater_ranking(t, brute_force=args.brute_force)
    print(f"ranking: {_format_ranking(res.optimal)}")
    print(f"cost: {res.cost}")
    if res.optima_count is not None:
        print(f"optima: {res.optima_count}")
    return 0


def _norms(value):
    return [Norm.L1, Norm.LINF, Norm.L2] if value == "all" else [Norm(value)]


def cmd_verify(args):
    t = io.parse_tournament(_read(args.input))
    if args.embedding:
        e, _ = io.parse_embedding(_read(args.embedding))
        verdicts = [(e.norm, check_induces(t, e))]
    else:
        verdicts = [(norm, verify_inducibility(t, norm)) for norm in _norms(args.norm)]
    for norm, verdict in verdicts:
        print(f"{'PASS' if verdict.ok else 'FAIL'} {norm.value}")
        for line in verdict.diagnostics:
            print(f"  {line}")
    failures = [v for _, v in verdicts if not v.ok]
    if any(not _inadmissible(v) for v in failures):
        return EXIT_VERIFY
    return EXIT_ADMISSIBILITY if failures else 0


def _inadmissible(verdict):
    return any(d.startswith(("ParityError", "BipartitionError")) for d in verdict.diagnostics)


def cmd_pipeline(args):
    f = io.parse_fas(_read(args.input))
    code = 0
    for norm in _norms(args.norm):
        try:
            report = run_pipeline(f, norm)
        except VerificationError as exc:
            print(f"FAIL {norm.value}: {exc}")
            code = EXIT_VERIFY
            continue
        print(report.to_json() if args.json else report.to_text())
        print(f"PASS {norm.value}")
    return code


def cmd_plot(args):
    e, names = io.parse_embedding(_read(args.input))
    _write(args.output, render_svg(e, labels=args.labels, guides=args.guides, names=names))
    return 0


def cmd_generate(args):
    rng = seeded_rng(args.seed)
    if args.kind == "bipartite":
        text = io.format_tournament(random_bipartite_tournament(rng, n_max=args.n_max))
    elif args.kind in ("even", "odd"):
        text = io.format_tournament(random_parity_tournament(rng, odd=args.kind == "odd", n_max=args.n_max))
    elif args.kind == "fas":
        text = io.format_fas(random_bipartite_fas(rng, n_max=args.n_max))
    else:
        text = io.format_profile(random_profile(rng, n_max=args.n_max))
    if args.output:
        _write(args.output, text)
    else:
        sys.stdout.write(text)
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ek", description="Euclidean tournament embeddings and exact Kemeny ranking")
    sub = parser.add_subparsers(dest="command", required=True)
    norms = [n.value for n in Norm]

    p = sub.add_parser("construct", help="embed a tournament file under a norm")
    p.add_argument("--norm", choices=norms, required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("derive", help="derive the preference profile of an embedding")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.set_defaults(func=cmd_derive)

    p = sub.add_parser("kemeny", help="exact Kemeny ranking of a profile file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--brute-force", action="store_true", help="enumerate all rankings and count optima")
    p.set_defaults(func=cmd_kemeny)

    p = sub.add_parser("slater", help="exact Slater ranking of a tournament file")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--brute-force", action="store_true")
    p.set_defaults(func=cmd_slater)

    p = sub.add_parser("verify", help="round-trip a tournament through a construction")
    p.add_argument("--norm", choices=norms + ["all"], default="all")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--embedding", help="check this embedding file instead of constructing one")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("pipeline", help="FAS -> tournament -> embedding -> Kemeny, checked by brute force")
    p.add_argument("--norm", choices=norms + ["all"], required=True)
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--json", action="store_true", help="print the report as JSON")
    p.set_defaults(func=cmd_pipeline)

    p = sub.add_parser("plot", help="render an embedding file as SVG")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--out", dest="output", required=True)
    p.add_argument("--labels", action="store_true")
    p.add_argument("--guides", action="store_true", help="join each f voter to its g partner")
    p.set_defaults(func=cmd_plot)

    p = sub.add_parser("generate", help="write a random instance (seed from --seed or $EK_SEED)")
    p.add_argument("kind", choices=["bipartite", "even", "odd", "fas", "profile"])
    p.add_argument("--n-max", type=int, default=8)
    p.add_argument("--seed", type=int)
    p.add_argument("--out", dest="output")
    p.set_defaults(func=cmd_generate)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except CLIError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except (ParityError, BipartitionError, EmptyProfile) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ADMISSIBILITY
    except TieError as exc:
        print(f"error: tie: {exc}", file=sys.stderr)
        return EXIT_TIE
    except CapacityError as exc:
        print(f"error: capacity: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE


if __name__ == "__main__":
    sys.exit(main())
