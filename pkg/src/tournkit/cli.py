"""Command line front end: generate, decompose, profile, embed, enumerate, verify."""

from __future__ import annotations

import argparse
import json
import sys

from . import tfile
from .core import ChainSpec, Tournament, TournamentError, canonical_form, embeds, find_embedding
from .decomp import acyclic_components, is_acyclically_indecomposable, is_indecomposable, monomorphic_components
from .families import KINDS, WITNESS_NAMES, checked_family, family, schmerl_trotter, witness
from .profiles import SumSpec, UNBOUNDED, growth_of_sum, series_fit, sum_profile_sequence, profile_sequence
from .verify import (
    check_compactness,
    check_decomposition,
    check_duality,
    check_incomparability,
    check_profile_formulas,
    enumerate_tournaments,
)

USAGE_EXIT = 2
FAIL_EXIT = 1


def _write_tournament(t: Tournament, path: str | None):
    text = tfile.dumps(t)
    if path:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit(payload):
    json.dump(payload, sys.stdout, sort_keys=True, indent=2)
    sys.stdout.write("\n")


def _matrix(t: Tournament) -> list[str]:
    return tfile.dumps(t).splitlines()[1:]


def _cmd_gen(args) -> int:
    picked = sum(1 for flag in (args.family, args.witness, args.st) if flag)
    if picked != 1:
        raise TournamentError("USAGE", "pick exactly one of --family, --witness, --st")
    if args.family:
        if args.n is None:
            raise TournamentError("USAGE", "--family needs --n CHAIN_LENGTH")
        spec = ChainSpec(args.n, "desc" if args.desc else "asc")
        t = checked_family(args.family, spec) if args.checked else family(args.family, spec)
    elif args.witness:
        t = witness(args.witness)
    else:
        if args.h is None:
            raise TournamentError("USAGE", "--st needs --h H")
        t = schmerl_trotter(args.st, args.h)
    _write_tournament(t, args.output)
    return 0


def _cmd_decompose(args) -> int:
    t = tfile.load_path(args.file)
    d = acyclic_components(t)
    _emit(
        {
            "n": t.n,
            "blocks": [list(b) for b in d.blocks],
            "spectrum": list(d.spectrum),
            "quotient": {"n": d.quotient.n, "matrix": _matrix(d.quotient)},
            "acyclically_indecomposable": is_acyclically_indecomposable(t),
            "indecomposable": is_indecomposable(t),
            "monomorphic_components": [list(b) for b in monomorphic_components(t)],
        }
    )
    return 0


def _cmd_profile(args) -> int:
    t = tfile.load_path(args.file)
    series = profile_sequence(t, args.max)
    payload = {"n": t.n, "values": list(series.values)}
    if args.fit is not None:
        numerator = series_fit(series, args.fit)
        payload["fit"] = {"k": args.fit, "numerator": numerator}
    _emit(payload)
    return 0


def _parse_caps(text: str):
    caps = []
    for piece in text.split(","):
        piece = piece.strip()
        if piece in ("inf", "unbounded", "*"):
            caps.append(UNBOUNDED)
        else:
            try:
                caps.append(int(piece))
            except ValueError:
                raise TournamentError("USAGE", f"bad cap {piece!r}: use integers or 'inf'") from None
    return tuple(caps)


def _cmd_sum_profile(args) -> int:
    index = tfile.load_path(args.index)
    spec = SumSpec(index, _parse_caps(args.caps))
    series = sum_profile_sequence(spec, args.max)
    payload = {
        "index_n": index.n,
        "caps": ["inf" if c is UNBOUNDED else c for c in spec.caps],
        "values": list(series.values),
        "growth": growth_of_sum(spec),
    }
    if args.fit is not None:
        payload["fit"] = {"k": args.fit, "numerator": series_fit(series, args.fit)}
    _emit(payload)
    return 0


def _cmd_embed(args) -> int:
    pattern = tfile.load_path(args.pattern)
    host = tfile.load_path(args.host)
    mapping = find_embedding(pattern, host)
    _emit({"embeds": mapping is not None, "witness": mapping})
    return 0


def _cmd_enumerate(args) -> int:
    reps = enumerate_tournaments(args.n)
    if args.filter == "acyclically-indecomposable":
        reps = [t for t in reps if is_acyclically_indecomposable(t)]
    _emit(
        {
            "n": args.n,
            "count": len(reps),
            "tournaments": [_matrix(t) for t in reps],
        }
    )
    return 0


def _cmd_verify(args) -> int:
    if args.suite == "decomposition":
        report = check_decomposition(args.n_max)
    elif args.suite == "formulas":
        report = check_profile_formulas(args.n_max)
    elif args.suite == "incomparability":
        report = check_incomparability(args.host_size)
    elif args.suite == "duality":
        report = check_duality(args.max_chain)
    else:
        report = check_compactness(args.n, args.size_bound, threads=args.threads)
    sys.stdout.write(report.to_json() + "\n")
    if report.elapsed is not None:
        print(f"elapsed: {report.elapsed:.2f}s", file=sys.stderr)
    return 0 if report.passed else FAIL_EXIT


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="tournkit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen", help="generate a family member, witness, or classical tournament")
    p.add_argument("--family", choices=KINDS)
    p.add_argument("--witness", choices=WITNESS_NAMES)
    p.add_argument("--st", choices=("t", "u", "v"), help="classical odd tournament tag")
    p.add_argument("--n", type=int, help="chain length for --family")
    p.add_argument("--h", type=int, help="half-size parameter for --st (gives 2h+1 vertices)")
    p.add_argument("--desc", action="store_true", help="build over the reversed chain")
    p.add_argument("--checked", action="store_true", help="emit the acyclic-quotient variant")
    p.add_argument("-o", "--output")
    p.set_defaults(func=_cmd_gen)

    p = sub.add_parser("decompose", help="acyclic decomposition of a tournament file")
    p.add_argument("file")
    p.set_defaults(func=_cmd_decompose)

    p = sub.add_parser("profile", help="induced subtournament census of a file")
    p.add_argument("file")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--fit", type=int, help="fit the series against k unbounded chains")
    p.set_defaults(func=_cmd_profile)

    p = sub.add_parser("sum-profile", help="profile of a sum of chains over an index file")
    p.add_argument("--index", required=True)
    p.add_argument("--caps", required=True, help="comma list of lengths, 'inf' for unbounded")
    p.add_argument("--max", type=int, required=True)
    p.add_argument("--fit", type=int)
    p.set_defaults(func=_cmd_sum_profile)

    p = sub.add_parser("embed", help="search an induced embedding of PATTERN into HOST")
    p.add_argument("pattern")
    p.add_argument("host")
    p.set_defaults(func=_cmd_embed)

    p = sub.add_parser("enumerate", help="canonical representatives on n vertices")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", choices=("acyclically-indecomposable",))
    p.set_defaults(func=_cmd_enumerate)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True,
                   choices=("decomposition", "formulas", "incomparability", "duality", "compactness"))
    p.add_argument("--n-max", type=int, default=6)
    p.add_argument("--host-size", type=int, default=14)
    p.add_argument("--max-chain", type=int, default=5)
    p.add_argument("--n", type=int, default=2, help="chain length for compactness members")
    p.add_argument("--size-bound", type=int, default=8)
    p.add_argument("--threads", type=int, default=1)
    p.set_defaults(func=_cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except TournamentError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE_EXIT


if __name__ == "__main__":
    sys.exit(main())
