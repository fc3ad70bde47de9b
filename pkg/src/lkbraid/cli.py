"""Command-line front end.

Every subcommand prints ``key: value`` lines.  With ``--format machine`` the
same lines are emitted inside a JSON object (key ``lines``) next to structured
fields, so the machine form carries everything the text form does.

Exit codes: 0 success, 1 usage error, 2 verdict mismatch between the matrix
test and the word-problem oracle, 3 internal check failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import suites
from .braid import BraidWord, braid_equal, format_word, oracle_is_trivial, parse_word
from .forknoodle import DegenerateError, disc_model, pair_image
from .homology import (all_faces, boundary, face_name, fox_vector, kernel_basis, normalization_report,
                       relator, verify_rank)
from .laurent import lp_parse
from .lkrep import LKMatrix, basis, is_identity, represent

EXIT_OK, EXIT_USAGE, EXIT_MISMATCH, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _common(p: argparse.ArgumentParser, need_n: bool = True) -> None:
    if need_n:
        p.add_argument("-n", "--strands", dest="n", type=int, required=True, help="number of strands")
    else:
        p.add_argument("-n", "--strands", dest="n", type=int, default=None, help="number of strands")
    p.add_argument("--format", choices=("text", "machine"), default="text")
    p.add_argument("--seed", type=int, default=0, help="seed for randomized suites")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lkbraid", description="Exact Lawrence-Krammer matrices and fork/noodle pairings.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("matrix", help="print the matrix of a braid word")
    _common(p)
    p.add_argument("word", nargs="?", default="")

    p = sub.add_parser("trivial", help="decide whether a braid word is trivial, two ways")
    _common(p)
    p.add_argument("word", nargs="?", default="")

    p = sub.add_parser("equal", help="compare two braid words, two ways")
    _common(p)
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("pair", help="pairing of noodle N_i with the fork image w(F_{j,k})")
    _common(p, need_n=False)
    p.add_argument("--fork", nargs=2, type=int, metavar=("J", "K"))
    p.add_argument("--noodle", type=int)
    p.add_argument("--scenario", help="file with 'n:', 'word:', 'fork:' and 'noodle:' lines")
    p.add_argument("--route", choices=("noodle", "fork"), default="noodle",
                   help="move the noodle by the inverse word, or the fork by the word")
    p.add_argument("word", nargs="?", default="")

    p = sub.add_parser("verify", help="run the self-check suites")
    _common(p, need_n=False)
    p.add_argument("--n-max", type=int, default=4)

    p = sub.add_parser("homology", help="dump face boundaries and the kernel basis")
    _common(p)
    return parser


# -- rendering ---------------------------------------------------------------

def _pair_label(j: int, k: int) -> str:
    return f"[{j},{k}]"


def matrix_lines(n: int, word: BraidWord, m: LKMatrix) -> list[str]:
    labels = [_pair_label(b.j, b.k) for b in basis(n)]
    lines = [f"n: {n}", f"word: {format_word(word)}", f"dim: {m.dim}", "basis: " + " ".join(labels)]
    for lab, row in zip(labels, m.entries):
        lines.append(f"row {lab}: " + " ; ".join(str(e) for e in row))
    return lines


def parse_matrix_lines(lines: Sequence[str]) -> LKMatrix:
    """Inverse of :func:`matrix_lines` (used as the fixture loader)."""
    fields = {}
    rows = []
    for line in lines:
        key, _, value = line.partition(": ")
        if key.startswith("row "):
            rows.append(tuple(lp_parse(e) for e in value.split(" ; ")))
        else:
            fields[key] = value
    return LKMatrix(int(fields["n"]), tuple(rows))


def _verdict(b: bool, yes: str, no: str) -> str:
    return yes if b else no


def _emit(args, lines: list[str], data: dict, out) -> None:
    if args.format == "machine":
        payload = dict(data)
        payload["command"] = args.command
        payload["lines"] = lines
        out.write(json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


# -- commands ------------------------------------------------------------------

def _word(args, text: str) -> BraidWord:
    try:
        return parse_word(text, args.n)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def cmd_matrix(args, out) -> int:
    w = _word(args, args.word)
    m = represent(w)
    lines = matrix_lines(args.n, w, m)
    _emit(args, lines, {"n": args.n, "word": format_word(w),
                        "basis": [[b.j, b.k] for b in basis(args.n)],
                        "rows": [[str(e) for e in row] for row in m.entries]}, out)
    return EXIT_OK


def cmd_trivial(args, out) -> int:
    w = _word(args, args.word)
    lk = is_identity(represent(w))
    oracle = oracle_is_trivial(w)
    agree = lk == oracle
    lines = [f"n: {args.n}", f"word: {format_word(w)}",
             f"lk: {_verdict(lk, 'trivial', 'nontrivial')}",
             f"oracle: {_verdict(oracle, 'trivial', 'nontrivial')}",
             f"agree: {_verdict(agree, 'yes', 'no')}"]
    _emit(args, lines, {"n": args.n, "word": format_word(w), "lk_trivial": lk,
                        "oracle_trivial": oracle, "agree": agree}, out)
    return EXIT_OK if agree else EXIT_MISMATCH


def cmd_equal(args, out) -> int:
    u, v = _word(args, args.left), _word(args, args.right)
    lk = represent(u) == represent(v)
    oracle = braid_equal(u, v)
    agree = lk == oracle
    lines = [f"n: {args.n}", f"left: {format_word(u)}", f"right: {format_word(v)}",
             f"lk: {_verdict(lk, 'equal', 'different')}",
             f"oracle: {_verdict(oracle, 'equal', 'different')}",
             f"agree: {_verdict(agree, 'yes', 'no')}"]
    _emit(args, lines, {"n": args.n, "left": format_word(u), "right": format_word(v),
                        "lk_equal": lk, "oracle_equal": oracle, "agree": agree}, out)
    return EXIT_OK if agree else EXIT_MISMATCH


def load_scenario(path: str) -> dict:
    """Read ``key: value`` lines; blank lines and ``#`` comments are skipped."""
    try:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read scenario: {exc}") from exc
    fields = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = line.partition(":")
        if not sep or key.strip() not in ("n", "word", "fork", "noodle"):
            raise UsageError(f"bad scenario line {raw!r}")
        fields[key.strip()] = value.strip()
    try:
        out = {"word": fields.get("word", "")}
        if "n" in fields:
            out["n"] = int(fields["n"])
        if "fork" in fields:
            out["fork"] = [int(x) for x in fields["fork"].split()]
        if "noodle" in fields:
            out["noodle"] = int(fields["noodle"])
    except ValueError as exc:
        raise UsageError(f"bad scenario value: {exc}") from exc
    return out


def cmd_pair(args, out) -> int:
    if args.scenario:
        sc = load_scenario(args.scenario)
        args.n = args.n if args.n is not None else sc.get("n")
        args.fork = args.fork or sc.get("fork")
        args.noodle = args.noodle if args.noodle is not None else sc.get("noodle")
        args.word = args.word or sc["word"]
    if args.n is None or args.fork is None or args.noodle is None or len(args.fork) != 2:
        raise UsageError("pair needs -n, --fork J K and --noodle I (or a scenario file)")
    if args.n < 2:
        raise UsageError("need at least 2 strands")
    w = _word(args, args.word)
    j, k = args.fork
    if not (1 <= j < k <= args.n):
        raise UsageError(f"fork indices need 1 <= j < k <= {args.n}")
    if not 1 <= args.noodle <= args.n:
        raise UsageError(f"noodle index needs 1 <= i <= {args.n}")
    res = pair_image(disc_model(args.n), w, args.noodle, j, k, route=args.route)
    claims_ok = res.consistent
    lines = [f"n: {args.n}", f"word: {format_word(w)}", f"fork: {j} {k}", f"noodle: {args.noodle}",
             f"pairing: {res.value}", f"intersections: {res.l}", "table: i j a b eps"]
    lines += [f"row: {d.i} {d.j} {d.a_ij} {d.b_ij} {d.eps_ij}" for d in res.table]
    lines.append(f"claims: {'ok' if claims_ok else 'violated'}")
    _emit(args, lines, {"n": args.n, "word": format_word(w), "fork": [j, k], "noodle": args.noodle,
                        "pairing": str(res.value), "intersections": res.l,
                        "table": [[d.i, d.j, d.a_ij, d.b_ij, d.eps_ij] for d in res.table],
                        "claims_ok": claims_ok}, out)
    return EXIT_OK if claims_ok else EXIT_INTERNAL


def cmd_verify(args, out) -> int:
    if args.n_max < 2:
        raise UsageError("--n-max must be at least 2")
    results = suites.run_all(args.n_max, args.seed)
    lines = []
    for r in results:
        lines.append(r.line())
        lines += [f"  {d}" for d in r.details]
    failed = [r.name for r in results if not r.ok]
    lines.append(f"result: {'pass' if not failed else 'FAIL ' + ' '.join(failed)}")
    _emit(args, lines, {"n_max": args.n_max, "seed": args.seed,
                        "suites": {r.name: {"ok": r.ok, "details": r.details} for r in results}}, out)
    if "faithfulness" in failed:
        return EXIT_MISMATCH
    return EXIT_INTERNAL if failed else EXIT_OK


def cmd_homology(args, out) -> int:
    n = args.n
    if n < 2:
        raise UsageError("need at least 2 strands")
    lines = [f"n: {n}"]
    data: dict = {"n": n, "boundaries": {}, "kernel": []}
    for f in all_faces(n):
        r = relator(*f)
        b = fox_vector(r)
        lines.append(f"relator {face_name(f)}: {r}")
        lines.append(f"boundary {face_name(f)}: {b.format()}")
        data["boundaries"][face_name(f)] = b.format()
    kb = kernel_basis(n)
    for v in kb:
        zero = boundary(v).is_zero()
        lines.append(f"kernel: {v.format()} ; boundary_zero={'yes' if zero else 'no'}")
        data["kernel"].append(v.format())
    rank_ok = verify_rank(n, kb, trials=3, seed=args.seed)
    lines.append(f"rank: {'full' if rank_ok else 'deficient'} ({len(kb)} vectors)")
    rep = normalization_report(n)
    lines += [f"normalization: {x}" for x in rep.lines()]
    data["rank_ok"] = rank_ok
    data["normalization_consistent"] = rep.consistent
    _emit(args, lines, data, out)
    return EXIT_OK if rank_ok and rep.consistent else EXIT_INTERNAL


COMMANDS = {"matrix": cmd_matrix, "trivial": cmd_trivial, "equal": cmd_equal, "pair": cmd_pair,
            "verify": cmd_verify, "homology": cmd_homology}


def main(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        if getattr(args, "n", None) is not None and args.n < 2:
            raise UsageError("need at least 2 strands")
        return COMMANDS[args.command](args, out)
    except UsageError as exc:
        err.write(f"lkbraid: error: {exc}\n")
        return EXIT_USAGE
    except (AssertionError, DegenerateError) as exc:
        err.write(f"lkbraid: internal check failed: {exc}\n")
        return EXIT_INTERNAL


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
