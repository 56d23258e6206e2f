"""Command-line front end: orbit tables, frequency tables, censuses,
orbit boards and verification sweeps.

Exit codes: 0 success (or every check passed), 1 a check failed, 2 usage
error.  Progress goes to stderr; stdout carries only the report.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import string
import sys
from functools import lru_cache
from typing import Any

from . import __version__
from .bitword import necklace_period, one_run_encoding, parse_word
from .encoding import MAX_CENSUS_N, decompose_space, encode, encode_bits
from .grot import orbit
from .orbitstats import frequency_table, left_multiset, right_multiset
from .toggle import MAX_TOGGLE_N, ToggleWord, decompose_X, decompose_Z, find_snakes, orbit_board, tilde_bits
from .verify import EXPERIMENTAL, SCOPES, RHO_SCOPES, run_sweep

SNAKE_LABELS = string.ascii_lowercase + string.ascii_uppercase + string.digits


class UsageError(Exception):
    pass


def parse_range(text: str) -> list[int]:
    """'7' -> [7]; '1..12' -> [1, ..., 12]."""
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            lo, hi = int(lo), int(hi)
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; use N or LO..HI") from None
    if lo > hi:
        raise UsageError(f"empty range {text!r}")
    return list(range(lo, hi + 1))


def _digits(seq) -> str:
    return "".join(map(str, seq))


def _render_table(header: list[str], rows: list[list[Any]]) -> str:
    cells = [header] + [[str(c) for c in r] for r in rows]
    widths = [max(len(r[i]) for r in cells) for i in range(len(header))]
    lines = ["  ".join(c.rjust(w) for c, w in zip(r, widths)).rstrip() for r in cells]
    lines.insert(1, "  ".join("-" * w for w in widths))
    return "\n".join(lines) + "\n"


def _render_csv(header: list[str], rows: list[list[Any]]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    return buf.getvalue()


def dump_json(doc: dict) -> str:
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"


def _doc(command: str, params: dict, totals: dict, **body) -> dict:
    params = dict(params, version=__version__)
    return {"command": command, "params": params, "totals": totals, **body}


# -- subcommands ------------------------------------------------------------

def cmd_orbit(args) -> tuple[str, int]:
    w = parse_word(args.word)
    m = args.m
    orb = orbit(w, m)
    header = ["k", "word"]
    rows: list[list[Any]] = []
    for k, u in enumerate(orb):
        row: list[Any] = [k, str(u)]
        if args.encoding:
            pair = encode(u, m)
            row += [_digits(one_run_encoding(u)), pair.rw_str(), _digits(pair.qw), pair.bqw_str()]
        rows.append(row)
    if args.encoding:
        header += ["ore", "rw", "qw", "bqw"]
    params = {"word": str(w), "m": m, "encoding": bool(args.encoding)}
    if args.format == "json":
        doc = _doc("orbit", params, {"p": orb.p}, rows=[dict(zip(header, r)) for r in rows])
        return dump_json(doc), 0
    if args.format == "csv":
        return _render_csv(header, rows), 0
    return _render_table(header, rows) + f"orbit size {orb.p}\n", 0


def cmd_freq(args) -> tuple[str, int]:
    w = parse_word(args.word)
    m = args.m
    params = {"word": str(w), "m": m, "right": bool(args.right)}
    if args.j is not None:
        side = right_multiset if args.right else left_multiset
        ms = side(w, m, args.j)
        params["j"] = args.j
        rows = [[v, c] for v, c in ms.counts.items()]
        header = ["s", "count"]
        if args.format == "json":
            doc = _doc("freq", params, {"size": len(ms)}, rows=[dict(zip(header, r)) for r in rows])
            return dump_json(doc), 0
        if args.format == "csv":
            return _render_csv(header, rows), 0
        return _render_table(header, rows), 0
    table = frequency_table(w, m, right=args.right)
    n = len(w)
    header = ["s\\j"] + [str(j) for j in range(n + 1)]
    rows = [[s] + table[s].tolist() for s in range(table.shape[0])]
    if args.format == "json":
        doc = _doc("freq", params, {"p": int(table[:, 0].sum())},
                   rows=[{"s": s, "counts": table[s].tolist()} for s in range(table.shape[0])])
        return dump_json(doc), 0
    if args.format == "csv":
        return _render_csv(["s"] + header[1:], rows), 0
    return _render_table(header, rows), 0


def _decompose_rows(args):
    cap = args.seed_cap
    if args.space == "rho":
        if args.n is None:
            raise UsageError("decompose --space rho needs --n")
        n = args.n
        census = decompose_space(n, args.m, cap=cap or MAX_CENSUS_N)
        header = ["k", "w", "bqw", "rw", "s", "t", "period"]
        rows = []
        for rep, size in census:
            pair = encode_bits(rep.bits, args.m)
            s = necklace_period(pair.rw)
            t = necklace_period(pair.bqw)
            rows.append([pair.k, str(rep), pair.bqw_str(), pair.rw_str(), s, t, size])
        return {"n": n}, header, rows, {"orbits": len(rows), "words": sum(r[-1] for r in rows)}
    N = args.N if args.N is not None else args.n
    if N is None:
        raise UsageError(f"decompose --space {args.space} needs --N (or --n)")
    if args.space == "toggle":
        table = decompose_X(N, args.m, cap=cap or MAX_TOGGLE_N)
        header = ["S", "tilde", "bqw", "rw", "period"]
        rows = [[str(r.representative), r.tilde_base, r.bqw, r.rw, r.period] for r in table]
    else:
        table = decompose_Z(N, args.m, cap=cap or MAX_TOGGLE_N)
        header = ["z", "period"]
        rows = [[str(z), q] for z, q in table]
    return {"N": N}, header, rows, {"orbits": len(rows), "words": sum(r[-1] for r in rows)}


def cmd_decompose(args) -> tuple[str, int]:
    size, header, rows, totals = _decompose_rows(args)
    params = {"m": args.m, "space": args.space, **size}
    if args.format == "json":
        doc = _doc("decompose", params, totals, rows=[dict(zip(header, r)) for r in rows])
        if args.space == "z":
            doc["experimental"] = True
        return dump_json(doc), 0
    if args.format == "csv":
        return _render_csv(header, rows), 0
    text = _render_table(header, rows)
    return text + f"{totals['orbits']} orbits, {totals['words']} words\n", 0


def cmd_board(args) -> tuple[str, int]:
    S = ToggleWord(parse_word(args.word), args.m)
    board = orbit_board(S)
    snakes = find_snakes(board) if len(S) >= 2 else []
    grid = [["." if not v else "#" for v in row] for row in board.rows.tolist()]
    for idx, snake in enumerate(snakes):
        label = SNAKE_LABELS[idx % len(SNAKE_LABELS)]
        for r, j in snake.cells:
            grid[r][j] = label
    lines = ["".join(row) for row in grid]
    comps = [_digits(s.composition) if args.m + 1 < 10 else " ".join(map(str, s.composition))
             for s in snakes]
    params = {"word": str(S), "m": args.m}
    totals = {"q": board.q, "snakes": len(snakes), "column_sums": board.column_sums().tolist()}
    if args.format == "json":
        doc = _doc(
            "board", params, totals,
            rows=board.row_words(),
            snakes=[{
                "label": SNAKE_LABELS[i % len(SNAKE_LABELS)],
                "start_row": s.start_row,
                "composition": list(s.composition),
                "tilde": _digits(tilde_bits(s.composition, args.m)),
            } for i, s in enumerate(snakes)],
        )
        return dump_json(doc), 0
    if args.format == "csv":
        header = ["row", "word", "snakes"]
        rows = [[i, board.row_words()[i], lines[i]] for i in range(board.q)]
        return _render_csv(header, rows), 0
    out = [f"{i:>3}  {line}" for i, line in enumerate(lines)]
    out.append("sums " + " ".join(map(str, totals["column_sums"])))
    for i, (s, c) in enumerate(zip(snakes, comps)):
        label = SNAKE_LABELS[i % len(SNAKE_LABELS)]
        out.append(f"{label}: row {s.start_row}  {c}  {_digits(tilde_bits(s.composition, args.m))}")
    return "\n".join(out) + "\n", 0


def cmd_verify(args) -> tuple[str, int]:
    scope = args.scope
    ms = parse_range(args.m_range or "1..4")
    if scope in RHO_SCOPES:
        sizes = parse_range(args.n_range or "1..12")
    else:
        sizes = parse_range(args.N_range or args.n_range or "1..12")

    def progress(msg):
        print(msg, file=sys.stderr, flush=True)

    result = run_sweep(scope, sizes, ms, progress=None if args.quiet else progress, cap=args.seed_cap)
    code = 0 if result.passed else 1
    verdicts = [{"report": f.name, "params": f.params,
                 "failures": [v.to_dict() for v in f.failures()]} for f in result.failures]
    totals = {"checked": result.checked, "failed": len(result.failures)}
    params = {"scope": scope, "sizes": [sizes[0], sizes[-1]], "m": [ms[0], ms[-1]]}
    tag = "EXPERIMENTAL " if scope in EXPERIMENTAL else ""
    if args.format == "json":
        doc = _doc("verify", params, totals, verdicts=verdicts,
                   passed=result.passed, experimental=scope in EXPERIMENTAL)
        return dump_json(doc), code
    if args.format == "csv":
        rows = [[f.name, json.dumps(f.params, sort_keys=True), v.label,
                 json.dumps(v.witness, sort_keys=True)]
                for f in result.failures for v in f.failures()]
        return _render_csv(["report", "params", "label", "witness"], rows), code
    status = "PASS" if result.passed else "FAIL"
    lines = [f"{tag}{scope}: {status} ({result.checked} checked, {len(result.failures)} failed)"]
    for f in result.failures[:20]:
        first = f.failures()[0]
        lines.append(f"  {json.dumps(f.params, sort_keys=True)} {first.label} "
                     f"{json.dumps(first.witness, sort_keys=True)}")
    if len(result.failures) > 20:
        lines.append(f"  ... {len(result.failures) - 20} more")
    if tag:
        lines.append("  (conjectured statement: this is evidence, not a proof)")
    return "\n".join(lines) + "\n", code


# -- parser -----------------------------------------------------------------

@lru_cache(maxsize=None)
def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="genrot", description="Generalized rotation of bit strings and toggle dynamics."
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--format", choices=("text", "json", "csv"), default="text")

    p = sub.add_parser("orbit", help="rho-orbit of a word")
    p.add_argument("word")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--encoding", action="store_true", help="add ore/rw/qw/bqw columns")
    common(p)
    p.set_defaults(func=cmd_orbit)

    p = sub.add_parser("freq", help="frequency table of cumulative sums")
    p.add_argument("word")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--right", action="store_true", help="use right cumulative sums")
    p.add_argument("--j", type=int, help="show only the multiset for this j")
    common(p)
    p.set_defaults(func=cmd_freq)

    p = sub.add_parser("decompose", help="orbit census of {0,1}^n, X_N or Z_N")
    p.add_argument("--n", type=int)
    p.add_argument("--N", type=int)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--space", choices=("rho", "toggle", "z"), default="rho")
    p.add_argument("--seed-cap", type=int, help="raise the size cap (explicit override)")
    common(p)
    p.set_defaults(func=cmd_decompose)

    p = sub.add_parser("board", help="phi-orbit board with its snakes")
    p.add_argument("word")
    p.add_argument("--m", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_board)

    p = sub.add_parser("verify", help="exhaustive verification sweep")
    p.add_argument("scope", choices=SCOPES)
    p.add_argument("--n", dest="n_range", help="word lengths, e.g. 1..12")
    p.add_argument("--N", dest="N_range", help="board widths, e.g. 1..14")
    p.add_argument("--m", dest="m_range", help="m values, e.g. 1..4")
    p.add_argument("--seed-cap", type=int, help="raise the size cap (explicit override)")
    p.add_argument("--quiet", action="store_true", help="no progress on stderr")
    common(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        out, code = args.func(args)
    except (UsageError, ValueError) as exc:
        print(f"genrot {args.command}: error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(out)
    return code


if __name__ == "__main__":
    sys.exit(main())
