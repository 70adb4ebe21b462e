"""Batch front end: census and verification subcommands with machine-readable reports.

Generator indices are 0-based everywhere on the command line and in all
output (``--j 0`` names the first simple generator).  Exit codes: 0 for
success, 1 for a verification failure, 2 for a usage error, 3 when an
enumeration budget is exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from itertools import combinations

from .coxeter import Group, Twist, diagram_automorphisms, flip_twist, identity_twist
from .counts import ReductiveDatum, census, piece_count_poly, variety_count_poly
from .sequences import SSeq, enumerate_pieces, phi, psi, s_to_t, t_to_s
from .flagbrute import (
    GF,
    PartialFlag,
    dl_piece,
    enumerate_lines,
    gl_line_class,
    sp_line_class,
    standard_symplectic,
    type_of_signature,
    weyl_group,
    z_census,
)
from .flagbrute.zvariety import DEFAULT_BUDGET, BudgetExceeded

SCHEMA = "bedard-pieces/1"
BUDGET_ENV = "BEDARD_BUDGET"


class UsageError(Exception):
    """Bad arguments discovered after argparse (unknown type, bad word, ...)."""


# ---------------------------------------------------------------------------
# argument resolution helpers
# ---------------------------------------------------------------------------


def _resolve_group(name: str) -> Group:
    try:
        return Group.from_type(name)
    except ValueError as exc:
        raise UsageError(f"unknown Cartan type {name!r}: {exc}") from exc


def _parse_subset(text: str, rank: int) -> tuple:
    """Parse a comma-separated list of 0-based generator indices.

    The empty set is spelled ``""`` or ``none``.
    """
    text = text.strip()
    if text in ("", "none"):
        return ()
    try:
        indices = tuple(int(part) for part in text.split(","))
    except ValueError as exc:
        raise UsageError(f"bad generator subset {text!r}: {exc}") from exc
    if len(set(indices)) != len(indices):
        raise UsageError(f"bad generator subset {text!r}: repeated index")
    for i in indices:
        if not 0 <= i < rank:
            raise UsageError(
                f"generator index {i} out of range 0..{rank - 1} (indices are 0-based)"
            )
    return tuple(sorted(indices))


def _resolve_twist(group: Group, spec: str) -> Twist:
    if spec == "id":
        return identity_twist(group)
    if spec == "flip":
        try:
            return flip_twist(group)
        except ValueError as exc:
            raise UsageError(str(exc)) from exc
    try:
        images = tuple(int(part) for part in spec.split(","))
    except ValueError as exc:
        raise UsageError(
            f"bad twist {spec!r}: expected 'id', 'flip', or generator images like '1,0'"
        ) from exc
    if sorted(images) != list(range(group.rank)):
        raise UsageError(
            f"bad twist {spec!r}: images must be a permutation of 0..{group.rank - 1}"
        )
    try:
        return Twist(group, tuple(group.generator(i) for i in images))
    except ValueError as exc:
        raise UsageError(f"bad twist {spec!r}: {exc}") from exc


def _twist_json(eps: Twist) -> dict:
    images = [img.word[0] for img in eps.images]
    return {"name": eps.name, "images": images}


def _twist_label(eps: Twist) -> str:
    if eps.name:
        return eps.name
    return ",".join(str(img.word[0]) for img in eps.images)


def _parse_word(group: Group, text: str):
    try:
        return group.parse(text)
    except ValueError as exc:
        raise UsageError(f"bad word {text!r}: {exc}") from exc


def _resolve_budget(args) -> int:
    flag = getattr(args, "budget", None)
    if flag is not None:
        return flag
    env = os.environ.get(BUDGET_ENV)
    if env is not None:
        try:
            return int(env)
        except ValueError as exc:
            raise UsageError(f"bad {BUDGET_ENV}={env!r}: expected an integer") from exc
    return DEFAULT_BUDGET


def _subset_scope(args, rank: int) -> list:
    if getattr(args, "all_j", False):
        return [
            tuple(sub)
            for size in range(rank + 1)
            for sub in combinations(range(rank), size)
        ]
    if args.j is None:
        raise UsageError("one of --j or --all-j is required")
    return [_parse_subset(args.j, rank)]


# ---------------------------------------------------------------------------
# output helpers
# ---------------------------------------------------------------------------


def _json_text(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _table(headers: list, rows: list) -> str:
    widths = [len(h) for h in headers]
    for row in rows:
        for i, cell in enumerate(row):
            widths[i] = max(widths[i], len(cell))
    lines = ["  ".join(h.ljust(widths[i]) for i, h in enumerate(headers)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(widths[i]) for i, c in enumerate(row)).rstrip())
    return "\n".join(lines) + "\n"


def _emit(text: str, out_path) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)


def _fmt_subset(J) -> str:
    return "[" + ",".join(str(i) for i in sorted(J)) + "]"


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_group(args) -> int:
    group = _resolve_group(args.type)
    longest = group.longest
    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "group",
            "type": group.name,
            "rank": group.rank,
            "order": group.order,
            "longest": str(longest),
            "longest_length": longest.length,
        }
        text = _json_text(payload)
    else:
        text = (
            f"type: {group.name}\n"
            f"generators: {group.rank} (0-based indices 0..{group.rank - 1})\n"
            f"order: {group.order}\n"
            f"longest element: {longest} (length {longest.length})\n"
        )
    _emit(text, args.out)
    return 0


def _pieces_csv(result, q) -> str:
    buffer = io.StringIO()
    headers = ["w", "J_inf", "N_t", "m_t", "dim", "count_poly"]
    if q is not None:
        headers.append("count_at_q")
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(headers)
    for row in result.rows:
        record = [
            str(row.key.w),
            " ".join(str(i) for i in sorted(row.key.j_inf)),
            str(row.n_t),
            str(row.m_t),
            str(row.dim),
            str(row.count),
        ]
        if q is not None:
            record.append(str(row.count(q)))
        writer.writerow(record)
    return buffer.getvalue()


def _cmd_pieces(args) -> int:
    group = _resolve_group(args.type)
    J = _parse_subset(args.j, group.rank)
    eps = _resolve_twist(group, args.twist)
    rank = args.rank if args.rank is not None else group.rank
    if rank < group.rank:
        raise UsageError(
            f"--rank {rank} is too small: needs at least {group.rank} for type {group.name}"
        )
    datum = ReductiveDatum(group, rank)
    result = census(J, eps, datum)
    q = args.q

    if args.format == "json":
        payload = {
            "schema": SCHEMA,
            "command": "pieces",
            "type": group.name,
            "J": sorted(J),
            "twist": _twist_json(eps),
            "rank": rank,
            "q": q,
            "rows": [row.to_json_dict(q) for row in result.rows],
            "pieces_total": result.total.to_list(),
            "variety_total": result.expected_total.to_list(),
            "sum_identity": result.sum_identity,
            "dim_bound": result.dim_bound,
            "has_dense_piece": result.has_dense_piece,
            "ok": result.ok,
        }
        text = _json_text(payload)
    elif args.format == "csv":
        text = _pieces_csv(result, q)
    else:
        headers = ["w", "J_inf", "N_t", "m_t", "dim", "count_poly"]
        if q is not None:
            headers.append(f"count@q={q}")
        body = []
        for row in result.rows:
            record = [
                str(row.key.w),
                _fmt_subset(row.key.j_inf),
                str(row.n_t),
                str(row.m_t),
                str(row.dim),
                str(row.count),
            ]
            if q is not None:
                record.append(str(row.count(q)))
            body.append(record)
        text = _table(headers, body)
        if result.sum_identity:
            text += f"sum check: PASS (total = {result.total})\n"
        else:
            text += (
                "sum check: FAIL\n"
                f"  sum of pieces: {result.total}\n"
                f"  whole variety: {result.expected_total}\n"
            )
        if q is not None:
            text += f"sum at q={q}: {result.total(q)}\n"
    _emit(text, args.out)
    return 0 if result.ok else 1


def _trace_payload(group, J, eps, s, t) -> dict:
    w = phi(s)
    return {
        "schema": SCHEMA,
        "command": "bedard",
        "type": group.name,
        "J": sorted(J),
        "twist": _twist_json(eps),
        "w": str(w),
        "length": w.length,
        "sseq": s.to_json_dict(),
        "tseq": t.to_json_dict(),
    }


def _trace_table(group, J, eps, s, t) -> str:
    w = phi(s)
    lines = [
        f"type {group.name}, J = {_fmt_subset(J)}, twist = {_twist_label(eps)}",
        f"w = {w if w.length else 'e'} (length {w.length})",
    ]
    s_json = s.to_json_dict()
    t_json = t.to_json_dict()
    for n, (s_step, t_step) in enumerate(zip(s_json["steps"], t_json["steps"])):
        lines.append(
            f"step {n}: J_{n} = {_fmt_subset(s_step['J'])}"
            f"  eps(J_{n}) = {_fmt_subset(s_step['Jp'])}"
            f"  u_{n} = {s_step['u'] or 'e'}"
            f"  w_{n} = {t_step['w'] or 'e'}"
        )
    j_inf = s_json["steps"][-1]["J"] if s_json["steps"] else sorted(J)
    lines.append(f"stabilized: J_inf = {_fmt_subset(j_inf)}")
    return "\n".join(lines) + "\n"


def _cmd_bedard(args) -> int:
    group = _resolve_group(args.type)
    J = _parse_subset(args.j, group.rank)
    eps = _resolve_twist(group, args.twist)

    if args.mode == "psi":
        w = _parse_word(group, args.w)
        try:
            s = psi(w, J, eps)
        except ValueError as exc:
            raise UsageError(f"psi rejected w = {args.w!r}: {exc}") from exc
        t = s_to_t(s)
        roundtrip_ok = phi(s) == w
    else:  # phi
        if args.steps is not None:
            try:
                raw = json.loads(args.steps)
                steps = [
                    (
                        tuple(step["J"]),
                        tuple(step["Jp"]),
                        _parse_word(group, step["u"]),
                    )
                    for step in raw
                ]
                s = SSeq.make(group, eps, J, steps)
            except (KeyError, TypeError, ValueError, json.JSONDecodeError) as exc:
                raise UsageError(f"bad --steps: {exc}") from exc
        else:
            w_in = _parse_word(group, args.w)
            try:
                s = psi(w_in, J, eps)
            except ValueError as exc:
                raise UsageError(f"psi rejected w = {args.w!r}: {exc}") from exc
        t = s_to_t(s)
        w = phi(s)
        roundtrip_ok = (not s.stabilized) or psi(w, J, eps) == s

    if args.format == "json":
        payload = _trace_payload(group, J, eps, s, t)
        payload["roundtrip_ok"] = roundtrip_ok
        text = _json_text(payload)
    else:
        text = _trace_table(group, J, eps, s, t)
        text += f"roundtrip: {'OK' if roundtrip_ok else 'FAIL'}\n"
    _emit(text, args.out)
    return 0 if roundtrip_ok else 1


def _verify_twists(group: Group, spec) -> list:
    if spec is not None:
        return [_resolve_twist(group, spec)]
    return list(diagram_automorphisms(group))


def _cmd_verify(args) -> int:
    group = _resolve_group(args.type)
    subsets = _subset_scope(args, group.rank)
    lines = []
    failures = 0
    checks = 0

    if args.mode == "euler":
        twists = _verify_twists(group, args.twist)
        for J in subsets:
            for eps in twists:
                n_pieces = len(enumerate_pieces(group, J, eps))
                n_cosets = len(group.enumerate_min_reps((), J))
                ok = n_pieces == n_cosets
                checks += 1
                failures += not ok
                lines.append(
                    f"euler {group.name} J={_fmt_subset(J)} twist={_twist_label(eps)}: "
                    f"pieces {n_pieces}, |W^J| {n_cosets} -> {'PASS' if ok else 'FAIL'}"
                )
    elif args.mode == "sum":
        twists = (
            [_resolve_twist(group, args.twist)]
            if args.twist is not None
            else [identity_twist(group)]
        )
        rank = args.rank if args.rank is not None else group.rank
        datum = ReductiveDatum(group, rank)
        for J in subsets:
            for eps in twists:
                result = census(J, eps, datum)
                ok = result.sum_identity
                checks += 1
                failures += not ok
                lines.append(
                    f"sum {group.name} J={_fmt_subset(J)} twist={_twist_label(eps)} "
                    f"rank={rank}: {'PASS' if ok else 'FAIL'}"
                )
                if not ok:
                    lines.append(f"  sum of pieces: {result.total}")
                    lines.append(f"  whole variety: {result.expected_total}")
    else:  # roundtrip
        twists = _verify_twists(group, args.twist)
        for J in subsets:
            for eps in twists:
                K = tuple(sorted(eps.on_subset(J)))
                bad = []
                for w in group.enumerate_min_reps(K, ()):
                    s = psi(w, J, eps)
                    if phi(s) != w:
                        bad.append(f"phi(psi({w})) != {w}")
                    t = s_to_t(s)
                    if t_to_s(t) != s:
                        bad.append(f"t_to_s(s_to_t(psi({w}))) != psi({w})")
                    checks += 1
                failures += len(bad)
                lines.append(
                    f"roundtrip {group.name} J={_fmt_subset(J)} "
                    f"twist={_twist_label(eps)}: {'PASS' if not bad else 'FAIL'}"
                )
                lines.extend(f"  {msg}" for msg in bad)

    verdict = "PASS" if failures == 0 else "FAIL"
    lines.append(f"verify {args.mode}: {verdict} ({checks} checks)")
    _emit("\n".join(lines) + "\n", args.out)
    return 0 if failures == 0 else 1


def _cmd_oracle_z_census(args) -> int:
    budget = _resolve_budget(args)
    if args.n < 2:
        raise UsageError(f"--n {args.n}: need n >= 2")
    J = _parse_subset(args.j, args.n - 1)
    result = z_census(args.n, args.q, J, budget=budget)

    payload = {"schema": SCHEMA, "command": "oracle-z-census"}
    payload.update(result.to_json_dict())
    compare_pass = True

    if args.compare:
        group = weyl_group(args.n)
        eps = identity_twist(group)
        datum = ReductiveDatum(group, args.n)
        counts = result.counts_by_key()
        rows = []
        for key in enumerate_pieces(group, J, eps):
            expected = piece_count_poly(key, eps, datum)(args.q)
            observed = counts.get(key, 0)
            rows.append(
                {
                    "w": str(key.w),
                    "expected": expected,
                    "observed": observed,
                    "match": expected == observed,
                }
            )
        expected_total = variety_count_poly(J, datum)(args.q)
        compare = {
            "rows": rows,
            "expected_total": expected_total,
            "total_match": expected_total == result.total,
            "piece_set_match": result.observed_matches,
        }
        compare["pass"] = (
            all(row["match"] for row in rows)
            and compare["total_match"]
            and compare["piece_set_match"]
        )
        compare_pass = compare["pass"]
        payload["compare"] = compare

    if args.format == "table":
        lines = [
            f"n={args.n} q={args.q} J={_fmt_subset(J)}",
            f"total: {payload['total']}",
        ]
        for piece in payload["pieces"]:
            lines.append(f"w='{piece['w']}' count={piece['count']}")
        if args.compare:
            for row in payload["compare"]["rows"]:
                lines.append(
                    f"w='{row['w']}' expected {row['expected']} observed "
                    f"{row['observed']} -> {'OK' if row['match'] else 'MISMATCH'}"
                )
            lines.append(f"compare: {'PASS' if compare_pass else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(payload)
    _emit(text, args.out)
    return 0 if compare_pass else 1


def _cmd_oracle_lines(args) -> int:
    budget = _resolve_budget(args)
    if args.n < 2 or args.q < 2 or args.m < 1:
        raise UsageError("need --n >= 2, --q >= 2, --m >= 1")
    size = args.q ** args.m
    n_lines = (size ** args.n - 1) // (size - 1)
    if n_lines > budget or size * size > budget:
        raise BudgetExceeded(
            f"lines oracle needs {n_lines} lines over a field of size {size} "
            f"(budget {budget})"
        )
    field = GF(size)
    group = weyl_group(args.n)
    J = type_of_signature(args.n, (1,))
    keys = list(enumerate_pieces(group, J, identity_twist(group)))
    index_of = {key.steps: i for i, key in enumerate(keys)}

    tally = {}
    mismatches = []
    for line in enumerate_lines(field, args.n):
        j = gl_line_class(line, args.q)
        tally[j] = tally.get(j, 0) + 1
        if args.compare:
            t = dl_piece(PartialFlag(field, args.n, (line,)), args.q)
            if index_of.get(t.steps) != j - 1:
                mismatches.append(
                    {"line": [list(row) for row in line.rows], "class": j}
                )

    payload = {
        "schema": SCHEMA,
        "command": "oracle-lines",
        "n": args.n,
        "q": args.q,
        "m": args.m,
        "line_count": n_lines,
        "classes": [
            {"class": j, "count": tally[j]} for j in sorted(tally)
        ],
    }
    compare_pass = True
    if args.compare:
        compare_pass = not mismatches
        payload["compare"] = {
            "dictionary_match": compare_pass,
            "mismatches": mismatches,
            "observed_classes": sorted(tally),
            "pass": compare_pass,
        }
    if args.format == "table":
        lines = [f"n={args.n} q={args.q} m={args.m}: {n_lines} lines"]
        for j in sorted(tally):
            lines.append(f"class {j}: {tally[j]}")
        if args.compare:
            lines.append(f"compare: {'PASS' if compare_pass else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(payload)
    _emit(text, args.out)
    return 0 if compare_pass else 1


def _sp_tag(tag) -> str:
    kind, index = tag
    return f"{kind}_{index}"


def _cmd_oracle_sp_lines(args) -> int:
    budget = _resolve_budget(args)
    if args.q < 2 or args.m < 1 or args.half < 1:
        raise UsageError("need --q >= 2, --m >= 1, --half >= 1")
    size = args.q ** args.m
    dim = 2 * args.half
    n_lines = (size ** dim - 1) // (size - 1)
    if n_lines > budget or size * size > budget:
        raise BudgetExceeded(
            f"symplectic lines oracle needs {n_lines} lines over a field of size "
            f"{size} (budget {budget})"
        )
    field = GF(size)
    space = standard_symplectic(field, args.half)

    tally = {}
    for line in enumerate_lines(field, dim):
        tag = sp_line_class(line, space, args.q)
        tally[tag] = tally.get(tag, 0) + 1

    order = sorted(tally, key=lambda tag: (tag[0], tag[1]))
    payload = {
        "schema": SCHEMA,
        "command": "oracle-sp-lines",
        "q": args.q,
        "m": args.m,
        "half": args.half,
        "dim": dim,
        "line_count": n_lines,
        "classes": [{"tag": _sp_tag(tag), "count": tally[tag]} for tag in order],
    }
    compare_pass = True
    if args.compare:
        admissible = {("X", d) for d in range(1, args.half + 1)} | {
            ("X'", j) for j in range(1, args.half + 1)
        }
        partition_ok = sum(tally.values()) == n_lines
        tags_ok = set(tally) <= admissible
        compare_pass = partition_ok and tags_ok
        payload["compare"] = {
            "partition": partition_ok,
            "tags_admissible": tags_ok,
            "admissible": sorted(_sp_tag(tag) for tag in admissible),
            "pass": compare_pass,
        }
    if args.format == "table":
        lines = [f"q={args.q} m={args.m} dim={dim}: {n_lines} lines"]
        for tag in order:
            lines.append(f"{_sp_tag(tag)}: {tally[tag]}")
        if args.compare:
            lines.append(f"compare: {'PASS' if compare_pass else 'FAIL'}")
        text = "\n".join(lines) + "\n"
    else:
        text = _json_text(payload)
    _emit(text, args.out)
    return 0 if compare_pass else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_common(parser, *, twist_default="id") -> None:
    parser.add_argument("--type", required=True, help="Cartan type, e.g. A2, B3, A2xA1")
    parser.add_argument(
        "--twist",
        default=twist_default,
        help="'id', 'flip' (unique nontrivial diagram automorphism), or "
        "explicit generator images like '1,0' (0-based)",
    )
    parser.add_argument("--out", default=None, help="write output to PATH (default stdout)")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bedard-pieces",
        description="Census and verification commands for piece decompositions. "
        "Generator indices are 0-based everywhere.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_group = sub.add_parser("group", help="print basic data for a Coxeter group")
    p_group.add_argument("--type", required=True)
    p_group.add_argument("--format", choices=("table", "json"), default="table")
    p_group.add_argument("--out", default=None)
    p_group.set_defaults(func=_cmd_group)

    p_pieces = sub.add_parser("pieces", help="piece census with dimensions and count polynomials")
    _add_common(p_pieces)
    p_pieces.add_argument("--j", required=True, help="comma-separated 0-based indices ('' for empty)")
    p_pieces.add_argument("--rank", type=int, default=None, help="torus rank (default: semisimple rank)")
    p_pieces.add_argument("--q", type=int, default=None, help="also evaluate counts at q")
    p_pieces.add_argument("--format", choices=("table", "json", "csv"), default="table")
    p_pieces.set_defaults(func=_cmd_pieces)

    p_bedard = sub.add_parser("bedard", help="sequence construction traces")
    bedard_sub = p_bedard.add_subparsers(dest="mode", required=True)
    for mode in ("psi", "phi"):
        p_mode = bedard_sub.add_parser(
            mode,
            help="minimal-coset element -> sequence" if mode == "psi" else "sequence -> element",
        )
        _add_common(p_mode)
        p_mode.add_argument("--j", required=True)
        p_mode.add_argument("--format", choices=("table", "json"), default="table")
        if mode == "psi":
            p_mode.add_argument("--w", required=True, help="word in 0-based generator indices, e.g. '1 0'")
        else:
            src = p_mode.add_mutually_exclusive_group(required=True)
            src.add_argument("--steps", help='JSON list of steps [{"J":[...],"Jp":[...],"u":"word"},...]')
            src.add_argument("--w", help="shortcut: build the sequence from a word first")
        p_mode.set_defaults(func=_cmd_bedard, mode=mode)

    p_verify = sub.add_parser("verify", help="identity checks with PASS/FAIL report")
    verify_sub = p_verify.add_subparsers(dest="mode", required=True)
    for mode, blurb in (
        ("sum", "sum of piece count polynomials equals the whole-variety polynomial"),
        ("euler", "number of pieces equals the number of minimal coset representatives"),
        ("roundtrip", "sequence constructions invert each other"),
    ):
        p_mode = verify_sub.add_parser(mode, help=blurb)
        p_mode.add_argument("--type", required=True)
        p_mode.add_argument("--j", default=None, help="comma-separated 0-based indices")
        p_mode.add_argument("--all-j", action="store_true", help="sweep every subset")
        p_mode.add_argument("--twist", default=None, help="restrict to one twist (default: all diagram automorphisms)")
        if mode == "sum":
            p_mode.add_argument("--rank", type=int, default=None)
        p_mode.add_argument("--out", default=None)
        p_mode.set_defaults(func=_cmd_verify, mode=mode)

    p_oracle = sub.add_parser("oracle", help="brute-force finite-field enumerations")
    oracle_sub = p_oracle.add_subparsers(dest="mode", required=True)

    p_zc = oracle_sub.add_parser("z-census", help="enumerate variety points over F_q and tally pieces")
    p_zc.add_argument("--n", type=int, required=True)
    p_zc.add_argument("--q", type=int, required=True)
    p_zc.add_argument("--j", required=True, help="comma-separated 0-based indices ('' for empty)")
    p_zc.add_argument("--compare", action="store_true", help="check tallies against count polynomials")
    p_zc.add_argument("--budget", type=int, default=None, help=f"enumeration cap (default {DEFAULT_BUDGET}; env {BUDGET_ENV})")
    p_zc.add_argument("--format", choices=("json", "table"), default="json")
    p_zc.add_argument("--out", default=None)
    p_zc.set_defaults(func=_cmd_oracle_z_census)

    p_ln = oracle_sub.add_parser("lines", help="classify lines over an extension field")
    p_ln.add_argument("--n", type=int, required=True)
    p_ln.add_argument("--q", type=int, required=True)
    p_ln.add_argument("--m", type=int, required=True, help="extension degree")
    p_ln.add_argument("--compare", action="store_true", help="check the class-to-piece dictionary")
    p_ln.add_argument("--budget", type=int, default=None)
    p_ln.add_argument("--format", choices=("json", "table"), default="json")
    p_ln.add_argument("--out", default=None)
    p_ln.set_defaults(func=_cmd_oracle_lines)

    p_sp = oracle_sub.add_parser("sp-lines", help="classify lines of a symplectic space")
    p_sp.add_argument("--q", type=int, required=True)
    p_sp.add_argument("--m", type=int, required=True, help="extension degree")
    p_sp.add_argument("--half", type=int, default=2, help="half the dimension (default 2)")
    p_sp.add_argument("--compare", action="store_true", help="check partition and admissible tags")
    p_sp.add_argument("--budget", type=int, default=None)
    p_sp.add_argument("--format", choices=("json", "table"), default="json")
    p_sp.add_argument("--out", default=None)
    p_sp.set_defaults(func=_cmd_oracle_sp_lines)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
