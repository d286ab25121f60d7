"""
Command-line interface.

Exit codes: 0 success or pass, 1 input error, 2 check or precondition
failure, 3 unknown search result or structural-only verification.
"""

from __future__ import annotations

import argparse
import sys
from typing import Any, Callable, Sequence

from .braid import BraidError, canonical_form, format_braid, parse_braid_text
from .cover import CoverError, build_cover, lift_action, pencil_monodromy_check
from .factorization import (
    BraidFactorization,
    FactorizationError,
    cancel_pair,
    census,
    create_pair,
    global_conjugate,
    hurwitz_move,
    validate,
)
from .induction import structural_only, validate_chain
from .io import (
    InputError,
    dumps,
    factorization_to_dict,
    load_factorization,
    load_linear_system,
    load_theta,
    theta_to_dict,
)
from .report import ValidationReport
from .representation import check_compatibility, conjugated_rep, validate_rep
from .search import SearchBudget, equivalence_search
from .van_kampen import abelianization, presentation_from_factorization, tietze_simplify

EXIT_OK, EXIT_INPUT, EXIT_CHECK, EXIT_UNKNOWN = 0, 1, 2, 3


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # argparse exits 2 by default
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


class _Out:
    def __init__(self, fmt: str) -> None:
        self.fmt = fmt

    def emit(self, obj: Any, text: str) -> None:
        print(dumps(obj) if self.fmt == "json" else text)

    def report(self, report: ValidationReport) -> int:
        self.emit(report.to_dict(), report.to_text())
        return EXIT_OK if report.passed else EXIT_CHECK


def _fact_text(fact: BraidFactorization) -> str:
    lines = [f"d = {fact.d}, {len(fact)} factors"]
    for j, f in enumerate(fact.factors, start=1):
        lines.append(f"  {j}: deg {f.degree:+d}  Q = {format_braid(f.conj) or '1'}")
    return "\n".join(lines)


def _load_fact(args) -> BraidFactorization:
    return load_factorization(args.fact, args.allow_negative_cusps)


def _braid(args, d: int):
    try:
        return parse_braid_text(args.braid, d)
    except BraidError as exc:
        raise InputError(f"--braid: {exc}") from exc


def cmd_validate(args, out: _Out) -> int:
    fact = _load_fact(args)
    report = validate(fact)
    if args.theta:
        theta = load_theta(args.theta)
        report.extend(validate_rep(theta), "theta.")
        report.extend(check_compatibility(theta, fact), "compatibility.")
    return out.report(report)


def cmd_normalize(args, out: _Out) -> int:
    try:
        word = parse_braid_text(args.braid, args.d)
    except BraidError as exc:
        raise InputError(str(exc)) from exc
    canon = canonical_form(word)
    out.emit({"d": canon.d, "braid": list(canon.letters)}, format_braid(canon) or "1")
    return EXIT_OK


def _emit_fact(out: _Out, fact: BraidFactorization) -> int:
    out.emit(factorization_to_dict(fact), _fact_text(fact))
    return EXIT_OK


def cmd_move(args, out: _Out) -> int:
    return _emit_fact(out, hurwitz_move(_load_fact(args), args.index, args.direction))


def cmd_conjugate(args, out: _Out) -> int:
    fact = _load_fact(args)
    q = _braid(args, fact.d)
    result = global_conjugate(fact, q)
    if not args.theta:
        return _emit_fact(out, result)
    theta = conjugated_rep(load_theta(args.theta), q)
    payload = {"factorization": factorization_to_dict(result), "theta": theta_to_dict(theta)}
    out.emit(payload, _fact_text(result) + f"\ntheta o Q_* images: {list(theta.images)}")
    return EXIT_OK


def cmd_cancel(args, out: _Out) -> int:
    return _emit_fact(out, cancel_pair(_load_fact(args), args.index))


def cmd_create(args, out: _Out) -> int:
    fact = _load_fact(args)
    theta = load_theta(args.theta)
    return _emit_fact(out, create_pair(fact, args.index, _braid(args, fact.d), theta))


def cmd_equiv(args, out: _Out) -> int:
    a = load_factorization(args.fact, args.allow_negative_cusps)
    b = load_factorization(args.other, args.allow_negative_cusps)
    theta = load_theta(args.theta) if args.theta else None
    if a.d != b.d:
        raise InputError(f"strand-count mismatch: {a.d} vs {b.d}")
    try:
        budget = SearchBudget(args.max_nodes, args.max_depth)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    result = equivalence_search(a, b, theta, budget, workers=args.workers)
    lines = [result.status]
    lines += [f"  {k}. {m}" for k, m in enumerate(result.script, start=1)]
    out.emit(result.to_dict(), "\n".join(lines))
    return EXIT_OK if result.equivalent else EXIT_UNKNOWN


def cmd_pi1(args, out: _Out) -> int:
    pres = presentation_from_factorization(_load_fact(args), args.mode)
    if not args.no_simplify:
        pres = tietze_simplify(pres)
    out.emit(pres.to_dict(), str(pres))
    return EXIT_OK


def cmd_h1(args, out: _Out) -> int:
    inv = abelianization(presentation_from_factorization(_load_fact(args), args.mode))
    out.emit({"free_rank": inv.free_rank, "torsion": list(inv.torsion), "group": str(inv)}, str(inv))
    return EXIT_OK


def cmd_census(args, out: _Out) -> int:
    counts = census(_load_fact(args))
    out.emit(dict(sorted(counts.items())), ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    return EXIT_OK


def cmd_cover(args, out: _Out) -> int:
    cover = build_cover(load_theta(args.theta))
    d = cover.to_dict()
    out.emit(d, f"g = {d['g']}, boundary_count = {d['boundary_count']}, rank = {d['rank']}")
    return EXIT_OK


def cmd_lift(args, out: _Out) -> int:
    theta = load_theta(args.theta)
    cover = build_cover(theta)
    m = lift_action(cover, _braid(args, theta.d))
    rows = [list(r) for r in m.matrix]
    out.emit({"matrix": rows}, "\n".join(" ".join(f"{x:3d}" for x in r) for r in rows) or "(0x0)")
    return EXIT_OK


def cmd_pencil_check(args, out: _Out) -> int:
    cover = build_cover(load_theta(args.theta))
    return out.report(pencil_monodromy_check(cover, _load_fact(args)))


def cmd_induct_validate(args, out: _Out) -> int:
    data = load_linear_system(args.system)
    report = validate_chain(data, chain_check=not args.no_chain_check)
    code = out.report(report)
    if code == EXIT_OK and structural_only(data):
        return EXIT_UNKNOWN
    return code


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--allow-negative-cusps", action="store_true", help="accept degree -3 factors")

    parser = _Parser(prog="monodromy", description="Braid factorizations, monodromy representations, covers.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, func: Callable, help: str) -> argparse.ArgumentParser:
        p = sub.add_parser(name, parents=[common], help=help)
        p.set_defaults(func=func)
        return p

    p = add("validate", cmd_validate, "check that a factorization multiplies to the full twist")
    p.add_argument("fact")
    p.add_argument("--theta")

    p = add("normalize", cmd_normalize, "canonical form of a braid")
    p.add_argument("braid")
    p.add_argument("--d", type=int)

    p = add("move", cmd_move, "Hurwitz move")
    p.add_argument("fact")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--direction", choices=("forward", "backward"), default="forward")

    p = add("conjugate", cmd_conjugate, "global conjugation")
    p.add_argument("fact")
    p.add_argument("--braid", required=True)
    p.add_argument("--theta")

    p = add("cancel", cmd_cancel, "cancel an inverse node pair")
    p.add_argument("fact")
    p.add_argument("--index", type=int, required=True)

    p = add("create", cmd_create, "create an inverse node pair")
    p.add_argument("fact")
    p.add_argument("--index", type=int, required=True)
    p.add_argument("--braid", required=True)
    p.add_argument("--theta", required=True)

    p = add("equiv", cmd_equiv, "bounded m-equivalence search")
    p.add_argument("fact")
    p.add_argument("other")
    p.add_argument("--theta")
    p.add_argument("--max-nodes", type=int)
    p.add_argument("--max-depth", type=int, default=12)
    p.add_argument("--workers", type=int, default=1)

    for name, func, help in (
        ("pi1", cmd_pi1, "fundamental group presentation"),
        ("h1", cmd_h1, "abelianization of the fundamental group"),
    ):
        p = add(name, func, help)
        p.add_argument("fact")
        p.add_argument("--mode", choices=("affine", "projective"), default="projective")
        if name == "pi1":
            p.add_argument("--no-simplify", action="store_true")

    p = add("census", cmd_census, "count factors by type")
    p.add_argument("fact")

    p = add("cover", cmd_cover, "genus and H1 rank of the branched cover")
    p.add_argument("--theta", required=True)

    p = add("lift", cmd_lift, "action of a liftable braid on H1 of the cover")
    p.add_argument("--theta", required=True)
    p.add_argument("--braid", required=True)

    p = add("pencil-check", cmd_pencil_check, "homological pencil monodromy checks")
    p.add_argument("--theta", required=True)
    p.add_argument("--fact", required=True)

    p = add("induct-validate", cmd_induct_validate, "validate a chain of factorizations")
    p.add_argument("system")
    p.add_argument("--no-chain-check", action="store_true")
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # usage errors and --help
        return exc.code if isinstance(exc.code, int) else EXIT_INPUT
    out = _Out(args.format)
    try:
        return args.func(args, out)
    except (InputError, BraidError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (FactorizationError, CoverError) as exc:
        print(f"failed: {exc}", file=sys.stderr)
        return EXIT_CHECK
