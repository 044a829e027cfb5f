"""Command-line front end: ``borderidx <command> ...``.

Exit codes: 0 success, 2 unreadable or malformed input, 3 invalid order
ideal, 4 a verification or validation check failed.
"""
from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from dataclasses import dataclass, field

from . import io
from .decomposition import (
    Cone,
    check_admissible,
    enlarged_box_decomposition,
    has_polynomial_numerator,
    ind_gf,
    ind_gf_2d,
    validate_partition,
    verify_ind_gf,
)
from .gf import expand
from .index import higher_border, index_table
from .lattice import EmptyOrderIdeal, InvalidOrderIdeal, OrderIdeal, bounding_box
from .pn import LinearWeight, pn_closed, pn_derivative_oracle, pn_series_oracle
from .sampling import random_order_ideal, rng_from_env

EXIT_OK, EXIT_PARSE, EXIT_INVALID, EXIT_VERIFY = 0, 2, 3, 4


class VerificationFailed(Exception):
    pass


@dataclass
class RunReport:
    command: list[str]
    input_digest: str | None = None
    outputs: dict = field(default_factory=dict)
    verdicts: dict = field(default_factory=dict)
    timing_ms: float = 0.0

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "input_digest": self.input_digest,
            "outputs": self.outputs,
            "verdicts": self.verdicts,
            "timing_ms": round(self.timing_ms, 3),
        }


def _digest(path) -> str:
    with open(path, "rb") as fh:
        return "sha256:" + hashlib.sha256(fh.read()).hexdigest()


def _load(args, report: RunReport) -> OrderIdeal:
    report.input_digest = _digest(args.input)
    return io.load_order_ideal(args.input)


def _default_bounds(O: OrderIdeal, extra: int) -> tuple[int, ...]:
    return tuple(m + extra for m in bounding_box(O).corner)


def cmd_index(args, report: RunReport) -> str:
    O = _load(args, report)
    bounds = _parse_bounds(args.bounds or "+5", O)
    table = index_table(O, bounds)
    report.outputs["index_table"] = io.index_table_to_json(table)
    if args.format == "matrix":
        return table.render_matrix()
    return ""


def cmd_border(args, report: RunReport) -> str:
    O = _load(args, report)
    layer = higher_border(O, args.k)
    report.outputs["border"] = {"k": args.k, "points": io.vectors_to_json(layer)}
    report.verdicts["two_methods_agree"] = True
    if args.format == "text":
        return "\n".join(" ".join(map(str, v)) for v in io.vectors_to_json(layer))
    return ""


def cmd_gf(args, report: RunReport) -> str:
    O = _load(args, report)
    if args.method == "2d":
        if O.dim != 2:
            raise io.FormatError("--method 2d needs a two-variable ideal")
        g = ind_gf_2d(_partition_of(O))
    else:
        g = ind_gf(O)
    report.outputs["gf"] = io.gf_to_json(g.gf)
    report.outputs["source"] = g.source
    report.verdicts["clears_denominator_2"] = has_polynomial_numerator(g)
    if args.verify_bounds is not None:
        bounds = _parse_bounds(args.verify_bounds, O)
        res = verify_ind_gf(g, O, bounds)
        report.verdicts["verify"] = {"bounds": list(bounds), "ok": res.ok}
        if not res.ok:
            report.verdicts["verify"].update(
                witness=list(res.witness), expected=res.expected, got=str(io.format_fraction(res.got))
            )
    ok = all(v if isinstance(v, bool) else v["ok"] for v in report.verdicts.values())
    text = io.gf_to_latex(g.gf) if args.format == "latex" else io.gf_to_text(g.gf)
    if not ok:
        raise VerificationFailed(text)
    return text if args.format in ("latex", "text") else ""


def _parse_bounds(text: str, O: OrderIdeal) -> tuple[int, ...]:
    """``"+3"`` means corner + 3 in every coordinate; otherwise ``"a,b,..."``."""
    if text.startswith("+"):
        return _default_bounds(O, int(text[1:]))
    return io.parse_vector(text)


def _partition_of(O: OrderIdeal) -> tuple[int, ...]:
    """Column heights of a two-variable staircase."""
    m = bounding_box(O).corner[0] + 1
    return tuple(sum(1 for a in O.elements if a[0] == col) for col in range(m))


def cmd_pn(args, report: RunReport) -> str:
    a = io.parse_rationals(args.a)
    w = LinearWeight(a, io.parse_fraction(args.b))
    g = pn_closed(w)
    report.outputs["gf"] = io.gf_to_json(g)
    if args.check_bounds is not None:
        bounds = io.parse_vector(args.check_bounds)
        ok = expand(g, bounds) == pn_series_oracle(w, bounds)
        report.verdicts["series_oracle"] = ok
        if all(x.denominator == 1 and x >= 0 for x in list(w.a) + [w.b]):
            report.verdicts["derivative_oracle"] = pn_derivative_oracle(w, bounds) == pn_series_oracle(w, bounds)
        if not all(report.verdicts.values()):
            raise VerificationFailed(io.gf_to_text(g))
    if args.format == "latex":
        return io.gf_to_latex(g)
    if args.format == "text":
        return io.gf_to_text(g)
    return ""


def cmd_decompose(args, report: RunReport) -> str:
    O = _load(args, report)
    if args.check:
        d = io.load_decomposition(args.check, O.dim)
    else:
        d = enlarged_box_decomposition(O)
    report.outputs["decomposition"] = io.decomposition_to_json(d)
    part = validate_partition(d, O)
    report.verdicts["partition"] = {"ok": part.ok, "reason": part.reason, "witness": _plain(part.witness)}
    lines = [f"partition: {'valid' if part.ok else 'INVALID (' + part.reason + ')'}"]
    if part.ok:
        sample = _parse_bounds(args.sample_bounds or "+6", O)
        verdict = check_admissible(d, O, sample)
        report.verdicts["admissibility"] = {"status": verdict.status, "witness": _plain(verdict.witness)}
        lines.append(f"admissibility: {verdict.status}")
        if verdict.witness is not None:
            cone, beta, base, got = verdict.witness
            lines.append(
                f"  witness: cone {cone}, beta {beta}: ind={got}, expected {base}+{sum(beta)}"
            )
    if not part.ok:
        lines.append(f"  witness: {_plain(part.witness)}")
    text = "\n".join(lines)
    if not part.ok or report.verdicts.get("admissibility", {}).get("status") == "falsified":
        raise VerificationFailed(text)
    return text if args.format == "text" else ""


def cmd_verify(args, report: RunReport) -> str:
    """Oracle sweep: GF expansion against the index table."""
    if args.input:
        ideals = [_load(args, report)]
    else:
        rng = rng_from_env(args.seed)
        ideals = [random_order_ideal(rng, rng.randint(1, args.max_dim)) for _ in range(args.count)]
    results = []
    for O in ideals:
        g = ind_gf(O)
        bounds = _default_bounds(O, args.extra)
        res = verify_ind_gf(g, O, bounds)
        ok = res.ok and has_polynomial_numerator(g)
        results.append({"ideal": io.order_ideal_to_json(O), "bounds": list(bounds), "ok": ok})
    report.outputs["cases"] = results
    report.verdicts["all_ok"] = all(r["ok"] for r in results)
    text = f"{sum(r['ok'] for r in results)}/{len(results)} ideals verified"
    if not report.verdicts["all_ok"]:
        raise VerificationFailed(text)
    return text if args.format == "text" else ""


def _plain(obj):
    """JSON-friendly copy of witnesses (tuples, cones, fractions)."""
    if isinstance(obj, Cone):
        return io.cone_to_json(obj)
    if isinstance(obj, (tuple, list)):
        return [_plain(x) for x in obj]
    if hasattr(obj, "numerator") and hasattr(obj, "denominator"):
        return io.format_fraction(obj)
    return obj


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="borderidx", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def with_input(sp):
        sp.add_argument("--input", required=True, help="order ideal JSON file")

    sp = sub.add_parser("index", help="table of the index over a box")
    with_input(sp)
    sp.add_argument("--bounds", help="box corner 'a,b,...' or '+k' (ideal corner + k); default +5")
    sp.add_argument("--format", choices=["matrix", "json"], default="matrix")
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("border", help="k-th border layer")
    with_input(sp)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_border)

    sp = sub.add_parser("gf", help="rational generating function of the index")
    with_input(sp)
    sp.add_argument("--method", choices=["box", "2d"], default="box")
    sp.add_argument(
        "--verify-bounds",
        help="check the expansion against the index table on 'a,b,...' or '+k' (corner + k)",
    )
    sp.add_argument("--format", choices=["text", "json", "latex"], default="text")
    sp.set_defaults(func=cmd_gf)

    sp = sub.add_parser("pn", help="closed form of sum (a.alpha + b) y^alpha")
    sp.add_argument("--a", required=True, help="comma-separated slopes, e.g. 1,1 or 1/2,-3")
    sp.add_argument("--b", required=True, help="offset, integer or p/q")
    sp.add_argument("--check-bounds", help="compare with the series oracles on this box")
    sp.add_argument("--format", choices=["latex", "json", "text"], default="latex")
    sp.set_defaults(func=cmd_pn)

    sp = sub.add_parser("decompose", help="cone decomposition of the complement")
    with_input(sp)
    sp.add_argument("--check", help="decomposition JSON to validate instead of the box decomposition")
    sp.add_argument("--sample-bounds", help="box for sampled admissibility checks, default +6")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_decompose)

    sp = sub.add_parser("verify", help="oracle sweep over random (or given) ideals")
    sp.add_argument("--input", help="verify this ideal only")
    sp.add_argument("--count", type=int, default=20)
    sp.add_argument("--max-dim", type=int, default=4)
    sp.add_argument("--extra", type=int, default=3, help="verify on corner + extra")
    sp.add_argument("--seed", type=int, default=0, help="used when BORDERIDX_SEED is unset")
    sp.add_argument("--format", choices=["text", "json"], default="text")
    sp.set_defaults(func=cmd_verify)
    return p


def main(argv=None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_PARSE if exc.code else EXIT_OK
    report = RunReport(command=["borderidx", *argv])
    start = time.perf_counter()
    code = EXIT_OK
    try:
        text = args.func(args, report)
    except VerificationFailed as exc:
        text, code = str(exc), EXIT_VERIFY
    except (io.FormatError, OSError) as exc:
        print(f"borderidx: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except (InvalidOrderIdeal, EmptyOrderIdeal) as exc:
        witness = getattr(exc, "witness", None)
        print(f"borderidx: invalid order ideal: {exc}" + (f" (witness {witness})" if witness else ""), file=sys.stderr)
        return EXIT_INVALID
    report.timing_ms = (time.perf_counter() - start) * 1000
    if args.format == "json":
        print(json.dumps(report.to_json(), indent=2))
    elif text:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
