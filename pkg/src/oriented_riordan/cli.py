"""Command-line front end.

Exit codes:
    0  success
    2  bad arguments or unparsable series literal
    3  invariant violation (e.g. f(0) != 0, improper pair, order too small)
    4  enumeration budget exceeded
    5  internal consistency check failed
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from dataclasses import dataclass

from . import series as ps
from .bell import i1_report
from .classify import classification_csv, classify_up_to, kn1_report
from .graph import (
    BudgetExceeded,
    count_formula,
    enumerate_all,
    format_text,
    from_dot,
    from_json,
    graph_from_skew,
    skew_from_pair,
    to_dot,
    to_json,
)
from .riordan import RiordanPair, a_sequence
from .structure import a_gap, check_fractal, cognate_set, decompose, fractal_parameters

EXIT_OK = 0
EXIT_PARSE = 2
EXIT_INVARIANT = 3
EXIT_BUDGET = 4
EXIT_CONSISTENCY = 5

COMMANDS = ("build", "decompose", "fractal", "aseq", "i1", "enumerate", "classify", "cognate")
FORMATS = ("json", "dot", "csv", "text")


class ParseFailure(Exception):
    pass


class ConsistencyFailure(Exception):
    pass


@dataclass
class RunConfig:
    command: str
    g: str = "pascal-g"
    f: str = "pascal-f"
    n: int = 13
    p: int = 3
    output: str | None = None
    format: str | None = None
    budget: int | None = None
    workers: int = 1
    length: int = 6
    strict_gap: bool = False
    i: int | None = None
    j: int | None = None
    s: int | None = None
    k: int | None = None
    alpha: int | None = None
    kn1: bool = False

    def __post_init__(self):
        if self.command not in COMMANDS:
            raise ParseFailure(f"unknown command {self.command!r}")
        if self.format is not None and self.format not in FORMATS:
            raise ParseFailure(f"unknown format {self.format!r}")
        try:
            ps.check_prime(self.p)
        except ValueError as exc:
            raise ParseFailure(str(exc)) from None
        if self.n < 1:
            raise ParseFailure("--n must be >= 1")
        if self.budget is not None and self.budget < 0:
            raise ParseFailure("--budget must be >= 0")
        if self.workers < 1:
            raise ParseFailure("--workers must be >= 1")


def _pair(cfg: RunConfig, order: int) -> RiordanPair:
    try:
        g = ps.parse_series(cfg.g, cfg.p, order)
        f = ps.parse_series(cfg.f, cfg.p, order)
    except ValueError as exc:
        raise ParseFailure(str(exc)) from None
    return RiordanPair(g, f)


def _fmt(cfg: RunConfig, default: str, allowed: tuple[str, ...]) -> str:
    fmt = cfg.format or default
    if fmt not in allowed:
        raise ParseFailure(f"{cfg.command} supports formats {', '.join(allowed)}, not {fmt}")
    return fmt


def cmd_build(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "text", FORMATS)
    s = skew_from_pair(_pair(cfg, max(cfg.n, 2)), cfg.n)
    if fmt == "text":
        return format_text(s) + "\n"
    if fmt == "json":
        out = to_json(s)
        if from_json(out) != s:
            raise ConsistencyFailure("JSON output does not parse back to the same matrix")
        return out + "\n"
    if fmt == "dot":
        out = to_dot(s)
        if from_dot(out, s.p) != s:
            raise ConsistencyFailure("DOT output does not parse back to the same matrix")
        return out
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["tail", "head", "weight"])
    for arc in sorted(graph_from_skew(s).arcs):
        w.writerow(arc)
    return buf.getvalue()


def cmd_decompose(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "json", ("json", "text"))
    dec = decompose(_pair(cfg, max(cfg.n, 2)), cfg.n, strict=True)
    if fmt == "json":
        return dec.to_json() + "\n"
    lines = [f"parts: {dec.parts}", f"formula_matches_direct: {dec.formula_matches_direct}", ""]
    width = max(len(str(int(x))) for x in dec.reassemble().ravel())
    lines += [" ".join(f"{int(x):>{width}}" for x in row) for row in dec.reassemble()]
    return "\n".join(lines) + "\n"


def cmd_fractal(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "json", ("json", "text"))
    pair = _pair(cfg, max(cfg.n, 2))
    if None not in (cfg.s, cfg.k, cfg.alpha):
        triples = [(cfg.s, cfg.k, cfg.alpha)]
    elif (cfg.s, cfg.k, cfg.alpha) == (None, None, None):
        triples = list(fractal_parameters(cfg.p, cfg.n, a_gap(pair)))
    else:
        raise ParseFailure("give all of --s, --k, --alpha or none of them")
    results = [
        {"s": s, "k": k, "alpha": a, "holds": check_fractal(pair, cfg.n, s, k, a)}
        for s, k, a in triples
    ]
    if fmt == "json":
        return json.dumps({"n": cfg.n, "p": cfg.p, "results": results}) + "\n"
    return "".join(f"s={r['s']} k={r['k']} alpha={r['alpha']} holds={r['holds']}\n" for r in results)


def cmd_aseq(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "text", ("json", "text"))
    if cfg.length < 1:
        raise ParseFailure("--len must be >= 1")
    a = a_sequence(_pair(cfg, cfg.length + 1), cfg.length).tolist()
    if fmt == "json":
        return json.dumps({"p": cfg.p, "a": a}) + "\n"
    return ",".join(map(str, a)) + "\n"


def cmd_i1(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "json", ("json", "text"))
    rep = i1_report(_pair(cfg, max(cfg.n, 2)), cfg.n)
    if not rep.consistent:
        raise ConsistencyFailure(f"i1 verdicts disagree: {rep}")
    if fmt == "json":
        return rep.to_json() + "\n"
    d = json.loads(rep.to_json())
    return "".join(f"{k}: {v}\n" for k, v in d.items())


def cmd_enumerate(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "json", ("json", "text"))
    count = len(enumerate_all(cfg.n, cfg.p, budget=cfg.budget, workers=cfg.workers))
    expected = count_formula(cfg.n, cfg.p)
    if count != expected:
        raise ConsistencyFailure(f"enumerated {count} matrices, formula gives {expected}")
    if fmt == "json":
        return json.dumps({"n": cfg.n, "p": cfg.p, "count": count, "formula": expected}) + "\n"
    return f"{count}\n"


def cmd_classify(cfg: RunConfig) -> str:
    if cfg.p != 3:
        raise ParseFailure("classify works over p = 3")
    if cfg.kn1:
        fmt = _fmt(cfg, "json", ("json", "text"))
        verdicts = kn1_report(cfg.n, budget=cfg.budget, workers=cfg.workers)
        riordan = sum(verdicts)
        if fmt == "json":
            return json.dumps({
                "n": cfg.n,
                "orientations": len(verdicts),
                "riordan_orientations": riordan,
                "none_riordan": riordan == 0,
            }) + "\n"
        return f"{riordan} of {len(verdicts)} orientations are Riordan\n"
    fmt = _fmt(cfg, "csv", ("csv", "json"))
    if cfg.n > 4:
        raise ParseFailure("classification supports --n <= 4 (use --kn1 for order 5)")
    classes = classify_up_to(cfg.n)
    if fmt == "csv":
        return classification_csv(classes)
    return json.dumps([
        {
            "class_id": c.class_id,
            "n": c.n,
            "arcs": c.arcs(),
            "riordan": c.is_riordan,
            "witness": c.membership.witness,
        }
        for c in classes
    ]) + "\n"


def cmd_cognate(cfg: RunConfig) -> str:
    fmt = _fmt(cfg, "json", ("json", "text"))
    if cfg.i is None or cfg.j is None:
        raise ParseFailure("cognate needs --i and --j")
    pairs = sorted(cognate_set(_pair(cfg, max(cfg.n, 2)), cfg.n, cfg.i, cfg.j, strict=cfg.strict_gap))
    if fmt == "json":
        return json.dumps({"i": cfg.i, "j": cfg.j, "n": cfg.n, "pairs": pairs}) + "\n"
    return "".join(f"{a} {b}\n" for a, b in pairs)


HANDLERS = {
    "build": cmd_build,
    "decompose": cmd_decompose,
    "fractal": cmd_fractal,
    "aseq": cmd_aseq,
    "i1": cmd_i1,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "cognate": cmd_cognate,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="oriented-riordan",
        description="Oriented Riordan graphs over Z_p.",
        epilog="Exit codes: 0 ok, 2 parse failure, 3 invariant violation, "
        "4 budget exceeded, 5 internal consistency failure.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("--g", default="pascal-g", help="series literal coeffs:c0,c1,... or preset")
    parser.add_argument("--f", default="pascal-f", help="series literal coeffs:c0,c1,... or preset")
    parser.add_argument("--n", type=int, default=13, help="graph order (default 13)")
    parser.add_argument("--p", type=int, default=3, help="odd prime (default 3)")
    parser.add_argument("--len", dest="length", type=int, default=6, help="A-sequence length for aseq")
    parser.add_argument("--format", choices=FORMATS)
    parser.add_argument("--output", help="write to this path instead of stdout")
    parser.add_argument("--budget", type=int, help="enumeration cap (default RIORDAN_BUDGET or 10**6)")
    parser.add_argument("--workers", type=int, default=1)
    parser.add_argument("--strict-gap", action="store_true", help="use p*floor((d-1)/p^s) <= gap for cognates")
    parser.add_argument("--i", type=int, help="first vertex for cognate")
    parser.add_argument("--j", type=int, help="second vertex for cognate")
    parser.add_argument("--s", type=int, help="fractal scale exponent")
    parser.add_argument("--k", type=int, help="fractal window index")
    parser.add_argument("--alpha", type=int, help="fractal shift multiple")
    parser.add_argument("--kn1", action="store_true", help="classify: test every orientation of K_{n-1} u K_1")
    return parser


def run(cfg: RunConfig) -> str:
    return HANDLERS[cfg.command](cfg)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    opts = vars(args)
    try:
        cfg = RunConfig(**opts)
        text = run(cfg)
    except ParseFailure as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (ConsistencyFailure, AssertionError) as exc:
        print(f"consistency failure: {exc}", file=sys.stderr)
        return EXIT_CONSISTENCY
    except ValueError as exc:
        print(f"invariant violation: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    if cfg.output:
        with open(cfg.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
