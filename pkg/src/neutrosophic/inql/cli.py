"""``inql`` command line.  Exit codes: 0 ok, 1 diagnostics, 2 usage."""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .. import ins, logic
from ..errors import NeutroError, ParseError
from ..inls import EngineConfig, parse_rulebase, run_inference
from .render import FORMATS
from .session import Session, split_statements
from .storage import Database, SessionConfig, load_directory

EXIT_OK, EXIT_DIAG, EXIT_USAGE = 0, 1, 2


def _config(args) -> SessionConfig:
    cfg = SessionConfig()
    if getattr(args, "grid", None) is not None:
        cfg.set("grid", str(args.grid))
    if getattr(args, "quantifier_range", None):
        cfg.set("quantifier-range", args.quantifier_range)
    if getattr(args, "seed", None) is not None:
        cfg.set("seed", str(args.seed))
    return cfg


def _add_data_opts(p, data_required=True):
    p.add_argument("--data", required=data_required, help="directory with domains.txt and *.csv relations")
    p.add_argument("--grid", type=int, help="grid step 1/K for completions")
    p.add_argument("--quantifier-range", choices=("active", "full"), help="range of subquery and calculus quantifiers")
    p.add_argument("--format", choices=FORMATS, default="table")


def _session(args) -> Session:
    cfg = _config(args)
    if args.data:
        return Session(load_directory(args.data, cfg), fmt=args.format)
    return Session(Database(config=cfg), fmt=args.format)


def cmd_eval(args, out) -> int:
    s = _session(args)
    r = s.handle(args.query)
    print(r.text, file=out if r.ok else sys.stderr)
    return EXIT_OK if r.ok else EXIT_DIAG


def cmd_run(args, out) -> int:
    path = Path(args.script)
    text = path.read_text(encoding="utf-8")
    s = _session(args)
    s.source = str(path)
    failures = 0
    for line, col, stmt in split_statements(text):
        r = s.handle(stmt, line, col)
        if r.text:
            print(r.text, file=out if r.ok else sys.stderr)
        failures += not r.ok
        if s.done:
            break
    return EXIT_DIAG if failures else EXIT_OK


def cmd_repl(args, out) -> int:
    s = _session(args)
    interactive = sys.stdin.isatty()
    if interactive:
        print("inql: type \\help for commands, \\quit to leave", file=out)
    while not s.done:
        try:
            line = input("inql> " if interactive else "")
        except EOFError:
            break
        line = line.strip().rstrip(";")
        if not line:
            continue
        r = s.handle(line)
        if r.text:
            print(r.text, file=out)
    return EXIT_OK


# -- INS operations -------------------------------------------------------------

_UNARY = {
    "complement": ins.ins_complement,
    "truth-favorite": ins.ins_truth_favorite,
    "false-favorite": ins.ins_false_favorite,
    "is-empty": ins.ins_is_empty,
}
_BINARY = {
    "intersect": ins.ins_intersect,
    "union": ins.ins_union,
    "difference": ins.ins_difference,
    "add": ins.ins_add,
    "product": ins.ins_cartesian_product,
    "contains": ins.ins_contains,
    "equal": ins.ins_equal,
}
_SCALAR = {"scale": ins.ins_scalar_mul, "divide": ins.ins_scalar_div}


def _read_set(path) -> ins.InsSet:
    p = Path(path)
    return ins.InsSet.from_text(p.read_text(encoding="utf-8"), source=str(p))


def cmd_insop(args, out) -> int:
    a = _read_set(args.a)
    if args.op in _UNARY:
        res = _UNARY[args.op](a)
    elif args.op in _BINARY:
        if not args.b:
            raise SystemExit(f"inql insop {args.op}: needs a second set file")
        res = _BINARY[args.op](a, _read_set(args.b))
    else:
        if args.k is None:
            raise SystemExit(f"inql insop {args.op}: needs --k")
        res = _SCALAR[args.op](a, args.k)
    print(res.to_text().rstrip("\n") if isinstance(res, ins.InsSet) else str(res).lower(), file=out)
    return EXIT_OK


# -- inference ------------------------------------------------------------------

def _parse_inputs(text: str) -> dict:
    vals = {}
    for part in text.split(","):
        name, sep, v = part.partition("=")
        if not sep:
            raise ValueError(f"bad input {part!r}; expected NAME=VALUE")
        vals[name.strip()] = float(v)
    return vals


def cmd_infer(args, out) -> int:
    rb = parse_rulebase(Path(args.rules).read_text(encoding="utf-8"))
    weights = tuple(float(w) for w in args.weights.split(",")) if args.weights else EngineConfig().weights
    cfg = EngineConfig(weights=weights, resolution=args.resolution)
    res = run_inference(rb, _parse_inputs(getattr(args, "in")), cfg)
    print(res.describe() if args.trace else f"{res.output:.9g}", file=out)
    return EXIT_OK


# -- logic -------------------------------------------------------------------------

def _convention(name):
    return logic.PREDICATE if name == "predicate" else logic.PROPOSITIONAL


def cmd_logic(args, out) -> int:
    if args.logic_cmd == "taut":
        v = logic.check_tautology(logic.parse_formula(args.formula), _convention(args.convention),
                                  samples=args.samples, seed=args.seed, sampling=args.sampling)
        print(("holds: " if v.holds else "not a tautology: ") + str(v), file=out)
    elif args.logic_cmd == "equiv":
        v = logic.check_equivalence(logic.parse_formula(args.f), logic.parse_formula(args.g),
                                    samples=args.samples, seed=args.seed, sampling=args.sampling,
                                    convention=_convention(args.convention))
        print(("equivalent: " if v.holds else "not equivalent: ") + str(v), file=out)
    elif args.logic_cmd == "eval":
        f = logic.parse_formula(args.formula)
        if args.model:
            m = logic.FiniteModel.from_text(Path(args.model).read_text(encoding="utf-8"))
            print(logic.eval_pred(f, m, convention=_convention(args.convention or "predicate")), file=out)
        else:
            interp = {}
            for part in args.interp or []:
                name, sep, val = part.partition("=")
                if not sep:
                    raise ValueError(f"bad assignment {part!r}; expected NAME=<[..],[..],[..]>")
                interp[name.strip()] = ins.InsTriple.parse(val)
            print(logic.eval_prop(f, interp, _convention(args.convention or "propositional")), file=out)
    elif args.logic_cmd == "scheme":
        rep = logic.check_schema_identity(args.number, trials=args.trials, seed=args.seed)
        print(rep, file=out)
    return EXIT_OK


# -- parser ------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="inql", description="Neutrosophic sets, logic, inference and relational queries.")
    sub = p.add_subparsers(dest="cmd", required=True)

    r = sub.add_parser("repl", help="interactive query session")
    _add_data_opts(r, data_required=False)
    r.set_defaults(fn=cmd_repl)

    r = sub.add_parser("run", help="run a script of statements and meta-commands")
    r.add_argument("script")
    _add_data_opts(r, data_required=False)
    r.add_argument("--seed", type=int)
    r.set_defaults(fn=cmd_run)

    r = sub.add_parser("eval", help="evaluate one statement")
    r.add_argument("-q", "--query", required=True)
    _add_data_opts(r)
    r.set_defaults(fn=cmd_eval)

    r = sub.add_parser("insop", help="operate on interval neutrosophic set files")
    r.add_argument("op", choices=sorted([*_UNARY, *_BINARY, *_SCALAR]))
    r.add_argument("a")
    r.add_argument("b", nargs="?")
    r.add_argument("--k", type=float, help="scalar for scale/divide")
    r.set_defaults(fn=cmd_insop)

    r = sub.add_parser("infer", help="run the inference engine on a rulebase")
    r.add_argument("--rules", required=True)
    r.add_argument("--in", required=True, help="inputs as NAME=VALUE,NAME=VALUE")
    r.add_argument("--trace", action="store_true")
    r.add_argument("--resolution", type=int, default=EngineConfig().resolution)
    r.add_argument("--weights", help="synthesis weights a,b,c,d")
    r.set_defaults(fn=cmd_infer)

    lg = sub.add_parser("logic", help="neutrosophic logic checks")
    lsub = lg.add_subparsers(dest="logic_cmd", required=True)
    for name in ("taut", "equiv"):
        q = lsub.add_parser(name, help="search for a counterexample" if name == "taut" else "compare two formulas")
        if name == "taut":
            q.add_argument("formula")
        else:
            q.add_argument("f")
            q.add_argument("g")
        q.add_argument("--samples", type=int, default=1000)
        q.add_argument("--seed", type=int, default=0)
        q.add_argument("--sampling", choices=("degenerate", "interval"), default="degenerate")
        q.add_argument("--convention", choices=("propositional", "predicate"), default="propositional")
    q = lsub.add_parser("eval", help="evaluate a formula")
    q.add_argument("formula")
    q.add_argument("--model", help="finite model file")
    q.add_argument("--interp", nargs="*", help="p=<[..],[..],[..]> assignments")
    q.add_argument("--convention", choices=("propositional", "predicate"))
    q = lsub.add_parser("scheme", help="test a quantifier scheme on random models")
    q.add_argument("number", type=int)
    q.add_argument("--trials", type=int, default=100)
    q.add_argument("--seed", type=int, default=0)
    lg.set_defaults(fn=cmd_logic)
    return p


def main(argv=None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code not in (0, None) else EXIT_OK
    try:
        return args.fn(args, out)
    except ParseError as e:
        print("error: " + e.describe(), file=sys.stderr)
    except (NeutroError, ValueError, KeyError, OSError) as e:
        print(f"error: {e.args[0] if isinstance(e, KeyError) and e.args else e}", file=sys.stderr)
    except SystemExit as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_USAGE
    return EXIT_DIAG


if __name__ == "__main__":
    sys.exit(main())
