"""Interactive session: statements, meta-commands and script execution.

Errors never escape :meth:`Session.handle`; they come back as diagnostics.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from ..errors import NeutroError, ParseError
from ..nrdm.relation import classify
from ..nrdm.reps import reps_enum
from .ast import Assign, Query, expr_text
from .evaluator import Evaluator
from .parser import parse_condition, parse_statement
from .render import FORMATS, render
from .storage import Database, SessionConfig, load_directory, load_relation, save_relation

HELP = """\
statements (end with ';' in scripts):
  select A, B from R [, S] [where COND] [union select ...]
  { t of R | FORMULA }            tuple calculus; FORMULA uses exists/forall t of R : ...
  union(E, E) intersect(E, E) diff(E, E) complement(E) join(E, E) product(E, E)
  project(E, A, ...) select_guard(E, COND) split(E) combine(E)
  NAME := EXPR                    bind a result to a name
meta-commands:
  \\load DIR | \\load FILE.csv [NAME]
  \\set grid K | \\set quantifier-range active|full | \\set algebra-range active|full
  \\set format table|csv|json | \\set convention propositional|predicate | \\set seed N
  \\cond CONDITION   \\classify NAME   \\explain SELECT-QUERY   \\show NAME   \\list   \\reps NAME
  \\save NAME FILE  \\help   \\quit"""


@dataclass
class Outcome:
    text: str
    ok: bool = True


class Session:
    def __init__(self, db: Database | None = None, fmt: str = "table", source: str | None = None):
        self.db = db if db is not None else Database()
        self.fmt = fmt
        self.source = source
        self.done = False

    @classmethod
    def from_directory(cls, path, config: SessionConfig | None = None, **kw) -> "Session":
        return cls(load_directory(path, config), **kw)

    @property
    def config(self) -> SessionConfig:
        return self.db.config

    # -- entry points --------------------------------------------------------
    def handle(self, text: str, line: int = 1, col: int = 1) -> Outcome:
        try:
            return Outcome(self.execute(text, line, col))
        except ParseError as e:
            return Outcome("error: " + e.describe(), False)
        except (NeutroError, ValueError, KeyError, TypeError, OSError) as e:
            where = f"{self.source}:{line}: " if self.source else ""
            msg = e.args[0] if isinstance(e, KeyError) and e.args else e
            return Outcome(f"error: {where}{msg}", False)

    def execute(self, text: str, line: int = 1, col: int = 1) -> str:
        stripped = text.strip()
        if stripped.startswith("\\"):
            return self.meta(stripped)
        if not stripped:
            return ""
        stmt = parse_statement(" " * (col - 1) + text, self.source, line)
        name, result = Evaluator(self.db).statement(stmt)
        if isinstance(stmt, Assign):
            self.db.add(name, result)
            return f"{name}: {len(result)} rows"
        return render(result, self.fmt)

    def run_script(self, text: str):
        """Execute every statement; returns (outputs, number of failures)."""
        outputs, failures = [], 0
        for line, col, stmt in split_statements(text):
            out = self.handle(stmt, line, col)
            if out.text:
                outputs.append(out.text)
            failures += not out.ok
            if self.done:
                break
        return outputs, failures

    # -- meta-commands ---------------------------------------------------------
    def meta(self, text: str) -> str:
        cmd, _, rest = text[1:].partition(" ")
        args = rest.split()
        if cmd == "help":
            return HELP
        if cmd in ("quit", "q", "exit"):
            self.done = True
            return ""
        if cmd == "load":
            self._need(args, 1, 2, "\\load DIR | \\load FILE.csv [NAME]")
            p = Path(args[0])
            if p.is_dir():
                self.db = load_directory(p, self.db.config)
                return f"loaded {len(self.db)} relations: {', '.join(self.db)}"
            name = load_relation(p, self.db, args[1] if len(args) > 1 else None)
            return f"loaded {name}"
        if cmd == "set":
            self._need(args, 2, 2, "\\set KEY VALUE")
            if args[0] == "format":
                if args[1] not in FORMATS:
                    raise ValueError(f"format must be one of {', '.join(FORMATS)}")
                self.fmt = args[1]
            else:
                try:
                    self.config.set(args[0], args[1])
                except KeyError:
                    raise ValueError(f"unknown setting {args[0]!r}; see \\help") from None
            return ""
        if cmd == "classify":
            self._need(args, 1, 1, "\\classify NAME")
            return f"{args[0]}: {classify(self.db.relation(args[0]))}"
        if cmd == "show":
            self._need(args, 1, 1, "\\show NAME")
            return render(self.db.relation(args[0]), self.fmt)
        if cmd == "list":
            return "\n".join(f"{n}{r.scheme} {len(r)} rows" for n, r in self.db.items()) or "(no relations)"
        if cmd == "save":
            self._need(args, 2, 2, "\\save NAME FILE")
            save_relation(args[0], args[1], self.db)
            return f"saved {args[0]} to {args[1]}"
        if cmd == "reps":
            self._need(args, 1, 1, "\\reps NAME")
            comp = reps_enum(self.db.relation(args[0]), self.config.grid)
            return f"{args[0]}: {len(comp.matrix)} completions on the grid of step 1/{self.config.grid}"
        if cmd == "cond":
            c = parse_condition(rest, self.source)
            return str(Evaluator(self.db).cond(c))
        if cmd == "explain":
            return self.explain(rest)
        raise ValueError(f"unknown command \\{cmd}\n{HELP}")

    def explain(self, text: str) -> str:
        stmt = parse_statement(text, self.source)
        if not isinstance(stmt, Query):
            raise ValueError(f"\\explain needs a SELECT query, got {expr_text(stmt)!r}")
        ev = Evaluator(self.db, trace=True)
        result = ev.query(stmt)
        parts = [t.describe() for t in ev.traces]
        parts.append("result:\n" + render(result, self.fmt))
        return "\n".join(parts)

    @staticmethod
    def _need(args, lo, hi, usage):
        if not lo <= len(args) <= hi:
            raise ValueError(f"usage: {usage}")


def split_statements(text: str):
    """Yield (line, column, text): meta-commands run to end of line, others end at ';'."""
    buf: list[str] = []
    start = None
    in_str = False
    line, col, i, n = 1, 1, 0, len(text)
    while i < n:
        ch = text[i]
        if start is None and ch == "\\":
            j = text.find("\n", i)
            j = n if j < 0 else j
            yield line, col, text[i:j].strip()
            col += j - i
            i = j
            continue
        if in_str:
            buf.append(ch)
            in_str = ch != "'"
        elif text.startswith("--", i):
            j = text.find("\n", i)
            j = n if j < 0 else j
            col += j - i
            i = j
            continue
        elif ch == ";":
            if start is not None:
                yield start[0], start[1], "".join(buf)
            buf, start = [], None
        else:
            if start is None and not ch.isspace():
                start = (line, col)
            if start is not None:
                buf.append(ch)
            in_str = ch == "'"
        if ch == "\n":
            line, col = line + 1, 1
        else:
            col += 1
        i += 1
    if start is not None:
        yield start[0], start[1], "".join(buf)
