"""Text renderings of relations: aligned table, CSV and JSON."""
from __future__ import annotations

import csv
import io
import json

from ..nrdm.relation import MultiRelation
from .storage import format_grade, format_member

FORMATS = ("table", "csv", "json")


def _rows(rel):
    if isinstance(rel, MultiRelation):
        return [(t, b, d) for t, b, d in rel.rows()]
    return [(t, rel[t].belief, rel[t].doubt) for t in rel.stored()]


def render(rel, fmt: str = "table") -> str:
    if fmt not in FORMATS:
        raise ValueError(f"format must be one of {FORMATS}")
    head = list(rel.scheme.attrs) + ["belief", "doubt"]
    rows = [[format_member(v) for v in t] + [format_grade(b), format_grade(d)] for t, b, d in _rows(rel)]
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(head)
        w.writerows(rows)
        return buf.getvalue().rstrip("\n")
    if fmt == "json":
        out = {
            "scheme": list(rel.scheme.attrs),
            "rows": [
                {**{a: v for a, v in zip(rel.scheme.attrs, t)}, "belief": b, "doubt": d}
                for t, b, d in _rows(rel)
            ],
        }
        return json.dumps(out, sort_keys=False)
    widths = [max(len(r[i]) for r in [head] + rows) for i in range(len(head))]
    fmt_row = lambda r: " | ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip()
    lines = [fmt_row(head), "-+-".join("-" * w for w in widths)]
    lines += [fmt_row(r) for r in rows]
    if not rows:
        lines.append("(no rows)")
    return "\n".join(lines)
