"""Flat-file storage: a domain catalog plus one CSV-like file per relation.

``domains.txt``::

    Item: I1, I2
    Quality: q1, q2, q3

``EVAL.csv``::

    scheme: I:Item, Q:Quality
    I1,q1,0.9,0.2

Members that look like numbers are read as int/float; quote them
(``'3'``) to keep a string.
"""
from __future__ import annotations

import csv
import io
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Mapping

from ..errors import DomainError, EvaluationError, ParseError, SchemeError
from ..nrdm.relation import ConfidencePair, NeutroRelation, Scheme

CATALOG_FILE = "domains.txt"
RELATION_SUFFIX = ".csv"

_INT = re.compile(r"-?\d+$")
_FLOAT = re.compile(r"-?(\d+\.\d*|\.\d+|\d+)([eE][-+]?\d+)?$")


def parse_member(text: str):
    text = text.strip()
    if len(text) >= 2 and text[0] == text[-1] == "'":
        return text[1:-1].replace("''", "'")
    if _INT.match(text):
        return int(text)
    if _FLOAT.match(text):
        return float(text)
    return text


def format_member(v) -> str:
    if isinstance(v, str):
        if parse_member(v) != v:
            return "'" + v.replace("'", "''") + "'"
        return v
    return repr(v)


def format_grade(x: float) -> str:
    """Shortest text that reads back to the same float."""
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


@dataclass
class SessionConfig:
    grid: int = 2
    quantifier_range: str = "active"
    algebra_range: str = "full"
    convention: str = "propositional"
    seed: int = 0

    def set(self, key: str, value: str):
        key = key.replace("-", "_")
        if key == "grid":
            k = int(value)
            if k < 1:
                raise ValueError("grid must be a positive integer k (step 1/k)")
            self.grid = k
        elif key in ("quantifier_range", "algebra_range"):
            if value not in ("active", "full"):
                raise ValueError(f"{key.replace('_', '-')} must be 'active' or 'full'")
            setattr(self, key, value)
        elif key == "convention":
            if value not in ("propositional", "predicate"):
                raise ValueError("convention must be 'propositional' or 'predicate'")
            self.convention = value
        elif key == "seed":
            self.seed = int(value)
        else:
            raise KeyError(key)


class Database(Mapping):
    """Domain catalog plus named relations; read as a mapping name -> relation."""

    def __init__(self, domains: Mapping[str, tuple] | None = None, relations=None,
                 config: SessionConfig | None = None):
        self.domains: dict[str, tuple] = {k: tuple(v) for k, v in (domains or {}).items()}
        self.relations: dict[str, NeutroRelation] = {}
        self.config = config or SessionConfig()
        for name, rel in (relations or {}).items():
            self.add(name, rel)

    def __getitem__(self, name) -> NeutroRelation:
        return self.relations[name]

    def __iter__(self) -> Iterator[str]:
        return iter(self.relations)

    def __len__(self):
        return len(self.relations)

    def relation(self, name: str) -> NeutroRelation:
        try:
            return self.relations[name]
        except KeyError:
            raise EvaluationError(f"unknown relation {name!r}") from None

    def add(self, name: str, rel: NeutroRelation):
        for a, d, dn in zip(rel.scheme.attrs, rel.scheme.domains, rel.scheme.domain_names):
            if dn is not None and dn in self.domains and self.domains[dn] != d:
                raise SchemeError(f"{name}.{a}: domain {dn} differs from the catalog")
        self.relations[name] = rel

    def scheme(self, spec: Mapping[str, str]) -> Scheme:
        """Scheme from attribute -> catalog domain name."""
        doms = []
        for a, dn in spec.items():
            if dn not in self.domains:
                raise SchemeError(f"attribute {a}: undeclared domain {dn!r}")
            doms.append(self.domains[dn])
        return Scheme(tuple(spec), tuple(doms), tuple(spec.values()))

    def is_constant(self, value) -> bool:
        return any(value in d for d in self.domains.values())


# -- catalog -----------------------------------------------------------------

def _content_lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if line:
            yield no, line


def parse_catalog(text: str, source: str | None = None) -> dict[str, tuple]:
    out: dict[str, tuple] = {}
    for no, line in _content_lines(text):
        name, sep, rest = line.partition(":")
        name = name.strip()
        if not sep or not name:
            raise ParseError("expected 'DomainName: member, member, ...'", no, 1, source)
        if name in out:
            raise ParseError(f"domain {name!r} declared twice", no, 1, source)
        members = tuple(parse_member(m) for m in next(csv.reader([rest], skipinitialspace=True)))
        if not members or any(m == "" for m in members):
            raise ParseError(f"domain {name!r} has an empty member list or member", no, 1, source)
        if len(set(members)) != len(members):
            raise ParseError(f"domain {name!r} repeats a member", no, 1, source)
        out[name] = members
    return out


def catalog_text(domains: Mapping[str, tuple]) -> str:
    return "".join(f"{k}: {', '.join(format_member(m) for m in v)}\n" for k, v in domains.items())


def load_catalog(path) -> dict[str, tuple]:
    path = Path(path)
    return parse_catalog(path.read_text(encoding="utf-8"), str(path))


# -- relations ---------------------------------------------------------------

def parse_relation(text: str, db: Database, source: str | None = None) -> NeutroRelation:
    lines = list(_content_lines(text))
    if not lines:
        raise ParseError("empty relation file: missing 'scheme:' header", 1, 1, source)
    no, head = lines[0]
    key, sep, rest = head.partition(":")
    if key.strip().lower() != "scheme" or not sep:
        raise ParseError("first line must be 'scheme: A:Domain, B:Domain'", no, 1, source)
    spec = {}
    for part in rest.split(","):
        a, sep, dn = part.partition(":")
        a, dn = a.strip(), dn.strip()
        if not sep or not a or not dn:
            raise ParseError(f"bad attribute declaration {part.strip()!r}", no, 1, source)
        if a in spec:
            raise ParseError(f"attribute {a!r} declared twice", no, 1, source)
        spec[a] = dn
    try:
        scheme = db.scheme(spec)
    except SchemeError as e:
        raise ParseError(str(e), no, 1, source) from None
    n = len(scheme)
    rows = {}
    for no, line in lines[1:]:
        cells = next(csv.reader([line], skipinitialspace=True))
        if len(cells) != n + 2:
            raise ParseError(f"row {no}: expected {n} values and 2 grades, got {len(cells)} fields",
                             no, 1, source)
        t = tuple(parse_member(c) for c in cells[:n])
        for a, v, d in zip(scheme.attrs, t, scheme.domains):
            if v not in d:
                raise ParseError(f"row {no}: {v!r} is not a member of the domain of {a}", no, 1, source)
        try:
            b, dv = float(cells[n]), float(cells[n + 1])
            pair = ConfidencePair(b, dv)
        except (ValueError, DomainError) as e:
            raise ParseError(f"row {no}: bad grade: {e}", no, 1, source) from None
        if t in rows:
            raise ParseError(f"row {no}: duplicate tuple {t}", no, 1, source)
        rows[t] = pair
    return NeutroRelation(scheme, rows)


def relation_text(rel: NeutroRelation) -> str:
    s = rel.scheme
    if any(dn is None for dn in s.domain_names):
        raise SchemeError("cannot save a relation whose domains have no catalog names")
    buf = io.StringIO()
    buf.write("scheme: " + ", ".join(f"{a}:{dn}" for a, dn in zip(s.attrs, s.domain_names)) + "\n")
    for t in rel.stored():
        p = rel[t]
        cells = [format_member(v) for v in t] + [format_grade(p.belief), format_grade(p.doubt)]
        buf.write(",".join(cells) + "\n")
    return buf.getvalue()


def load_relation(path, db: Database, name: str | None = None) -> str:
    path = Path(path)
    name = name or path.stem
    db.add(name, parse_relation(path.read_text(encoding="utf-8"), db, str(path)))
    return name


def save_relation(name: str, path, db: Database):
    Path(path).write_text(relation_text(db.relation(name)), encoding="utf-8")


def load_directory(path, config: SessionConfig | None = None) -> Database:
    """Catalog from ``domains.txt`` and every ``*.csv`` relation beside it."""
    path = Path(path)
    cat = path / CATALOG_FILE
    if not cat.is_file():
        raise EvaluationError(f"{path}: no {CATALOG_FILE} domain catalog")
    db = Database(load_catalog(cat), config=config)
    for f in sorted(path.glob("*" + RELATION_SUFFIX)):
        load_relation(f, db)
    return db
