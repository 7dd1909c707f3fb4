"""Parser for the line-oriented quiver description format.

Grammar (one statement per line, ``#`` starts a comment):

    vertex <name> [<name> ...]
    arrow <name> <source> <end>
    relation <term> [+ <term> | - <term> ...]

where ``<term>`` is ``[<coeff>*]<arrow>.<arrow>[. ...]`` and the arrow names
are listed in traversal order (first-traversed first).  Coefficients are
integers or ``num/den`` fractions; they are stored exactly and converted to
the working field when the algebra is built.
"""

import re
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import ParseError
from .quiver import Arrow, Quiver

_NAME = re.compile(r"[A-Za-z0-9_]+\Z")
_COEFF = re.compile(r"-?\d+(/\d+)?\Z")


@dataclass
class RelationSpec:
    """One relation as parsed: terms of (coefficient, arrow names in traversal order)."""

    terms: list
    line: int = 0


@dataclass
class QuiverDocument:
    quiver: Quiver
    relations: list = field(default_factory=list)


def parse_quiver(text):
    """Parse a quiver document into a QuiverDocument.

    Raises ParseError with line/column positions on syntax errors, duplicate
    names, and unknown vertex or arrow references.
    """
    vertices = []  # (name, lineno, col)
    arrows = []  # (Arrow, lineno, col)
    relation_specs = []
    pending_relations = []  # validated against arrow names after all decls

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        col = len(line) - len(line.lstrip()) + 1
        tokens = line.split()
        head = tokens[0]
        if head == "vertex":
            if len(tokens) < 2:
                raise ParseError("vertex statement needs at least one name", lineno, col)
            for name in tokens[1:]:
                _check_name(name, lineno, raw)
                vertices.append((name, lineno, raw.find(name) + 1))
        elif head == "arrow":
            if len(tokens) != 4:
                raise ParseError("arrow statement needs: arrow <name> <source> <end>", lineno, col)
            for name in tokens[1:]:
                _check_name(name, lineno, raw)
            arrows.append((Arrow(tokens[1], tokens[2], tokens[3]), lineno, col))
        elif head == "relation":
            if len(tokens) < 2:
                raise ParseError("relation statement needs at least one term", lineno, col)
            pending_relations.append((lineno, raw, line[len("relation"):].strip()))
        else:
            raise ParseError(f"unknown statement {head!r}", lineno, col)

    seen = {}
    for name, lineno, col in vertices:
        if name in seen:
            raise ParseError(f"duplicate vertex name {name!r}", lineno, col)
        seen[name] = lineno
    vset = set(seen)
    aseen = set()
    for a, lineno, col in arrows:
        if a.name in aseen:
            raise ParseError(f"duplicate arrow name {a.name!r}", lineno, col)
        aseen.add(a.name)
        for endpoint in (a.source, a.target):
            if endpoint not in vset:
                raise ParseError(
                    f"arrow {a.name!r} references unknown vertex {endpoint!r}", lineno, col
                )

    quiver = Quiver([v for v, _, _ in vertices], [a for a, _, _ in arrows])

    arrow_names = set(quiver.arrow_by_name)
    for lineno, raw, body in pending_relations:
        terms = []
        for sign, term_text in _split_terms(body, lineno, raw):
            coeff, names = _parse_term(term_text, lineno, raw)
            if sign == "-":
                coeff = -coeff
            for name in names:
                if name not in arrow_names:
                    raise ParseError(
                        f"relation references unknown arrow {name!r}",
                        lineno,
                        raw.find(name) + 1,
                    )
            terms.append((coeff, names))
        relation_specs.append(RelationSpec(terms, lineno))

    return QuiverDocument(quiver, relation_specs)


def _check_name(name, lineno, raw):
    if not _NAME.match(name):
        raise ParseError(f"bad identifier {name!r}", lineno, raw.find(name) + 1)


def _split_terms(body, lineno, raw):
    """Split 'a.b + 2*c.d - e.f' into signed term strings."""
    tokens = []
    for tok in body.split():
        # a sign glued onto a term ('-a.b', '+2*c.d') counts as two tokens
        if len(tok) > 1 and tok[0] in "+-":
            tokens.append(tok[0])
            tokens.append(tok[1:])
        else:
            tokens.append(tok)
    parts = []
    sign = "+"
    current = []
    for tok in tokens:
        if tok in ("+", "-"):
            if current:
                parts.append((sign, "".join(current)))
                current = []
                sign = tok
            elif parts or sign != "+":
                raise ParseError("dangling sign in relation", lineno, raw.find(tok) + 1)
            else:
                sign = tok
        else:
            current.append(tok)
    if not current:
        raise ParseError("relation ends with a dangling sign", lineno, len(raw))
    parts.append((sign, "".join(current)))
    return parts


def _parse_term(term, lineno, raw):
    coeff = Fraction(1)
    if "*" in term:
        coeff_text, _, term = term.partition("*")
        if not _COEFF.match(coeff_text):
            raise ParseError(f"bad coefficient {coeff_text!r}", lineno, raw.find(coeff_text) + 1)
        coeff = Fraction(coeff_text)
    names = term.split(".")
    if any(not n for n in names):
        raise ParseError(f"bad path term {term!r}", lineno, raw.find(term) + 1 if term else 1)
    for n in names:
        _check_name(n, lineno, raw)
    return coeff, names


def serialize_quiver(q, relations=()):
    """Emit a canonical document: one vertex line, arrows, then relations."""
    lines = ["vertex " + " ".join(q.vertices)]
    for a in q.arrows:
        lines.append(f"arrow {a.name} {a.source} {a.target}")
    for spec in relations:
        parts = []
        for i, (coeff, names) in enumerate(spec.terms):
            mag = abs(coeff)
            body = (f"{mag}*" if mag != 1 else "") + ".".join(names)
            if i == 0:
                parts.append(("-" if coeff < 0 else "") + body)
            else:
                parts.append(("- " if coeff < 0 else "+ ") + body)
        lines.append("relation " + " ".join(parts))
    return "\n".join(lines) + "\n"
