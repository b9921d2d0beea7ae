"""Plain nogood files: constraint mode input.

::

    % comment
    vars: a b p q
    nogood: T a
    nogood n0: F a, T b
    decide: F p

Variables must be declared before use. Nogoods keep file order, which fixes
their registration indices. The optional name after ``nogood`` labels the
nogood in traces and graph exports.
"""
from __future__ import annotations

import random
import re
from dataclasses import dataclass, field

from .nogoods import F, T
from .program import ParseError

_NAME = re.compile(r"[A-Za-z_][A-Za-z0-9_]*$")
_LIT = re.compile(r"\s*([TF])\s+([A-Za-z_][A-Za-z0-9_]*)\s*$")


@dataclass
class NogoodFile:
    names: list[str] = field(default_factory=list)
    nogoods: list[tuple[int, ...]] = field(default_factory=list)
    labels: list[str | None] = field(default_factory=list)
    decisions: list[int] = field(default_factory=list)

    @property
    def num_vars(self) -> int:
        return len(self.names)

    def to_text(self) -> str:
        show = lambda lit: ("F " if lit & 1 else "T ") + self.names[lit >> 1]
        lines = ["vars: " + " ".join(self.names)] if self.names else []
        for lits, label in zip(self.nogoods, self.labels):
            head = f"nogood {label}:" if label else "nogood:"
            lines.append(head + " " + ", ".join(show(lit) for lit in lits))
        if self.decisions:
            lines.append("decide: " + ", ".join(show(lit) for lit in self.decisions))
        return "\n".join(lines) + ("\n" if lines else "")


def parse_literals(text: str, index: dict[str, int], line: int = 1) -> list[int]:
    """Parse ``T x, F y, ...`` against a name index."""
    lits = []
    for part in text.split(","):
        m = _LIT.match(part)
        if m is None:
            raise ParseError(f"malformed literal {part.strip()!r}", line, 1)
        sign, name = m.groups()
        if name not in index:
            raise ParseError(f"undeclared variable {name!r}", line, 1)
        v = index[name]
        lits.append(T(v) if sign == "T" else F(v))
    return lits


def parse_nogood_file(source: str) -> NogoodFile:
    out = NogoodFile()
    index: dict[str, int] = {}
    for lineno, raw in enumerate(source.splitlines(), 1):
        line = raw.split("%", 1)[0].strip()
        if not line:
            continue
        key, sep, rest = line.partition(":")
        if not sep:
            raise ParseError(f"expected 'vars:', 'nogood:' or 'decide:' in {line!r}", lineno, 1)
        words = key.split()
        kind = words[0] if words else ""
        if kind == "vars" and len(words) == 1:
            for name in rest.split():
                if not _NAME.match(name):
                    raise ParseError(f"bad variable name {name!r}", lineno, 1)
                if name in index:
                    raise ParseError(f"variable {name!r} declared twice", lineno, 1)
                index[name] = len(out.names)
                out.names.append(name)
        elif kind == "nogood" and len(words) <= 2:
            lits = parse_literals(rest, index, lineno) if rest.strip() else []
            out.nogoods.append(tuple(lits))
            out.labels.append(words[1] if len(words) == 2 else None)
        elif kind == "decide" and len(words) == 1:
            out.decisions.extend(parse_literals(rest, index, lineno))
        else:
            raise ParseError(f"unknown directive {key.strip()!r}", lineno, 1)
    return out


def shuffle_nogood_file(nf: NogoodFile, seed: int) -> NogoodFile:
    """Permute variable order, nogood order and literal order within nogoods."""
    rng = random.Random(seed)
    perm = list(range(nf.num_vars))
    rng.shuffle(perm)
    names = [None] * nf.num_vars
    for old, new in enumerate(perm):
        names[new] = nf.names[old]
    remap = lambda lit: (perm[lit >> 1] << 1) | (lit & 1)
    order = list(range(len(nf.nogoods)))
    rng.shuffle(order)
    nogoods, labels = [], []
    for j in order:
        lits = [remap(lit) for lit in nf.nogoods[j]]
        rng.shuffle(lits)
        nogoods.append(tuple(lits))
        labels.append(nf.labels[j])
    return NogoodFile(names, nogoods, labels, [remap(lit) for lit in nf.decisions])
