"""Ground normal logic programs: parsing, body/atom indices, dependency SCCs."""
from __future__ import annotations

import re
from dataclasses import dataclass, field


class ParseError(ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


@dataclass(frozen=True)
class Atom:
    id: int
    name: str
    hidden: bool = False


@dataclass(frozen=True)
class Body:
    id: int
    pos: frozenset[int]
    neg: frozenset[int]

    def __len__(self) -> int:
        return len(self.pos) + len(self.neg)


@dataclass(frozen=True)
class Rule:
    head: int
    body: int
    # (atom id, positive?) in source order; used for rendering and shuffling
    lits: tuple[tuple[int, bool], ...] = ()
    constraint: bool = False


@dataclass
class Program:
    atoms: list[Atom]
    bodies: list[Body]
    rules: list[Rule]
    body_of: list[list[int]] = field(default_factory=list)
    pos_dep: list[list[int]] = field(default_factory=list)
    sccs: list[list[int]] = field(default_factory=list)
    scc_of: list[int] = field(default_factory=list)
    tight: bool = True

    def __post_init__(self):
        self._build_indices()

    # -- variables: atoms occupy 0..n_atoms-1, bodies follow
    @property
    def num_atoms(self) -> int:
        return len(self.atoms)

    @property
    def num_vars(self) -> int:
        return len(self.atoms) + len(self.bodies)

    def body_var(self, body_id: int) -> int:
        return len(self.atoms) + body_id

    def is_body_var(self, v: int) -> bool:
        return v >= len(self.atoms)

    def var_name(self, v: int) -> str:
        if v < len(self.atoms):
            return self.atoms[v].name
        return self.body_name(v - len(self.atoms))

    def body_name(self, body_id: int) -> str:
        b = self.bodies[body_id]
        parts = [self.atoms[a].name for a in sorted(b.pos)]
        parts += ["not " + self.atoms[a].name for a in sorted(b.neg)]
        return "{" + ", ".join(parts) + "}"

    def atom_id(self, name: str) -> int:
        for a in self.atoms:
            if a.name == name:
                return a.id
        raise KeyError(name)

    def visible_atoms(self) -> list[int]:
        return [a.id for a in self.atoms if not a.hidden]

    def nontrivial_scc(self, atom: int) -> bool:
        scc = self.sccs[self.scc_of[atom]]
        return len(scc) > 1 or atom in self.pos_dep[atom]

    def heads_of(self, body_id: int) -> list[int]:
        return self._heads_of[body_id]

    def bodies_with_pos(self, atom: int) -> list[int]:
        return self._pos_occ[atom]

    def _build_indices(self):
        n = len(self.atoms)
        self.body_of = [[] for _ in range(n)]
        self._heads_of = [[] for _ in self.bodies]
        self._pos_occ = [[] for _ in range(n)]
        for r in self.rules:
            if r.body not in self.body_of[r.head]:
                self.body_of[r.head].append(r.body)
                self._heads_of[r.body].append(r.head)
        for b in self.bodies:
            for a in sorted(b.pos):
                self._pos_occ[a].append(b.id)
        self.pos_dep = []
        for p in range(n):
            succ = []
            for b in self.body_of[p]:
                for q in sorted(self.bodies[b].pos):
                    if q not in succ:
                        succ.append(q)
            self.pos_dep.append(succ)
        self.sccs = strongly_connected_components(self.pos_dep)
        self.scc_of = [0] * n
        for i, comp in enumerate(self.sccs):
            for a in comp:
                self.scc_of[a] = i
        self.tight = all(
            len(c) == 1 and c[0] not in self.pos_dep[c[0]] for c in self.sccs
        )

    def to_text(self) -> str:
        lines = []
        for r in self.rules:
            lits = [
                self.atoms[a].name if positive else "not " + self.atoms[a].name
                for a, positive in r.lits
            ]
            if r.constraint:
                lines.append(":- " + ", ".join(lits) + ".")
            elif lits:
                lines.append(f"{self.atoms[r.head].name} :- " + ", ".join(lits) + ".")
            else:
                lines.append(f"{self.atoms[r.head].name}.")
        return "\n".join(lines) + ("\n" if lines else "")


def strongly_connected_components(graph: list[list[int]]) -> list[list[int]]:
    """Iterative Tarjan. Components come out in reverse topological order;
    each component lists its members in ascending id order."""
    n = len(graph)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    stack: list[int] = []
    result: list[list[int]] = []
    counter = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(graph[v]):
                work[-1] = (v, i + 1)
                w = graph[v][i]
                if index[w] == -1:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack[w] = True
                    work.append((w, 0))
                elif on_stack[w]:
                    low[v] = min(low[v], index[w])
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                result.append(sorted(comp))
    return result


def is_tight(p: Program) -> bool:
    return p.tight


_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)|(?P<comment>%[^\n]*)|(?P<nl>\n)|(?P<if>:-)"
    r"|(?P<ident>[a-z_][A-Za-z0-9_]*)|(?P<punct>[.,])"
)


def _tokenize(source: str):
    line, line_start, pos = 1, 0, 0
    while pos < len(source):
        m = _TOKEN.match(source, pos)
        if m is None:
            raise ParseError(f"unexpected character {source[pos]!r}", line, pos - line_start + 1)
        kind = m.lastgroup
        col = pos - line_start + 1
        if kind == "nl":
            line += 1
            line_start = m.end()
        elif kind == "ident":
            yield ("not" if m.group() == "not" else "ident", m.group(), line, col)
        elif kind in ("if", "punct"):
            yield (m.group(), m.group(), line, col)
        pos = m.end()
    yield ("eof", "", line, pos - line_start + 1)


def _parse_statements(source: str):
    """Yield (head name or None, [(name, positive), ...]) per statement."""
    tokens = _tokenize(source)
    tok = next(tokens)

    def expect_ident():
        nonlocal tok
        if tok[0] != "ident":
            raise ParseError(f"expected atom, found {tok[1] or 'end of input'!r}", tok[2], tok[3])
        name = tok[1]
        tok = next(tokens)
        return name

    while tok[0] != "eof":
        head = None
        if tok[0] != ":-":
            head = expect_ident()
        body = []
        if tok[0] == ":-":
            tok = next(tokens)
            while True:
                positive = True
                if tok[0] == "not":
                    positive = False
                    tok = next(tokens)
                body.append((expect_ident(), positive))
                if tok[0] != ",":
                    break
                tok = next(tokens)
            if head is None and not body:
                raise ParseError("empty constraint", tok[2], tok[3])
        if tok[0] != ".":
            raise ParseError(f"expected '.', found {tok[1] or 'end of input'!r}", tok[2], tok[3])
        tok = next(tokens)
        yield head, body


def parse_program(source: str) -> Program:
    """Parse rules ``h :- l1, ..., ln.``, facts ``h.`` and constraints ``:- l1, ..., ln.``.

    A constraint ``:- B.`` becomes ``x :- B, not x.`` for a fresh hidden atom ``x``.
    """
    statements = list(_parse_statements(source))
    names = {n for h, b in statements for n in ([h] if h else []) + [a for a, _ in b]}

    atoms: list[Atom] = []
    atom_ids: dict[str, int] = {}

    def intern(name: str, hidden: bool = False) -> int:
        if name not in atom_ids:
            atom_ids[name] = len(atoms)
            atoms.append(Atom(len(atoms), name, hidden))
        return atom_ids[name]

    bodies: list[Body] = []
    body_ids: dict[tuple[frozenset[int], frozenset[int]], int] = {}
    rules: list[Rule] = []
    seen_rules: set[tuple[int, int]] = set()
    seen_constraints: set[frozenset[tuple[int, bool]]] = set()
    fresh = 0
    for head, body in statements:
        if head is not None:
            h = intern(head)
        lits = tuple((intern(n), positive) for n, positive in body)
        constraint = head is None
        if constraint:
            if frozenset(lits) in seen_constraints:
                continue
            seen_constraints.add(frozenset(lits))
            while f"_x{fresh}" in names:
                fresh += 1
            h = intern(f"_x{fresh}", hidden=True)
            names.add(f"_x{fresh}")
            full = lits + ((h, False),)
        else:
            full = lits
        pos = frozenset(a for a, positive in full if positive)
        neg = frozenset(a for a, positive in full if not positive)
        key = (pos, neg)
        if key not in body_ids:
            body_ids[key] = len(bodies)
            bodies.append(Body(len(bodies), pos, neg))
        b = body_ids[key]
        if (h, b) in seen_rules:
            continue
        seen_rules.add((h, b))
        rules.append(Rule(h, b, lits, constraint))
    return Program(atoms, bodies, rules)
