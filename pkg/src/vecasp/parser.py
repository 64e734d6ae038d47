"""Reading and writing ground programs in a small Clingo-like syntax.

::

    p :- q, not r.      % rule
    q.                  % fact
    :- a, not b.        % constraint

Atoms start with a lowercase letter followed by ``[A-Za-z0-9_]*`` and may carry
a parenthesized ground-term suffix such as ``h(1,2)``; whitespace inside the
suffix is dropped from the name. ``%`` starts a comment.

A comment line of the form ``%#atoms a b c`` placed before the first statement
fixes the leading part of the atom order. Other tools read it as a plain
comment; :func:`render_program` emits it only when the statements alone would
not reproduce the atom order.
"""

from __future__ import annotations

from .core import AtomTable, Constraint, Literal, Program, Rule

_IDENT_START = set("abcdefghijklmnopqrstuvwxyz")
_IDENT_CHARS = set("abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ0123456789_")
_PRAGMA = "%#atoms"


class ParseError(ValueError):
    def __init__(self, line: int, column: int, message: str):
        super().__init__(f"{line}:{column}: {message}")
        self.line = line
        self.column = column
        self.message = message


class _Scanner:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0
        self.line = 1
        self.col = 1
        self.pragma_atoms: list[str] = []
        self.seen_statement = False

    def error(self, message: str, line: int | None = None, col: int | None = None):
        raise ParseError(line or self.line, col or self.col, message)

    def peek(self, k: int = 0) -> str:
        i = self.pos + k
        return self.text[i] if i < len(self.text) else ""

    def advance(self, k: int = 1) -> None:
        for _ in range(k):
            if self.text[self.pos] == "\n":
                self.line += 1
                self.col = 1
            else:
                self.col += 1
            self.pos += 1

    def skip_space(self) -> None:
        while self.pos < len(self.text):
            c = self.text[self.pos]
            if c.isspace():
                self.advance()
            elif c == "%":
                start = self.pos
                at_line_start = self.col == 1
                while self.pos < len(self.text) and self.text[self.pos] != "\n":
                    self.advance()
                comment = self.text[start:self.pos]
                if at_line_start and comment.startswith(_PRAGMA) and (
                    len(comment) == len(_PRAGMA) or comment[len(_PRAGMA)].isspace()
                ):
                    if self.seen_statement:
                        self.error("%#atoms must precede all statements")
                    self.pragma_atoms.extend(comment[len(_PRAGMA):].split())
            else:
                break

    def at_end(self) -> bool:
        self.skip_space()
        return self.pos >= len(self.text)

    def word(self) -> str:
        start = self.pos
        while self.peek() in _IDENT_CHARS and self.peek():
            self.advance()
        return self.text[start:self.pos]

    def terms(self) -> str:
        # Called just after '('; returns the normalized "(t1,t2,...)" suffix.
        parts = []
        while True:
            self.skip_inline()
            if self.peek() == "-":
                self.advance()
                term = "-" + self.word()
            else:
                term = self.word()
            if term in ("", "-"):
                self.error("expected a ground term")
            self.skip_inline()
            if self.peek() == "(":
                self.advance()
                term += self.terms()
                self.skip_inline()
            parts.append(term)
            c = self.peek()
            if c == ",":
                self.advance()
            elif c == ")":
                self.advance()
                return "(" + ",".join(parts) + ")"
            else:
                self.error("expected ',' or ')' in term list")

    def skip_inline(self) -> None:
        while self.peek() and self.peek() in " \t\r\n":
            self.advance()

    def atom(self) -> tuple[str, int, int]:
        line, col = self.line, self.col
        if self.peek() not in _IDENT_START or not self.peek():
            self.error("expected an atom")
        name = self.word()
        if self.peek() == "(":
            self.advance()
            name += self.terms()
        return name, line, col


def parse_program(source: str) -> Program:
    """Parse program text; atoms are ordered by first textual occurrence."""
    sc = _Scanner(source)
    names: dict[str, int] = {}
    rules: list[Rule] = []
    constraints: list[Constraint] = []

    def intern(name: str) -> int:
        return names.setdefault(name, len(names))

    def literal() -> Literal:
        sc.skip_space()
        line, col = sc.line, sc.col
        name, _, _ = sc.atom()
        if name == "not":
            if not (sc.peek().isspace() or sc.peek() == "%"):
                sc.error("'not' is reserved", line, col)
            sc.skip_space()
            name, aline, acol = sc.atom()
            if name == "not":
                sc.error("'not' is reserved", aline, acol)
            return Literal(intern(name), True)
        return Literal(intern(name))

    def body() -> tuple[Literal, ...]:
        lits = [literal()]
        while True:
            sc.skip_space()
            c = sc.peek()
            if c == ",":
                sc.advance()
                lits.append(literal())
            elif c == ".":
                sc.advance()
                return tuple(lits)
            elif not c:
                sc.error("unterminated statement")
            else:
                sc.error(f"unexpected character {c!r} in body")

    sc.skip_space()
    for name in sc.pragma_atoms:
        intern(name)
    while not sc.at_end():
        sc.seen_statement = True
        if sc.peek() == ":" and sc.peek(1) == "-":
            sc.advance(2)
            constraints.append(Constraint(body()))
            continue
        if sc.peek() in (".", ":", ","):
            sc.error("empty rule head")
        name, line, col = sc.atom()
        if name == "not":
            sc.error("'not' is reserved", line, col)
        head = intern(name)
        sc.skip_space()
        c = sc.peek()
        if c == ".":
            sc.advance()
            rules.append(Rule(head))
        elif c == ":" and sc.peek(1) == "-":
            sc.advance(2)
            rules.append(Rule(head, body()))
        elif not c:
            sc.error("unterminated statement")
        else:
            sc.error(f"expected '.' or ':-' after rule head, got {c!r}")
    return Program(AtomTable(names), tuple(rules), tuple(constraints))


def _lit_text(program: Program, l: Literal) -> str:
    name = program.atoms[l.atom]
    return f"not {name}" if l.negated else name


def _occurrence_order(program: Program) -> list[int]:
    seen: dict[int, None] = {}
    for r in program.rules:
        seen.setdefault(r.head)
        for l in r.body:
            seen.setdefault(l.atom)
    for c in program.constraints:
        for l in c.body:
            seen.setdefault(l.atom)
    return list(seen)


def render_program(program: Program) -> str:
    """Serialize ``program`` so that :func:`parse_program` reproduces it exactly."""
    lines = []
    if _occurrence_order(program) != list(range(program.n)):
        lines.append(" ".join([_PRAGMA, *program.atoms.names]))
    for r in program.rules:
        head = program.atoms[r.head]
        if r.body:
            lines.append(f"{head} :- {', '.join(_lit_text(program, l) for l in r.body)}.")
        else:
            lines.append(f"{head}.")
    for c in program.constraints:
        lines.append(f":- {', '.join(_lit_text(program, l) for l in c.body)}.")
    return "\n".join(lines) + ("\n" if lines else "")


def read_program(path) -> Program:
    with open(path, encoding="utf-8") as fh:
        return parse_program(fh.read())


def write_program(program: Program, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(render_program(program))
