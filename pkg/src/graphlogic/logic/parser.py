"""Recursive-descent parser for the formula language.

Grammar (``#`` starts a comment that runs to end of line)::

    formula  := iff
    iff      := implies ('<->' implies)*
    implies  := or ('->' implies)?
    or       := and ('|' and)*
    and      := unary ('&' unary)*
    unary    := '!' unary | quant | primary
    quant    := ('forall' | 'exists') binder (',' binder)* '.' formula
    binder   := NAME [ 'in' ('V' | 'E' | NAME) | 'subset' ('V' | 'E') ]
    primary  := '(' formula ')' | 'true' | 'false' | atom
    atom     := 'E' '(' t ',' t ')' | 'member' '(' t ',' NAME ')'
              | 'inc' '(' t ',' t ')' | BUILTIN '(' [setref (',' setref)*] ')'
              | '|' NAME '|' CMP (INT | '|' NAME '|' [('+'|'-') INT])
              | NAME '(' t [',' t] ')' | t ('=' | '!=') t
    setref   := 'V' | 'E' | NAME | ('V' | 'E') '-' NAME

A quantifier body extends as far right as possible. ``forall x in X. p``
abbreviates ``forall x. X(x) -> p`` and ``exists x in X. p`` abbreviates
``exists x. X(x) & p``.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .syntax import (BUILTINS, CARD_OPS, Adj, And, Builtin, Card, Const,
                     EdgeMember, Eq, Formula, Iff, Implies, Incident, Member,
                     Not, Or, Quant, SetRef, Sort)


class FormulaSyntaxError(ValueError):
    def __init__(self, message: str, pos: int | None = None):
        self.pos = pos
        super().__init__(message if pos is None else f"{message} (at offset {pos})")


class UnboundVariableError(FormulaSyntaxError):
    pass


class SortError(FormulaSyntaxError):
    pass


KEYWORDS = {"forall", "exists", "subset", "in", "member", "inc", "true", "false", "E", "V"}

_TOKEN = re.compile(r"""
    (?P<ws>\s+|\#[^\n]*)
  | (?P<int>\d+)
  | (?P<name>[A-Za-z_][A-Za-z0-9_]*)
  | (?P<op><->|->|<=|>=|!=|[|&!().,=<>+-])
""", re.VERBOSE)


@dataclass
class Token:
    kind: str  # int | name | op | eof
    text: str
    pos: int


def tokenize(text: str) -> list[Token]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise FormulaSyntaxError(f"unexpected character {text[pos]!r}", pos)
        if m.lastgroup != "ws":
            out.append(Token(m.lastgroup, m.group(), pos))
        pos = m.end()
    out.append(Token("eof", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str, free: dict[str, Sort]):
        self.toks = tokenize(text)
        self.i = 0
        self.scope: list[tuple[str, Sort]] = []
        self.free = dict(free)

    # -- token helpers
    @property
    def tok(self) -> Token:
        return self.toks[self.i]

    def peek(self, k: int = 1) -> Token:
        return self.toks[min(self.i + k, len(self.toks) - 1)]

    def at(self, text: str) -> bool:
        return self.tok.kind in ("op", "name") and self.tok.text == text

    def expect(self, text: str) -> Token:
        if not self.at(text):
            self.fail(f"expected {text!r}, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    def advance(self) -> Token:
        t = self.tok
        self.i += 1
        return t

    def fail(self, message: str, cls=FormulaSyntaxError):
        raise cls(message, self.tok.pos)

    def name(self) -> Token:
        if self.tok.kind != "name" or self.tok.text in KEYWORDS or self.tok.text in BUILTINS:
            self.fail(f"expected a variable name, found {self.tok.text or 'end of input'!r}")
        return self.advance()

    # -- scope helpers
    def lookup(self, name: str) -> Sort | None:
        for n, s in reversed(self.scope):
            if n == name:
                return s
        return self.free.get(name)

    def element(self, tok: Token) -> Sort:
        sort = self.lookup(tok.text)
        if sort is None:
            raise UnboundVariableError(f"unbound variable {tok.text!r}", tok.pos)
        if sort.is_set:
            raise SortError(f"{tok.text!r} is a set variable, expected an element", tok.pos)
        return sort

    def set_var(self, tok: Token, sort: Sort | None) -> Sort:
        """Resolve ``tok`` as a set variable; unbound names become free sets."""
        known = self.lookup(tok.text)
        if known is None:
            if sort is None:
                # sort decided by a later use; vertex set if there is none
                return Sort.VSET
            known = self.free[tok.text] = sort
        if not known.is_set:
            raise SortError(f"{tok.text!r} is an element variable, expected a set", tok.pos)
        if sort is not None and known != sort:
            raise SortError(f"{tok.text!r} used as {sort.value}, declared {known.value}", tok.pos)
        return known

    # -- grammar
    def parse(self) -> Formula:
        f = self.formula()
        if self.tok.kind != "eof":
            self.fail(f"unexpected {self.tok.text!r}")
        return f

    def formula(self) -> Formula:
        left = self.implies()
        while self.at("<->"):
            self.advance()
            left = Iff(left, self.implies())
        return left

    def implies(self) -> Formula:
        left = self.disj()
        if self.at("->"):
            self.advance()
            return Implies(left, self.implies())
        return left

    def disj(self) -> Formula:
        parts = [self.conj()]
        while self.at("|"):
            self.advance()
            parts.append(self.conj())
        return parts[0] if len(parts) == 1 else Or(tuple(parts))

    def conj(self) -> Formula:
        parts = [self.unary()]
        while self.at("&"):
            self.advance()
            parts.append(self.unary())
        return parts[0] if len(parts) == 1 else And(tuple(parts))

    def unary(self) -> Formula:
        if self.at("!"):
            self.advance()
            return Not(self.unary())
        if self.at("forall") or self.at("exists"):
            return self.quantifier()
        return self.primary()

    def quantifier(self) -> Formula:
        kind = self.advance().text
        binders = [self.binder()]
        while self.at(","):
            self.advance()
            binders.append(self.binder())
        self.expect(".")
        for var, sort, _ in binders:
            self.scope.append((var, sort))
        body = self.formula()
        for _ in binders:
            self.scope.pop()
        for var, sort, guard in reversed(binders):
            if guard is not None:
                g = Member(var, guard)
                body = Implies(g, body) if kind == "forall" else And((g, body))
            body = Quant(kind, var, sort, body)
        return body

    def binder(self) -> tuple[str, Sort, str | None]:
        var = self.name().text
        if self.at("subset"):
            self.advance()
            if self.at("V"):
                self.advance()
                return var, Sort.VSET, None
            self.expect("E")
            return var, Sort.ESET, None
        if self.at("in"):
            self.advance()
            if self.at("V"):
                self.advance()
                return var, Sort.VERTEX, None
            if self.at("E"):
                self.advance()
                return var, Sort.EDGE, None
            tok = self.name()
            sort = self.set_var(tok, None if self.lookup(tok.text) else Sort.VSET)
            return var, (Sort.VERTEX if sort == Sort.VSET else Sort.EDGE), tok.text
        return var, Sort.VERTEX, None

    def primary(self) -> Formula:
        tok = self.tok
        if self.at("("):
            self.advance()
            f = self.formula()
            self.expect(")")
            return f
        if self.at("true") or self.at("false"):
            self.advance()
            return Const(tok.text == "true")
        if self.at("|"):
            return self.cardinality()
        if tok.kind != "name":
            self.fail(f"expected a formula, found {tok.text or 'end of input'!r}")
        nxt = self.peek()
        if tok.text == "E" and nxt.text == "(":
            x, y = self.args(2)
            self.vertex(x)
            self.vertex(y)
            return Adj(x.text, y.text)
        if tok.text == "member":
            self.advance()
            self.expect("(")
            x = self.advance()
            esort = self.element(x)
            self.expect(",")
            s = self.name()
            self.set_var(s, Sort.VSET if esort == Sort.VERTEX else Sort.ESET)
            self.expect(")")
            return Member(x.text, s.text)
        if tok.text == "inc":
            v, e = self.args(2)
            self.vertex(v)
            if self.element(e) != Sort.EDGE:
                raise SortError(f"{e.text!r} is not an edge variable", e.pos)
            return Incident(v.text, e.text)
        if tok.text in BUILTINS:
            return self.builtin()
        if nxt.text == "(":
            return self.membership()
        if nxt.text in ("=", "!="):
            x = self.advance()
            op = self.advance().text
            y = self.advance()
            sx, sy = self.element(x), self.element(y)
            if sx != sy:
                raise SortError(f"cannot compare {sx.value} with {sy.value}", y.pos)
            eq = Eq(x.text, y.text)
            return eq if op == "=" else Not(eq)
        self.fail(f"expected a formula, found {tok.text!r}")

    def args(self, count: int) -> list[Token]:
        self.advance()
        self.expect("(")
        out = [self.advance()]
        for _ in range(count - 1):
            self.expect(",")
            out.append(self.advance())
        self.expect(")")
        for t in out:
            if t.kind != "name":
                raise FormulaSyntaxError(f"expected a variable, found {t.text!r}", t.pos)
        return out

    def vertex(self, tok: Token):
        if self.element(tok) != Sort.VERTEX:
            raise SortError(f"{tok.text!r} is not a vertex variable", tok.pos)

    def membership(self) -> Formula:
        s = self.name()
        self.expect("(")
        a = self.advance()
        if a.kind != "name":
            raise FormulaSyntaxError(f"expected a variable, found {a.text!r}", a.pos)
        if self.at(","):
            self.advance()
            b = self.advance()
            if b.kind != "name":
                raise FormulaSyntaxError(f"expected a variable, found {b.text!r}", b.pos)
            self.expect(")")
            self.vertex(a)
            self.vertex(b)
            self.set_var(s, Sort.ESET)
            return EdgeMember(a.text, b.text, s.text)
        self.expect(")")
        esort = self.element(a)
        self.set_var(s, Sort.VSET if esort == Sort.VERTEX else Sort.ESET)
        return Member(a.text, s.text)

    def cardinality(self) -> Formula:
        self.expect("|")
        s = self.name()
        self.set_var(s, None)
        self.expect("|")
        op = self.advance()
        if op.text not in CARD_OPS:
            raise FormulaSyntaxError(f"expected a comparison, found {op.text!r}", op.pos)
        if self.tok.kind == "int":
            return Card(s.text, op.text, int(self.advance().text))
        self.expect("|")
        other = self.name()
        self.set_var(other, None)
        self.expect("|")
        bound = 0
        if self.at("+") or self.at("-"):
            sign = 1 if self.advance().text == "+" else -1
            if self.tok.kind != "int":
                self.fail("expected an integer offset")
            bound = sign * int(self.advance().text)
        return Card(s.text, op.text, bound, other.text)

    def builtin(self) -> Formula:
        name = self.advance().text
        want, arity = BUILTINS[name]
        self.expect("(")
        refs = []
        if not (arity is None and self.at(")")):
            refs.append(self.setref(want))
            while self.at(","):
                self.advance()
                refs.append(self.setref(want))
        self.expect(")")
        if arity is not None and len(refs) != arity:
            self.fail(f"{name} takes {arity} argument(s)")
        return Builtin(name, tuple(refs))

    def setref(self, want: Sort | None) -> SetRef:
        if self.at("V") or self.at("E"):
            universe = Sort.VSET if self.advance().text == "V" else Sort.ESET
            if want is not None and universe != want:
                self.fail(f"expected a {want.value}")
            if self.at("-"):
                self.advance()
                tok = self.name()
                self.set_var(tok, universe)
                return SetRef(tok.text, universe, True)
            return SetRef(None, universe)
        tok = self.name()
        return SetRef(tok.text, self.set_var(tok, want))


def parse_formula(text: str, free: dict[str, Sort] | None = None) -> Formula:
    """Parse ``text``; element variables in ``free`` may occur unbound.

    Raises FormulaSyntaxError (with the offending offset) on malformed input,
    UnboundVariableError for an undeclared element variable.
    """
    return _Parser(text, free or {}).parse()
