"""A small identity language evaluated over Cayley tables.

Grammar, with '*' left-associative and '^-1' binding tighter:

    identity := term '=' term
    term     := factor | term '*' factor
    factor   := atom | atom '^-1'
    atom     := name | '(' term ')'

Names are a letter followed by letters or digits.  Whitespace is
insignificant.  Checks run vectorized over assignment grids, chunked
over the leading variables so memory stays bounded, and always report
the lexicographically first counterexample.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import BadArgumentError, BudgetError, IdentitySyntaxError, InverseUndefinedError
from .tables import CayleyTable, find_neutral, two_sided_inverse_map

VARIABLE_LIMIT = 4
EVALUATION_BUDGET = 10**9
_CHUNK = 1 << 22


class Term:
    pass


@dataclass(frozen=True)
class Var(Term):
    name: str


@dataclass(frozen=True)
class Product(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Inverse(Term):
    child: Term


@dataclass(frozen=True)
class Identity:
    lhs: Term
    rhs: Term

    @property
    def variables(self) -> tuple[str, ...]:
        """Distinct names in first-occurrence order, left side first."""
        seen: list[str] = []

        def walk(t: Term) -> None:
            if isinstance(t, Var):
                if t.name not in seen:
                    seen.append(t.name)
            elif isinstance(t, Product):
                walk(t.left)
                walk(t.right)
            else:
                walk(t.child)

        walk(self.lhs)
        walk(self.rhs)
        return tuple(seen)

    def __str__(self) -> str:
        return f"{format_term(self.lhs)} = {format_term(self.rhs)}"


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    pos = 0
    while pos < len(text):
        ch = text[pos]
        if ch.isspace():
            pos += 1
            continue
        if ch.isalpha():
            end = pos + 1
            while end < len(text) and (text[end].isalpha() or text[end].isdigit()):
                end += 1
            tokens.append(("name", text[pos:end], pos))
            pos = end
        elif ch == "*":
            tokens.append(("star", ch, pos))
            pos += 1
        elif ch == "(":
            tokens.append(("lparen", ch, pos))
            pos += 1
        elif ch == ")":
            tokens.append(("rparen", ch, pos))
            pos += 1
        elif ch == "=":
            tokens.append(("equals", ch, pos))
            pos += 1
        elif ch == "^":
            if text[pos : pos + 3] != "^-1":
                raise IdentitySyntaxError("expected '^-1'", pos + 1)
            tokens.append(("inv", "^-1", pos))
            pos += 3
        else:
            raise IdentitySyntaxError(f"unexpected character {ch!r}", pos + 1)
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.tokens = _tokenize(text)
        self.k = 0

    def peek(self) -> tuple[str, str, int]:
        return self.tokens[self.k]

    def take(self) -> tuple[str, str, int]:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect(self, kind: str) -> tuple[str, str, int]:
        tok = self.take()
        if tok[0] != kind:
            shown = tok[1] if tok[1] else "end of input"
            raise IdentitySyntaxError(f"expected {kind}, got {shown!r}", tok[2] + 1)
        return tok

    def term(self) -> Term:
        node = self.factor()
        while self.peek()[0] == "star":
            self.take()
            node = Product(node, self.factor())
        return node

    def factor(self) -> Term:
        node = self.atom()
        if self.peek()[0] == "inv":
            self.take()
            node = Inverse(node)
        return node

    def atom(self) -> Term:
        kind, value, pos = self.take()
        if kind == "name":
            return Var(value)
        if kind == "lparen":
            node = self.term()
            self.expect("rparen")
            return node
        shown = value if value else "end of input"
        raise IdentitySyntaxError(f"expected a name or '(', got {shown!r}", pos + 1)


def parse_identity(text: str) -> Identity:
    """Parse 'term = term'; raises IdentitySyntaxError with a 1-based position."""
    parser = _Parser(text)
    lhs = parser.term()
    parser.expect("equals")
    rhs = parser.term()
    parser.expect("end")
    return Identity(lhs, rhs)


def format_term(t: Term) -> str:
    """Print with minimal parentheses; round-trips through parse_identity."""
    if isinstance(t, Var):
        return t.name
    if isinstance(t, Inverse):
        inner = format_term(t.child)
        if not isinstance(t.child, Var):
            inner = f"({inner})"
        return f"{inner}^-1"
    left = format_term(t.left)
    right = format_term(t.right)
    if isinstance(t.right, Product):
        right = f"({right})"
    return f"{left}*{right}"


BUILTINS: dict[str, str] = {
    "associativity": "(x*y)*z = x*(y*z)",
    "commutativity": "x*y = y*x",
    "flexible": "x*(y*x) = (x*y)*x",
    "left_bol": "x*(y*(x*z)) = (x*(y*x))*z",
    "right_bol": "((z*x)*y)*x = z*((x*y)*x)",
    "moufang_1": "((x*y)*x)*z = x*(y*(x*z))",
    "moufang_2": "((z*x)*y)*x = z*(x*(y*x))",
    "moufang_3": "(x*y)*(z*x) = x*((y*z)*x)",
    "moufang_4": "(x*y)*(z*x) = (x*(y*z))*x",
    "left_alternative": "x*(x*y) = (x*x)*y",
    "right_alternative": "(y*x)*x = y*(x*x)",
    "left_ip": "x^-1*(x*y) = y",
    "right_ip": "(y*x)*x^-1 = y",
}


@lru_cache(maxsize=None)
def get_builtin(name: str) -> Identity:
    if name not in BUILTINS:
        raise BadArgumentError(f"unknown builtin law {name!r}")
    return parse_identity(BUILTINS[name])


@dataclass(frozen=True)
class Counterexample:
    """First failing assignment plus both side values."""

    assignment: tuple[tuple[str, int], ...]
    lhs: int
    rhs: int

    def format(self) -> str:
        pairs = " ".join(f"{name}={value}" for name, value in self.assignment)
        return f"{pairs} | lhs={self.lhs} rhs={self.rhs}"


def _uses_inverse(t: Term) -> bool:
    if isinstance(t, Var):
        return False
    if isinstance(t, Inverse):
        return True
    return _uses_inverse(t.left) or _uses_inverse(t.right)


@lru_cache(maxsize=16)
def _grids(n: int, count: int) -> np.ndarray:
    out = np.indices((n,) * count, dtype=np.int64).reshape(count, -1)
    out.setflags(write=False)
    return out


def _eval(t: Term, env: dict, flat: np.ndarray, n: int, inv: np.ndarray | None):
    if isinstance(t, Var):
        return env[t.name]
    if isinstance(t, Product):
        a = _eval(t.left, env, flat, n, inv)
        b = _eval(t.right, env, flat, n, inv)
        return flat[a * n + b]
    return inv[_eval(t.child, env, flat, n, inv)]


def check_identity(table: CayleyTable, identity: Identity | str) -> Counterexample | None:
    """None if the identity holds; otherwise the lexicographically first failure."""
    if isinstance(identity, str):
        identity = parse_identity(identity)
    names = identity.variables
    k = len(names)
    n = table.n
    if k > VARIABLE_LIMIT:
        raise BudgetError(f"identity uses {k} variables; the limit is {VARIABLE_LIMIT}")
    if n**k > EVALUATION_BUDGET:
        raise BudgetError(
            f"{n}^{k} assignments exceed the evaluation budget of {EVALUATION_BUDGET}"
        )
    inv = None
    if _uses_inverse(identity.lhs) or _uses_inverse(identity.rhs):
        neutral = find_neutral(table)
        if neutral is None:
            raise InverseUndefinedError("magma has no unique two-sided neutral element")
        inv = two_sided_inverse_map(table, neutral)
        if inv is None:
            raise InverseUndefinedError("magma lacks unique two-sided inverses")
        inv = inv.astype(np.int64)
    flat = table.array.ravel().astype(np.int64)

    # Enumerate leading variables in Python so the gridded tail stays small.
    lead = 0
    while n ** (k - lead) > _CHUNK:
        lead += 1
    tail = k - lead
    grids = _grids(n, tail) if tail else None
    for prefix in itertools.product(range(n), repeat=lead):
        env: dict = {names[i]: prefix[i] for i in range(lead)}
        for i in range(tail):
            env[names[lead + i]] = grids[i]
        lhs = _eval(identity.lhs, env, flat, n, inv)
        rhs = _eval(identity.rhs, env, flat, n, inv)
        if tail == 0:
            if int(lhs) != int(rhs):
                assignment = tuple(zip(names, (int(v) for v in prefix)))
                return Counterexample(assignment, int(lhs), int(rhs))
            continue
        bad = lhs != rhs
        if bad.any():
            at = int(np.argmax(bad))
            values = list(prefix) + [int(grids[i][at]) for i in range(tail)]
            assignment = tuple(zip(names, values))
            lv = int(lhs[at]) if np.ndim(lhs) else int(lhs)
            rv = int(rhs[at]) if np.ndim(rhs) else int(rhs)
            return Counterexample(assignment, lv, rv)
    return None
