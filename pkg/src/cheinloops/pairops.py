"""The eight pair operations used to fill the quarters of a doubled table.

Each operation permutes a formal pair (x, y) by optionally swapping the
components and optionally inverting either one, then a product map
collapses the pair by multiplying in the base group.  The eight
operations close under composition into a group isomorphic to the
dihedral group of order 8, generated by the swap s and the quarter-turn
t: (x, y) -> (y^-1, x).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import IntEnum

import numpy as np

from .errors import BadArgumentError
from .groups import Group


class PairOp(IntEnum):
    I = 0
    S = 1
    T = 2
    T2 = 3
    T3 = 4
    ST = 5
    ST2 = 6
    ST3 = 7

    @property
    def symbol(self) -> str:
        return _SYMBOLS[self]

    @classmethod
    def from_symbol(cls, text: str) -> "PairOp":
        key = text.strip().lower()
        if key not in _BY_SYMBOL:
            raise BadArgumentError(f"unknown pair operation {text!r}")
        return _BY_SYMBOL[key]


_SYMBOLS = ("i", "s", "t", "t2", "t3", "st", "st2", "st3")
_BY_SYMBOL = {sym: PairOp(k) for k, sym in enumerate(_SYMBOLS)}

# (swap, invert first, invert second) acting on (x, y); e.g. t sends
# (x, y) to (y^-1, x) and st3 sends it to (x, y^-1).
_SIGNATURES: dict[PairOp, tuple[bool, bool, bool]] = {
    PairOp.I: (False, False, False),
    PairOp.S: (True, False, False),
    PairOp.T: (True, True, False),
    PairOp.T2: (False, True, True),
    PairOp.T3: (True, False, True),
    PairOp.ST: (False, True, False),
    PairOp.ST2: (True, True, True),
    PairOp.ST3: (False, False, True),
}


def transform(op: PairOp, x: int, y: int, g: Group) -> tuple[int, int]:
    """Apply op to the pair (x, y) without collapsing it."""
    swap, inv_first, inv_second = _SIGNATURES[op]
    u, v = (y, x) if swap else (x, y)
    if inv_first:
        u = g.inverse(u)
    if inv_second:
        v = g.inverse(v)
    return u, v


def apply(op: PairOp, x: int, y: int, g: Group) -> int:
    """Transform the pair by op, then multiply the components in g."""
    u, v = transform(op, x, y, g)
    return g.mul(u, v)


def _compose_signatures() -> dict[tuple[PairOp, PairOp], PairOp]:
    # Compose on a formal pair: track (component, inverted) symbolically and
    # match the result back to a signature.  Asserts closure.
    by_sig = {sig: op for op, sig in _SIGNATURES.items()}
    table = {}
    for first, second in itertools.product(PairOp, repeat=2):
        pair = [("x", False), ("y", False)]
        for op in (first, second):
            swap, inv_first, inv_second = _SIGNATURES[op]
            if swap:
                pair = [pair[1], pair[0]]
            if inv_first:
                pair[0] = (pair[0][0], not pair[0][1])
            if inv_second:
                pair[1] = (pair[1][0], not pair[1][1])
        swapped = pair[0][0] == "y"
        table[(first, second)] = by_sig[(swapped, pair[0][1], pair[1][1])]
    return table


_COMPOSE = _compose_signatures()


def compose(first: PairOp, then: PairOp) -> PairOp:
    """Right-action composition: apply first, then the second operation."""
    return _COMPOSE[(first, then)]


def quarter_matrix(op: PairOp, g: Group) -> np.ndarray:
    """n x n table Q with Q[x, y] = apply(op, x, y, g), built vectorized."""
    arr = g.table.array
    inv = g.inv
    if op == PairOp.I:
        out = arr
    elif op == PairOp.S:
        out = arr.T
    elif op == PairOp.T:
        out = arr[inv].T  # y^-1 * x
    elif op == PairOp.T2:
        out = arr[np.ix_(inv, inv)]  # x^-1 * y^-1
    elif op == PairOp.T3:
        out = arr[:, inv].T  # y * x^-1
    elif op == PairOp.ST:
        out = arr[inv]  # x^-1 * y
    elif op == PairOp.ST2:
        out = arr[np.ix_(inv, inv)].T  # y^-1 * x^-1
    else:
        out = arr[:, inv]  # x * y^-1
    return np.ascontiguousarray(out)


@dataclass(frozen=True)
class OpMatrix:
    """Assignment of one pair operation to each quarter of the doubled table."""

    alpha: PairOp
    beta: PairOp
    gamma: PairOp
    delta: PairOp

    def __str__(self) -> str:
        return ",".join(op.symbol for op in self.ops)

    @property
    def ops(self) -> tuple[PairOp, PairOp, PairOp, PairOp]:
        return (self.alpha, self.beta, self.gamma, self.delta)

    @classmethod
    def parse(cls, text: str) -> "OpMatrix":
        named = NAMED_MATRICES.get(text.strip().lower())
        if named is not None:
            return named
        parts = text.strip().split(",")
        if len(parts) != 4:
            raise BadArgumentError(
                f"matrix must be a name or four comma-separated operations, got {text!r}"
            )
        a, b, c, d = (PairOp.from_symbol(p) for p in parts)
        return cls(a, b, c, d)


def all_matrices() -> list[OpMatrix]:
    """All 4096 matrices in canonical enumeration order."""
    return [OpMatrix(*ops) for ops in itertools.product(PairOp, repeat=4)]


def _m(text: str) -> OpMatrix:
    a, b, c, d = (PairOp.from_symbol(p) for p in text.split(","))
    return OpMatrix(a, b, c, d)


# The eight assignments whose doubles are Moufang loops over any suitable
# nonabelian group.  G_iota doubles to the direct product with C2, M_c is
# the classical doubling, and the op_* row holds their opposites.
NAMED_MATRICES: dict[str, OpMatrix] = {
    "g_iota": _m("i,i,i,i"),
    "g_tau": _m("i,t3,t,t2"),
    "m_c": _m("i,s,st3,t"),
    "m_sigma": _m("i,st,s,t3"),
    "op_g_iota": _m("s,s,s,s"),
    "op_g_tau": _m("s,st,st3,st2"),
    "op_m_c": _m("s,t3,i,st"),
    "op_m_sigma": _m("s,i,t,st3"),
}

CANONICAL_NAMES: dict[OpMatrix, str] = {m: name for name, m in NAMED_MATRICES.items()}


def opposite_matrix(m: OpMatrix) -> OpMatrix:
    """Matrix of the opposite magma: swap beta/gamma and precompose the swap."""
    return OpMatrix(
        alpha=compose(PairOp.S, m.alpha),
        beta=compose(PairOp.S, m.gamma),
        gamma=compose(PairOp.S, m.beta),
        delta=compose(PairOp.S, m.delta),
    )


def t_transform(m: OpMatrix) -> OpMatrix:
    """The twist sending G_iota's matrix to G_tau's and M_c's to M_sigma's."""
    return OpMatrix(
        alpha=m.alpha,
        beta=compose(PairOp.T3, m.beta),
        gamma=compose(m.gamma, PairOp.T),
        delta=compose(PairOp.T2, m.delta),
    )
