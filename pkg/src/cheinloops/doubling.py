"""Doubling construction: a group G and an OpMatrix give a magma on G u Gbar.

Indices 0..n-1 are the group elements, n..2n-1 are their barred copies.
The four quarters of the doubled table are filled by the matrix entries
alpha (G x G), beta (G x Gbar), gamma (Gbar x G), delta (Gbar x Gbar);
the two mixed quarters land in Gbar, the other two in G.  Every doubled
table is a Latin square, which build_double verifies rather than assumes.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groups import Group
from .pairops import NAMED_MATRICES, OpMatrix, quarter_matrix
from .tables import CayleyTable, is_latin


@dataclass
class DoubledMagma:
    """Doubled table of order 2n plus its provenance."""

    table: CayleyTable
    group: Group
    matrix: OpMatrix

    @property
    def n(self) -> int:
        return self.table.n

    def sidecar(self) -> dict:
        """Construction record to store next to an emitted table file."""
        return {
            "group": str(self.group.spec) if self.group.spec is not None else "custom",
            "matrix": str(self.matrix),
            "base_order": self.group.n,
            "order": self.table.n,
        }


def double_table(g: Group, m: OpMatrix) -> np.ndarray:
    """Raw 2n x 2n doubled table as an array."""
    n = g.n
    qa = quarter_matrix(m.alpha, g)
    qb = quarter_matrix(m.beta, g)
    qc = quarter_matrix(m.gamma, g)
    qd = quarter_matrix(m.delta, g)
    return np.block([[qa, qb + n], [qc + n, qd]]).astype(np.int32)


def build_double(g: Group, m: OpMatrix) -> DoubledMagma:
    """Assemble the doubled magma and verify the Latin-square property."""
    table = CayleyTable(double_table(g, m))
    if not is_latin(table):
        raise AssertionError(f"doubled table for {m} is not a Latin square")
    return DoubledMagma(table=table, group=g, matrix=m)


def chein(g: Group) -> DoubledMagma:
    """The classical doubling: x*y = xy, x*by = b(yx), bx*y = b(x y^-1), bx*by = y^-1 x."""
    return build_double(g, NAMED_MATRICES["m_c"])
