"""Dense Cayley tables over 0-based element indices, plus the text format.

The text format is line-oriented ASCII with LF endings: the first
non-comment line holds the order n, followed by n lines of n
whitespace-separated entries.  Lines starting with '#' are ignored.
"""

from __future__ import annotations

import numpy as np

from .errors import TableFormatError


class CayleyTable:
    """Operation table of a finite magma on elements 0..n-1."""

    def __init__(self, array) -> None:
        arr = np.ascontiguousarray(np.asarray(array, dtype=np.int32))
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise TableFormatError(f"table must be square, got shape {arr.shape}")
        n = int(arr.shape[0])
        if n == 0:
            raise TableFormatError("table must have positive order")
        if arr.size and (arr.min() < 0 or arr.max() >= n):
            bad = int(arr.ravel()[np.argmax((arr < 0) | (arr >= n))])
            raise TableFormatError(f"entry {bad} out of range for order {n}")
        arr.setflags(write=False)
        self.array = arr
        self.n = n

    def mul(self, x: int, y: int) -> int:
        return int(self.array[x, y])

    def transpose(self) -> "CayleyTable":
        return CayleyTable(self.array.T)

    def __eq__(self, other) -> bool:
        if not isinstance(other, CayleyTable):
            return NotImplemented
        return self.n == other.n and bool(np.array_equal(self.array, other.array))

    def __hash__(self):
        return hash((self.n, self.array.tobytes()))

    def __repr__(self) -> str:
        return f"CayleyTable(order={self.n})"


def is_latin(table: CayleyTable) -> bool:
    """True iff every row and every column is a permutation of 0..n-1."""
    arr = table.array
    want = np.arange(table.n, dtype=np.int32)
    return bool(
        np.array_equal(np.sort(arr, axis=1), np.broadcast_to(want, arr.shape))
        and np.array_equal(np.sort(arr, axis=0), np.broadcast_to(want[:, None], arr.shape))
    )


def find_neutral(table: CayleyTable) -> int | None:
    """Index of the unique two-sided neutral element, or None."""
    arr = table.array
    want = np.arange(table.n, dtype=np.int32)
    rows = np.nonzero((arr == want).all(axis=1))[0]
    hits = [int(e) for e in rows if np.array_equal(arr[:, e], want)]
    if len(hits) != 1:
        return None
    return hits[0]


def two_sided_inverse_map(table: CayleyTable, neutral: int) -> np.ndarray | None:
    """Array inv with x*inv[x] = inv[x]*x = neutral for all x, or None.

    Uniqueness of the right inverse is only guaranteed on Latin squares;
    callers wanting strict uniqueness on arbitrary magmas should check
    (row == neutral).sum() themselves.
    """
    arr = table.array
    n = table.n
    hits = arr == neutral
    if not (hits.sum(axis=1) == 1).all():
        return None
    rinv = np.argmax(hits, axis=1).astype(np.int32)
    if not (arr[rinv, np.arange(n)] == neutral).all():
        return None
    return rinv


def parse_table_text(text: str) -> CayleyTable:
    """Parse the Cayley-table text format; comments ('#') are skipped."""
    lines: list[tuple[int, str]] = []
    for lineno, raw in enumerate(text.split("\n"), start=1):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        lines.append((lineno, stripped))
    if not lines:
        raise TableFormatError("no table content found")
    lineno, head = lines[0]
    try:
        n = int(head)
    except ValueError:
        raise TableFormatError(f"line {lineno}: expected the order, got {head!r}") from None
    if n <= 0:
        raise TableFormatError(f"line {lineno}: order must be positive, got {n}")
    body = lines[1:]
    if len(body) != n:
        raise TableFormatError(f"expected {n} rows after the order line, got {len(body)}")
    rows = []
    for lineno, line in body:
        parts = line.split()
        if len(parts) != n:
            raise TableFormatError(f"line {lineno}: expected {n} entries, got {len(parts)}")
        try:
            rows.append([int(p) for p in parts])
        except ValueError:
            raise TableFormatError(f"line {lineno}: non-integer entry") from None
    return CayleyTable(np.array(rows, dtype=np.int32))


def format_table_text(table: CayleyTable) -> str:
    """Emit the text format: order line, then n rows, LF endings."""
    out = [str(table.n)]
    out.extend(" ".join(str(int(v)) for v in row) for row in table.array)
    return "\n".join(out) + "\n"
