"""Finite group constructions over 0-based indices with identity at 0.

Supported specs: C<n> (cyclic), D<2m> (dihedral, order 2m), S<m>
(symmetric, m <= 6), Q8 (quaternion), and x-joined direct products such
as C2xC2 or S3xC2.  Element orderings are deterministic per kind:
cyclic counts powers of the generator, dihedral lists rotations then
reflections, symmetric uses lexicographic one-line notation, and Q8 is
1, -1, i, -i, j, -j, k, -k.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field

import numpy as np

from .errors import GroupSpecError, NotAGroupError
from .tables import CayleyTable

_MAX_SYMMETRIC_DEGREE = 6
_ATOM_RE = re.compile(r"^([CDS])([0-9]+)$|^(Q8)$")


@dataclass(frozen=True)
class GroupSpec:
    """Symbolic description of a constructible group."""

    kind: str
    degree: int = 0
    factors: tuple["GroupSpec", ...] = ()

    def __str__(self) -> str:
        if self.kind == "cyclic":
            return f"C{self.degree}"
        if self.kind == "dihedral":
            return f"D{2 * self.degree}"
        if self.kind == "symmetric":
            return f"S{self.degree}"
        if self.kind == "quaternion8":
            return "Q8"
        return "x".join(str(f) for f in self.factors)

    @property
    def order(self) -> int:
        if self.kind == "cyclic":
            return self.degree
        if self.kind == "dihedral":
            return 2 * self.degree
        if self.kind == "symmetric":
            out = 1
            for k in range(2, self.degree + 1):
                out *= k
            return out
        if self.kind == "quaternion8":
            return 8
        out = 1
        for f in self.factors:
            out *= f.order
        return out


def parse_group_spec(text: str) -> GroupSpec:
    """Parse a spec string like 'S3', 'D8', or 'S3xC2'."""
    parts = text.strip().split("x")
    if any(not p for p in parts):
        raise GroupSpecError(f"bad group spec {text!r}")
    atoms = [_parse_atom(p, text) for p in parts]
    if len(atoms) == 1:
        return atoms[0]
    return GroupSpec(kind="product", factors=tuple(atoms))


def _parse_atom(token: str, full: str) -> GroupSpec:
    m = _ATOM_RE.match(token)
    if m is None:
        raise GroupSpecError(f"bad group spec {full!r}: unknown token {token!r}")
    if m.group(3) == "Q8":
        return GroupSpec(kind="quaternion8")
    letter, number = m.group(1), int(m.group(2))
    if letter == "C":
        if number < 1:
            raise GroupSpecError(f"C{number}: order must be at least 1")
        return GroupSpec(kind="cyclic", degree=number)
    if letter == "D":
        if number < 2 or number % 2 != 0:
            raise GroupSpecError(f"D{number}: dihedral order must be even and at least 2")
        return GroupSpec(kind="dihedral", degree=number // 2)
    if number < 1 or number > _MAX_SYMMETRIC_DEGREE:
        raise GroupSpecError(f"S{number}: symmetric degree must be 1..{_MAX_SYMMETRIC_DEGREE}")
    return GroupSpec(kind="symmetric", degree=number)


@dataclass
class Group:
    """Validated finite group: Cayley table, inverse map, optional spec."""

    table: CayleyTable
    inv: np.ndarray
    spec: GroupSpec | None = None
    _center: np.ndarray = field(init=False, repr=False, default=None)

    @property
    def n(self) -> int:
        return self.table.n

    def mul(self, x: int, y: int) -> int:
        return int(self.table.array[x, y])

    def inverse(self, x: int) -> int:
        return int(self.inv[x])

    @property
    def center(self) -> np.ndarray:
        if self._center is None:
            arr = self.table.array
            self._center = np.nonzero((arr == arr.T).all(axis=1))[0]
        return self._center


def validate_group(table: CayleyTable) -> Group:
    """Check the group axioms; raise NotAGroupError with a witness if violated.

    The neutral element is required to sit at index 0, matching every
    construction in this package.
    """
    arr = table.array
    n = table.n
    witness = _associativity_witness(arr)
    if witness is not None:
        x, y, z = witness
        raise NotAGroupError(
            f"not associative: ({x}*{y})*{z} != {x}*({y}*{z})", witness=witness
        )
    idx = np.arange(n, dtype=np.int32)
    if not (np.array_equal(arr[0], idx) and np.array_equal(arr[:, 0], idx)):
        raise NotAGroupError("no identity element at index 0")
    rinv = np.argmax(arr == 0, axis=1).astype(np.int32)
    ok = (arr[idx, rinv] == 0) & (arr[rinv, idx] == 0)
    if not ok.all():
        bad = int(np.argmin(ok))
        raise NotAGroupError(f"element {bad} has no two-sided inverse", witness=(bad,))
    return Group(table=table, inv=rinv)


def _associativity_witness(arr: np.ndarray) -> tuple[int, int, int] | None:
    """First (x, y, z) with (xy)z != x(yz) in lexicographic order, else None."""
    n = arr.shape[0]
    # Chunk over x so the intermediate (b, n, n) grids stay around 4M entries.
    step = max(1, 2**22 // max(1, n * n))
    for x0 in range(0, n, step):
        block = arr[x0 : x0 + step]
        lhs = arr[block]  # lhs[b, y, z] = (x*y)*z
        rhs = block[:, arr]  # rhs[b, y, z] = x*(y*z)
        bad = lhs != rhs
        if bad.any():
            b, y, z = np.argwhere(bad)[0]
            return (int(x0 + b), int(y), int(z))
    return None


def is_abelian(g: Group) -> bool:
    arr = g.table.array
    return bool((arr == arr.T).all())


def is_elementary_abelian_2(g: Group) -> bool:
    """True iff x*x is the identity for every x and the group is abelian."""
    arr = g.table.array
    return bool((np.diagonal(arr) == 0).all()) and is_abelian(g)


def center_index(g: Group) -> int:
    """|G| divided by the size of the center."""
    return g.n // len(g.center)


def squares_central(g: Group) -> bool:
    """True iff x*x lies in the center for every x; equivalent to xxy = yxx."""
    members = set(int(v) for v in g.center)
    return all(int(v) in members for v in np.diagonal(g.table.array))


def build_group(spec: GroupSpec | str) -> Group:
    """Construct and validate the group described by spec."""
    if isinstance(spec, str):
        spec = parse_group_spec(spec)
    g = validate_group(CayleyTable(_build_table(spec)))
    g.spec = spec
    return g


def _build_table(spec: GroupSpec) -> np.ndarray:
    if spec.kind == "cyclic":
        return _cyclic_table(spec.degree)
    if spec.kind == "dihedral":
        return _dihedral_table(spec.degree)
    if spec.kind == "symmetric":
        return _symmetric_table(spec.degree)
    if spec.kind == "quaternion8":
        return _quaternion8_table()
    if spec.kind == "product":
        out = _build_table(spec.factors[0])
        for f in spec.factors[1:]:
            out = _product_table(out, _build_table(f))
        return out
    raise GroupSpecError(f"unknown group kind {spec.kind!r}")


def _cyclic_table(n: int) -> np.ndarray:
    i = np.arange(n, dtype=np.int32)
    return (i[:, None] + i[None, :]) % n


def _dihedral_table(m: int) -> np.ndarray:
    # Indices 0..m-1 are rotations r^i, indices m..2m-1 are reflections s*r^i,
    # with r^m = s^2 = 1 and r*s = s*r^-1.
    i = np.arange(m, dtype=np.int32)
    rot_rot = (i[:, None] + i[None, :]) % m
    rot_ref = m + (i[None, :] - i[:, None]) % m
    ref_rot = m + (i[:, None] + i[None, :]) % m
    ref_ref = (i[None, :] - i[:, None]) % m
    return np.block([[rot_rot, rot_ref], [ref_rot, ref_ref]])


def _symmetric_table(m: int) -> np.ndarray:
    perms = sorted(itertools.permutations(range(m)))
    index = {p: k for k, p in enumerate(perms)}
    n = len(perms)
    table = np.empty((n, n), dtype=np.int32)
    for a, pa in enumerate(perms):
        for b, pb in enumerate(perms):
            table[a, b] = index[tuple(pa[pb[k]] for k in range(m))]
    return table


# Unit products for 1, i, j, k as (sign flip, resulting unit).
_QUATERNION_UNITS = {
    (0, 0): (0, 0), (0, 1): (0, 1), (0, 2): (0, 2), (0, 3): (0, 3),
    (1, 0): (0, 1), (2, 0): (0, 2), (3, 0): (0, 3),
    (1, 1): (1, 0), (2, 2): (1, 0), (3, 3): (1, 0),
    (1, 2): (0, 3), (2, 3): (0, 1), (3, 1): (0, 2),
    (2, 1): (1, 3), (3, 2): (1, 1), (1, 3): (1, 2),
}


def _quaternion8_table() -> np.ndarray:
    # Element 2u + s is the unit (1, i, j, k)[u] with sign (-1)^s.
    table = np.empty((8, 8), dtype=np.int32)
    for a in range(8):
        for b in range(8):
            flip, unit = _QUATERNION_UNITS[(a // 2, b // 2)]
            table[a, b] = 2 * unit + ((a % 2) ^ (b % 2) ^ flip)
    return table


def _product_table(ta: np.ndarray, tb: np.ndarray) -> np.ndarray:
    # Pair (x, y) gets index x*|B| + y.
    nb = tb.shape[0]
    left = np.repeat(np.repeat(ta, nb, axis=0), nb, axis=1).astype(np.int64)
    right = np.tile(tb, (ta.shape[0], ta.shape[0]))
    return (left * nb + right).astype(np.int32)
