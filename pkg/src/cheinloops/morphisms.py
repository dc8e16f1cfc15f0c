"""Isomorphism search between loops, plus homomorphism verification.

The search backtracks over neutral-preserving bijections, pruned by
iteratively refined fingerprints (left/right power orders, then two
rounds of neighborhood refinement).  Fingerprints are ranked jointly
over both tables so equal ranks mean structurally interchangeable
elements.  Orders above 64 are refused rather than attempted.
"""

from __future__ import annotations

import numpy as np

from .errors import BadArgumentError, NotALoopError, SearchCapError
from .groups import Group
from .tables import CayleyTable, find_neutral, is_latin

ISO_ORDER_CAP = 64
_REFINEMENT_ROUNDS = 2


def verify_homomorphism(a: CayleyTable, b: CayleyTable, f) -> bool:
    """True iff f(x*y) = f(x)*f(y) for all x, y; f maps indices of a into b."""
    fm = np.asarray(f, dtype=np.int64)
    if fm.shape != (a.n,):
        raise BadArgumentError(f"map must list {a.n} images, got shape {fm.shape}")
    if fm.size and (fm.min() < 0 or fm.max() >= b.n):
        raise BadArgumentError("map image out of range")
    return bool(np.array_equal(fm[a.array], b.array[fm[:, None], fm[None, :]]))


def bar_inverse_map(g: Group) -> np.ndarray:
    """Doubling map fixing the group half and sending bar(x) to bar(x^-1)."""
    n = g.n
    return np.concatenate([np.arange(n, dtype=np.int64), n + g.inv.astype(np.int64)])


def _require_loop(t: CayleyTable, label: str) -> None:
    if not is_latin(t) or find_neutral(t) != 0:
        raise NotALoopError(f"{label} is not a loop with neutral element 0")


def _left_orders(arr: np.ndarray) -> list[int]:
    out = []
    for x in range(arr.shape[0]):
        cur = x
        k = 1
        while cur != 0:
            cur = int(arr[x, cur])
            k += 1
        out.append(k)
    return out


def _right_orders(arr: np.ndarray) -> list[int]:
    out = []
    for x in range(arr.shape[0]):
        cur = x
        k = 1
        while cur != 0:
            cur = int(arr[cur, x])
            k += 1
        out.append(k)
    return out


def _initial_keys(arr: np.ndarray) -> list[tuple]:
    left = _left_orders(arr)
    right = _right_orders(arr)
    diag = np.diagonal(arr)
    return [
        (left[x], right[x], int(diag[x] == 0), int(arr[x, x] == x)) for x in range(len(left))
    ]


def joint_fingerprints(a: np.ndarray, b: np.ndarray) -> tuple[list[int], list[int]]:
    """Color both element sets so equal colors mean matching invariants."""
    keys_a = _initial_keys(a)
    keys_b = _initial_keys(b)
    colors_a, colors_b = _rank_jointly(keys_a, keys_b)
    for _ in range(_REFINEMENT_ROUNDS):
        keys_a = _refine(a, colors_a)
        keys_b = _refine(b, colors_b)
        colors_a, colors_b = _rank_jointly(keys_a, keys_b)
    return colors_a, colors_b


def _refine(arr: np.ndarray, colors: list[int]) -> list[tuple]:
    n = arr.shape[0]
    c = np.asarray(colors)
    out = []
    for x in range(n):
        around = sorted(zip(c.tolist(), c[arr[x]].tolist(), c[arr[:, x]].tolist()))
        out.append((colors[x], tuple(around)))
    return out


def _rank_jointly(keys_a: list[tuple], keys_b: list[tuple]) -> tuple[list[int], list[int]]:
    rank = {key: i for i, key in enumerate(sorted(set(keys_a) | set(keys_b)))}
    return [rank[k] for k in keys_a], [rank[k] for k in keys_b]


def are_isomorphic(a: CayleyTable, b: CayleyTable) -> list[int] | None:
    """Witness map as a list of images, or None when no isomorphism exists."""
    _require_loop(a, "first table")
    _require_loop(b, "second table")
    if a.n > ISO_ORDER_CAP or b.n > ISO_ORDER_CAP:
        raise SearchCapError(
            f"isomorphism search not attempted above order {ISO_ORDER_CAP}"
        )
    if a.n != b.n:
        return None
    n = a.n
    arr_a = a.array
    arr_b = b.array
    colors_a, colors_b = joint_fingerprints(arr_a, arr_b)
    if sorted(colors_a) != sorted(colors_b):
        return None

    candidates: dict[int, list[int]] = {}
    for u in range(n):
        candidates.setdefault(colors_b[u], []).append(u)
    class_size = {color: len(members) for color, members in candidates.items()}

    # Neutral first, then rarest fingerprint class; ties broken by index so
    # the found witness is deterministic.
    order = [0] + sorted(
        (x for x in range(1, n)), key=lambda x: (class_size[colors_a[x]], x)
    )
    img = np.full(n, -1, dtype=np.int64)
    pre = np.full(n, -1, dtype=np.int64)
    assigned: list[int] = []

    def consistent(x: int, u: int) -> bool:
        for y in assigned:
            for p, q in (
                (arr_a[x, y], arr_b[u, img[y]]),
                (arr_a[y, x], arr_b[img[y], u]),
            ):
                if img[p] != -1:
                    if img[p] != q:
                        return False
                elif pre[q] != -1 and pre[q] != p:
                    return False
        return True

    def extend(depth: int) -> bool:
        if depth == n:
            return True
        x = order[depth]
        for u in candidates[colors_a[x]]:
            if pre[u] != -1:
                continue
            img[x] = u
            pre[u] = x
            assigned.append(x)
            if consistent(x, u) and extend(depth + 1):
                return True
            assigned.pop()
            img[x] = -1
            pre[u] = -1
        return False

    if extend(0):
        return [int(v) for v in img]
    return None


def are_anti_isomorphic(a: CayleyTable, b: CayleyTable) -> list[int] | None:
    """Witness with f(x*y) = f(y)*f(x), found as an isomorphism onto b transposed."""
    _require_loop(b, "second table")
    return are_isomorphic(a, b.transpose())
