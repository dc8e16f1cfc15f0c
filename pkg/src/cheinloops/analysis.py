"""Property analysis of doubled magmas and the closed-form admissibility gates.

analyze() computes ten flags per table: quasigroup, loop, two-sided
inverses, inverse property, flexible, left/right Bol, Moufang (the
conjunction of all four classical forms), diassociative, associative.
Failed flags carry the lexicographically first witness where one exists.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .doubling import DoubledMagma
from .errors import HypothesisError
from .groups import Group, is_abelian
from .identities import check_identity, get_builtin
from .pairops import OpMatrix, PairOp, quarter_matrix
from .tables import CayleyTable, find_neutral, is_latin, two_sided_inverse_map

FLAG_NAMES = (
    "is_quasigroup",
    "is_loop",
    "has_two_sided_inverses",
    "has_inverse_property",
    "is_flexible",
    "is_left_bol",
    "is_right_bol",
    "is_moufang",
    "is_diassociative",
    "is_associative",
)

# Admissible quarter assignments for the doubled table to be a loop: the
# closed-form gate equivalent to brute-force loop detection on any base
# group of order above 1 that is not elementary abelian of exponent 2.
LOOP_ALPHA = (PairOp.I, PairOp.S)
LOOP_BETA = (PairOp.I, PairOp.S, PairOp.T3, PairOp.ST)
LOOP_GAMMA = (PairOp.I, PairOp.S, PairOp.T, PairOp.ST3)

# Closed-form candidate triples (beta, gamma, delta) that a diassociative
# loop with alpha = i must use; the admissibility equations below cut the
# 4 * 4 * 8 = 128 gate-passing combinations down to these eight.
DIASS_CANDIDATE_TRIPLES: tuple[tuple[PairOp, PairOp, PairOp], ...] = (
    (PairOp.I, PairOp.I, PairOp.I),
    (PairOp.T3, PairOp.I, PairOp.ST),
    (PairOp.S, PairOp.S, PairOp.S),
    (PairOp.ST, PairOp.S, PairOp.T3),
    (PairOp.T3, PairOp.T, PairOp.T2),
    (PairOp.I, PairOp.T, PairOp.ST3),
    (PairOp.S, PairOp.ST3, PairOp.T),
    (PairOp.ST, PairOp.ST3, PairOp.ST2),
)

_MOUFANG_LAWS = ("moufang_1", "moufang_2", "moufang_3", "moufang_4")


def loop_gate(m: OpMatrix) -> bool:
    """Closed-form loop admissibility: alpha, beta, gamma each in their set."""
    return m.alpha in LOOP_ALPHA and m.beta in LOOP_BETA and m.gamma in LOOP_GAMMA


@dataclass
class PropertyReport:
    """Flags plus witnesses/reasons for the failed or skipped ones."""

    flags: dict[str, bool]
    witnesses: dict[str, list[int]]
    reasons: dict[str, str]

    def __post_init__(self) -> None:
        f = self.flags
        if set(f) != set(FLAG_NAMES):
            raise AssertionError("report must carry exactly the ten flags")
        if f["is_moufang"] and not (f["is_left_bol"] and f["is_right_bol"] and f["is_flexible"]):
            raise AssertionError("moufang table failed a Bol or flexible check")
        if f["is_associative"] and not f["is_moufang"]:
            raise AssertionError("associative table failed a Moufang check")
        if f["is_loop"] and not f["is_quasigroup"]:
            raise AssertionError("loop flag without the Latin property")

    def as_dict(self) -> dict:
        return {
            "flags": dict(self.flags),
            "witnesses": {k: list(v) for k, v in self.witnesses.items()},
            "reasons": dict(self.reasons),
        }


def _law_flag(table: CayleyTable, law: str, flags, witnesses, flag_name: str) -> bool:
    cx = check_identity(table, get_builtin(law))
    if cx is None:
        return True
    witnesses.setdefault(flag_name, [v for _, v in cx.assignment] + [cx.lhs, cx.rhs])
    return False


def analyze(d: DoubledMagma) -> PropertyReport:
    """Full property report for one doubled table."""
    return analyze_table(d.table)


def analyze_table(table: CayleyTable) -> PropertyReport:
    arr = table.array
    n = table.n
    flags: dict[str, bool] = {}
    witnesses: dict[str, list[int]] = {}
    reasons: dict[str, str] = {}

    flags["is_quasigroup"] = is_latin(table)
    neutral = find_neutral(table)
    flags["is_loop"] = flags["is_quasigroup"] and neutral == 0
    if not flags["is_loop"]:
        reasons["is_loop"] = (
            "no two-sided neutral element" if neutral is None else f"neutral at index {neutral}"
        )

    flags["is_flexible"] = _law_flag(table, "flexible", flags, witnesses, "is_flexible")
    flags["is_left_bol"] = _law_flag(table, "left_bol", flags, witnesses, "is_left_bol")
    flags["is_right_bol"] = _law_flag(table, "right_bol", flags, witnesses, "is_right_bol")
    moufang = True
    for law in _MOUFANG_LAWS:
        if not _law_flag(table, law, flags, witnesses, "is_moufang"):
            moufang = False
            break
    flags["is_moufang"] = moufang
    flags["is_associative"] = _law_flag(
        table, "associativity", flags, witnesses, "is_associative"
    )

    if flags["is_loop"]:
        inv = two_sided_inverse_map(table, 0)
        flags["has_two_sided_inverses"] = inv is not None
        if inv is None:
            rinv = np.argmax(arr == 0, axis=1)
            bad = int(np.argmax(arr[rinv, np.arange(n)] != 0))
            witnesses["has_two_sided_inverses"] = [bad, int(rinv[bad])]
            flags["has_inverse_property"] = False
            reasons["has_inverse_property"] = "not evaluated: no two-sided inverses"
        else:
            left = _law_flag(table, "left_ip", flags, witnesses, "has_inverse_property")
            right = left and _law_flag(
                table, "right_ip", flags, witnesses, "has_inverse_property"
            )
            flags["has_inverse_property"] = left and right
    else:
        for name in ("has_two_sided_inverses", "has_inverse_property"):
            flags[name] = False
            reasons[name] = "not evaluated: no neutral element"

    if flags["is_loop"]:
        ok, witness = _diassociativity(arr, flags["is_associative"], witnesses)
        flags["is_diassociative"] = ok
        if witness is not None:
            witnesses["is_diassociative"] = witness
    else:
        flags["is_diassociative"] = False
        reasons["is_diassociative"] = "not evaluated: no neutral element"

    ordered = {name: flags[name] for name in FLAG_NAMES}
    return PropertyReport(flags=ordered, witnesses=witnesses, reasons=reasons)


def _pair_closure(arr: np.ndarray, a: int, b: int) -> np.ndarray:
    """Smallest multiplication-closed subset containing 0, a, b.

    In a finite loop such a subset is cancellative and therefore division
    closed, so this is the subloop generated by the pair.
    """
    members = np.zeros(arr.shape[0], dtype=bool)
    members[[0, a, b]] = True
    count = int(members.sum())
    while True:
        idx = np.nonzero(members)[0]
        members[arr[np.ix_(idx, idx)].ravel()] = True
        new_count = int(members.sum())
        if new_count == count:
            return idx
        count = new_count


def _sub_assoc_witness(arr: np.ndarray, idx: np.ndarray):
    sub = arr[np.ix_(idx, idx)]
    lhs = arr[sub[:, :, None], idx[None, None, :]]
    rhs = arr[idx[:, None, None], sub[None, :, :]]
    bad = lhs != rhs
    if not bad.any():
        return None
    i, j, k = np.argwhere(bad)[0]
    return (int(idx[i]), int(idx[j]), int(idx[k]))


def _diassociativity(arr, assoc: bool, witnesses) -> tuple[bool, list[int] | None]:
    # Associative tables associate on every subset, so only the rest need
    # the pair-by-pair subloop scan.
    if assoc:
        return True, None
    n = arr.shape[0]
    for a in range(n):
        for b in range(a, n):
            idx = _pair_closure(arr, a, b)
            if len(idx) == n:
                triple = witnesses["is_associative"][:3]
                return False, [a, b, *triple]
            w = _sub_assoc_witness(arr, idx)
            if w is not None:
                return False, [a, b, *w]
    return True, None


@dataclass
class DiassCandidates:
    """Stages of the diassociativity admissibility brute force."""

    eq5_pairs: tuple[tuple[PairOp, PairOp], ...]
    eq5_stage: tuple[tuple[PairOp, PairOp, PairOp], ...]
    triples: tuple[tuple[PairOp, PairOp, PairOp], ...]


def diass_candidates(g: Group) -> DiassCandidates:
    """Brute-force both admissibility equations over G x G.

    Equation one: the square of a barred element times y must equal the
    barred-barred product of x with the mixed product of x and y, i.e.
    (x,x)delta * y = (x, (x,y)gamma)delta for all x, y.  Equation two:
    (x, (y,x)beta)delta = ((x,y)gamma, x)delta.  Gate-admissible beta and
    gamma only; delta is unrestricted.
    """
    if is_abelian(g):
        raise HypothesisError("diassociativity filter needs a nonabelian group")
    arr = g.table.array
    n = g.n
    quarters = {op: quarter_matrix(op, g) for op in PairOp}
    cols = np.arange(n, dtype=np.int32)

    eq5_pairs = []
    for gamma in LOOP_GAMMA:
        qc = quarters[gamma]
        for delta in PairOp:
            qd = quarters[delta]
            lhs = arr[np.diagonal(qd), :]
            rhs = np.take_along_axis(qd, qc, axis=1)
            if np.array_equal(lhs, rhs):
                eq5_pairs.append((gamma, delta))

    eq5_stage = sorted(
        (beta, gamma, delta) for beta in LOOP_BETA for gamma, delta in eq5_pairs
    )

    triples = []
    for gamma, delta in eq5_pairs:
        qc = quarters[gamma]
        qd = quarters[delta]
        rhs = qd[qc, cols[:, None]]
        for beta in LOOP_BETA:
            lhs = np.take_along_axis(qd, quarters[beta].T, axis=1)
            if np.array_equal(lhs, rhs):
                triples.append((beta, gamma, delta))

    return DiassCandidates(
        eq5_pairs=tuple(sorted(eq5_pairs)),
        eq5_stage=tuple(eq5_stage),
        triples=tuple(sorted(triples)),
    )


def diass_triples(g: Group) -> tuple[tuple[PairOp, PairOp, PairOp], ...]:
    """Triples surviving both admissibility equations over g."""
    return diass_candidates(g).triples
