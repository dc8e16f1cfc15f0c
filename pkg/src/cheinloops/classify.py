"""Classify all 4096 quarter assignments over one base group.

The report is pure data with no timestamps: running the enumeration
twice, at any parallelism level, yields byte-identical canonical JSON.
"""

from __future__ import annotations

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .analysis import DIASS_CANDIDATE_TRIPLES, FLAG_NAMES, analyze_table, loop_gate
from .doubling import double_table
from .errors import HypothesisError
from .groups import Group, is_abelian, is_elementary_abelian_2, validate_group
from .morphisms import are_anti_isomorphic, are_isomorphic, bar_inverse_map, verify_homomorphism
from .pairops import NAMED_MATRICES, OpMatrix, PairOp, all_matrices
from .tables import CayleyTable

_MATRICES = all_matrices()

LAW_CHECK_NAMES = (
    "loop_gate_equivalence",
    "two_sided_inverses_for_loops",
    "opposite_transposes",
    "diassociativity_filter",
    "doubling_isomorphisms",
)


@dataclass
class ClassificationReport:
    """Everything the enumeration establishes over one group."""

    group: str
    group_order: int
    abelian: bool
    per_matrix: dict[str, dict]
    counts: dict[str, int]
    moufang_set: list[str]
    nonassoc_moufang: list[str]
    nonassoc_moufang_classes: list[dict]
    classification: dict
    law_checks: dict[str, bool]
    bol_not_moufang: list[str]
    ip_discrepancies: list[str]

    def as_dict(self) -> dict:
        return {
            "schema": "doubling-classification/1",
            "group": self.group,
            "group_order": self.group_order,
            "double_order": 2 * self.group_order,
            "abelian": self.abelian,
            "counts": self.counts,
            "per_matrix": self.per_matrix,
            "moufang_set": self.moufang_set,
            "nonassoc_moufang": self.nonassoc_moufang,
            "nonassoc_moufang_classes": self.nonassoc_moufang_classes,
            "classification": self.classification,
            "law_checks": self.law_checks,
            "bol_not_moufang": self.bol_not_moufang,
            "ip_discrepancies": self.ip_discrepancies,
        }

    @property
    def all_checks_pass(self) -> bool:
        if not all(self.law_checks.values()):
            return False
        if self.classification["applicable"]:
            return bool(self.classification["passed"])
        return True


def canonical_json(payload: dict) -> str:
    """Stable serialization: sorted keys, two-space indent, trailing newline."""
    return json.dumps(payload, sort_keys=True, indent=2) + "\n"


def report_csv(report: ClassificationReport) -> str:
    """One row per matrix in canonical enumeration order, flags as 0/1."""
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow(("matrix",) + FLAG_NAMES)
    for m in _MATRICES:
        flags = report.per_matrix[str(m)]["flags"]
        writer.writerow([str(m)] + [int(flags[name]) for name in FLAG_NAMES])
    return out.getvalue()


def _analyze_chunk(table_bytes: bytes, n: int, lo: int, hi: int) -> list[tuple[int, dict]]:
    arr = np.frombuffer(table_bytes, dtype=np.int32).reshape(n, n)
    group = validate_group(CayleyTable(arr))
    out = []
    for k in range(lo, hi):
        table = CayleyTable(double_table(group, _MATRICES[k]))
        out.append((k, analyze_table(table).as_dict()))
    return out


def _per_matrix_reports(g: Group, jobs: int) -> list[dict]:
    total = len(_MATRICES)
    if jobs <= 1:
        done = _analyze_chunk(g.table.array.tobytes(), g.n, 0, total)
    else:
        bounds = np.linspace(0, total, 4 * jobs + 1, dtype=int)
        done = []
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            futures = [
                pool.submit(_analyze_chunk, g.table.array.tobytes(), g.n, int(lo), int(hi))
                for lo, hi in zip(bounds[:-1], bounds[1:])
                if lo != hi
            ]
            for fut in futures:
                done.extend(fut.result())
    ordered: list[dict] = [None] * total
    for k, rep in done:
        ordered[k] = rep
    return ordered


def _opposite_transposes(g: Group) -> bool:
    from .pairops import opposite_matrix

    for m in _MATRICES:
        direct = double_table(g, m)
        opposed = double_table(g, opposite_matrix(m))
        if not np.array_equal(opposed, direct.T):
            return False
    return True


def _doubling_isomorphisms(g: Group) -> bool:
    fmap = bar_inverse_map(g)
    pairs = (("g_iota", "g_tau"), ("m_c", "m_sigma"))
    for src, dst in pairs:
        a = CayleyTable(double_table(g, NAMED_MATRICES[src]))
        b = CayleyTable(double_table(g, NAMED_MATRICES[dst]))
        if not verify_homomorphism(a, b, fmap):
            return False
    return True


def _group_classes(g: Group, members: list[OpMatrix]) -> list[dict]:
    """Partition into (anti)isomorphism classes with witness maps."""
    classes: list[dict] = []
    tables = {str(m): CayleyTable(double_table(g, m)) for m in members}
    for m in members:
        key = str(m)
        placed = False
        for cls in classes:
            rep = cls["representative"]
            witness = are_isomorphic(tables[key], tables[rep])
            kind = "isomorphism"
            if witness is None:
                witness = are_anti_isomorphic(tables[key], tables[rep])
                kind = "anti-isomorphism"
            if witness is not None:
                cls["members"].append(key)
                cls["witnesses"].append({"member": key, "kind": kind, "map": witness})
                placed = True
                break
        if not placed:
            classes.append({"representative": key, "members": [key], "witnesses": []})
    return classes


def enumerate_matrices(g: Group, jobs: int = 1) -> ClassificationReport:
    """Analyze every matrix over g and aggregate the classification."""
    if g.n <= 1:
        raise HypothesisError("enumeration needs a group of order above 1")
    if is_elementary_abelian_2(g):
        raise HypothesisError("enumeration is undefined over elementary abelian 2-groups")
    abelian = is_abelian(g)
    reports = _per_matrix_reports(g, jobs)
    per_matrix = {str(m): rep for m, rep in zip(_MATRICES, reports)}

    counts = {name: 0 for name in FLAG_NAMES}
    moufang_set: list[str] = []
    nonassoc_moufang: list[OpMatrix] = []
    bol_not_moufang: list[str] = []
    ip_discrepancies: list[str] = []
    gate_matches = True
    loops_have_inverses = True
    diass_filter_ok = True

    for m, rep in zip(_MATRICES, reports):
        flags = rep["flags"]
        for name in FLAG_NAMES:
            counts[name] += int(flags[name])
        if flags["is_loop"] != loop_gate(m):
            gate_matches = False
        if flags["is_loop"]:
            if not flags["has_two_sided_inverses"]:
                loops_have_inverses = False
            if flags["is_moufang"]:
                moufang_set.append(str(m))
                if not flags["is_associative"]:
                    nonassoc_moufang.append(m)
            elif flags["is_left_bol"] or flags["is_right_bol"]:
                bol_not_moufang.append(str(m))
            if flags["has_two_sided_inverses"] and not flags["has_inverse_property"]:
                ip_discrepancies.append(str(m))
            if (
                not abelian
                and m.alpha == PairOp.I
                and flags["is_diassociative"]
                and (m.beta, m.gamma, m.delta) not in DIASS_CANDIDATE_TRIPLES
            ):
                diass_filter_ok = False

    classes = _group_classes(g, nonassoc_moufang)
    classification = _classification_verdict(abelian, moufang_set, nonassoc_moufang, per_matrix, classes)

    law_checks = {
        "loop_gate_equivalence": gate_matches,
        "two_sided_inverses_for_loops": loops_have_inverses,
        "opposite_transposes": _opposite_transposes(g),
        "diassociativity_filter": diass_filter_ok,
        "doubling_isomorphisms": _doubling_isomorphisms(g),
    }

    return ClassificationReport(
        group=str(g.spec) if g.spec is not None else "custom",
        group_order=g.n,
        abelian=abelian,
        per_matrix=per_matrix,
        counts=counts,
        moufang_set=moufang_set,
        nonassoc_moufang=[str(m) for m in nonassoc_moufang],
        nonassoc_moufang_classes=classes,
        classification=classification,
        law_checks=law_checks,
        bol_not_moufang=bol_not_moufang,
        ip_discrepancies=ip_discrepancies,
    )


def _classification_verdict(abelian, moufang_set, nonassoc, per_matrix, classes) -> dict:
    expected = [str(m) for m in NAMED_MATRICES.values()]
    if abelian:
        return {
            "applicable": False,
            "passed": None,
            "expected": sorted(expected),
            "found": sorted(moufang_set),
        }
    found = sorted(moufang_set)
    want = sorted(expected)
    group_like = ["g_iota", "g_tau", "op_g_iota", "op_g_tau"]
    chein_like = ["m_c", "m_sigma", "op_m_c", "op_m_sigma"]
    assoc_ok = all(
        per_matrix[str(NAMED_MATRICES[name])]["flags"]["is_associative"]
        for name in group_like
    )
    nonassoc_ok = all(
        not per_matrix[str(NAMED_MATRICES[name])]["flags"]["is_associative"]
        for name in chein_like
    )
    nonassoc_names = sorted(str(m) for m in nonassoc)
    chein_names = sorted(str(NAMED_MATRICES[name]) for name in chein_like)
    single_class = len(classes) == 1 and len(nonassoc) == 4
    contains_chein = str(NAMED_MATRICES["m_c"]) in nonassoc_names
    passed = (
        found == want
        and assoc_ok
        and nonassoc_ok
        and nonassoc_names == chein_names
        and single_class
        and contains_chein
    )
    return {
        "applicable": True,
        "passed": passed,
        "expected": want,
        "found": found,
        "missing": sorted(set(want) - set(found)),
        "unexpected": sorted(set(found) - set(want)),
        "associative_four_ok": assoc_ok,
        "nonassociative_four_ok": nonassoc_ok and nonassoc_names == chein_names,
        "single_class": single_class,
        "contains_chein": contains_chein,
    }


def verify_classification(g: Group, jobs: int = 1) -> dict:
    """Classification verdict for a nonabelian group; raises on abelian input."""
    if is_abelian(g):
        raise HypothesisError("theorem hypothesis: G nonabelian")
    report = enumerate_matrices(g, jobs=jobs)
    verdict = dict(report.classification)
    verdict["nonassoc_moufang_classes"] = report.nonassoc_moufang_classes
    return verdict


def search_bol_not_moufang(g: Group, jobs: int = 1) -> list[str]:
    """Loops satisfying a Bol law but not all Moufang laws; purely a report."""
    return enumerate_matrices(g, jobs=jobs).bol_not_moufang
