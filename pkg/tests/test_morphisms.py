from __future__ import annotations

import numpy as np
import pytest

from cheinloops import (
    BadArgumentError,
    CayleyTable,
    NAMED_MATRICES,
    NotALoopError,
    SearchCapError,
    are_anti_isomorphic,
    are_isomorphic,
    bar_inverse_map,
    build_double,
    build_group,
    chein,
    double_table,
    verify_homomorphism,
)


def _double(g, name: str) -> CayleyTable:
    return CayleyTable(double_table(g, NAMED_MATRICES[name]))


def test_verify_homomorphism_identity_map(s3):
    n = s3.n
    assert verify_homomorphism(s3.table, s3.table, list(range(n)))


def test_verify_homomorphism_rejects_bad_maps(s3):
    with pytest.raises(BadArgumentError, match="images"):
        verify_homomorphism(s3.table, s3.table, [0, 1])
    with pytest.raises(BadArgumentError, match="range"):
        verify_homomorphism(s3.table, s3.table, [0, 1, 2, 3, 4, 9])


def test_verify_homomorphism_detects_violations(s3):
    swap_two = [0, 2, 1, 3, 4, 5]
    assert not verify_homomorphism(s3.table, s3.table, swap_two)
    # Collapsing everything to the neutral element is a homomorphism.
    assert verify_homomorphism(s3.table, s3.table, [0] * 6)


def test_bar_inverse_map_layout(s3):
    fmap = bar_inverse_map(s3)
    n = s3.n
    assert [int(v) for v in fmap[:n]] == list(range(n))
    assert [int(v) for v in fmap[n:]] == [n + s3.inverse(x) for x in range(n)]
    assert sorted(int(v) for v in fmap) == list(range(2 * n))


def test_bar_inverse_map_is_the_twist_isomorphism(s3, d8, q8):
    for g in (s3, d8, q8):
        fmap = bar_inverse_map(g)
        assert verify_homomorphism(_double(g, "g_iota"), _double(g, "g_tau"), fmap)
        assert verify_homomorphism(_double(g, "m_c"), _double(g, "m_sigma"), fmap)
        # It does not link the classical double to the direct product.
        assert not verify_homomorphism(_double(g, "m_c"), _double(g, "g_iota"), fmap)


def test_isomorphic_pair_found_and_verified(s3):
    a = _double(s3, "g_iota")
    b = _double(s3, "g_tau")
    witness = are_isomorphic(a, b)
    assert witness is not None
    assert sorted(witness) == list(range(a.n))
    assert verify_homomorphism(a, b, witness)


def test_group_vs_nonassociative_loop_not_isomorphic(s3):
    assert are_isomorphic(_double(s3, "g_iota"), _double(s3, "m_c")) is None


def test_relabeling_is_recovered(s3):
    a = chein(s3).table
    rng = np.random.default_rng(3)
    perm = np.concatenate([[0], 1 + rng.permutation(a.n - 1)])
    relabeled = np.empty_like(a.array)
    for x in range(a.n):
        for y in range(a.n):
            relabeled[perm[x], perm[y]] = perm[a.array[x, y]]
    b = CayleyTable(relabeled)
    witness = are_isomorphic(a, b)
    assert witness is not None
    assert verify_homomorphism(a, b, witness)


def test_anti_automorphism_of_the_classical_double(s3):
    a = chein(s3).table
    witness = are_anti_isomorphic(a, a)
    assert witness is not None
    # f(x*y) = f(y)*f(x), checked as an isomorphism onto the transpose.
    assert verify_homomorphism(a, a.transpose(), witness)
    fm = np.asarray(witness)
    x, y = 3, 8
    assert fm[a.array[x, y]] == a.array[fm[y], fm[x]]


def test_commutative_case_anti_equals_iso(c4):
    a = c4.table
    assert are_anti_isomorphic(a, a) is not None
    assert are_isomorphic(a, a) is not None


def test_non_loop_inputs_rejected():
    no_neutral = CayleyTable([[1, 0, 2], [0, 2, 1], [2, 1, 0]])
    proper = CayleyTable([[0, 1], [1, 0]])
    with pytest.raises(NotALoopError):
        are_isomorphic(no_neutral, proper)
    with pytest.raises(NotALoopError):
        are_isomorphic(proper, no_neutral)
    not_latin = CayleyTable([[0, 1], [1, 1]])
    with pytest.raises(NotALoopError):
        are_isomorphic(not_latin, proper)


def test_order_mismatch_is_a_clean_no(c3, c4):
    assert are_isomorphic(c3.table, c4.table) is None


def test_search_cap():
    big = build_group("C65")
    with pytest.raises(SearchCapError):
        are_isomorphic(big.table, big.table)
    # Order 64 is still inside the cap.
    ok = build_group("C64")
    assert are_isomorphic(ok.table, ok.table) is not None


def test_witness_is_deterministic(s3):
    a = _double(s3, "m_c")
    b = _double(s3, "m_sigma")
    first = are_isomorphic(a, b)
    second = are_isomorphic(a, b)
    assert first == second
    assert first is not None


def test_different_loops_of_equal_order_rejected_quickly(s3):
    d = build_double(s3, NAMED_MATRICES["m_c"])
    product = build_group("C12")
    assert are_isomorphic(d.table, product.table) is None
