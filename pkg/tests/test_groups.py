from __future__ import annotations

import numpy as np
import pytest

from cheinloops import (
    CayleyTable,
    GroupSpecError,
    NotAGroupError,
    build_group,
    center_index,
    check_identity,
    is_abelian,
    is_elementary_abelian_2,
    parse_group_spec,
    squares_central,
    validate_group,
)

from oracles import center_elements, first_assoc_violation, symmetric_group_table


@pytest.mark.parametrize(
    "text,order",
    [
        ("C1", 1),
        ("C7", 7),
        ("D8", 8),
        ("D12", 12),
        ("S3", 6),
        ("S4", 24),
        ("Q8", 8),
        ("S3xC2", 12),
        ("C2xC2xC2", 8),
    ],
)
def test_spec_round_trip_and_order(text, order):
    spec = parse_group_spec(text)
    assert str(spec) == text
    assert spec.order == order
    assert build_group(spec).n == order


@pytest.mark.parametrize("bad", ["", "X9", "S7", "D7", "D0", "C0", "xC2", "C2x", "s3", "Q16"])
def test_bad_specs_rejected(bad):
    with pytest.raises(GroupSpecError):
        parse_group_spec(bad)


def test_every_construction_validates(s3, d8, q8, c3, c4):
    # build_group already ran validate_group; re-run on the raw tables so a
    # regression in either side is caught.
    for g in (s3, d8, q8, c3, c4, build_group("S3xC2"), build_group("C6")):
        again = validate_group(g.table)
        assert np.array_equal(again.inv, g.inv)
        assert g.mul(0, 0) == 0


def test_symmetric_table_matches_permutation_composition(s3):
    perms, table = symmetric_group_table(3)
    assert [list(row) for row in s3.table.array] == table
    # Identity permutation is lexicographically first, hence index 0.
    assert perms[0] == (0, 1, 2)


def test_s3_center_is_trivial_by_brute_force(s3):
    assert center_elements(s3.table.array.tolist()) == [0]
    assert not is_abelian(s3)
    assert center_index(s3) == 6


def test_d8_center_has_index_four(d8):
    # Z(D8) = {1, r^2}, so the index is 4; still, every square lands in the
    # center, which is what the doubling admissibility arguments lean on.
    assert center_elements(d8.table.array.tolist()) == [0, 2]
    assert center_index(d8) == 4
    assert squares_central(d8)


def test_center_indices(q8, c3, c4):
    assert center_index(q8) == 4
    assert center_index(c3) == 1
    assert center_index(c4) == 1


def test_center_index_one_iff_abelian(s3, d8, q8, c3, c4):
    for g in (s3, d8, q8, c3, c4, build_group("S3xC2"), build_group("C2xC4")):
        assert (center_index(g) == 1) == is_abelian(g)


def test_squares_central_iff_square_law_holds(s3, d8, q8, c3, c4):
    # xxy = yxx holds exactly when squares are central; center index alone
    # does not decide it (D8 and Q8 have index 4 yet satisfy the law).
    for g in (s3, d8, q8, c3, c4, build_group("S3xC2"), build_group("D12")):
        holds = check_identity(g.table, "(x*x)*y = (y*x)*x") is None
        assert holds == squares_central(g)


def test_elementary_abelian_2_detection(c4):
    assert is_elementary_abelian_2(build_group("C2"))
    assert is_elementary_abelian_2(build_group("C2xC2"))
    assert is_elementary_abelian_2(build_group("C2xC2xC2"))
    assert not is_elementary_abelian_2(c4)
    assert not is_elementary_abelian_2(build_group("C2xC4"))
    assert not is_elementary_abelian_2(build_group("S3"))


def test_quaternion_relations(q8):
    # Indices: 1, -1, i, -i, j, -j, k, -k.
    one, minus, i, j, k = 0, 1, 2, 4, 6
    assert q8.mul(i, i) == minus
    assert q8.mul(j, j) == minus
    assert q8.mul(k, k) == minus
    assert q8.mul(i, j) == k
    assert q8.mul(j, i) == k + 1  # -k
    assert q8.mul(minus, minus) == one
    assert q8.inverse(i) == i + 1  # -i


def test_dihedral_relations(d8):
    # Indices: rotations r^0..r^3 then reflections s*r^0..s*r^3.
    r, s = 1, 4
    assert d8.mul(r, s) == 7  # r * s = s * r^-1 = s * r^3
    assert d8.mul(s, s) == 0
    assert d8.mul(r, 1) == 2
    assert d8.inverse(r) == 3


def test_product_interleaving():
    g = build_group("S3xC2")
    s3 = build_group("S3")
    # Pair (x, y) sits at index 2x + y.
    assert g.mul(2 * 1 + 1, 2 * 2 + 1) == 2 * s3.mul(1, 2)
    assert not is_abelian(g)
    assert is_abelian(build_group("C2xC3"))


def test_validate_rejects_non_associative_with_first_witness():
    g = build_group("S3")
    arr = g.table.array.copy()
    # Swapping two entries in one row keeps it a permutation but cannot
    # stay associative: row 5 is forced by the other rows via 5 = a*b.
    arr[5, 4], arr[5, 5] = arr[5, 5], arr[5, 4]
    expected = first_assoc_violation(arr.tolist())
    assert expected is not None
    with pytest.raises(NotAGroupError) as err:
        validate_group(CayleyTable(arr))
    assert err.value.witness == expected


def test_validate_rejects_misplaced_identity():
    i = np.arange(3)
    arr = (i[:, None] + i[None, :] + 1) % 3  # associative, neutral at 2
    with pytest.raises(NotAGroupError, match="index 0"):
        validate_group(CayleyTable(arr))


def test_construction_is_deterministic():
    a = build_group("S4").table.array
    b = build_group("S4").table.array
    assert np.array_equal(a, b)
