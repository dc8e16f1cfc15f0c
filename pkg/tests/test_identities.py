from __future__ import annotations

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cheinloops import (
    BadArgumentError,
    BudgetError,
    CayleyTable,
    IdentitySyntaxError,
    InverseUndefinedError,
    build_group,
    chein,
    check_identity,
)
from cheinloops.identities import (
    BUILTINS,
    Inverse,
    Product,
    Var,
    format_term,
    get_builtin,
    parse_identity,
)

from oracles import first_assoc_violation


def test_star_is_left_associative():
    ident = parse_identity("x*y*z = w")
    assert ident.lhs == Product(Product(Var("x"), Var("y")), Var("z"))


def test_inverse_binds_to_the_atom():
    ident = parse_identity("x*y^-1 = z")
    assert ident.lhs == Product(Var("x"), Inverse(Var("y")))
    ident = parse_identity("(x*y)^-1 = z")
    assert ident.lhs == Inverse(Product(Var("x"), Var("y")))


def test_parens_group():
    ident = parse_identity("x*(y*z) = (x*y)*z")
    assert ident.lhs == Product(Var("x"), Product(Var("y"), Var("z")))
    assert ident.rhs == Product(Product(Var("x"), Var("y")), Var("z"))


def test_names_can_carry_digits():
    ident = parse_identity("a1*b2 = b2*a1")
    assert ident.variables == ("a1", "b2")


def test_variables_in_first_occurrence_order():
    assert parse_identity("z*(y*x) = x*q").variables == ("z", "y", "x", "q")


@pytest.mark.parametrize(
    "text,position",
    [
        ("x**y = x", 3),
        ("x^2 = x", 2),
        ("x*y", 4),
        ("x = ", 5),
        ("(x*y = z", 6),
        ("x @ y = z", 3),
        ("* = x", 1),
        ("x = y = z", 7),
    ],
)
def test_syntax_errors_carry_one_based_positions(text, position):
    with pytest.raises(IdentitySyntaxError) as err:
        parse_identity(text)
    assert err.value.position == position
    assert f"(at position {position})" in str(err.value)


def test_all_builtins_parse():
    for name in BUILTINS:
        ident = get_builtin(name)
        # Printing may drop redundant parentheses but must round-trip.
        assert parse_identity(str(ident)) == ident


def test_unknown_builtin_rejected():
    with pytest.raises(BadArgumentError):
        get_builtin("medial")


def _terms():
    names = st.sampled_from(["x", "y", "z", "w"]).map(Var)
    return st.recursive(
        names,
        lambda kids: st.one_of(
            st.tuples(kids, kids).map(lambda lr: Product(lr[0], lr[1])),
            kids.map(Inverse),
        ),
        max_leaves=8,
    )


@given(_terms(), _terms())
def test_format_parse_round_trip(lhs, rhs):
    printed = f"{format_term(lhs)} = {format_term(rhs)}"
    again = parse_identity(printed)
    assert again.lhs == lhs
    assert again.rhs == rhs


def test_counterexample_format_and_lexicographic_order(s3):
    d = chein(s3)
    cx = check_identity(d.table, get_builtin("associativity"))
    assert cx is not None
    assert cx.format() == "x=1 y=2 z=6 | lhs=10 rhs=9"
    arr = d.table.array.tolist()
    assert first_assoc_violation(arr) == tuple(v for _, v in cx.assignment)


def test_moufang_laws_hold_on_classical_double(s3):
    d = chein(s3)
    for law in ("moufang_1", "moufang_2", "moufang_3", "moufang_4", "flexible"):
        assert check_identity(d.table, get_builtin(law)) is None


def test_string_identities_accepted(c4):
    assert check_identity(c4.table, "x*y = y*x") is None
    cx = check_identity(build_group("S3").table, "x*y = y*x")
    assert cx is not None
    assert cx.assignment == (("x", 1), ("y", 2))


def test_single_variable_and_constantless_identities(c3):
    assert check_identity(c3.table, "x*x^-1 = x^-1*x") is None
    cx = check_identity(c3.table, "x*x = x")
    assert cx is not None
    assert cx.assignment == (("x", 1),)


def test_variable_limit_enforced(c3):
    with pytest.raises(BudgetError, match="5 variables"):
        check_identity(c3.table, "x*(y*(z*(w*v))) = x")


def test_evaluation_budget_enforced():
    i = np.arange(200)
    big = CayleyTable((i[:, None] + i[None, :]) % 200)
    with pytest.raises(BudgetError, match="budget"):
        check_identity(big, "((x*y)*z)*w = x")


def test_inverse_requires_a_neutral_element():
    no_neutral = CayleyTable([[1, 0, 2], [0, 2, 1], [2, 1, 0]])
    with pytest.raises(InverseUndefinedError, match="neutral"):
        check_identity(no_neutral, "x^-1*x = x*x^-1")
    # The same table is fine for inverse-free identities.
    assert check_identity(no_neutral, "x*y = y*x") is None


def test_inverse_requires_unique_two_sided_inverses():
    ambiguous = CayleyTable([[0, 1, 2], [1, 0, 0], [2, 0, 1]])
    with pytest.raises(InverseUndefinedError, match="two-sided"):
        check_identity(ambiguous, "x^-1*(x*y) = y")


def test_chunked_search_agrees_with_direct_broadcast():
    # Order 50 with four variables exceeds the chunk size, so the leading
    # variable is enumerated in Python; compare against one big grid.
    g = build_group("D50")
    arr = g.table.array.astype(np.int64)
    n = g.n
    x = np.arange(n)[:, None, None, None]
    y = np.arange(n)[None, :, None, None]
    z = np.arange(n)[None, None, :, None]
    w = np.arange(n)[None, None, None, :]
    lhs = arr[arr[arr[x, y], z], w]
    rhs = arr[arr[arr[w, z], y], x]
    first = np.argwhere(lhs != rhs)[0]
    cx = check_identity(g.table, "((x*y)*z)*w = ((w*z)*y)*x")
    assert cx is not None
    assert [v for _, v in cx.assignment] == [int(v) for v in first]
    i, j, k, l = (int(v) for v in first)
    assert cx.lhs == int(lhs[i, j, k, l])
    assert cx.rhs == int(rhs[i, j, k, l])


@settings(max_examples=40)
@given(
    st.integers(min_value=1, max_value=5).flatmap(
        lambda n: st.lists(
            st.lists(st.integers(min_value=0, max_value=n - 1), min_size=n, max_size=n),
            min_size=n,
            max_size=n,
        )
    )
)
def test_associativity_check_matches_triple_loop(rows):
    table = CayleyTable(np.array(rows, dtype=np.int32))
    cx = check_identity(table, "(x*y)*z = x*(y*z)")
    expected = first_assoc_violation(rows)
    if expected is None:
        assert cx is None
    else:
        assert cx is not None
        assert tuple(v for _, v in cx.assignment) == expected
