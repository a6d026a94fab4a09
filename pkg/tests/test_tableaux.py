"""Reverse tableaux, words, weights, and enumeration."""

import pytest

from lrpoly.apoly import APoly, a
from lrpoly.tableaux import (
    Entry,
    ReverseTableau,
    bar,
    plain,
    parse_entry,
    format_entry,
    row_order,
    column_order,
    row_word,
    column_word,
    apply_word,
    rho_at,
    entry_weight,
    tableau_weight,
    expand_monomials,
    enumerate_lr_tableaux,
    enumerate_pieri_tableaux,
    enumerate_k_tableaux,
)

# Worked tableau of shape (3, 6, 1), used as the golden fixture throughout:
# row word 2121 (Yamanouchi from (2,1)), column word 2211 (not Yamanouchi).
GOLDEN = ReverseTableau.from_text("2 2~ 1~\n2 2 2~ 1 1 1~\n1")


def test_text_round_trip():
    assert ReverseTableau.from_text(GOLDEN.to_text()) == GOLDEN
    assert parse_entry("3~") == bar(3)
    assert parse_entry("2'") == plain(2, primed=True)
    assert format_entry(plain(4)) == "4"
    with pytest.raises(ValueError):
        parse_entry("0")


def test_shape_and_validity():
    assert GOLDEN.shape == (3, 6, 1)
    assert GOLDEN.is_valid()
    bad = ReverseTableau([[plain(1), plain(2)]])
    assert not bad.is_valid()


def test_orders():
    shape = (3, 6, 1)
    ro = row_order(shape)
    assert ro[0] == (3, 1) and ro[1] == (2, 1) and ro[-1] == (1, 3)
    co = column_order(shape)
    assert co[0] == (3, 1) and co[1] == (2, 1) and co[2] == (1, 1)
    assert co[-1] == (2, 6)


def test_golden_words():
    assert row_word(GOLDEN) == (2, 1, 2, 1)
    assert column_word(GOLDEN) == (2, 2, 1, 1)
    nu_r, yam_r = apply_word((2, 1), row_word(GOLDEN))
    assert nu_r == (4, 3) and yam_r
    nu_c, yam_c = apply_word((2, 1), column_word(GOLDEN))
    assert nu_c == (4, 3) and not yam_c


def test_golden_prefix_partition():
    assert rho_at(GOLDEN, (2, 1), (1, 2), "row") == (3, 3)


def test_golden_entry_weight():
    assert entry_weight(GOLDEN, (2, 1), (2, 4), "column") == a(-2) - a(-1)


def test_tableau_weight_empty_product():
    T = ReverseTableau([[bar(1)]])
    assert tableau_weight(T, (), "row") == APoly.one()


def test_expand_monomials_sums_to_weight():
    for order in ("row", "column"):
        total = APoly.zero()
        for U, mono in expand_monomials(GOLDEN, (2, 1), order):
            total = total + mono
        assert total == tableau_weight(GOLDEN, (2, 1), order)
    # 6 plain entries -> 2^6 primed variants
    assert len(expand_monomials(GOLDEN, (2, 1), "row")) == 2**6


def test_enumerate_lr_basic():
    # single box: exactly one tableau per way of adding the box
    ts = enumerate_lr_tableaux((1,), (), (1,))
    assert [T.to_text() for T in ts] == ["1~"]
    # no tableaux when nu does not contain mu
    assert enumerate_lr_tableaux((1,), (2,), (1, 1)) == []


def test_enumerate_lr_cap_insensitive():
    # enlarging the plain-value cap does not add tableaux: the weight of a
    # plain value above l(nu) vanishes only in aggregate, but the defining
    # conditions already bound the values
    for lam, mu, nu in [((2, 1), (1,), (2, 1)), ((2,), (2,), (3, 1))]:
        base = enumerate_lr_tableaux(lam, mu, nu)
        wider = enumerate_lr_tableaux(lam, mu, nu, cap=len(nu) + 2)
        for T in base:
            assert T in wider


def test_enumerate_pieri_single_row():
    ts = enumerate_pieri_tableaux(2, 0, (1,), (2, 1))
    for T in ts:
        assert T.shape == (2,)
        nu, yam = apply_word((1,), row_word(T))
        assert nu == (2, 1) and yam


def test_enumerate_k_tableaux_shapes_and_words():
    for T in enumerate_k_tableaux((1, 2), (1,), (2, 1)):
        assert T.shape == (1, 2)
        nu, yam = apply_word((1,), row_word(T))
        assert nu == (2, 1) and yam
