"""Concrete double symmetric polynomials: the independent oracle layer."""

import pytest

from lrpoly.apoly import APoly, a
from lrpoly.shapes import partitions_up_to, size
from lrpoly.double_sym import (
    XPoly,
    h_n,
    h_n_shifted,
    double_schur_n,
    phi_n,
    decompose,
    product_decomposition,
    c_oracle,
    classical_lr,
)


def test_h_n_small():
    # h_1 in 2 variables: (x_1 - a_1) + (x_2 - a_2)
    h = h_n(1, 2)
    expected = (
        XPoly.x(1, 2)
        + XPoly.x(2, 2)
        + XPoly.const(2, APoly.var(1, coeff=-1) - a(2))
    )
    assert h == expected
    assert h_n(0, 3) == XPoly.one(3)
    assert h_n(2, 0).is_zero()


def test_shift_identity():
    # h_{r,s} = h_{r,s-1} + (a_{s-r+1} - a_{n+s}) h_{r-1,s-1}
    for n in range(1, 5):
        for r in range(1, 5):
            for s in range(1, 4):
                lhs = h_n_shifted(r, s, n)
                rhs = h_n_shifted(r, s - 1, n) + h_n_shifted(r - 1, s - 1, n).scale(
                    APoly.var(s - r + 1) - APoly.var(n + s)
                )
                assert lhs == rhs, (n, r, s)


def test_double_schur_symmetric_and_classical_leading_term():
    for lam in [(1,), (2,), (1, 1), (2, 1)]:
        P = double_schur_n(lam, 3)
        assert P.is_symmetric()
        # at a = 0 this is the classical Schur polynomial; check its
        # leading monomial x^lam has coefficient 1
        lead = tuple(lam) + (0,) * (3 - len(lam))
        assert P.at_zero().terms.get(lead) == APoly.one()


def test_single_box_explicit():
    # s_(1)(x_1, x_2 || a) = x_1 + x_2 - a_1 - a_2
    P = double_schur_n((1,), 2)
    assert str(P) == "(1)*x_1 + (1)*x_2 + (-a_1 - a_2)"


def test_stability_under_phi():
    for lam in partitions_up_to(4):
        for n in range(max(2, len(lam) + 1), 5):
            assert phi_n(double_schur_n(lam, n)) == double_schur_n(lam, n - 1), (
                lam,
                n,
            )


def test_decompose_round_trip():
    for lam in [(1,), (2, 1), (2, 2)]:
        P = double_schur_n(lam, 3)
        d = decompose(P)
        assert d.partitions() == [lam]
        assert d.coeff(lam) == APoly.one()


def test_decompose_rejects_nonsymmetric():
    with pytest.raises(ValueError):
        decompose(XPoly.x(1, 2))


def test_product_decomposition_matches_oracle():
    d = product_decomposition((1,), (1,), 3)
    # s_1 * s_1 = s_2 + s_11 + (lower-degree terms with a-coefficients)
    assert d.coeff((2,)).at_zero() == 1
    assert d.coeff((1, 1)).at_zero() == 1


def test_c_oracle_small_values():
    assert c_oracle((1,), (1,), (1,)) == a(0) - a(1)
    assert c_oracle((1,), (1,), (2,)) == APoly.one()
    assert c_oracle((1,), (1,), (1, 1)) == APoly.one()
    assert c_oracle((2,), (1,), (5,)).is_zero()


def test_classical_lr_known_values():
    # s_21 * s_21 contains s_321 with multiplicity 2
    assert classical_lr((2, 1), (2, 1), (3, 2, 1)) == 2
    assert classical_lr((1,), (1,), (2,)) == 1
    assert classical_lr((1,), (1,), (1, 1)) == 1
    assert classical_lr((2,), (2,), (3, 1)) == 1
    assert classical_lr((2,), (2,), (2, 1, 1)) == 0
    # degree mismatch vanishes
    assert classical_lr((2,), (1,), (1, 1)) == 0


def test_classical_lr_symmetry():
    for lam in partitions_up_to(3):
        for mu in partitions_up_to(3):
            for nu in partitions_up_to(size(lam) + size(mu)):
                assert classical_lr(lam, mu, nu) == classical_lr(mu, lam, nu)
