"""The division/S-polynomial/Buchberger layer, pinned against the worked
localization computation in 6 variables (z > x12 > x13 > x21 > x22 > x23)."""

import pytest

from omegarb.groebner import (
    buchberger,
    exact_divide,
    is_groebner_basis,
    reduce,
    s_polynomial,
)
from omegarb.ideals import ideal_equal, make_ideal
from omegarb.poly import VariableTable, grevlex_order, lex_order, parse_polynomial

T = VariableTable.of("z", "x12", "x13", "x21", "x22", "x23")
O = grevlex_order(T)


def P(s):
    return parse_polynomial(s, T)


L1Q = P("x12*x21 + x22^2")
L2Q = P("x12*x23 - x13*x22")
L3Q = P("x13*x21 + x22*x23")


@pytest.fixture(scope="module")
def D():
    return [
        P("x12") * L1Q,
        P("z") * L3Q,
        P("x12") * L3Q,
        P("z*x13*x22 - x12*x23"),
        P("x12") * L2Q,
        P("z*x22^2 + x12*x21"),
        P("z*x12 - x12"),
    ]


def test_leading_monomials_of_basis(D):
    lms = [f.leading_monomial(O) for f in D]
    expected = [
        P("x12^2*x21"),
        P("z*x13*x21"),
        P("x12*x13*x21"),
        P("z*x13*x22"),
        P("x12*x13*x22"),
        P("z*x22^2"),
        P("z*x12"),
    ]
    assert lms == [e.leading_monomial(O) for e in expected]


def test_s_polynomial_of_first_pair(D):
    sp = s_polynomial(D[0], D[1], O)
    assert sp == P("z*x12*x13*x22^2 - z*x12^2*x22*x23")
    assert reduce(sp, D, O).is_zero()


def test_s_polynomial_self_cancels(D):
    assert s_polynomial(D[0], D[0], O).is_zero()


def test_coprime_leading_monomials_reduce():
    t = VariableTable.of("x", "y")
    o = grevlex_order(t)
    f = parse_polynomial("x^2", t)
    g = parse_polynomial("y^2", t)
    assert reduce(s_polynomial(f, g, o), [f, g], o).is_zero()


def test_s_polynomial_of_zero_rejected(D):
    from omegarb.poly import Polynomial

    with pytest.raises(ValueError):
        s_polynomial(D[0], Polynomial.zero(T), O)


def test_basis_satisfies_buchberger_criterion(D):
    assert is_groebner_basis(D, O)


def test_basis_generates_the_tagged_ideal(D):
    J = make_ideal(
        T, [P("z") * L1Q, P("z") * L2Q, P("z") * L3Q, P("x12") * (P("1") - P("z"))]
    )
    assert ideal_equal(make_ideal(T, D), J)


def test_reduce_examples():
    assert reduce(L1Q, [L1Q], O).is_zero()
    t = VariableTable.of("x")
    o = lex_order(t)
    f = parse_polynomial("x^2 + 1", t)
    assert reduce(f, [parse_polynomial("x", t)], o) == parse_polynomial("1", t)
    assert reduce(f, [], o) == f


def test_reduce_is_normal_form(D):
    from omegarb.poly import mono_divides

    f = P("z^2*x12*x21 + x13^2 + 5")
    r = reduce(f, D, O)
    lms = [g.leading_monomial(O) for g in D]
    for mono in r.terms:
        assert not any(mono_divides(lm, mono) for lm in lms)


def test_buchberger_single_variable():
    t = VariableTable.of("x")
    gb = buchberger([parse_polynomial("x", t)], lex_order(t))
    assert [g.to_text() for g in gb.elements] == ["x"]


def test_buchberger_zero_ideal():
    from omegarb.poly import Polynomial

    gb = buchberger([Polynomial.zero(T)], O)
    assert gb.elements == ()
    assert not gb.contains_one()


def test_buchberger_of_tag_trick_ideal_matches(D):
    J = make_ideal(
        T, [P("z") * L1Q, P("z") * L2Q, P("z") * L3Q, P("x12") * (P("1") - P("z"))]
    )
    gb = J.groebner(O)
    assert is_groebner_basis(gb.elements, O)
    # same ideal as the seven-element set (mutual reduction)
    assert all(reduce(f, gb.elements, O).is_zero() for f in D)
    assert all(reduce(g, D, O).is_zero() for g in gb.elements)


def test_reduced_basis_independent_of_generator_order(rng):
    gens = [L1Q, L2Q, L3Q, P("z*x12 - x12")]
    reference = buchberger(gens, O).elements
    for _ in range(5):
        shuffled = gens[:]
        rng.shuffle(shuffled)
        assert buchberger(shuffled, O).elements == reference


def test_reduced_basis_is_reduced():
    from omegarb.poly import mono_divides

    gb = buchberger([L1Q, L2Q, L3Q], O)
    lms = [g.leading_monomial(O) for g in gb.elements]
    for i, g in enumerate(gb.elements):
        assert g.leading_coefficient(O) == 1
        for mono in g.terms:
            assert not any(
                mono_divides(lm, mono) for j, lm in enumerate(lms) if j != i
            )


def test_criteria_do_not_change_result():
    gens = [L1Q, L2Q, L3Q, P("z") * L1Q]
    a = buchberger(gens, O).elements
    b = buchberger(gens, O, coprime_criterion=False, chain_criterion=False).elements
    assert a == b


def test_exact_divide():
    f = P("x12") * L1Q
    assert exact_divide(f, P("x12"), O) == L1Q
    with pytest.raises(ArithmeticError):
        exact_divide(L1Q, P("x12"), O)
