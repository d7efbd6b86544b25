from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from symhodge.cealg import (
    Form,
    ParseError,
    ValidationError,
    build_operators,
    ce_betti,
    check_d_squared,
    check_symplectic,
    contract,
    contract_dual_bivector,
    contract_generator,
    d_form,
    degree_basis,
    indices_mask,
    parse_form,
    parse_signature,
    render_form,
    render_signature,
    wedge,
)
from symhodge.exactlin import Matrix
from symhodge.superalg import verify_relations

F = Fraction


# --- grammar ---------------------------------------------------------------

def test_parse_signature_worked_example():
    p = parse_signature("(0,0,0,0,12,14+25)")
    assert p.dim == 6
    assert p.d_generator(5) == Form.term((1, 2))
    assert p.d_generator(6) == Form.term((1, 4)) + Form.term((2, 5))
    for i in (1, 2, 3, 4):
        assert p.d_generator(i).is_zero()


def test_parse_signature_abelian():
    p = parse_signature("(0,0,0,0,0,0)")
    assert all(p.d_generator(i).is_zero() for i in range(1, 7))


def test_parse_signature_table_row():
    p = parse_signature("(0,0,12,13,14+23,24+15)")
    assert p.d_generator(5) == Form.term((1, 4)) + Form.term((2, 3))
    assert p.d_generator(6) == Form.term((2, 4)) + Form.term((1, 5))


def test_parse_form_examples():
    w = parse_form("12+34+56", 6)
    assert w.coeff(indices_mask((1, 2))) == 1
    assert w.coeff(indices_mask((5, 6))) == 1
    w = parse_form("16+2x34-25", 6)
    assert w.coeff(indices_mask((3, 4))) == 2
    assert w.coeff(indices_mask((2, 5))) == -1
    w = parse_form("13+42", 4)
    assert w.coeff(indices_mask((1, 3))) == 1
    assert w.coeff(indices_mask((2, 4))) == -1  # reversed pair flips sign


def test_parse_form_star_scale_and_whitespace():
    assert parse_form("2*34", 4) == parse_form(" 2x34 ", 4)
    assert parse_form("- 12 + 34", 4) == parse_form("34-12", 4)


def test_parse_errors():
    with pytest.raises(ParseError):
        parse_form("11", 4)  # repeated digit
    with pytest.raises(ParseError):
        parse_form("15", 4)  # index out of range
    with pytest.raises(ParseError):
        parse_form("1", 4)  # one digit is not a pair
    with pytest.raises(ParseError):
        parse_form("12+", 4)
    with pytest.raises(ParseError):
        parse_signature("(0,12")
    with pytest.raises(ParseError):
        parse_signature("(0,,12)")


def test_render_round_trip_catalog_style():
    for text, dim in [("16+2x34-25", 6), ("13+42", 4), ("0", 6),
                      ("12+34+56", 6), ("15+24-35+16", 6)]:
        form = parse_form(text, dim)
        assert parse_form(render_form(form), dim) == form
    sig = "(0,0,12,13,14+23,24+15)"
    pres = parse_signature(sig)
    assert parse_signature(render_signature(pres)) == pres


@given(st.lists(st.tuples(st.integers(1, 6), st.integers(1, 6),
                          st.integers(-3, 3)), max_size=5))
@settings(max_examples=80, deadline=None)
def test_render_parse_identity_on_random_2forms(pairs):
    form = Form.zero()
    for a, b, c in pairs:
        if a != b and c:
            form = form + Form.term((a, b), c)
    assert parse_form(render_form(form), 6) == form


# --- exterior algebra ------------------------------------------------------

def test_wedge_unit_and_nilpotence():
    b = Form.term((1, 3), 2)
    assert wedge(Form.one(), b) == b
    e1 = Form.generator(1)
    assert wedge(e1, e1).is_zero()


def test_wedge_square_of_two_form():
    w = parse_form("12+34", 4)
    sq = wedge(w, w)
    assert sq == Form.term((1, 2, 3, 4), 2)


def test_wedge_graded_commutativity():
    a = Form.generator(1) + Form.term((2, 3))
    b = Form.generator(4)
    # split by degree: 1-form vs 1-form anticommute, 2-form vs 1-form commute
    e1, t23 = Form.generator(1), Form.term((2, 3))
    assert wedge(e1, b) == wedge(b, e1).scale(-1)
    assert wedge(t23, b) == wedge(b, t23)


def test_contract_generator_signs():
    # paper convention: the vector goes in the first slot
    assert contract_generator(2, Form.term((1, 2))) == Form.generator(1).scale(-1)
    assert contract_generator(1, Form.term((1, 2))) == Form.generator(2)
    assert contract_generator(1, Form.one()).is_zero()


def test_contraction_of_omega_is_m():
    for sig, om in [("(0,0)", "12"), ("(0,0,0,0)", "12+34"),
                    ("(0,0,0,0,0,0)", "12+34+56"),
                    ("(0,-12,13,0)", "14+23")]:
        p = parse_signature(sig)
        s = check_symplectic(p, parse_form(om, p.dim))
        assert contract(s, s.omega) == Form.one().scale(s.m)


def test_contraction_spec_example():
    p = parse_signature("(0,0,0,0)")
    s = check_symplectic(p, parse_form("12+34", 4))
    assert contract_dual_bivector(s, parse_form("12", 4)) == Form.one()


# --- differential ----------------------------------------------------------

def test_abelian_differential_zero():
    p = parse_signature("(0,0,0,0)")
    for i in range(1, 5):
        assert d_form(p, Form.generator(i)).is_zero()


def test_kt4_coframe_differential():
    # e4 = dx4 + x2 dx3 gives d e4 = dx2 ∧ dx3 = e2 ∧ e3
    p = parse_signature("(0,0,0,23)")
    assert d_form(p, Form.generator(4)) == Form.term((2, 3))
    assert d_form(p, Form.term((1, 4))) == Form.term((1, 2, 3)).scale(-1)


def test_d_squared_clean_signature():
    p = parse_signature("(0,0,12,13,14,15)")
    assert check_d_squared(p) == []


def test_d_squared_violation():
    # de1 = e2∧e3, de2 = e1∧e2: d^2 e1 = de2∧e3 - e2∧de3 = e1∧e2∧e3 != 0
    p = parse_signature("(23,12,0)")
    assert check_d_squared(p) == [1]
    oracle = d_form(p, p.d_generator(1))
    assert oracle == Form.term((1, 2, 3))


def test_ce_betti_examples():
    assert ce_betti(parse_signature("(0,0,0,0,0,0)")) == [1, 6, 15, 20, 15, 6, 1]
    assert ce_betti(parse_signature("(0,0,0,23)")) == [1, 3, 4, 3, 1]


def test_betti_symmetry_nilpotent():
    b = ce_betti(parse_signature("(0,0,0,0,12,15)"))
    assert b == b[::-1]


# --- symplectic validation -------------------------------------------------

def test_check_symplectic_abelian6():
    p = parse_signature("(0,0,0,0,0,0)")
    s = check_symplectic(p, parse_form("12+34+56", 6))
    assert s.m == 3
    assert s.gram @ s.gram_inv == Matrix.identity(6)


def test_check_symplectic_degenerate():
    p = parse_signature("(0,0,0,0)")
    with pytest.raises(ValidationError):
        check_symplectic(p, parse_form("12+13", 4))


def test_check_symplectic_not_closed():
    p = parse_signature("(0,0,0,0,12,15)")
    with pytest.raises(ValidationError):
        check_symplectic(p, parse_form("56+34", 6))


def test_check_symplectic_odd_dimension():
    with pytest.raises(ValidationError):
        check_symplectic(parse_signature("(0,0,0)"), parse_form("12", 3))


def test_check_symplectic_table_row():
    p = parse_signature("(0,0,0,0,12,15)")
    s = check_symplectic(p, parse_form("16+25+34", 6))
    assert s.m == 3


# --- operator construction -------------------------------------------------

def test_build_operators_smallest_instance():
    p = parse_signature("(0,0)")
    s = check_symplectic(p, parse_form("12", 2))
    mod = build_operators(s, p)
    assert [mod.dim(i) for i in (-1, 0, 1)] == [1, 2, 1]
    assert all(mod.op_mat("delta", i).is_zero() for i in (-1, 0, 1))
    assert verify_relations(mod) == []


def test_kahler_weil_identity_per_degree():
    # [L, Λ] = (k - m) on Λ^k, checked as matrices
    p = parse_signature("(0,0,0,23)")
    s = check_symplectic(p, parse_form("12+34", 4))
    mod = build_operators(s, p)
    for i in range(-2, 3):
        l_after = mod.op_mat("e", i - 2) @ mod.op_mat("f", i)
        lam_after = mod.op_mat("f", i + 2) @ mod.op_mat("e", i)
        assert l_after - lam_after == Matrix.identity(mod.dim(i)).scale(i)


def test_build_operators_rejects_unvalidated():
    p = parse_signature("(0,0,0,0)")
    with pytest.raises(ValidationError):
        check_symplectic(p, parse_form("12", 4))  # degenerate on dim 4


def test_degree_basis_sizes():
    assert [len(degree_basis(6, k)) for k in range(7)] == [1, 6, 15, 20, 15, 6, 1]
    assert degree_basis(4, 5) == []
