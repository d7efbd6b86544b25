from fractions import Fraction

import pytest

from symhodge.cealg import (
    Form,
    build_operators,
    check_symplectic,
    form_to_vec,
    degree_basis,
    parse_form,
    parse_signature,
)
from symhodge.exactlin import Matrix, rank
from symhodge.superalg import (
    GradedModule,
    Verdict,
    brylinski_verdict,
    cohomology,
    ddelta_verdict,
    dee,
    dee_deebar_verdict,
    deebar,
    derived_relations_check,
    e_power,
    full_report,
    harmonic_subspace,
    lefschetz_map,
    primitive_basis,
    primitive_decompose,
    s_lefschetz_degree,
    sl2_on_cohomology_check,
    star_duality_check,
    verify_relations,
    weak_degree,
)

F = Fraction


def module_for(sig, om):
    p = parse_signature(sig)
    s = check_symplectic(p, parse_form(om, p.dim))
    return p, s, build_operators(s, p)


@pytest.fixture(scope="module")
def kt4():
    return module_for("(0,0,0,23)", "12+34")


@pytest.fixture(scope="module")
def abelian4():
    return module_for("(0,0,0,0)", "12+34")


@pytest.fixture(scope="module")
def lefschetz_solvable():
    # de2 = -e1∧e2, de3 = e1∧e3, omega = 14+23: full Lefschetz, delta != 0
    return module_for("(0,-12,13,0)", "14+23")


@pytest.fixture(scope="module")
def nonabelian2():
    return module_for("(0,12)", "12")


# --- relations -------------------------------------------------------------

def test_zero_module_has_no_violations():
    mod = GradedModule(n=0, weights={0: 0}, ops={})
    assert verify_relations(mod) == []


def test_relations_hold_on_constructions(kt4, abelian4, lefschetz_solvable):
    for _, _, mod in (kt4, abelian4, lefschetz_solvable):
        assert verify_relations(mod) == []
        assert derived_relations_check(mod) == []


def test_broken_delta_is_caught(nonabelian2):
    _, _, mod = nonabelian2
    zeroed = {i: Matrix.zeros(mod.dim(i - 1), mod.dim(i))
              for i in range(-1, 2)}
    broken = GradedModule(n=1, weights=mod.weights,
                          ops={**mod.ops, "delta": zeroed}, star=None)
    violations = verify_relations(broken)
    assert any(v.relation == "[f,d]=delta" and v.weight == 0 for v in violations)


def test_shape_mismatch_raises(nonabelian2):
    _, _, mod = nonabelian2
    bad = GradedModule(n=1, weights=mod.weights,
                       ops={**mod.ops, "e": {0: Matrix.zeros(5, 7)}})
    with pytest.raises(ValueError):
        verify_relations(bad)


def test_top_e_power_has_rank_one(kt4, lefschetz_solvable):
    for _, s, mod in (kt4, lefschetz_solvable):
        top = e_power(mod, mod.n, -mod.n)
        assert top.rows == top.cols == 1
        assert rank(top) == 1


# --- cohomology ------------------------------------------------------------

def test_abelian_cohomology_is_whole_space(abelian4):
    _, s, mod = abelian4
    for k in range(5):
        reps, proj, lift = cohomology(mod, k - s.m)
        assert lift.cols == len(degree_basis(4, k))
        assert proj @ lift == Matrix.identity(lift.cols)


def test_kt4_betti(kt4):
    _, s, mod = kt4
    dims = [cohomology(mod, k - s.m)[2].cols for k in range(5)]
    assert dims == [1, 3, 4, 3, 1]


def test_kt4_degree_two_generators_are_independent(kt4):
    # omega, e12 - e34, e13, e24 listed as the degree-2 classes
    _, s, mod = kt4
    basis2 = degree_basis(4, 2)
    _, proj, _ = cohomology(mod, 0)
    listed = [
        parse_form("12+34", 4),
        parse_form("12-34", 4),
        parse_form("13", 4),
        parse_form("24", 4),
    ]
    cols = [proj.apply(form_to_vec(f, basis2)) for f in listed]
    assert rank(Matrix.from_cols(cols, nrows=4)) == 4


def test_closed_generator_count_example():
    p, s, mod = module_for("(0,0,12,13,14,15)", "16+34-25")
    assert cohomology(mod, 1 - 3)[2].cols == 2  # two closed generators


# --- lefschetz maps --------------------------------------------------------

def test_lefschetz_k0_is_identity(kt4):
    _, _, mod = kt4
    assert lefschetz_map(mod, 0).kind == "isomorphism"


def test_kt4_lefschetz_verdicts(kt4):
    _, _, mod = kt4
    assert lefschetz_map(mod, 1).kind == "neither"
    assert lefschetz_map(mod, 2).kind == "isomorphism"
    assert s_lefschetz_degree(mod) == 1


def test_abelian_s_degree(abelian4):
    _, _, mod = abelian4
    assert s_lefschetz_degree(mod) == 0


def test_filiform_zero_then_iso():
    # [L] the zero map, [L]^2 an isomorphism: s = 1
    _, _, mod = module_for("(0,0,-12,-13)", "14+23")
    assert lefschetz_map(mod, 1).kind == "zero-map"
    assert lefschetz_map(mod, 2).kind == "isomorphism"
    assert s_lefschetz_degree(mod) == 1


def test_s_absent_when_top_fails(nonabelian2):
    _, _, mod = nonabelian2
    assert lefschetz_map(mod, 1).kind == "zero-map"
    assert s_lefschetz_degree(mod) is None


def test_verdict_classification():
    assert Verdict.classify(3, 3, 3).kind == "isomorphism"
    assert Verdict.classify(0, 0, 0).kind == "isomorphism"
    assert Verdict.classify(0, 2, 3).kind == "zero-map"
    assert Verdict.classify(2, 3, 2).kind == "surjection-only"
    assert Verdict.classify(2, 2, 3).kind == "injection-only"
    assert Verdict.classify(1, 2, 2).kind == "neither"
    assert Verdict.classify(0, 1, 0).kind == "zero-map"


# --- brylinski and harmonic ------------------------------------------------

def test_brylinski_bottom_weight_surjective(kt4):
    _, _, mod = kt4
    assert brylinski_verdict(mod, -mod.n)[0]


def test_brylinski_abelian_iso_everywhere(abelian4):
    _, _, mod = abelian4
    for i in range(-2, 3):
        assert brylinski_verdict(mod, i) == (True, True)


def test_brylinski_kt4_fails_off_middle(kt4):
    # s = 1, so the subcomplex inclusion cannot be a quasi-iso at every
    # weight with |i| >= 1; the failing side is computed, not assumed
    _, _, mod = kt4
    flags = {i: brylinski_verdict(mod, i)[1] for i in (-1, 1)}
    assert not all(flags.values())
    assert brylinski_verdict(mod, 2) == (True, True)
    assert brylinski_verdict(mod, -2) == (True, True)


def test_harmonic_kt4_weight_minus_one(kt4):
    # independent harmonic 1-forms: e1, e2, e3
    _, _, mod = kt4
    harm = harmonic_subspace(mod, -1)
    assert harm.dim == 3
    for gen in (1, 2, 3):
        vec = form_to_vec(Form.generator(gen), degree_basis(4, 1))
        assert harm.contains(vec)


def test_harmonic_abelian_everything(abelian4):
    _, _, mod = abelian4
    for i in range(-2, 3):
        assert harmonic_subspace(mod, i).dim == mod.dim(i)


# --- d-delta ---------------------------------------------------------------

def test_ddelta_abelian_all_weights(abelian4):
    _, _, mod = abelian4
    for i in range(-2, 3):
        assert ddelta_verdict(mod, i) == (True, True, True)


def test_ddelta_kt4_fails_somewhere(kt4):
    _, _, mod = kt4
    assert not all(all(ddelta_verdict(mod, i)) for i in range(-2, 3))


def test_weak_degree_matches_s(kt4, abelian4, lefschetz_solvable, nonabelian2):
    for _, _, mod in (kt4, abelian4, lefschetz_solvable):
        assert weak_degree(mod) == s_lefschetz_degree(mod)
    _, _, mod2 = nonabelian2
    assert weak_degree(mod2) is None and s_lefschetz_degree(mod2) is None


# --- primitives ------------------------------------------------------------

def test_primitive_rejects_positive_weight(abelian4):
    _, _, mod = abelian4
    with pytest.raises(ValueError):
        primitive_basis(mod, 1)


def test_primitive_bottom_weight_everything(abelian4):
    _, _, mod = abelian4
    assert primitive_basis(mod, -2).dim == mod.dim(-2)


def test_primitive_two_forms_abelian4(abelian4):
    _, _, mod = abelian4
    assert primitive_basis(mod, 0).dim == 5  # ker Λ on 2-forms: 5 of 6


def test_primitive_dimension_count(kt4, lefschetz_solvable):
    for _, _, mod in (kt4, lefschetz_solvable):
        for i in range(-mod.n, 1):
            assert primitive_basis(mod, i).dim == mod.dim(i) - mod.dim(i - 2)


def test_primitive_decompose_of_primitive_is_single_layer(abelian4):
    _, _, mod = abelian4
    basis2 = degree_basis(4, 2)
    v = form_to_vec(parse_form("13", 4), basis2)
    parts = primitive_decompose(mod, 0, v)
    assert [k for k, _ in parts] == [0]


def test_primitive_decompose_spec_example(abelian4):
    # e1∧e2 = (e1∧e2 - omega/2) + e * (1/2)
    _, s, mod = abelian4
    basis2 = degree_basis(4, 2)
    v = form_to_vec(parse_form("12", 4), basis2)
    parts = dict(primitive_decompose(mod, 0, v))
    w = form_to_vec(s.omega, basis2)
    half = F(1, 2)
    expected0 = [a - half * b for a, b in zip(v, w)]
    assert parts[0] == expected0
    assert parts[1] == [half]
    # the layer-0 part is killed by the contraction
    assert all(x == 0 for x in mod.op_mat("f", 0).apply(parts[0]))


def test_primitive_decompose_omega_has_no_primitive_part(abelian4):
    _, s, mod = abelian4
    basis2 = degree_basis(4, 2)
    parts = dict(primitive_decompose(mod, 0, form_to_vec(s.omega, basis2)))
    assert 0 not in parts
    assert parts[1] == [F(1)]


# --- dee / deebar ----------------------------------------------------------

def test_dee_deebar_zero_on_closed_primitives(kt4):
    _, _, mod = kt4
    basis1 = degree_basis(4, 1)
    v = form_to_vec(Form.generator(1), basis1)  # closed, weight -1, primitive
    assert all(x == 0 for x in dee(mod, -1, v))
    assert all(x == 0 for x in deebar(mod, -1, v))


def test_dee_requires_primitive(abelian4):
    _, s, mod = abelian4
    basis2 = degree_basis(4, 2)
    w = form_to_vec(s.omega, basis2)  # omega = e(1) is not primitive
    with pytest.raises(ValueError):
        dee(mod, 0, w)


def test_delta_is_scaled_deebar_on_primitives(kt4, lefschetz_solvable):
    # delta v = (1 - i) deebar v for primitive v of weight i
    for _, _, mod in (kt4, lefschetz_solvable):
        for i in range(-mod.n, 1):
            pb = primitive_basis(mod, i)
            for v in pb.basis:
                lhs = mod.op_mat("delta", i).apply(v)
                rhs = [(1 - i) * x for x in deebar(mod, i, list(v))]
                assert lhs == rhs


def test_d_delta_is_scaled_dee_deebar_on_primitives(kt4, lefschetz_solvable):
    # d delta v = (1 - i) dee(deebar v) for primitive v of weight i
    for _, _, mod in (kt4, lefschetz_solvable):
        for i in range(-mod.n, 1):
            for v in primitive_basis(mod, i).basis:
                dd = mod.op_mat("d", i - 1).apply(mod.op_mat("delta", i).apply(v))
                down = deebar(mod, i, list(v))
                up = dee(mod, i - 1, down)
                rhs = [(1 - i) * x for x in up]
                assert dd == rhs


def test_dee_deebar_verdicts(kt4, abelian4, lefschetz_solvable, nonabelian2):
    assert dee_deebar_verdict(abelian4[2]) is True
    assert dee_deebar_verdict(kt4[2]) is False
    assert dee_deebar_verdict(lefschetz_solvable[2]) is True
    assert dee_deebar_verdict(nonabelian2[2]) is False


def test_dee_deebar_literal_reading_differs_on_lefschetz(lefschetz_solvable):
    # the displayed weight-0 clause forces im(dee deebar) = 0 there, which a
    # Lefschetz module with d-delta nonzero on primitive middle forms violates
    _, _, mod = lefschetz_solvable
    assert dee_deebar_verdict(mod) is True
    assert dee_deebar_verdict(mod, literal=True) is False


# --- star ------------------------------------------------------------------

def test_star_duality_all_fixtures(kt4, abelian4, lefschetz_solvable, nonabelian2):
    for _, _, mod in (kt4, abelian4, lefschetz_solvable, nonabelian2):
        assert star_duality_check(mod) == []


def test_star_absent_raises(abelian4):
    _, _, mod = abelian4
    bare = GradedModule(n=mod.n, weights=mod.weights, ops=mod.ops, star=None)
    with pytest.raises(ValueError):
        star_duality_check(bare)


def test_subcomplex_duality_dimensions_kt4(kt4):
    # dim H^i(ker delta, d) = dim H^{-i}(ker d, delta), both sides independent
    from symhodge.superalg import subcomplex_cohomology_dim, op_kernel
    from symhodge.exactlin import image
    _, _, mod = kt4
    for i in range(-2, 3):
        lhs = subcomplex_cohomology_dim(mod, i)
        harm = harmonic_subspace(mod, -i)
        closed_above = op_kernel(mod, "d", -i + 1)
        bdry = image(mod.op_mat("delta", -i + 1) @ closed_above.as_matrix())
        assert lhs == harm.dim - bdry.dim


# --- induced sl2 -----------------------------------------------------------

def test_sl2_on_cohomology_abelian(abelian4):
    assert sl2_on_cohomology_check(abelian4[2]) is True


def test_sl2_on_cohomology_nontrivial_lefschetz(lefschetz_solvable):
    assert sl2_on_cohomology_check(lefschetz_solvable[2]) is True


def test_sl2_check_rejects_non_lefschetz(kt4):
    with pytest.raises(ValueError):
        sl2_on_cohomology_check(kt4[2])


def test_sl2_check_rejects_table_row():
    _, _, mod = module_for("(0,0,12,13,23,14)", "15+24+34-26")
    with pytest.raises(ValueError):
        sl2_on_cohomology_check(mod)


# --- the assembled report --------------------------------------------------

def test_full_report_kt4(kt4):
    rep = full_report(kt4[2])
    assert rep.s_lefschetz == 1
    assert rep.weak_degree == 1
    assert rep.dee_deebar is False
    assert rep.consistent


def test_full_report_abelian6():
    _, _, mod = module_for("(0,0,0,0,0,0)", "12+34+56")
    rep = full_report(mod)
    assert rep.s_lefschetz == 0
    assert all(flag for _, flag in rep.brylinski.values())
    assert all(all(t) for t in rep.ddelta.values())
    assert rep.dee_deebar and rep.consistent


def test_full_report_propagates_violations(nonabelian2):
    _, _, mod = nonabelian2
    zeroed = {i: Matrix.zeros(mod.dim(i - 1), mod.dim(i)) for i in range(-1, 2)}
    broken = GradedModule(n=1, weights=mod.weights,
                          ops={**mod.ops, "delta": zeroed}, star=None)
    with pytest.raises(ValueError):
        full_report(broken)
