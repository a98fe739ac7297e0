"""Presented categories, completions, semisimplicity, separability."""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

import pytest

from conftest import load
from oracles import s3_cayley_table
from verlinde.categories import (Algebra, CategoryFormatError, DEFAULT_GRID,
                                 KaroubiCategory, PresentedCategory,
                                 character_vector, cyclic_table,
                                 dual_numbers_algebra, field_algebra,
                                 field_category, group_algebra,
                                 group_separability_idempotent,
                                 indecomposable_objects, iso_classes,
                                 karoubi_completion, karoubi_idempotents,
                                 karoubi_object_name, mat_completion,
                                 matrix_algebra, matrix_algebra_category,
                                 matrix_separability_idempotent,
                                 one_object_category, product_field_algebra,
                                 product_field_separability_idempotent,
                                 tensor_product, trace_form_semisimple,
                                 validate_category,
                                 verify_separability_idempotent)
from verlinde.exact import Matrix


def test_field_category_is_valid():
    assert validate_category(field_category()).ok


def test_matrix_algebra_category_is_valid():
    assert validate_category(matrix_algebra_category(2)).ok


def test_broken_associativity_names_the_triple():
    cat = PresentedCategory(
        objects=("x",),
        hom={("x", "x"): ("u", "a", "b")},
        compose={
            ("u", "u"): {"u": 1},
            ("u", "a"): {"a": 1}, ("a", "u"): {"a": 1},
            ("u", "b"): {"b": 1}, ("b", "u"): {"b": 1},
            ("a", "b"): {"u": 1},
            # b.a = 0, a.a = 0, b.b = 0 -> (a b) a = a but a (b a) = 0
        },
        identities={"x": {"u": 1}})
    report = validate_category(cat)
    assert not report.ok
    assert any("(a,b,a)" in e for e in report.entries)


def test_identity_law_failure_reported():
    cat = PresentedCategory(
        objects=("x",),
        hom={("x", "x"): ("u",)},
        compose={("u", "u"): {"u": Fraction(1, 2)}},
        identities={"x": {"u": 1}})
    report = validate_category(cat)
    assert any("identity law" in e for e in report.entries)


def test_structural_errors_are_load_errors():
    with pytest.raises(CategoryFormatError):
        PresentedCategory(objects=("x",), hom={("x", "y"): ("f",)},
                          compose={}, identities={})
    with pytest.raises(CategoryFormatError):
        PresentedCategory(objects=("x",), hom={("x", "x"): ("f", "f")},
                          compose={}, identities={"x": {"f": 1}})
    with pytest.raises(CategoryFormatError):
        PresentedCategory(objects=("x",), hom={("x", "x"): ("f",)},
                          compose={("f", "g"): {"f": 1}},
                          identities={"x": {"f": 1}})


# ---------------------------------------------------------------------------
# Mat completion


def test_mat_completion_of_field_bound_two():
    completed = mat_completion(field_category(), bound=2)
    assert "[]" in completed.objects
    assert completed.hom_dim("[x,x]", "[x,x]") == 4
    assert validate_category(completed).ok
    # the endomorphisms of [x,x] are the 2x2 matrix algebra
    endo = Algebra.from_category(
        PresentedCategory(
            objects=("[x,x]",),
            hom={("[x,x]", "[x,x]"): completed.hom("[x,x]", "[x,x]")},
            compose={(g, f): completed.compose_basis(g, f)
                     for g in completed.hom("[x,x]", "[x,x]")
                     for f in completed.hom("[x,x]", "[x,x]")
                     if completed.compose_basis(g, f)},
            identities={"[x,x]": completed.identity_coeffs("[x,x]")}))
    reference = matrix_algebra(2)
    assert endo.mult == reference.mult
    assert endo.unit == reference.unit


def test_mat_completion_bound_one_is_base_plus_zero():
    base = matrix_algebra_category(2)
    completed = mat_completion(base, bound=1)
    assert completed.objects == ("[]", "[x]")
    assert completed.hom_dim("[x]", "[x]") == 4
    assert completed.hom_dim("[]", "[]") == 0
    assert validate_category(completed).ok


def test_mat_completion_hom_dims_are_additive():
    base = PresentedCategory(
        objects=("x", "y"),
        hom={("x", "x"): ("u",), ("y", "y"): ("v",), ("x", "y"): ("f",)},
        compose={("u", "u"): {"u": 1}, ("v", "v"): {"v": 1},
                 ("f", "u"): {"f": 1}, ("v", "f"): {"f": 1}},
        identities={"x": {"u": 1}, "y": {"v": 1}})
    assert validate_category(base).ok
    completed = mat_completion(base, bound=2)
    assert validate_category(completed).ok
    for p in base.objects:
        for q in base.objects:
            for r in base.objects:
                two = f"[{p},{q}]"
                one = f"[{r}]"
                expected = base.hom_dim(p, r) + base.hom_dim(q, r)
                assert completed.hom_dim(two, one) == expected


def test_mat_completion_rejects_bad_bound():
    with pytest.raises(ValueError):
        mat_completion(field_category(), bound=0)


# ---------------------------------------------------------------------------
# Karoubi completion


def test_karoubi_of_field_has_zero_and_one():
    completed = karoubi_completion(field_category())
    assert completed.objects == ("x(0)", "x(1)")
    assert completed.hom_dim("x(1)", "x(1)") == 1
    assert completed.hom_dim("x(0)", "x(0)") == 0
    assert validate_category(completed).ok


def test_karoubi_splits_rank_one_projector_in_mat2():
    cat = matrix_algebra_category(2)
    completed = karoubi_completion(cat)
    name = karoubi_object_name("x", (1, 0, 0, 0))
    assert name in completed.objects
    assert completed.hom_dim(name, name) == 1
    assert validate_category(completed).ok


def test_karoubi_splits_diag_in_mat_completion_of_field():
    # the additive completion of k at bound 2 contains [x,x] whose
    # endomorphisms are 2x2 matrices; splitting diag(1,0) there gives an
    # object with endomorphism algebra k
    completed = karoubi_completion(mat_completion(field_category(), 2))
    basis = completed.base.hom("[x,x]", "[x,x]")
    assert len(basis) == 4
    coeffs = (Fraction(1), Fraction(0), Fraction(0), Fraction(0))
    name = completed.object_of(("[x,x]", coeffs))
    assert completed.hom_dim(name, name) == 1


def test_karoubi_retract_splits_every_enumerated_idempotent():
    cat = matrix_algebra_category(2)
    completed = karoubi_completion(cat)
    basis = cat.hom("x", "x")
    ident = tuple(cat.identity_coeffs("x").get(b, Fraction(0))
                  for b in basis)
    for coeffs in karoubi_idempotents(cat, "x"):
        u = cat.morphism("x", "x", dict(zip(basis, coeffs)))
        if u.is_zero():
            continue
        into = completed.embed(("x", ident), ("x", coeffs), u)
        onto = completed.embed(("x", coeffs), ("x", ident), u)
        split_name = completed.object_of(("x", coeffs))
        assert completed.compose(into, onto) == completed.identity(split_name)
        assert completed.compose(onto, into) == completed.embed(
            ("x", ident), ("x", ident), u)


def test_karoubi_triple_law_matches_base_composition():
    cat = matrix_algebra_category(2)
    completed = karoubi_completion(cat)
    rng = random.Random(17)
    names = list(completed.objects)
    for _ in range(60):
        a, b, c = (rng.choice(names) for _ in range(3))
        fs = completed.hom(a, b)
        gs = completed.hom(b, c)
        if not fs or not gs:
            continue
        f = completed.morphism(a, b, {n: Fraction(rng.randint(-2, 2))
                                      for n in fs})
        g = completed.morphism(b, c, {n: Fraction(rng.randint(-2, 2))
                                      for n in gs})
        base_f = _as_base(completed, f)
        base_g = _as_base(completed, g)
        composite = completed.compose(g, f)
        assert _as_base(completed, composite) == cat.compose(base_g, base_f)


def _as_base(completed: KaroubiCategory, m):
    out = None
    for name, coeff in m.coeffs.items():
        term = completed.base_morphism_of(name).scaled(coeff)
        out = term if out is None else out + term
    if out is None:
        src = dict(completed.pairs)  # not informative; fall back to zero
        return completed.base.zero("x", "x")
    return out


def test_karoubi_rejects_non_idempotent_with_residual():
    cat = field_category()
    with pytest.raises(CategoryFormatError, match="not idempotent"):
        karoubi_completion(cat, idempotents=[("x", (Fraction(1, 2),))])


def test_karoubi_explicit_idempotent_list():
    cat = matrix_algebra_category(2)
    completed = karoubi_completion(
        cat, idempotents=[("x", (1, 0, 0, 1)), ("x", (1, 0, 0, 0))])
    assert len(completed.objects) == 2
    assert validate_category(completed).ok


def test_double_karoubi_preserves_indecomposables_and_hom_dims():
    for base in (field_category(),
                 product_field_algebra(2).to_category()):
        once = karoubi_completion(base)
        assert validate_category(once).ok
        twice = karoubi_completion(once)
        assert validate_category(twice).ok

        def summary(cat):
            classes = iso_classes(cat, indecomposable_objects(cat))
            reps = [c[0] for c in classes]
            dims = sorted(cat.hom_dim(a, b) for a in reps for b in reps)
            return len(classes), dims

        assert summary(once) == summary(twice)


def test_character_vectors_separate_the_k2_idempotents():
    cat = product_field_algebra(2).to_category()
    completed = karoubi_completion(cat)
    e1 = completed.object_of(("x", (Fraction(1), Fraction(0))))
    e2 = completed.object_of(("x", (Fraction(0), Fraction(1))))
    both = completed.object_of(("x", (Fraction(1), Fraction(1))))
    assert character_vector(completed, e1) != character_vector(completed, e2)
    classes = iso_classes(completed, indecomposable_objects(completed))
    assert len(classes) == 2
    assert both not in itertools.chain.from_iterable(classes)


def test_mat2_karoubi_rank_one_objects_are_one_class():
    cat = matrix_algebra_category(2)
    completed = karoubi_completion(cat)
    indec = indecomposable_objects(completed)
    classes = iso_classes(completed, indec)
    assert len(classes) == 1
    assert len(classes[0]) == 15  # the grid's rank-one idempotents
    rep = classes[0][0]
    assert completed.hom_dim(rep, rep) == 1


# ---------------------------------------------------------------------------
# tensor product


def test_tensor_with_field_is_isomorphic_to_base():
    base = matrix_algebra_category(2)
    product = tensor_product(field_category(), base)
    # strip the field factor from every name and compare tables
    strip_obj = {f"(x,{p})": p for p in base.objects}
    assert [strip_obj[o] for o in product.objects] == list(base.objects)
    for (g, f), combo in product.table_items():
        g_base = g[len("(u|"):-1]
        f_base = f[len("(u|"):-1]
        stripped = {h[len("(u|"):-1]: c for h, c in combo.items()}
        assert stripped == base.compose_basis(g_base, f_base)
    for ((p1, q1), basis) in product.hom_pairs():
        assert len(basis) == base.hom_dim(strip_obj[p1], strip_obj[q1])


def test_tensor_hom_dimensions_multiply():
    a = matrix_algebra_category(2)
    b = product_field_algebra(2).to_category()
    product = tensor_product(a, b)
    assert validate_category(product).ok
    assert product.hom_dim("(x,x)", "(x,x)") == 8


def test_tensor_product_is_associative_up_to_flattening():
    a = field_category("p", "u")
    b = product_field_algebra(2).to_category("q")
    c = matrix_algebra_category(2, "r")
    left = tensor_product(tensor_product(a, b), c)
    right = tensor_product(a, tensor_product(b, c))

    def left_key(name):
        # ((f|g)|h) -> (f,g,h)
        inner, h = name[1:-1].rsplit("|", 1)
        f, g = inner[1:-1].split("|", 1)
        return (f, g, h)

    def right_key(name):
        f, inner = name[1:-1].split("|", 1)
        g, h = inner[1:-1].split("|", 1)
        return (f, g, h)

    left_table = {(left_key(g), left_key(f)):
                  {left_key(h): v for h, v in combo.items()}
                  for (g, f), combo in left.table_items()}
    right_table = {(right_key(g), right_key(f)):
                   {right_key(h): v for h, v in combo.items()}
                   for (g, f), combo in right.table_items()}
    assert left_table == right_table


def test_tensor_product_is_symmetric_up_to_swap():
    a = product_field_algebra(2).to_category("p")
    b = matrix_algebra_category(2, "q")
    ab = tensor_product(a, b)
    ba = tensor_product(b, a)

    def swap_key(name):
        f, g = name[1:-1].split("|", 1)
        return (g, f)

    ab_table = {(swap_key(g), swap_key(f)):
                {swap_key(h): v for h, v in combo.items()}
                for (g, f), combo in ab.table_items()}
    ba_table = {((g, f)): combo for (g, f), combo in ba.table_items()}
    ba_keyed = {((g[1:-1].split("|", 1)[0], g[1:-1].split("|", 1)[1]),
                 (f[1:-1].split("|", 1)[0], f[1:-1].split("|", 1)[1])):
                {tuple(h[1:-1].split("|", 1)): v for h, v in combo.items()}
                for (g, f), combo in ba_table.items()}
    ab_keyed = {(tuple(g), tuple(f)): {tuple(h): v for h, v in combo.items()}
                for (g, f), combo in ab_table.items()}
    assert ab_keyed == ba_keyed


# ---------------------------------------------------------------------------
# semisimplicity


def test_trace_form_z2_group_algebra():
    semisimple, gram = trace_form_semisimple(
        group_algebra(cyclic_table(2)))
    assert semisimple
    assert gram == Matrix([[2, 0], [0, 2]])


def test_trace_form_dual_numbers_not_semisimple():
    semisimple, gram = trace_form_semisimple(dual_numbers_algebra())
    assert not semisimple
    assert gram == Matrix([[2, 0], [0, 0]])
    assert gram.rank() == 1


def test_trace_form_componentwise_field_is_identity():
    for n in (2, 3, 4):
        semisimple, gram = trace_form_semisimple(product_field_algebra(n))
        assert semisimple
        assert gram == Matrix.identity(n)


def test_trace_form_matrix_and_group_algebras_semisimple():
    assert trace_form_semisimple(matrix_algebra(2))[0]
    assert trace_form_semisimple(group_algebra(cyclic_table(3)))[0]
    assert trace_form_semisimple(group_algebra(s3_cayley_table()))[0]


def test_trace_form_field():
    assert trace_form_semisimple(field_algebra())[0]


# ---------------------------------------------------------------------------
# separability


def test_group_algebra_separability_idempotent():
    for n in (2, 3):
        table = cyclic_table(n)
        report = verify_separability_idempotent(
            group_algebra(table), group_separability_idempotent(table))
        assert report.ok, report.render()
    s3 = s3_cayley_table()
    report = verify_separability_idempotent(
        group_algebra(s3), group_separability_idempotent(s3))
    assert report.ok, report.render()


def test_matrix_algebra_separability_idempotent():
    report = verify_separability_idempotent(
        matrix_algebra(2), matrix_separability_idempotent(2))
    assert report.ok, report.render()
    report3 = verify_separability_idempotent(
        matrix_algebra(3), matrix_separability_idempotent(3))
    assert report3.ok, report3.render()


def test_componentwise_field_separability_idempotent():
    for n in (2, 3):
        report = verify_separability_idempotent(
            product_field_algebra(n),
            product_field_separability_idempotent(n))
        assert report.ok, report.render()


def test_unnormalised_matrix_element_fails_separability():
    bad = matrix_separability_idempotent(2).scale(2)
    report = verify_separability_idempotent(matrix_algebra(2), bad)
    assert not report.ok
    assert any("multiplication map" in e for e in report.entries)


def test_commutation_failure_is_reported():
    # 1 (x) 1 on Z/2 maps to 1 under multiplication but g.e != e.g
    e = Matrix([[1, 0], [0, 0]])
    report = verify_separability_idempotent(
        group_algebra(cyclic_table(2)), e)
    assert not report.ok
    assert all("commute" in entry for entry in report.entries)


# ---------------------------------------------------------------------------
# algebra plumbing


def test_algebra_category_roundtrip():
    alg = group_algebra(cyclic_table(3))
    assert Algebra.from_category(alg.to_category()) == alg


def test_one_object_category_matches_builder():
    alg = field_algebra()
    cat = one_object_category("x", ("u",), alg.mult, alg.unit)
    assert validate_category(cat).ok
    assert cat == field_category()


def test_corpus_categories_are_valid():
    for name in ("onepoint.category", "mat2.category"):
        assert validate_category(load(name)).ok


def test_default_grid_has_expected_members():
    assert Fraction(1, 2) in DEFAULT_GRID
    assert Fraction(-1) in DEFAULT_GRID
