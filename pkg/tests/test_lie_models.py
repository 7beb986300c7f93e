from fractions import Fraction

import pytest

from orbieuler import euler_calc as ec
from orbieuler.group_core import build_group
from orbieuler.gspace import coset_gset, generated_subgroup, natural_gset, regular_gset, trivial_gset
from orbieuler.lie_models import (CIRCLE, O2, ClassPoint, HomogeneousSpace, ModelError, ModelGSpace,
                                  centralizer_model, check_paper_examples, chi_k_model, class_space,
                                  finite_model, fixed_space_model, integrand, parse_model,
                                  restrict_to_circle)
from orbieuler.orbifold import chi_k


def test_class_space_examples():
    assert ec.euler_char(class_space(CIRCLE)) == 0
    assert ec.euler_char(class_space(O2)) == 2
    assert ec.euler_char(class_space(finite_model(build_group("S_3")))) == 3


def test_centralizer_examples():
    assert centralizer_model(O2, ClassPoint("rot", Fraction(0))) == O2
    assert centralizer_model(O2, ClassPoint("rot", Fraction(1, 2))) == O2
    assert centralizer_model(O2, ClassPoint("rot", Fraction(1, 3))) == CIRCLE
    refl = centralizer_model(O2, ClassPoint("refl"))
    assert refl.variant == "finite" and refl.finite.order == 4 and refl.finite.is_abelian
    assert centralizer_model(CIRCLE, ClassPoint("rot", Fraction(1, 7))) == CIRCLE


def test_fixed_space_examples():
    X = parse_model("S1/Z_3")
    assert fixed_space_model(X, ClassPoint("rot", Fraction(1, 3))) == X
    assert fixed_space_model(X, ClassPoint("rot", Fraction(1, 4))).pieces == ()
    assert fixed_space_model(parse_model("S1/S1"), ClassPoint("rot", Fraction(2, 7))) == parse_model("S1/S1")
    for text in ("O2/Z_3", "O2/SO2"):
        F = fixed_space_model(parse_model(text), ClassPoint("refl"))
        assert F.finite is not None and F.finite.size == 0
    Y = fixed_space_model(parse_model("O2/Z_4"), ClassPoint("rot", Fraction(1, 4)))
    assert Y == parse_model("2*S1/Z_4")
    assert fixed_space_model(parse_model("O2/Z_4"), ClassPoint("rot", Fraction(1, 2))) == parse_model("O2/Z_4")


def test_chi_k_model_examples():
    assert chi_k_model(parse_model("S1/Z_3"), 2) == 9
    assert chi_k_model(parse_model("S1/S1"), 1) == 0
    assert chi_k_model(parse_model("O2/Z_2"), 1) == 2
    assert chi_k_model(parse_model("O2/SO2"), 1) == 0


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("k", range(5))
def test_closed_forms(m, k):
    assert chi_k_model(parse_model(f"S1/Z_{m}"), k) == m ** k
    assert chi_k_model(parse_model(f"O2/Z_{m}"), k) == m ** k


def test_order_zero_counts_orbits():
    assert chi_k_model(parse_model("S1/Z_2 + 3*S1/S1"), 0) == 4
    assert chi_k_model(parse_model("O2/SO2"), 0) == 1


def test_point_over_circle():
    for k in range(1, 5):
        assert chi_k_model(parse_model("S1/S1"), k) == 0


@pytest.mark.parametrize("m", [1, 3, 5, 7])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_odd_recursion(m, k):
    X = parse_model(f"O2/Z_{m}")
    restricted = restrict_to_circle(X)
    lhs = chi_k_model(X, k)
    assert lhs == chi_k_model(X, k - 1) + (m - 1) // 2 * chi_k_model(restricted, k - 1)
    assert lhs == m ** (k - 1) + (m - 1) * m ** (k - 1)


@pytest.mark.parametrize("m", [2, 4, 6])
@pytest.mark.parametrize("k", [1, 2, 3, 4])
def test_even_recursion(m, k):
    X = parse_model(f"O2/Z_{m}")
    restricted = restrict_to_circle(X)
    assert chi_k_model(X, k) == 2 * chi_k_model(X, k - 1) + (m - 2) // 2 * chi_k_model(restricted, k - 1)


@pytest.mark.parametrize("m", range(1, 7))
@pytest.mark.parametrize("k", range(4))
def test_restriction_consistency(m, k):
    restricted = restrict_to_circle(parse_model(f"O2/Z_{m}"))
    assert chi_k_model(restricted, k) == 2 * chi_k_model(parse_model(f"S1/Z_{m}"), k)


@pytest.mark.parametrize("a,b", [("S1/Z_2", "S1/Z_3"), ("S1/S1", "S1/Z_5"), ("O2/Z_3", "O2/SO2"),
                                 ("O2/Z_4", "O2/Z_6")])
def test_additivity(a, b):
    for k in range(4):
        total = chi_k_model(parse_model(f"{a} + {b}"), k)
        assert total == chi_k_model(parse_model(a), k) + chi_k_model(parse_model(b), k)


@pytest.mark.parametrize("name", ["Z_2", "S_3", "Q_8", "D_4"])
def test_finite_models_delegate(name):
    G = build_group(name)
    spaces = [regular_gset(G), trivial_gset(G, 2), coset_gset(G, generated_subgroup(G, [1]))]
    if hasattr(G, "degree"):
        spaces.append(natural_gset(G))
    for X in spaces:
        for k in range(4):
            assert chi_k_model(ModelGSpace.of_finite(X), k) == chi_k(X, k)


@pytest.mark.parametrize("text", ["S1/Z_3", "O2/Z_4", "O2/SO2", "S1/Z_2 + S1/Z_5"])
def test_integral_invariant_under_extra_cuts(text):
    X = parse_model(text)
    for k in range(1, 4):
        f = integrand(X, k)
        extra = [Fraction(1, 11), Fraction(3, 13), Fraction(2, 5)]
        finer = []
        for s, v in f.pieces:
            cuts = [c for c in extra if s.kind != "point" and s.kind in ec.GEOMETRIC and s.contains(c)]
            finer += [(p, v) for p in ec.refine_at_points(s, cuts)]
        assert ec.integrate(ec.ConstructibleFunction(f.ambient, finer)) == ec.integrate(f) == chi_k_model(X, k)


def test_reference_check_flags_only_the_deviation():
    rows = check_paper_examples(6, 4)
    bad = [r for r in rows if not r.agrees]
    assert bad and all(r.model == "O2/SO2" and r.k >= 1 and r.known_deviation for r in bad)
    flagged = next(r for r in rows if r.model == "O2/SO2" and r.k == 1)
    assert flagged.computed == 0 and flagged.reference == 2 and flagged.note
    assert all(r.agrees for r in rows if r.model != "O2/SO2")


def test_parse_errors():
    for text in ("S1/Z_0", "S2/Z_3", "O2/S1", "S1/Z_2 + O2/Z_2", "O2/D_3"):
        with pytest.raises(ModelError):
            parse_model(text)
    with pytest.raises(ModelError):
        HomogeneousSpace(O2, ("full",))
    with pytest.raises(ValueError):
        chi_k_model(parse_model("S1/Z_2"), 5)


def test_model_sum_requires_same_group():
    with pytest.raises(ModelError):
        parse_model("S1/Z_2") + parse_model("O2/Z_2")
    assert parse_model("S1/Z_2") + parse_model("S1/Z_3") == parse_model("S1/Z_3 + S1/Z_2")
