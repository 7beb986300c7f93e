import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbieuler.group_core import build_group, generated_subgroup
from orbieuler.gspace import (FiniteGSet, GSetError, build_gset, burnside_orbit_count, coset_gset,
                              disjoint_union, fixed_points, isotropy_strata, natural_gset, orbit_count,
                              product_space, regular_gset, trivial_gset)


@st.composite
def gsets(draw, names=("Z_2", "Z_4", "Z_2xZ_2", "S_3", "D_4", "Q_8", "A_4")):
    G = build_group(draw(st.sampled_from(names)))
    gens = draw(st.lists(st.lists(st.integers(0, G.order - 1), max_size=2), min_size=0, max_size=3))
    parts = [coset_gset(G, generated_subgroup(G, g)) for g in gens]
    return disjoint_union(*parts) if parts else trivial_gset(G, 0)


def test_build_gset_examples(z2):
    X = build_gset(z2, {"points": 3})
    assert X.size == 3 and orbit_count(X) == 3
    swap = build_gset(z2, {"points": 2, "action": {"generators": [[1, 0]]}})
    assert orbit_count(swap) == 1
    with pytest.raises(GSetError):
        build_gset(z2, {"points": 2, "action": {"generators": [[0, 0]]}})


def test_build_gset_from_generators_matches_natural(s3):
    images = [list(s3.labels[g]) for g in s3.generators]
    X = build_gset(s3, {"points": 3, "action": {"generators": images}})
    assert np.array_equal(X.action, natural_gset(s3).action)


def test_build_gset_rejects_non_action(s3):
    # send both generators to the same transposition: violates the relations of S_3
    assert sorted(s3.element_order(g) for g in s3.generators) == [2, 3]
    bad = [[1, 0, 2]] * len(s3.generators)
    with pytest.raises(GSetError):
        build_gset(s3, {"points": 3, "action": {"generators": bad}})


def test_build_gset_table_form(z2):
    X = build_gset(z2, {"points": 2, "action": {"table": [[0, 1], [1, 0]]}})
    assert orbit_count(X) == 1
    with pytest.raises(GSetError):
        build_gset(z2, {"points": 2, "action": {"table": [[1, 0], [1, 0]]}})


def test_action_law_checked(s3):
    bad = np.tile(np.arange(3), (6, 1))
    bad[1] = [1, 0, 2]
    with pytest.raises(GSetError):
        FiniteGSet(s3, bad)


def test_fixed_points_examples(z2, s3):
    X = natural_gset(s3)
    assert fixed_points(X, [s3.identity]).size == 3
    assert fixed_points(regular_gset(z2), [1]).size == 0
    t = next(g for g in s3 if s3.labels[g] == (1, 0, 2))
    F = fixed_points(X, [t])
    assert F.labels == (2,)
    assert F.group.order == 2


def test_fixed_points_acting_subgroup_must_preserve(s3):
    X = natural_gset(s3)
    t = next(g for g in s3 if s3.labels[g] == (1, 0, 2))
    with pytest.raises(GSetError):
        fixed_points(X, [t], acting=s3.whole)


def test_orbit_count_examples(z2, s3):
    assert orbit_count(trivial_gset(s3, 5)) == 5
    assert orbit_count(regular_gset(z2)) == 1
    assert orbit_count(natural_gset(s3)) == 1


def test_product_space_examples(z2):
    swap = regular_gset(z2)
    assert product_space(swap, trivial_gset(z2, 0)).size == 0
    P = product_space(swap, swap)
    assert P.size == 4 and P.group.order == 4 and orbit_count(P) == 1
    unit = trivial_gset(build_group("Z_1"), 1)
    Q = product_space(swap, unit)
    assert Q.size == 2 and orbit_count(Q) == 1


def test_isotropy_strata_examples(z2, s3):
    free = isotropy_strata(regular_gset(s3))
    assert len(free) == 1 and free[0].subgroup_class.order == 1
    triv = isotropy_strata(trivial_gset(z2, 3))
    assert len(triv) == 1 and triv[0].subgroup_class.order == 2 and triv[0].orbit_count == 3
    nat = isotropy_strata(natural_gset(s3))
    assert len(nat) == 1 and nat[0].subgroup_class.order == 2 and nat[0].orbit_count == 1


@settings(max_examples=40, deadline=None)
@given(gsets())
def test_burnside_matches_orbit_enumeration(X):
    assert orbit_count(X) == burnside_orbit_count(X)


@settings(max_examples=40, deadline=None)
@given(gsets())
def test_strata_partition_points(X):
    strata = isotropy_strata(X)
    pts = [p for s in strata for p in s.points]
    assert sorted(pts) == list(range(X.size))
    assert sum(s.orbit_count for s in strata) == orbit_count(X)


@settings(max_examples=30, deadline=None)
@given(gsets(), st.data())
def test_fixed_points_of_generators_equal_fixed_points_of_subgroup(X, data):
    G = X.group
    gens = data.draw(st.lists(st.integers(0, G.order - 1), max_size=3))
    H = generated_subgroup(G, gens)
    by_gens, by_subgroup = fixed_points(X, gens), fixed_points(X, H)
    assert by_gens.labels == by_subgroup.labels
    assert np.array_equal(by_gens.action, by_subgroup.action)


@settings(max_examples=25, deadline=None)
@given(gsets(names=("Z_2", "Z_3", "S_3")), gsets(names=("Z_2", "Z_2xZ_2", "Q_8")))
def test_product_orbit_count_multiplicative(X1, X2):
    assert orbit_count(product_space(X1, X2)) == orbit_count(X1) * orbit_count(X2)
