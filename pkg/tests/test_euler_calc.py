from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from orbieuler.euler_calc import (ConstructibleFunction, StratumError, circle, closed_interval,
                                  cofinite_complement, constant, euler_char, finite_set,
                                  half_open_interval, integrate, open_interval, point, refine_at_points)

fractions = st.fractions(min_value=0, max_value=1, max_denominator=12)


def test_chi_c_values():
    assert point(0).chi_c == 1
    assert open_interval(0, 1).chi_c == -1
    assert half_open_interval(0, 1).chi_c == 0
    assert closed_interval(0, 1).chi_c == 1
    assert circle().chi_c == 0
    assert finite_set(4).chi_c == 4
    assert cofinite_complement(closed_interval(0, 1), 3).chi_c == -2
    assert cofinite_complement(circle(), 2).chi_c == -2


def test_euler_char_examples():
    assert euler_char([circle()]) == 0
    assert euler_char([closed_interval(0, Fraction(1, 2))]) == 1
    assert euler_char([open_interval(0, 1), point(0), point(1)]) == 1


def test_integrate_examples():
    S = [circle()]
    assert integrate(constant(S, 1)) == 0
    v = 7
    f = ConstructibleFunction(S, [(point(Fraction(1, 3), on_circle=True), v),
                                  (open_interval(Fraction(1, 3), Fraction(4, 3), on_circle=True), 0)])
    assert integrate(f) == v
    I = [closed_interval(0, Fraction(1, 2))]
    g = ConstructibleFunction(I, [(point(0), 0), (point(Fraction(1, 2)), 0),
                                  (open_interval(0, Fraction(1, 2)), 1)])
    assert integrate(g) == -1


def test_constant_one_is_euler_char():
    for amb in ([circle()], [closed_interval(0, 1)], [closed_interval(0, 1, "a"), point(0, "b")]):
        assert integrate(constant(amb, 1)) == euler_char(amb)


def test_refine_examples():
    pieces = refine_at_points(circle(), [Fraction(j, 5) for j in range(5)])
    assert len(pieces) == 10 and euler_char(pieces) == 0
    assert sum(p.kind == "point" for p in pieces) == 5
    j = 3
    I = closed_interval(0, Fraction(1, 2))
    cuts = [0, Fraction(1, 2)] + [Fraction(i, 2 * (j + 1)) for i in range(1, j + 1)]
    pieces = refine_at_points(I, cuts)
    assert sum(p.kind == "point" for p in pieces) == j + 2
    assert sum(p.kind == "open" for p in pieces) == j + 1
    assert euler_char(pieces) == 1
    assert refine_at_points(I, []) == [I]


def test_refine_rejects_outside_points():
    with pytest.raises(StratumError):
        refine_at_points(open_interval(0, Fraction(1, 2)), [0])
    with pytest.raises(StratumError):
        refine_at_points(closed_interval(0, Fraction(1, 2)), [Fraction(3, 4)])
    with pytest.raises(StratumError):
        refine_at_points(finite_set(3), [0])


def test_refine_wrapping_arc():
    arc = open_interval(Fraction(3, 4), Fraction(5, 4), on_circle=True)
    pieces = refine_at_points(arc, [0, Fraction(7, 8)])
    assert euler_char(pieces) == -1
    assert all(arc.contains(p.sample()) for p in pieces)
    ConstructibleFunction([arc], [(p, 1) for p in pieces])


def test_validation_errors():
    S = [circle()]
    with pytest.raises(StratumError):  # missing a point
        ConstructibleFunction(S, [(open_interval(0, 1, on_circle=True), 1)])
    with pytest.raises(StratumError):  # overlapping pieces with matching chi_c total
        ConstructibleFunction(S, [(open_interval(0, Fraction(2, 3), on_circle=True), 1),
                                  (open_interval(Fraction(1, 3), 1, on_circle=True), 1),
                                  (point(0, on_circle=True), 1), (point(Fraction(1, 2), on_circle=True), 1)])
    I = [closed_interval(0, Fraction(1, 2))]
    with pytest.raises(StratumError):  # outside the ambient interval
        ConstructibleFunction(I, [(closed_interval(1, 2), 1)])
    with pytest.raises(StratumError):  # unknown component
        ConstructibleFunction(I, [(I[0], 1), (point(0, "other"), 1)])
    with pytest.raises(StratumError):
        open_interval(1, 1)
    with pytest.raises(StratumError):
        finite_set(-1)


@st.composite
def refined_functions(draw):
    """A circle or interval ambient, cut at random points, with random integer values."""
    if draw(st.booleans()):
        amb = circle()
    else:
        amb = closed_interval(0, Fraction(1, 2))
    cuts = draw(st.lists(fractions, max_size=5))
    cuts = [c for c in cuts if amb.contains(c)]
    pieces = refine_at_points(amb, cuts)
    values = draw(st.lists(st.integers(-5, 5), min_size=len(pieces), max_size=len(pieces)))
    return amb, list(zip(pieces, values))


@settings(max_examples=60, deadline=None)
@given(refined_functions(), st.data())
def test_refinement_invariance(fn, data):
    amb, pieces = fn
    f = ConstructibleFunction([amb], pieces)
    i = data.draw(st.integers(0, len(pieces) - 1))
    s, v = pieces[i]
    extra = [c for c in data.draw(st.lists(fractions, max_size=4)) if s.contains(c)]
    finer = pieces[:i] + [(p, v) for p in refine_at_points(s, extra)] + pieces[i + 1:]
    assert integrate(ConstructibleFunction([amb], finer)) == integrate(f)


@settings(max_examples=40, deadline=None)
@given(refined_functions(), st.integers(-3, 3), st.integers(-3, 3))
def test_linearity(fn, a, b):
    amb, pieces = fn
    f = ConstructibleFunction([amb], pieces)
    g = ConstructibleFunction([amb], [(s, 1 - 2 * v) for s, v in pieces])
    h = ConstructibleFunction([amb], [(s, a * v + b * (1 - 2 * v)) for s, v in pieces])
    assert integrate(h) == a * integrate(f) + b * integrate(g)
