"""Higher-order orbifold Euler characteristics of finite group actions.

Three independent evaluations of chi^(k)(X, G):

* :func:`chi_k` recurses over conjugacy classes, replacing ``(X, G)`` by the
  fixed set of a class representative acted on by its centralizer;
* :func:`chi_k_oracle` averages fixed-point counts over commuting
  ``(k+1)``-tuples of group elements;
* :func:`chi_k_by_orbit_types` splits X into isotropy strata and uses the
  values on the coset spaces ``G/H``.

For a finite G-set the Euler characteristic of any subset is its size, and
``chi^(0)(X, G)`` is the number of orbits.
"""
from __future__ import annotations

import os
from fractions import Fraction

import numpy as np

from .group_core import RootExtension, adjoin_root
from .gspace import FiniteGSet, GSetError, coset_gset, fixed_points, isotropy_strata, lift, orbit_count

__all__ = [
    "MAX_ORDER",
    "BudgetExceeded",
    "chi0",
    "chi_k",
    "chi_k_oracle",
    "commuting_tuple_sum",
    "chi_k_by_orbit_types",
    "extend_trivially",
    "default_tuple_budget",
]

MAX_ORDER = 4
DEFAULT_TUPLE_BUDGET = 10**8


class BudgetExceeded(RuntimeError):
    """An explicit enumeration would exceed its configured budget."""


def default_tuple_budget() -> int:
    env = os.environ.get("OEC_BUDGET")
    return int(env) if env else DEFAULT_TUPLE_BUDGET


def _check_order(k: int, max_order: int | None) -> None:
    limit = MAX_ORDER if max_order is None else max_order
    if k < 0:
        raise ValueError(f"order k must be non-negative, got {k}")
    if k > limit:
        raise ValueError(f"order k={k} exceeds the configured maximum {limit}")


def chi0(X: FiniteGSet) -> int:
    """chi(X/G): the number of orbits."""
    return orbit_count(X)


_MEMO: dict = {}


def _chi_k(X: FiniteGSet, k: int) -> int:
    if k == 0:
        return orbit_count(X)
    if X.size == 0:
        return 0
    key = (X.key, k)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    total = 0
    for cls in X.group.classes:
        total += _chi_k(fixed_points(X, [cls.representative]), k - 1)
    _MEMO[key] = total
    return total


def chi_k(X: FiniteGSet, k: int, *, max_order: int | None = None) -> int:
    """chi^(k)(X, G) by recursion over the conjugacy classes of G.

    Each class ``[g]`` contributes chi^(k-1) of the fixed set ``X^<g>`` with
    its centralizer action.  Results are memoized on the structural hash of
    the space.
    """
    _check_order(k, max_order)
    return _chi_k(X, k)


def commuting_tuple_sum(X: FiniteGSet, k: int, budget: int | None = None) -> int:
    """Sum of ``|X^<g0..gk>|`` over pairwise commuting tuples ``(g0, ..., gk)``."""
    G = X.group
    budget = default_tuple_budget() if budget is None else budget
    if G.order ** (k + 1) > budget:
        raise BudgetExceeded(f"|G|^(k+1) = {G.order ** (k + 1)} tuple visits exceeds budget {budget}")
    commutes = G.table == G.table.T
    fixes = X.action == np.arange(X.size)

    def walk(depth: int, allowed: np.ndarray, fixed: np.ndarray) -> int:
        candidates = np.flatnonzero(allowed)
        if depth == k:
            return int((fixes[candidates] & fixed).sum())
        return sum(walk(depth + 1, allowed & commutes[g], fixed & fixes[g]) for g in candidates)

    return walk(0, np.ones(G.order, dtype=bool), np.ones(X.size, dtype=bool))


def chi_k_oracle(X: FiniteGSet, k: int, budget: int | None = None) -> int:
    """chi^(k)(X, G) as an average over commuting ``(k+1)``-tuples.

    The division by ``|G|`` has to be exact; a remainder means the tuple
    enumeration is wrong and raises ``ArithmeticError``.
    """
    if k < 1:
        raise ValueError("the tuple formula is defined for k >= 1")
    total = Fraction(commuting_tuple_sum(X, k, budget), X.group.order)
    if total.denominator != 1:
        raise ArithmeticError(f"commuting-tuple sum {total.numerator * X.group.order // total.denominator}"
                              f" is not divisible by |G| = {X.group.order}")
    return int(total)


def chi_k_by_orbit_types(X: FiniteGSet, k: int, bound: int = 24) -> int:
    """Sum over orbit types [H] of (#orbits of type [H]) * chi^(k)(G/H, G)."""
    total = 0
    for stratum in isotropy_strata(X, bound=bound):
        H = stratum.subgroup_class.representative
        total += stratum.orbit_count * chi_k(coset_gset(X.group, H), k)
    return total


def extend_trivially(X: FiniteGSet, c: int, r: int) -> tuple[FiniteGSet, RootExtension]:
    """X as a space for ``G·<a>`` (``a**r == c``), with ``a`` acting trivially.

    ``c`` must be central in G and act trivially on X.
    """
    if not (X.action[c] == np.arange(X.size)).all():
        raise GSetError("c must act trivially on X for the root to act trivially")
    ext = adjoin_root(X.group, c, r)
    return lift(X, ext.group, ext.base_projection), ext
