"""Finite G-sets.

A finite G-set stores its action as an integer array ``action[g, x] = g.x``.
The Euler characteristic of a finite discrete space is its cardinality, so
every Euler characteristic in this module is a point count.
"""
from __future__ import annotations

import hashlib
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .group_core import (FiniteGroup, GroupError, Subgroup, SubgroupClass, direct_product,
                         generated_subgroup, subgroup_conjugacy_classes)

__all__ = [
    "GSetError",
    "FiniteGSet",
    "IsotropyStratum",
    "build_gset",
    "trivial_gset",
    "regular_gset",
    "coset_gset",
    "natural_gset",
    "disjoint_union",
    "restrict",
    "lift",
    "fixed_points",
    "fixed_point_indices",
    "orbit_count",
    "burnside_orbit_count",
    "orbits",
    "product_space",
    "isotropy_strata",
]

# exhaustive check of the action law up to |G|*m entries, sampled rows beyond
EXHAUSTIVE_ACTION_CHECK = 10**6


class GSetError(ValueError):
    """Raised when an action description is malformed or violates the action axioms."""


class FiniteGSet:
    """Points ``0..m-1`` with a left action of a finite group."""

    def __init__(self, group: FiniteGroup, action, *, labels=None, check: bool = True):
        action = np.array(action, dtype=np.int64)
        if action.ndim == 1 and action.size == 0:
            action = action.reshape(group.order, 0)
        if action.ndim != 2 or action.shape[0] != group.order:
            raise GSetError(f"action table must have shape (|G|, m) = ({group.order}, m), got {action.shape}")
        m = action.shape[1]
        if m and (action.min() < 0 or action.max() >= m):
            raise GSetError("action images out of range")
        action.setflags(write=False)
        self.group = group
        self.action = action
        self.labels = tuple(labels) if labels is not None else tuple(range(m))
        if check:
            self._check()

    def _check(self) -> None:
        A, G, m = self.action, self.group, self.size
        if m == 0:
            return
        if not (np.sort(A, axis=1) == np.arange(m)).all():
            raise GSetError("some group element does not act by a bijection")
        if not (A[G.identity] == np.arange(m)).all():
            raise GSetError("identity does not act trivially")
        if G.order * m <= EXHAUSTIVE_ACTION_CHECK:
            rows = range(G.order)
        else:
            rows = np.random.default_rng(0).choice(G.order, 32, replace=False)
        for g in rows:
            # (g h).x == g.(h.x) for every h, x
            if not np.array_equal(A[G.table[g]], A[g][A]):
                raise GSetError(f"action law fails for element {int(g)}")

    @property
    def size(self) -> int:
        return self.action.shape[1]

    def __len__(self) -> int:
        return self.size

    def __repr__(self) -> str:
        return f"FiniteGSet(points={self.size}, group={self.group!r})"

    @property
    def euler(self) -> int:
        return self.size

    @cached_property
    def key(self) -> str:
        digest = hashlib.sha1(self.group.key.encode())
        digest.update(str(self.size).encode())
        digest.update(self.action.tobytes())
        return digest.hexdigest()

    def stabilizer(self, x: int) -> Subgroup:
        return Subgroup(self.group, frozenset(int(g) for g in np.flatnonzero(self.action[:, x] == x)))


@dataclass(frozen=True)
class IsotropyStratum:
    """Points whose isotropy subgroup is conjugate to ``subgroup_class``."""

    base: FiniteGSet
    subgroup_class: SubgroupClass
    points: tuple
    orbit_count: int


# ---------------------------------------------------------------------------
# constructors


def trivial_gset(G: FiniteGroup, m: int) -> FiniteGSet:
    return FiniteGSet(G, np.tile(np.arange(m), (G.order, 1)), check=False)


def regular_gset(G: FiniteGroup) -> FiniteGSet:
    """G acting on itself by left multiplication."""
    return FiniteGSet(G, G.table, labels=G.labels, check=False)


def coset_gset(G: FiniteGroup, H: Subgroup) -> FiniteGSet:
    """Left cosets ``gH`` with G acting by left multiplication (the space G/H)."""
    members = np.array(H.embedding)
    coset_min = G.table[:, members].min(axis=1)
    reps, which = np.unique(coset_min, return_inverse=True)
    action = which[G.table[:, reps]]
    return FiniteGSet(G, action, labels=[G.labels[g] for g in reps], check=False)


def natural_gset(G: FiniteGroup) -> FiniteGSet:
    """A permutation group acting on the points it permutes."""
    degree = getattr(G, "degree", None)
    if degree is None:
        raise GSetError("natural action needs a permutation group")
    return FiniteGSet(G, np.array(G.labels, dtype=np.int64).reshape(G.order, degree))


def disjoint_union(*spaces: FiniteGSet) -> FiniteGSet:
    if not spaces:
        raise GSetError("disjoint union of nothing has no group")
    G = spaces[0].group
    if any(X.group.key != G.key for X in spaces):
        raise GSetError("disjoint union needs a common acting group")
    blocks, offset, labels = [], 0, []
    for i, X in enumerate(spaces):
        blocks.append(X.action + offset)
        labels.extend((i, p) for p in X.labels)
        offset += X.size
    return FiniteGSet(G, np.concatenate(blocks, axis=1) if blocks else np.zeros((G.order, 0)),
                      labels=labels, check=False)


def restrict(X: FiniteGSet, H: Subgroup, points: Sequence[int] | None = None,
             check: bool = True) -> FiniteGSet:
    """The action of ``H`` (as a standalone group) on an H-invariant subset of points."""
    if H.parent is not X.group and H.parent.key != X.group.key:
        raise GSetError("acting subgroup is not a subgroup of the space's group")
    pts = np.arange(X.size) if points is None else np.array(sorted(points), dtype=np.int64)
    rows = X.action[np.array(H.embedding)][:, pts] if len(pts) else np.zeros((H.order, 0), dtype=np.int64)
    relabel = np.full(X.size, -1)
    relabel[pts] = np.arange(len(pts))
    new = relabel[rows] if len(pts) else rows
    if check and (new < 0).any():
        raise GSetError("acting subgroup does not preserve the point set")
    return FiniteGSet(H.group, new, labels=[X.labels[p] for p in pts], check=False)


def lift(X: FiniteGSet, target: FiniteGroup, projection: Sequence[int]) -> FiniteGSet:
    """Let ``target`` act on X through ``projection[t]`` (an element of X's group).

    The result is validated, so a projection that is not compatible with the
    action is rejected.
    """
    action = X.action[np.asarray(projection, dtype=np.int64)] if X.size else np.zeros((target.order, 0))
    return FiniteGSet(target, action, labels=X.labels)


def build_gset(G: FiniteGroup, spec) -> FiniteGSet:
    """Build a G-set from ``{"points": m, "action": {...}}``.

    The action is either ``{"generators": [[...], ...]}`` with one image
    list per generator of G (in ``G.generators`` order), or
    ``{"table": [[...], ...]}`` giving the images under every element.
    """
    try:
        m = int(spec["points"])
        act = spec.get("action", {"generators": [list(range(m))] * len(G.generators)})
    except (KeyError, TypeError, ValueError) as exc:
        raise GSetError(f"malformed action description: {exc}") from exc
    if m < 0:
        raise GSetError("negative point count")
    if "table" in act:
        return FiniteGSet(G, np.array(act["table"], dtype=np.int64).reshape(G.order, m))
    if "generators" not in act:
        raise GSetError("action needs 'generators' or 'table'")
    images = [tuple(int(i) for i in p) for p in act["generators"]]
    if len(images) != len(G.generators):
        raise GSetError(f"expected {len(G.generators)} generator images, got {len(images)}")
    for p in images:
        if sorted(p) != list(range(m)):
            raise GSetError(f"generator image is not a permutation of {m} points: {list(p)}")
    # extend to all elements: perm(s*g) = perm(s) o perm(g)
    perms: dict[int, tuple] = {G.identity: tuple(range(m))}
    frontier = [G.identity]
    while frontier:
        nxt = []
        for g in frontier:
            for s, ps in zip(G.generators, images):
                h = int(G.table[s, g])
                p = tuple(ps[i] for i in perms[g])
                if h not in perms:
                    perms[h] = p
                    nxt.append(h)
                elif perms[h] != p:
                    raise GSetError("generator images do not define a group action")
        frontier = nxt
    if len(perms) != G.order:
        raise GSetError("group generators do not reach every element")
    action = np.array([perms[g] for g in range(G.order)], dtype=np.int64).reshape(G.order, m)
    return FiniteGSet(G, action)


# ---------------------------------------------------------------------------
# operations


def _as_subgroup(X: FiniteGSet, H) -> Subgroup:
    if H is None:
        return X.group.whole
    if isinstance(H, Subgroup):
        return H
    return generated_subgroup(X.group, H)


def fixed_point_indices(X: FiniteGSet, elements: Iterable[int]) -> np.ndarray:
    mask = np.ones(X.size, dtype=bool)
    for g in elements:
        mask &= X.action[g] == np.arange(X.size)
    return np.flatnonzero(mask)


def fixed_points(X: FiniteGSet, S, acting: Subgroup | None = None) -> FiniteGSet:
    """The points fixed by every element of ``S``, as a space for ``acting``.

    ``S`` is a Subgroup or an iterable of elements; fixing generators is the
    same as fixing the subgroup they generate.  ``acting`` defaults to the
    common centralizer of ``S``.
    """
    G = X.group
    elems = sorted(S.members) if isinstance(S, Subgroup) else [int(g) for g in S]
    if acting is None:
        common = np.ones(G.order, dtype=bool)
        for g in elems:
            common &= G.table[:, g] == G.table[g, :]
        acting = Subgroup(G, frozenset(int(h) for h in np.flatnonzero(common)))
    pts = fixed_point_indices(X, elems)
    try:
        return restrict(X, acting, pts)
    except GSetError as exc:
        raise GSetError("acting subgroup does not preserve the fixed set") from exc


def orbits(X: FiniteGSet, H=None) -> list[list[int]]:
    H = _as_subgroup(X, H)
    rows = X.action[np.array(H.embedding)]
    seen = np.zeros(X.size, dtype=bool)
    out = []
    for x in range(X.size):
        if seen[x]:
            continue
        orb = np.unique(rows[:, x])
        seen[orb] = True
        out.append([int(p) for p in orb])
    return out


def orbit_count(X: FiniteGSet, H=None) -> int:
    """Number of orbits of ``H`` (default: the whole group), i.e. chi(X/H)."""
    return len(orbits(X, H))


def burnside_orbit_count(X: FiniteGSet, H=None) -> int:
    """Orbit count as the average number of fixed points (independent of :func:`orbits`)."""
    H = _as_subgroup(X, H)
    rows = X.action[np.array(H.embedding)]
    total = int((rows == np.arange(X.size)).sum())
    q, rem = divmod(total, H.order)
    assert rem == 0, "Burnside sum not divisible by group order"
    return q


def product_space(X1: FiniteGSet, X2: FiniteGSet) -> FiniteGSet:
    """``X1 x X2`` over ``G1 x G2``; point ``(x1, x2)`` has index ``x1*|X2| + x2``."""
    G = direct_product(X1.group, X2.group)
    m1, m2 = X1.size, X2.size
    A = X1.action[:, None, :, None] * m2 + X2.action[None, :, None, :]
    A = A.reshape(G.order, m1 * m2)
    labels = [(a, b) for a in X1.labels for b in X2.labels]
    return FiniteGSet(G, A, labels=labels, check=False)


def isotropy_strata(X: FiniteGSet, bound: int = 24) -> list[IsotropyStratum]:
    """Partition of the points by conjugacy class of isotropy subgroup.

    Only non-empty strata are returned, in subgroup-class order.
    """
    classes = subgroup_conjugacy_classes(X.group, bound=bound)
    lookup = {}
    for cl in classes:
        for S in cl.conjugates:
            lookup[S.members] = cl.index
    by_class: dict[int, list[int]] = {}
    for x in range(X.size):
        stab = frozenset(int(g) for g in np.flatnonzero(X.action[:, x] == x))
        by_class.setdefault(lookup[stab], []).append(x)
    all_orbits = orbits(X)
    out = []
    for idx in sorted(by_class):
        pts = by_class[idx]
        # strata are G-invariant, so each is a union of orbits of X
        members = set(pts)
        n_orb = sum(1 for o in all_orbits if o[0] in members)
        out.append(IsotropyStratum(X, classes[idx], tuple(pts), n_orb))
    return out
