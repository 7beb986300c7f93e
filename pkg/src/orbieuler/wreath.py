"""Wreath products ``G_n = G wr S_n`` and their action on ``X^n``.

An element is a pair ``(g, s)`` with ``g`` an n-tuple of elements of G and
``s`` a permutation given as an image tuple (``s[i]`` is the image of
``i``).  Products follow ``(g, s)(h, t) = (g . s(h), s t)`` where
``s(h)_i = h_{s^-1(i)}``, and ``(g, s)`` sends ``(x_1..x_n)`` to
``(g_1 x_{s^-1(1)}, ..., g_n x_{s^-1(n)})``.

Conjugacy classes of ``G_n`` are indexed by *types*: for each conjugacy
class ``c`` of G and cycle length ``r``, the number of r-cycles of ``s``
whose cycle-product lies in ``c``.  :func:`chi_k_wreath` evaluates
chi^(k)(X^n, G_n) by summing over types, which never materializes ``G_n``.
"""
from __future__ import annotations

import itertools
import math
import os
from dataclasses import dataclass, field

import numpy as np

from .group_core import ConjugacyClass, FiniteGroup, RootExtension, adjoin_root
from .gspace import FiniteGSet, fixed_points, lift, orbit_count
from .orbifold import BudgetExceeded, chi_k

__all__ = [
    "WreathElement",
    "WreathType",
    "FixedFactor",
    "FixedSpace",
    "CentralizerFactor",
    "wreath_mul",
    "wreath_inv",
    "wreath_group",
    "wreath_gset",
    "cycles",
    "cycle_products",
    "type_of",
    "enumerate_types",
    "type_class_data",
    "type_representative",
    "fixed_space_of_type",
    "centralizer_of_type",
    "centralizer_orbit_count",
    "chi_k_wreath",
    "chi_k_wreath_bruteforce",
    "DEFAULT_GROUP_BUDGET",
]

# largest explicit wreath group built by default (its table has order**2 entries)
DEFAULT_GROUP_BUDGET = 4096
DEFAULT_SPACE_BUDGET = 10**5


def _budget(default: int) -> int:
    env = os.environ.get("OEC_BUDGET")
    return int(env) if env else default


@dataclass(frozen=True)
class WreathElement:
    g: tuple
    perm: tuple

    @property
    def n(self) -> int:
        return len(self.perm)


def _inverse_perm(s) -> tuple:
    out = [0] * len(s)
    for i, j in enumerate(s):
        out[j] = i
    return tuple(out)


def wreath_mul(G: FiniteGroup, a: WreathElement, b: WreathElement) -> WreathElement:
    sinv = _inverse_perm(a.perm)
    g = tuple(G.mul(a.g[i], b.g[sinv[i]]) for i in range(a.n))
    return WreathElement(g, tuple(a.perm[b.perm[i]] for i in range(a.n)))


def wreath_inv(G: FiniteGroup, a: WreathElement) -> WreathElement:
    s = a.perm
    return WreathElement(tuple(G.inv(a.g[s[i]]) for i in range(a.n)), _inverse_perm(s))


_GROUPS: dict = {}


def wreath_group(G: FiniteGroup, n: int, budget: int | None = None) -> FiniteGroup:
    """Explicit ``G wr S_n`` with :class:`WreathElement` labels.

    Element ``(g, s)`` has index ``perm_index(s) * |G|**n + code(g)`` where
    ``code`` reads ``g`` as base-``|G|`` digits, first coordinate most
    significant.
    """
    if n < 1:
        raise ValueError("wreath product needs n >= 1")
    budget = _budget(DEFAULT_GROUP_BUDGET) if budget is None else budget
    order = G.order ** n * math.factorial(n)
    if order > budget:
        raise BudgetExceeded(f"|G wr S_{n}| = {order} exceeds explicit-group budget {budget}")
    hit = _GROUPS.get((G.key, n))
    if hit is not None:
        return hit
    perms = list(itertools.permutations(range(n)))
    P = np.array(perms, dtype=np.int64).reshape(len(perms), n)
    pcode = P @ (n ** np.arange(n - 1, -1, -1))
    pindex = np.zeros(n ** n, dtype=np.int64)
    pindex[pcode] = np.arange(len(perms))
    # compose[a, b] = index of the permutation s_a s_b
    compose = pindex[P[:, P] @ (n ** np.arange(n - 1, -1, -1))]
    M = G.order ** n
    tuples = np.array(list(itertools.product(range(G.order), repeat=n)), dtype=np.int64).reshape(M, n)
    weights = G.order ** np.arange(n - 1, -1, -1)
    table = np.empty((order, order), dtype=np.int64)
    for a, s in enumerate(perms):
        sinv = list(_inverse_perm(s))
        # code of g . s(h) for all g, h
        prod = G.table[tuples[:, None, :], tuples[:, sinv][None, :, :]]
        codes = prod @ weights
        for b in range(len(perms)):
            table[a * M:(a + 1) * M, b * M:(b + 1) * M] = compose[a, b] * M + codes
    labels = [WreathElement(tuple(int(x) for x in tuples[c]), p) for p in perms for c in range(M)]
    W = FiniteGroup(table, kind="wreath", labels=labels, check=order <= 512)
    W.base_group = G
    W.degree_n = n
    _GROUPS[(G.key, n)] = W
    return W


def wreath_gset(X: FiniteGSet, n: int, W: FiniteGroup | None = None,
                budget: int | None = None) -> FiniteGSet:
    """``X^n`` as a ``G wr S_n``-space; points are base-``|X|`` codes of n-tuples."""
    G = X.group
    W = wreath_group(G, n) if W is None else W
    budget = _budget(DEFAULT_SPACE_BUDGET) if budget is None else budget
    m = X.size
    npts = m ** n
    if npts * W.order > budget * 100 or npts > budget:
        raise BudgetExceeded(f"|X|^n = {npts} points exceeds budget")
    coords = np.array(list(itertools.product(range(m), repeat=n)), dtype=np.int64).reshape(npts, n)
    weights = m ** np.arange(n - 1, -1, -1)
    action = np.zeros((W.order, npts), dtype=np.int64)
    gs = np.array([el.g for el in W.labels], dtype=np.int64).reshape(W.order, n)
    blocks: dict = {}
    for w, el in enumerate(W.labels):
        blocks.setdefault(el.perm, []).append(w)
    for perm, rows in blocks.items():
        rows = np.array(rows)
        sinv = _inverse_perm(perm)
        for i in range(n):
            # coordinate i of the image is g_i applied to coordinate s^-1(i)
            action[rows] += X.action[gs[rows, i][:, None], coords[None, :, sinv[i]]] * weights[i]
    labels = [tuple(int(x) for x in c) for c in coords]
    return FiniteGSet(W, action, labels=labels, check=W.order * npts <= 10**6)


# ---------------------------------------------------------------------------
# types


def cycles(perm) -> list[tuple]:
    """Cycles ``(i1, ..., ir)`` with ``perm[i_j] == i_{j+1}``, each starting at its least point."""
    seen = [False] * len(perm)
    out = []
    for i in range(len(perm)):
        if seen[i]:
            continue
        cyc, j = [], i
        while not seen[j]:
            seen[j] = True
            cyc.append(j)
            j = perm[j]
        out.append(tuple(cyc))
    return out


def cycle_products(G: FiniteGroup, w: WreathElement) -> list[tuple[int, ConjugacyClass]]:
    """``(r, [g_{i_r} ... g_{i_1}])`` for every cycle of ``w.perm``, sorted by (class, r)."""
    out = []
    for cyc in cycles(w.perm):
        prod = G.mul(*(w.g[i] for i in reversed(cyc)))
        out.append((len(cyc), G.class_of(prod)))
    out.sort(key=lambda e: (e[1].index, e[0]))
    return out


@dataclass(frozen=True)
class WreathType:
    """Multiplicities ``m_r(c)`` keyed by (class index of G, cycle length r).

    ``entries`` holds only the non-zero multiplicities, sorted by
    (class index, r); class indices follow the least-element order of
    ``G.classes``.
    """

    n: int
    entries: tuple = field(default=())

    @classmethod
    def from_counts(cls, n: int, counts: dict) -> WreathType:
        entries = tuple(sorted((key, m) for key, m in counts.items() if m))
        if sum(r * m for (_, r), m in entries) != n:
            raise ValueError("type multiplicities do not add up to n")
        return cls(n, entries)

    def multiplicity(self, c: int, r: int) -> int:
        return dict(self.entries).get((c, r), 0)

    def __str__(self) -> str:
        return " ".join(f"m_{r}[{c}]={m}" for (c, r), m in self.entries) or "empty"


def type_of(G: FiniteGroup, w: WreathElement) -> WreathType:
    counts: dict = {}
    for r, cls in cycle_products(G, w):
        counts[(cls.index, r)] = counts.get((cls.index, r), 0) + 1
    return WreathType.from_counts(w.n, counts)


def enumerate_types(G: FiniteGroup, n: int) -> list[WreathType]:
    """Every type with ``sum r*m_r(c) == n``, in a canonical order."""
    kinds = [(c.index, r) for c in G.classes for r in range(1, n + 1)]
    out = []

    def rec(i: int, remaining: int, chosen: list):
        if remaining == 0:
            out.append(WreathType(n, tuple(chosen)))
            return
        if i == len(kinds):
            return
        r = kinds[i][1]
        for m in range(remaining // r, -1, -1):
            rec(i + 1, remaining - r * m, chosen + [(kinds[i], m)] if m else chosen)

    rec(0, n, [])
    return out


def type_class_data(G: FiniteGroup, n: int, tau: WreathType) -> tuple[int, int]:
    """(class size, centralizer order) of the class of type ``tau`` in ``G wr S_n``."""
    if tau.n != n or sum(r * m for (_, r), m in tau.entries) != n:
        raise ValueError(f"type {tau} is not a type of G wr S_{n}")
    cent = 1
    for (c, r), m in tau.entries:
        if not 0 <= c < len(G.classes) or m < 0 or r < 1:
            raise ValueError(f"invalid type entry {(c, r)}: {m}")
        csize = G.order // G.classes[c].size
        cent *= math.factorial(m) * (r * csize) ** m
    order = G.order ** n * math.factorial(n)
    return order // cent, cent


def type_representative(G: FiniteGroup, tau: WreathType) -> WreathElement:
    """An element of type ``tau``: consecutive cycles carrying ``c`` at their first slot."""
    g = [G.identity] * tau.n
    perm = list(range(tau.n))
    pos = 0
    for (c, r), m in tau.entries:
        rep = G.classes[c].representative
        for _ in range(m):
            block = list(range(pos, pos + r))
            for j in range(r):
                perm[block[j]] = block[(j + 1) % r]
            g[pos] = rep
            pos += r
    return WreathElement(tuple(g), tuple(perm))


@dataclass(frozen=True)
class FixedFactor:
    """``(X^<c>)^m`` coming from the ``m`` r-cycles with cycle-product class ``c``."""

    c: int
    r: int
    m: int
    space: FiniteGSet  # X^<c> acted on by C_G(c)


@dataclass(frozen=True)
class FixedSpace:
    factors: tuple

    @property
    def cardinality(self) -> int:
        return math.prod(f.space.size ** f.m for f in self.factors)


def fixed_space_of_type(X: FiniteGSet, tau: WreathType) -> FixedSpace:
    """The fixed set of a type-``tau`` element as a product of ``X^<c>`` factors."""
    G = X.group
    factors = []
    for (c, r), m in tau.entries:
        rep = G.classes[c].representative
        factors.append(FixedFactor(c, r, m, fixed_points(X, [rep])))
    return FixedSpace(tuple(factors))


@dataclass(frozen=True)
class CentralizerFactor:
    """``(C_G(c)·<a>) wr S_m`` with ``a**r == c``; ``a`` acts trivially."""

    c: int
    r: int
    m: int
    extension: RootExtension

    @property
    def order(self) -> int:
        return self.extension.group.order ** self.m * math.factorial(self.m)


def _root_extension(G: FiniteGroup, c: int, r: int) -> RootExtension:
    rep = G.classes[c].representative
    C = G.centralizer(rep)
    local_c = C.embedding.index(rep)
    return adjoin_root(C.group, local_c, r)


def centralizer_of_type(G: FiniteGroup, tau: WreathType) -> list[CentralizerFactor]:
    return [CentralizerFactor(c, r, m, _root_extension(G, c, r)) for (c, r), m in tau.entries]


def _factor_space(space: FiniteGSet, ext: RootExtension) -> FiniteGSet:
    # X^<c> is a C_G(c)-space and c acts trivially on it, so a can act trivially
    return lift(space, ext.group, ext.base_projection)


def centralizer_orbit_count(X: FiniteGSet, tau: WreathType) -> int:
    """Orbits of the type-``tau`` centralizer on the product description of the fixed set."""
    total = 1
    for fac, cen in zip(fixed_space_of_type(X, tau).factors, centralizer_of_type(X.group, tau)):
        o = orbit_count(_factor_space(fac.space, cen.extension))
        total *= math.comb(o + fac.m - 1, fac.m)
    return total


_MEMO: dict = {}


def chi_k_wreath(X: FiniteGSet, n: int, k: int, *, root_shortcut: bool = False) -> int:
    """chi^(k)(X^n, G wr S_n) by summation over types.

    A type contributes chi^(k-1) of its fixed set under its centralizer; both
    split as products over (c, r), so the contribution is a product of
    ``chi_k_wreath(X^<c>, m, k-1)`` over the extended groups
    ``C_G(c)·<a_{r,c}>``.  With ``root_shortcut`` single-copy factors are
    evaluated as ``r**(k-1) * chi^(k-1)(X^<c>, C_G(c))`` instead of on the
    extension.
    """
    if n < 0 or k < 0:
        raise ValueError("n and k must be non-negative")
    if n == 0:
        return 1
    if k == 0:
        o = orbit_count(X)
        return math.comb(o + n - 1, n)
    if X.size == 0:
        return 0
    key = (X.key, n, k, root_shortcut)
    hit = _MEMO.get(key)
    if hit is not None:
        return hit
    G = X.group
    fixed = {}
    total = 0
    for tau in enumerate_types(G, n):
        term = 1
        for (c, r), m in tau.entries:
            if c not in fixed:
                fixed[c] = fixed_points(X, [G.classes[c].representative])
            Y = fixed[c]
            if Y.size == 0:
                term = 0
                break
            if root_shortcut and m == 1:
                term *= r ** (k - 1) * chi_k(Y, k - 1, max_order=k)
            else:
                ext = _root_extension(G, c, r)
                term *= chi_k_wreath(_factor_space(Y, ext), m, k - 1, root_shortcut=root_shortcut)
            if term == 0:
                break
        total += term
    _MEMO[key] = total
    return total


def chi_k_wreath_bruteforce(X: FiniteGSet, n: int, k: int, budget: int | None = None) -> int:
    """chi^(k)(X^n, G_n) on the explicitly constructed wreath group and space."""
    if n == 0:
        return 1
    W = wreath_group(X.group, n, budget=budget)
    return chi_k(wreath_gset(X, n, W), k, max_order=max(k, 4))
