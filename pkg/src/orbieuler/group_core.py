"""Finite groups as dense multiplication tables.

Elements of a group of order ``n`` are the integers ``0..n-1``; the group
owns its table, so an integer only means something together with the group
it came from.  All constructions here (named groups, permutation groups,
products, quotients, root extensions) end up as a validated table.
"""
from __future__ import annotations

import hashlib
import itertools
import re
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

__all__ = [
    "GroupError",
    "FiniteGroup",
    "Subgroup",
    "ConjugacyClass",
    "SubgroupClass",
    "RootExtension",
    "build_group",
    "cyclic_group",
    "symmetric_group",
    "alternating_group",
    "dihedral_group",
    "quaternion_group",
    "permutation_group",
    "conjugacy_classes",
    "centralizer",
    "generated_subgroup",
    "direct_product",
    "quotient_group",
    "adjoin_root",
    "subgroup_conjugacy_classes",
]

# exhaustive associativity check up to this order, random sample above it
EXHAUSTIVE_CHECK_ORDER = 512
SAMPLED_CHECK_ROWS = 64


class GroupError(ValueError):
    """Raised for malformed group descriptions or failed group axioms."""


class FiniteGroup:
    """A finite group given by its Cayley table.

    ``table[a, b]`` is the index of the product ``a*b``.  Instances are
    immutable; ``key`` is a structural hash of the table used for
    memoization across the package.
    """

    def __init__(self, table, *, kind: str = "cayley", labels=None,
                 generators: Sequence[int] | None = None, check: bool = True):
        table = np.array(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[0] != table.shape[1] or table.shape[0] == 0:
            raise GroupError(f"Cayley table must be a non-empty square array, got shape {table.shape}")
        n = table.shape[0]
        if table.min() < 0 or table.max() >= n:
            raise GroupError("Cayley table entries out of range")
        rng = np.arange(n)
        if not (np.sort(table, axis=1) == rng).all() or not (np.sort(table, axis=0) == rng[:, None]).all():
            raise GroupError("Cayley table rows/columns are not bijective")
        ident = np.flatnonzero((table == rng).all(axis=1))
        if len(ident) != 1 or not (table[:, ident[0]] == rng).all():
            raise GroupError("Cayley table has no two-sided identity")
        table.setflags(write=False)
        self.table = table
        self.identity = int(ident[0])
        self.kind = kind
        self.labels = tuple(labels) if labels is not None else tuple(range(n))
        if len(self.labels) != n:
            raise GroupError("label count does not match group order")
        inverse = np.argmax(table == self.identity, axis=1)
        inverse.setflags(write=False)
        self.inverse = inverse
        if check:
            self._check_associative()
        self.generators = tuple(generators) if generators is not None else self._greedy_generators()

    def _check_associative(self) -> None:
        n = self.order
        T = self.table
        if n <= EXHAUSTIVE_CHECK_ORDER:
            rows = range(n)
        else:
            rows = np.random.default_rng(0).choice(n, SAMPLED_CHECK_ROWS, replace=False)
        for a in rows:
            # (a*b)*c versus a*(b*c) for all b, c
            if not np.array_equal(T[T[a]], T[a][T]):
                raise GroupError(f"Cayley table is not associative (left factor {int(a)})")

    def _greedy_generators(self) -> tuple[int, ...]:
        gens: list[int] = []
        span = {self.identity}
        for g in range(self.order):
            if g not in span:
                gens.append(g)
                span = set(_closure(self, gens))
        return tuple(gens)

    @property
    def order(self) -> int:
        return self.table.shape[0]

    def __len__(self) -> int:
        return self.order

    def __iter__(self):
        return iter(range(self.order))

    def __repr__(self) -> str:
        return f"FiniteGroup(kind={self.kind!r}, order={self.order})"

    def mul(self, *elements: int) -> int:
        out = self.identity
        for g in elements:
            out = int(self.table[out, g])
        return out

    def inv(self, g: int) -> int:
        return int(self.inverse[g])

    def power(self, g: int, e: int) -> int:
        if e < 0:
            g, e = self.inv(g), -e
        out = self.identity
        for _ in range(e):
            out = int(self.table[out, g])
        return out

    def element_order(self, g: int) -> int:
        k, x = 1, g
        while x != self.identity:
            x = int(self.table[x, g])
            k += 1
        return k

    def conjugate(self, h: int, g: int) -> int:
        """h g h^-1"""
        return int(self.table[self.table[h, g], self.inverse[h]])

    @cached_property
    def key(self) -> str:
        digest = hashlib.sha1(self.table.astype(np.int64).tobytes())
        digest.update(str(self.identity).encode())
        return digest.hexdigest()

    @cached_property
    def is_abelian(self) -> bool:
        return bool((self.table == self.table.T).all())

    @cached_property
    def _class_data(self):
        # conj[h, g] = h g h^-1
        conj = self.table[self.table, self.inverse[:, None]]
        index = np.full(self.order, -1)
        out = []
        for g in range(self.order):
            if index[g] >= 0:
                continue
            members = frozenset(int(x) for x in np.unique(conj[:, g]))
            for x in members:
                index[x] = len(out)
            out.append(ConjugacyClass(g, members, len(out)))
        index.setflags(write=False)
        return tuple(out), index

    @property
    def classes(self) -> tuple[ConjugacyClass, ...]:
        """Conjugacy classes ordered by least member (the representative)."""
        return self._class_data[0]

    @property
    def class_index(self) -> np.ndarray:
        return self._class_data[1]

    def class_of(self, g: int) -> ConjugacyClass:
        return self.classes[int(self.class_index[g])]

    def centralizer(self, g: int) -> Subgroup:
        members = np.flatnonzero(self.table[:, g] == self.table[g, :])
        return Subgroup(self, frozenset(int(h) for h in members))

    @cached_property
    def whole(self) -> Subgroup:
        return Subgroup(self, frozenset(range(self.order)))

    @cached_property
    def center(self) -> Subgroup:
        members = np.flatnonzero((self.table == self.table.T).all(axis=0))
        return Subgroup(self, frozenset(int(h) for h in members))


@dataclass(frozen=True)
class ConjugacyClass:
    representative: int
    members: frozenset
    index: int

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class Subgroup:
    """A subset of ``parent`` closed under products and inverses."""

    parent: FiniteGroup
    members: frozenset

    @property
    def order(self) -> int:
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return g in self.members

    @cached_property
    def embedding(self) -> tuple[int, ...]:
        """Parent indices of the elements of :attr:`group`, in order."""
        return tuple(sorted(self.members))

    @cached_property
    def group(self) -> FiniteGroup:
        """This subgroup as a standalone group on ``0..order-1``."""
        emb = np.array(self.embedding)
        relabel = np.full(self.parent.order, -1)
        relabel[emb] = np.arange(len(emb))
        sub = relabel[self.parent.table[np.ix_(emb, emb)]]
        if (sub < 0).any():
            raise GroupError("subset is not closed under multiplication")
        return FiniteGroup(sub, kind="subgroup",
                           labels=[self.parent.labels[g] for g in emb], check=False)

    def is_normal(self) -> bool:
        G = self.parent
        idx = np.array(self.embedding)
        conj = G.table[G.table[:, idx], G.inverse[:, None]]
        return bool(np.isin(conj, idx).all())

    def conjugate_by(self, h: int) -> Subgroup:
        return Subgroup(self.parent, frozenset(self.parent.conjugate(h, g) for g in self.members))


@dataclass(frozen=True)
class SubgroupClass:
    """A conjugacy class of subgroups with a canonical representative."""

    representative: Subgroup
    conjugates: tuple
    index: int

    @property
    def order(self) -> int:
        return self.representative.order


@dataclass(frozen=True)
class RootExtension:
    """``G·<a>`` with ``a`` central, ``a**r == c`` and ``<a> ∩ G == <c>``.

    ``embedding[g]`` is the image of ``g`` in ``group``.  ``base_projection``
    sends each element to an element of ``G`` that it acts like when ``a``
    acts trivially; it is well defined modulo ``<c>``.
    """

    group: FiniteGroup
    root: int
    base: FiniteGroup
    c: int
    r: int
    embedding: tuple
    base_projection: tuple


def _closure(G: FiniteGroup, gens: Iterable[int]) -> frozenset:
    gens = [g for g in gens if g != G.identity]
    found = {G.identity}
    frontier = [G.identity]
    T = G.table
    while frontier:
        nxt = []
        for x in frontier:
            for s in gens:
                y = int(T[x, s])
                if y not in found:
                    found.add(y)
                    nxt.append(y)
        frontier = nxt
    return frozenset(found)


# ---------------------------------------------------------------------------
# constructors


def cyclic_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("cyclic group order must be positive")
    a = np.arange(n)
    return FiniteGroup((a[:, None] + a[None, :]) % n, kind="cyclic",
                       generators=[1 % n] if n > 1 else [], check=False)


def permutation_group(generators: Sequence[Sequence[int]], degree: int | None = None,
                      kind: str = "perm") -> FiniteGroup:
    """Group generated by permutations of ``0..degree-1`` (image lists).

    The product ``p*q`` applies ``q`` first, so a permutation acts on points
    on the left.  Elements are ordered lexicographically by image list,
    which puts the identity at index 0.
    """
    gens = [tuple(int(i) for i in g) for g in generators]
    if degree is None:
        degree = len(gens[0]) if gens else 0
    for g in gens:
        if len(g) != degree or sorted(g) != list(range(degree)):
            raise GroupError(f"not a permutation of {degree} points: {list(g)}")
    ident = tuple(range(degree))
    found = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[i] for i in p)
                if q not in found:
                    found.add(q)
                    nxt.append(q)
        frontier = nxt
    perms = sorted(found)
    index = {p: i for i, p in enumerate(perms)}
    n = len(perms)
    arr = np.array(perms, dtype=np.int64).reshape(n, degree)
    # composed[a, b, :] = perms[a][perms[b]]
    composed = arr[:, arr] if degree else np.zeros((n, n, 0), dtype=np.int64)
    table = np.empty((n, n), dtype=np.int64)
    for a in range(n):
        for b in range(n):
            table[a, b] = index[tuple(composed[a, b])]
    G = FiniteGroup(table, kind=kind, labels=perms,
                    generators=[index[s] for s in gens if s != ident])
    G.degree = degree
    return G


def symmetric_group(n: int) -> FiniteGroup:
    if n < 1:
        raise GroupError("symmetric group degree must be positive")
    gens = []
    if n >= 2:
        gens.append([1, 0] + list(range(2, n)))
    if n >= 3:
        gens.append(list(range(1, n)) + [0])
    G = permutation_group(gens, n, kind="symmetric")
    return G


def alternating_group(n: int) -> FiniteGroup:
    gens = [[(i + 1) % 3 if i < 3 else i for i in range(n)]] if n >= 3 else []
    for j in range(3, n):
        # 3-cycles (0 1 j) generate A_n
        p = list(range(n))
        p[0], p[1], p[j] = 1, j, 0
        gens.append(p)
    return permutation_group(gens, max(n, 1), kind="alternating")


def dihedral_group(n: int) -> FiniteGroup:
    """Symmetries of a regular n-gon, order 2n (so ``D_4`` has order 8)."""
    if n < 3:
        raise GroupError("dihedral group needs n >= 3")
    rot = [(i + 1) % n for i in range(n)]
    ref = [(-i) % n for i in range(n)]
    return permutation_group([rot, ref], n, kind="dihedral")


_QUAT = {  # unit products, (sign, unit)
    ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
    ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
    ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
    ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
}


def quaternion_group() -> FiniteGroup:
    elems = [(s, u) for u in "1ijk" for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}
    table = np.empty((8, 8), dtype=np.int64)
    for (s1, u1), a in index.items():
        for (s2, u2), b in index.items():
            s, u = _QUAT[u1, u2]
            table[a, b] = index[(s * s1 * s2, u)]
    labels = [("" if s > 0 else "-") + u for s, u in elems]
    return FiniteGroup(table, kind="quaternion", labels=labels)


def direct_product(G1: FiniteGroup, G2: FiniteGroup) -> FiniteGroup:
    """Componentwise product; element ``(a1, a2)`` has index ``a1*|G2| + a2``."""
    n1, n2 = G1.order, G2.order
    T = (G1.table[:, None, :, None] * n2 + G2.table[None, :, None, :]).reshape(n1 * n2, n1 * n2)
    labels = [(x, y) for x in G1.labels for y in G2.labels]
    gens = [g * n2 + G2.identity for g in G1.generators] + [G1.identity * n2 + h for h in G2.generators]
    P = FiniteGroup(T, kind="product", labels=labels, generators=gens, check=False)
    P.factors = (G1, G2)
    return P


def quotient_group(G: FiniteGroup, N: Subgroup) -> FiniteGroup:
    """Group of left cosets ``gN``; ``projection[g]`` is the coset index of ``g``.

    Cosets are numbered by their least element, which is also the label
    representative.
    """
    if N.parent is not G:
        raise GroupError("subgroup does not belong to this group")
    if not N.is_normal():
        raise GroupError("quotient by a non-normal subgroup")
    members = np.array(N.embedding)
    coset_min = G.table[:, members].min(axis=1)
    reps, projection = np.unique(coset_min, return_inverse=True)
    Q = projection[G.table[np.ix_(reps, reps)]]
    out = FiniteGroup(Q, kind="quotient", labels=[G.labels[g] for g in reps],
                      generators=sorted({int(projection[g]) for g in G.generators} - {int(projection[G.identity])}),
                      check=False)
    out.projection = tuple(int(x) for x in projection)
    out.coset_representatives = tuple(int(x) for x in reps)
    return out


def adjoin_root(G: FiniteGroup, c: int, r: int) -> RootExtension:
    """Realize ``G·<a>`` with ``a**r == c`` as ``(G x Z_{r d}) / <(c, -r)>``.

    ``d`` is the order of ``c``; the result has order ``|G|*r``.
    """
    if r < 1:
        raise GroupError("root degree must be >= 1")
    if not (G.table[c, :] == G.table[:, c]).all():
        raise GroupError("element to take a root of is not central")
    key = (G.key, c, r)
    hit = _ROOT_CACHE.get(key)
    if hit is not None:
        return hit
    d = G.element_order(c)
    m = r * d
    P = direct_product(G, cyclic_group(m))
    kernel = generated_subgroup(P, [c * m + (-r) % m])
    Q = quotient_group(P, kernel)
    proj = Q.projection
    embedding = tuple(proj[g * m] for g in range(G.order))
    root = proj[G.identity * m + 1 % m]
    base_projection = tuple(rep // m for rep in Q.coset_representatives)
    Q.kind = "adjoined-root"
    ext = RootExtension(Q, root, G, c, r, embedding, base_projection)
    _ROOT_CACHE[key] = ext
    return ext


_ROOT_CACHE: dict = {}


# ---------------------------------------------------------------------------
# structural queries


def conjugacy_classes(G: FiniteGroup) -> list[ConjugacyClass]:
    return list(G.classes)


def centralizer(G: FiniteGroup, g: int) -> Subgroup:
    return G.centralizer(g)


def generated_subgroup(G: FiniteGroup, gens: Iterable[int]) -> Subgroup:
    return Subgroup(G, _closure(G, gens))


def subgroup_conjugacy_classes(G: FiniteGroup, bound: int = 24) -> list[SubgroupClass]:
    """All subgroups of ``G`` up to conjugacy.

    Subgroups generated by at most two elements are found first; joins are
    then added until the collection is closed.  Each class is represented
    by the conjugate with the lexicographically least sorted member list.
    """
    if G.order > bound:
        raise GroupError(f"subgroup enumeration limited to order <= {bound}, got {G.order}")
    subs = {_closure(G, pair) for pair in itertools.combinations_with_replacement(range(G.order), 2)}
    frontier = list(subs)
    while frontier:
        nxt = []
        current = list(subs)
        for A in frontier:
            for B in current:
                if A <= B or B <= A:
                    continue
                J = _closure(G, A | B)
                if J not in subs:
                    subs.add(J)
                    nxt.append(J)
        frontier = nxt
    classes = []
    assigned = set()
    for S in sorted(subs, key=lambda s: (len(s), sorted(s))):
        if S in assigned:
            continue
        orbit = {frozenset(G.conjugate(h, g) for g in S) for h in range(G.order)}
        assigned |= orbit
        members = sorted(orbit, key=sorted)
        classes.append(tuple(Subgroup(G, m) for m in members))
    classes.sort(key=lambda cl: (cl[0].order, sorted(cl[0].members)))
    return [SubgroupClass(cl[0], cl, i) for i, cl in enumerate(classes)]


# ---------------------------------------------------------------------------
# descriptions

_NAMED = re.compile(r"^(Z|C|S|A|D)_?(\d+)$")


def _named_group(name: str) -> FiniteGroup:
    name = name.strip().replace(" ", "")
    parts = re.split(r"[x×*]", name)
    if len(parts) > 1:
        out = _named_group(parts[0])
        for p in parts[1:]:
            out = direct_product(out, _named_group(p))
        return out
    if name in ("Q_8", "Q8"):
        return quaternion_group()
    if name in ("V_4", "V4", "K_4", "K4"):
        return direct_product(cyclic_group(2), cyclic_group(2))
    m = _NAMED.match(name)
    if not m:
        raise GroupError(f"unknown group name {name!r}")
    letter, n = m.group(1), int(m.group(2))
    if letter in "ZC":
        return cyclic_group(n)
    if letter == "S":
        if n > 5:
            raise GroupError("named symmetric groups are limited to S_n with n <= 5")
        return symmetric_group(n)
    if letter == "A":
        if n > 5:
            raise GroupError("named alternating groups are limited to n <= 5")
        return alternating_group(n)
    return dihedral_group(n)


def build_group(spec) -> FiniteGroup:
    """Build a group from a JSON-style description or a group name.

    Accepted forms::

        {"kind": "cayley", "order": n, "table": [[...]]}
        {"kind": "perm", "degree": d, "generators": [[...], ...]}
        {"kind": "named", "name": "S_3"}
        {"kind": "product", "factors": [spec, spec]}

    A bare string is treated as a name.
    """
    if isinstance(spec, str):
        return _named_group(spec)
    if not isinstance(spec, dict) or "kind" not in spec:
        raise GroupError(f"malformed group description: {spec!r}")
    kind = spec["kind"]
    try:
        if kind == "cayley":
            table = spec["table"]
            if "order" in spec and len(table) != spec["order"]:
                raise GroupError("table size does not match declared order")
            return FiniteGroup(table, kind="cayley")
        if kind == "perm":
            return permutation_group(spec["generators"], spec.get("degree"))
        if kind == "named":
            return _named_group(spec["name"])
        if kind == "product":
            factors = spec["factors"]
            if len(factors) < 1:
                raise GroupError("product needs at least one factor")
            out = build_group(factors[0])
            for f in factors[1:]:
                out = direct_product(out, build_group(f))
            return out
    except (KeyError, TypeError) as exc:
        raise GroupError(f"malformed {kind!r} group description: {exc}") from exc
    raise GroupError(f"unknown group kind {kind!r}")
