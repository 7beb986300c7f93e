"""Euler calculus on one-dimensional stratified spaces.

Strata carry the compactly supported (additive) Euler characteristic:
a point counts 1, an open interval -1, a half-open interval 0, a closed
interval 1 and a circle 0.  A constructible function is a finite list of
disjoint strata with integer values; its integral is
``sum(value * chi_c(stratum))``.

Coordinates are exact fractions.  On a circle component they are measured
in full turns and an open arc ``(lo, hi)`` may have ``hi > 1`` when it wraps
past 0.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

__all__ = [
    "StratumError",
    "Stratum",
    "ConstructibleFunction",
    "point",
    "open_interval",
    "half_open_interval",
    "closed_interval",
    "circle",
    "finite_set",
    "cofinite_complement",
    "euler_char",
    "integrate",
    "refine_at_points",
    "constant",
]

GEOMETRIC = ("point", "open", "half_open", "closed", "circle")


class StratumError(ValueError):
    pass


@dataclass(frozen=True)
class Stratum:
    kind: str
    lo: Fraction | None = None
    hi: Fraction | None = None
    closed_end: str | None = None  # "lo" or "hi" for half-open intervals
    size: int = 0
    whole: "Stratum | None" = None
    component: str = ""
    on_circle: bool = False

    @property
    def chi_c(self) -> int:
        if self.kind == "point":
            return 1
        if self.kind == "open":
            return -1
        if self.kind == "half_open":
            return 0
        if self.kind == "closed":
            return 1
        if self.kind == "circle":
            return 0
        if self.kind == "finite":
            return self.size
        if self.kind == "cofinite":
            return self.whole.chi_c - self.size
        raise StratumError(f"unknown stratum kind {self.kind!r}")

    @property
    def lo_in(self) -> bool:
        return self.kind in ("point", "closed") or (self.kind == "half_open" and self.closed_end == "lo")

    @property
    def hi_in(self) -> bool:
        return self.kind in ("point", "closed") or (self.kind == "half_open" and self.closed_end == "hi")

    def segments(self) -> list[tuple]:
        """``(lo, hi, lo_in, hi_in)`` pieces, arcs unwrapped into ``[0, 1)``."""
        if self.kind == "circle":
            return [(Fraction(0), Fraction(1), True, False)]
        if self.kind not in GEOMETRIC:
            raise StratumError(f"{self.kind} strata have no coordinates")
        if self.on_circle and self.hi > 1:
            return [(self.lo, Fraction(1), self.lo_in, False),
                    (Fraction(0), self.hi - 1, True, self.hi_in)]
        return [(self.lo, self.hi, self.lo_in, self.hi_in)]

    def contains(self, x) -> bool:
        x = Fraction(x)
        if self.on_circle or self.kind == "circle":
            x = x % 1
        return any(_seg_has(seg, x) for seg in self.segments())

    def sample(self) -> Fraction:
        """Some point of the stratum (reduced mod 1 on a circle)."""
        if self.kind == "circle":
            return Fraction(0)
        if self.kind in ("point", "closed") or (self.kind == "half_open" and self.closed_end == "lo"):
            x = self.lo
        elif self.kind == "half_open":
            x = self.hi
        elif self.kind == "open":
            x = (self.lo + self.hi) / 2
        else:
            raise StratumError(f"{self.kind} strata have no coordinates")
        return x % 1 if self.on_circle else x


def _seg_has(seg, x) -> bool:
    lo, hi, lo_in, hi_in = seg
    return lo < x < hi or (x == lo and lo_in) or (x == hi and hi_in)


def point(x, component: str = "", on_circle: bool = False) -> Stratum:
    x = Fraction(x)
    if on_circle:
        x %= 1
    return Stratum("point", x, x, component=component, on_circle=on_circle)


def _arc(lo, hi, on_circle: bool) -> tuple[Fraction, Fraction]:
    lo, hi = Fraction(lo), Fraction(hi)
    if on_circle:
        shift = lo // 1
        lo, hi = lo - shift, hi - shift
    return lo, hi


def open_interval(lo, hi, component: str = "", on_circle: bool = False) -> Stratum:
    lo, hi = _arc(lo, hi, on_circle)
    if not lo < hi or (on_circle and hi - lo > 1):
        raise StratumError(f"empty or overlong interval ({lo}, {hi})")
    return Stratum("open", lo, hi, component=component, on_circle=on_circle)


def half_open_interval(lo, hi, closed_end: str = "lo", component: str = "",
                       on_circle: bool = False) -> Stratum:
    lo, hi = _arc(lo, hi, on_circle)
    if not lo < hi or (on_circle and hi - lo >= 1) or closed_end not in ("lo", "hi"):
        raise StratumError(f"bad half-open interval ({lo}, {hi}) closed at {closed_end}")
    return Stratum("half_open", lo, hi, closed_end=closed_end, component=component, on_circle=on_circle)


def closed_interval(lo, hi, component: str = "") -> Stratum:
    lo, hi = Fraction(lo), Fraction(hi)
    if not lo < hi:
        raise StratumError(f"degenerate closed interval [{lo}, {hi}]")
    return Stratum("closed", lo, hi, component=component)


def circle(component: str = "") -> Stratum:
    return Stratum("circle", component=component, on_circle=True)


def finite_set(size: int, component: str = "") -> Stratum:
    if size < 0:
        raise StratumError("finite set size must be non-negative")
    return Stratum("finite", size=size, component=component)


def cofinite_complement(whole: Stratum, excluded: int) -> Stratum:
    """``whole`` minus ``excluded`` of its points."""
    if excluded < 0:
        raise StratumError("excluded count must be non-negative")
    return Stratum("cofinite", size=excluded, whole=whole, component=whole.component)


def euler_char(strata: Iterable[Stratum]) -> int:
    return sum(s.chi_c for s in strata)


def _overlap(a: Stratum, b: Stratum) -> bool:
    for sa in a.segments():
        for sb in b.segments():
            L, H = max(sa[0], sb[0]), min(sa[1], sb[1])
            if L < H or (L == H and _seg_has(sa, L) and _seg_has(sb, L)):
                return True
    return False


@dataclass(frozen=True)
class ConstructibleFunction:
    """Integer values on disjoint strata covering ``ambient``.

    Coverage is checked component by component through the additivity of
    chi_c; geometric strata are also checked for pairwise disjointness and
    for lying inside the ambient space.
    """

    ambient: tuple
    pieces: tuple  # of (Stratum, int)

    def __post_init__(self):
        object.__setattr__(self, "ambient", tuple(self.ambient))
        object.__setattr__(self, "pieces", tuple((s, int(v)) for s, v in self.pieces))
        comps = {s.component for s in self.ambient}
        for comp in comps | {s.component for s, _ in self.pieces}:
            whole = euler_char(s for s in self.ambient if s.component == comp)
            covered = euler_char(s for s, _ in self.pieces if s.component == comp)
            if comp not in comps or whole != covered:
                raise StratumError(f"pieces do not cover component {comp!r}: "
                                   f"chi_c {covered} vs ambient {whole}")
        geo = [s for s, _ in self.pieces if s.kind in GEOMETRIC]
        for i, a in enumerate(geo):
            for b in geo[i + 1:]:
                if a.component == b.component and _overlap(a, b):
                    raise StratumError(f"pieces overlap: {a} and {b}")
            amb = [s for s in self.ambient if s.component == a.component and s.kind in GEOMETRIC]
            if amb and not any(s.contains(a.sample()) for s in amb):
                raise StratumError(f"piece {a} lies outside the ambient space")


def integrate(f: ConstructibleFunction) -> int:
    """Integral with respect to the Euler characteristic."""
    return sum(v * s.chi_c for s, v in f.pieces)


def refine_at_points(s: Stratum, points: Iterable) -> list[Stratum]:
    """Split ``s`` into the given points and the open or half-open pieces between them."""
    pts = sorted({(Fraction(p) % 1 if s.on_circle else Fraction(p)) for p in points})
    for p in pts:
        if not s.contains(p):
            raise StratumError(f"point {p} is not in {s}")
    if not pts:
        return [s]
    comp, oc = s.component, s.on_circle
    if s.kind == "point":
        return [s]
    if s.kind == "circle":
        out = [point(p, comp, True) for p in pts]
        bounds = pts + [pts[0] + 1]
        out += [open_interval(a, b, comp, True) for a, b in zip(bounds, bounds[1:])]
        return out
    if s.kind not in ("open", "half_open", "closed"):
        raise StratumError(f"cannot refine a {s.kind} stratum geometrically")
    if oc:
        # unwrap into [lo, lo + 1) so the cut points are increasing along the arc
        pts = sorted(p if p >= s.lo else p + 1 for p in pts)
    out = [point(p, comp, oc) for p in pts]
    bounds = [s.lo] + pts + [s.hi]
    for i, (a, b) in enumerate(zip(bounds, bounds[1:])):
        a_in = i == 0 and s.lo_in and a not in pts
        b_in = i == len(bounds) - 2 and s.hi_in and b not in pts
        if a == b:
            continue
        if a_in and b_in:
            out.append(closed_interval(a, b, comp))
        elif a_in:
            out.append(half_open_interval(a, b, "lo", comp, oc))
        elif b_in:
            out.append(half_open_interval(a, b, "hi", comp, oc))
        else:
            out.append(open_interval(a, b, comp, oc))
    return out


def constant(ambient: Sequence[Stratum], value: int) -> ConstructibleFunction:
    return ConstructibleFunction(tuple(ambient), tuple((s, value) for s in ambient))
