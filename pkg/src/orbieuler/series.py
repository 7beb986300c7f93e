"""Truncated integer power series and the two sides of the wreath-product identity.

    sum_n chi^(k)(X^n, G_n) t^n
        = prod_{r_1..r_k >= 1} (1 - t^{r_1...r_k})^{-r_2 r_3^2 ... r_k^{k-1} chi^(k)(X, G)}

The right side is reorganized by total degree: all factors with
``r_1 ... r_k == m`` combine into ``(1 - t^m)^{-E w_k(m)}`` where ``w_k`` is
:func:`weight`.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .wreath import chi_k_wreath, chi_k_wreath_bruteforce

__all__ = [
    "TruncatedSeries",
    "one_minus_pow",
    "divisors",
    "weight",
    "rhs_series",
    "macdonald_series",
    "lhs_series",
]


@dataclass(frozen=True)
class TruncatedSeries:
    """``c_0 + c_1 t + ... + c_N t^N`` modulo ``t^(N+1)``; exact integer coefficients."""

    coeffs: tuple

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("a truncated series needs at least the constant term")
        object.__setattr__(self, "coeffs", tuple(int(c) for c in self.coeffs))

    @classmethod
    def one(cls, N: int) -> TruncatedSeries:
        return cls((1,) + (0,) * N)

    @property
    def N(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def _match(self, other: TruncatedSeries) -> int:
        if not isinstance(other, TruncatedSeries):
            raise TypeError(f"expected a TruncatedSeries, got {type(other).__name__}")
        if other.N != self.N:
            raise ValueError(f"degree bounds differ: {self.N} vs {other.N}")
        return self.N

    def __add__(self, other):
        self._match(other)
        return TruncatedSeries(tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other):
        N = self._match(other)
        a, b = self.coeffs, other.coeffs
        out = [0] * (N + 1)
        for i, ai in enumerate(a):
            if ai:
                for j in range(N + 1 - i):
                    out[i + j] += ai * b[j]
        return TruncatedSeries(tuple(out))

    def truncate(self, N: int) -> TruncatedSeries:
        if N > self.N:
            raise ValueError("cannot extend a truncated series")
        return TruncatedSeries(self.coeffs[:N + 1])

    def tolist(self) -> list[int]:
        return list(self.coeffs)


def one_minus_pow(m: int, e: int, N: int) -> TruncatedSeries:
    """``(1 - t^m)^e`` modulo ``t^(N+1)``; negative ``e`` uses the binomial series."""
    if m < 1:
        raise ValueError("m must be >= 1")
    out = [0] * (N + 1)
    binom = 1  # C(e, j), generalized
    for j in range(N // m + 1):
        if j:
            # j * C(e, j) = C(e, j-1) * (e - j + 1), always exact
            binom = binom * (e - j + 1) // j
        out[j * m] = binom if j % 2 == 0 else -binom
    return TruncatedSeries(tuple(out))


def divisors(m: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= m:
        if m % d == 0:
            small.append(d)
            if d * d != m:
                large.append(m // d)
        d += 1
    return small + large[::-1]


@lru_cache(maxsize=None)
def weight(k: int, m: int) -> int:
    """Sum of ``r_2 r_3^2 ... r_k^(k-1)`` over ordered factorizations ``r_1...r_k = m``.

    Peeling off ``r_k = d`` gives ``w_k(m) = sum_{d | m} d^(k-1) w_{k-1}(m/d)``,
    with ``w_0(m) = [m == 1]``.
    """
    if k < 0 or m < 1:
        raise ValueError("weight needs k >= 0 and m >= 1")
    if k == 0:
        return 1 if m == 1 else 0
    return sum(d ** (k - 1) * weight(k - 1, m // d) for d in divisors(m))


def rhs_series(k: int, euler: int, N: int) -> TruncatedSeries:
    """The infinite product raised to ``-euler``, truncated at degree N."""
    out = TruncatedSeries.one(N)
    if euler == 0:
        return out
    for m in range(1, N + 1):
        w = weight(k, m)
        if w:
            out = out * one_minus_pow(m, -euler * w, N)
    return out


def macdonald_series(chi: int, N: int) -> TruncatedSeries:
    """``(1 - t)^(-chi)``: the Euler characteristics of the symmetric powers of a space."""
    return one_minus_pow(1, -chi, N)


def lhs_series(X, k: int, N: int, *, root_shortcut: bool = False,
               engine: str = "types") -> TruncatedSeries:
    """``chi^(k)(X^n, G_n)`` for ``n = 0..N``.

    ``engine="types"`` uses the type-based recursion; ``engine="explicit"``
    builds every wreath group (budget-limited).
    """
    if engine == "types":
        coeffs = [chi_k_wreath(X, n, k, root_shortcut=root_shortcut) for n in range(N + 1)]
    elif engine == "explicit":
        coeffs = [chi_k_wreath_bruteforce(X, n, k) for n in range(N + 1)]
    else:
        raise ValueError(f"unknown engine {engine!r}")
    return TruncatedSeries(tuple(coeffs))

