"""Stanley's partition function t(n), its complement u(n), and f(n).

t(n) counts partitions of n whose odd-part count agrees with that of the
conjugate mod 4; u(n) = p(n) - t(n) counts the rest; f(n) = t(n) - u(n)
is the signed count. Each function is computed two independent ways:

* brute force, by streaming every partition of n and classifying it from
  the odd-part counts alone;
* generating functions, as exact product expansions:

    sum f(n) q^n  =  (-q; q^2) / ( (q^4; q^4) (-q^2; q^4)^2 )
    t(n)          =  (p(n) + f(n)) / 2
    sum t(n) q^n  =  (q^2)^2 (q^16)^5 / ( (q) (q^4)^5 (q^32)^2 )   [Andrews]
    sum u(n) q^n  =  2 q^2 (q^2)^2 (q^8)^2 (q^32)^2 / ( (q) (q^4)^5 (q^16) )

where (q^a) abbreviates (q^a; q^a). The arithmetic-progression series
sum u(4n+i) q^n are built from the closed forms sharing the quotient
V(q) = (q^2)^2 (q^8)^2 / ( (q)^5 (q^4) ).

Keeping both routes alive is the point: every identity is cross-checked
enumeration-versus-series rather than assumed.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .partitions import _parts_stream
from .series_core import (
    ProductSpec,
    TruncatedSeries,
    eta_quotient,
    expand_product,
    series_add,
    series_monomial,
    series_mul,
    series_reciprocal,
)

SOURCE_ENUMERATION = "enumeration"
SOURCE_GENERATING_FUNCTION = "generating-function"

# (-q; q^2) / ( (q^4; q^4) (-q^2; q^4)^2 ), the generating function of f
_F_SPEC = ProductSpec(((1, 1, 2, 1), (-1, 4, 4, -1), (1, 2, 4, -2)))

# eta exponents for Andrews' closed form of sum t(n) q^n
_T_ETA_TERMS = ((2, 2), (16, 5), (1, -1), (4, -5), (32, -2))

# eta exponents for sum u(n) q^n, without the 2 q^2 prefactor
_U_ETA_TERMS = ((2, 2), (8, 2), (32, 2), (1, -1), (4, -5), (16, -1))

# eta exponents for V(q)
_V_ETA_TERMS = ((2, 2), (8, 2), (1, -5), (4, -1))

# progression i -> (power of q in the prefactor, the two (-q^a; q^16) offsets)
_U_PROGRESSION = {
    0: (2, 1, 15),
    1: (1, 3, 13),
    2: (0, 7, 9),
    3: (0, 5, 11),
}


def p_series(order: int) -> TruncatedSeries:
    """Partition numbers p(n) as the expansion of 1/(q; q)."""
    return series_reciprocal(expand_product(ProductSpec(((-1, 1, 1, 1),)), order))


def f_series(order: int) -> TruncatedSeries:
    """The signed-count generating function of f(n)."""
    return expand_product(_F_SPEC, order)


def _halve_exactly(s: TruncatedSeries) -> TruncatedSeries:
    halved = []
    for k, c in enumerate(s.coeffs):
        q, rem = divmod(c, 2)
        if rem:
            raise ValueError(f"coefficient {c} of q^{k} is odd and cannot be halved exactly")
        halved.append(q)
    return TruncatedSeries(tuple(halved))


def t_series_half_sum(order: int) -> TruncatedSeries:
    """t(n) as (p(n) + f(n)) / 2, with exact halving.

    An odd coefficient sum would mean either an implementation bug or a
    falsified identity, so it raises instead of rounding.
    """
    return _halve_exactly(series_add(p_series(order), f_series(order)))


def t_series_andrews(order: int) -> TruncatedSeries:
    """t(n) from Andrews' closed-form eta-quotient."""
    return eta_quotient(_T_ETA_TERMS, order)


def u_series(order: int) -> TruncatedSeries:
    """u(n) from the closed-form eta-quotient with prefactor 2 q^2."""
    if order < 2:
        raise ValueError(f"the u(n) series starts at q^2; order {order} is too small")
    return series_mul(series_monomial(2, 2, order), eta_quotient(_U_ETA_TERMS, order))


def v_series(order: int) -> TruncatedSeries:
    """The quotient V(q) shared by all four progression series."""
    return eta_quotient(_V_ETA_TERMS, order)


def u_progression_series(i: int, order: int) -> TruncatedSeries:
    """The closed-form series sum_n u(4n + i) q^n for i in 0..3."""
    if i not in _U_PROGRESSION:
        raise ValueError(f"progression residue must be 0..3, got {i}")
    pre, a, b = _U_PROGRESSION[i]
    if order < pre:
        raise ValueError(f"order {order} cannot hold the q^{pre} prefactor")
    prod = expand_product(ProductSpec(((-1, 16, 16, 1), (1, a, 16, 1), (1, b, 16, 1))), order)
    return series_mul(series_monomial(2, pre, order), series_mul(prod, v_series(order)))


@lru_cache(maxsize=None)
def _enumeration_counts(n: int) -> tuple[int, int]:
    # one pass per partition: acc = O(lambda) - O(lambda'), using
    # O(lambda') = lam_1 - lam_2 + lam_3 - ...
    p = t = 0
    for parts in _parts_stream(n):
        acc = 0
        odd_pos = False
        for x in parts:
            if odd_pos:
                acc += (x & 1) + x
                odd_pos = False
            else:
                acc += (x & 1) - x
                odd_pos = True
        if acc % 4 == 0:
            t += 1
        p += 1
    return p, t


def t_bruteforce(n: int) -> int:
    """t(n) by exhaustive enumeration and classification."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    return _enumeration_counts(n)[1]


def u_bruteforce(n: int) -> int:
    """u(n) = p(n) - t(n) by exhaustive enumeration."""
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    p, t = _enumeration_counts(n)
    return p - t


@dataclass(frozen=True)
class StanleyTable:
    """Columns p, t, u, f for 0..max_n, with their provenance.

    The defining relations p = t + u and f = t - u are enforced at
    construction, so a table whose columns disagree cannot exist.
    """

    max_n: int
    p: tuple[int, ...]
    t: tuple[int, ...]
    u: tuple[int, ...]
    f: tuple[int, ...]
    source: str

    def __post_init__(self) -> None:
        if self.source not in (SOURCE_ENUMERATION, SOURCE_GENERATING_FUNCTION):
            raise ValueError(f"unknown table source {self.source!r}")
        for name in ("p", "t", "u", "f"):
            col = getattr(self, name)
            if not isinstance(col, tuple):
                object.__setattr__(self, name, tuple(col))
            if len(getattr(self, name)) != self.max_n + 1:
                raise ValueError(f"column {name} must have {self.max_n + 1} entries")
        for n in range(self.max_n + 1):
            if self.p[n] != self.t[n] + self.u[n]:
                raise ValueError(f"p(n) = t(n) + u(n) fails at n={n}")
            if self.f[n] != self.t[n] - self.u[n]:
                raise ValueError(f"f(n) = t(n) - u(n) fails at n={n}")

    def column(self, stat: str) -> tuple[int, ...]:
        if stat not in ("p", "t", "u", "f"):
            raise ValueError(f"unknown statistic {stat!r}")
        return getattr(self, stat)


def table_from_enumeration(max_n: int) -> StanleyTable:
    """Build the table by streaming all partitions of every n <= max_n."""
    p, t = [], []
    for n in range(max_n + 1):
        pn, tn = _enumeration_counts(n)
        p.append(pn)
        t.append(tn)
    u = [pn - tn for pn, tn in zip(p, t)]
    f = [tn - un for tn, un in zip(t, u)]
    return StanleyTable(max_n, tuple(p), tuple(t), tuple(u), tuple(f), SOURCE_ENUMERATION)


def table_from_series(max_n: int, order: int | None = None) -> StanleyTable:
    """Build the table from the four independent generating functions."""
    if order is None:
        order = max(max_n, 2)
    if order < max_n:
        raise ValueError(f"order {order} cannot cover n up to {max_n}")
    take = max_n + 1
    return StanleyTable(
        max_n,
        p_series(order).coeffs[:take],
        t_series_andrews(order).coeffs[:take],
        u_series(order).coeffs[:take],
        f_series(order).coeffs[:take],
        SOURCE_GENERATING_FUNCTION,
    )
