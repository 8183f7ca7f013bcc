"""Machine verification of the series identities and hook-statistic theorems.

Each check expands both sides of one identity from primitive constructors
(products, theta sums, reciprocals) or enumerates partitions outright, and
reports the first mismatching index with both witness values. The two sides
of a check never share a derived intermediate, so a compensating bug in one
pipeline cannot hide.

Passing at a finite order is evidence, not proof: reports state the order
or bound they were verified to.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from . import stanley
from .partitions import (
    classify,
    conjugate,
    corner_parity_check,
    inner_corners,
    partitions_of,
)
from .series_core import (
    ProductSpec,
    ThetaSpec,
    TruncatedSeries,
    expand_product,
    expand_theta,
    extract_progression,
    series_dilate,
    series_monomial,
    series_mul,
    series_reciprocal,
)

DEFAULT_ORDER = 200
DEFAULT_ENUM_BOUND = 25
DEFAULT_ORACLE_BOUND = 60
DEFAULT_CORNER_BOUND = 20
DEFAULT_PROGRESSION_BOUND = 40
DEFAULT_JTP_MAX_K = 10

SUITE_NAMES = ("all", "series", "combinatorial", "proof-steps", "congruences")


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one identity or enumeration check."""

    check_name: str
    order_or_bound: int
    passed: bool
    first_failure_index: int | None = None
    lhs_value: int | None = None
    rhs_value: int | None = None

    def __post_init__(self) -> None:
        if self.passed != (self.first_failure_index is None):
            raise ValueError("passed must hold exactly when there is no failure index")

    def to_dict(self) -> dict:
        return {
            "check_name": self.check_name,
            "order_or_bound": self.order_or_bound,
            "passed": self.passed,
            "first_failure_index": self.first_failure_index,
            "lhs_value": self.lhs_value,
            "rhs_value": self.rhs_value,
        }

    def to_line(self) -> str:
        if self.passed:
            return f"PASS {self.check_name}: verified to {self.order_or_bound}"
        return (
            f"FAIL {self.check_name}: first mismatch at index {self.first_failure_index}"
            f" (lhs={self.lhs_value}, rhs={self.rhs_value}, bound={self.order_or_bound})"
        )

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def assert_series_equal(name: str, a: TruncatedSeries, b: TruncatedSeries) -> VerificationReport:
    """Compare two series coefficientwise up to the shorter order.

    Disagreement is data, not an exception: the report carries the smallest
    failing index and both witness coefficients.
    """
    bound = min(a.order, b.order)
    for k in range(bound + 1):
        if a.coeffs[k] != b.coeffs[k]:
            return VerificationReport(name, bound, False, k, a.coeffs[k], b.coeffs[k])
    return VerificationReport(name, bound, True)


def _values_equal(name: str, bound: int, lhs: list[int], rhs: list[int]) -> VerificationReport:
    for k, (a, b) in enumerate(zip(lhs, rhs)):
        if a != b:
            return VerificationReport(name, bound, False, k, a, b)
    return VerificationReport(name, bound, True)


def _prod(order: int, *factors: tuple[int, int, int, int]) -> TruncatedSeries:
    return expand_product(ProductSpec(factors), order)


def _theta(order: int, a: int, b: int, c: int, alternating: bool = False) -> TruncatedSeries:
    return expand_theta(ThetaSpec(a, b, c, alternating), order)


def _triangular(order: int, bilateral: bool) -> TruncatedSeries:
    # sum q^{n(n+1)/2}, over n >= 0 or over all integers, enumerated directly
    coeffs = [0] * (order + 1)
    n = 0
    while n * (n + 1) // 2 <= order:
        e = n * (n + 1) // 2
        coeffs[e] += 1
        if bilateral:
            coeffs[e] += 1  # n and -(n+1) share the exponent
        n += 1
    return TruncatedSeries(tuple(coeffs))


def check_jtp(k: int, sign: int, order: int) -> VerificationReport:
    """Jacobi triple product specialization z = sign * q^k, base q -> q^(2k+2).

    Verifies sum_n sign^n q^((2k+2) n^2 + k n) against the triple product
    (-sign q^(3k+2); q^(4k+4)) (-sign q^(k+2); q^(4k+4)) (q^(4k+4); q^(4k+4)).
    The base keeps every exponent and product offset nonnegative for any
    k >= 0, and k = 0 reduces to the classical even-square sums.
    """
    if k < 0:
        raise ValueError(f"specialization exponent must be nonnegative, got {k}")
    if sign not in (1, -1):
        raise ValueError(f"sign must be +1 or -1, got {sign}")
    m = 2 * k + 2
    lhs = _theta(order, m, k, 0, alternating=(sign == -1))
    rhs = _prod(order, (sign, 3 * k + 2, 2 * m, 1), (sign, k + 2, 2 * m, 1), (-1, 2 * m, 2 * m, 1))
    tag = "plus" if sign == 1 else "minus"
    return assert_series_equal(f"series/jtp-k{k:02d}-{tag}", lhs, rhs)


def check_proof_steps(order: int) -> list[VerificationReport]:
    """Verify every displayed rewriting used to derive the u(n) closed forms.

    Both sides of each step are constructed from primitive expansions, never
    from the higher-level series under test. Requires order >= 8 so every
    step has nontrivial content.
    """
    if order < 8:
        raise ValueError(f"proof steps need order >= 8, got {order}")
    n = order
    q2 = series_monomial(1, 2, n)

    # shared closed form: 2 q^2 (q^2)^2 (q^8)^2 (q^32)^2 / ( (q) (q^4)^5 (q^16) )
    u_closed = series_mul(
        series_monomial(2, 2, n),
        _prod(n, (-1, 2, 2, 2), (-1, 8, 8, 2), (-1, 32, 32, 2),
              (-1, 1, 1, -1), (-1, 4, 4, -5), (-1, 16, 16, -1)),
    )
    p_gf = series_reciprocal(_prod(n, (-1, 1, 1, 1)))
    f_gf = _prod(n, (1, 1, 2, 1), (-1, 4, 4, -1), (1, 2, 4, -2))

    # V(q) at an order whose 4-fold dilation covers n
    v_q = _prod((n + 3) // 4, (-1, 2, 2, 2), (-1, 8, 8, 2), (-1, 1, 1, -5), (-1, 4, 4, -1))
    v_q4 = series_dilate(v_q, 4)

    theta_plus = _theta(n, 2, 0, 0)
    theta_alt = _theta(n, 2, 0, 0, alternating=True)
    theta_odd_sq = _theta(n, 8, 8, 2)          # sum q^{2 (2n+1)^2}
    theta_8nn = _theta(n, 8, 8, 0)
    theta_tri = _theta(n, 2, -1, 0)            # sum q^{2n^2 - n}
    theta_32jj = _theta(n, 32, -4, 0)
    tri_one_sided = _triangular(n, bilateral=False)
    tri_bilateral = _triangular(n, bilateral=True)

    reports = [
        # 1/(q;q) rewritten over the mod-4 classes of exponents
        assert_series_equal(
            "proof/p-gf-odd-even-quotient",
            p_gf,
            _prod(n, (1, 1, 2, 1), (-1, 4, 4, -1), (-1, 2, 4, -2)),
        ),
        # twice the closed form equals p - f
        assert_series_equal("proof/u-doubled-is-p-minus-f", 2 * u_closed, p_gf - f_gf),
        # the two half quotients combine over a common denominator
        assert_series_equal(
            "proof/u-difference-single-quotient",
            _prod(n, (1, 1, 2, 1), (-1, 4, 4, -1), (-1, 2, 4, -2))
            - _prod(n, (1, 1, 2, 1), (-1, 4, 4, -1), (1, 2, 4, -2)),
            series_mul(
                _prod(n, (1, 1, 2, 1), (-1, 4, 4, -2), (-1, 2, 4, -2), (1, 2, 4, -2)),
                _prod(n, (-1, 4, 4, 1), (1, 2, 4, 2)) - _prod(n, (-1, 4, 4, 1), (-1, 2, 4, 2)),
            ),
        ),
        # sum q^{2n^2} and its alternating twin as triple products
        assert_series_equal(
            "proof/theta-even-squares-plus", theta_plus, _prod(n, (-1, 4, 4, 1), (1, 2, 4, 2))
        ),
        assert_series_equal(
            "proof/theta-even-squares-alternating",
            theta_alt,
            _prod(n, (-1, 4, 4, 1), (-1, 2, 4, 2)),
        ),
        # their difference doubles the odd-square subsum
        assert_series_equal(
            "proof/theta-difference-doubles-odd-squares",
            theta_plus - theta_alt,
            2 * theta_odd_sq,
        ),
        # u written as a single theta quotient
        assert_series_equal(
            "proof/u-as-odd-square-theta-quotient",
            u_closed,
            series_mul(
                _prod(n, (1, 1, 2, 1), (-1, 4, 4, -2), (-1, 2, 4, -2), (1, 2, 4, -2)),
                theta_odd_sq,
            ),
        ),
        # pulling q^2 out of the odd-square theta
        assert_series_equal(
            "proof/u-theta-shift-rewrite",
            series_mul(
                _prod(n, (1, 1, 2, 1), (-1, 4, 4, -2), (-1, 2, 4, -2), (1, 2, 4, -2)),
                theta_odd_sq,
            ),
            series_mul(
                q2,
                series_mul(_prod(n, (1, 1, 2, 1), (-1, 4, 4, -2), (-1, 4, 8, -2)), theta_8nn),
            ),
        ),
        # sum q^{8n^2+8n} as a triple product with the (-1; q^16) factor
        assert_series_equal(
            "proof/theta-8nn-triple-product",
            theta_8nn,
            _prod(n, (1, 16, 16, 1), (1, 0, 16, 1), (-1, 16, 16, 1)),
        ),
        # (-1; q^16) = 2 (-q^16; q^16)
        assert_series_equal(
            "proof/neg-one-pochhammer-doubling",
            _prod(n, (1, 0, 16, 1)),
            2 * _prod(n, (1, 16, 16, 1)),
        ),
        # resolving the theta gives the doubled sixteen block ...
        assert_series_equal(
            "proof/u-with-doubled-sixteen-block",
            u_closed,
            series_mul(
                series_monomial(2, 2, n),
                _prod(n, (1, 16, 16, 2), (1, 1, 2, 1), (-1, 16, 16, 1),
                      (-1, 4, 4, -2), (-1, 4, 8, -2)),
            ),
        ),
        # ... which pairs into a (q^32; q^32) factor
        assert_series_equal(
            "proof/u-with-thirtytwo-block",
            u_closed,
            series_mul(
                series_monomial(2, 2, n),
                _prod(n, (-1, 32, 32, 1), (1, 1, 2, 1), (1, 16, 16, 1),
                      (-1, 4, 4, -2), (-1, 4, 8, -2)),
            ),
        ),
        # the three product rewritings used in the final assembly
        assert_series_equal(
            "proof/odd-pochhammer-eta-ratio",
            _prod(n, (1, 1, 2, 1)),
            _prod(n, (-1, 2, 2, 2), (-1, 1, 1, -1), (-1, 4, 4, -1)),
        ),
        assert_series_equal(
            "proof/four-mod-eight-eta-ratio",
            _prod(n, (-1, 4, 8, 1)),
            _prod(n, (-1, 4, 4, 1), (-1, 8, 8, -1)),
        ),
        assert_series_equal(
            "proof/neg-sixteen-pochhammer-eta-ratio",
            _prod(n, (1, 16, 16, 1)),
            _prod(n, (-1, 32, 32, 1), (-1, 16, 16, -1)),
        ),
        # u factored through V(q^4)
        assert_series_equal(
            "proof/u-as-v-at-q4",
            u_closed,
            series_mul(
                series_monomial(2, 2, n),
                series_mul(_prod(n, (-1, 2, 2, 2), (-1, 1, 1, -1)), v_q4),
            ),
        ),
        # (q^2)^2/(q) = (q^2)/(q; q^2)
        assert_series_equal(
            "proof/even-pochhammer-split",
            _prod(n, (-1, 2, 2, 2), (-1, 1, 1, -1)),
            _prod(n, (-1, 2, 2, 1), (-1, 1, 2, -1)),
        ),
        # Euler: 1/(q; q^2) = (-q; q)
        assert_series_equal(
            "proof/euler-odd-distinct", _prod(n, (-1, 1, 2, -1)), _prod(n, (1, 1, 1, 1))
        ),
        # (q^2; q^2) = (q; q)(-q; q)
        assert_series_equal(
            "proof/even-eta-splits-odd-even",
            _prod(n, (-1, 2, 2, 1)),
            _prod(n, (-1, 1, 1, 1), (1, 1, 1, 1)),
        ),
        # (q)(-1; q)(-q; q) is the bilateral triangular-number sum
        assert_series_equal(
            "proof/triangular-triple-product",
            _prod(n, (-1, 1, 1, 1), (1, 0, 1, 1), (1, 1, 1, 1)),
            tri_bilateral,
        ),
        assert_series_equal(
            "proof/triangular-bilateral-doubling", tri_bilateral, 2 * tri_one_sided
        ),
        # one-sided triangular numbers re-indexed as a bilateral theta
        assert_series_equal("proof/triangular-reindex-bilateral", tri_one_sided, theta_tri),
        assert_series_equal(
            "proof/u-as-bilateral-triangular-times-v",
            u_closed,
            series_mul(q2, series_mul(tri_bilateral, v_q4)),
        ),
        assert_series_equal(
            "proof/u-as-triangular-times-v",
            u_closed,
            series_mul(series_monomial(2, 2, n), series_mul(tri_one_sided, v_q4)),
        ),
        # splitting the theta index over residues mod 4
        assert_series_equal(
            "proof/theta-residue-split-mod-four",
            theta_tri,
            _theta(n, 32, -4, 0) + _theta(n, 32, 12, 1) + _theta(n, 32, 28, 6) + _theta(n, 32, 44, 15),
        ),
        assert_series_equal(
            "proof/u-as-residue-split-sum",
            u_closed,
            series_mul(
                series_monomial(2, 2, n),
                series_mul(
                    _theta(n, 32, -4, 0) + _theta(n, 32, 12, 1)
                    + _theta(n, 32, 28, 6) + _theta(n, 32, 44, 15),
                    v_q4,
                ),
            ),
        ),
        # extracting the q^{4j+2} terms isolates one residue theta
        assert_series_equal(
            "proof/u-extract-two-mod-four",
            series_mul(q2, series_dilate(extract_progression(u_closed, 2, 4), 4)),
            series_mul(series_monomial(2, 2, n), series_mul(theta_32jj, v_q4)),
        ),
        # sum q^{32 j^2 - 4 j} as a triple product
        assert_series_equal(
            "proof/theta-32jj-triple-product",
            theta_32jj,
            _prod(n, (-1, 64, 64, 1), (1, 28, 64, 1), (1, 36, 64, 1)),
        ),
        # the simplified u(4n+2) progression in the q variable
        assert_series_equal(
            "proof/u-progression-two-closed-form",
            extract_progression(u_closed, 2, 4),
            2
            * series_mul(
                _prod((n - 2) // 4, (-1, 16, 16, 1), (1, 7, 16, 1), (1, 9, 16, 1)),
                _prod((n - 2) // 4, (-1, 2, 2, 2), (-1, 8, 8, 2), (-1, 1, 1, -5), (-1, 4, 4, -1)),
            ),
        ),
    ]
    return reports


def check_hook_parity(n_max: int) -> VerificationReport:
    """t-type classification coincides with having an even number of even hooks.

    Exhaustive over all partitions of every n <= n_max; a failure records the
    partition's index in global enumeration order.
    """
    index = 0
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            stats = classify(lam)
            if stats.is_t_type != (stats.even_hooks % 2 == 0):
                return VerificationReport(
                    "comb/hook-parity-equivalence",
                    n_max,
                    False,
                    index,
                    (stats.odd_parts - stats.odd_parts_conjugate) % 4,
                    stats.even_hooks,
                )
            index += 1
    return VerificationReport("comb/hook-parity-equivalence", n_max, True)


def check_corner_lemma(n_max: int) -> VerificationReport:
    """The corner-removal parity claim holds at every inner corner, n <= n_max."""
    index = 0
    for n in range(1, n_max + 1):
        for lam in partitions_of(n):
            for v in inner_corners(lam):
                if not corner_parity_check(lam, v):
                    return VerificationReport(
                        "comb/corner-parity-lemma", n_max, False, index, v[0], v[1]
                    )
            index += 1
    return VerificationReport("comb/corner-parity-lemma", n_max, True)


def check_hook_counting(n_max: int) -> list[VerificationReport]:
    """The three counting identities tying even-hook statistics to t, u, f.

    For each n <= n_max: partitions with evenly many even hooks number t(n),
    those with oddly many are even in number, and the signed count equals the
    coefficient of the f product series.
    """
    even_counts, odd_counts = [], []
    for n in range(n_max + 1):
        even = odd = 0
        for lam in partitions_of(n):
            if classify(lam).even_hooks % 2 == 0:
                even += 1
            else:
                odd += 1
        even_counts.append(even)
        odd_counts.append(odd)
    f_coeffs = stanley.f_series(n_max).coeffs
    return [
        _values_equal(
            "comb/even-hook-partitions-equal-t",
            n_max,
            even_counts,
            [stanley.t_bruteforce(n) for n in range(n_max + 1)],
        ),
        _values_equal(
            "comb/odd-hook-partitions-count-even",
            n_max,
            [c % 2 for c in odd_counts],
            [0] * (n_max + 1),
        ),
        _values_equal(
            "comb/signed-hook-count-equals-f",
            n_max,
            [e - o for e, o in zip(even_counts, odd_counts)],
            list(f_coeffs),
        ),
    ]


def check_conjugation_pairing(n_max: int) -> VerificationReport:
    """u-type partitions pair off under conjugation with no fixed points."""
    index = 0
    for n in range(n_max + 1):
        for lam in partitions_of(n):
            if not classify(lam).is_t_type:
                conj = conjugate(lam)
                if conj == lam or classify(conj).is_t_type:
                    return VerificationReport(
                        "comb/u-partitions-pair-under-conjugation", n_max, False, index, n, None
                    )
            index += 1
    return VerificationReport("comb/u-partitions-pair-under-conjugation", n_max, True)


def check_congruences(order: int) -> list[VerificationReport]:
    """The divisibility and parity congruences, checked on series coefficients."""
    if order < 2:
        raise ValueError(f"congruence checks need order >= 2, got {order}")
    p = stanley.p_series(order).coeffs
    t = stanley.t_series_andrews(order).coeffs
    f = stanley.f_series(order).coeffs
    u = stanley.u_series(order).coeffs
    bound_5 = (order - 4) // 5
    return [
        _values_equal(
            "cong/t-at-5n-plus-4-divisible-by-5",
            order,
            [t[5 * k + 4] % 5 for k in range(bound_5 + 1)],
            [0] * (bound_5 + 1),
        ),
        _values_equal(
            "cong/t-parity-equals-p-parity",
            order,
            [x % 2 for x in t],
            [x % 2 for x in p],
        ),
        _values_equal(
            "cong/f-equals-p-mod-4",
            order,
            [x % 4 for x in f],
            [x % 4 for x in p],
        ),
        _values_equal("cong/u-always-even", order, [x % 2 for x in u], [0] * (order + 1)),
    ]


def suite_series(
    order: int = DEFAULT_ORDER,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
    progression_bound: int = DEFAULT_PROGRESSION_BOUND,
    jtp_max_k: int = DEFAULT_JTP_MAX_K,
) -> list[VerificationReport]:
    """Series-level checks: enumeration oracles, closed-form agreement,
    progression extraction, and the triple-product family."""
    enum_table = stanley.table_from_enumeration(oracle_bound)
    take = oracle_bound + 1
    reports = [
        assert_series_equal(
            "series/p-series-vs-partition-count",
            TruncatedSeries(enum_table.p[: min(40, oracle_bound) + 1]),
            stanley.p_series(min(40, oracle_bound)),
        ),
        assert_series_equal(
            "series/u-product-vs-enumeration",
            stanley.u_series(max(oracle_bound, 2)),
            TruncatedSeries(enum_table.u),
        ),
        assert_series_equal(
            "series/t-eta-quotient-vs-enumeration",
            stanley.t_series_andrews(oracle_bound),
            TruncatedSeries(enum_table.t),
        ),
        assert_series_equal(
            "series/t-half-sum-vs-enumeration",
            stanley.t_series_half_sum(oracle_bound),
            TruncatedSeries(enum_table.t),
        ),
        assert_series_equal(
            "series/f-product-vs-enumeration",
            stanley.f_series(oracle_bound),
            TruncatedSeries(enum_table.f),
        ),
        assert_series_equal(
            "series/t-half-sum-vs-eta-quotient",
            stanley.t_series_half_sum(order),
            stanley.t_series_andrews(order),
        ),
    ]
    # the i=0 progression carries a q^2 prefactor, so it needs order >= 2
    n_prog = min(progression_bound, (order - 3) // 4)
    if n_prog >= 2:
        u_full = stanley.u_series(4 * n_prog + 3)
        for i in range(4):
            reports.append(
                assert_series_equal(
                    f"series/u-progression-{i}-vs-extraction",
                    stanley.u_progression_series(i, n_prog),
                    extract_progression(u_full, i, 4),
                )
            )
    for k in range(jtp_max_k + 1):
        for sign in (1, -1):
            reports.append(check_jtp(k, sign, order))
    return reports


def suite_combinatorial(
    enum_bound: int = DEFAULT_ENUM_BOUND, corner_bound: int = DEFAULT_CORNER_BOUND
) -> list[VerificationReport]:
    """Exhaustive hook-statistic checks over all partitions up to the bounds."""
    reports = [check_hook_parity(enum_bound), check_corner_lemma(corner_bound)]
    reports.extend(check_hook_counting(enum_bound))
    reports.append(check_conjugation_pairing(enum_bound))
    return reports


def suite_proof_steps(order: int = DEFAULT_ORDER) -> list[VerificationReport]:
    return check_proof_steps(order)


def suite_congruences(order: int = DEFAULT_ORDER) -> list[VerificationReport]:
    return check_congruences(order)


def run_suite(
    name: str,
    order: int = DEFAULT_ORDER,
    enum_bound: int = DEFAULT_ENUM_BOUND,
    oracle_bound: int = DEFAULT_ORACLE_BOUND,
) -> list[VerificationReport]:
    """Run a named suite and return its reports sorted by check name."""
    if name not in SUITE_NAMES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITE_NAMES)}")
    reports: list[VerificationReport] = []
    if name in ("all", "series"):
        reports.extend(suite_series(order=order, oracle_bound=oracle_bound))
    if name in ("all", "combinatorial"):
        reports.extend(
            suite_combinatorial(enum_bound=enum_bound, corner_bound=min(enum_bound, DEFAULT_CORNER_BOUND))
        )
    if name in ("all", "proof-steps"):
        reports.extend(suite_proof_steps(order=order))
    if name in ("all", "congruences"):
        reports.extend(suite_congruences(order=order))
    return sorted(reports, key=lambda r: r.check_name)
