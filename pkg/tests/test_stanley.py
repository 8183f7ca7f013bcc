import pytest

from conftest import BRUTE_F, BRUTE_T, BRUTE_U, pentagonal_partition_numbers
from stanleypf import stanley
from stanleypf.series_core import TruncatedSeries, extract_progression


class TestPSeries:
    def test_prefix(self):
        assert stanley.p_series(6).coeffs == (1, 1, 2, 3, 5, 7, 11)

    def test_empty_partition(self):
        assert stanley.p_series(0).coeffs == (1,)

    def test_coefficient_ten(self):
        assert stanley.p_series(10).coeffs[10] == 42

    def test_matches_pentagonal_recurrence(self):
        assert list(stanley.p_series(40).coeffs) == pentagonal_partition_numbers(40)


class TestBruteForce:
    def test_t_spot_values(self):
        assert stanley.t_bruteforce(0) == 1
        assert stanley.t_bruteforce(2) == 0
        assert stanley.t_bruteforce(4) == 5

    def test_u_spot_values(self):
        assert stanley.u_bruteforce(2) == 2
        assert stanley.u_bruteforce(3) == 2
        assert stanley.u_bruteforce(4) == 0

    def test_frozen_prefix(self):
        assert tuple(stanley.t_bruteforce(n) for n in range(21)) == BRUTE_T
        assert tuple(stanley.u_bruteforce(n) for n in range(21)) == BRUTE_U

    def test_negative_rejected(self):
        with pytest.raises(ValueError):
            stanley.t_bruteforce(-1)


class TestFSeries:
    def test_prefix(self):
        assert stanley.f_series(4).coeffs == (1, 1, -2, -1, 5)

    def test_constant_term(self):
        assert stanley.f_series(0).coeffs == (1,)

    def test_equals_t_minus_u(self):
        got = stanley.f_series(20).coeffs
        assert got == tuple(t - u for t, u in zip(BRUTE_T, BRUTE_U))


class TestTSeries:
    def test_half_sum_prefix(self):
        assert stanley.t_series_half_sum(4).coeffs == (1, 1, 0, 1, 5)

    def test_half_sum_coefficient_two(self):
        # (p(2) + f(2)) / 2 = (2 + (-2)) / 2
        assert stanley.t_series_half_sum(2).coeffs[2] == 0

    def test_andrews_prefix(self):
        assert stanley.t_series_andrews(4).coeffs == (1, 1, 0, 1, 5)

    def test_andrews_congruence_witness(self):
        assert stanley.t_series_andrews(9).coeffs[9] % 5 == 0

    def test_both_formulas_agree(self):
        assert stanley.t_series_half_sum(80) == stanley.t_series_andrews(80)

    def test_halving_guard_rejects_odd_coefficients(self):
        with pytest.raises(ValueError, match="odd"):
            stanley._halve_exactly(TruncatedSeries((2, 3)))


class TestUSeries:
    def test_prefix(self):
        assert stanley.u_series(4).coeffs == (0, 0, 2, 2, 0)

    def test_constant_term_vanishes(self):
        assert stanley.u_series(2).coeffs[0] == 0

    def test_all_even(self):
        assert all(c % 2 == 0 for c in stanley.u_series(80).coeffs)

    def test_order_below_prefactor_rejected(self):
        with pytest.raises(ValueError):
            stanley.u_series(1)

    def test_extraction_of_residue_two(self):
        got = extract_progression(stanley.u_series(22), 2, 4)
        assert got.coeffs == (2, 10, 36, 110, 300, 752)


class TestVSeries:
    def test_prefix(self):
        assert stanley.v_series(6).coeffs == (1, 5, 18, 55, 150, 376, 885)


class TestProgressions:
    def test_residue_two_constant_term(self):
        assert stanley.u_progression_series(2, 6).coeffs[0] == 2

    def test_residue_zero_prefix(self):
        # u(0), u(4), u(8), u(12) = 0, 0, 2, 12
        assert stanley.u_progression_series(0, 3).coeffs == (0, 0, 2, 12)

    def test_each_matches_extraction(self):
        full = stanley.u_series(4 * 10 + 3)
        for i in range(4):
            closed = stanley.u_progression_series(i, 10)
            assert closed == extract_progression(full, i, 4)

    def test_bad_residue(self):
        with pytest.raises(ValueError):
            stanley.u_progression_series(4, 10)


class TestStanleyTable:
    def test_sources_agree(self):
        enum = stanley.table_from_enumeration(14)
        gf = stanley.table_from_series(14)
        assert enum.p == gf.p
        assert enum.t == gf.t
        assert enum.u == gf.u
        assert enum.f == gf.f
        assert enum.source == "enumeration"
        assert gf.source == "generating-function"

    def test_identities_enforced(self):
        with pytest.raises(ValueError, match=r"p\(n\) = t\(n\) \+ u\(n\)"):
            stanley.StanleyTable(1, (1, 1), (1, 1), (0, 1), (1, 1), "enumeration")
        with pytest.raises(ValueError, match=r"f\(n\) = t\(n\) - u\(n\)"):
            stanley.StanleyTable(1, (1, 1), (1, 1), (0, 0), (1, 0), "enumeration")

    def test_bad_source_rejected(self):
        with pytest.raises(ValueError, match="source"):
            stanley.StanleyTable(0, (1,), (1,), (0,), (1,), "guesswork")

    def test_column_accessor(self):
        table = stanley.table_from_series(4)
        assert table.column("t") == (1, 1, 0, 1, 5)
        with pytest.raises(ValueError):
            table.column("x")

    def test_series_order_must_cover_max_n(self):
        with pytest.raises(ValueError):
            stanley.table_from_series(10, order=5)
