import pytest

from stanleypf import stanley


def pentagonal_partition_numbers(n_max):
    """Independent p(n) oracle: Euler's pentagonal-number recurrence.

    Deliberately shares no code with the enumeration stream or the series
    reciprocal it is used to check.
    """
    p = [0] * (n_max + 1)
    p[0] = 1
    for n in range(1, n_max + 1):
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > n:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * p[n - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= n:
                total += sign * p[n - g2]
            k += 1
        p[n] = total
    return p


# Brute-force values frozen from exhaustive enumeration (classification by
# odd-part counts of a partition and its conjugate, nothing series-based).
BRUTE_T = (1, 1, 0, 1, 5, 5, 1, 5, 20, 20, 6, 20, 65, 65, 25, 66, 185, 185, 85, 190, 481)
BRUTE_U = (0, 0, 2, 2, 0, 2, 10, 10, 2, 10, 36, 36, 12, 36, 110, 110, 46, 112, 300, 300, 146)
BRUTE_F = (1, 1, -2, -1, 5, 3, -9, -5, 18, 10, -30, -16, 53, 29, -85, -44, 139, 73, -215, -110, 335)


@pytest.fixture(scope="session")
def enum_table_60():
    """The n <= 60 enumeration sweep; computed once per session (~15 s)."""
    return stanley.table_from_enumeration(60)
