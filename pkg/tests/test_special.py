import threading
from fractions import Fraction

import pytest

from bchcoeff.exactmath import primes_upto
from bchcoeff.special import bernoulli, bernoulli_table, stirling2, stirling2_from_sum


KNOWN_BERNOULLI = {
    0: Fraction(1),
    1: Fraction(-1, 2),
    2: Fraction(1, 6),
    3: Fraction(0),
    4: Fraction(-1, 30),
    5: Fraction(0),
    6: Fraction(1, 42),
    8: Fraction(-1, 30),
    10: Fraction(5, 66),
    12: Fraction(-691, 2730),
    14: Fraction(7, 6),
    16: Fraction(-3617, 510),
}


class TestBernoulli:
    def test_known_values(self):
        for n, value in KNOWN_BERNOULLI.items():
            assert bernoulli(n) == value

    def test_odd_zero(self):
        assert all(bernoulli(n) == 0 for n in range(3, 60, 2))

    def test_recurrence_identity(self):
        # sum(C(n+1, k) B_k, k=0..n) == 0 for n >= 1
        import math

        for n in range(1, 40):
            total = sum(math.comb(n + 1, k) * bernoulli(k) for k in range(n + 1))
            assert total == 0

    def test_table(self):
        table = bernoulli_table(12)
        assert len(table) == 13
        assert table[12] == Fraction(-691, 2730)
        assert isinstance(table, tuple)

    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            bernoulli(-1)

    def test_even_denominator_is_product_of_special_primes(self):
        # denominator of B_n (n even) == product of primes p with (p-1) | n
        for n in range(2, 61, 2):
            expected = 1
            for p in primes_upto(n + 1):
                if n % (p - 1) == 0:
                    expected *= p
            assert bernoulli(n).denominator == expected


def brute_stirling(q: int, j: int) -> int:
    """Number of ways to assign q labeled items onto exactly j unlabeled
    nonempty blocks, via surjection counting: j! S(q, j) = surjections."""
    import math

    if j > q:
        return 0
    surjections = sum(
        (-1) ** (j - i) * math.comb(j, i) * i**q for i in range(j + 1)
    )
    return surjections // math.factorial(j)


class TestStirling:
    def test_known_values(self):
        assert stirling2(1, 1) == 1
        assert stirling2(4, 2) == 7
        assert stirling2(5, 3) == 25
        assert stirling2(6, 3) == 90
        assert stirling2(7, 3) == 301
        assert stirling2(9, 9) == 1
        assert stirling2(9, 10) == 0

    def test_against_direct_count(self):
        # independent direct enumeration: place each item into one of j block
        # slots, keep assignments using every slot, divide by slot orderings
        import math
        from itertools import product

        for q in range(1, 9):
            for j in range(1, q + 1):
                used_all = 0
                for assign in product(range(j), repeat=q):
                    if len(set(assign)) == j:
                        used_all += 1
                assert stirling2(q, j) == used_all // math.factorial(j)

    def test_two_routes_agree(self):
        for q in range(1, 41):
            for j in range(1, q + 1):
                assert stirling2(q, j) == stirling2_from_sum(q, j)

    def test_surjection_form(self):
        for q in range(1, 20):
            for j in range(1, q + 1):
                assert stirling2(q, j) == brute_stirling(q, j)

    def test_rejects(self):
        with pytest.raises(ValueError):
            stirling2(0, 1)
        with pytest.raises(ValueError):
            stirling2(3, 0)
        with pytest.raises(ValueError):
            stirling2_from_sum(0, 0)


class TestThreadSafety:
    def test_concurrent_fill(self):
        errors = []

        def worker():
            try:
                assert bernoulli(180) == bernoulli_table(180)[180]
                assert stirling2(150, 70) == stirling2_from_sum(150, 70)
            except Exception as exc:  # pragma: no cover - only on failure
                errors.append(exc)

        threads = [threading.Thread(target=worker) for _ in range(8)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        assert not errors
