"""Search exhaustively for the run-length partitions with extreme valuation.

Among all words of degree n, only a few run-length partitions realize the
maximal power of p in the coefficient denominator.  This script scans every
partition of n (the coefficient depends only on the multiset of run
lengths) and reports the extreme set Q(n, p) for several small cases,
including the degree where the set first has more than one member.
"""

from bchcoeff import l_exponent, q_set


def main() -> None:
    cases = [(6, 2), (9, 3), (12, 2), (15, 2), (23, 2), (27, 2)]
    for n, p in cases:
        parts = q_set(n, p)
        l = l_exponent(n, p)
        print(f"Q({n}, {p})  with l({n},{p}) = {l}:")
        for part in parts:
            print(f"  {part.parts}")

    n, p = 31, 2
    parts = q_set(n, p)
    print()
    print(f"degree {n} is the first with a crowd: |Q({n}, {p})| = {len(parts)}")
    for part in parts:
        print(f"  {part.parts}")


if __name__ == "__main__":
    main()
