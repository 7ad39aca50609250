"""Walk through the denominator formula at small degree.

For each degree n the scaled coefficients n! * c(w) share a smallest common
denominator d_n, and d_n has a closed form: the exponent of a prime p < n is
floor(log_p s_p(n)), where s_p(n) is the digit sum of n in base p.  This
script prints the first 25 values together with their factorizations and
shows the digit sums that produce each exponent.
"""

from bchcoeff import d_n, denominator_record, digit_sum, l_exponent, primes_upto


def main() -> None:
    print("degree  d_n    factorization")
    for n in range(1, 26):
        rec = denominator_record(n)
        if rec.factorization:
            fact = " * ".join(
                f"{p}^{e}" if e > 1 else str(p) for p, e in rec.factorization
            )
        else:
            fact = "1"
        print(f"{n:4d}  {rec.dn:6d}   {fact}")

    n = 13
    print()
    print(f"how the exponents for n = {n} come about:")
    for p in primes_upto(n - 1):
        s = digit_sum(n, p)
        l = l_exponent(n, p)
        print(f"  p = {p:2d}: digit sum s_{p}({n}) = {s}, "
              f"floor(log_{p} {s}) = {l}")
    print(f"  product: d_{n} = {d_n(n)}")


if __name__ == "__main__":
    main()
