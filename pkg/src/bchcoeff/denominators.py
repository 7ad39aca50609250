"""Smallest common denominators of the graded pieces of log(e^A e^B).

The degree-n coefficients, put over one denominator, need exactly

    D_n = n! * d_n,      d_n = prod(p ** l(n, p) for primes p < n),

where l(n, p) is the largest t with p**t <= s_p(n) (the base-p digit sum).
The same number is the lcm of k * j_1! * ... * j_k! over all partitions
(j_1, ..., j_k) of n; ``partition_lcm`` computes that form by full
enumeration and serves as an independent check on the product formula.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

from .exactmath import digit_sum, primes_upto, require_prime

__all__ = [
    "DenominatorRecord",
    "PARTITION_LCM_MAX",
    "capital_denominator",
    "check_bfile",
    "d_n",
    "denominator_record",
    "l_exponent",
    "min_degree_with_l",
    "partition_lcm",
    "partitions",
    "read_bfile",
]

# full partition enumeration stays desk-scale (p(40) = 37338 partitions)
PARTITION_LCM_MAX = 40


def l_exponent(n: int, p: int) -> int:
    """The largest t with p**t <= s_p(n); zero whenever s_p(n) < p."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    s = digit_sum(n, p)
    t = 0
    power = p
    while power <= s:
        t += 1
        power *= p
    return t


def d_n(n: int) -> int:
    """The factorial-free part of the common denominator in degree n."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    out = 1
    for p in primes_upto(n - 1):
        out *= p ** l_exponent(n, p)
    return out


def capital_denominator(n: int) -> int:
    """D_n = n! * d_n, the smallest common denominator in degree n."""
    return math.factorial(n) * d_n(n)


@dataclass(frozen=True)
class DenominatorRecord:
    """d_n and D_n together with the prime factorization of d_n."""

    n: int
    dn: int
    capital: int
    factorization: tuple[tuple[int, int], ...]  # (prime, exponent), ascending


def denominator_record(n: int) -> DenominatorRecord:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    factors = []
    dn = 1
    for p in primes_upto(n - 1):
        e = l_exponent(n, p)
        if e:
            factors.append((p, e))
            dn *= p**e
    return DenominatorRecord(n, dn, math.factorial(n) * dn, tuple(factors))


def partitions(n: int) -> Iterator[tuple[int, ...]]:
    """All partitions of n as weakly decreasing tuples, reverse-lexicographic.

    Iterative successor stepping, no recursion: strip trailing 1s, decrement
    the last part above 1, and refill greedily.
    """
    if n < 0:
        raise ValueError(f"n must be nonnegative, got {n}")
    if n == 0:
        yield ()
        return
    parts = [n]
    while True:
        yield tuple(parts)
        ones = 0
        while parts and parts[-1] == 1:
            parts.pop()
            ones += 1
        if not parts:
            return
        parts[-1] -= 1
        fill = parts[-1]
        total = ones + 1
        while total:
            t = min(fill, total)
            parts.append(t)
            total -= t


def partition_lcm(n: int) -> int:
    """lcm of k * j_1! * ... * j_k! over all partitions of n.

    Equal to capital_denominator(n); computed independently of it.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n > PARTITION_LCM_MAX:
        raise ValueError(
            f"partition enumeration guard: n <= {PARTITION_LCM_MAX}, got {n}"
        )
    out = 1
    for parts in partitions(n):
        value = len(parts)
        for j in parts:
            value *= math.factorial(j)
        out = out * value // math.gcd(out, value)
    return out


def min_degree_with_l(p: int, l: int) -> int:
    """The smallest degree n whose denominator carries p to the power l >= 2.

    Closed form 2 * p**x - 1 with x = (p**l - 1) / (p - 1): the base-p digits
    are one 1 on top of x (p-1)s, hitting digit sum p**l as early as possible.
    """
    require_prime(p)
    if l < 2:
        raise ValueError(f"l must be >= 2, got {l}")
    x = (p**l - 1) // (p - 1)
    return 2 * p**x - 1


def read_bfile(path) -> list[tuple[int, int]]:
    """Parse OEIS b-file lines ("index value" per line, '#' starts a comment)."""
    entries = []
    with open(path, encoding="ascii") as handle:
        for lineno, raw in enumerate(handle, start=1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            fields = line.split()
            if len(fields) != 2:
                raise ValueError(f"{path}:{lineno}: expected 'index value', got {raw!r}")
            entries.append((int(fields[0]), int(fields[1])))
    return entries


def check_bfile(path) -> list[tuple[int, int, int]]:
    """Compare d_n against a local b-file listing of the sequence.

    Returns mismatches as (n, listed_value, computed_value); empty means the
    file and the formula agree everywhere the file has entries.
    """
    mismatches = []
    for n, listed in read_bfile(path):
        computed = d_n(n)
        if computed != listed:
            mismatches.append((n, listed, computed))
    return mismatches
