"""Analysis of coefficient denominators: leading p-parts, predicted residues,
exhaustive degree sweeps, and the factorial-valuation classifier.

``extract_leading`` splits a rational into a_hat / p**e plus a strictly
smaller tail; ``expected_a`` predicts a_hat for word shapes with a closed
form.  The brute-force sweeps (``brute_lcm_degree``, ``max_vp_degree``,
``q_set``) stay exhaustive by design and carry explicit size guards.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .denominators import capital_denominator, l_exponent, partitions
from .exactmath import (
    PADIC_INFINITY,
    digit_sum,
    legendre_vp_factorial,
    mod_inverse,
    require_prime,
    vp,
)
from .goldberg import WordSpec, coeff_alg2, coeff_goldberg_sum, series_oracle
from .special import bernoulli

__all__ = [
    "BRUTE_DEGREE_MAX",
    "JOBS_ENV_VAR",
    "LeadingTerm",
    "Lemma3Class",
    "Partition",
    "QSET_DEGREE_MAX",
    "bernoulli_binomial_sum",
    "bernoulli_sum_residue",
    "brute_lcm_degree",
    "expected_a",
    "extract_leading",
    "lemma3_sides",
    "max_vp_degree",
    "q_set",
]

# per-degree brute force touches all 2^n words of that degree
BRUTE_DEGREE_MAX = 14
# q_set walks every partition of n (p(31) = 6842)
QSET_DEGREE_MAX = 31
# worker-count override for the partition scan (process-based; default 1)
JOBS_ENV_VAR = "BCHCOEFF_JOBS"


@dataclass(frozen=True)
class LeadingTerm:
    """x = a_hat / p**e + u_hat with 0 <= a_hat < p and vp(u_hat) > -e."""

    e: int
    a_hat: int
    u_hat: Fraction


def extract_leading(x: Fraction | int, p: int) -> LeadingTerm:
    """Split off the leading p-part of a rational.

    e = max(0, -vp(x)); a_hat is the mod-p residue carried at that depth
    (0 whenever vp(x) >= 1, and for x == 0 the whole triple is zero).
    """
    require_prime(p)
    x = Fraction(x)
    if x == 0:
        return LeadingTerm(0, 0, Fraction(0))
    num, den = x.numerator, x.denominator
    e = 0
    v = den
    while v % p == 0:
        v //= p
        e += 1
    a_hat = num % p * mod_inverse(v, p) % p
    u_hat = x - Fraction(a_hat, p**e)
    assert u_hat == 0 or vp(u_hat, p) > -e
    return LeadingTerm(e, a_hat, u_hat)


def _exact_log(m: int, p: int) -> int | None:
    """l with m == p**l, else None."""
    l = 0
    while m > 1 and m % p == 0:
        m //= p
        l += 1
    return l if m == 1 else None


def expected_a(n: int, p: int, m: int) -> int | None:
    """Predicted leading residue for an extreme word of degree n with m blocks.

    Covered regimes:

    * m == 2 with l(n, p) <= 1 and n >= p: residue (-1)^(n+1) mod p.
    * m == p**l, 1 <= l <= l(n, p): 1 for p == 2; 2*((p-1)/2)^n mod p for odd
      p and odd n; for odd p and even n the coefficient vanishes outright
      (returns None).
    * m == p**l + 1, 1 <= l <= l(n, p), s_p(n) != p**l: -((p-1)/2)^(n-1) mod p
      for odd p.  For p == 2 the block count is odd, so even n vanishes
      (None); odd n gives 1 at l == 1 and residue 0 at l >= 2 (meaning the
      leading term sits strictly above depth l).

    Anything else raises ValueError.
    """
    require_prime(p)
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if m < 2:
        raise ValueError(f"m must be >= 2, got {m}")
    l_cap = l_exponent(n, p)
    if m == 2 and l_cap <= 1 and n >= p:
        return 1 if n % 2 == 1 else (p - 1) % p
    l = _exact_log(m, p)
    if l is not None and 1 <= l <= l_cap:
        if p == 2:
            return 1
        if n % 2 == 0:
            return None
        return 2 * pow((p - 1) // 2, n, p) % p
    l = _exact_log(m - 1, p)
    if l is not None and 1 <= l <= l_cap:
        if digit_sum(n, p) == p**l:
            raise ValueError(
                f"m = p**l + 1 needs s_p(n) != p**l (both are {p ** l})"
            )
        if p == 2:
            if n % 2 == 0:
                return None
            return 1 if l == 1 else 0
        return (-pow((p - 1) // 2, n - 1, p)) % p
    raise ValueError(f"(n={n}, p={p}, m={m}) is outside the covered regimes")


def brute_lcm_degree(n: int) -> int:
    """lcm of the coefficient denominators over all 2^n words of degree n."""
    if not 1 <= n <= BRUTE_DEGREE_MAX:
        raise ValueError(f"brute-force degree guard: 1 <= n <= {BRUTE_DEGREE_MAX}, got {n}")
    out = 1
    for word, coeff in series_oracle(n).items():
        if len(word) == n:
            out = math.lcm(out, coeff.denominator)
    return out


def max_vp_degree(n: int, p: int) -> int:
    """Largest v_p(denominator) over all words of degree n."""
    require_prime(p)
    if not 1 <= n <= BRUTE_DEGREE_MAX:
        raise ValueError(f"brute-force degree guard: 1 <= n <= {BRUTE_DEGREE_MAX}, got {n}")
    best = 0
    for word, coeff in series_oracle(n).items():
        if len(word) == n:
            v = vp(coeff.denominator, p)
            if v > best:
                best = v
    return best


@dataclass(frozen=True)
class Partition:
    """A weakly decreasing tuple of positive parts."""

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", tuple(int(x) for x in self.parts))
        if not self.parts or any(x < 1 for x in self.parts):
            raise ValueError(f"parts must be positive: {self.parts}")
        if any(a < b for a, b in zip(self.parts, self.parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {self.parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)


def _qset_chunk(args):
    # module level so a process pool can pickle it
    chunk, p, d = args
    out = []
    for parts in chunk:
        c = coeff_alg2(WordSpec(True, parts), common_denominator=d)
        out.append(vp(c.denominator, p))
    return out


def q_set(n: int, p: int, *, method: str = "alg2", jobs: int | None = None) -> tuple[Partition, ...]:
    """Every descending partition of n whose A-first word attains the extreme
    denominator valuation v_p(n!) + l(n, p).

    Exhaustive over all partitions of n, in reverse-lexicographic order.  The
    common denominator n! * d_n is computed once and shared.  ``jobs`` (or the
    BCHCOEFF_JOBS environment variable) spreads the scan over worker
    processes; output order never depends on it.
    """
    require_prime(p)
    if not 1 <= n <= QSET_DEGREE_MAX:
        raise ValueError(f"exhaustive-search guard: 1 <= n <= {QSET_DEGREE_MAX}, got {n}")
    if method not in ("alg2", "goldberg"):
        raise ValueError(f"method must be 'alg2' or 'goldberg', got {method!r}")
    target = legendre_vp_factorial(n, p) + l_exponent(n, p)
    if jobs is None:
        jobs = int(os.environ.get(JOBS_ENV_VAR, "1") or "1")
    all_parts = list(partitions(n))
    if method == "goldberg":
        valuations = [vp(coeff_goldberg_sum(parts).denominator, p) for parts in all_parts]
    elif jobs > 1:
        d = capital_denominator(n)
        chunks = [all_parts[i::jobs] for i in range(jobs)]
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_qset_chunk, [(c, p, d) for c in chunks]))
        valuations = [0] * len(all_parts)
        for lane, vals in enumerate(results):
            for row, v in enumerate(vals):
                valuations[lane + row * jobs] = v
    else:
        d = capital_denominator(n)
        valuations = [
            vp(coeff_alg2(WordSpec(True, parts), common_denominator=d).denominator, p)
            for parts in all_parts
        ]
    return tuple(
        Partition(parts) for parts, v in zip(all_parts, valuations) if v == target
    )


class Lemma3Class(Enum):
    """Which equality pattern of the factorial-valuation bound a tuple matches."""

    ALL_SMALL = "all-small"            # every entry <= p-1
    ONE_LARGE_EXACT = "one-large-exact"    # length p: one entry 2p-1, rest p-1
    ONE_LARGE_WINDOW = "one-large-window"  # length p+1: one entry in [p, 2p-1], sum in [p^2, p^2+p-1]
    NONE = "none"


def lemma3_sides(j, p: int, l: int):
    """Both sides of v_p(j_1! ... j_m!) >= v_p(floor(sum(j) / p**l)), plus the
    equality classification.

    The tuple length must be p**l or p**l + 1 and all entries positive.  The
    right side is PADIC_INFINITY when the floor is zero (unreachable under
    the length precondition, kept for totality).  Returns (lhs, rhs, class);
    the bound holds always, with equality exactly when class is not NONE.
    """
    require_prime(p)
    if l < 1:
        raise ValueError(f"l must be >= 1, got {l}")
    tup = tuple(int(x) for x in j)
    m = len(tup)
    if m not in (p**l, p**l + 1):
        raise ValueError(f"tuple length must be {p ** l} or {p ** l + 1}, got {m}")
    if any(x < 1 for x in tup):
        raise ValueError(f"entries must be positive: {tup}")
    lhs = sum(legendre_vp_factorial(x, p) for x in tup)
    floor = sum(tup) // p**l
    rhs = vp(floor, p) if floor else PADIC_INFINITY
    if all(x <= p - 1 for x in tup):
        cls = Lemma3Class.ALL_SMALL
    else:
        cls = Lemma3Class.NONE
        big = [x for x in tup if x >= p]
        if l == 1 and len(big) == 1 and big[0] <= 2 * p - 1:
            if m == p and big[0] == 2 * p - 1 and all(
                x == p - 1 for x in tup if x < p
            ):
                cls = Lemma3Class.ONE_LARGE_EXACT
            elif m == p + 1 and p * p <= sum(tup) <= p * p + p - 1:
                cls = Lemma3Class.ONE_LARGE_WINDOW
    return lhs, rhs, cls


def bernoulli_binomial_sum(n: int, k: int) -> Fraction:
    """sum(C(k, j) * B_(n-j) for j = 1..k), the Bernoulli part of the
    two-block coefficient."""
    if n < 2:
        raise ValueError(f"needs n >= 2, got {n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1, got {k}")
    total = Fraction(0)
    for j in range(1, k + 1):
        total += math.comb(k, j) * bernoulli(n - j)
    return total


def bernoulli_sum_residue(n: int, k: int, p: int) -> int:
    """The residue a with bernoulli_binomial_sum(n, k) == -a/p + (p-integral).

    A Bernoulli number contributes a -1/p part exactly when (p-1) divides its
    index and the index is 1 or even (odd indices >= 3 vanish); a adds up
    C(k, j) over the contributing j.
    """
    require_prime(p)
    if n < 2 or not 1 <= k <= n - 1:
        raise ValueError(f"needs n >= 2 and 1 <= k <= n-1, got n={n}, k={k}")
    a = 0
    for j in range(1, k + 1):
        idx = n - j
        if idx % (p - 1) == 0 and (idx == 1 or idx % 2 == 0):
            a += math.comb(k, j)
    return a % p
