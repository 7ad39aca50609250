"""Coefficients of H = log(e^A e^B): four independent computation routes.

A word over {A, B} is described by its first letter and the tuple of maximal
run lengths (q_1, ..., q_m); its coefficient in the degree-n piece of H is a
rational with denominator dividing n! * d_n.

Routes, from fastest to most naive:

* ``coeff_alg2`` -- scaled integer recurrences over a triangular table.  All
  intermediate values are integers by construction; every division is checked
  and a remainder raises ``IntegerExactnessError``, since a single remainder
  would falsify the scaling claim the whole route rests on.
* ``coeff_goldberg_sum`` -- the explicit double sum over index tuples with
  factorials and Stirling numbers of the second kind.
* ``coeff_bernoulli_m2`` -- two-block words A^(n-k) B^k via Bernoulli numbers.
* ``series_oracle`` -- brute-force expansion of log(e^A e^B) through a given
  degree.  Slow and memory-hungry on purpose: it is the reference the other
  routes are tested against, and shares no code with them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import groupby
from types import MappingProxyType
from typing import Mapping

from .denominators import capital_denominator
from .special import stirling2

__all__ = [
    "IntegerExactnessError",
    "SERIES_ORACLE_MAX",
    "WordSpec",
    "alg2_table",
    "coeff_alg2",
    "coeff_bernoulli_m2",
    "coeff_goldberg_sum",
    "coeff_goldberg_tilde",
    "coeff_tilde",
    "coeff_word",
    "series_oracle",
]

# the oracle materializes every word of length <= N: 2^(N+1) - 2 entries
SERIES_ORACLE_MAX = 16

METHODS = ("alg2", "goldberg", "bernoulli", "oracle")


class IntegerExactnessError(ArithmeticError):
    """An integer-only division left a remainder; the scaled table is unsound."""


def _exact_div(a: int, b: int, what: str) -> int:
    q, r = divmod(a, b)
    if r:
        raise IntegerExactnessError(f"{what}: {a} not divisible by {b}")
    return q


@dataclass(frozen=True)
class WordSpec:
    """A word over {A, B}: the letter it starts with, plus maximal run lengths.

    AABAB is WordSpec(a_first=True, runs=(2, 1, 1, 1)).
    """

    a_first: bool
    runs: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "runs", tuple(int(q) for q in self.runs))
        if not self.runs:
            raise ValueError("a word needs at least one run")
        if any(q < 1 for q in self.runs):
            raise ValueError(f"run lengths must be positive: {self.runs}")

    @property
    def degree(self) -> int:
        return sum(self.runs)

    def letters(self) -> str:
        out = []
        is_a = self.a_first
        for q in self.runs:
            out.append(("A" if is_a else "B") * q)
            is_a = not is_a
        return "".join(out)

    @classmethod
    def from_letters(cls, text: str) -> "WordSpec":
        if not text or set(text) - {"A", "B"}:
            raise ValueError(f"a word is a nonempty string over A and B, got {text!r}")
        return cls(text[0] == "A", tuple(len(list(g)) for _, g in groupby(text)))


def alg2_table(word: WordSpec, *, common_denominator: int | None = None):
    """The full scaled table behind ``coeff_alg2``, for auditing.

    Returns (table, d) with d = capital_denominator(degree) unless overridden.
    Entry table[k][n] equals d times the coefficient, in the k-th power of
    e^A e^B - 1, of the length-n tail of the word; table[n][n] == d always.
    """
    n_total = word.degree
    d = capital_denominator(n_total) if common_denominator is None else common_denominator
    runs = word.runs
    m = len(runs)
    fact = [math.factorial(t) for t in range(n_total + 1)]
    table = [[0] * (n_total + 1) for _ in range(n_total + 1)]
    # letter of the block being consumed, scanning blocks from the tail
    a_current = word.a_first if m % 2 == 1 else not word.a_first
    tail_fact = fact[runs[-1]]
    n = 0
    for i in range(m - 1, -1, -1):
        q_next = runs[i + 1] if i + 1 < m else 0
        spill = a_current and i <= m - 2
        for r in range(1, runs[i] + 1):
            n += 1
            if i == m - 1:
                h = _exact_div(d, fact[n], "single-block seed")
            elif a_current and i == m - 2:
                h = _exact_div(d, fact[r] * tail_fact, "two-block seed")
            else:
                h = 0
            table[1][n] = h
            r_fact = fact[r]
            j_stop = min(r, n - 1)
            spill_stop = min(q_next, n - r - 1)
            for k in range(2, n):
                prev = table[k - 1]
                h = 0
                for j in range(1, j_stop + 1):
                    e = prev[n - j]
                    if e:
                        h += _exact_div(e, fact[j], "same-block step")
                if spill:
                    for j in range(1, spill_stop + 1):
                        e = prev[n - r - j]
                        if e:
                            h += _exact_div(e, r_fact * fact[j], "block-boundary step")
                table[k][n] = h
            table[n][n] = d
        a_current = not a_current
    return table, d


def coeff_alg2(word: WordSpec, *, common_denominator: int | None = None) -> Fraction:
    """Coefficient of ``word`` in H, by integer recurrences over a scaled table.

    ``common_denominator`` lets sweeps over many words of one degree share the
    precomputed n! * d_n; it must equal exactly that value.
    """
    table, d = alg2_table(word, common_denominator=common_denominator)
    n = word.degree
    acc = 0
    for k in range(1, n + 1):
        term = _exact_div(table[k][n], k, "alternating-sum term")
        acc += term if k % 2 == 1 else -term
    return Fraction(acc, d)


def _validate_runs(runs) -> tuple[int, ...]:
    q = tuple(int(x) for x in runs)
    if not q or any(x < 1 for x in q):
        raise ValueError(f"run lengths must be a nonempty tuple of positive ints: {runs}")
    return q


def coeff_goldberg_tilde(runs) -> Fraction:
    """The factorial-scaled A-first coefficient as an explicit double sum.

    With t = j_1 + ... + j_m running over all index tuples 1 <= j_i <= q_i:

        sum over tuples and 0 <= k <= (m-1)//2 of
            (-1)^(t-k) C((m-1)//2, k) j_1! ... j_m! S(q_1,j_1) ... S(q_m,j_m) / (t-k)

    Tuples are walked by an odometer; the running product is dropped as soon
    as a factor vanishes.  Equal tuple totals are grouped so the rational part
    touches each total only once.
    """
    q = _validate_runs(runs)
    m = len(q)
    n = sum(q)
    half = (m - 1) // 2
    fact = [math.factorial(t) for t in range(max(q) + 1)]
    # by_total[t] accumulates (-1)^t * sum of products over tuples with sum t
    by_total = [0] * (n + 1)
    j = [1] * m
    while True:
        t = 0
        prod = 1
        for qi, ji in zip(q, j):
            s = stirling2(qi, ji)
            if s == 0:
                prod = 0
                break
            prod *= fact[ji] * s
            t += ji
        if prod:
            by_total[t] += prod if t % 2 == 0 else -prod
        pos = 0
        while pos < m and j[pos] == q[pos]:
            j[pos] = 1
            pos += 1
        if pos == m:
            break
        j[pos] += 1
    total = Fraction(0)
    for t in range(m, n + 1):
        if by_total[t]:
            k_sum = Fraction(0)
            for k in range(half + 1):
                term = Fraction(math.comb(half, k), t - k)
                k_sum += term if k % 2 == 0 else -term
            total += by_total[t] * k_sum
    return total


def coeff_goldberg_sum(runs) -> Fraction:
    """c(q_1, ..., q_m): the coefficient of the A-first word with these runs.

    The B-first word of the same runs carries the extra sign (-1)^(n+1).
    """
    q = _validate_runs(runs)
    n = sum(q)
    denom = 1
    for qi in q:
        denom *= math.factorial(qi)
    return Fraction(-1 if n % 2 else 1, denom) * coeff_goldberg_tilde(q)


def coeff_tilde(runs, *, method: str = "alg2") -> Fraction:
    """(-1)^n * q_1! * ... * q_m! times the A-first coefficient.

    The form whose leading p-part the analysis helpers pick apart; kept
    separate because the large-degree checks reason about it directly.
    """
    q = _validate_runs(runs)
    n = sum(q)
    scale = 1
    for qi in q:
        scale *= math.factorial(qi)
    if n % 2:
        scale = -scale
    return scale * coeff_word(WordSpec(True, q), method=method)


def coeff_bernoulli_m2(n: int, k: int) -> Fraction:
    """The two-block coefficient c(n-k, k), i.e. of A^(n-k) B^k, via Bernoulli numbers.

        c(n-k, k) = (-1)^(n+k)/n! * C(n, k) * sum(C(k, j) * B_(n-j), j=1..k)
    """
    from .special import bernoulli  # local import keeps module load light

    if n < 2:
        raise ValueError(f"two-block words need degree >= 2, got n={n}")
    if not 1 <= k <= n - 1:
        raise ValueError(f"k must satisfy 1 <= k <= n-1, got k={k}")
    total = Fraction(0)
    for j in range(1, k + 1):
        total += math.comb(k, j) * bernoulli(n - j)
    sign = 1 if (n + k) % 2 == 0 else -1
    return Fraction(sign * math.comb(n, k), math.factorial(n)) * total


def coeff_word(word: WordSpec, *, method: str = "alg2") -> Fraction:
    """Coefficient of an arbitrary word; ``method`` forces a backend.

    "bernoulli" only covers two-block words; "oracle" is limited to degree
    <= SERIES_ORACLE_MAX.
    """
    if method == "alg2":
        return coeff_alg2(word)
    if method == "goldberg":
        c = coeff_goldberg_sum(word.runs)
        if word.a_first or word.degree % 2 == 1:
            return c
        return -c
    if method == "bernoulli":
        if len(word.runs) != 2:
            raise ValueError("the bernoulli backend needs a two-block word")
        q1, q2 = word.runs
        c = coeff_bernoulli_m2(q1 + q2, q2)
        if word.a_first or word.degree % 2 == 1:
            return c
        return -c
    if method == "oracle":
        return series_oracle(word.degree)[word.letters()]
    raise ValueError(f"unknown method {method!r}; expected one of {METHODS}")


@lru_cache(maxsize=None)
def series_oracle(max_degree: int) -> Mapping[str, Fraction]:
    """Every coefficient of log(e^A e^B) through ``max_degree``, by brute force.

    Builds Y = e^A e^B - 1 as a word -> coefficient map scaled to integers,
    forms truncated powers Y^k by concatenation products, and sums
    (-1)^(k+1) Y^k / k over one huge common denominator.  Returns a read-only
    map from letter strings (every word of length 1..max_degree, zeros
    included) to exact rationals.
    """
    if not isinstance(max_degree, int) or not 1 <= max_degree <= SERIES_ORACLE_MAX:
        raise ValueError(
            f"series guard: the oracle covers 1 <= max_degree <= {SERIES_ORACLE_MAX},"
            f" got {max_degree}"
        )
    nf = math.factorial(max_degree)
    fact = [math.factorial(i) for i in range(max_degree + 1)]
    shift = 16
    mask = (1 << shift) - 1
    # keys pack (length << 16) | bits, bit 1 = letter B read left to right
    y = {}
    for i in range(max_degree + 1):
        for j in range(max_degree + 1 - i):
            if i + j:
                y[((i + j) << shift) | ((1 << j) - 1)] = nf // (fact[i] * fact[j])
    y_items = sorted(y.items(), key=lambda kv: kv[0] >> shift)
    ell = math.lcm(*range(1, max_degree + 1))
    acc: dict[int, int] = {}
    power = dict(y)  # Y^k scaled by nf^k
    for k in range(1, max_degree + 1):
        scale = (ell // k) * nf ** (max_degree - k)
        if k % 2 == 0:
            scale = -scale
        for w, v in power.items():
            acc[w] = acc.get(w, 0) + scale * v
        if k == max_degree:
            break
        nxt: dict[int, int] = {}
        for w1, v1 in power.items():
            l1 = w1 >> shift
            b1 = w1 & mask
            room = max_degree - l1
            for w2, v2 in y_items:
                l2 = w2 >> shift
                if l2 > room:
                    break
                key = ((l1 + l2) << shift) | (b1 << l2) | (w2 & mask)
                if key in nxt:
                    nxt[key] += v1 * v2
                else:
                    nxt[key] = v1 * v2
        power = nxt
    denom = ell * nf**max_degree
    out = {}
    for w, num in acc.items():
        ln = w >> shift
        bits = w & mask
        text = "".join("B" if (bits >> (ln - 1 - t)) & 1 else "A" for t in range(ln))
        out[text] = Fraction(num, denom)
    return MappingProxyType(out)
