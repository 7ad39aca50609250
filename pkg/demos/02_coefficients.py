"""Compute word coefficients of log(e^A e^B) by several routes.

Every word w of degree n in the letters A and B carries a rational
coefficient c(w).  This script prints the complete degree-3 slice, checks
that the independent computation routes agree on a handful of words, and
evaluates the scaled form used throughout the package: for a word with run
lengths q_1, ..., q_m (first run in A),

    tilde(c) = (-1)^n * q_1! * ... * q_m! * c(w).
"""

from fractions import Fraction

from bchcoeff import METHODS, WordSpec, coeff_tilde, coeff_word


def c_of(letters: str, method: str = "alg2") -> Fraction:
    return coeff_word(WordSpec.from_letters(letters), method=method)


def main() -> None:
    print("all words of degree 3:")
    for word in ("AAA", "AAB", "ABA", "ABB", "BAA", "BAB", "BBA", "BBB"):
        print(f"  c({word}) = {c_of(word)}")

    print()
    print("route agreement on BBAA and AABAB:")
    for word in ("BBAA", "AABAB"):
        values = {m: c_of(word, m) for m in METHODS if m != "bernoulli"}
        if len(WordSpec.from_letters(word).runs) == 2:
            values["bernoulli"] = c_of(word, "bernoulli")
        assert len(set(values.values())) == 1
        print(f"  c({word}) = {values['alg2']}  "
              f"(same answer from {', '.join(sorted(values))})")

    print()
    print("scaled coefficients tilde(c) for a few run vectors:")
    for runs in ((1,), (1, 1), (2, 1), (2, 2), (3, 2, 1)):
        spec = WordSpec(a_first=True, runs=runs)
        word = spec.letters()
        print(f"  runs {runs!r:12}  word {word:8}  "
              f"c = {coeff_word(spec)!s:8}  tilde(c) = {coeff_tilde(runs)}")

    runs = (14, 7, 1, 1, 1, 1, 1, 1)
    tilde = coeff_tilde(runs)
    assert tilde == Fraction(-2609686559, 116396280)
    print()
    print(f"a degree-26 example, runs {runs}:")
    print(f"  tilde(c) = {tilde}")


if __name__ == "__main__":
    main()
