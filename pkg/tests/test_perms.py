"""Permutation layer: frozen small cases plus exhaustive checks at low rank.

Oracles used to freeze expected values:
  - inversion sets by direct double-loop pair scan,
  - composition by pointwise evaluation p(q(i)),
  - reduced words by exhaustive search over all letter sequences of the
    right length,
  - length distribution via the q-factorial, built by polynomial convolution.
"""

import itertools

import pytest

from schubstab.perms import (
    Permutation,
    canonical_reduced_word,
    product_of_simples,
    reduced_words,
    symmetric_group,
)


# ---------------------------------------------------------------- oracles


def oracle_inversions(word):
    n = len(word)
    return {
        (i + 1, j + 1)
        for i in range(n)
        for j in range(i + 1, n)
        if word[i] > word[j]
    }


def oracle_compose(p_word, q_word):
    return tuple(p_word[q_word[i] - 1] for i in range(len(p_word)))


def oracle_reduced_words(w):
    """Every letter sequence of length l(w) whose product is w."""
    n, k = w.n, w.length()
    found = []
    for letters in itertools.product(range(1, n), repeat=k):
        if product_of_simples(letters, n) == w:
            found.append(letters)
    return sorted(found)


def oracle_length_distribution(n):
    """Coefficients of [n]_q! = prod_{k=1}^{n} (1 + q + ... + q^{k-1})."""
    coeffs = [1]
    for k in range(1, n + 1):
        block = [1] * k
        out = [0] * (len(coeffs) + k - 1)
        for i, c in enumerate(coeffs):
            for j, b in enumerate(block):
                out[i + j] += c * b
        coeffs = out
    return coeffs


# ------------------------------------------------------------ construction


def test_identity_and_validation():
    assert Permutation.identity(3).word == (1, 2, 3)
    assert Permutation((2, 1, 3)).n == 3
    with pytest.raises(ValueError):
        Permutation((1, 1, 2))
    with pytest.raises(ValueError):
        Permutation((0, 1))
    with pytest.raises(ValueError):
        Permutation(())
    with pytest.raises(ValueError):
        Permutation.identity(0)
    with pytest.raises(ValueError):
        Permutation.longest(0)


def test_simple_reflections():
    assert Permutation.simple(1, 2).word == (2, 1)
    assert Permutation.simple(2, 4).word == (1, 3, 2, 4)
    with pytest.raises(ValueError):
        Permutation.simple(3, 3)
    with pytest.raises(ValueError):
        Permutation.simple(0, 3)


def test_compose_examples():
    s1 = Permutation.simple(1, 3)
    s2 = Permutation.simple(2, 3)
    # s1 * s2 sends 1->2, 2->3, 3->1: frozen from pointwise evaluation.
    assert (s1 * s2).word == (2, 3, 1)
    assert (s1 * s2).word == oracle_compose(s1.word, s2.word)
    assert (s2 * s1).word == (3, 1, 2)
    with pytest.raises(ValueError):
        s1 * Permutation.simple(1, 2)


def test_compose_matches_oracle_exhaustive_s4():
    for p in symmetric_group(4):
        for q in symmetric_group(4):
            assert (p * q).word == oracle_compose(p.word, q.word)


def test_call_is_one_indexed():
    w = Permutation((3, 1, 2))
    assert [w(1), w(2), w(3)] == [3, 1, 2]
    with pytest.raises(ValueError):
        w(0)
    with pytest.raises(ValueError):
        w(4)


def test_inverse():
    w = Permutation((2, 3, 1))
    assert w.inverse().word == (3, 1, 2)
    for p in symmetric_group(4):
        assert (p * p.inverse()).is_identity
        assert (p.inverse() * p).is_identity


# ------------------------------------------------------- length, inversions


def test_inversion_examples():
    assert Permutation.identity(4).inversions() == frozenset()
    assert Permutation.simple(1, 3).inversions() == {(1, 2)}
    w0 = Permutation.longest(3)
    assert w0.inversions() == {(1, 2), (1, 3), (2, 3)}
    assert w0.length() == 3


def test_inversions_match_oracle():
    for w in symmetric_group(4):
        assert set(w.inversions()) == oracle_inversions(w.word)
        assert w.length() == len(w.inversions())


def test_longest_element():
    assert Permutation.longest(1).is_identity
    assert Permutation.longest(4).word == (4, 3, 2, 1)
    assert Permutation.longest(4).length() == 6
    w0 = Permutation.longest(4)
    assert (w0 * w0).is_identity


def test_length_of_inverse_and_descent_step():
    for w in symmetric_group(4):
        assert w.inverse().length() == w.length()
        for j in range(1, 4):
            sj = Permutation.simple(j, 4)
            assert abs((w * sj).length() - w.length()) == 1


def test_inversions_of_inverse_are_value_pairs():
    for w in symmetric_group(4):
        flipped = {(w(j), w(i)) for (i, j) in w.inversions()}
        assert set(w.inverse().inversions()) == flipped


# ----------------------------------------------------------- reduced words


def test_reduced_words_frozen_small_cases():
    e2 = Permutation.identity(2)
    assert reduced_words(e2) == ((),)
    s2 = Permutation.simple(2, 3)
    assert reduced_words(s2) == ((2,),)
    w0 = Permutation.longest(3)
    assert reduced_words(w0) == ((1, 2, 1), (2, 1, 2))


def test_reduced_words_match_oracle_s3():
    for w in symmetric_group(3):
        assert list(reduced_words(w)) == oracle_reduced_words(w)


def test_reduced_words_properties_s4():
    for w in symmetric_group(4):
        words = reduced_words(w)
        assert list(words) == sorted(words)
        assert len(set(words)) == len(words)
        for letters in words:
            assert len(letters) == w.length()
            assert product_of_simples(letters, 4) == w


def test_canonical_reduced_word_is_lex_smallest():
    for w in symmetric_group(4):
        assert canonical_reduced_word(w) == reduced_words(w)[0]
    assert canonical_reduced_word(Permutation.longest(3)) == (1, 2, 1)


def test_longest_word_count_s4():
    # Known count for the longest element of rank 4.
    assert len(reduced_words(Permutation.longest(4))) == 16


# ------------------------------------------------------------ enumeration


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_symmetric_group_enumeration(n):
    perms = symmetric_group(n)
    assert len(perms) == len(set(perms))
    sizes = 1
    for k in range(2, n + 1):
        sizes *= k
    assert len(perms) == sizes
    keys = [(w.length(), w.word) for w in perms]
    assert keys == sorted(keys)
    dist = oracle_length_distribution(n)
    for ell, count in enumerate(dist):
        assert sum(1 for w in perms if w.length() == ell) == count


def test_json_one_line_form():
    assert Permutation((2, 3, 1)).to_json() == [2, 3, 1]
    assert str(Permutation((2, 3, 1))) == "[2,3,1]"
