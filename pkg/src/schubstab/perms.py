"""Symmetric-group elements in one-line notation, with length and word tools.

A permutation w of {1..n} is stored as the tuple (w(1), ..., w(n)) and
composition is functional: (p * q)(i) = p(q(i)).  The length of w is the
number of inversions, i.e. pairs (i, j) with i < j and w(i) > w(j), which
equals the length of any reduced word for w in the adjacent transpositions
s_1, ..., s_{n-1}.

Enumeration order used throughout the package (and in certificate output):
length ascending, then one-line notation lexicographically.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache


@dataclass(frozen=True)
class Permutation:
    """Permutation of {1..n} in one-line notation (a tuple of values)."""

    word: tuple[int, ...]

    def __post_init__(self) -> None:
        word = tuple(self.word)
        object.__setattr__(self, "word", word)
        n = len(word)
        if n == 0:
            raise ValueError("rank must be at least 1")
        if sorted(word) != list(range(1, n + 1)):
            raise ValueError(f"not a permutation of 1..{n}: {word!r}")

    @staticmethod
    def identity(n: int) -> "Permutation":
        if n < 1:
            raise ValueError("rank must be at least 1")
        return Permutation(tuple(range(1, n + 1)))

    @staticmethod
    def simple(j: int, n: int) -> "Permutation":
        """The adjacent transposition s_j swapping j and j+1, for 1 <= j < n."""
        if not 1 <= j <= n - 1:
            raise ValueError(f"simple reflection index {j} out of range for rank {n}")
        word = list(range(1, n + 1))
        word[j - 1], word[j] = word[j], word[j - 1]
        return Permutation(tuple(word))

    @staticmethod
    def longest(n: int) -> "Permutation":
        """The order-reversing permutation (n, n-1, ..., 1)."""
        if n < 1:
            raise ValueError("rank must be at least 1")
        return Permutation(tuple(range(n, 0, -1)))

    @property
    def n(self) -> int:
        return len(self.word)

    def __call__(self, i: int) -> int:
        """Image of i (1-indexed)."""
        if not 1 <= i <= self.n:
            raise ValueError(f"index {i} out of range for rank {self.n}")
        return self.word[i - 1]

    def __mul__(self, other: "Permutation") -> "Permutation":
        """Functional composition: (p * q)(i) = p(q(i))."""
        if not isinstance(other, Permutation):
            return NotImplemented
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        return Permutation(tuple(self.word[v - 1] for v in other.word))

    def inverse(self) -> "Permutation":
        out = [0] * self.n
        for i, v in enumerate(self.word):
            out[v - 1] = i + 1
        return Permutation(tuple(out))

    def inversions(self) -> frozenset[tuple[int, int]]:
        """All pairs (i, j) with i < j and w(i) > w(j)."""
        w = self.word
        return frozenset(
            (i + 1, j + 1)
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if w[i] > w[j]
        )

    def length(self) -> int:
        w = self.word
        return sum(
            1
            for i in range(self.n)
            for j in range(i + 1, self.n)
            if w[i] > w[j]
        )

    @property
    def is_identity(self) -> bool:
        return all(v == i + 1 for i, v in enumerate(self.word))

    def left_descents(self) -> list[int]:
        """Values a with length(s_a * w) < length(w), ascending.

        a is a left descent exactly when a appears after a+1 in the one-line
        word, i.e. w^{-1}(a) > w^{-1}(a+1).
        """
        pos = {v: i for i, v in enumerate(self.word)}
        return [a for a in range(1, self.n) if pos[a] > pos[a + 1]]

    def to_json(self) -> list[int]:
        return list(self.word)

    def __str__(self) -> str:
        return "[" + ",".join(str(v) for v in self.word) + "]"


def sort_key(w: Permutation) -> tuple[int, tuple[int, ...]]:
    """Canonical ordering key: length first, then one-line word."""
    return (w.length(), w.word)


@lru_cache(maxsize=None)
def symmetric_group(n: int) -> tuple[Permutation, ...]:
    """All n! permutations of {1..n}, length ascending then lexicographic."""
    perms = [Permutation(p) for p in itertools.permutations(range(1, n + 1))]
    perms.sort(key=sort_key)
    return tuple(perms)


def product_of_simples(letters: tuple[int, ...], n: int) -> Permutation:
    """Multiply out s_{a_1} * s_{a_2} * ... * s_{a_k} in rank n."""
    w = Permutation.identity(n)
    for a in letters:
        w = w * Permutation.simple(a, n)
    return w


@lru_cache(maxsize=None)
def reduced_words(w: Permutation) -> tuple[tuple[int, ...], ...]:
    """All reduced words for w, sorted lexicographically.

    A word (a_1, ..., a_k) stands for the product s_{a_1} ... s_{a_k}; it is
    reduced when k = length(w).  Peeling a left descent a off w shortens it,
    so the words are exactly {(a,) + tail : a left descent, tail reduced word
    of s_a * w}; taking descents in ascending order keeps the list sorted.
    """
    if w.is_identity:
        return ((),)
    out = []
    for a in w.left_descents():
        shorter = Permutation.simple(a, w.n) * w
        out.extend((a,) + tail for tail in reduced_words(shorter))
    return tuple(out)


def canonical_reduced_word(w: Permutation) -> tuple[int, ...]:
    """Lexicographically smallest reduced word, by greedy descent choice."""
    letters = []
    cur = w
    while not cur.is_identity:
        a = cur.left_descents()[0]
        letters.append(a)
        cur = Permutation.simple(a, cur.n) * cur
    return tuple(letters)
