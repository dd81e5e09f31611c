"""Finite simply-laced root systems and Weyl-word combinatorics.

Everything here is exact integer arithmetic on coefficient vectors over the
simple roots.  Node numbering follows Bourbaki:

    A_n : 1 - 2 - ... - n
    D_n : 1 - 2 - ... - (n-2), with both (n-1) and n attached to (n-2)
          (so for D_4 the branch node is 2)
    E_n : chain 1 - 3 - 4 - 5 - ... - n, with 2 attached to 4

A reduced expression ``w = s_{i_1} ... s_{i_m}`` is stored as the flat tuple
``(i_1, ..., i_m)``.  Reducedness is decided through the reflection
representation (length equals the number of inversions).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Iterator

SIMPLY_LACED = ("A", "D", "E")

# Enumerating every reduced word of w0 explodes combinatorially; D_5 already
# has millions.  Keep exhaustive enumeration usable but guarded.
MAX_ENUMERATION_RANK = 4


class RootSystemError(ValueError):
    pass


Root = tuple[int, ...]
Word = tuple[int, ...]


def cartan(type_letter: str, rank: int) -> tuple[tuple[int, ...], ...]:
    """Cartan matrix of the given simply-laced finite type, Bourbaki order."""
    edges = dynkin_edges(type_letter, rank)
    mat = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]
    for i, j in edges:
        mat[i - 1][j - 1] = -1
        mat[j - 1][i - 1] = -1
    return tuple(tuple(row) for row in mat)


def dynkin_edges(type_letter: str, rank: int) -> tuple[tuple[int, int], ...]:
    """Edge list (1-based node pairs) of the Dynkin diagram."""
    if type_letter == "A":
        if rank < 1:
            raise RootSystemError(f"invalid rank {rank} for type A")
        return tuple((i, i + 1) for i in range(1, rank))
    if type_letter == "D":
        if rank < 4:
            raise RootSystemError(f"invalid rank {rank} for type D")
        chain = tuple((i, i + 1) for i in range(1, rank - 2))
        return chain + ((rank - 2, rank - 1), (rank - 2, rank))
    if type_letter == "E":
        if rank not in (6, 7, 8):
            raise RootSystemError(f"invalid rank {rank} for type E")
        chain = ((1, 3),) + tuple((i, i + 1) for i in range(3, rank))
        return chain + ((2, 4),)
    raise RootSystemError(f"unknown simply-laced type {type_letter!r}")


@dataclass(frozen=True)
class RootSystem:
    """Root/Weyl data for one irreducible simply-laced finite type."""

    type_letter: str
    rank: int

    def __post_init__(self) -> None:
        dynkin_edges(self.type_letter, self.rank)  # validates (type, rank)

    @property
    def cartan_matrix(self) -> tuple[tuple[int, ...], ...]:
        return cartan(self.type_letter, self.rank)

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def simple_root(self, i: int) -> Root:
        if i not in self.nodes:
            raise RootSystemError(f"node {i} out of range for rank {self.rank}")
        return tuple(1 if j == i - 1 else 0 for j in range(self.rank))

    def reflect(self, i: int, v: Root) -> Root:
        """Simple reflection s_i acting on a root-lattice vector."""
        c = self.cartan_matrix
        pairing = sum(c[i - 1][j] * v[j] for j in range(self.rank))
        return tuple(
            v[j] - pairing if j == i - 1 else v[j] for j in range(self.rank)
        )

    def act(self, word: Word, v: Root) -> Root:
        """Apply s_{i_1} ... s_{i_m} to v (leftmost letter acts last)."""
        for i in reversed(word):
            v = self.reflect(i, v)
        return v

    def positive_roots(self) -> tuple[Root, ...]:
        return _positive_roots(self.type_letter, self.rank)

    def is_positive(self, v: Root) -> bool:
        return any(x > 0 for x in v) and all(x >= 0 for x in v)

    def length(self, word: Word) -> int:
        """Coxeter length of the product, counted through inversions."""
        return sum(
            1 for beta in self.positive_roots() if not self.is_positive(self.act(word, beta))
        )

    def is_reduced(self, word: Word) -> bool:
        self._check_word(word)
        return self.length(word) == len(word)

    def number_of_positive_roots(self) -> int:
        return len(self.positive_roots())

    def beta_sequence(self, word: Word) -> tuple[Root, ...]:
        """The roots s_{i_1}...s_{i_{k-1}}(alpha_{i_k}) for k = 1..m.

        For a reduced word of w0 this lists all positive roots once, in the
        convex order attached to the word.
        """
        if not self.is_reduced(word):
            raise RootSystemError(f"word {word} is not reduced")
        betas = []
        for k in range(len(word)):
            betas.append(self.act(word[:k], self.simple_root(word[k])))
        return tuple(betas)

    def spells_longest(self, word: Word) -> bool:
        return self.is_reduced(word) and len(word) == self.number_of_positive_roots()

    def longest_word(self) -> Word:
        """A canonical reduced word of w0 (greedy, smallest descent first)."""
        return _longest_word(self.type_letter, self.rank)

    def star(self, i: int) -> int:
        """The node i* with w0(alpha_i) = -alpha_{i*}; an involution."""
        if i not in self.nodes:
            raise RootSystemError(f"node {i} out of range for rank {self.rank}")
        w0 = self.longest_word()
        image = self.act(w0, self.simple_root(i))
        neg = tuple(-x for x in image)
        for j in self.nodes:
            if neg == self.simple_root(j):
                return j
        raise RootSystemError("w0(alpha_i) is not a negative simple root")  # pragma: no cover

    def extend_letter(self, word: Word, k: int) -> int:
        """Letter i_k of the Z-extension of a w0 word by i_{k+l} = (i_k)*."""
        if not self.spells_longest(word):
            raise RootSystemError("word does not spell the longest element")
        ell = len(word)
        m, k0 = divmod(k - 1, ell)
        letter = word[k0]
        return self.star(letter) if m % 2 else letter

    def minimal_pairs(self, word: Word, k: int) -> tuple[tuple[int, int], ...]:
        """Minimal pairs (a, b) of beta_k within the convex order of the word.

        A decomposition beta_a + beta_b = beta_k (a < k < b) is minimal when no
        other decomposition sits strictly between it, i.e. there is no pair
        (a', b') with a < a' and b' < b.
        """
        betas = self.beta_sequence(word)
        if not 1 <= k <= len(betas):
            raise RootSystemError(f"index {k} out of range")
        target = betas[k - 1]
        pairs = []
        for a, b in combinations(range(1, len(betas) + 1), 2):
            if a < k < b and _add(betas[a - 1], betas[b - 1]) == target:
                pairs.append((a, b))
        minimal = [
            (a, b)
            for (a, b) in pairs
            if not any(a < a2 and b2 < b for (a2, b2) in pairs)
        ]
        return tuple(minimal)

    def reduced_words_of_longest(self) -> Iterator[Word]:
        """All reduced words of w0.  Guarded: rank must be <= 4."""
        if self.rank > MAX_ENUMERATION_RANK:
            raise RootSystemError(
                f"enumeration of reduced words is limited to rank <= {MAX_ENUMERATION_RANK}"
            )
        target = self.number_of_positive_roots()

        def grow(word: tuple[int, ...], image: dict[int, Root]) -> Iterator[Word]:
            # image[i] = (s_{i_1}...s_{i_m})(alpha_i); appending s_i keeps the
            # word reduced exactly when that vector is still positive.
            if len(word) == target:
                yield word
                return
            for i in self.nodes:
                if self.is_positive(image[i]):
                    new_image = {
                        j: self.act(word + (i,), self.simple_root(j)) for j in self.nodes
                    }
                    yield from grow(word + (i,), new_image)

        start = {i: self.simple_root(i) for i in self.nodes}
        yield from grow((), start)

    def _check_word(self, word: Word) -> None:
        for i in word:
            if i not in self.nodes:
                raise RootSystemError(f"letter {i} out of range for rank {self.rank}")


def _add(u: Root, v: Root) -> Root:
    return tuple(a + b for a, b in zip(u, v))


@lru_cache(maxsize=None)
def _positive_roots(type_letter: str, rank: int) -> tuple[Root, ...]:
    # Closure of the simple roots under simple reflections, keeping positives.
    rs = RootSystem(type_letter, rank)
    found = {rs.simple_root(i) for i in rs.nodes}
    frontier = list(found)
    while frontier:
        v = frontier.pop()
        for i in rs.nodes:
            w = rs.reflect(i, v)
            if rs.is_positive(w) and w not in found:
                found.add(w)
                frontier.append(w)
    return tuple(sorted(found, key=lambda r: (sum(r), r)))


@lru_cache(maxsize=None)
def _longest_word(type_letter: str, rank: int) -> Word:
    rs = RootSystem(type_letter, rank)
    word: list[int] = []
    image = {i: rs.simple_root(i) for i in rs.nodes}
    total = rs.number_of_positive_roots()
    while len(word) < total:
        for i in rs.nodes:
            if rs.is_positive(image[i]):
                word.append(i)
                image = {
                    j: rs.act(tuple(word), rs.simple_root(j)) for j in rs.nodes
                }
                break
        else:  # pragma: no cover
            raise RootSystemError("stuck before reaching the longest element")
    return tuple(word)
