"""Q-data (height functions), adapted words, and the map into sigma0.

A Q-datum here is a simply-laced Dynkin diagram with a height function whose
values differ by exactly one across each edge; the diagram automorphism is
the identity (general twisted Q-data are rejected explicitly, never
approximated).

A reduced word of w0 is adapted when each letter sits at a strict local
minimum of the running height function, which then increases by 2 there:

    xi^(k+1) = xi^(k) + 2 * delta_{i_k}.

The label map phi sends beta_k to (i_k, xi^(k)(i_k)); its image together
with all dual shifts tiles sigma0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from typing import Iterator

from .affine import AffineTypeInfo, SigmaPoint
from .rootsys import MAX_ENUMERATION_RANK, Root, RootSystem, Word, dynkin_edges

__all__ = [
    "QDatum",
    "QDatumError",
    "UnsupportedAutomorphismError",
    "is_adapted",
    "adapted_words",
    "some_adapted_word",
    "phi",
    "fundamental_labels",
    "qdatum_from_json",
    "all_height_functions",
]


class QDatumError(ValueError):
    pass


class UnsupportedAutomorphismError(QDatumError):
    """Non-identity diagram automorphisms are out of required scope."""


@dataclass(frozen=True)
class QDatum:
    type_letter: str
    rank: int
    heights: tuple[int, ...]  # xi(i) = heights[i-1]
    automorphism: tuple[int, ...] | None = None  # identity when None

    def __post_init__(self) -> None:
        if self.automorphism is not None and tuple(self.automorphism) != tuple(
            range(1, self.rank + 1)
        ):
            raise UnsupportedAutomorphismError(
                "only identity diagram automorphisms are supported"
            )
        if len(self.heights) != self.rank:
            raise QDatumError("height function must assign every node")
        for i, j in dynkin_edges(self.type_letter, self.rank):
            if abs(self.heights[i - 1] - self.heights[j - 1]) != 1:
                raise QDatumError(
                    f"heights at adjacent nodes {i},{j} must differ by 1"
                )

    @property
    def root_system(self) -> RootSystem:
        return RootSystem(self.type_letter, self.rank)

    def xi(self, i: int) -> int:
        return self.heights[i - 1]


def validate(q: QDatum) -> None:
    """Construction already validates; kept for an explicit entry point."""
    QDatum(q.type_letter, q.rank, q.heights, q.automorphism)


def _neighbors(q: QDatum) -> dict[int, tuple[int, ...]]:
    adj: dict[int, list[int]] = {i: [] for i in range(1, q.rank + 1)}
    for i, j in dynkin_edges(q.type_letter, q.rank):
        adj[i].append(j)
        adj[j].append(i)
    return {i: tuple(v) for i, v in adj.items()}


def _is_strict_minimum(heights: list[int], node: int, adj) -> bool:
    return all(heights[node - 1] < heights[j - 1] for j in adj[node])


def is_adapted(q: QDatum, word: Word) -> bool:
    """True when the word spells w0 and follows the local-minimum rule."""
    rs = q.root_system
    if not rs.spells_longest(tuple(word)):
        return False
    heights = list(q.heights)
    adj = _neighbors(q)
    for letter in word:
        if not _is_strict_minimum(heights, letter, adj):
            return False
        heights[letter - 1] += 2
    return True


def _adapted_search(q: QDatum) -> Iterator[Word]:
    # a letter extends the word when it sits at a strict local minimum AND
    # keeps the word reduced (minimum sequences alone can fail reducedness)
    rs = q.root_system
    ell = rs.number_of_positive_roots()
    adj = _neighbors(q)

    def grow(word: tuple[int, ...], heights: list[int]) -> Iterator[Word]:
        if len(word) == ell:
            yield word
            return
        for i in range(1, q.rank + 1):
            if not _is_strict_minimum(heights, i, adj):
                continue
            if not rs.is_positive(rs.act(word, rs.simple_root(i))):
                continue
            heights[i - 1] += 2
            yield from grow(word + (i,), heights)
            heights[i - 1] -= 2

    yield from grow((), list(q.heights))


def adapted_words(q: QDatum) -> Iterator[Word]:
    """All adapted reduced words of w0 (rank <= 4 guard)."""
    if q.rank > MAX_ENUMERATION_RANK:
        raise QDatumError(
            f"enumeration of adapted words is limited to rank <= {MAX_ENUMERATION_RANK}"
        )
    yield from _adapted_search(q)


def some_adapted_word(q: QDatum) -> Word:
    """The first adapted word in the canonical search order."""
    word = next(_adapted_search(q), None)
    if word is None:  # pragma: no cover - every valid Q-datum has one
        raise QDatumError("no adapted word found")
    return word


def phi(q: QDatum, word: Word) -> dict[Root, SigmaPoint]:
    """phi_Q on the positive roots, computed along an adapted word."""
    if not is_adapted(q, word):
        raise QDatumError(f"word {word} is not adapted to the Q-datum")
    rs = q.root_system
    betas = rs.beta_sequence(word)
    heights = list(q.heights)
    image: dict[Root, SigmaPoint] = {}
    for letter, beta in zip(word, betas):
        image[beta] = SigmaPoint(letter, heights[letter - 1])
        heights[letter - 1] += 2
    return image


def fundamental_labels(q: QDatum) -> dict[int, SigmaPoint]:
    """phi_Q(alpha_i) for every node i, via the canonical adapted word."""
    rs = q.root_system
    mapping = phi(q, some_adapted_word(q))
    return {i: mapping[rs.simple_root(i)] for i in rs.nodes}


def compatible_with(q: QDatum, info: AffineTypeInfo) -> bool:
    return (q.type_letter, q.rank) == info.fin_type


def datum_from_q(info: AffineTypeInfo, q: QDatum):
    """The canonical complete duality datum of a Q-datum."""
    from .duality import from_q_datum

    return from_q_datum(info, q)


def all_height_functions(
    type_letter: str, rank: int, base: int = 0
) -> Iterator[tuple[int, ...]]:
    """Every height function with xi(1) = base, one sign choice per edge."""
    edges = dynkin_edges(type_letter, rank)
    # Dynkin diagrams are trees: BFS from node 1 fixes a parent for each node
    parent: dict[int, int] = {}
    order = [1]
    seen = {1}
    while len(order) < rank:
        for i, j in edges:
            if i in seen and j not in seen:
                parent[j] = i
                order.append(j)
                seen.add(j)
            elif j in seen and i not in seen:
                parent[i] = j
                order.append(i)
                seen.add(i)

    def grow(assigned: dict[int, int]) -> Iterator[tuple[int, ...]]:
        if len(assigned) == rank:
            yield tuple(assigned[i] for i in range(1, rank + 1))
            return
        node = order[len(assigned)]
        for sign in (-1, 1):
            assigned[node] = assigned[parent[node]] + sign
            yield from grow(assigned)
        del assigned[node]

    yield from grow({1: base})


def qdatum_from_json(doc: str | dict) -> QDatum:
    """Parse {"fin_type": "A", "rank": 2, "xi": {"1": 0, "2": 1}}."""
    data = json.loads(doc) if isinstance(doc, str) else doc
    rank = int(data["rank"])
    xi = data["xi"]
    heights = tuple(int(xi[str(i)]) for i in range(1, rank + 1))
    autom = data.get("automorphism")
    return QDatum(
        type_letter=data["fin_type"],
        rank=rank,
        heights=heights,
        automorphism=tuple(autom) if autom is not None else None,
    )
