"""Exponent vectors indexing simple modules, and the orders between them.

A simple module is indexed by a finitely supported vector a: Z -> Z>=0; the
standard module attached to a is the ordered tensor product of cuspidals
S_k, each repeated a_k times, with k strictly decreasing.  Comparison uses
the bi-lexicographic order: strictly smaller means smaller at the first
difference scanned from the left AND from the right; disagreement of the
two scans is a first-class Incomparable outcome.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum

from . import invariants
from .affine import SigmaPoint, dual_point
from .modexpr import Expr, Fund

__all__ = [
    "ExpVec",
    "Cmp",
    "cmp_left",
    "cmp_right",
    "cmp_bilex",
    "standard_word",
    "decompose",
    "compose",
    "dshift",
    "in_window",
    "peel_top_check",
    "expvec_to_json",
    "expvec_from_json",
    "multiset_to_json",
    "multiset_from_json",
]


class Cmp(Enum):
    LESS = "less"
    GREATER = "greater"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class ExpVec:
    """Sparse map Z -> Z>0, zero entries never stored."""

    entries: tuple[tuple[int, int], ...]  # sorted by index

    @classmethod
    def from_dict(cls, data: dict[int, int]) -> "ExpVec":
        cleaned = []
        for k in sorted(data):
            v = data[k]
            if v < 0:
                raise ValueError(f"negative multiplicity {v} at index {k}")
            if v:
                cleaned.append((int(k), int(v)))
        return cls(tuple(cleaned))

    def __getitem__(self, k: int) -> int:
        return dict(self.entries).get(k, 0)

    @property
    def support(self) -> tuple[int, ...]:
        return tuple(k for k, _ in self.entries)

    @property
    def total(self) -> int:
        return sum(v for _, v in self.entries)

    def is_zero(self) -> bool:
        return not self.entries

    def l_of(self) -> int:
        """Largest support index."""
        if self.is_zero():
            raise ValueError("the zero vector has no support")
        return self.entries[-1][0]

    def r_of(self) -> int:
        """Smallest support index."""
        if self.is_zero():
            raise ValueError("the zero vector has no support")
        return self.entries[0][0]


def _diff_indices(a: ExpVec, b: ExpVec) -> list[int]:
    keys = sorted(set(a.support) | set(b.support))
    return [k for k in keys if a[k] != b[k]]


def cmp_left(a: ExpVec, b: ExpVec) -> int:
    """Total order by the smallest index where the vectors differ."""
    diffs = _diff_indices(a, b)
    if not diffs:
        return 0
    k = diffs[0]
    return -1 if a[k] < b[k] else 1


def cmp_right(a: ExpVec, b: ExpVec) -> int:
    """Total order by the largest index where the vectors differ."""
    diffs = _diff_indices(a, b)
    if not diffs:
        return 0
    k = diffs[-1]
    return -1 if a[k] < b[k] else 1


def cmp_bilex(a: ExpVec, b: ExpVec) -> Cmp:
    left, right = cmp_left(a, b), cmp_right(a, b)
    if left == 0:
        return Cmp.EQUAL
    if left == right:
        return Cmp.LESS if left < 0 else Cmp.GREATER
    return Cmp.INCOMPARABLE


def standard_word(a: ExpVec, seq) -> list[Expr]:
    """Cuspidal factors S_k of the standard module, k strictly decreasing."""
    word: list[Expr] = []
    for k, mult in sorted(a.entries, reverse=True):
        word.extend([seq.materialize(k)] * mult)
    return word


def decompose(multiset, seq) -> ExpVec:
    """Exponent vector of a dominant multiset of fundamental labels.

    The sequence must cover sigma0 bijectively by fundamentals (a Q-datum
    sequence or one of its shifts).
    """
    counts: dict[int, int] = {}
    for point in multiset:
        k = seq.index_of(point)
        counts[k] = counts.get(k, 0) + 1
    return ExpVec.from_dict(counts)


def compose(a: ExpVec, seq) -> list[SigmaPoint]:
    """Multiset of labels with multiplicities a_k; inverse of decompose."""
    points: list[SigmaPoint] = []
    for k, mult in a.entries:
        value = seq.materialize(k)
        if not isinstance(value, Fund):
            raise ValueError(
                f"S_{k} is not a fundamental label; the vector is not "
                "composable over this sequence"
            )
        points.extend([value.point] * mult)
    return sorted(points)


def dshift(a: ExpVec, m: int, ell: int) -> ExpVec:
    """Exponent vector of the m-th dual shift: support translated by m*l."""
    return ExpVec(tuple((k + m * ell, v) for k, v in a.entries))


def in_window(a: ExpVec, lo: int, hi: int) -> bool:
    return a.is_zero() or (lo <= a.r_of() and a.l_of() <= hi)


def peel_top_check(multiset, seq) -> dict:
    """Peel the top cuspidal exponent by pairing with the dual of S_t.

    For t the largest index in the decomposition, the sum of d(D S_t, x)
    over the multiset must equal a_t: the top factor contributes 1 per copy
    and everything below vanishes by strong unmixedness.
    """
    if not multiset:
        return {"vacuous": True, "ok": True}
    vec = decompose(multiset, seq)
    t = vec.l_of()
    top_dual = dual_point(seq.info, seq.label(t), 1)
    total = sum(invariants.d_fund(seq.info, top_dual, x) for x in multiset)
    return {
        "vacuous": False,
        "top_index": t,
        "expected": vec[t],
        "pairing_sum": total,
        "ok": total == vec[t],
    }


# ---------------------------------------------------------------------------
# JSON forms


def expvec_to_json(a: ExpVec) -> dict:
    return {"support": {str(k): v for k, v in a.entries}}


def expvec_from_json(doc: str | dict) -> ExpVec:
    data = json.loads(doc) if isinstance(doc, str) else doc
    return ExpVec.from_dict({int(k): int(v) for k, v in data["support"].items()})


def multiset_to_json(points) -> list:
    return [[p.node, p.power] for p in sorted(points)]


def multiset_from_json(doc: str | list) -> list[SigmaPoint]:
    data = json.loads(doc) if isinstance(doc, str) else doc
    return [SigmaPoint(int(i), int(p)) for i, p in data]
