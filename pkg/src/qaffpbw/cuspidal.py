"""Affine cuspidal sequences from a duality datum and a reduced word of w0.

Inside the fundamental window 1..l the k-th cuspidal label is built by the
minimal-pair recursion over the convex order of the word

    C_k = C_a * C_b        for a minimal pair (a, b) of beta_k,
    C_k = Letter(i_k)      when beta_k is simple,

with letters substituted by the members of the datum and * evaluated as a
head.  Outside the window the sequence extends by the dual-shift law
S_{k+l} = D(S_k).
"""

from __future__ import annotations

import threading
from dataclasses import dataclass, field

from . import duality as duality_mod
from . import invariants, modexpr
from .affine import denom_zeros, dual_point
from .duality import DualityDatum
from .modexpr import Expr, Fund, FusionTable, Verdict
from .rootsys import RootSystem, RootSystemError, Word

__all__ = [
    "Letter",
    "Conv",
    "CuspExpr",
    "cuspidal_expr",
    "CuspidalSeq",
    "FundamentalCuspidalSeq",
    "verify_cuspidal_axioms",
    "refl_shift_check",
]


@dataclass(frozen=True)
class Letter:
    node: int

    def __repr__(self) -> str:
        return f"L{self.node}"


@dataclass(frozen=True)
class Conv:
    left: "CuspExpr"
    right: "CuspExpr"

    def __repr__(self) -> str:
        return f"hd({self.left!r}, {self.right!r})"


CuspExpr = Letter | Conv


def cuspidal_expr(rs: RootSystem, word: Word, k: int) -> CuspExpr:
    """Formal letter expression of the k-th cuspidal module, 1 <= k <= l."""
    if not rs.spells_longest(word):
        raise RootSystemError("word does not spell the longest element")
    if not 1 <= k <= len(word):
        raise RootSystemError(f"index {k} outside 1..{len(word)}")
    betas = rs.beta_sequence(word)
    if sum(betas[k - 1]) == 1:
        # beta_k = alpha_j: the cuspidal label is the letter module L(j)
        return Letter(betas[k - 1].index(1) + 1)
    pairs = rs.minimal_pairs(word, k)
    a, b = min(pairs)  # deterministic tie-break: smallest left index
    return Conv(cuspidal_expr(rs, word, a), cuspidal_expr(rs, word, b))


def _word_root_system(datum: DualityDatum) -> RootSystem:
    components = duality_mod.classify_cartan(duality_mod.induced_cartan(datum))
    if len(components) != 1:
        raise duality_mod.DualityError(
            f"induced Cartan matrix splits as {components}; cuspidal sequences "
            "need a connected type"
        )
    letter, rank = components[0]
    rs = RootSystem(letter, rank)
    if rs.cartan_matrix != duality_mod.induced_cartan(datum):
        raise duality_mod.DualityError(
            "induced Cartan matrix is not in the standard node numbering"
        )
    return rs


@dataclass
class CuspidalSeq:
    """Lazy, memoized cuspidal sequence S_k for k in Z."""

    datum: DualityDatum
    word: Word
    facts: FusionTable | None = None
    _memo: dict[int, Expr] = field(default_factory=dict, repr=False)
    _lock: threading.Lock = field(default_factory=threading.Lock, repr=False)

    def __post_init__(self) -> None:
        self.word = tuple(self.word)
        self.rs = _word_root_system(self.datum)
        if not self.rs.spells_longest(self.word):
            raise RootSystemError(
                f"word {self.word} does not spell w0 of "
                f"{self.rs.type_letter}{self.rs.rank}"
            )
        self.ell = len(self.word)

    @property
    def info(self):
        return self.datum.info

    def _evaluate(self, expr: CuspExpr) -> Expr:
        if isinstance(expr, Letter):
            return self.datum.member(expr.node)
        left = self._evaluate(expr.left)
        right = self._evaluate(expr.right)
        return modexpr.head(self.info, [left, right], self.facts)

    def materialize(self, k: int) -> Expr:
        with self._lock:
            hit = self._memo.get(k)
        if hit is not None:
            return hit
        shift, k0 = divmod(k - 1, self.ell)
        k0 += 1
        if shift == 0:
            value = self._evaluate(cuspidal_expr(self.rs, self.word, k0))
        else:
            value = modexpr.dual(self.info, self.materialize(k0), shift, self.facts)
        with self._lock:
            self._memo[k] = value
        return value

    def range(self, lo: int, hi: int) -> list[Expr]:
        return [self.materialize(k) for k in range(lo, hi + 1)]


class FundamentalCuspidalSeq:
    """Cuspidal labels of a Q-datum along an adapted word.

    Here every S_k is a fundamental label, computed directly from the label
    map of the Q-datum: S_{s + m*l} is the m-th dual shift of the image of
    beta_s.  The labels cover sigma0 bijectively, which makes the sequence
    invertible (the basis of the exponent-vector parametrization).
    """

    def __init__(self, info, q, word: Word, facts: FusionTable | None = None):
        from . import qdata

        self.info = info
        self.q = q
        self.word = tuple(word)
        self.facts = facts
        if not qdata.is_adapted(q, self.word):
            raise duality_mod.DualityError(
                f"word {word} is not adapted to the Q-datum"
            )
        self.rs = q.root_system
        self.ell = len(self.word)
        mapping = qdata.phi(q, self.word)
        betas = self.rs.beta_sequence(self.word)
        self._base = [mapping[b] for b in betas]  # S_1 .. S_l

    def label(self, k: int):
        shift, k0 = divmod(k - 1, self.ell)
        return dual_point(self.info, self._base[k0], shift)

    def materialize(self, k: int) -> Expr:
        return Fund(self.label(k))

    def range(self, lo: int, hi: int) -> list[Expr]:
        return [self.materialize(k) for k in range(lo, hi + 1)]

    def index_of(self, point) -> int:
        """The unique k with S_k at the given label; sigma0 bijectivity."""
        h = self.info.dual_shift_exponent
        if h is None:
            raise duality_mod.DualityError(
                f"{self.info.name}: labels do not form a single (-q)-lattice"
            )
        hits = []
        for s, base in enumerate(self._base, start=1):
            delta = point.power - base.power
            if delta % h:
                continue
            m = delta // h
            if dual_point(self.info, base, m) == point:
                hits.append(s + m * self.ell)
        if len(hits) != 1:
            raise duality_mod.DualityError(
                f"label {point} is covered {len(hits)} times; "
                "expected a bijective cuspidal sequence"
            )
        return hits[0]

    def general_sequence(self) -> CuspidalSeq:
        """The same data through the minimal-pair construction."""
        datum = duality_mod.from_q_datum(self.info, self.q)
        return CuspidalSeq(datum, self.word, self.facts)


def verify_cuspidal_axioms(seq, lo: int, hi: int) -> dict:
    """Exhaustive label checks on a window: strong unmixedness for a > b,
    the root-module pattern, and denominator nonvanishing down the order."""
    info = seq.info
    labels = {k: seq.materialize(k) for k in range(lo, hi + 1)}
    points = {
        k: v.point if isinstance(v, Fund) else None for k, v in labels.items()
    }
    report = {
        "window": (lo, hi),
        "root_module": {},
        "strongly_unmixed": {},
        "denominator_nonvanishing": {},
    }
    for k, x in points.items():
        report["root_module"][k] = (
            "unknown" if x is None else
            "ok" if invariants.is_root_module_pattern(info, x) else "fail"
        )
    for a in range(lo, hi + 1):
        for b in range(lo, a):
            x, y = points[a], points[b]
            if x is None or y is None:
                report["strongly_unmixed"][(a, b)] = "unknown"
                continue
            bound = invariants.shift_bound(info, x, y) + 1
            bad = next(
                (
                    m
                    for m in range(1, bound + 1)
                    if invariants.d_fund(info, dual_point(info, x, m), y) != 0
                ),
                None,
            )
            report["strongly_unmixed"][(a, b)] = (
                "ok" if bad is None else f"fail(m={bad})"
            )
            vanishes = y.power - x.power in denom_zeros(info, x.node, y.node)
            report["denominator_nonvanishing"][(a, b)] = (
                "fail" if vanishes else "ok"
            )
    values = (
        list(report["root_module"].values())
        + list(report["strongly_unmixed"].values())
        + list(report["denominator_nonvanishing"].values())
    )
    report["overall"] = (
        "fail"
        if any(str(v).startswith("fail") for v in values)
        else "unknown" if any(v == "unknown" for v in values) else "pass"
    )
    return report


def refl_shift_check(
    datum: DualityDatum,
    word: Word,
    facts: FusionTable | None = None,
    window: tuple[int, int] | None = None,
) -> tuple[bool, list]:
    """Check S'_k = S_{k+1} for the reflected datum and the rotated word."""
    seq = CuspidalSeq(datum, word, facts)
    ell = seq.ell
    rotated = tuple(word[1:]) + (seq.rs.extend_letter(word, ell + 1),)
    reflected = duality_mod.reflect(datum, word[0], facts)
    shifted = CuspidalSeq(reflected, rotated, facts)
    lo, hi = window if window is not None else (1 - ell, 2 * ell)
    failures = []
    for k in range(lo, hi + 1):
        verdict = modexpr.equal(
            datum.info, shifted.materialize(k), seq.materialize(k + 1), facts
        )
        if verdict is not Verdict.EQUAL:
            failures.append((k, verdict.value, shifted.materialize(k), seq.materialize(k + 1)))
    return not failures, failures
