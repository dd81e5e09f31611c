"""Symbolic module expressions and their rewrite system.

An expression denotes a simple module label built from fundamental labels:

  * ``One``            the trivial module
  * ``Fund(x)``        the fundamental module at the label x
  * ``Head(f1,...,fr)`` the iterated head ((f1 * f2) * f3) ... * fr, where
                        ``*`` takes the head of the tensor product of two
                        factors (left-nested reading)
  * ``Dual(k, e)``     the k-th dual of e, kept symbolic when it cannot be
                        pushed to the leaves

Rewriting is sound: every rule preserves the isomorphism class of the
denoted simple module.  The rules are

  (R1) cancellations (L * X) * DL = X and their variants, with L a
       fundamental leaf so DL is computable,
  (R2) reordering of adjacent commuting fundamental factors (d = 0), made
       deterministic by taking the lexicographically least representative
       of the commutation class,
  (R3) fusion facts: verified identities Head[fund, fund] = Fund supplied
       as data, applied where the grouping is exact,
  (R4) dropping trivial factors.

Nested heads in leading position flatten exactly under the left-nested
reading; a dual only distributes over a head whose factor list is certified
normal (pairwise strongly unmixed fundamentals, repeats allowed).
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from enum import Enum
from random import Random
from typing import Iterable, Sequence

from . import affine, invariants
from .affine import AffineTypeInfo, SigmaPoint, dual_point

__all__ = [
    "One",
    "Fund",
    "Dual",
    "Head",
    "Expr",
    "FusionTable",
    "Verdict",
    "normalize",
    "head",
    "dual",
    "equal",
    "expr_to_json",
    "expr_from_json",
]


@dataclass(frozen=True)
class _OneType:
    def __repr__(self) -> str:
        return "One"


One = _OneType()


@dataclass(frozen=True)
class Fund:
    point: SigmaPoint

    def __repr__(self) -> str:
        return f"Fund{tuple(self.point)}"


@dataclass(frozen=True)
class Dual:
    shift: int
    inner: "Expr"

    def __repr__(self) -> str:
        return f"Dual({self.shift}, {self.inner!r})"


@dataclass(frozen=True)
class Head:
    factors: tuple["Expr", ...]

    def __repr__(self) -> str:
        inner = ", ".join(repr(f) for f in self.factors)
        return f"Head[{inner}]"


Expr = _OneType | Fund | Dual | Head


class Verdict(Enum):
    EQUAL = "equal"
    DISTINCT = "distinct"
    UNKNOWN = "unknown"


# ---------------------------------------------------------------------------
# fusion facts


@dataclass(frozen=True)
class FusionFact:
    left: SigmaPoint
    right: SigmaPoint
    result: SigmaPoint
    shift_equivariant: bool = True


class FusionTable:
    """Verified two-factor fusion identities Head[a, b] = Fund(c).

    A shift-equivariant fact holds under any common exponent translation and
    under the dual shift (node stars, same exponent differences).
    """

    def __init__(self, info: AffineTypeInfo, facts: Iterable[FusionFact] = ()):
        self.info = info
        self.facts = tuple(facts)

    def lookup(self, a: SigmaPoint, b: SigmaPoint) -> SigmaPoint | None:
        star = self.info.star
        for fact in self.facts:
            if not fact.shift_equivariant:
                if (a, b) == (fact.left, fact.right):
                    return fact.result
                continue
            if b.power - a.power != fact.right.power - fact.left.power:
                continue
            shift = a.power - fact.left.power
            if (a.node, b.node) == (fact.left.node, fact.right.node):
                return SigmaPoint(fact.result.node, fact.result.power + shift)
            if (a.node, b.node) == (star(fact.left.node), star(fact.right.node)):
                return SigmaPoint(star(fact.result.node), fact.result.power + shift)
        return None

    @classmethod
    def from_json(cls, info: AffineTypeInfo, doc: str | dict) -> "FusionTable":
        data = json.loads(doc) if isinstance(doc, str) else doc
        if data.get("type") and data["type"] != info.name:
            raise ValueError(
                f"fusion table is for {data['type']}, not {info.name}"
            )
        facts = [
            FusionFact(
                left=SigmaPoint(*entry["head"][0]),
                right=SigmaPoint(*entry["head"][1]),
                result=SigmaPoint(*entry["eq"]),
                shift_equivariant=bool(entry.get("shift_equivariant", True)),
            )
            for entry in data["facts"]
        ]
        return cls(info, facts)

    @classmethod
    def builtin(cls, info: AffineTypeInfo) -> "FusionTable":
        """Facts shipped by default: the A2^1 family V(1) * V(1)_2 = V(2)_1."""
        if info.name == "A2^1":
            return cls(
                info,
                [FusionFact(SigmaPoint(1, 0), SigmaPoint(1, 2), SigmaPoint(2, 1))],
            )
        return cls(info, ())


# ---------------------------------------------------------------------------
# certification


def _is_dual_pair(info: AffineTypeInfo, first: Expr, second: Expr) -> bool:
    return (
        isinstance(first, Fund)
        and isinstance(second, Fund)
        and dual_point(info, first.point, 1) == second.point
    )


def certified_normal(info: AffineTypeInfo, factors: Sequence[Expr]) -> bool:
    """A factor list is certified normal when all factors are fundamental and
    every ordered pair of distinct labels is strongly unmixed."""
    if not all(isinstance(f, Fund) for f in factors):
        return False
    points = [f.point for f in factors]  # type: ignore[union-attr]
    for a in range(len(points)):
        for b in range(a + 1, len(points)):
            if points[a] == points[b]:
                continue
            bound = invariants.shift_bound(info, points[a], points[b]) + 1
            for m in range(1, bound + 1):
                if invariants.d_fund(
                    info, dual_point(info, points[a], m), points[b]
                ):
                    return False
    return True


def _commute(info: AffineTypeInfo, a: Expr, b: Expr) -> bool:
    return (
        isinstance(a, Fund)
        and isinstance(b, Fund)
        and invariants.d_fund(info, a.point, b.point) == 0
    )


def _sort_key(e: Expr):
    assert isinstance(e, Fund)
    return (e.point.node, e.point.power)


def _trace_canonical(info: AffineTypeInfo, factors: list[Expr]) -> list[Expr]:
    """Lexicographically least representative of the commutation class.

    Only adjacent fundamental factors with d = 0 may swap; everything else is
    a blocker.  Greedy choice of the least movable-to-front element yields a
    schedule-independent normal form.
    """
    rest = list(factors)
    out: list[Expr] = []
    while rest:
        movable = [
            idx
            for idx in range(len(rest))
            if all(_commute(info, rest[j], rest[idx]) for j in range(idx))
        ]
        fund_movable = [idx for idx in movable if isinstance(rest[idx], Fund)]
        best = min(fund_movable, key=lambda idx: _sort_key(rest[idx])) if fund_movable else 0
        out.append(rest[best])
        del rest[best]
    return out


# ---------------------------------------------------------------------------
# rewriting


def _splice(factors: Sequence[Expr]) -> list[Expr] | None:
    """Flatten a leading nested head and drop trivial factors (exact steps)."""
    out: list[Expr] = []
    changed = False
    for pos, f in enumerate(factors):
        if f is One:
            changed = True
            continue
        if isinstance(f, Head) and not out and pos == 0:
            out.extend(f.factors)
            changed = True
            continue
        out.append(f)
    return out if changed else None


def _rule_instances(
    info: AffineTypeInfo, factors: list[Expr], facts: FusionTable | None
) -> list[tuple[str, tuple]]:
    """All applicable size-reducing rewrite instances on a factor list."""
    found: list[tuple[str, tuple]] = []
    n = len(factors)
    # cancel an adjacent pair (L, DL); sound when every earlier factor is a
    # fundamental commuting with L, since then the triple regroups
    for i in range(n - 1):
        if _is_dual_pair(info, factors[i], factors[i + 1]):
            left_ok = all(
                isinstance(factors[j], Fund)
                and invariants.d_fund(info, factors[j].point, factors[i].point) == 0
                for j in range(i)
            )
            if left_ok:
                found.append(("cancel_pair", (i,)))
    # (L * X) * DL = X; exact for a single middle factor, and for a longer
    # middle when the prefix list is certified normal so it regroups
    if n == 3 and _is_dual_pair(info, factors[0], factors[-1]):
        found.append(("cancel_outer", ()))
    elif (
        n > 3
        and _is_dual_pair(info, factors[0], factors[-1])
        and certified_normal(info, factors[:-1])
    ):
        found.append(("cancel_outer", ()))
    # right-grouped variant on a binary head: L * (X * DL) = X
    if (
        n == 2
        and isinstance(factors[0], Fund)
        and isinstance(factors[1], Head)
        and len(factors[1].factors) == 2
    ):
        inner_x, inner_last = factors[1].factors
        if isinstance(inner_last, Fund) and (
            dual_point(info, factors[0].point, 1) == inner_last.point
        ):
            found.append(("cancel_right_grouped", (inner_x,)))
    # fusion facts on the leading pair (exact grouping)
    if facts is not None and n >= 2:
        a, b = factors[0], factors[1]
        if isinstance(a, Fund) and isinstance(b, Fund):
            hit = facts.lookup(a.point, b.point)
            if hit is not None:
                found.append(("fuse_front", (hit,)))
    return found


def _apply_rule(
    factors: list[Expr], rule: str, payload: tuple
) -> list[Expr]:
    if rule == "cancel_pair":
        (i,) = payload
        return factors[:i] + factors[i + 2 :]
    if rule == "cancel_outer":
        return factors[1:-1]
    if rule == "cancel_right_grouped":
        (inner_x,) = payload
        return [inner_x]
    if rule == "fuse_front":
        (hit,) = payload
        return [Fund(hit)] + factors[2:]
    raise AssertionError(rule)  # pragma: no cover


def _normalize_head(
    info: AffineTypeInfo,
    factors: Sequence[Expr],
    facts: FusionTable | None,
    rng: Random | None,
) -> Expr:
    work = list(factors)
    for _ in range(10_000):
        spliced = _splice(work)
        if spliced is not None:
            work = spliced
            continue
        if not work:
            return One
        if len(work) == 1:
            return work[0]
        instances = _rule_instances(info, work, facts)
        if instances:
            rule, payload = instances[0] if rng is None else rng.choice(instances)
            work = _apply_rule(work, rule, payload)
            continue
        canonical = _trace_canonical(info, work)
        if canonical != work:
            work = canonical
            continue
        return Head(tuple(work))
    raise RuntimeError("rewriting did not terminate")  # pragma: no cover


def normalize(
    info: AffineTypeInfo,
    expr: Expr,
    facts: FusionTable | None = None,
    rng: Random | None = None,
) -> Expr:
    """Normal form of an expression; every step preserves the label."""
    if expr is One or isinstance(expr, Fund):
        return expr
    if isinstance(expr, Head):
        inner = [normalize(info, f, facts, rng) for f in expr.factors]
        return _normalize_head(info, inner, facts, rng)
    if isinstance(expr, Dual):
        body = normalize(info, expr.inner, facts, rng)
        return _push_dual(info, expr.shift, body, facts, rng)
    raise TypeError(f"not an expression: {expr!r}")


def _push_dual(
    info: AffineTypeInfo,
    k: int,
    body: Expr,
    facts: FusionTable | None,
    rng: Random | None,
) -> Expr:
    if k == 0:
        return body
    if body is One:
        return One
    if isinstance(body, Fund):
        return Fund(dual_point(info, body.point, k))
    if isinstance(body, Dual):
        return _push_dual(info, k + body.shift, body.inner, facts, rng)
    assert isinstance(body, Head)
    if certified_normal(info, body.factors):
        shifted = [
            Fund(dual_point(info, f.point, k))  # type: ignore[union-attr]
            for f in body.factors
        ]
        return _normalize_head(info, shifted, facts, rng)
    return Dual(k, body)


def head(
    info: AffineTypeInfo,
    factors: Sequence[Expr],
    facts: FusionTable | None = None,
) -> Expr:
    """Head of the ordered list of factors, rewritten to normal form."""
    return normalize(info, Head(tuple(factors)), facts)


def dual(
    info: AffineTypeInfo,
    expr: Expr,
    k: int,
    facts: FusionTable | None = None,
) -> Expr:
    """The k-th dual, pushed through heads only where that is certified."""
    return normalize(info, Dual(k, expr), facts)


# ---------------------------------------------------------------------------
# equality with a separating invariant


def signed_leaves(expr: Expr, shift: int = 0) -> list[tuple[SigmaPoint, int]]:
    """Leaf labels with the dual shifts applied to them formally.

    The pair (x, k) stands for D^k applied to the fundamental at x; the
    block profile of the expression is the sum of the leaf profiles.
    """
    if expr is One:
        return []
    if isinstance(expr, Fund):
        return [(expr.point, shift)]
    if isinstance(expr, Dual):
        return signed_leaves(expr.inner, shift + expr.shift)
    assert isinstance(expr, Head)
    out: list[tuple[SigmaPoint, int]] = []
    for f in expr.factors:
        out.extend(signed_leaves(f, shift))
    return out


def block_profile(
    info: AffineTypeInfo, expr: Expr, probes: Sequence[SigmaPoint]
) -> tuple[int, ...]:
    """Pairing of the expression against probe fundamentals, additively.

    For any simple subquotient of the denoted tensor word this profile is
    exact, so differing profiles certify non-isomorphic labels.
    """
    values = []
    for probe in probes:
        total = 0
        for point, shift in signed_leaves(expr):
            total += invariants.lambda_inf_fund(
                info, dual_point(info, point, shift), probe
            )
        values.append(total)
    return tuple(values)


def _probe_window(info: AffineTypeInfo, exprs: Sequence[Expr]) -> tuple[SigmaPoint, ...]:
    powers = [0]
    for e in exprs:
        for point, shift in signed_leaves(e):
            powers.append(dual_point(info, point, shift).power)
    h = info.dual_shift_exponent or 1
    pad = affine.max_zero_exponent(info) + 2 * h
    return info.sigma0_points(min(powers) - pad, max(powers) + pad)


def equal(
    info: AffineTypeInfo,
    e1: Expr,
    e2: Expr,
    facts: FusionTable | None = None,
) -> Verdict:
    """Sound three-valued label comparison."""
    n1 = normalize(info, e1, facts)
    n2 = normalize(info, e2, facts)
    if n1 == n2:
        return Verdict.EQUAL
    if isinstance(n1, Fund) and isinstance(n2, Fund):
        return Verdict.DISTINCT
    if (n1 is One) != (n2 is One) and (
        isinstance(n1, Fund) or isinstance(n2, Fund)
    ):
        return Verdict.DISTINCT
    probes = _probe_window(info, (n1, n2))
    if block_profile(info, n1, probes) != block_profile(info, n2, probes):
        return Verdict.DISTINCT
    return Verdict.UNKNOWN


# ---------------------------------------------------------------------------
# JSON forms


def expr_to_json(expr: Expr):
    if expr is One:
        return {"one": True}
    if isinstance(expr, Fund):
        return {"fund": [expr.point.node, expr.point.power]}
    if isinstance(expr, Dual):
        return {"dual": {"k": expr.shift, "of": expr_to_json(expr.inner)}}
    assert isinstance(expr, Head)
    return {"head": [expr_to_json(f) for f in expr.factors]}


def expr_from_json(doc) -> Expr:
    if "one" in doc:
        return One
    if "fund" in doc:
        i, p = doc["fund"]
        return Fund(SigmaPoint(int(i), int(p)))
    if "dual" in doc:
        return Dual(int(doc["dual"]["k"]), expr_from_json(doc["dual"]["of"]))
    if "head" in doc:
        entries = doc["head"]
        factors = tuple(
            expr_from_json(f) if isinstance(f, dict) else Fund(SigmaPoint(*f))
            for f in entries
        )
        return Head(factors)
    raise ValueError(f"not an expression document: {doc!r}")
