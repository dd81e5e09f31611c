"""Duality data, axiom checking, induced Cartan matrices, and reflections.

A duality datum is a finite family {R_i} of module labels.  For a strong
datum the labels must satisfy, over every dual shift k,

    d(R_i, D^k R_j) = -delta(k = 0) c_{ij}   (i != j)
    d(R_i, D^k R_i) =  delta(k = +-1)        (root-module pattern)

with (c_ij) a simply-laced finite Cartan matrix.  These are decidable
exactly when the members are fundamental labels; pairs involving compound
labels come back as "unknown".

Completeness is not decidable from labels: it is a provenance flag, seeded
by construction from a Q-datum and transported along reflections.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, replace
from typing import Mapping

from . import invariants, modexpr
from ._linalg import leading_minors_positive
from .affine import AffineTypeInfo, NoProviderError, SigmaPoint, dual_point, type_info
from .modexpr import Expr, Fund, FusionTable, Verdict
from .qdata import QDatum, fundamental_labels

__all__ = [
    "DualityDatum",
    "DualityError",
    "StrongReport",
    "check_strong",
    "induced_cartan",
    "classify_cartan",
    "reflect",
    "reflect_inv",
    "from_q_datum",
    "datum_to_json",
    "datum_from_json",
]


class DualityError(ValueError):
    pass


@dataclass(frozen=True)
class DualityDatum:
    info: AffineTypeInfo
    members: tuple[Expr, ...]  # R_1, ..., R_n
    provenance: str = "user"
    complete: bool | None = None  # None: unknown
    strength: str = "unknown"  # verified | inherited | unknown | failed
    cartan: tuple[tuple[int, ...], ...] | None = None

    @property
    def size(self) -> int:
        return len(self.members)

    def member(self, i: int) -> Expr:
        return self.members[i - 1]


@dataclass(frozen=True)
class StrongReport:
    overall: str  # pass | fail | unknown
    pair_verdicts: tuple[tuple[tuple[int, int], str], ...]
    root_verdicts: tuple[tuple[int, str], ...]
    cartan: tuple[tuple[int, ...], ...] | None

    def verdict(self, i: int, j: int) -> str:
        return dict(self.pair_verdicts)[(i, j)]


def _fund_point(e: Expr) -> SigmaPoint | None:
    return e.point if isinstance(e, Fund) else None


def check_strong(datum: DualityDatum) -> StrongReport:
    """Exhaustive label-level verification of the strong-datum axioms."""
    info = datum.info
    n = datum.size
    points = [_fund_point(m) for m in datum.members]

    root_verdicts = []
    for i in range(1, n + 1):
        x = points[i - 1]
        if x is None:
            root_verdicts.append((i, "unknown"))
        elif invariants.is_root_module_pattern(info, x):
            root_verdicts.append((i, "ok"))
        else:
            root_verdicts.append((i, "fail"))

    pair_verdicts = []
    cartan_ok = True
    matrix = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i == j:
                continue
            x, y = points[i - 1], points[j - 1]
            if x is None or y is None:
                pair_verdicts.append(((i, j), "unknown"))
                cartan_ok = False
                continue
            matrix[i - 1][j - 1] = -invariants.d_fund(info, x, y)
            bound = invariants.shift_bound(info, x, y) + 1
            bad = next(
                (
                    k
                    for k in range(-bound, bound + 1)
                    if k != 0
                    and invariants.d_fund(info, x, dual_point(info, y, k)) != 0
                ),
                None,
            )
            if bad is not None:
                pair_verdicts.append(((i, j), f"fail(k={bad})"))
            else:
                pair_verdicts.append(((i, j), "ok"))

    verdicts = [v for _, v in pair_verdicts] + [v for _, v in root_verdicts]
    cartan = None
    if cartan_ok:
        try:
            cartan = _validated_cartan(matrix)
        except DualityError:
            cartan = None
    if any(v.startswith("fail") for v in verdicts) or (cartan_ok and cartan is None):
        overall = "fail"
    elif any(v == "unknown" for v in verdicts):
        overall = "unknown"
    else:
        overall = "pass"
    return StrongReport(
        overall=overall,
        pair_verdicts=tuple(pair_verdicts),
        root_verdicts=tuple(root_verdicts),
        cartan=cartan,
    )


def _validated_cartan(matrix) -> tuple[tuple[int, ...], ...]:
    n = len(matrix)
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if matrix[i][j] != matrix[j][i]:
                raise DualityError("induced pairing is not symmetric")
            if matrix[i][j] not in (0, -1):
                raise DualityError(
                    f"induced pairing {matrix[i][j]} at {(i + 1, j + 1)} is not "
                    "simply laced"
                )
    if not leading_minors_positive(matrix):
        raise DualityError("induced matrix is not positive definite")
    return tuple(tuple(row) for row in matrix)


def induced_cartan(datum: DualityDatum) -> tuple[tuple[int, ...], ...]:
    """Matrix with off-diagonal -d(R_i, R_j); needs exact pairwise values."""
    if datum.cartan is not None:
        return datum.cartan
    points = [_fund_point(m) for m in datum.members]
    if any(x is None for x in points):
        raise DualityError(
            "pairwise d is not exact for compound members; no cached matrix"
        )
    n = datum.size
    matrix = [
        [
            2 if i == j else -invariants.d_fund(datum.info, points[i], points[j])
            for j in range(n)
        ]
        for i in range(n)
    ]
    return _validated_cartan(matrix)


def classify_cartan(matrix) -> tuple[tuple[str, int], ...]:
    """Connected components of a simply-laced finite Cartan matrix, by type."""
    n = len(matrix)
    seen: set[int] = set()
    components = []
    for start in range(n):
        if start in seen:
            continue
        comp = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for w in range(n):
                if w not in comp and matrix[v][w] == -1:
                    comp.add(w)
                    stack.append(w)
        seen |= comp
        components.append(sorted(comp))
    out = []
    for comp in components:
        out.append(_component_type(matrix, comp))
    return tuple(sorted(out))


def _component_type(matrix, nodes) -> tuple[str, int]:
    size = len(nodes)
    degree = {
        v: sum(1 for w in nodes if w != v and matrix[v][w] == -1) for v in nodes
    }
    branch = [v for v in nodes if degree[v] == 3]
    if any(degree[v] > 3 for v in nodes) or len(branch) > 1:
        raise DualityError("not a finite simply-laced diagram")
    if not branch:
        return ("A", size)
    legs = []
    center = branch[0]
    for start in (w for w in nodes if matrix[center][w] == -1 and w != center):
        length = 1
        prev, cur = center, start
        while degree[cur] == 2:
            nxt = next(w for w in nodes if matrix[cur][w] == -1 and w != prev)
            prev, cur = cur, nxt
            length += 1
        legs.append(length)
    legs.sort()
    if legs[0] == 1 and legs[1] == 1:
        return ("D", size)
    if legs == [1, 2, 2]:
        return ("E", 6)
    if legs == [1, 2, 3]:
        return ("E", 7)
    if legs == [1, 2, 4]:
        return ("E", 8)
    raise DualityError(f"leg lengths {legs} are not of finite type")


def _reflect_members(
    datum: DualityDatum,
    k: int,
    inverse: bool,
    facts: FusionTable | None,
) -> tuple[Expr, ...]:
    cartan = induced_cartan(datum)
    info = datum.info
    members = []
    for i in range(1, datum.size + 1):
        r = datum.member(i)
        if i == k:
            members.append(modexpr.dual(info, r, -1 if inverse else 1, facts))
        elif cartan[i - 1][k - 1] == -1:
            rk = datum.member(k)
            order = [r, rk] if inverse else [rk, r]
            members.append(modexpr.head(info, order, facts))
        else:
            members.append(r)
    return tuple(members)


def _reflected(
    datum: DualityDatum, k: int, inverse: bool, facts: FusionTable | None
) -> DualityDatum:
    if not 1 <= k <= datum.size:
        raise DualityError(f"node {k} out of range")
    members = _reflect_members(datum, k, inverse, facts)
    tag = f"S{k}^-1" if inverse else f"S{k}"
    new = DualityDatum(
        info=datum.info,
        members=members,
        provenance=f"{tag}({datum.provenance})",
        complete=datum.complete,
        strength="unknown",
        cartan=induced_cartan(datum),
    )
    report = check_strong(new)
    if report.overall == "pass":
        strength = "verified"
    elif report.overall == "unknown" and datum.strength in ("verified", "inherited"):
        strength = "inherited"
    elif report.overall == "fail" and datum.strength in ("verified", "inherited"):
        raise DualityError(
            "reflection of a strong datum failed the label checks; "
            "the input flags were wrong"
        )
    else:
        strength = "unknown"
    return replace(new, strength=strength)


def reflect(
    datum: DualityDatum, k: int, facts: FusionTable | None = None
) -> DualityDatum:
    return _reflected(datum, k, inverse=False, facts=facts)


def reflect_inv(
    datum: DualityDatum, k: int, facts: FusionTable | None = None
) -> DualityDatum:
    return _reflected(datum, k, inverse=True, facts=facts)


def from_q_datum(info: AffineTypeInfo, q: QDatum) -> DualityDatum:
    """The canonical complete datum with R_i at phi_Q(alpha_i).

    Supported for untwisted ADE affine types, where the node map from the
    associated finite diagram to I0 is the identity.  Everywhere else that
    map folds the diagram and is out of scope, so the construction refuses
    instead of guessing.
    """
    if info.twist != 1 or info.letter not in ("A", "D", "E"):
        raise DualityError(
            f"{info.name}: the node map into I0 is not the identity; "
            "Q-datum construction is unsupported for this type"
        )
    if (q.type_letter, q.rank) != info.fin_type:
        raise DualityError(
            f"Q-datum type {q.type_letter}{q.rank} does not match the "
            f"associated finite type {info.fin_type} of {info.name}"
        )
    labels = fundamental_labels(q)
    members = tuple(Fund(labels[i]) for i in range(1, q.rank + 1))
    datum = DualityDatum(
        info=info,
        members=members,
        provenance="from-Q",
        complete=True,
        strength="unknown",
    )
    try:
        report = check_strong(datum)
    except NoProviderError:
        # registered metadata-only type: the labels exist, the axioms are
        # not checkable without a denominator table
        return datum
    strength = "verified" if report.overall == "pass" else "unknown"
    return replace(datum, strength=strength, cartan=report.cartan)


def braid_check(
    datum: DualityDatum, i: int, j: int, facts: FusionTable | None = None
) -> Verdict:
    """Experimental property check of the braid relation between S_i, S_j.

    Compares the two sides member-wise with the sound comparator; this is a
    test of the data, never an assumed rewrite.
    """
    cartan = induced_cartan(datum)
    if cartan[i - 1][j - 1] == 0:
        lhs = reflect(reflect(datum, i, facts), j, facts)
        rhs = reflect(reflect(datum, j, facts), i, facts)
    else:
        lhs = reflect(reflect(reflect(datum, i, facts), j, facts), i, facts)
        rhs = reflect(reflect(reflect(datum, j, facts), i, facts), j, facts)
    return datum_equal(lhs, rhs, facts)


def datum_equal(
    a: DualityDatum, b: DualityDatum, facts: FusionTable | None = None
) -> Verdict:
    """Member-wise expression comparison."""
    if a.info.name != b.info.name or a.size != b.size:
        return Verdict.DISTINCT
    verdicts = [
        modexpr.equal(a.info, x, y, facts) for x, y in zip(a.members, b.members)
    ]
    if all(v is Verdict.EQUAL for v in verdicts):
        return Verdict.EQUAL
    if any(v is Verdict.DISTINCT for v in verdicts):
        return Verdict.DISTINCT
    return Verdict.UNKNOWN


# ---------------------------------------------------------------------------
# JSON forms


def datum_to_json(datum: DualityDatum) -> dict:
    return {
        "affine": datum.info.name,
        "members": {
            str(i): modexpr.expr_to_json(datum.member(i))
            for i in range(1, datum.size + 1)
        },
        "provenance": datum.provenance,
    }


def datum_from_json(doc: str | dict | Mapping) -> DualityDatum:
    data = json.loads(doc) if isinstance(doc, str) else doc
    info = type_info(data["affine"])
    raw = data["members"]
    members = tuple(
        modexpr.expr_from_json(raw[str(i)]) for i in range(1, len(raw) + 1)
    )
    provenance = data.get("provenance", "user")
    complete = True if provenance == "from-Q" else None
    return DualityDatum(
        info=info, members=members, provenance=provenance, complete=complete
    )
