"""Registry of affine types with their label-level data.

Each affine type carries:

  * the finite type of the associated simply-laced root system (the type
    every complete duality datum must induce),
  * the involution ``i -> i*`` on the classical index set I0 (from the
    longest element of the finite subalgebra spanned by I0),
  * the dual-shift exponent ``h`` with ``p* = (-q)^h``, whenever the
    constant ``p* = (-1)^{<rho_v, delta>} q^{<c, rho>}`` is an integer power
    of ``-q``; the two exponents are computed exactly as the mark and comark
    sums of the affine Cartan matrix,
  * an R-matrix denominator table (zero multisets), built in for A_n^(1)
    and pluggable from JSON elsewhere.

Spectral parameters are restricted to integer powers of ``-q``; a label is
the pair ``SigmaPoint(node, power)`` standing for ``V(varpi_node)`` at
``(-q)^power``.  The connected component sigma0 is fixed to contain (1, 0).
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Iterable, Mapping, NamedTuple

from . import rootsys
from ._linalg import kernel_primitive

__all__ = [
    "SigmaPoint",
    "AffineTypeInfo",
    "AffineTypeError",
    "NoProviderError",
    "type_info",
    "dual_point",
    "denom_zeros",
    "sigma_quiver",
    "register_denominator_table",
    "load_denominator_json",
    "registered_names",
]


class AffineTypeError(ValueError):
    pass


class NoProviderError(AffineTypeError):
    """No denominator data (or no integral dual shift) for this type."""


class SigmaPoint(NamedTuple):
    node: int
    power: int

    def __str__(self) -> str:  # pragma: no cover - cosmetic
        return f"({self.node},{self.power})"


# ---------------------------------------------------------------------------
# affine Cartan matrices (generalized, nodes 0..rank)

Edge = tuple[int, int, int, int]  # (i, j, a_ij, a_ji)


def _chain(lo: int, hi: int) -> list[Edge]:
    return [(i, i + 1, -1, -1) for i in range(lo, hi)]


def _affine_edges(letter: str, twist: int, sub: int) -> tuple[list[Edge], int]:
    """Edge data of the affine Dynkin diagram and the classical rank."""
    if twist == 1:
        if letter == "A":
            if sub == 1:
                return [(0, 1, -2, -2)], 1
            return _chain(0, sub) + [(sub, 0, -1, -1)], sub
        if letter == "B":
            if sub == 2:
                # 0 => 2 <= 1, the short middle node is 2
                return [(0, 2, -1, -2), (1, 2, -1, -2)], 2
            if sub < 2:
                raise AffineTypeError("B_n^(1) needs n >= 2")
            return (
                [(0, 2, -1, -1)]
                + _chain(1, sub - 1)
                + [(sub - 1, sub, -1, -2)]
            ), sub
        if letter == "C":
            if sub < 3:
                raise AffineTypeError("C_n^(1) needs n >= 3")
            return (
                [(0, 1, -1, -2)]
                + _chain(1, sub - 1)
                + [(sub - 1, sub, -2, -1)]
            ), sub
        if letter == "D":
            if sub < 4:
                raise AffineTypeError("D_n^(1) needs n >= 4")
            return (
                [(0, 2, -1, -1)]
                + _chain(1, sub - 2)
                + [(sub - 2, sub - 1, -1, -1), (sub - 2, sub, -1, -1)]
            ), sub
        if letter == "E":
            if sub not in (6, 7, 8):
                raise AffineTypeError("E_n^(1) needs n in {6,7,8}")
            finite = [(i, j, -1, -1) for i, j in rootsys.dynkin_edges("E", sub)]
            attach = {6: 2, 7: 1, 8: 8}[sub]
            return finite + [(0, attach, -1, -1)], sub
        if letter == "F":
            if sub != 4:
                raise AffineTypeError("F_4^(1) needs n = 4")
            return [
                (0, 1, -1, -1),
                (1, 2, -1, -1),
                (2, 3, -1, -2),
                (3, 4, -1, -1),
            ], 4
        if letter == "G":
            if sub != 2:
                raise AffineTypeError("G_2^(1) needs n = 2")
            # Bourbaki G2: node 1 short, node 2 long; 0 attaches to the long node
            return [(0, 2, -1, -1), (1, 2, -3, -1)], 2
    if twist == 2:
        if letter == "A" and sub % 2 == 0:
            n = sub // 2
            if n < 1:
                raise AffineTypeError("A_2n^(2) needs n >= 1")
            if n == 1:
                return [(0, 1, -4, -1)], 1
            return (
                [(0, 1, -2, -1)]
                + _chain(1, n - 1)
                + [(n - 1, n, -2, -1)]
            ), n
        if letter == "A" and sub % 2 == 1:
            n = (sub + 1) // 2
            if n < 2:
                raise AffineTypeError("A_{2n-1}^(2) needs n >= 2")
            if n == 2:
                # A_3^(2) with the middle node numbered 2
                return [(0, 2, -2, -1), (2, 1, -1, -2)], 2
            return (
                [(0, 2, -1, -1)]
                + _chain(1, n - 1)
                + [(n - 1, n, -2, -1)]
            ), n
        if letter == "D":
            n = sub - 1
            if n < 3:
                raise AffineTypeError("D_{n+1}^(2) needs n >= 3")
            return (
                [(0, 1, -2, -1)]
                + _chain(1, n - 1)
                + [(n - 1, n, -1, -2)]
            ), n
        if letter == "E":
            if sub != 6:
                raise AffineTypeError("E_6^(2) needs subscript 6")
            return [
                (0, 1, -1, -1),
                (1, 2, -1, -1),
                (2, 3, -2, -1),
                (3, 4, -1, -1),
            ], 4
    if twist == 3:
        if letter == "D" and sub == 4:
            return [(0, 1, -1, -1), (1, 2, -3, -1)], 2
        raise AffineTypeError("the only registered triple twist is D_4^(3)")
    raise AffineTypeError(f"unknown affine type {letter}{sub}^({twist})")


def _gcm(edges: list[Edge], size: int) -> list[list[int]]:
    mat = [[2 if i == j else 0 for j in range(size)] for i in range(size)]
    for i, j, aij, aji in edges:
        mat[i][j] = aij
        mat[j][i] = aji
    return mat


# finite type of the associated simply-laced root system, per affine family
_FIN_TYPE: dict[tuple[str, int], Callable[[int], tuple[str, int]]] = {
    ("A", 1): lambda n: ("A", n),
    ("B", 1): lambda n: ("A", 2 * n - 1),
    ("C", 1): lambda n: ("D", n + 1),
    ("D", 1): lambda n: ("D", n),
    ("E", 1): lambda n: ("E", n),
    ("F", 1): lambda n: ("E", 6),
    ("G", 1): lambda n: ("D", 4),
    ("A", 2): lambda sub: ("A", sub),  # keyed on the subscript, not the rank
    ("D", 2): lambda sub: ("D", sub),
    ("E", 2): lambda sub: ("E", 6),
    ("D", 3): lambda sub: ("D", 4),
}


@dataclass(frozen=True)
class AffineTypeInfo:
    name: str
    letter: str
    twist: int
    subscript: int
    rank: int  # size of I0
    fin_type: tuple[str, int]
    marks_sum: int  # <rho_v, delta>
    comarks_sum: int  # <c, rho>
    star_map: tuple[int, ...]  # star_map[i-1] = i* on I0
    sigma_parity: Callable[[int, int], bool] | None = field(compare=False)

    @property
    def dual_shift_exponent(self) -> int | None:
        """h with p* = (-q)^h, or None when p* is not a power of -q."""
        if (self.marks_sum - self.comarks_sum) % 2 == 0:
            return self.comarks_sum
        return None

    def star(self, i: int) -> int:
        if not 1 <= i <= self.rank:
            raise AffineTypeError(f"node {i} out of range for {self.name}")
        return self.star_map[i - 1]

    def in_sigma0(self, point: SigmaPoint) -> bool:
        if self.sigma_parity is None:
            raise NoProviderError(
                f"{self.name}: the sigma0 lattice is only built in for A_n^(1)"
            )
        if not 1 <= point.node <= self.rank:
            return False
        return self.sigma_parity(point.node, point.power)

    def sigma0_points(self, lo: int, hi: int) -> tuple[SigmaPoint, ...]:
        """All sigma0 labels with exponent in [lo, hi]."""
        return tuple(
            SigmaPoint(i, p)
            for p in range(lo, hi + 1)
            for i in range(1, self.rank + 1)
            if self.in_sigma0(SigmaPoint(i, p))
        )


_NAME_RE = re.compile(r"^([A-G])(\d+)\^(\d)$")


def _parse_name(name: str) -> tuple[str, int, int]:
    text = name.strip().replace("(", "").replace(")", "")
    m = _NAME_RE.match(text)
    if not m:
        raise AffineTypeError(
            f"cannot parse affine type name {name!r}; expected e.g. 'A2^1'"
        )
    return m.group(1), int(m.group(2)), int(m.group(3))


def _star_map(letter: str, twist: int, rank: int, sub: int) -> tuple[int, ...]:
    if twist == 1 and letter in ("A", "D", "E"):
        rs = rootsys.RootSystem(letter, rank)
        return tuple(rs.star(i) for i in rs.nodes)
    # all remaining classical subalgebras have w0 = -1
    return tuple(range(1, rank + 1))


@lru_cache(maxsize=None)
def type_info(name: str) -> AffineTypeInfo:
    letter, sub, twist = _parse_name(name)
    edges, rank = _affine_edges(letter, twist, sub)
    gcm = _gcm(edges, rank + 1)
    marks = kernel_primitive(gcm)  # right null vector: delta coefficients
    transposed = [list(col) for col in zip(*gcm)]
    comarks = kernel_primitive(transposed)  # left null vector: c coefficients
    fin = _FIN_TYPE[(letter, twist)](sub if twist > 1 else rank)
    parity = None
    if letter == "A" and twist == 1:
        parity = lambda i, p: (p - i + 1) % 2 == 0  # noqa: E731
    return AffineTypeInfo(
        name=f"{letter}{sub}^{twist}",
        letter=letter,
        twist=twist,
        subscript=sub,
        rank=rank,
        fin_type=fin,
        marks_sum=sum(marks),
        comarks_sum=sum(comarks),
        star_map=_star_map(letter, twist, rank, sub),
        sigma_parity=parity,
    )


def registered_names(max_rank: int = 8) -> tuple[str, ...]:
    """Concrete instances of all fourteen registered families, small ranks."""
    names: list[str] = []
    names += [f"A{n}^1" for n in range(1, max_rank + 1)]
    names += [f"B{n}^1" for n in range(2, max_rank + 1)]
    names += [f"C{n}^1" for n in range(3, max_rank + 1)]
    names += [f"D{n}^1" for n in range(4, max_rank + 1)]
    names += ["E6^1", "E7^1", "E8^1", "F4^1", "G2^1"]
    names += [f"A{2 * n}^2" for n in range(1, max_rank // 2 + 1)]
    names += [f"A{2 * n - 1}^2" for n in range(2, max_rank // 2 + 1)]
    names += [f"D{n + 1}^2" for n in range(3, max_rank + 1)]
    names += ["E6^2", "D4^3"]
    return tuple(names)


# ---------------------------------------------------------------------------
# dual shift on labels


def dual_point(info: AffineTypeInfo, x: SigmaPoint, k: int = 1) -> SigmaPoint:
    """Apply the k-th power of the dual functor to a fundamental label."""
    h = info.dual_shift_exponent
    if h is None:
        raise NoProviderError(
            f"{info.name}: p* is not an integer power of -q, labels do not "
            "live on a single (-q)-lattice"
        )
    node = info.star(x.node) if k % 2 else x.node
    return SigmaPoint(node, x.power + k * h)


# ---------------------------------------------------------------------------
# denominator zero tables

ZeroTable = dict[tuple[int, int], tuple[int, ...]]

_EXTERNAL_TABLES: dict[str, ZeroTable] = {}


@lru_cache(maxsize=None)
def _a_type_zeros(n: int, i: int, j: int) -> tuple[int, ...]:
    top = min(i, j, n + 1 - i, n + 1 - j)
    return tuple(abs(i - j) + 2 * s for s in range(1, top + 1))


def denom_zeros(info: AffineTypeInfo, i: int, j: int) -> tuple[int, ...]:
    """Exponent multiset of the zeros of d_{i,j}, as a sorted tuple.

    A zero at exponent m means d_{V(varpi_i),V(varpi_j)}(z) vanishes at
    z = (-q)^m; multiple zeros are repeated.
    """
    for node in (i, j):
        if not 1 <= node <= info.rank:
            raise AffineTypeError(f"node {node} out of range for {info.name}")
    if info.letter == "A" and info.twist == 1:
        return _a_type_zeros(info.rank, i, j)
    table = _EXTERNAL_TABLES.get(info.name)
    if table is None:
        raise NoProviderError(f"{info.name}: no denominator table registered")
    return table.get((i, j), ())


def zero_order(info: AffineTypeInfo, i: int, j: int, exponent: int) -> int:
    """Multiplicity of the zero of d_{i,j} at (-q)^exponent."""
    return sum(1 for m in denom_zeros(info, i, j) if m == exponent)


_MAX_ZERO_CACHE: dict[str, int] = {}


def max_zero_exponent(info: AffineTypeInfo) -> int:
    cached = _MAX_ZERO_CACHE.get(info.name)
    if cached is not None:
        return cached
    best = 0
    for i in range(1, info.rank + 1):
        for j in range(1, info.rank + 1):
            zero = denom_zeros(info, i, j)
            if zero:
                best = max(best, max(abs(m) for m in zero))
    _MAX_ZERO_CACHE[info.name] = best
    return best


def register_denominator_table(
    name: str, zeros: Mapping[tuple[int, int], Iterable[int]]
) -> None:
    info = type_info(name)
    table: ZeroTable = {}
    for (i, j), ms in zeros.items():
        if not (1 <= i <= info.rank and 1 <= j <= info.rank):
            raise AffineTypeError(f"node pair {(i, j)} out of range for {name}")
        table[(i, j)] = tuple(sorted(int(m) for m in ms))
    _EXTERNAL_TABLES[info.name] = table
    _MAX_ZERO_CACHE.pop(info.name, None)


def load_denominator_json(doc: str | dict) -> AffineTypeInfo:
    """Register a provider from the JSON table format.

    Format: {"type": "A2^1", "zeros": {"1,1": [2], "1,2": [3], ...}}.
    """
    data = json.loads(doc) if isinstance(doc, str) else doc
    try:
        name = data["type"]
        raw = data["zeros"]
    except KeyError as err:
        raise AffineTypeError(f"denominator JSON is missing key {err}") from err
    zeros: dict[tuple[int, int], list[int]] = {}
    for key, ms in raw.items():
        i_s, j_s = key.split(",")
        zeros[(int(i_s), int(j_s))] = [int(m) for m in ms]
    register_denominator_table(name, zeros)
    return type_info(name)


# ---------------------------------------------------------------------------
# the quiver on sigma0


def sigma_quiver(
    info: AffineTypeInfo, lo: int, hi: int
) -> tuple[tuple[SigmaPoint, ...], tuple[tuple[SigmaPoint, SigmaPoint, int], ...]]:
    """Vertices and arrows of the sigma0 quiver in an exponent window.

    The arrow multiplicity from (i, x) to (j, y) is the order of the zero of
    d_{i,j} at exponent y - x.
    """
    if lo > hi:
        return (), ()
    if info.sigma_parity is not None:
        vertices = info.sigma0_points(lo, hi)
    else:
        vertices = _component_of_base(info, lo, hi)
    arrows = []
    for src in vertices:
        for dst in vertices:
            mult = zero_order(info, src.node, dst.node, dst.power - src.power)
            if mult:
                arrows.append((src, dst, mult))
    return vertices, tuple(arrows)


def _component_of_base(info: AffineTypeInfo, lo: int, hi: int) -> tuple[SigmaPoint, ...]:
    # with only a zero table available, take the connected component of (1,0)
    # inside a padded window and then restrict
    pad = max_zero_exponent(info)
    seen = {SigmaPoint(1, 0)}
    frontier = [SigmaPoint(1, 0)]
    while frontier:
        x = frontier.pop()
        for j in range(1, info.rank + 1):
            for m in denom_zeros(info, x.node, j):
                for sign in (1, -1):
                    y = SigmaPoint(j, x.power + sign * m)
                    if lo - pad <= y.power <= hi + pad and y not in seen:
                        seen.add(y)
                        frontier.append(y)
            for m in denom_zeros(info, j, x.node):
                for sign in (1, -1):
                    y = SigmaPoint(j, x.power + sign * m)
                    if lo - pad <= y.power <= hi + pad and y not in seen:
                        seen.add(y)
                        frontier.append(y)
    return tuple(sorted(p for p in seen if lo <= p.power <= hi))
