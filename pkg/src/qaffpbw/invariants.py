"""Exact integer invariants between fundamental-module labels.

The only analytic input is the zero multiset of the R-matrix denominators.
Writing D for the dual shift on labels, the basic quantity is

    d(x, y) = ord of d_{i,j} at exponent p_y - p_x
            + ord of d_{j,i} at exponent p_x - p_y,

and the remaining invariants are finite alternating sums of d over dual
shifts of one argument:

    Lambda(x, y)   = sum_k (-1)^(k + [k<0]) d(x, D^k y)
    Lambda8(x, y)  = sum_k (-1)^k          d(x, D^k y)
    de_tilde(x, y) = sum_{k <= -1} (-1)^(k+1) d(x, D^k y)
                   = (Lambda - Lambda8) / 2
    zero_c(x, y)   = sum_{k >= 0} (-1)^k  d(x, D^k y)

All sums are finite because the zero multisets are; the truncation bound is
computed from the largest zero exponent.
"""

from __future__ import annotations

from typing import NamedTuple

from . import affine
from ._linalg import solve_exact
from .affine import AffineTypeInfo, SigmaPoint, dual_point
from .rootsys import cartan

__all__ = [
    "InvariantValue",
    "d_fund",
    "lambda_fund",
    "lambda_inf_fund",
    "de_tilde_fund",
    "zero_c_fund",
    "pairing_E",
    "root_coordinates",
    "lambda_inf_word",
    "shift_bound",
]


class InvariantValue(NamedTuple):
    """An integer invariant together with its exactness status."""

    value: int
    exact: bool


def d_fund(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    """The invariant d between two fundamental labels (symmetric, >= 0)."""
    forward = affine.zero_order(info, x.node, y.node, y.power - x.power)
    backward = affine.zero_order(info, y.node, x.node, x.power - y.power)
    return forward + backward


def shift_bound(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    """|k| beyond which d(x, D^k y) is guaranteed to vanish."""
    h = info.dual_shift_exponent
    if h is None:
        raise affine.NoProviderError(f"{info.name}: no dual shift on labels")
    return (affine.max_zero_exponent(info) + abs(x.power - y.power)) // h + 1


def _shift_terms(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint):
    bound = shift_bound(info, x, y)
    for k in range(-bound, bound + 1):
        value = d_fund(info, x, dual_point(info, y, k))
        if value:
            yield k, value


def lambda_fund(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    total = 0
    for k, value in _shift_terms(info, x, y):
        sign = -1 if (k + (1 if k < 0 else 0)) % 2 else 1
        total += sign * value
    return total


def lambda_inf_fund(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    total = 0
    for k, value in _shift_terms(info, x, y):
        total += (-1 if k % 2 else 1) * value
    return total


def de_tilde_fund(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    """Negative-shift tail; equals (Lambda - Lambda8)/2."""
    total = 0
    for k, value in _shift_terms(info, x, y):
        if k <= -1:
            total += (-1 if (k + 1) % 2 else 1) * value
    return total


def zero_c_fund(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    """Order of the zero of the renormalizing coefficient at z = 1."""
    total = 0
    for k, value in _shift_terms(info, x, y):
        if k >= 0:
            total += (-1 if k % 2 else 1) * value
    return total


def pairing_E(info: AffineTypeInfo, x: SigmaPoint, y: SigmaPoint) -> int:
    """The block pairing (E(x), E(y)) = -Lambda8(x, y)."""
    return -lambda_inf_fund(info, x, y)


def lambda_inf_word(
    info: AffineTypeInfo,
    xs: list[SigmaPoint] | tuple[SigmaPoint, ...],
    ys: list[SigmaPoint] | tuple[SigmaPoint, ...],
) -> int:
    """Lambda8 between tensor words, additive over all factor pairs.

    The value is exact for any simple subquotient of either product.
    """
    return sum(lambda_inf_fund(info, x, y) for x in xs for y in ys)


def root_coordinates(
    info: AffineTypeInfo,
    x: SigmaPoint,
    basis: list[SigmaPoint] | tuple[SigmaPoint, ...],
) -> tuple[int, ...]:
    """Coordinates of E(x) in the simple basis {E(b)} of a strong datum.

    The basis pairings must form the Cartan matrix of the associated finite
    type; the result is the unique integer vector c with Cartan @ c equal to
    the pairing vector of x.
    """
    n = len(basis)
    gram = [[pairing_E(info, a, b) for b in basis] for a in basis]
    letter, rank = info.fin_type
    if n != rank or [list(r) for r in cartan(letter, rank)] != gram:
        raise ValueError(
            f"basis pairings {gram} do not form the Cartan matrix of "
            f"{letter}{rank}"
        )
    rhs = [pairing_E(info, x, b) for b in basis]
    solution = solve_exact(gram, rhs)
    if any(c.denominator != 1 for c in solution):
        raise ValueError(f"label {x} is outside the root lattice of the basis")
    return tuple(int(c) for c in solution)


def lambda_between(info: AffineTypeInfo, e1, e2) -> InvariantValue:
    """Lambda between expressions: exact for fundamentals, else an upper
    bound by subadditivity over all leaf pairs."""
    from .modexpr import Fund, signed_leaves

    if isinstance(e1, Fund) and isinstance(e2, Fund):
        return InvariantValue(lambda_fund(info, e1.point, e2.point), True)
    total = 0
    for x, kx in signed_leaves(e1):
        for y, ky in signed_leaves(e2):
            total += lambda_fund(
                info, dual_point(info, x, kx), dual_point(info, y, ky)
            )
    return InvariantValue(total, False)


def d_between(info: AffineTypeInfo, e1, e2) -> InvariantValue:
    """d between expressions, exact only for fundamental labels."""
    from .modexpr import Fund

    if isinstance(e1, Fund) and isinstance(e2, Fund):
        return InvariantValue(d_fund(info, e1.point, e2.point), True)
    forward = lambda_between(info, e1, e2).value
    backward = lambda_between(info, e2, e1).value
    return InvariantValue((forward + backward) // 2, False)


def lambda_inf_between(info: AffineTypeInfo, e1, e2) -> InvariantValue:
    """Lambda8 between expressions; exact for any simple subquotients."""
    from .modexpr import signed_leaves

    total = 0
    for x, kx in signed_leaves(e1):
        for y, ky in signed_leaves(e2):
            total += lambda_inf_fund(
                info, dual_point(info, x, kx), dual_point(info, y, ky)
            )
    return InvariantValue(total, True)


def is_root_module_pattern(
    info: AffineTypeInfo, x: SigmaPoint, extra: int = 2
) -> bool:
    """Check d(x, D^k x) = delta(k = +-1) over the full reachable range."""
    bound = shift_bound(info, x, x) + extra
    for k in range(-bound, bound + 1):
        expected = 1 if k in (-1, 1) else 0
        if d_fund(info, x, dual_point(info, x, k)) != expected:
            return False
    return True
