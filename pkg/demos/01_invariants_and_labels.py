"""Labels, denominator zeros, and the integer invariants.

A fundamental module is a pair (node, power): the node of the classical
Dynkin diagram and the exponent p of the spectral parameter (-q)^p.  All
invariants reduce to the zero multisets of the R-matrix denominators.
"""

from qaffpbw import (
    SigmaPoint,
    d_fund,
    de_tilde_fund,
    denom_zeros,
    dual_point,
    lambda_fund,
    lambda_inf_fund,
    pairing_E,
    root_coordinates,
    type_info,
)

info = type_info("A2^1")
print(f"affine type {info.name}: associated finite type {info.fin_type},")
print(f"dual shift (-q)^{info.dual_shift_exponent}, star map {info.star_map}")
print()

print("sigma0 labels with exponents in [0, 5]:")
print(" ", ", ".join(str(x) for x in info.sigma0_points(0, 5)))
print()

print("denominator zero exponents:")
for i in (1, 2):
    for j in (1, 2):
        print(f"  d_{i}{j} vanishes at (-q)^m for m in {denom_zeros(info, i, j)}")
print()

x, y = SigmaPoint(1, 0), SigmaPoint(1, 2)
print(f"d({x}, {y})          = {d_fund(info, x, y)}")
print(f"Lambda({x}, {y})     = {lambda_fund(info, x, y)}")
print(f"Lambda8({x}, {y})    = {lambda_inf_fund(info, x, y)}")
print(f"de_tilde({x}, {y})   = {de_tilde_fund(info, x, y)}")
print(f"Lambda8({x}, {x})    = {lambda_inf_fund(info, x, x)}  (always -2)")
print()

print("the dual shift walks the label lattice:")
for k in range(-2, 3):
    print(f"  D^{k:+d} {x} = {dual_point(info, x, k)}")
print()

print("root-module pattern: d(x, D^k x) = 1 exactly at k = +-1")
for k in range(-3, 4):
    print(f"  k={k:+d}: {d_fund(info, x, dual_point(info, x, k))}")
print()

print("block root system: coordinates of one dual period of labels")
basis = (SigmaPoint(1, 0), SigmaPoint(1, 2))
for p in info.sigma0_points(0, 2 * info.dual_shift_exponent - 1):
    coords = root_coordinates(info, p, basis)
    print(f"  E{p} = {coords}, (E,E) = {pairing_E(info, p, p)}")
