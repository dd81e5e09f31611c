"""The sigma0 quiver, external denominator tables, and fusion facts.

Arrow multiplicities of the quiver count denominator zeros.  Types beyond
A_n^(1) carry no built-in table; a JSON provider plugs one in.  Fusion
facts are data too: verified head identities applied during rewriting.
"""

import json

from qaffpbw import (
    Fund,
    FusionTable,
    SigmaPoint,
    d_fund,
    denom_zeros,
    head,
    load_denominator_json,
    sigma_quiver,
    type_info,
)

info = type_info("A2^1")
vertices, arrows = sigma_quiver(info, 0, 4)
print("sigma0 quiver of A2^1 on exponents [0, 4]:")
print("  vertices:", ", ".join(str(v) for v in vertices))
for src, dst, mult in arrows:
    print(f"  {src} -> {dst}  (multiplicity {mult})")
print()

print("registering an external denominator table for D4^1:")
provider = {
    "type": "D4^1",
    "zeros": {"1,1": [2, 6], "1,2": [3, 5], "2,1": [3, 5], "2,2": [2, 4, 6]},
}
d4 = load_denominator_json(json.dumps(provider))
print("  zeros d_22:", denom_zeros(d4, 2, 2))
print("  d((1,0),(1,2)) =", d_fund(d4, SigmaPoint(1, 0), SigmaPoint(1, 2)))
print()

print("fusion facts from JSON (shift-equivariant family):")
table = FusionTable.from_json(
    info,
    {
        "type": "A2^1",
        "facts": [
            {"head": [[1, 0], [1, 2]], "eq": [2, 1], "shift_equivariant": True}
        ],
    },
)
pair = [Fund(SigmaPoint(1, 4)), Fund(SigmaPoint(1, 6))]
print("  head[(1,4),(1,6)] with facts:", head(info, pair, table))
print("  head[(1,4),(1,6)] without facts:", head(info, pair))
