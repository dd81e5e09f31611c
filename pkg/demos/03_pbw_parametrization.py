"""The exponent-vector parametrization of simple modules.

Every simple module corresponds to a unique finitely supported vector of
cuspidal exponents.  Dominant multisets of fundamental labels decompose
into such vectors; the bi-lexicographic order compares them, with
incomparability as a first-class outcome.
"""

from qaffpbw import (
    ExpVec,
    FundamentalCuspidalSeq,
    QDatum,
    SigmaPoint,
    cmp_bilex,
    compose,
    decompose,
    dshift,
    in_window,
    type_info,
)
from qaffpbw.pbw import peel_top_check, standard_word
from qaffpbw.qdata import some_adapted_word

info = type_info("A2^1")
q = QDatum("A", 2, (0, 1))
word = some_adapted_word(q)
seq = FundamentalCuspidalSeq(info, q, word)
print(f"cuspidal labels for word {word}:")
for k in range(-2, 8):
    print(f"  S_{k} = {seq.label(k)}")
print()

multiset = [SigmaPoint(1, 0), SigmaPoint(1, 0), SigmaPoint(2, 3)]
vec = decompose(multiset, seq)
print("multiset", multiset)
print("decomposes to", dict(vec.entries))
print("composes back to", compose(vec, seq))
print("standard word (decreasing cuspidal factors):", standard_word(vec, seq))
print("peel-top consistency:", peel_top_check(multiset, seq))
print()

print("dual shift translates the support by one period:")
print("  ", dict(dshift(vec, 1, seq.ell).entries))
print()

a = ExpVec.from_dict({1: 1})
b = ExpVec.from_dict({2: 1})
c = ExpVec.from_dict({0: 1, 2: 1})
print(f"compare {dict(a.entries)} vs {dict(b.entries)}: {cmp_bilex(a, b).value}")
print(f"compare {dict(a.entries)} vs {dict(c.entries)}: {cmp_bilex(a, c).value}")
print()

print("window membership (the subcategory between two cuspidal indices):")
print(f"  support {dict(vec.entries)} in [1, 6]?", in_window(vec, 1, 6))
print(f"  support {dict(vec.entries)} in [2, 6]?", in_window(vec, 2, 6))
print("  the zero vector lies in every window:", in_window(ExpVec(()), 3, 2))
