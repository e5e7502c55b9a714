"""The bigraded homology ring of the symmetric groups.

Under the juxtaposition product the homology of the disjoint union of
all BSigma_n is polynomial on composition-product words
E_{i1} o E_{2 i2} o ... with weakly increasing chains; these generators
are in bijection with the admissible operation indices of positive
excess via an explicit change of coordinates.
"""

from bgops import (
    AdmissibleIndex,
    CircWord,
    SymClass,
    chain_to_dl,
    count_admissible,
    count_basis,
    dl_to_chain,
    iota_push,
    juxta_multiply,
)

# --- the index bijection ----------------------------------------------------

index = AdmissibleIndex((3, 2))
print("admissible index (3, 2): degree", index.degree, "excess", index.excess)
chain = dl_to_chain(index)
print("its chain:", chain, "-> back:", chain_to_dl(chain).entries)

# both parametrizations count the same basis in every bidegree
print("\n degree | weight 2 | weight 4 | weight 8")
for d in range(1, 9):
    counts = [count_basis(d, w) for w in (2, 4, 8)]
    admissible = [count_admissible(d, k) for k in (1, 2, 3)]
    assert counts == admissible
    print(f"   {d:4d} |" + " |".join(f"   {c:5d}" for c in counts))

# --- the image of the rank-k elementary abelian group ------------------------
# a divided-power monomial maps to the composition word of its exponents

word = iota_push((1, 2))
((w,),) = word.terms
print("\niota(x1 x2^[2]) =", w, "  generator chain:", w.chain())

word = iota_push((2, 5))
((w,),) = word.terms
print("iota(x1^[2] x2^[5]) =", w, "  generator?", w.is_generator)

# --- the juxtaposition product ----------------------------------------------
# [1] is itself a polynomial generator of weight 1, not the ring unit

e1 = SymClass.single(CircWord.of(1))
one = SymClass.single(CircWord.of())
product = juxta_multiply(e1, one)
(term,) = product.terms
print("\nE1 * [1] has", len(term), "factors, weight", sum(w.weight for w in term))

square = juxta_multiply(e1, e1)
print("E1 * E1 =", square, " (decomposable, so weight-4 operations kill it)")
