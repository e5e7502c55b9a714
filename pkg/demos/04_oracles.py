"""Independent verification: orbits, transfers, bar homology, the 3-torus.

Nothing here consults the closed forms: group elements are multiplied
from explicit tables, orbits and stabilizers are enumerated, transfers
are coset sums on normalized bar words, and homology is linear algebra
over GF(2).
"""

from bgops import (
    CoefficientClass,
    DPClass,
    Dihedral,
    FiniteGroupTable,
    GeneratorSet,
    Z2Power,
    action_orbits,
    alpha,
    bar_homology,
    cayley_action,
    compsum_alpha,
    t3_verify,
    transfer_map,
)

# --- orbit enumeration for the basepoint action --------------------------------

d6 = FiniteGroupTable.dihedral(1)
orbits = action_orbits(cayley_action(d6, 1))
print("D6 labellings of V_1: orbit (size, stabilizer order, projected index):")
for o in orbits:
    print("   ", (o.size, len(o.stabilizer), o.image_index))
odd = sum(1 for o in orbits if o.image_index % 2 == 1)
print("odd-index orbits:", odd, "(= 2^k, the homomorphism count)")

# --- orbit sums reproduce the closed forms --------------------------------------

V1 = GeneratorSet.v_basis(1)
g = Dihedral(1)
gens = GeneratorSet.z2_basis(1)
for n, m in [(1, 0), (2, 1), (3, 0)]:
    a = DPClass.monomial(V1, (n,))
    b = CoefficientClass.from_dp(g, DPClass.monomial(gens, (m,)))
    oracle = compsum_alpha(d6, 1, a, b, max_degree=8)
    closed = alpha(g, 1, a, b)
    print(f"x^[{n}] (x) y^[{m}]: oracle {oracle}   closed {closed}   agree {oracle == closed}")

# --- bar homology and transfers ---------------------------------------------------

z2 = FiniteGroupTable.z2()
v2 = FiniteGroupTable.elementary_abelian(2)
print("\nH_*(B Z/2) dims:", bar_homology(z2, 4, method="bar").dims)
print("H_*(B V_2) dims:", bar_homology(v2, 6, method="bar").dims)
print("H_*(B V_2) dims (minimal resolution):", bar_homology(v2, 6, method="koszul").dims)
print("H_*(B D6)  dims:", bar_homology(d6, 3, method="bar").dims)

print("\ndiagonal transfer Z/2 <= V_2 in degrees 1..4:")
for degree in range(1, 5):
    print(f"   degree {degree}: zero = {transfer_map(v2, [0, 3], degree).is_zero()}")
print("reflection transfer Z/2 <= D6 (odd index, injective):")
for degree in range(1, 4):
    print(f"   degree {degree}:", transfer_map(d6, [0, 3], degree).data)

# --- the equivariant 3-torus check --------------------------------------------------

report = t3_verify(3, 5)
print("\n3-torus checks at (3, 5):")
for name, ok in report.checks.items():
    print(f"   {name}: {'PASS' if ok else 'FAIL'}")
print("Betti numbers:", report.homology_dims)
