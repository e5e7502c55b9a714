"""Independent chain-level verification machinery.

Everything here recomputes operations from first principles: finite
group multiplication tables, honest orbit/stabilizer enumeration for the
basepoint action on G-labellings, normalized bar complexes with rank
computations over GF(2), coset-sum transfer maps, and the orbit-sum
evaluation of the rank-k operations for finite coefficient groups.

The closed forms in :mod:`bgops.operations` are validated against these
routines; nothing in this module consults them except to package
results.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from .f2core import F2Matrix, SpanSolver, f2_rank_kernel
from .gradedalg import DPClass, GeneratorSet
from .operations import (
    CoefficientClass,
    Dihedral,
    GroupDescriptor,
    Z2Power,
)

SIZE_BOUND = 10_000_000

BarChain = frozenset[tuple[int, ...]]
"""A GF(2) chain in the normalized bar complex: a set of words of
non-identity element indices."""


class SizeBoundError(ValueError):
    """An enumeration would exceed the configured size bound."""


# ---------------------------------------------------------------------------
# finite group tables


@dataclass
class FiniteGroupTable:
    """Multiplication table of a finite group on indices 0..order-1.

    ``mul[a][b]`` is the product a*b.  Group laws are verified at
    construction for orders up to 200.
    """

    order: int
    mul: tuple[tuple[int, ...], ...]
    identity: int
    kind: str = "generic"
    params: tuple = ()
    inv: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        if not self.inv:
            self.inv = tuple(self._find_inverse(a) for a in range(self.order))
        if self.order <= 200:
            self.check_laws()

    def _find_inverse(self, a: int) -> int:
        for b in range(self.order):
            if self.mul[a][b] == self.identity:
                return b
        raise ValueError(f"element {a} has no inverse")

    def check_laws(self) -> None:
        e = self.identity
        for a in range(self.order):
            if self.mul[a][e] != a or self.mul[e][a] != a:
                raise ValueError("identity law fails")
            if self.mul[a][self.inv[a]] != e or self.mul[self.inv[a]][a] != e:
                raise ValueError("inverse law fails")
        for a in range(self.order):
            for b in range(self.order):
                ab = self.mul[a][b]
                for c in range(self.order):
                    if self.mul[ab][c] != self.mul[a][self.mul[b][c]]:
                        raise ValueError("associativity fails")

    @classmethod
    def trivial(cls) -> "FiniteGroupTable":
        return cls(1, ((0,),), 0, kind="trivial")

    @classmethod
    def z2(cls) -> "FiniteGroupTable":
        return cls(2, ((0, 1), (1, 0)), 0, kind="z2")

    @classmethod
    def elementary_abelian(cls, k: int) -> "FiniteGroupTable":
        """Rank-k elementary abelian 2-group; element index = coordinate bitmask."""
        if k < 0:
            raise ValueError("rank must be non-negative")
        n = 1 << k
        mul = tuple(tuple(a ^ b for b in range(n)) for a in range(n))
        return cls(n, mul, 0, kind="elementary_abelian", params=(k,))

    @classmethod
    def dihedral(cls, n: int) -> "FiniteGroupTable":
        """Dihedral group of order 4n + 2; index i + (2n+1) j is r^i s^j."""
        if n < 0:
            raise ValueError("n must be non-negative")
        m = 2 * n + 1
        order = 2 * m

        def idx(i: int, j: int) -> int:
            return i % m + m * (j % 2)

        mul_rows = []
        for a in range(order):
            i, j = a % m, a // m
            row = []
            for b in range(order):
                p, q = b % m, b // m
                # (r^i s^j)(r^p s^q) = r^(i + (-1)^j p) s^(j+q)
                row.append(idx(i + (p if j == 0 else -p), j + q))
            mul_rows.append(tuple(row))
        return cls(order, tuple(mul_rows), 0, kind="dihedral", params=(n,))

    @classmethod
    def symmetric(cls, n: int) -> "FiniteGroupTable":
        """Symmetric group on n letters; elements indexed by sorted permutation."""
        if n < 0:
            raise ValueError("n must be non-negative")
        perms = sorted(itertools.permutations(range(n)))
        index = {p: i for i, p in enumerate(perms)}
        mul_rows = []
        for p in perms:
            row = []
            for q in perms:
                row.append(index[tuple(p[q[i]] for i in range(n))])
            mul_rows.append(tuple(row))
        return cls(len(perms), tuple(mul_rows), index[tuple(range(n))], kind="symmetric", params=(n,))

    @classmethod
    def product(cls, a: "FiniteGroupTable", b: "FiniteGroupTable") -> "FiniteGroupTable":
        """Direct product; index of (x, y) is x * b.order + y."""
        nb = b.order
        mul_rows = []
        for x1 in range(a.order):
            for y1 in range(b.order):
                row = []
                for x2 in range(a.order):
                    arow = a.mul[x1][x2]
                    for y2 in range(b.order):
                        row.append(arow * nb + b.mul[y1][y2])
                mul_rows.append(tuple(row))
        return cls(
            a.order * b.order,
            tuple(mul_rows),
            a.identity * nb + b.identity,
            kind="product",
            params=(a, b),
        )

    def subgroup(self, indices: Sequence[int]) -> tuple["FiniteGroupTable", tuple[int, ...]]:
        """Subgroup on the given element indices; returns (table, embedding).

        ``embedding[i]`` is the parent index of local element i.
        """
        emb = tuple(sorted(indices))
        local = {g: i for i, g in enumerate(emb)}
        if self.identity not in local:
            raise ValueError("subgroup must contain the identity")
        mul_rows = []
        for a in emb:
            row = []
            for b in emb:
                p = self.mul[a][b]
                if p not in local:
                    raise ValueError("indices are not closed under multiplication")
                row.append(local[p])
            mul_rows.append(tuple(row))
        return (
            FiniteGroupTable(len(emb), tuple(mul_rows), local[self.identity], kind="subgroup"),
            emb,
        )

    def descriptor(self) -> GroupDescriptor:
        if self.kind == "z2":
            return Z2Power(1)
        if self.kind == "dihedral":
            return Dihedral(self.params[0])
        raise ValueError(f"no canonical descriptor for kind {self.kind!r}")


# ---------------------------------------------------------------------------
# the basepoint action on G-labellings


@dataclass
class FiniteAction:
    """A finite group acting on a finite set, with projection bookkeeping.

    For the two-basepoint action the group is (V_k x G x G) acting on
    G-labellings of V_k by (u, g_p, g_q) . (g_v) = (g_p g_{u+v} g_q^-1);
    ``proj`` maps group indices onto V_k x G (forgetting the last
    coordinate) and ``q_proj`` extracts the last coordinate.
    """

    group: FiniteGroupTable
    set_size: int
    act: tuple[tuple[int, ...], ...]
    lam: FiniteGroupTable | None = None
    proj: tuple[int, ...] | None = None
    q_proj: tuple[int, ...] | None = None
    points: tuple[tuple[int, ...], ...] = ()

    def check_axioms(self) -> None:
        e = self.group.identity
        for x in range(self.set_size):
            if self.act[e][x] != x:
                raise ValueError("identity does not act trivially")
        for a in range(self.group.order):
            for b in range(self.group.order):
                ab = self.group.mul[a][b]
                for x in range(self.set_size):
                    if self.act[ab][x] != self.act[a][self.act[b][x]]:
                        raise ValueError("action is not associative")


def cayley_action(g_table: FiniteGroupTable, k: int, one_basepoint: bool = False) -> FiniteAction:
    """The basepoint action on G^(V_k), or on G^(V_k)/(diagonal) if requested."""
    n = g_table.order
    size_points = n ** (1 << k)
    v_table = FiniteGroupTable.elementary_abelian(k)
    lam = FiniteGroupTable.product(v_table, g_table)

    if one_basepoint:
        group = lam
        # left cosets of the diagonal: normalize so that the label of 0 is e
        points = [
            (g_table.identity,) + rest
            for rest in itertools.product(range(n), repeat=(1 << k) - 1)
        ]
        index = {p: i for i, p in enumerate(points)}
        if group.order * len(points) > SIZE_BOUND:
            raise SizeBoundError("action too large to enumerate")
        act_rows = []
        for gi in range(group.order):
            u, gp = gi // n, gi % n
            row = []
            for p in points:
                moved = tuple(g_table.mul[gp][p[u ^ w]] for w in range(1 << k))
                # renormalize the coset representative
                fix = g_table.inv[moved[0]]
                moved = tuple(g_table.mul[g][fix] for g in moved)
                row.append(index[moved])
            act_rows.append(tuple(row))
        return FiniteAction(group, len(points), tuple(act_rows), lam=lam, points=tuple(points))

    group = FiniteGroupTable.product(lam, g_table)
    if group.order * size_points > SIZE_BOUND:
        raise SizeBoundError("action too large to enumerate")
    points = list(itertools.product(range(n), repeat=1 << k))
    index = {p: i for i, p in enumerate(points)}
    act_rows = []
    for gi in range(group.order):
        lam_part, gq = gi // n, gi % n
        u, gp = lam_part // n, lam_part % n
        gq_inv = g_table.inv[gq]
        row = []
        for p in points:
            moved = tuple(
                g_table.mul[g_table.mul[gp][p[u ^ w]]][gq_inv] for w in range(1 << k)
            )
            row.append(index[moved])
        act_rows.append(tuple(row))
    proj = tuple(gi // n for gi in range(group.order))
    q_proj = tuple(gi % n for gi in range(group.order))
    return FiniteAction(
        group,
        len(points),
        tuple(act_rows),
        lam=lam,
        proj=proj,
        q_proj=q_proj,
        points=tuple(points),
    )


@dataclass
class OrbitData:
    representative: int
    size: int
    stabilizer: tuple[int, ...]
    image: tuple[int, ...]
    image_index: int


def action_orbits(action: FiniteAction) -> list[OrbitData]:
    """Full orbit decomposition with stabilizers and projected images.

    For each orbit the stabilizer is projected along ``proj``; the
    projection is checked to be injective on the stabilizer and the
    index of its image is reported.
    """
    if action.proj is None or action.lam is None:
        raise ValueError("action carries no projection data")
    if action.group.order * action.set_size > SIZE_BOUND:
        raise SizeBoundError("orbit enumeration too large")
    seen = [False] * action.set_size
    out = []
    for start in range(action.set_size):
        if seen[start]:
            continue
        orbit = {start}
        frontier = [start]
        while frontier:
            x = frontier.pop()
            for gi in range(action.group.order):
                y = action.act[gi][x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        for x in orbit:
            seen[x] = True
        stab = tuple(gi for gi in range(action.group.order) if action.act[gi][start] == start)
        image = tuple(sorted({action.proj[gi] for gi in stab}))
        if len(image) != len(stab):
            raise AssertionError("projection is not injective on a stabilizer")
        if len(orbit) * len(stab) != action.group.order:
            raise AssertionError("orbit-stabilizer count mismatch")
        out.append(
            OrbitData(
                representative=start,
                size=len(orbit),
                stabilizer=stab,
                image=image,
                image_index=action.lam.order // len(image),
            )
        )
    return out


# ---------------------------------------------------------------------------
# normalized bar complex over GF(2)


def bar_words(table: FiniteGroupTable, degree: int) -> list[tuple[int, ...]]:
    letters = [g for g in range(table.order) if g != table.identity]
    if len(letters) ** max(degree, 0) > SIZE_BOUND:
        raise SizeBoundError("bar chain group too large")
    return [tuple(w) for w in itertools.product(letters, repeat=degree)]


def bar_boundary_word(table: FiniteGroupTable, word: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(word)
    if n == 0:
        return []
    faces = [word[1:], word[:-1]]
    for i in range(n - 1):
        merged = table.mul[word[i + 1]][word[i]]
        if merged != table.identity:
            faces.append(word[:i] + (merged,) + word[i + 2 :])
    return faces


def bar_boundary_chain(table: FiniteGroupTable, chain: BarChain) -> BarChain:
    acc: set[tuple[int, ...]] = set()
    for word in chain:
        for face in bar_boundary_word(table, word):
            acc ^= {face}
    return frozenset(acc)


def cross_chains(
    product_table: FiniteGroupTable,
    left: BarChain,
    right: BarChain,
    embed_left,
    embed_right,
) -> BarChain:
    """Homology cross product at chain level (shuffle interleavings)."""
    acc: set[tuple[int, ...]] = set()
    for u in left:
        lu = [embed_left(g) for g in u]
        for v in right:
            rv = [embed_right(g) for g in v]
            p, q = len(lu), len(rv)
            for spots in itertools.combinations(range(p + q), p):
                spot_set = set(spots)
                word = []
                i = j = 0
                for pos in range(p + q):
                    if pos in spot_set:
                        word.append(lu[i])
                        i += 1
                    else:
                        word.append(rv[j])
                        j += 1
                acc ^= {tuple(word)}
    return frozenset(acc)


def push_chain(hom: Sequence[int], target_identity: int, chain: BarChain) -> BarChain:
    """Pushforward along a homomorphism given as an index map."""
    acc: set[tuple[int, ...]] = set()
    for word in chain:
        image = tuple(hom[g] for g in word)
        if target_identity in image:
            continue  # degenerate word
        acc ^= {image}
    return frozenset(acc)


def transfer_chain(
    table: FiniteGroupTable, sub_embedding: Sequence[int], chain: BarChain
) -> BarChain:
    """Chain-level transfer to a subgroup, in the subgroup's local letters.

    Sums, over the left cosets xS with lexicographically least
    representatives y, the lifts h_i = y(next)^-1 g_i y(prev) of each bar
    word; lifts containing an identity letter are degenerate and dropped.
    """
    sub = set(sub_embedding)
    local = {g: i for i, g in enumerate(sub_embedding)}
    coset_rep: dict[int, int] = {}
    reps = []
    for g in range(table.order):
        if g in coset_rep:
            continue
        coset = sorted(table.mul[g][s] for s in sub)
        rep = coset[0]
        reps.append(rep)
        for member in coset:
            coset_rep[member] = rep
    local_id = local[table.identity]
    acc: set[tuple[int, ...]] = set()
    for word in chain:
        for start in reps:
            prev = start
            letters = []
            ok = True
            for g in word:
                elem = table.mul[g][prev]
                nxt = coset_rep[elem]
                h = table.mul[table.inv[nxt]][elem]
                hi = local[h]
                if hi == local_id:
                    ok = False
                    break
                letters.append(hi)
                prev = nxt
            if ok:
                acc ^= {tuple(letters)}
    return frozenset(acc)


@dataclass
class BarSpace:
    """Homology data of one bar degree: representative cycles and coordinates."""

    table: FiniteGroupTable
    degree: int
    words: list[tuple[int, ...]]
    index: dict[tuple[int, ...], int]
    reps: list[int]  # cycle bitmasks over words
    _solver: SpanSolver = field(repr=False, default=None)  # type: ignore[assignment]
    _rep_positions: list[int] = field(repr=False, default_factory=list)

    @property
    def dim(self) -> int:
        return len(self.reps)

    def chain_to_mask(self, chain: BarChain) -> int:
        mask = 0
        for word in chain:
            mask ^= 1 << self.index[word]
        return mask

    def mask_to_chain(self, mask: int) -> BarChain:
        return frozenset(self.words[i] for i in _bits(mask))

    def rep_chains(self) -> list[BarChain]:
        return [self.mask_to_chain(m) for m in self.reps]

    def class_coordinates(self, chain: BarChain) -> int:
        """Coordinates of a cycle in the representative basis, as a bitmask."""
        mask = self.chain_to_mask(chain)
        combo = self._solver.coordinates(mask)
        if combo is None:
            raise ValueError("chain is not a cycle homologous to the stored spans")
        out = 0
        for j, pos in enumerate(self._rep_positions):
            if (combo >> pos) & 1:
                out |= 1 << j
        return out


def _bits(mask: int) -> Iterable[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask &= mask - 1


def bar_space(table: FiniteGroupTable, degree: int) -> BarSpace:
    """Representative cycles of the bar homology in one degree.

    Kernel vectors of the boundary are reduced modulo the image of the
    boundary from one degree higher; the survivors are the
    representatives, in deterministic order.
    """
    words = bar_words(table, degree)
    index = {w: i for i, w in enumerate(words)}
    below = bar_words(table, degree - 1) if degree > 0 else [()]
    below_index = {w: i for i, w in enumerate(below)}
    rows = [0] * len(below)
    for j, w in enumerate(words):
        for face in bar_boundary_word(table, w):
            rows[below_index[face]] ^= 1 << j
    matrix = F2Matrix(len(below), len(words), tuple(rows))
    _, kernel = f2_rank_kernel(matrix)

    solver = SpanSolver()
    above = bar_words(table, degree + 1)
    for w in above:
        mask = 0
        for face in bar_boundary_word(table, w):
            mask ^= 1 << index[face]
        if mask:
            solver.add(mask)
    reps = []
    rep_positions = []
    for v in kernel:
        pos = solver._count
        if solver.add(v):
            reps.append(v)
            rep_positions.append(pos)
    return BarSpace(table, degree, words, index, reps, solver, rep_positions)


@dataclass
class BarHomologyResult:
    dims: list[int]
    reps: list[list]
    method: str


def bar_homology(
    table: FiniteGroupTable, max_degree: int, method: str = "auto"
) -> BarHomologyResult:
    """Mod-2 homology dimensions of BG up to max_degree, with representatives.

    ``method`` is "bar" (normalized bar complex), "koszul" (minimal
    divided-power resolution, elementary abelian groups only) or "auto".
    """
    letters = max(table.order - 1, 1)
    bar_feasible = letters ** (max_degree + 1) <= SIZE_BOUND
    if method == "auto":
        if bar_feasible:
            method = "bar"
        elif table.kind == "elementary_abelian":
            method = "koszul"
        else:
            raise SizeBoundError("bar complex too large and no minimal resolution available")
    if method == "bar":
        if not bar_feasible:
            raise SizeBoundError("bar complex too large for the requested degree")
        dims = []
        reps: list[list] = []
        for d in range(max_degree + 1):
            space = bar_space(table, d)
            dims.append(space.dim)
            reps.append(space.rep_chains())
        return BarHomologyResult(dims, reps, "bar")
    if method == "koszul":
        if table.kind != "elementary_abelian":
            raise ValueError("koszul method requires an elementary abelian group")
        k = table.params[0]
        dims, reps = _koszul_homology(k, max_degree)
        return BarHomologyResult(dims, reps, "koszul")
    raise ValueError(f"unknown method {method!r}")


# ---------------------------------------------------------------------------
# minimal (divided-power Koszul) resolution for elementary abelian groups


def koszul_generators(k: int, degree: int) -> list[tuple[int, ...]]:
    """Divided-power monomials X1^[a1]...Xk^[ak] of total degree `degree`."""
    if k == 0:
        return [()] if degree == 0 else []
    out = []
    for comp in itertools.product(range(degree + 1), repeat=k):
        if sum(comp) == degree:
            out.append(comp)
    return out


def koszul_boundary(
    k: int, gen: tuple[int, ...]
) -> list[tuple[tuple[int, ...], int]]:
    """Boundary of a generator: pairs (lower generator, group-ring mask).

    The coefficient of the i-th term is t_i = 1 + x_i, encoded as a mask
    over element indices of the rank-k group (element = coordinate
    bitmask).
    """
    out = []
    for i in range(k):
        if gen[i] > 0:
            lower = gen[:i] + (gen[i] - 1,) + gen[i + 1 :]
            mask = (1 << 0) | (1 << (1 << i))
            out.append((lower, mask))
    return out


def groupring_multiply(k: int, a_mask: int, b_mask: int) -> int:
    out = 0
    for ga in _bits(a_mask):
        for gb in _bits(b_mask):
            out ^= 1 << (ga ^ gb)
    return out


def koszul_check_differential(k: int, max_degree: int) -> None:
    """Assert d(d(gen)) = 0 over the group ring for all generators."""
    for d in range(2, max_degree + 1):
        for gen in koszul_generators(k, d):
            acc: dict[tuple[int, ...], int] = {}
            for mid, coeff1 in koszul_boundary(k, gen):
                for low, coeff2 in koszul_boundary(k, mid):
                    prod = groupring_multiply(k, coeff1, coeff2)
                    acc[low] = acc.get(low, 0) ^ prod
            if any(v for v in acc.values()):
                raise AssertionError(f"koszul differential does not square to zero at {gen}")


def _koszul_boundary_matrix(k: int, degree: int) -> F2Matrix:
    """Boundary in degree `degree` after tensoring with the trivial module.

    Group-ring coefficients map by the augmentation (parity of the
    support), so the matrices are assembled honestly and then ranked.
    """
    gens = koszul_generators(k, degree)
    below = koszul_generators(k, degree - 1)
    below_idx = {g: i for i, g in enumerate(below)}
    rows = [0] * len(below)
    for j, g in enumerate(gens):
        for low, coeff in koszul_boundary(k, g):
            if coeff.bit_count() & 1:
                rows[below_idx[low]] ^= 1 << j
    return F2Matrix(len(below), len(gens), tuple(rows))


def _koszul_homology(k: int, max_degree: int) -> tuple[list[int], list[list]]:
    koszul_check_differential(k, max_degree + 1)
    dims = []
    reps: list[list] = []
    for d in range(max_degree + 1):
        gens = koszul_generators(k, d)
        if d == 0:
            kernel_dim = len(gens)
        else:
            _, kernel = f2_rank_kernel(_koszul_boundary_matrix(k, d))
            kernel_dim = len(kernel)
        image_rank = _koszul_boundary_matrix(k, d + 1).rank()
        dims.append(kernel_dim - image_rank)
        reps.append(list(gens))
    return dims, reps


# ---------------------------------------------------------------------------
# transfer and induced maps on bar homology


def transfer_map(
    table: FiniteGroupTable, sub_indices: Sequence[int], degree: int
) -> F2Matrix:
    """Matrix of the homology transfer to a subgroup in one degree.

    Rows are indexed by the subgroup's representative basis, columns by
    the ambient group's; composing with the induced map back equals
    multiplication by the subgroup index.
    """
    sub_table, embedding = table.subgroup(sub_indices)
    ambient = bar_space(table, degree)
    subspace = bar_space(sub_table, degree)
    cols = []
    for rep in ambient.rep_chains():
        image = transfer_chain(table, embedding, rep)
        cols.append(subspace.class_coordinates(image))
    rows = [0] * subspace.dim
    for j, cmask in enumerate(cols):
        for i in _bits(cmask):
            rows[i] |= 1 << j
    return F2Matrix(subspace.dim, ambient.dim, tuple(rows))


def induced_map(
    table: FiniteGroupTable, sub_indices: Sequence[int], degree: int
) -> F2Matrix:
    """Matrix of the map induced by the inclusion of a subgroup."""
    sub_table, embedding = table.subgroup(sub_indices)
    ambient = bar_space(table, degree)
    subspace = bar_space(sub_table, degree)
    cols = []
    for rep in subspace.rep_chains():
        # non-identity local letters embed to non-identity parent letters
        image = frozenset(tuple(embedding[g] for g in word) for word in rep)
        cols.append(ambient.class_coordinates(image))
    rows = [0] * ambient.dim
    for j, cmask in enumerate(cols):
        for i in _bits(cmask):
            rows[i] |= 1 << j
    return F2Matrix(ambient.dim, subspace.dim, tuple(rows))


# ---------------------------------------------------------------------------
# the orbit-sum evaluation of the operations for finite groups


def _canonical_cycle(
    g_table: FiniteGroupTable, lam: FiniteGroupTable, k: int, a: DPClass, b: DPClass
) -> BarChain:
    """Chain representing a x b in the bar complex of V_k x G.

    The degree-n divided power of a coordinate generator of V_k is
    represented by the n-letter constant bar word on that generator; the
    canonical degree-m class of G by the constant word on the reflection
    generator (index 1 for order 2, the s-element for dihedral tables).
    Products are formed with the shuffle cross product.
    """
    n_g = g_table.order
    s_elem = _dihedral_s(g_table)
    acc: set[tuple[int, ...]] = set()
    for mono in a.terms:
        for (m,) in b.terms:
            blocks: list[list[int]] = []
            for j, e in enumerate(mono):
                lam_letter = (1 << j) * n_g + g_table.identity
                blocks.append([lam_letter] * e)
            blocks.append([0 * n_g + s_elem] * m)
            chain: BarChain = frozenset({()})
            for block in blocks:
                block_chain = frozenset({tuple(block)}) if block else frozenset({()})
                chain = cross_chains(lam, chain, block_chain, lambda x: x, lambda x: x)
            acc ^= set(chain)
    return frozenset(acc)


def _dihedral_s(g_table: FiniteGroupTable) -> int:
    if g_table.kind == "z2":
        return 1
    if g_table.kind == "dihedral":
        n = g_table.params[0]
        return 2 * n + 1
    raise ValueError("expected a z2 or dihedral table")


def compsum_alpha(
    g_table: FiniteGroupTable,
    k: int,
    a: DPClass,
    b: CoefficientClass,
    max_degree: int = 12,
) -> CoefficientClass:
    """Evaluate the rank-k operation by honest orbit summation.

    Enumerates the orbits of the two-basepoint action on G-labellings,
    discards orbits whose projected stabilizer image has even index (the
    transfer through such a subgroup vanishes because the induced map in
    homology is injective), and sums, over the survivors, the chain-level
    transfer to the projected stabilizer followed by the map induced by
    the q-coordinate of the stabilizer.  The resulting cycle is read off
    in the canonical basis.
    """
    descriptor = g_table.descriptor()
    if b.group != descriptor:
        raise ValueError("coefficient class does not match the group table")
    if not a.terms:
        return CoefficientClass.zero(descriptor)
    deg_a = a.homogeneous_degree()
    b_dp = b.as_dp()
    if not b_dp.terms:
        return CoefficientClass.zero(descriptor)
    deg_b = b_dp.homogeneous_degree()
    total = deg_a + deg_b
    if total > max_degree:
        raise SizeBoundError(f"degree {total} exceeds max_degree {max_degree}")

    action = cayley_action(g_table, k)
    assert action.lam is not None and action.proj is not None and action.q_proj is not None
    lam = action.lam
    orbits = action_orbits(action)

    cycle = _canonical_cycle(g_table, lam, k, a, b_dp)
    out: set[tuple[int, ...]] = set()
    for orbit in orbits:
        if orbit.image_index % 2 == 0:
            continue
        # q-component of the stabilizer element over each projected image point
        q_of: dict[int, int] = {}
        for gi in orbit.stabilizer:
            q_of[action.proj[gi]] = action.q_proj[gi]
        sub_embedding = orbit.image
        transferred = transfer_chain(lam, sub_embedding, cycle)
        hom = [q_of[parent] for parent in sub_embedding]
        out ^= set(push_chain(hom, g_table.identity, transferred))

    out_chain: BarChain = frozenset(out)
    if bar_boundary_chain(g_table, out_chain):
        raise AssertionError("orbit sum did not produce a cycle")
    coefficient = _canonical_coordinate(g_table, out_chain, total)
    gens = GeneratorSet.z2_basis(1)
    if coefficient:
        return CoefficientClass.from_dp(descriptor, DPClass.monomial(gens, (total,)))
    return CoefficientClass.from_dp(descriptor, DPClass.zero(gens))


def _canonical_coordinate(g_table: FiniteGroupTable, chain: BarChain, degree: int) -> int:
    """Coordinate of a cycle against the canonical generator of H_degree.

    For order-2 groups the normalized bar chain group is one-dimensional.
    For dihedral groups the chain transfers to the reflection subgroup
    (an isomorphism on homology because the composite with the induced
    map is multiplication by the odd index) and is read off there.
    """
    s = _dihedral_s(g_table)
    if g_table.order == 2:
        return 1 if (s,) * degree in chain else 0
    reduced = transfer_chain(g_table, (g_table.identity, s), chain)
    return 1 if (1,) * degree in reduced else 0
