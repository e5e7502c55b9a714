"""Closed-form string topology operations on mod-2 homology of BG.

For each supported coefficient group G the operation indexed by a class
a over the rank-k elementary abelian 2-group and a class b over G is
evaluated through the computed closed forms:

* elementary abelian targets: either the matrix-count fast path (the
  A-counting function below) or, as an internal oracle, the sum of
  induced maps over all linear maps between the elementary abelian
  groups;
* dihedral groups of order 2 mod 4: transport along the mod-2 homology
  isomorphism with Z/2;
* the circle (k <= 2) and SU(2) (k <= 1): explicit one-line formulas;
* finite products and higher tori: reduction to the factors through the
  diagonal coproduct.

Unsupported (group, k) pairs raise UnsupportedOperationError rather than
silently returning zero.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .f2core import F2Matrix, binom_parity, multinomial_parity
from .gradedalg import (
    DPClass,
    DPMonomial,
    GeneratorSet,
    SU2Class,
    beta_push,
    dp_coproduct,
    dp_multiply,
    linear_push,
    su2_act,
)
from .symhomology import SymClass, term_is_decomposable, term_weight


class UnsupportedOperationError(ValueError):
    """The requested (group, k) pair has no computed closed form."""


class GroupHypothesisError(ValueError):
    """The coefficient group violates a stated group hypothesis."""


# ---------------------------------------------------------------------------
# group descriptors


@dataclass(frozen=True)
class Z2Power:
    """Elementary abelian 2-group of rank l."""

    l: int

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError("rank must be positive")


@dataclass(frozen=True)
class Dihedral:
    """Dihedral group of order 4n + 2; n = 0 gives Z/2."""

    n: int

    def __post_init__(self) -> None:
        if self.n < 0:
            raise ValueError("n must be non-negative")

    @property
    def order(self) -> int:
        return 4 * self.n + 2


@dataclass(frozen=True)
class Torus:
    """Torus of rank l."""

    l: int

    def __post_init__(self) -> None:
        if self.l < 1:
            raise ValueError("rank must be positive")


@dataclass(frozen=True)
class SU2:
    """The group SU(2)."""


@dataclass(frozen=True)
class ProductGroup:
    """Finite product of the other descriptors, flattened left-to-right."""

    factors: tuple["GroupDescriptor", ...]

    def __post_init__(self) -> None:
        if len(self.factors) < 2:
            raise ValueError("a product needs at least two factors")
        if any(isinstance(f, ProductGroup) for f in self.factors):
            raise ValueError("factors must be flattened")


GroupDescriptor = Union[Z2Power, Dihedral, Torus, SU2, ProductGroup]


def make_product(factors: Sequence[GroupDescriptor]) -> GroupDescriptor:
    """Product descriptor with nested products flattened left-to-right."""
    flat: list[GroupDescriptor] = []
    for f in factors:
        if isinstance(f, ProductGroup):
            flat.extend(f.factors)
        else:
            flat.append(f)
    if not flat:
        raise ValueError("empty product")
    if len(flat) == 1:
        return flat[0]
    return ProductGroup(tuple(flat))


def group_dim(g: GroupDescriptor) -> int:
    if isinstance(g, (Z2Power, Dihedral)):
        return 0
    if isinstance(g, Torus):
        return g.l
    if isinstance(g, SU2):
        return 3
    return sum(group_dim(f) for f in g.factors)


def atomic_factors(g: GroupDescriptor) -> tuple[GroupDescriptor, ...]:
    return g.factors if isinstance(g, ProductGroup) else (g,)


def is_abelian(g: GroupDescriptor) -> bool:
    if isinstance(g, Dihedral):
        return g.n == 0
    if isinstance(g, SU2):
        return False
    if isinstance(g, ProductGroup):
        return all(is_abelian(f) for f in g.factors)
    return True


def is_elementary_abelian_2(g: GroupDescriptor) -> bool:
    if isinstance(g, Z2Power):
        return True
    if isinstance(g, Dihedral):
        return g.n == 0
    if isinstance(g, ProductGroup):
        return all(is_elementary_abelian_2(f) for f in g.factors)
    return False


def is_even_or_positive_dimensional(g: GroupDescriptor) -> bool:
    """Positive-dimensional, or finite of even order.

    Every descriptor in this library satisfies this (dihedral orders
    4n + 2 are even); the check is kept explicit because several
    operations are only defined under this hypothesis.
    """
    if group_dim(g) > 0:
        return True
    for f in atomic_factors(g):
        if isinstance(f, (Z2Power, Dihedral)):
            return True
    return False


def format_group(g: GroupDescriptor) -> str:
    if isinstance(g, Z2Power):
        return f"z2^{g.l}"
    if isinstance(g, Dihedral):
        return f"d{g.order}"
    if isinstance(g, Torus):
        return f"t^{g.l}"
    if isinstance(g, SU2):
        return "su2"
    return "x".join(f"({format_group(f)})" for f in g.factors)


def parse_group(spec: str) -> GroupDescriptor:
    """Parse the group grammar: z2^L | d<4n+2> | t^L | su2 | (G1)x(G2)."""
    text = spec.replace(" ", "").lower()
    pos = 0

    def fail(msg: str) -> ValueError:
        return ValueError(f"bad group spec {spec!r}: {msg}")

    def parse_int() -> int:
        nonlocal pos
        start = pos
        while pos < len(text) and text[pos].isdigit():
            pos += 1
        if start == pos:
            raise fail(f"expected an integer at position {start}")
        return int(text[start:pos])

    def parse_atom() -> GroupDescriptor:
        nonlocal pos
        if text.startswith("(", pos):
            pos += 1
            g = parse_expr()
            if not text.startswith(")", pos):
                raise fail("unbalanced parenthesis")
            pos += 1
            return g
        if text.startswith("z2^", pos):
            pos += 3
            return Z2Power(parse_int())
        if text.startswith("z2", pos):
            pos += 2
            return Z2Power(1)
        if text.startswith("su2", pos):
            pos += 3
            return SU2()
        if text.startswith("t^", pos):
            pos += 2
            return Torus(parse_int())
        if text.startswith("d", pos):
            pos += 1
            order = parse_int()
            if order % 4 != 2:
                raise fail(f"dihedral order {order} is not 2 mod 4")
            return Dihedral((order - 2) // 4)
        raise fail(f"unrecognized group at position {pos}")

    def parse_expr() -> GroupDescriptor:
        nonlocal pos
        parts = [parse_atom()]
        while text.startswith("x", pos):
            pos += 1
            parts.append(parse_atom())
        return make_product(parts)

    g = parse_expr()
    if pos != len(text):
        raise fail(f"trailing input at position {pos}")
    return g


# ---------------------------------------------------------------------------
# coefficient classes

FactorMonomial = Union[DPMonomial, int]
"""Basis monomial of one atomic factor: an exponent tuple, or m for SU(2)."""

TensorTerm = tuple[FactorMonomial, ...]


def factor_generators(g: GroupDescriptor) -> GeneratorSet | None:
    """Generator set of an atomic factor's homology, or None for SU(2)."""
    if isinstance(g, Z2Power):
        return GeneratorSet.z2_basis(g.l)
    if isinstance(g, Dihedral):
        return GeneratorSet.z2_basis(1)
    if isinstance(g, Torus):
        return GeneratorSet.torus_basis(g.l)
    if isinstance(g, SU2):
        return None
    raise ValueError("not an atomic factor")


def _factor_unit(g: GroupDescriptor) -> FactorMonomial:
    gens = factor_generators(g)
    return 0 if gens is None else (0,) * len(gens)


def _factor_degree(g: GroupDescriptor, mono: FactorMonomial) -> int:
    gens = factor_generators(g)
    if gens is None:
        assert isinstance(mono, int)
        return 4 * mono
    assert isinstance(mono, tuple)
    return gens.monomial_degree(mono)


def _factor_basis(g: GroupDescriptor, degree: int) -> list[FactorMonomial]:
    """Canonical homology basis of an atomic factor in one degree, lex order."""
    gens = factor_generators(g)
    if gens is None:
        return [degree // 4] if degree % 4 == 0 else []
    if len(gens) == 0:
        return [()] if degree == 0 else []
    d = gens.degrees[0]
    if degree % d:
        return []
    out = []
    for comp in _compositions_lex(degree // d, len(gens)):
        out.append(comp)
    return out


def _compositions_lex(n: int, parts: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions_lex(n - first, parts - 1):
            yield (first,) + rest


@dataclass(frozen=True)
class CoefficientClass:
    """A mod-2 homology class of BG in the canonical basis convention.

    The basis convention per atomic factor: an elementary abelian group
    of rank l uses divided powers on l degree-1 generators; a dihedral
    group uses one degree-1 generator, transported along the mod-2
    homology isomorphism with its reflection subgroup; a rank-l torus
    uses l degree-2 generators; SU(2) uses one generator in each degree
    4m.  For products, terms are tensors of factor monomials.
    """

    group: GroupDescriptor
    terms: frozenset[TensorTerm]

    def __post_init__(self) -> None:
        factors = atomic_factors(self.group)
        for t in self.terms:
            if len(t) != len(factors):
                raise ValueError("tensor length does not match factor count")
            for g, mono in zip(factors, t):
                if isinstance(mono, tuple):
                    gens = factor_generators(g)
                    if gens is None or len(mono) != len(gens) or any(e < 0 for e in mono):
                        raise ValueError(f"bad factor monomial {mono!r} for {format_group(g)}")
                else:
                    if factor_generators(g) is not None or mono < 0:
                        raise ValueError(f"bad factor monomial {mono!r} for {format_group(g)}")

    @classmethod
    def zero(cls, group: GroupDescriptor) -> "CoefficientClass":
        return cls(group, frozenset())

    @classmethod
    def unit(cls, group: GroupDescriptor) -> "CoefficientClass":
        term = tuple(_factor_unit(f) for f in atomic_factors(group))
        return cls(group, frozenset({term}))

    @classmethod
    def from_dp(cls, group: GroupDescriptor, value: DPClass) -> "CoefficientClass":
        gens = factor_generators(group)
        if gens is None or isinstance(group, ProductGroup):
            raise ValueError("from_dp requires a single divided-power factor")
        if value.gens != gens:
            raise ValueError("class uses the wrong generator set for this group")
        return cls(group, frozenset({(t,) for t in value.terms}))

    @classmethod
    def from_su2(cls, group: GroupDescriptor, value: SU2Class) -> "CoefficientClass":
        if not isinstance(group, SU2):
            raise ValueError("from_su2 requires the SU(2) descriptor")
        return cls(group, frozenset({(m,) for m in value.terms}))

    @classmethod
    def tensor(cls, a: "CoefficientClass", b: "CoefficientClass") -> "CoefficientClass":
        group = make_product([a.group, b.group])
        acc: set[TensorTerm] = set()
        for s in a.terms:
            for t in b.terms:
                acc ^= {s + t}
        return cls(group, frozenset(acc))

    def as_dp(self) -> DPClass:
        gens = factor_generators(self.group)
        if gens is None or isinstance(self.group, ProductGroup):
            raise ValueError("not a single divided-power factor")
        return DPClass(gens, frozenset(t[0] for t in self.terms))  # type: ignore[misc]

    def as_su2(self) -> SU2Class:
        if not isinstance(self.group, SU2):
            raise ValueError("not an SU(2) class")
        return SU2Class(frozenset(t[0] for t in self.terms))  # type: ignore[misc]

    def __add__(self, other: "CoefficientClass") -> "CoefficientClass":
        if self.group != other.group:
            raise ValueError("cannot add classes over different groups")
        return CoefficientClass(self.group, self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def term_degree(self, term: TensorTerm) -> int:
        return sum(
            _factor_degree(g, m) for g, m in zip(atomic_factors(self.group), term)
        )

    def degrees(self) -> set[int]:
        return {self.term_degree(t) for t in self.terms}

    def homogeneous_degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("class is not homogeneous")
        return ds.pop()

    def sorted_terms(self) -> list[TensorTerm]:
        return sorted(self.terms, key=_tensor_sort_key)

    def to_json(self) -> dict:
        factors = atomic_factors(self.group)
        if len(factors) == 1:
            if isinstance(self.group, SU2):
                return self.as_su2().to_json()
            return self.as_dp().to_json()
        return {
            "group": format_group(self.group),
            "tensor_terms": [
                [list(m) if isinstance(m, tuple) else m for m in t] for t in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, group: GroupDescriptor, doc) -> "CoefficientClass":
        factors = atomic_factors(group)
        if len(factors) == 1:
            if isinstance(group, SU2):
                return cls.from_su2(group, SU2Class.from_json(doc))
            return cls.from_dp(group, DPClass.from_json(doc))
        terms = [
            tuple(tuple(m) if isinstance(m, list) else int(m) for m in t)
            for t in doc["tensor_terms"]
        ]
        acc: set[TensorTerm] = set()
        for t in terms:
            acc ^= {t}
        return cls(group, frozenset(acc))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        factors = atomic_factors(self.group)
        parts = []
        for term in self.sorted_terms():
            bits = []
            for g, mono in zip(factors, term):
                gens = factor_generators(g)
                if gens is None:
                    bits.append(f"u_{mono}")
                else:
                    assert isinstance(mono, tuple)
                    facs = [
                        name if e == 1 else f"{name}^[{e}]"
                        for name, e in zip(gens.names, mono)
                        if e
                    ]
                    bits.append("*".join(facs) if facs else "1")
            parts.append(" (x) ".join(bits))
        return " + ".join(parts)


def _tensor_sort_key(term: TensorTerm):
    return tuple((m,) if isinstance(m, int) else m for m in term)


def coefficient_basis(group: GroupDescriptor, degree: int) -> list[CoefficientClass]:
    """Canonical homology basis of BG in one degree.

    Ordered lexicographically: for products, by the composition of the
    degree over the factors first, then by factor monomials.
    """
    factors = atomic_factors(group)

    def rec(idx: int, remaining: int) -> Iterable[TensorTerm]:
        if idx == len(factors):
            if remaining == 0:
                yield ()
            return
        if idx == len(factors) - 1:
            for mono in _factor_basis(factors[idx], remaining):
                yield (mono,)
            return
        for d in range(remaining + 1):
            for mono in _factor_basis(factors[idx], d):
                for rest in rec(idx + 1, remaining - d):
                    yield (mono,) + rest

    return [CoefficientClass(group, frozenset({t})) for t in rec(0, degree)]


# ---------------------------------------------------------------------------
# the A-counting function


def A_count(
    row_sums: Sequence[int], col_sums: Sequence[int], mode: str = "parity"
) -> int:
    """Number of positive-integer matrices with column-disjoint bits.

    Counts k x l matrices of positive integers with the given row and
    column sums such that no two entries in the same column share a 1 in
    their binary expansions.  Equivalently: ways to distribute the powers
    of two of each column sum among the k rows, every row receiving at
    least one power per column, with prescribed row totals.

    ``mode`` is "exact" for the integer count or "parity" for its value
    mod 2.  Mismatched totals give 0.
    """
    if mode not in ("parity", "exact"):
        raise ValueError("mode must be 'parity' or 'exact'")
    k, l = len(row_sums), len(col_sums)
    if k < 1 or l < 1:
        raise ValueError("row and column counts must be at least 1")
    if any(n < 0 for n in itertools.chain(row_sums, col_sums)):
        raise ValueError("sums must be non-negative")
    if sum(row_sums) != sum(col_sums):
        return 0
    # DP over columns; state = remaining row sums
    states: dict[tuple[int, ...], int] = {tuple(row_sums): 1}
    for e in col_sums:
        bits = [1 << i for i in range(e.bit_length()) if (e >> i) & 1]
        if len(bits) < k:
            return 0  # k positive entries need k distinct powers of two
        nxt: dict[tuple[int, ...], int] = {}
        for state, count in states.items():
            for assign in itertools.product(range(k), repeat=len(bits)):
                if len(set(assign)) < k:
                    continue  # some row would get entry 0
                portions = [0] * k
                for bit, row in zip(bits, assign):
                    portions[row] += bit
                new_state = tuple(s - p for s, p in zip(state, portions))
                if any(s < 0 for s in new_state):
                    continue
                nxt[new_state] = nxt.get(new_state, 0) + count
        states = nxt
        if not states:
            return 0
    total = states.get((0,) * k, 0)
    return total if mode == "exact" else total & 1


# ---------------------------------------------------------------------------
# the operations


def _supported(g: GroupDescriptor, k: int) -> bool:
    if k == 0:
        return True
    if isinstance(g, (Z2Power, Dihedral)):
        return True
    if isinstance(g, Torus):
        return k <= 2
    if isinstance(g, SU2):
        return k <= 1
    return all(_supported(f, k) for f in g.factors)


def require_supported(g: GroupDescriptor, k: int) -> None:
    if not _supported(g, k):
        raise UnsupportedOperationError(
            f"the operation for group {format_group(g)} at k={k} has no computed closed form"
        )


def _check_input_class(a: DPClass, k: int) -> None:
    if len(a.gens) != k or any(d != 1 for d in a.gens.degrees):
        raise ValueError(f"input class must live over {k} degree-1 generators")


def alpha(
    g: GroupDescriptor, k: int, a: DPClass, b: CoefficientClass
) -> CoefficientClass:
    """The rank-k operation on H_*(BG) evaluated at a (x) b.

    ``a`` is a class over k degree-1 generators; ``b`` a class over G.
    Bilinear; on homogeneous inputs the output degree is
    deg(a) + deg(b) + dim(G) (2^k - 1).
    """
    if b.group != g:
        raise ValueError("coefficient class group does not match the descriptor")
    if k < 0:
        raise ValueError("k must be non-negative")
    require_supported(g, k)
    _check_input_class(a, k)

    if k == 0:
        # a is a scalar multiple of the unit class over zero generators
        return b if () in a.terms else CoefficientClass.zero(g)

    if isinstance(g, (Z2Power, Dihedral)) and (isinstance(g, Dihedral) or g.l == 1):
        return _alpha_rank_one(g, a, b)
    if isinstance(g, Z2Power):
        return _alpha_z2power_fast(g, a, b)
    if isinstance(g, Torus) and g.l == 1:
        return _alpha_torus1(g, k, a, b)
    if isinstance(g, SU2):
        return _alpha_su2(g, a, b)
    if isinstance(g, Torus):
        factors = tuple(Torus(1) for _ in range(g.l))
        tensor_terms = frozenset(
            tuple((e,) for e in t[0]) for t in b.terms  # type: ignore[index]
        )
        result = _alpha_product(factors, k, a, tensor_terms)
        back: set[TensorTerm] = set()
        for term in result:
            back ^= {(tuple(m[0] for m in term),)}  # type: ignore[index]
        return CoefficientClass(g, frozenset(back))
    assert isinstance(g, ProductGroup)
    return CoefficientClass(g, frozenset(_alpha_product(g.factors, k, a, b.terms)))


def _alpha_rank_one(g: GroupDescriptor, a: DPClass, b: CoefficientClass) -> CoefficientClass:
    """Z/2 target (and dihedral targets, transported): multiplication rule.

    A monomial with exponents (n_1, ..., n_k) acts as multiplication by
    x^[n_1] ... x^[n_k] when all n_j > 0, and by 0 otherwise.
    """
    gens = factor_generators(g)
    assert gens is not None
    acc = DPClass.zero(gens)
    for mono in a.terms:
        if any(e == 0 for e in mono):
            continue
        if multinomial_parity(mono):
            acc += DPClass.monomial(gens, (sum(mono),))
    return CoefficientClass.from_dp(g, dp_multiply(acc, b.as_dp()))


def _alpha_z2power_fast(g: Z2Power, a: DPClass, b: CoefficientClass) -> CoefficientClass:
    """Rank-l elementary abelian target via the matrix-count fast path."""
    gens = factor_generators(g)
    assert gens is not None
    l = g.l
    acc = DPClass.zero(gens)
    for mono in a.terms:
        if any(e == 0 for e in mono):
            continue
        total = sum(mono)
        # every column carries len(mono) positive entries, so its sum is at
        # least that; smaller compositions cannot contribute
        for cols in _compositions_at_least(total, l, len(mono)):
            if A_count(mono, cols, "parity"):
                acc += DPClass.monomial(gens, cols)
    return CoefficientClass.from_dp(g, dp_multiply(acc, b.as_dp()))


def _compositions_at_least(n: int, parts: int, minimum: int) -> Iterable[tuple[int, ...]]:
    if parts == 1:
        if n >= minimum:
            yield (n,)
        return
    for first in range(minimum, n - minimum * (parts - 1) + 1):
        for rest in _compositions_at_least(n - first, parts - 1, minimum):
            yield (first,) + rest


def alpha_z2power_bruteforce(
    g: Z2Power, k: int, a: DPClass, b: CoefficientClass
) -> CoefficientClass:
    """Internal oracle: sum of induced maps over all 2^(l k) linear maps."""
    if b.group != g:
        raise ValueError("coefficient class group does not match the descriptor")
    _check_input_class(a, k)
    gens = factor_generators(g)
    assert gens is not None
    l = g.l
    acc = DPClass.zero(gens)
    for bits in range(1 << (l * k)):
        data = tuple((bits >> (i * k)) & ((1 << k) - 1) for i in range(l))
        matrix = F2Matrix(l, k, data)
        acc += linear_push(matrix, a, gens)
    return CoefficientClass.from_dp(g, dp_multiply(acc, b.as_dp()))


def _alpha_torus1(g: Torus, k: int, a: DPClass, b: CoefficientClass) -> CoefficientClass:
    gens = factor_generators(g)
    assert gens is not None
    vgens = a.gens
    acc = DPClass.zero(gens)
    if k == 1:
        for (n,) in a.terms:
            acc += beta_push(DPClass.monomial(vgens, (n + 1,)), gens)
    else:
        assert k == 2
        one_gen = GeneratorSet.v_basis(1)
        for n1, n2 in a.terms:
            coeff = 1 ^ binom_parity(n1 + n2 + 2, n1 + 1)
            if coeff:
                acc += beta_push(DPClass.monomial(one_gen, (n1 + n2 + 3,)), gens)
    return CoefficientClass.from_dp(g, dp_multiply(acc, b.as_dp()))


def _alpha_su2(g: SU2, a: DPClass, b: CoefficientClass) -> CoefficientClass:
    one_gen = GeneratorSet.v_basis(1)
    out = SU2Class.zero()
    for (n,) in a.terms:
        out += su2_act(DPClass.monomial(one_gen, (n + 3,)), b.as_su2())
    return CoefficientClass.from_su2(g, out)


def _alpha_product(
    factors: tuple[GroupDescriptor, ...],
    k: int,
    a: DPClass,
    tensor_terms: frozenset[TensorTerm],
) -> set[TensorTerm]:
    """Product formula: split a through the diagonal coproduct.

    Left-nested: the first factor receives the left coproduct leg, the
    remaining factors recurse on the right leg.  Over GF(2) the twist
    map contributes no signs.
    """
    head, tail = factors[0], factors[1:]
    if not tail:
        b_head = CoefficientClass(head, frozenset(tensor_terms))
        return set(alpha(head, k, a, b_head).terms)

    out: set[TensorTerm] = set()
    vgens = a.gens
    for mono in a.terms:
        for left, right in dp_coproduct(mono):
            for term in tensor_terms:
                b1 = CoefficientClass(head, frozenset({term[:1]}))
                r1 = alpha(head, k, DPClass.monomial(vgens, left), b1)
                if r1.is_zero():
                    continue
                rest = _alpha_product(
                    tail, k, DPClass.monomial(vgens, right), frozenset({term[1:]})
                )
                for t1 in r1.terms:
                    for t2 in rest:
                        out ^= {t1 + t2}
    return out


# ---------------------------------------------------------------------------
# operations indexed by symmetric-group classes


@dataclass(frozen=True)
class OperationShape:
    """Bookkeeping for an operation with arities (n_1, ..., n_r) on G."""

    group: GroupDescriptor
    arities: tuple[int, ...]

    def __post_init__(self) -> None:
        if any(n < 1 for n in self.arities):
            raise ValueError("arities must be positive")

    @property
    def total_rank(self) -> int:
        """N = sum of (n_i - 1)."""
        return sum(n - 1 for n in self.arities)

    @property
    def shift(self) -> int:
        return group_dim(self.group) * self.total_rank


def phi_sigma(
    g: GroupDescriptor, n: int, a: SymClass, b: CoefficientClass
) -> CoefficientClass:
    """The weight-n operation evaluated at a (x) b.

    Vanishes when n is not a power of two and on every term decomposable
    for the juxtaposition product.  A single circle-word of weight 2^k
    evaluates through its canonical preimage x_1^[m_1] ... x_k^[m_k]
    under the rank-k operation; the choice of preimage is immaterial
    because the evaluation is invariant under GL_k(F2) changes of basis.
    On homogeneous inputs |output| = |b| + |a| + dim(G)(n - 1).
    """
    if n < 1:
        raise ValueError("the weight must be positive")
    if not is_even_or_positive_dimensional(g):
        raise GroupHypothesisError(
            "operations require a positive-dimensional group or a finite group of even order"
        )
    for term in a.terms:
        if term_weight(term) != n:
            raise ValueError(
                f"weight mismatch: term of weight {term_weight(term)} in a weight-{n} operation"
            )
    if n & (n - 1):
        return CoefficientClass.zero(g)
    k = n.bit_length() - 1
    out = CoefficientClass.zero(g)
    for term in a.terms:
        if term_is_decomposable(term):
            continue  # vanishing holds for every such group, no dispatch needed
        (word,) = term
        require_supported(g, k)
        preimage = DPClass.monomial(GeneratorSet.v_basis(k), word.subscripts)
        out += alpha(g, k, preimage, b)
    return out


def composite_op(
    g: GroupDescriptor,
    factors: Sequence[tuple[int, SymClass]],
    b: CoefficientClass,
) -> CoefficientClass:
    """Composite of weight-n_i operations, rightmost factor applied first.

    Total degree shift dim(G) * sum(n_i - 1).
    """
    out = b
    for n, a in reversed(list(factors)):
        out = phi_sigma(g, n, a, out)
    return out


# ---------------------------------------------------------------------------
# nontriviality search


@dataclass(frozen=True)
class WitnessResult:
    """Outcome of a witness search.

    ``witness`` is a basis class b with a nonzero operation value, or
    None.  When None, ``certified_trivial`` distinguishes a proof of
    vanishing (a closed-form detector fired) from an inconclusive search
    up to ``degree_bound``.
    """

    witness: CoefficientClass | None
    certified_trivial: bool
    degree_bound: int

    def __bool__(self) -> bool:
        return self.witness is not None


def default_witness_bound(g: GroupDescriptor, k: int, a: DPClass) -> int:
    top = max(a.degrees(), default=0)
    return top + group_dim(g) * (1 << k) + 8


def nontrivial_witness(
    g: GroupDescriptor, k: int, a: DPClass, degree_bound: int | None = None
) -> WitnessResult:
    """Search for a canonical basis element b with a nonzero operation value.

    Closed-form detectors short-circuit the search for single monomials
    over Z/2-type targets (positivity and pairwise bit-disjointness of
    the exponents), SU(2) at k = 1 (n = 1 mod 4) and the circle at k = 1
    (n odd); for these a negative answer proves the operation trivial.
    Otherwise an absent witness only reports an inconclusive search.
    """
    require_supported(g, k)
    _check_input_class(a, k)
    if degree_bound is None:
        degree_bound = default_witness_bound(g, k, a)

    if len(a.terms) == 1 and k >= 1:
        (mono,) = a.terms
        detected = _detect_monomial(g, k, mono)
        if detected is not None:
            certified, witness = detected
            if witness is not None:
                return WitnessResult(witness, False, degree_bound)
            if certified:
                return WitnessResult(None, True, degree_bound)

    for d in range(degree_bound + 1):
        for b in coefficient_basis(g, d):
            if not alpha(g, k, a, b).is_zero():
                return WitnessResult(b, False, degree_bound)
    return WitnessResult(None, False, degree_bound)


def _detect_monomial(
    g: GroupDescriptor, k: int, mono: DPMonomial
) -> tuple[bool, CoefficientClass | None] | None:
    """(certified, witness) for detector-covered cases, else None."""
    if isinstance(g, Dihedral) or (isinstance(g, Z2Power) and g.l == 1):
        if all(e > 0 for e in mono) and multinomial_parity(mono):
            return (False, CoefficientClass.unit(g))
        return (True, None)
    if isinstance(g, SU2) and k == 1:
        (n,) = mono
        if n % 4 == 1:
            return (False, CoefficientClass.unit(g))
        return (True, None)
    if isinstance(g, Torus) and g.l == 1 and k == 1:
        (n,) = mono
        if n % 2 == 1:
            return (False, CoefficientClass.unit(g))
        return (True, None)
    return None
