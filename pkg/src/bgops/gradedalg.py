"""Divided power algebras over GF(2) on named graded generators.

Classes are GF(2)-sums of divided-power monomials v1^[n1]...vk^[nk].
Multiplication follows v^[n] v^[m] = C(n+m, m) v^[n+m]; over GF(2) a
product of monomials survives exactly when the exponents are bitwise
disjoint generator by generator, in which case exponents add.

These algebras model the mod-2 homology of classifying spaces of
elementary abelian 2-groups (generators of degree 1) and of tori
(generators of degree 2); the degree-4m line pattern of H_*(BSU(2)) is
modelled separately by SU2Class.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Mapping, Sequence

from .f2core import F2Matrix

DPMonomial = tuple[int, ...]
"""Exponent vector of a divided-power monomial, aligned with a GeneratorSet."""


class GeneratorMismatchError(ValueError):
    """Operands live over different generator sets."""


@dataclass(frozen=True)
class GeneratorSet:
    """Ordered named generators with degrees in {1, 2}."""

    names: tuple[str, ...]
    degrees: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.names) != len(self.degrees):
            raise ValueError("names/degrees length mismatch")
        if len(set(self.names)) != len(self.names):
            raise ValueError("generator names must be distinct")
        if any(d not in (1, 2) for d in self.degrees):
            raise ValueError("generator degrees must be 1 or 2")

    def __len__(self) -> int:
        return len(self.names)

    def monomial_degree(self, mono: DPMonomial) -> int:
        return sum(d * e for d, e in zip(self.degrees, mono))

    @staticmethod
    def v_basis(k: int) -> "GeneratorSet":
        """Degree-1 generators x (k = 1) or x1..xk."""
        if k < 0:
            raise ValueError("negative rank")
        if k == 0:
            return GeneratorSet((), ())
        if k == 1:
            return GeneratorSet(("x",), (1,))
        return GeneratorSet(tuple(f"x{i}" for i in range(1, k + 1)), (1,) * k)

    @staticmethod
    def z2_basis(l: int) -> "GeneratorSet":
        """Degree-1 generators x (l = 1) or t1..tl."""
        if l < 1:
            raise ValueError("rank must be positive")
        if l == 1:
            return GeneratorSet(("x",), (1,))
        return GeneratorSet(tuple(f"t{i}" for i in range(1, l + 1)), (1,) * l)

    @staticmethod
    def torus_basis(l: int) -> "GeneratorSet":
        """Degree-2 generators y (l = 1) or y1..yl."""
        if l < 1:
            raise ValueError("rank must be positive")
        if l == 1:
            return GeneratorSet(("y",), (2,))
        return GeneratorSet(tuple(f"y{i}" for i in range(1, l + 1)), (2,) * l)


@dataclass(frozen=True)
class DPClass:
    """GF(2)-sum of divided-power monomials over a fixed generator set.

    ``terms`` is a set of exponent vectors; duplicate monomials cancel.
    Inhomogeneous sums are permitted as values, but operations that
    require homogeneity assert it via ``homogeneous_degree``.
    """

    gens: GeneratorSet
    terms: frozenset[DPMonomial]

    def __post_init__(self) -> None:
        n = len(self.gens)
        for t in self.terms:
            if len(t) != n or any(e < 0 for e in t):
                raise ValueError(f"bad monomial {t!r} for {n} generators")

    @classmethod
    def zero(cls, gens: GeneratorSet) -> "DPClass":
        return cls(gens, frozenset())

    @classmethod
    def unit(cls, gens: GeneratorSet) -> "DPClass":
        return cls(gens, frozenset({(0,) * len(gens)}))

    @classmethod
    def monomial(cls, gens: GeneratorSet, exps: Sequence[int] | Mapping[str, int]) -> "DPClass":
        if isinstance(exps, Mapping):
            unknown = set(exps) - set(gens.names)
            if unknown:
                raise ValueError(f"unknown generators {sorted(unknown)}")
            exps = tuple(int(exps.get(name, 0)) for name in gens.names)
        return cls(gens, frozenset({tuple(int(e) for e in exps)}))

    @classmethod
    def from_terms(cls, gens: GeneratorSet, terms: Iterable[Sequence[int]]) -> "DPClass":
        acc: set[DPMonomial] = set()
        for t in terms:
            acc ^= {tuple(int(e) for e in t)}
        return cls(gens, frozenset(acc))

    def __add__(self, other: "DPClass") -> "DPClass":
        if self.gens != other.gens:
            raise GeneratorMismatchError("cannot add classes over different generators")
        return DPClass(self.gens, self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def scaled(self, parity: int) -> "DPClass":
        return self if parity & 1 else DPClass.zero(self.gens)

    def degrees(self) -> set[int]:
        return {self.gens.monomial_degree(t) for t in self.terms}

    def homogeneous_degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError(f"class is not homogeneous (degrees {sorted(ds)})")
        return ds.pop()

    def sorted_terms(self) -> list[DPMonomial]:
        return sorted(self.terms)

    def to_json(self) -> dict:
        return {
            "generators": [
                {"name": n, "degree": d} for n, d in zip(self.gens.names, self.gens.degrees)
            ],
            "terms": [
                {n: e for n, e in zip(self.gens.names, t) if e} for t in self.sorted_terms()
            ],
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "DPClass":
        gens = GeneratorSet(
            tuple(g["name"] for g in doc["generators"]),
            tuple(int(g["degree"]) for g in doc["generators"]),
        )
        return cls.from_terms(
            gens, [tuple(int(t.get(n, 0)) for n in gens.names) for t in doc["terms"]]
        )

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for t in self.sorted_terms():
            factors = [
                name if e == 1 else f"{name}^[{e}]"
                for name, e in zip(self.gens.names, t)
                if e
            ]
            parts.append("*".join(factors) if factors else "1")
        return " + ".join(parts)


def _monomial_product(m: DPMonomial, n: DPMonomial) -> DPMonomial | None:
    """Product of two monomials, or None when the coefficient is even."""
    for a, b in zip(m, n):
        if a & b:
            return None
    return tuple(a | b for a, b in zip(m, n))


def dp_multiply(a: DPClass, b: DPClass) -> DPClass:
    """Bilinear extension of v^[n] v^[m] = C(n+m, m) v^[n+m]."""
    if a.gens != b.gens:
        raise GeneratorMismatchError("cannot multiply classes over different generators")
    acc: set[DPMonomial] = set()
    for m in a.terms:
        for n in b.terms:
            p = _monomial_product(m, n)
            if p is not None:
                acc ^= {p}
    return DPClass(a.gens, frozenset(acc))


def dp_coproduct(mono: DPMonomial) -> list[tuple[DPMonomial, DPMonomial]]:
    """Deconcatenation coproduct of a monomial.

    Splits each generator independently: v^[n] -> sum of v^[i] x v^[n-i],
    all coefficients 1.  The pair list is the product of the per-generator
    splittings, in lexicographic order of the left factor.
    """
    pairs = []
    for left in itertools.product(*(range(e + 1) for e in mono)):
        right = tuple(e - i for e, i in zip(mono, left))
        pairs.append((left, right))
    return pairs


@lru_cache(maxsize=None)
def _sum_power(rows_mask: int, n: int, l: int) -> frozenset[DPMonomial]:
    """Terms of (sum of t_i over set bits of rows_mask)^[n] in l generators.

    Divided-power addition: (u + v)^[n] = sum over i+j=n of u^[i] v^[j],
    so the expansion runs over compositions of n supported on rows_mask,
    every coefficient 1.
    """
    positions = [i for i in range(l) if (rows_mask >> i) & 1]
    if not positions:
        return frozenset() if n > 0 else frozenset({(0,) * l})
    out = set()
    for comp in _compositions(n, len(positions)):
        mono = [0] * l
        for pos, c in zip(positions, comp):
            mono[pos] = c
        out.add(tuple(mono))
    return frozenset(out)


def _compositions(n: int, parts: int) -> Iterable[tuple[int, ...]]:
    """All tuples of `parts` non-negative integers summing to n."""
    if parts == 0:
        if n == 0:
            yield ()
        return
    if parts == 1:
        yield (n,)
        return
    for first in range(n + 1):
        for rest in _compositions(n - first, parts - 1):
            yield (first,) + rest


def linear_push(k_matrix: F2Matrix, a: DPClass, target: GeneratorSet | None = None) -> DPClass:
    """Map on homology induced by a linear map of elementary abelian 2-groups.

    ``k_matrix`` is l x k over GF(2); ``a`` lives over k degree-1
    generators.  The induced ring map is determined by
    x_j^[n] -> (sum of t_i over rows i with K[i][j] = 1)^[n], expanded by
    divided-power addition.
    """
    k = len(a.gens)
    if any(d != 1 for d in a.gens.degrees):
        raise ValueError("linear_push expects degree-1 generators")
    if k_matrix.cols != k:
        raise ValueError("matrix column count must match source generator count")
    l = k_matrix.rows
    if target is None:
        target = GeneratorSet.z2_basis(l) if l > 0 else GeneratorSet((), ())
    if len(target) != l or any(d != 1 for d in target.degrees):
        raise ValueError("target generator set must have l degree-1 generators")
    acc: set[DPMonomial] = set()
    columns = [k_matrix.column(j) for j in range(k)]
    for mono in a.terms:
        factors = [_sum_power(columns[j], e, l) for j, e in enumerate(mono) if e > 0]
        factors.sort(key=len)
        partial: set[DPMonomial] = {(0,) * l}
        for f in factors:
            if not partial:
                break
            nxt: set[DPMonomial] = set()
            for m in partial:
                for n in f:
                    p = _monomial_product(m, n)
                    if p is not None:
                        nxt ^= {p}
            partial = nxt
        acc ^= partial
    return DPClass(target, frozenset(acc))


def beta_push(a: DPClass, target: GeneratorSet | None = None) -> DPClass:
    """Halving map from one degree-1 generator to one degree-2 generator.

    x^[2m] -> y^[m] and x^[2m+1] -> 0; this is a ring map, zero in odd
    degrees and a degreewise isomorphism in even degrees.
    """
    if len(a.gens) != 1 or a.gens.degrees != (1,):
        raise ValueError("beta_push expects one degree-1 generator")
    if target is None:
        target = GeneratorSet.torus_basis(1)
    if len(target) != 1 or target.degrees != (2,):
        raise ValueError("beta_push target must be one degree-2 generator")
    acc: set[DPMonomial] = set()
    for (e,) in a.terms:
        if e % 2 == 0:
            acc ^= {(e // 2,)}
    return DPClass(target, frozenset(acc))


@dataclass(frozen=True)
class SU2Class:
    """GF(2)-sum of the degree-4m generators of H_*(BSU(2)).

    Stored by the index m (degree 4m), so no invalid degree is
    representable.
    """

    terms: frozenset[int]

    def __post_init__(self) -> None:
        if any(m < 0 for m in self.terms):
            raise ValueError("negative generator index")

    @classmethod
    def zero(cls) -> "SU2Class":
        return cls(frozenset())

    @classmethod
    def unit(cls) -> "SU2Class":
        return cls(frozenset({0}))

    @classmethod
    def generator(cls, m: int) -> "SU2Class":
        return cls(frozenset({m}))

    def __add__(self, other: "SU2Class") -> "SU2Class":
        return SU2Class(self.terms ^ other.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def degrees(self) -> set[int]:
        return {4 * m for m in self.terms}

    def homogeneous_degree(self) -> int:
        ds = self.degrees()
        if len(ds) != 1:
            raise ValueError("class is not homogeneous")
        return ds.pop()

    def to_json(self) -> dict:
        return {"su2": sorted(self.terms)}

    @classmethod
    def from_json(cls, doc: Mapping) -> "SU2Class":
        return cls(frozenset(int(m) for m in doc["su2"]))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"u_{m}" for m in sorted(self.terms))


def su2_act(a: DPClass, b: SU2Class) -> SU2Class:
    """Action of the divided power algebra on one degree-1 generator.

    Lift u_m to x^[4m], multiply, then project to the quotient by the
    ideal generated by x and x^[2]: only exponents divisible by 4 survive.
    """
    if len(a.gens) != 1 or a.gens.degrees != (1,):
        raise ValueError("su2_act expects one degree-1 generator")
    acc: set[int] = set()
    for (e,) in a.terms:
        for m in b.terms:
            if e & (4 * m):
                continue  # even binomial coefficient
            total = e + 4 * m
            if total % 4 == 0:
                acc ^= {total // 4}
    return SU2Class(frozenset(acc))
