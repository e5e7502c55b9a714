"""Machine-readable nonvanishing certificates for homology classes.

A nonzero operation value indexed by symmetric-group classes pushes
forward to nonzero classes in the mod-2 homology of holomorphs of free
groups, the tautologically twisted homology of automorphism groups of
free groups, and affine groups over the integers and over the field of
two elements.  A certificate records the witnessing evaluation together
with stability metadata; it never claims to compute the target homology
groups themselves, which are unknown outside the stable range.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .operations import (
    CoefficientClass,
    GroupDescriptor,
    GroupHypothesisError,
    Z2Power,
    coefficient_basis,
    composite_op,
    format_group,
    group_dim,
    is_abelian,
    is_elementary_abelian_2,
    is_even_or_positive_dimensional,
    parse_group,
)
from .symhomology import CircWord, SymClass, juxta_multiply

SHIFT_CONVENTION_NOTE = (
    "degree shift convention: dim(G) * N with N = sum(n_i - 1), i.e. additive in "
    "the arities (Euler characteristic of the composite); the alternative "
    "convention dim(G) * (N - 1) that also appears in the literature is NOT "
    "used here, and the discrepancy is deliberately surfaced rather than "
    "silently resolved."
)


class Target(str, enum.Enum):
    """Certificate targets."""

    HOL_ORDINARY = "HolOrdinary"
    AUT_TWISTED = "AutTwisted"
    HOL_UNSTABLE = "HolUnstable"
    AFF_Z = "AffZ"
    AFF_F2 = "AffF2"
    AFF_Z_UNSTABLE = "AffZUnstable"
    AFF_F2_UNSTABLE = "AffF2Unstable"


@dataclass(frozen=True)
class StabilityInfo:
    """Stability metadata attached to a certificate.

    ``stable_image`` holds the image of the witness class under iterated
    stabilization together with the minimal offset L placing it in the
    stable range.  ``vanishing_bound`` is a (degree, rank) pair: the
    certified class dies under stabilization once the rank passes the
    bound.
    """

    stable: bool
    not_in_stabilization_image: bool
    unstable: bool
    stable_image: tuple[SymClass, int] | None = None
    vanishing_bound: tuple[int, int] | None = None

    def to_json(self) -> dict:
        return {
            "stable": self.stable,
            "not_in_stabilization_image": self.not_in_stabilization_image,
            "unstable": self.unstable,
            "stable_image": (
                None
                if self.stable_image is None
                else {"class": self.stable_image[0].to_json(), "L": self.stable_image[1]}
            ),
            "vanishing_bound": (
                None
                if self.vanishing_bound is None
                else {"degree": self.vanishing_bound[0], "rank": self.vanishing_bound[1]}
            ),
        }


def _check_hypothesis(target: Target, group: GroupDescriptor) -> None:
    if target in (Target.AUT_TWISTED, Target.HOL_UNSTABLE):
        if not is_even_or_positive_dimensional(group):
            raise GroupHypothesisError(
                f"{target.value} requires a positive-dimensional group or a finite "
                "group of even order"
            )
    elif target in (Target.AFF_Z, Target.AFF_Z_UNSTABLE):
        if not is_abelian(group):
            raise GroupHypothesisError(f"{target.value} requires an abelian group")
        if target is Target.AFF_Z_UNSTABLE and not is_even_or_positive_dimensional(group):
            raise GroupHypothesisError(
                f"{target.value} requires a positive-dimensional or even-order group"
            )
    elif target in (Target.AFF_F2, Target.AFF_F2_UNSTABLE):
        if not is_elementary_abelian_2(group):
            raise GroupHypothesisError(
                f"{target.value} requires an elementary abelian 2-group"
            )
    # HolOrdinary accepts every supported compact group


def _certificate_degree(target: Target, class_degree: int) -> int:
    return class_degree - 1 if target is Target.AUT_TWISTED else class_degree


def _stability_for(
    target: Target,
    factors: Sequence[tuple[int, SymClass]],
    class_degree: int,
) -> StabilityInfo:
    u = class_degree
    positive = u > 0
    if target is Target.HOL_ORDINARY:
        image, offset = stable_image(factors, u)
        return StabilityInfo(
            stable=True,
            not_in_stabilization_image=positive,
            unstable=False,
            stable_image=(image, offset),
        )
    if target is Target.AUT_TWISTED:
        k = u - 1
        return StabilityInfo(
            stable=False,
            not_in_stabilization_image=False,
            unstable=True,
            vanishing_bound=(k, 2 * k + 3),
        )
    if target is Target.HOL_UNSTABLE:
        return StabilityInfo(
            stable=False,
            not_in_stabilization_image=positive,
            unstable=True,
            vanishing_bound=(u, 2 * (u - 1) + 3),
        )
    if target is Target.AFF_Z:
        return StabilityInfo(stable=False, not_in_stabilization_image=False, unstable=False)
    if target is Target.AFF_F2:
        return StabilityInfo(
            stable=False,
            not_in_stabilization_image=False,
            unstable=positive,
            vanishing_bound=(u, 2 * u + 1) if positive else None,
        )
    # the unstable affine families inherit the holomorph vanishing bound
    return StabilityInfo(
        stable=False,
        not_in_stabilization_image=False,
        unstable=True,
        vanishing_bound=(u, 2 * (u - 1) + 3),
    )


@dataclass(frozen=True)
class Certificate:
    """A nonvanishing record for one target group family.

    ``degree`` is the homology degree of the certified class in the
    target at rank N; the witness packages the coefficient group, the
    operation factors, the coefficient class and the nonzero value.
    """

    target: Target
    group: GroupDescriptor
    factors: tuple[tuple[int, SymClass], ...]
    rank: int
    degree: int
    coefficient: CoefficientClass
    output: CoefficientClass
    stability: StabilityInfo
    shift_convention_note: str = SHIFT_CONVENTION_NOTE

    def __post_init__(self) -> None:
        if self.rank != sum(n - 1 for n, _ in self.factors):
            raise ValueError("rank must equal the sum of (n_i - 1)")
        class_degree = sum(a.homogeneous_degree() for _, a in self.factors)
        if self.degree != _certificate_degree(self.target, class_degree):
            raise ValueError("certificate degree does not match the factor degrees")
        if self.output.is_zero():
            raise ValueError("certificate output must be nonzero")
        _check_hypothesis(self.target, self.group)

    def revalidate(self) -> bool:
        """Re-run the witness evaluation; certificates must reproduce."""
        value = composite_op(self.group, self.factors, self.coefficient)
        return value == self.output and not value.is_zero()

    def to_json(self) -> dict:
        return {
            "version": "v1",
            "target": self.target.value,
            "N": self.rank,
            "degree": self.degree,
            "witness": {
                "group": format_group(self.group),
                "factors": [{"n": n, "a": a.to_json()} for n, a in self.factors],
                "coefficient": self.coefficient.to_json(),
                "output": self.output.to_json(),
            },
            "stability": self.stability.to_json(),
            "shift_convention_note": self.shift_convention_note,
        }

    @classmethod
    def from_json(cls, doc: Mapping) -> "Certificate":
        """Parse a v1 certificate document; unknown fields are ignored."""
        if doc.get("version") != "v1":
            raise ValueError("unsupported certificate version")
        witness = doc["witness"]
        group = parse_group(witness["group"])
        factors = tuple(
            (int(f["n"]), SymClass.from_json(f["a"])) for f in witness["factors"]
        )
        stability_doc = doc["stability"]
        stable_image_doc = stability_doc.get("stable_image")
        vanishing_doc = stability_doc.get("vanishing_bound")
        stability = StabilityInfo(
            stable=bool(stability_doc["stable"]),
            not_in_stabilization_image=bool(stability_doc["not_in_stabilization_image"]),
            unstable=bool(stability_doc["unstable"]),
            stable_image=(
                None
                if stable_image_doc is None
                else (SymClass.from_json(stable_image_doc["class"]), int(stable_image_doc["L"]))
            ),
            vanishing_bound=(
                None
                if vanishing_doc is None
                else (int(vanishing_doc["degree"]), int(vanishing_doc["rank"]))
            ),
        )
        return cls(
            target=Target(doc["target"]),
            group=group,
            factors=factors,
            rank=int(doc["N"]),
            degree=int(doc["degree"]),
            coefficient=CoefficientClass.from_json(group, witness["coefficient"]),
            output=CoefficientClass.from_json(group, witness["output"]),
            stability=stability,
            shift_convention_note=str(doc.get("shift_convention_note", SHIFT_CONVENTION_NOTE)),
        )


@dataclass(frozen=True)
class FailureReport:
    """No witness found within the search bound; inconclusive, not a proof."""

    target: Target
    group: GroupDescriptor
    factors: tuple[tuple[int, SymClass], ...]
    degree_bound: int
    reason: str = "no nonzero witness found within the degree bound"

    def to_json(self) -> dict:
        return {
            "version": "v1",
            "target": self.target.value,
            "failure": True,
            "reason": self.reason,
            "group": format_group(self.group),
            "factors": [{"n": n, "a": a.to_json()} for n, a in self.factors],
            "degree_bound": self.degree_bound,
        }


def default_certificate_bound(
    group: GroupDescriptor, factors: Sequence[tuple[int, SymClass]]
) -> int:
    total_degree = sum(a.homogeneous_degree() for _, a in factors if a.terms)
    total_rank = sum(n - 1 for n, _ in factors)
    return total_degree + group_dim(group) * total_rank + 8


def build_certificate(
    target: Target | str,
    group: GroupDescriptor,
    factors: Sequence[tuple[int, SymClass]],
    degree_bound: int | None = None,
) -> Certificate | FailureReport:
    """Search for a nonzero witness and emit a certificate.

    Coefficient classes are tried in the canonical basis by increasing
    degree, lexicographically within a degree, so emitted certificates
    are reproducible.  A missing witness yields a FailureReport, which is
    inconclusive rather than a proof of triviality.
    """
    target = Target(target)
    _check_hypothesis(target, group)
    factors = tuple((int(n), a) for n, a in factors)
    if degree_bound is None:
        degree_bound = default_certificate_bound(group, factors)
    class_degree = sum(a.homogeneous_degree() for _, a in factors)
    for d in range(degree_bound + 1):
        for b in coefficient_basis(group, d):
            value = composite_op(group, factors, b)
            if not value.is_zero():
                return Certificate(
                    target=target,
                    group=group,
                    factors=factors,
                    rank=sum(n - 1 for n, _ in factors),
                    degree=_certificate_degree(target, class_degree),
                    coefficient=b,
                    output=value,
                    stability=_stability_for(target, factors, class_degree),
                )
    return FailureReport(target, group, factors, degree_bound)


def stable_image(
    factors: Sequence[tuple[int, SymClass]], k_degree: int
) -> tuple[SymClass, int]:
    """Image under iterated stabilization, with the minimal offset in range.

    The stable image is the juxtaposition product of the factors, landing
    in weight N + r; the offset L is minimal with N + r + L > 2k + 1.
    The image is nonzero whenever all factors are, because the ring is
    polynomial.
    """
    image = SymClass.one()
    total_weight = 0
    for n, a in factors:
        if a.terms and a.homogeneous_weight() != n:
            raise ValueError(f"factor of weight {a.homogeneous_weight()} attached to arity {n}")
        image = juxta_multiply(image, a)
        total_weight += n
    rank = sum(n - 1 for n, _ in factors)
    r = len(list(factors))
    offset = max(0, 2 * k_degree + 2 - (rank + r))
    return image, offset


@dataclass(frozen=True)
class CertificateBundle:
    """The full set of certificate kinds emitted for one example family."""

    u: tuple[int, ...]
    assignment: tuple[int, ...]
    rank: int
    certificates: dict[Target, Certificate] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {
            "version": "v1",
            "u": list(self.u),
            "assignment": list(self.assignment),
            "N": self.rank,
            "certificates": {t.value: c.to_json() for t, c in self.certificates.items()},
        }


def example_family(u: Sequence[int], assignment: Sequence[int]) -> CertificateBundle:
    """Certificates from bit-disjoint integers and a surjective grouping.

    ``u`` lists positive integers no two of which share a binary 1;
    ``assignment`` maps each index of u onto one of r groups, labelled
    1..r, surjectively.  Group i contributes the arity 2^(size of group i)
    and the composition-product class with the u_j of group i as
    subscripts.  With coefficients in Z/2 the composite operation is
    multiplication by x^[sum(u)], so every target certifies.
    """
    u = tuple(int(v) for v in u)
    if not u or any(v < 1 for v in u):
        raise ValueError("u must be a non-empty list of positive integers")
    for i in range(len(u)):
        for j in range(i + 1, len(u)):
            if u[i] & u[j]:
                raise ValueError(
                    f"u[{i}] = {u[i]} and u[{j}] = {u[j]} share a 1 in their binary expansions"
                )
    assignment = tuple(int(v) for v in assignment)
    if len(assignment) != len(u):
        raise ValueError("assignment length must match u")
    r = max(assignment, default=0)
    if sorted(set(assignment)) != list(range(1, r + 1)):
        raise ValueError("assignment must be surjective onto 1..r")

    factors = []
    for i in range(1, r + 1):
        members = [u[j] for j in range(len(u)) if assignment[j] == i]
        factors.append((1 << len(members), SymClass.single(CircWord.of(*members))))

    group = Z2Power(1)
    rank = sum(n - 1 for n, _ in factors)
    certificates: dict[Target, Certificate] = {}
    for target in Target:
        result = build_certificate(target, group, factors)
        if isinstance(result, FailureReport):  # pragma: no cover - family always certifies
            raise AssertionError(f"example family unexpectedly failed for {target.value}")
        certificates[target] = result
    return CertificateBundle(u, assignment, rank, certificates)
