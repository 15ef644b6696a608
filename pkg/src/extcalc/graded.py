"""Graded groups and the coefficient calculus on them.

A GradedGroup is a finitely supported family of admissible groups indexed by
integer degrees.  Two readings are used side by side:

* homology data of a connected countable CW complex (support in degrees
  >= 1, e.g. the reduced homology of a Moore complex), and
* cohomology data of a compact metric space, stored with degree d holding
  H^d(X); negative-degree slots only ever appear in pairing outputs, where
  a complex is paired against a compactum and the natural index is the
  difference of the two gradings.

All operations reduce to degreewise tensor/Tor of admissible groups.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .abelian import (
    AdmissibleGroup,
    Cyclic,
    ExtNat,
    INFINITY,
    PrimeSet,
    Q,
    TRIVIAL,
    Z,
    fresh_prime,
    localized,
    prufer,
)
from .errors import DomainError


@dataclass(frozen=True)
class GradedGroup:
    """Finitely many nontrivial admissible groups indexed by degree.

    >>> GradedGroup.of({1: Z, 2: TRIVIAL}) == GradedGroup.of({1: Z})
    True
    """

    entries: tuple[tuple[int, AdmissibleGroup], ...]

    @classmethod
    def of(cls, mapping) -> "GradedGroup":
        items = []
        for degree, group in dict(mapping).items():
            if not isinstance(degree, int) or isinstance(degree, bool):
                raise DomainError(f"degree must be an integer, got {degree!r}", code="bad_degree")
            if not group.is_trivial:
                items.append((degree, group))
        items.sort()
        return cls(tuple(items))

    def at(self, degree: int) -> AdmissibleGroup:
        for d, g in self.entries:
            if d == degree:
                return g
        return TRIVIAL

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.entries)

    @property
    def is_zero(self) -> bool:
        return not self.entries

    def shift(self, r: int) -> "GradedGroup":
        return GradedGroup(tuple((d + r, g) for d, g in self.entries))

    def direct_sum(self, other: "GradedGroup") -> "GradedGroup":
        out = dict(self.entries)
        for d, g in other.entries:
            out[d] = out.get(d, TRIVIAL) + g
        return GradedGroup.of(out)

    def min_degree(self) -> ExtNat:
        """Least degree with a nonzero entry; infinity when there is none."""
        return ExtNat(min(self.degrees)) if self.entries else INFINITY

    def support_primes(self) -> tuple[int, ...]:
        out = set()
        for _, g in self.entries:
            out.update(g.support_primes())
        return tuple(sorted(out))

    def __repr__(self):
        from .dsl import format_graded

        return f"GradedGroup({format_graded(self)})"


EMPTY_GRADED = GradedGroup(())


def _require_coefficient(group: AdmissibleGroup):
    if group.is_trivial:
        raise DomainError("coefficient group must be nontrivial", code="trivial_group")


def homology_with_coefficients(k: GradedGroup, group: AdmissibleGroup) -> GradedGroup:
    """Homology of a complex with given homology `k` and coefficients `group`.

    Universal coefficients degreewise: degree n holds
    (k_n (x) G) (+) Tor(k_{n-1}, G).
    """
    _require_coefficient(group)
    out = {}
    for d, g in k.entries:
        out[d] = out.get(d, TRIVIAL) + g.tensor(group)
        out[d + 1] = out.get(d + 1, TRIVIAL) + g.tor(group)
    return GradedGroup.of(out)


def homological_dimension(k: GradedGroup, group: AdmissibleGroup) -> ExtNat:
    """Least degree where homology with these coefficients is nonzero."""
    return homology_with_coefficients(k, group).min_degree()


def connectivity_index(k: GradedGroup) -> ExtNat:
    """Homological dimension with integer coefficients: the least nonzero degree."""
    return homological_dimension(k, Z)


def smash(k: GradedGroup, l: GradedGroup) -> GradedGroup:
    """Homology of a smash product, by the Kunneth rule (all Tor terms are
    direct summands here, so the answer is exact, not just up to extension)."""
    out = EMPTY_GRADED
    for d, g in l.entries:
        out = out.direct_sum(homology_with_coefficients(k, g).shift(d))
    return out


def suspend(k: GradedGroup, r: int) -> GradedGroup:
    """Homology of the r-fold suspension: shift every degree up by r."""
    if r < 0:
        raise DomainError("suspension count must be nonnegative", code="bad_degree")
    return k.shift(r)


def cohomology_with_coefficients(x: GradedGroup, group: AdmissibleGroup) -> GradedGroup:
    """Cohomology of a compactum with stored cohomology `x` and coefficients
    `group`: degree d holds (G (x) x_d) (+) Tor(G, x_{d+1}).

    The Tor partner sits one stored degree up because stored degrees run
    opposite to the reversed grading in which the coefficient formula is
    stated.
    """
    _require_coefficient(group)
    out = {}
    for d, g in x.entries:
        out[d] = out.get(d, TRIVIAL) + group.tensor(g)
        out[d - 1] = out.get(d - 1, TRIVIAL) + group.tor(g)
    return GradedGroup.of(out)


def pairing(x: GradedGroup, k: GradedGroup) -> tuple[GradedGroup, GradedGroup]:
    """Pair a compactum (cohomology data `x`) against a complex (homology
    data `k`).

    Output degree n holds the mixed cohomology in reversed degree n, where a
    complex contribution in degree j against a compactum contribution in
    stored degree d lands at n = j - d; negative n can occur.  The two
    components compute the same answer along the two expansion orders and
    must agree degreewise.
    """
    via_cohomology = {}
    for j, g in k.entries:
        for d, h in cohomology_with_coefficients(x, g).entries:
            n = j - d
            via_cohomology[n] = via_cohomology.get(n, TRIVIAL) + h
    via_homology = {}
    for d, g in x.entries:
        for i, h in homology_with_coefficients(k, g).entries:
            n = i - d
            via_homology[n] = via_homology.get(n, TRIVIAL) + h
    return GradedGroup.of(via_cohomology), GradedGroup.of(via_homology)


def vanishing_check(x: GradedGroup, k: GradedGroup, m: int) -> tuple[bool, bool, bool]:
    """Three equivalent vanishing statements, each computed independently.

    1. the pairing of x and k vanishes in all output degrees <= -m,
    2. homology of k with coefficients x_d vanishes in degrees i <= d - m,
    3. cohomology of x with coefficients k_j vanishes in degrees i >= j + m.
    """
    paired = pairing(x, k)[0]
    first = all(n > -m for n in paired.degrees)
    second = all(
        i > d - m
        for d, g in x.entries
        for i in homology_with_coefficients(k, g).degrees
    )
    third = all(
        i < j + m
        for j, g in k.entries
        for i in cohomology_with_coefficients(x, g).degrees
    )
    return first, second, third


@dataclass(frozen=True)
class GradedOrderVerdict:
    """Outcome of the graded dimension-order test.

    When `holds`, every coefficient in `checked` satisfies dim(k) <= dim(l);
    otherwise `witness` names the first failing coefficient with both
    dimensions.
    """

    holds: bool
    checked: tuple[AdmissibleGroup, ...]
    witness: Optional[tuple[AdmissibleGroup, ExtNat, ExtNat]] = None


def bockstein_family(*graded: GradedGroup) -> tuple[AdmissibleGroup, ...]:
    """Q plus the three local test groups at each relevant prime, where the
    relevant primes are those occurring in the inputs plus one fresh
    representative for all remaining primes."""
    primes = set()
    for k in graded:
        primes.update(k.support_primes())
    primes.add(fresh_prime(primes))
    family = [Q]
    for p in sorted(primes):
        family.append(AdmissibleGroup.of(Cyclic(p, 1)))
        family.append(prufer(p))
        family.append(localized(PrimeSet.of(p)))
    return tuple(family)


def graded_order_leq(k: GradedGroup, l: GradedGroup) -> GradedOrderVerdict:
    """Decide dim-order over the canonical coefficient family.

    A failure is definitive; a pass certifies the inequality for every
    admissible coefficient group, since each one's dimension is determined
    by the family's (uniformity in the prime covers the rest).
    """
    family = bockstein_family(k, l)
    for g in family:
        dk = homological_dimension(k, g)
        dl = homological_dimension(l, g)
        if not dk <= dl:
            return GradedOrderVerdict(False, family, (g, dk, dl))
    return GradedOrderVerdict(True, family)


def moore_graded(group: AdmissibleGroup, degree: int) -> GradedGroup:
    """Homology of a Moore complex: one group concentrated in one degree."""
    if group.is_trivial:
        raise DomainError("a Moore complex needs a nontrivial group", code="trivial_group")
    if degree < 1:
        raise DomainError("a Moore complex needs degree >= 1", code="bad_degree")
    return GradedGroup.of({degree: group})
