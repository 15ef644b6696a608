"""Admissible abelian groups and their symbolic tensor/torsion calculus.

The groups handled here are exactly the finite direct sums of four kinds of
building blocks:

* ``Localization(l)`` -- the subring Z_(l) of Q whose denominators avoid the
  primes in ``l``; this covers Z (all primes), Q (no primes) and Z[1/p],
* ``Cyclic(p, k)``    -- the cyclic group Z/p^k of prime-power order,
* ``Prufer(p)``       -- the Prufer group Z/p^oo.

Every finitely generated abelian group lands in this class after splitting
cyclic factors into prime-power pieces, and the class is closed under tensor
product and Tor.  Both functors are computed atom-by-atom from closed-form
tables and extended bilinearly over direct sums.

The module also implements the Bockstein basis sigma(G) -- the set of
"test groups" Q, Z/p, Z/p^oo, Z_(p) that detect G in homological dimension
theory -- together with its closure tau(G).  Although sigma(G) speaks about
infinitely many primes, all but finitely many behave identically, so a
default pattern plus finitely many exceptions represents it exactly.
"""

from __future__ import annotations

import enum
import functools
import itertools
from collections import Counter
from dataclasses import dataclass

from sympy import isprime, nextprime

from .errors import DomainError


# ---------------------------------------------------------------------------
# Naturals extended with infinity.


@functools.total_ordering
class ExtNat:
    """A natural number or infinity.

    Ordered and hashable; compares against plain ints.  Addition with a
    natural is defined and infinity absorbs it; subtraction saturates at 0.

    >>> ExtNat(3) + 1
    ExtNat(4)
    >>> INFINITY + 5 == INFINITY
    True
    >>> max(ExtNat(2), INFINITY)
    ExtNat(oo)
    """

    __slots__ = ("_value",)

    def __init__(self, value: int | None = None):
        if value is not None and (not isinstance(value, int) or isinstance(value, bool) or value < 0):
            raise ValueError(f"ExtNat takes a nonnegative int or None for infinity, got {value!r}")
        self._value = value

    @classmethod
    def of(cls, value: "ExtNat | int | str") -> "ExtNat":
        """Coerce an int, an ExtNat, or the JSON spelling \"inf\"."""
        if isinstance(value, ExtNat):
            return value
        if value == "inf":
            return INFINITY
        if isinstance(value, int) and not isinstance(value, bool):
            return cls(value)
        raise ValueError(f"cannot read {value!r} as a natural or infinity")

    @property
    def is_finite(self) -> bool:
        return self._value is not None

    @property
    def value(self) -> int:
        if self._value is None:
            raise ValueError("infinity has no finite value")
        return self._value

    def _coerce(self, other) -> "ExtNat":
        if isinstance(other, ExtNat):
            return other
        if isinstance(other, int) and not isinstance(other, bool):
            return ExtNat(other)
        return NotImplemented

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self._value == other._value

    def __lt__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None:
            return False
        if other._value is None:
            return True
        return self._value < other._value

    def __hash__(self):
        return hash(("ExtNat", self._value))

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None or other._value is None:
            return INFINITY
        return ExtNat(self._value + other._value)

    __radd__ = __add__

    def __sub__(self, other):
        # Saturating: n - m is 0 when m >= n; infinity minus a natural stays infinite.
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if self._value is None:
            return INFINITY
        if other._value is None:
            raise ValueError("cannot subtract infinity")
        return ExtNat(max(0, self._value - other._value))

    def to_json(self):
        return "inf" if self._value is None else self._value

    @classmethod
    def from_json(cls, data) -> "ExtNat":
        return cls.of(data)

    def __str__(self):
        return "oo" if self._value is None else str(self._value)

    def __repr__(self):
        return f"ExtNat({self})"


INFINITY = ExtNat(None)


# ---------------------------------------------------------------------------
# Prime sets.


def _checked_primes(primes) -> tuple[int, ...]:
    out = sorted(set(primes))
    for p in out:
        if not (isinstance(p, int) and not isinstance(p, bool) and isprime(p)):
            raise DomainError(f"{p!r} is not prime", code="not_prime")
    return tuple(out)


@dataclass(frozen=True)
class PrimeSet:
    """A finite or cofinite set of primes.

    ``members`` is strictly increasing.  When ``cofinite`` is true the set is
    "all primes except members"; the empty cofinite set is the set of all
    primes and the empty finite set is the empty set.
    """

    cofinite: bool
    members: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "members", _checked_primes(self.members))

    @classmethod
    def of(cls, *primes: int) -> "PrimeSet":
        return cls(False, primes)

    @classmethod
    def excluding(cls, *primes: int) -> "PrimeSet":
        return cls(True, primes)

    def __contains__(self, p: int) -> bool:
        return (p not in self.members) if self.cofinite else (p in self.members)

    @property
    def is_all(self) -> bool:
        return self.cofinite and not self.members

    @property
    def is_empty(self) -> bool:
        return not self.cofinite and not self.members

    def intersect(self, other: "PrimeSet") -> "PrimeSet":
        if not self.cofinite and not other.cofinite:
            return PrimeSet(False, [p for p in self.members if p in other.members])
        if self.cofinite and other.cofinite:
            return PrimeSet(True, set(self.members) | set(other.members))
        fin, cof = (self, other) if not self.cofinite else (other, self)
        return PrimeSet(False, [p for p in fin.members if p not in cof.members])

    def to_json(self):
        return {"kind": "cofinite" if self.cofinite else "finite", "primes": list(self.members)}


ALL_PRIMES = PrimeSet.excluding()
NO_PRIMES = PrimeSet.of()


def fresh_prime(used) -> int:
    """The smallest prime not in `used`."""
    used = set(used)
    p = 2
    while p in used:
        p = int(nextprime(p))
    return p


def iter_primes():
    p = 2
    while True:
        yield p
        p = int(nextprime(p))


# ---------------------------------------------------------------------------
# Atoms.


@dataclass(frozen=True)
class Localization:
    """Z localized at a set of primes: Z_(l) is Z for l = all, Q for l = none."""

    primes: PrimeSet


@dataclass(frozen=True)
class Cyclic:
    """The cyclic group of order prime**power."""

    prime: int
    power: int

    def __post_init__(self):
        if not isprime(self.prime):
            raise DomainError(f"{self.prime} is not prime", code="not_prime")
        if self.power < 1:
            raise DomainError("cyclic atom needs power >= 1", code="bad_power")


@dataclass(frozen=True)
class Prufer:
    """The Prufer group Z/p^oo, the union of all Z/p^k."""

    prime: int

    def __post_init__(self):
        if not isprime(self.prime):
            raise DomainError(f"{self.prime} is not prime", code="not_prime")


Atom = Localization | Cyclic | Prufer


def _atom_key(a: Atom):
    # Localizations first (Z-like before Q-like), then cyclics by prime and
    # power, then Prufer groups; gives the canonical display order.
    match a:
        case Localization(primes=ps):
            return (0, 0 if ps.cofinite else 1, ps.members)
        case Cyclic(prime=p, power=k):
            return (1, p, k)
        case Prufer(prime=p):
            return (2, p, 0)


def _atom_support(a: Atom):
    match a:
        case Localization(primes=ps):
            return ps.members
        case Cyclic(prime=p):
            return (p,)
        case Prufer(prime=p):
            return (p,)


# ---------------------------------------------------------------------------
# Groups.


@dataclass(frozen=True)
class AdmissibleGroup:
    """A finite direct sum of atoms, stored canonically.

    ``summands`` is a sorted tuple of (atom, multiplicity) pairs with positive
    multiplicities; two groups are isomorphic iff the dataclasses are equal.

    >>> cyclic(12)
    AdmissibleGroup(Z/4 + Z/3)
    >>> cyclic(4) + cyclic(2) + cyclic(4) == cyclic(2) + cyclic(4) + cyclic(4)
    True
    """

    summands: tuple[tuple[Atom, int], ...]

    @classmethod
    def of(cls, *atoms: Atom) -> "AdmissibleGroup":
        return cls.from_counts(Counter(atoms))

    @classmethod
    def from_counts(cls, counts) -> "AdmissibleGroup":
        counts = dict(counts)
        items = [(a, int(n)) for a, n in counts.items() if n]
        if any(n < 0 for _, n in items):
            raise DomainError("negative multiplicity", code="bad_multiplicity")
        items.sort(key=lambda item: _atom_key(item[0]))
        return cls(tuple(items))

    @property
    def is_trivial(self) -> bool:
        return not self.summands

    def atoms(self):
        """Iterate atoms with repetition."""
        for a, n in self.summands:
            yield from itertools.repeat(a, n)

    def __add__(self, other: "AdmissibleGroup") -> "AdmissibleGroup":
        counts = Counter(dict(self.summands))
        for a, n in other.summands:
            counts[a] += n
        return AdmissibleGroup.from_counts(counts)

    def support_primes(self) -> tuple[int, ...]:
        """Primes mentioned by any atom (localization lists count)."""
        out = set()
        for a, _ in self.summands:
            out.update(_atom_support(a))
        return tuple(sorted(out))

    def tensor(self, other: "AdmissibleGroup") -> "AdmissibleGroup":
        """Tensor product over Z, computed bilinearly from the atom table."""
        counts = Counter()
        for a, n in self.summands:
            for b, m in other.summands:
                c = _tensor_atoms(a, b)
                if c is not None:
                    counts[c] += n * m
        return AdmissibleGroup.from_counts(counts)

    def tor(self, other: "AdmissibleGroup") -> "AdmissibleGroup":
        """Tor over Z, computed bilinearly from the atom table."""
        counts = Counter()
        for a, n in self.summands:
            for b, m in other.summands:
                c = _tor_atoms(a, b)
                if c is not None:
                    counts[c] += n * m
        return AdmissibleGroup.from_counts(counts)

    def __repr__(self):
        from .dsl import format_group  # local import: dsl depends on this module

        return f"AdmissibleGroup({format_group(self)})"


TRIVIAL = AdmissibleGroup(())
Z = AdmissibleGroup.of(Localization(ALL_PRIMES))
Q = AdmissibleGroup.of(Localization(NO_PRIMES))


def cyclic(n: int) -> AdmissibleGroup:
    """Z/n split into prime-power atoms; n must be at least 2."""
    from sympy import factorint

    if n < 2:
        raise DomainError(f"cyclic group modulus must be >= 2, got {n}", code="bad_modulus")
    return AdmissibleGroup.of(*(Cyclic(p, e) for p, e in factorint(n).items()))


def prufer(p: int) -> AdmissibleGroup:
    return AdmissibleGroup.of(Prufer(p))


def localized(primes: PrimeSet) -> AdmissibleGroup:
    return AdmissibleGroup.of(Localization(primes))


# ---------------------------------------------------------------------------
# The tensor and Tor tables.
#
# Localizations are flat, so Tor vanishes whenever one side is a
# localization.  Prufer groups are divisible, so tensoring them with any
# torsion group dies; against Z_(l) they survive iff their prime is in l.
# Within one prime, gcd(p^k, p^m) = p^min(k, m) drives both tables.


def _tensor_atoms(a: Atom, b: Atom) -> Atom | None:
    match (a, b):
        case (Localization(primes=l1), Localization(primes=l2)):
            return Localization(l1.intersect(l2))
        case (Localization(primes=l), Cyclic(prime=p)) | (Cyclic(prime=p), Localization(primes=l)):
            cyc = a if isinstance(a, Cyclic) else b
            return cyc if p in l else None
        case (Localization(primes=l), Prufer(prime=p)) | (Prufer(prime=p), Localization(primes=l)):
            return Prufer(p) if p in l else None
        case (Cyclic(prime=p, power=k), Cyclic(prime=q, power=m)):
            return Cyclic(p, min(k, m)) if p == q else None
        case _:
            # Prufer x Prufer and Prufer x Cyclic vanish (divisible x torsion).
            return None


def _tor_atoms(a: Atom, b: Atom) -> Atom | None:
    match (a, b):
        case (Localization(), _) | (_, Localization()):
            return None
        case (Cyclic(prime=p, power=k), Cyclic(prime=q, power=m)):
            return Cyclic(p, min(k, m)) if p == q else None
        case (Prufer(prime=p), Cyclic(prime=q, power=m)) | (Cyclic(prime=q, power=m), Prufer(prime=p)):
            return Cyclic(q, m) if p == q else None
        case (Prufer(prime=p), Prufer(prime=q)):
            return Prufer(p) if p == q else None


# ---------------------------------------------------------------------------
# Bockstein basis.


class PrimePattern(enum.Flag):
    """Which of the three p-local Bockstein groups are present at a prime."""

    EMPTY = 0
    CYCLIC = enum.auto()  # Z/p
    PRUFER = enum.auto()  # Z/p^oo
    LOCAL = enum.auto()   # Z_(p)


FULL_PATTERN = PrimePattern.CYCLIC | PrimePattern.PRUFER | PrimePattern.LOCAL

_FLAG_NAMES = (
    (PrimePattern.CYCLIC, "cyclic"),
    (PrimePattern.PRUFER, "prufer"),
    (PrimePattern.LOCAL, "local"),
)


def pattern_flags(pat: PrimePattern) -> tuple[str, ...]:
    return tuple(name for flag, name in _FLAG_NAMES if flag & pat)


def pattern_from_flags(names) -> PrimePattern:
    lookup = {name: flag for flag, name in _FLAG_NAMES}
    pat = PrimePattern.EMPTY
    for name in names:
        if name not in lookup:
            raise DomainError(f"unknown Bockstein flag {name!r}", code="bad_flag")
        pat |= lookup[name]
    return pat


@dataclass(frozen=True)
class SigmaSet:
    """A set of Bockstein groups, uniform in the prime outside finitely many
    exceptions.

    ``rational`` records whether Q belongs; ``default`` is the pattern shared
    by every prime not listed in ``exceptions``, and each exception stores a
    pattern different from the default.
    """

    rational: bool
    default: PrimePattern
    exceptions: tuple[tuple[int, PrimePattern], ...]

    @classmethod
    def build(cls, rational: bool, default: PrimePattern, exceptions) -> "SigmaSet":
        pairs = [(p, pat) for p, pat in dict(exceptions).items() if pat != default]
        pairs.sort()
        return cls(bool(rational), default, tuple(pairs))

    def at(self, p: int) -> PrimePattern:
        for q, pat in self.exceptions:
            if q == p:
                return pat
        return self.default

    @property
    def exception_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exceptions)

    def issubset(self, other: "SigmaSet") -> bool:
        if self.rational and not other.rational:
            return False
        primes = set(self.exception_primes) | set(other.exception_primes)
        if self.default & ~other.default:
            return False
        return all(not (self.at(p) & ~other.at(p)) for p in primes)

    def union(self, other: "SigmaSet") -> "SigmaSet":
        primes = set(self.exception_primes) | set(other.exception_primes)
        return SigmaSet.build(
            self.rational or other.rational,
            self.default | other.default,
            {p: self.at(p) | other.at(p) for p in primes},
        )

    def to_json(self):
        return {
            "rational": self.rational,
            "default": list(pattern_flags(self.default)),
            "exceptions": {str(p): list(pattern_flags(pat)) for p, pat in self.exceptions},
        }


def sigma(group: AdmissibleGroup) -> SigmaSet:
    """The Bockstein basis of a nontrivial admissible group.

    Membership is decided by the defining tensor/Tor tests:

    * Q       belongs iff Q (x) G is nonzero,
    * Z/p     belongs iff Z/p (x) G is nonzero,
    * Z_(p)   belongs iff Z/p^oo (x) G is nonzero,
    * Z/p^oo  belongs iff Tor(Z/p^oo, G) is nonzero or Z/p (x) G is nonzero.

    Primes outside the group's support all answer alike, so the tests run
    once per support prime plus once at a fresh prime for the default.
    """
    if group.is_trivial:
        raise DomainError("the Bockstein basis of the trivial group is undefined", code="trivial_group")

    def tests(p: int) -> PrimePattern:
        pat = PrimePattern.EMPTY
        if not cyclic(p).tensor(group).is_trivial:
            pat |= PrimePattern.CYCLIC
        if not prufer(p).tensor(group).is_trivial:
            pat |= PrimePattern.LOCAL
        if PrimePattern.CYCLIC in pat or not prufer(p).tor(group).is_trivial:
            pat |= PrimePattern.PRUFER
        return pat

    support = group.support_primes()
    default = tests(fresh_prime(support))
    rational = not Q.tensor(group).is_trivial
    return SigmaSet.build(rational, default, {p: tests(p) for p in support})


def tau_closure(s: SigmaSet) -> SigmaSet:
    """Close a Bockstein basis under the tau rules.

    Q and Z/p^oo memberships are unchanged; Z/p joins exactly when Z/p^oo is
    in, and Z_(p) joins exactly when both Z/p^oo and Q are in.  The result
    always contains the input.
    """

    def close(pat: PrimePattern) -> PrimePattern:
        if PrimePattern.PRUFER not in pat:
            return PrimePattern.EMPTY
        out = PrimePattern.CYCLIC | PrimePattern.PRUFER
        if s.rational:
            out |= PrimePattern.LOCAL
        return out

    return SigmaSet.build(s.rational, close(s.default), {p: close(pat) for p, pat in s.exceptions})


def tau(group: AdmissibleGroup) -> SigmaSet:
    return tau_closure(sigma(group))


def sigma_matches_localization(s: SigmaSet) -> PrimeSet | None:
    """The prime set l with s = sigma(Z_(l)), or None when no l works.

    sigma(Z_(l)) contains Q and, at each prime, either all three p-local
    groups (p in l) or none (p not in l); anything else matches no
    localization.
    """
    if not s.rational:
        return None
    if s.default not in (PrimePattern.EMPTY, FULL_PATTERN):
        return None
    if any(pat not in (PrimePattern.EMPTY, FULL_PATTERN) for _, pat in s.exceptions):
        return None
    if s.default == FULL_PATTERN:
        return PrimeSet.excluding(*(p for p, pat in s.exceptions if pat == PrimePattern.EMPTY))
    return PrimeSet.of(*(p for p, pat in s.exceptions if pat == FULL_PATTERN))
