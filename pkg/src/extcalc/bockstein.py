"""Dimension functions on the Bockstein basis.

A compactum X induces the function H -> dim_H(X) on the Bockstein test
groups {Q} u {Z/p, Z/p^oo, Z_(p) : p prime}.  Functions arising this way
satisfy five per-prime inequalities, and conversely every function
satisfying them is realized by some compactum, so the package works with
the functions themselves: finitely many exceptional primes over a default
triple, exactly like SigmaSet but valued in extended naturals.

The dimension of such a "symbolic compactum" with respect to an admissible
coefficient group G is the maximum of the function over sigma(G); this is
the computational content of the first Bockstein theorem and is what every
decision procedure below reduces to.  The two witness constructions build
functions separating a pair of coefficient groups either by an infinite gap
or by exactly one.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from sympy import isprime

from .abelian import (
    AdmissibleGroup,
    ExtNat,
    INFINITY,
    PrimePattern,
    SigmaSet,
    iter_primes,
    sigma,
    tau_closure,
)
from .errors import DomainError, ParseError
from .graded import GradedGroup


@dataclass(frozen=True)
class PrimeTriple:
    """Values on the three test groups at one prime: Z/p, Z/p^oo, Z_(p)."""

    cyclic: ExtNat
    prufer: ExtNat
    local: ExtNat

    @classmethod
    def constant(cls, value: ExtNat) -> "PrimeTriple":
        return cls(value, value, value)

    def to_json(self):
        return {"Zp": self.cyclic.to_json(), "ZpInf": self.prufer.to_json(), "Zploc": self.local.to_json()}

    @classmethod
    def from_json(cls, data) -> "PrimeTriple":
        if not isinstance(data, dict) or set(data) != {"Zp", "ZpInf", "Zploc"}:
            raise ParseError("a triple needs exactly the keys Zp, ZpInf, Zploc", code="bad_document")
        try:
            return cls(ExtNat.of(data["Zp"]), ExtNat.of(data["ZpInf"]), ExtNat.of(data["Zploc"]))
        except ValueError as exc:
            raise ParseError(str(exc), code="bad_document") from exc


@dataclass(frozen=True)
class BocksteinFunction:
    """An extended-natural value for every Bockstein group, stored as the
    value on Q, a default triple, and finitely many exceptional primes."""

    rational: ExtNat
    default: PrimeTriple
    exceptions: tuple[tuple[int, PrimeTriple], ...]

    @classmethod
    def build(cls, rational, default: PrimeTriple, exceptions=()) -> "BocksteinFunction":
        pairs = [(p, t) for p, t in dict(exceptions).items() if t != default]
        pairs.sort()
        return cls(ExtNat.of(rational), default, tuple(pairs))

    @classmethod
    def constant(cls, value) -> "BocksteinFunction":
        value = ExtNat.of(value)
        return cls.build(value, PrimeTriple.constant(value))

    def at(self, p: int) -> PrimeTriple:
        for q, t in self.exceptions:
            if q == p:
                return t
        return self.default

    @property
    def exception_primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.exceptions)

    def to_json(self):
        return {
            "Q": self.rational.to_json(),
            "default": self.default.to_json(),
            "exceptions": {str(p): t.to_json() for p, t in self.exceptions},
        }

    @classmethod
    def from_json(cls, data) -> "BocksteinFunction":
        if not isinstance(data, dict):
            raise ParseError("a Bockstein function document must be a JSON object", code="bad_document")
        unknown = set(data) - {"Q", "default", "exceptions"}
        if unknown:
            raise ParseError(f"unknown keys {sorted(unknown)}", code="bad_document")
        if "Q" not in data or "default" not in data:
            raise ParseError("a Bockstein function document needs Q and default", code="bad_document")
        try:
            rational = ExtNat.of(data["Q"])
        except ValueError as exc:
            raise ParseError(str(exc), code="bad_document") from exc
        default = PrimeTriple.from_json(data["default"])
        exceptions = {}
        for key, raw in dict(data.get("exceptions", {})).items():
            try:
                p = int(key)
            except (TypeError, ValueError) as exc:
                raise ParseError(f"exception key {key!r} is not a prime", code="bad_document") from exc
            if not isprime(p):
                raise ParseError(f"exception key {key!r} is not a prime", code="bad_document")
            exceptions[p] = PrimeTriple.from_json(raw)
        return cls.build(rational, default, exceptions)


# ---------------------------------------------------------------------------
# Validation.


@dataclass(frozen=True)
class Violation:
    """One failed inequality; prime None means the default triple."""

    prime: Optional[int]
    rule: int
    detail: str

    def to_json(self):
        return {"prime": self.prime, "rule": self.rule, "detail": self.detail}


def _triple_violations(prime: Optional[int], q: ExtNat, t: PrimeTriple) -> list[Violation]:
    where = f"p={prime}" if prime is not None else "default"
    out = []
    if not (t.prufer <= t.cyclic <= t.prufer + 1):
        out.append(Violation(prime, 1, f"{where}: need a(Z/p^oo) <= a(Z/p) <= a(Z/p^oo)+1, got {t.prufer}, {t.cyclic}"))
    if not t.cyclic <= t.local:
        out.append(Violation(prime, 2, f"{where}: need a(Z/p) <= a(Z_(p)), got {t.cyclic} > {t.local}"))
    if not q <= t.local:
        out.append(Violation(prime, 3, f"{where}: need a(Q) <= a(Z_(p)), got {q} > {t.local}"))
    if not t.local <= max(q, t.prufer + 1):
        out.append(Violation(prime, 4, f"{where}: need a(Z_(p)) <= max(a(Q), a(Z/p^oo)+1), got {t.local}"))
    if not t.prufer <= max(q, t.local - 1):
        out.append(Violation(prime, 5, f"{where}: need a(Z/p^oo) <= max(a(Q), a(Z_(p))-1), got {t.prufer}"))
    return out


def validate_bockstein(alpha: BocksteinFunction) -> list[Violation]:
    """All violated inequalities; the empty list certifies realizability.

    The value 0 is accepted wherever the inequalities allow it, even though
    the witness constructions themselves only emit values >= 1.
    """
    out = _triple_violations(None, alpha.rational, alpha.default)
    for p, t in alpha.exceptions:
        out.extend(_triple_violations(p, alpha.rational, t))
    return out


# ---------------------------------------------------------------------------
# Dimension evaluation.


_FLAG_SLOTS = (
    (PrimePattern.CYCLIC, "cyclic"),
    (PrimePattern.PRUFER, "prufer"),
    (PrimePattern.LOCAL, "local"),
)


def _pattern_values(t: PrimeTriple, pattern: PrimePattern):
    for flag, slot in _FLAG_SLOTS:
        if flag & pattern:
            yield getattr(t, slot)


def coef_dimension(alpha: BocksteinFunction, group: AdmissibleGroup) -> ExtNat:
    """dim with respect to `group`: the maximum of alpha over sigma(group).

    Finitely computable because sigma and alpha are both eventually uniform
    in the prime: one generic prime stands in for all unlisted ones.
    """
    s = sigma(group)
    values = []
    if s.rational:
        values.append(alpha.rational)
    if s.default != PrimePattern.EMPTY:
        values.extend(_pattern_values(alpha.default, s.default))
    for p in sorted(set(s.exception_primes) | set(alpha.exception_primes)):
        values.extend(_pattern_values(alpha.at(p), s.at(p)))
    return max(values)


def covering_dimension(alpha: BocksteinFunction) -> ExtNat:
    """The supremum of alpha over the whole basis (the dimension w.r.t. Z)."""
    values = [alpha.rational]
    for t in [alpha.default] + [t for _, t in alpha.exceptions]:
        values.extend([t.cyclic, t.prufer, t.local])
    return max(values)


def sp_in_ae(alpha: BocksteinFunction, k: GradedGroup) -> bool:
    """Whether the infinite symmetric product of a complex with reduced
    homology `k` extends over the compactum realizing alpha.

    True iff dim with respect to k's degree-i homology is at most i, for
    every nontrivial degree.  Empty homology (a point) always extends.
    """
    for i, g in k.entries:
        if i < 1:
            raise DomainError("complex homology must live in degrees >= 1", code="bad_degree")
        if not coef_dimension(alpha, g) <= i:
            return False
    return True


# ---------------------------------------------------------------------------
# The minimal complex.


@dataclass(frozen=True)
class MinimalWedge:
    """Wedge summands K(H, degree) over the finite-valued part of alpha.

    Slots hold the degree as an int or None when the value was infinite and
    the summand is absent; `default` describes every prime not listed in
    `exceptions`, so the description is finite even when the wedge is not.
    """

    rational: Optional[int]
    default: tuple[Optional[int], Optional[int], Optional[int]]
    exceptions: tuple[tuple[int, tuple[Optional[int], Optional[int], Optional[int]]], ...]

    def summands_at(self, p: int) -> tuple[Optional[int], Optional[int], Optional[int]]:
        for q, t in self.exceptions:
            if q == p:
                return t
        return self.default

    def listed_summands(self) -> set[tuple[str, int]]:
        """Concrete (group name, degree) pairs at the exceptional primes."""
        names = ("Z/{p}", "Z/{p}^oo", "Z_({p})")
        out = set()
        if self.rational is not None:
            out.add(("Q", self.rational))
        for p, t in self.exceptions:
            for name, deg in zip(names, t):
                if deg is not None:
                    out.add((name.format(p=p), deg))
        return out

    def to_json(self):
        def triple(t):
            return {"Zp": t[0], "ZpInf": t[1], "Zploc": t[2]}

        return {
            "rational": self.rational,
            "default": triple(self.default),
            "exceptions": {str(p): triple(t) for p, t in self.exceptions},
        }


def minimal_wedge(alpha: BocksteinFunction) -> MinimalWedge:
    """The wedge of Eilenberg-MacLane spaces K(H, alpha(H)) over all basis
    groups with finite value; its symmetric-product type is the minimal one
    extending over the compactum realizing alpha."""

    def fin(v: ExtNat) -> Optional[int]:
        return v.value if v.is_finite else None

    def triple(t: PrimeTriple):
        return (fin(t.cyclic), fin(t.prufer), fin(t.local))

    default = triple(alpha.default)
    exceptions = [(p, triple(t)) for p, t in alpha.exceptions if triple(t) != default]
    return MinimalWedge(fin(alpha.rational), default, tuple(exceptions))


# ---------------------------------------------------------------------------
# Witness constructions.


def _value_by_membership(m: int, in_sigma: bool, in_tau: bool) -> ExtNat:
    if in_sigma:
        return ExtNat(m)
    if in_tau:
        return ExtNat(m + 1)
    return INFINITY


def _layered_triple(m: int, spat: PrimePattern, tpat: PrimePattern) -> PrimeTriple:
    return PrimeTriple(
        cyclic=_value_by_membership(m, bool(PrimePattern.CYCLIC & spat), bool(PrimePattern.CYCLIC & tpat)),
        prufer=_value_by_membership(m, bool(PrimePattern.PRUFER & spat), bool(PrimePattern.PRUFER & tpat)),
        local=_value_by_membership(m, bool(PrimePattern.LOCAL & spat), bool(PrimePattern.LOCAL & tpat)),
    )


def infinite_gap_witness(dim_group: AdmissibleGroup, sep_group: AdmissibleGroup, m: int) -> BocksteinFunction:
    """A dimension function worth m on `dim_group` but infinity on
    `sep_group`.

    Takes m on sigma(G), m+1 on tau(G) \\ sigma(G), infinity elsewhere; this
    satisfies the realizability inequalities, and the separating group must
    meet the infinite layer, i.e. sigma(F) may not sit inside tau(G).
    """
    if m < 1:
        raise DomainError("separation degree m must be >= 1", code="bad_dimension")
    s = sigma(dim_group)
    t = tau_closure(s)
    if sigma(sep_group).issubset(t):
        raise DomainError(
            "no infinite gap: the separating group's basis lies in tau of the base group",
            code="not_separable",
        )
    exceptions = {
        p: _layered_triple(m, s.at(p), t.at(p))
        for p in set(s.exception_primes) | set(t.exception_primes)
    }
    return BocksteinFunction.build(
        _value_by_membership(m, s.rational, t.rational),
        _layered_triple(m, s.default, t.default),
        exceptions,
    )


def _smallest_flag_gap(flag: PrimePattern, sf: SigmaSet, sg: SigmaSet) -> Optional[int]:
    """Smallest prime where `flag` is in sf's pattern but not sg's."""
    bound = max(set(sf.exception_primes) | set(sg.exception_primes), default=1)
    for p in iter_primes():
        if p > bound:
            # every later prime shows both defaults, so one test settles it
            return p if flag & sf.default and not flag & sg.default else None
        if flag & sf.at(p) and not flag & sg.at(p):
            return p


def unit_gap_witness(
    dim_group: AdmissibleGroup, sep_group: AdmissibleGroup, m: int
) -> tuple[BocksteinFunction, str]:
    """A dimension function worth m on `dim_group` and m+1 on `sep_group`.

    Case I bumps Z/q and Z_(q) to m+1 at the smallest prime q whose cyclic
    test group separates the bases; case II, applicable when only
    localizations separate, bumps Z_(q) alone.  Everything else stays at m,
    so the covering dimension is m+1.  Returns the function and the case
    label.
    """
    if m < 1:
        raise DomainError("separation degree m must be >= 1", code="bad_dimension")
    sf = sigma(sep_group)
    sg = sigma(dim_group)
    base = PrimeTriple.constant(ExtNat(m))
    q = _smallest_flag_gap(PrimePattern.CYCLIC, sf, sg)
    if q is not None:
        bumped = PrimeTriple(cyclic=ExtNat(m + 1), prufer=ExtNat(m), local=ExtNat(m + 1))
        return BocksteinFunction.build(ExtNat(m), base, {q: bumped}), "I"
    q = _smallest_flag_gap(PrimePattern.LOCAL, sf, sg)
    if q is not None:
        bumped = PrimeTriple(cyclic=ExtNat(m), prufer=ExtNat(m), local=ExtNat(m + 1))
        return BocksteinFunction.build(ExtNat(m), base, {q: bumped}), "II"
    raise DomainError(
        "no unit gap: no cyclic or localization test group separates the bases",
        code="not_applicable",
    )
