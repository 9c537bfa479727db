"""Information extraction from reducible and equivalent listing pairs.

The centerpiece is the paired-listing construction: a prefix f over
A ∪ {m} starting at the extra minimum m, rank-aligned with a prefix g over
A.  From such a pair the predecessor map on A falls out positionally, which
yields descent chains and a three-valued membership decider.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import List, Tuple

from .algebra import inverse_lookup
from .errors import (
    BadBound,
    BadExtra,
    BadPattern,
    InsufficientPrefix,
    InvalidPairing,
    PreconditionViolated,
    ValueAbsent,
)
from .prefixes import Pattern, PrefixListing, SetSample, equiv_eo, leq_eo


def ascending_view(p: PrefixListing) -> Tuple[int, ...]:
    """The prefix's value set sorted increasing: a_1 < a_2 < ... < a_n."""
    return tuple(sorted(p.values))


@dataclass(frozen=True)
class Clause1:
    fpos: int
    gpos: int
    holds: bool


@dataclass(frozen=True)
class Clause2Entry:
    index: int
    premise_held: bool
    fpos: int
    gpos: int
    holds: bool  # vacuously true when the premise fails


@dataclass(frozen=True)
class InversePositionReport:
    clause1: Clause1
    clause2: Tuple[Clause2Entry, ...]

    @property
    def all_hold(self) -> bool:
        return self.clause1.holds and all(e.holds for e in self.clause2)


def check_inverse_positions(f: PrefixListing, g: PrefixListing) -> InversePositionReport:
    """Inverse-position inequalities along the ascending views of f and g.

    Requires f reducible to g.  With a = ascending view of f's values and
    b = of g's: clause 1 asserts f^-1(a_1) <= g^-1(b_1); clause 2 asserts,
    for each i > 1 whose premise (all earlier inverse positions agree)
    holds, f^-1(a_i) <= g^-1(b_i).  Every evaluated clause must come back
    true; a false one means a bug upstream.
    """
    verdict = leq_eo(f, g)
    if not verdict.holds:
        raise PreconditionViolated(f"f is not reducible to g (fails at {verdict.fail_at})")
    a = ascending_view(f)
    b = ascending_view(g)
    fpos = [inverse_lookup(f, v) for v in a]
    gpos = [inverse_lookup(g, v) for v in b]
    clause1 = Clause1(fpos[0], gpos[0], fpos[0] <= gpos[0]) if a else Clause1(0, 0, True)
    entries = []
    for i in range(2, len(a) + 1):
        premise = all(fpos[j - 1] == gpos[j - 1] for j in range(1, i))
        holds = fpos[i - 1] <= gpos[i - 1] if premise else True
        entries.append(Clause2Entry(i, premise, fpos[i - 1], gpos[i - 1], holds))
    return InversePositionReport(clause1, tuple(entries))


@dataclass(frozen=True)
class PairedListings:
    """An aligned pair: f over A ∪ {m} with f(1) = m, g over A.

    Rank alignment is the load-bearing invariant: the rank of f(i) within
    the ascending view of A ∪ {m} equals the rank of g(i) within the
    ascending view of A.  It makes f(g^-1(a)) the element one rank below a.
    """

    f: PrefixListing
    g: PrefixListing
    m: int

    def __post_init__(self):
        validate_pairing(self.f, self.g, self.m)


def validate_pairing(f: PrefixListing, g: PrefixListing, m: int) -> None:
    if len(f) != len(g):
        raise InvalidPairing(f"lengths differ: {len(f)} != {len(g)}")
    if len(f) == 0:
        raise InvalidPairing("empty pairing")
    a_set = g.value_set
    if m in a_set:
        raise InvalidPairing(f"extra element {m} occurs in g")
    if m >= min(a_set):
        raise InvalidPairing(f"extra element {m} is not below min of g's values")
    if f(1) != m:
        raise InvalidPairing(f"f(1) = {f(1)}, expected the extra element {m}")
    b_asc = sorted(a_set | {m})
    a_asc = sorted(a_set)
    b_rank = {v: k for k, v in enumerate(b_asc, start=1)}
    a_rank = {v: k for k, v in enumerate(a_asc, start=1)}
    for i in range(1, len(f) + 1):
        if f(i) not in b_rank:
            raise InvalidPairing(f"f enumerates {f(i)}, outside g's values plus {m}")
        if b_rank[f(i)] != a_rank[g(i)]:
            raise InvalidPairing(
                f"rank misalignment at position {i}: "
                f"rank of f({i})={f(i)} is {b_rank[f(i)]}, "
                f"rank of g({i})={g(i)} is {a_rank[g(i)]}"
            )
    if not equiv_eo(f, g):
        raise InvalidPairing("f and g are not order-equivalent")


def make_paired(a_sample: SetSample, m: int, pattern: Pattern) -> PairedListings:
    """Build the canonical rank-aligned pair from a pattern.

    f applies the ranks to the ascending view of A ∪ {m}; g applies the
    same ranks to the ascending view of A.  The pattern must open with rank
    1 so that f starts at m.
    """
    a_asc = sorted(a_sample.elements)
    if not a_asc:
        raise BadPattern("sample is empty")
    if m in a_sample.elements:
        raise BadExtra(f"extra element {m} already in sample")
    if m >= a_asc[0]:
        raise BadExtra(f"extra element {m} must be below min(A) = {a_asc[0]}")
    if len(pattern) != len(a_asc):
        raise BadPattern(f"pattern length {len(pattern)} != sample size {len(a_asc)}")
    if pattern.ranks[0] != 1:
        raise BadPattern(f"pattern must start with rank 1, got {pattern.ranks[0]}")
    b_asc = sorted(set(a_asc) | {m})
    return PairedListings(pattern.apply(b_asc), pattern.apply(a_asc), m)


def predecessor(p: PairedListings, a: int) -> int:
    """Largest element of A strictly below a, or m when a = min(A).

    Computed positionally as f(g^-1(a)); rank alignment makes that the
    element one rank down.
    """
    return p.f(inverse_lookup(p.g, a))


def descent_chain(p: PairedListings, a: int) -> List[int]:
    """All elements of A below a, produced by iterated predecessor, descending.

    Stops when m appears (m itself is excluded).  A required lookup falling
    outside the prefix raises InsufficientPrefix.
    """
    out: List[int] = []
    current = a
    while True:
        try:
            current = predecessor(p, current)
        except ValueAbsent as exc:
            raise InsufficientPrefix(exc.value) from None
        if current == p.m:
            return out
        out.append(current)


class Membership(enum.Enum):
    IN_A = "in"
    NOT_IN_A = "out"
    INSUFFICIENT = "insufficient"


@dataclass(frozen=True)
class MembershipReport:
    x: int
    result: Membership
    descent: Tuple[int, ...]


def decide_membership(p: PairedListings, x: int) -> MembershipReport:
    """Decide x ∈ A from the pair, or report the prefix as too short.

    A direct occurrence in g settles membership.  Otherwise the least
    enumerated witness a > x has a descent chain listing everything in A
    below a, so x ∈ A iff x appears there.
    """
    if x < 1:
        raise ValueError("x must be >= 1")
    if x in p.g.value_set:
        return MembershipReport(x, Membership.IN_A, ())
    above = [v for v in p.g.values if v > x]
    if not above:
        return MembershipReport(x, Membership.INSUFFICIENT, ())
    witness = min(above)
    try:
        chain = descent_chain(p, witness)
    except InsufficientPrefix:
        return MembershipReport(x, Membership.INSUFFICIENT, ())
    result = Membership.IN_A if x in chain else Membership.NOT_IN_A
    return MembershipReport(x, result, tuple(chain))


def family_below(a_sample: SetSample, n: int) -> List[SetSample]:
    """The n+1 finite modifications of A that trade low elements in and out.

    The k-th member (k = 1..n+1) is (A - {k..n}) ∪ {1..k-1}; all share A's
    tail above n and differ only below n+1.
    """
    if a_sample.bound < n:
        raise BadBound(a_sample.bound, n)
    out = []
    for k in range(1, n + 2):
        elems = (set(a_sample.elements) - set(range(k, n + 1))) | set(range(1, k))
        out.append(SetSample(frozenset(elems), a_sample.bound))
    return out
