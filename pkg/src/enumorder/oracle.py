"""Brute-force verification of the finitely checkable claims, exhaustively
over all permutations at small n.

Each property is checked by machinery kept independent of the code under
test wherever the claim pairs an implementation with an oracle; in
particular `subset-characterization` evaluates the reducibility condition
with its own double loop rather than via the inversion-set code.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from typing import Callable, Dict, List, Optional, Tuple

from .algebra import Chain, chain_stabilize, transport
from .errors import TooLarge, UnknownProperty
from .prefixes import (
    Pattern,
    PrefixListing,
    SetSample,
    ascending_listing,
    equiv_eo,
    inversions,
    leq_eo,
    standardize,
)
from .extraction import check_inverse_positions

MAX_PATTERN_N = 8


@dataclass(frozen=True)
class PropertyReport:
    property_id: str
    n: int
    instances: int
    violations: Tuple[str, ...]
    elapsed: float
    witness: Optional[dict] = None

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_json(self) -> dict:
        out = {
            "property": self.property_id,
            "n": self.n,
            "instances": self.instances,
            "violations": list(self.violations),
            "pass": self.passed,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        return out


def all_patterns(n: int) -> List[Pattern]:
    """All n! rank sequences over {1..n}, lexicographic."""
    if not 0 <= n <= MAX_PATTERN_N:
        raise TooLarge(n, MAX_PATTERN_N)
    return [Pattern(p) for p in itertools.permutations(range(1, n + 1))]


def _prefixes(n: int) -> List[PrefixListing]:
    return [PrefixListing(p.ranks) for p in all_patterns(n)]


def _check_reflexive(n: int):
    violations = []
    prefixes = _prefixes(n)
    for f in prefixes:
        if not leq_eo(f, f).holds:
            violations.append(f"leq_eo fails on ({list(f.values)}, itself)")
    return len(prefixes), violations, None


def _check_transitive(n: int):
    violations = []
    prefixes = _prefixes(n)
    count = 0
    for f, g, h in itertools.product(prefixes, repeat=3):
        count += 1
        if leq_eo(f, g).holds and leq_eo(g, h).holds and not leq_eo(f, h).holds:
            violations.append(
                f"transitivity fails: {list(f.values)} <= {list(g.values)} <= {list(h.values)}"
            )
    return count, violations, None


def _check_non_antisymmetric(n: int):
    # two distinct ascending prefixes over disjoint value ranges
    f = PrefixListing(tuple(range(1, n + 1)))
    g = PrefixListing(tuple(range(n + 1, 2 * n + 1)))
    violations = []
    if n == 0 or f == g or not equiv_eo(f, g):
        violations.append("no witness pair found")
        return 1, violations, None
    witness = {"f": list(f.values), "g": list(g.values)}
    return 1, violations, witness


def _check_subset_characterization(n: int):
    violations = []
    prefixes = _prefixes(n)
    count = 0
    for f, g in itertools.product(prefixes, repeat=2):
        count += 1
        # independent oracle: evaluate the defining implication directly
        fv, gv = f.values, g.values
        direct = all(
            not (fv[i] > fv[j] and gv[i] <= gv[j])
            for i in range(n)
            for j in range(i + 1, n)
        )
        if leq_eo(f, g).holds != direct:
            violations.append(f"disagreement on ({list(fv)}, {list(gv)})")
    return count, violations, None


def _check_ascending_minimal(n: int):
    violations = []
    prefixes = _prefixes(n)
    asc = ascending_listing(SetSample(frozenset(range(1, n + 1)), n))
    for g in prefixes:
        if not leq_eo(asc, g).holds:
            violations.append(f"ascending not reducible to {list(g.values)}")
    return len(prefixes), violations, None


def _check_inverse_position_clauses(n: int):
    violations = []
    prefixes = _prefixes(n)
    count = 0
    for f, g in itertools.product(prefixes, repeat=2):
        count += 1
        if not inversions(f) <= inversions(g):
            continue
        report = check_inverse_positions(f, g)
        if not report.all_hold:
            violations.append(f"clause fails on ({list(f.values)}, {list(g.values)})")
    return count, violations, None


def _check_transport(n: int):
    violations = []
    prefixes = _prefixes(n)
    other_values = tuple(range(n + 1, 2 * n + 1))
    count = 0
    for h, h_prime, g_pat in itertools.product(prefixes, prefixes, all_patterns(n)):
        g_prime = g_pat.apply(other_values)
        if standardize(g_prime) != standardize(h_prime):
            continue
        count += 1
        result = transport(h, h_prime, g_prime)
        if standardize(result) != standardize(h):
            violations.append(
                f"transport breaks pattern: h={list(h.values)} h'={list(h_prime.values)} "
                f"g'={list(g_prime.values)} -> {list(result.values)}"
            )
        if sorted(result.values) != sorted(g_prime.values):
            violations.append(f"transport leaves target values: {list(result.values)}")
    return count, violations, None


def _random_descending_chain(rng, prefixes, inv, length: int) -> Chain:
    current = rng.choice(prefixes)
    chain = [current]
    while len(chain) < length:
        below = [p for p in prefixes if inv[p] <= inv[current]]
        current = rng.choice(below)
        chain.append(current)
    return Chain(tuple(chain))


def _check_stabilization(n: int):
    # pigeonhole: any descending chain longer than the inversion count must repeat
    violations = []
    length = n * (n - 1) // 2 + 2
    rng = random.Random(f"stabilization:{n}")
    prefixes = _prefixes(n)
    inv = {p: inversions(p) for p in prefixes}
    walks = 200
    for _ in range(walks):
        chain = _random_descending_chain(rng, prefixes, inv, length)
        found = chain_stabilize(chain)
        # independent pairwise scan, minimizing (j, i)
        expected = None
        for j in range(2, length + 1):
            for i in range(1, j):
                if chain.listings[i - 1] == chain.listings[j - 1]:
                    expected = (i, j)
                    break
            if expected:
                break
        if expected is None:
            violations.append(f"chain of length {length} without repeat: {chain.listings}")
        elif found != expected:
            violations.append(f"stabilize returned {found}, oracle says {expected}")
    return walks, violations, None


def _check_class_count(n: int):
    # partition all prefixes over {1..n} by pairwise equivalence
    violations = []
    prefixes = _prefixes(n)
    representatives: List[PrefixListing] = []
    for p in prefixes:
        if not any(equiv_eo(p, r) for r in representatives):
            representatives.append(p)
    distinct_patterns = len({standardize(p).ranks for p in prefixes})
    if len(representatives) != distinct_patterns:
        violations.append(
            f"{len(representatives)} classes vs {distinct_patterns} distinct patterns"
        )
    return len(prefixes), violations, None


# property id -> (max n, checker); ids are part of the CLI contract
REGISTRY: Dict[str, Tuple[int, Callable]] = {
    "reflexive": (6, _check_reflexive),
    "transitive": (4, _check_transitive),
    "non-antisymmetric": (8, _check_non_antisymmetric),
    "subset-characterization": (5, _check_subset_characterization),
    "lemma-2-3": (6, _check_ascending_minimal),
    "lemma-2-8": (5, _check_inverse_position_clauses),
    "transport": (4, _check_transport),
    "stabilization": (5, _check_stabilization),
    "class-count": (5, _check_class_count),
}


def run_property(property_id: str, n: int) -> PropertyReport:
    """Exhaustively check one registered property at size n."""
    if property_id not in REGISTRY:
        raise UnknownProperty(property_id)
    max_n, checker = REGISTRY[property_id]
    if not 0 <= n <= max_n:
        raise TooLarge(n, max_n)
    start = time.perf_counter()
    instances, violations, witness = checker(n)
    elapsed = time.perf_counter() - start
    return PropertyReport(
        property_id, n, instances, tuple(sorted(violations)), elapsed, witness
    )
