"""Constructive listing manipulations: inverse lookup, transport through an
equivalent pair, and repeat detection in descending reducibility chains.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Tuple

from .errors import ChainInvariantViolated, LengthMismatch, ValueAbsent, ValueSetMismatch
from .prefixes import PrefixListing, leq_eo


@dataclass(frozen=True)
class ListingTransformer:
    """A map between prefixes with declared source and target value sets.

    The map must preserve length and emit values from the target set only.
    """

    source_values: frozenset
    target_values: frozenset
    apply: Callable[[PrefixListing], PrefixListing]

    def __call__(self, p: PrefixListing) -> PrefixListing:
        out = self.apply(p)
        if len(out) != len(p):
            raise LengthMismatch(len(out), len(p))
        if not out.value_set <= self.target_values:
            raise ValueSetMismatch("transformer output left declared target set")
        return out


@dataclass(frozen=True)
class Chain:
    """A descending reducibility chain: each listing reducible to the previous.

    All listings share one length and one value set; the descending invariant
    is checked by `validate`, not at construction, so callers can build
    candidate chains and ask.
    """

    listings: Tuple[PrefixListing, ...]

    def __len__(self) -> int:
        return len(self.listings)

    def validate(self) -> None:
        for k in range(len(self.listings) - 1):
            a, b = self.listings[k], self.listings[k + 1]
            if len(a) != len(b):
                raise LengthMismatch(len(a), len(b))
            if a.value_set != b.value_set:
                raise ValueSetMismatch(f"value set changes at step {k + 1}")
            if not leq_eo(b, a).holds:
                raise ChainInvariantViolated(k + 1)


def inverse_lookup(p: PrefixListing, v: int) -> int:
    """The position at which p enumerates v."""
    try:
        return p.values.index(v) + 1
    except ValueError:
        raise ValueAbsent(v) from None


def transport(h: PrefixListing, h_prime: PrefixListing, g_prime: PrefixListing) -> PrefixListing:
    """Carry the order of h over to g_prime's value set.

    Position i receives g_prime at the position where h_prime enumerates
    h(i).  When g_prime and h_prime are order-equivalent, the result is
    order-equivalent to h.
    """
    if len(h) != len(h_prime):
        raise LengthMismatch(len(h), len(h_prime))
    if len(h) != len(g_prime):
        raise LengthMismatch(len(h), len(g_prime))
    if h.value_set != h_prime.value_set:
        raise ValueSetMismatch("h and h_prime enumerate different values")
    return PrefixListing(tuple(g_prime(inverse_lookup(h_prime, v)) for v in h))


def chain_stabilize(c: Chain) -> Optional[Tuple[int, int]]:
    """Least (i, j), i < j, with identical listings at both indices.

    "Least" is lexicographic on (j, i): the earliest step at which the chain
    revisits a listing, paired with the first earlier occurrence.  Returns
    None when the finite chain never repeats.
    """
    c.validate()
    for j in range(2, len(c.listings) + 1):
        for i in range(1, j):
            if c.listings[i - 1] == c.listings[j - 1]:
                return (i, j)
    return None


def make_strict_chain(n: int) -> Chain:
    """A maximal strictly descending chain over {1..n}.

    Starts at the full reversal and removes exactly one inversion per step by
    swapping an adjacent value pair that occurs out of order, ending at the
    ascending listing after n(n-1)/2 steps.
    """
    if n < 1:
        raise ValueError("n must be >= 1")
    current = list(range(n, 0, -1))
    out = [PrefixListing(tuple(current))]
    pos = {v: i for i, v in enumerate(current)}
    while True:
        # smallest adjacent value pair (k, k+1) enumerated in the wrong order
        k = next((k for k in range(1, n) if pos[k + 1] < pos[k]), None)
        if k is None:
            break
        i, j = pos[k + 1], pos[k]
        current[i], current[j] = current[j], current[i]
        pos[k], pos[k + 1] = i, j
        out.append(PrefixListing(tuple(current)))
    return Chain(tuple(out))
