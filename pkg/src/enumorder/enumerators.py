"""Producers of listing prefixes.

Closed-form enumerators cover the worked examples (doubling, shifted
identity, explicit ascending lists).  The dovetailed enumerator stands in
for a halting-set enumeration: it interleaves simulation of all codes and
emits each code in the round where its halt is observed, so the emission
order reflects halting times rather than magnitude.

Spec grammar: ``even | nminus:<nat> | asc:<nat>(,<nat>)* | halt:<model-name>``
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator, List, Optional, Tuple

from .errors import SpecParseError
from .prefixes import PrefixListing


class Enumerator:
    """A deterministic stream of distinct naturals under a step budget.

    Subclasses implement `stream(budget)`; the meaning of one budget unit
    is per-enumerator (one emission for closed forms, one dovetail round
    for halting enumerators).  Streams are single-consumer; call `stream`
    again for a fresh, identical run.
    """

    spec: str

    def stream(self, budget: int) -> Iterator[int]:
        raise NotImplementedError


class EvenEnumerator(Enumerator):
    """h(i) = 2i."""

    spec = "even"

    def stream(self, budget: int) -> Iterator[int]:
        return (2 * i for i in range(1, budget + 1))


class ShiftedEnumerator(Enumerator):
    """Identity with a gap: emits i for i < k, then i + 1 from position k on."""

    def __init__(self, k: int):
        self.k = k
        self.spec = f"nminus:{k}"

    def stream(self, budget: int) -> Iterator[int]:
        return (i if i < self.k else i + 1 for i in range(1, budget + 1))


class AscendingEnumerator(Enumerator):
    """Emits an explicit finite value list in increasing order."""

    def __init__(self, values: Tuple[int, ...]):
        self.values = tuple(sorted(values))
        self.spec = "asc:" + ",".join(str(v) for v in self.values)

    def stream(self, budget: int) -> Iterator[int]:
        return iter(self.values[:budget])


@dataclass(frozen=True)
class HaltingModel:
    """A deterministic halting-time model over codes 1, 2, ...

    `steps(code, cap)` returns the number of simulation steps at which the
    code is observed to halt (always >= 1), or None if it has not halted
    within `cap` steps.  Repeated queries agree.
    """

    name: str
    steps: Callable[[int, int], Optional[int]]


class DovetailEnumerator(Enumerator):
    """Round-robin dovetail over a halting model.

    Round r gives one simulation step to each of codes 1..r, in ascending
    code order; a code halting at its d-th step is emitted in round
    code + d - 1, ties broken by code.  An optional fixed round limit caps
    every stream regardless of the caller's budget.
    """

    def __init__(self, model: HaltingModel, rounds: Optional[int] = None):
        self.model = model
        self.rounds = rounds
        self.spec = f"halt:{model.name}"

    def stream(self, budget: int) -> Iterator[int]:
        limit = budget if self.rounds is None else min(budget, self.rounds)
        emissions: List[Tuple[int, int]] = []
        for code in range(1, limit + 1):
            # by round `limit`, code has received limit - code + 1 steps
            d = self.model.steps(code, limit - code + 1)
            if d is not None:
                emissions.append((code + d - 1, code))
        return (code for _, code in sorted(emissions))


def dovetail_halting(model: HaltingModel, budget: int) -> Enumerator:
    """A dovetailed enumerator over `model`, running at most `budget` rounds."""
    if budget < 0:
        raise ValueError("budget must be >= 0")
    return DovetailEnumerator(model, rounds=budget)


def take_prefix(e: Enumerator, n: int, budget: int) -> PrefixListing:
    """First min(n, achievable-within-budget) emissions, as a prefix.

    Short prefixes are valid results; callers inspect the length.
    """
    if n < 0 or budget < 0:
        raise ValueError("n and budget must be >= 0")
    return PrefixListing(tuple(itertools.islice(e.stream(budget), n)))


def _collatz_steps(code: int, cap: int) -> Optional[int]:
    # halving/tripling iterations down to 1, plus one observation step
    x = code
    taken = 1
    while x != 1:
        if taken >= cap:
            return None
        x = 3 * x + 1 if x % 2 else x // 2
        taken += 1
    return taken


# Register-machine instruction words, least-significant first in base 16:
#   op  = word % 3   (0 halt, 1 increment, 2 decrement-or-jump-if-zero)
#   reg = word // 3 % 2
#   arg = word // 6  (jump target, modulo program length)
def _decode_program(code: int) -> List[Tuple[int, int, int]]:
    words = []
    n = code
    while n > 0:
        n -= 1
        words.append(n % 16)
        n //= 16
    return [(w % 3, w // 3 % 2, w // 6) for w in words]


def _register_machine_steps(code: int, cap: int) -> Optional[int]:
    program = _decode_program(code)
    regs = [0, 0]
    pc = 0
    taken = 0
    while taken < cap:
        taken += 1
        if pc < 0 or pc >= len(program):
            return taken  # falling off the program is the halt observation
        op, reg, arg = program[pc]
        if op == 0:
            return taken
        if op == 1:
            regs[reg] += 1
            pc += 1
        elif regs[reg] == 0:
            pc = arg % len(program)
        else:
            regs[reg] -= 1
            pc += 1
    return None


COLLATZ_MODEL = HaltingModel("collatz", _collatz_steps)
REGISTER_MACHINE_MODEL = HaltingModel("rm", _register_machine_steps)


def builtin_models() -> List[HaltingModel]:
    return [COLLATZ_MODEL, REGISTER_MACHINE_MODEL]


def _model_by_name(name: str) -> Optional[HaltingModel]:
    return {m.name: m for m in builtin_models()}.get(name)


def parse_spec(text: str) -> Enumerator:
    """Parse an enumerator spec string per the grammar above."""
    if text == "even":
        return EvenEnumerator()
    if text.startswith("nminus:"):
        arg = text[len("nminus:"):]
        if not arg.isdigit() or int(arg) < 1:
            raise SpecParseError(len("nminus:"), "a natural number")
        return ShiftedEnumerator(int(arg))
    if text.startswith("asc:"):
        arg = text[len("asc:"):]
        parts = arg.split(",")
        if not all(p.isdigit() and int(p) >= 1 for p in parts):
            raise SpecParseError(len("asc:"), "comma-separated naturals")
        values = tuple(int(p) for p in parts)
        if len(set(values)) != len(values):
            raise SpecParseError(len("asc:"), "distinct values")
        return AscendingEnumerator(values)
    if text.startswith("halt:"):
        model = _model_by_name(text[len("halt:"):])
        if model is None:
            known = ", ".join(m.name for m in builtin_models())
            raise SpecParseError(len("halt:"), f"one of: {known}")
        return DovetailEnumerator(model)
    raise SpecParseError(0, "even | nminus:<nat> | asc:<nat>,... | halt:<model>")
