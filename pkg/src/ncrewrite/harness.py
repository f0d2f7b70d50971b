"""Executable experiments: lockstep simulation, bounded deciders, probes.

Halting of the encoded machine is undecidable, so every decider here is
a bounded semidecision: it answers "witnessed at n" or "unknown up to
the bound", never "no".
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Optional

from .encodings import encode_config, make_presentation, nilpotency_presentation, zerodivisor_presentation
from .orders import NILPOTENCY, ZERO_DIVISOR
from .rewrite import DEFAULT_BUDGET, Polynomial, Presentation, concat, normalize
from .turing import TMConfig, TMSpec, minsky_utm, tm_step
from .words import Word, letter_kind


@dataclass(frozen=True)
class StepRecord:
    config: TMConfig
    word: Word
    actual: Polynomial
    expected: Optional[Polynomial]  # None at a halt pair (actual must be zero)
    matched: bool


@dataclass(frozen=True)
class LockstepReport:
    construction: str
    records: tuple[StepRecord, ...]
    divergence: Optional[int]
    halted: bool

    @property
    def ok(self) -> bool:
        return self.divergence is None


@dataclass(frozen=True)
class DecisionOutcome:
    """Witnessed(n): zero reached at n.  Unknown(bound): searched up to bound."""

    witnessed: bool
    value: int

    @classmethod
    def found(cls, n: int) -> "DecisionOutcome":
        return cls(True, n)

    @classmethod
    def unknown(cls, bound: int) -> "DecisionOutcome":
        return cls(False, bound)


def htilde(w: Word) -> int:
    """Count of t letters plus count of s letters."""
    for letter in w:
        letter_kind(letter)  # validates token shape
    return w.count("t") + w.count("s")


def lockstep(
    spec: TMSpec,
    c0: TMConfig,
    steps: int,
    construction: str,
    presentation: Presentation | None = None,
    budget: int = DEFAULT_BUDGET,
) -> LockstepReport:
    """Run machine and rewriting side by side for up to `steps` steps.

    At each non-halting step, t * encode(c) must normalize to the
    encoding of the successor followed by t (nilpotency) or s
    (zero-divisor); at a halt pair it must normalize to zero.
    """
    if steps < 1:
        raise ValueError("steps must be >= 1")
    p = presentation if presentation is not None else make_presentation(spec, construction)
    tail = ("t",) if construction == NILPOTENCY else ("s",)
    records: list[StepRecord] = []
    divergence: Optional[int] = None
    halted = False
    c = c0
    for n in range(steps):
        w = encode_config(c, construction)
        actual, _ = normalize(Polynomial.from_word(("t",) + w), p, budget)
        nxt = tm_step(spec, c)
        if nxt is None:
            halted = True
            matched = actual.is_zero()
            records.append(StepRecord(c, w, actual, None, matched))
            if not matched:
                divergence = n
            break
        expected, _ = normalize(
            Polynomial.from_word(encode_config(nxt, construction) + tail), p, budget
        )
        matched = actual == expected
        records.append(StepRecord(c, w, actual, expected, matched))
        if not matched:
            divergence = n
            break
        c = nxt
    return LockstepReport(construction, tuple(records), divergence, halted)


def annihilate_bounded(
    spec: TMSpec,
    c0: TMConfig,
    nmax: int,
    construction: str = NILPOTENCY,
    presentation: Presentation | None = None,
    budget: int = DEFAULT_BUDGET,
) -> DecisionOutcome:
    """Smallest N <= nmax with t^N * encode(c0) normalizing to zero."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    p = presentation if presentation is not None else make_presentation(spec, construction)
    t = Polynomial.from_word(("t",))
    x, _ = normalize(Polynomial.from_word(encode_config(c0, construction)), p, budget)
    for n in range(1, nmax + 1):
        x, _ = normalize(concat(t, x), p, budget)
        if x.is_zero():
            return DecisionOutcome.found(n)
    return DecisionOutcome.unknown(nmax)


def nilpotent_bounded(
    spec: TMSpec,
    c0: TMConfig,
    nmax: int,
    presentation: Presentation | None = None,
    budget: int = DEFAULT_BUDGET,
) -> DecisionOutcome:
    """Smallest n <= nmax with (t * encode(c0))^n normalizing to zero."""
    if nmax < 1:
        raise ValueError("nmax must be >= 1")
    p = presentation if presentation is not None else nilpotency_presentation(spec)
    base = Polynomial.from_word(("t",) + encode_config(c0, NILPOTENCY))
    acc, _ = normalize(base, p, budget)
    for n in range(1, nmax + 1):
        if acc.is_zero():
            return DecisionOutcome.found(n)
        acc, _ = normalize(concat(acc, base), p, budget)
    return DecisionOutcome.unknown(nmax)


def zerodivisor_witness_bounded(
    spec: TMSpec,
    c0: TMConfig,
    nmax: int,
    presentation: Presentation | None = None,
    budget: int = DEFAULT_BUDGET,
) -> DecisionOutcome:
    """Left annihilator t^N for encode(c0) in the zero-divisor algebra."""
    return annihilate_bounded(
        spec, c0, nmax, ZERO_DIVISOR, presentation=presentation, budget=budget
    )


def _random_structured_word(rng: random.Random, spec: TMSpec, max_len: int) -> Word:
    room = max(0, (max_len - 4) // 2)
    u = tuple(rng.randrange(spec.colors) for _ in range(rng.randint(0, room)))
    v = tuple(rng.randrange(spec.colors) for _ in range(rng.randint(0, room)))
    c = TMConfig(u, rng.randrange(spec.states), rng.randrange(spec.colors), v)
    w = list(encode_config(c, ZERO_DIVISOR))
    for _ in range(rng.randint(0, 3)):
        if len(w) >= max_len:
            break
        w.insert(rng.randint(0, len(w)), rng.choice(("t", "s")))
    return tuple(w[:max_len])


def _random_word(rng: random.Random, alphabet: tuple[str, ...], max_len: int) -> Word:
    return tuple(rng.choice(alphabet) for _ in range(rng.randint(1, max_len)))


def cancellation_probe(
    samples: int,
    max_len: int,
    seed: int = 0,
    spec: TMSpec | None = None,
    budget: int = DEFAULT_BUDGET,
) -> list[tuple[Word, str, int]]:
    """Probe right-t / left-s cancellation in the zero-divisor algebra.

    Samples words X with nonzero normal form (half structured
    configuration words with extra t/s letters, half fully random) and
    checks that X t^n and s^n X stay nonzero for n in 1..3.  Returns the
    violations found (expected empty).
    """
    if samples < 1:
        raise ValueError("samples must be >= 1")
    rng = random.Random(seed)
    spec = spec if spec is not None else minsky_utm()
    p = zerodivisor_presentation(spec)
    violations: list[tuple[Word, str, int]] = []
    produced = 0
    while produced < samples:
        if rng.random() < 0.5:
            x = _random_structured_word(rng, spec, max_len)
        else:
            x = _random_word(rng, p.alphabet, max_len)
        nf, _ = normalize(Polynomial.from_word(x), p, budget)
        if nf.is_zero():
            continue
        produced += 1
        for n in (1, 2, 3):
            right, _ = normalize(Polynomial.from_word(x + ("t",) * n), p, budget)
            if right.is_zero():
                violations.append((x, "right-t", n))
            left, _ = normalize(Polynomial.from_word(("s",) * n + x), p, budget)
            if left.is_zero():
                violations.append((x, "left-s", n))
    return violations
