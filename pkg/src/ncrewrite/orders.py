"""Reduction orders that orient the two rule systems.

The nilpotency system is ordered by t-degree, then by the height
h(w) = sum 2^i * |X_i| where w = X_0 t X_1 t ... t X_n with t-free X_i,
then by deglex.  The zero-divisor system uses a weighted deglex where t
weighs 2 and every other letter 1, with lex ties broken by alphabet
precedence (earlier in the precedence list = greater letter).

Each order exposes a sort key that is monotone in the order, so bulk
comparisons reduce to tuple comparisons.
"""

from __future__ import annotations

from .words import AlphabetError, Word, letter_kind, phi_alphabet, psi_alphabet

LESS, EQUAL, GREATER = -1, 0, 1

NILPOTENCY = "nilpotency"
ZERO_DIVISOR = "zerodivisor"
DEGLEX = "deglex"


def deg_t(w: Word) -> int:
    return w.count("t")


def height(w: Word) -> int:
    """Height of a word over the nilpotency alphabet.

    Splitting w as X_0 t X_1 t ... t X_n with t-free blocks X_i, the
    height is sum 2^i * |X_i|.
    """
    for letter in w:
        if letter_kind(letter) in ("s", "L"):
            raise AlphabetError(f"letter {letter!r} not allowed here")
    total = 0
    block = 0
    weight = 1
    for letter in w:
        if letter == "t":
            total += weight * block
            block = 0
            weight *= 2
        else:
            block += 1
    return total + weight * block


def weighted_degree(w: Word) -> int:
    """Degree with weight 2 for t and 1 for every other letter."""
    for letter in w:
        letter_kind(letter)  # validates token shape
    return len(w) + w.count("t")


class ReductionOrder:
    """A total order on words over a fixed alphabet, given by a sort key."""

    def __init__(self, kind: str, precedence: tuple[str, ...]):
        if kind not in (NILPOTENCY, ZERO_DIVISOR, DEGLEX):
            raise ValueError(f"unknown order kind {kind!r}")
        self.kind = kind
        self.precedence = tuple(precedence)
        self._rank = {x: i for i, x in enumerate(self.precedence)}

    def _lex(self, w: Word) -> tuple[int, ...]:
        rank = self._rank
        try:
            return tuple(-rank[x] for x in w)
        except KeyError as exc:
            raise AlphabetError(f"letter {exc.args[0]!r} outside alphabet") from None

    def sort_key(self, w: Word):
        """Key such that key(w1) < key(w2) iff w1 precedes w2."""
        lex = self._lex(w)
        if self.kind == NILPOTENCY:
            return (deg_t(w), height(w), len(w), lex)
        if self.kind == ZERO_DIVISOR:
            return (weighted_degree(w), lex)
        return (len(w), lex)

    def compare(self, w1: Word, w2: Word) -> int:
        k1, k2 = self.sort_key(w1), self.sort_key(w2)
        if k1 < k2:
            return LESS
        if k1 > k2:
            return GREATER
        return EQUAL

    def greater(self, w1: Word, w2: Word) -> bool:
        return self.compare(w1, w2) == GREATER

    def __repr__(self):
        return f"ReductionOrder({self.kind!r}, {len(self.precedence)} letters)"


def nilpotency_order(states: int = 7, colors: int = 4) -> ReductionOrder:
    return ReductionOrder(NILPOTENCY, phi_alphabet(states, colors))


def zerodivisor_order(states: int = 7, colors: int = 4) -> ReductionOrder:
    return ReductionOrder(ZERO_DIVISOR, psi_alphabet(states, colors))


def deglex_order(precedence: tuple[str, ...]) -> ReductionOrder:
    return ReductionOrder(DEGLEX, precedence)


_NILP_DEFAULT = nilpotency_order()
_ZD_DEFAULT = zerodivisor_order()


def compare_nilp(w1: Word, w2: Word) -> int:
    """Compare two words over the default nilpotency alphabet."""
    return _NILP_DEFAULT.compare(w1, w2)


def compare_zd(w1: Word, w2: Word) -> int:
    """Compare two words over the default zero-divisor alphabet."""
    return _ZD_DEFAULT.compare(w1, w2)
