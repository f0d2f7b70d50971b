"""Certificates that a rule set is a Gröbner basis under its order.

Three independent checks: no overlap or inclusion ambiguities among the
leading monomials, every rule oriented (lhs strictly above rhs), and an
exhaustive bounded audit of the order axioms (totality, minimality of
the empty word, two-sided monotonicity).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .orders import ReductionOrder
from .rewrite import Polynomial, Presentation, _apply, normalize
from .words import Word

OVERLAP = "overlap"
INCLUSION = "inclusion"


@dataclass(frozen=True)
class Ambiguity:
    """Two leading monomials sharing a superposition word.

    Overlap: a proper suffix of lhs(rule1) equals a proper prefix of
    lhs(rule2); witness glues the two.  Inclusion: lhs(rule2) occurs
    inside lhs(rule1) (witness is lhs(rule1) itself).
    """

    kind: str
    rule1: int
    rule2: int
    witness: Word
    offset1: int
    offset2: int


def find_ambiguities(p: Presentation) -> list[Ambiguity]:
    """All overlap and inclusion ambiguities among rule lhs pairs."""
    lhss = [r.lhs for r in p.rules]
    out: list[Ambiguity] = []

    prefix_index: dict[Word, list[int]] = {}
    for rid, lhs in enumerate(lhss):
        for k in range(1, len(lhs)):  # proper nonempty prefixes
            prefix_index.setdefault(lhs[:k], []).append(rid)

    for r1, lhs1 in enumerate(lhss):
        for k in range(1, len(lhs1)):  # proper nonempty suffixes
            suffix = lhs1[k:]
            for r2 in prefix_index.get(suffix, ()):
                out.append(Ambiguity(
                    kind=OVERLAP,
                    rule1=r1,
                    rule2=r2,
                    witness=lhs1 + lhss[r2][len(suffix):],
                    offset1=0,
                    offset2=k,
                ))

    word_index: dict[Word, list[int]] = {}
    for rid, lhs in enumerate(lhss):
        word_index.setdefault(lhs, []).append(rid)
    for r1, lhs1 in enumerate(lhss):
        for i in range(len(lhs1)):
            for j in range(i + 1, len(lhs1) + 1):
                sub = lhs1[i:j]
                for r2 in word_index.get(sub, ()):
                    if r2 == r1 and sub == lhs1:
                        continue
                    out.append(Ambiguity(
                        kind=INCLUSION,
                        rule1=r1,
                        rule2=r2,
                        witness=lhs1,
                        offset1=0,
                        offset2=i,
                    ))
    return out


def resolve_ambiguity(a: Ambiguity, p: Presentation) -> bool:
    """True iff both one-step reductions of the witness share a normal form."""
    x = _apply(a.witness, p, (a.offset1, a.rule1))
    y = _apply(a.witness, p, (a.offset2, a.rule2))
    nx, _ = normalize(x, p)
    ny, _ = normalize(y, p)
    return nx == ny


@dataclass
class OrderAuditReport:
    alphabet: tuple[str, ...]
    max_len: int
    checks: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations


def audit_order(order: ReductionOrder, alphabet: tuple[str, ...], max_len: int) -> OrderAuditReport:
    """Exhaustively check the order axioms on all words up to max_len.

    Checks: empty word minimal; distinct words never compare Equal; and
    for every pair s1 < s2 and every letter x, x*s1 < x*s2 and
    s1*x < s2*x.  Exponential in max_len; callers keep it small.
    """
    report = OrderAuditReport(alphabet=tuple(alphabet), max_len=max_len)
    words: list[Word] = [()]
    for n in range(1, max_len + 1):
        words.extend(itertools.product(alphabet, repeat=n))

    keys = {w: order.sort_key(w) for w in words}
    key_cache: dict[Word, tuple] = dict(keys)

    def key_of(w: Word):
        k = key_cache.get(w)
        if k is None:
            k = order.sort_key(w)
            key_cache[w] = k
        return k

    empty_key = keys[()]
    for w in words:
        if w:
            report.checks += 1
            if not empty_key < keys[w]:
                report.violations.append(("minimality", w))

    ranked = sorted(words, key=keys.__getitem__)
    for a, b in zip(ranked, ranked[1:]):
        report.checks += 1
        if keys[a] == keys[b]:
            report.violations.append(("totality", a, b))

    for i, s1 in enumerate(ranked):
        k1 = keys[s1]
        for s2 in ranked[i + 1:]:
            # sorted order gives s1 < s2 (totality violations reported above)
            for x in alphabet:
                report.checks += 2
                if not key_of((x,) + s1) < key_of((x,) + s2):
                    report.violations.append(("left", x, s1, s2))
                if not key_of(s1 + (x,)) < key_of(s2 + (x,)):
                    report.violations.append(("right", x, s1, s2))
    return report


def audit_orientation(p: Presentation) -> list[int]:
    """Ids of rules whose lhs is not strictly above their rhs."""
    bad = []
    for rid, r in enumerate(p.rules):
        if r.rhs is not None and not p.order.greater(r.lhs, r.rhs):
            bad.append(rid)
    return bad


def naive_ambiguity_scan(p: Presentation) -> list[Ambiguity]:
    """Quadratic pairwise scan; test oracle for find_ambiguities."""
    lhss = [r.lhs for r in p.rules]
    out: list[Ambiguity] = []
    for r1, lhs1 in enumerate(lhss):
        for r2, lhs2 in enumerate(lhss):
            for k in range(1, len(lhs1)):
                suffix = lhs1[k:]
                if len(suffix) < len(lhs2) and lhs2[:len(suffix)] == suffix:
                    out.append(Ambiguity(OVERLAP, r1, r2, lhs1 + lhs2[len(suffix):], 0, k))
            for i in range(len(lhs1) - len(lhs2) + 1):
                if lhs1[i:i + len(lhs2)] == lhs2:
                    if r1 == r2 and len(lhs1) == len(lhs2):
                        continue
                    out.append(Ambiguity(INCLUSION, r1, r2, lhs1, 0, i))
    return out
