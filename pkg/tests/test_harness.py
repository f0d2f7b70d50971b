import random

import pytest

from ncrewrite import (
    NILPOTENCY,
    ZERO_DIVISOR,
    AlphabetError,
    Polynomial,
    TMConfig,
    annihilate_bounded,
    cancellation_probe,
    encode_config,
    htilde,
    lockstep,
    nilpotent_bounded,
    normalize,
    parse_word,
    tm_run,
    zerodivisor_presentation,
    zerodivisor_witness_bounded,
)


class TestHtilde:
    def test_counts(self):
        assert htilde(parse_word("t L Q0 P2 R s")) == 2
        assert htilde(()) == 0
        assert htilde(parse_word("t t s s s")) == 5

    def test_rejects_junk(self):
        with pytest.raises(AlphabetError):
            htilde(("x",))


class TestLockstep:
    def test_one_step_to_halt_nilp(self, minsky):
        report = lockstep(minsky, TMConfig((3,), 2, 3, ()), 2, NILPOTENCY)
        assert report.ok
        assert report.halted
        assert report.records[-1].actual.is_zero()

    def test_zd_single_step(self, minsky, p_zd):
        report = lockstep(minsky, TMConfig((), 0, 2, ()), 1, ZERO_DIVISOR, presentation=p_zd)
        assert report.ok and len(report.records) == 1
        rec = report.records[0]
        assert rec.actual == Polynomial.from_word(parse_word("L a0 Q0 P0 R s"))

    def test_immediate_stop(self, minsky):
        for construction in (NILPOTENCY, ZERO_DIVISOR):
            report = lockstep(minsky, TMConfig((), 4, 3, ()), 1, construction)
            assert report.ok and report.halted
            assert report.records[0].actual.is_zero()

    def test_long_run_no_divergence(self, minsky, p_nilp):
        report = lockstep(minsky, TMConfig((), 2, 0, ()), 30, NILPOTENCY, presentation=p_nilp)
        assert report.ok and not report.halted and len(report.records) == 30


class TestDeciders:
    def test_immediate_halt_pair(self, minsky):
        c = TMConfig((), 4, 3, ())
        assert nilpotent_bounded(minsky, c, 3) == nilpotent_bounded(minsky, c, 1)
        assert nilpotent_bounded(minsky, c, 3).value == 1
        assert annihilate_bounded(minsky, c, 3).value == 1
        assert zerodivisor_witness_bounded(minsky, c, 3).value == 1

    def test_one_step_from_halt(self, minsky):
        c = TMConfig((3,), 2, 3, ())
        assert nilpotent_bounded(minsky, c, 3) .witnessed
        assert nilpotent_bounded(minsky, c, 3).value == 1
        assert annihilate_bounded(minsky, c, 3).value == 1
        assert zerodivisor_witness_bounded(minsky, c, 3).value == 1

    def test_nonhalting_unknown(self, minsky):
        c = TMConfig((), 2, 0, ())
        assert tm_run(minsky, c, 5).halted is False
        out = annihilate_bounded(minsky, c, 5)
        assert not out.witnessed and out.value == 5

    def test_cross_oracle_agreement(self, minsky, p_nilp):
        # configs that the machine oracle says halt in k steps must be
        # annihilated by t^N with N <= k+1, and nilpotency must agree
        rng = random.Random(2)
        checked = 0
        while checked < 5:
            c = TMConfig(
                tuple(rng.randrange(4) for _ in range(rng.randint(0, 2))),
                rng.randrange(7),
                rng.randrange(4),
                tuple(rng.randrange(4) for _ in range(rng.randint(0, 2))),
            )
            result = tm_run(minsky, c, 30)
            if not result.halted:
                continue
            checked += 1
            k = result.steps
            ann = annihilate_bounded(minsky, c, k + 1, presentation=p_nilp)
            assert ann.witnessed and ann.value <= k + 1
            nil = nilpotent_bounded(minsky, c, ann.value, presentation=p_nilp)
            assert nil.witnessed

    def test_monotonicity(self, minsky, p_nilp):
        c = TMConfig((3,), 2, 3, ())
        first = annihilate_bounded(minsky, c, 1, presentation=p_nilp)
        for bound in (2, 4):
            again = annihilate_bounded(minsky, c, bound, presentation=p_nilp)
            assert again == first

    def test_bad_bounds(self, minsky):
        with pytest.raises(ValueError):
            nilpotent_bounded(minsky, TMConfig((), 0, 0, ()), 0)


class TestCancellationProbe:
    def test_simple_word_no_violation(self, minsky, p_zd):
        x = parse_word("L a0 R")
        for n in (1, 2, 3):
            nf, _ = normalize(Polynomial.from_word(x + ("t",) * n), p_zd)
            assert not nf.is_zero()
            nf, _ = normalize(Polynomial.from_word(("s",) * n + x), p_zd)
            assert not nf.is_zero()

    def test_probe_small(self):
        assert cancellation_probe(50, 10, seed=42) == []

    def test_deterministic_under_seed(self):
        assert cancellation_probe(20, 8, seed=7) == cancellation_probe(20, 8, seed=7)


class TestConservation:
    def test_deg_t_and_htilde_invariance(self, p_nilp, p_zd):
        rng = random.Random(13)
        from ncrewrite.orders import deg_t

        for p, invariant in ((p_nilp, deg_t), (p_zd, htilde)):
            letters = list(p.alphabet)
            for _ in range(500):
                rule = p.rules[rng.randrange(len(p.rules))]
                if rule.rhs is None:
                    continue
                prefix = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
                suffix = tuple(rng.choice(letters) for _ in range(rng.randint(0, 4)))
                before = prefix + rule.lhs + suffix
                after = prefix + rule.rhs + suffix
                assert invariant(before) == invariant(after)
