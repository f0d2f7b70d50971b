import pytest

from ncrewrite import (
    Move,
    TMConfig,
    TMSpec,
    format_config,
    format_tm_spec,
    minsky_utm,
    parse_config,
    parse_tm_spec,
    tm_run,
    tm_step,
)
from ncrewrite.turing import STOP


class TestMinskyTable:
    def test_entry_counts(self, minsky):
        assert minsky.states == 7 and minsky.colors == 4
        assert len(minsky.table) == 28
        assert len(minsky.left_pairs()) == 13
        assert len(minsky.right_pairs()) == 14
        assert minsky.stop_pairs() == [(4, 3)]

    @pytest.mark.parametrize("pair,expected", [
        ((0, 0), Move("L", 4, 1)),
        ((6, 3), Move("R", 3, 1)),
        ((2, 3), Move("L", 4, 1)),
        ((5, 3), Move("R", 2, 1)),
    ])
    def test_entries(self, minsky, pair, expected):
        assert minsky.table[pair] == expected

    def test_stop_entry(self, minsky):
        assert minsky.table[(4, 3)] is STOP


class TestTmStep:
    def test_left_move_nonempty(self, minsky):
        c = TMConfig((3,), 2, 3, ())
        assert tm_step(minsky, c) == TMConfig((), 4, 3, (1,))

    def test_stop(self, minsky):
        assert tm_step(minsky, TMConfig((), 4, 3, ())) is None

    def test_right_move_empty_tape(self, minsky):
        # (0,2) -> (R,0,0); fresh cell reads color 0
        c = TMConfig((), 0, 2, ())
        assert tm_step(minsky, c) == TMConfig((0,), 0, 0, ())

    def test_left_move_empty_tape(self, minsky):
        # (0,0) -> (L,4,1)
        c = TMConfig((), 0, 0, ())
        assert tm_step(minsky, c) == TMConfig((), 4, 0, (1,))

    def test_deterministic(self, minsky):
        c = TMConfig((1, 2), 3, 1, (0,))
        assert tm_step(minsky, c) == tm_step(minsky, c)

    def test_tape_never_shrinks(self, minsky):
        c = TMConfig((), 2, 0, ())
        for _ in range(30):
            nxt = tm_step(minsky, c)
            if nxt is None:
                break
            before = len(c.left) + len(c.right) + 1
            after = len(nxt.left) + len(nxt.right) + 1
            assert before <= after <= before + 1
            c = nxt


class TestTmRun:
    def test_immediate_stop(self, minsky):
        result = tm_run(minsky, TMConfig((), 4, 3, ()), 10)
        assert result.halted and result.steps == 0

    def test_one_step_halt(self, minsky):
        result = tm_run(minsky, TMConfig((3,), 2, 3, ()), 10)
        assert result.halted and result.steps == 1

    def test_still_running(self, minsky):
        result = tm_run(minsky, TMConfig((), 2, 0, ()), 3)
        assert not result.halted and result.steps == 3

    def test_trace(self, minsky):
        result = tm_run(minsky, TMConfig((3,), 2, 3, ()), 10, keep_trace=True)
        assert result.trace[0] == TMConfig((3,), 2, 3, ())
        assert len(result.trace) == 2


class TestValidation:
    def test_table_must_be_total(self):
        with pytest.raises(ValueError):
            TMSpec(states=1, colors=2, table={(0, 0): STOP})

    def test_move_targets_in_range(self):
        with pytest.raises(ValueError):
            TMSpec(states=1, colors=1, table={(0, 0): Move("L", 5, 0)})

    def test_config_validate(self, minsky):
        with pytest.raises(ValueError):
            TMConfig((9,), 0, 0, ()).validate(minsky)


class TestTextFormats:
    def test_spec_roundtrip(self, minsky, tiny_halt):
        for spec in (minsky, tiny_halt):
            assert parse_tm_spec(format_tm_spec(spec)) == spec

    def test_config_roundtrip(self):
        c = TMConfig((1, 0, 2), 2, 3, (0, 1))
        assert parse_config(format_config(c)) == c

    def test_config_empty_tapes(self):
        c = parse_config("left:\nstate: 4\ncell: 3\nright:\n")
        assert c == TMConfig((), 4, 3, ())

    def test_spec_parse_errors(self):
        with pytest.raises(ValueError):
            parse_tm_spec("states 1\nrule 0 0 -> STOP\n")
        with pytest.raises(ValueError):
            parse_tm_spec("states 1\ncolors 1\nbogus\n")
