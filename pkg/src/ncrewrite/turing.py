"""Turing machine semantics with the two-sided finite tape representation.

A configuration keeps the colored tape as two finite sequences flanking
the current cell; moving off either end pads with color 0.  Includes the
Minsky 7-state 4-color universal machine and two tiny fixture machines
used by tests and experiments.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class Move:
    direction: str  # "L" or "R"
    state: int
    color: int


STOP = None  # table entry for a halt pair


@dataclass(frozen=True)
class TMSpec:
    states: int
    colors: int
    table: dict  # (state, color) -> Move or STOP

    def __post_init__(self):
        for i in range(self.states):
            for j in range(self.colors):
                if (i, j) not in self.table:
                    raise ValueError(f"table missing entry for ({i}, {j})")
        for (i, j), entry in self.table.items():
            if not (0 <= i < self.states and 0 <= j < self.colors):
                raise ValueError(f"table key ({i}, {j}) out of range")
            if entry is not STOP:
                if entry.direction not in ("L", "R"):
                    raise ValueError(f"bad direction {entry.direction!r}")
                if not (0 <= entry.state < self.states and 0 <= entry.color < self.colors):
                    raise ValueError(f"bad move target in entry ({i}, {j})")

    def left_pairs(self) -> list[tuple[int, int]]:
        return sorted(k for k, e in self.table.items() if e is not STOP and e.direction == "L")

    def right_pairs(self) -> list[tuple[int, int]]:
        return sorted(k for k, e in self.table.items() if e is not STOP and e.direction == "R")

    def stop_pairs(self) -> list[tuple[int, int]]:
        return sorted(k for k, e in self.table.items() if e is STOP)


@dataclass(frozen=True)
class TMConfig:
    """Full machine state: left tape, state, current cell color, right tape.

    ``left`` is ordered leftmost-to-adjacent, ``right`` adjacent-to-rightmost.
    """

    left: tuple[int, ...]
    state: int
    current: int
    right: tuple[int, ...]

    def validate(self, spec: TMSpec) -> None:
        if not (0 <= self.state < spec.states and 0 <= self.current < spec.colors):
            raise ValueError("state or color out of range")
        for k in self.left + self.right:
            if not (0 <= k < spec.colors):
                raise ValueError(f"tape color {k} out of range")


@dataclass(frozen=True)
class RunResult:
    halted: bool
    steps: int
    config: TMConfig
    trace: Optional[tuple[TMConfig, ...]] = None


def minsky_utm() -> TMSpec:
    """Minsky's 7-state, 4-color universal machine (28 instructions)."""
    rows = [
        # (state, color, direction, new state, new color); None = stop
        (0, 0, "L", 4, 1), (0, 1, "L", 1, 3), (0, 2, "R", 0, 0), (0, 3, "R", 0, 1),
        (1, 0, "L", 1, 2), (1, 1, "L", 1, 3), (1, 2, "R", 0, 0), (1, 3, "L", 1, 3),
        (2, 0, "R", 2, 2), (2, 1, "R", 2, 1), (2, 2, "R", 2, 0), (2, 3, "L", 4, 1),
        (3, 0, "R", 3, 2), (3, 1, "R", 3, 1), (3, 2, "R", 3, 0), (3, 3, "L", 4, 0),
        (4, 0, "L", 5, 2), (4, 1, "L", 4, 1), (4, 2, "L", 4, 0),
        (5, 0, "L", 5, 2), (5, 1, "L", 5, 1), (5, 2, "L", 6, 2), (5, 3, "R", 2, 1),
        (6, 0, "R", 0, 3), (6, 1, "R", 6, 3), (6, 2, "R", 6, 2), (6, 3, "R", 3, 1),
    ]
    table: dict = {(i, j): Move(d, q, p) for i, j, d, q, p in rows}
    table[(4, 3)] = STOP
    return TMSpec(states=7, colors=4, table=table)


def tiny_halting_machine() -> TMSpec:
    """2-state 2-color machine with one halt pair; small enough for brute force."""
    table = {
        (0, 0): Move("R", 0, 0),
        (0, 1): Move("L", 1, 1),
        (1, 0): Move("L", 1, 0),
        (1, 1): STOP,
    }
    return TMSpec(states=2, colors=2, table=table)


def tiny_looping_machine() -> TMSpec:
    """2-state 2-color machine with no halt pair at all; never stops."""
    table = {
        (0, 0): Move("R", 1, 0),
        (0, 1): Move("R", 1, 1),
        (1, 0): Move("R", 0, 0),
        (1, 1): Move("R", 0, 1),
    }
    return TMSpec(states=2, colors=2, table=table)


def tm_step(spec: TMSpec, c: TMConfig) -> Optional[TMConfig]:
    """One machine step; None when the current (state, color) pair halts."""
    entry = spec.table[(c.state, c.current)]
    if entry is STOP:
        return None
    if entry.direction == "L":
        if c.left:
            return TMConfig(c.left[:-1], entry.state, c.left[-1], (entry.color,) + c.right)
        return TMConfig((), entry.state, 0, (entry.color,) + c.right)
    if c.right:
        return TMConfig(c.left + (entry.color,), entry.state, c.right[0], c.right[1:])
    return TMConfig(c.left + (entry.color,), entry.state, 0, ())


def tm_run(spec: TMSpec, c: TMConfig, budget: int, keep_trace: bool = False) -> RunResult:
    """Iterate tm_step up to budget steps."""
    c.validate(spec)
    trace = [c] if keep_trace else None
    for k in range(budget + 1):
        nxt = tm_step(spec, c)
        if nxt is None:
            return RunResult(True, k, c, tuple(trace) if trace else None)
        if k == budget:
            break
        c = nxt
        if trace is not None:
            trace.append(c)
    return RunResult(False, budget, c, tuple(trace) if trace else None)


def format_tm_spec(spec: TMSpec) -> str:
    lines = [f"states {spec.states}", f"colors {spec.colors}"]
    for (i, j) in sorted(spec.table):
        entry = spec.table[(i, j)]
        if entry is STOP:
            lines.append(f"rule {i} {j} -> STOP")
        else:
            lines.append(f"rule {i} {j} -> {entry.direction} {entry.state} {entry.color}")
    return "\n".join(lines) + "\n"


def parse_tm_spec(text: str) -> TMSpec:
    states = colors = None
    table: dict = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if parts[0] == "states":
            states = int(parts[1])
        elif parts[0] == "colors":
            colors = int(parts[1])
        elif parts[0] == "rule":
            i, j = int(parts[1]), int(parts[2])
            if parts[3] != "->":
                raise ValueError(f"bad rule line: {raw!r}")
            if parts[4] == "STOP":
                table[(i, j)] = STOP
            else:
                table[(i, j)] = Move(parts[4], int(parts[5]), int(parts[6]))
        else:
            raise ValueError(f"bad line: {raw!r}")
    if states is None or colors is None:
        raise ValueError("missing states/colors header")
    return TMSpec(states=states, colors=colors, table=table)


def format_config(c: TMConfig) -> str:
    return (
        f"left: {' '.join(map(str, c.left))}\n"
        f"state: {c.state}\n"
        f"cell: {c.current}\n"
        f"right: {' '.join(map(str, c.right))}\n"
    )


def parse_config(text: str) -> TMConfig:
    fields: dict[str, str] = {}
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, value = line.partition(":")
        fields[key.strip()] = value.strip()
    for key in ("left", "state", "cell", "right"):
        if key not in fields:
            raise ValueError(f"missing config field {key!r}")
    return TMConfig(
        left=tuple(int(x) for x in fields["left"].split()),
        state=int(fields["state"]),
        current=int(fields["cell"]),
        right=tuple(int(x) for x in fields["right"].split()),
    )
