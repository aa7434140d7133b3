"""Color-change rules: one-step operators, closures, and set classification.

Both rules use synchronous semantics: every force valid against the
pre-step coloring is applied at once, so the derived coloring and the
recorded trace are fully deterministic.  When several blue vertices can
force the same white vertex in one iteration, the trace credits the
least-index forcer.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple

from .graphs import Graph, VertexSet, components_within


class Rule(enum.Enum):
    """Which color-change rule drives the forcing process."""

    STANDARD = "standard"
    PSD = "psd"


class Force(NamedTuple):
    forcer: int
    forced: int
    iteration: int


@dataclass(frozen=True)
class ForcingTrace:
    """Chronological record of all forces performed during a closure."""

    steps: tuple[Force, ...]

    def replay(self, initial: VertexSet) -> VertexSet:
        mask = initial
        for f in self.steps:
            mask |= 1 << f.forced
        return mask


def _check_subset(g: Graph, blue: VertexSet) -> None:
    if blue & ~g.full_mask:
        raise ValueError("blue set has bits outside the graph's vertices")


def _forces_standard(g: Graph, blue: VertexSet) -> dict[int, int]:
    """forced vertex -> least blue forcer, against the current coloring."""
    white = g.full_mask & ~blue
    adj = g.adj
    forced: dict[int, int] = {}
    b = blue
    while b:
        lsb = b & -b
        b ^= lsb
        u = lsb.bit_length() - 1
        m = adj[u] & white
        if m and not m & (m - 1):
            v = m.bit_length() - 1
            if v not in forced:
                forced[v] = u
    return forced


def _forces_psd(g: Graph, blue: VertexSet) -> dict[int, int]:
    """Forces of one PSD iteration: a blue u forces v when v is u's only
    neighbor inside v's white component."""
    white = g.full_mask & ~blue
    adj = g.adj
    forced: dict[int, int] = {}
    for comp in components_within(g, white):
        b = blue
        while b:
            lsb = b & -b
            b ^= lsb
            u = lsb.bit_length() - 1
            m = adj[u] & comp
            if m and not m & (m - 1):
                v = m.bit_length() - 1
                if v not in forced:
                    forced[v] = u
    return forced


def step(g: Graph, blue: VertexSet, rule: Rule) -> tuple[VertexSet, list[Force]]:
    """Apply one synchronous round of the rule; returns the new blue set and
    the forces performed, ordered by forced vertex."""
    _check_subset(g, blue)
    forced = (_forces_standard if rule is Rule.STANDARD else _forces_psd)(g, blue)
    new_blue = blue
    forces = []
    for v in sorted(forced):
        new_blue |= 1 << v
        forces.append(Force(forced[v], v, 1))
    return new_blue, forces


def closure(g: Graph, blue: VertexSet, rule: Rule) -> tuple[VertexSet, ForcingTrace]:
    """Iterate the rule to its fixpoint (the derived coloring)."""
    _check_subset(g, blue)
    forces_fn = _forces_standard if rule is Rule.STANDARD else _forces_psd
    steps: list[Force] = []
    iteration = 0
    while True:
        forced = forces_fn(g, blue)
        if not forced:
            return blue, ForcingTrace(tuple(steps))
        iteration += 1
        for v in sorted(forced):
            blue |= 1 << v
            steps.append(Force(forced[v], v, iteration))


def derived_set(g: Graph, blue: VertexSet, rule: Rule) -> VertexSet:
    """Closure without trace bookkeeping (the hot path for searches)."""
    _check_subset(g, blue)
    forces_fn = _forces_standard if rule is Rule.STANDARD else _forces_psd
    while True:
        forced = forces_fn(g, blue)
        if not forced:
            return blue
        for v in forced:
            blue |= 1 << v


def is_forcing_set(g: Graph, s: VertexSet, rule: Rule) -> bool:
    return derived_set(g, s, rule) == g.full_mask


def is_failed_set(g: Graph, s: VertexSet, rule: Rule) -> bool:
    return not is_forcing_set(g, s, rule)


def is_stalled(g: Graph, s: VertexSet, rule: Rule) -> bool:
    """True when s is a proper subset admitting no color change.

    The full vertex set is never stalled (stalledness is defined for proper
    subsets only).
    """
    _check_subset(g, s)
    if s == g.full_mask:
        return False
    forces_fn = _forces_standard if rule is Rule.STANDARD else _forces_psd
    return not forces_fn(g, s)
