"""Exact extremal search: minimum forcing sets and maximum failed sets.

Minimum forcing sets come from a cardinality-ascending subset search pruned
by closures.  Maximum failed sets come from minimum-fort search: a fort is a
nonempty vertex set W whose complement is stalled, so the failed number is
n - |minimum fort|.  Forts are typically tiny, which makes the ascending
enumeration exponentially cheaper than scanning failed sets from the top;
the descending scan survives as ``brute_failed_number``, the independent
oracle.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from itertools import combinations

from .forcing import Rule, derived_set
from .graphs import Graph, VertexSet, bits, components_within

DEFAULT_BUDGET = 20_000_000
BRUTE_FORCE_MAX_N = 20


class SearchBudgetExceeded(RuntimeError):
    """Raised when a search would examine more candidates than allowed."""


def resolve_budget(budget: int | None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("FORCEKIT_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


class _Budget:
    __slots__ = ("left", "what")

    def __init__(self, limit: int, what: str):
        self.left = limit
        self.what = what

    def spend(self, amount: int = 1) -> None:
        self.left -= amount
        if self.left < 0:
            raise SearchBudgetExceeded(
                f"{self.what}: candidate budget exhausted (raise --budget "
                "or FORCEKIT_BUDGET, or shrink the instance)")


@dataclass(frozen=True)
class ExtremalResult:
    """An extremal value with its witness set.

    kind is "min-forcing" or "max-failed"; method records how the value was
    obtained ("subset-search", "fort-search" or "brute-force").  The witness
    always has exactly ``value`` vertices and verifies under the forcing
    engine as forcing resp. failed.
    """

    value: int
    witness: VertexSet
    rule: Rule
    kind: str
    method: str

    def witness_vertices(self) -> list[int]:
        return bits(self.witness)


def zero_forcing_number(g: Graph, rule: Rule,
                        budget: int | None = None) -> ExtremalResult:
    """Smallest k admitting a forcing set of size k, with the
    lexicographically least witness.

    Subsets are explored in ascending cardinality, lexicographic within each
    size; a partial set is only extended by vertices outside its closure
    (any minimum forcing set survives this pruning: a member inside the
    closure of the others could be dropped).
    """
    tracker = _Budget(resolve_budget(budget), "zero_forcing_number")
    n = g.n
    full = g.full_mask

    def extend(prefix: VertexSet, last: int, size: int, k: int) -> VertexSet | None:
        tracker.spend()
        cl = derived_set(g, prefix, rule)
        if size == k:
            return prefix if cl == full else None
        for v in range(last + 1, n):
            if cl & (1 << v):
                continue
            found = extend(prefix | (1 << v), v, size + 1, k)
            if found is not None:
                return found
        return None

    for k in range(1, n + 1):
        witness = extend(0, -1, 0, k)
        if witness is not None:
            return ExtremalResult(k, witness, rule, "min-forcing", "subset-search")
    raise AssertionError("the full vertex set always forces")


def _is_fort_standard(g: Graph, w: VertexSet) -> bool:
    adj = g.adj
    out = g.full_mask & ~w
    while out:
        lsb = out & -out
        out ^= lsb
        m = adj[lsb.bit_length() - 1] & w
        if m and not m & (m - 1):
            return False
    return True


def _is_fort_psd(g: Graph, w: VertexSet) -> bool:
    adj = g.adj
    outside = g.full_mask & ~w
    for comp in components_within(g, w):
        out = outside
        while out:
            lsb = out & -out
            out ^= lsb
            m = adj[lsb.bit_length() - 1] & comp
            if m and not m & (m - 1):
                return False
    return True


def is_fort(g: Graph, w: VertexSet, rule: Rule) -> bool:
    """A nonempty w is a fort when its complement is stalled.

    Standard rule: every outside vertex has 0 or >= 2 neighbors in w.
    PSD rule: the same holds within each connected component of G[w].
    """
    if not w or w & ~g.full_mask:
        return False
    return (_is_fort_standard if rule is Rule.STANDARD else _is_fort_psd)(g, w)


def min_fort(g: Graph, rule: Rule, budget: int | None = None) -> VertexSet:
    """Lexicographically least minimum-cardinality fort.

    Always exists: the full vertex set is a fort (its complement is the
    stalled empty coloring).
    """
    tracker = _Budget(resolve_budget(budget), "min_fort")
    check = _is_fort_standard if rule is Rule.STANDARD else _is_fort_psd
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            tracker.spend()
            w = 0
            for v in combo:
                w |= 1 << v
            if check(g, w):
                return w
    raise AssertionError("unreachable: V itself is a fort")


def failed_number(g: Graph, rule: Rule, budget: int | None = None) -> ExtremalResult:
    """Maximum size of a failed set, as n - |minimum fort|.

    Complements of forts are exactly the stalled proper subsets, maximum
    failed sets are stalled, and any failed set is contained in its stalled
    derived set, so the maximum failed size is n minus the minimum fort size.
    """
    w = min_fort(g, rule, budget)
    witness = g.full_mask & ~w
    return ExtremalResult(g.n - w.bit_count(), witness, rule,
                          "max-failed", "fort-search")


def brute_failed_number(g: Graph, rule: Rule,
                        budget: int | None = None) -> ExtremalResult:
    """Independent oracle: scan all 2^n subsets for the largest failed one."""
    if g.n > BRUTE_FORCE_MAX_N:
        raise SearchBudgetExceeded(
            f"brute_failed_number: n={g.n} exceeds the 2^n scan guard "
            f"(n <= {BRUTE_FORCE_MAX_N})")
    tracker = _Budget(resolve_budget(budget), "brute_failed_number")
    full = g.full_mask
    best_size = -1
    best: VertexSet = 0
    for mask in range(1 << g.n):
        tracker.spend()
        size = mask.bit_count()
        if size < best_size:
            continue
        if derived_set(g, mask, rule) != full:
            if size > best_size or (size == best_size and bits(mask) < bits(best)):
                best_size = size
                best = mask
    if best_size < 0:
        raise AssertionError("unreachable: the empty set never forces n >= 1")
    return ExtremalResult(best_size, best, rule, "max-failed", "brute-force")


def enumerate_maximal_failed(g: Graph, rule: Rule,
                             budget: int | None = None) -> list[VertexSet]:
    """All maximal failed sets, i.e. complements of minimal forts.

    A failed set is maximal exactly when it is stalled and no proper stalled
    superset exists, which dualizes to its complement being a minimal fort.
    Results are sorted by vertex list.
    """
    if g.n > BRUTE_FORCE_MAX_N:
        raise SearchBudgetExceeded(
            f"enumerate_maximal_failed: n={g.n} exceeds the scan guard "
            f"(n <= {BRUTE_FORCE_MAX_N})")
    tracker = _Budget(resolve_budget(budget), "enumerate_maximal_failed")
    check = _is_fort_standard if rule is Rule.STANDARD else _is_fort_psd
    minimal_forts: list[VertexSet] = []
    for k in range(1, g.n + 1):
        for combo in combinations(range(g.n), k):
            tracker.spend()
            w = 0
            for v in combo:
                w |= 1 << v
            if any(f & w == f for f in minimal_forts):
                continue
            if check(g, w):
                minimal_forts.append(w)
    full = g.full_mask
    out = [full & ~w for w in minimal_forts]
    out.sort(key=bits)
    return out
