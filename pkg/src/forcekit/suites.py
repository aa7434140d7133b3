"""Verification suites: table reproduction, characterization checks,
exhaustive small-graph scans, disconnected composition, and numerical
kernel-support trials.

Every suite returns a JSON-ready dict whose content depends only on its
arguments (seed, ranges, jobs), never on wall time or scheduling, so two
runs with the same inputs serialize byte-identically.

One family of known upstream discrepancies is tracked explicitly: the
tabulated forcing numbers for half-graphs claim Z = Z+ = s, but for the
bipartite half-graph fixed by the generators the computed values are s - 1
for s >= 2 (e.g. in H3 the two least vertices of the second part force
everything).  Table checks report those rows as known discrepancies instead
of failures, and the derived Thm 5.2 half-graph case at s = 3 inherits the
same flag.
"""

from __future__ import annotations

import random
from concurrent.futures import ProcessPoolExecutor

from .forcing import Rule
from .formulas import (
    EXACT,
    compose_disconnected,
    predicted_F,
    predicted_Fplus,
    predicted_table51,
)
from .graphs import (
    FamilySpec,
    Graph,
    bits,
    build_family,
    disjoint_union,
    graph_from_edges,
    is_connected,
    mask_of,
    parse_family,
)
from .linalg import (
    rank_lower_bound_check,
    sample_pattern_matrix,
    shifted_singular_matrix,
    support_implies_failed,
    weighted_laplacian,
)
from .search import (
    brute_failed_number,
    enumerate_maximal_failed,
    failed_number,
    zero_forcing_number,
)
from .theorems import (
    check_F_vs_Z,
    check_Fplus_lt_Zplus_cases,
    check_isolated_characterizations,
    check_low_Fplus,
    check_minrank_equalities,
    check_module_characterizations,
)

SUITE_NAMES = ("table1", "table2", "table51", "characterizations",
               "exhaustive6", "disconnected", "linalg")

# Default verification ranges; all instances finish within minutes under
# fort search.
_RANGES = {
    "path": range(1, 13),
    "cycle": range(3, 13),
    "complete": range(2, 11),
    "wheel": range(4, 13),
    "hypercube": range(1, 5),
    "halfgraph": range(1, 6),
    "empty": range(1, 11),
}


def default_family_specs(max_n: int | None = None,
                         kinds: tuple[str, ...] | None = None) -> list[FamilySpec]:
    """The default verification instances, optionally capped by order."""
    specs: list[FamilySpec] = []
    for kind, rng in _RANGES.items():
        specs.extend(FamilySpec(kind, (v,)) for v in rng)
    specs.extend(FamilySpec("biclique", (m, n))
                 for m in range(1, 6) for n in range(1, m + 1))
    specs.extend(FamilySpec("marytree", (m, n))
                 for m in (2, 3) for n in range(1, 14))
    if kinds is not None:
        specs = [s for s in specs if s.kind in kinds]
    if max_n is not None:
        specs = [s for s in specs if s.order() <= max_n]
    return specs


def _table_discrepancy_expected(spec: FamilySpec, parameter: str) -> bool:
    """Half-graph Z/Z+ rows disagree with search for s >= 3 (see module
    docstring; s <= 2 is served by the path row and reproduces fine).
    Everything else in the table must match exactly."""
    return (spec.kind == "halfgraph" and spec.params[0] >= 3
            and parameter in ("Z", "Zplus"))


def _new_result(suite: str, **params) -> dict:
    return {"suite": suite, "params": params, "checks": [], "by_theorem": {},
            "passed": 0, "failed": 0, "known_discrepancies": 0}


def _record(result: dict, check: dict, known_discrepancy: bool = False) -> None:
    tally = result["by_theorem"].setdefault(
        check.get("theorem", "?"), {"passed": 0, "failed": 0})
    if check["pass"]:
        result["passed"] += 1
        tally["passed"] += 1
    elif known_discrepancy:
        result["known_discrepancies"] += 1
        check["known_discrepancy"] = True
        result["checks"].append(check)
    else:
        result["failed"] += 1
        tally["failed"] += 1
        result["checks"].append(check)


def _finish(result: dict) -> dict:
    result["ok"] = result["failed"] == 0
    result["checks"].sort(key=lambda c: (c.get("graph", ""), c.get("theorem", "")))
    return result


# ---------------------------------------------------------------------------
# Table reproduction suites
# ---------------------------------------------------------------------------

def _run_failed_table(suite: str, rule: Rule, max_n: int | None,
                      budget: int | None) -> dict:
    predict = predicted_F if rule is Rule.STANDARD else predicted_Fplus
    result = _new_result(suite, max_n=max_n)
    for spec in default_family_specs(max_n):
        g = build_family(spec)
        pred = predict(spec)
        got = failed_number(g, rule, budget).value
        ok = got == pred.value if pred.exactness == EXACT else got >= pred.value
        relation = "=" if pred.exactness == EXACT else ">="
        _record(result, {
            "graph": spec.label(), "theorem": pred.source,
            "expected": f"{relation} {pred.value}", "observed": got, "pass": ok,
        })
    return _finish(result)


def run_table1(max_n: int | None = None, budget: int | None = None) -> dict:
    """Computed failed numbers against the closed forms, standard rule."""
    return _run_failed_table("table1", Rule.STANDARD, max_n, budget)


def run_table2(max_n: int | None = None, budget: int | None = None) -> dict:
    """Computed failed numbers against the closed forms, PSD rule."""
    return _run_failed_table("table2", Rule.PSD, max_n, budget)


def run_table51(max_n: int | None = None, budget: int | None = None) -> dict:
    """Computed forcing numbers against the tabulated Z and Z+ columns."""
    result = _new_result("table51", max_n=max_n)
    kinds = ("path", "cycle", "complete", "hypercube", "wheel", "biclique",
             "halfgraph")
    for spec in default_family_specs(max_n, kinds):
        preds = {p.parameter: p for p in predicted_table51(spec)}
        g = build_family(spec)
        for parameter, rule in (("Z", Rule.STANDARD), ("Zplus", Rule.PSD)):
            got = zero_forcing_number(g, rule, budget).value
            want = preds[parameter].value
            _record(result, {
                "graph": spec.label(), "theorem": "Table 5.1",
                "parameter": parameter, "expected": want, "observed": got,
                "pass": got == want,
            }, known_discrepancy=_table_discrepancy_expected(spec, parameter))
    return _finish(result)


# ---------------------------------------------------------------------------
# Characterization suite over family instances
# ---------------------------------------------------------------------------

def run_characterizations(max_n: int | None = None,
                          budget: int | None = None) -> dict:
    result = _new_result("characterizations", max_n=max_n)
    table_kinds = ("path", "cycle", "complete", "hypercube", "wheel",
                   "biclique", "halfgraph")
    for spec in default_family_specs(max_n):
        g = build_family(spec)
        f = failed_number(g, Rule.STANDARD, budget).value
        fp = failed_number(g, Rule.PSD, budget).value
        z = zero_forcing_number(g, Rule.STANDARD, budget).value
        zp = zero_forcing_number(g, Rule.PSD, budget).value
        name = spec.label()
        reports = []
        reports += check_isolated_characterizations(g, name, f, fp)
        if is_connected(g):
            reports += check_module_characterizations(g, name, f, fp)
        reports += check_low_Fplus(g, name, fp, zp)
        reports += check_F_vs_Z(g, name, f, z, fp, zp)
        if spec.kind in table_kinds:
            reports += check_minrank_equalities(spec, f, fp)
        reports += check_Fplus_lt_Zplus_cases(spec, fp, zp)
        for rep in reports:
            known = (rep.theorem == "Thm 5.2" and spec.kind == "halfgraph"
                     and spec.params[0] == 3)
            _record(result, rep.as_dict(), known_discrepancy=known)
    return _finish(result)


# ---------------------------------------------------------------------------
# Exhaustive scan over all labeled graphs up to a given order
# ---------------------------------------------------------------------------

_EXHAUSTIVE_THEOREMS = ("Obs 3.4", "Thm 4.2", "Thm 3.5", "Thm 4.12",
                        "Thm 4.16", "Cor 4.17", "Thm 4.18", "Obs 3.1",
                        "Prop 4.1", "Thm 5.1", "Thm 4.19")


def _graph_from_edge_mask(n: int, mask: int) -> Graph:
    adj = [0] * n
    bit = 1
    for i in range(n):
        for j in range(i + 1, n):
            if mask & bit:
                adj[i] |= 1 << j
                adj[j] |= 1 << i
            bit <<= 1
    return Graph(n, tuple(adj))


def _scan_one_graph(g: Graph, name: str) -> list[dict]:
    f = failed_number(g, Rule.STANDARD).value
    fp = failed_number(g, Rule.PSD).value
    z = zero_forcing_number(g, Rule.STANDARD).value
    zp = zero_forcing_number(g, Rule.PSD).value
    reports = []
    reports += check_isolated_characterizations(g, name, f, fp)
    if is_connected(g):
        reports += check_module_characterizations(g, name, f, fp)
    reports += check_low_Fplus(g, name, fp, zp)
    reports += check_F_vs_Z(g, name, f, z, fp, zp)
    return [r.as_dict() for r in reports]


def _exhaustive_chunk(args: tuple[int, int, int]) -> dict:
    n, lo, hi = args
    counts = {t: [0, 0] for t in _EXHAUSTIVE_THEOREMS}
    violations = []
    for mask in range(lo, hi):
        g = _graph_from_edge_mask(n, mask)
        for rep in _scan_one_graph(g, f"n={n} edges={mask:#x}"):
            slot = counts[rep["theorem"]]
            slot[0] += 1
            if not rep["pass"]:
                slot[1] += 1
                if len(violations) < 25:
                    violations.append(rep)
    return {"checked": hi - lo, "counts": counts, "violations": violations}


def run_exhaustive(max_n: int = 6, jobs: int = 1) -> dict:
    """Verify every characterization biconditional on all labeled graphs
    with at most max_n vertices (2^(n(n-1)/2) edge subsets per order)."""
    result = _new_result("exhaustive6", max_n=max_n, jobs=jobs)
    totals = {t: [0, 0] for t in _EXHAUSTIVE_THEOREMS}
    graphs_checked = 0
    tasks = []
    for n in range(1, max_n + 1):
        total = 1 << (n * (n - 1) // 2)
        chunk = max(512, total // (max(jobs, 1) * 8))
        tasks.extend((n, lo, min(lo + chunk, total))
                     for lo in range(0, total, chunk))
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            outputs = list(pool.map(_exhaustive_chunk, tasks))
    else:
        outputs = [_exhaustive_chunk(t) for t in tasks]
    violations = []
    for out in outputs:
        graphs_checked += out["checked"]
        for theorem, (checked, violated) in out["counts"].items():
            totals[theorem][0] += checked
            totals[theorem][1] += violated
        violations.extend(out["violations"])
    violations.sort(key=lambda v: (v["graph"], v["theorem"]))
    for theorem in _EXHAUSTIVE_THEOREMS:
        checked, violated = totals[theorem]
        _record(result, {
            "graph": f"all graphs n<={max_n}", "theorem": theorem,
            "expected": f"0 violations in {checked}",
            "observed": f"{violated} violations", "pass": violated == 0,
        })
    result["graphs_checked"] = graphs_checked
    result["violation_samples"] = violations[:25]
    return _finish(result)


# ---------------------------------------------------------------------------
# Random graphs and disconnected composition
# ---------------------------------------------------------------------------

def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    if p is None:
        p = rng.uniform(0.1, 0.9)
    edges = [(i, j) for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return graph_from_edges(n, edges)


def random_connected_graph(rng: random.Random, n: int) -> Graph:
    """Random spanning tree plus extra edges, uniform parent choice."""
    edges = {(rng.randrange(v), v) for v in range(1, n)}
    extra = rng.uniform(0.0, 0.5)
    for i in range(n):
        for j in range(i + 1, n):
            if (i, j) not in edges and rng.random() < extra:
                edges.add((i, j))
    return graph_from_edges(n, sorted(edges))


def run_disconnected(seed: int = 0, trials: int = 200,
                     max_total: int = 14) -> dict:
    """Composition formula on random disjoint unions, both rules, plus the
    path/cycle component lower bounds on constructed unions."""
    rng = random.Random(seed)
    result = _new_result("disconnected", seed=seed, trials=trials,
                         max_total=max_total)
    built = 0
    while built < trials:
        k = rng.randint(2, 4)
        sizes = [rng.randint(1, 6) for _ in range(k)]
        if sum(sizes) > max_total:
            continue
        built += 1
        parts = [random_connected_graph(rng, s) for s in sizes]
        g = parts[0]
        for part in parts[1:]:
            g = disjoint_union(g, part)
        for rule in (Rule.STANDARD, Rule.PSD):
            per_part = [(p.n, failed_number(p, rule).value) for p in parts]
            composed = compose_disconnected(per_part)
            direct = failed_number(g, rule).value
            _record(result, {
                "graph": f"union#{built} sizes={sizes}",
                "theorem": "Cor 3.3" if rule is Rule.STANDARD else "Cor 4.8",
                "expected": composed, "observed": direct,
                "pass": composed == direct,
            })
    # Lower bounds from a path or cycle component.
    for trial in range(20):
        h = random_connected_graph(rng, rng.randint(2, 6))
        k = rng.randint(2, 5)
        g = disjoint_union(h, build_family(FamilySpec("path", (k,))))
        fp = failed_number(g, Rule.PSD).value
        _record(result, {
            "graph": f"pk-union#{trial} n={g.n} k={k}", "theorem": "Prop 4.3",
            "expected": f">= {g.n - k}", "observed": fp, "pass": fp >= g.n - k,
        })
        m = rng.randint(3, 5)
        g = disjoint_union(h, build_family(FamilySpec("cycle", (m,))))
        fp = failed_number(g, Rule.PSD).value
        _record(result, {
            "graph": f"cm-union#{trial} n={g.n} m={m}", "theorem": "Prop 4.3",
            "expected": f">= {g.n - m + 1}", "observed": fp,
            "pass": fp >= g.n - m + 1,
        })
    return _finish(result)


def run_oracle_equivalence(seed: int = 0, trials: int = 500,
                           max_n: int = 8) -> dict:
    """Fort-complement failed numbers against the 2^n brute oracle on seeded
    random graphs and every default family instance of order <= max_n."""
    rng = random.Random(seed)
    result = _new_result("oracle", seed=seed, trials=trials, max_n=max_n)
    cases: list[tuple[str, Graph]] = []
    for t in range(trials):
        n = rng.randint(1, max_n)
        cases.append((f"random#{t} n={n}", random_graph(rng, n)))
    cases.extend((spec.label(), build_family(spec))
                 for spec in default_family_specs(max_n))
    for name, g in cases:
        for rule in (Rule.STANDARD, Rule.PSD):
            fast = failed_number(g, rule).value
            brute = brute_failed_number(g, rule).value
            _record(result, {
                "graph": name, "theorem": "fort-vs-brute",
                "rule": rule.value, "expected": brute, "observed": fast,
                "pass": fast == brute,
            })
    return _finish(result)


def maximal_failed_contains_compositions(g: Graph, rule: Rule) -> bool:
    """The per-component construction V \\ (V_i \\ F_i) must appear among the
    maximal failed sets of a disconnected graph."""
    comps = _components(g)
    if len(comps) < 2:
        raise ValueError("needs a disconnected graph")
    maximal = set(enumerate_maximal_failed(g, rule))
    full = g.full_mask
    for comp in comps:
        sub = _induced(g, comp)
        witness = failed_number(sub, rule).witness
        # map the witness back into g's labels
        verts = bits(comp)
        lifted = mask_of(verts[i] for i in bits(witness))
        constructed = full & ~(comp & ~lifted)
        if constructed not in maximal:
            return False
    return True


def _components(g: Graph):
    from .graphs import connected_components
    return connected_components(g)


def _induced(g: Graph, sub: int) -> Graph:
    verts = bits(sub)
    index = {v: i for i, v in enumerate(verts)}
    edges = [(index[u], index[v]) for u in verts
             for v in bits(g.adj[u]) if u < v and sub & (1 << v)]
    return graph_from_edges(len(verts), edges)


# ---------------------------------------------------------------------------
# Numerical suite
# ---------------------------------------------------------------------------

_LINALG_UNIONS = ("cycle:3+path:2", "path:3+path:4", "complete:3+empty:2")


def run_linalg(seed: int = 0, trials: int = 100, max_n: int = 12) -> dict:
    """Kernel-support certificates and rank lower bounds on every family
    instance of order <= max_n, plus a few disjoint unions whose Laplacian
    kernels have dimension > 1."""
    result = _new_result("linalg", seed=seed, trials=trials, max_n=max_n)
    table_kinds = ("path", "cycle", "complete", "hypercube", "wheel",
                   "biclique", "halfgraph")
    specs = default_family_specs(max_n)
    specs.extend(parse_family(text) for text in _LINALG_UNIONS)
    for idx, spec in enumerate(specs):
        g = build_family(spec)
        in_table = spec.kind in table_kinds
        support_ok = 0
        rank_ok = 0
        rank_total = 0
        bad = []
        for t in range(trials):
            sampled = sample_pattern_matrix(g, [seed, idx, t, 0])
            singular = shifted_singular_matrix(g, [seed, idx, t, 1])
            laplacian = weighted_laplacian(g, [seed, idx, t, 2])
            std_target = singular if t % 2 else sampled
            rep = support_implies_failed(g, std_target, Rule.STANDARD,
                                         trials=3, seed=[seed, idx, t, 3])
            if rep.passed:
                support_ok += 1
            else:
                bad.append(rep.as_dict())
            rep = support_implies_failed(g, laplacian, Rule.PSD,
                                         trials=3, seed=[seed, idx, t, 4])
            if rep.passed:
                support_ok += 1
            else:
                bad.append(rep.as_dict())
            if in_table:
                for matrix in (sampled, singular, laplacian):
                    rank_total += 1
                    rep = rank_lower_bound_check(spec, matrix)
                    if rep.passed:
                        rank_ok += 1
                    else:
                        bad.append(rep.as_dict())
        _record(result, {
            "graph": spec.label(), "theorem": "Cor 2.10 / Prop 2.12",
            "expected": f"{2 * trials} certificates pass",
            "observed": f"{support_ok} passed", "pass": support_ok == 2 * trials,
        })
        if in_table:
            _record(result, {
                "graph": spec.label(), "theorem": "Table 5.1 rank bound",
                "expected": f"{rank_total} bounds hold",
                "observed": f"{rank_ok} held", "pass": rank_ok == rank_total,
            })
        result["checks"].extend(bad[:5])
    return _finish(result)


# ---------------------------------------------------------------------------
# Dispatch
# ---------------------------------------------------------------------------

def run_suite(name: str, *, seed: int = 0, jobs: int = 1,
              max_n: int | None = None, budget: int | None = None) -> dict:
    if name == "table1":
        return run_table1(max_n, budget)
    if name == "table2":
        return run_table2(max_n, budget)
    if name == "table51":
        return run_table51(max_n, budget)
    if name == "characterizations":
        return run_characterizations(max_n, budget)
    if name == "exhaustive6":
        return run_exhaustive(max_n or 6, jobs)
    if name == "disconnected":
        return run_disconnected(seed)
    if name == "linalg":
        return run_linalg(seed, max_n=max_n or 12)
    raise ValueError(f"unknown suite {name!r}; choose from {SUITE_NAMES}")
