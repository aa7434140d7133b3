"""Closed-form parameter predictions for the named graph families.

Every prediction carries the identifier of the published result it encodes
(e.g. "Thm 3.6") and whether it is exact or only a lower bound.  The only
lower bounds are the hypercube failed numbers for dimension >= 3; everything
else is exact on its family range.
"""

from __future__ import annotations

from dataclasses import dataclass

from .forcing import Rule
from .graphs import FamilySpec, build_family, has_module_order2, is_path_graph

EXACT = "exact"
LOWER_BOUND = "lower-bound"


class UnsupportedFamilyError(ValueError):
    """The family instance falls outside the hypotheses of every known result."""


@dataclass(frozen=True)
class Prediction:
    parameter: str   # F, Fplus, Z, Zplus, M, Mplus, mr, mrplus
    value: int
    exactness: str   # "exact" or "lower-bound"
    source: str      # identifier of the result supplying the value


def _path_failed(n: int) -> int:
    # ceil((n - 2) / 2), which is 0 for n in {1, 2}
    return (n - 1) // 2


def predicted_F(spec: FamilySpec) -> Prediction:
    """Failed zero forcing number of a single (non-union) family instance."""
    k, p = spec.kind, spec.params
    if k == "union":
        raise UnsupportedFamilyError("use predicted_failed_union for unions")
    if k == "path":
        return Prediction("F", _path_failed(p[0]), EXACT, "Thm 3.6")
    if k == "cycle":
        return Prediction("F", p[0] // 2, EXACT, "Thm 3.6")
    if k == "complete":
        if p[0] == 1:  # K1 = P1
            return Prediction("F", 0, EXACT, "Thm 3.6")
        return Prediction("F", p[0] - 2, EXACT, "Thm 3.6")
    if k == "marytree":
        n = p[1]
        # F = n - 2 holds exactly when the tree has a module of order 2;
        # the level-filled instances lacking one are paths (only m=2 with
        # n in {1, 4}), where the path formula applies instead.
        g = build_family(spec)
        if has_module_order2(g):
            return Prediction("F", n - 2, EXACT, "Thm 3.6")
        if is_path_graph(g):
            return Prediction("F", _path_failed(n), EXACT, "Thm 3.6")
        raise UnsupportedFamilyError(f"no closed form for marytree{p}")
    if k == "wheel":
        n = p[0]
        return Prediction("F", 3 if n == 5 else (2 * n - 2) // 3, EXACT, "Thm 3.6")
    if k == "biclique":
        return Prediction("F", p[0] + p[1] - 2, EXACT, "Thm 3.6")
    if k == "hypercube":
        d = p[0]
        if d == 1:
            return Prediction("F", 0, EXACT, "Thm 3.7")
        if d == 2:
            return Prediction("F", 2, EXACT, "Thm 3.7")
        return Prediction("F", (1 << d) - d, LOWER_BOUND, "Thm 3.7")
    if k == "halfgraph":
        s = p[0]
        return Prediction("F", 0 if s == 1 else 2 * s - 3, EXACT, "Thm 3.8")
    if k == "empty":
        return Prediction("F", p[0] - 1, EXACT, "Obs 3.4")
    raise UnsupportedFamilyError(f"no failed-number formula for {k}")


def predicted_Fplus(spec: FamilySpec) -> Prediction:
    """Failed PSD zero forcing number of a single family instance."""
    k, p = spec.kind, spec.params
    if k == "union":
        raise UnsupportedFamilyError("use predicted_failed_union for unions")
    if k in ("path", "marytree"):
        return Prediction("Fplus", 0, EXACT, "Thm 4.16")
    if k == "cycle":
        return Prediction("Fplus", 1, EXACT, "Thm 4.6")
    if k == "complete":
        if p[0] == 1:  # K1 is a tree
            return Prediction("Fplus", 0, EXACT, "Thm 4.16")
        return Prediction("Fplus", p[0] - 2, EXACT, "Cor 4.13")
    if k == "wheel":
        return Prediction("Fplus", (2 * p[0] - 2) // 3, EXACT, "Thm 4.20")
    if k == "biclique":
        m, n = p
        small = min(m, n)
        if small == 1:
            return Prediction("Fplus", 0, EXACT, "Thm 4.21")
        if small == 2:
            return Prediction("Fplus", m + n - 3, EXACT, "Thm 4.21")
        return Prediction("Fplus", m + n - 4, EXACT, "Thm 4.21")
    if k == "hypercube":
        d = p[0]
        if d == 1:
            return Prediction("Fplus", 0, EXACT, "Thm 4.22")
        if d == 2:
            return Prediction("Fplus", 1, EXACT, "Thm 4.22")
        return Prediction("Fplus", (1 << d) - d - 1, LOWER_BOUND, "Thm 4.22")
    if k == "halfgraph":
        s = p[0]
        return Prediction("Fplus", 0 if s == 1 else 2 * s - 4, EXACT, "Thm 4.23")
    if k == "empty":
        return Prediction("Fplus", p[0] - 1, EXACT, "Thm 4.2")
    raise UnsupportedFamilyError(f"no PSD failed-number formula for {k}")


# Table 5.1 rows: (M, Z, M+, Z+) as functions of the parameters.  The half
# graph rows for s <= 2 and the biclique row for m = n = 1 degenerate to
# paths (H1 = P2, H2 = P4, K11 = P2), where the tabulated formulas do not
# apply; those instances are served by the path row instead.

def predicted_table51(spec: FamilySpec) -> list[Prediction]:
    """Maximum-nullity / forcing-number table row, plus mr and mr+ via
    rank-nullity (mr = n - M, mr+ = n - M+)."""
    k, p = spec.kind, spec.params
    order = spec.order()

    def row(m_val: int, z_val: int, mp_val: int, zp_val: int) -> list[Prediction]:
        src = "Table 5.1"
        return [
            Prediction("M", m_val, EXACT, src),
            Prediction("Z", z_val, EXACT, src),
            Prediction("Mplus", mp_val, EXACT, src),
            Prediction("Zplus", zp_val, EXACT, src),
            Prediction("mr", order - m_val, EXACT, src),
            Prediction("mrplus", order - mp_val, EXACT, src),
        ]

    def path_row() -> list[Prediction]:
        return row(1, 1, 1, 1)

    if k == "path":
        return path_row()
    if k == "cycle":
        return row(2, 2, 2, 2)
    if k == "complete":
        if p[0] == 1:
            return path_row()
        return row(p[0] - 1, p[0] - 1, p[0] - 1, p[0] - 1)
    if k == "hypercube":
        d = p[0]
        if d == 1:
            return row(1, 1, 1, 1)
        if d == 2:
            return row(2, 2, 2, 2)
        h = 1 << (d - 1)
        return row(h, h, h, h)
    if k == "wheel":
        return row(3, 3, 3, 3)
    if k == "biclique":
        m, n = p
        if m + n == 2:
            return path_row()
        return row(m + n - 2, m + n - 2, min(m, n), min(m, n))
    if k == "halfgraph":
        s = p[0]
        if s <= 2:
            return path_row()
        return row(s, s, s, s)
    raise UnsupportedFamilyError(f"{k} is not covered by Table 5.1")


def table51_value(spec: FamilySpec, parameter: str) -> int:
    for pred in predicted_table51(spec):
        if pred.parameter == parameter:
            return pred.value
    raise KeyError(parameter)


def compose_disconnected(components: list[tuple[int, int]]) -> int:
    """Failed number of a disconnected graph from per-component data.

    ``components`` holds (order, failed_number) pairs; the result is
    sum(order) - min(order - failed).  The same formula serves both rules.
    With a single component it degenerates to that component's value.
    """
    if not components:
        raise ValueError("need at least one component")
    total = sum(size for size, _ in components)
    return total - min(size - f for size, f in components)


def predicted_failed_union(spec: FamilySpec, rule: Rule) -> Prediction:
    """Failed number of a disjoint union composed from member predictions.

    Exact when every member prediction is exact; a lower bound otherwise
    (the composition formula is monotone in each member value).
    """
    if spec.kind != "union":
        raise UnsupportedFamilyError("spec is not a union")
    predict = predicted_F if rule is Rule.STANDARD else predicted_Fplus
    preds = [predict(m) for m in spec.members]
    value = compose_disconnected(
        [(m.order(), pred.value) for m, pred in zip(spec.members, preds)])
    exactness = EXACT if all(p.exactness == EXACT for p in preds) else LOWER_BOUND
    source = "Cor 3.3" if rule is Rule.STANDARD else "Cor 4.8"
    parameter = "F" if rule is Rule.STANDARD else "Fplus"
    return Prediction(parameter, value, exactness, source)
