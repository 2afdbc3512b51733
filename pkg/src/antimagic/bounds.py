"""Lower bounds on the local antimagic chromatic number."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import (
    BudgetExceeded,
    FamilySpec,
    Graph,
    bipartition,
    chromatic_number_exact,
    pendant_count,
)

DEFAULT_CHROMATIC_VERTEX_CAP = 40


def pendant_lower_bound(g: Graph) -> int:
    """chi_la >= k+1 for a graph with k pendants (any graph of order >= 3)."""
    return pendant_count(g) + 1


@dataclass(frozen=True)
class TwoColorReport:
    """Necessary conditions for a labeling that induces exactly two colors.

    If feasible, (x, y) are the forced color values and (X, Y) the forced
    class sizes with x*X = y*Y = q(q+1)/2.  Infeasible implies chi_la >= 3.
    """

    feasible: bool
    reason: str = ""
    x: int | None = None
    y: int | None = None
    X: int | None = None
    Y: int | None = None


def two_color_necessary(g: Graph) -> TwoColorReport:
    parts = bipartition(g)
    if parts is None:
        return TwoColorReport(False, "graph is not bipartite")
    X, Y = parts
    if X == Y:
        return TwoColorReport(False, f"equal part sizes X = Y = {X}")
    total = g.size * (g.size + 1) // 2
    if total % X or total % Y:
        return TwoColorReport(
            False, f"q(q+1)/2 = {total} is not divisible by both X={X} and Y={Y}"
        )
    x, y = total // X, total // Y
    return TwoColorReport(True, "", x=x, y=y, X=X, Y=Y)


def corona_lower_bound(m: int, n: int) -> int:
    """chi_la(C_m (.) O_n) >= mn + 2."""
    return m * n + 2


def lower_bound(
    g: Graph,
    spec: FamilySpec | None = None,
    chromatic_vertex_cap: int = DEFAULT_CHROMATIC_VERTEX_CAP,
) -> tuple[int, str]:
    """Best available lower bound with its source name.

    Sources, in tie-break order: corona-lemma (when the spec identifies a
    corona), pendant, chromatic, two-color, trivial.  The chromatic bound is
    computed exactly only on small graphs; otherwise the bipartite test
    supplies chi in {2, 3+} so the bound never overstates.
    """
    candidates: list[tuple[int, str]] = []
    if spec is not None and spec.kind == "Corona":
        candidates.append((corona_lower_bound(*spec.head), "corona-lemma"))
    candidates.append((pendant_lower_bound(g), "pendant"))
    chi: int | None = None
    if g.order <= chromatic_vertex_cap:
        try:
            chi = chromatic_number_exact(g, cap=g.order)
        except BudgetExceeded:
            chi = None
    if chi is None:
        chi = 2 if bipartition(g) is not None else 3
    candidates.append((chi, "chromatic"))
    two = two_color_necessary(g)
    candidates.append((3 if not two.feasible else 2, "two-color"))
    candidates.append((2, "trivial"))
    best = max(v for v, _ in candidates)
    for value, source in candidates:
        if value == best:
            return value, source
    raise AssertionError("unreachable")
