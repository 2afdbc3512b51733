"""Labelings of the corona C_m (.) O_n, one branch per parity case.

Canonical edge order (see graphs module): cycle edges e_1..e_m, then pendant
edges grouped per cycle vertex, so pendant edge (i, j) sits at position
m + (i-1)n + (j-1).
"""

from __future__ import annotations

from .constructions import UnsupportedConstruction, label_cycle_3col
from .graphs import FamilySpec, build_graph, validate_family_spec
from .labeling import Certificate, EdgeLabeling, make_certificate
from .rectangles import b_matrix, c_matrix, magic_rectangle
from .solver import FOUND, SearchBudget, find_labeling_with_color_budget

FALLBACK_BUDGET = SearchBudget(node_limit=5_000_000, time_limit=60.0)


def _pendant_slot(m: int, n: int, i: int, j: int) -> int:
    """Canonical index of pendant edge u_i v_{i,j} (all arguments 1-based)."""
    return m + (i - 1) * n + (j - 1)


def _even_even(m: int, n: int) -> tuple[list[int], str]:
    h, k = m // 2, n // 2
    labels = [0] * (m * (n + 1))
    for i in range(1, m + 1):
        labels[i - 1] = i
    put = lambda i, j, v: labels.__setitem__(_pendant_slot(m, n, i, j), v)
    put(1, 1, 4 * h + 1)
    put(1, 2, 6 * h)
    for i in range(2, h + 1):
        put(2 * i - 1, 1, 6 * h + 3 - 2 * i)
        put(2 * i - 1, 2, 6 * h + 2 - 2 * i)
    for i in range(1, h + 1):
        put(2 * i, 1, 4 * h + 1 - 2 * i)
        put(2 * i, 2, 4 * h + 2 - 2 * i)
    for r in range(1, 2 * h + 1):
        for j in range(2, k + 1):
            put(r, 2 * j - 1, 2 * h * (2 * j - 1) + r)
            put(r, 2 * j, 2 * h * (2 * j + 1) + 1 - r)
    return labels, "corona even-even construction"


def _rows_plus_shifted_cycle(m: int, n: int, rows: list[tuple[int, ...]], tag: str):
    """Pendant rows from a row-sum-constant matrix on [1, mn]; cycle edges get
    a three-color cycle labeling shifted up by mn."""
    cycle = label_cycle_3col(m)
    labels = [v + m * n for v in cycle.labels]
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            labels.append(0)
    for i in range(1, m + 1):
        for j in range(1, n + 1):
            labels[_pendant_slot(m, n, i, j)] = rows[i - 1][j - 1]
    return labels, tag


def _even_odd(m: int, n: int) -> tuple[list[int], str]:
    h, k = m // 2, (n + 1) // 2
    _, trimmed = c_matrix(h, k)
    labels = [0] * (m * (n + 1))
    if h == 2:
        phi = [k, 3 * k, 4 * k, 2 * k]
        tag = "corona even-odd construction (redefined cycle labels for m=4)"
    else:
        phi = [0] * m
        for i in range(1, h + 1):
            phi[2 * i - 2] = i * k
            phi[2 * i - 1] = (h + i) * k
        tag = "corona even-odd construction"
    for i in range(m):
        labels[i] = phi[i]
    row_for_vertex = {1: 2 * h - 1}
    for i in range(1, h + 1):
        row_for_vertex[2 * i] = 2 * i
    for i in range(1, h):
        row_for_vertex[2 * i + 1] = 2 * i - 1
    for i in range(1, m + 1):
        row = trimmed.rows[row_for_vertex[i] - 1]
        for j in range(1, n + 1):
            labels[_pendant_slot(m, n, i, j)] = row[j - 1]
    return labels, tag


def _fallback_search(spec: FamilySpec, budget: SearchBudget) -> Certificate:
    m, n = spec.head
    g = build_graph(spec)
    for target in (m * n + 2, m * n + 3):
        out = find_labeling_with_color_budget(g, target, budget)
        if out.status == FOUND:
            return make_certificate(g, out.labeling, "search-fallback", spec=spec.serialize())
    raise UnsupportedConstruction(
        f"no corona construction for odd m with n=1 and the fallback search "
        f"exhausted its budget on {spec.serialize()}"
    )


def label_corona(
    m: int,
    n: int,
    fallback_budget: SearchBudget = FALLBACK_BUDGET,
    allow_search_fallback: bool = True,
) -> Certificate:
    """Certificate for C_m (.) O_n: mn+2 colors when m and n are both even,
    mn+3 otherwise.  The (odd m, n=1) case has no matrix construction (an
    m x 1 rectangle with equal row sums cannot exist), so it falls back to a
    bounded solver search targeting mn+2 then mn+3.
    """
    spec = FamilySpec("Corona", (m, n))
    validate_family_spec(spec)
    if m % 2 == 0 and n % 2 == 0:
        labels, tag = _even_even(m, n)
    elif m % 2 == 1 and n % 2 == 1:
        if n == 1:
            if not allow_search_fallback:
                raise UnsupportedConstruction(
                    "odd cycle with one pendant per vertex has no matrix construction"
                )
            return _fallback_search(spec, fallback_budget)
        rect = magic_rectangle(m, n)
        labels, tag = _rows_plus_shifted_cycle(
            m, n, list(rect.rows), "corona odd-odd construction (magic rectangle)"
        )
    elif m % 2 == 1:  # odd m, even n
        h, k = (m - 1) // 2, n // 2
        rows = list(b_matrix(h, k).rows)
        labels, tag = _rows_plus_shifted_cycle(
            m, n, rows, "corona odd-even construction (row matrix)"
        )
    else:  # even m, odd n
        labels, tag = _even_odd(m, n)
    g = build_graph(spec)
    return make_certificate(g, EdgeLabeling(tuple(labels)), tag, spec=spec.serialize())
