"""Shared fixtures: a corpus of small family graphs for cross-checks."""

from __future__ import annotations

import pytest

from antimagic import FamilySpec, build_graph, parse_family_spec


def descending_tuples(total_max: int, min_part: int = 3, min_len: int = 2):
    """Non-increasing tuples with parts >= min_part and sum <= total_max."""
    out: list[tuple[int, ...]] = []

    def rec(prefix: list[int], budget: int, cap: int) -> None:
        if len(prefix) >= min_len:
            out.append(tuple(prefix))
        for part in range(min(budget, cap), min_part - 1, -1):
            rec(prefix + [part], budget - part, part)

    rec([], total_max, total_max)
    return out


def small_family_specs(q_cap: int) -> list[FamilySpec]:
    """Every supported family spec whose graph has at most q_cap edges."""
    specs: list[FamilySpec] = []
    for a in descending_tuples(q_cap):
        specs.append(FamilySpec("C", a))
        if sum(a) - len(a) + 1 <= q_cap:
            specs.append(FamilySpec("GB", a))
        for k in range(1, q_cap - sum(a) + 1):
            specs.append(FamilySpec("H", a, (k,)))
    for m in range(2, q_cap):
        for n in range(3, q_cap + 2):
            if m + n - 1 <= q_cap:
                specs.append(FamilySpec("T", (m, n)))
    for r in range(2, q_cap):
        for p in range(1, q_cap):
            if 2 * r + 1 + p <= q_cap:
                specs.append(FamilySpec("GP", (r,), (p,)))
    for m in range(3, q_cap + 1):
        for n in range(1, q_cap):
            if m * (n + 1) <= q_cap:
                specs.append(FamilySpec("Corona", (m, n)))
    for m in range(1, 5):
        base = m * (m - 1) // 2
        if base > q_cap:
            continue

        def k_tuples(length: int, cap: int):
            if length == 0:
                yield ()
                return
            for first in range(cap, -1, -1):
                for rest in k_tuples(length - 1, first):
                    yield (first,) + rest

        for ns in k_tuples(m, q_cap):
            if 1 <= sum(ns) <= q_cap - base and m + sum(ns) >= 3:
                specs.append(FamilySpec("K", (m,), ns))
    for n1 in range(0, q_cap):
        for n2 in range(0, q_cap):
            for n3 in range(0, q_cap):
                if 2 <= n1 + n2 + n3 <= q_cap - 2:
                    specs.append(FamilySpec("Ct", (3,), (n1, n2, n3)))
    for n in range(3, q_cap + 2):
        if n - 1 <= q_cap:
            specs.append(FamilySpec("Path", (n,)))
        if n <= q_cap:
            specs.append(FamilySpec("Cycle", (n,)))
        if n - 1 <= q_cap:
            specs.append(FamilySpec("Star", (n,)))
    seen: set[str] = set()
    unique = []
    for spec in specs:
        key = spec.serialize()
        if key not in seen:
            seen.add(key)
            unique.append(spec)
    return unique


@pytest.fixture(scope="session")
def tiny_corpus():
    """All family graphs on at most 6 edges (plus their specs)."""
    return [(spec, build_graph(spec)) for spec in small_family_specs(6)]


@pytest.fixture
def spec_of():
    return parse_family_spec
