"""Edge labelings, induced vertex colors, verification, and certificates."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .graphs import Graph


@dataclass(frozen=True)
class EdgeLabeling:
    """A bijection from edge positions to 1..q, stored as a label array."""

    labels: tuple[int, ...]

    def __post_init__(self):
        q = len(self.labels)
        if sorted(self.labels) != list(range(1, q + 1)):
            raise ValueError(f"labels are not a bijection onto 1..{q}")

    @property
    def q(self) -> int:
        return len(self.labels)


@dataclass(frozen=True)
class ColorProfile:
    """Per-vertex induced sums plus the distinct color set."""

    sums: tuple[int, ...]
    distinct: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.distinct)


def induced_colors(g: Graph, f: EdgeLabeling) -> ColorProfile:
    """Compute f+(v) for every vertex (the sum of labels on incident edges)."""
    if f.q != g.size:
        raise ValueError(f"labeling has {f.q} labels but graph has {g.size} edges")
    sums = [0] * g.order
    for eid, (u, v) in enumerate(g.edges):
        sums[u] += f.labels[eid]
        sums[v] += f.labels[eid]
    # handshake identity: every edge label is counted at both endpoints
    assert sum(sums) == g.size * (g.size + 1)
    return ColorProfile(tuple(sums), tuple(sorted(set(sums))))


def color_count(p: ColorProfile) -> int:
    return p.count


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple[tuple[str, str], ...]


def verify_local_antimagic(g: Graph, f: EdgeLabeling) -> Verdict:
    """Valid iff no edge joins two vertices with equal induced sums.

    Violations are reported as vertex-name pairs in canonical edge order.
    """
    profile = induced_colors(g, f)
    bad = tuple(
        (g.names[u], g.names[v])
        for (u, v) in g.edges
        if profile.sums[u] == profile.sums[v]
    )
    return Verdict(valid=not bad, violations=bad)


@dataclass(frozen=True)
class Certificate:
    """Machine-checkable record of a labeling, its colors, and its verdict."""

    spec: str | None
    order: int
    size: int
    labels: tuple[int, ...]
    colors: tuple[tuple[str, int], ...]
    distinct_colors: tuple[int, ...]
    c: int
    valid: bool
    violations: tuple[tuple[str, str], ...]
    provenance: str
    degrees: tuple[int, ...] | None = field(default=None, compare=False)

    def to_json(self) -> str:
        doc = {
            "spec": self.spec,
            "order": self.order,
            "size": self.size,
            "labels": list(self.labels),
            "colors": {name: s for name, s in self.colors},
            "distinct_colors": list(self.distinct_colors),
            "c": self.c,
            "valid": self.valid,
            "violations": [[u, v] for u, v in self.violations],
            "provenance": self.provenance,
        }
        return json.dumps(doc, indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> "Certificate":
        doc = json.loads(text)
        return cls(
            spec=doc["spec"],
            order=doc["order"],
            size=doc["size"],
            labels=tuple(doc["labels"]),
            colors=tuple((k, v) for k, v in doc["colors"].items()),
            distinct_colors=tuple(doc["distinct_colors"]),
            c=doc["c"],
            valid=doc["valid"],
            violations=tuple((u, v) for u, v in doc["violations"]),
            provenance=doc["provenance"],
        )


def make_certificate(
    g: Graph,
    f: EdgeLabeling,
    provenance: str,
    spec: str | None = None,
) -> Certificate:
    profile = induced_colors(g, f)
    verdict = verify_local_antimagic(g, f)
    return Certificate(
        spec=spec,
        order=g.order,
        size=g.size,
        labels=f.labels,
        colors=tuple((g.names[v], profile.sums[v]) for v in range(g.order)),
        distinct_colors=profile.distinct,
        c=profile.count,
        valid=verdict.valid,
        violations=verdict.violations,
        provenance=provenance,
        degrees=g.degree_multiset(),
    )
