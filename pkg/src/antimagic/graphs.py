"""Graph representation, family constructors, and the family-spec grammar.

Every graph family gets a fixed, documented vertex/edge order so that edge
labelings are plain arrays indexed by edge position.  Canonical orders:

* CycleUnion C(a1,...,ar): hub ``u`` first, then the internal vertices of each
  cycle in turn.  Edge i (1-based) follows the flattened cycle order: within
  cycle i the edges run u -> w_{i,1} -> ... -> w_{i,a_i-1} -> u, so the first
  and last edge of each block are the central edges.
* Hibiscus H(a;k): cycle edges as above, then the k pendant edges at ``u``.
* Tadpole T(m,n): vertices v1..v_{m+n-1}; edges e_i = v_i v_{i+1} for
  i <= m+n-2 and the closing edge e_{m+n-1} = v_{m+n-1} v_m.
* Book GB(a1,...,ar): the shared edge uv first, then each cycle's internal
  path u -> x_{i,1} -> ... -> v.
* BookPendants GP(r;m) = GB(3^[r]) plus m pendant edges at u, appended last.
* Corona C_m (.) O_n: cycle edges e_i = u_i u_{i+1} (e_m closes), then the
  pendant edges grouped per cycle vertex.
* CompletePendants K(m;n1,...,nm): clique edges in lexicographic order, then
  pendant edges grouped per clique vertex.
* Caterpillar3 Ct(3;n1,n2,n3): spine edges xy, yz, then pendants at x, y, z.
* Path/Cycle/Star: the obvious orders (cycle closes with v_n v_1).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field

ROLE_HUB = "hub"
ROLE_CYCLE = "cycle-internal"
ROLE_PATH = "path-internal"
ROLE_PENDANT = "pendant"
ROLE_CLIQUE = "clique"

KINDS = ("C", "H", "T", "GB", "GP", "Corona", "K", "Ct", "Path", "Cycle", "Star")

_KIND_NAMES = {
    "C": "CycleUnion",
    "H": "Hibiscus",
    "T": "Tadpole",
    "GB": "Book",
    "GP": "BookPendants",
    "Corona": "Corona",
    "K": "CompletePendants",
    "Ct": "Caterpillar3",
    "Path": "Path",
    "Cycle": "Cycle",
    "Star": "Star",
}


class FamilySyntaxError(ValueError):
    """Raised on malformed family-spec text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class FamilyDomainError(ValueError):
    """Raised when parsed parameters violate a family's domain constraints."""


class BudgetExceeded(RuntimeError):
    """A backtracking computation ran out of its node budget."""


@dataclass(frozen=True)
class FamilySpec:
    """A parsed family description ``KIND(head)`` or ``KIND(head;tail)``.

    head/tail hold the integer arguments on either side of the optional
    semicolon: C/GB use head for the cycle lengths; H(a;k) puts the cycle
    lengths in head and (k,) in tail; K(m;n1..nm), GP(r;m) and Ct(3;n1,n2,n3)
    put the leading count in head and the rest in tail.
    """

    kind: str
    head: tuple[int, ...]
    tail: tuple[int, ...] = ()

    def serialize(self) -> str:
        inner = ",".join(str(v) for v in self.head)
        if self.tail:
            inner += ";" + ",".join(str(v) for v in self.tail)
        return f"{self.kind}({inner})"

    def __str__(self) -> str:
        return self.serialize()

    @property
    def family_name(self) -> str:
        return _KIND_NAMES[self.kind]

    # Accessors for the kinds where head/tail have a less obvious reading.
    @property
    def cycle_lengths(self) -> tuple[int, ...]:
        assert self.kind in ("C", "H", "GB")
        return self.head

    @property
    def pendant_counts(self) -> tuple[int, ...]:
        assert self.kind in ("K", "Ct")
        return self.tail


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise FamilyDomainError(message)


def validate_family_spec(spec: FamilySpec) -> None:
    """Check the family's domain constraints, naming the violated one."""
    kind, head, tail = spec.kind, spec.head, spec.tail
    if kind in ("C", "H", "GB"):
        a = head
        _require(len(a) >= 2, f"{kind}: need r >= 2 cycles, got r={len(a)}")
        _require(all(x >= 3 for x in a), f"{kind}: every cycle length must be >= 3")
        _require(
            all(a[i] >= a[i + 1] for i in range(len(a) - 1)),
            f"{kind}: cycle lengths must be non-increasing",
        )
        if kind == "H":
            _require(len(tail) == 1, "H: expected H(a1,...,ar;k)")
            _require(tail[0] >= 1, "H: pendant count k must be >= 1")
    elif kind == "T":
        _require(len(head) == 2 and not tail, "T: expected T(m,n)")
        m, n = head
        _require(m >= 2, "T: path order m must be >= 2")
        _require(n >= 3, "T: cycle length n must be >= 3")
    elif kind == "GP":
        _require(len(head) == 1 and len(tail) == 1, "GP: expected GP(r;m)")
        _require(head[0] >= 2, "GP: need r >= 2 triangles")
        _require(tail[0] >= 1, "GP: pendant count m must be >= 1")
    elif kind == "Corona":
        _require(len(head) == 2 and not tail, "Corona: expected Corona(m,n)")
        m, n = head
        _require(m >= 3, "Corona: cycle length m must be >= 3")
        _require(n >= 1, "Corona: pendant count n must be >= 1")
    elif kind == "K":
        _require(len(head) == 1 and tail, "K: expected K(m;n1,...,nm)")
        m, ns = head[0], tail
        _require(m >= 1, "K: clique size m must be >= 1")
        _require(len(ns) == m, f"K: expected {m} pendant counts, got {len(ns)}")
        _require(all(x >= 0 for x in ns), "K: pendant counts must be >= 0")
        _require(
            all(ns[i] >= ns[i + 1] for i in range(len(ns) - 1)),
            "K: pendant counts must be non-increasing",
        )
        _require(sum(ns) >= 1, "K: need at least one pendant")
        _require(m + sum(ns) >= 3, "K: resulting order must be >= 3")
    elif kind == "Ct":
        _require(len(head) == 1 and head[0] == 3, "Ct: only Ct(3;n1,n2,n3) is supported")
        _require(len(tail) == 3, "Ct: expected three pendant counts")
        _require(all(x >= 0 for x in tail), "Ct: pendant counts must be >= 0")
        _require(sum(tail) >= 2, "Ct: need n1+n2+n3 >= 2")
    elif kind in ("Path", "Cycle", "Star"):
        _require(len(head) == 1 and not tail, f"{kind}: expected {kind}(n)")
        _require(head[0] >= 3, f"{kind}: order must be >= 3")
    else:  # pragma: no cover - parser only produces known kinds
        raise FamilyDomainError(f"unknown family kind {kind!r}")


def parse_family_spec(text: str) -> FamilySpec:
    """Parse ``KIND(args)`` with `;` groups and `v^[n]` repetition shorthand.

    Examples: ``C(10,10,4)``, ``C(14^[3],6)``, ``H(4,4;3)``, ``K(3;2,2,2)``,
    ``GP(4;2)``, ``Ct(3;3,0,4)``, ``Corona(4,2)``, ``Path(4)``.
    """
    s = text.strip()
    i = 0
    while i < len(s) and (s[i].isalpha()):
        i += 1
    kind = s[:i]
    if kind not in KINDS:
        raise FamilySyntaxError(f"unknown family kind {kind!r}", 0)
    if i >= len(s) or s[i] != "(":
        raise FamilySyntaxError("expected '('", i)
    if not s.endswith(")"):
        raise FamilySyntaxError("expected ')'", len(s) - 1)
    body = s[i + 1 : -1]
    offset = i + 1
    groups = body.split(";")
    if len(groups) > 2:
        raise FamilySyntaxError("at most one ';' allowed", offset + body.index(";"))

    def parse_group(group: str, at: int) -> tuple[int, ...]:
        values: list[int] = []
        if group.strip() == "":
            raise FamilySyntaxError("empty argument list", at)
        pos = at
        for item in group.split(","):
            stripped = item.strip()
            if not stripped:
                raise FamilySyntaxError("empty argument", pos)
            if "^[" in stripped:
                base_s, _, rep_s = stripped.partition("^[")
                if not rep_s.endswith("]"):
                    raise FamilySyntaxError("unterminated '^[' repetition", pos)
                rep_s = rep_s[:-1]
                if not (base_s.isdigit() and rep_s.isdigit()):
                    raise FamilySyntaxError(f"bad repetition {stripped!r}", pos)
                reps = int(rep_s)
                if not 1 <= reps <= 64:
                    raise FamilySyntaxError("repetition count out of range [1,64]", pos)
                values.extend([int(base_s)] * reps)
            elif stripped.isdigit():
                values.append(int(stripped))
            else:
                raise FamilySyntaxError(f"expected integer, got {stripped!r}", pos)
            pos += len(item) + 1
        return tuple(values)

    head = parse_group(groups[0], offset)
    tail = parse_group(groups[1], offset + len(groups[0]) + 1) if len(groups) == 2 else ()
    spec = FamilySpec(kind, head, tail)
    validate_family_spec(spec)
    return spec


@dataclass(frozen=True)
class Graph:
    """Immutable simple connected graph with stable vertex and edge order.

    ``edges`` stores endpoint index pairs in canonical order; ``names`` and
    ``roles`` are per-vertex.  Adjacency structures are derived once.
    """

    names: tuple[str, ...]
    edges: tuple[tuple[int, int], ...]
    roles: tuple[str, ...]
    incident: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)
    degrees: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        n = len(self.names)
        if n < 3:
            raise ValueError(f"graph order must be >= 3, got {n}")
        if len(set(self.names)) != n:
            raise ValueError("duplicate vertex names")
        if len(self.roles) != n:
            raise ValueError("roles length mismatch")
        seen: set[tuple[int, int]] = set()
        incident: list[list[int]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(self.edges):
            if u == v:
                raise ValueError(f"loop at vertex {self.names[u]}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge {eid} endpoint out of range")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise ValueError(f"multi-edge {self.names[u]}-{self.names[v]}")
            seen.add(key)
            incident[u].append(eid)
            incident[v].append(eid)
        object.__setattr__(self, "incident", tuple(tuple(lst) for lst in incident))
        object.__setattr__(self, "degrees", tuple(len(lst) for lst in incident))
        # connectivity
        reached = {0}
        queue = deque([0])
        adj = self.neighbors
        while queue:
            v = queue.popleft()
            for w in adj(v):
                if w not in reached:
                    reached.add(w)
                    queue.append(w)
        if len(reached) != n:
            raise ValueError("graph is not connected")
        # pendant tag <=> degree 1
        for v in range(n):
            want_pendant = self.degrees[v] == 1
            if want_pendant != (self.roles[v] == ROLE_PENDANT):
                raise ValueError(f"role/degree mismatch at {self.names[v]}")

    @property
    def order(self) -> int:
        return len(self.names)

    @property
    def size(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> list[int]:
        out = []
        for eid in self.incident[v]:
            a, b = self.edges[eid]
            out.append(b if a == v else a)
        return out

    def degree_multiset(self) -> tuple[int, ...]:
        return tuple(sorted(self.degrees))


def _finish(names, edges, roles) -> Graph:
    fixed = []
    name_to_idx = {nm: i for i, nm in enumerate(names)}
    # edges may come as name pairs for readability in builders
    for u, v in edges:
        if isinstance(u, str):
            u = name_to_idx[u]
        if isinstance(v, str):
            v = name_to_idx[v]
        fixed.append((u, v))
    # degree-1 vertices get the pendant role regardless of the builder's tag
    deg = [0] * len(names)
    for u, v in fixed:
        deg[u] += 1
        deg[v] += 1
    final_roles = tuple(
        ROLE_PENDANT if deg[i] == 1 else roles[i] for i in range(len(names))
    )
    return Graph(tuple(names), tuple(fixed), final_roles)


def _cycle_union(a: tuple[int, ...]) -> Graph:
    names = ["u"]
    roles = [ROLE_HUB]
    edges: list[tuple[str, str]] = []
    for i, ai in enumerate(a, start=1):
        ring = [f"w{i}_{j}" for j in range(1, ai)]
        names.extend(ring)
        roles.extend([ROLE_CYCLE] * len(ring))
        path = ["u"] + ring + ["u"]
        edges.extend((path[j], path[j + 1]) for j in range(ai))
    return _finish(names, edges, roles)


def _hibiscus(a: tuple[int, ...], k: int) -> Graph:
    base = _cycle_union(a)
    names = list(base.names) + [f"v{j}" for j in range(1, k + 1)]
    roles = list(base.roles) + [ROLE_PENDANT] * k
    edges = list(base.edges) + [(0, base.order + j) for j in range(k)]
    return _finish(names, edges, roles)


def _tadpole(m: int, n: int) -> Graph:
    total = m + n - 1
    names = [f"v{i}" for i in range(1, total + 1)]
    roles = [ROLE_PATH] * (m - 1) + [ROLE_HUB] + [ROLE_CYCLE] * (n - 1)
    edges = [(i, i + 1) for i in range(total - 1)]
    edges.append((total - 1, m - 1))
    return _finish(names, edges, roles)


def _book(a: tuple[int, ...]) -> Graph:
    names = ["u", "v"]
    roles = [ROLE_HUB, ROLE_HUB]
    edges: list[tuple[str, str]] = [("u", "v")]
    for i, ai in enumerate(a, start=1):
        inner = [f"x{i}_{j}" for j in range(1, ai - 1)]
        names.extend(inner)
        roles.extend([ROLE_CYCLE] * len(inner))
        path = ["u"] + inner + ["v"]
        edges.extend((path[j], path[j + 1]) for j in range(len(path) - 1))
    return _finish(names, edges, roles)


def _book_pendants(r: int, m: int) -> Graph:
    base = _book(tuple([3] * r))
    names = list(base.names) + [f"y{j}" for j in range(1, m + 1)]
    roles = list(base.roles) + [ROLE_PENDANT] * m
    edges = list(base.edges) + [(0, base.order + j) for j in range(m)]
    return _finish(names, edges, roles)


def _corona(m: int, n: int) -> Graph:
    names = [f"u{i}" for i in range(1, m + 1)]
    roles = [ROLE_CYCLE] * m
    edges: list[tuple[int, int]] = [(i, (i + 1) % m) for i in range(m)]
    for i in range(m):
        for j in range(1, n + 1):
            names.append(f"v{i + 1}_{j}")
            roles.append(ROLE_PENDANT)
            edges.append((i, len(names) - 1))
    return _finish(names, edges, roles)


def _complete_pendants(m: int, ns: tuple[int, ...]) -> Graph:
    names = [f"u{i}" for i in range(1, m + 1)]
    roles = [ROLE_CLIQUE] * m
    edges: list[tuple[int, int]] = []
    for i in range(m):
        for j in range(i + 1, m):
            edges.append((i, j))
    for i in range(m):
        for k in range(1, ns[i] + 1):
            names.append(f"u{i + 1}_{k}")
            roles.append(ROLE_PENDANT)
            edges.append((i, len(names) - 1))
    return _finish(names, edges, roles)


def _caterpillar3(ns: tuple[int, int, int]) -> Graph:
    n1, n2, n3 = ns
    names = ["x", "y", "z"]
    roles = [ROLE_PATH] * 3
    edges: list[tuple[int, int]] = [(0, 1), (1, 2)]
    for spine, count, tag in ((0, n1, "x"), (1, n2, "y"), (2, n3, "z")):
        for j in range(1, count + 1):
            names.append(f"{tag}{j}")
            roles.append(ROLE_PENDANT)
            edges.append((spine, len(names) - 1))
    return _finish(names, edges, roles)


def _path(n: int) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    roles = [ROLE_PATH] * n
    edges = [(i, i + 1) for i in range(n - 1)]
    return _finish(names, edges, roles)


def _cycle(n: int) -> Graph:
    names = [f"v{i}" for i in range(1, n + 1)]
    roles = [ROLE_CYCLE] * n
    edges = [(i, (i + 1) % n) for i in range(n)]
    return _finish(names, edges, roles)


def _star(n: int) -> Graph:
    names = ["u"] + [f"v{i}" for i in range(1, n)]
    roles = [ROLE_HUB] + [ROLE_PENDANT] * (n - 1)
    edges = [(0, i) for i in range(1, n)]
    return _finish(names, edges, roles)


def build_graph(spec: FamilySpec) -> Graph:
    """Materialize the graph for a validated spec in canonical order."""
    validate_family_spec(spec)
    kind = spec.kind
    if kind == "C":
        return _cycle_union(spec.head)
    if kind == "H":
        return _hibiscus(spec.head, spec.tail[0])
    if kind == "T":
        return _tadpole(*spec.head)
    if kind == "GB":
        return _book(spec.head)
    if kind == "GP":
        return _book_pendants(spec.head[0], spec.tail[0])
    if kind == "Corona":
        return _corona(*spec.head)
    if kind == "K":
        return _complete_pendants(spec.head[0], spec.tail)
    if kind == "Ct":
        return _caterpillar3(spec.tail)  # type: ignore[arg-type]
    if kind == "Path":
        return _path(spec.head[0])
    if kind == "Cycle":
        return _cycle(spec.head[0])
    if kind == "Star":
        return _star(spec.head[0])
    raise FamilyDomainError(f"unknown family kind {kind!r}")  # pragma: no cover


def pendant_count(g: Graph) -> int:
    return sum(1 for d in g.degrees if d == 1)


def bipartition(g: Graph) -> tuple[int, int] | None:
    """Part sizes (X, Y), X >= Y, of a connected bipartite graph, else None."""
    side = [-1] * g.order
    side[0] = 0
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for w in g.neighbors(v):
            if side[w] == -1:
                side[w] = 1 - side[v]
                queue.append(w)
            elif side[w] == side[v]:
                return None
    zeros = side.count(0)
    ones = g.order - zeros
    return (max(zeros, ones), min(zeros, ones))


def chromatic_number_exact(g: Graph, cap: int, node_budget: int = 1_000_000) -> int | None:
    """Exact chromatic number if <= cap, else None ("> cap").

    Backtracking over vertices in descending-degree order.  Raises
    BudgetExceeded when the node budget runs out.
    """
    if cap < 1:
        return None
    order = sorted(range(g.order), key=lambda v: -g.degrees[v])
    neighbor_sets = [tuple(g.neighbors(v)) for v in range(g.order)]
    nodes = 0

    def colorable(k: int) -> bool:
        nonlocal nodes
        coloring = [-1] * g.order

        def place(idx: int, used: int) -> bool:
            nonlocal nodes
            if idx == len(order):
                return True
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("chromatic backtracking budget exhausted")
            v = order[idx]
            forbidden = {coloring[w] for w in neighbor_sets[v]}
            for color in range(min(used + 1, k)):
                if color in forbidden:
                    continue
                coloring[v] = color
                if place(idx + 1, max(used, color + 1)):
                    return True
            coloring[v] = -1
            return False

        return place(0, 0)

    if g.size == 0:  # pragma: no cover - connected graphs of order >= 3 have edges
        return 1
    if bipartition(g) is not None:
        return 2 if 2 <= cap else None
    for k in range(3, cap + 1):
        if colorable(k):
            return k
    return None


def to_dot(g: Graph) -> str:
    """Graphviz DOT text; vertex labels carry role tags."""
    lines = ["graph G {"]
    for i, name in enumerate(g.names):
        lines.append(f'  "{name}" [label="{name} ({g.roles[i]})"];')
    for u, v in g.edges:
        lines.append(f'  "{g.names[u]}" -- "{g.names[v]}";')
    lines.append("}")
    return "\n".join(lines) + "\n"


def read_edge_list(text: str) -> Graph:
    """Parse the simple edge-list format: header ``p <n> <q>``, then q lines ``u v``.

    Vertices are 1-based in the file and named by their numbers.
    """
    lines = [ln.strip() for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines or not lines[0].startswith("p"):
        raise ValueError("edge list must start with a 'p <n> <q>' header")
    parts = lines[0].split()
    if len(parts) != 3:
        raise ValueError("malformed header, expected 'p <n> <q>'")
    n, q = int(parts[1]), int(parts[2])
    if len(lines) - 1 != q:
        raise ValueError(f"expected {q} edge lines, got {len(lines) - 1}")
    edges = []
    for ln in lines[1:]:
        us, vs = ln.split()
        u, v = int(us), int(vs)
        if not (1 <= u <= n and 1 <= v <= n):
            raise ValueError(f"edge endpoint out of range: {ln!r}")
        edges.append((u - 1, v - 1))
    names = [str(i) for i in range(1, n + 1)]
    deg = [0] * n
    for u, v in edges:
        deg[u] += 1
        deg[v] += 1
    roles = [ROLE_PENDANT if deg[i] == 1 else ROLE_PATH for i in range(n)]
    return Graph(tuple(names), tuple(edges), tuple(roles))
