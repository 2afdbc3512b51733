"""Predicted local antimagic chromatic numbers for the supported families.

Predictions are data: a value or interval plus a citation naming the result
it comes from, so a failed cross-check pinpoints whether a theorem claim or
an implementation is at fault.  Known-shaky claims carry caveat flags and the
regression suite treats flagged predictions as hypotheses, not assertions.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

from .graphs import FamilySpec, validate_family_spec


class EnumerationCapExceeded(RuntimeError):
    """The subset enumeration behind condition C2 would be too large."""


def classify_cycle_union(a: tuple[int, ...]) -> int:
    """2 iff the multiset of cycle lengths matches one of the two special
    shapes C((4r-2)^[r-1], 2r-2) with r >= 3 or
    C((2r)^[(r-1)/2], (2r-2)^[(r+1)/2]) with odd r >= 3; otherwise 3."""
    r = len(a)
    sa = sorted(a, reverse=True)
    if r >= 3 and sa == [4 * r - 2] * (r - 1) + [2 * r - 2]:
        return 2
    if r >= 3 and r % 2 == 1 and sa == [2 * r] * ((r - 1) // 2) + [2 * r - 2] * ((r + 1) // 2):
        return 2
    return 3


def condition_C1(n1: int, n2: int, n3: int) -> bool:
    """Every spine vertex's minimum possible sum exceeds the edge count."""
    q = n1 + n2 + n3 + 2
    bound = min(
        (n1 + 1) * (n1 + 2) // 2,
        (n2 + 2) * (n2 + 3) // 2,
        (n3 + 1) * (n3 + 2) // 2,
    )
    return bound > q


def _k_subset_sum_range(k: int, q: int) -> tuple[int, int]:
    """Min and max sums of k distinct integers from [1, q] (contiguous range)."""
    return k * (k + 1) // 2, k * (2 * q - k + 1) // 2


@lru_cache(maxsize=None)
def condition_C2(n1: int, n2: int, n3: int, cap: int = 18) -> bool:
    """True iff no n1+n3+2 distinct integers in [1, n1+n2+n3+2] split into an
    (n1+1)-set and an (n3+1)-set with equal sums.

    Decided by (i) sum-range disjointness, (ii) the parity/contiguity argument
    when the selection is forced to be the whole range (n2 = 0), else (iii)
    exhaustive enumeration, capped at ``cap`` edge labels.
    """
    q = n1 + n2 + n3 + 2
    ka, kb = n1 + 1, n3 + 1
    lo_a, hi_a = _k_subset_sum_range(ka, q)
    lo_b, hi_b = _k_subset_sum_range(kb, q)
    if hi_a < lo_b or hi_b < lo_a:
        return True
    if n2 == 0:
        # the selection is all of [1, q]; k-subset sums over [1, q] are contiguous
        total = q * (q + 1) // 2
        if total % 2:
            return True
        return not (lo_a <= total // 2 <= hi_a)
    if q > cap:
        raise EnumerationCapExceeded(f"q={q} exceeds the enumeration cap {cap}")
    if ka > kb:
        ka, kb = kb, ka
    universe = range(1, q + 1)
    for a_side in combinations(universe, ka):
        target = sum(a_side)
        rest = [v for v in universe if v not in a_side]
        lo, hi = _k_subset_sum_range(kb, q)
        if not (lo <= target <= hi):
            continue
        # subset of `rest` with kb elements summing to target?
        reachable: list[set[int]] = [set() for _ in range(kb + 1)]
        reachable[0].add(0)
        for v in rest:
            for cnt in range(min(kb, len(reachable) - 1), 0, -1):
                for s in reachable[cnt - 1]:
                    if s + v <= target:
                        reachable[cnt].add(s + v)
        if target in reachable[kb]:
            return False
    return True


@dataclass(frozen=True)
class Prediction:
    """A claimed value (kind 'exact'), interval, or lower bound ('lower')."""

    kind: str
    lo: int
    hi: int | None
    citation: str
    caveats: tuple[str, ...] = ()

    @property
    def value(self) -> int:
        assert self.kind == "exact"
        return self.lo

    def contains(self, value: int) -> bool:
        return value >= self.lo and (self.hi is None or value <= self.hi)

    def render(self) -> str:
        if self.kind == "exact":
            return str(self.lo)
        if self.kind == "lower":
            return f">={self.lo}"
        return f"[{self.lo},{self.hi}]"

    def as_dict(self) -> dict:
        return {
            "kind": self.kind,
            "lo": self.lo,
            "hi": self.hi,
            "citation": self.citation,
            "caveats": list(self.caveats),
        }


def _exact(v: int, citation: str, caveats: tuple[str, ...] = ()) -> Prediction:
    return Prediction("exact", v, v, citation, caveats)


def _interval(lo: int, hi: int, citation: str, caveats: tuple[str, ...] = ()) -> Prediction:
    if lo == hi:
        return Prediction("exact", lo, hi, citation, caveats)
    return Prediction("interval", lo, hi, citation, caveats)


def _lower(lo: int, citation: str, caveats: tuple[str, ...] = ()) -> Prediction:
    return Prediction("lower", lo, None, citation, caveats)


HIBISCUS_CAVEAT = (
    "the stated construction realizes k+2 colors for k>=2, not the claimed count; "
    "small cases are left to the solver"
)
BOOK_CONJECTURE_CAVEAT = "upper end is a remark/conjecture for books with a cycle above 3"
CATERPILLAR_COROLLARY_CAVEAT = (
    "the n2=0 corollary claim is unreliable: the middle spine bound (always 3) cannot "
    "exceed the edge count, and bounded search finds smaller colorings on Ct(3;3,0,4)"
)


def predicted(spec: FamilySpec) -> Prediction:
    """The strongest claimed value/interval for the spec, with its citation."""
    validate_family_spec(spec)
    kind = spec.kind

    if kind == "C":
        return _exact(classify_cycle_union(spec.head), "cycle-union two-color classification")

    if kind == "H":
        k = spec.tail[0]
        if k == 1:
            return _exact(3, "hibiscus theorem (k=1)")
        if k == 2:
            return _exact(3, "hibiscus theorem (k=2)", (HIBISCUS_CAVEAT,))
        return _exact(k + 1, "hibiscus theorem (k>=3)", (HIBISCUS_CAVEAT,))

    if kind == "T":
        return _exact(3, "tadpole theorem")

    if kind == "GB":
        if all(x == 3 for x in spec.head):
            return _exact(3, "triangular book theorem")
        return _interval(3, 4, "book lower-bound lemma; conjectured upper bound",
                         (BOOK_CONJECTURE_CAVEAT,))

    if kind == "GP":
        r, m = spec.head[0], spec.tail[0]
        if m == 1:
            return _exact(3, "book-pendants theorem (m=1)")
        if m == 2:
            if r == 2:
                return _exact(3, "book-pendants theorem (m=2, r=2)")
            return _exact(4, "book-pendants theorem (m=2, r>=3)")
        if r == 2:
            return _lower(m + 1, "pendant lower bound",
                          ("the four-case theorem does not cover r=2 with m>=3",))
        c2 = r * (r - 1) // 2
        if m >= c2:
            return _exact(m + 1, "book-pendants theorem (m >= C(r,2) >= 3)")
        return _exact(m + 2, "book-pendants theorem (3 <= m < C(r,2))")

    if kind == "Corona":
        m, n = spec.head
        if m % 2 == 0 and n % 2 == 0:
            return _exact(m * n + 2, "corona theorem (even m and n)")
        return _interval(m * n + 2, m * n + 3, "corona theorem (mixed parity)")

    if kind == "K":
        m, ns = spec.head[0], spec.tail
        order = m + sum(ns)
        q = sum(ns) + m * (m - 1) // 2
        if m == 1 or (m == 2 and ns[1] == 0):
            return _exact(order, "star exactness")
        threshold = (ns[-1] + m - 1) * (ns[-1] + m) // 2
        if threshold > q:
            return _exact(order, "clique-pendants theorem (strict inequality)")
        lo = max(sum(ns) + 1, m if m >= 3 else 2)
        return _interval(lo, order - 1,
                         "clique-pendants theorem (inequality fails) with pendant bound")

    if kind == "Ct":
        n1, n2, n3 = spec.tail
        total = n1 + n2 + n3
        try:
            c2_holds = condition_C2(n1, n2, n3)
        except EnumerationCapExceeded:
            c2_holds = False  # undecided counts as not established
        if condition_C1(n1, n2, n3) and c2_holds:
            return _exact(total + 3, "caterpillar theorem (C1 and C2)")
        a, b = min(n1, n3), max(n1, n3)
        if n2 == 0 and b < (a + 2) * (a - 1) // 2 and (a + b) % 4 in (0, 3):
            return _exact(total + 3, "caterpillar corollary (n2=0)",
                          (CATERPILLAR_COROLLARY_CAVEAT,))
        pendants = total + (1 if n1 == 0 else 0) + (1 if n3 == 0 else 0)
        return _interval(max(pendants + 1, 2), total + 3,
                         "pendant lower bound; order upper bound",
                         ("no theorem value for this parameter ordering",))

    if kind == "Path":
        return _exact(3, "path values (two-coloring lemma is infeasible on paths)")
    if kind == "Cycle":
        return _exact(3, "cycle three-coloring; two-coloring lemma infeasible")
    if kind == "Star":
        return _exact(spec.head[0], "star exactness")

    raise ValueError(f"unsupported family {kind!r}")  # pragma: no cover
