"""Magic rectangles and the row-constant matrices used by the corona labelings."""

from __future__ import annotations

from bisect import bisect_left, insort
from dataclasses import dataclass
from functools import lru_cache

from .graphs import BudgetExceeded

MAX_SIDE = 9  # desk scale; larger rectangles are out of supported range


class NonexistentRectangle(ValueError):
    """The requested magic rectangle does not exist."""


@dataclass(frozen=True)
class LabelMatrix:
    """Integer matrix whose entries are distinct and lie within [lo, hi]."""

    rows: tuple[tuple[int, ...], ...]
    lo: int
    hi: int

    def __post_init__(self):
        flat = [v for row in self.rows for v in row]
        if len(set(flat)) != len(flat):
            raise ValueError("matrix entries are not distinct")
        if flat and not all(self.lo <= v <= self.hi for v in flat):
            raise ValueError(f"matrix entries leave the range [{self.lo}, {self.hi}]")

    @property
    def shape(self) -> tuple[int, int]:
        return len(self.rows), len(self.rows[0]) if self.rows else 0

    def row_sums(self) -> tuple[int, ...]:
        return tuple(sum(row) for row in self.rows)

    def column_sums(self) -> tuple[int, ...]:
        return tuple(sum(col) for col in zip(*self.rows))

    def transpose(self) -> "LabelMatrix":
        return LabelMatrix(tuple(zip(*self.rows)), self.lo, self.hi)


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    problems: tuple[str, ...]


def validate_row_rectangle(matrix: LabelMatrix, expected_row_sums: list[int]) -> ValidationReport:
    """Check distinctness, range membership, and the expected row sums."""
    problems: list[str] = []
    flat = [v for row in matrix.rows for v in row]
    if len(set(flat)) != len(flat):
        problems.append("entries are not distinct")
    out_of_range = [v for v in flat if not matrix.lo <= v <= matrix.hi]
    if out_of_range:
        problems.append(f"entries out of range: {sorted(out_of_range)[:5]}")
    sums = matrix.row_sums()
    if len(expected_row_sums) != len(sums):
        problems.append(
            f"expected {len(expected_row_sums)} row sums, matrix has {len(sums)} rows"
        )
    else:
        for i, (got, want) in enumerate(zip(sums, expected_row_sums)):
            if got != want:
                problems.append(f"row {i + 1} sums to {got}, expected {want}")
    return ValidationReport(not problems, tuple(problems))


def b_matrix(h: int, k: int) -> LabelMatrix:
    """(2h+1) x 2k matrix; row i is ((i-1)k + 1..k, (4h+2-i)k + 1..k).

    Contains every integer in [1, (4h+2)k]; every row sums to
    4hk^2 + 2k^2 + k.
    """
    if h < 1 or k < 1:
        raise ValueError("need h >= 1 and k >= 1")
    rows = []
    for i in range(1, 2 * h + 2):
        left = [(i - 1) * k + t for t in range(1, k + 1)]
        right = [(4 * h + 2 - i) * k + t for t in range(1, k + 1)]
        rows.append(tuple(left + right))
    return LabelMatrix(tuple(rows), 1, (4 * h + 2) * k)


def c_matrix(h: int, k: int) -> tuple[LabelMatrix, LabelMatrix]:
    """(full, trimmed): full is 2h x 2k with row i = ((4h-i)k + 1..k, (i-1)k + 1..k)
    and constant row sums N = 4hk^2 + k; trimmed drops the last column, so the
    i-th row sums to N - ik and the entries are [1, 4hk] minus {ik : 1 <= i <= 2h}.
    """
    if h < 1 or k < 1:
        raise ValueError("need h >= 1 and k >= 1")
    rows = []
    for i in range(1, 2 * h + 1):
        left = [(4 * h - i) * k + t for t in range(1, k + 1)]
        right = [(i - 1) * k + t for t in range(1, k + 1)]
        rows.append(tuple(left + right))
    full = LabelMatrix(tuple(rows), 1, 4 * h * k)
    trimmed = LabelMatrix(tuple(row[:-1] for row in rows), 1, 4 * h * k)
    return full, trimmed


def _siamese_square(n: int) -> list[list[int]]:
    grid = [[0] * n for _ in range(n)]
    r, c = 0, n // 2
    for v in range(1, n * n + 1):
        grid[r][c] = v
        nr, nc = (r - 1) % n, (c + 1) % n
        if grid[nr][nc]:
            nr, nc = (r + 1) % n, c
        r, c = nr, nc
    return grid


def _search_rectangle(m: int, n: int, node_budget: int = 20_000_000) -> list[list[int]] | None:
    """Backtracking fill, column by column, in a canonical form.

    Canonicalization (sound for existence: any solution can be row/column
    permuted into it): entry (0,0) is 1, the first column increases downward,
    and the first row increases rightward.  The last cell of each column is
    forced by the column sum; the whole last column is forced by row sums.
    """
    total = m * n
    s_row = n * (total + 1) // 2
    s_col = m * (total + 1) // 2
    grid = [[0] * n for _ in range(m)]
    used = [False] * (total + 1)
    unused: list[int] = list(range(1, total + 1))
    row_sum = [0] * m
    nodes = 0

    def take(v: int) -> None:
        used[v] = True
        unused.pop(bisect_left(unused, v))

    def give(v: int) -> None:
        used[v] = False
        insort(unused, v)

    def bounds(count: int) -> tuple[int, int]:
        if count == 0:
            return 0, 0
        return sum(unused[:count]), sum(unused[-count:])

    def row_feasible(i: int, col: int) -> bool:
        remaining = n - 1 - col
        need = s_row - row_sum[i]
        lo, hi = bounds(remaining)
        return lo <= need <= hi

    def fill_last_column() -> bool:
        forced = [s_row - row_sum[i] for i in range(m)]
        if len(set(forced)) != m:
            return False
        for v in forced:
            if not 1 <= v <= total or used[v]:
                return False
        if forced[0] <= grid[0][n - 2]:
            return False
        for i in range(m):
            grid[i][n - 1] = forced[i]
        return True

    def place(col: int, row: int, col_sum: int) -> bool:
        nonlocal nodes
        if col == n - 1:
            return fill_last_column()
        if row == m:
            return place(col + 1, 0, 0)
        nodes += 1
        if nodes > node_budget:
            raise BudgetExceeded("magic rectangle search budget exhausted")
        if row == m - 1:
            v = s_col - col_sum
            candidates = [v] if 1 <= v <= total and not used[v] else []
        else:
            candidates = list(unused)
        for v in candidates:
            if col == 0:
                if row == 0 and v != 1:
                    continue
                if row > 0 and v <= grid[row - 1][0]:
                    continue
            if row == 0 and col > 0 and v <= grid[0][col - 1]:
                continue
            rest = m - 1 - row
            if rest:
                take(v)
                lo, hi = bounds(rest)
                ok = lo <= s_col - col_sum - v <= hi
                give(v)
                if not ok:
                    continue
            grid[row][col] = v
            take(v)
            row_sum[row] += v
            if row_feasible(row, col) and place(col, row + 1, col_sum + v):
                return True
            give(v)
            row_sum[row] -= v
            grid[row][col] = 0
        return False

    return grid if place(0, 0, 0) else None


def _search_rectangle_symmetric(
    m: int,
    n: int,
    node_budget: int = 5_000_000,
    ordering: str = "center",
    colmajor: bool = False,
) -> list[list[int]] | None:
    """Backtracking restricted to centro-symmetric rectangles.

    Cell (i,j) and its point reflection hold complementary values (sum mn+1),
    with (mn+1)/2 at the center.  Every mirrored column pair and the middle
    column then sum to m(mn+1)/2 automatically, and the middle row balances
    itself, so only the left half needs search.  Cells are filled row-pair by
    row-pair; after a pair (i, m-1-i) completes, its middle-column entry is
    forced by the row-sum constraint and checked at once.  The middle row's
    left cells are forced last by the column sums.  Not exhaustive over all
    rectangles, so callers fall back to the unrestricted search on failure.
    """
    total = m * n
    comp = total + 1
    s_col = m * comp // 2
    mid_r, mid_c = m // 2, n // 2
    half = n // 2
    grid = [[0] * n for _ in range(m)]
    used = [False] * (total + 1)
    center = comp // 2
    grid[mid_r][mid_c] = center
    used[center] = True
    col_sum = [0] * half
    col_cnt = [0] * half
    left_sum = [0] * m
    # low halves of the unplaced complement pairs, kept sorted
    free_lows: list[int] = list(range(1, comp // 2))
    nodes = 0

    # row pairs 0/m-1, 1/m-2, ...; the middle row's cells are always forced by
    # their column sums and are scheduled right where they become forced
    row_order: list[int] = []
    for i in range(mid_r):
        row_order.extend((i, m - 1 - i))
    if colmajor:
        cells = [(r, j) for j in range(half) for r in row_order + [mid_r]]
    else:
        cells = [(r, j) for r in row_order for j in range(half)]
        cells += [(mid_r, j) for j in range(half)]
    # balanced partial fills succeed far more often: try central values first;
    # the alternates reshuffle the descent when the default basin is barren
    if ordering == "center":
        value_order = sorted(range(1, total + 1), key=lambda v: (abs(2 * v - comp), v))
    elif ordering == "lowhigh":
        value_order = []
        lo_it, hi_it = 1, total
        while lo_it <= hi_it:
            value_order.append(lo_it)
            if hi_it != lo_it:
                value_order.append(hi_it)
            lo_it += 1
            hi_it -= 1
    else:
        value_order = list(range(1, total + 1))

    def put(r: int, j: int, v: int) -> None:
        grid[r][j] = v
        grid[m - 1 - r][n - 1 - j] = comp - v
        used[v] = used[comp - v] = True
        free_lows.pop(bisect_left(free_lows, min(v, comp - v)))
        col_sum[j] += v
        col_cnt[j] += 1
        left_sum[r] += v

    def drop(r: int, j: int, v: int) -> None:
        grid[r][j] = 0
        grid[m - 1 - r][n - 1 - j] = 0
        used[v] = used[comp - v] = False
        insort(free_lows, min(v, comp - v))
        col_sum[j] -= v
        col_cnt[j] -= 1
        left_sum[r] -= v

    def pick_bounds(count: int) -> tuple[int, int]:
        """Min and max sums of `count` values choosable from distinct free pairs."""
        if count == 0:
            return 0, 0
        lo = sum(free_lows[:count])
        hi = sum(comp - w for w in free_lows[:count])
        return lo, hi

    def middle_value(i: int) -> int:
        # row-sum constraint for the pair (i, m-1-i)
        return comp // 2 - (left_sum[i] - left_sum[m - 1 - i])

    def place(idx: int) -> bool:
        nonlocal nodes
        if idx == len(cells):
            return True
        r, j = cells[idx]
        pair_lead = m - 1 - r if r > mid_r else None  # the pair's upper row
        last_in_row = j == half - 1
        if r == mid_r:
            candidates = [s_col - col_sum[j]]
        else:
            candidates = value_order
        for v in candidates:
            if not 1 <= v <= total or used[v] or used[comp - v] or v == comp - v:
                continue
            nodes += 1
            if nodes > node_budget:
                raise BudgetExceeded("symmetric rectangle search budget exhausted")
            # column feasibility: remaining cells must be able to close the sum
            rest = m - col_cnt[j] - 1
            need = s_col - col_sum[j] - v
            if rest == 1:
                w = need
                if (
                    not 1 <= w <= total
                    or w == v
                    or w == comp - v
                    or used[w]
                    or used[comp - w]
                    or w == comp - w
                ):
                    continue
            elif rest > 1:
                lo, hi = pick_bounds(rest)
                if not lo <= need <= hi:
                    continue
            if pair_lead is not None:
                # the pair's middle entry is comp/2 - (L_lead - L_r); keep it
                # landable in [1, total] given both rows' unplaced left cells
                diff = left_sum[pair_lead] - left_sum[r] - v
                slack = half - 1 - j
                lo_fill, hi_fill = pick_bounds(slack)
                lead_slack = slack if colmajor else 0
                lo_lead, hi_lead = pick_bounds(lead_slack)
                if comp // 2 - diff + hi_fill - lo_lead < 1:
                    continue
                if comp // 2 - diff + lo_fill - hi_lead > total:
                    continue
            put(r, j, v)
            ok = True
            if pair_lead is not None and last_in_row:
                mid_v = middle_value(pair_lead)
                w = comp - mid_v
                if not 1 <= mid_v <= total or used[mid_v] or used[w] or mid_v == w:
                    ok = False
                else:
                    grid[pair_lead][mid_c] = mid_v
                    grid[r][mid_c] = w
                    used[mid_v] = used[w] = True
            if ok and place(idx + 1):
                return True
            if pair_lead is not None and last_in_row and ok:
                mid_v = grid[pair_lead][mid_c]
                used[mid_v] = used[comp - mid_v] = False
                grid[pair_lead][mid_c] = 0
                grid[r][mid_c] = 0
            drop(r, j, v)
        return False

    try:
        found = place(0)
    except BudgetExceeded:
        return None
    return grid if found else None


@lru_cache(maxsize=None)
def _magic_rectangle_rows(m: int, n: int) -> tuple[tuple[int, ...], ...]:
    if m == n:
        grid = _siamese_square(n)
    else:
        grid = None
        attempts = (
            ("center", False, 3_000_000),
            ("center", True, 3_000_000),
            ("lowhigh", True, 3_000_000),
            ("center", True, 100_000_000),  # the largest desk sizes need this
        )
        for ordering, colmajor, budget in attempts:
            grid = _search_rectangle_symmetric(
                m, n, node_budget=budget, ordering=ordering, colmajor=colmajor
            )
            if grid is not None:
                break
        if grid is None:
            grid = _search_rectangle(m, n)
        if grid is None:  # pragma: no cover - odd x odd rectangles always exist
            raise NonexistentRectangle(f"search found no magic ({m},{n}) rectangle")
    return tuple(tuple(row) for row in grid)


def magic_rectangle(m: int, n: int) -> LabelMatrix:
    """A magic (m,n) rectangle on [1, mn]: every row sums to n(mn+1)/2 and
    every column to m(mn+1)/2.  Exists for odd m = n = 1 and odd m, n >= 3.
    """
    if m % 2 == 0 or n % 2 == 0:
        raise ValueError("only odd-by-odd rectangles are supported")
    if m == 1 and n == 1:
        return LabelMatrix(((1,),), 1, 1)
    if m == 1 or n == 1:
        raise NonexistentRectangle(
            f"no magic ({m},{n}) rectangle: distinct singletons cannot share sums"
        )
    if m > MAX_SIDE or n > MAX_SIDE:
        raise ValueError(f"sides above {MAX_SIDE} are beyond the supported desk scale")
    transpose = m > n
    a, b = (n, m) if transpose else (m, n)
    matrix = LabelMatrix(_magic_rectangle_rows(a, b), 1, m * n)
    return matrix.transpose() if transpose else matrix
