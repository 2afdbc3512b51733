import pytest

from antimagic import (
    LabelMatrix,
    NonexistentRectangle,
    b_matrix,
    c_matrix,
    magic_rectangle,
    validate_row_rectangle,
)


class TestLabelMatrix:
    def test_distinctness_enforced(self):
        with pytest.raises(ValueError, match="distinct"):
            LabelMatrix(((1, 2), (2, 3)), 1, 4)

    def test_range_enforced(self):
        with pytest.raises(ValueError, match="range"):
            LabelMatrix(((1, 9),), 1, 4)


class TestBMatrix:
    def test_h1_k1(self):
        b = b_matrix(1, 1)
        assert b.rows == ((1, 6), (2, 5), (3, 4))
        assert b.row_sums() == (7, 7, 7)

    def test_h1_k2(self):
        b = b_matrix(1, 2)
        assert b.shape == (3, 4)
        assert set(b.row_sums()) == {26}

    def test_h2_k1(self):
        assert set(b_matrix(2, 1).row_sums()) == {11}

    def test_formula_and_partition_sweep(self):
        for h in range(1, 7):
            for k in range(1, 7):
                b = b_matrix(h, k)
                expected = 4 * h * k * k + 2 * k * k + k
                report = validate_row_rectangle(b, [expected] * (2 * h + 1))
                assert report.ok, report.problems
                flat = sorted(v for row in b.rows for v in row)
                assert flat == list(range(1, (4 * h + 2) * k + 1))

    def test_row_swap_preserves_properties(self):
        b = b_matrix(2, 2)
        rows = list(b.rows)
        rows[0], rows[3] = rows[3], rows[0]
        swapped = LabelMatrix(tuple(rows), b.lo, b.hi)
        assert set(swapped.row_sums()) == set(b.row_sums())


class TestCMatrix:
    def test_h2_k1(self):
        full, trimmed = c_matrix(2, 1)
        assert trimmed.rows == ((8,), (7,), (6,), (5,))
        assert trimmed.row_sums() == (8, 7, 6, 5)  # N - i with N = 9

    def test_h2_k2(self):
        full, _ = c_matrix(2, 2)
        assert full.shape == (4, 4)
        assert set(full.row_sums()) == {34}

    def test_h1_k1(self):
        _, trimmed = c_matrix(1, 1)
        assert trimmed.rows == ((4,), (3,))

    def test_sweep(self):
        for h in range(1, 7):
            for k in range(1, 7):
                full, trimmed = c_matrix(h, k)
                n_sum = 4 * h * k * k + k
                assert validate_row_rectangle(full, [n_sum] * (2 * h)).ok
                expect = [n_sum - i * k for i in range(1, 2 * h + 1)]
                assert validate_row_rectangle(trimmed, expect).ok
                flat = sorted(v for row in trimmed.rows for v in row)
                removed = {i * k for i in range(1, 2 * h + 1)}
                assert flat == [v for v in range(1, 4 * h * k + 1) if v not in removed]

    def test_trimmed_sums_strictly_decreasing(self):
        _, trimmed = c_matrix(3, 2)
        sums = trimmed.row_sums()
        assert all(a > b for a, b in zip(sums, sums[1:]))


class TestMagicRectangle:
    def test_1x1(self):
        assert magic_rectangle(1, 1).rows == ((1,),)

    def test_3x3_sums(self):
        m = magic_rectangle(3, 3)
        assert set(m.row_sums()) == {15} and set(m.column_sums()) == {15}

    @pytest.mark.parametrize("m,n", [(3, 1), (1, 3), (7, 1), (1, 5)])
    def test_nonexistent(self, m, n):
        with pytest.raises(NonexistentRectangle):
            magic_rectangle(m, n)

    def test_even_rejected(self):
        with pytest.raises(ValueError, match="odd"):
            magic_rectangle(2, 4)

    def test_oversize_rejected(self):
        with pytest.raises(ValueError, match="desk scale"):
            magic_rectangle(11, 3)

    @pytest.mark.parametrize(
        "m,n",
        [(3, 3), (3, 5), (5, 3), (3, 7), (5, 5), (5, 7), (7, 3), (7, 5), (7, 7)],
    )
    def test_validates_both_ways(self, m, n):
        rect = magic_rectangle(m, n)
        total = m * n
        rows = validate_row_rectangle(rect, [n * (total + 1) // 2] * m)
        cols = validate_row_rectangle(rect.transpose(), [m * (total + 1) // 2] * n)
        assert rows.ok and cols.ok
        flat = sorted(v for row in rect.rows for v in row)
        assert flat == list(range(1, total + 1))


class TestValidator:
    def test_reports_problems(self):
        m = LabelMatrix(((1, 2), (3, 4)), 1, 4)
        report = validate_row_rectangle(m, [3, 7])
        assert report.ok
        report = validate_row_rectangle(m, [4, 6])
        assert not report.ok and len(report.problems) == 2

    def test_row_count_mismatch(self):
        m = LabelMatrix(((1, 2),), 1, 2)
        assert not validate_row_rectangle(m, [3, 3]).ok
