from itertools import combinations_with_replacement

import pytest

from antimagic import (
    FamilySpec,
    build_graph,
    chi_la_by_enumeration,
    classify_cycle_union,
    condition_C1,
    condition_C2,
    construct,
    induced_colors,
    label_book_pendants,
    label_book_triangles,
    label_caterpillar3,
    label_complete_pendants,
    label_cycle_3col,
    label_cycle_union,
    label_cycle_union_2col,
    label_hibiscus,
    label_path,
    label_star,
    label_tadpole,
    parse_family_spec,
    two_color_necessary,
    verify_local_antimagic,
)
from antimagic.constructions import UnsupportedConstruction, book_pendants_case


def profile_of(spec_text: str, labeling):
    g = build_graph(parse_family_spec(spec_text))
    assert verify_local_antimagic(g, labeling).valid
    return induced_colors(g, labeling)


class TestCycleUnion3Col:
    def test_two_triangles(self):
        f = label_cycle_union((3, 3))
        assert f.labels == (6, 1, 5, 2, 4, 3)
        assert profile_of("C(3,3)", f).distinct == (6, 7, 16)

    def test_c_10_10_4(self):
        f = label_cycle_union((10, 10, 4))
        p = profile_of("C(10,10,4)", f)
        assert p.count == 3 and {24, 25} < set(p.distinct)

    def test_c_4_4(self):
        f = label_cycle_union((4, 4))
        p = profile_of("C(4,4)", f)
        assert set(p.distinct) == {8, 9, 20}

    def test_sweep_degree_two_colors(self):
        # all r in [2,4], lengths in [3,7]: valid, c=3, non-hub colors in {m, m+1}
        for r in range(2, 5):
            for tup in combinations_with_replacement(range(7, 2, -1), r):
                a = tuple(sorted(tup, reverse=True))
                m = sum(a)
                g = build_graph(FamilySpec("C", a))
                f = label_cycle_union(a)
                assert verify_local_antimagic(g, f).valid, a
                p = induced_colors(g, f)
                assert p.count == 3, a
                assert set(p.sums[1:]) <= {m, m + 1}, a
                assert p.sums[0] > m + 1, a


class TestCycleUnion2Col:
    def test_case1_r3_golden(self):
        spec, f = label_cycle_union_2col(3, 1)
        assert spec.serialize() == "C(10,10,4)"
        assert f.labels[20:] == (5, 20, 10, 15)
        p = profile_of("C(10,10,4)", f)
        assert p.distinct == (25, 30)

    def test_case2_r3_golden(self):
        spec, f = label_cycle_union_2col(3, 2)
        assert spec.serialize() == "C(6,4,4)"
        assert f.labels[:6] == (1, 14, 7, 8, 13, 2)
        assert profile_of("C(6,4,4)", f).distinct == (15, 21)

    def test_case2_r5(self):
        spec, f = label_cycle_union_2col(5, 2)
        assert spec.serialize() == "C(10,10,8,8,8)"
        assert profile_of("C(10,10,8,8,8)", f).distinct == (45, 55)

    def test_class_counts_match_lemma(self):
        # x*X = y*Y = m(m+1)/2 with (X, Y) the bipartition sizes
        for r, case in [(3, 1), (4, 1), (5, 1), (3, 2), (5, 2), (7, 2)]:
            spec, f = label_cycle_union_2col(r, case)
            g = build_graph(spec)
            p = induced_colors(g, f)
            assert verify_local_antimagic(g, f).valid
            x, y = p.distinct
            X = sum(1 for s in p.sums if s == x)
            Y = sum(1 for s in p.sums if s == y)
            m = g.size
            assert x * X == y * Y == m * (m + 1) // 2
            assert (X, Y) == (m // 2, m // 2 - r + 1)

    def test_invalid_case_combo(self):
        with pytest.raises(ValueError):
            label_cycle_union_2col(4, 2)
        with pytest.raises(ValueError):
            label_cycle_union_2col(2, 1)


class TestHibiscus:
    @pytest.mark.parametrize(
        "a,k,expect_distinct",
        [
            ((3, 3), 1, (6, 7, 23)),
            ((3, 3), 2, (6, 7, 8, 31)),
            ((4, 4), 3, None),
        ],
    )
    def test_examples(self, a, k, expect_distinct):
        f = label_hibiscus(a, k)
        spec = FamilySpec("H", a, (k,))
        g = build_graph(spec)
        assert verify_local_antimagic(g, f).valid
        p = induced_colors(g, f)
        assert p.count == k + 2
        if expect_distinct:
            assert p.distinct == expect_distinct
        m = sum(a)
        pendant_colors = {p.sums[v] for v in range(g.order) if g.degrees[v] == 1}
        assert pendant_colors == set(range(m + 1, m + k + 1))

    def test_measured_count_is_k_plus_2(self):
        # the sweep the regression log leans on: always k+2 distinct colors
        for a in [(3, 3), (4, 3), (5, 5, 3), (6, 4)]:
            for k in range(1, 6):
                p = induced_colors(
                    build_graph(FamilySpec("H", a, (k,))), label_hibiscus(a, k)
                )
                assert p.count == k + 2


class TestTadpole:
    def test_2_3(self):
        f = label_tadpole(2, 3)
        assert f.labels == (4, 1, 3, 2)
        p = profile_of("T(2,3)", f)
        assert p.distinct == (4, 5, 7)
        g = build_graph(parse_family_spec("T(2,3)"))
        assert p.sums[1] == 7  # junction v_m, (3m+3n-1)/2 for even m, odd n

    def test_junction_closed_forms(self):
        cases = {
            (2, 4): 3 * (2 + 4) // 2,          # even m, even n
            (3, 3): 3 * (3 + 3) // 2 - 1,      # odd m, odd n
            (3, 4): 3 * (3 + 4 - 1) // 2,      # odd m, even n
            (2, 3): (3 * 2 + 3 * 3 - 1) // 2,  # even m, odd n
        }
        for (m, n), junction in cases.items():
            f = label_tadpole(m, n)
            g = build_graph(FamilySpec("T", (m, n)))
            p = induced_colors(g, f)
            assert verify_local_antimagic(g, f).valid
            assert p.sums[m - 1] == junction, (m, n)
            assert p.count == 3

    def test_2_4_non_junction_colors(self):
        p = profile_of("T(2,4)", label_tadpole(2, 4))
        assert set(p.distinct) - {p.sums[1]} == {5, 6}

    def test_sweep(self):
        for m in range(2, 7):
            for n in range(3, 7):
                p = profile_of(f"T({m},{n})", label_tadpole(m, n))
                assert p.count == 3


class TestBooks:
    @pytest.mark.parametrize(
        "r,colors", [(2, {5, 8, 12}), (3, {7, 13, 22}), (4, {9, 19, 35})]
    )
    def test_triangular_book_colors(self, r, colors):
        f = label_book_triangles(r)
        spec = FamilySpec("GB", tuple([3] * r))
        g = build_graph(spec)
        assert verify_local_antimagic(g, f).valid
        p = induced_colors(g, f)
        assert set(p.distinct) == colors
        expected = {2 * r + 1, r * (r + 1) // 2 + 2 * r + 1, (r + 1) * (3 * r + 2) // 2}
        assert set(p.distinct) == expected

    def test_book_pendants_m2_r2_golden(self):
        f = label_book_pendants(2, 2)
        # canonical order uv, ux1, x1v, ux2, x2v, uy1, uy2
        assert f.labels == (1, 5, 2, 4, 3, 6, 7)
        p = profile_of("GP(2;2)", f)
        assert p.count == 3

    @pytest.mark.parametrize(
        "r,m,expect_c",
        [(2, 1, 3), (3, 1, 3), (4, 1, 3), (2, 2, 3), (3, 2, 4), (5, 2, 4),
         (3, 3, 4), (3, 5, 6), (4, 6, 7), (4, 3, 5), (4, 5, 7), (5, 4, 6)],
    )
    def test_book_pendants_cases(self, r, m, expect_c):
        f = label_book_pendants(r, m)
        g = build_graph(FamilySpec("GP", (r,), (m,)))
        assert verify_local_antimagic(g, f).valid
        assert induced_colors(g, f).count == expect_c

    def test_collision_structure_m_ge_binom(self):
        # f+(v) = C(r+2,2) lands on pendant y_{C(r,2)}
        r, m = 3, 3
        f = label_book_pendants(r, m)
        g = build_graph(FamilySpec("GP", (r,), (m,)))
        p = induced_colors(g, f)
        by_name = dict(zip(g.names, p.sums))
        assert by_name["v"] == 10 == by_name["y3"]

    def test_collision_structure_m_below_binom(self):
        # f+(x_i) = 2r+3 = f+(y_2)
        r, m = 4, 3
        f = label_book_pendants(r, m)
        g = build_graph(FamilySpec("GP", (r,), (m,)))
        p = induced_colors(g, f)
        by_name = dict(zip(g.names, p.sums))
        assert by_name["x1_1"] == 2 * r + 3 == by_name["y2"]

    def test_uncovered_r2_m3_rejected(self):
        with pytest.raises(UnsupportedConstruction):
            label_book_pendants(2, 3)
        with pytest.raises(UnsupportedConstruction):
            book_pendants_case(2, 5)


class TestCompletePendants:
    def test_k3_222(self):
        f, tag = label_complete_pendants(3, (2, 2, 2))
        assert tag == "all-distinct"
        p = profile_of("K(3;2,2,2)", f)
        assert p.count == 9

    def test_k2_22(self):
        f, tag = label_complete_pendants(2, (2, 2))
        assert tag == "all-distinct"
        assert profile_of("K(2;2,2)", f).count == 6

    def test_k2_52_adjustment(self):
        f, tag = label_complete_pendants(2, (5, 2))
        assert tag == "pendant-collision"
        assert profile_of("K(2;5,2)", f).count == 8

    def test_swap_case(self):
        # K(3;1,0,0): clique labels exhaust 1..3 with f+(u3) = 3 = C(3,2)
        f, tag = label_complete_pendants(3, (1, 0, 0))
        assert tag == "swap"
        g = build_graph(parse_family_spec("K(3;1,0,0)"))
        assert verify_local_antimagic(g, f).valid
        p = induced_colors(g, f)
        assert p.count <= g.order - 1

    def test_reorder_case_exists_in_domain(self):
        # some instance must route through the reorder branch
        tags = set()
        for m in range(3, 5):
            for tup in combinations_with_replacement(range(4, -1, -1), m):
                ns = tuple(sorted(tup, reverse=True))
                if sum(ns) < 1 or m + sum(ns) < 3:
                    continue
                f, tag = label_complete_pendants(m, ns)
                tags.add(tag)
                g = build_graph(FamilySpec("K", (m,), ns))
                assert verify_local_antimagic(g, f).valid, (m, ns)
        assert "reorder" in tags and "swap" in tags

    def test_star_route(self):
        f, tag = label_complete_pendants(2, (3, 0))
        assert tag == "star"
        assert profile_of("K(2;3,0)", f).count == 5  # n1 + 2


class TestCaterpillar:
    def test_3_0_4_reaches_ten_colors(self):
        f, tag = label_caterpillar3(3, 0, 4)
        assert "tie-adjusted" in tag
        p = profile_of("Ct(3;3,0,4)", f)
        assert p.count == 10

    def test_1_1_1_valid(self):
        f, tag = label_caterpillar3(1, 1, 1)
        p = profile_of("Ct(3;1,1,1)", f)
        assert p.count >= 4

    def test_0_2_0_star_like(self):
        f, _ = label_caterpillar3(0, 2, 0)
        g = build_graph(parse_family_spec("Ct(3;0,2,0)"))
        assert verify_local_antimagic(g, f).valid
        p = induced_colors(g, f)
        assert p.count == 5 == g.order
        # brute-force all 4! labelings: chi_la really is the order
        assert chi_la_by_enumeration(g)[0] == 5

    def test_sweep_valid_and_case_orderings(self):
        for n1 in range(0, 5):
            for n2 in range(0, 5):
                for n3 in range(0, 5):
                    if n1 + n2 + n3 < 2:
                        continue
                    f, tag = label_caterpillar3(n1, n2, n3)
                    g = build_graph(FamilySpec("Ct", (3,), (n1, n2, n3)))
                    assert verify_local_antimagic(g, f).valid, (n1, n2, n3, tag)

    def test_conditioned_instance_all_colors_distinct(self):
        # smallest-style instance where both theorem conditions hold
        n1, n2, n3 = 8, 7, 25
        assert condition_C1(n1, n2, n3) and condition_C2(n1, n2, n3)
        f, _ = label_caterpillar3(n1, n2, n3)
        g = build_graph(FamilySpec("Ct", (3,), (n1, n2, n3)))
        assert verify_local_antimagic(g, f).valid
        p = induced_colors(g, f)
        assert p.count == n1 + n2 + n3 + 3
        spine = {p.sums[0], p.sums[1], p.sums[2]}
        pendants = {p.sums[v] for v in range(3, g.order)}
        assert min(spine) > max(pendants)

    def test_spine_exceeds_pendants_under_c1(self):
        for ns in [(8, 7, 25), (8, 7, 26), (8, 7, 27)]:
            assert condition_C1(*ns) and condition_C2(*ns)
            f, _ = label_caterpillar3(*ns)
            g = build_graph(FamilySpec("Ct", (3,), ns))
            p = induced_colors(g, f)
            spine = [p.sums[0], p.sums[1], p.sums[2]]
            assert min(spine) > max(p.sums[3:])


class TestSimpleFamilies:
    def test_path(self):
        f = label_path(4)
        assert f.labels == (3, 1, 2)
        assert profile_of("Path(4)", f).count == 3

    def test_cycle_examples(self):
        assert label_cycle_3col(3).labels == (3, 1, 2)
        assert profile_of("Cycle(3)", label_cycle_3col(3)).distinct == (3, 4, 5)
        assert profile_of("Cycle(5)", label_cycle_3col(5)).distinct == (5, 6, 8)
        assert profile_of("Cycle(4)", label_cycle_3col(4)).count == 3

    def test_star(self):
        f = label_star(5)
        assert profile_of("Star(5)", f).count == 5


class TestConstructDispatch:
    @pytest.mark.parametrize(
        "text,c,provenance_part",
        [
            ("C(10,10,4)", 2, "two-color case 1"),
            ("C(6,4,4)", 2, "two-color case 2"),
            ("C(3,3)", 3, "three-color"),
            ("T(2,3)", 3, "tadpole"),
            ("K(3;2,2,2)", 9, "clique-pendants"),
            ("GB(3,3)", 3, "triangular book"),
            ("GP(3;2)", 4, "book-pendants"),
            ("Corona(4,2)", 10, "corona even-even"),
            ("Ct(3;3,0,4)", 10, "caterpillar"),
            ("Path(4)", 3, "path"),
            ("Cycle(6)", 3, "cycle"),
            ("Star(6)", 6, "star"),
            ("H(3,3;2)", 4, "hibiscus"),
        ],
    )
    def test_examples(self, text, c, provenance_part):
        cert = construct(parse_family_spec(text))
        assert cert.valid and cert.c == c
        assert provenance_part in cert.provenance
        assert cert.spec == parse_family_spec(text).serialize()

    def test_unsupported_book(self):
        with pytest.raises(UnsupportedConstruction):
            construct(parse_family_spec("GB(4,3)"))

    def test_every_construction_valid_at_scale(self):
        # broad sweep: every constructible spec with q <= 200 verifies
        specs = []
        for r in range(2, 6):
            for tup in combinations_with_replacement((10, 7, 5, 4, 3), r):
                specs.append(FamilySpec("C", tuple(sorted(tup, reverse=True))))
        specs += [FamilySpec("H", (10, 9, 3), (5,)), FamilySpec("T", (12, 11))]
        specs += [FamilySpec("GP", (6,), (9,)), FamilySpec("K", (5,), (4, 3, 2, 2, 1))]
        specs += [FamilySpec("Corona", (8, 6)), FamilySpec("Corona", (9, 4))]
        specs += [FamilySpec("Ct", (3,), (20, 11, 30)), FamilySpec("Path", (60,))]
        specs += [FamilySpec("Cycle", (60,)), FamilySpec("Star", (60,))]
        for spec in specs:
            cert = construct(spec)
            assert cert.valid, spec.serialize()
            assert cert.size <= 201

    def test_two_color_instances_pass_feasibility(self):
        for a in [(10, 10, 4), (14, 14, 14, 6), (6, 4, 4), (10, 10, 8, 8, 8)]:
            assert classify_cycle_union(a) == 2
            assert two_color_necessary(build_graph(FamilySpec("C", a))).feasible
