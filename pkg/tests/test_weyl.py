"""Weyl-type subsets, the class partition, and acyclic orientations."""

import math

import pytest

from hesscomb.hessenberg import enumerate_hessenberg, hessenberg_roots, incomparability_graph
from hesscomb.oracles import acyclic_orientations_by_enumeration, class_by_filter
from hesscomb.orders import weak_left_leq
from hesscomb.perms import all_perms, compose, identity, inversion_set, longest_element
from hesscomb.weyl import (
    Orientation,
    WeylSubset,
    class_of,
    complement,
    enumerate_weyl_subsets,
    induced_subset,
    is_acyclic,
    is_weyl_type,
    make_weyl_subset,
    max_element,
    min_element,
    orientation_of,
    subset_of_orientation,
    weyl_subset_of,
)

H_EXAMPLE = (3, 4, 4, 4)
S_EXAMPLE = frozenset({(2, 3), (1, 3)})


class TestWeylType:
    def test_empty_and_full_are_weyl(self):
        assert is_weyl_type(frozenset(), H_EXAMPLE)
        assert is_weyl_type(hessenberg_roots(H_EXAMPLE), H_EXAMPLE)

    def test_worked_example(self):
        assert is_weyl_type(S_EXAMPLE, H_EXAMPLE)

    def test_closure_failure(self):
        # (1,2) + (2,3) = (1,3) is selected but absent
        assert not is_weyl_type({(1, 2), (2, 3)}, H_EXAMPLE)

    def test_root_outside_selection_is_an_error(self):
        with pytest.raises(ValueError, match="not selected"):
            is_weyl_type({(1, 4)}, H_EXAMPLE)

    def test_make_reports_violation(self):
        with pytest.raises(ValueError, match=r"\(1,2\) \+ \(2,3\)"):
            make_weyl_subset({(1, 2), (2, 3)}, H_EXAMPLE)

    def test_every_restricted_inversion_set_is_weyl(self):
        for h in enumerate_hessenberg(4):
            for w in all_perms(4):
                assert is_weyl_type(inversion_set(w) & hessenberg_roots(h), h)


class TestSubsetOf:
    def test_identity_gives_empty(self):
        assert weyl_subset_of(identity(4), H_EXAMPLE).roots == frozenset()

    def test_worked_examples(self):
        assert weyl_subset_of((2, 3, 1, 4), H_EXAMPLE).roots == {(1, 3), (2, 3)}
        assert weyl_subset_of((2, 3, 4, 1), H_EXAMPLE).roots == {(2, 4), (3, 4)}

    def test_size_mismatch(self):
        with pytest.raises(ValueError):
            weyl_subset_of((1, 2, 3), H_EXAMPLE)


class TestEnumerateSubsets:
    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_full_function_gives_factorial(self, n):
        assert len(enumerate_weyl_subsets((n,) * n)) == math.factorial(n)

    def test_path_graph(self):
        assert len(enumerate_weyl_subsets((2, 3, 4, 4))) == 8

    def test_worked_example_count(self):
        assert len(enumerate_weyl_subsets(H_EXAMPLE)) == 18

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_matches_orientation_enumeration(self, n):
        for h in enumerate_hessenberg(n):
            produced = frozenset(
                orientation_of(S) for S in enumerate_weyl_subsets(h)
            )
            assert produced == acyclic_orientations_by_enumeration(
                incomparability_graph(h)
            )


class TestOrientation:
    def test_worked_example_arcs(self):
        o = orientation_of(WeylSubset(S_EXAMPLE, H_EXAMPLE))
        assert o.arcs() == {(1, 2), (3, 1), (3, 2), (2, 4), (3, 4)}

    def test_path_example_arcs(self):
        o = orientation_of(make_weyl_subset({(1, 2)}, (2, 3, 4, 4)))
        assert o.arcs() == {(2, 1), (2, 3), (3, 4)}

    def test_empty_subset_points_everything_upward(self):
        o = orientation_of(WeylSubset(frozenset(), H_EXAMPLE))
        assert o.arcs() == incomparability_graph(H_EXAMPLE).edges

    def test_round_trip(self):
        for S in enumerate_weyl_subsets(H_EXAMPLE):
            assert subset_of_orientation(orientation_of(S)) == S

    def test_cyclic_orientation_rejected(self):
        # 1 -> 2 -> 3 -> 1 on the triangle
        g = incomparability_graph((3, 3, 3))
        cyclic = Orientation(graph=g, left=frozenset({(1, 3)}))
        assert not is_acyclic(cyclic)
        with pytest.raises(ValueError, match="cycle"):
            subset_of_orientation(cyclic)

    def test_produced_orientations_are_acyclic(self):
        for h in enumerate_hessenberg(4):
            for S in enumerate_weyl_subsets(h):
                assert is_acyclic(orientation_of(S))


class TestExtremes:
    def test_worked_example_max(self):
        assert max_element(WeylSubset(S_EXAMPLE, H_EXAMPLE)) == (2, 3, 1, 4)

    def test_full_roots_give_longest_element(self):
        for n in (2, 3, 4):
            h = (n,) * n
            S = WeylSubset(hessenberg_roots(h), h)
            assert max_element(S) == longest_element(n)
            assert min_element(S) == longest_element(n)

    def test_empty_subset_min_is_identity(self):
        for h in enumerate_hessenberg(4):
            assert min_element(WeylSubset(frozenset(), h)) == identity(4)

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_against_brute_force(self, n):
        for h in enumerate_hessenberg(n):
            for S in enumerate_weyl_subsets(h):
                cls = class_by_filter(S)
                top = max_element(S)
                bottom = min_element(S)
                assert top in cls and bottom in cls
                assert all(weak_left_leq(v, top) for v in cls)
                assert all(weak_left_leq(bottom, v) for v in cls)


class TestClasses:
    def test_singletons_at_full_function(self):
        h = (4, 4, 4, 4)
        for S in enumerate_weyl_subsets(h):
            assert len(class_of(S)) == 1

    def test_everything_at_minimal_function(self):
        h = (1, 2, 3, 4)
        S = WeylSubset(frozenset(), h)
        assert class_of(S) == set(all_perms(4))
        assert max_element(S) == longest_element(4)

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
    def test_partition(self, n):
        for h in enumerate_hessenberg(n):
            union = set()
            sizes = 0
            for S in enumerate_weyl_subsets(h):
                cls = class_of(S)
                sizes += len(cls)
                union |= cls
            assert sizes == math.factorial(n)
            assert union == set(all_perms(n))

    @pytest.mark.parametrize("n", [1, 2, 3, 4, 5])
    def test_matches_definition_filter(self, n):
        for h in enumerate_hessenberg(n):
            for S in enumerate_weyl_subsets(h):
                assert class_of(S) == class_by_filter(S)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_longest_element_swaps_complementary_classes(self, n):
        w0 = longest_element(n)
        for h in enumerate_hessenberg(n):
            for S in enumerate_weyl_subsets(h):
                flipped = {compose(w0, w) for w in class_of(S)}
                assert flipped == class_of(complement(S))

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_min_has_smallest_inversion_set(self, n):
        for h in enumerate_hessenberg(n):
            for S in enumerate_weyl_subsets(h):
                low = inversion_set(min_element(S))
                for y in all_perms(n):
                    if S.roots <= inversion_set(y):
                        assert low <= inversion_set(y)


class TestInducedSubset:
    def test_worked_example(self):
        S = WeylSubset(S_EXAMPLE, H_EXAMPLE)
        reduced = induced_subset(S, 3)
        assert reduced.roots == frozenset()
        assert reduced.h == (2, 3, 3)

    def test_empty_stays_empty(self):
        S = WeylSubset(frozenset(), H_EXAMPLE)
        assert induced_subset(S, 2).roots == frozenset()

    def test_rejects_bad_vertex(self):
        with pytest.raises(ValueError):
            induced_subset(WeylSubset(S_EXAMPLE, H_EXAMPLE), 0)

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_matches_orientation_restriction(self, n):
        # deleting a vertex from the oriented graph and reading the subset
        # off the surviving arcs must agree with the root relabeling
        for h in enumerate_hessenberg(n):
            for S in enumerate_weyl_subsets(h):
                full_arcs = orientation_of(S).arcs()
                for k in range(1, n + 1):
                    survived = {
                        tuple(v - 1 if v > k else v for v in arc)
                        for arc in full_arcs
                        if k not in arc
                    }
                    assert orientation_of(induced_subset(S, k)).arcs() == survived

    @pytest.mark.parametrize("n", [2, 3, 4, 5])
    def test_class_induction_at_sources(self, n):
        # members of the reduced class, lifted to fix 1 and multiplied by
        # the front cycle of a source, are exactly the members of the
        # original class that place 1 at that source
        from hesscomb.perms import front_cycle
        from hesscomb.reach import sources

        for h in enumerate_hessenberg(n):
            for S in enumerate_weyl_subsets(h):
                cls = class_of(S)
                for k in sorted(sources(orientation_of(S))):
                    reduced_cls = class_of(induced_subset(S, k))
                    cyc = front_cycle(n, k)
                    for y in all_perms(n - 1):
                        lift = (1,) + tuple(v + 1 for v in y)
                        assert (compose(lift, cyc) in cls) == (y in reduced_cls)
