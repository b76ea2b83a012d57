from collections import Counter

import pytest

from tvs.families import (
    FAMILY_KINDS,
    FamilyParameterError,
    FamilySpec,
    generate,
)


def degree_multiset(g):
    return Counter(g.degrees())


class TestCounts:
    def test_helm5(self):
        g, _ = generate(FamilySpec("helm", 5))
        assert g.n == 11 and g.num_edges == 15
        assert degree_multiset(g) == {1: 5, 4: 5, 5: 1}

    def test_friendship1_is_triangle(self):
        g, _ = generate(FamilySpec("friendship", 1))
        assert g.n == 3 and g.num_edges == 3
        assert g.degrees() == [2, 2, 2]

    def test_two_regular_3_3(self):
        g, order = generate(FamilySpec("two-regular", lengths=(3, 3)))
        assert g.n == 6 and g.num_edges == 6
        assert g.degrees() == [2] * 6
        assert {r.group for r in order.roles} == {0, 1}

    def test_wheel6_degrees(self):
        g, order = generate(FamilySpec("wheel", 6))
        center = order.indices_with_role("center")
        assert center == [6]
        assert g.degree(6) == 6
        assert all(g.degree(v) == 3 for v in range(6))

    @pytest.mark.parametrize(
        "kind,n,vertices,edges",
        [
            ("cycle", 9, 9, 9),
            ("path", 9, 9, 8),
            ("prism", 7, 14, 21),
            ("wheel", 7, 8, 14),
            ("helm", 7, 15, 21),
            ("friendship", 7, 15, 21),
            ("complete", 7, 7, 21),
            ("complete-bipartite", 7, 14, 49),
        ],
    )
    def test_vertex_and_edge_counts(self, kind, n, vertices, edges):
        g, _ = generate(FamilySpec(kind, n))
        assert (g.n, g.num_edges) == (vertices, edges)


class TestRegularity:
    def test_cycle_and_two_regular(self):
        for spec in (FamilySpec("cycle", 12), FamilySpec("two-regular", lengths=(4, 5, 3))):
            g, _ = generate(spec)
            assert set(g.degrees()) == {2}

    def test_prism_is_cubic(self):
        g, _ = generate(FamilySpec("prism", 9))
        assert set(g.degrees()) == {3}

    def test_complete_regularity(self):
        g, _ = generate(FamilySpec("complete", 8))
        assert set(g.degrees()) == {7}

    def test_complete_bipartite_regularity(self):
        g, _ = generate(FamilySpec("complete-bipartite", 6))
        assert set(g.degrees()) == {6}


class TestConstraints:
    @pytest.mark.parametrize(
        "kind,n",
        [("cycle", 2), ("path", 1), ("prism", 2), ("wheel", 2), ("helm", 2),
         ("friendship", 0), ("complete", 2), ("complete-bipartite", 2)],
    )
    def test_too_small_rejected(self, kind, n):
        with pytest.raises(FamilyParameterError, match="n:"):
            FamilySpec(kind, n)

    def test_two_regular_constraints(self):
        with pytest.raises(FamilyParameterError, match="lengths:"):
            FamilySpec("two-regular", lengths=())
        with pytest.raises(FamilyParameterError, match="lengths:"):
            FamilySpec("two-regular", lengths=(3, 2))

    def test_unknown_kind(self):
        with pytest.raises(FamilyParameterError):
            FamilySpec("moebius", 5)


class TestDeterminismAndRoles:
    def test_generate_is_deterministic(self):
        for kind in FAMILY_KINDS:
            spec = (
                FamilySpec(kind, lengths=(5, 3, 4))
                if kind == "two-regular"
                else FamilySpec(kind, 5)
            )
            g1, o1 = generate(spec)
            g2, o2 = generate(spec)
            assert g1 == g2 and o1 == o2

    def test_roles_are_bijective(self):
        for kind in FAMILY_KINDS:
            spec = (
                FamilySpec(kind, lengths=(3, 4))
                if kind == "two-regular"
                else FamilySpec(kind, 6)
            )
            g, order = generate(spec)
            assert len(order.roles) == g.n

    def test_two_regular_sorts_but_remembers_components(self):
        g, order = generate(FamilySpec("two-regular", lengths=(5, 3)))
        # Layout ascending by length: the 3-cycle (caller's component 1)
        # comes first.
        first_component = [order.roles[v].group for v in range(3)]
        assert first_component == [1, 1, 1]
        assert [order.roles[v].group for v in range(3, 8)] == [0] * 5
