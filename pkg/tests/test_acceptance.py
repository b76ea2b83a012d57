"""Acceptance suite: every criterion is exact-value (tolerance 0).

Each test prints one ``ACCEPTANCE <id>: PASS/FAIL`` line (visible with
``pytest -s`` or on failure) and asserts that no instance misbehaved.
"""

import random
import time

from tvs.bounds import baca_bound, degree_count_bound
from tvs.constructors import (
    construct,
    construct_two_regular,
    greedy_vertex_completion,
    tvs_formula,
)
from tvs.families import FamilySpec, generate
from tvs.fixtures import SMALL_LABELINGS
from tvs.graph_core import TotalLabeling, verify, weight_profile
from tvs.oracle import exact_tvs

from tests.helpers import (
    ascending_partitions,
    brute_force_completion_exists,
    random_simple_graph,
)

SWEEP_RANGES = (
    ("cycle", 3, 60),
    ("path", 2, 60),
    ("prism", 3, 40),
    ("wheel", 3, 40),
    ("helm", 3, 40),
    ("friendship", 1, 40),
    ("complete", 3, 30),
    ("complete-bipartite", 3, 20),
)


def _report(criterion: str, failures: list, started: float) -> None:
    verdict = "PASS" if not failures else f"FAIL ({len(failures)} instances)"
    print(f"ACCEPTANCE {criterion}: {verdict} [{time.time() - started:.2f}s]")
    assert not failures, failures[:5]


def _random_partitions(rng: random.Random, count: int, max_total: int):
    partitions = []
    while len(partitions) < count:
        n = rng.randint(6, max_total)
        parts = []
        remaining = n
        while remaining >= 3:
            if remaining < 6 or (remaining <= 9 and rng.random() < 0.4):
                parts.append(remaining)
                remaining = 0
            else:
                take = rng.randint(3, remaining - 3)
                parts.append(take)
                remaining -= take
        if remaining == 0 and len(parts) >= 2:
            rng.shuffle(parts)
            partitions.append(tuple(parts))
    return partitions


def all_family_specs():
    for kind, lo, hi in SWEEP_RANGES:
        for n in range(lo, hi + 1):
            yield FamilySpec(kind, n)


def test_criterion_1_formula_reproduction_by_construction():
    started = time.time()
    failures = []
    specs = list(all_family_specs())
    rng = random.Random(20240)
    specs += [
        FamilySpec("two-regular", lengths=parts)
        for parts in _random_partitions(rng, 30, 60)
    ]
    for spec in specs:
        cert = construct(spec)
        g, _ = generate(spec)
        report = verify(g, cert.labeling)
        formula = tvs_formula(spec)
        dcb, _ = degree_count_bound(g)
        if not (report.is_irregular and report.max_label_used == formula == dcb):
            failures.append((spec.describe(), report.max_label_used, formula, dcb))
    _report("1 (formula = bound = constructed, all families)", failures, started)


def test_criterion_2_oracle_equivalence_at_small_scale():
    started = time.time()
    failures = []
    small = (
        [FamilySpec("cycle", n) for n in range(3, 9)]
        + [FamilySpec("path", n) for n in range(2, 9)]
        + [FamilySpec("prism", 3)]
        + [FamilySpec("wheel", n) for n in range(3, 8)]
        + [FamilySpec("helm", 3)]
        + [FamilySpec("friendship", n) for n in range(1, 4)]
        + [FamilySpec("complete", n) for n in range(3, 6)]
        + [FamilySpec("complete-bipartite", 3)]
        + [
            FamilySpec("two-regular", lengths=parts)
            for total in range(6, 9)
            for parts in ascending_partitions(total)
            if len(parts) >= 2
        ]
    )
    for spec in small:
        g, _ = generate(spec)
        assert g.n <= 8, spec
        result = exact_tvs(g)
        if not (result.is_exact and result.k == tvs_formula(spec)):
            failures.append((spec.describe(), result.status, result.k, tvs_formula(spec)))
    _report("2 (exact search equals formula, n <= 8)", failures, started)


def test_criterion_3_paper_value_spot_checks():
    started = time.time()
    failures = []

    def check(spec, expected):
        cert = construct(spec)
        g, _ = generate(spec)
        report = verify(g, cert.labeling)
        dcb, _ = degree_count_bound(g)
        if not (report.is_irregular and report.max_label_used == expected == dcb):
            failures.append((spec.describe(), expected, report.max_label_used, dcb))

    check(FamilySpec("cycle", 3), 2)
    for n in range(3, 31):
        check(FamilySpec("complete", n), 2)
    for n in range(3, 21):
        check(FamilySpec("complete-bipartite", n), 3)
    for n in range(3, 41):
        check(FamilySpec("prism", n), -(-n // 2) + 1)
    _report("3 (spot values: C_3, K_n, K_nn, prisms)", failures, started)


def test_criterion_4_weight_interval_properties():
    started = time.time()
    failures = []
    expected_interval = {
        "cycle": lambda n: list(range(3, n + 3)),
        "path": lambda n: list(range(2, n + 2)),
        "complete": lambda n: list(range(n, 2 * n)),
        "complete-bipartite": lambda n: list(range(n + 1, 3 * n + 1)),
    }
    for kind, lo, hi in SWEEP_RANGES:
        if kind not in expected_interval:
            continue
        for n in range(lo, hi + 1):
            spec = FamilySpec(kind, n)
            cert = construct(spec)
            g, _ = generate(spec)
            got = sorted(weight_profile(g, cert.labeling).weights)
            if got != expected_interval[kind](n):
                failures.append((spec.describe(), got[:4], got[-4:]))
    _report("4 (exact weight intervals)", failures, started)


def test_criterion_5_greedy_dominance_property():
    started = time.time()
    failures = []
    rng = random.Random(555)
    for trial in range(200):
        g = random_simple_graph(rng, min_n=2, max_n=8)
        s = rng.randint(2, 4)
        edge_labels = [rng.choice((1, s)) for _ in range(g.num_edges)]
        greedy = greedy_vertex_completion(g, edge_labels, s)
        brute = brute_force_completion_exists(g, edge_labels, s)
        if (greedy is not None) != brute:
            failures.append((trial, g.n, s, edge_labels))
        elif greedy is not None and not verify(g, greedy).is_irregular:
            failures.append((trial, "greedy output not irregular"))
    _report("5 (greedy completion iff exhaustive completion, 200 cases)", failures, started)


def test_criterion_6_lower_bound_soundness():
    started = time.time()
    failures = []
    rng = random.Random(666)
    for trial in range(200):
        g = random_simple_graph(rng, min_n=2, max_n=8)
        result = exact_tvs(g)
        dcb, _ = degree_count_bound(g)
        baca = baca_bound(g)
        if not (result.is_exact and result.k >= dcb >= baca):
            failures.append((trial, result.status, result.k, dcb, baca))
    _report("6 (exact >= counting bound >= classical bound, 200 graphs)", failures, started)


def test_criterion_7_two_regular_theorem():
    started = time.time()
    failures = []
    checked = 0
    for n in range(6, 31):
        s = -(-(n + 2) // 3)
        for parts in ascending_partitions(n, max_parts=4):
            cert = construct_two_regular(parts)
            g, _ = generate(cert.family)
            report = verify(g, cert.labeling)
            checked += 1
            if not (report.is_irregular and report.max_label_used == s == cert.claimed_s):
                failures.append((parts, report.max_label_used, s))
    assert checked > 1000
    _report(f"7 (two-regular at ceil((n+2)/3), {checked} partitions)", failures, started)


def test_criterion_8_fixture_regeneration():
    started = time.time()
    failures = []
    expected_k = {
        ("wheel", 3): 2, ("wheel", 4): 2, ("wheel", 5): 2, ("wheel", 6): 3,
        ("helm", 3): 2, ("helm", 4): 3,
    }
    assert set(SMALL_LABELINGS) == set(expected_k)
    for (kind, n), (s, edge_labels, vertex_labels) in SMALL_LABELINGS.items():
        spec = FamilySpec(kind, n)
        g, _ = generate(spec)
        labeling = TotalLabeling.of(vertex_labels, edge_labels, s)
        report = verify(g, labeling)
        if not (report.is_irregular and report.max_label_used <= s):
            failures.append(((kind, n), "fixture does not re-verify"))
        if s != expected_k[(kind, n)] or s != tvs_formula(spec):
            failures.append(((kind, n), "fixture k differs from formula", s))
        regenerated = exact_tvs(g)
        if not regenerated.is_exact or regenerated.k != s:
            failures.append(((kind, n), "oracle regeneration found different k"))
        elif (
            regenerated.witness.edge_labels != edge_labels
            or regenerated.witness.vertex_labels != vertex_labels
        ):
            failures.append(((kind, n), "oracle regeneration drifted from fixture"))
    _report("8 (small wheel/helm fixtures regenerate)", failures, started)
