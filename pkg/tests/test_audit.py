"""Tests for the counting graphs, bound checks, and weighted chain mass."""

from __future__ import annotations

import json
from collections import Counter
from fractions import Fraction

import pytest

from vizing import (
    Colouring,
    EdgeWeights,
    audit_report,
    build,
    build_audit_graph,
    check_degree_bounds,
    check_unimprovable,
    generate_random,
    superb_count_check,
    uncoloured_fraction_bounds,
    vizing_chain,
    weighted_chain_mass,
)
from vizing.audit import (
    VERDICT_FAIL,
    VERDICT_NOT_APPLICABLE,
    VERDICT_PASS,
    VERDICT_VACUOUS,
    _fraction_verdict,
    fraction_bound_value,
    superb_count_bound,
)

from gadgets import (
    BARE,
    TYPE1,
    TYPE1_UNSTABLE,
    TYPE2,
    locked_instance,
    long_path_instance,
)
from helpers import random_partial_colouring


def audit_instances():
    """Seeded random instances plus the hand-built ones, as (g, c) pairs."""
    out = []
    for seed in range(6):
        delta = 3 if seed % 2 == 0 else 4
        g = generate_random(40, delta, 1, seed)
        out.append((g, random_partial_colouring(g, seed + 500, fill=0.9)))
    for T in (2, 10):
        inst = locked_instance(T)
        out.append((inst.g, inst.c))
    inst = long_path_instance(12, {5: TYPE1, 7: BARE})
    out.append((inst.g, inst.c))
    return out


# ---------------------------------------------------------------------------
# Audit graph construction
# ---------------------------------------------------------------------------


class TestBuildAuditGraph:
    def test_p3_single_coloured_edge(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        ag = build_audit_graph(c, "simple")
        assert ag.kind == "simple"
        assert ag.adjacency == {0: frozenset({1})}
        assert ag.reverse_degrees == {1: 1}
        assert ag.degree(0) == 1
        assert ag.coloured_degree(1) == 1

    def test_fully_coloured_graph_is_empty(self, p3):
        c = Colouring.from_assignment(p3, [1, 2])
        for kind in ("simple", "iterated"):
            ag = build_audit_graph(c, kind, L_cap=10)
            assert ag.adjacency == {}
            assert ag.reverse_degrees == {}
            assert ag.edge_count() == 0

    def test_star3_empty_colouring_has_no_pairs(self, star3):
        c = Colouring.empty(star3)
        for kind in ("simple", "iterated"):
            ag = build_audit_graph(c, kind, L_cap=10)
            assert set(ag.adjacency) == {0, 1, 2}
            assert ag.edge_count() == 0
            assert ag.reverse_degrees == {}

    def test_unknown_kind_rejected(self, p3):
        c = Colouring.empty(p3)
        with pytest.raises(ValueError, match="kind"):
            build_audit_graph(c, "quadratic")

    def test_locked_instance_adjacency_frozen(self):
        inst = locked_instance(2)
        ag = build_audit_graph(inst.c, "simple")
        # chain at x: [e] + [a3, tail2]; chain at a: [e] + [x1, tail2]
        assert ag.adjacency == {0: frozenset({1, 4, 6, 12})}
        assert ag.reverse_degrees == {1: 1, 4: 1, 6: 1, 12: 1}
        agi = build_audit_graph(inst.c, "iterated", L_cap=2)
        # tails are too short to hold suitable edges
        assert agi.adjacency == {0: frozenset()}
        assert agi.reverse_degrees == {}

    def test_locked_long_iterated_partners(self):
        inst = locked_instance(16)
        agi = build_audit_graph(inst.c, "iterated", L_cap=16)
        # bare Type0 edges at odd positions 5..15 on both tails; the longest
        # second-order chain covers the prefix through position 15
        want = {inst.e} | set(inst.x_tail[:15]) | set(inst.a_tail[:15])
        want.discard(inst.e)
        assert agi.adjacency == {inst.e: frozenset(want)}
        assert agi.degree(inst.e) == 30

    def test_partners_are_coloured_and_chains_rederivable(self):
        for g, c in audit_instances():
            ag = build_audit_graph(c, "simple")
            assert set(ag.adjacency) == set(c.uncoloured())
            for e, partners in ag.adjacency.items():
                seen = set()
                u, v, _ = g.edges[e]
                for x in (u, v):
                    seen |= set(vizing_chain(c, x, e).edges())
                seen.discard(e)
                assert partners == seen
                for f in partners:
                    assert c.colour_of(f) != 0

    def test_handshake_identity_both_kinds(self):
        for g, c in audit_instances():
            for kind in ("simple", "iterated"):
                ag = build_audit_graph(c, kind, L_cap=12)
                left = sum(len(p) for p in ag.adjacency.values())
                right = sum(ag.reverse_degrees.values())
                assert left == right == ag.edge_count()
                recount = Counter()
                for partners in ag.adjacency.values():
                    recount.update(partners)
                assert dict(recount) == ag.reverse_degrees

    def test_build_restores_the_colouring(self):
        for g, c in audit_instances():
            before = c.assignment()
            build_audit_graph(c, "iterated", L_cap=12)
            assert c.assignment() == before


# ---------------------------------------------------------------------------
# Degree bounds
# ---------------------------------------------------------------------------


class TestDegreeBounds:
    def test_p3_example(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        ag = build_audit_graph(c, "simple")
        res = check_degree_bounds(ag, 2, 1)
        assert res.ok
        assert res.bound == 81
        assert res.max_degree == 1
        assert res.worst_edge == 1

    def test_empty_graph_has_no_offender(self, p3):
        c = Colouring.from_assignment(p3, [1, 2])
        res = check_degree_bounds(build_audit_graph(c, "simple"), 2, 1)
        assert res.ok and res.max_degree == 0 and res.worst_edge is None

    def test_bound_powers_by_kind(self, star3):
        c = Colouring.empty(star3)
        assert check_degree_bounds(build_audit_graph(c, "simple"), 3, 1).bound == 4**4
        assert (
            check_degree_bounds(build_audit_graph(c, "iterated", L_cap=4), 3, 1).bound
            == 4**9
        )

    def test_degree_caps_hold_on_instances(self):
        for g, c in audit_instances():
            simple = check_degree_bounds(build_audit_graph(c, "simple"), g.delta, g.pi)
            assert simple.ok, f"simple degree {simple.max_degree} > {simple.bound}"
            iterated = check_degree_bounds(
                build_audit_graph(c, "iterated", L_cap=12), g.delta, g.pi
            )
            assert iterated.ok, f"iterated degree {iterated.max_degree} > {iterated.bound}"

    def test_worst_edge_attains_max_degree(self):
        for g, c in audit_instances():
            ag = build_audit_graph(c, "simple")
            res = check_degree_bounds(ag, g.delta, g.pi)
            if res.worst_edge is not None:
                assert ag.coloured_degree(res.worst_edge) == res.max_degree


# ---------------------------------------------------------------------------
# Improvement checks
# ---------------------------------------------------------------------------


class TestCheckUnimprovable:
    def test_fully_coloured_is_vacuously_true(self, p3):
        c = Colouring.from_assignment(p3, [1, 2])
        assert check_unimprovable(c, 100)
        assert check_unimprovable(c, 100, mode="simple")

    def test_augmenting_fan_fails(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        assert not check_unimprovable(c, 1)
        assert not check_unimprovable(c, 1, mode="simple")

    def test_locked_short_tails_boundary(self):
        c = locked_instance(2).c
        for mode in ("simple", "iterated"):
            assert check_unimprovable(c, 2, mode=mode)
            assert not check_unimprovable(c, 3, mode=mode)

    def test_locked_long_separates_modes(self):
        # tails of 16 edges, bare suitable edges from position 5 on: the
        # second level spots the short (empty) second paths the first level
        # cannot see
        c = locked_instance(16).c
        assert check_unimprovable(c, 4, mode="simple")
        assert check_unimprovable(c, 4, mode="iterated")
        assert check_unimprovable(c, 5, mode="simple")
        assert not check_unimprovable(c, 5, mode="iterated")
        assert check_unimprovable(c, 16, mode="simple")
        assert not check_unimprovable(c, 17, mode="simple")

    def test_unknown_mode_rejected(self, p3):
        with pytest.raises(ValueError, match="mode"):
            check_unimprovable(Colouring.empty(p3), 1, mode="thorough")

    def test_check_restores_the_colouring(self):
        c = locked_instance(16).c
        before = c.assignment()
        check_unimprovable(c, 5, mode="iterated")
        assert c.assignment() == before


# ---------------------------------------------------------------------------
# Uncoloured fraction bounds
# ---------------------------------------------------------------------------


class TestFractionBounds:
    def test_bound_formulas(self):
        assert fraction_bound_value("simple", 2, 1, 81) == 1
        assert fraction_bound_value("simple", 3, 1, 64) == Fraction(256, 64)
        assert fraction_bound_value("iterated", 2, 1, 10000) == Fraction(
            14348907, 10**8
        )
        with pytest.raises(ValueError, match="mode"):
            fraction_bound_value("quadratic", 2, 1, 10)

    def test_verdict_logic_all_branches(self):
        assert _fraction_verdict(Fraction(0), Fraction(1, 2), True) == VERDICT_PASS
        assert _fraction_verdict(Fraction(3, 4), Fraction(1, 2), True) == VERDICT_FAIL
        assert _fraction_verdict(Fraction(3, 4), Fraction(2), True) == VERDICT_VACUOUS
        assert (
            _fraction_verdict(Fraction(0), Fraction(1, 2), False)
            == VERDICT_NOT_APPLICABLE
        )

    def test_fully_coloured_passes(self, p3):
        c = Colouring.from_assignment(p3, [1, 2])
        res = uncoloured_fraction_bounds(c, 162, "simple")
        assert res.fraction == 0
        assert res.bound == Fraction(1, 2)
        assert res.verdict == VERDICT_PASS
        assert res.passed

    def test_vacuous_bound_at_small_l(self, p3):
        c = Colouring.from_assignment(p3, [1, 2])
        res = uncoloured_fraction_bounds(c, 81, "simple")
        assert res.bound == 1
        assert res.verdict == VERDICT_VACUOUS

    def test_iterated_threshold_gates_the_bound(self, p3):
        c = Colouring.from_assignment(p3, [1, 2])
        # 10 (delta+pi)^6 = 7290 must be strictly below L
        res = uncoloured_fraction_bounds(c, 7290, "iterated")
        assert res.verdict == VERDICT_NOT_APPLICABLE
        res = uncoloured_fraction_bounds(c, 7291, "iterated")
        assert res.verdict == VERDICT_PASS
        assert res.bound == Fraction(3**15, 7291 * 7291)

    def test_improvable_colouring_is_not_applicable(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        res = uncoloured_fraction_bounds(c, 81, "simple")
        assert res.verdict == VERDICT_NOT_APPLICABLE
        assert res.fraction == Fraction(1, 2)
        assert not res.passed

    def test_locked_long_simple_applies_iterated_does_not(self):
        inst = locked_instance(16)
        res = uncoloured_fraction_bounds(inst.c, 8, "simple")
        assert res.fraction == Fraction(1, 44)
        assert res.bound == Fraction(625, 8)
        assert res.verdict == VERDICT_VACUOUS
        res = uncoloured_fraction_bounds(inst.c, 8, "iterated")
        assert res.verdict == VERDICT_NOT_APPLICABLE


# ---------------------------------------------------------------------------
# Superb-edge counting
# ---------------------------------------------------------------------------


class TestSuperbCountCheck:
    def test_bound_values(self):
        assert superb_count_bound(2, 1, 400) == Fraction(-265, 27)
        assert superb_count_bound(2, 1, 4000) == Fraction(1535, 27)
        # a count passes at L=4000 only from 57 up
        assert Fraction(57) >= superb_count_bound(2, 1, 4000)
        assert Fraction(56) < superb_count_bound(2, 1, 4000)

    def test_all_type0_counts_for_every_pair(self):
        inst = long_path_instance(12)
        sc = superb_count_check(inst.c, inst.e, inst.x, 12)
        assert (sc.gamma, sc.theta, sc.count) == (1, 2, 4)
        assert sc.bound == Fraction(-1415, 24)
        assert sc.verdict == VERDICT_VACUOUS
        assert sc.passed

    def test_single_colour_paths_join_matching_pairs(self):
        # TypeI at 5 contributes its one-edge second path (colour 3) to every
        # pair containing 3; the unstable TypeI at 9 is not superb and does
        # not count; bare positions 7, 11, 13, 15 count for every pair
        inst = long_path_instance(16, {5: TYPE1, 7: BARE, 9: TYPE1_UNSTABLE})
        sc = superb_count_check(inst.c, inst.e, inst.x, 16)
        assert (sc.gamma, sc.theta, sc.count) == (1, 3, 5)

    def test_empty_type2_paths_count_everywhere(self):
        inst = long_path_instance(
            24, {5: TYPE2, 7: TYPE1, 11: TYPE2, 13: BARE, 17: TYPE1}, delta=4
        )
        sc = superb_count_check(inst.c, inst.e, inst.x, 24)
        # 8 wildcard entries (two empty TypeII, six bare) plus two TypeI
        # second paths coloured 3
        assert (sc.gamma, sc.theta, sc.count) == (1, 3, 10)

    def test_short_path_is_an_error(self):
        inst = long_path_instance(12)
        with pytest.raises(ValueError, match="at least L"):
            superb_count_check(inst.c, inst.e, inst.x, 13)

    def test_augmenting_fan_is_an_error(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        with pytest.raises(ValueError, match="augmenting"):
            superb_count_check(c, 0, 0, 1)

    def test_count_restores_the_colouring(self):
        inst = long_path_instance(16, {5: TYPE1, 7: BARE, 9: TYPE1_UNSTABLE})
        before = inst.c.assignment()
        superb_count_check(inst.c, inst.e, inst.x, 16)
        assert inst.c.assignment() == before


# ---------------------------------------------------------------------------
# Weighted chain mass
# ---------------------------------------------------------------------------


class TestWeightedChainMass:
    def test_p3_unit_weights(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        assert weighted_chain_mass(c, 0, 1, EdgeWeights.unit(p3)) == 1

    def test_p3_ratio(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        w = EdgeWeights({0: Fraction(1), 1: Fraction(3)})
        assert weighted_chain_mass(c, 0, 1, w) == 3

    def test_plain_mapping_accepted(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        assert weighted_chain_mass(c, 0, 1, {0: 2, 1: 5}) == Fraction(5, 2)

    def test_unit_mass_equals_chain_length_minus_one(self):
        for g, c in audit_instances():
            unit = EdgeWeights.unit(g)
            for e in c.uncoloured()[:6]:
                u, v, _ = g.edges[e]
                for x in (u, v):
                    mass = weighted_chain_mass(c, e, x, unit)
                    assert mass == len(vizing_chain(c, x, e).edges()) - 1

    def test_coloured_edge_rejected(self, p3):
        c = Colouring.from_assignment(p3, {1: 1})
        with pytest.raises(ValueError, match="uncoloured"):
            weighted_chain_mass(c, 1, 1, EdgeWeights.unit(p3))

    def test_weights_must_be_positive(self):
        with pytest.raises(ValueError, match="positive"):
            EdgeWeights({0: Fraction(0)})
        with pytest.raises(ValueError, match="positive"):
            EdgeWeights({0: Fraction(-1, 2)})

    def test_locked_masses(self):
        inst = locked_instance(2)
        unit = EdgeWeights.unit(inst.g)
        assert weighted_chain_mass(inst.c, inst.e, inst.x, unit) == 2
        assert weighted_chain_mass(inst.c, inst.e, inst.a, unit) == 2
        # x-side chain is [e, a3, tail2]; weigh those two partners 3 and 5
        w = {f: 1 for f in range(inst.g.m)}
        w[inst.x_tail[0]] = 3
        w[inst.x_tail[1]] = 5
        assert weighted_chain_mass(inst.c, inst.e, inst.x, w) == 8


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


class TestAuditReport:
    def test_locked_report_values(self):
        inst = locked_instance(2)
        rep = audit_report(inst.c, 2)
        assert rep.max_deg_simple == 1
        assert rep.max_deg_iterated == 0
        assert rep.min_uncoloured_deg == 4
        assert rep.uncoloured_fraction == Fraction(1, 16)
        assert rep.superb_count_checks == []
        assert rep.weighted_min_mass == 2

    def test_fully_coloured_report(self, p3):
        rep = audit_report(Colouring.from_assignment(p3, [1, 2]), 4)
        assert rep.max_deg_simple == 0
        assert rep.min_uncoloured_deg == 0
        assert rep.uncoloured_fraction == 0
        assert rep.weighted_min_mass is None

    def test_probe_rows(self):
        inst = long_path_instance(12)
        rep = audit_report(inst.c, 12, superb_probes=((inst.e, inst.x),))
        assert len(rep.superb_count_checks) == 1
        e, x, gamma, theta, count, bound, verdict = rep.superb_count_checks[0]
        assert (e, x, gamma, theta, count) == (inst.e, inst.x, 1, 2, 4)
        assert bound == Fraction(-1415, 24)
        assert verdict == VERDICT_VACUOUS

    def test_json_shape_and_determinism(self):
        inst = locked_instance(2)
        rep = audit_report(inst.c, 2)
        doc = json.loads(rep.to_json())
        assert set(doc) == {
            "max_deg_simple",
            "max_deg_iterated",
            "min_uncoloured_deg",
            "uncoloured_fraction",
            "superb_count_checks",
            "weighted_min_mass",
        }
        assert doc["uncoloured_fraction"] == "1/16"
        assert doc["weighted_min_mass"] == "2/1"
        again = audit_report(inst.c, 2)
        assert again.to_json() == rep.to_json()
