from __future__ import annotations

import json

import pytest

from conftest import nx_automorphisms
from vtorb import verify
from vtorb.families import (circulant, complete, gp, lex_cycle_2k1, moebius_ladder, named, prism, psi, psi_swap, spx,
                            spx_flip)
from vtorb.group import PermGroup
from vtorb.perm import Perm, cyclic_data

CAP = 1 << 22


def A(g, name=""):
    return verify.analyse(g, name or repr(g), CAP)


def test_meo_bound_examples():
    v = verify.check_meo_bound(A(named("k33")))
    assert v.status == verify.HOLDS and v.measured["meo"] == 6 == v.measured["n"]
    v = verify.check_meo_bound(A(circulant(12, (1, 6))))
    assert v.status == verify.HOLDS and v.measured["meo"] == 12
    v = verify.check_meo_bound(A(lex_cycle_2k1(6)))
    assert v.status == verify.HOLDS and v.measured["bound"] == 9 * 12
    assert verify.check_meo_bound(A(circulant(12, (1,)))).status == verify.SKIPPED


def test_meo_local_examples():
    assert verify.check_meo_local(A(named("heawood"))).status == verify.HOLDS
    v = verify.check_meo_local(A(prism(7)))
    assert v.status == verify.HOLDS and v.measured["meo_local"] == 2
    v = verify.check_meo_local(A(spx(5, 2)))
    assert v.status == verify.HOLDS and v.measured["meo_local"] == 2


def test_regular_orbit_examples():
    v = verify.check_regular_orbit(A(named("k33")))
    assert v.status == verify.SKIPPED and "K3,3" in v.reason
    assert verify.check_regular_orbit(A(moebius_ladder(3))).status == verify.SKIPPED
    for nm in ("petersen", "pappus"):
        assert verify.check_regular_orbit(A(named(nm))).status == verify.HOLDS


def test_adjacent_regular_orbits_examples():
    assert verify.check_adjacent_regular_orbits(A(gp(10, 2))).status == verify.HOLDS
    assert verify.check_adjacent_regular_orbits(A(gp(10, 3))).status == verify.HOLDS
    v = verify.check_adjacent_regular_orbits(A(named("heawood")))
    assert v.status == verify.SKIPPED and "heawood" in v.reason
    # psi(6) is the Pappus graph and is screened out by isomorphism
    assert verify.check_adjacent_regular_orbits(A(psi(6))).status == verify.SKIPPED


def _nx_adjacent_regular_failures(g):
    bad = 0
    for images in nx_automorphisms(g):
        cd = cyclic_data(Perm(images))
        if cd.orbit_count == 1:
            continue
        orbs = [set(c) for c in Perm(images).cycles if len(c) == cd.order]
        for o in orbs:
            if not any(p is not o and any(g.has_edge(x, y) for x in o for y in p) for p in orbs):
                bad += 1
                break
    return bad


def test_adjacent_regular_orbits_fails_on_moebius_kantor():
    """GP(8,3) has order-12 automorphisms with one 12-orbit and one 4-orbit (see ledger)."""
    g = gp(8, 3)
    v = verify.check_adjacent_regular_orbits(A(g))
    assert v.status == verify.FAILS
    assert v.measured["failing_elements"] == _nx_adjacent_regular_failures(g) == 16
    assert v.witness["order"] == 12 and v.witness["regular_vertices"] == 12
    assert verify.recheck(g, v)


def test_mu_bound_examples():
    for g in (spx(4, 1), gp(12, 5), complete(4)):
        assert verify.check_mu_bound(A(g)).status == verify.HOLDS


def test_mu_bound_fails_on_k33():
    g = named("k33")
    v = verify.check_mu_bound(A(g))
    assert v.status == verify.FAILS and v.measured["failing_elements"] == 12
    w = v.witness
    cd = cyclic_data(Perm(w["images"]))
    assert 6 * cd.orbit_count * cd.order > 17 * g.n
    assert sorted(cd.orbit_lengths) == [1, 2, 3]
    assert verify.recheck(g, v)


def test_regular_ratio_examples():
    assert verify.check_regular_ratio(A(named("petersen"))).status == verify.HOLDS
    assert verify.check_regular_ratio(A(psi(6))).status == verify.HOLDS
    v = verify.check_regular_ratio(A(spx(4, 1)))
    assert v.status == verify.SKIPPED and "SPX(4,1)" in v.reason


def test_conjecture_boundary_elements():
    # Moebius ladder rotation: mu = 1 = 2k - 1 with k = 1
    g = moebius_ladder(5)
    rot = Perm([(i + 1) % 10 for i in range(10)])
    rec = verify.element_record(g, rot)
    assert rec[verify.COUNT] * rec[verify.LONG] <= 2 * g.n - rec[verify.LONG]
    # SPX(4,1) flip: mu = n - 2 = 2k - 2 with k = n/2
    g = spx(4, 1)
    rec = verify.element_record(g, spx_flip(4))
    assert rec[verify.COUNT] == g.n - 2 and rec[verify.LONG] == 2
    assert rec[verify.COUNT] * 2 <= 2 * g.n - 2
    # Psi(6) swap: exactly two thirds regular
    rec = verify.element_record(psi(6), psi_swap(6))
    assert 3 * rec[verify.REG] == 2 * 18


def test_conjectures_fail_on_small_graphs():
    v = verify.check_conjecture_mu(A(complete(4)))
    assert v.status == verify.FAILS and v.witness["order"] == 3
    v = verify.check_conjecture_ratio(A(named("petersen")))
    assert v.status == verify.FAILS and 3 * v.witness["regular_vertices"] < 2 * 10
    assert verify.check_conjecture_ratio(A(named("k33"))).status == verify.SKIPPED


def test_orbit_laws_examples():
    for nm in ("pappus", "heawood"):
        assert verify.check_orbit_size_law(A(named(nm))).status == verify.HOLDS
        assert verify.check_orbit_ratio(A(named(nm))).status == verify.HOLDS
    assert verify.check_orbit_ratio(A(named("k33"))).status == verify.SKIPPED


def test_semiprimitive_examples():
    for g in (named("petersen"), named("heawood"), complete(5)):
        v = verify.check_semiprimitive_bound(A(g))
        assert v.status == verify.HOLDS, v
    assert verify.check_semiprimitive_bound(A(prism(5))).status == verify.SKIPPED


def test_normal_subgroups_and_semiprimitivity():
    assert [N.order for N in verify.normal_subgroups(PermGroup.symmetric(4))] == [1, 4, 12, 24]
    assert verify.is_semiprimitive(PermGroup.symmetric(3))
    d4 = PermGroup(4, [Perm([1, 2, 3, 0]), Perm([0, 3, 2, 1])])
    assert d4.order == 8 and not verify.is_semiprimitive(d4)
    assert not verify.is_semiprimitive(PermGroup(4, [Perm([1, 0, 2, 3])]))


def test_sylow_exponent_examples():
    v = verify.check_sylow_exponent(A(complete(7)))
    assert v.status == verify.HOLDS and v.measured["max_p_element_order"] == 3
    assert verify.check_sylow_exponent(A(named("k33"))).status == verify.SKIPPED


def test_lemma_checks():
    for g in (named("petersen"), spx(4, 2), prism(6)):
        a = A(g)
        for check in (verify.check_basic1, verify.check_lemma_mu, verify.check_tw_regular_orbit, verify.check_mingcd):
            assert check(a).status == verify.HOLDS


def test_fixicity():
    assert verify.check_fixicity(A(named("petersen"))).status == verify.SKIPPED
    assert verify.check_fixicity(A(spx(6, 1))).status == verify.SKIPPED
    assert verify.check_fixicity(A(gp(12, 5))).status == verify.HOLDS


def test_inexact_when_capped():
    a = verify.Analysis(spx(6, 1), "spx", cap=100)
    v = verify.check_meo_local(a)
    assert v.status == verify.HOLDS
    v = verify.check_mingcd(a)
    assert v.status == verify.INEXACT and v.measured["elements_checked"] == 100


def test_spx_screening():
    assert verify.spx_candidates(16) == [(4, 1)]
    assert (3, 2) in verify.spx_candidates(48) and (12, 1) in verify.spx_candidates(48)
    g = spx(5, 2)
    h = g.relabel(list(reversed(range(g.n))))
    assert verify.spx_match(h) == (5, 2)
    assert verify.spx_match(prism(8)) is None


def test_suites():
    assert verify.suite_claims("regular-orbits") == ("regular-orbit", "adjacent-regular-orbits")
    assert verify.suite_claims("mu-bound") == ("mu-bound",)
    with pytest.raises(ValueError):
        verify.suite_claims("nope")


def test_empty_corpus():
    r = verify.scan([], "all")
    assert r.verdicts == [] and r.summary["total"] == 0


def test_report_json_and_csv():
    corpus = [("k33", named("k33")), ("petersen", named("petersen"))]
    r = verify.scan(corpus, "theorems", cap=CAP, corpus_name="tiny")
    data = json.loads(r.dumps())
    assert set(data) == {"corpus", "claims", "summary"}
    s = data["summary"]
    assert s["total"] == len(data["claims"]) == s["holds"] + s["fails"] + s["skipped"] + s["inexact"]
    for c in data["claims"]:
        assert {"graph", "claim", "status", "measured"} <= set(c)
        if c["status"] == "fails":
            assert "witness" in c
        if c["status"] == "skipped":
            assert c["reason"]
    csv = r.to_csv().splitlines()
    assert csv[0] == "graph,claim,status,measured,reason" and len(csv) == 1 + s["total"]


def test_parallel_scan_is_deterministic():
    corpus = list(verify.cubic_small())[:12]
    a = verify.scan(corpus, "all", cap=CAP, jobs=1).dumps()
    b = verify.scan(corpus, "all", cap=CAP, jobs=3).dumps()
    assert a == b


KNOWN_THEOREM_FAILS = {("k33", "mu-bound"), ("moebius(3)", "mu-bound"), ("gp(8,3)", "adjacent-regular-orbits")}


def test_cubic_small_full_scan():
    """Every fail re-verifies; theorem fails are exactly the documented counterexamples."""
    corpus = verify.cubic_small()
    report = verify.scan(corpus, "all", cap=CAP)
    graphs = dict(corpus)
    fails = [v for v in report.verdicts if v.status == verify.FAILS]
    assert report.summary["exact"]
    for v in fails:
        assert verify.recheck(graphs[v.graph], v), (v.graph, v.claim)
    theorem = {(v.graph, v.claim) for v in fails if verify.claim_kind(v.claim) != "conjecture"}
    assert theorem == KNOWN_THEOREM_FAILS
    skipped_reasons = {v.reason for v in report.verdicts if v.status == verify.SKIPPED}
    assert not any(r.startswith("error") for r in skipped_reasons)
