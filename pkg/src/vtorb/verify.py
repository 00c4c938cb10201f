"""Claim predicates over graphs and corpora.

Each ``check_*`` returns a :class:`Verdict`. Per-element claims are decided
from one pass over ``Aut(g)`` (:class:`Analysis`): elements with the same
cycle record and orbit-law flags are interchangeable for every claim here,
so the pass keeps one count and one witness index per distinct record.
All inequalities are compared in integers.
"""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from math import factorial, gcd, lcm
from typing import Iterable

from . import kernels
from .constructions import local_action
from .families import (NAMED, circulant, complete, gp, lex_cycle_2k1, moebius_ladder,
                       named, prism, psi, spx)
from .graph import Graph, is_connected
from .group import PermGroup, default_cap, exponent, meo, orbits, p_part
from .perm import Perm
from .search import automorphism_group, edge_orbit_count, is_arc_transitive, is_isomorphic

HOLDS, FAILS, SKIPPED, INEXACT = "holds", "fails", "skipped", "inexact"

THEOREMS = ("meo-bound", "meo-local", "regular-orbit", "adjacent-regular-orbits", "mu-bound",
            "regular-ratio", "orbit-size-law", "orbit-ratio", "semiprimitive-bound", "sylow-exponent")
LEMMAS = ("basic1", "lemma-mu", "tw-regular-orbit", "mingcd")
CONJECTURES = ("conj-mu", "conj-ratio")
OPTIONAL = ("fixicity",)

SUITES = {
    "theorems": THEOREMS,
    "lemmas": LEMMAS,
    "conjectures": CONJECTURES,
    "all": THEOREMS + LEMMAS + CONJECTURES,
    "regular-orbits": ("regular-orbit", "adjacent-regular-orbits"),
    "fixicity": OPTIONAL,
}

ADJACENT_EXCLUDED = ("k33", "k4", "q3", "petersen", "pappus", "heawood")

# record layout from kernels.graph_scan
O, LONG, SHORT, COUNT, REG, FIXED, LENGTHS, RATIO_OK, COR13_OK, ADJREG_OK = range(10)


def suite_claims(suite: str) -> tuple[str, ...]:
    if suite in SUITES:
        return SUITES[suite]
    if suite in THEOREMS + LEMMAS + CONJECTURES + OPTIONAL:
        return (suite,)
    raise ValueError(f"unknown suite {suite!r}; expected one of {', '.join(SUITES)} or a claim id")


def claim_kind(claim: str) -> str:
    if claim in CONJECTURES:
        return "conjecture"
    if claim in OPTIONAL:
        return "optional"
    return "lemma" if claim in LEMMAS else "theorem"


@dataclass
class Verdict:
    claim: str
    status: str
    graph: str = ""
    measured: dict = field(default_factory=dict)
    witness: dict | None = None
    reason: str | None = None

    def to_json(self) -> dict:
        out = {"graph": self.graph, "claim": self.claim, "status": self.status, "measured": self.measured}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.reason is not None:
            out["reason"] = self.reason
        return out


@dataclass
class Report:
    corpus: str
    verdicts: list[Verdict]
    cap: int

    @property
    def summary(self) -> dict:
        counts = Counter(v.status for v in self.verdicts)
        out = {s: counts.get(s, 0) for s in (HOLDS, FAILS, SKIPPED, INEXACT)}
        out["total"] = len(self.verdicts)
        out["graphs"] = len(dict.fromkeys(v.graph for v in self.verdicts))
        out["cap"] = self.cap
        out["exact"] = counts.get(INEXACT, 0) == 0
        out["theorem_fails"] = sum(1 for v in self.verdicts if v.status == FAILS and claim_kind(v.claim) != "conjecture")
        out["conjecture_fails"] = sum(1 for v in self.verdicts if v.status == FAILS and claim_kind(v.claim) == "conjecture")
        return out

    def to_json(self) -> dict:
        return {"corpus": self.corpus, "claims": [v.to_json() for v in self.verdicts], "summary": self.summary}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=True) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["graph", "claim", "status", "measured", "reason"])
        for v in self.verdicts:
            measured = ";".join(f"{k}={v.measured[k]}" for k in sorted(v.measured))
            w.writerow([v.graph, v.claim, v.status, measured, v.reason or ""])
        return buf.getvalue()


def _is_prime(p: int) -> bool:
    return p >= 2 and all(p % q for q in range(2, int(p ** 0.5) + 1))


def _prime_factors(m: int) -> list[int]:
    out, q = [], 2
    while q * q <= m:
        if m % q == 0:
            out.append(q)
            while m % q == 0:
                m //= q
        q += 1
    if m > 1:
        out.append(m)
    return out


def _is_prime_power(m: int) -> bool:
    return m == 1 or len(_prime_factors(m)) == 1


def spx_order(r: int, s: int) -> int:
    return 4 * r if s == 1 else r << (s + 2)


def spx_candidates(n: int) -> list[tuple[int, int]]:
    """All (r, s) with r >= 3, 1 <= s <= r-1 and |V(SPX(r, s))| = n."""
    out = []
    if n % 4 == 0 and n // 4 >= 3:
        out.append((n // 4, 1))
    s = 2
    while (1 << (s + 2)) * (s + 1) <= n:
        r, rem = divmod(n, 1 << (s + 2))
        if not rem and r >= s + 1:
            out.append((r, s))
        s += 1
    return out


@lru_cache(maxsize=None)
def _spx_aut_order(r: int, s: int) -> int:
    return automorphism_group(spx(r, s)).order


def spx_match(g: Graph, aut_order: int | None = None) -> tuple[int, int] | None:
    """(r, s) if g is isomorphic to SPX(r, s), screened by order, valence and |Aut| first."""
    if g.valence() != 3:
        return None
    for r, s in spx_candidates(g.n):
        if aut_order is not None and _spx_aut_order(r, s) != aut_order:
            continue
        if is_isomorphic(g, spx(r, s)):
            return r, s
    return None


def named_match(g: Graph, names=NAMED) -> str | None:
    for nm in names:
        h = named(nm)
        if h.n == g.n and h.num_edges == g.num_edges and is_isomorphic(g, h):
            return nm
    return None


def normal_subgroups(H: PermGroup) -> list[PermGroup]:
    """Every normal subgroup, as joins of normal closures of elements (small groups only)."""
    elements = list(H.elements())
    gens = list(H.gens)

    def closure(seed: list[Perm]) -> PermGroup:
        conj = set(seed)
        queue = list(seed)
        for x in queue:
            for h in gens:
                y = (~h) * x * h
                if y not in conj:
                    conj.add(y)
                    queue.append(y)
        return PermGroup(H.degree, sorted(conj, key=lambda p: p.images))

    found: dict[frozenset, PermGroup] = {}
    for x in elements:
        N = closure([x])
        found.setdefault(frozenset(N.elements()), N)
    changed = True
    while changed:
        changed = False
        items = list(found.items())
        for i, (ka, A) in enumerate(items):
            for kb, B in items[i + 1:]:
                if ka <= kb or kb <= ka:
                    continue
                J = closure(list(A.gens) + list(B.gens))
                key = frozenset(J.elements())
                if key not in found:
                    found[key] = J
                    changed = True
    return [found[k] for k in sorted(found, key=len)]


def is_semiprimitive(H: PermGroup) -> bool:
    """Transitive, and every normal subgroup is transitive or semiregular."""
    if not H.is_transitive():
        return False
    for N in normal_subgroups(H):
        blocks = orbits(N).blocks
        if len(blocks) == 1:
            continue
        if any(len(b) != N.order for b in blocks):
            return False
    return True


class Analysis:
    """Lazily computed invariants of one graph, shared by all checks."""

    def __init__(self, g: Graph, name: str = "", cap: int | None = None, seed: int = 0,
                 element: Perm | None = None):
        self.g = g
        self._single = element
        self.name = name
        self.cap = default_cap() if cap is None else cap
        self.seed = seed

    @property
    def n(self) -> int:
        return self.g.n

    @cached_property
    def valence(self) -> int | None:
        return self.g.valence()

    @cached_property
    def connected(self) -> bool:
        return is_connected(self.g) if self.g.n else True

    @cached_property
    def group(self) -> PermGroup:
        return automorphism_group(self.g)

    @cached_property
    def vertex_orbits(self):
        return orbits(self.group)

    @cached_property
    def vt(self) -> bool:
        return len(self.vertex_orbits.blocks) <= 1

    @cached_property
    def at(self) -> bool:
        return is_arc_transitive(self.g, self.group)

    @cached_property
    def edge_transitive(self) -> bool:
        return edge_orbit_count(self.g, self.group) <= 1

    @cached_property
    def stabiliser(self) -> PermGroup:
        return self.group.stabiliser(0)

    @cached_property
    def meo_local(self) -> tuple[int, bool]:
        best, exact = 1, True
        for block in self.vertex_orbits.blocks:
            stab = self.stabiliser if block[0] == 0 else self.group.stabiliser(block[0])
            value, ok = meo(stab, self.cap)
            best, exact = max(best, value), exact and ok
        return best, exact

    @cached_property
    def stab_exponent(self) -> tuple[int, bool]:
        return exponent(self.stabiliser, self.cap)

    @cached_property
    def is_k33(self) -> bool:
        return self.n == 6 and self.valence == 3 and named_match(self.g, ("k33",)) == "k33"

    @cached_property
    def named_exception(self) -> str | None:
        if self.valence != 3 or self.n > 18:
            return None
        return named_match(self.g, ADJACENT_EXCLUDED)

    @cached_property
    def spx(self) -> tuple[int, int] | None:
        return spx_match(self.g, self.group.order)

    @cached_property
    def exact(self) -> bool:
        return self.group.order <= self.cap

    @cached_property
    def records(self) -> dict[tuple, list[int]]:
        """Distinct element records -> [count, first element index]."""
        if self._single is not None:
            return {element_record(self.g, self._single): [1, 0]}
        G = self.group
        trans = G.transversals()
        out: dict[tuple, list[int]] = {}
        chunk = 1 << 15
        if self.exact:
            for start in range(0, G.order, chunk):
                recs = kernels.graph_scan(self.n, self.g.adj, trans, start, start + chunk)
                for i, rec in enumerate(recs):
                    slot = out.get(rec)
                    if slot is None:
                        out[rec] = [1, start + i]
                    else:
                        slot[0] += 1
        else:
            import random
            rng = random.Random(self.seed)
            done = 0
            while done < self.cap:
                idx = [rng.randrange(G.order) for _ in range(min(chunk, self.cap - done))]
                for pos, rec in zip(idx, kernels.graph_scan(self.n, self.g.adj, trans, 0, 0, idx)):
                    slot = out.get(rec)
                    if slot is None:
                        out[rec] = [1, pos]
                    else:
                        slot[0] += 1
                done += len(idx)
        return out

    def element(self, index: int) -> Perm:
        if self._single is not None:
            return self._single
        rec = kernels.scan_indices(self.n, self.group.transversals(), [index], True)[0]
        return Perm(rec[-1])

    @cached_property
    def meo(self) -> int:
        return max(r[O] for r in self.records)

    @cached_property
    def ell(self) -> int:
        return max(r[LONG] for r in self.records)

    @cached_property
    def mu(self) -> int | None:
        vals = [r[COUNT] for r in self.records if r[O] > 1]
        return min(vals) if vals else None

    @cached_property
    def s_group(self) -> int:
        return max(r[SHORT] for r in self.records)

    def witness(self, rec: tuple, **extra) -> dict:
        index = self.records[rec][1]
        p = self.element(index)
        w = {"element_index": index, "images": list(p.images), "cycles": p.cycle_string(),
             "order": rec[O], "longest": rec[LONG], "shortest": rec[SHORT], "orbit_count": rec[COUNT],
             "regular_vertices": rec[REG], "fixed": rec[FIXED]}
        w.update(extra)
        return w

    def base_measured(self) -> dict:
        return {"n": self.n, "valence": self.valence, "aut_order": self.group.order,
                "elements_checked": sum(c for c, _ in self.records.values()), "exact": self.exact}


def _gate(a: Analysis, claim: str, *, valence=(3,), vt=True, k33=False, spx=False) -> Verdict | None:
    """Skip verdict when a hypothesis fails, else None."""
    if valence is not None and a.valence not in valence:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n, "valence": a.valence},
                       reason=f"valence {a.valence} not in {sorted(valence)}")
    if not a.connected:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason="graph is disconnected")
    if vt and not a.vt:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason="graph is not vertex-transitive")
    if k33 and a.is_k33:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason="excluded: graph is K3,3")
    if spx and a.spx is not None:
        r, s = a.spx
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason=f"excluded: graph is SPX({r},{s})")
    return None


def _per_element(a: Analysis, claim: str, ok, measured: dict, detail=None) -> Verdict:
    """Verdict from a predicate on records; the first failing record becomes the witness."""
    bad = [rec for rec in a.records if not ok(rec)]
    m = {**a.base_measured(), **measured}
    if bad:
        rec = min(bad, key=lambda r: a.records[r][1])
        extra = detail(rec) if detail else {}
        m["failing_elements"] = sum(a.records[r][0] for r in bad)
        return Verdict(claim, FAILS, a.name, m, a.witness(rec, **extra))
    return Verdict(claim, HOLDS if a.exact else INEXACT, a.name, m)


def check_meo_bound(a: Analysis) -> Verdict:
    skip = _gate(a, "meo-bound", valence=(3, 4))
    if skip:
        return skip
    factor = 1 if a.valence == 3 else 9
    bound = factor * a.n
    m = {**a.base_measured(), "meo": a.meo, "bound": bound}
    if a.meo > bound:
        rec = max(a.records, key=lambda r: r[O])
        return Verdict("meo-bound", FAILS, a.name, m, a.witness(rec))
    return Verdict("meo-bound", HOLDS if a.exact else INEXACT, a.name, m)


def check_meo_local(a: Analysis) -> Verdict:
    skip = _gate(a, "meo-local")
    if skip:
        return skip
    value, exact = a.meo_local
    m = {"n": a.n, "meo_local": value, "stabiliser_order": a.stabiliser.order, "exact": exact}
    if value > 6:
        worst = max((Perm(r[-1]) for r in kernels.scan(a.n, a.stabiliser.transversals(), 0, a.stabiliser.order, True)),
                    key=lambda p: p.order())
        return Verdict("meo-local", FAILS, a.name, m, {"images": list(worst.images), "order": worst.order()})
    return Verdict("meo-local", HOLDS if exact else INEXACT, a.name, m)


def check_regular_orbit(a: Analysis) -> Verdict:
    skip = _gate(a, "regular-orbit", k33=True)
    if skip:
        return skip
    v = _per_element(a, "regular-orbit", lambda r: r[REG] > 0, {"meo": a.meo, "ell": a.ell})
    if v.status != FAILS and a.meo != a.ell:
        v.status = FAILS
        v.reason = "meo differs from l(G)"
        rec = max(a.records, key=lambda r: r[O])
        v.witness = a.witness(rec)
    return v


def k33_irregular_witness(a: Analysis) -> dict | None:
    """An element with no regular orbit, if any (used to exhibit the K3,3 exception)."""
    bad = [rec for rec in a.records if rec[REG] == 0]
    if not bad:
        return None
    return a.witness(min(bad, key=lambda r: a.records[r][1]))


def check_adjacent_regular_orbits(a: Analysis) -> Verdict:
    skip = _gate(a, "adjacent-regular-orbits")
    if skip:
        return skip
    if a.named_exception:
        return Verdict("adjacent-regular-orbits", SKIPPED, a.name, {"n": a.n},
                       reason=f"excluded: graph is isomorphic to {a.named_exception}")
    return _per_element(a, "adjacent-regular-orbits", lambda r: r[ADJREG_OK], {})


def check_mu_bound(a: Analysis) -> Verdict:
    skip = _gate(a, "mu-bound")
    if skip:
        return skip
    n = a.n
    m_loc = a.meo_local[0]
    v = _per_element(a, "mu-bound", lambda r: 6 * r[COUNT] * r[O] <= 17 * n, {"mu": a.mu, "meo_local": m_loc})
    if v.status == FAILS:
        return v
    cross = _per_element(a, "mu-bound", lambda r: r[COUNT] * r[LONG] <= (n - r[LONG]) * m_loc + r[LONG], {})
    if cross.status == FAILS:
        cross.reason = "orbit-count cross-check mu*l <= (n-l)*meo_local + l failed"
        return cross
    return v


def check_regular_ratio(a: Analysis) -> Verdict:
    skip = _gate(a, "regular-ratio", k33=True, spx=True)
    if skip:
        return skip
    worst = min(r[REG] for r in a.records)
    return _per_element(a, "regular-ratio", lambda r: 12 * r[REG] >= 5 * a.n,
                        {"min_regular_vertices": worst, "ratio": f"{worst}/{a.n}"})


def check_conjecture_mu(a: Analysis) -> Verdict:
    skip = _gate(a, "conj-mu")
    if skip:
        return skip
    return _per_element(a, "conj-mu", lambda r: r[COUNT] * r[LONG] <= 2 * a.n - r[LONG], {})


def check_conjecture_ratio(a: Analysis) -> Verdict:
    skip = _gate(a, "conj-ratio", k33=True, spx=True)
    if skip:
        return skip
    worst = min(r[REG] for r in a.records)
    return _per_element(a, "conj-ratio", lambda r: 3 * r[REG] >= 2 * a.n,
                        {"min_regular_vertices": worst, "ratio": f"{worst}/{a.n}"})


def _size_law(rec) -> bool:
    ell = rec[LONG]
    return all(ell % k == 0 and ell // k in (1, 2, 3, 4, 6) for k in rec[LENGTHS])


def check_orbit_size_law(a: Analysis) -> Verdict:
    skip = _gate(a, "orbit-size-law", k33=True)
    if skip:
        return skip
    return _per_element(a, "orbit-size-law", _size_law, {}, lambda r: {"lengths": list(r[LENGTHS])})


def check_orbit_ratio(a: Analysis) -> Verdict:
    skip = _gate(a, "orbit-ratio", k33=True)
    if skip:
        return skip
    return _per_element(a, "orbit-ratio", lambda r: r[RATIO_OK] and r[COR13_OK], {},
                        lambda r: {"ratio_law": r[RATIO_OK], "triple_neighbour_law": r[COR13_OK]})


def check_semiprimitive_bound(a: Analysis) -> Verdict:
    claim = "semiprimitive-bound"
    skip = _gate(a, claim, valence=None, vt=True)
    if skip:
        return skip
    d = a.valence
    if not d or not a.at:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason="graph is not arc-transitive")
    if d > 8:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason=f"local degree {d} > 8")
    loc = local_action(a.g, a.group, 0)
    if not is_semiprimitive(loc):
        return Verdict(claim, SKIPPED, a.name, {"n": a.n, "local_order": loc.order},
                       reason="local action is not semiprimitive")
    c = d * factorial(2 * d - 2)
    v = _per_element(a, claim, lambda r: r[O] <= c * r[LONG], {"c": c, "meo": a.meo, "local_order": loc.order})
    if v.status != FAILS and a.meo > c * a.n:
        v.status = FAILS
        v.reason = "meo exceeds c*n"
    return v


def check_sylow_exponent(a: Analysis) -> Verdict:
    claim = "sylow-exponent"
    d = a.valence
    if not d or d % 2 or not _is_prime(d // 2) or d // 2 == 2:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n, "valence": d}, reason="valence is not 2p for an odd prime p")
    skip = _gate(a, claim, valence=None)
    if skip:
        return skip
    if not a.edge_transitive:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason="graph is not edge-transitive")
    p = d // 2
    stab = a.stabiliser
    recs, exact = stab.records(a.cap)
    best = 1
    for r in recs:
        o = r[0]
        if o > best and _prime_factors(o) == [p]:
            best = o
    m = {"n": a.n, "valence": d, "p": p, "max_p_element_order": best, "stabiliser_order": stab.order, "exact": exact}
    if best > p * p:
        return Verdict(claim, FAILS, a.name, m, {"order": best})
    return Verdict(claim, HOLDS if exact else INEXACT, a.name, m)


def check_basic1(a: Analysis) -> Verdict:
    skip = _gate(a, "basic1", valence=None)
    if skip:
        return skip
    m = a.meo_local[0]
    v = _per_element(a, "basic1", lambda r: r[LONG] <= r[O] <= r[SHORT] * m <= r[LONG] * m, {"meo_local": m})
    if v.status != FAILS and not (a.ell <= a.meo <= a.s_group * m <= a.ell * m):
        v.status = FAILS
        v.reason = "group-level chain l(G) <= meo <= s(G) meo_local <= l(G) meo_local failed"
    return v


def check_lemma_mu(a: Analysis) -> Verdict:
    skip = _gate(a, "lemma-mu", valence=None)
    if skip:
        return skip
    m, n = a.meo_local[0], a.n
    v = _per_element(a, "lemma-mu", lambda r: r[COUNT] * r[LONG] <= (n - r[LONG]) * m + r[LONG], {"meo_local": m})
    if v.status != FAILS and a.mu is not None and a.mu * a.ell > (n - a.ell) * m + a.ell:
        v.status = FAILS
        v.reason = "group-level form failed"
    return v


def check_tw_regular_orbit(a: Analysis) -> Verdict:
    claim = "tw-regular-orbit"
    skip = _gate(a, claim, valence=None)
    if skip:
        return skip
    e, exact = a.stab_exponent
    order = a.stabiliser.order
    m = {"stabiliser_order": order, "stabiliser_exponent": e}
    if not exact:
        return Verdict(claim, INEXACT, a.name, {**a.base_measured(), **m}, reason="stabiliser exponent sampled")
    bounds = {p: e // p_part(e, p) for p in _prime_factors(e)}
    m["k_by_prime"] = {str(p): k for p, k in sorted(bounds.items())}
    v = _per_element(a, claim, lambda r: all(r[O] <= k * r[LONG] for k in bounds.values()), m)
    if v.status == FAILS:
        return v
    if _is_prime_power(order):
        return _per_element(a, claim, lambda r: r[REG] > 0, {**m, "p_group": True})
    return v


def _mingcd(rec) -> bool:
    o, ell = rec[O], rec[LONG]
    stab = [o // k for k in rec[LENGTHS]]
    g = 0
    for x in stab:
        g = gcd(g, x)
    return o * g == min(stab) * ell


def check_mingcd(a: Analysis) -> Verdict:
    return _per_element(a, "mingcd", _mingcd, {})


def check_fixicity(a: Analysis) -> Verdict:
    claim = "fixicity"
    skip = _gate(a, claim, spx=True)
    if skip:
        return skip
    if a.n <= 20:
        return Verdict(claim, SKIPPED, a.name, {"n": a.n}, reason="only asserted for n > 20")
    worst = max((r[FIXED] for r in a.records if r[O] > 1), default=0)
    return _per_element(a, claim, lambda r: r[O] == 1 or 3 * r[FIXED] <= a.n, {"max_fixed": worst})


CHECKS = {
    "meo-bound": check_meo_bound,
    "meo-local": check_meo_local,
    "regular-orbit": check_regular_orbit,
    "adjacent-regular-orbits": check_adjacent_regular_orbits,
    "mu-bound": check_mu_bound,
    "regular-ratio": check_regular_ratio,
    "orbit-size-law": check_orbit_size_law,
    "orbit-ratio": check_orbit_ratio,
    "semiprimitive-bound": check_semiprimitive_bound,
    "sylow-exponent": check_sylow_exponent,
    "basic1": check_basic1,
    "lemma-mu": check_lemma_mu,
    "tw-regular-orbit": check_tw_regular_orbit,
    "mingcd": check_mingcd,
    "conj-mu": check_conjecture_mu,
    "conj-ratio": check_conjecture_ratio,
    "fixicity": check_fixicity,
}


def element_record(g: Graph, p: Perm) -> tuple:
    """The graph_scan record of a single element, computed without the group."""
    from . import _purekernel
    rec = kernels.cycle_summary(p.images)
    return rec + _purekernel._orbit_flags(g.adj, p.images, rec[0])


def recheck(g: Graph, verdict: Verdict, cap: int | None = None) -> bool:
    """Re-run the claim on the witness element alone; True if it fails again."""
    if verdict.status != FAILS or verdict.witness is None or "images" not in verdict.witness:
        return False
    a = Analysis(g, verdict.graph, cap, element=Perm(verdict.witness["images"]))
    return CHECKS[verdict.claim](a).status == FAILS


def check_graph(g: Graph, claims: Iterable[str], name: str = "", cap: int | None = None) -> list[Verdict]:
    a = analyse(g, name, cap)
    out = []
    for c in claims:
        try:
            out.append(CHECKS[c](a))
        except Exception as exc:  # isolate per-graph failures
            out.append(Verdict(c, SKIPPED, name, {"n": g.n}, reason=f"error: {type(exc).__name__}: {exc}"))
    return out


_CACHE: dict = {}


def analyse(g: Graph, name: str = "", cap: int | None = None) -> Analysis:
    """Per-process Analysis cache keyed by graph, name and cap."""
    cap = default_cap() if cap is None else cap
    key = (g, name, cap)
    a = _CACHE.get(key)
    if a is None:
        a = _CACHE[key] = Analysis(g, name, cap)
    return a


def clear_cache():
    _CACHE.clear()


def _run_one(args):
    name, g, claims, cap = args
    return check_graph(g, claims, name, cap)


def scan(corpus: Iterable[tuple[str, Graph]], suite="all", cap: int | None = None, jobs: int = 1,
         corpus_name: str = "") -> Report:
    """Run a suite over ``(name, graph)`` pairs; report order follows input order."""
    claims = suite_claims(suite) if isinstance(suite, str) else tuple(suite)
    cap = default_cap() if cap is None else cap
    items = [(name, g, claims, cap) for name, g in corpus]
    if jobs <= 1 or len(items) <= 1:
        results = [_run_one(it) for it in items]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as ex:
            results = list(ex.map(_run_one, items, chunksize=1))
    verdicts = [v for batch in results for v in batch]
    return Report(corpus_name, verdicts, cap)


# -- built-in corpora ---------------------------------------------------------

def _cubic_candidates(max_n: int):
    for nm in NAMED:
        g = named(nm)
        if g.n <= max_n:
            yield nm, g
    for n in range(3, max_n // 2 + 1):
        for k in range(1, (n + 1) // 2):
            if 2 * k < n:
                yield f"gp({n},{k})", gp(n, k)
    for n in range(3, max_n // 2 + 1):
        yield f"prism({n})", prism(n)
        yield f"moebius({n})", moebius_ladder(n)
    # cubic circulants are all prisms or Moebius ladders, so they are not repeated
    for r in range(3, max_n // 4 + 1):
        for s in range(1, r):
            if spx_order(r, s) <= max_n:
                yield f"spx({r},{s})", spx(r, s)
    for r in range(4, max_n // 3 + 1, 2):
        yield f"psi({r})", psi(r)


@lru_cache(maxsize=None)
def cubic_small(max_n: int = 64) -> tuple[tuple[str, Graph], ...]:
    """Vertex-transitive members of every cubic family with n <= max_n, in generation order."""
    out = []
    for name, g in _cubic_candidates(max_n):
        if len(orbits(automorphism_group(g)).blocks) == 1:
            out.append((name, g))
    return tuple(out)


def _canonical_steps(n: int, steps) -> tuple[int, ...]:
    best = None
    for u in range(1, n):
        if gcd(u, n) != 1:
            continue
        img = tuple(sorted(min(u * s % n, n - u * s % n) for s in steps))
        if best is None or img < best:
            best = img
    return best


def quartic_circulant_steps(max_n: int = 32) -> list[tuple[int, tuple[int, int]]]:
    """Connected 4-valent circulants C_n(a, b), one per multiplier class."""
    out = []
    for n in range(5, max_n + 1):
        seen = set()
        for a in range(1, (n + 1) // 2):
            for b in range(a + 1, (n + 1) // 2):
                if 2 * b == n or gcd(gcd(a, b), n) != 1:
                    continue
                key = _canonical_steps(n, (a, b))
                if key in seen:
                    continue
                seen.add(key)
                out.append((n, (a, b)))
    return out


@lru_cache(maxsize=None)
def quartic(max_lex: int = 16, max_circ: int = 32) -> tuple[tuple[str, Graph], ...]:
    out = [(f"lex2k1({n})", lex_cycle_2k1(n)) for n in range(3, max_lex + 1)]
    out.append(("k5", complete(5)))
    out += [(f"circulant({n},{a},{b})", circulant(n, (a, b))) for n, (a, b) in quartic_circulant_steps(max_circ)]
    return tuple(out)


CORPORA = {"cubic-small": cubic_small, "quartic": quartic}


def family_corpus(name: str):
    if name not in CORPORA:
        raise ValueError(f"unknown corpus {name!r}; expected one of {', '.join(CORPORA)}")
    return CORPORA[name]()
