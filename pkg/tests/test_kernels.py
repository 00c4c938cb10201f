from __future__ import annotations

import os
import random
import subprocess
import sys

import pytest

from vtorb import _purekernel, kernels
from vtorb.families import gp, named, prism, psi, spx
from vtorb.group import PermGroup
from vtorb.search import automorphism_group

compiled = kernels.backends().get("cython")
needs_cython = pytest.mark.skipif(compiled is None, reason="compiled kernel not built")


def test_backend_reported():
    assert kernels.BACKEND in ("python", "cython")


def test_pure_env_forces_python():
    env = dict(os.environ, VTORB_PURE="1")
    out = subprocess.run([sys.executable, "-c", "from vtorb import kernels; print(kernels.BACKEND)"],
                         capture_output=True, text=True, env=env, check=True)
    assert out.stdout.strip() == "python"


def test_cycle_summary_record():
    assert _purekernel.cycle_summary((1, 2, 0, 4, 3, 5)) == (6, 3, 1, 3, 0, 1, (1, 2, 3))
    assert _purekernel.cycle_summary((0, 1)) == (1, 1, 1, 2, 2, 2, (1,))


GRAPHS = [named("k33"), named("pappus"), prism(5), psi(6), gp(10, 3), spx(4, 1)]


@needs_cython
@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: repr(g))
def test_backends_agree_on_scans(g):
    G = automorphism_group(g)
    trans = G.transversals()
    n = g.n
    assert compiled.scan(n, trans, 0, G.order, True) == _purekernel.scan(n, trans, 0, G.order, True)
    assert compiled.scan(n, trans, 5, 17) == _purekernel.scan(n, trans, 5, 17)
    idx = random.Random(1).sample(range(G.order), min(30, G.order))
    assert compiled.scan_indices(n, trans, idx, True) == _purekernel.scan_indices(n, trans, idx, True)
    assert compiled.graph_scan(n, g.adj, trans, 0, G.order) == _purekernel.graph_scan(n, g.adj, trans, 0, G.order)
    assert compiled.graph_scan(n, g.adj, trans, 0, 0, idx) == _purekernel.graph_scan(n, g.adj, trans, 0, 0, idx)


@needs_cython
def test_backends_agree_on_primitives():
    rng = random.Random(5)
    for _ in range(200):
        n = rng.randint(1, 40)
        p = list(range(n))
        q = list(range(n))
        rng.shuffle(p)
        rng.shuffle(q)
        p, q = tuple(p), tuple(q)
        assert compiled.compose(p, q) == _purekernel.compose(p, q)
        assert compiled.invert(p) == _purekernel.invert(p)
        assert compiled.cycle_summary(p) == _purekernel.cycle_summary(p)
        assert compiled.orbit_labels(p) == _purekernel.orbit_labels(p)


@needs_cython
@pytest.mark.parametrize("g", GRAPHS, ids=lambda g: repr(g))
def test_backends_agree_on_refinement(g):
    a = compiled.Refiner(g.adj).refine(list(range(g.n)), [0, 1], [0, 1])
    b = _purekernel.Refiner(g.adj).refine(list(range(g.n)), [0, 1], [0, 1])
    assert a == b


def test_scan_matches_elements():
    G = PermGroup.symmetric(5)
    trans = G.transversals()
    recs = kernels.scan(5, trans, 0, G.order, True)
    assert {r[-1] for r in recs} == {p.images for p in G.elements()}
    assert kernels.scan_indices(5, trans, [7, 3], True) == [recs[7], recs[3]]
