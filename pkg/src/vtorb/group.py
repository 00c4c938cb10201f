"""Permutation groups via stabiliser chains, and element-statistic scans.

Statistics that need every element (meo, l(G), mu(G), exponent) iterate the
transversal product exhaustively when ``|G| <= cap``; above the cap they
draw ``cap`` uniform random elements and report ``exact=False``.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from math import lcm
from typing import Iterable, Iterator, Sequence

from . import kernels
from .perm import Perm

DEFAULT_CAP = 10**6
CHUNK = 1 << 14


def default_cap() -> int:
    """Element cap from ``VTORB_CAP`` or the built-in default."""
    raw = os.environ.get("VTORB_CAP")
    if raw:
        cap = int(raw)
        if cap < 1:
            raise ValueError(f"VTORB_CAP must be >= 1, got {cap}")
        return cap
    return DEFAULT_CAP


class _Level:
    __slots__ = ("point", "gens", "trans", "inv", "order")

    def __init__(self, point: int, n: int):
        ident = tuple(range(n))
        self.point = point
        self.gens: list[tuple] = []
        self.trans = {point: ident}
        self.inv = {point: ident}
        self.order = [point]

    def add_gen(self, g: tuple):
        """Add a generator and extend the orbit; existing transversal entries are kept."""
        self.gens.append(g)
        trans = self.trans
        queue = list(self.order)
        for b in queue:
            ub = trans[b]
            for s in self.gens:
                x = s[b]
                if x not in trans:
                    u = kernels.compose(ub, s)
                    trans[x] = u
                    self.inv[x] = kernels.invert(u)
                    self.order.append(x)
                    queue.append(x)


def _moved_point(g: Sequence[int]) -> int | None:
    for i, x in enumerate(g):
        if i != x:
            return i
    return None


def _is_identity(g: Sequence[int]) -> bool:
    return all(i == x for i, x in enumerate(g))


class _Chain:
    """Mutable stabiliser chain used during construction."""

    def __init__(self, n: int, prefix: Iterable[int] = ()):
        self.n = n
        self.levels: list[_Level] = []
        for b in prefix:
            self.levels.append(_new_level(b, n))

    def strip(self, h: tuple, start: int = 0) -> tuple[tuple, int]:
        for j in range(start, len(self.levels)):
            lvl = self.levels[j]
            x = h[lvl.point]
            if x not in lvl.trans:
                return h, j
            if x != lvl.point:
                h = kernels.compose(h, lvl.inv[x])
        return h, len(self.levels)

    def insert(self, residue: tuple, j: int, low: int):
        """Add ``residue`` (fixing base points ``< j``) to levels ``low..j``."""
        if j == len(self.levels):
            self.levels.append(_new_level(_moved_point(residue), self.n))
        for l in range(low, j + 1):
            self.levels[l].add_gen(residue)

    def order(self) -> int:
        out = 1
        for lvl in self.levels:
            out *= len(lvl.trans)
        return out


def _new_level(point: int, n: int) -> _Level:
    return _Level(point, n)


def schreier_sims(n: int, gens: Iterable[Sequence[int]], prefix: Iterable[int] = ()) -> _Chain:
    """Deterministic Schreier-Sims; the base starts with ``prefix``."""
    chain = _Chain(n, prefix)
    for g in gens:
        g = tuple(g)
        if _is_identity(g):
            continue
        residue, j = chain.strip(g)
        if j == len(chain.levels) and _is_identity(residue):
            continue
        chain.insert(residue, j, 0)
        _close(chain, j)
    return chain


def _close(chain: _Chain, top: int):
    """Run Schreier generator tests from level ``top`` downwards until stable."""
    tested = [set() for _ in chain.levels]
    i = top
    while i >= 0:
        while len(tested) < len(chain.levels):
            tested.append(set())
        lvl = chain.levels[i]
        found = None
        for b in list(lvl.order):
            ub = lvl.trans[b]
            for si, s in enumerate(lvl.gens):
                if (b, si) in tested[i]:
                    continue
                x = s[b]
                h = kernels.compose(kernels.compose(ub, s), lvl.inv[x])
                if _is_identity(h):
                    tested[i].add((b, si))
                    continue
                residue, j = chain.strip(h, i + 1)
                if j == len(chain.levels) and _is_identity(residue):
                    tested[i].add((b, si))
                    continue
                found = (residue, j)
                break
            if found:
                break
        if found:
            residue, j = found
            chain.insert(residue, j, i + 1)
            i = j
        else:
            i -= 1


@dataclass(frozen=True)
class OrbitPartition:
    blocks: tuple[tuple[int, ...], ...]
    block_of: tuple[int, ...]

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]


class PermGroup:
    """A permutation group on ``0..degree-1`` with a stabiliser chain.

    Immutable once built. ``order`` is an exact integer equal to the product
    of the basic orbit lengths.
    """

    def __init__(self, degree: int, gens: Iterable = (), *, _chain: _Chain | None = None):
        self.degree = degree
        self.gens = tuple(Perm(g.images if isinstance(g, Perm) else g) for g in gens)
        for g in self.gens:
            if g.degree != degree:
                raise ValueError(f"generator of degree {g.degree} in a group of degree {degree}")
        if _chain is None:
            _chain = schreier_sims(degree, (g.images for g in self.gens))
        self._chain = _chain
        self.order = _chain.order()

    @classmethod
    def trivial(cls, degree: int) -> "PermGroup":
        return cls(degree, ())

    @classmethod
    def symmetric(cls, degree: int) -> "PermGroup":
        """Sym(degree) from a transposition and an n-cycle."""
        if degree < 2:
            return cls.trivial(degree)
        swap = list(range(degree))
        swap[0], swap[1] = 1, 0
        cycle = [(i + 1) % degree for i in range(degree)]
        return cls(degree, [swap, cycle])

    @classmethod
    def from_bsgs(cls, degree: int, base: Sequence[int], levels: Sequence[Sequence[Sequence[int]]]) -> "PermGroup":
        """Build from a known base and strong generators.

        ``levels[k]`` lists the generators that fix ``base[:k]`` but were
        found at depth ``k``; the generators of the k-th stabiliser are the
        union of ``levels[k:]``.
        """
        chain = _Chain(degree, base)
        for k in range(len(base) - 1, -1, -1):
            for g in levels[k]:
                for l in range(0, k + 1):
                    chain.levels[l].add_gen(tuple(g))
        chain.levels = [lvl for lvl in chain.levels if len(lvl.trans) > 1 or lvl.gens]
        gens = [g for lv in levels for g in lv]
        return cls(degree, gens, _chain=chain)

    def __repr__(self):
        return f"PermGroup(degree={self.degree}, order={self.order})"

    @property
    def base(self) -> list[int]:
        return [lvl.point for lvl in self._chain.levels]

    @property
    def strong_gens(self) -> list[Perm]:
        seen = {}
        for lvl in self._chain.levels:
            for g in lvl.gens:
                seen.setdefault(g, None)
        return [Perm(g) for g in seen]

    def basic_orbit_lengths(self) -> list[int]:
        return [len(lvl.trans) for lvl in self._chain.levels]

    def transversals(self) -> list[list[tuple]]:
        """Transversal images per level, each sorted by the point it reaches."""
        out = []
        for lvl in self._chain.levels:
            if len(lvl.trans) > 1:
                out.append([lvl.trans[x] for x in sorted(lvl.trans)])
        return out

    def is_trivial(self) -> bool:
        return self.order == 1

    def contains(self, g: Perm) -> bool:
        if g.degree != self.degree:
            return False
        residue, j = self._chain.strip(g.images)
        return j == len(self._chain.levels) and _is_identity(residue)

    __contains__ = contains

    def random_element(self, rng: random.Random) -> Perm:
        g = tuple(range(self.degree))
        for lvl in reversed(self._chain.levels):
            u = lvl.trans[rng.choice(lvl.order)]
            g = kernels.compose(g, u)
        return Perm(g)

    def elements(self) -> Iterator[Perm]:
        """Every element exactly once, in transversal-product order."""
        trans = self.transversals()
        for start in range(0, self.order, CHUNK):
            for rec in kernels.scan(self.degree, trans, start, start + CHUNK, True):
                yield Perm(rec[-1])

    def records(self, cap: int | None = None, *, with_elements: bool = False, seed: int = 0):
        """Cycle records of all elements (or of ``cap`` uniform samples).

        Returns ``(iterator, exact)``. Each record is
        ``(order, longest, shortest, count, regular, fixed, lengths[, images])``.
        """
        if cap is None:
            cap = default_cap()
        trans = self.transversals()
        if self.order <= cap:
            return _exhaustive(self.degree, trans, self.order, with_elements), True
        return _sampled(self.degree, trans, self.order, cap, with_elements, seed), False

    def with_base_prefix(self, prefix: Sequence[int], seed: int = 0) -> "PermGroup":
        """Same group, chain rebuilt so its base starts with ``prefix``."""
        if list(prefix) == self.base[: len(prefix)]:
            return self
        chain = _Chain(self.degree, prefix)
        for g in self.strong_gens:
            _sift_insert(chain, g.images)
        rng = random.Random(seed)
        while chain.order() < self.order:
            _sift_insert(chain, self.random_element(rng).images)
        if chain.order() != self.order:
            raise AssertionError("base change overshot the group order")
        return PermGroup(self.degree, self.gens, _chain=chain)

    def stabiliser(self, v: int) -> "PermGroup":
        """Point stabiliser; ``|G| == |G_v| * |v^G|`` holds exactly."""
        if not 0 <= v < self.degree:
            raise ValueError(f"point {v} outside 0..{self.degree - 1}")
        rebased = self.with_base_prefix([v])
        sub = _Chain(self.degree)
        sub.levels = rebased._chain.levels[1:]
        gens = {}
        for lvl in sub.levels:
            for g in lvl.gens:
                gens.setdefault(g, None)
        return PermGroup(self.degree, list(gens), _chain=sub)

    def orbit(self, v: int) -> list[int]:
        seen = {v}
        queue = [v]
        for x in queue:
            for g in self.gens:
                y = g.images[x]
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
        return sorted(seen)

    def orbits(self) -> OrbitPartition:
        return orbits(self)

    def is_transitive(self) -> bool:
        return self.degree <= 1 or len(self.orbit(0)) == self.degree


def _sift_insert(chain: _Chain, g: tuple):
    residue, j = chain.strip(g)
    if j == len(chain.levels) and _is_identity(residue):
        return
    chain.insert(residue, j, 0)


def _exhaustive(n, trans, order, with_elements):
    for start in range(0, order, CHUNK):
        yield from kernels.scan(n, trans, start, start + CHUNK, with_elements)


def _sampled(n, trans, order, count, with_elements, seed):
    rng = random.Random(seed)
    done = 0
    while done < count:
        batch = min(CHUNK, count - done)
        idx = [rng.randrange(order) for _ in range(batch)]
        yield from kernels.scan_indices(n, trans, idx, with_elements)
        done += batch


def orbits(G: PermGroup) -> OrbitPartition:
    """Orbits by union-find over generator images; blocks ordered by least point."""
    n = G.degree
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in G.gens:
        for x, y in enumerate(g.images):
            rx, ry = find(x), find(y)
            if rx != ry:
                if rx < ry:
                    parent[ry] = rx
                else:
                    parent[rx] = ry
    groups: dict[int, list[int]] = {}
    for x in range(n):
        groups.setdefault(find(x), []).append(x)
    blocks = tuple(tuple(groups[r]) for r in sorted(groups))
    block_of = [0] * n
    for i, b in enumerate(blocks):
        for x in b:
            block_of[x] = i
    return OrbitPartition(blocks, tuple(block_of))


def meo(G: PermGroup, cap: int | None = None) -> tuple[int, bool]:
    """Maximum element order."""
    recs, exact = G.records(cap)
    return max(r[0] for r in recs), exact


def ell_group(G: PermGroup, cap: int | None = None) -> tuple[int, bool]:
    """Longest orbit of any cyclic subgroup."""
    recs, exact = G.records(cap)
    return max(r[1] for r in recs), exact


def mu_group(G: PermGroup, cap: int | None = None) -> tuple[int, bool]:
    """Fewest orbits of a non-identity element."""
    if G.is_trivial():
        raise ValueError("mu(G) is undefined for the trivial group")
    recs, exact = G.records(cap)
    return min(r[3] for r in recs if r[0] > 1), exact


def exponent(G: PermGroup, cap: int | None = None) -> tuple[int, bool]:
    recs, exact = G.records(cap)
    out = 1
    for r in recs:
        out = lcm(out, r[0])
    return out, exact


def meo_local(G: PermGroup, cap: int | None = None) -> tuple[int, bool]:
    """Largest meo of a point stabiliser; one representative per orbit."""
    best = 1
    exact = True
    for block in orbits(G).blocks:
        value, ok = meo(G.stabiliser(block[0]), cap)
        best = max(best, value)
        exact = exact and ok
    return best, exact


def p_part(m: int, p: int) -> int:
    out = 1
    while m % p == 0:
        m //= p
        out *= p
    return out


def generated_group(degree: int, perms: Iterable[Perm]) -> PermGroup:
    return PermGroup(degree, list(perms))
