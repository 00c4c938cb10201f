"""Permutations of ``0..n-1`` and the orbit statistics of the cyclic group they generate."""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from functools import reduce
from math import gcd, lcm

from . import kernels


class Perm:
    """Permutation stored as an image tuple; ``p[i]`` is the image of ``i``.

    Products are left to right: ``(p * q)[i] == q[p[i]]``.
    """

    __slots__ = ("images", "_cycles", "_hash")

    def __init__(self, images):
        self.images = tuple(images)
        self._cycles = None
        self._hash = None

    @classmethod
    def identity(cls, n: int) -> "Perm":
        return cls(range(n))

    @classmethod
    def from_cycles(cls, n: int, cycles) -> "Perm":
        images = list(range(n))
        for cyc in cycles:
            for a, b in zip(cyc, list(cyc[1:]) + [cyc[0]]):
                images[a] = b
        p = cls(images)
        p.check()
        return p

    def check(self):
        if sorted(self.images) != list(range(len(self.images))):
            raise ValueError(f"not a permutation: {self.images}")

    @property
    def degree(self) -> int:
        return len(self.images)

    def __getitem__(self, i):
        return self.images[i]

    def __len__(self):
        return len(self.images)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self.images)
        return self._hash

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(kernels.compose(self.images, other.images))

    def __invert__(self) -> "Perm":
        return Perm(kernels.invert(self.images))

    inverse = __invert__

    def __pow__(self, e: int) -> "Perm":
        n = len(self.images)
        if e < 0:
            return (~self) ** (-e)
        result = tuple(range(n))
        base = self.images
        while e:
            if e & 1:
                result = kernels.compose(result, base)
            base = kernels.compose(base, base)
            e >>= 1
        return Perm(result)

    def __repr__(self):
        return f"Perm({self.cycle_string()})"

    def is_identity(self) -> bool:
        return all(i == x for i, x in enumerate(self.images))

    @property
    def cycles(self) -> list[tuple[int, ...]]:
        """Cycles (fixed points included), each starting at its smallest point."""
        if self._cycles is None:
            labels, lengths = kernels.orbit_labels(self.images)
            out = []
            seen = set()
            for i in range(len(self.images)):
                if labels[i] in seen:
                    continue
                seen.add(labels[i])
                cyc = [i]
                j = self.images[i]
                while j != i:
                    cyc.append(j)
                    j = self.images[j]
                out.append(tuple(cyc))
            self._cycles = out
        return self._cycles

    def order(self) -> int:
        return kernels.cycle_summary(self.images)[0]

    def cycle_string(self) -> str:
        parts = ["(" + " ".join(map(str, c)) + ")" for c in self.cycles if len(c) > 1]
        return "".join(parts) or "()"

    def to_json(self) -> dict:
        return {"images": list(self.images), "cycles": [list(c) for c in self.cycles if len(c) > 1]}


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_perm(text: str, n: int) -> Perm:
    """Parse cycle notation ``(0 1 2)(3 4)`` or a one-line image list ``1 2 0 4 3``."""
    text = text.strip()
    if text.startswith("("):
        rest = _CYCLE_RE.sub("", text).strip()
        if rest:
            raise ValueError(f"could not parse cycle notation {text!r}")
        cycles = []
        for body in _CYCLE_RE.findall(text):
            pts = [int(t) for t in re.split(r"[\s,]+", body.strip()) if t]
            if pts:
                cycles.append(pts)
        return Perm.from_cycles(n, cycles)
    images = [int(t) for t in re.split(r"[\s,\[\]]+", text) if t]
    if len(images) != n:
        raise ValueError(f"image list has {len(images)} entries, expected {n}")
    p = Perm(images)
    p.check()
    return p


@dataclass(frozen=True)
class CyclicOrbitData:
    """Orbit statistics of the cyclic group generated by one permutation."""

    order: int
    longest: int
    shortest: int
    orbit_count: int
    orbit_lengths: tuple[int, ...]
    regular_orbit_reps: tuple[int, ...]

    @property
    def regular_vertices(self) -> int:
        return self.order * len(self.regular_orbit_reps)

    def to_json(self) -> dict:
        return {
            "order": self.order,
            "longest": self.longest,
            "shortest": self.shortest,
            "orbit_count": self.orbit_count,
            "orbit_lengths": dict(sorted(Counter(self.orbit_lengths).items())),
            "regular_orbit_reps": list(self.regular_orbit_reps),
        }


def cyclic_data(g: Perm) -> CyclicOrbitData:
    cycles = g.cycles
    lengths = tuple(sorted((len(c) for c in cycles), reverse=True))
    order = reduce(lcm, lengths, 1)
    return CyclicOrbitData(
        order=order,
        longest=max(lengths, default=0),
        shortest=min(lengths, default=0),
        orbit_count=len(lengths),
        orbit_lengths=lengths,
        regular_orbit_reps=tuple(c[0] for c in cycles if len(c) == order),
    )


def min_gcd_identity_check(g: Perm) -> bool:
    """Check o(g)/l(g) == min|C_w| / gcd|C_w| over the point stabilisers C_w in <g>.

    ``|C_w| = o(g) / |w^<g>|``; both sides are compared as exact fractions
    by cross-multiplication.
    """
    data = cyclic_data(g)
    if not data.orbit_lengths:
        return True
    stab = [data.order // k for k in data.orbit_lengths]
    lhs_num, lhs_den = data.order, data.longest
    rhs_num, rhs_den = min(stab), reduce(gcd, stab)
    return lhs_num * rhs_den == rhs_num * lhs_den
