"""Pure-Python implementations of the hot kernels.

Every function here has a twin in ``_kernel.pyx`` with the same signature and
bit-identical output; ``vtorb.kernels`` picks one at import time.

Permutations are tuples of images: ``p[i]`` is the image of point ``i``.
Products act left to right, ``compose(p, q)[i] == q[p[i]]``.

A cycle record is the tuple
``(order, longest, shortest, count, regular, fixed, lengths)`` where
``regular`` is the number of points on cycles of length ``order``, ``fixed``
the number of fixed points and ``lengths`` the sorted distinct cycle lengths.
"""

from __future__ import annotations

from math import gcd

BACKEND = "python"


def compose(p, q):
    return tuple([q[x] for x in p])


def invert(p):
    inv = [0] * len(p)
    for i, x in enumerate(p):
        inv[x] = i
    return tuple(inv)


def _cycle_lengths(p):
    n = len(p)
    seen = bytearray(n)
    lengths = []
    for i in range(n):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            k += 1
        lengths.append(k)
    return lengths


def _record(lengths):
    order = 1
    for k in set(lengths):
        order = order * k // gcd(order, k)
    regular = 0
    fixed = 0
    for k in lengths:
        if k == order:
            regular += k
        if k == 1:
            fixed += 1
    return (
        order,
        max(lengths, default=0),
        min(lengths, default=0),
        len(lengths),
        regular,
        fixed,
        tuple(sorted(set(lengths))),
    )


def cycle_summary(p):
    return _record(_cycle_lengths(p))


def orbit_labels(p):
    """Label each point by its cycle; cycles numbered by smallest point."""
    n = len(p)
    labels = [-1] * n
    lengths = []
    for i in range(n):
        if labels[i] >= 0:
            continue
        c = len(lengths)
        k = 0
        j = i
        while labels[j] < 0:
            labels[j] = c
            j = p[j]
            k += 1
        lengths.append(k)
    return labels, lengths


def scan(n, transversals, start, stop, with_elements=False):
    """Cycle records for elements ``start..stop-1`` of a transversal product.

    Element ``i`` has mixed-radix digits ``d_0, d_1, ...`` (level 0 fastest)
    and equals ``T[k-1][d_{k-1}] * ... * T[0][d_0]``.
    """
    k = len(transversals)
    radix = [len(t) for t in transversals]
    total = 1
    for r in radix:
        total *= r
    stop = min(stop, total)
    out = []
    if start >= stop:
        return out
    digits = []
    rem = start
    for r in radix:
        digits.append(rem % r)
        rem //= r
    ident = tuple(range(n))
    # prefix[j] = T[k-1][d] * ... * T[j][d]; prefix[k] is the identity
    prefix = [None] * (k + 1)
    prefix[k] = ident
    for j in range(k - 1, 0, -1):
        prefix[j] = compose(prefix[j + 1], transversals[j][digits[j]])
    for _ in range(start, stop):
        if k:
            u = transversals[0][digits[0]]
            a = prefix[1]
            g = tuple([u[x] for x in a])
        else:
            g = ident
        rec = _record(_cycle_lengths(g))
        if with_elements:
            rec = rec + (g,)
        out.append(rec)
        # increment mixed-radix counter
        j = 0
        while j < k:
            digits[j] += 1
            if digits[j] < radix[j]:
                break
            digits[j] = 0
            j += 1
        if j >= k:
            break
        for t in range(j, 0, -1):
            prefix[t] = compose(prefix[t + 1], transversals[t][digits[t]])
    return out


class Refiner:
    """Equitable-partition refinement for a fixed graph.

    Ordered partitions are ``(lab, starts)``: ``lab`` lists the vertices by
    position and ``starts`` is the sorted list of cell start positions.
    Refinement is label-invariant: relabelling the graph and the input
    partition by an isomorphism relabels the output and leaves the trace
    unchanged.
    """

    def __init__(self, adj):
        self.adj = [list(a) for a in adj]
        self.n = len(adj)

    def refine(self, lab, starts, splitters):
        n = self.n
        adj = self.adj
        lab = list(lab)
        cellof = [0] * n
        end = [0] * (n + 1)
        bounds = list(starts) + [n]
        for c in range(len(starts)):
            s, e = bounds[c], bounds[c + 1]
            end[s] = e
            for p in range(s, e):
                cellof[lab[p]] = s
        inq = bytearray(n + 1)
        queue = []
        for w in splitters:
            if not inq[w]:
                inq[w] = 1
                queue.append(w)
        trace = []
        head = 0
        cnt = [0] * n
        ncells = len(starts)
        while head < len(queue) and ncells < n:
            w = queue[head]
            head += 1
            inq[w] = 0
            hit = []
            for p in range(w, end[w]):
                for u in adj[lab[p]]:
                    if cnt[u] == 0:
                        hit.append(u)
                    cnt[u] += 1
            touched = sorted({cellof[u] for u in hit})
            for c in touched:
                e = end[c]
                if e - c == 1:
                    continue
                members = lab[c:e]
                keys = [cnt[x] for x in members]
                lo = min(keys)
                if lo == max(keys):
                    continue
                groups = {}
                for x, key in zip(members, keys):
                    groups.setdefault(key, []).append(x)
                order = sorted(groups)
                trace.append(c)
                trace.append(len(order))
                pos = c
                for key in order:
                    grp = groups[key]
                    trace.append(key)
                    trace.append(len(grp))
                    s = pos
                    for x in grp:
                        lab[pos] = x
                        cellof[x] = s
                        pos += 1
                    end[s] = pos
                    if not inq[s]:
                        inq[s] = 1
                        queue.append(s)
                ncells += len(order) - 1
            for u in hit:
                cnt[u] = 0
        new_starts = sorted({cellof[v] for v in range(n)}) if n else []
        return lab, new_starts, tuple(trace)


def scan_indices(n, transversals, indices, with_elements=False):
    """Cycle records for the elements at the given transversal-product indices."""
    radix = [len(t) for t in transversals]
    out = []
    for idx in indices:
        digits = []
        for r in radix:
            digits.append(idx % r)
            idx //= r
        g = tuple(range(n))
        for j in range(len(radix) - 1, -1, -1):
            u = transversals[j][digits[j]]
            g = tuple([u[x] for x in g])
        rec = _record(_cycle_lengths(g))
        if with_elements:
            rec = rec + (g,)
        out.append(rec)
    return out


def _orbit_flags(adj, g, order):
    labels, sizes = orbit_labels(g)
    ratio = cor = True
    regnbr = [False] * len(sizes)
    for x, nbrs in enumerate(adj):
        cx = labels[x]
        sx = sizes[cx]
        counts = {}
        for y in nbrs:
            c = labels[y]
            if c != cx:
                counts[c] = counts.get(c, 0) + 1
        for c, k in counts.items():
            sy = sizes[c]
            if sx == order and sy == order:
                regnbr[cx] = True
            big, small = max(sx, sy), min(sx, sy)
            if big % small or big // small > 3:
                ratio = False
            elif big != small:
                if sx > sy and k != 1:
                    ratio = False
                if sx < sy and k != big // small:
                    ratio = False
                if sy == 3 * sx and len(counts) != 1:
                    cor = False
    adjacent = len(sizes) == 1 or all(regnbr[c] for c, sz in enumerate(sizes) if sz == order)
    return ratio, cor, adjacent


def graph_scan(n, adj, transversals, start, stop, indices=None):
    """Cycle records extended by three orbit-law flags of <g> on the graph.

    The flags are: every pair of adjacent orbits has size ratio 1, 2 or 3
    with the one-neighbour / i-neighbour counts; an orbit with a 3x larger
    neighbour orbit has no other neighbour orbit; <g> is transitive or every
    regular orbit is adjacent to another regular orbit.
    """
    if indices is None:
        recs = scan(n, transversals, start, stop, True)
    else:
        recs = scan_indices(n, transversals, indices, True)
    return [rec[:-1] + _orbit_flags(adj, rec[-1], rec[0]) for rec in recs]
