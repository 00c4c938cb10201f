# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled hot kernels; twin of ``_purekernel`` with identical output."""

from libc.stdlib cimport malloc, free, realloc
from libc.string cimport memset
from math import lcm as _py_lcm

BACKEND = "cython"

ctypedef unsigned long long u64

cdef u64 _LCM_LIMIT = (<u64>1) << 62


cdef inline u64 _gcd(u64 a, u64 b) nogil:
    cdef u64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef int* _as_array(object seq, Py_ssize_t n) except NULL:
    cdef int* out = <int*>malloc((n if n > 0 else 1) * sizeof(int))
    if out == NULL:
        raise MemoryError()
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = seq[i]
    return out


cdef tuple _as_tuple(int* arr, Py_ssize_t n):
    cdef list out = [0] * n
    cdef Py_ssize_t i
    for i in range(n):
        out[i] = arr[i]
    return tuple(out)


cdef tuple _record(int* p, Py_ssize_t n, int* lens, unsigned char* seen):
    """Cycle record of ``p``; ``lens`` and ``seen`` are scratch of size n."""
    cdef Py_ssize_t i, j, m = 0
    cdef int k, longest = 0, shortest = 0, fixed = 0
    cdef u64 order = 1, g
    cdef bint overflow = False
    memset(seen, 0, n)
    for i in range(n):
        if seen[i]:
            continue
        k = 0
        j = i
        while not seen[j]:
            seen[j] = 1
            j = p[j]
            k += 1
        lens[m] = k
        m += 1
        if k > longest:
            longest = k
        if shortest == 0 or k < shortest:
            shortest = k
        if k == 1:
            fixed += 1
        if not overflow:
            g = _gcd(order, <u64>k)
            if order // g > _LCM_LIMIT // <u64>k:
                overflow = True
            else:
                order = order // g * <u64>k
    cdef object py_order
    cdef object regular
    cdef long long reg_small = 0
    if overflow:
        py_order = _py_lcm(*[lens[i] for i in range(m)])
        regular = sum([lens[i] for i in range(m) if lens[i] == py_order])
    else:
        py_order = order
        for i in range(m):
            if <u64>lens[i] == order:
                reg_small += lens[i]
        regular = reg_small
    distinct = tuple(sorted(set([lens[i] for i in range(m)])))
    return (py_order, longest, shortest, m, regular, fixed, distinct)


def compose(p, q):
    cdef Py_ssize_t n = len(p), i
    cdef int* a = _as_array(p, n)
    cdef int* b = _as_array(q, n)
    cdef list out = [0] * n
    try:
        for i in range(n):
            out[i] = b[a[i]]
    finally:
        free(a)
        free(b)
    return tuple(out)


def invert(p):
    cdef Py_ssize_t n = len(p), i
    cdef int* a = _as_array(p, n)
    cdef list out = [0] * n
    try:
        for i in range(n):
            out[a[i]] = i
    finally:
        free(a)
    return tuple(out)


def cycle_summary(p):
    cdef Py_ssize_t n = len(p)
    cdef int* a = _as_array(p, n)
    cdef int* lens = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* seen = <unsigned char*>malloc(n + 1)
    try:
        return _record(a, n, lens, seen)
    finally:
        free(a)
        free(lens)
        free(seen)


def orbit_labels(p):
    cdef Py_ssize_t n = len(p), i, j
    cdef int* a = _as_array(p, n)
    cdef list labels = [-1] * n
    cdef list lengths = []
    cdef int* lab = <int*>malloc((n + 1) * sizeof(int))
    cdef int c, k
    try:
        for i in range(n):
            lab[i] = -1
        for i in range(n):
            if lab[i] >= 0:
                continue
            c = len(lengths)
            k = 0
            j = i
            while lab[j] < 0:
                lab[j] = c
                j = a[j]
                k += 1
            lengths.append(k)
        for i in range(n):
            labels[i] = lab[i]
    finally:
        free(a)
        free(lab)
    return labels, lengths


cdef class _Product:
    """Walks the transversal product T[k-1] * ... * T[0] in mixed radix."""

    cdef Py_ssize_t n, k
    cdef int** trans
    cdef int* radix
    cdef int* digits
    cdef int* prefix
    cdef int* g
    cdef object total

    def __cinit__(self, Py_ssize_t n, transversals):
        cdef Py_ssize_t j, idx, x, r
        self.n = n
        self.k = len(transversals)
        k = self.k
        self.trans = <int**>malloc((k + 1) * sizeof(int*))
        self.radix = <int*>malloc((k + 1) * sizeof(int))
        self.digits = <int*>malloc((k + 1) * sizeof(int))
        self.prefix = <int*>malloc((k + 1) * (n + 1) * sizeof(int))
        self.g = <int*>malloc((n + 1) * sizeof(int))
        if self.trans == NULL or self.radix == NULL or self.digits == NULL or self.prefix == NULL or self.g == NULL:
            raise MemoryError()
        for j in range(k):
            self.trans[j] = NULL
        self.total = 1
        for j in range(k):
            level = transversals[j]
            r = len(level)
            self.radix[j] = r
            self.total *= r
            self.trans[j] = <int*>malloc((r * n + 1) * sizeof(int))
            if self.trans[j] == NULL:
                raise MemoryError()
            for idx in range(r):
                perm = level[idx]
                for x in range(n):
                    self.trans[j][idx * n + x] = perm[x]
        for x in range(n):
            self.prefix[k * n + x] = x

    def __dealloc__(self):
        cdef Py_ssize_t j
        if self.trans != NULL:
            for j in range(self.k):
                if self.trans[j] != NULL:
                    free(self.trans[j])
            free(self.trans)
        free(self.radix)
        free(self.digits)
        free(self.prefix)
        free(self.g)

    cdef void _rebuild(self, Py_ssize_t top):
        """Recompute prefix blocks top..1 and the current element."""
        cdef Py_ssize_t t, x, n = self.n
        cdef int* u
        cdef int* a
        cdef int* dst
        for t in range(top, 0, -1):
            u = self.trans[t] + self.digits[t] * n
            a = self.prefix + (t + 1) * n
            dst = self.prefix + t * n
            for x in range(n):
                dst[x] = u[a[x]]
        if self.k:
            u = self.trans[0] + self.digits[0] * n
            a = self.prefix + n
            for x in range(n):
                self.g[x] = u[a[x]]
        else:
            for x in range(n):
                self.g[x] = x

    cdef seek(self, object pos):
        cdef Py_ssize_t j
        for j in range(self.k):
            self.digits[j] = pos % self.radix[j]
            pos = pos // self.radix[j]
        self._rebuild(self.k - 1)

    cdef bint advance(self):
        cdef Py_ssize_t j = 0
        while j < self.k:
            self.digits[j] += 1
            if self.digits[j] < self.radix[j]:
                break
            self.digits[j] = 0
            j += 1
        if j >= self.k:
            return False
        self._rebuild(j)
        return True


cdef int _orbit_flags(int* g, Py_ssize_t n, int* off, int* tgt, long ordc, int* lab,
                      int* size, int* cy, int* cnt, unsigned char* regnbr) noexcept:
    """Bit 0: orbit-ratio law, bit 1: 3x-neighbour law, bit 2: adjacent regular orbits."""
    cdef Py_ssize_t i, j, e, t, m = 0, nd
    cdef int k, cx, c, sx, sy, big, small, ratio = 1, cor = 1, adj = 1
    for i in range(n):
        lab[i] = -1
    for i in range(n):
        if lab[i] >= 0:
            continue
        k = 0
        j = i
        while lab[j] < 0:
            lab[j] = m
            j = g[j]
            k += 1
        size[m] = k
        m += 1
    memset(regnbr, 0, m)
    for i in range(n):
        cx = lab[i]
        sx = size[cx]
        nd = 0
        for e in range(off[i], off[i + 1]):
            c = lab[tgt[e]]
            if c == cx:
                continue
            for t in range(nd):
                if cy[t] == c:
                    cnt[t] += 1
                    break
            else:
                cy[nd] = c
                cnt[nd] = 1
                nd += 1
        for t in range(nd):
            sy = size[cy[t]]
            if sx == ordc and sy == ordc:
                regnbr[cx] = 1
            big = sx if sx > sy else sy
            small = sy if sx > sy else sx
            if big % small != 0 or big // small > 3:
                ratio = 0
            elif big != small:
                if sx > sy and cnt[t] != 1:
                    ratio = 0
                if sx < sy and cnt[t] != big // small:
                    ratio = 0
                if sy == 3 * sx and nd != 1:
                    cor = 0
    if m > 1:
        for c in range(m):
            if size[c] == ordc and not regnbr[c]:
                adj = 0
    return ratio | (cor << 1) | (adj << 2)


def scan(Py_ssize_t n, transversals, start, stop, bint with_elements=False):
    cdef _Product prod = _Product(n, transversals)
    if stop > prod.total:
        stop = prod.total
    cdef list out = []
    if start >= stop:
        return out
    cdef Py_ssize_t count = stop - start, m
    cdef int* lens = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* seen = <unsigned char*>malloc(n + 1)
    try:
        prod.seek(start)
        for m in range(count):
            rec = _record(prod.g, n, lens, seen)
            if with_elements:
                rec = rec + (_as_tuple(prod.g, n),)
            out.append(rec)
            if m + 1 < count and not prod.advance():
                break
    finally:
        free(lens)
        free(seen)
    return out


def scan_indices(Py_ssize_t n, transversals, indices, bint with_elements=False):
    cdef _Product prod = _Product(n, transversals)
    cdef list out = []
    cdef int* lens = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* seen = <unsigned char*>malloc(n + 1)
    try:
        for pos in indices:
            prod.seek(pos)
            rec = _record(prod.g, n, lens, seen)
            if with_elements:
                rec = rec + (_as_tuple(prod.g, n),)
            out.append(rec)
    finally:
        free(lens)
        free(seen)
    return out


def graph_scan(Py_ssize_t n, adj, transversals, start, stop, indices=None):
    """Cycle records extended by three orbit-law flags (see ``_purekernel.graph_scan``)."""
    cdef _Product prod = _Product(n, transversals)
    cdef Py_ssize_t i, e = 0, m, count, deg, maxdeg = 0
    cdef int* off = <int*>malloc((n + 1) * sizeof(int))
    cdef int* tgt
    cdef int* lens = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* seen = <unsigned char*>malloc(n + 1)
    cdef int* lab = <int*>malloc((n + 1) * sizeof(int))
    cdef int* size = <int*>malloc((n + 1) * sizeof(int))
    cdef unsigned char* regnbr = <unsigned char*>malloc(n + 1)
    cdef int* cy
    cdef int* cnt
    cdef long ordc
    cdef int f
    cdef list out = []
    total_arcs = 0
    for a in adj:
        total_arcs += len(a)
        if len(a) > maxdeg:
            maxdeg = len(a)
    tgt = <int*>malloc((total_arcs + 1) * sizeof(int))
    cy = <int*>malloc((maxdeg + 1) * sizeof(int))
    cnt = <int*>malloc((maxdeg + 1) * sizeof(int))
    try:
        for i in range(n):
            off[i] = e
            for v in adj[i]:
                tgt[e] = v
                e += 1
        off[n] = e

        if indices is None:
            if stop > prod.total:
                stop = prod.total
            if start >= stop:
                return out
            count = stop - start
            prod.seek(start)
        else:
            indices = list(indices)
            count = len(indices)
        for m in range(count):
            if indices is not None:
                prod.seek(indices[m])
            rec = _record(prod.g, n, lens, seen)
            order = rec[0]
            ordc = order if order <= n else -1
            f = _orbit_flags(prod.g, n, off, tgt, ordc, lab, size, cy, cnt, regnbr)
            out.append(rec + (bool(f & 1), bool(f & 2), bool(f & 4)))
            if indices is None and m + 1 < count and not prod.advance():
                break
    finally:
        free(off)
        free(tgt)
        free(lens)
        free(seen)
        free(lab)
        free(size)
        free(regnbr)
        free(cy)
        free(cnt)
    return out


cdef class Refiner:
    """Equitable-partition refinement for a fixed graph (CSR adjacency)."""

    cdef int n
    cdef int* off
    cdef int* tgt
    cdef public list adj

    def __cinit__(self, adj):
        cdef int n = len(adj), v, i, m = 0
        self.n = n
        for a in adj:
            m += len(a)
        self.off = <int*>malloc((n + 1) * sizeof(int))
        self.tgt = <int*>malloc((m + 1) * sizeof(int))
        if self.off == NULL or self.tgt == NULL:
            raise MemoryError()
        i = 0
        for v in range(n):
            self.off[v] = i
            for u in adj[v]:
                self.tgt[i] = u
                i += 1
        self.off[n] = i
        self.adj = [list(a) for a in adj]

    def __dealloc__(self):
        free(self.off)
        free(self.tgt)

    def refine(self, lab_in, starts, splitters):
        cdef int n = self.n
        cdef int* lab = _as_array(lab_in, n)
        cdef int* cellof = <int*>malloc((n + 1) * sizeof(int))
        cdef int* end = <int*>malloc((n + 1) * sizeof(int))
        cdef unsigned char* inq = <unsigned char*>malloc(n + 1)
        cdef int* queue
        cdef int* cnt = <int*>malloc((n + 1) * sizeof(int))
        cdef int* hit = <int*>malloc((n + 1) * sizeof(int))
        cdef unsigned char* mark = <unsigned char*>malloc(n + 1)
        cdef int* touched = <int*>malloc((n + 1) * sizeof(int))
        cdef int* buf = <int*>malloc((n + 1) * sizeof(int))
        cdef int* keyof = <int*>malloc((n + 1) * sizeof(int))
        cdef int* bucket
        cdef Py_ssize_t ns = len(starts)
        cdef int c, s, e, p, q, w, v, u, nhit, ntouch, ti, lo, hi, key, pos, ngroups, ncells
        cdef int qhead = 0, qtail = 0, qcap = 4 * n + 16
        cdef list trace = []
        queue = <int*>malloc(qcap * sizeof(int))
        bucket = <int*>malloc((n + 2) * sizeof(int))
        try:
            memset(inq, 0, n + 1)
            memset(mark, 0, n + 1)
            for v in range(n):
                cnt[v] = 0
            for c in range(ns):
                s = starts[c]
                e = starts[c + 1] if c + 1 < ns else n
                end[s] = e
                for p in range(s, e):
                    cellof[lab[p]] = s
            for w in splitters:
                if not inq[w]:
                    inq[w] = 1
                    queue[qtail] = w
                    qtail += 1
            ncells = ns
            while qhead < qtail and ncells < n:
                w = queue[qhead]
                qhead += 1
                if qhead == qtail:
                    qhead = 0
                    qtail = 0
                inq[w] = 0
                nhit = 0
                for p in range(w, end[w]):
                    v = lab[p]
                    for q in range(self.off[v], self.off[v + 1]):
                        u = self.tgt[q]
                        if cnt[u] == 0:
                            hit[nhit] = u
                            nhit += 1
                        cnt[u] += 1
                ntouch = 0
                for q in range(nhit):
                    c = cellof[hit[q]]
                    if not mark[c]:
                        mark[c] = 1
                        touched[ntouch] = c
                        ntouch += 1
                _isort(touched, ntouch)
                for ti in range(ntouch):
                    c = touched[ti]
                    mark[c] = 0
                    e = end[c]
                    if e - c == 1:
                        continue
                    lo = cnt[lab[c]]
                    hi = lo
                    for p in range(c, e):
                        key = cnt[lab[p]]
                        if key < lo:
                            lo = key
                        if key > hi:
                            hi = key
                    if lo == hi:
                        continue
                    # stable counting sort of the cell by key
                    for key in range(hi - lo + 2):
                        bucket[key] = 0
                    for p in range(c, e):
                        bucket[cnt[lab[p]] - lo + 1] += 1
                    ngroups = 0
                    for key in range(hi - lo + 1):
                        if bucket[key + 1]:
                            ngroups += 1
                    trace.append(c)
                    trace.append(ngroups)
                    for key in range(1, hi - lo + 2):
                        bucket[key] += bucket[key - 1]
                    for p in range(c, e):
                        v = lab[p]
                        key = cnt[v] - lo
                        buf[bucket[key]] = v
                        bucket[key] += 1
                    # bucket[key] now holds the end offset of group key
                    pos = 0
                    s = c
                    for key in range(hi - lo + 1):
                        q = bucket[key] - pos
                        if q == 0:
                            continue
                        trace.append(key + lo)
                        trace.append(q)
                        s = c + pos
                        for p in range(pos, bucket[key]):
                            lab[c + p] = buf[p]
                            cellof[buf[p]] = s
                        end[s] = c + bucket[key]
                        pos = bucket[key]
                        if not inq[s]:
                            inq[s] = 1
                            if qtail >= qcap:
                                qcap *= 2
                                queue = <int*>_grow(queue, qcap)
                            queue[qtail] = s
                            qtail += 1
                    ncells += ngroups - 1
                for q in range(nhit):
                    cnt[hit[q]] = 0
            new_lab = _as_tuple(lab, n)
            memset(mark, 0, n + 1)
            new_starts = []
            for p in range(n):
                c = cellof[lab[p]]
                if not mark[c]:
                    mark[c] = 1
                    new_starts.append(c)
            return list(new_lab), new_starts, tuple(trace)
        finally:
            free(lab)
            free(cellof)
            free(end)
            free(inq)
            free(queue)
            free(cnt)
            free(hit)
            free(mark)
            free(touched)
            free(buf)
            free(keyof)
            free(bucket)


cdef void* _grow(int* arr, int cap) except NULL:
    cdef void* out = realloc(arr, cap * sizeof(int))
    if out == NULL:
        raise MemoryError()
    return out


cdef void _isort(int* a, int m) noexcept nogil:
    cdef int i, j, x
    for i in range(1, m):
        x = a[i]
        j = i - 1
        while j >= 0 and a[j] > x:
            a[j + 1] = a[j]
            j -= 1
        a[j + 1] = x
