# distutils: language = c++
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled kernels; the twins of _kernels_py and _oracle_py with
identical semantics.  Pairing inputs that fit machine words take a C fast
path, anything larger falls back to exact Python integers, so results
match the pure modules bit for bit at every size."""

from cython.operator cimport dereference
from libc.math cimport sqrt
from libcpp.unordered_map cimport unordered_map
from libcpp.unordered_set cimport unordered_set
from libcpp.vector cimport vector

from math import isqrt

__all__ = [
    "jw_mul", "jw_unpair", "jw_descent", "value_scan", "pair_scan",
    "closure_min_mults", "closure_size",
]

ctypedef unsigned long long ull

# Products stay below 2**63 while p + q < 2**31, giving the fast-path guard.
DEF FAST_SUM = 0x7FFFFFFF


cdef unsigned long long _mul_c(unsigned long long p, unsigned long long q) noexcept:
    cdef unsigned long long s = p + q
    if s > 1:
        return s * (s + 1) // 2 + q
    if p == 0:
        return 1 if q == 0 else 2
    return 0


cdef unsigned long long _isqrt_c(unsigned long long x) noexcept:
    # float sqrt as a first guess, then exact fixup
    cdef unsigned long long r = <unsigned long long>sqrt(<double>x)
    while r * r > x:
        r -= 1
    while (r + 1) * (r + 1) <= x:
        r += 1
    return r


cdef void _unpair_c(unsigned long long n, unsigned long long *p, unsigned long long *q) noexcept:
    cdef unsigned long long d, t
    if n < 3:
        if n == 0:
            p[0] = 1; q[0] = 0
        elif n == 1:
            p[0] = 0; q[0] = 0
        else:
            p[0] = 0; q[0] = 1
        return
    d = (_isqrt_c(8 * n + 1) - 1) // 2
    t = d * (d + 1) // 2
    if t > n:
        d -= 1
        t = d * (d + 1) // 2
    elif (d + 1) * (d + 2) // 2 <= n:
        d += 1
        t = d * (d + 1) // 2
    q[0] = n - t
    p[0] = d - q[0]


def jw_mul(p, q):
    """Table entry in row p, column q."""
    if 0 <= p <= FAST_SUM and 0 <= q <= FAST_SUM and p + q <= FAST_SUM:
        return _mul_c(p, q)
    if p + q > 1:
        s = p + q
        return s * (s + 1) // 2 + q
    if p == 0:
        return 1 if q == 0 else 2
    return 0


def jw_unpair(n):
    """Row and column of the unique cell containing n; inverse of jw_mul."""
    # fast path needs 8n+1 and the sqrt fixups to stay inside 64 bits
    cdef unsigned long long cp, cq
    if 0 <= n <= <unsigned long long>0x07FFFFFFFFFFFFFF:
        _unpair_c(n, &cp, &cq)
        return cp, cq
    if n < 3:
        return ((1, 0), (0, 0), (0, 1))[n]
    d = (isqrt(8 * n + 1) - 1) // 2
    if d * (d + 1) // 2 > n:
        d -= 1
    elif (d + 1) * (d + 2) // 2 <= n:
        d += 1
    q = n - d * (d + 1) // 2
    return d - q, q


def jw_descent(n):
    """Iterated left projections from n down to 0 inclusive."""
    out = [n]
    while n != 0:
        n = jw_unpair(n)[0]
        out.append(n)
    return out


def value_scan(bound):
    """For every n <= bound check jw_mul(jw_unpair(n)) == n and, for n >= 1,
    that both components are strictly below n.  Returns the number of values
    checked and the failures as (kind, witness) pairs."""
    cdef unsigned long long n, ub, p, q
    failures = []
    if 0 <= bound <= FAST_SUM:
        ub = bound
        for n in range(ub + 1):
            _unpair_c(n, &p, &q)
            if _mul_c(p, q) != n:
                failures.append(("roundtrip", n))
            if n >= 1 and not (p < n and q < n):
                failures.append(("regressive", n))
        return bound + 1, failures
    from . import _kernels_py
    return _kernels_py.value_scan(bound)


def pair_scan(bound):
    """For every p, q with p + q <= bound check jw_unpair(jw_mul(p, q)) ==
    (p, q).  Returns the number of pairs checked and the failures."""
    cdef unsigned long long s, p, q, rp, rq, ub
    cdef unsigned long long checked = 0
    failures = []
    if 0 <= bound <= 1000000:
        ub = bound
        for s in range(ub + 1):
            for p in range(s + 1):
                q = s - p
                checked += 1
                _unpair_c(_mul_c(p, q), &rp, &rq)
                if rp != p or rq != q:
                    failures.append(("pair_roundtrip", p, q))
        return checked, failures
    from . import _kernels_py
    return _kernels_py.pair_scan(bound)


# ---------------------------------------------------------------------------
# Equational-closure oracle over hash-consed terms.
#
# Nodes live in an arena: tag 0 is a variable (a = variable id), tags 1/2
# are the projections (a = argument), tag 3 is the product (a, b).  The
# intern key packs (a, b, tag) into 64 bits, so ids stay below 2**31.

cdef class _ClosureArena:
    cdef vector[int] tag
    cdef vector[int] ca
    cdef vector[int] cb
    cdef vector[int] size
    cdef vector[int] mults
    cdef unordered_map[ull, int] interned
    cdef int dollar

    cdef int intern(self, int tag, int a, int b):
        cdef ull key = (<ull>a << 33) | (<ull>b << 2) | <ull>tag
        cdef unordered_map[ull, int].iterator it = self.interned.find(key)
        if it != self.interned.end():
            return dereference(it).second
        cdef int idx = <int>self.tag.size()
        self.tag.push_back(tag)
        self.ca.push_back(a)
        self.cb.push_back(b)
        if tag == 0:
            self.size.push_back(1)
            self.mults.push_back(0)
        elif tag == 3:
            self.size.push_back(1 + self.size[a] + self.size[b])
            self.mults.push_back(1 + self.mults[a] + self.mults[b])
        else:
            self.size.push_back(1 + self.size[a])
            self.mults.push_back(self.mults[a])
        self.interned[key] = idx
        return idx

    cdef void rewrites(self, int u, int limit, vector[int]* out):
        # every one-step rewrite of u whose result size fits in limit
        cdef int t = self.tag[u]
        cdef int a = self.ca[u]
        cdef int b = self.cb[u]
        cdef int su = self.size[u]
        cdef vector[int] sub
        cdef size_t i
        if t == 1 and self.tag[a] == 3:
            out.push_back(self.ca[a])
        elif t == 2 and self.tag[a] == 3:
            out.push_back(self.cb[a])
        elif t == 3 and self.tag[a] == 1 and self.tag[b] == 2 and self.ca[a] == self.ca[b]:
            out.push_back(self.ca[a])
        if 2 * su + 3 <= limit:
            out.push_back(self.intern(3, self.intern(1, u, 0), self.intern(2, u, 0)))
        if su + 3 <= limit:
            out.push_back(self.intern(1, self.intern(3, u, self.dollar), 0))
            out.push_back(self.intern(2, self.intern(3, self.dollar, u), 0))
        if t == 3:
            self.rewrites(a, limit - 1 - self.size[b], &sub)
            for i in range(sub.size()):
                out.push_back(self.intern(3, sub[i], b))
            sub.clear()
            self.rewrites(b, limit - 1 - self.size[a], &sub)
            for i in range(sub.size()):
                out.push_back(self.intern(3, a, sub[i]))
        elif t == 1 or t == 2:
            self.rewrites(a, limit - 1, &sub)
            for i in range(sub.size()):
                out.push_back(self.intern(t, sub[i], 0))


cdef int _convert(_ClosureArena ar, term, dict names) except -1:
    kind = term[0]
    if kind == "v":
        vid = names.setdefault(term[1], len(names))
        return ar.intern(0, vid, 0)
    if kind == "m":
        return ar.intern(3, _convert(ar, term[1], names), _convert(ar, term[2], names))
    return ar.intern(1 if kind == "l" else 2, _convert(ar, term[1], names), 0)


cdef (int, long long) _closure(term, int cap):
    cdef _ClosureArena ar = _ClosureArena()
    names = {}
    cdef int start = _convert(ar, term, names)
    ar.dollar = ar.intern(0, names.setdefault("$", len(names)), 0)
    if ar.size[start] > cap:
        raise ValueError("term does not fit the size cap")
    cdef unordered_set[int] seen
    cdef vector[int] queue
    cdef vector[int] out
    cdef size_t qi = 0, i
    cdef int best = ar.mults[start]
    cdef int u, v
    seen.insert(start)
    queue.push_back(start)
    while qi < queue.size():
        u = queue[qi]
        qi += 1
        out.clear()
        ar.rewrites(u, cap, &out)
        for i in range(out.size()):
            v = out[i]
            if seen.count(v):
                continue
            seen.insert(v)
            queue.push_back(v)
            if ar.mults[v] < best:
                best = ar.mults[v]
    return best, <long long>seen.size()


def closure_min_mults(term, cap):
    """Minimum product count over the capped closure of a tuple term."""
    return _closure(term, cap)[0]


def closure_size(term, cap):
    """Number of terms in the capped closure (diagnostics and tests)."""
    return _closure(term, cap)[1]
