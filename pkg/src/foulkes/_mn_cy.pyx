# distutils: language = c++
# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled Murnaghan-Nakayama kernel.

Same beta-set bitmask recursion as the pure lane, with a C++ hash-map memo
and 64-bit arithmetic.  Valid for n <= MAX_N only: through there the
minimal beta-set fits in 48 bits, suffix ids stay below 8192 (so a memo
key packs into one 64-bit word) and every character value and partial sum
is far below 2^63.  Callers must dispatch larger n to the pure lane.
"""

from cython.operator cimport dereference as deref
from libcpp.unordered_map cimport unordered_map
from libcpp.vector cimport vector

cdef extern from *:
    """
    static inline int fk_popcount(unsigned long long x) {
        return __builtin_popcountll(x);
    }
    static inline int fk_ctz(unsigned long long x) {
        return __builtin_ctzll(x);
    }
    """
    int fk_popcount(unsigned long long x) nogil
    int fk_ctz(unsigned long long x) nogil

ctypedef unsigned long long u64
ctypedef long long i64

BACKEND = "cython"
MAX_N = 24

cdef u64 _SID_SPAN = 8192


cdef u64 _mask_of(tuple parts):
    cdef u64 mask = 0
    cdef int r = len(parts)
    cdef int idx
    for idx in range(r):
        mask |= (<u64>1) << (<int>parts[idx] + r - 1 - idx)
    return mask


cdef i64 _eval(u64 mask, int sid, vector[int]& first_part, vector[int]& tail_id,
               unordered_map[u64, i64]& memo):
    if sid == 0:
        return 1
    cdef u64 key = mask * _SID_SPAN + <u64>sid
    cdef unordered_map[u64, i64].iterator it = memo.find(key)
    if it != memo.end():
        return deref(it).second
    cdef int k = first_part[sid]
    cdef int nxt = tail_id[sid]
    cdef i64 total = 0
    cdef u64 cand = (mask >> k) & ~mask
    cdef u64 low, child, between
    cdef int y, x
    while cand:
        low = cand & (~cand + 1)
        cand ^= low
        y = fk_ctz(low)
        x = y + k
        child = mask ^ ((<u64>1) << x) ^ low
        while child & 1:
            child >>= 1
        between = mask & (((<u64>1) << x) - (low << 1))
        if fk_popcount(between) & 1:
            total -= _eval(child, nxt, first_part, tail_id, memo)
        else:
            total += _eval(child, nxt, first_part, tail_id, memo)
    memo[key] = total
    return total


cdef class _Chain:
    cdef dict ids
    cdef vector[int] first_part
    cdef vector[int] tail_id

    def __cinit__(self):
        self.ids = {(): 0}
        self.first_part.push_back(0)
        self.tail_id.push_back(0)

    cdef int intern(self, tuple rho) except -1:
        cached = self.ids.get(rho)
        if cached is not None:
            return <int>cached
        cdef int tail = self.intern(rho[1:])
        cdef int sid = <int>self.first_part.size()
        if sid >= <int>_SID_SPAN:
            raise OverflowError("suffix table overflow; use the pure kernel")
        self.ids[rho] = sid
        self.first_part.push_back(<int>rho[0])
        self.tail_id.push_back(tail)
        return sid


cdef _check_size(total):
    if total > MAX_N:
        raise ValueError(f"compiled kernel limited to n <= {MAX_N}, got {total}")


def value(lam, rho):
    """Single character value; lam and rho are descending tuples of equal sum."""
    _check_size(sum(lam))
    cdef _Chain chain = _Chain()
    cdef unordered_map[u64, i64] memo
    cdef int sid = chain.intern(tuple(rho))
    return _eval(_mask_of(tuple(lam)), sid, chain.first_part, chain.tail_id, memo)


def row(lam, rhos):
    """Values of one character on many cycle types, sharing a memo."""
    _check_size(sum(lam))
    cdef _Chain chain = _Chain()
    cdef unordered_map[u64, i64] memo
    cdef u64 mask = _mask_of(tuple(lam))
    out = []
    cdef int sid
    for rho in rhos:
        sid = chain.intern(tuple(rho))
        out.append(_eval(mask, sid, chain.first_part, chain.tail_id, memo))
    return out


def table(rows, cols):
    """Full matrix of character values with one shared memo."""
    if rows:
        _check_size(sum(rows[0]))
    cdef _Chain chain = _Chain()
    cdef unordered_map[u64, i64] memo
    cdef vector[int] sids
    for rho in cols:
        sids.push_back(chain.intern(tuple(rho)))
    out = []
    cdef u64 mask
    cdef size_t j
    for lam in rows:
        mask = _mask_of(tuple(lam))
        line = []
        for j in range(sids.size()):
            line.append(_eval(mask, sids[j], chain.first_part, chain.tail_id, memo))
        out.append(line)
    return out
