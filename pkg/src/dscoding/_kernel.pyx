# cython: language_level=3
# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled scan/decode kernels.

Same interface as `_pykernel`; `_backend` picks whichever loads. All
quantities fit a signed 64-bit word except the product h * h_inv, which is
taken in 128 bits so lengths up to 2**62 stay exact.
"""

from cpython.bytes cimport PyBytes_AS_STRING, PyBytes_FromStringAndSize
from libc.stdint cimport int64_t, uint8_t
from libc.stdlib cimport free, malloc, realloc
from libc.string cimport memset

from dscoding.errors import InvalidCode

name = "c"

ctypedef int64_t i64

cdef extern from *:
    ctypedef long long int128 "__int128"


cdef inline i64 _gcd(i64 a, i64 b) noexcept nogil:
    cdef i64 t
    while b:
        t = a % b
        a = b
        b = t
    return a


cdef inline i64 _modinv(i64 a, i64 m) noexcept nogil:
    # extended Euclid; callers guarantee 0 < a < m and gcd(a, m) == 1
    cdef i64 old_r = a, r = m
    cdef i64 old_t = 1, t = 0
    cdef i64 q, tmp
    while r != 0:
        q = old_r / r
        tmp = old_r - q * r
        old_r = r
        r = tmp
        tmp = old_t - q * t
        old_t = t
        t = tmp
    if old_t < 0:
        old_t += m
    return old_t


cdef _scan(const uint8_t[::1] w, bint prefix_only):
    cdef Py_ssize_t N = w.shape[0]
    cdef Py_ssize_t i, start
    cdef i64 n, p, h, s, hbar, t, q
    cdef uint8_t a0, a
    cdef int128 hh

    for i in range(N):
        if w[i] > 1:
            raise ValueError(
                "word bytes must be 0 or 1, found %d at index %d" % (w[i], i))

    cdef Py_ssize_t cap = 1024  # i64 slots, multiple of 4
    cdef Py_ssize_t cnt = 0
    cdef i64* buf = <i64*> malloc(cap * sizeof(i64))
    cdef i64* nbuf
    if buf == NULL:
        raise MemoryError()

    try:
        i = 0
        while i < N:
            start = i
            a0 = w[start]
            i += 1
            while i < N and w[i] == a0:
                i += 1
            if i == N:
                n = N - start
                p = 1
                h = a0
                s = 0
            else:
                q = i - start + 1
                n = q
                p = q
                if a0:
                    h = q - 1
                    s = q - 1
                else:
                    h = 1
                    s = 0
                i += 1
                while i < N:
                    a = w[i]
                    if a == w[i - p]:
                        n += 1
                        i += 1
                        continue
                    hbar = _modinv(h, p)
                    if (n + 1 - s) % p == 0:
                        if a != 0:
                            raise RuntimeError(
                                "internal: arithmetic branch out of step "
                                "with the letter")
                        t = n + 1 - hbar
                        hh = <int128> h * hbar
                        h = (t / p) * h + <i64> (hh / <int128> p)
                        s = n + 1 - p
                        p = n + 1 - t % p
                    elif (n + 1 - s + hbar) % p == 0:
                        if a != 1:
                            raise RuntimeError(
                                "internal: arithmetic branch out of step "
                                "with the letter")
                        t = n + 1 + hbar
                        hh = <int128> h * hbar
                        h = (t / p) * h - <i64> (hh / <int128> p)
                        p = n + 1 - t % p
                    else:
                        break
                    n += 1
                    i += 1
            if cnt + 4 > cap:
                cap *= 2
                nbuf = <i64*> realloc(buf, cap * sizeof(i64))
                if nbuf == NULL:
                    raise MemoryError()
                buf = nbuf
            buf[cnt] = n
            buf[cnt + 1] = p
            buf[cnt + 2] = h
            buf[cnt + 3] = s
            cnt += 4
            if prefix_only:
                break
        return PyBytes_FromStringAndSize(<char*> buf, cnt * sizeof(i64))
    finally:
        free(buf)


def scan_codes(const uint8_t[::1] w not None):
    """Greedy coding of `w` as a flat buffer of int64 quadruples."""
    return _scan(w, 0)


def scan_prefix(const uint8_t[::1] w not None):
    """Coding of the longest balanced prefix of nonempty `w`."""
    if w.shape[0] == 0:
        raise ValueError("scan_prefix requires a nonempty word")
    mv = memoryview(_scan(w, 1)).cast("q")
    return (mv[0], mv[1], mv[2], mv[3])


cdef int _validate_quad(i64 n, i64 p, i64 h, i64 s, Py_ssize_t idx) except -1:
    if n < 1:
        raise InvalidCode("factor %d: n must be >= 1, got %d" % (idx, n))
    if p < 1 or p > n:
        raise InvalidCode("factor %d: need 1 <= p <= n, got p=%d n=%d" % (idx, p, n))
    if s < 0 or s >= p:
        raise InvalidCode("factor %d: need 0 <= s < p, got s=%d p=%d" % (idx, s, p))
    if p == 1:
        if h != 0 and h != 1:
            raise InvalidCode("factor %d: p = 1 needs h in {0, 1}, got %d" % (idx, h))
    else:
        if h < 1 or h >= p:
            raise InvalidCode("factor %d: need 1 <= h < p, got h=%d p=%d" % (idx, h, p))
        if _gcd(h, p) != 1:
            raise InvalidCode("factor %d: h and p must be coprime, got h=%d p=%d" % (idx, h, p))
    return 0


def decode_codes(object flat):
    """Decode a flat buffer of int64 quadruples into one 0/1 word."""
    mv = memoryview(flat)
    if mv.format != "q":
        mv = mv.cast("q")
    cdef const i64[::1] v = mv
    cdef Py_ssize_t m = v.shape[0]
    if m % 4 != 0:
        raise InvalidCode("flat code buffer length must be a multiple of 4")

    cdef Py_ssize_t k
    cdef i64 n, p, h, s, acc, j
    cdef Py_ssize_t total = 0
    for k in range(0, m, 4):
        _validate_quad(v[k], v[k + 1], v[k + 2], v[k + 3], k // 4)
        if v[k] > 0x7FFFFFFFFFFFFFFF - total:
            raise MemoryError("decoded length overflows")
        total += v[k]

    out = PyBytes_FromStringAndSize(NULL, total)
    cdef uint8_t* o = <uint8_t*> PyBytes_AS_STRING(out)
    cdef Py_ssize_t pos = 0
    for k in range(0, m, 4):
        n = v[k]
        p = v[k + 1]
        h = v[k + 2]
        s = v[k + 3]
        if p == 1:
            memset(o + pos, <int> h, <size_t> n)
            pos += n
            continue
        acc = <i64> ((<int128> ((p - s) % p) * h) % <int128> p)
        for j in range(n):
            acc += h
            if acc >= p:
                acc -= p
                o[pos] = 1
            else:
                o[pos] = 0
            pos += 1
    return out
