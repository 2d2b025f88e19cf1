# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=True
"""Compiled double description kernel.

Same contract as :func:`merozeta._exact.cone_extreme_rays`. Ray
coordinates stay Python ints (exact, unbounded); only the zero-set
bookkeeping and the combinatorial adjacency test run in C over packed
64-bit words.
"""

from libc.stdint cimport uint64_t
from libc.stdlib cimport free, malloc
from libc.string cimport memcpy

from merozeta._exact import det, primitive, rank


cdef extern from *:
    int __builtin_popcountll(unsigned long long x) nogil


cdef inline int _popcount(const uint64_t* a, Py_ssize_t nw) nogil:
    cdef int total = 0
    cdef Py_ssize_t w
    for w in range(nw):
        total += __builtin_popcountll(a[w])
    return total


cdef bint _adjacent(const uint64_t* z, Py_ssize_t nrays, Py_ssize_t nw,
                    Py_ssize_t p, Py_ssize_t q, uint64_t* common, int need) nogil:
    cdef Py_ssize_t w, k
    cdef const uint64_t* zk
    cdef bint contains
    for w in range(nw):
        common[w] = z[p * nw + w] & z[q * nw + w]
    if _popcount(common, nw) < need:
        return False
    for k in range(nrays):
        if k == p or k == q:
            continue
        zk = z + k * nw
        contains = True
        for w in range(nw):
            if (zk[w] & common[w]) != common[w]:
                contains = False
                break
        if contains:
            return False
    return True


def cone_extreme_rays(rows, int dim):
    rows = [tuple(r) for r in rows]
    cdef Py_ssize_t nrows = len(rows)
    cdef Py_ssize_t nw = (nrows + 63) // 64
    if nw == 0:
        nw = 1
    basis = []
    for i, r in enumerate(rows):
        if rank([rows[j] for j in basis] + [r]) > len(basis):
            basis.append(i)
            if len(basis) == dim:
                break
    if len(basis) < dim:
        raise ValueError("constraint rows do not span; cone is not pointed")
    b = [rows[i] for i in basis]
    d = det(b)

    cdef Py_ssize_t nrays = dim
    cdef uint64_t* z = <uint64_t*> malloc(nrays * nw * sizeof(uint64_t))
    cdef uint64_t* nz = NULL
    cdef uint64_t* common = <uint64_t*> malloc(nw * sizeof(uint64_t))
    cdef Py_ssize_t j, k, w, p, q, cap, out, bi
    cdef uint64_t bitmask
    if z == NULL or common == NULL:
        free(z)
        free(common)
        raise MemoryError()
    try:
        rays = []
        for j in range(dim):
            col = []
            for i in range(dim):
                minor = [[b[r][c] for c in range(dim) if c != i] for r in range(dim) if r != j]
                col.append((-1) ** (i + j) * det(minor))
            if d < 0:
                col = [-x for x in col]
            rays.append(primitive(col))
            for w in range(nw):
                z[j * nw + w] = 0
            for bi in basis:
                if bi != basis[j]:
                    z[j * nw + bi // 64] |= (<uint64_t> 1) << (bi % 64)

        in_basis = set(basis)
        for i in range(nrows):
            if i in in_basis:
                continue
            r = rows[i]
            vals = [sum([x * y for x, y in zip(r, ray)]) for ray in rays]
            pos = [k for k in range(nrays) if vals[k] > 0]
            neg = [k for k in range(nrays) if vals[k] < 0]
            zer = [k for k in range(nrays) if vals[k] == 0]
            w = i // 64
            bitmask = (<uint64_t> 1) << (i % 64)
            if not neg:
                for k in zer:
                    z[k * nw + w] |= bitmask
                continue
            cap = len(pos) + len(zer) + len(pos) * len(neg)
            nz = <uint64_t*> malloc(cap * nw * sizeof(uint64_t))
            if nz == NULL:
                raise MemoryError()
            new_rays = []
            out = 0
            for k in pos:
                memcpy(nz + out * nw, z + k * nw, nw * sizeof(uint64_t))
                new_rays.append(rays[k])
                out += 1
            for k in zer:
                memcpy(nz + out * nw, z + k * nw, nw * sizeof(uint64_t))
                nz[out * nw + w] |= bitmask
                new_rays.append(rays[k])
                out += 1
            for p in pos:
                for q in neg:
                    if not _adjacent(z, nrays, nw, p, q, common, dim - 2):
                        continue
                    vp = vals[p]
                    vq = -vals[q]
                    new_rays.append(primitive([vp * s + vq * t for s, t in zip(rays[q], rays[p])]))
                    memcpy(nz + out * nw, common, nw * sizeof(uint64_t))
                    nz[out * nw + w] |= bitmask
                    out += 1
            free(z)
            z = nz
            nz = NULL
            rays = new_rays
            nrays = out
        return rays
    finally:
        free(z)
        free(nz)
        free(common)
