"""Pure-Python exact integer kernels.

Everything here works on tuples/lists of Python ints and never touches
floating point. The routines are small-dimension workhorses used by
:mod:`merozeta.lattice` and :mod:`merozeta.newton`:

* determinants (Bareiss) and ranks,
* saturated lattice bases of the span of a set of integer vectors,
* extreme rays of a pointed polyhedral cone ``{y : A y >= 0}`` by the
  double description method,
* facets, vertices and a pulling triangulation of full-dimensional
  lattice polytopes.
"""

from math import gcd


def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def content(v):
    g = 0
    for x in v:
        g = gcd(g, x)
    return g


def primitive(v):
    g = content(v)
    if g == 0:
        raise ValueError("zero vector has no primitive direction")
    return tuple(x // g for x in v)


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``x*a + y*b == g == gcd(a, b) >= 0``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def det(rows):
    """Determinant of a square integer matrix (fraction-free Bareiss)."""
    n = len(rows)
    if n == 0:
        return 1
    m = [list(r) for r in rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            mi = m[i]
            mik = mi[k]
            mk = m[k]
            for j in range(k + 1, n):
                mi[j] = (mi[j] * pivot - mik * mk[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def rank(rows):
    m = [list(r) for r in rows if any(r)]
    if not m:
        return 0
    ncols = len(m[0])
    r = 0
    for c in range(ncols):
        piv = None
        for i in range(r, len(m)):
            if m[i][c] != 0:
                piv = i
                break
        if piv is None:
            continue
        m[r], m[piv] = m[piv], m[r]
        top = m[r]
        for i in range(r + 1, len(m)):
            b = m[i][c]
            if b:
                a = top[c]
                row = [a * x - b * y for x, y in zip(m[i], top)]
                g = content(row)
                m[i] = [x // g for x in row] if g > 1 else row
        r += 1
        if r == len(m):
            break
    return r


def hyperplane_normal(diffs):
    """Generalised cross product of ``n-1`` vectors in ``Z^n``.

    The result is orthogonal to every input row; it is the zero vector
    exactly when the rows are linearly dependent.
    """
    n = len(diffs) + 1
    out = []
    for j in range(n):
        minor = [[r[c] for c in range(n) if c != j] for r in diffs]
        out.append((-1) ** j * det(minor))
    return tuple(out)


def hermite_rows(rows):
    """Row Hermite normal form of a full-row-rank integer matrix."""
    a = [list(r) for r in rows]
    m = len(a)
    if m == 0:
        return []
    n = len(a[0])
    r = 0
    for c in range(n):
        if r == m:
            break
        for i in range(r + 1, m):
            if a[i][c]:
                p, q = a[r][c], a[i][c]
                g, x, y = xgcd(p, q)
                top = [x * s + y * t for s, t in zip(a[r], a[i])]
                low = [(-q // g) * s + (p // g) * t for s, t in zip(a[r], a[i])]
                a[r], a[i] = top, low
        if a[r][c] == 0:
            continue
        if a[r][c] < 0:
            a[r] = [-x for x in a[r]]
        piv = a[r][c]
        for i in range(r):
            f = a[i][c] // piv
            if f:
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        r += 1
    if r != m:
        raise ValueError("rows are linearly dependent")
    return [tuple(row) for row in a]


def saturated_basis(vectors, n):
    """Basis of ``span_Q(vectors) ∩ Z^n`` in row Hermite normal form.

    Unimodular column operations bring the vectors to column echelon form
    ``M V = [H | 0]``; the leading rows of ``V^{-1}`` then generate the
    saturated lattice.
    """
    m = [list(v) for v in vectors if any(v)]
    vinv = [[int(i == j) for j in range(n)] for i in range(n)]
    c = 0
    for row_idx in range(len(m)):
        if c == n:
            break
        for b in range(c + 1, n):
            alpha = m[row_idx][c]
            beta = m[row_idx][b]
            if beta == 0:
                continue
            g, x, y = xgcd(alpha, beta)
            u, v = -beta // g, alpha // g
            for row in m:
                ra, rb = row[c], row[b]
                row[c], row[b] = x * ra + y * rb, u * ra + v * rb
            va, vb = vinv[c], vinv[b]
            vinv[c] = [v * s - u * t for s, t in zip(va, vb)]
            vinv[b] = [-y * s + x * t for s, t in zip(va, vb)]
        if m[row_idx][c] != 0:
            c += 1
    if c == 0:
        return []
    return hermite_rows(vinv[:c])


def lattice_coords(basis, vec):
    """Integer coordinates of ``vec`` in a row-HNF lattice basis."""
    res = list(vec)
    out = []
    for b in basis:
        p = next(i for i, x in enumerate(b) if x)
        q, r = divmod(res[p], b[p])
        if r:
            raise ValueError(f"{tuple(vec)} is not in the lattice")
        out.append(q)
        if q:
            res = [x - q * y for x, y in zip(res, b)]
    if any(res):
        raise ValueError(f"{tuple(vec)} is not in the span of the basis")
    return tuple(out)


def frame_coords(points):
    """Map integer points to integer coordinates of their affine hull.

    Returns ``(origin, basis, coords)`` where ``basis`` generates the
    saturated direction lattice and ``coords[i]`` are the coordinates of
    ``points[i] - origin``.
    """
    origin = tuple(points[0])
    n = len(origin)
    diffs = [tuple(p - o for p, o in zip(pt, origin)) for pt in points]
    basis = saturated_basis(diffs, n)
    return origin, basis, [lattice_coords(basis, d) for d in diffs]


def cone_extreme_rays(rows, dim):
    """Extreme rays of the pointed cone ``{y in Q^dim : r.y >= 0 for r in rows}``.

    Double description method with the combinatorial adjacency test;
    rows must span ``Q^dim``. Rays are returned primitive.
    """
    rows = [tuple(r) for r in rows]
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
    rays = []
    zsets = []
    all_basis = 0
    for i in basis:
        all_basis |= 1 << i
    for j in range(dim):
        col = []
        for i in range(dim):
            minor = [[b[r][c] for c in range(dim) if c != i] for r in range(dim) if r != j]
            col.append((-1) ** (i + j) * det(minor))
        if d < 0:
            col = [-x for x in col]
        rays.append(primitive(col))
        zsets.append(all_basis & ~(1 << basis[j]))

    in_basis = set(basis)
    for i, r in enumerate(rows):
        if i in in_basis:
            continue
        vals = [dot(r, ray) for ray in rays]
        pos = [k for k, v in enumerate(vals) if v > 0]
        neg = [k for k, v in enumerate(vals) if v < 0]
        if not neg:
            bit = 1 << i
            zsets = [z | bit if vals[k] == 0 else z for k, z in enumerate(zsets)]
            continue
        bit = 1 << i
        new_rays = [rays[k] for k in pos]
        new_z = [zsets[k] for k in pos]
        for k, v in enumerate(vals):
            if v == 0:
                new_rays.append(rays[k])
                new_z.append(zsets[k] | bit)
        nrays = len(rays)
        for p in pos:
            zp = zsets[p]
            for q in neg:
                common = zp & zsets[q]
                if common.bit_count() < dim - 2:
                    continue
                adjacent = True
                for k in range(nrays):
                    if k != p and k != q and zsets[k] & common == common:
                        adjacent = False
                        break
                if not adjacent:
                    continue
                vp, vq = vals[p], -vals[q]
                ray = primitive([vp * s + vq * t for s, t in zip(rays[q], rays[p])])
                new_rays.append(ray)
                new_z.append(common | bit)
        rays, zsets = new_rays, new_z
    return rays


def polyhedron_facets(points, directions=(), rays=None):
    """Facet inequalities of ``conv(points) + cone(directions)``.

    The polyhedron must be full-dimensional. Each facet is returned as
    ``(a, b)`` with ``a`` primitive and ``a.x + b >= 0`` valid, with
    equality exactly on the facet.
    """
    rows = [(1,) + tuple(p) for p in points] + [(0,) + tuple(r) for r in directions]
    dim = len(rows[0])
    facets = []
    for ray in (rays or cone_extreme_rays)(rows, dim):
        a = ray[1:]
        if not any(a):
            continue
        g = content(a)
        facets.append((tuple(x // g for x in a), ray[0] // g))
    return facets


def polytope_vertices(coords, rays=None):
    """Indices of the vertices among full-dimensional integer points."""
    m = len(coords[0])
    if m == 0:
        return [0]
    if m == 1:
        lo = min(range(len(coords)), key=lambda i: coords[i])
        hi = max(range(len(coords)), key=lambda i: coords[i])
        return sorted({lo, hi})
    facets = polyhedron_facets(coords, rays=rays)
    out = []
    for i, p in enumerate(coords):
        tight = [a for a, b in facets if dot(a, p) + b == 0]
        if len(tight) >= m and rank(tight) == m:
            out.append(i)
    return out


def _facet_vertex_sets(coords, idx, rays=None):
    """Facets of ``conv(coords[i] for i in idx)`` as tuples of indices."""
    pts = [coords[i] for i in idx]
    _, basis, local = frame_coords(pts)
    k = len(basis)
    if k == 1:
        lo = min(range(len(local)), key=lambda i: local[i])
        hi = max(range(len(local)), key=lambda i: local[i])
        return [(idx[lo],), (idx[hi],)]
    out = []
    for a, b in polyhedron_facets(local, rays=rays):
        out.append(tuple(i for i, p in zip(idx, local) if dot(a, p) + b == 0))
    return out


def pulling_triangulation(coords, idx=None, rays=None):
    """Triangulate ``conv(coords[i] for i in idx)`` without new vertices.

    ``idx`` must index the vertices of the polytope (no redundant points).
    Returns simplices as tuples of indices; each simplex has
    ``dim + 1`` entries where ``dim`` is the dimension of the polytope.
    """
    if idx is None:
        idx = list(range(len(coords)))
    idx = list(idx)
    if len(idx) == 1:
        return [(idx[0],)]
    apex = idx[0]
    out = []
    for facet in _facet_vertex_sets(coords, idx, rays):
        if apex in facet:
            continue
        for simplex in pulling_triangulation(coords, facet, rays):
            out.append((apex,) + simplex)
    return out
