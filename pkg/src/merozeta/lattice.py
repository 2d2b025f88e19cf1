"""Exact lattice polytopes: hulls, saturated frames, volumes, mixed volumes.

Volumes are *lattice-normalised*: a polytope of affine dimension ``m`` is
measured in the integer coordinates of its own saturated direction
lattice, so a fundamental cell has volume 1 and a unimodular simplex has
volume ``1/m!``.  A single point has volume 1 in dimension 0.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations, product
from math import comb, factorial
from typing import Iterable, Sequence

from merozeta import _backend as kernel

Point = tuple[int, ...]


class DimensionError(ValueError):
    """Bodies do not fit the requested measuring dimension."""


@dataclass(frozen=True)
class AffineLatticeFrame:
    """Origin plus a row-HNF basis of the saturated direction lattice."""

    origin: Point
    basis: tuple[Point, ...]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, point: Sequence[int]) -> Point:
        diff = tuple(p - o for p, o in zip(point, self.origin))
        return kernel.lattice_coords(self.basis, diff)


@dataclass(frozen=True, eq=True)
class LatticePolytope:
    """Convex hull of integer points, stored by its (sorted) vertex set.

    Build instances with :func:`convex_hull`; the constructor trusts that
    ``vertices`` is already reduced.
    """

    ambient_dim: int
    vertices: tuple[Point, ...]

    def __post_init__(self):
        if not self.vertices:
            raise ValueError("a polytope needs at least one vertex")
        for v in self.vertices:
            if len(v) != self.ambient_dim:
                raise ValueError(f"vertex {v} does not live in dimension {self.ambient_dim}")

    @cached_property
    def frame(self) -> AffineLatticeFrame:
        return affine_frame(self)

    @property
    def affine_dim(self) -> int:
        return self.frame.dim

    def __add__(self, other: LatticePolytope) -> LatticePolytope:
        return minkowski_sum(self, other)

    def scale(self, k: int) -> LatticePolytope:
        if k < 0:
            raise ValueError("only non-negative dilations are supported")
        if k == 0:
            return LatticePolytope(self.ambient_dim, ((0,) * self.ambient_dim,))
        return LatticePolytope(self.ambient_dim, tuple(tuple(k * x for x in v) for v in self.vertices))

    def translate(self, shift: Sequence[int]) -> LatticePolytope:
        shifted = (tuple(x + s for x, s in zip(v, shift)) for v in self.vertices)
        return LatticePolytope(self.ambient_dim, tuple(sorted(shifted)))

    def volume(self, dim: int | None = None) -> Fraction:
        return lattice_volume(self, dim)


def convex_hull(points: Iterable[Sequence[int]], dim: int | None = None) -> LatticePolytope:
    pts = sorted({tuple(int(x) for x in p) for p in points})
    if not pts:
        raise ValueError("convex hull of an empty point set")
    if dim is None:
        dim = len(pts[0])
    if any(len(p) != dim for p in pts):
        raise ValueError(f"points must all have {dim} coordinates")
    if len(pts) == 1:
        return LatticePolytope(dim, tuple(pts))
    _, basis, coords = kernel.frame_coords(pts)
    if not basis:
        return LatticePolytope(dim, (pts[0],))
    keep = kernel.polytope_vertices(coords)
    return LatticePolytope(dim, tuple(pts[i] for i in keep))


def affine_frame(p: LatticePolytope | Sequence[Sequence[int]]) -> AffineLatticeFrame:
    pts = list(p.vertices) if isinstance(p, LatticePolytope) else [tuple(x) for x in p]
    origin = tuple(pts[0])
    diffs = [tuple(a - b for a, b in zip(q, origin)) for q in pts]
    basis = kernel.saturated_basis(diffs, len(origin))
    return AffineLatticeFrame(origin, tuple(tuple(b) for b in basis))


def lattice_volume(p: LatticePolytope, dim: int | None = None) -> Fraction:
    """Normalised ``dim``-volume of ``p`` (defaults to its affine dimension).

    Polytopes of smaller affine dimension have volume 0; asking for a
    dimension below the affine dimension is an error.
    """
    adim = p.affine_dim
    m = adim if dim is None else dim
    if m > adim:
        return Fraction(0)
    if m < adim:
        raise DimensionError(f"polytope has affine dimension {adim}, cannot measure in dimension {m}")
    if m == 0:
        return Fraction(1)
    coords = [p.frame.coords(v) for v in p.vertices]
    total = 0
    for simplex in kernel.pulling_triangulation(coords):
        base = coords[simplex[0]]
        edges = [[x - y for x, y in zip(coords[i], base)] for i in simplex[1:]]
        total += abs(kernel.det(edges))
    return Fraction(total, factorial(m))


def minkowski_sum(a: LatticePolytope, b: LatticePolytope) -> LatticePolytope:
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError(f"ambient dimensions differ: {a.ambient_dim} vs {b.ambient_dim}")
    sums = (tuple(x + y for x, y in zip(u, v)) for u in a.vertices for v in b.vertices)
    return convex_hull(sums, a.ambient_dim)


def minkowski_sum_all(bodies: Sequence[LatticePolytope]) -> LatticePolytope:
    total = bodies[0]
    for body in bodies[1:]:
        total = minkowski_sum(total, body)
    return total


def _check_bodies(bodies: Sequence[LatticePolytope], m: int) -> bool:
    """Validate a mixed-volume query; False means the answer is trivially 0."""
    if len(bodies) != m:
        raise DimensionError(f"mixed volume in dimension {m} needs {m} bodies, got {len(bodies)}")
    if len({b.ambient_dim for b in bodies}) > 1:
        raise DimensionError("bodies live in different ambient dimensions")
    joint = minkowski_sum_all(bodies).affine_dim
    if joint > m:
        raise DimensionError(f"bodies jointly span {joint} dimensions, more than {m}")
    return joint == m


def _solve(matrix: list[list[int]], rhs: list[Fraction]) -> list[Fraction]:
    n = len(matrix)
    a = [[Fraction(x) for x in row] + [Fraction(r)] for row, r in zip(matrix, rhs)]
    for c in range(n):
        piv = next(i for i in range(c, n) if a[i][c] != 0)
        a[c], a[piv] = a[piv], a[c]
        inv = 1 / a[c][c]
        a[c] = [x * inv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c] != 0:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    return [row[n] for row in a]


def _grouped(bodies: Sequence[LatticePolytope]) -> tuple[list[LatticePolytope], list[int]]:
    groups: list[LatticePolytope] = []
    counts: list[int] = []
    for b in bodies:
        for i, g in enumerate(groups):
            if g == b:
                counts[i] += 1
                break
        else:
            groups.append(b)
            counts.append(1)
    return groups, counts


def mixed_volume(bodies: Sequence[LatticePolytope], m: int) -> Fraction:
    """Mixed volume ``V_m(K_1, ..., K_m)`` by polynomial interpolation.

    With distinct bodies ``L_1..L_k`` occurring ``s_1..s_k`` times,
    ``vol(λ_1 L_1 + ... + λ_k L_k)`` is a homogeneous polynomial of degree
    ``m`` whose coefficient at ``λ^s`` is ``m!/s! · V(L^s)``.  Fixing
    ``λ_k = 1`` and sampling the remaining ``λ`` on the simplex grid
    ``|β| <= m`` gives a square integer system that is solved exactly.
    """
    if m == 0:
        if bodies:
            raise DimensionError("dimension 0 takes no bodies")
        return Fraction(1)
    if not _check_bodies(bodies, m):
        return Fraction(0)
    groups, counts = _grouped(bodies)
    if len(groups) == 1:
        return lattice_volume(groups[0], m)
    k = len(groups)
    exps = [e for e in product(range(m + 1), repeat=k - 1) if sum(e) <= m]
    values = []
    for beta in exps:
        parts = [g.scale(c) for g, c in zip(groups[:-1], beta) if c] + [groups[-1]]
        values.append(lattice_volume(minkowski_sum_all(parts), m))
    matrix = [[_monomial(beta, alpha) for alpha in exps] for beta in exps]
    coeffs = dict(zip(exps, _solve(matrix, values)))
    target = tuple(counts[:-1])
    weight = 1
    for s in counts:
        weight *= factorial(s)
    return coeffs[target] * weight / factorial(m)


def _monomial(point, alpha) -> int:
    out = 1
    for x, e in zip(point, alpha):
        out *= x**e
    return out


def mixed_volume_profile(a: LatticePolytope, b: LatticePolytope, m: int) -> list[Fraction]:
    """All ``V_m(a^s, b^{m-s})`` for ``s = 0..m`` from one interpolation."""
    if m == 0:
        return [Fraction(1)]
    if a.ambient_dim != b.ambient_dim:
        raise DimensionError("bodies live in different ambient dimensions")
    joint = minkowski_sum(a, b).affine_dim
    if joint > m:
        raise DimensionError(f"bodies jointly span {joint} dimensions, more than {m}")
    if joint < m:
        return [Fraction(0)] * (m + 1)
    values = [lattice_volume(minkowski_sum(a.scale(lam), b), m) for lam in range(m + 1)]
    matrix = [[lam**s for s in range(m + 1)] for lam in range(m + 1)]
    coeffs = _solve(matrix, values)
    return [c / comb(m, s) for s, c in enumerate(coeffs)]


def mixed_volume_oracle(bodies: Sequence[LatticePolytope], m: int) -> Fraction:
    """Inclusion-exclusion over subset sums; independent of the interpolation."""
    if m == 0:
        if bodies:
            raise DimensionError("dimension 0 takes no bodies")
        return Fraction(1)
    if not _check_bodies(bodies, m):
        return Fraction(0)
    total = Fraction(0)
    for size in range(1, m + 1):
        sign = (-1) ** (m - size)
        for subset in combinations(range(m), size):
            body = minkowski_sum_all([bodies[i] for i in subset])
            total += sign * lattice_volume(body, m)
    return total / factorial(m)


def primitive_covector(v: Sequence[int]) -> Point:
    """Divide by the gcd of the entries, keeping the direction."""
    return kernel.primitive(tuple(v))
