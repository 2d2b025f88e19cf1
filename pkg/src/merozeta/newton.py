"""Newton diagrams, their coordinate restrictions, faces, and the sets E_I."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from merozeta import _backend as kernel
from merozeta.lattice import LatticePolytope, convex_hull, minkowski_sum, mixed_volume_profile
from merozeta.parser import GermSupport


@dataclass(frozen=True)
class NewtonDiagram:
    """Newton diagram of a germ, determined by its exponent support.

    The diagram is the union of compact faces of ``conv(support) + R_+^n``;
    every query here goes through the support and a covector that is
    strictly positive on the relevant coordinates, which only ever sees
    compact faces.
    """

    support: GermSupport

    @classmethod
    def of(cls, points: Iterable[Sequence[int]]) -> NewtonDiagram:
        return cls(GermSupport.of(points))

    @property
    def ambient_dim(self) -> int:
        return self.support.ambient_dim

    @property
    def points(self) -> tuple[tuple[int, ...], ...]:
        return self.support.points

    @cached_property
    def hull(self) -> LatticePolytope:
        return convex_hull(self.points, self.ambient_dim)


@dataclass(frozen=True)
class NewtonPair:
    gamma1: NewtonDiagram
    gamma2: NewtonDiagram

    def __post_init__(self):
        if self.gamma1.ambient_dim != self.gamma2.ambient_dim:
            raise ValueError("numerator and denominator live in different dimensions")

    @classmethod
    def of(cls, num: Iterable[Sequence[int]], den: Iterable[Sequence[int]]) -> NewtonPair:
        return cls(NewtonDiagram.of(num), NewtonDiagram.of(den))

    @property
    def ambient_dim(self) -> int:
        return self.gamma1.ambient_dim

    def swapped(self) -> NewtonPair:
        return NewtonPair(self.gamma2, self.gamma1)


@dataclass(frozen=True)
class CoordinateSubset:
    indices: tuple[int, ...]

    def __post_init__(self):
        if not self.indices:
            raise ValueError("coordinate subset must be non-empty")
        if list(self.indices) != sorted(set(self.indices)):
            raise ValueError(f"indices must be strictly increasing: {self.indices}")

    @property
    def l(self) -> int:  # noqa: E743
        return len(self.indices)

    def check(self, ambient_dim: int) -> None:
        if self.indices[0] < 0 or self.indices[-1] >= ambient_dim:
            raise ValueError(f"{self.indices} is not a subset of 0..{ambient_dim - 1}")


def coordinate_subsets(ambient_dim: int, l: int) -> list[CoordinateSubset]:  # noqa: E741
    return [CoordinateSubset(c) for c in combinations(range(ambient_dim), l)]


def as_subset(I) -> CoordinateSubset:  # noqa: E741
    return I if isinstance(I, CoordinateSubset) else CoordinateSubset(tuple(sorted(I)))


@dataclass(frozen=True)
class EssentialCovector:
    """One element of E_I with the data needed by the zeta formula.

    ``a`` is given in ambient coordinates (zero off ``subset``);
    ``delta1``/``delta2`` live in the coordinates of ``L_I``.
    """

    subset: CoordinateSubset
    a: tuple[int, ...]
    m1: int
    m2: int
    delta1: LatticePolytope
    delta2: LatticePolytope
    v_a: Fraction

    @property
    def local_a(self) -> tuple[int, ...]:
        return tuple(self.a[i] for i in self.subset.indices)


def restrict(d: NewtonDiagram, I) -> NewtonDiagram | None:  # noqa: E741
    """``Γ ∩ L_I`` re-indexed to the coordinates of ``I``; None when empty."""
    I = as_subset(I)  # noqa: E741
    I.check(d.ambient_dim)
    keep = set(I.indices)
    pts = [
        tuple(p[i] for i in I.indices)
        for p in d.points
        if all(x == 0 for j, x in enumerate(p) if j not in keep)
    ]
    if not pts:
        return None
    return NewtonDiagram(GermSupport.of(pts, I.l))


def _check_covector(a: Sequence[int], dim: int) -> None:
    if len(a) != dim:
        raise ValueError(f"covector {tuple(a)} does not match dimension {dim}")
    if any(x < 0 for x in a):
        raise ValueError(f"covector {tuple(a)} has negative entries")


def support_min(d: NewtonDiagram, a: Sequence[int]) -> int:
    _check_covector(a, d.ambient_dim)
    return min(kernel.dot(a, p) for p in d.points)


def face(d: NewtonDiagram, a: Sequence[int]) -> LatticePolytope:
    m = support_min(d, a)
    return convex_hull([p for p in d.points if kernel.dot(a, p) == m], d.ambient_dim)


def minimal_points(points: Iterable[Sequence[int]]) -> list[tuple[int, ...]]:
    """Drop points that dominate another point coordinatewise.

    Dominated points lie in ``q + R_+^n`` for some other support point and
    never touch a compact face of the Newton polyhedron.
    """
    pts = sorted({tuple(p) for p in points}, key=sum)
    out: list[tuple[int, ...]] = []
    for p in pts:
        if not any(all(x <= y for x, y in zip(q, p)) for q in out):
            out.append(p)
    return out


def compact_facets(points: Iterable[Sequence[int]], dim: int) -> list[tuple[tuple[int, ...], int]]:
    """Compact facets of ``conv(points) + R_+^dim`` as ``(normal, min)`` pairs.

    Normals are primitive with all entries strictly positive; ``min`` is
    the value of ``<normal, x>`` on the facet.
    """
    pts = minimal_points(points)
    if dim == 1:
        return [((1,), pts[0][0])]
    units = [tuple(int(i == j) for j in range(dim)) for i in range(dim)]
    out = []
    for a, b in kernel.polyhedron_facets(pts, units):
        if all(x > 0 for x in a):
            out.append((a, -b))
    return sorted(out)


def essential_covectors(pair: NewtonPair, I) -> list[EssentialCovector]:  # noqa: E741
    """The set E_I, sorted lexicographically by covector.

    E_I consists of the strictly positive primitive inner normals of the
    compact facets of ``conv(S1 + S2) + R_+^l`` where ``S1, S2`` are the
    restricted supports: for such a normal the face of the sum is
    ``Δ1 + Δ2`` and it has dimension ``l - 1``.
    """
    I = as_subset(I)  # noqa: E741
    r1, r2 = restrict(pair.gamma1, I), restrict(pair.gamma2, I)
    if r1 is None or r2 is None:
        raise ValueError(f"a restricted diagram is empty on {I.indices}")
    l = I.l  # noqa: E741
    sums = [tuple(x + y for x, y in zip(p, q)) for p in r1.points for q in r2.points]
    out = []
    for a, _ in compact_facets(sums, l):
        d1, d2 = face(r1, a), face(r2, a)
        if minkowski_sum(d1, d2).affine_dim != l - 1:
            raise AssertionError(f"facet normal {a} does not cut an (l-1)-dimensional face")
        ambient = [0] * pair.ambient_dim
        for i, x in zip(I.indices, a):
            ambient[i] = x
        v_a = sum(mixed_volume_profile(d1, d2, l - 1), Fraction(0))
        out.append(
            EssentialCovector(
                subset=I,
                a=tuple(ambient),
                m1=support_min(r1, a),
                m2=support_min(r2, a),
                delta1=d1,
                delta2=d2,
                v_a=v_a,
            )
        )
    return out
