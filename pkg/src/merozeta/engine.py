"""Zeta-functions of the 0- and ∞-monodromy of a meromorphic germ P/Q.

Four routes, all producing :class:`ZetaPair` values:

* :func:`zeta_newton_pair` -- from the Newton diagrams of P and Q
  (assumes P/Q is non-degenerate with respect to its Newton pair; this
  is not checked),
* :func:`zeta_power_denominator` -- the reduced formula for ``P / z_axis^d``,
* :func:`zeta_acampo` -- from the strata ``S_{k,l}`` of a resolution,
* :func:`zeta_partial_resolution` -- from local zeta-functions on the
  strata of a partial resolution.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from math import factorial
from typing import Iterable

from merozeta import _backend as kernel
from merozeta.lattice import convex_hull, lattice_volume
from merozeta.newton import (
    CoordinateSubset,
    NewtonDiagram,
    NewtonPair,
    as_subset,
    compact_facets,
    coordinate_subsets,
    essential_covectors,
    restrict,
)
from merozeta.zeta import ZetaFactorization, cyclotomic_factor, one, product

NONDEGENERACY = "newton-nondegenerate"


class IntegralityError(ArithmeticError):
    """A multiplicity (l-1)!·V came out fractional; indicates a bug."""


class RouteMismatchError(RuntimeError):
    """Two routes that must agree produced different zeta-functions."""


class Side(enum.Enum):
    ZERO = "0"
    INFINITY = "inf"


@dataclass(frozen=True)
class ResolutionStratum:
    k: int
    l: int  # noqa: E741
    chi: int

    def __post_init__(self):
        if self.k < 0 or self.l < 0:
            raise ValueError(f"multiplicities must be non-negative: k={self.k}, l={self.l}")


@dataclass(frozen=True)
class LocalZetaStratum:
    zeta0: ZetaFactorization
    zeta_inf: ZetaFactorization
    chi: int


@dataclass(frozen=True)
class ZetaPair:
    zeta0: ZetaFactorization
    zeta_inf: ZetaFactorization

    def side(self, side: Side) -> ZetaFactorization:
        return self.zeta0 if side is Side.ZERO else self.zeta_inf

    def swapped(self) -> ZetaPair:
        return ZetaPair(self.zeta_inf, self.zeta0)


@dataclass(frozen=True)
class TraceRow:
    """One audited covector: ``a``, the two minima, ``(l-1)!·V_a`` and its side."""

    subset: tuple[int, ...]
    a: tuple[int, ...]
    m1: int
    m2: int
    multiplicity: int
    side: Side | None

    def to_json(self) -> dict:
        return {
            "subset": list(self.subset),
            "a": list(self.a),
            "m1": self.m1,
            "m2": self.m2,
            "multiplicity": self.multiplicity,
            "side": None if self.side is None else self.side.value,
        }


def _integral(value: Fraction, what: str) -> int:
    if value.denominator != 1:
        raise IntegralityError(f"{what} = {value} is not an integer")
    if value < 0:
        raise IntegralityError(f"{what} = {value} is negative")
    return value.numerator


def _side_of(m1: int, m2: int) -> Side | None:
    if m1 > m2:
        return Side.ZERO
    if m1 < m2:
        return Side.INFINITY
    return None


def _factor(side: Side, m1: int, m2: int, multiplicity: int) -> ZetaFactorization:
    if _side_of(m1, m2) is not side:
        return one()
    return cyclotomic_factor(abs(m1 - m2), multiplicity)


def zeta_subset(pair: NewtonPair, I, side: Side, trace: list | None = None) -> ZetaFactorization:  # noqa: E741
    """``ζ_I`` for one coordinate subset; 1 if either restriction is empty."""
    I = as_subset(I)  # noqa: E741
    I.check(pair.ambient_dim)
    if restrict(pair.gamma1, I) is None or restrict(pair.gamma2, I) is None:
        return one()
    scale = factorial(I.l - 1)
    out = one()
    for cov in essential_covectors(pair, I):
        mult = _integral(scale * cov.v_a, f"(l-1)!·V_a for a={cov.a}")
        if trace is not None:
            trace.append(TraceRow(I.indices, cov.a, cov.m1, cov.m2, mult, _side_of(cov.m1, cov.m2)))
        out = out * _factor(side, cov.m1, cov.m2, mult)
    return out


def zeta_level(pair: NewtonPair, l: int, side: Side, trace: list | None = None) -> ZetaFactorization:  # noqa: E741
    if not 1 <= l <= pair.ambient_dim:
        raise ValueError(f"level {l} outside 1..{pair.ambient_dim}")
    return product(zeta_subset(pair, I, side, trace) for I in coordinate_subsets(pair.ambient_dim, l))


def _alternate(levels: Iterable[ZetaFactorization]) -> ZetaFactorization:
    return product(z ** ((-1) ** i) for i, z in enumerate(levels))


def zeta_newton_pair(pair: NewtonPair, trace: list | None = None) -> ZetaPair:
    """``ζ_Λ = prod_l ζ_l^{(-1)^{l-1}}`` for both sides.

    Both sides share one pass over the essential covectors; ``trace``
    (if given) collects a :class:`TraceRow` per covector.
    """
    n1 = pair.ambient_dim
    zero_levels, inf_levels = [], []
    for l in range(1, n1 + 1):  # noqa: E741
        z0, zi = one(), one()
        for I in coordinate_subsets(n1, l):  # noqa: E741
            rows: list[TraceRow] = []
            zeta_subset(pair, I, Side.ZERO, rows)
            for row in rows:
                z0 = z0 * _factor(Side.ZERO, row.m1, row.m2, row.multiplicity)
                zi = zi * _factor(Side.INFINITY, row.m1, row.m2, row.multiplicity)
            if trace is not None:
                trace.extend(rows)
        zero_levels.append(z0)
        inf_levels.append(zi)
    return ZetaPair(_alternate(zero_levels), _alternate(inf_levels))


def zeta_power_denominator(gamma: NewtonDiagram, d: int, axis: int = 0) -> ZetaPair:
    """Zeta-functions of ``P / z_axis^d`` from the Newton diagram of ``P``.

    For each subset ``I`` of the other coordinates with ``|I| = l - 1``,
    every compact ``(l-1)``-face ``γ`` of ``Γ ∩ L_{I ∪ {axis}}`` with
    primitive normal ``a`` and value ``m`` contributes
    ``(1 - t^{|m - d·a_axis|})^{(l-1)!·V(γ)}`` to the side picked by the
    sign of ``m - d·a_axis``.
    """
    if d < 1:
        raise ValueError("degree must be positive")
    n1 = gamma.ambient_dim
    if not 0 <= axis < n1:
        raise ValueError(f"axis {axis} outside 0..{n1 - 1}")
    others = [i for i in range(n1) if i != axis]
    zero_levels, inf_levels = [], []
    for l in range(1, n1 + 1):  # noqa: E741
        z0, zi = one(), one()
        scale = factorial(l - 1)
        for extra in combinations(others, l - 1):
            J = CoordinateSubset(tuple(sorted(extra + (axis,))))
            restricted = restrict(gamma, J)
            if restricted is None:
                continue
            pos = J.indices.index(axis)
            for a, m in compact_facets(restricted.points, l):
                face_pts = [p for p in restricted.points if kernel.dot(a, p) == m]
                vol = lattice_volume(convex_hull(face_pts, l), l - 1)
                mult = _integral(scale * vol, f"(l-1)!·V(face) for a={a}")
                target = d * a[pos]
                z0 = z0 * _factor(Side.ZERO, m, target, mult)
                zi = zi * _factor(Side.INFINITY, m, target, mult)
        zero_levels.append(z0)
        inf_levels.append(zi)
    return ZetaPair(_alternate(zero_levels), _alternate(inf_levels))


def power_denominator_pair(gamma: NewtonDiagram, d: int, axis: int = 0) -> NewtonPair:
    """The Newton pair of ``P / z_axis^d``."""
    point = tuple(d if i == axis else 0 for i in range(gamma.ambient_dim))
    return NewtonPair(gamma, NewtonDiagram.of([point]))


def zeta_power_denominator_checked(gamma: NewtonDiagram, d: int, axis: int = 0) -> ZetaPair:
    """Run both the reduced and the general route; raise if they differ."""
    reduced = zeta_power_denominator(gamma, d, axis)
    general = zeta_newton_pair(power_denominator_pair(gamma, d, axis))
    if reduced != general:
        raise RouteMismatchError(
            f"reduced route gave ({reduced.zeta0}, {reduced.zeta_inf}), "
            f"general route gave ({general.zeta0}, {general.zeta_inf})"
        )
    return reduced


def zeta_acampo(strata: Iterable[ResolutionStratum], side: Side) -> ZetaFactorization:
    """Product of ``(1 - t^{|k-l|})^{χ}`` over strata on the given side."""
    out = one()
    for s in strata:
        out = out * _factor(side, s.k, s.l, s.chi)
    return out


def zeta_acampo_pair(strata: Iterable[ResolutionStratum]) -> ZetaPair:
    strata = list(strata)
    return ZetaPair(zeta_acampo(strata, Side.ZERO), zeta_acampo(strata, Side.INFINITY))


def zeta_partial_resolution(strata: Iterable[LocalZetaStratum]) -> ZetaPair:
    strata = list(strata)
    return ZetaPair(
        product(s.zeta0**s.chi for s in strata),
        product(s.zeta_inf**s.chi for s in strata),
    )
