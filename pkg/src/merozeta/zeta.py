"""Factored zeta-functions ``prod_m (1 - t^m)^{e_m}`` with integer ``e_m``."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


@dataclass(frozen=True)
class ZetaFactorization:
    """Immutable canonical factorization; ``terms`` is sorted by ``m``.

    Zero multiplicities are never stored, so equality of values is
    equality of the ``terms`` tuples.
    """

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_factors(cls, factors: Mapping[int, int] | Iterable[tuple[int, int]]) -> ZetaFactorization:
        items = factors.items() if isinstance(factors, Mapping) else factors
        acc: dict[int, int] = {}
        for m, e in items:
            m, e = int(m), int(e)
            if m < 1:
                raise ValueError(f"factor (1 - t^{m}) needs m >= 1")
            acc[m] = acc.get(m, 0) + e
        return cls(tuple(sorted((m, e) for m, e in acc.items() if e)))

    @property
    def factors(self) -> dict[int, int]:
        return dict(self.terms)

    def is_one(self) -> bool:
        return not self.terms

    def __mul__(self, other: ZetaFactorization) -> ZetaFactorization:
        if not isinstance(other, ZetaFactorization):
            return NotImplemented
        return ZetaFactorization.from_factors(self.terms + other.terms)

    def __pow__(self, k: int) -> ZetaFactorization:
        return ZetaFactorization.from_factors((m, e * k) for m, e in self.terms)

    def __truediv__(self, other: ZetaFactorization) -> ZetaFactorization:
        return self * other ** -1

    def __str__(self) -> str:
        if not self.terms:
            return "1"
        parts = []
        for m, e in self.terms:
            base = "(1-t)" if m == 1 else f"(1-t^{m})"
            parts.append(base if e == 1 else f"{base}^{e}")
        return "".join(parts)

    def to_json(self) -> dict:
        return {"factors": [{"m": m, "e": e} for m, e in self.terms]}

    @classmethod
    def from_json(cls, data: Mapping) -> ZetaFactorization:
        if not isinstance(data, Mapping) or not isinstance(data.get("factors"), list):
            raise ValueError('zeta JSON must look like {"factors": [{"m": int, "e": int}, ...]}')
        items = []
        for entry in data["factors"]:
            if not isinstance(entry, Mapping):
                raise ValueError(f"bad factor entry {entry!r}")
            m, e = entry.get("m"), entry.get("e")
            if not (_is_int(m) and _is_int(e)):
                raise ValueError(f"factor entry needs integer 'm' and 'e': {entry!r}")
            items.append((m, e))
        return cls.from_factors(items)

    def expand_series(self, order: int) -> list[int]:
        """Taylor coefficients at ``t = 0`` up to ``t^order`` inclusive."""
        return expand_series(self, order)


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def one() -> ZetaFactorization:
    return ZetaFactorization()


def cyclotomic_factor(m: int, e: int) -> ZetaFactorization:
    if m < 1:
        raise ValueError(f"factor (1 - t^{m}) needs m >= 1")
    return ZetaFactorization.from_factors({m: e})


def mul(a: ZetaFactorization, b: ZetaFactorization) -> ZetaFactorization:
    return a * b


def pow(a: ZetaFactorization, k: int) -> ZetaFactorization:  # noqa: A001
    return a**k


def product(values: Iterable[ZetaFactorization]) -> ZetaFactorization:
    out = one()
    for v in values:
        out = out * v
    return out


def expand_series(z: ZetaFactorization, order: int) -> list[int]:
    if order < 0:
        raise ValueError("order must be non-negative")
    coeffs = [1] + [0] * order
    for m, e in z.terms:
        for _ in range(abs(e)):
            if e > 0:
                # multiply by (1 - t^m), high degrees first
                for i in range(order, m - 1, -1):
                    coeffs[i] -= coeffs[i - m]
            else:
                # divide by (1 - t^m): running sums with stride m
                for i in range(m, order + 1):
                    coeffs[i] += coeffs[i - m]
    return coeffs
