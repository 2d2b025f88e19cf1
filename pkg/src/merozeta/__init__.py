"""Monodromy zeta-functions of meromorphic germs from Newton diagrams."""

from merozeta.engine import (
    LocalZetaStratum,
    ResolutionStratum,
    Side,
    ZetaPair,
    zeta_acampo,
    zeta_newton_pair,
    zeta_partial_resolution,
    zeta_power_denominator,
)
from merozeta.newton import NewtonDiagram, NewtonPair
from merozeta.parser import GermSupport, VariableMap, parse_polynomial
from merozeta.zeta import ZetaFactorization

__version__ = "0.1.0"

__all__ = [
    "GermSupport",
    "LocalZetaStratum",
    "NewtonDiagram",
    "NewtonPair",
    "ResolutionStratum",
    "Side",
    "VariableMap",
    "ZetaFactorization",
    "ZetaPair",
    "parse_polynomial",
    "zeta_acampo",
    "zeta_newton_pair",
    "zeta_partial_resolution",
    "zeta_power_denominator",
]
