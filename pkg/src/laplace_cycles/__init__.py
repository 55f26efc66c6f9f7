"""Exact projective geometry for period-four Laplace cycles of discrete
conjugate nets, their diagonal W-congruences and asymptotic net pairs."""

from .congruences import (
    build_anet,
    build_anet_pair,
    build_asymptotic_pair,
    crossratio_audit,
    is_black,
    is_w_congruence,
    moebius_check,
    moebius_conditions,
    parity,
)
from .cycles import (
    AxesData,
    CycleSeed,
    LaplaceCycle,
    construct_cycle_from_axes,
    construct_cycle_pointwise,
    diagonal_congruences,
    extract_axes,
    lemma18_check,
    lemma19_construct,
    lemma21_check,
    verify_cycle,
)
from .errors import GeometryError
from .nets import (
    DiscreteNet,
    LineCongruence,
    NetWindow,
    Report,
    asymptotically_related,
    axis_congruence,
    is_anet,
    is_conjugate,
    is_period_four,
    laplace,
    laplace_sequence,
)
from .plucker import PluckerLine, Quadric
from .projective_core import INFINITY, HomPlane, HomPoint, backend, cross_ratio

__version__ = "0.1.0"

__all__ = [
    "asymptotically_related",
    "AxesData",
    "axis_congruence",
    "backend",
    "build_anet",
    "build_anet_pair",
    "build_asymptotic_pair",
    "construct_cycle_from_axes",
    "construct_cycle_pointwise",
    "cross_ratio",
    "crossratio_audit",
    "CycleSeed",
    "diagonal_congruences",
    "DiscreteNet",
    "extract_axes",
    "GeometryError",
    "HomPlane",
    "HomPoint",
    "INFINITY",
    "is_anet",
    "is_black",
    "is_conjugate",
    "is_period_four",
    "is_w_congruence",
    "laplace",
    "laplace_sequence",
    "LaplaceCycle",
    "lemma18_check",
    "lemma19_construct",
    "lemma21_check",
    "LineCongruence",
    "moebius_check",
    "moebius_conditions",
    "NetWindow",
    "parity",
    "PluckerLine",
    "Quadric",
    "Report",
    "verify_cycle",
]
