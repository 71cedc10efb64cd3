"""Exact-arithmetic toolkit for Leech lattice orbifold dimension formulas."""

from ._gdh import (
    Verifier,
    coeff_tables,
    d_coeff,
    d_vanishes,
    dtilde,
    mult_functions,
    ramanujan_sum,
    vacuum_anomaly,
    vsf,
)

__all__ = [
    "Verifier",
    "coeff_tables",
    "d_coeff",
    "d_vanishes",
    "dtilde",
    "mult_functions",
    "ramanujan_sum",
    "vacuum_anomaly",
    "vsf",
]
