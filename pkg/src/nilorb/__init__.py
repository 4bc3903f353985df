"""Nilpotent coadjoint orbits of classical groups in characteristic 2 and of
G2/F4 in bad characteristic: classification, closure order, Springer
correspondence, nilpotent pieces, and exhaustive finite-field verification."""

from .closure import closure_leq, hasse, induce_orbit
from .partitions import (
    Bipartition,
    bipartition,
    bipartition_leq,
    bipartitions_of,
    in_family,
    j_induct,
    multiplicity,
)
from .pieces import ms_pieces, piece_report, upsilon, upsilon_from_unipotent
from .springer import (
    UnipotentClass,
    enumerate_unipotent,
    gamma_star,
    gamma_star_inv,
    phi,
    psi_star,
    unip_from_symbol,
)
from .symbols import (
    SymbolB,
    SymbolC,
    SymbolD,
    centralizer_dim,
    chi_extend,
    enumerate_symbols,
    springer_fiber_dim,
    validate,
    zero_symbol,
)

__version__ = "0.1.0"

__all__ = [
    "Bipartition",
    "SymbolB",
    "SymbolC",
    "SymbolD",
    "UnipotentClass",
    "bipartition",
    "bipartition_leq",
    "bipartitions_of",
    "centralizer_dim",
    "chi_extend",
    "closure_leq",
    "enumerate_symbols",
    "enumerate_unipotent",
    "gamma_star",
    "gamma_star_inv",
    "hasse",
    "in_family",
    "induce_orbit",
    "j_induct",
    "ms_pieces",
    "multiplicity",
    "phi",
    "piece_report",
    "psi_star",
    "springer_fiber_dim",
    "unip_from_symbol",
    "upsilon",
    "upsilon_from_unipotent",
    "validate",
    "zero_symbol",
]
