"""Exact arithmetic for complements on log surfaces.

Submodules:

    coeff_sets          standard coefficients, M_m and the sets P_n
    hj                  Hirzebruch-Jung chains, weighted blowups, Reid-Tai
    graph_core          dual graphs, discrepancies, singularity classification
    adjunction          coefficients of the different
    complements_curves  n-complements on P^1 and nodal curves
    p2                  line arrangements on the projective plane
    geometry_checks     Fano indices, bounds and threshold checks
    kodaira             degenerate elliptic fibers
"""

from fractions import Fraction

from .errors import DomainError, ParseError

__all__ = ["Fraction", "DomainError", "ParseError"]
__version__ = "0.1.0"
