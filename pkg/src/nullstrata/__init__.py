"""Exact-arithmetic toolkit for null-cone strata of reductive pairs.

Builds split semisimple Lie algebras over the rationals, computes the
annihilator of a reductive subalgebra, stratifies its null-cone by
destabilizing one-parameter directions, and certifies that the strata
meet nilpotent coadjoint orbits in isotropic (often Lagrangian) pieces.
All arithmetic is exact; there are no floating-point tolerances.
"""

__version__ = "0.1.0"

from .qlinalg import Rat, Subspace, solve
from .liecore import LieAlgebra, sl, direct_sum
from .pair import PairData, make_pair, load_preset, PRESETS

__all__ = [
    "Rat",
    "Subspace",
    "solve",
    "LieAlgebra",
    "sl",
    "direct_sum",
    "PairData",
    "make_pair",
    "load_preset",
    "PRESETS",
    "__version__",
]
