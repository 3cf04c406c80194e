"""gfkit: exact generating-function factorizations for divisor, gcd and convolution sums.

Modules
-------
pseries     exact truncated power series, q-Pochhammer products, partitions
arithfn     arithmetic functions, Dirichlet inverses, Euler transforms
trimatrix   exact lower-triangular matrices and polynomial-entry matrices
lgf         Lambert series factorizations
gcdsums     type I / type II gcd sums, Ramanujan sums, gcd Fourier transforms
genconv     K- and D-convolutions and their factorizations
corrstat    correlation statistics for factorization matrices
signsmooth  partition sign transforms of Dirichlet inverses
"""

from __future__ import annotations

from .errors import GfkitError
from .pseries import Series, pochhammer
from .trimatrix import TriMatrix

__version__ = "0.1.0"

__all__ = ["GfkitError", "Series", "TriMatrix", "pochhammer", "__version__"]
