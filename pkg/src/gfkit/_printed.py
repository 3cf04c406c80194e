"""Published reference values used for table regeneration checks.

Lower-triangular matrices are stored row by row without the zero upper part.
Decimal values are kept as strings so the printed precision is preserved.
"""

from __future__ import annotations

A_MATRICES: dict[int, list[list[int]]] = {
    1: [[1]],
    2: [[1], [0, 1]],
    3: [[1], [0, 1], [-1, -1, 1]],
    4: [[1], [0, 1], [-1, -1, 1], [-1, 0, -1, 1]],
    5: [[1], [0, 1], [-1, -1, 1], [-1, 0, -1, 1], [-1, -1, -1, -1, 1]],
}

A_INVERSES: dict[int, list[list[int]]] = {
    1: [[1]],
    2: [[1], [0, 1]],
    3: [[1], [0, 1], [1, 1, 1]],
    4: [[1], [0, 1], [1, 1, 1], [2, 1, 1, 1]],
    5: [[1], [0, 1], [1, 1, 1], [2, 1, 1, 1], [4, 3, 2, 1, 1]],
}

MU_TRIANGLE: list[list[int]] = [
    [1],
    [-1, 1],
    [-1, 0, 1],
    [1, -1, -1, 1],
    [-1, 0, 0, 0, 1],
    [1, 0, 0, -1, -1, 1],
    [1, 0, -1, 0, -1, 0, 1],
    [-1, 0, 2, -1, 0, 0, -1, 1],
    [-1, 0, 0, 0, 1, 0, -1, 0, 1],
    [1, 0, -1, 1, 0, -1, 1, -1, -1, 1],
    [-1, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1],
    [1, 0, -1, 0, 0, 0, 1, 0, 0, -1, -1, 1],
    [3, 0, -2, 0, -2, 0, 2, 0, -1, 0, -1, 0, 1],
    [-3, 0, 1, 0, 3, 0, -1, -1, 1, 0, 0, 0, -1, 1],
    [-1, 0, 1, 0, 1, 0, -1, 0, 0, 0, 0, 0, -1, 0, 1],
    [1, 0, 0, 0, -2, 0, 0, 1, 0, 0, 1, -1, 1, -1, -1, 1],
    [-3, 0, 2, 0, 2, 0, -2, 0, 1, 0, 0, 0, -1, 0, 0, 0, 1],
]

T_MATRIX: list[list[int]] = [
    [1],
    [0, 1],
    [-1, -1, 1],
    [-1, 0, 0, 1],
    [-1, -1, -2, -1, 1],
    [0, 0, 0, 0, 0, 1],
    [0, 0, 0, -1, -1, -1, 1],
    [1, 0, -1, 0, -1, -1, 0, 1],
    [1, 1, 1, 0, -2, 0, -1, -1, 1],
    [1, 0, 1, 0, 1, 1, -1, 0, 0, 1],
    [1, 1, 0, 1, 1, 0, -1, -1, -2, -1, 1],
    [1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 1],
    [0, 1, 1, 1, 1, 0, -1, 0, 0, -1, -1, -1, 1],
    [0, -1, 0, 0, -1, -1, 2, 0, -1, -1, -1, -1, 0, 1],
]

T_INVERSE: list[list[int]] = [
    [1],
    [0, 1],
    [1, 1, 1],
    [1, 0, 0, 1],
    [4, 3, 2, 1, 1],
    [0, 0, 0, 0, 0, 1],
    [5, 3, 2, 2, 1, 1, 1],
    [4, 4, 3, 1, 1, 1, 0, 1],
    [15, 11, 8, 5, 4, 2, 1, 1, 1],
    [-1, -1, -1, 1, 0, 0, 1, 0, 0, 1],
    [32, 24, 18, 12, 9, 6, 4, 3, 2, 1, 1],
    [-6, -4, -3, -1, -1, 0, 0, 0, 0, 0, 0, 1],
    [24, 17, 13, 12, 8, 7, 6, 3, 2, 2, 1, 1, 1],
]

# Corr_LGF(C_{a,b}); the hat variant was printed with the same digits.
CORR_LGF: dict[tuple[int, int], str] = {
    (1, 0): '0.7634',
    (3, 1): '0.92008',
    (5, 1): '0.062497',
    (5, 3): '0.672979',
    (7, 1): '0.010865',
    (7, 3): '0.03742',
    (7, 5): '0.6128',
    (11, 1): '0.001585',
    (11, 3): '0.002645',
    (11, 5): '0.00471',
    (11, 7): '0.02028',
    (11, 9): '0.5875',
    (13, 1): '0.000749',
    (13, 3): '0.00108',
    (13, 5): '0.001824',
    (13, 7): '0.00467',
    (13, 9): '0.01882',
    (13, 11): '0.5831',
    (17, 15): '0.5824',
    (23, 21): '0.5695',
    (29, 27): '0.567',
}
