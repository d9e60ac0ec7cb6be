"""Frozen expected values for the two fully worked examples.

CIRC17_* belongs to the circulant Cay(Z_17; +-1, +-4); Y6_* to the prism
Y_6 = K_2 x C_6 in its chordal ring (12,4) labelling.
"""
from fractions import Fraction as F

CIRC17_W = [
    [1, 0, 0, 0, 0],
    [0, 1, 0, 0, 0],
    [4, 0, 2, 1, 0],
    [0, 9, 1, 3, 3],
    [36, 5, 24, 16, 10],
]

CIRC17_W_PLUS = [
    [0, 1, 0, 0, 0],
    [4, 0, 2, 1, 0],
    [0, 9, 1, 3, 3],
    [36, 5, 24, 16, 10],
    [20, 100, 36, 55, 60],
]

CIRC17_BT = [
    [0, 1, 0, 0, 0],
    [4, 0, 2, 1, 0],
    [0, 2, 0, 1, 1],
    [0, 1, 1, 1, 1],
    [0, 0, 1, 1, 2],
]

# B itself: rows sum to the degree 4
CIRC17_B = [list(col) for col in zip(*CIRC17_BT)]

# ascending coefficient lists; p2's x^2 coefficient is -18/26, the value
# required by row 2 of W^{-1} and by p2(A) = J2 (see the quadruple check in
# the acceptance suite)
CIRC17_POLYS = [
    [F(1)],
    [F(0), F(1)],
    [F(-36, 26), F(75, 26), F(-18, 26), F(-10, 26), F(3, 26)],
    [F(-16, 13), F(-75, 13), F(31, 13), F(10, 13), F(-3, 13)],
    [F(44, 26), F(47, 26), F(-56, 26), F(-8, 26), F(5, 26)],
]

CIRC17_CELLS = {
    1: (1, 4, 13, 16),
    2: (3, 5, 12, 14),
    3: (2, 8, 9, 15),
    4: (6, 7, 10, 11),
}

CIRC17_EIGS = [4.0, 2.049, 0.344, -0.488, -2.906]  # three-decimal rounding

Y6_SPECTRUM = [(3.0, 1), (2.0, 2), (1.0, 1), (0.0, 4), (-1.0, 1), (-2.0, 2), (-3.0, 1)]

# distance polynomials of Y6 (p0 = 1 and p1 = x are implicit)
Y6_DIST_POLYS = [
    [F(1)],
    [F(0), F(1)],
    [F(-60, 30), F(0), F(83, 30), F(0), F(-25, 30), F(0), F(2, 30)],
    [F(0), F(-16, 20), F(0), F(-5, 20), F(0), F(1, 20)],
    [F(20, 20), F(0), F(-54, 20), F(0), F(15, 20), F(0), F(-1, 20)],
]

Y6_A1 = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1],
    [1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0],
    [0, 1, 0, 1, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0],
    [0, 0, 0, 1, 0, 1, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 1, 0, 1, 0, 1, 0, 0],
    [1, 0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 0, 1, 0, 1],
    [1, 0, 1, 0, 0, 0, 0, 0, 0, 0, 1, 0],
]

Y6_A4 = [[1 if v == (u + 6) % 12 else 0 for v in range(12)] for u in range(12)]
