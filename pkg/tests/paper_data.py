"""Reference data shared by the test modules.

All index sets here are 1-based, matching the published presentation of the
two benchmark configurations; tests convert to the library's 0-based form.
"""

from fractions import Fraction

F = Fraction

HEXAGON = (
    (1, 1, 1, 1, 1, 1),
    (0, 1, 1, 0, -1, -1),
    (-1, -1, 0, 1, 1, 0),
)

HEX_WEIGHT_A = (2, 3, 8, 1, 13, 5)
HEX_WEIGHT_B = (5, 3, 1, 0, 0, 0)


def _mono(*pairs):
    m = [0] * 6
    for var, e in pairs:
        m[var - 1] = e
    return tuple(m)


# reduced basis under weight A: (leading monomial, trailing monomial)
HEX_GB_A = [
    (_mono((2, 1), (5, 1)), _mono((1, 1), (4, 1))),
    (_mono((3, 1), (6, 1)), _mono((1, 1), (4, 1))),
    (_mono((3, 1), (5, 2)), _mono((4, 2), (6, 1))),
    (_mono((3, 2), (5, 1)), _mono((2, 1), (4, 2))),
    (_mono((1, 1), (5, 2)), _mono((4, 1), (6, 2))),
    (_mono((1, 1), (3, 1), (5, 1)), _mono((2, 1), (4, 1), (6, 1))),
    (_mono((1, 1), (3, 2)), _mono((2, 2), (4, 1))),
    (_mono((1, 2), (5, 1)), _mono((2, 1), (6, 2))),
    (_mono((2, 2), (6, 2)), _mono((1, 3), (4, 1))),
    (_mono((1, 2), (3, 1)), _mono((2, 2), (6, 1))),
]

# reduced basis under weight B
HEX_GB_B = [
    (_mono((2, 1), (5, 1)), _mono((3, 1), (6, 1))),
    (_mono((1, 1), (4, 1)), _mono((3, 1), (6, 1))),
    (_mono((3, 1), (5, 2)), _mono((4, 2), (6, 1))),
    (_mono((2, 1), (4, 2)), _mono((3, 2), (5, 1))),
    (_mono((1, 1), (5, 2)), _mono((4, 1), (6, 2))),
    (_mono((1, 1), (3, 1), (5, 1)), _mono((2, 1), (4, 1), (6, 1))),
    (_mono((1, 1), (3, 2)), _mono((2, 2), (4, 1))),
    (_mono((1, 2), (5, 1)), _mono((2, 1), (6, 2))),
    (_mono((1, 2), (3, 1)), _mono((2, 2), (6, 1))),
]

# standard pairs as (pattern string, 1-based free set)
HEX_PAIRS_A_TOP = [
    ("(0,0,0,*,*,*)", {4, 5, 6}),
    ("(*,0,0,*,0,*)", {1, 4, 6}),
    ("(*,*,0,*,0,0)", {1, 2, 4}),
    ("(0,*,*,*,0,0)", {2, 3, 4}),
    ("(*,1,0,*,0,*)", {1, 4, 6}),
    ("(*,*,0,*,0,1)", {1, 2, 4}),
]
HEX_PAIRS_A_EMBEDDED = [
    ("(1,*,1,*,0,0)", {2, 4}),
    ("(1,0,0,*,1,*)", {4, 6}),
    ("(0,0,1,*,1,0)", {4}),
]
HEX_PAIRS_B_TOP = [
    ("(*,*,0,0,0,*)", {1, 2, 6}),
    ("(0,0,*,*,0,*)", {3, 4, 6}),
    ("(0,*,*,0,0,*)", {2, 3, 6}),
    ("(0,0,0,*,*,*)", {4, 5, 6}),
    ("(0,0,*,*,1,*)", {3, 4, 6}),
    ("(0,*,*,1,0,*)", {2, 3, 6}),
]
HEX_PAIRS_B_EMBEDDED = [
    ("(1,*,1,0,0,*)", {2, 6}),
    ("(1,0,0,0,1,*)", {6}),
]

HEX_DELTA_B = [{1, 2, 6}, {2, 3, 6}, {3, 4, 6}, {4, 5, 6}, {2, 6}, {6}]

GRID33 = (
    (1, 1, 1, 0, 0, 0, 0, 0, 0),
    (0, 0, 0, 1, 1, 1, 0, 0, 0),
    (0, 0, 0, 0, 0, 0, 1, 1, 1),
    (1, 0, 0, 1, 0, 0, 1, 0, 0),
    (0, 1, 0, 0, 1, 0, 0, 1, 0),
    (0, 0, 1, 0, 0, 1, 0, 0, 1),
)

GRID_WEIGHTS = {
    1: (1, 2, 3, 5, 8, 13, 21, 34, 55),
    2: (55, 34, 1, 21, 2, 13, 3, 5, 8),
    3: (1, 55, 2, 34, 3, 5, 8, 13, 21),
    4: (21, 13, 1, 55, 2, 3, 5, 8, 34),
    5: (2, 1, 0, 4, 0, 5, 0, 2, 5),
}

# published basis binomial vectors for the staircase weight, in the
# published order g1..g9
GRID_CASE1_G = [
    (1, -1, 0, -1, 1, 0, 0, 0, 0),
    (1, -1, 0, 0, 0, 0, -1, 1, 0),
    (0, 0, 0, 1, -1, 0, -1, 1, 0),
    (1, 0, -1, -1, 0, 1, 0, 0, 0),
    (1, 0, -1, 0, 0, 0, -1, 0, 1),
    (0, 0, 0, 1, 0, -1, -1, 0, 1),
    (0, 1, -1, 0, -1, 1, 0, 0, 0),
    (0, 1, -1, 0, 0, 0, 0, -1, 1),
    (0, 0, 0, 0, 1, -1, 0, -1, 1),
]

GRID_CASE1_INITIAL = [
    (1, 5), (1, 6), (2, 6), (1, 8), (4, 8), (1, 9), (2, 9), (4, 9), (5, 9),
]

# rows of the published perturbation matrix for B = {g1, g3, g7, g9}:
# coefficients of (s1, s2, s3, s4) per variable row
GRID_CASE1_BS = [
    (1, 0, 0, 0),
    (-1, 0, 1, 0),
    (0, 0, -1, 0),
    (-1, 1, 0, 0),
    (1, -1, -1, 1),
    (0, 1, -1, 0),
    (0, -1, 0, 0),
    (0, 1, 0, -1),
    (0, 0, 0, 1),
]

GRID_CASE1_NEW_NEGS = [
    {1, 5}, {1, 8}, {4, 8}, {1, 6}, {1, 9}, {4, 9}, {2, 6}, {2, 9}, {5, 9},
]

GRID_DELTA = {
    1: [{3, 6, 7, 8, 9}, {3, 5, 6, 7, 8}, {2, 3, 5, 7, 8}, {3, 4, 5, 6, 7},
        {2, 3, 4, 5, 7}, {1, 2, 3, 4, 7}],
    2: [{3, 5, 7, 8, 9}, {2, 3, 5, 7, 8}, {3, 5, 6, 7, 9}, {3, 4, 5, 6, 7},
        {2, 3, 4, 5, 7}, {1, 2, 3, 4, 7}],
    3: [{1, 2, 3, 5, 8}, {1, 3, 5, 7, 8}, {3, 5, 6, 7, 8}, {1, 3, 5, 6, 7},
        {3, 6, 7, 8, 9}, {1, 4, 5, 6, 7}],
    4: [{2, 3, 5, 7, 8}, {3, 5, 6, 7, 8}, {3, 6, 7, 8, 9}, {1, 2, 3, 5, 7},
        {1, 3, 5, 6, 7}, {1, 4, 5, 6, 7}],
    5: [{3, 5, 7, 8, 9}, {2, 3, 5, 7, 8}, {1, 2, 3, 5, 7}, {3, 5, 6, 7, 9},
        {3, 4, 5, 6, 7}, {1, 3, 4, 5, 7}],
}

GRID_CW = {1: {3, 7}, 2: {3, 7}, 3: set(), 4: {7}, 5: {3, 5, 7}}

# published degree-2 dual operators, as {exponent tuple over 4 slots: coeff}
GRID_DEG2_OPS = {
    1: {(0, 1, 1, 0): F(1)},
    2: {(0, 1, 1, 0): F(1), (0, 1, 0, 1): F(1), (0, 0, 1, 1): F(1),
        (0, 0, 0, 2): F(-1, 2)},
    3: {(0, 0, 0, 2): F(1, 2)},
    4: {(1, 0, 1, 0): F(1), (0, 0, 2, 0): F(-1, 2)},
    5: {(2, 0, 0, 0): F(1, 2), (0, 1, 1, 0): F(-1), (0, 0, 0, 2): F(1, 2)},
}

K3_BETA = (F(1, 2),) * 6
