"""Embedded reference data for the reproduction targets.

Tableaux are written as tuples of rows, bottom row first (French notation).
"""

from .tableau import Tableau


def T(*rows) -> Tableau:
    return Tableau(tuple(tuple(r) for r in rows))


# B_{s1 s2}(3,2,0): word (2, 1) in application order.
FIGURE1_SHAPE = (3, 2, 0)
FIGURE1_WORD = (2, 1)
FIGURE1_ATOMS = {
    (): [T((1, 1, 1), (2, 2))],
    (2,): [T((1, 1, 1), (2, 3)), T((1, 1, 1), (3, 3))],
    (1,): [T((1, 1, 2), (2, 2))],
    (2, 1): [
        T((1, 1, 2), (2, 3)),
        T((1, 2, 2), (2, 3)),
        T((1, 1, 2), (3, 3)),
        T((1, 2, 2), (3, 3)),
        T((2, 2, 2), (3, 3)),
    ],
}
# (source, label, target) edges drawn in the figure
FIGURE1_EDGES = [
    (T((1, 1, 1), (2, 2)), 2, T((1, 1, 1), (2, 3))),
    (T((1, 1, 1), (2, 3)), 2, T((1, 1, 1), (3, 3))),
    (T((1, 1, 1), (2, 2)), 1, T((1, 1, 2), (2, 2))),
    (T((1, 1, 1), (2, 3)), 1, T((1, 1, 2), (2, 3))),
    (T((1, 1, 2), (2, 3)), 1, T((1, 2, 2), (2, 3))),
    (T((1, 1, 2), (2, 3)), 2, T((1, 1, 2), (3, 3))),
    (T((1, 1, 1), (3, 3)), 1, T((1, 1, 2), (3, 3))),
    (T((1, 1, 2), (3, 3)), 1, T((1, 2, 2), (3, 3))),
    (T((1, 2, 2), (3, 3)), 1, T((2, 2, 2), (3, 3))),
]

# weakly but not strongly atom-positive subset of B(3,2,0)
WEAK_ATOM_SHAPE = (3, 2, 0)
WEAK_ATOM_X = [
    T((1, 1, 1), (2, 2)),
    T((1, 1, 1), (2, 3)),
    T((1, 1, 2), (2, 3)),
    T((1, 2, 2), (2, 3)),
    T((1, 1, 1), (3, 3)),
]
WEAK_ATOM_EXPANSION = {(3, 2, 0): 1, (3, 0, 2): 1, (1, 3, 1): 1}

# B_{s1 s3 s2}(3,2,0,0) with the highlighted extremal subset
FIGURE2_SHAPE = (3, 2, 0, 0)
FIGURE2_WORD = (2, 3, 1)
FIGURE2_X = [
    T((1, 1, 1), (2, 2)),
    T((1, 1, 1), (2, 3)),
    T((1, 1, 2), (2, 3)),
    T((1, 2, 2), (2, 3)),
    T((1, 1, 1), (3, 3)),
    T((1, 1, 2), (3, 3)),
    T((1, 2, 2), (3, 3)),
    T((2, 2, 2), (3, 3)),
    T((1, 1, 1), (2, 4)),
    T((1, 1, 1), (3, 4)),
    T((1, 1, 1), (4, 4)),
    T((1, 1, 2), (3, 4)),
    T((1, 2, 2), (3, 4)),
    T((2, 2, 2), (3, 4)),
    T((1, 1, 2), (4, 4)),
    T((1, 2, 2), (4, 4)),
    T((2, 2, 2), (4, 4)),
]
FIGURE2_GREYED = [
    T((1, 1, 2), (2, 2)),
    T((1, 1, 2), (2, 4)),
    T((1, 2, 2), (2, 4)),
]
FIGURE2_NEGATIVE = (1, 3, 0, 1)
# lowest weight element of non-extremal weight: f_1^2 f_2 (b_lambda)
FIGURE2_LOWEST_NONEXTREMAL = T((1, 2, 2), (2, 3))

# connected, strongly atom-positive, not extremal: (i, j, k) = (1, 2, 3)
ATOM_NOT_EXTREMAL_SHAPE = (3, 2, 1, 0)
ATOM_NOT_EXTREMAL_IJK = (1, 2, 3)

# lowest-weight obstruction in B(4,4,3,2,0,0)
EX48_SHAPE = (4, 4, 3, 2, 0, 0)
EX48_X = T((1, 2, 3, 3), (2, 3, 4, 4), (3, 4, 5), (5, 6))
EX48_E2 = T((1, 2, 2, 3), (2, 3, 4, 4), (3, 4, 5), (5, 6))
EX48_F3E2 = T((1, 2, 2, 3), (2, 3, 4, 4), (4, 4, 5), (5, 6))
EX48_F2F3E2 = T((1, 2, 3, 3), (2, 3, 4, 4), (4, 4, 5), (5, 6))

# two extremal subsets of B(3,1,1,0,0,0) with equal characters
EX49_SHAPE = (3, 1, 1, 0, 0, 0)
EX49_J = (1, 2, 3, 4)
_EX49_COMMON = [
    T((1, 1, 1), (2,), (6,)),
    T((1, 1, 2), (2,), (6,)),
    T((1, 2, 2), (2,), (6,)),
    T((1, 1, 3), (2,), (6,)),
    T((1, 1, 3), (3,), (6,)),
    T((1, 2, 3), (2,), (6,)),
    T((1, 3, 3), (2,), (6,)),
    T((1, 3, 3), (3,), (6,)),
    T((1, 1, 6), (2,), (3,)),
    T((1, 2, 6), (2,), (3,)),
]
EX49_Y1 = _EX49_COMMON + [
    T((1, 1, 6), (2,), (4,)),
    T((1, 2, 6), (2,), (4,)),
]
EX49_Y2 = _EX49_COMMON + [
    T((1, 1, 4), (2,), (6,)),
    T((1, 2, 4), (2,), (6,)),
]
