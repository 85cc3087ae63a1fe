"""Published census values used as expected outputs.

Two-variable tables are keyed by ``(i, j)`` = (vertices - 1, faces - 1); for
quadrangulation-side families that is (black - 1, white - 1).  Any key of total
degree at most ``*_DEGREE`` that is missing has count 0.
"""

MAPS_BY_EDGES = [2, 4, 14, 57, 312, 2071, 15030, 117735, 967850, 8268816]
TWO_CONNECTED_BY_EDGES = [2, 1, 2, 3, 6, 16, 42, 151, 596, 2605]
# n = 6 .. 17
THREE_CONNECTED_BY_EDGES = [1, 0, 1, 2, 3, 4, 15, 32, 89, 266, 797, 2496]

MAPS_VF_DEGREE = 5
MAPS_VF = {
    (1, 0): 1, (0, 1): 1,
    (2, 0): 1, (1, 1): 2, (0, 2): 1,
    (3, 0): 2, (2, 1): 5, (1, 2): 5, (0, 3): 2,
    (4, 0): 3, (3, 1): 14, (2, 2): 23, (1, 3): 14, (0, 4): 3,
    (5, 0): 6, (4, 1): 42, (3, 2): 108, (2, 3): 108, (1, 4): 42, (0, 5): 6,
}

TWO_CONNECTED_VF_DEGREE = 6
TWO_CONNECTED_VF = {
    (1, 0): 1, (0, 1): 1,
    (1, 1): 1,
    (2, 1): 1, (1, 2): 1,
    (2, 2): 1, (1, 3): 1, (3, 1): 1,
    (3, 2): 2, (2, 3): 2, (4, 1): 1, (1, 4): 1,
    (2, 4): 3, (4, 2): 3, (1, 5): 1, (5, 1): 1, (3, 3): 8,
}

THREE_CONNECTED_VF_DEGREE = 14
THREE_CONNECTED_VF = {
    (3, 3): 1,
    (4, 4): 1,
    (5, 4): 1, (4, 5): 1,
    (5, 5): 3,
    (6, 5): 2, (5, 6): 2,
    (7, 5): 2, (5, 7): 2, (6, 6): 11,
    (7, 6): 16, (6, 7): 16,
    (8, 6): 10, (7, 7): 69, (6, 8): 10,
}


def full_table(sparse, degree):
    """Expand a sparse table to every key with ``1 <= i + j <= degree``."""
    return {(i, d - i): sparse.get((i, d - i), 0)
            for d in range(1, degree + 1) for i in range(d + 1)}
