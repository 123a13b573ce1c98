"""Frozen reference grids for the deterministic mask constructions.

Each grid entry is 0 for "no edge" or the index of the diagonal that
owns the edge (1..4).  In the addition fixtures the value 5 marks edges
created by the addition pass rather than by the original construction.
These grids were transcribed by hand and are the ground truth the
construction code must reproduce cell-for-cell.
"""

# side 1, 2, 4, 8, 16: every representable diagonal filled
BASE_SIDE_1 = [[1]]

BASE_SIDE_2 = [
    [1, 2],
    [2, 1],
]

BASE_SIDE_4 = [
    [1, 4, 3, 2],
    [2, 1, 4, 3],
    [3, 2, 1, 4],
    [4, 3, 2, 1],
]

BASE_SIDE_8 = [
    [1, 0, 4, 0, 3, 0, 2, 0],
    [0, 1, 0, 4, 0, 3, 0, 2],
    [2, 0, 1, 0, 4, 0, 3, 0],
    [0, 2, 0, 1, 0, 4, 0, 3],
    [3, 0, 2, 0, 1, 0, 4, 0],
    [0, 3, 0, 2, 0, 1, 0, 4],
    [4, 0, 3, 0, 2, 0, 1, 0],
    [0, 4, 0, 3, 0, 2, 0, 1],
]

BASE_SIDE_16 = [
    [1, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0],
    [0, 1, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0],
    [0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 2, 0],
    [0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 2],
    [2, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0],
    [0, 2, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 3, 0, 0],
    [0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 3, 0],
    [0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0, 3],
    [3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0, 0],
    [0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 4, 0, 0],
    [0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 4, 0],
    [0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 4],
    [4, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0],
    [0, 4, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0],
    [0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1, 0],
    [0, 0, 0, 4, 0, 0, 0, 3, 0, 0, 0, 2, 0, 0, 0, 1],
]

BASE_GRIDS = {
    0: BASE_SIDE_1,
    1: BASE_SIDE_2,
    2: BASE_SIDE_4,
    3: BASE_SIDE_8,
    4: BASE_SIDE_16,
}

# the side-4 selection-property pair: diagonals {1,2} versus {1,3}
SELECT_TIGHT = [
    [1, 0, 0, 2],
    [2, 1, 0, 0],
    [0, 2, 1, 0],
    [0, 0, 2, 1],
]

SELECT_LOOSE = [
    [1, 0, 3, 0],
    [0, 1, 0, 3],
    [3, 0, 1, 0],
    [0, 3, 0, 1],
]

# addition fixture: copying the side-8 {1,2} mask into the qualifying
# aligned 8x8 blocks of the side-16 {1,2} mask (new edges marked 5)
ADD_ADDEND_SIDE_8 = [
    [1, 0, 0, 0, 0, 0, 2, 0],
    [0, 1, 0, 0, 0, 0, 0, 2],
    [2, 0, 1, 0, 0, 0, 0, 0],
    [0, 2, 0, 1, 0, 0, 0, 0],
    [0, 0, 2, 0, 1, 0, 0, 0],
    [0, 0, 0, 2, 0, 1, 0, 0],
    [0, 0, 0, 0, 2, 0, 1, 0],
    [0, 0, 0, 0, 0, 2, 0, 1],
]

ADD_TARGET_SIDE_16 = [
    [1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
    [2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 0, 0, 1],
]

ADD_RESULT_SIDE_16 = [
    [1, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 2, 0, 0, 0],
    [0, 1, 0, 0, 0, 0, 0, 5, 0, 0, 0, 0, 0, 2, 0, 0],
    [5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0],
    [0, 5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2],
    [2, 0, 5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 2, 0, 5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 2, 0, 5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 2, 0, 5, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5, 0],
    [0, 0, 0, 0, 0, 2, 0, 0, 0, 1, 0, 0, 0, 0, 0, 5],
    [0, 0, 0, 0, 0, 0, 2, 0, 5, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 2, 0, 5, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 5, 0, 1, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 5, 0, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 5, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 2, 0, 5, 0, 1],
]
