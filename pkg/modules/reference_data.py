"""Known values the computations are checked against"""
from typing import Dict, Tuple

# simple TL_n dimensions, row n lists k = n mod 2, n mod 2 + 2, ..., n
TL_DIMS: Dict[int, Dict[int, Tuple[int, ...]]] = {
    0: {
        0: (1,), 1: (1,), 2: (1, 1), 3: (1, 1), 4: (1, 3, 1), 5: (1, 4, 1), 6: (1, 9, 4, 1),
        7: (1, 13, 6, 1), 8: (1, 28, 13, 7, 1), 9: (1, 41, 27, 7, 1), 10: (1, 90, 41, 34, 9, 1),
        11: (1, 131, 110, 34, 10, 1), 12: (1, 297, 131, 144, 54, 10, 1),
        13: (1, 428, 429, 144, 64, 12, 1), 14: (1, 1001, 428, 573, 273, 64, 13, 1),
        15: (1, 1429, 1638, 573, 337, 90, 13, 1), 16: (1, 3432, 1429, 2211, 1260, 337, 103, 15, 1),
    },
    2: {
        0: (1,), 1: (1,), 2: (1, 1), 3: (1, 1), 4: (1, 3, 1), 5: (1, 4, 1), 6: (1, 9, 4, 1),
        7: (1, 13, 6, 1), 8: (1, 27, 13, 7, 1), 9: (1, 40, 27, 7, 1), 10: (1, 81, 40, 34, 9, 1),
        11: (1, 121, 110, 34, 10, 1), 12: (1, 243, 121, 144, 54, 10, 1),
        13: (1, 364, 429, 144, 64, 12, 1), 14: (1, 729, 364, 573, 272, 64, 13, 1),
        15: (1, 1093, 1638, 573, 336, 90, 13, 1), 16: (1, 2187, 1093, 2211, 1245, 336, 103, 15, 1),
    },
}

TL24_DIMS = (1, 534888, 208011, 445741, 389367, 126292, 85216, 31878, 6876, 1726, 252, 22, 1)
TL24_SSDIMS = (208012, 534888, 653752, 572033, 389367, 211508, 92092, 31878, 8602, 1748, 252, 23, 1)

# nonzero entries of the characteristic 0 coefficient matrix, 0 <= k <= n <= 16
E_MATRIX_NONZERO: Dict[Tuple[int, int], int] = {
    (0, 0): 1, (1, 1): 1, (2, 0): -1, (2, 2): 1, (3, 3): 1, (4, 4): 1, (5, 3): -1, (5, 5): 1,
    (6, 0): 1, (6, 2): -1, (6, 6): 1, (7, 7): 1,
    (8, 0): -1, (8, 2): 1, (8, 6): -1, (8, 8): 1,
    (9, 3): 1, (9, 5): -1, (9, 9): 1, (10, 10): 1,
    (11, 3): -1, (11, 5): 1, (11, 9): -1, (11, 11): 1,
    (12, 0): 1, (12, 2): -1, (12, 6): 1, (12, 8): -1, (12, 12): 1, (13, 13): 1,
    (14, 0): -1, (14, 2): 1, (14, 6): -1, (14, 8): 1, (14, 12): -1, (14, 14): 1,
    (15, 3): 1, (15, 5): -1, (15, 9): 1, (15, 11): -1, (15, 15): 1, (16, 16): 1,
}
E_MATRIX_SIZE = 17
