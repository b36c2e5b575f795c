"""Published first-10 columns for the three field families, used as
regression anchors by the `tables --expect` command."""

from fractions import Fraction

# biquadratic family Q(sqrt(m), sqrt(-d)) at p = 3:
# m -> (count over 1 <= d <= 10000, first ten d)
BIQUADRATIC_FIRST10 = {
    7: (75, [26, 431, 473, 563, 566, 755, 821, 1055, 1361, 1397]),
    10: (67, [89, 557, 707, 782, 839, 914, 959, 1118, 1142, 1322]),
    13: (82, [329, 491, 527, 794, 905, 989, 1142, 1166, 1397, 1439]),
    19: (86, [110, 170, 329, 491, 515, 593, 839, 983, 1055, 1142]),
    22: (75, [53, 329, 335, 431, 434, 731, 1106, 1313, 1502, 1517]),
    31: (91, [233, 542, 671, 677, 707, 794, 821, 839, 959, 1067]),
    34: (83, [23, 59, 89, 335, 431, 473, 491, 557, 707, 794]),
    37: (77, [29, 170, 182, 335, 497, 665, 1145, 1166, 1169, 1394]),
    46: (79, [83, 89, 170, 431, 497, 563, 593, 695, 755, 905]),
}

# cyclic family from the generic C4 polynomial:
# t -> (m with k+ = Q(sqrt(m)), first ten s)
CYCLIC_FIRST10 = {
    Fraction(3): (10, [43, 103, 166, 214, 367, 397, 403, 415, 535, 553]),
    Fraction(3, 2): (13, [109, 115, 145, 331, 355, 373, 454, 493, 526, 589]),
    Fraction(5, 3): (34, [65, 107, 110, 137, 227, 314, 317, 359, 419, 467]),
    Fraction(6): (37, [31, 43, 46, 58, 118, 157, 163, 262, 391, 502]),
    Fraction(6, 5): (61, [223, 253, 307, 355, 367, 463, 493, 589, 655, 730]),
}

# non-Galois family Q(sqrt(sqrt(m) - d)): m -> all d in 1 <= d <= 20000
NON_GALOIS_ALL = {
    7: [8347, 17338],
    10: [4744, 7381, 8542, 8866, 14995],
    13: [250, 11806, 11914, 13543],
    19: [1027, 1864, 1945, 9001, 11908, 18874],
    22: [7882, 7963, 19411],
    31: [2824, 5740, 11194, 15433],
    34: [760, 3244, 6889, 11290, 13666, 16339],
    37: [685, 5221, 8488, 9460, 13834],
    46: [5887, 8749, 9586, 9883, 17470],
}
