"""
Reference values for standard worked examples, used by the verification suite.

Cycles are given the way they are usually written (not necessarily starting at the minimum);
compare them as permutations, not as strings.
"""
from __future__ import annotations

# c = (1,3,4,2) in S_4: x, inv_c(x), psi1(x), psi2(x), (J, I) of phi(x), phi(x) normal form, phi(x) cycles.
TABLE_C = (1, 3, 4, 2)
TABLE_ROWS = [
    ("id", "id", ((), ()), ((), ()), ((), ()), "e", "id"),
    ("(1,2)", "(1,2)", ((1,), (2,)), ((1,), (2,)), ((1,), (1,)), "s1", "(1,2)"),
    ("(2,3)", "(2,3)", ((2,), (3,)), ((2,), (3,)), ((2,), (2,)), "s2", "(2,3)"),
    ("(3,4)", "(3,4)", ((3,), (4,)), ((3,), (4,)), ((3,), (3,)), "s3", "(3,4)"),
    ("(1,3)", "(2,1,3)", ((1,), (3,)), ((1, 2), (2, 3)), ((1, 2), (1, 2)), "(s1)(s2)", "(1,2,3)"),
    ("(2,4)", "(2,4)", ((2,), (4,)), ((2,), (4,)), ((2,), (3,)), "s3 s2", "(4,3,2)"),
    ("(1,4)", "(1,4,2)", ((1,), (4,)), ((1, 2), (2, 4)), ((1, 2), (1, 3)), "(s1)(s3 s2)", "(1,2,4,3)"),
    ("(1,3,4)", "(1,3,4,2)", ((1, 3), (3, 4)), ((1, 2, 3), (2, 3, 4)), ((1, 2, 3), (1, 2, 3)), "(s1)(s2)(s3)", "(1,2,3,4)"),
    ("(3,4,2)", "(3,4,2)", ((2, 3), (3, 4)), ((2, 3), (3, 4)), ((2, 3), (2, 3)), "(s2)(s3)", "(2,3,4)"),
    ("(4,2,1)", "(1,4)", ((1, 2), (2, 4)), ((1,), (4,)), ((1,), (3,)), "s3 s2 s1", "(4,3,2,1)"),
    ("(2,1,3)", "(1,3)", ((1, 2), (2, 3)), ((1,), (3,)), ((1,), (2,)), "s2 s1", "(3,2,1)"),
    ("(1,3)(2,4)", "(1,3)(2,4)", ((1, 2), (3, 4)), ((1, 2), (3, 4)), ((1, 2), (2, 3)), "(s2 s1)(s3 s2)", "(1,3)(2,4)"),
    ("(1,2)(3,4)", "(1,2)(3,4)", ((1, 3), (2, 4)), ((1, 3), (2, 4)), ((1, 3), (1, 3)), "(s1)(s3)", "(1,2)(3,4)"),
    ("(1,3,4,2)", "(1,3,4)", ((1, 2, 3), (2, 3, 4)), ((1, 3), (3, 4)), ((1, 3), (2, 3)), "(s2 s1)(s3)", "(1,3,4,2)"),
]

# Standard form of a single cycle.
CYCLE_EXAMPLE = {
    "c": (1, 3, 6, 7, 8, 5, 4, 2),
    "x": "(1,8,5,4)",
    "distinguished": [(5, 8), (4, 5), (1, 4)],
    "standard_form": "(s7 s6 s5 s6 s7)(s4)(s3 s2 s1 s2 s3)",
}

# Standard form, vertical vector and extracted word of a two-cycle element.
SMALL_EXAMPLE = {
    "c": (1, 3, 4, 2),
    "x": "(1,3)(2,4)",
    "standard_form": "(s2 s1 s2)(s3 s2 s3)",
    "vector": (1, 3, 2),
    "extracted_word": (2, 1, 3, 2),
    "fc_subwords": {
        (), (1,), (2,), (3,), (2, 1), (1, 2), (2, 3), (3, 2), (1, 3), (1, 2, 3), (2, 1, 3), (1, 3, 2), (2, 1, 3, 2),
    },
    "y": "(1,3,4)",
    "y_vector": (1, 2, 1),
}

# Lifted standard form.
BRAID_EXAMPLE = {
    "c": (1, 2, 5, 4, 3),
    "x": "(1,3)(2,5,4)",
    "polygons": [(2, 4, 5), (1, 3)],
    "distinguished_245": [(4, 5), (2, 4)],
    "standard_form": "(s4)(s3 s2 s3)(s2 s1 s2)",
    "lift": "s4 s3 s2 s3^-1 s2^-1 s1 s2",
}

# Involution on a larger instance.
INVOLUTION_EXAMPLE = {
    "c": (1, 2, 3, 6, 7, 9, 10, 12, 16, 15, 14, 13, 11, 8, 5, 4),
    "left": {1, 4, 5, 8, 11, 13, 14, 15, 16},
    "blocks": [{1, 5, 11}, {2, 6, 13, 15}, {7, 16}, {9, 12}],
    "M": {5, 13},
    "N": {4, 8, 14},
    "enlarged_8": {1, 5, 8, 11},
    "after_insertion": [{1, 4, 5, 8, 11}, {2, 6, 13, 14, 15}, {7, 16}, {9, 12}],
    "image": [{1, 4, 8, 11}, {2, 6, 14, 15}, {7, 16}, {9, 12}],
}

# Polygon order and extraction on a larger instance.
EXTRACTION_EXAMPLE = {
    "c": (1, 2, 3, 6, 7, 8, 9, 10, 12, 16, 15, 14, 13, 11, 5, 4),
    "left": {1, 4, 5, 11, 13, 14, 15, 16},
    "blocks": [{3, 4, 7}, {5, 8, 9}, {10, 11, 13}, {12, 14}],
    "polygon_order": [(12, 14), (10, 11, 13), (3, 4, 7), (5, 8, 9)],
    "standard_form": "(s13 s12 s13)(s12 s11 s12)(s10)(s6 s5 s4 s5 s6)(s3)(s7 s6 s5 s6 s7)(s8)",
    "w": "(s6 s5 s4 s3)(s7 s6 s5)(s8)(s12 s11 s10)(s13 s12)",
    "I": {6, 7, 8, 12, 13},
    "J": {3, 5, 8, 10, 12},
    "involution": "(3,7)(5,8,9)(10,13)(12,14)",
}

# Lattice of vertical vectors for the linear Coxeter element, n = 3.
LATTICE_N3 = {
    "vectors": {
        (0, 0, 0): "e", (1, 0, 0): "s1", (0, 1, 0): "s2", (0, 0, 1): "s3",
        (1, 1, 0): "s1 s2", (1, 0, 1): "s1 s3", (0, 1, 1): "s2 s3", (1, 1, 1): "s1 s2 s3",
        (1, 2, 0): "s2 s1 s2", (0, 1, 2): "s3 s2 s3", (1, 2, 1): "s2 s1 s2 s3", (1, 1, 2): "s1 s3 s2 s3",
        (1, 2, 2): "s3 s2 s1 s2 s3", (1, 3, 2): "s2 s3 s2 s1 s2 s3",
    },
    "covers": {
        ((0, 0, 0), (1, 0, 0)), ((0, 0, 0), (0, 1, 0)), ((0, 0, 0), (0, 0, 1)),
        ((1, 0, 0), (1, 1, 0)), ((1, 0, 0), (1, 0, 1)),
        ((0, 1, 0), (1, 1, 0)), ((0, 1, 0), (0, 1, 1)),
        ((0, 0, 1), (1, 0, 1)), ((0, 0, 1), (0, 1, 1)),
        ((1, 1, 0), (1, 2, 0)), ((1, 1, 0), (1, 1, 1)),
        ((1, 0, 1), (1, 1, 1)),
        ((0, 1, 1), (1, 1, 1)), ((0, 1, 1), (0, 1, 2)),
        ((1, 2, 0), (1, 2, 1)),
        ((1, 1, 1), (1, 2, 1)), ((1, 1, 1), (1, 1, 2)),
        ((0, 1, 2), (1, 1, 2)),
        ((1, 2, 1), (1, 2, 2)),
        ((1, 1, 2), (1, 2, 2)),
        ((1, 2, 2), (1, 3, 2)),
    },
}
