"""Reference values for the reproduction reports.

Each table maps algebra names to the expected statistics at the printed
precision used by the report formatter.  Rounded floats are stored as
strings so the comparison happens at the displayed precision rather than
on raw floats.
"""

from __future__ import annotations


def format_like(value, printed: str) -> str:
    """Format value with the same number of decimals as the printed string."""
    if "." not in printed:
        return str(int(round(value)))
    decimals = len(printed.split(".")[1])
    return f"{value:.{decimals}f}"


def matches(value, printed) -> bool:
    if printed is None:
        return value is None
    if value is None:
        return False
    if isinstance(printed, str):
        return format_like(value, printed) == printed
    return value == printed


# Depth-4 seed-payload graph statistics.
# Row layout: vertices, density, (tri, squ) clustering, (full, norm) Wiener,
# (centre, diff) centrality, cycle-basis histogram {length: freq}.
SEED_GRAPH_DEPTH4 = {
    "A4": (72, "0.034", ("0", "0.058"), (13968, "5.46"), (0, "0.029"), {4: 17}),
    "D4": (80, "0.029", ("0", "0.037"), (17941, "5.68"), (0, "0.037"), {4: 13}),
    "F4": (65, "0.040", ("0", "0.064"), (10700, "5.14"), (0, "0.031"), {4: 17, 6: 3}),
    "A13": (109, "0.020", ("0", "0.034"), (35284, "5.99"), (0, "0.054"), {4: 12}),
    "A22": (105, "0.021", ("0", "0.016"), (32664, "5.98"), (0, "0.061"), {4: 8}),
    "I1": (79, "0.031", ("0", "0.065"), (17174, "5.57"), (0, "0.015"), {4: 18}),
    "I2": (117, "0.019", ("0", "0.037"), (41160, "6.07"), (0, "0.063"), {4: 12}),
}

# Depth-4 quiver-payload graph statistics, same layout.  A centre entry of
# (1, None) means vertex 1 is most central so no depth-1 gap is reported.
QUIVER_GRAPH_DEPTH4 = {
    "A4": (52, "0.048", ("0", "0.066"), (6870, "5.18"), (0, "0.036"), {4: 13}),
    "D4": (41, "0.071", ("0", "0.251"), (3463, "4.22"), (0, "0.001"), {4: 15, 7: 3}),
    "F4": (40, "0.072", ("0", "0.098"), (3334, "4.27"), (0, "0.030"), {4: 14, 6: 2, 8: 1}),
    "A13": (70, "0.036", ("0", "0.041"), (12826, "5.31"), (0, "0.020"), {4: 9, 6: 8}),
    "A22": (50, "0.067", ("0.080", "0.108"), (4780, "3.90"), (0, "0.029"), {3: 8, 4: 15, 7: 2, 8: 8}),
    "I1": (61, "0.044", ("0", "0.134"), (9456, "5.17"), (1, None), {4: 18, 6: 2}),
    "I2": (107, "0.020", ("0", "0.040"), (33900, "5.98"), (0, "0.061"), {4: 10}),
}

# Full seed graphs of the finite algebras.  Row layout: vertices,
# closure depth, density, clustering, Wiener, (centre, diff) with
# centre None when no vertex dominates,
# cycle-basis histogram.
SEED_GRAPH_FULL = {
    "A4": (1008, 13, "0.0040", ("0", "0.080"), (3881976, "7.65"), (None, None), {4: 672, 10: 337}),
    "B4": (420, 10, "0.0095", ("0", "0.077"), (542400, "6.16"), (None, None), {4: 270, 6: 60, 10: 91}),
    "C4": (420, 10, "0.0095", ("0", "0.077"), (542400, "6.16"), (None, None), {4: 270, 6: 60, 10: 91}),
    "D4": (1200, 12, "0.0033", ("0", "0.072"), (5150592, "7.16"), (None, None), {4: 624, 10: 577}),
    "F4": (420, 10, "0.0095", ("0", "0.072"), (536816, "6.10"), (None, None), {4: 252, 6: 111, 10: 58}),
}

# (count under permutation equivalence, count without, factor between them)
PERMUTATION_COUNTS = {
    "A4": (42, 1008, 24),
    "B4": (70, 420, 6),
    "C4": (70, 420, 6),
    "D4": (50, 1200, 24),
    "F4": (105, 420, 4),
}

# Permutations (beyond identity) under which every generated seed has a
# mutation-equivalent relabelling, as position tuples.
ORBIT_PERMUTATIONS = {
    "A4": "all",
    "D4": "all",
    "B4": {(0, 1, 2, 3), (0, 2, 1, 3), (1, 0, 2, 3), (1, 2, 0, 3), (2, 0, 1, 3), (2, 1, 0, 3)},
    "C4": {(0, 1, 2, 3), (0, 2, 1, 3), (1, 0, 2, 3), (1, 2, 0, 3), (2, 0, 1, 3), (2, 1, 0, 3)},
    "F4": {(0, 1, 2, 3), (0, 1, 3, 2), (1, 0, 2, 3), (1, 0, 3, 2)},
}

# Seed-count / quiver-count ratio of the full graphs.
SEED_QUIVER_RATIOS = {
    "A2": 5, "A3": 6, "A4": 7, "A5": 8,
    "B2": 3, "B3": 4, "B4": 5, "B5": 6,
    "C2": 3, "C3": 4, "C4": 5, "C5": 6,
    "D3": 6, "D4": 24, "D5": 10,
    "F4": 7, "G2": 4,
}
RATIOS_RANK_LE_4 = {k: v for k, v in SEED_QUIVER_RATIOS.items()
                    if k in ("A3", "B3", "C3", "D3", "A4", "B4", "C4", "D4", "F4", "G2")}

# Quiver-graph vertex counts for the full finite graphs.
QUIVER_GRAPH_FULL_VERTICES = {"A4": 144, "B4": 84, "C4": 84, "D4": 50, "F4": 60}

# Cycle-basis embedding profiles for the full finite graphs:
# quiver-basis length histogram, scale-factor (p) histogram, copy-factor
# (q) histogram.  The p/q splits depend on which minimum basis the solver
# returns, so reports treat them as representative rather than exact;
# the invariants p*q = ratio and even p on odd cycles always hold.
CYCLE_EMBEDDING_PROFILES = {
    "A4": ({4: 108, 6: 8, 10: 29}, {1: 90, 7: 55}, {1: 55, 7: 90}),
    "B4": ({4: 60, 6: 15, 8: 6, 10: 4}, {1: 49, 5: 36}, {1: 36, 5: 49}),
    "C4": ({4: 60, 6: 15, 8: 6, 10: 4}, {1: 49, 5: 36}, {1: 36, 5: 49}),
    "D4": ({4: 33, 7: 12, 8: 6}, {1: 15, 2: 2, 4: 25, 6: 6, 12: 3},
           {2: 3, 4: 6, 6: 25, 12: 2, 24: 15}),
    "F4": ({4: 42, 6: 14, 8: 4, 10: 1}, {1: 31, 7: 30}, {1: 30, 7: 31}),
    "A3": ({3: 6, 8: 2}, {3: 2, 6: 6}, {1: 6, 2: 2}),
    "B3": ({3: 4, 5: 2}, {4: 6}, {1: 6}),
}

# Binary classification benchmarks at depth 4.  Values: class sizes,
# tensor length without the exchange matrix, then (accuracy, MCC) means
# with and without the matrix appended.  Accuracies are accepted within
# +-0.08 of the benchmark with MCC > 0.5.
BINARY_BENCHMARKS = {
    ("A4", "D4"): ((72, 80), 180, (0.867, 0.741), (0.893, 0.788)),
    ("A4", "A13"): ((72, 109), 280, (0.944, 0.886), (0.878, 0.743)),
    ("F4", "I1"): ((65, 79), 2320, (0.950, 0.903), (0.936, 0.875)),
    ("A13", "A22"): ((109, 105), 280, (0.810, 0.630), (0.810, 0.633)),
    ("A13", "I1"): ((109, 79), 2320, (0.930, 0.855), (0.914, 0.801)),
    ("I1", "I2"): ((79, 117), 94280, (0.918, 0.830), (0.923, 0.840)),
}
ACCURACY_BAND = 0.08
MCC_FLOOR = 0.5

# Five-way finite-type classification benchmark.
MULTICLASS_MIN_ACCURACY = 0.95
MULTICLASS_MAX_OFF_DIAGONAL = 0.02

# Depth-sweep class sizes for the A4/D4 pair and encoded lengths
# (matrix-inclusive) at each depth.
DEPTH_SWEEP_CLASS_SIZES = [
    (5, 5), (14, 14), (32, 33), (72, 80), (151, 180), (283, 372),
    (462, 658), (653, 928), (815, 1091), (927, 1167), (988, 1195),
    (1007, 1200), (1008, 1200),
]
DEPTH_SWEEP_LENGTHS = [76, 96, 136, 196] + [196] * 9

# Real-vs-synthetic discrimination: matrix-inclusive tensor lengths and
# acceptance bands on mean accuracy.
FAKE_VS_TRUE_LENGTHS = {
    "A4": 196, "D4": 136, "F4": 336, "A13": 296, "A22": 176,
    "I1": 2336, "I2": 94296,
}
FAKE_VS_TRUE_EASY = ("A4", "D4", "F4", "A13", "A22")  # expect >= 0.97
FAKE_VS_TRUE_HARD_BAND = {"I1": (0.65, 0.95), "I2": (0.65, 0.95)}

# Cumulative seed counts per depth for the finite rank-4 algebras.
CLOSURE_COUNTS = {
    "A4": [1, 5, 14, 32, 72, 151, 283, 462, 653, 815, 927, 988, 1007, 1008],
    "D4": [1, 5, 14, 33, 80, 180, 372, 658, 928, 1091, 1167, 1195, 1200],
}
