"""Flat max-positive matrices from totally positive networks, the minor
interleaving formula, the closed-form external semi-activity of ordered
bases, and the explicit box-positive expansion of the basis polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactnum import Matrix, frac
from .polyshape import BoxCertificate, normalize, poly_add, poly_scale, q_product


class NotMaxPositive(ValueError):
    pass


@dataclass(frozen=True)
class GridNetwork:
    """Planar grid network whose path-weight matrix is totally positive.

    d rows by N columns; horizontal edges run right to left with the given
    positive weights (N - 1 per row), vertical edges run down with weight 1.
    Source i sits at the right end of row i, sink j below column j of the
    bottom row. Unit weights on the bottom row force an all-ones last row
    of the path matrix.
    """

    d: int
    N: int
    horizontal_weights: tuple   # d rows of N - 1 weights

    def __post_init__(self):
        if len(self.horizontal_weights) != self.d or \
                any(len(r) != self.N - 1 for r in self.horizontal_weights):
            raise ValueError("need d rows of N - 1 horizontal weights")
        for row in self.horizontal_weights:
            if any(w <= 0 for w in row):
                raise ValueError("weights must be positive")

    @property
    def last_row_unit(self):
        return all(w == 1 for w in self.horizontal_weights[-1])


def tp_from_network(net: GridNetwork) -> Matrix:
    """d x N matrix of weighted path sums, totally positive by construction."""
    w = [[frac(x) for x in row] for row in net.horizontal_weights]
    rows = []
    for i in range(net.d):
        # value[r][c]: weighted paths from source i to grid node (r, c).
        value = [[Fraction(0)] * net.N for _ in range(net.d)]
        value[i][net.N - 1] = Fraction(1)
        for r in range(i, net.d):
            for c in range(net.N - 2, -1, -1):
                value[r][c] += value[r][c + 1] * w[r][c]
            if r + 1 < net.d:
                for c in range(net.N):
                    value[r + 1][c] += value[r][c]
        rows.append(value[net.d - 1])
    return Matrix(rows)


def random_network(d, N, rng: random.Random, last_row_unit=True) -> GridNetwork:
    """Weights from a small-denominator pool, seeded for reproducibility."""
    pool = [Fraction(1, 4), Fraction(1, 3), Fraction(1, 2), Fraction(1),
            Fraction(2), Fraction(3), Fraction(4)]
    weights = []
    for i in range(d):
        if last_row_unit and i == d - 1:
            weights.append(tuple([Fraction(1)] * (N - 1)))
        else:
            weights.append(tuple(rng.choice(pool) for _ in range(N - 1)))
    return GridNetwork(d, N, tuple(weights))


@dataclass(frozen=True)
class FlatMaxPositive:
    """Suffix-sum matrix with an all-ones last row, built from a matrix C
    whose maximal minors are all positive."""

    A: Matrix
    C: Matrix


def flat_maxpos_from_C(C: Matrix) -> FlatMaxPositive:
    d = C.rows + 1
    N = C.cols
    if d - 1 > N:
        raise NotMaxPositive("C must have at least as many columns as rows")
    for cols in combinations(range(N), C.rows):
        if C.minor(range(C.rows), cols) <= 0:
            raise NotMaxPositive(f"non-positive maximal minor at columns {cols}")
    rows = []
    for i in range(d - 1):
        suffix = Fraction(0)
        row = [Fraction(0)] * N
        for j in range(N - 1, -1, -1):
            suffix += C.entries[i][j]
            row[j] = suffix
        rows.append(row)
    rows.append([Fraction(1)] * N)
    return FlatMaxPositive(Matrix(rows), C)


def minor_via_C(fmp: FlatMaxPositive, cols) -> Fraction:
    """Interleaved sum of C-minors equal to the selected maximal A-minor.

    The sum runs over j-tuples with i_1 <= j_1 < i_2 <= j_2 < ... < i_d;
    the result is asserted equal to the direct determinant.
    """
    cols = list(cols)
    d = fmp.A.rows
    if len(cols) != d or sorted(cols) != cols:
        raise ValueError("need a strictly increasing d-subset of columns")
    total = Fraction(0)
    if d == 1:
        total = Fraction(1)  # empty product over C-minors
    else:
        for js in combinations(range(fmp.C.cols), d - 1):
            if all(cols[r] <= js[r] < cols[r + 1] for r in range(d - 1)):
                total += fmp.C.minor(range(d - 1), js)
    direct = fmp.A.minor(range(d), cols)
    if total != direct:
        raise AssertionError("interleaving formula disagrees with determinant")
    return total


def ext_closed_form(basis, N) -> int:
    """Closed-form external semi-activity of an ordered basis when all
    maximal minors are positive: gaps before i_1, between i_2 and i_3,
    between i_4 and i_5, and so on (with sentinels 0 and N + 1)."""
    b = list(basis)
    if sorted(b) != b or len(set(b)) != len(b):
        raise ValueError("basis must be strictly increasing")
    if b and not (1 <= b[0] and b[-1] <= N):
        raise ValueError("basis elements must lie in 1..N")
    d = len(b)
    seq = [0] + b + [N + 1]
    total = 0
    k = 1
    while k <= d + 1:
        total += seq[k] - seq[k - 1] - 1
        k += 2
    return total


def f_tp_closed(fmp: FlatMaxPositive):
    """Explicit expansion of the basis polynomial as a positive combination
    of q-number products, one term per (d-1)-subset of [N-1].

    Returns (coefficients as Fractions, BoxCertificate).
    """
    d = fmp.A.rows
    N = fmp.A.cols
    poly = []
    terms = []
    if d == 1:
        comp = (N,)
        poly = q_product(comp)
        terms.append((comp, Fraction(1)))
    else:
        for js in combinations(range(1, N), d - 1):
            coef = fmp.C.minor(range(d - 1), [j - 1 for j in js])
            comp = (js[0],) + tuple(js[r + 1] - js[r] for r in range(d - 2)) \
                + (N - js[-1],)
            poly = poly_add(poly, poly_scale(coef, q_product(comp)))
            terms.append((comp, coef))
    cert = BoxCertificate(d, tuple(terms))
    return normalize([frac(c) for c in poly]), cert
