"""Oriented matroids of matrix columns and external semi-activity.

The central computation: enumerate the bases of the column matroid of a
flat full-row-rank matrix, orient each fundamental circuit with a generic
vector, count externally semi-active elements, and assemble the
basis-volume generating polynomial.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .exactnum import Matrix, dot, flat_witness
from .polyshape import normalize

#: Symbolic generic vector: orient every circuit so its minimal support
#: element lands in the positive part (the epsilon-power order).
LEX_ORDER = "lex"

RESAMPLE_LIMIT = 32


class NotGeneric(ValueError):
    """The supplied vector lies on a secondary-arrangement hyperplane."""


class NotFlat(ValueError):
    pass


@dataclass(frozen=True)
class SignedCircuit:
    """A circuit with an orientation.

    lam is the dependency vector over the full ground set: sum of
    lam[i] * column_i is exactly zero, and it vanishes off the support.
    """

    support: tuple
    lam: tuple

    @property
    def positive_part(self):
        return frozenset(i for i in self.support if self.lam[i] > 0)

    @property
    def negative_part(self):
        return frozenset(i for i in self.support if self.lam[i] < 0)

    def negate(self):
        return SignedCircuit(self.support, tuple(-x for x in self.lam))


class MatroidContext:
    """A flat matrix of full row rank together with its flatness witness."""

    def __init__(self, matrix: Matrix, witness=None):
        if matrix.rank() != matrix.rows:
            raise ValueError("matrix must have full row rank")
        if witness is None:
            witness = flat_witness(matrix)
            if witness is None:
                raise NotFlat("no linear form evaluates to 1 on every column")
        for j in range(matrix.cols):
            if dot(witness, matrix.column(j)) != 1:
                raise NotFlat("witness does not certify flatness")
        self.matrix = matrix
        self.witness = list(witness)
        self.rank_d = matrix.rows
        self._circuits = None

    @property
    def n_elements(self):
        return self.matrix.cols


def enumerate_bases(ctx: MatroidContext):
    """Yield (basis tuple, |det| volume) in lexicographic order."""
    A = ctx.matrix
    for cand in combinations(range(A.cols), ctx.rank_d):
        d = A.minor(range(ctx.rank_d), cand)
        if d != 0:
            yield cand, abs(d)


def _basis_expansions(ctx: MatroidContext, basis):
    """Coefficients expressing every column in the given basis.

    Returns a d x N grid X with column_j = sum_i X[i][j] * column_{basis[i]},
    computed by one Gauss-Jordan pass on [A_B | A].
    """
    A = ctx.matrix
    d = ctx.rank_d
    aug = Matrix([[A.entries[i][b] for b in basis] + A.entries[i][:]
                  for i in range(d)])
    red, pivots = aug._rref()
    if pivots != list(range(d)):
        raise ValueError("selected columns are not a basis")
    return [row[d:] for row in red]


def fundamental_circuit(ctx: MatroidContext, basis, j) -> SignedCircuit:
    """The unique circuit inside basis + {j}, normalized so lam[j] = -1."""
    if j in basis:
        raise ValueError("element already belongs to the basis")
    X = _basis_expansions(ctx, basis)
    col = [X[i][j] for i in range(ctx.rank_d)]
    lam = [Fraction(0)] * ctx.n_elements
    for i, b in enumerate(basis):
        lam[b] = col[i]
    lam[j] = Fraction(-1)
    support = tuple(sorted(i for i in range(ctx.n_elements) if lam[i] != 0))
    return SignedCircuit(support, tuple(lam))


def orient_circuit(c: SignedCircuit, rho) -> SignedCircuit:
    """Return c or its negation so the generic vector sees it positively."""
    if rho == LEX_ORDER:
        return c if c.lam[c.support[0]] > 0 else c.negate()
    val = dot(c.lam, rho)
    if val == 0:
        raise NotGeneric(f"rho is orthogonal to circuit {c.support}")
    return c if val > 0 else c.negate()


def ext_semiactivity(ctx: MatroidContext, basis, rho):
    """(Ext set, count): non-basis elements in the positive part of their
    oriented fundamental circuit."""
    ext = _ext_via_expansions(ctx, basis, rho)
    return ext, len(ext)


def _ext_via_expansions(ctx: MatroidContext, basis, rho):
    X = _basis_expansions(ctx, basis)
    basis_set = set(basis)
    ext = []
    for j in range(ctx.n_elements):
        if j in basis_set:
            continue
        lam = [Fraction(0)] * ctx.n_elements
        for i, b in enumerate(basis):
            lam[b] = X[i][j]
        lam[j] = Fraction(-1)
        support = tuple(sorted(i for i in range(ctx.n_elements)
                               if lam[i] != 0))
        c = orient_circuit(SignedCircuit(support, tuple(lam)), rho)
        if j in c.positive_part:
            ext.append(j)
    return ext


def f_poly_frac(ctx: MatroidContext, rho=LEX_ORDER):
    """Coefficient of t^k = total basis volume at external semi-activity k.

    Coefficients are Fractions; use f_poly for the integer-coefficient form.
    """
    coeffs = {}
    for basis, vol in enumerate_bases(ctx):
        _, ext = ext_semiactivity(ctx, basis, rho)
        coeffs[ext] = coeffs.get(ext, Fraction(0)) + vol
    if not coeffs:
        return []
    out = [Fraction(0)] * (max(coeffs) + 1)
    for k, v in coeffs.items():
        out[k] = v
    return normalize(out)


def f_poly(ctx: MatroidContext, rho=LEX_ORDER):
    """Integer-coefficient basis-activity polynomial.

    Raises if a non-integer coefficient survives, which cannot happen for
    integer input matrices.
    """
    out = f_poly_frac(ctx, rho)
    if any(c.denominator != 1 for c in out):
        raise ValueError("non-integer coefficient; use f_poly_frac")
    return [int(c) for c in out]


def f_poly_many(ctx: MatroidContext, rhos):
    """f_poly for several generic vectors at once.

    Fundamental circuits are computed once per basis and reused across all
    the vectors, which matters when checking rho-invariance over many
    samples. Returns one coefficient list per vector, Fractions like
    f_poly_frac.
    """
    rhos = list(rhos)
    coeff_maps = [{} for _ in rhos]
    for basis, vol in enumerate_bases(ctx):
        X = _basis_expansions(ctx, basis)
        raw = []
        for j in range(ctx.n_elements):
            if j in basis:
                continue
            lam = [Fraction(0)] * ctx.n_elements
            for i, b in enumerate(basis):
                lam[b] = X[i][j]
            lam[j] = Fraction(-1)
            support = tuple(sorted(i for i in range(ctx.n_elements)
                                   if lam[i] != 0))
            raw.append((j, SignedCircuit(support, tuple(lam))))
        for r, rho in enumerate(rhos):
            ext = sum(1 for j, c in raw
                      if j in orient_circuit(c, rho).positive_part)
            coeff_maps[r][ext] = coeff_maps[r].get(ext, Fraction(0)) + vol
    out = []
    for cm in coeff_maps:
        coeffs = [Fraction(0)] * (max(cm) + 1) if cm else []
        for k, v in cm.items():
            coeffs[k] = v
        out.append(normalize(coeffs))
    return out


def circuits(ctx: MatroidContext):
    """All circuits, as minimal dependent column sets of size <= d + 1.

    Cached on the context; the circuit list is orientation-free data.
    """
    if ctx._circuits is not None:
        return ctx._circuits
    A = ctx.matrix
    seen = []
    seen_supports = set()
    for size in range(1, ctx.rank_d + 2):
        for cand in combinations(range(A.cols), size):
            if any(s <= set(cand) for s in seen_supports):
                continue
            sub = A.submatrix(range(A.rows), cand)
            ker = sub.kernel_basis()
            if not ker:
                continue
            lam = [Fraction(0)] * ctx.n_elements
            for idx, j in enumerate(cand):
                lam[j] = ker[0][idx]
            if any(lam[j] == 0 for j in cand):
                continue  # dependent but not minimal; a subset is a circuit
            seen_supports.add(frozenset(cand))
            seen.append(SignedCircuit(tuple(cand), tuple(lam)))
    ctx._circuits = seen
    return seen


def is_generic(ctx: MatroidContext, rho) -> bool:
    """True iff rho avoids every secondary-arrangement hyperplane."""
    if rho == LEX_ORDER:
        return True
    return all(dot(c.lam, rho) != 0 for c in circuits(ctx))


def sample_generic_rho(ctx: MatroidContext, rng: random.Random):
    """Random generic vector with small-denominator rational entries.

    Resamples on hyperplane hits, up to RESAMPLE_LIMIT attempts.
    """
    for _ in range(RESAMPLE_LIMIT):
        rho = [Fraction(rng.randint(-40, 40), rng.randint(1, 8))
               for _ in range(ctx.n_elements)]
        if is_generic(ctx, rho):
            return rho
    raise NotGeneric("failed to sample a generic vector")
