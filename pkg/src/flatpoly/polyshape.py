"""Integer polynomials, q-numbers, and coefficient-shape predicates.

A polynomial is a list of coefficients, index i = coefficient of t^i,
normalized so there is no trailing zero (the zero polynomial is []).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from . import lpexact
from .exactnum import frac


def normalize(coeffs):
    """Strip trailing zeros; canonical form of a coefficient list."""
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def poly_add(p, q):
    n = max(len(p), len(q))
    return normalize([(p[i] if i < len(p) else 0) + (q[i] if i < len(q) else 0)
                      for i in range(n)])


def poly_mul(p, q):
    if not p or not q:
        return []
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        for j, b in enumerate(q):
            out[i + j] += a * b
    return normalize(out)


def poly_scale(c, p):
    return normalize([c * a for a in p])

def poly_shift(p, k):
    """Multiply by t^k."""
    return normalize([0] * k + list(p))


def poly_eval(p, x):
    acc = 0
    for a in reversed(p):
        acc = acc * x + a
    return acc


def reverse_in_degree(p, deg):
    """Coefficient reversal a_i -> a_{deg-i}; deg must cover the support."""
    if len(p) > deg + 1:
        raise ValueError("degree too small for reversal")
    out = [0] * (deg + 1)
    for i, a in enumerate(p):
        out[deg - i] = a
    return normalize(out)


def q_number(m):
    """[m]_q = 1 + q + ... + q^(m-1)."""
    if m < 1:
        raise ValueError("q-number index must be positive")
    return [1] * m


def q_product(ms):
    """Product of q-numbers [m1]_q ... [md]_q; degree sum(ms) - len(ms)."""
    out = [1]
    for m in ms:
        out = poly_mul(out, q_number(m))
    return out


@dataclass(frozen=True)
class ShapeReport:
    palindromic: bool
    nonnegative: bool
    no_internal_zeros: bool
    log_concave: bool
    trapezoidal: bool

    def __post_init__(self):
        if self.log_concave and self.no_internal_zeros and self.nonnegative \
                and not self.trapezoidal:
            raise AssertionError(
                "log-concave positive sequences with no internal zeros "
                "must be trapezoidal")


def _is_trapezoidal(a):
    """Strictly increasing, then a constant plateau, then strictly decreasing."""
    n = len(a)
    if n == 0:
        return False
    if any(x <= 0 for x in a):
        return False
    i = 0
    while i + 1 < n and a[i] < a[i + 1]:
        i += 1
    j = i
    while j + 1 < n and a[j] == a[j + 1]:
        j += 1
    while j + 1 < n and a[j] > a[j + 1]:
        j += 1
    return j == n - 1


def shape_report(p) -> ShapeReport:
    """Compute every shape flag of a coefficient sequence from definitions.

    The trapezoidal test checks the increasing/plateau/decreasing chain
    directly; it does not go through log-concavity, which box-positive
    polynomials may fail.
    """
    a = normalize(p)
    palindromic = a == a[::-1]
    nonnegative = all(x >= 0 for x in a)
    support = [i for i, x in enumerate(a) if x != 0]
    if support:
        no_internal_zeros = all(a[i] != 0
                                for i in range(support[0], support[-1] + 1))
    else:
        no_internal_zeros = True
    log_concave = all(a[i] * a[i] >= a[i - 1] * a[i + 1]
                      for i in range(1, len(a) - 1))
    return ShapeReport(palindromic, nonnegative, no_internal_zeros,
                       log_concave, _is_trapezoidal(a))


@dataclass(frozen=True)
class BoxCertificate:
    """Positive combination of q-number products certifying a polynomial.

    terms is a tuple of (composition, coefficient) pairs; each composition
    has degree_d positive parts summing to deg(p) + degree_d, and expanding
    the combination reproduces the certified polynomial exactly.
    """

    degree_d: int
    terms: tuple

    def expand(self):
        out = []
        for comp, coef in self.terms:
            out = poly_add(out, poly_scale(coef, q_product(comp)))
        return out


def _compositions(total, parts):
    """All compositions of total into `parts` positive parts, lexicographic."""
    if parts == 1:
        if total >= 1:
            yield (total,)
        return
    for cut in combinations(range(1, total), parts - 1):
        prev = 0
        comp = []
        for c in cut:
            comp.append(c - prev)
            prev = c
        comp.append(total - prev)
        yield tuple(comp)


def box_certificate(p, d):
    """Certificate that p is a positive combination of d-fold q-number
    products of fixed total, or None when the exact feasibility LP over all
    compositions is infeasible.

    The returned certificate is re-verified by expansion, so a solver bug
    cannot produce a silently wrong answer.
    """
    p = normalize(p)
    if not p:
        raise ValueError("the zero polynomial has no box certificate")
    if any(a < 0 for a in p):
        raise ValueError("certificates exist only for nonnegative coefficients")
    D = len(p) - 1
    comps = list(_compositions(D + d, d))
    if not comps:
        return None
    # One equality per coefficient of t^0 .. t^D, one variable per composition.
    products = [q_product(c) for c in comps]
    rows = []
    for i in range(D + 1):
        rows.append([Fraction(prod[i] if i < len(prod) else 0)
                     for prod in products])
    prog = lpexact.LinearProgram.build(
        objective=[0] * len(comps),
        eq_lhs=rows,
        eq_rhs=[frac(a) for a in p],
        bounds=[(0, None)] * len(comps),
    )
    out = lpexact.lp_solve(prog)
    if out.status != lpexact.OPTIMAL:
        return None
    terms = tuple((comp, coef) for comp, coef in zip(comps, out.witness)
                  if coef > 0)
    cert = BoxCertificate(d, terms)
    if cert.expand() != p:
        raise AssertionError("certificate expansion mismatch")
    return cert
