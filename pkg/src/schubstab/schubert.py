"""Schubert and double Schubert polynomials, and expansion over them.

Everything is driven by divided differences applied to two seeds: the
staircase monomial x_1^{n-1} x_2^{n-2} ... x_{n-1} for the single
polynomials, and the product of (x_i - y_j) over i + j <= n for the
two-alphabet ones.  For a permutation w of rank n,

    schubert_poly(w)   = demazure(w^{-1} w_0, staircase)
    double_schubert(w) = demazure(w^{-1} w_0, double seed)

with w_0 the longest element.  The single polynomials form a free basis of
Q[x_1..x_n] over the symmetric polynomials; expand_in_schubert_basis
computes the (unique) symmetric coefficients degree by degree through an
exact linear solve over Q, which is cheap at the ranks this package
targets and avoids any Monk-rule bookkeeping.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .perms import Permutation, symmetric_group
from .poly import Exponent, Poly, demazure, is_symmetric, permute_x, specialize_y_to_x


@lru_cache(maxsize=None)
def staircase(n: int) -> Poly:
    """The monomial x_1^{n-1} x_2^{n-2} ... x_{n-1}^1."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    exp = tuple(n - i for i in range(1, n + 1))
    return Poly.monomial(exp, 1, n)


def delta_w(w: Permutation) -> Poly:
    """Product of (x_i - x_j) over the inversions of w.

    For the longest element this is the full Vandermonde determinant; for
    the identity it is 1.
    """
    n = w.n
    out = Poly.one(n)
    for i, j in sorted(w.inversions()):
        out = out * (Poly.x(i, n) - Poly.x(j, n))
    return out


@lru_cache(maxsize=None)
def schubert_poly(w: Permutation) -> Poly:
    n = w.n
    u = w.inverse() * Permutation.longest(n)
    return demazure(u, staircase(n))


@lru_cache(maxsize=None)
def double_delta(n: int) -> Poly:
    """Product of (x_i - y_j) over i + j <= n, inside Q[x_1..x_n, y_1..y_n]."""
    if n < 1:
        raise ValueError("rank must be at least 1")
    out = Poly.one(n, n)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            if i + j <= n:
                out = out * (Poly.x(i, n, n) - Poly.y(j, n, n))
    return out


@lru_cache(maxsize=None)
def double_schubert(w: Permutation) -> Poly:
    n = w.n
    u = w.inverse() * Permutation.longest(n)
    return demazure(u, double_delta(n))


def double_schubert_expansion(w: Permutation) -> Poly:
    """Rebuild the two-alphabet polynomial from single ones.

    Sums schubert(u)(x) * schubert(v)(-y) over the factorizations w = v^{-1} u
    with length(w) = length(v) + length(u).
    """
    from .poly import widen_with_y, x_to_neg_y

    n = w.n
    lw = w.length()
    total = Poly.zero(n, n)
    for v in symmetric_group(n):
        lv = v.length()
        if lv > lw:
            continue
        u = v * w  # w = v^{-1} u
        if u.length() + lv != lw:
            continue
        total = total + widen_with_y(schubert_poly(u), n) * x_to_neg_y(schubert_poly(v), n)
    return total


def specialization_check(w: Permutation, w_prime: Permutation) -> Poly:
    """The two-alphabet polynomial of w evaluated at x -> w'(x), y -> x.

    Concretely: permute the x-alphabet of double_schubert(w) by w', then
    identify y_i with x_i.  For length(w') <= length(w) this collapses to
    (-1)^{length(w)} delta_w(w.inverse()) when w' = w and to zero otherwise;
    callers verify exactly that.  (The inverse matters: already for
    w = (2,3,1) the value is (x1-x2)(x1-x3), the inversion product of
    w^{-1} = (3,1,2), not of w.  The two agree on involutions.)
    """
    if w.n != w_prime.n:
        raise ValueError(f"rank mismatch: {w.n} vs {w_prime.n}")
    if w_prime.length() > w.length():
        raise ValueError("identity regime needs length(w') <= length(w)")
    return specialize_y_to_x(permute_x(w_prime, double_schubert(w)))


# ----------------------------------------------------------- free basis


def _partitions_at_most(d: int, parts: int) -> list[tuple[int, ...]]:
    """Weakly decreasing positive tuples with at most `parts` parts, sum d."""
    if d == 0:
        return [()]
    out = []

    def rec(remaining: int, cap: int, room: int, prefix: tuple[int, ...]) -> None:
        if remaining == 0:
            out.append(prefix)
            return
        if room == 0:
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, room - 1, prefix + (part,))

    rec(d, d, parts, ())
    return out


def monomial_symmetric(lam: tuple[int, ...], n: int) -> Poly:
    """Sum of the distinct monomials with exponent multiset lam (padded to n)."""
    if len(lam) > n:
        raise ValueError("partition has more parts than variables")
    padded = tuple(lam) + (0,) * (n - len(lam))
    exps = set(itertools.permutations(padded))
    return Poly(n, 0, {e: Fraction(1) for e in exps})


def _monomials_of_degree(n: int, d: int) -> list[Exponent]:
    out = []

    def rec(slots: int, remaining: int, prefix: tuple[int, ...]) -> None:
        if slots == 1:
            out.append(prefix + (remaining,))
            return
        for e in range(remaining + 1):
            rec(slots - 1, remaining - e, prefix + (e,))

    rec(n, d, ())
    return sorted(out)


def _solve_unique(matrix: list[list[Fraction]], rhs: list[Fraction]) -> list[Fraction]:
    """Solve a square exact linear system with a unique solution.

    Plain Gaussian elimination over Fraction.  Raises RuntimeError when the
    matrix is singular; callers treat that as an internal inconsistency.
    """
    m = len(matrix)
    if any(len(row) != m for row in matrix) or len(rhs) != m:
        raise RuntimeError("linear system is not square")
    a = [list(row) + [rhs[i]] for i, row in enumerate(matrix)]
    for col in range(m):
        pivot = next((r for r in range(col, m) if a[r][col]), None)
        if pivot is None:
            raise RuntimeError("singular linear system; expansion basis failed")
        a[col], a[pivot] = a[pivot], a[col]
        inv = 1 / a[col][col]
        a[col] = [v * inv for v in a[col]]
        for r in range(m):
            if r != col and a[r][col]:
                factor = a[r][col]
                a[r] = [v - factor * p for v, p in zip(a[r], a[col])]
    return [a[r][m] for r in range(m)]


def _expand_homogeneous(comp: Poly, d: int, perms: tuple[Permutation, ...]) -> dict[Permutation, Poly]:
    n = comp.nx
    unknowns: list[tuple[Permutation, tuple[int, ...]]] = []
    columns: list[Poly] = []
    for w in perms:
        ell = w.length()
        if ell > d:
            continue
        sw = schubert_poly(w)
        for lam in _partitions_at_most(d - ell, n):
            unknowns.append((w, lam))
            columns.append(monomial_symmetric(lam, n) * sw)
    rows = _monomials_of_degree(n, d)
    index = {exp: r for r, exp in enumerate(rows)}
    if len(rows) != len(unknowns):
        raise RuntimeError("expansion basis has the wrong size; this is a bug")
    matrix = [[Fraction(0)] * len(unknowns) for _ in rows]
    for k, colpoly in enumerate(columns):
        for exp, c in colpoly.terms.items():
            matrix[index[exp]][k] = c
    rhs = [Fraction(0)] * len(rows)
    for exp, c in comp.terms.items():
        rhs[index[exp]] = c
    solution = _solve_unique(matrix, rhs)
    out: dict[Permutation, Poly] = {}
    for (w, lam), coeff in zip(unknowns, solution):
        if coeff:
            out[w] = out.get(w, Poly.zero(n)) + coeff * monomial_symmetric(lam, n)
    return out


def expand_in_schubert_basis(f: Poly) -> dict[Permutation, Poly]:
    """Write f as a sum of symmetric coefficients times Schubert polynomials.

    Returns {w: c_w} with every c_w symmetric and nonzero, satisfying
    f = sum c_w * schubert_poly(w).  Works degree by degree; within one
    degree the products m_lam * schubert(w) form a basis, so the exact
    solve has exactly one solution.
    """
    if f.ny != 0:
        raise ValueError("expansion is defined for x-variable polynomials only")
    n = f.nx
    perms = symmetric_group(n)
    out: dict[Permutation, Poly] = {}
    for d, comp in f.homogeneous_components().items():
        for w, c in _expand_homogeneous(comp, d, perms).items():
            out[w] = out.get(w, Poly.zero(n)) + c
    for w in list(out):
        if out[w].is_zero:
            del out[w]
        elif not is_symmetric(out[w]):
            raise RuntimeError("expansion produced a non-symmetric coefficient; this is a bug")
    return out


def expansion_to_json(coeffs: dict[Permutation, Poly]) -> dict:
    """Schema: {"coeffs": [{"w": [...], "poly": {...}}]} in enumeration order."""
    from .perms import sort_key

    return {
        "coeffs": [
            {"w": w.to_json(), "poly": coeffs[w].to_json()}
            for w in sorted(coeffs, key=sort_key)
        ]
    }
