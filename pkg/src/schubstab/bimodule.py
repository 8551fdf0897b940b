"""The coinvariant-style bimodule R (x)_{R^{S_n}} R in left coordinates,
its S_w basis, the evaluation maps F_w, and the length filtration.

Elements are stored as left-module coordinates over the free basis
{1 (x) schubert_u}: a map from permutations u to pure-x polynomials.  The
distinguished elements

    S_w = 1 (x) schubert_w
        + sum over additive factorizations w = v^{-1} u with length(u) <
          length(w) of schubert_v(-x) (x) schubert_u

are unitriangular over that basis in length order, so they form a free
basis too; Gamma_j is the span of the S_w with length(w) >= j.

The evaluation map F_w sends f (x) g to g(x_{w(1)}, ..., x_{w(n)}) * f,
i.e. it permutes the right factor's variables by w and multiplies.  The
identity this module certifies:

    F_w(S_{w'}) = (-1)^{length(w)} * delta(w^{-1}) when w' = w,
                  0 for every other w' with length(w') >= length(w),

where delta is the inversion product.  Note the inverse: already for
w = (2,3,1) the value is the inversion product of (3,1,2); the two
orientations agree on involutions.  Consequently the F_w matrix over any
downward-closed length range is triangular with nonzero diagonal, which is
the injectivity input the filtration argument needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping, Union

from .perms import Permutation, sort_key, symmetric_group
from .poly import Poly, negate_x, permute_x
from .schubert import delta_w, expand_in_schubert_basis, schubert_poly

Scalar = Union[int, "Poly"]


class BimoduleElement:
    """Left-basis coordinates over {1 (x) schubert_u}; zero coords dropped."""

    __slots__ = ("n", "coords")

    def __init__(self, n: int, coords: Mapping[Permutation, Poly]):
        if n < 1:
            raise ValueError("rank must be at least 1")
        clean: dict[Permutation, Poly] = {}
        for u, c in coords.items():
            if u.n != n:
                raise ValueError(f"coordinate permutation rank {u.n} != {n}")
            if c.ny != 0 or c.nx != n:
                raise ValueError("coordinates must be x-polynomials of matching rank")
            if not c.is_zero:
                clean[u] = c
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "coords", clean)

    def __setattr__(self, name, value):
        raise AttributeError("BimoduleElement is immutable")

    @property
    def is_zero(self) -> bool:
        return not self.coords

    def coordinate(self, u: Permutation) -> Poly:
        return self.coords.get(u, Poly.zero(self.n))

    def __add__(self, other: "BimoduleElement") -> "BimoduleElement":
        if self.n != other.n:
            raise ValueError(f"rank mismatch: {self.n} vs {other.n}")
        out = dict(self.coords)
        for u, c in other.coords.items():
            out[u] = out.get(u, Poly.zero(self.n)) + c
        return BimoduleElement(self.n, out)

    def __neg__(self) -> "BimoduleElement":
        return BimoduleElement(self.n, {u: -c for u, c in self.coords.items()})

    def __sub__(self, other: "BimoduleElement") -> "BimoduleElement":
        return self + (-other)

    def left_multiply(self, f: Union[Poly, int]) -> "BimoduleElement":
        """The left R-action: multiply every coordinate by f."""
        return BimoduleElement(self.n, {u: c * f for u, c in self.coords.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, BimoduleElement):
            return NotImplemented
        return self.n == other.n and self.coords == other.coords

    __hash__ = None

    def __str__(self) -> str:
        if not self.coords:
            return "0"
        bits = [
            f"({c})*[1(x)S_{u}]"
            for u, c in sorted(self.coords.items(), key=lambda kv: sort_key(kv[0]))
        ]
        return " + ".join(bits)

    __repr__ = __str__


@lru_cache(maxsize=None)
def s_element(w: Permutation) -> BimoduleElement:
    """The basis element S_w in left coordinates.

    coordinate[w] = 1; for shorter u, coordinate[u] = schubert_v(-x) with
    v = u o w^{-1}, kept only when length(v) + length(u) = length(w).
    """
    n = w.n
    coords: dict[Permutation, Poly] = {w: Poly.one(n)}
    lw = w.length()
    w_inv = w.inverse()
    for u in symmetric_group(n):
        lu = u.length()
        if lu >= lw:
            continue
        v = u * w_inv
        if v.length() + lu == lw:
            coords[u] = negate_x(schubert_poly(v))
    return BimoduleElement(n, coords)


def f_map(w: Permutation, elem: BimoduleElement) -> Poly:
    """Evaluation against the w-twisted diagonal: sum of
    coordinate[u] * permute_x(w, schubert_u)."""
    if w.n != elem.n:
        raise ValueError(f"rank mismatch: {w.n} vs {elem.n}")
    total = Poly.zero(elem.n)
    for u, c in elem.coords.items():
        total = total + c * permute_x(w, schubert_poly(u))
    return total


def change_of_basis_matrix(n: int) -> tuple[tuple[Permutation, ...], list[list[Poly]]]:
    """Rows S_w, columns 1 (x) schubert_u, both in (length, lex) order."""
    perms = symmetric_group(n)
    matrix = [[s_element(w).coordinate(u) for u in perms] for w in perms]
    return perms, matrix


def right_multiply(elem: BimoduleElement, g: Poly) -> BimoduleElement:
    """The right R-action in left coordinates.

    Each schubert_u * g is re-expanded over the Schubert basis with
    symmetric coefficients, which then slide across the tensor to the left.
    """
    if g.ny != 0 or g.nx != elem.n:
        raise ValueError("right factor must be an x-polynomial of matching rank")
    out: dict[Permutation, Poly] = {}
    for u, c in elem.coords.items():
        for t, sym in expand_in_schubert_basis(schubert_poly(u) * g).items():
            out[t] = out.get(t, Poly.zero(elem.n)) + c * sym
    return BimoduleElement(elem.n, out)


def s_basis_coordinates(elem: BimoduleElement) -> dict[Permutation, Poly]:
    """Coordinates of elem over the {S_w} basis, by back-substitution.

    Working down from the longest permutations, the residual coordinate at
    w is untouched by any S_u with length(u) <= length(w), u != w, so it is
    the S_w-coefficient; subtract and continue.
    """
    n = elem.n
    residual = dict(elem.coords)
    out: dict[Permutation, Poly] = {}
    for w in sorted(symmetric_group(n), key=sort_key, reverse=True):
        c = residual.get(w)
        if c is None or c.is_zero:
            continue
        out[w] = c
        for u, sc in s_element(w).coords.items():
            stay = residual.get(u, Poly.zero(n)) - c * sc
            if stay.is_zero:
                residual.pop(u, None)
            else:
                residual[u] = stay
    if any(not c.is_zero for c in residual.values()):
        raise RuntimeError("back-substitution left a residual; this is a bug")
    return out


def membership_in_gamma(elem: BimoduleElement, j: int) -> tuple[bool, dict[Permutation, Poly]]:
    """Whether elem lies in Gamma_j (S-coordinates vanish below length j).

    Returns the verdict together with the S-basis coordinates as witness.
    """
    witness = s_basis_coordinates(elem)
    ok = all(w.length() >= j for w in witness)
    return ok, witness


# ------------------------------------------------------------ certificates


def verify_filtration_identity(n: int) -> dict:
    """Check F_w(S_{w'}) over all pairs with length(w') >= length(w).

    Expected value: (-1)^{length(w)} * delta_w(w.inverse()) on the diagonal,
    zero off it.
    """
    perms = symmetric_group(n)
    pairs = 0
    violations: list[dict] = []
    for w in perms:
        lw = w.length()
        sign = -1 if lw % 2 else 1
        expected_diag = sign * delta_w(w.inverse())
        for w_prime in perms:
            if w_prime.length() < lw:
                continue
            pairs += 1
            got = f_map(w, s_element(w_prime))
            expected = expected_diag if w_prime == w else Poly.zero(n)
            if got != expected:
                violations.append(
                    {
                        "w": w.to_json(),
                        "w_prime": w_prime.to_json(),
                        "got": str(got),
                        "expected": str(expected),
                    }
                )
    return {
        "check": "filtration_identity",
        "n": n,
        "pairs": pairs,
        "violations": violations,
    }


def verify_unitriangular(n: int) -> dict:
    """S_w over the left basis: unit diagonal, zero above in length order."""
    perms, matrix = change_of_basis_matrix(n)
    entries = 0
    violations: list[dict] = []
    for r, w in enumerate(perms):
        for c, u in enumerate(perms):
            entries += 1
            val = matrix[r][c]
            if u == w:
                if val != Poly.one(n):
                    violations.append({"w": w.to_json(), "u": u.to_json(), "got": str(val)})
            elif u.length() >= w.length() and not val.is_zero:
                violations.append({"w": w.to_json(), "u": u.to_json(), "got": str(val)})
    return {
        "check": "s_basis_unitriangular",
        "n": n,
        "entries": entries,
        "violations": violations,
    }


def verify_bimodule_closure(n: int, j: int) -> dict:
    """Right multiplication by each variable keeps every S_w generator of
    Gamma_j inside Gamma_j."""
    perms = symmetric_group(n)
    products = 0
    violations: list[dict] = []
    for w in perms:
        if w.length() < j:
            continue
        sw = s_element(w)
        for k in range(1, n + 1):
            products += 1
            ok, _ = membership_in_gamma(right_multiply(sw, Poly.x(k, n)), j)
            if not ok:
                violations.append({"w": w.to_json(), "variable": k})
    return {
        "check": "filtration_right_closure",
        "n": n,
        "j": j,
        "products": products,
        "violations": violations,
    }


def verify_triangular_injectivity(n: int) -> dict:
    """The full F-matrix in decreasing length order is lower triangular
    with diagonal +/- delta, so its determinant is +/- the product of all
    inversion products, in particular nonzero.
    """
    perms = sorted(symmetric_group(n), key=sort_key, reverse=True)
    violations: list[dict] = []
    diag: list[Poly] = []
    for r, w in enumerate(perms):
        for c, w_prime in enumerate(perms):
            got = f_map(w, s_element(w_prime))
            if c == r:
                diag.append(got)
                sign = -1 if w.length() % 2 else 1
                if got != sign * delta_w(w.inverse()):
                    violations.append(
                        {"w": w.to_json(), "kind": "diagonal", "got": str(got)}
                    )
            elif w_prime.length() >= w.length() and not got.is_zero:
                # Everything on or above the length of w must vanish off the
                # diagonal; entries at strictly smaller length (c > r across
                # blocks) are genuine lower-triangle entries and unconstrained.
                violations.append(
                    {
                        "w": w.to_json(),
                        "w_prime": w_prime.to_json(),
                        "kind": "off_triangle",
                        "got": str(got),
                    }
                )
    determinant = Poly.one(n)
    for d in diag:
        determinant = determinant * d
    total_length = sum(w.length() for w in perms)
    product_of_deltas = Poly.one(n)
    for w in perms:
        product_of_deltas = product_of_deltas * delta_w(w)
    expected = product_of_deltas if total_length % 2 == 0 else -product_of_deltas
    if determinant != expected or determinant.is_zero:
        violations.append({"kind": "determinant", "got": str(determinant)})
    return {
        "check": "f_matrix_triangular_injectivity",
        "n": n,
        "matrix_size": len(perms),
        "determinant_nonzero": not determinant.is_zero,
        "violations": violations,
    }


# ------------------------------------------------------------ degree table


@dataclass(frozen=True)
class GraphTwistEntry:
    """Per-permutation degree data of the filtration quotient line bundle."""

    w: Permutation
    inversion_set: tuple[tuple[int, int], ...]
    delta: Poly
    degrees: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "w": self.w.to_json(),
            "inversions": [list(p) for p in self.inversion_set],
            "delta": self.delta.to_json(),
            "degrees": list(self.degrees),
        }


def graph_twist_table(n: int) -> list[GraphTwistEntry]:
    """Inversion products and their per-variable degrees, one row per w.

    degrees[i] is the degree of x_{i+1} in the inversion product, i.e. the
    number of inversion pairs containing i+1; the degrees sum to twice the
    length.
    """
    table = []
    for w in symmetric_group(n):
        inv = tuple(sorted(w.inversions()))
        delta = delta_w(w)
        degrees = tuple(
            sum(1 for pair in inv if i in pair) for i in range(1, n + 1)
        )
        table.append(GraphTwistEntry(w, inv, delta, degrees))
    return table
