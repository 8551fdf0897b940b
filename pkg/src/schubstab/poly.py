"""Exact sparse polynomials over Q with a symmetric-group action on the
x-variables and divided-difference operators.

A Poly lives in Q[x_1..x_nx, y_1..y_ny].  Terms map exponent tuples of
length nx + ny (x-block first) to nonzero `fractions.Fraction`
coefficients, so `==` is exact polynomial identity.  Most of the package
works in the pure-x ring (ny = 0); the y-block exists for two-alphabet
polynomials and is inert under the group action and the operators.

The divided-difference operator of index j sends f to
(f - s_j f) / (x_j - x_{j+1}), where s_j swaps x_j and x_{j+1}.  The
numerator is always divisible; division is performed by synthetic (Horner)
division along the x_j-degree, and a nonzero remainder raises RuntimeError
because it can only mean an implementation bug.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Mapping, Union

from .perms import Permutation, canonical_reduced_word, symmetric_group

Exponent = tuple[int, ...]
Scalar = Union[int, Fraction]


class Poly:
    """Immutable sparse polynomial with Fraction coefficients."""

    __slots__ = ("nx", "ny", "terms")

    def __init__(self, nx: int, ny: int, terms: Mapping[Exponent, Scalar]):
        if nx < 0 or ny < 0:
            raise ValueError("variable counts must be nonnegative")
        clean: dict[Exponent, Fraction] = {}
        width = nx + ny
        for exp, c in terms.items():
            exp = tuple(exp)
            if len(exp) != width:
                raise ValueError(f"exponent {exp} has {len(exp)} slots, ring has {width}")
            if any(e < 0 for e in exp):
                raise ValueError(f"negative exponent in {exp}")
            c = Fraction(c)
            if c:
                clean[exp] = c
        object.__setattr__(self, "nx", nx)
        object.__setattr__(self, "ny", ny)
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    # ------------------------------------------------------- constructors

    @staticmethod
    def zero(nx: int, ny: int = 0) -> "Poly":
        return Poly(nx, ny, {})

    @staticmethod
    def const(value: Scalar, nx: int, ny: int = 0) -> "Poly":
        return Poly(nx, ny, {(0,) * (nx + ny): Fraction(value)})

    @staticmethod
    def one(nx: int, ny: int = 0) -> "Poly":
        return Poly.const(1, nx, ny)

    @staticmethod
    def x(i: int, nx: int, ny: int = 0) -> "Poly":
        """The variable x_i (1-indexed)."""
        if not 1 <= i <= nx:
            raise ValueError(f"x-index {i} out of range for {nx} x-variables")
        exp = [0] * (nx + ny)
        exp[i - 1] = 1
        return Poly(nx, ny, {tuple(exp): Fraction(1)})

    @staticmethod
    def y(i: int, nx: int, ny: int) -> "Poly":
        """The variable y_i (1-indexed)."""
        if not 1 <= i <= ny:
            raise ValueError(f"y-index {i} out of range for {ny} y-variables")
        exp = [0] * (nx + ny)
        exp[nx + i - 1] = 1
        return Poly(nx, ny, {tuple(exp): Fraction(1)})

    @staticmethod
    def monomial(exp: Iterable[int], coeff: Scalar, nx: int, ny: int = 0) -> "Poly":
        return Poly(nx, ny, {tuple(exp): Fraction(coeff)})

    # -------------------------------------------------------- ring queries

    @property
    def is_zero(self) -> bool:
        return not self.terms

    def coefficient(self, exp: Iterable[int]) -> Fraction:
        return self.terms.get(tuple(exp), Fraction(0))

    def total_degree(self) -> int:
        """Max total degree of a term; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        return max(sum(e) for e in self.terms)

    def x_degree(self, i: int) -> int:
        """Largest exponent of x_i appearing; 0 for the zero polynomial."""
        if not 1 <= i <= self.nx:
            raise ValueError(f"x-index {i} out of range for {self.nx} x-variables")
        if not self.terms:
            return 0
        return max(e[i - 1] for e in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(e) for e in self.terms}
        return len(degs) <= 1

    def homogeneous_components(self) -> dict[int, "Poly"]:
        buckets: dict[int, dict[Exponent, Fraction]] = {}
        for exp, c in self.terms.items():
            buckets.setdefault(sum(exp), {})[exp] = c
        return {d: Poly(self.nx, self.ny, t) for d, t in sorted(buckets.items())}

    def items_sorted(self) -> list[tuple[Exponent, Fraction]]:
        """Terms in graded lexicographic order (total degree, then exponents)."""
        return sorted(self.terms.items(), key=lambda kv: (sum(kv[0]), kv[0]))

    # ---------------------------------------------------------- arithmetic

    def _check_ring(self, other: "Poly") -> None:
        if self.nx != other.nx or self.ny != other.ny:
            raise ValueError(
                f"ring mismatch: ({self.nx},{self.ny}) vs ({other.nx},{other.ny})"
            )

    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nx, self.ny)
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            out[exp] = out.get(exp, Fraction(0)) + c
        return Poly(self.nx, self.ny, out)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self.nx, self.ny, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nx, self.ny)
        if not isinstance(other, Poly):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: Scalar) -> "Poly":
        return Poly.const(other, self.nx, self.ny) - self

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return Poly(self.nx, self.ny, {e: c * v for e, v in self.terms.items()})
        if not isinstance(other, Poly):
            return NotImplemented
        self._check_ring(other)
        out: dict[Exponent, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                out[key] = out.get(key, Fraction(0)) + c1 * c2
        return Poly(self.nx, self.ny, out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "Poly":
        if k < 0:
            raise ValueError("negative power")
        out = Poly.one(self.nx, self.ny)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.const(other, self.nx, self.ny)
        if not isinstance(other, Poly):
            return NotImplemented
        return (self.nx, self.ny) == (other.nx, other.ny) and self.terms == other.terms

    def __ne__(self, other: object) -> bool:
        eq = self.__eq__(other)
        return NotImplemented if eq is NotImplemented else not eq

    __hash__ = None  # mutable dict inside; polynomials are not dict keys

    # ------------------------------------------------------------- display

    def _var_name(self, slot: int) -> str:
        if slot < self.nx:
            return f"x{slot + 1}"
        return f"y{slot - self.nx + 1}"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        ordered = sorted(self.terms.items(), key=lambda kv: (-sum(kv[0]), kv[0]))
        for exp, c in ordered:
            factors = []
            for slot, e in enumerate(exp):
                if e == 1:
                    factors.append(self._var_name(slot))
                elif e > 1:
                    factors.append(f"{self._var_name(slot)}^{e}")
            body = "*".join(factors)
            if not body:
                piece = str(abs(c))
            elif abs(c) == 1:
                piece = body
            else:
                piece = f"{abs(c)}*{body}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, piece))
        first_sign, first_piece = parts[0]
        text = ("-" if first_sign == "-" else "") + first_piece
        for sign, piece in parts[1:]:
            text += f" {sign} {piece}"
        return text

    def __repr__(self) -> str:
        return f"Poly({self})"

    def to_json(self) -> dict:
        """Schema: {"nvars": k, "terms": [{"exp": [...], "num": "...", "den": "..."}]}."""
        return {
            "nvars": self.nx + self.ny,
            "terms": [
                {
                    "exp": list(exp),
                    "num": str(c.numerator),
                    "den": str(c.denominator),
                }
                for exp, c in self.items_sorted()
            ],
        }


# ------------------------------------------------------------ group action


def permute_x(w: Permutation, f: Poly) -> Poly:
    """Act on the x-variables: x_i -> x_{w(i)}; y-variables are fixed."""
    if w.n != f.nx:
        raise ValueError(f"rank mismatch: permutation of {w.n}, polynomial has {f.nx} x-variables")
    out: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        moved = [0] * f.nx
        for i in range(f.nx):
            moved[w.word[i] - 1] = exp[i]
        out[tuple(moved) + exp[f.nx :]] = c
    return Poly(f.nx, f.ny, out)


def is_symmetric(f: Poly) -> bool:
    """True when f is invariant under every permutation of the x-variables."""
    return all(
        permute_x(Permutation.simple(j, f.nx), f) == f for j in range(1, f.nx)
    )


def divided_difference(j: int, f: Poly) -> Poly:
    """(f - s_j f) / (x_j - x_{j+1}), exactly.

    The numerator g is antisymmetric in x_j, x_{j+1}, hence divisible.  We
    treat g as a univariate polynomial in x_j with coefficients in the other
    variables and divide synthetically by (x_j - x_{j+1}); the remainder must
    vanish.
    """
    if not 1 <= j <= f.nx - 1:
        raise ValueError(f"operator index {j} out of range for {f.nx} x-variables")
    g = f - permute_x(Permutation.simple(j, f.nx), f)
    if g.is_zero:
        return Poly.zero(f.nx, f.ny)
    slot, succ = j - 1, j  # 0-based slots of x_j and x_{j+1}

    # Bucket the numerator by x_j-degree; keys have the x_j slot zeroed.
    buckets: dict[int, dict[Exponent, Fraction]] = {}
    for exp, c in g.terms.items():
        rest = exp[:slot] + (0,) + exp[slot + 1 :]
        buckets.setdefault(exp[slot], {})[rest] = c

    def plus(acc: dict[Exponent, Fraction], inc: dict[Exponent, Fraction]) -> dict:
        for k, v in inc.items():
            s = acc.get(k, Fraction(0)) + v
            if s:
                acc[k] = s
            else:
                acc.pop(k, None)
        return acc

    def times_succ(d: dict[Exponent, Fraction]) -> dict[Exponent, Fraction]:
        return {
            k[:succ] + (k[succ] + 1,) + k[succ + 1 :]: v for k, v in d.items()
        }

    top = max(buckets)
    out: dict[Exponent, Fraction] = {}
    carry = dict(buckets[top])  # quotient coefficient of x_j^{top-1}
    for k in range(top - 1, -1, -1):
        for rest, c in carry.items():
            out[rest[:slot] + (k,) + rest[slot + 1 :]] = c
        carry = plus(times_succ(carry), buckets.get(k, {}))
    if carry:
        raise RuntimeError("exact division by (x_j - x_{j+1}) left a remainder; this is a bug")
    return Poly(f.nx, f.ny, out)


def demazure(w: Permutation, f: Poly) -> Poly:
    """Composite divided difference along any reduced word of w.

    The operators satisfy the braid relations, so the result does not depend
    on the chosen word; the canonical (lex-smallest) one is used.
    """
    if w.n != f.nx:
        raise ValueError(f"rank mismatch: permutation of {w.n}, polynomial has {f.nx} x-variables")
    out = f
    for a in reversed(canonical_reduced_word(w)):
        out = divided_difference(a, out)
    return out


def demazure_along_word(letters: Iterable[int], f: Poly) -> Poly:
    """Composite along an explicit word, rightmost letter applied first."""
    out = f
    for a in reversed(tuple(letters)):
        out = divided_difference(a, out)
    return out


# ----------------------------------------------------- two-alphabet moves


def _require_pure_x(f: Poly) -> None:
    if f.ny != 0:
        raise ValueError("expected a polynomial in the x-variables only")


def widen_with_y(f: Poly, ny: int) -> Poly:
    """Embed Q[x] into Q[x, y_1..y_ny]."""
    _require_pure_x(f)
    pad = (0,) * ny
    return Poly(f.nx, ny, {exp + pad: c for exp, c in f.terms.items()})


def x_to_neg_y(f: Poly, nx: int) -> Poly:
    """Send a pure-x polynomial f(x_1..x_k) to f(-y_1..-y_k) in Q[x_1..x_nx, y]."""
    _require_pure_x(f)
    out: dict[Exponent, Fraction] = {}
    pad = (0,) * nx
    for exp, c in f.terms.items():
        sign = -1 if sum(exp) % 2 else 1
        out[pad + exp] = sign * c
    return Poly(nx, f.nx, out)


def specialize_y_to_x(f: Poly) -> Poly:
    """Ring map y_i -> x_i; requires equal numbers of x- and y-variables."""
    if f.ny != f.nx:
        raise ValueError(f"need matching alphabets, got {f.nx} x- and {f.ny} y-variables")
    n = f.nx
    out: dict[Exponent, Fraction] = {}
    for exp, c in f.terms.items():
        key = tuple(exp[i] + exp[n + i] for i in range(n))
        s = out.get(key, Fraction(0)) + c
        if s:
            out[key] = s
        else:
            out.pop(key, None)
    return Poly(n, 0, out)


def set_y_to_zero(f: Poly) -> Poly:
    """Ring map y_i -> 0, landing in the pure-x ring."""
    n, m = f.nx, f.ny
    out = {
        exp[:n]: c for exp, c in f.terms.items() if not any(exp[n:])
    }
    return Poly(n, 0, out)


def negate_x(f: Poly) -> Poly:
    """Ring map x_i -> -x_i (y-variables fixed)."""
    out = {}
    for exp, c in f.terms.items():
        sign = -1 if sum(exp[: f.nx]) % 2 else 1
        out[exp] = sign * c
    return Poly(f.nx, f.ny, out)


# -------------------------------------------------- randomness, checking


def random_poly(
    rng: random.Random,
    nx: int,
    ny: int = 0,
    max_degree: int = 6,
    n_terms: int = 6,
    coeff_bound: int = 9,
) -> Poly:
    """Random sparse polynomial; deterministic for a seeded rng."""
    width = nx + ny
    terms: dict[Exponent, Fraction] = {}
    for _ in range(n_terms):
        d = rng.randint(0, max_degree)
        exp = [0] * width
        for _ in range(d):
            exp[rng.randrange(width)] += 1
        num = rng.randint(-coeff_bound, coeff_bound)
        if num == 0:
            num = 1
        den = rng.randint(1, 3)
        key = tuple(exp)
        terms[key] = terms.get(key, Fraction(0)) + Fraction(num, den)
    return Poly(nx, ny, terms)


def verify_demazure_relations(n: int, trials: int, seed: int) -> dict:
    """Certificate that the divided differences satisfy their algebra.

    Checks, on `trials` seeded random polynomials in n variables:
    square vanishing, the braid and commuting relations, the twisted
    Leibniz rule, and independence of demazure(w, -) from the choice of
    reduced word for every w in the rank-n group.
    """
    from .perms import reduced_words  # local import to keep module top light

    if n < 2:
        raise ValueError("need at least two variables")
    rng = random.Random(seed)
    polys = [random_poly(rng, n) for _ in range(trials)]
    violations: list[dict] = []
    counts = {
        "square_zero": 0,
        "braid": 0,
        "commuting": 0,
        "leibniz": 0,
        "reduced_word_independence": 0,
    }

    for t, f in enumerate(polys):
        for j in range(1, n):
            counts["square_zero"] += 1
            if not divided_difference(j, divided_difference(j, f)).is_zero:
                violations.append({"relation": "square_zero", "j": j, "trial": t})
        for j in range(1, n - 1):
            counts["braid"] += 1
            left = divided_difference(j, divided_difference(j + 1, divided_difference(j, f)))
            right = divided_difference(j + 1, divided_difference(j, divided_difference(j + 1, f)))
            if left != right:
                violations.append({"relation": "braid", "j": j, "trial": t})
        for i in range(1, n):
            for j in range(i + 2, n):
                counts["commuting"] += 1
                if divided_difference(i, divided_difference(j, f)) != divided_difference(
                    j, divided_difference(i, f)
                ):
                    violations.append({"relation": "commuting", "pair": [i, j], "trial": t})

    for t, f in enumerate(polys):
        g = polys[(t + 1) % len(polys)]
        for j in range(1, n):
            counts["leibniz"] += 1
            sj = Permutation.simple(j, n)
            lhs = divided_difference(j, f * g)
            rhs = divided_difference(j, f) * g + permute_x(sj, f) * divided_difference(j, g)
            if lhs != rhs:
                violations.append({"relation": "leibniz", "j": j, "trial": t})

    for w in symmetric_group(n):
        words = reduced_words(w)
        if len(words) < 2:
            continue
        for t, f in enumerate(polys):
            counts["reduced_word_independence"] += 1
            base = demazure_along_word(words[0], f)
            for letters in words[1:]:
                if demazure_along_word(letters, f) != base:
                    violations.append(
                        {
                            "relation": "reduced_word_independence",
                            "w": w.to_json(),
                            "word": list(letters),
                            "trial": t,
                        }
                    )
    return {
        "check": "demazure_relations",
        "n": n,
        "trials": trials,
        "seed": seed,
        "relations": counts,
        "violations": violations,
    }
