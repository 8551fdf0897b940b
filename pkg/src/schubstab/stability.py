"""Exact phase arithmetic and desk-scale stability checks.

Phases are never evaluated transcendentally.  A nonzero charge z with
Im z > 0, or Im z = 0 and Re z < 0, determines theta in (0, 1] on the ray
R_{>0} e^{i pi theta}; two such rays are compared by the sign of the cross
product Re(z1)Im(z2) - Re(z2)Im(z1), with the negative real axis maximal.
A homological shift k moves the phase into (k, k+1], so phase points order
lexicographically by shift and then by ray.

Three families of checks live here:
  * Harder-Narasimhan filtrations of split sheaves on the projective line,
    where the filtration really is slope regrouping and is therefore
    computable, plus the purely formal regrouping of declared-semistable
    class pieces on a curve.
  * The "shadow" scan: twisting down by the ample generator must not raise
    the phase of any class in the strip.  This is a necessary
    central-charge consequence of the categorical twist inequality, not
    the inequality itself, and its certificates say so.
  * A small certificate calculus for twist/shift facts "sigma tensor O(t)
    stays at or below sigma[k]".  Composition adds twists and shifts;
    lowering the twist of a known fact is the monotone weakening step.
    The chain goal (a_j, j, strict) is derivable exactly when a_j <= j*N.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import total_ordering
from typing import Sequence

from .lattice import (
    ChargeParams,
    ExactComplex,
    LatticeVector,
    central_charge,
    subsets,
    twist,
    vector_from_rank_deg,
)


def in_strip(z: ExactComplex) -> bool:
    """Whether z lies on a ray with theta in (0, 1]."""
    if z.is_zero:
        return False
    return z.im > 0 or (z.im == 0 and z.re < 0)


@total_ordering
@dataclass(frozen=True)
class PhasePoint:
    """A phase shift + theta with theta in (0, 1], compared exactly."""

    charge: ExactComplex
    shift: int = 0

    def __post_init__(self):
        z = self.charge
        if z.is_zero:
            raise ValueError("zero charge has no phase")
        if z.im < 0:
            raise ValueError("charge below the real axis is outside the strip")
        if z.im == 0 and z.re > 0:
            raise ValueError("positive real charge is outside the strip")

    @classmethod
    def from_charge(cls, z: ExactComplex, shift: int = 0) -> "PhasePoint":
        return cls(z, shift)

    @property
    def is_phase_one(self) -> bool:
        return self.charge.im == 0

    def _ray(self) -> tuple[int, int]:
        """Primitive integer vector on the ray of the charge."""
        if self.is_phase_one:
            return (-1, 0)
        re, im = self.charge.re, self.charge.im
        scale = re.denominator * im.denominator
        a, b = int(re * scale), int(im * scale)
        g = math.gcd(a, b)
        return (a // g, b // g)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, PhasePoint):
            return NotImplemented
        return self.shift == other.shift and self._ray() == other._ray()

    def __lt__(self, other: "PhasePoint") -> bool:
        if not isinstance(other, PhasePoint):
            return NotImplemented
        if self.shift != other.shift:
            return self.shift < other.shift
        if self.is_phase_one:
            return False
        if other.is_phase_one:
            return True
        z, w = self.charge, other.charge
        return z.re * w.im - w.re * z.im > 0

    def __hash__(self) -> int:
        return hash((self.shift, self._ray()))

    def to_json(self) -> dict:
        return {
            "re": str(self.charge.re),
            "im": str(self.charge.im),
            "shift": self.shift,
        }

    def __str__(self) -> str:
        a, b = self._ray()
        return f"phase(shift={self.shift}, ray=({a},{b}))"


def phase(z: ExactComplex) -> PhasePoint:
    """Ordering key for theta in (0, 1]; rejects charges off the strip."""
    return PhasePoint(z, 0)


def phase_lower_bound(factor_phases: Sequence[PhasePoint]) -> PhasePoint:
    """Minimum of the given phase points."""
    if not factor_phases:
        raise ValueError("need at least one phase")
    return min(factor_phases)


# ------------------------------------------------- HN on the rational curve


@dataclass(frozen=True)
class SplitSheafP1:
    """Direct sum of line bundles O(d_i) and torsion sheaves of given lengths."""

    bundle_degrees: tuple[int, ...] = ()
    torsion_lengths: tuple[int, ...] = ()

    def __post_init__(self):
        degs = tuple(sorted(self.bundle_degrees, reverse=True))
        tors = tuple(sorted(self.torsion_lengths, reverse=True))
        if not all(isinstance(d, int) for d in degs):
            raise ValueError("bundle degrees must be integers")
        if not all(isinstance(t, int) and t >= 1 for t in tors):
            raise ValueError("torsion lengths must be positive integers")
        object.__setattr__(self, "bundle_degrees", degs)
        object.__setattr__(self, "torsion_lengths", tors)

    @property
    def is_zero(self) -> bool:
        return not self.bundle_degrees and not self.torsion_lengths

    @property
    def summands(self) -> int:
        return len(self.bundle_degrees) + len(self.torsion_lengths)

    def to_json(self) -> dict:
        return {
            "bundle_degrees": list(self.bundle_degrees),
            "torsion_lengths": list(self.torsion_lengths),
        }

    def __str__(self) -> str:
        bits = [f"O({d})" for d in self.bundle_degrees]
        bits += [f"T({t})" for t in self.torsion_lengths]
        return " + ".join(bits) if bits else "0"


def hn_split_p1(
    sheaf: SplitSheafP1, p: ChargeParams
) -> list[tuple[SplitSheafP1, PhasePoint]]:
    """HN factors of a split sheaf, top (largest phase) first.

    Torsion is semistable of phase 1 and forms the top factor; bundle
    summands of equal degree form one semistable factor each, ordered by
    decreasing degree.  Degree order is phase order for every valid (a, b):
    the cross product of the two charges reduces to a * (d2 r1 - d1 r2).
    """
    if p.n != 1:
        raise ValueError("split-sheaf HN lives on a curve (n = 1)")
    if sheaf.is_zero:
        raise ValueError("the zero sheaf has no HN filtration")
    factors: list[tuple[SplitSheafP1, PhasePoint]] = []
    if sheaf.torsion_lengths:
        z = ExactComplex(Fraction(-sum(sheaf.torsion_lengths)), Fraction(0))
        factors.append((SplitSheafP1((), sheaf.torsion_lengths), PhasePoint(z)))
    for d in sorted(set(sheaf.bundle_degrees), reverse=True):
        k = sheaf.bundle_degrees.count(d)
        z = ExactComplex(p.b * k - Fraction(k * d), p.a * k)
        factors.append((SplitSheafP1((d,) * k, ()), PhasePoint(z)))
    return factors


def hn_factors_to_json(factors: list[tuple[SplitSheafP1, PhasePoint]]) -> list[dict]:
    return [
        {"factor": sheaf.to_json(), "phase": point.to_json()}
        for sheaf, point in factors
    ]


def hn_slope_regroup(pieces: Sequence[tuple]) -> list[list[tuple]]:
    """Group declared-semistable (rank, degree) pieces by slope.

    Purely formal: the pieces are taken on faith as semistable classes on
    a curve, and only the bookkeeping of Notation-style regrouping is done.
    Torsion pieces (rank 0) form the first group; the rest are grouped by
    exact slope d/r in decreasing order.  No charge parameters enter
    because slope order is phase order for every valid (a, b).
    """
    torsion: list[tuple] = []
    by_slope: dict[Fraction, list[tuple]] = {}
    for piece in pieces:
        r, d = Fraction(piece[0]), Fraction(piece[1])
        if r < 0:
            raise ValueError(f"negative rank in piece {piece}")
        if r == 0:
            if d <= 0:
                raise ValueError(f"piece {piece} is not a nonzero sheaf class")
            torsion.append(piece)
        else:
            by_slope.setdefault(d / r, []).append(piece)
    groups: list[list[tuple]] = []
    if torsion:
        groups.append(torsion)
    for slope in sorted(by_slope, reverse=True):
        groups.append(by_slope[slope])
    return groups


# ------------------------------------------------------------- shadow scan


def bayer_shadow_scan(p: ChargeParams, bound: int) -> dict:
    """Check that twisting by the dual ample class never raises the phase.

    This is a class-level shadow of the categorical twist inequality: the
    certificate carries shadow = true because agreeing charges prove
    nothing about the categories, only disagreeing ones would refute.

    n = 1 is the rigorous regime: every (r, d) with r in [1, bound] and
    |d| <= bound, plus torsion classes (0, d), is in the strip, and the
    phase must drop strictly except on torsion, where it is fixed.  For
    n >= 2 every component vector in the box [-bound, bound]^(2^n) is
    tried, and vectors leaving the strip (before or after the twist) are
    skipped rather than counted against the check.
    """
    if bound < 1:
        raise ValueError("bound must be at least 1")
    n = p.n
    scanned = 0
    skipped = 0
    violations: list[dict] = []
    if n == 1:
        for r in range(1, bound + 1):
            for d in range(-bound, bound + 1):
                scanned += 1
                before = phase(central_charge(p, vector_from_rank_deg(r, d)))
                after = phase(central_charge(p, vector_from_rank_deg(r, d - r)))
                if not after < before:
                    violations.append(
                        {
                            "piece": [r, d],
                            "kind": "phase_did_not_drop",
                            "before": before.to_json(),
                            "after": after.to_json(),
                        }
                    )
        for d in range(1, bound + 1):
            scanned += 1
            before = phase(central_charge(p, vector_from_rank_deg(0, d)))
            after = phase(
                central_charge(p, twist(vector_from_rank_deg(0, d), [-1]))
            )
            if after != before:
                violations.append(
                    {
                        "piece": [0, d],
                        "kind": "torsion_phase_moved",
                        "before": before.to_json(),
                        "after": after.to_json(),
                    }
                )
    else:
        minus_one = [-1] * n
        cells = subsets(n)
        for values in itertools.product(range(-bound, bound + 1), repeat=len(cells)):
            vec = LatticeVector(n, dict(zip(cells, values)))
            z_before = central_charge(p, vec)
            z_after = central_charge(p, twist(vec, minus_one))
            if not (in_strip(z_before) and in_strip(z_after)):
                skipped += 1
                continue
            scanned += 1
            if phase(z_after) > phase(z_before):
                violations.append(
                    {
                        "vector": vec.to_json(),
                        "kind": "phase_rose",
                        "before": phase(z_before).to_json(),
                        "after": phase(z_after).to_json(),
                    }
                )
    return {
        "check": "bayer_shadow",
        "params": {"n": n, "a": str(p.a), "b": str(p.b), "bound": bound},
        "scanned": scanned,
        "skipped": skipped,
        "violations": violations,
        "shadow": True,
    }


# ------------------------------------------------------ twist-chain calculus


@dataclass(frozen=True)
class RelationFact:
    """The fact that an object twisted t times sits at or below shift k.

    strict records whether the comparison is known to be strict somewhere
    along the derivation; composing chains adds twists and shifts and ORs
    strictness.
    """

    twist: int
    shift: int
    strict: bool

    def __post_init__(self):
        if self.twist < 0 or self.shift < 0:
            raise ValueError("twist and shift must be non-negative")

    def to_json(self) -> dict:
        return {"twist": self.twist, "shift": self.shift, "strict": self.strict}

    def __str__(self) -> str:
        rel = "<" if self.strict else "<="
        return f"O({self.twist}) {rel} [{self.shift}]"


IDENTITY_FACT = RelationFact(0, 0, False)
BAYER_FACT = RelationFact(1, 0, False)


def restriction_fact(big_n: int) -> RelationFact:
    """The restriction axiom: N twists stay strictly under one shift."""
    if big_n < 1:
        raise ValueError("N must be positive")
    return RelationFact(big_n, 1, True)


def compose_relations(f1: RelationFact, f2: RelationFact) -> RelationFact:
    """Transitive chaining: twists and shifts add, strictness ORs."""
    return RelationFact(f1.twist + f2.twist, f1.shift + f2.shift, f1.strict or f2.strict)


def weaken_twist(fact: RelationFact) -> RelationFact:
    """Lower the twist by one, keeping shift and strictness.

    Sound because one more monotone twist step chains below the given
    fact; the twist cannot be weakened below zero.
    """
    if fact.twist == 0:
        raise ValueError("cannot weaken a twist of zero")
    return RelationFact(fact.twist - 1, fact.shift, fact.strict)


def derive_twist_chain(a_degrees: Sequence[int], big_n: int) -> list[dict]:
    """Derive the goal (a_j, j, strict) for each j, or refuse.

    Shift j is only reachable by composing the restriction axiom j times,
    which caps the twist at j*N; weakening then lowers the twist one step
    at a time.  So the goal is derivable exactly when a_j <= j*N, and when
    it is not, the certificate names the obstruction instead of asserting.
    """
    if big_n < 1:
        raise ValueError("N must be positive")
    certificates: list[dict] = []
    for j, a in enumerate(a_degrees, start=1):
        if a < 1:
            raise ValueError(f"a_{j} must be a positive integer, got {a}")
        goal = {"twist": a, "shift": j, "strict": True}
        entry: dict = {
            "check": "twist_chain",
            "params": {"j": j, "a": a, "N": big_n},
            "goal": goal,
        }
        cap = j * big_n
        if a > cap:
            entry["achievable"] = False
            entry["word"] = []
            entry["steps"] = []
            entry["violations"] = [
                {
                    "kind": "unreachable_goal",
                    "reason": f"requested twist {a} exceeds {j}*{big_n} = {cap}",
                }
            ]
            certificates.append(entry)
            continue
        fact = IDENTITY_FACT
        word: list[str] = []
        steps: list[dict] = []
        for _ in range(j):
            fact = compose_relations(fact, restriction_fact(big_n))
            word.append("restriction")
            steps.append({"rule": "restriction", "fact": fact.to_json()})
        for _ in range(cap - a):
            fact = weaken_twist(fact)
            word.append("weaken")
            steps.append({"rule": "weaken", "fact": fact.to_json()})
        entry["achievable"] = True
        entry["word"] = word
        entry["steps"] = steps
        entry["fact"] = fact.to_json()
        entry["violations"] = []
        if (fact.twist, fact.shift, fact.strict) != (a, j, True):
            entry["violations"].append(
                {"kind": "derivation_missed_goal", "fact": fact.to_json()}
            )
        certificates.append(entry)
    return certificates


def replay_twist_chain(entry: dict) -> RelationFact:
    """Re-run a chain certificate's word and return the final fact.

    Raises if the word is ill-formed or any recorded intermediate fact
    disagrees with the replay.
    """
    big_n = entry["params"]["N"]
    fact = IDENTITY_FACT
    for letter, step in zip(entry["word"], entry["steps"], strict=True):
        if letter != step["rule"]:
            raise ValueError("word and steps disagree")
        if letter == "restriction":
            fact = compose_relations(fact, restriction_fact(big_n))
        elif letter == "weaken":
            fact = weaken_twist(fact)
        else:
            raise ValueError(f"unknown rule {letter!r}")
        if fact.to_json() != step["fact"]:
            raise ValueError(f"recorded fact diverges at step {step}")
    return fact
