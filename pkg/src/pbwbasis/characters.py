"""Weights, degrees, characters and graded characters of the point sets.

Weights are keyed by their root-lattice offset ``c``: the character
multiplicity stored at ``c`` belongs to the weight ``lam - sum c_k alpha_k``.
Graded entries are dense coefficient lists in the degree variable q.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .polytope import lattice_points
from .rootsys import Weight, check_weight, exponent_weight


def wt(s, n: int | None = None) -> tuple[int, ...]:
    """Root-lattice offset of an exponent tuple."""
    return exponent_weight(s, n)


def deg(s) -> int:
    """Total degree of an exponent tuple."""
    return sum(s)


@dataclass(frozen=True)
class Character:
    weight: Weight
    multiplicities: dict[tuple[int, ...], int]

    def total(self) -> int:
        return sum(self.multiplicities.values())


@dataclass(frozen=True)
class GradedCharacter:
    weight: Weight
    table: dict[tuple[int, ...], tuple[int, ...]]  # offset -> q-coefficients

    def specialize(self) -> Character:
        """Set q = 1, recovering the ordinary character."""
        return Character(self.weight, {c: sum(p) for c, p in self.table.items()})

    def total(self) -> int:
        return sum(sum(p) for p in self.table.values())


def character(lam) -> Character:
    """Weight multiplicities read off the lattice points."""
    lam = check_weight(lam)
    n = len(lam)
    counts = Counter(wt(s, n) for s in lattice_points(lam).points)
    return Character(lam, dict(sorted(counts.items())))


def graded_character(lam) -> GradedCharacter:
    """Degree-graded weight multiplicities read off the lattice points."""
    lam = check_weight(lam)
    n = len(lam)
    by_offset: dict[tuple[int, ...], Counter] = {}
    for s in lattice_points(lam).points:
        by_offset.setdefault(wt(s, n), Counter())[deg(s)] += 1
    table = {}
    for c in sorted(by_offset):
        degrees = by_offset[c]
        top = max(degrees)
        table[c] = tuple(degrees.get(d, 0) for d in range(top + 1))
    return GradedCharacter(lam, table)


def q_poly_string(coeffs) -> str:
    """Render a coefficient list as ``a_0 + a_1 q + a_2 q^2`` (zero terms
    dropped, unit coefficients suppressed)."""
    terms = []
    for d, a in enumerate(coeffs):
        if not a:
            continue
        if d == 0:
            terms.append(str(a))
        else:
            power = "q" if d == 1 else f"q^{d}"
            terms.append(power if a == 1 else f"{a} {power}")
    return " + ".join(terms) if terms else "0"


def character_to_json(ch: Character) -> dict:
    return {
        "lambda": list(ch.weight),
        "char": [
            {"mu_offset": list(c), "mult": m} for c, m in sorted(ch.multiplicities.items())
        ],
    }


def graded_to_json(gc: GradedCharacter) -> dict:
    return {
        "lambda": list(gc.weight),
        "graded": [
            {"mu_offset": list(c), "poly": list(p)} for c, p in sorted(gc.table.items())
        ],
    }
