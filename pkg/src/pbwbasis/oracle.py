"""Independent verification oracles and the drivers comparing against them.

The two oracles, the product dimension formula and triangular-pattern
counting, are deliberately self-contained: they never touch the polytope or
character machinery, so agreement is a genuine cross-check.  The drivers at
the bottom call both sides through their public interfaces and return
JSON-able reports.
"""

from __future__ import annotations

from collections import Counter
from functools import lru_cache

from .characters import character
from .polytope import lattice_points
from .rootsys import Weight, check_weight


def partition_from_weight(lam) -> tuple[int, ...]:
    """Partition ``ell`` of length n+1 with ``ell_a - ell_{a+1} = m_a`` and
    last entry zero."""
    lam = check_weight(lam)
    n = len(lam)
    return tuple(sum(lam[a:]) for a in range(n + 1))


def weyl_dim(lam) -> int:
    """Dimension by the product formula, in exact integer arithmetic."""
    ell = partition_from_weight(lam)
    size = len(ell)
    num = 1
    den = 1
    for a in range(size):
        for b in range(a + 1, size):
            num *= ell[a] - ell[b] + b - a
            den *= b - a
    q, r = divmod(num, den)
    assert r == 0
    return q


def _row_ranges(above: tuple[int, ...]) -> list[range]:
    # entry k of the next row interlaces: above[k] >= row[k] >= above[k+1]
    return [range(above[k + 1], above[k] + 1) for k in range(len(above) - 1)]


@lru_cache(maxsize=None)
def _gt_offset_counts(lam: Weight) -> dict[tuple[int, ...], int]:
    """Count interlacing triangular patterns by root-lattice offset."""
    n = len(lam)
    ell = partition_from_weight(lam)
    counts: Counter = Counter()

    def rec(above: tuple[int, ...], sums: list[int]) -> None:
        if len(above) == 1:
            row_sums = sums + [above[0]]
            # entry a of the pattern weight is |row of length a| - |row of length a-1|
            row_sums.reverse()
            w = [row_sums[0]]
            for k in range(1, n + 1):
                w.append(row_sums[k] - row_sums[k - 1])
            offset = []
            acc = 0
            for a in range(n):
                acc += ell[a] - w[a]
                offset.append(acc)
            counts[tuple(offset)] += 1
            return

        def fill(k: int, row: list[int]) -> None:
            if k == len(above) - 1:
                rec(tuple(row), sums + [sum(above)])
                return
            for v in range(above[k + 1], above[k] + 1):
                row.append(v)
                fill(k + 1, row)
                row.pop()

        fill(0, [])

    rec(ell, [])
    return dict(counts)


def gt_multiplicity(lam, mu_offset) -> int:
    """Number of patterns whose weight sits at the given root-lattice offset."""
    lam = check_weight(lam)
    mu_offset = tuple(mu_offset)
    if len(mu_offset) != len(lam):
        raise ValueError("offset length does not match rank")
    return _gt_offset_counts(lam).get(mu_offset, 0)


def gt_weight_multiplicities(lam) -> dict[tuple[int, ...], int]:
    """All pattern counts keyed by root-lattice offset."""
    return dict(_gt_offset_counts(check_weight(lam)))


def verify_dimension(lam) -> dict:
    """Compare the lattice-point count with the dimension formula."""
    lam = check_weight(lam)
    lhs = len(lattice_points(lam).points)
    rhs = weyl_dim(lam)
    return {
        "check": "dim",
        "lambda": list(lam),
        "pass": lhs == rhs,
        "lhs": lhs,
        "rhs": rhs,
    }


def verify_character(lam) -> dict:
    """Compare character multiplicities with pattern counts, weight by
    weight, over every weight appearing on either side."""
    lam = check_weight(lam)
    lhs = character(lam).multiplicities
    rhs = gt_weight_multiplicities(lam)
    offsets = sorted(set(lhs) | set(rhs))
    mismatches = [
        {"mu_offset": list(c), "lhs": lhs.get(c, 0), "rhs": rhs.get(c, 0)}
        for c in offsets
        if lhs.get(c, 0) != rhs.get(c, 0)
    ]
    return {
        "check": "char",
        "lambda": list(lam),
        "pass": not mismatches,
        "lhs": [[list(c), lhs.get(c, 0)] for c in offsets],
        "rhs": [[list(c), rhs.get(c, 0)] for c in offsets],
        "mismatches": mismatches,
    }
