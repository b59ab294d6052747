"""The path polytope, its lattice points, orders, minimal sets, splitting,
mutations and the Minkowski-sum property.

The polytope of a highest weight ``lam`` is cut out by one inequality per
Dyck path: the coordinates along the path sum to at most the path bound.
Lattice points are nonnegative integer exponent tuples in the canonical
coordinate order of :mod:`pbwbasis.rootsys`.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import lru_cache

from .dyckpaths import DyckPath, enumerate_paths, path_bound
from .rootsys import (
    Root,
    Weight,
    check_weight,
    exponent_weight,
    fundamental_weight,
    num_positive_roots,
    positive_roots,
    rank_from_num_roots,
    root_index,
    root_support_of_weight,
    weight_support,
)


class CapacityError(RuntimeError):
    """A requested computation exceeds a configured size cap."""


@dataclass(frozen=True)
class PolytopeSpec:
    """Inequality description of the polytope of a highest weight."""

    n: int
    weight: Weight
    inequalities: tuple[tuple[DyckPath, int], ...]  # (support path, bound)


@dataclass(frozen=True)
class PointSet:
    """The lattice points of a polytope, sorted in ascending tuple order."""

    weight: Weight
    points: tuple[tuple[int, ...], ...]

    @property
    def n(self) -> int:
        return len(self.weight)


@dataclass(frozen=True)
class MinimalSet:
    """Minimal support roots of an exponent tuple inside one color class."""

    index: int
    roots: tuple[Root, ...]
    indicator: tuple[int, ...]


def build_polytope(lam) -> PolytopeSpec:
    """One inequality per Dyck path, with bound from ``path_bound``."""
    return _build_polytope_cached(check_weight(lam))


@lru_cache(maxsize=None)
def _build_polytope_cached(lam: Weight) -> PolytopeSpec:
    n = len(lam)
    ineqs = tuple((p, path_bound(p, lam)) for p in enumerate_paths(n))
    return PolytopeSpec(n, lam, ineqs)


def _check_exponents(s, n: int) -> tuple[int, ...]:
    s = tuple(s)
    if len(s) != num_positive_roots(n):
        raise ValueError(f"rank mismatch: {len(s)} coordinates for rank {n}")
    for v in s:
        if not isinstance(v, int) or v < 0:
            raise ValueError(f"exponents must be nonnegative integers, got {s!r}")
    return s


def contains(spec: PolytopeSpec, s) -> bool:
    """Whether ``s`` satisfies every inequality of ``spec``."""
    s = _check_exponents(s, spec.n)
    n = spec.n
    for support, bound in spec.inequalities:
        if sum(s[root_index(alpha, n)] for alpha in support) > bound:
            return False
    return True


def lattice_points(lam, threads: int = 1) -> PointSet:
    """All lattice points of the polytope of ``lam``, in ascending order.

    ``threads > 1`` partitions the search on the first coordinate; the
    result is identical to the serial enumeration.
    """
    lam = check_weight(lam)
    if threads <= 1:
        return _lattice_points_cached(lam)
    spec = build_polytope(lam)
    cap0 = _first_coordinate_cap(spec)
    with ThreadPoolExecutor(max_workers=threads) as pool:
        chunks = list(pool.map(lambda v: _enumerate(spec, first=v), range(cap0 + 1)))
    pts = tuple(sorted(p for chunk in chunks for p in chunk))
    return PointSet(lam, pts)


@lru_cache(maxsize=None)
def _lattice_points_cached(lam: Weight) -> PointSet:
    spec = _build_polytope_cached(lam)
    return PointSet(lam, tuple(_enumerate(spec, first=None)))


def _touching(spec: PolytopeSpec) -> list[list[int]]:
    n = spec.n
    touch: list[list[int]] = [[] for _ in range(num_positive_roots(n))]
    for t, (support, _) in enumerate(spec.inequalities):
        for alpha in support:
            touch[root_index(alpha, n)].append(t)
    return touch


def _first_coordinate_cap(spec: PolytopeSpec) -> int:
    touch = _touching(spec)
    return min(spec.inequalities[t][1] for t in touch[0])

def _enumerate(spec: PolytopeSpec, first: int | None) -> list[tuple[int, ...]]:
    # DFS in coordinate order with per-inequality slack tracking; assigning at
    # most the minimal remaining slack prunes every dead branch.
    count = num_positive_roots(spec.n)
    touch = _touching(spec)
    slack = [bound for _, bound in spec.inequalities]
    cur = [0] * count
    out: list[tuple[int, ...]] = []

    def rec(idx: int) -> None:
        if idx == count:
            out.append(tuple(cur))
            return
        cap = min(slack[t] for t in touch[idx])
        values = range(cap + 1)
        if idx == 0 and first is not None:
            if first > cap:
                return
            values = range(first, first + 1)
        for v in values:
            cur[idx] = v
            for t in touch[idx]:
                slack[t] -= v
            rec(idx + 1)
            for t in touch[idx]:
                slack[t] += v
        cur[idx] = 0

    rec(0)
    return out


def compare_leq(a: Root, b: Root) -> bool:
    """Componentwise partial order on roots: both indices weakly increase."""
    return a[0] <= b[0] and a[1] <= b[1]


def compare_ll(a, b) -> int:
    """Total order used for tuple coordinates: -1 if a before b, 0, or +1.

    Roots (index pairs) compare by second index, then first.  Exponent
    tuples of equal rank compare lexicographically over the canonical
    coordinate order.
    """
    a = tuple(a)
    b = tuple(b)
    if len(a) != len(b):
        raise ValueError("rank mismatch")
    if len(a) == 2:
        ka, kb = (a[1], a[0]), (b[1], b[0])
        return -1 if ka < kb else (0 if ka == kb else 1)
    return -1 if a < b else (0 if a == b else 1)


def minimal_set(s, i: int) -> MinimalSet:
    """Minimal elements (under the componentwise order) among the support
    roots of ``s`` that lie in the i-th color class, with their 0/1
    indicator tuple."""
    s = tuple(s)
    n = rank_from_num_roots(len(s))
    support = [alpha for alpha in root_support_of_weight(i, n) if s[root_index(alpha, n)] > 0]
    minimal = [
        a for a in support if not any(b != a and compare_leq(b, a) for b in support)
    ]
    minimal.sort(key=lambda r: (r[1], r[0]))
    indicator = [0] * num_positive_roots(n)
    for alpha in minimal:
        indicator[root_index(alpha, n)] = 1
    return MinimalSet(i, tuple(minimal), tuple(indicator))


def split(s, lam, i: int) -> tuple[tuple[int, ...], MinimalSet]:
    """Peel one copy of the i-th fundamental weight off a lattice point.

    Requires ``s`` to be a lattice point for ``lam`` and ``i`` to be the
    minimal index with a positive coefficient.  Returns ``(s', m)`` with
    ``s = s' + m.indicator``; the indicator is a lattice point for the
    fundamental weight and ``s'`` one for ``lam`` minus it (both checked).
    """
    lam = check_weight(lam)
    n = len(lam)
    s = _check_exponents(s, n)
    spec = build_polytope(lam)
    if not contains(spec, s):
        raise ValueError("s is not a lattice point of the polytope of lam")
    positives = [k for k, m in enumerate(lam, start=1) if m > 0]
    if not positives or positives[0] != i:
        raise ValueError(
            f"index {i} is not the minimal index with a positive coefficient in {lam}"
        )
    m = minimal_set(s, i)
    s2 = tuple(x - y for x, y in zip(s, m.indicator))
    omega = fundamental_weight(i, n)
    rest = tuple(x - y for x, y in zip(lam, omega))
    assert contains(build_polytope(omega), m.indicator)
    assert contains(build_polytope(rest), s2)
    return s2, m


def decompose_fundamental(s, lam) -> list[tuple[int, MinimalSet]]:
    """Write a lattice point as a sum of fundamental-weight lattice points
    by iterating :func:`split`, peeling indices in increasing order."""
    lam = check_weight(lam)
    remaining = list(lam)
    cur = _check_exponents(s, len(lam))
    out: list[tuple[int, MinimalSet]] = []
    while any(remaining):
        i = next(k for k, m in enumerate(remaining, start=1) if m > 0)
        cur, m = split(cur, tuple(remaining), i)
        out.append((i, m))
        remaining[i - 1] -= 1
    assert not any(cur)
    return out


def minkowski_check(lam, mu) -> bool:
    """Whether the elementwise sum-set of the two point sets equals the
    point set of the summed weight."""
    lam = check_weight(lam)
    mu = check_weight(mu)
    if len(lam) != len(mu):
        raise ValueError("rank mismatch")
    a = lattice_points(lam).points
    b = lattice_points(mu).points
    total = lattice_points(tuple(x + y for x, y in zip(lam, mu))).points
    sums = {tuple(x + y for x, y in zip(p, q)) for p in a for q in b}
    return sums == set(total)


def is_mutation(t, s, lam) -> bool:
    """Whether ``t`` rewrites the root-lattice element of ``s`` as a
    different nonnegative combination supported on the weight's color
    classes, landing outside the polytope's lattice points."""
    lam = check_weight(lam)
    n = len(lam)
    t = _check_exponents(t, n)
    s = _check_exponents(s, n)
    if exponent_weight(t, n) != exponent_weight(s, n):
        return False
    allowed = {root_index(alpha, n) for alpha in weight_support(lam)}
    if any(v > 0 and idx not in allowed for idx, v in enumerate(t)):
        return False
    return not contains(build_polytope(lam), t)


def _same_weight_on_support(target, support: set[Root], n: int) -> list[tuple[int, ...]]:
    """All exponent tuples supported on ``support`` whose root-lattice
    weight equals ``target``."""
    roots = sorted(support, key=lambda r: (r[1], r[0]))
    size = num_positive_roots(n)
    rem = list(target)
    acc = [0] * size
    out: list[tuple[int, ...]] = []

    def rec(pos: int) -> None:
        if pos == len(roots):
            if not any(rem):
                out.append(tuple(acc))
            return
        i, j = roots[pos]
        emax = min(rem[i - 1 : j])
        for e in range(emax + 1):
            for k in range(i - 1, j):
                rem[k] -= e
            acc[root_index((i, j), n)] = e
            rec(pos + 1)
            acc[root_index((i, j), n)] = 0
            for k in range(i - 1, j):
                rem[k] += e
    rec(0)
    return out


def mutation_order_check(lam) -> dict:
    """Exhaustively test the mutation order property for one weight.

    For every lattice point ``s``, every mutation ``t1`` of its minimal-set
    indicator (taken inside the minimal color class), and every lattice
    point ``t >= t1``, the minimal-set indicator of ``s`` must precede the
    one of ``t`` in the total coordinate order.
    """
    lam = check_weight(lam)
    n = len(lam)
    report = {"check": "mutation-order", "lambda": list(lam)}
    positives = [k for k, m in enumerate(lam, start=1) if m > 0]
    if not positives:
        report.update({"pass": True, "cases": 0, "violations": []})
        return report
    i = positives[0]
    omega = fundamental_weight(i, n)
    support = root_support_of_weight(i, n)
    pts = lattice_points(lam).points
    cases = 0
    violations: list[dict] = []
    mutation_cache: dict[tuple[int, ...], list[tuple[int, ...]]] = {}
    for s in pts:
        ms = minimal_set(s, i)
        if ms.indicator not in mutation_cache:
            candidates = _same_weight_on_support(exponent_weight(ms.indicator, n), support, n)
            mutation_cache[ms.indicator] = [
                t1 for t1 in candidates if is_mutation(t1, ms.indicator, omega)
            ]
        for t1 in mutation_cache[ms.indicator]:
            for t in pts:
                if all(x >= y for x, y in zip(t, t1)):
                    mt = minimal_set(t, i)
                    cases += 1
                    if not ms.indicator < mt.indicator:
                        violations.append(
                            {"s": list(s), "t1": list(t1), "t": list(t)}
                        )
    report.update({"pass": not violations, "cases": cases, "violations": violations})
    return report


def points_to_json(ps: PointSet) -> dict:
    """Serialize a point set; coordinate order is the canonical one."""
    return {
        "n": ps.n,
        "lambda": list(ps.weight),
        "order": "ll",
        "points": [list(p) for p in ps.points],
    }


def points_from_json(obj, validate: bool = True) -> PointSet:
    """Rebuild a point set from its JSON form, optionally checking that
    every point satisfies the inequalities."""
    lam = check_weight(obj["lambda"])
    n = len(lam)
    if "n" in obj and obj["n"] != n:
        raise ValueError(f"rank {obj['n']} does not match lambda of length {n}")
    if obj.get("order", "ll") != "ll":
        raise ValueError(f"unsupported coordinate order {obj.get('order')!r}")
    points = tuple(sorted(_check_exponents(p, n) for p in obj["points"]))
    if validate:
        spec = build_polytope(lam)
        for p in points:
            if not contains(spec, p):
                raise ValueError(f"point {list(p)} violates the inequalities for {lam}")
    return PointSet(lam, points)
