"""Symbolic straightening in the commutative model of the lowering algebra.

Polynomials live in commuting variables ``f[i,j]``, one per positive root,
with exact rational coefficients.  The module provides:

* the homogeneous lexicographic monomial order (degree first, then the
  generator chain ``f[n,n] > f[n-1,n] > f[n-1,n-1] > ... > f[1,1]``),
* the lowering derivations ``apply_partial``, which substitute one factor
  ``f[beta]`` by ``f[beta - alpha]`` whenever the difference is again a
  positive root,
* the relation ideal generated by the power relations ``f[alpha]^(bound+1)``
  together with their closure under all derivations,
* exact normal forms modulo the ideal, computed by Gaussian elimination in
  one weight-degree component at a time, and
* the targeted path relation ``relation_A`` whose leading monomial realizes
  a prescribed over-bound exponent tuple supported on a Dyck path.

Everything here is exact; no floating point is used anywhere.
"""

from __future__ import annotations

from collections import deque
from fractions import Fraction
from functools import lru_cache

from .dyckpaths import DyckPath, is_dyck_path, path_bound
from .polytope import CapacityError, lattice_points
from .rootsys import (
    Root,
    Weight,
    check_root,
    check_weight,
    exponent_weight,
    num_positive_roots,
    pairing,
    positive_roots,
    rank_from_num_roots,
    root_index,
)

Monomial = tuple[int, ...]
Polynomial = dict[Monomial, Fraction]

DEFAULT_COMPONENT_CAP = 100_000


# ---------------------------------------------------------------------------
# monomial order


@lru_cache(maxsize=None)
def _prec_positions(n: int) -> tuple[int, ...]:
    # coordinate indices sorted by descending generator: (n,n), (n-1,n), ...
    roots = positive_roots(n)
    return tuple(sorted(range(len(roots)), key=lambda k: roots[k], reverse=True))


def _prec_key(mon: Monomial):
    n = rank_from_num_roots(len(mon))
    return (sum(mon), tuple(mon[k] for k in _prec_positions(n)))


def compare_prec(s, t) -> int:
    """+1 if ``s`` is greater in the monomial order, -1 if smaller, 0 if equal.

    Degrees compare first; at equal degree the exponent at the greatest
    generator where the tuples differ decides.
    """
    s = tuple(s)
    t = tuple(t)
    if len(s) != len(t):
        raise ValueError("rank mismatch")
    ks, kt = _prec_key(s), _prec_key(t)
    return -1 if ks < kt else (0 if ks == kt else 1)


def leading_monomial(poly: Polynomial) -> Monomial:
    """The greatest monomial of a nonzero polynomial."""
    if not poly:
        raise ValueError("the zero polynomial has no leading monomial")
    return max(poly, key=_prec_key)


# ---------------------------------------------------------------------------
# polynomials and derivations


def poly_mul(p: Polynomial, q: Polynomial) -> Polynomial:
    out: Polynomial = {}
    for m1, c1 in p.items():
        for m2, c2 in q.items():
            key = tuple(a + b for a, b in zip(m1, m2))
            c = out.get(key, Fraction(0)) + c1 * c2
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def _shift(p: Polynomial, mon: Monomial) -> Polynomial:
    return {tuple(a + b for a, b in zip(m, mon)): c for m, c in p.items()}


def partial_root(alpha: Root, beta: Root) -> Root | None:
    """``beta - alpha`` when it is again a positive root, else ``None``.

    The difference is a root exactly when the index interval of ``alpha``
    is a proper prefix or suffix of the interval of ``beta``.
    """
    a1, a2 = alpha
    b1, b2 = beta
    if a1 == b1 and a2 < b2:
        return (a2 + 1, b2)
    if a2 == b2 and a1 > b1:
        return (b1, a1 - 1)
    return None


def apply_partial(alpha: Root, poly: Polynomial) -> Polynomial:
    """Apply the lowering derivation for ``alpha`` (Leibniz rule on each
    monomial, one factor substituted at a time)."""
    if not poly:
        return {}
    n = rank_from_num_roots(len(next(iter(poly))))
    check_root(alpha, n)
    roots = positive_roots(n)
    out: Polynomial = {}
    for mon, coeff in poly.items():
        for idx, e in enumerate(mon):
            if e == 0:
                continue
            gamma = partial_root(alpha, roots[idx])
            if gamma is None:
                continue
            new = list(mon)
            new[idx] -= 1
            new[root_index(gamma, n)] += 1
            key = tuple(new)
            c = out.get(key, Fraction(0)) + coeff * e
            if c:
                out[key] = c
            else:
                out.pop(key, None)
    return out


def _monomial_weight(mon: Monomial, n: int) -> tuple[int, ...]:
    return exponent_weight(mon, n)


def _normalize(poly: Polynomial) -> Polynomial:
    lead = leading_monomial(poly)
    c = poly[lead]
    return {m: v / c for m, v in poly.items()}


def _poly_key(poly: Polynomial):
    return tuple(sorted(poly.items()))


# ---------------------------------------------------------------------------
# the relation ideal


@lru_cache(maxsize=None)
def _closure(lam: Weight) -> tuple[Polynomial, ...]:
    """Closure of the power relations under all lowering derivations,
    deduplicated up to scalar.

    Each derivation strictly lowers the root-lattice weight, so the closure
    is finite; elements stay weight- and degree-homogeneous throughout.
    """
    n = len(lam)
    roots = positive_roots(n)
    size = num_positive_roots(n)
    seen: dict = {}
    queue: deque[Polynomial] = deque()
    for alpha in roots:
        mon = [0] * size
        mon[root_index(alpha, n)] = pairing(lam, alpha) + 1
        poly = {tuple(mon): Fraction(1)}
        seen[_poly_key(poly)] = poly
        queue.append(poly)
    while queue:
        poly = queue.popleft()
        for alpha in roots:
            image = apply_partial(alpha, poly)
            if not image:
                continue
            image = _normalize(image)
            key = _poly_key(image)
            if key not in seen:
                seen[key] = image
                queue.append(image)
    return tuple(seen.values())


def ideal_generators(lam, weight_cap: int | None = None) -> list[Polynomial]:
    """Spanning relations: the power relations and all their derivation
    images, up to scalar.  ``weight_cap`` keeps only elements whose
    root-lattice weight height is at most the cap."""
    lam = check_weight(lam)
    n = len(lam)
    out = []
    for poly in _closure(lam):
        if weight_cap is not None:
            if sum(_monomial_weight(next(iter(poly)), n)) > weight_cap:
                continue
        out.append(dict(poly))
    return out


@lru_cache(maxsize=None)
def _monomials_with(c: tuple[int, ...], d: int, n: int) -> tuple[Monomial, ...]:
    """All exponent tuples of root-lattice weight ``c`` and total degree ``d``."""
    if d < 0 or any(v < 0 for v in c):
        return ()
    # longest roots first: they consume the most weight per degree unit
    roots = sorted(positive_roots(n), key=lambda r: r[1] - r[0], reverse=True)
    size = num_positive_roots(n)
    rem = list(c)
    acc = [0] * size
    out: list[Monomial] = []

    def rec(pos: int, d_rem: int) -> None:
        total = sum(rem)
        if total < d_rem:
            return  # every factor adds at least 1 to the height
        if pos == len(roots):
            if d_rem == 0 and total == 0:
                out.append(tuple(acc))
            return
        i, j = roots[pos]
        emax = min(d_rem, min(rem[i - 1 : j]))
        for e in range(emax + 1):
            for k in range(i - 1, j):
                rem[k] -= e
            acc[root_index((i, j), n)] = e
            rec(pos + 1, d_rem - e)
            acc[root_index((i, j), n)] = 0
            for k in range(i - 1, j):
                rem[k] += e

    rec(0, d)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# exact elimination per weight-degree component


def _reduce_against(poly: Polynomial, pivots: dict[Monomial, Polynomial]) -> Polynomial:
    out = dict(poly)
    while True:
        hits = [m for m in out if m in pivots]
        if not hits:
            return out
        m = max(hits, key=_prec_key)
        coeff = out.pop(m)
        for mm, cc in pivots[m].items():
            if mm == m:
                continue
            c = out.get(mm, Fraction(0)) - coeff * cc
            if c:
                out[mm] = c
            else:
                out.pop(mm, None)


def _echelon_insert(pivots: dict[Monomial, Polynomial], row: Polynomial) -> bool:
    """Insert a row into a reduced echelon basis; returns True if the rank
    grew.  Pivots are the greatest monomials, scaled to coefficient one and
    cleared from every other row."""
    row = _reduce_against(row, pivots)
    if not row:
        return False
    piv = leading_monomial(row)
    c = row[piv]
    row = {m: v / c for m, v in row.items()}
    for p, r in pivots.items():
        if piv in r:
            k = r.pop(piv)
            for mm, cc in row.items():
                if mm == piv:
                    continue
                v = r.get(mm, Fraction(0)) - k * cc
                if v:
                    r[mm] = v
                else:
                    r.pop(mm, None)
    pivots[piv] = row
    return True


def _echelonize(rows) -> dict[Monomial, Polynomial]:
    pivots: dict[Monomial, Polynomial] = {}
    for row in rows:
        _echelon_insert(pivots, row)
    return pivots


@lru_cache(maxsize=None)
def _component(lam: Weight, c: tuple[int, ...], d: int) -> dict[Monomial, Polynomial]:
    """Reduced echelon basis of the ideal's weight-``c`` degree-``d`` slice:
    every closure element times every complementary monomial."""
    n = len(lam)
    rows = []
    for poly in _closure(lam):
        some = next(iter(poly))
        dh = sum(some)
        if dh > d:
            continue
        wh = _monomial_weight(some, n)
        off = tuple(a - b for a, b in zip(c, wh))
        if any(v < 0 for v in off):
            continue
        for mon in _monomials_with(off, d - dh, n):
            rows.append(_shift(poly, mon))
    return _echelonize(rows)


def reduce(mon, lam) -> Polynomial:
    """Normal form of a monomial modulo the relation ideal.

    The result is the unique representative supported on non-pivot
    monomials of the same weight and degree; lattice-point monomials come
    back unchanged.
    """
    lam = check_weight(lam)
    n = len(lam)
    mon = tuple(mon)
    if len(mon) != num_positive_roots(n) or any(v < 0 for v in mon):
        raise ValueError(f"invalid exponent tuple {mon!r} for rank {n}")
    return reduce_poly({mon: Fraction(1)}, lam)


def reduce_poly(poly: Polynomial, lam) -> Polynomial:
    """Normal form of a weight- and degree-homogeneous polynomial."""
    lam = check_weight(lam)
    n = len(lam)
    if not poly:
        return {}
    mons = list(poly)
    c = _monomial_weight(mons[0], n)
    d = sum(mons[0])
    for m in mons[1:]:
        if _monomial_weight(m, n) != c or sum(m) != d:
            raise ValueError("polynomial is not weight/degree homogeneous")
    pivots = _component(lam, c, d)
    return _reduce_against({m: Fraction(v) for m, v in poly.items()}, pivots)


# ---------------------------------------------------------------------------
# the path relation


def relation_A(s, path, lam) -> Polynomial:
    """Ideal element with prescribed leading monomial for an over-bound
    exponent tuple supported on a Dyck path.

    Starting from the power ``f[a,b]^(sum s)`` of the longest root of the
    path (``a``, ``b`` the start and end indices), the column sums of ``s``
    are split off by the derivations that shorten ``f[a,b]`` from the right,
    and the row sums are then pushed down by the derivations that shorten
    first-row variables from the left.  The result lies in the relation
    ideal and its leading monomial is exactly ``f^s``.
    """
    lam = check_weight(lam)
    n = len(lam)
    s = tuple(s)
    if len(s) != num_positive_roots(n) or any(v < 0 for v in s):
        raise ValueError(f"invalid exponent tuple {s!r} for rank {n}")
    path = tuple(tuple(alpha) for alpha in path)
    if not is_dyck_path(path, n):
        raise ValueError(f"{path!r} is not a Dyck path for rank {n}")
    on_path = {root_index(alpha, n) for alpha in path}
    if any(v > 0 and idx not in on_path for idx, v in enumerate(s)):
        raise ValueError("exponent tuple is not supported on the path")
    total = sum(s)
    bound = path_bound(path, lam)
    if total <= bound:
        raise ValueError(
            f"support sum {total} does not exceed the path bound {bound}"
        )
    a = path[0][0]
    b = path[-1][1]
    col = {q: 0 for q in range(a, b + 1)}
    row = {p: 0 for p in range(a, b + 1)}
    for i, j in path:
        v = s[root_index((i, j), n)]
        col[j] += v
        row[i] += v

    size = num_positive_roots(n)
    start = [0] * size
    start[root_index((a, b), n)] = total
    poly: Polynomial = {tuple(start): Fraction(1)}
    for q in range(a, b):
        for _ in range(col[q]):
            poly = apply_partial((q + 1, b), poly)
    for p in range(b, a, -1):
        for _ in range(row[p]):
            poly = apply_partial((a, p - 1), poly)
    assert poly, "the operator pipeline annihilated the starting power"
    return poly


# ---------------------------------------------------------------------------
# graded codimension verification


def verify_ideal_codim(lam, component_cap: int = DEFAULT_COMPONENT_CAP) -> dict:
    """Check, one weight-degree component at a time, that the ideal has the
    codimension predicted by the lattice points and that the lattice-point
    monomials stay independent modulo the ideal.

    For every root-lattice offset realized by a lattice point, all degrees
    up to the offset height are scanned, so vanishing graded multiplicities
    are verified as well.
    """
    lam = check_weight(lam)
    n = len(lam)
    pts = lattice_points(lam).points
    by_cd: dict[tuple[tuple[int, ...], int], list[Monomial]] = {}
    for s in pts:
        by_cd.setdefault((_monomial_weight(s, n), sum(s)), []).append(s)
    offsets = sorted({c for c, _ in by_cd})
    components = []
    ok = True
    total_quotient = 0
    for c in offsets:
        for d in range(sum(c) + 1):
            mons = _monomials_with(c, d, n)
            if not mons:
                continue
            if len(mons) > component_cap:
                raise CapacityError(
                    f"component mu_offset={list(c)} degree={d} has {len(mons)} "
                    f"monomials, above the cap {component_cap}"
                )
            pivots = _component(lam, c, d)
            rank = len(pivots)
            quotient = len(mons) - rank
            basis = by_cd.get((c, d), [])
            normal_forms = [
                _reduce_against({s: Fraction(1)}, pivots) for s in basis
            ]
            independent = len(_echelonize(normal_forms)) == len(basis)
            passed = quotient == len(basis) and independent
            ok = ok and passed
            total_quotient += quotient
            components.append(
                {
                    "mu_offset": list(c),
                    "degree": d,
                    "dim": len(mons),
                    "rank": rank,
                    "quotient": quotient,
                    "points": len(basis),
                    "independent": independent,
                    "pass": passed,
                }
            )
    return {
        "check": "ideal-codim",
        "lambda": list(lam),
        "pass": ok,
        "lhs": total_quotient,
        "rhs": len(pts),
        "components": components,
    }


# ---------------------------------------------------------------------------
# rendering


def poly_string(poly: Polynomial) -> str:
    """Terms in descending monomial order, factors as ``f[i,j]^e``, rational
    coefficients as ``a/b``."""
    if not poly:
        return "0"
    n = rank_from_num_roots(len(next(iter(poly))))
    roots = positive_roots(n)
    parts = []
    for mon in sorted(poly, key=_prec_key, reverse=True):
        coeff = poly[mon]
        factors = [
            f"f[{i},{j}]" + (f"^{e}" if e > 1 else "")
            for (i, j), e in zip(roots, mon)
            if e
        ]
        body = " ".join(factors)
        if not factors:
            parts.append(str(coeff))
        elif coeff == 1:
            parts.append(body)
        elif coeff == -1:
            parts.append(f"-{body}")
        else:
            parts.append(f"{coeff} {body}")
    return " + ".join(parts)
