"""Type A_n root-system data: positive roots, pairings and weight arithmetic.

A positive root ``alpha_{i,j} = alpha_i + ... + alpha_j`` is stored as the
index pair ``(i, j)`` with ``1 <= i <= j <= n`` (so simple roots are the
pairs ``(i, i)``).  Highest weights are tuples ``(m_1, ..., m_n)`` of
nonnegative coefficients in the fundamental-weight basis; root-lattice
elements are tuples of coefficients over the simple roots.

The canonical coordinate order for multi-exponents is the total order on
roots "by second index, then first", i.e. ``(1,1), (1,2), (2,2), (1,3),
(2,3), (3,3), ...``; every serialized exponent tuple uses this order.
"""

from __future__ import annotations

from math import isqrt

Root = tuple[int, int]
Weight = tuple[int, ...]


def check_rank(n: int) -> None:
    """Raise on a non-positive rank."""
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"rank must be a positive integer, got {n!r}")


def check_root(alpha: Root, n: int) -> None:
    """Raise unless ``alpha`` is a valid positive root for rank ``n``."""
    if len(alpha) != 2:
        raise ValueError(f"a root is an index pair, got {alpha!r}")
    i, j = alpha
    if not (1 <= i <= j <= n):
        raise ValueError(f"invalid root {alpha!r} for rank {n}")


def check_weight(lam) -> Weight:
    """Validate a highest weight and return it as a tuple."""
    lam = tuple(lam)
    check_rank(len(lam))
    for m in lam:
        if not isinstance(m, int) or m < 0:
            raise ValueError(f"weight coefficients must be nonnegative integers, got {lam!r}")
    return lam


def num_positive_roots(n: int) -> int:
    check_rank(n)
    return n * (n + 1) // 2


def rank_from_num_roots(count: int) -> int:
    """Invert ``n(n+1)/2``; raise when ``count`` is not triangular."""
    n = (isqrt(8 * count + 1) - 1) // 2
    if n < 1 or n * (n + 1) // 2 != count:
        raise ValueError(f"{count} is not a triangular coordinate count")
    return n


def positive_roots(n: int) -> list[Root]:
    """All n(n+1)/2 positive roots in the canonical (by j, then i) order."""
    check_rank(n)
    return [(i, j) for j in range(1, n + 1) for i in range(1, j + 1)]


def root_index(alpha: Root, n: int) -> int:
    """Position of ``alpha`` in ``positive_roots(n)``."""
    check_root(alpha, n)
    i, j = alpha
    return j * (j - 1) // 2 + i - 1


def root_height(alpha: Root) -> int:
    """Number of simple-root summands of ``alpha``."""
    i, j = alpha
    return j - i + 1


def root_simple_coeffs(alpha: Root, n: int) -> tuple[int, ...]:
    """Coefficients of ``alpha`` over the simple roots (0/1 on an interval)."""
    check_root(alpha, n)
    i, j = alpha
    return tuple(1 if i <= k <= j else 0 for k in range(1, n + 1))


def pairing(lam, alpha: Root) -> int:
    """``(lam, alpha_{i,j}) = m_i + ... + m_j``."""
    lam = check_weight(lam)
    check_root(alpha, len(lam))
    i, j = alpha
    return sum(lam[i - 1 : j])


def fundamental_weight(i: int, n: int) -> Weight:
    """The i-th fundamental weight as a coefficient tuple."""
    check_rank(n)
    if not 1 <= i <= n:
        raise ValueError(f"fundamental index {i} out of range for rank {n}")
    return tuple(1 if k == i else 0 for k in range(1, n + 1))


def root_support_of_weight(i: int, n: int) -> set[Root]:
    """Roots pairing to 1 with the i-th fundamental weight: ``j <= i <= k``."""
    check_rank(n)
    if not 1 <= i <= n:
        raise ValueError(f"fundamental index {i} out of range for rank {n}")
    return {(j, k) for j in range(1, i + 1) for k in range(i, n + 1)}


def weight_support(lam) -> set[Root]:
    """Roots pairing positively with ``lam``."""
    lam = check_weight(lam)
    n = len(lam)
    out: set[Root] = set()
    for i, m in enumerate(lam, start=1):
        if m > 0:
            out |= root_support_of_weight(i, n)
    return out


def exponent_weight(s, n: int | None = None) -> tuple[int, ...]:
    """Root-lattice coefficients of ``sum_{i<=j} s_{i,j} alpha_{i,j}``.

    ``s`` is an exponent tuple in the canonical coordinate order; the rank is
    inferred from its length when not given.
    """
    s = tuple(s)
    if n is None:
        n = rank_from_num_roots(len(s))
    elif len(s) != num_positive_roots(n):
        raise ValueError(f"exponent tuple of length {len(s)} does not match rank {n}")
    out = [0] * n
    for idx, (i, j) in enumerate(positive_roots(n)):
        v = s[idx]
        if v:
            for k in range(i - 1, j):
                out[k] += v
    return tuple(out)


def weight_height(c) -> int:
    """Sum of root-lattice coefficients."""
    return sum(c)


def dominant_weights_up_to(n: int, max_total: int) -> list[Weight]:
    """All weights of rank ``n`` with coefficient sum <= ``max_total``, in
    lexicographic order."""
    check_rank(n)
    if max_total < 0:
        raise ValueError("max_total must be nonnegative")
    out: list[Weight] = []

    def rec(prefix: list[int], remaining: int) -> None:
        if len(prefix) == n:
            out.append(tuple(prefix))
            return
        for v in range(remaining + 1):
            prefix.append(v)
            rec(prefix, remaining - v)
            prefix.pop()

    rec([], max_total)
    return sorted(out)
