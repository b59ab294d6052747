"""Dyck paths: staircase sequences of positive roots between simple roots.

A path is either a single simple root, or a sequence starting at a simple
root ``alpha_i`` and ending at a simple root ``alpha_j`` with ``i < j``,
where each step replaces ``alpha_{p,q}`` by ``alpha_{p,q+1}`` or
``alpha_{p+1,q}``.  (This is not the classical lattice-path notion.)
"""

from __future__ import annotations

from functools import lru_cache

from .rootsys import Root, check_rank, check_root, check_weight

DyckPath = tuple[Root, ...]


def is_dyck_path(seq, n: int) -> bool:
    """Whether ``seq`` is a valid Dyck path for rank ``n``."""
    seq = tuple(tuple(a) for a in seq)
    if not seq:
        raise ValueError("a Dyck path is a nonempty root sequence")
    for alpha in seq:
        check_root(alpha, n)
    if len(seq) == 1:
        i, j = seq[0]
        return i == j
    (i0, j0), (i1, j1) = seq[0], seq[-1]
    if i0 != j0 or i1 != j1 or not i0 < i1:
        return False
    for (p, q), nxt in zip(seq, seq[1:]):
        if nxt != (p, q + 1) and nxt != (p + 1, q):
            return False
    return True


@lru_cache(maxsize=None)
def enumerate_paths(n: int) -> tuple[DyckPath, ...]:
    """All Dyck paths for rank ``n``, each exactly once.

    Ordered by start index, then lexicographically on the move sequence
    (extend-right before step-down), so output is deterministic.
    """
    check_rank(n)
    paths: list[DyckPath] = []

    def dfs(path: list[Root]) -> None:
        p, q = path[-1]
        if p == q and len(path) > 1:
            paths.append(tuple(path))
        if q + 1 <= n:
            path.append((p, q + 1))
            dfs(path)
            path.pop()
        if p + 1 <= q:
            path.append((p + 1, q))
            dfs(path)
            path.pop()

    for i in range(1, n + 1):
        paths.append(((i, i),))
        dfs([(i, i)])
    return tuple(paths)


def path_bound(path, lam) -> int:
    """Upper bound ``m_i + ... + m_j`` for the inequality attached to a path
    running from ``alpha_i`` to ``alpha_j``."""
    lam = check_weight(lam)
    path = tuple(tuple(a) for a in path)
    if not path:
        raise ValueError("a Dyck path is a nonempty root sequence")
    i = path[0][0]
    j = path[-1][1]
    return sum(lam[i - 1 : j])
