"""Closed-form edge counts: t(n,p), h(n,p,k), h'(n,p,k) and the Simonovits bound."""
from __future__ import annotations

from math import comb
from typing import Sequence

from .graph import turan_part_sizes


def turan_count(n: int, p: int) -> int:
    sizes = turan_part_sizes(n, p)
    return (n * n - sum(s * s for s in sizes)) // 2


def multipartite_count(sizes: Sequence[int]) -> int:
    n = sum(sizes)
    return (n * n - sum(s * s for s in sizes)) // 2


def _check(n: int, p: int, k: int):
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if not 1 <= k <= n + 1:
        raise ValueError(f"need 1 <= k <= n + 1, got n={n}, k={k}")


def h_count(n: int, p: int, k: int) -> int:
    """Edges of K_{k-1} v T(n-k+1, p)."""
    _check(n, p, k)
    m = n - k + 1
    return comb(k - 1, 2) + (k - 1) * m + turan_count(m, p)


def h_prime_count(n: int, p: int, k: int) -> int:
    """Edges of the independent (k-1)-set joined to T(n-k+1, p)."""
    _check(n, p, k)
    m = n - k + 1
    return (k - 1) * m + turan_count(m, p)


def simonovits_bound(n: int, p: int, class_sizes: Sequence[int]) -> int:
    """t(n,p) - sum C(|s_i|, 2) for a p-colouring with the given class sizes.

    ``s_i`` is the deviation of a class from the balanced size it is paired
    with; classes are paired with the balanced sizes in sorted order.
    """
    if p < 1:
        raise ValueError(f"p must be >= 1, got {p}")
    if len(class_sizes) != p:
        raise ValueError(f"expected {p} class sizes, got {len(class_sizes)}")
    if any(c < 0 for c in class_sizes):
        raise ValueError("class sizes must be nonnegative")
    if sum(class_sizes) != n:
        raise ValueError(f"class sizes sum to {sum(class_sizes)}, expected {n}")
    balanced = sorted(turan_part_sizes(n, p), reverse=True)
    actual = sorted(class_sizes, reverse=True)
    return turan_count(n, p) - sum(comb(abs(a - b), 2) for a, b in zip(actual, balanced))
