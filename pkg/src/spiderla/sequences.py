"""Reusable labeling sequences.

Two primitives used by most of the 3-leg constructions:

* circular permutations of [1, N] whose cyclic consecutive sums stay in
  {N, N+1, N+2} with a prescribed endpoint gap ``r`` (plus the shifted
  linear variant over [a+1, a+N]);
* a path edge labeling over [a, a+n-1] whose endpoint vertices receive
  a+n-2 and a+n-1 and whose interior sums live in a fixed triple.

The original case tables contain ambiguous cells; the closed-form index
formulas below are the implementation of record and are pinned down by
an exhaustive property suite (N up to 200), which is the arbiter.
"""

from __future__ import annotations

from dataclasses import dataclass


def valid_gaps(n_terms: int) -> set[int]:
    """Endpoint gaps achievable by a sum-controlled circular permutation.

    {1} for N=2; evens in [2, N-2] plus {1, N-1} for even N >= 4; odds in
    [1, N-2] plus {N-1} for odd N.
    """
    if n_terms < 2:
        raise ValueError(f"need at least 2 terms, got {n_terms}")
    if n_terms == 2:
        return {1}
    if n_terms % 2 == 0:
        return {1, n_terms - 1} | set(range(2, n_terms - 1, 2))
    return set(range(1, n_terms - 1, 2)) | {n_terms - 1}


def base_cycle(n_terms: int) -> list[int]:
    """Unrotated circular permutation of [1, N] with cyclic consecutive
    sums in {N, N+1, N+2}; its cyclic gap multiset covers valid_gaps(N)."""
    n = n_terms
    if n < 2:
        raise ValueError(f"need at least 2 terms, got {n}")
    k, rem = divmod(n, 4)
    if rem == 0:
        row1 = [2 * k + i if i % 2 == 0 else 2 * k - (i - 1) for i in range(1, 2 * k + 1)]
        row2 = [i if i % 2 == 1 else 4 * k + 1 - i for i in range(1, 2 * k + 1)]
    elif rem == 1:
        row1 = [2 * k + 1 + i if i % 2 == 1 else 2 * k + 1 - i for i in range(1, 2 * k + 1)]
        row2 = [4 * k + 2 - i if i % 2 == 1 else i for i in range(1, 2 * k + 2)]
    elif rem == 2:
        row1 = [2 * k + 2 - i if i % 2 == 1 else 2 * k + 1 + i for i in range(1, 2 * k + 2)]
        row2 = [4 * k + 3 - i if i % 2 == 1 else i for i in range(1, 2 * k + 2)]
    else:
        row1 = [2 * k + 2 - i if i % 2 == 1 else 2 * k + 2 + i for i in range(1, 2 * k + 2)]
        row2 = [4 * k + 4 - i if i % 2 == 1 else i for i in range(1, 2 * k + 3)]
    return row1 + row2


@dataclass(frozen=True)
class CircularPermutation:
    """Terms over [a+1, a+N]; consecutive sums in {2a+N, 2a+N+1, 2a+N+2}
    (cyclically when a == 0), and |last - first| == gap."""

    terms: tuple[int, ...]
    base: int
    gap: int

    @property
    def n_terms(self) -> int:
        return len(self.terms)

    def sum_triple(self) -> set[int]:
        lo = 2 * self.base + self.n_terms
        return {lo, lo + 1, lo + 2}


def circular_permutation(n_terms: int, gap: int) -> CircularPermutation:
    """Rotate the base cycle so that |a_N - a_1| == gap (first matching
    cut in index order, so output is deterministic)."""
    if gap not in valid_gaps(n_terms):
        raise ValueError(f"gap {gap} not achievable for {n_terms} terms")
    cycle = base_cycle(n_terms)
    n = len(cycle)
    for j in range(n):
        if abs(cycle[j] - cycle[(j + 1) % n]) == gap:
            rotated = cycle[j + 1 :] + cycle[: j + 1]
            return CircularPermutation(tuple(rotated), 0, gap)
    raise AssertionError(f"base cycle for N={n_terms} misses gap {gap}")


def offset_sequence(n_terms: int, gap: int, base: int) -> CircularPermutation:
    """Arrangement of [base+1, base+N] with consecutive sums in
    {2*base+N, 2*base+N+1, 2*base+N+2} and |last - first| == gap."""
    if base < 1:
        raise ValueError(f"base must be >= 1, got {base}")
    inner = circular_permutation(n_terms, gap)
    return CircularPermutation(tuple(t + base for t in inner.terms), base, gap)


@dataclass(frozen=True)
class PathFourLabeling:
    """Edge labels of a path x_1..x_{n+1} drawn from [a, a+n-1].

    Endpoint colors are (a+n-2, a+n-1); interior colors lie in
    {2a+n-3, 2a+n-2, 2a+n-1}; the next-to-last vertex always gets
    2a+n-1, and so does the second vertex except when n == 3, where
    that value is impossible (x_2 and x_n are adjacent there).
    """

    labels: tuple[int, ...]
    base: int

    @property
    def n(self) -> int:
        return len(self.labels)

    def vertex_colors(self) -> tuple[int, ...]:
        lab = self.labels
        inner = [lab[i - 1] + lab[i] for i in range(1, len(lab))]
        return (lab[0], *inner, lab[-1])

    @property
    def endpoint_colors(self) -> tuple[int, int]:
        a, n = self.base, self.n
        return (a + n - 2, a + n - 1)

    @property
    def interior_color_set(self) -> frozenset[int]:
        return frozenset(self.vertex_colors()[1:-1])


def label_path_4a(n: int, a: int) -> PathFourLabeling:
    """Label the n edges of a path with [a, a+n-1] per the three length
    classes (even, 4k+1, 4k+3); see PathFourLabeling for the contract."""
    if n < 2:
        raise ValueError(f"path length must be >= 2, got {n}")
    if a in (0, 1):
        raise ValueError(f"offset a must avoid 0 and 1, got {a}")
    labels: list[int] = []
    if n % 2 == 0:
        for i in range(1, n + 1):
            labels.append(a + n - i - 1 if i % 2 == 1 else a + i - 1)
    elif n % 4 == 1:
        k = n // 4
        for i in range(1, n + 1):
            if i == 2 * k + 1:
                labels.append(a + 2 * k)
            elif i % 2 == 1:
                labels.append(a + 4 * k - i if i <= 2 * k - 1 else a + i - 1)
            else:
                labels.append(a + i - 1 if i <= 2 * k else a + 4 * k - i)
    else:
        k = (n - 3) // 4
        for i in range(1, n + 1):
            if i % 2 == 1:
                labels.append(a + 4 * k + 2 - i if i <= 2 * k + 1 else a + i - 1)
            else:
                labels.append(a + i - 1 if i <= 2 * k else a + 4 * k + 2 - i)
    return PathFourLabeling(tuple(labels), a)
