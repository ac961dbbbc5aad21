"""Labeling generators, one per constructive result, plus a dispatcher.

Every constructor returns a :class:`LabelingCertificate` whose labeling
the verifier has already accepted with exactly the claimed color count;
an unverifiable labeling raises :class:`ConstructionError` instead of
being returned (silent fallback to search is forbidden).  Constructors
are deterministic and pure.

Families and their certificate ids:

========================  =====================================================
``star``/``unit_leg``     spiders with a length-1 leg (d+1 colors)
``even_legs``             all-even legs meeting a weighted-sum condition,
                          optionally with the last leg lengthened by one
``leg_two_family``        Sp(2, 2+2m, 2+2m+k)
``even_odd_long/short``   Sp(even, odd, l) with the third leg long or short
``odd_even_long``         Sp(odd, even, l)
``three_even``            Sp(2n, 2m, 2h)
``odd_stride``            Sp(2n+1, 2m+1, n+m+3k+1)
``odd_mean``              Sp(2n+1, 2m+1, n+m+1)
``equal_odd``             Sp(2n+1, 2m+1, 2m+1)
``odd_block_shift``       Sp(2n+1, 2m+1, 4(m-n)-1)
``consecutive_odd``       Sp(2m+1, 2m+3, 4m-3)
``odd_gap_eleven``        Sp(2m+1, 2m+11, 4m+5)
``leg_three/five/seven``  one leg of fixed small odd length, others odd
``legs_nine_eleven``      Sp(9, 11, odd)
``leg_thirteen``          Sp(13, odd, odd)
``catalog_2_3``           stored labelings for Sp(2^[n], 3^[m])
========================  =====================================================

Dispatch priority: catalog, unit-leg, the all-even family, the exact
3-leg families for all-odd legs, three even legs, then the mixed-parity
router.  The order is stable across versions.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass, field
from importlib import resources
from itertools import permutations
from typing import Optional, Union

from .core import EdgeLabeling, SpiderSignature, signature
from .verifier import verify_certificate


class ConstructionError(RuntimeError):
    """A constructor produced a labeling the verifier rejected."""


@dataclass(frozen=True)
class LabelingCertificate:
    signature: SpiderSignature
    labeling: EdgeLabeling = field(hash=False)
    theorem_id: str
    params: dict = field(hash=False)
    claimed_color_count: int
    claimed_colors: Optional[frozenset[int]] = None


@dataclass(frozen=True)
class NoKnownConstruction:
    """Dispatch found no applicable construction; ``near_misses`` lists
    families whose shape matched but whose parameter domain did not."""

    signature: SpiderSignature
    near_misses: tuple[str, ...]


def _certify(
    sig: SpiderSignature,
    rows_or_map,
    theorem_id: str,
    params: dict,
    count: int,
    colors=None,
) -> LabelingCertificate:
    if isinstance(rows_or_map, EdgeLabeling):
        lab = rows_or_map
    elif isinstance(rows_or_map, dict):
        lab = EdgeLabeling(rows_or_map)
    else:
        lab = EdgeLabeling.from_rows(rows_or_map)
    cert = LabelingCertificate(
        sig,
        lab,
        theorem_id,
        dict(params),
        count,
        frozenset(colors) if colors is not None else None,
    )
    rep = verify_certificate(cert)
    if not rep.ok:
        raise ConstructionError(
            f"{theorem_id} produced an invalid labeling for Sp{sig.legs}: "
            f"{rep.violation}"
        )
    return cert


def _repermute(
    cert: LabelingCertificate,
    target: SpiderSignature,
    extra: Optional[dict] = None,
) -> LabelingCertificate:
    """Reorder legs of ``cert`` (same multiset of lengths) onto ``target``."""
    pool: dict[int, deque] = {}
    for idx, y in enumerate(cert.signature.legs, start=1):
        pool.setdefault(y, deque()).append(idx)
    mapping = {}
    for t_idx, y in enumerate(target.legs, start=1):
        if not pool.get(y):
            raise ConstructionError(
                f"cannot map Sp{cert.signature.legs} onto Sp{target.legs}"
            )
        mapping[t_idx] = pool[y].popleft()
    lab = {}
    for t_idx, y in enumerate(target.legs, start=1):
        for p in range(1, y + 1):
            lab[(t_idx, p)] = cert.labeling.label[(mapping[t_idx], p)]
    params = dict(cert.params)
    if extra:
        params.update(extra)
    return _certify(
        target, lab, cert.theorem_id, params, cert.claimed_color_count,
        cert.claimed_colors,
    )


# Shared row patterns: a pair of legs labeled with the top and bottom of
# the label range, giving alternating vertex sums.
def _row_high(q: int, length: int) -> list[int]:
    return [q - i if i % 2 == 1 else i - 1 for i in range(1, length + 1)]


def _row_low(q: int, length: int) -> list[int]:
    return [q - 1 - i if i % 2 == 1 else i for i in range(1, length + 1)]


def _tail(n_terms: int, gap: int, base: int, delta: int) -> list[int]:
    """Offset sequence oriented so that last - first == delta (|delta| == gap)."""
    from .sequences import offset_sequence

    seq = list(offset_sequence(n_terms, gap, base).terms)
    if seq[-1] - seq[0] != delta:
        seq.reverse()
    if seq[-1] - seq[0] != delta:
        raise ConstructionError(f"cannot orient tail to delta={delta}")
    return seq


# ---------------------------------------------------------------------------
# spiders with a length-1 leg


def construct_unit_leg(sig: SpiderSignature) -> LabelingCertificate:
    """d+1 colors for any spider with at least one leg of length 1.

    Longer legs get the alternating high/low labeling over [1, q-t] with
    the high end at the pendant of the first leg; the t unit legs take
    q-t+1..q.  The all-units case (a star) is labeled 1..q directly.
    """
    legs = sig.legs
    if sig.d < 3:
        raise ValueError("need at least 3 legs")
    if 1 not in legs:
        raise ValueError("needs a leg of length 1")
    q = sig.q
    t = sum(1 for y in legs if y == 1)
    rows: dict[int, list[int]] = {}
    if t == sig.d:
        for i in range(1, sig.d + 1):
            rows[i] = [i]
        return _certify(sig, [rows[i] for i in range(1, sig.d + 1)], "star",
                        {"t": t}, sig.d + 1)
    base = q - t
    j = 0
    for i, y in enumerate(legs, start=1):
        if y == 1:
            continue
        row = []
        for _ in range(y):
            j += 1
            row.append(j // 2 if j % 2 == 0 else base - (j - 1) // 2)
        rows[i] = row
    nxt = base
    for i, y in enumerate(legs, start=1):
        if y == 1:
            nxt += 1
            rows[i] = [nxt]
    return _certify(sig, [rows[i] for i in range(1, sig.d + 1)], "unit_leg",
                    {"t": t}, sig.d + 1)


# ---------------------------------------------------------------------------
# all-even legs (optionally last leg lengthened by one)


def _even_condition_holds(legs: tuple[int, ...], k: int) -> bool:
    d = len(legs)
    lhs = sum((d - i) * legs[i - 1] for i in range(1, d))
    rhs = sum(legs[i - 1] for i in range(k + 1, d + 1))
    return lhs == rhs


def all_even_modes(sig: SpiderSignature) -> list[tuple[int, int]]:
    """All (k, plus_one) pairs under which ``sig`` (in its given order)
    satisfies the weighted-sum condition of the even-legs family."""
    legs = sig.legs
    d = len(legs)
    out = []
    if all(y % 2 == 0 and y >= 2 for y in legs):
        for k in range(d):
            if _even_condition_holds(legs, k):
                out.append((k, 0))
    if (
        d >= 2
        and legs[-1] % 2 == 1
        and legs[-1] >= 3
        and all(y % 2 == 0 and y >= 2 for y in legs[:-1])
    ):
        base = legs[:-1] + (legs[-1] - 1,)
        for k in range(1, d):
            if _even_condition_holds(base, k):
                out.append((k, 1))
    return out


def construct_all_even(
    sig: SpiderSignature, k: Optional[int] = None, plus_one: Optional[int] = None
) -> LabelingCertificate:
    """d+1 colors via the alternating high/low labeling of all legs laid
    out in order, when the (ordered) lengths satisfy
    sum((d-i)*y_i, i<d) == sum(y_i, i>k); with ``plus_one`` the last leg
    is one longer than an even tuple meeting the condition for k >= 1.
    """
    modes = all_even_modes(sig)
    if k is not None or plus_one is not None:
        want = [(kk, pp) for (kk, pp) in modes
                if (k is None or kk == k) and (plus_one is None or pp == plus_one)]
        if not want:
            raise ValueError(
                f"Sp{sig.legs} does not satisfy the even-legs condition for "
                f"k={k}, plus_one={plus_one}"
            )
        mode = want[0]
    elif modes:
        mode = modes[0]
    else:
        # the condition is ordering-sensitive; look for a leg order that
        # satisfies it and map the result back onto the requested order
        for order in sorted(set(permutations(sig.legs))):
            if order == sig.legs:
                continue
            cand = SpiderSignature(order)
            if all_even_modes(cand):
                return _repermute(construct_all_even(cand), sig)
        raise ValueError(f"Sp{sig.legs} does not satisfy the even-legs condition")
    q = sig.q
    rows = []
    j = 0
    for y in sig.legs:
        row = []
        for _ in range(y):
            j += 1
            row.append(j // 2 if j % 2 == 0 else q - (j - 1) // 2)
        rows.append(row)
    theorem_id = "even_legs_plus1" if mode[1] else "even_legs"
    return _certify(sig, rows, theorem_id, {"k": mode[0], "plus_one": mode[1]},
                    sig.d + 1)


# ---------------------------------------------------------------------------
# Sp(2, 2+2m, 2+2m+k)


def construct_leg_two_family(m: int, k: int) -> LabelingCertificate:
    """4 colors for Sp(2, 2+2m, 2+2m+k), m >= 0, k >= 2."""
    from .sequences import label_path_4a

    if m < 0 or k < 2:
        raise ValueError(f"need m >= 0 and k >= 2, got m={m}, k={k}")
    q = 6 + 4 * m + k
    leg1 = [q, 1]
    leg2 = [q - 1, 2]
    leg3 = [q - 2, 3]
    for i in range(1, 2 * m + 1):
        leg2.append(q - 2 - i if i % 2 == 1 else i + 2)
        leg3.append(q - 3 - i if i % 2 == 1 else i + 3)
    leg3.extend(label_path_4a(k, 2 * m + 4).labels)
    sig = signature([2, 2 + 2 * m, 2 + 2 * m + k])
    return _certify(sig, [leg1, leg2, leg3], "leg_two_family",
                    {"m": m, "k": k}, 4)


# ---------------------------------------------------------------------------
# Sp(2n, 2n+2m+1, l) with l >= m+2


def construct_even_odd_long(n: int, m: int, l: int) -> LabelingCertificate:
    """4 colors for Sp(2n, 2n+2m+1, l), n >= 1, m >= 0, l >= m+2."""
    if n < 1 or m < 0 or l < m + 2:
        raise ValueError(f"need n >= 1, m >= 0, l >= m+2, got {(n, m, l)}")
    sig = signature([2 * n, 2 * n + 2 * m + 1, l])
    q = sig.q

    if m == 0 and l == 2:
        if n == 1:
            rows = [[7, 2], [5, 4, 1], [6, 3]]
            return _certify(sig, rows, "even_odd_long",
                            {"n": n, "m": m, "l": l, "case": 42}, 4)
        inner = construct_even_odd_long(1, n - 1, 2 * n)
        return _repermute(inner, sig, {"case": 42})
    if m == 1 and l == 3:
        # the nominal label swap breaks at the leg junction here; reach the
        # same spider through an equivalent parameterization instead
        if n == 1:
            inner = construct_even_odd_long(1, 0, 5)
        else:
            inner = construct_odd_even_long(1, n - 1, 2 * n + 3)
        return _repermute(inner, sig, {"case": 41})

    base_q = [q - 2 * n - (i + 1) // 2 if i % 2 == 1 else 2 * n + i // 2
              for i in range(1, 2 * m + 2)]
    if l == m + 2:
        case, r = 41, m
        qrow = list(base_q)
        qrow[2 * m - 2], qrow[2 * m] = qrow[2 * m], qrow[2 * m - 2]
        short, long_head = _row_low(q, 2 * n), _row_high(q, 2 * n)
    elif l == m + 3 or (l - m) % 2 == 0:
        case, r = (3 if l == m + 3 else 1), m + 1
        qrow = base_q
        short, long_head = _row_low(q, 2 * n), _row_high(q, 2 * n)
    else:
        case, r = 2, m + 2
        qrow = base_q
        short, long_head = _row_high(q, 2 * n), _row_low(q, 2 * n)
    tail = _tail(l - 1, r, 2 * n + m, +r)
    rows = [short, long_head + qrow, [q] + tail]
    return _certify(sig, rows, "even_odd_long",
                    {"n": n, "m": m, "l": l, "case": case, "r": r,
                     "x": tail[0], "y": tail[-1]}, 4)


# ---------------------------------------------------------------------------
# Sp(2n+1, 2n+2m, l)


def _stripe_block(n: int, h: int, k: int) -> list[int]:
    """The 2k-1 connector labels between the long-leg body and the core
    in the odd-short-leg branch below; interior sums stay in the triple."""
    out = []
    for i in range(1, 2 * k):
        if i == k:
            out.append(2 * n + 4 * h + k + 1 if k % 2 == 0 else 2 * n + 2 * h + k)
        elif i < k:
            out.append(2 * n + 2 * h + i + 1 if i % 2 == 1 else 2 * n + 4 * h + 2 * k - i)
        else:
            out.append(2 * n + 4 * h + i + 1 if i % 2 == 0 else 2 * n + 2 * h + 2 * k - i)
    return out


def construct_odd_even_long(n: int, m: int, l: int) -> LabelingCertificate:
    """4 colors for Sp(2n+1, 2n+2m, l), n >= 1, m >= 0, l >= 2."""
    if n < 1 or m < 0 or l < 2:
        raise ValueError(f"need n >= 1, m >= 0, l >= 2, got {(n, m, l)}")
    sig = signature([2 * n + 1, 2 * n + 2 * m, l])
    if m == 0:
        inner = construct_even_odd_long(n, 0, l)
        return _repermute(inner, sig, {"reduced": 1})
    if l == 2:
        inner = construct_even_odd_long(1, n - 1, 2 * n + 2 * m)
        return _repermute(inner, sig, {"reduced": 2})

    if l >= m or l % 2 == 0:
        if l < m:  # even short leg: reorder so the even leg plays l
            if l <= 2 * n:
                inner = construct_even_odd_long(l // 2, n - l // 2, 2 * n + 2 * m)
            else:
                inner = construct_odd_even_long(n, (l - 2 * n) // 2, 2 * n + 2 * m)
            return _repermute(inner, sig, {"reduced": 3})
        q = sig.q
        row_a, row_b = _row_high(q, 2 * n + 1), _row_low(q, 2 * n + 1)
        qrow = [2 * n + (i + 1) // 2 if i % 2 == 1 else q - 2 * n - 2 - i // 2
                for i in range(1, 2 * m)]
        if m == 1:
            case, r, delta = 12, 1, +1
            short, long_leg = row_b, row_a + qrow
        elif m == 2:
            case, r, delta = 11, 1, -1
            short, long_leg = row_a, row_b + qrow
        elif (l - m) % 2 == 0 and l > m:
            case, r, delta = 1, m - 1, -(m - 1)
            short, long_leg = row_a, row_b + qrow
        else:
            case, r, delta = (3 if l == m else 2), m - 2, -(m - 2)
            short, long_leg = row_b, row_a + qrow
        tail = _tail(l - 1, r, 2 * n + m, delta)
        rows = [short, long_leg, [q] + tail]
        return _certify(sig, rows, "odd_even_long",
                        {"n": n, "m": m, "l": l, "case": case, "r": r,
                         "x": tail[0], "y": tail[-1]}, 4)

    # odd short leg: l = 2h+1 < m, connector inserts k = m - 2h extra pairs
    h = (l - 1) // 2
    k = m - 2 * h
    if k < 2:
        raise ValueError(f"odd short leg needs m - (l-1) >= 2, got {(n, m, l)}")
    q = sig.q
    row_a, row_b = _row_high(q, 2 * n + 1), _row_low(q, 2 * n + 1)
    qrow = [2 * n + (i + 1) // 2 if i % 2 == 1 else q - 2 * n - 2 - i // 2
            for i in range(1, 4 * h + 1)]
    srow = _stripe_block(n, h, k)
    tail = _tail(2 * h, 2 * h - 1, 2 * n + 2 * h + k, -(2 * h - 1))
    rows = [row_b, row_a + qrow + srow, [q] + tail]
    return _certify(sig, rows, "odd_even_long",
                    {"n": n, "m": m, "l": l, "case": 23, "h": h, "k": k,
                     "x": tail[0], "y": tail[-1]}, 4)


# ---------------------------------------------------------------------------
# Sp(2n, 2n+2m+1, l) with 2 <= l <= m+1


def _banded_block(n_t: int, lam: int, n_tail: int, reverse: bool) -> list[int]:
    """2*lam+1 connector labels alternating between the top-range block
    [a+N+1, a+N+lam+1] and the bottom block [2*n_t+1, 2*n_t+lam], where
    a = 2*n_t+lam and N = n_tail.  Consecutive sums stay in the triple
    {2a+N, 2a+N+1, 2a+N+2}; endpoints are the two largest top values.
    """
    if lam < 1:
        raise ValueError("connector needs at least one bottom label")
    a = 2 * n_t + lam
    hi = lambda j: a + n_tail + j
    lo = lambda j: 2 * n_t + j
    seq: list[int] = []
    if lam % 2 == 1:
        for t in range((lam + 1) // 2):
            seq.append(hi(lam + 1 - 2 * t))
            seq.append(lo(1 + 2 * t))
        for t in range((lam + 1) // 2):
            seq.append(hi(1 + 2 * t))
            if lam - 1 - 2 * t >= 1:
                seq.append(lo(lam - 1 - 2 * t))
    else:
        for t in range(lam // 2):
            seq.append(hi(lam + 1 - 2 * t))
            seq.append(lo(1 + 2 * t))
        seq.append(hi(1))
        seq.append(lo(lam))
        for t in range(1, lam // 2 + 1):
            seq.append(hi(2 * t))
            if lam - 2 * t >= 1:
                seq.append(lo(lam - 2 * t))
    return seq[::-1] if reverse else seq


def construct_even_odd_short(n: int, m: int, l: int) -> LabelingCertificate:
    """4 colors for Sp(2n, 2n+2m+1, l), n >= 1 and 2 <= l <= m+1."""
    if n < 1 or l < 2 or l > m + 1:
        raise ValueError(f"need n >= 1 and 2 <= l <= m+1, got {(n, m, l)}")
    sig = signature([2 * n, 2 * n + 2 * m + 1, l])
    if l % 2 == 1:
        h = (l - 1) // 2
        if h < n:
            inner = construct_odd_even_long(h, n - h, 2 * n + 2 * m + 1)
        else:
            inner = construct_even_odd_long(n, h - n, 2 * n + 2 * m + 1)
        return _repermute(inner, sig, {"reduced": 1})
    h = l // 2
    if h == 1:
        inner = construct_leg_two_family(n - 1, 2 * m + 1)
        return _repermute(inner, sig, {"reduced": 2})
    if n == 1:
        inner = construct_leg_two_family(h - 1, 2 * m + 3 - 2 * h)
        return _repermute(inner, sig, {"reduced": 2})
    q = sig.q
    if h >= 3:
        n_t, lam, n_tail, r = n, m, 2 * h - 1, 3
        reverse = False
    elif n == 2:
        n_t, lam, n_tail, r = 2, m, 3, 2
        reverse = True
    else:
        n_t, lam, n_tail, r = 2, m + n - 2, 2 * n - 1, 3
        reverse = False
    row_a, row_b = _row_high(q, 2 * n_t), _row_low(q, 2 * n_t)
    block = _banded_block(n_t, lam, n_tail, reverse)
    tail = _tail(n_tail, r, 2 * n_t + lam, +r)
    if h >= 3 or n == 2:
        rows = [row_a, row_b + block, [q] + tail]
    else:  # h == 2, n >= 3: the length-4 leg carries the plain rows
        rows = [[q] + tail, row_b + block, row_a]
    return _certify(sig, rows, "even_odd_short",
                    {"n": n, "m": m, "l": l, "h": h, "lam": lam, "r": r,
                     "x": tail[0], "y": tail[-1]}, 4)


# ---------------------------------------------------------------------------
# mixed parity router: Sp(a, b, c) with a even, b odd


def construct_mixed_parity(a: int, b: int, c: int) -> LabelingCertificate:
    """4 colors for Sp(a, b, c) with even a >= 2, odd b >= 3, c >= 2."""
    if a < 2 or a % 2 or b < 3 or b % 2 == 0 or c < 2:
        raise ValueError(f"need even a >= 2, odd b >= 3, c >= 2, got {(a, b, c)}")
    sig = signature([a, b, c])
    if b > a:
        n, m = a // 2, (b - a - 1) // 2
        if c >= m + 2:
            inner = construct_even_odd_long(n, m, c)
        else:
            inner = construct_even_odd_short(n, m, c)
    else:
        inner = construct_odd_even_long((b - 1) // 2, (a - b + 1) // 2, c)
    return _repermute(inner, sig, {"mixed_parity_route": 1})


# ---------------------------------------------------------------------------
# Sp(2n, 2m, 2h)


def _three_even_mid_rows(q: int, m: int) -> list[int]:
    out = []
    for j in range(2, m + 2):
        out.append(j - 1 if j % 2 == 0 else q - j)
    for jj in range(2, m + 1):
        if m % 2 == 1:
            out.append(q - m - 3 + jj if jj % 2 == 0 else m + 2 - jj)
        else:
            out.append(m + 2 - jj if jj % 2 == 0 else q - m - 3 + jj)
    return out


def construct_three_even(n: int, m: int, h: int) -> LabelingCertificate:
    """4 colors for Sp(2n, 2m, 2h) with h >= m >= n >= 1."""
    if not (1 <= n <= m <= h):
        raise ValueError(f"need h >= m >= n >= 1, got {(n, m, h)}")
    sig = signature([2 * n, 2 * m, 2 * h])
    if m == n:
        inner = construct_all_even(signature([2 * n, 2 * h, 2 * n]), k=0)
        return _repermute(inner, sig, {"reduced": 1})
    if h == m:
        inner = construct_all_even(signature([2 * m, 2 * n, 2 * m]), k=0)
        return _repermute(inner, sig, {"reduced": 1})
    if n == 1:
        inner = construct_leg_two_family(m - 1, 2 * h - 2 * m)
        return _repermute(inner, sig, {"reduced": 2})

    q = sig.q
    if (m, h) == (n + 1, n + 2):
        x = [6 * n + 5] + [3 * n + 1 + i if i % 2 == 0 else 3 * n + 4 - i
                           for i in range(2, 2 * n + 1)]
        z = [6 * n + 6] + [3 * n + 4 - kk if kk % 2 == 0 else 3 * n + 1 + kk
                           for kk in range(2, 2 * n + 3)] + [5 * n + 3, n + 3]
        y = [6 * n + 4]
        for j in range(2, n + 2):
            y.append(j if j % 2 == 0 else 6 * n + 5 - j)
        for j in range(2, n + 3):
            if n % 2 == 0:
                y.append(n + 3 - j if j % 2 == 0 else 5 * n + 2 + j)
            else:
                y.append(5 * n + 2 + j if j % 2 == 0 else n + 3 - j)
        return _certify(sig, [x, y, z], "three_even",
                        {"n": n, "m": m, "h": h, "branch": 2}, 4)

    r = n + m + h
    x = [q - 1] + [r + (i - 2) if i % 2 == 0 else r - (i - 1)
                   for i in range(2, 2 * n + 1)]
    y = [q - 2] + _three_even_mid_rows(q, m)
    z = [q]
    for kk in range(2, 2 * n + 2):
        z.append(r - (kk - 1) if kk % 2 == 0 else r + (kk - 2))
    for kk in range(2 * n + 2, n + h + 2):
        z.append(r - kk + 2 if kk % 2 == 0 else r + kk - 3)
    for kk in range(3, h - n + 2):
        if (n - h) % 2 == 0:
            z.append(m + kk - 2 if kk % 2 == 1 else q - m - kk + 1)
        else:
            z.append(q - m + 1 - kk if kk % 2 == 1 else m + kk - 2)
    return _certify(sig, [x, y, z], "three_even",
                    {"n": n, "m": m, "h": h, "branch": 1}, 4)


# ---------------------------------------------------------------------------
# three odd legs


def construct_odd_stride(n: int, m: int, k: int) -> LabelingCertificate:
    """4 colors for Sp(2n+1, 2m+1, n+m+3k+1): n, m, k >= 1, m+n+k even,
    3k <= n+m."""
    if n < 1 or m < 1 or k < 1 or (m + n + k) % 2 or 3 * k > n + m:
        raise ValueError(f"domain violation for {(n, m, k)}")
    sig = signature([2 * n + 1, 2 * m + 1, n + m + 3 * k + 1])
    if n < 2 or m < k:
        if m >= 2 and n >= k:
            inner = construct_odd_stride(m, n, k)
            return _repermute(inner, sig, {"swapped": 1})
        # n == 1 (or m == 1) with k >= 2: the row tables need a first leg
        # of length >= 5, but one leg is 3, so the leg-3 family applies
        legs = sorted(sig.legs)
        inner = construct_leg_three((legs[2] - legs[1]) // 2, (legs[1] - 1) // 2)
        return _repermute(inner, sig, {"reduced": 3})
    q = 3 * n + 3 * m + 3 * k + 3
    s = n + m
    x = [q, s + k, 2 * s + 2 * k + 1]
    for i in range(4, 2 * n + 2):
        x.append(2 * s + 2 * k + i // 2 if i % 2 == 0 else s + k - (i - 3) // 2)
    y = []
    for i in range(1, 2 * k + 2):
        y.append(q - 1 - i if i % 2 == 1 else i)
    for i in range(2 * k + 2, 2 * m + 2):
        y.append(k + i // 2 if i % 2 == 0 else 3 * s + k - (i - 2 * k - 3) // 2)
    z = []
    for i in range(1, 2 * k + 2):
        z.append(q - i if i % 2 == 1 else i - 1)
    for i in range(2 * k + 2, s + 4 - k):
        z.append(s + k + i - 1 if i % 2 == 0 else 2 * s + 2 * k + 3 - i)
    for i in range(s + 4 - k, s + 3 * k + 2):
        if i % 2 == 0:
            z.append(2 * s + 2 + (i - (s + 4 - k)) // 2)
        else:
            z.append(s + 3 * k - 1 - (i - (s + 5 - k)) // 2)
    return _certify(sig, [x, y, z], "odd_stride",
                    {"n": n, "m": m, "k": k}, 4)


def construct_odd_mean(n: int, m: int) -> LabelingCertificate:
    """4 colors for Sp(2n+1, 2m+1, n+m+1): n >= 1, m >= 2, n+m >= 4 even."""
    if n < 1 or m < 2 or (n + m) % 2 or n + m < 4:
        raise ValueError(f"domain violation for {(n, m)}")
    sig = signature([2 * n + 1, 2 * m + 1, n + m + 1])
    q = 3 * n + 3 * m + 3
    s = n + m
    x = [q - 1] + [i // 2 if i % 2 == 0 else 3 * s - (i - 3) // 2
                   for i in range(2, 2 * n + 2)]
    y = [q, s, 2 * s + 1]
    for i in range(4, 2 * m + 2):
        y.append(2 * s + i // 2 if i % 2 == 0 else s - (i - 3) // 2)
    z = [q - 2] + [s + i if i % 2 == 0 else 2 * s + 2 - i
                   for i in range(2, s + 2)]
    return _certify(sig, [x, y, z], "odd_mean", {"n": n, "m": m}, 4)


def _equal_odd_rows(n: int, m: int) -> tuple[list[int], list[int], list[int]]:
    q = 2 * n + 4 * m + 3
    x = [q - (i + 1) // 2 if i % 2 == 1 else i // 2 for i in range(1, 2 * n + 2)]
    y = [n + (i + 1) // 2 if i % 2 == 1 else q - n - 1 - i // 2
         for i in range(1, 2 * m + 2)]
    z = [q] + [q - n - m - 1 - i // 2 if i % 2 == 0 else n + m + (i + 1) // 2
               for i in range(2, 2 * m + 2)]
    return x, y, z


def construct_equal_odd(n: int, m: int) -> LabelingCertificate:
    """4 colors for Sp(2n+1, 2m+1, 2m+1): n >= 0, m >= 1."""
    if n < 0 or m < 1:
        raise ValueError(f"domain violation for {(n, m)}")
    sig = signature([2 * n + 1, 2 * m + 1, 2 * m + 1])
    x, y, z = _equal_odd_rows(n, m)
    return _certify(sig, [x, y, z], "equal_odd", {"n": n, "m": m}, 4)


def construct_odd_block_shift(n: int, m: int) -> LabelingCertificate:
    """4 colors for Sp(2n+1, 2m+1, 4(m-n)-1), m > n >= 0: obtained from
    the equal-legs labeling by moving the core-side block of one equal
    leg to the end of the short leg."""
    if not m > n >= 0:
        raise ValueError(f"need m > n >= 0, got {(n, m)}")
    nb, mb = m - n - 1, m
    x, y, z = _equal_odd_rows(nb, mb)
    cut = 2 * (mb - nb) - 1
    v = x + y[cut:]
    w = y[:cut]
    sig = signature([2 * n + 1, 2 * m + 1, 4 * (m - n) - 1])
    return _certify(sig, [w, z, v], "odd_block_shift",
                    {"n": n, "m": m, "base_n": nb, "base_m": mb}, 4)


def construct_consecutive_odd(m: int) -> LabelingCertificate:
    """4 colors for Sp(2m+1, 2m+3, 4m-3), m >= 4."""
    if m < 4:
        raise ValueError(f"need m >= 4, got {m}")
    q = 8 * m + 1
    x = [q] + [6 * m - i // 2 if i % 2 == 0 else 2 * m + (i + 1) // 2
               for i in range(2, 2 * m + 2)]
    y = []
    for i in range(1, 2 * m):
        y.append(8 * m - (i - 1) // 2 if i % 2 == 1 else i // 2)
    y.extend([7 * m - 1, m + 1, 7 * m, m])
    z = []
    for i in range(1, 2 * m - 3):
        z.append(6 * m + (i + 1) // 2 if i % 2 == 1 else 2 * m - i // 2)
    for i in range(2 * m - 3, 4 * m - 6):
        if i % 2 == (2 * m - 3) % 2:
            z.append(5 * m - 1 - (i - (2 * m - 3)) // 2)
        else:
            z.append(3 * m + 2 + (i - (2 * m - 2)) // 2)
    z.extend([4 * m, 2 * m + 1, 6 * m, 2 * m])
    sig = signature([2 * m + 1, 2 * m + 3, 4 * m - 3])
    return _certify(sig, [x, y, z], "consecutive_odd", {"m": m}, 4)


def construct_odd_gap_eleven(m: int) -> LabelingCertificate:
    """4 colors for Sp(2m+1, 2m+11, 4m+5), m >= 2."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    q = 8 * m + 17
    x = [q] + [6 * m + 12 - i // 2 if i % 2 == 0 else 2 * m + 5 + (i - 1) // 2
               for i in range(2, 2 * m + 2)]
    y = [8 * m + 16 - (i - 1) // 2 if i % 2 == 1 else i // 2
         for i in range(1, 2 * m + 4)]
    y.extend([7 * m + 13, m + 3, 7 * m + 14, m + 2,
              5 * m + 11, 3 * m + 6, 5 * m + 10, 3 * m + 7])
    z = [6 * m + 13 + (i - 1) // 2 if i % 2 == 1 else 2 * m + 4 - i // 2
         for i in range(1, 2 * m + 1)]
    for i in range(2 * m + 1, 4 * m + 2):
        if i % 2 == 1:
            z.append(5 * m + 9 - (i - (2 * m + 1)) // 2)
        else:
            z.append(3 * m + 8 + (i - (2 * m + 2)) // 2)
    z.extend([4 * m + 8, 2 * m + 5, 6 * m + 12, 2 * m + 4])
    sig = signature([2 * m + 1, 2 * m + 11, 4 * m + 5])
    return _certify(sig, [x, y, z], "odd_gap_eleven", {"m": m}, 4)


def construct_leg_three(h: int, m: int) -> LabelingCertificate:
    """4 colors for Sp(3, 2m+1, 2m+2h+1), h >= 0, m >= 1."""
    if h < 0 or m < 1:
        raise ValueError(f"need h >= 0 and m >= 1, got {(h, m)}")
    sig = signature([3, 2 * m + 1, 2 * m + 2 * h + 1])
    q = sig.q
    if h == 0:
        x = [4 * m + 3 - i if i % 2 == 1 else i for i in range(1, 2 * m + 2)]
        y = [q] + [4 * m + 3 - i if i % 2 == 0 else i for i in range(2, 2 * m + 2)]
        w = [4 * m + 4, 1, 4 * m + 3]
        return _certify(sig, [w, x, y], "leg_three",
                        {"h": h, "m": m, "branch": 0}, 4)
    if h == 1:
        x = [q, q - 1, 1] + [2 * m + 5 - i if i % 2 == 0 else 2 * m + 1 + i
                             for i in range(4, 2 * m + 4)]
        y = [4 * m + 6 - i if i % 2 == 1 else i for i in range(1, 2 * m + 2)]
        w = [2 * m + 2, 2 * m + 3, 2 * m + 4]
        return _certify(sig, [w, y, x], "leg_three",
                        {"h": h, "m": m, "branch": 10}, 4)
    row_a, row_b = _row_high(q, 2 * m + 1), _row_low(q, 2 * m + 1)
    if h % 2 == 0:
        k = h // 2
        qz = [2 * m + (i + 1) // 2 if i % 2 == 1 else q - 2 * m - 2 - i // 2
              for i in range(1, 2 * k + 1)]
        rv = [2 * m + k + 1 + (i + 1) // 2 if i % 2 == 1 else 2 * m + 3 * k + 2 - i // 2
              for i in range(1, 2 * k + 1)]
        w = [q, 2 * m + 3 * k + 2, 2 * m + k + 1]
        long_leg = row_b + qz + rv
        mid = row_a
        branch = 2
    else:
        k = (h - 1) // 2
        qz = [2 * m + (i + 1) // 2 if i % 2 == 1 else q - 2 * m - 2 - i // 2
              for i in range(1, 2 * k + 3)]
        rv = [2 * m + k + 2 + (i + 1) // 2 if i % 2 == 1 else 2 * m + 3 * k + 3 - i // 2
              for i in range(1, 2 * k + 1)]
        w = [q, 2 * m + 3 * k + 3, 2 * m + k + 2]
        long_leg = row_a + qz + rv
        mid = row_b
        branch = 3
    return _certify(sig, [w, mid, long_leg], "leg_three",
                    {"h": h, "m": m, "branch": branch, "k": k}, 4)


def construct_leg_five(m: int, h: int) -> LabelingCertificate:
    """4 colors for Sp(5, 2m+1, 2h+1), m >= 1, h >= 3."""
    if m < 1 or h < 3:
        raise ValueError(f"need m >= 1 and h >= 3, got {(m, h)}")
    sig = signature([5, 2 * m + 1, 2 * h + 1])
    q = sig.q
    x = [q - 1, 1, q - 2, (q + 1) // 2, (q - 1) // 2]
    y = [q] + [(q - 1 - i) // 2 if i % 2 == 0 else (q + i) // 2
               for i in range(2, 2 * m + 2)]
    z = [2] + [q - 2 - i // 2 if i % 2 == 0 else (i + 3) // 2
               for i in range(2, 2 * h + 2)]
    return _certify(sig, [x, y, z], "leg_five", {"m": m, "h": h}, 4)


def construct_leg_seven(m: int, h: int) -> LabelingCertificate:
    """4 colors for Sp(7, 2m+1, 2h+1), m, h >= 1."""
    if m < 1 or h < 1:
        raise ValueError(f"need m, h >= 1, got {(m, h)}")
    sig = signature([7, 2 * m + 1, 2 * h + 1])
    q = sig.q
    x = [q - 2, 2, q - 4, q - 1, 1, 3, q - 3]
    y = [i + 3 if i % 2 == 1 else q - 4 - i for i in range(1, 2 * m + 2)]
    z = [q] + [q - 3 - i if i % 2 == 0 else i + 2 for i in range(2, 2 * h + 2)]
    return _certify(sig, [x, y, z], "leg_seven", {"m": m, "h": h}, 4)


def construct_nine_eleven(m: int) -> LabelingCertificate:
    """4 colors for Sp(9, 11, 2m+1), m >= 2."""
    if m < 2:
        raise ValueError(f"need m >= 2, got {m}")
    sig = signature([9, 11, 2 * m + 1])
    x = [2 * m + 21, 2 * m + 14, 6, 2 * m + 15, 5, m + 9, m + 12, m + 8, m + 13]
    y = [2 * m + 20, 1, 2 * m + 19, 2, 2 * m + 18, 2 * m + 17, 3,
         m + 11, m + 10, 4, 2 * m + 16]
    z = [m + 14, m + 7] + [(i + 11) // 2 if i % 2 == 1 else 2 * m + 15 - i // 2
                           for i in range(3, 2 * m + 2)]
    return _certify(sig, [x, y, z], "legs_nine_eleven", {"m": m}, 4)


def construct_thirteen(m: int, n: int) -> LabelingCertificate:
    """4 colors for Sp(13, 2m+1, 2n+1), m, n >= 2."""
    if m < 2 or n < 2:
        raise ValueError(f"need m, n >= 2, got {(m, n)}")
    sig = signature([13, 2 * m + 1, 2 * n + 1])
    q = sig.q
    x = [q - 2, 2, q - 4, 4, 3, q - 3, q - 5, 5, q - 7, q - 1, 1, 6, q - 6]
    y = [q] + [q - 6 - i if i % 2 == 0 else i + 5 for i in range(2, 2 * m + 2)]
    z = [7] + [q - 7 - i if i % 2 == 0 else i + 6 for i in range(2, 2 * n + 2)]
    return _certify(sig, [x, y, z], "leg_thirteen", {"m": m, "n": n}, 4)


# ---------------------------------------------------------------------------
# catalog of stored Sp(2^[n], 3^[m]) labelings


_CATALOG_CACHE: Optional[dict[tuple[int, int], LabelingCertificate]] = None


def _load_catalog() -> dict[tuple[int, int], LabelingCertificate]:
    global _CATALOG_CACHE
    if _CATALOG_CACHE is None:
        text = resources.files("spiderla.data").joinpath(
            "two_three_catalog.json").read_text()
        out = {}
        for doc in json.loads(text):
            sig = signature(doc["signature"])
            lab = EdgeLabeling({(i, p): v for i, p, v in doc["labeling"]})
            cert = LabelingCertificate(
                sig, lab, doc["theorem_id"], dict(doc["params"]),
                doc["claimed_color_count"], frozenset(doc["claimed_colors"]),
            )
            out[(doc["params"]["n_two"], doc["params"]["m_three"])] = cert
        _CATALOG_CACHE = out
    return _CATALOG_CACHE


def catalog_pairs() -> tuple[tuple[int, int], ...]:
    return tuple(sorted(_load_catalog()))


def catalog_labeling(n: int, m: int) -> LabelingCertificate:
    """Stored (n+m+1)-color labeling of Sp(2^[n], 3^[m]) for tabulated
    (n, m) pairs; raises ValueError for pairs not in the catalog."""
    cert = _load_catalog().get((n, m))
    if cert is None:
        raise ValueError(f"no stored labeling for (n, m) = {(n, m)}")
    rep = verify_certificate(cert)
    if not rep.ok:
        raise ConstructionError(f"stored labeling for {(n, m)} is invalid")
    return cert


# ---------------------------------------------------------------------------
# dispatch


def _try(fn, near_misses: list[str], name: str):
    try:
        return fn()
    except (ValueError, ConstructionError):
        if name not in near_misses:
            near_misses.append(name)
        return None


def _three_odd_candidates(legs: tuple[int, int, int]):
    """Parameterizations of an all-odd triple, strongest family first."""
    a, b, c = legs  # sorted ascending
    cands = []
    if a == b:
        cands.append(("equal_odd", lambda: construct_equal_odd((c - 1) // 2, (a - 1) // 2)))
    if b == c:
        cands.append(("equal_odd", lambda: construct_equal_odd((a - 1) // 2, (b - 1) // 2)))
    for p, r, s in permutations(legs):
        n, m = (p - 1) // 2, (r - 1) // 2
        if s == n + m + 1:
            cands.append(("odd_mean", lambda n=n, m=m: construct_odd_mean(n, m)))
    for p, r, s in permutations(legs):
        n, m = (p - 1) // 2, (r - 1) // 2
        rem = s - (n + m + 1)
        if rem >= 3 and rem % 3 == 0:
            k = rem // 3
            cands.append(("odd_stride",
                          lambda n=n, m=m, k=k: construct_odd_stride(n, m, k)))
    for p, r, s in permutations(legs):
        n, m = (p - 1) // 2, (r - 1) // 2
        if m > n and s == 4 * (m - n) - 1:
            cands.append(("odd_block_shift",
                          lambda n=n, m=m: construct_odd_block_shift(n, m)))
    if b == a + 2 and c == 2 * a - 5:
        cands.append(("consecutive_odd",
                      lambda: construct_consecutive_odd((a - 1) // 2)))
    if b == a + 10 and c == 2 * a + 3:
        cands.append(("odd_gap_eleven",
                      lambda: construct_odd_gap_eleven((a - 1) // 2)))
    if a == 3:
        cands.append(("leg_three",
                      lambda: construct_leg_three((c - b) // 2, (b - 1) // 2)))
    if a == 5:
        cands.append(("leg_five",
                      lambda: construct_leg_five((b - 1) // 2, (c - 1) // 2)))
        cands.append(("leg_five",
                      lambda: construct_leg_five((c - 1) // 2, (b - 1) // 2)))
    if a == 7:
        cands.append(("leg_seven",
                      lambda: construct_leg_seven((b - 1) // 2, (c - 1) // 2)))
    if a == 9 and b == 11:
        cands.append(("legs_nine_eleven",
                      lambda: construct_nine_eleven((c - 1) // 2)))
    for p, r, s in permutations(legs):
        if p == 13:
            cands.append(("leg_thirteen",
                          lambda r=r, s=s: construct_thirteen((r - 1) // 2,
                                                              (s - 1) // 2)))
    return cands


def _mixed_candidates(legs: tuple[int, int, int]):
    evens = [y for y in legs if y % 2 == 0]
    odds = [y for y in legs if y % 2 == 1]
    cands = []
    if len(evens) >= 1 and len(odds) >= 1:
        seen = set()
        for a in evens:
            for b in odds:
                rest = list(legs)
                rest.remove(a)
                rest.remove(b)
                key = (a, b, rest[0])
                if key in seen:
                    continue
                seen.add(key)
                cands.append(("mixed_parity",
                              lambda a=a, b=b, c=rest[0]:
                              construct_mixed_parity(a, b, c)))
    return cands


def dispatch(sig: SpiderSignature) -> Union[LabelingCertificate, NoKnownConstruction]:
    """Map a signature to the strongest applicable construction.

    Works over the canonicalized signature and every leg ordering the
    families permit, then reorders the certificate back onto the input
    signature.  Deterministic for the fixed priority list.
    """
    csig = SpiderSignature(tuple(sorted(sig.legs)))
    near: list[str] = []
    cert = _dispatch_canonical(csig, near)
    if cert is None:
        return NoKnownConstruction(sig, tuple(near))
    if cert.signature.legs != sig.legs or cert.signature is not sig:
        cert = _repermute(cert, sig)
    return cert


def _dispatch_canonical(csig, near):
    legs = csig.legs
    d = csig.d
    counts = {y: legs.count(y) for y in set(legs)}
    if set(counts) <= {2, 3} and d >= 3:
        n, m = counts.get(2, 0), counts.get(3, 0)
        got = _try(lambda: catalog_labeling(n, m), near, "catalog_2_3")
        if got:
            return got
    if 1 in legs:
        got = _try(lambda: construct_unit_leg(csig), near, "unit_leg")
        if got:
            return got
        return None
    got = _try_all_even_orderings(csig, near)
    if got:
        return got
    if d != 3:
        return None
    if all(y % 2 == 1 for y in legs):
        for name, fn in _three_odd_candidates(legs):
            got = _try(fn, near, name)
            if got:
                return got
        return None
    if all(y % 2 == 0 for y in legs):
        n, m, h = (y // 2 for y in legs)
        got = _try(lambda: construct_three_even(n, m, h), near, "three_even")
        if got:
            return got
        return None
    for name, fn in _mixed_candidates(legs):
        got = _try(fn, near, name)
        if got:
            return got
    return None


def _try_all_even_orderings(csig, near):
    legs = csig.legs
    d = csig.d
    odd_count = sum(1 for y in legs if y % 2 == 1)
    if odd_count > 1 or any(y < 2 for y in legs) or d > 8:
        return None
    orderings = sorted(set(permutations(legs)))
    for order in orderings:
        cand = SpiderSignature(order)
        if all_even_modes(cand):
            got = _try(lambda c=cand: construct_all_even(c), near, "even_legs")
            if got:
                return got
    if odd_count:
        near.append("even_legs")
    return None
