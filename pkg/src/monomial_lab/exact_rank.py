"""Exact matrix ranks: GF(2) bitset Gauss, dense mod-p elimination, and
fraction-free (Bareiss) integer elimination for the rational case."""

from __future__ import annotations


def rank_f2_columns(columns: list[int]) -> int:
    """Rank over GF(2) of a matrix given as column bitmasks (bit = row index)."""
    pivots: dict[int, int] = {}
    rank = 0
    for col in columns:
        cur = col
        while cur:
            lead = cur.bit_length() - 1
            piv = pivots.get(lead)
            if piv is None:
                pivots[lead] = cur
                rank += 1
                break
            cur ^= piv
    return rank


def rank_mod_p(rows: list[list[int]], p: int) -> int:
    """Rank over GF(p) by destructive Gaussian elimination on row lists."""
    if not rows or not rows[0]:
        return 0
    nrows = len(rows)
    ncols = len(rows[0])
    rank = 0
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c] % p:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        inv = pow(prow[c], p - 2, p)
        for i in range(rank + 1, nrows):
            f = rows[i][c] % p
            if f:
                f = f * inv % p
                ri = rows[i]
                for j in range(c, ncols):
                    ri[j] = (ri[j] - f * prow[j]) % p
        rank += 1
        if rank == nrows:
            break
    return rank


def rank_bareiss(rows: list[list[int]]) -> int:
    """Exact integer rank via fraction-free Gaussian elimination.

    Destructive.  Entries stay integral (each is a minor of the input), so
    no rational arithmetic is needed; Python integers absorb the growth.
    """
    if not rows or not rows[0]:
        return 0
    # eliminating along the shorter side costs min^2 * max
    if len(rows) > len(rows[0]):
        rows = [list(col) for col in zip(*rows)]
    nrows = len(rows)
    ncols = len(rows[0])
    rank = 0
    prev = 1
    for c in range(ncols):
        piv = None
        for i in range(rank, nrows):
            if rows[i][c]:
                piv = i
                break
        if piv is None:
            continue
        rows[rank], rows[piv] = rows[piv], rows[rank]
        prow = rows[rank]
        pv = prow[c]
        for i in range(rank + 1, nrows):
            ri = rows[i]
            x = ri[c]
            if x:
                for j in range(c, ncols):
                    ri[j] = (ri[j] * pv - x * prow[j]) // prev
            elif prev != 1 or pv != 1:
                for j in range(c, ncols):
                    ri[j] = ri[j] * pv // prev
        prev = pv
        rank += 1
        if rank == nrows:
            break
    return rank
