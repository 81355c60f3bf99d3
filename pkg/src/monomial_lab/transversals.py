"""Minimal transversals (hitting sets) of a family of bitmask sets."""

from __future__ import annotations

from .core import canon_key


def minimal_transversals(masks) -> tuple[int, ...]:
    """All inclusion-minimal bitmasks meeting every set in `masks`.

    Incremental construction: process one set at a time, extend the
    transversals that miss it by one element each, prune non-minimal
    candidates.  Exponential in the worst case, fine at desk scale.
    For an empty family the unique minimal transversal is the empty set.
    """
    partial: list[int] = [0]
    for s in masks:
        if s == 0:
            raise ValueError("family contains the empty set; no transversal exists")
        hit = []
        miss = []
        for t in partial:
            (hit if t & s else miss).append(t)
        candidates = list(hit)
        for t in miss:
            rem = s
            while rem:
                low = rem & -rem
                rem ^= low
                cand = t | low
                # cand is non-minimal iff it contains a transversal that
                # already hits s; extensions of other missed sets cannot
                # be contained in cand unless a hit-member is.
                if not any(h & ~cand == 0 for h in hit):
                    candidates.append(cand)
        # dedup + antichain
        uniq = sorted(set(candidates), key=canon_key)
        partial = []
        for c in uniq:
            if not any(p & ~c == 0 for p in partial):
                partial.append(c)
    return tuple(sorted(partial, key=canon_key))
