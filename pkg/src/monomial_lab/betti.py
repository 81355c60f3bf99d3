"""Betti tables of squarefree monomial ideals via vertex-subset homology,
and the derived invariants: regularity and projective dimension.

For the quotient S/I and a vertex subset sigma, the fine-graded Betti
number at homological index i equals dim H~_{|sigma|-i-1} of the complex of
squarefree monomials outside I restricted to sigma; the ideal's table is
the same data shifted by one homological step.  Only "saturated" subsets
(every vertex covered by a generator inside the subset) can contribute:
any uncovered vertex is a cone point and kills the homology.

Over the rationals the row invariants (regularity, projective dimension)
avoid exact elimination wherever a GF(2) computation certifies vanishing;
candidate contributions are confirmed exactly in decreasing order of the
quantity being maximized, so the returned value is exact.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .complexes import (
    GF2,
    RATIONALS,
    FieldSpec,
    exact_rational_hq,
    homology_profile,
    _f2_counts_ranks,
)
from .core import Ideal, InputError, canon_key, mask_to_vars


def _saturated_sigmas(gen_masks: tuple[int, ...], supp: int):
    """Yield (sigma, restricted generators) for every sigma whose vertices
    are all covered by generators supported inside sigma (includes sigma=0)."""
    sigma = supp
    while True:
        restricted = [g for g in gen_masks if g & ~sigma == 0]
        union = 0
        for g in restricted:
            union |= g
        if union == sigma:
            yield sigma, restricted
        if sigma == 0:
            return
        sigma = (sigma - 1) & supp


def _remap(sigma: int, gens) -> tuple[int, tuple[int, ...]]:
    """Relabel sigma's vertices as bits 0..m-1 (order-preserving)."""
    pos: dict[int, int] = {}
    i = 0
    rem = sigma
    while rem:
        low = rem & -rem
        rem ^= low
        pos[low] = 1 << i
        i += 1
    local = []
    for g in gens:
        lg = 0
        r = g
        while r:
            low = r & -r
            r ^= low
            lg |= pos[low]
        local.append(lg)
    return i, tuple(sorted(local, key=canon_key))


@dataclass
class BettiTable:
    """Graded Betti numbers of an ideal or its quotient ring.

    `entries` maps (homological index i, internal degree j) to a positive
    rank; absent means zero.  When requested, `fine` maps (i, sigma-mask)
    to the vertex-subset-graded rank; coarse entries are the fine sums over
    subsets of the matching size.
    """

    subject: str  # "ideal" or "quotient"
    ambient: int
    field: FieldSpec
    entries: dict[tuple[int, int], int]
    fine: dict[tuple[int, int], int] | None = None

    def max_offset(self) -> int:
        return max(j - i for (i, j) in self.entries)

    def max_index(self) -> int:
        return max(i for (i, _) in self.entries)

    def to_json_entries(self) -> list[dict]:
        triples = [{"i": i, "j": j, "rank": r} for (i, j), r in self.entries.items()]
        triples.sort(key=lambda t: (t["i"], t["j"]))
        return triples

    def to_json(self) -> str:
        doc = {
            "subject": self.subject,
            "field": self.field.label,
            "entries": self.to_json_entries(),
        }
        if self.fine is not None:
            doc["fine"] = [
                {"i": i, "sigma": list(mask_to_vars(s)), "rank": r}
                for (i, s), r in sorted(self.fine.items())
            ]
        return json.dumps(doc, sort_keys=True)

    def format_grid(self) -> str:
        """Text grid with rows j - i and columns i."""
        if not self.entries:
            return "(empty table)"
        imax = max(i for i, _ in self.entries)
        offsets = sorted({j - i for (i, j) in self.entries})
        width = max(len(str(r)) for r in self.entries.values())
        width = max(width, len(str(imax)), 1) + 2
        header = "j-i".rjust(5) + "".join(str(i).rjust(width) for i in range(imax + 1))
        lines = [header, "-" * len(header)]
        for off in range(offsets[0], offsets[-1] + 1):
            cells = []
            for i in range(imax + 1):
                r = self.entries.get((i, i + off))
                cells.append((str(r) if r else ".").rjust(width))
            lines.append(str(off).rjust(5) + "".join(cells))
        return "\n".join(lines)


def _quotient_fine_entries(I: Ideal, field: FieldSpec):
    """Yield (i, sigma, rank) for every nonzero fine Betti number of S/I."""
    supp = I.supp_mask
    for sigma, restricted in _saturated_sigmas(I.gen_masks, supp):
        m, local = _remap(sigma, restricted)
        prof = homology_profile(m, local, field)
        for idx, h in enumerate(prof):
            if h:
                q = idx - 1
                yield m - q - 1, sigma, h


def betti_table(
    I: Ideal,
    field: FieldSpec = RATIONALS,
    fine: bool = False,
    quotient: bool = False,
) -> BettiTable:
    """Exact Betti table of the ideal I (or of S/I with quotient=True)."""
    if I.is_zero:
        raise InputError("Betti table of the zero ideal is undefined")
    shift = 0 if quotient else 1
    entries: dict[tuple[int, int], int] = {}
    fine_entries: dict[tuple[int, int], int] | None = {} if fine else None
    for i, sigma, h in _quotient_fine_entries(I, field):
        if i < shift:
            continue
        key = (i - shift, sigma.bit_count())
        entries[key] = entries.get(key, 0) + h
        if fine_entries is not None:
            fine_entries[(i - shift, sigma)] = h
    return BettiTable(
        subject="quotient" if quotient else "ideal",
        ambient=I.ambient,
        field=field,
        entries=entries,
        fine=fine_entries,
    )


def regularity_masks(gens: tuple[int, ...], field: FieldSpec = RATIONALS) -> int:
    """Mask-level regularity; `gens` must be a nonempty minimal generating
    set (antichain of bitmasks)."""
    supp = 0
    for g in gens:
        supp |= g
    established = max(g.bit_count() for g in gens)  # row 0 sits at the generator degrees
    if field.p is not None:
        best = established
        for sigma, restricted in _saturated_sigmas(gens, supp):
            m, local = _remap(sigma, restricted)
            prof = homology_profile(m, local, field)
            for idx in range(0, m):
                if prof[idx] and idx + 1 > best:
                    best = idx + 1
        return best
    candidates = []
    for sigma, restricted in _saturated_sigmas(gens, supp):
        m, local = _remap(sigma, restricted)
        prof2 = homology_profile(m, local, GF2)
        for idx in range(0, m):  # idx = q + 1 <= m - 1 keeps the ideal index >= 0
            if prof2[idx] and idx + 1 > established:
                counts, _ = _f2_counts_ranks(m, local)
                candidates.append((idx + 1, sum(counts), m, local, idx - 1))
    candidates.sort(key=lambda c: (-c[0], c[1]))
    for offset, _cost, m, local, q in candidates:
        if exact_rational_hq(m, local, q):
            return offset
    return established


def regularity(I: Ideal, field: FieldSpec = RATIONALS) -> int:
    """max{j - i : the ideal's Betti table is nonzero at (i, j)}, exact."""
    if I.is_zero:
        raise InputError("regularity of the zero ideal is undefined")
    return regularity_masks(I.gen_masks, field)


def projective_dimension_masks(gens: tuple[int, ...], field: FieldSpec = RATIONALS) -> int:
    supp = 0
    for g in gens:
        supp |= g
    established = 1  # the generators of I are first syzygies of S/I
    if field.p is not None:
        best = established
        for sigma, restricted in _saturated_sigmas(gens, supp):
            m, local = _remap(sigma, restricted)
            prof = homology_profile(m, local, field)
            for idx in range(0, m):
                i = m - idx  # quotient index at q = idx - 1
                if prof[idx] and i > best:
                    best = i
        return best
    candidates = []
    for sigma, restricted in _saturated_sigmas(gens, supp):
        m, local = _remap(sigma, restricted)
        prof2 = homology_profile(m, local, GF2)
        for idx in range(0, m):
            i = m - idx
            if prof2[idx] and i > established:
                counts, _ = _f2_counts_ranks(m, local)
                candidates.append((i, sum(counts), m, local, idx - 1))
    candidates.sort(key=lambda c: (-c[0], c[1]))
    for i, _cost, m, local, q in candidates:
        if exact_rational_hq(m, local, q):
            return i
    return established


def projective_dimension(I: Ideal, field: FieldSpec = RATIONALS) -> int:
    """max{i : the quotient's Betti table is nonzero at (i, j)}, exact."""
    if I.is_zero:
        raise InputError("projective dimension of S/0 is undefined here")
    return projective_dimension_masks(I.gen_masks, field)
