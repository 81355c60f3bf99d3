"""Squarefree monomial and ideal arithmetic on fixed-width bitsets.

Variable indices are 1-based at the API surface and 0-based bits internally
(x1 is the lowest bit).  The canonical order on monomials is (degree, bitmask
ascending); ideals keep their minimal generators sorted in that order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

MAX_AMBIENT = 64


class InputError(ValueError):
    """Invalid input: ambient mismatch, out-of-range index, unit ideal, ..."""


class PreconditionError(InputError):
    """An operation's stated hypotheses do not hold for the given input."""


class CapacityError(InputError):
    """Input exceeds the supported desk-scale limits."""


class InternalCheckError(RuntimeError):
    """A built-in consistency check failed; indicates a bug."""


class TheoremViolationError(InternalCheckError):
    """A verified statement failed on input satisfying its hypotheses."""


class _UnitIdealType:
    """Singleton marker for operations whose result would contain 1."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "UNIT_IDEAL"


UNIT_IDEAL = _UnitIdealType()


def _vars_to_mask(ambient: int, variables) -> int:
    mask = 0
    for v in variables:
        if not isinstance(v, int) or not 1 <= v <= ambient:
            raise InputError(f"variable index {v!r} outside 1..{ambient}")
        mask |= 1 << (v - 1)
    return mask


def mask_to_vars(mask: int) -> tuple[int, ...]:
    """Bit positions of `mask` as ascending 1-based variable indices."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def _check_ambient(ambient: int) -> None:
    if not isinstance(ambient, int) or ambient < 1:
        raise InputError(f"ambient must be a positive integer, got {ambient!r}")
    if ambient > MAX_AMBIENT:
        raise CapacityError(f"ambient {ambient} exceeds supported maximum {MAX_AMBIENT}")


@dataclass(frozen=True)
class Monomial:
    """A squarefree monomial: a set of variable indices inside 1..ambient."""

    ambient: int
    mask: int = 0

    def __post_init__(self):
        _check_ambient(self.ambient)
        if not isinstance(self.mask, int) or self.mask < 0 or self.mask >> self.ambient:
            raise InputError(f"mask {self.mask!r} outside ambient {self.ambient}")

    @classmethod
    def of(cls, ambient: int, *variables: int) -> "Monomial":
        """Monomial from 1-based variable indices, e.g. Monomial.of(4, 1, 3)."""
        _check_ambient(ambient)
        return cls(ambient, _vars_to_mask(ambient, variables))

    @classmethod
    def from_vars(cls, ambient: int, variables) -> "Monomial":
        _check_ambient(ambient)
        return cls(ambient, _vars_to_mask(ambient, variables))

    @property
    def degree(self) -> int:
        return self.mask.bit_count()

    @property
    def vars(self) -> tuple[int, ...]:
        return mask_to_vars(self.mask)

    @property
    def is_one(self) -> bool:
        return self.mask == 0

    def __str__(self):
        if self.mask == 0:
            return "1"
        return "*".join(f"x{v}" for v in self.vars)

    def __repr__(self):
        return f"Monomial({self.ambient}, {self})"


def _same_ambient(u: Monomial, v: Monomial) -> None:
    if u.ambient != v.ambient:
        raise InputError(f"ambient mismatch: {u.ambient} vs {v.ambient}")


def lcm(u: Monomial, v: Monomial) -> Monomial:
    """Least common multiple: union of supports."""
    _same_ambient(u, v)
    return Monomial(u.ambient, u.mask | v.mask)


def gcd(u: Monomial, v: Monomial) -> Monomial:
    """Greatest common divisor: intersection of supports (may be 1)."""
    _same_ambient(u, v)
    return Monomial(u.ambient, u.mask & v.mask)


def divides(u: Monomial, v: Monomial) -> bool:
    _same_ambient(u, v)
    return u.mask & ~v.mask == 0


def canon_key(mask: int) -> tuple[int, int]:
    """Canonical sort key: degree first, then the bitmask as an integer."""
    return (mask.bit_count(), mask)


def minimalize_masks(masks) -> tuple[int, ...]:
    """Antichain of divisibility-minimal masks, deduplicated, canonically sorted."""
    uniq = sorted(set(masks), key=canon_key)
    out: list[int] = []
    for m in uniq:
        if not any(g & ~m == 0 for g in out):
            out.append(m)
    return tuple(out)


@dataclass(frozen=True)
class Ideal:
    """A squarefree monomial ideal given by its minimal generating set.

    The constructor requires generators that already form an antichain (no
    generator divides another, no duplicates) and sorts them canonically;
    use `minimal_generators` to canonicalize an arbitrary list.  The zero
    ideal has an empty generator tuple.  The unit ideal is not representable.
    """

    ambient: int
    gens: tuple[Monomial, ...] = ()

    def __post_init__(self):
        _check_ambient(self.ambient)
        gens = tuple(self.gens)
        for g in gens:
            if g.ambient != self.ambient:
                raise InputError(f"generator ambient {g.ambient} != ideal ambient {self.ambient}")
            if g.mask == 0:
                raise InputError("1 is not a valid generator (unit ideal is not representable)")
        masks = [g.mask for g in gens]
        if len(set(masks)) != len(masks):
            raise InputError("duplicate generators; use minimal_generators to canonicalize")
        for a, b in itertools.combinations(masks, 2):
            if a & ~b == 0 or b & ~a == 0:
                raise InputError("generators are not an antichain; use minimal_generators")
        object.__setattr__(self, "gens", tuple(sorted(gens, key=lambda g: canon_key(g.mask))))

    @classmethod
    def from_masks(cls, ambient: int, masks) -> "Ideal":
        return cls(ambient, tuple(Monomial(ambient, m) for m in masks))

    @property
    def gen_masks(self) -> tuple[int, ...]:
        return tuple(g.mask for g in self.gens)

    @property
    def supp_mask(self) -> int:
        m = 0
        for g in self.gens:
            m |= g.mask
        return m

    @property
    def supp(self) -> tuple[int, ...]:
        return mask_to_vars(self.supp_mask)

    @property
    def is_zero(self) -> bool:
        return not self.gens

    def pure_degree(self) -> int | None:
        """The common generator degree, or None if mixed or zero."""
        degs = {g.degree for g in self.gens}
        if len(degs) == 1:
            return degs.pop()
        return None

    def contains_mask(self, mask: int) -> bool:
        return any(g.mask & ~mask == 0 for g in self.gens)

    def contains(self, m: Monomial) -> bool:
        """Membership: some generator divides m."""
        if m.ambient != self.ambient:
            raise InputError(f"ambient mismatch: {m.ambient} vs {self.ambient}")
        return self.contains_mask(m.mask)

    def is_subset_of(self, other: "Ideal") -> bool:
        if self.ambient != other.ambient:
            raise InputError("ambient mismatch")
        return all(other.contains_mask(g.mask) for g in self.gens)

    def __str__(self):
        if self.is_zero:
            return "(0)"
        return "(" + ", ".join(str(g) for g in self.gens) + ")"

    def __repr__(self):
        return f"Ideal({self.ambient}, {self})"


def minimal_generators(monomials, ambient: int | None = None) -> Ideal:
    """Canonicalize an arbitrary generator list into a minimal generating set."""
    monomials = list(monomials)
    if ambient is None:
        if not monomials:
            raise InputError("cannot infer ambient from an empty generator list")
        ambient = monomials[0].ambient
    for m in monomials:
        if m.ambient != ambient:
            raise InputError(f"ambient mismatch: {m.ambient} vs {ambient}")
        if m.mask == 0:
            raise InputError("generator list contains 1 (unit ideal)")
    return Ideal.from_masks(ambient, minimalize_masks(m.mask for m in monomials))


def restriction(I: Ideal, U) -> Ideal:
    """Sub-ideal of generators supported inside the variable subset U."""
    umask = U if isinstance(U, int) else _vars_to_mask(I.ambient, U)
    if umask >> I.ambient:
        raise InputError(f"restriction set outside 1..{I.ambient}")
    return Ideal(I.ambient, tuple(g for g in I.gens if g.mask & ~umask == 0))


def localize(I: Ideal, f: Monomial):
    """Monomial localization at f.

    Returns (I_f, Ibar_f): I_f is generated by the monomials of I divisible
    by f (minimal generators are the minimized lcm(g, f)); Ibar_f deletes
    f's variables from each generator of I_f.  When f lies in I the second
    component would contain 1; that case returns UNIT_IDEAL there and
    callers must branch on it.
    """
    if f.mask == 0:
        raise InputError("cannot localize at 1")
    if not I.is_zero:
        _same_ambient(f, I.gens[0])
    if I.is_zero:
        return Ideal(I.ambient), Ideal(I.ambient)
    lifted = minimalize_masks(g.mask | f.mask for g in I.gens)
    I_f = Ideal.from_masks(I.ambient, lifted)
    if any(g.mask & ~f.mask == 0 for g in I.gens):
        return I_f, UNIT_IDEAL
    stripped = minimalize_masks(m & ~f.mask for m in lifted)
    return I_f, Ideal.from_masks(I.ambient, stripped)


def truncation(I: Ideal, d: int) -> Ideal:
    """Ideal generated by all squarefree degree-d monomials lying in I."""
    if not isinstance(d, int) or d < 1:
        raise InputError(f"truncation degree must be a positive integer, got {d!r}")
    if d > I.ambient:
        raise InputError(f"truncation degree {d} exceeds ambient {I.ambient}")
    n = I.ambient
    found: set[int] = set()
    for g in I.gens:
        k = g.degree
        if k > d:
            continue
        rest = [i for i in range(n) if not g.mask >> i & 1]
        for extra in itertools.combinations(rest, d - k):
            m = g.mask
            for i in extra:
                m |= 1 << i
            found.add(m)
    return Ideal.from_masks(n, sorted(found, key=canon_key))


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    if I.ambient != J.ambient:
        raise InputError("ambient mismatch")
    return Ideal.from_masks(I.ambient, minimalize_masks(I.gen_masks + J.gen_masks))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    if I.ambient != J.ambient:
        raise InputError("ambient mismatch")
    if I.is_zero or J.is_zero:
        return Ideal(I.ambient)
    pair_lcms = [a | b for a in I.gen_masks for b in J.gen_masks]
    return Ideal.from_masks(I.ambient, minimalize_masks(pair_lcms))


# --- plain-text ideal format -------------------------------------------------
#
# One monomial per line as `x<i>*x<j>*...`, blank lines and `#` comments
# ignored, with a required `ambient <n>` header.  Output is bit-exact
# canonical: generators in canonical order, variables ascending.


def parse_monomial(token: str, ambient: int) -> Monomial:
    token = token.strip()
    variables = []
    for part in token.split("*"):
        part = part.strip()
        if not part.startswith("x"):
            raise InputError(f"bad variable token {part!r} (expected x<k>)")
        try:
            idx = int(part[1:])
        except ValueError:
            raise InputError(f"bad variable token {part!r}") from None
        variables.append(idx)
    if len(set(variables)) != len(variables):
        raise InputError(f"repeated variable in {token!r} (monomials are squarefree)")
    return Monomial.from_vars(ambient, variables)


def parse_ideal(text: str) -> Ideal:
    ambient = None
    monomials: list[Monomial] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if ambient is None:
            parts = line.split()
            if len(parts) != 2 or parts[0] != "ambient":
                raise InputError(f"line {lineno}: expected header 'ambient <n>' first")
            try:
                ambient = int(parts[1])
            except ValueError:
                raise InputError(f"line {lineno}: bad ambient {parts[1]!r}") from None
            _check_ambient(ambient)
            continue
        monomials.append(parse_monomial(line, ambient))
    if ambient is None:
        raise InputError("missing 'ambient <n>' header")
    if not monomials:
        return Ideal(ambient)
    return minimal_generators(monomials, ambient=ambient)


def format_ideal(I: Ideal) -> str:
    lines = [f"ambient {I.ambient}"]
    lines.extend(str(g) for g in I.gens)
    return "\n".join(lines) + "\n"
