"""The numeric bound functions, verdict reports for the regularity bound
and its dual (S2 / cohomological dimension) form, and the odd-degree sharp
example generator.

The two bound functions, for generator degree d >= 2:

    f(n, d) = 0 if n < d;  d if n = d;  floor((d-1) n / (d+1)) + 1 if n > d
    g(n, d) = n - floor(n / (d+1)) - floor((n-1) / (d+1))

f is the bound a linearly presented pure degree-d ideal's regularity obeys
(in the form reg <= max(d, f(n, d))); g is the comparison bound coming
from the cohomological-dimension question that f sharpens.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

from .betti import regularity
from .complexes import RATIONALS, FieldSpec
from .core import (
    Ideal,
    InputError,
    InternalCheckError,
    PreconditionError,
    truncation,
)
from .duality import cohomological_dimension, height_profile, is_S2
from .linearity import n2_verdict_masks


def _f(n: int, d: int) -> int:
    if n < d:
        return 0
    if n == d:
        return d
    return (d - 1) * n // (d + 1) + 1


def _g(n: int, d: int) -> int:
    return n - n // (d + 1) - (n - 1) // (d + 1)


def f_bound(n: int, d: int) -> int:
    """Piecewise regularity bound f(n, d); requires d >= 2, n >= 0."""
    if d < 2:
        raise InputError(f"f(n, d) requires d >= 2, got d={d}")
    if n < 0:
        raise InputError(f"f(n, d) requires n >= 0, got n={n}")
    return _f(n, d)


def g_bound(n: int, d: int) -> int:
    """Comparison bound g(n, d); requires d >= 2, n >= 1."""
    if d < 2:
        raise InputError(f"g(n, d) requires d >= 2, got d={d}")
    if n < 1:
        raise InputError(f"g(n, d) requires n >= 1, got n={n}")
    return _g(n, d)


def faltings_bound(n: int, bigheight: int) -> int:
    """n - floor((n-1) / (bigheight + 1))."""
    if n < 1 or bigheight < 1:
        raise InputError("faltings_bound requires n >= 1 and bigheight >= 1")
    return n - (n - 1) // (bigheight + 1)


def theorem_bound(n: int, d: int) -> int:
    """max(d, f(n, d)), extended to d = 1 where both branches give 1."""
    if d < 1:
        raise InputError(f"need d >= 1, got {d}")
    return max(d, _f(n, d)) if d >= 2 else 1


@dataclass(frozen=True)
class BoundReport:
    """Verdict record tying a computed invariant to the bound functions.

    `kind` is "regularity" (reg of a linearly presented ideal against
    max(d, f(n, d))) or "cohomological" (cd of an S2 ideal of height d
    against the same expression).  `n` is the value the bound was
    evaluated at; both the ambient count and the support count are
    recorded, and `f_support` gives the (sharper) support-count bound for
    comparison.
    """

    kind: str
    n: int
    n_ambient: int
    n_support: int
    d: int
    reg: int
    f_value: int
    g_value: int
    bound: int
    theorem_holds: bool
    tight: bool
    faltings_value: int
    f_support: int

    def to_json(self) -> str:
        return json.dumps(self.__dict__, sort_keys=True)


def check_theorem1(I: Ideal, field: FieldSpec = RATIONALS, use_support: bool = False) -> BoundReport:
    """Regularity-bound report for a linearly presented pure-degree ideal.

    Refuses input that is not linearly presented rather than reporting
    vacuously.  The bound is evaluated at the ambient variable count by
    default; use_support=True restricts to the support count (valid by
    restriction, and sharper).  Both appear in the report either way.
    """
    if I.is_zero:
        raise InputError("zero ideal")
    d = I.pure_degree()
    if d is None:
        raise PreconditionError("generators have mixed degrees")
    ok, witness = n2_verdict_masks(I.gen_masks, d)
    if not ok:
        raise PreconditionError(
            f"ideal is not linearly presented (disconnected pair at indices {witness})"
        )
    n_ambient = I.ambient
    n_support = I.supp_mask.bit_count()
    n = n_support if use_support else n_ambient
    reg = regularity(I, field)
    # d = 1 is allowed here: both formulas extend consistently (f = g = 1)
    f_value = _f(n, d) if d >= 2 else 1
    g_value = _g(n, d) if d >= 2 else 1
    f_support = _f(n_support, d) if d >= 2 else 1
    bound = max(d, f_value)
    bh = height_profile(I).bigheight
    return BoundReport(
        kind="regularity",
        n=n,
        n_ambient=n_ambient,
        n_support=n_support,
        d=d,
        reg=reg,
        f_value=f_value,
        g_value=g_value,
        bound=bound,
        theorem_holds=reg <= bound,
        tight=reg == bound,
        faltings_value=faltings_bound(n_ambient, bh),
        f_support=f_support,
    )


def check_corollary1(I: Ideal, field: FieldSpec = RATIONALS, use_support: bool = False) -> BoundReport:
    """Cohomological-dimension report for an ideal whose quotient is S2.

    The invariant is cd(S, I) (= pd of the quotient = reg of the dual),
    bounded by max(c, f(n, c)) with c the height; g(n, c) is included for
    the comparison with the weaker floor-pair bound.
    """
    if I.is_zero:
        raise InputError("zero ideal")
    ok, c = is_S2(I, field)
    if not ok:
        raise PreconditionError("quotient does not satisfy S2")
    n_ambient = I.ambient
    n_support = I.supp_mask.bit_count()
    n = n_support if use_support else n_ambient
    cd = cohomological_dimension(I, field)
    f_value = _f(n, c) if c >= 2 else 1
    g_value = _g(n, c) if c >= 2 else 1
    f_support = _f(n_support, c) if c >= 2 else 1
    bound = max(c, f_value)
    bh = height_profile(I).bigheight
    return BoundReport(
        kind="cohomological",
        n=n,
        n_ambient=n_ambient,
        n_support=n_support,
        d=c,
        reg=cd,
        f_value=f_value,
        g_value=g_value,
        bound=bound,
        theorem_holds=cd <= bound,
        tight=cd == bound,
        faltings_value=faltings_bound(n_ambient, bh),
        f_support=f_support,
    )


def sharp_example(n: int, d: int, verify: bool = True) -> Ideal:
    """A linearly presented pure degree-d ideal with regularity exactly
    f(n, d), for odd d >= 3 and any n >= d.

    Construction: write n = (k+1) t + s with d = 2k+1, 0 <= s <= k and
    t >= 2 (n = d returns the single full-support monomial).  Take the
    complete intersection of t consecutive-variable monomials of degree
    k+1, plus one monomial of degree s when 2 <= s <= k, and truncate to
    degree d.  The stated properties are re-verified before returning.
    """
    if d < 3 or d % 2 == 0:
        raise InputError(f"sharp_example requires odd d >= 3, got {d}")
    if n < d:
        raise InputError(f"sharp_example requires n >= d, got n={n} < d={d}")
    if n == d:
        ideal = Ideal.from_masks(n, [(1 << d) - 1])
    else:
        k = (d - 1) // 2
        t, s = divmod(n, k + 1)
        block = (1 << (k + 1)) - 1
        masks = [block << (j * (k + 1)) for j in range(t)]
        if s >= 2:
            masks.append(((1 << s) - 1) << (t * (k + 1)))
        ideal = truncation(Ideal.from_masks(n, masks), d)
    if verify:
        ok, _ = n2_verdict_masks(ideal.gen_masks, d)
        expected = _f(n, d)
        reg = regularity(ideal, RATIONALS)
        if not ok or reg != expected:
            raise InternalCheckError(
                f"sharp example postcondition failed at n={n}, d={d}: "
                f"linear presentation={ok}, reg={reg}, expected {expected}"
            )
    return ideal
