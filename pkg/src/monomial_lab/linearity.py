"""Linear-presentation machinery for pure-degree squarefree ideals: the
generator graph, the connectivity criterion, the Betti-table criterion,
and the constructive gcd witness search.

For an ideal generated in degree d, two generators are adjacent when their
lcm has degree d+1.  The ideal is linearly presented (property N_2) exactly
when, for every generator pair (u, v), the subgraph induced on the
generators dividing lcm(u, v) is connected.  The Betti route checks the
same property (and the higher N_k) directly from vanishing of table rows.
"""

from __future__ import annotations

from dataclasses import dataclass

from .betti import _remap, _saturated_sigmas
from .complexes import GF2, RATIONALS, FieldSpec, exact_rational_hq, homology_profile
from .core import (
    Ideal,
    InputError,
    Monomial,
    PreconditionError,
    TheoremViolationError,
    gcd,
    minimal_generators,
    truncation,
)


def _pure_degree_checked(I: Ideal) -> int:
    if I.is_zero:
        raise InputError("the zero ideal has no generator degree")
    d = I.pure_degree()
    if d is None:
        raise InputError("generators have mixed degrees")
    return d


def _adjacency(gens: tuple[int, ...], d: int) -> list[int]:
    r = len(gens)
    adj = [0] * r
    for a in range(r):
        ga = gens[a]
        for b in range(a + 1, r):
            if (ga | gens[b]).bit_count() == d + 1:
                adj[a] |= 1 << b
                adj[b] |= 1 << a
    return adj


def n2_verdict_masks(gens: tuple[int, ...], d: int):
    """Connectivity criterion on raw generator bitmasks.

    Returns (True, None) or (False, (a, b)) with the canonically first
    disconnected generator index pair.
    """
    r = len(gens)
    if r <= 1:
        return True, None
    adj = _adjacency(gens, d)
    for a in range(r):
        adj_a = adj[a]
        ga = gens[a]
        for b in range(a + 1, r):
            if adj_a >> b & 1:
                continue  # direct edge, trivially connected
            big = ga | gens[b]
            members = 0
            for i in range(r):
                if gens[i] & ~big == 0:
                    members |= 1 << i
            target = 1 << b
            seen = 1 << a
            frontier = seen
            while frontier and not seen & target:
                nxt = 0
                x = frontier
                while x:
                    low = x & -x
                    x ^= low
                    nxt |= adj[low.bit_length() - 1]
                frontier = nxt & members & ~seen
                seen |= frontier
            if not seen & target:
                return False, (a, b)
    return True, None


@dataclass(frozen=True)
class GenGraph:
    """Generator graph: vertices are generator indices, edges where the
    pairwise lcm has degree one more than the generator degree."""

    ideal: Ideal
    degree: int
    adjacency: tuple[int, ...]  # row bitmasks over generator indices

    def has_edge(self, a: int, b: int) -> bool:
        return bool(self.adjacency[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        out = []
        for a in range(len(self.adjacency)):
            for b in range(a + 1, len(self.adjacency)):
                if self.has_edge(a, b):
                    out.append((a, b))
        return out


@dataclass(frozen=True)
class LcmSubgraph:
    """Induced subgraph on the generators dividing lcm(u, v)."""

    graph: GenGraph
    u: int
    v: int
    vertices: tuple[int, ...]
    edges: tuple[tuple[int, int], ...]

    def is_connected(self) -> bool:
        verts = set(self.vertices)
        if len(verts) <= 1:
            return True
        nbrs: dict[int, set[int]] = {x: set() for x in verts}
        for a, b in self.edges:
            nbrs[a].add(b)
            nbrs[b].add(a)
        stack = [self.vertices[0]]
        seen = {self.vertices[0]}
        while stack:
            x = stack.pop()
            for y in nbrs[x]:
                if y not in seen:
                    seen.add(y)
                    stack.append(y)
        return seen == verts


def generator_graph(I: Ideal) -> GenGraph:
    d = _pure_degree_checked(I)
    return GenGraph(I, d, tuple(_adjacency(I.gen_masks, d)))


def lcm_induced_subgraph(G: GenGraph, u: int, v: int) -> LcmSubgraph:
    r = len(G.adjacency)
    if not (0 <= u < r and 0 <= v < r):
        raise InputError(f"generator index out of range 0..{r - 1}")
    gens = G.ideal.gen_masks
    big = gens[u] | gens[v]
    vertices = tuple(i for i in range(r) if gens[i] & ~big == 0)
    edges = tuple(
        (a, b)
        for ai, a in enumerate(vertices)
        for b in vertices[ai + 1:]
        if G.has_edge(a, b)
    )
    return LcmSubgraph(G, u, v, vertices, edges)


def is_N2_graph(I: Ideal):
    """Connectivity criterion for linear presentation.

    Returns (verdict, witness): witness is None on success, otherwise the
    canonically first generator pair whose induced lcm subgraph is
    disconnected.
    """
    d = _pure_degree_checked(I)
    ok, pair = n2_verdict_masks(I.gen_masks, d)
    if ok:
        return True, None
    return False, (I.gens[pair[0]], I.gens[pair[1]])


def nk_betti_masks(gens: tuple[int, ...], d: int, k: int, field: FieldSpec) -> bool:
    supp = 0
    for g in gens:
        supp |= g
    for sigma, restricted in _saturated_sigmas(gens, supp):
        m, local = _remap(sigma, restricted)
        for i in range(0, min(k, m)):
            if m == i + d:
                continue  # linear strand entry, allowed
            idx = m - i - 1  # profile slot of H~_{m-i-2}
            if field.p is None:
                if homology_profile(m, local, GF2)[idx] and exact_rational_hq(m, local, idx - 1):
                    return False
            elif homology_profile(m, local, field)[idx]:
                return False
    return True


def is_Nk_betti(I: Ideal, k: int, field: FieldSpec = RATIONALS) -> bool:
    """Betti criterion: rows 0..k-1 of the ideal's table live only in the
    linear degrees j = i + d."""
    if k < 1:
        raise InputError(f"k must be >= 1, got {k}")
    d = _pure_degree_checked(I)
    return nk_betti_masks(I.gen_masks, d, k, field)


def _trunc_with(I: Ideal, extra: Monomial, d: int) -> Ideal:
    return truncation(minimal_generators(list(I.gens) + [extra], ambient=I.ambient), d)


def gcd_witness(I: Ideal, f: Monomial) -> tuple[Monomial, Monomial]:
    """Find a generator f1 with deg gcd(f1, f) = deg f - 1 such that adding
    that gcd keeps the degree-d truncation linearly presented.

    Hypotheses: I pure of degree d, 2 <= deg f <= d, I not contained in
    (f), and the truncation of I + (f) linearly presented.  A scan failure
    raises TheoremViolationError: it would contradict a verified statement
    and is treated as a bug or a falsification.
    """
    d = _pure_degree_checked(I)
    if f.ambient != I.ambient:
        raise InputError("ambient mismatch")
    if not 2 <= f.degree <= d:
        raise PreconditionError(f"need 2 <= deg f <= {d}, got {f.degree}")
    if all(f.mask & ~g.mask == 0 for g in I.gens):
        raise PreconditionError("I is contained in (f)")
    J = _trunc_with(I, f, d)
    ok, _ = n2_verdict_masks(J.gen_masks, d)
    if not ok:
        raise PreconditionError("truncation of I + (f) is not linearly presented")
    for f1 in I.gens:
        g = gcd(f1, f)
        if g.degree != f.degree - 1:
            continue
        K = _trunc_with(I, g, d)
        ok, _ = n2_verdict_masks(K.gen_masks, d)
        if ok:
            return f1, g
    raise TheoremViolationError(
        f"no gcd witness for I={I} and f={f}: hypotheses hold but every candidate fails"
    )
