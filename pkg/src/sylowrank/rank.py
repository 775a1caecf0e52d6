"""2-rank and normal 2-rank by exact search, plus element-count identities.

Elementary abelian 2-subgroups are cliques in the commuting graph on the
involutions that are closed under products.  The rank search grows such a
subgroup one coset at a time; the normal-rank search grows a normal one by
whole conjugacy classes.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from .constructions import sylow_symmetric
from .errors import CapExceeded, PreconditionFailed
from .groups import Group, MonomialLaw, conjugacy_classes

STRICT_CAP = 1 << 12


def involutions(G: Group) -> List:
    ident = G.identity
    mul = G.law.mul
    return [x for x in G.elements if x != ident and mul(x, x) == ident]


def _log2_floor(x: int) -> int:
    return x.bit_length() - 1


class InvolutionGraph:
    """Commuting graph on the involutions of G, as bitset rows.

    Vertices are numbered by descending degree (ties by position in
    ``G.elements``), so low bits are tried first by the searches.
    """

    def __init__(self, G: Group):
        self.G = G
        mul = G.law.mul
        raw = involutions(G)
        inv_set = set(raw)
        n = len(raw)
        # two distinct involutions commute iff their product is an involution
        nbrs = [[] for _ in range(n)]
        for i in range(n):
            a = raw[i]
            row = nbrs[i]
            for j in range(i + 1, n):
                if mul(a, raw[j]) in inv_set:
                    row.append(j)
                    nbrs[j].append(i)
        order = sorted(range(n), key=lambda i: (-len(nbrs[i]), i))
        relabel = {old: new for new, old in enumerate(order)}
        self.vertices = [raw[i] for i in order]
        self.pos = {x: i for i, x in enumerate(self.vertices)}
        self.adj = [0] * n
        for old, row in enumerate(nbrs):
            mask = 0
            for j in row:
                mask |= 1 << relabel[j]
            self.adj[relabel[old]] = mask
        self._prod: Dict[Tuple[int, int], int] = {}

    def __len__(self):
        return len(self.vertices)

    def product(self, i: int, j: int) -> int:
        """Vertex of x_i x_j for adjacent i, j."""
        key = (i, j) if i < j else (j, i)
        k = self._prod.get(key)
        if k is None:
            k = self.pos[self.G.law.mul(self.vertices[i], self.vertices[j])]
            self._prod[key] = k
        return k

    def mask(self, ids) -> int:
        m = 0
        for i in ids:
            m |= 1 << i
        return m

    def span(self, basis: Sequence[int]) -> List[int]:
        """Nonidentity members of the subgroup generated by commuting vertices."""
        members: List[int] = []
        for x in basis:
            if x in members:
                continue
            members = members + [x] + [self.product(x, e) for e in members]
        return members


@dataclass
class SearchStats:
    nodes: int = 0
    seconds: float = 0.0


def rank(G: Group, graph: Optional[InvolutionGraph] = None,
         stats: Optional[SearchStats] = None) -> Tuple[int, List]:
    """2-rank of G and a basis of an elementary abelian subgroup attaining it."""
    g = graph or InvolutionGraph(G)
    st = stats or SearchStats()
    t0 = time.perf_counter()
    best_dim = 0
    best_basis: List[int] = []
    adj = g.adj
    prod = g.product

    def search(members: List[int], basis: List[int], cand: int):
        nonlocal best_dim, best_basis
        st.nodes += 1
        d = len(basis)
        if d > best_dim:
            best_dim, best_basis = d, list(basis)
        size = 1 << d
        while cand:
            if d + _log2_floor(1 + cand.bit_count() // size) <= best_dim:
                return
            low = cand & -cand
            x = low.bit_length() - 1
            coset = [x] + [prod(x, e) for e in members]
            cmask = 0
            for c in coset:
                cmask |= 1 << c
            search(members + coset, basis + [x], cand & adj[x] & ~cmask)
            cand &= ~cmask

    search([], [], (1 << len(g)) - 1)
    st.seconds += time.perf_counter() - t0
    return best_dim, [g.vertices[i] for i in best_basis]


def involution_classes(G: Group, graph: InvolutionGraph) -> List[List[int]]:
    classes = conjugacy_classes(G, graph.vertices)
    return [sorted(graph.pos[x] for x in cls) for cls in classes]


def normal_rank(G: Group, graph: Optional[InvolutionGraph] = None,
                stats: Optional[SearchStats] = None) -> Tuple[int, List]:
    """Normal 2-rank of G and a basis of a normal elementary abelian subgroup.

    Normal subgroups are unions of conjugacy classes, so the search adds
    whole classes of involutions.  Include/exclude branching visits each
    normal elementary abelian subgroup at most once.
    """
    g = graph or InvolutionGraph(G)
    st = stats or SearchStats()
    t0 = time.perf_counter()
    adj = g.adj
    classes = []
    for cls in involution_classes(G, g):
        m = g.mask(cls)
        # a class can sit in an abelian subgroup only if it pairwise commutes
        if all((m & ~adj[x]) == 1 << x for x in cls):
            classes.append((m, cls))
    classes.sort(key=lambda c: (len(c[1]), c[1][0]))
    best_dim = 0
    best_basis: List[int] = []
    everything = (1 << len(g)) - 1

    def search(members: List[int], nmask: int, basis: List[int], common: int,
               cand: List[int], excluded: int):
        nonlocal best_dim, best_basis
        st.nodes += 1
        d = len(basis)
        if d > best_dim:
            best_dim, best_basis = d, list(basis)
        cand = [c for c in cand
                if classes[c][0] & ~common == 0 and classes[c][0] & ~nmask]
        size = 1 << d
        while cand:
            union = 0
            for c in cand:
                union |= classes[c][0]
            if d + _log2_floor(1 + union.bit_count() // size) <= best_dim:
                return
            c = cand[0]
            cmask, cls = classes[c]
            new_members = list(members)
            new_mask = nmask
            new_basis = list(basis)
            new_common = common
            for x in cls:
                if new_mask >> x & 1:
                    continue
                coset = [x] + [g.product(x, e) for e in new_members]
                new_members += coset
                for y in coset:
                    new_mask |= 1 << y
                new_basis.append(x)
                new_common &= adj[x] | (1 << x)
            if not new_mask & excluded:
                search(new_members, new_mask, new_basis, new_common, cand[1:], excluded)
            excluded |= cmask
            cand = cand[1:]

    search([], 0, [], everything, list(range(len(classes))), 0)
    st.seconds += time.perf_counter() - t0
    return best_dim, [g.vertices[i] for i in best_basis]


def all_maximal_elem_abelian(G: Group, cap: int = STRICT_CAP) -> List[Group]:
    """Every elementary abelian subgroup that is maximal under inclusion.

    These are exactly the maximal cliques of the commuting graph on
    involutions (with the identity added), found by Bron-Kerbosch.
    """
    if G.order > cap:
        raise CapExceeded(f"group of order {G.order} exceeds strict cap {cap}")
    g = InvolutionGraph(G)
    adj = g.adj
    found: List[int] = []

    def bk(r: int, p: int, x: int):
        if not p and not x:
            found.append(r)
            return
        pu = p | x
        pivot = max(_bits(pu), key=lambda v: (adj[v] & p).bit_count())
        for v in _bits(p & ~adj[pivot]):
            bk(r | 1 << v, p & adj[v], x & adj[v])
            p &= ~(1 << v)
            x |= 1 << v

    bk(0, (1 << len(g)) - 1, 0)
    out = []
    for r in found:
        members = [G.identity] + [g.vertices[i] for i in _bits(r)]
        members.sort(key=G.index.__getitem__)
        basis = [g.vertices[i] for i in _basis_of(g, _bits(r))]
        out.append(Group(G.law, basis, members, parent=G, name="E"))
    out.sort(key=lambda H: (-H.order, [G.index[x] for x in H.elements]))
    return out


def _bits(mask: int) -> List[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _basis_of(g: InvolutionGraph, ids: List[int]) -> List[int]:
    basis: List[int] = []
    members: set = set()
    for x in ids:
        if x in members:
            continue
        span = g.span(basis + [x])
        basis.append(x)
        members = set(span)
    return basis


# ---------------------------------------------------------------------------
# reports


@dataclass
class RankReport:
    rank: int
    rank_witness: List
    normal_rank: Optional[int] = None
    normal_witness: List = field(default_factory=list)
    stats: Dict[str, float] = field(default_factory=dict)

    def to_dict(self, G: Group, timings: bool = True) -> dict:
        fmt = G.law.format
        out = {
            "order": G.order,
            "rank": self.rank,
            "rank_witness": [fmt(x) for x in self.rank_witness],
        }
        if self.normal_rank is not None:
            out["nrank"] = self.normal_rank
            out["nrank_witness"] = [fmt(x) for x in self.normal_witness]
        stats = dict(self.stats)
        if not timings:
            stats.pop("millis", None)
        out["stats"] = stats
        return out


def rank_report(G: Group, with_normal: bool = True) -> RankReport:
    t0 = time.perf_counter()
    graph = InvolutionGraph(G)
    rs, ns = SearchStats(), SearchStats()
    r, rw = rank(G, graph, rs)
    report = RankReport(r, rw)
    if with_normal:
        nr, nw = normal_rank(G, graph, ns)
        report.normal_rank, report.normal_witness = nr, nw
    report.stats = {
        "involutions": len(graph),
        "rank_nodes": rs.nodes,
        "nrank_nodes": ns.nodes,
        "millis": round(1000 * (time.perf_counter() - t0), 3),
    }
    return report


# ---------------------------------------------------------------------------
# counting identities


def count_order_p(G: Group, p: int) -> int:
    """Number of elements of order exactly p (p prime)."""
    ident = G.identity
    return sum(1 for x in G.elements if x != ident and G.power(x, p) == ident)


def _check_cycled_base(P: Group, x, p: int):
    law = P.law
    if not isinstance(law, MonomialLaw) or law.blocks != p:
        raise PreconditionFailed("expected a monomial group on p blocks")
    ident_perm = tuple(range(p))
    if any(y[0] != ident_perm for y in P.elements):
        raise PreconditionFailed("P must consist of block-diagonal elements")
    projections = [set(y[1][j] for y in P.elements) for j in range(p)]
    sizes = {len(s) for s in projections}
    if len(sizes) != 1:
        raise PreconditionFailed("block projections of P differ in size")
    q = sizes.pop()
    if P.order != q ** p:
        raise PreconditionFailed("P is not the direct product of its block projections")
    perm = x[0]
    j, steps = perm[0], 1
    while j != 0:
        j = perm[j]
        steps += 1
    if steps != p:
        raise PreconditionFailed("x does not cycle the p blocks")
    xi = law.inv(x)
    for y in P.gens:
        if law.mul(law.mul(x, y), xi) not in P.index:
            raise PreconditionFailed("x does not normalise P")
    if P.power(x, p) not in P.index:
        raise PreconditionFailed("x^p must lie in P")
    return q


def count_order_p_in_coset(P: Group, x, p: int) -> int:
    """Elements of order p in the coset xP, where x cycles the p factors of P."""
    _check_cycled_base(P, x, p)
    mul = P.law.mul
    ident = P.identity
    count = 0
    for y in P.elements:
        z = mul(x, y)
        if z != ident and P.power(z, p) == ident:
            count += 1
    return count


def coset_elements_conjugate(P: Group, x, p: int) -> bool:
    """Whether every order-p element of xP is a P-conjugate of x."""
    _check_cycled_base(P, x, p)
    law = P.law
    conj = {law.mul(law.mul(y, x), law.inv(y)) for y in P.elements}
    ident = P.identity
    for y in P.elements:
        z = law.mul(x, y)
        if z != ident and P.power(z, p) == ident and z not in conj:
            return False
    return True


def wreath_count_formula(d_q: int, q_order: int, p: int) -> int:
    """d(Q wr Z_p) from d(Q) and |Q|."""
    return (d_q + 1) ** p - 1 + (p - 1) * q_order ** (p - 1)


def count_fixed_point_free(n: int, p: int = 2) -> int:
    """Fixed-point-free elements of order p in a Sylow p-subgroup of S_(p^n)."""
    G = sylow_symmetric(p, n)
    ident = G.identity
    count = 0
    for x in G.elements:
        perm = x[0]
        if any(perm[j] == j for j in range(len(perm))):
            continue
        if G.power(x, p) == ident:
            count += 1
    return count


def sylow_symmetric_order(p: int, n: int) -> int:
    return p ** ((p ** n - 1) // (p - 1))


def v_sequence(p: int, n: int) -> Tuple[List[int], List[bool]]:
    """v_1 .. v_n by enumeration, with the recursion checked at every step."""
    values = [count_fixed_point_free(k, p) for k in range(1, n + 1)]
    checks = []
    prev = 0  # v_0: one point, no fixed-point-free element
    for k, v in enumerate(values):
        q = sylow_symmetric_order(p, k)
        checks.append(v == prev ** p + (p - 1) * q ** (p - 1))
        prev = v
    return values, checks
