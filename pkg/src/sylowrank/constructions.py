"""Wreath products, twisted wreath products and the groups S(T, R, J).

Everything here is a monomial group: block permutation plus one label per
block, multiplied as in :class:`~sylowrank.groups.MonomialLaw`.  A block
diagonal product of several constructions is the same law over the union of
their blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import List, Sequence, Tuple

from .errors import BadParameter
from .groups import (
    DEFAULT_CAP,
    Group,
    MonomialLaw,
    ProductLaw,
    closure,
    trivial_group,
)
from .presentations import ActionSpec, dihedral

VARIANTS = ("full", "r_only", "j_only", "plain")

_VARIANT_ALIASES = {
    "full": "full", "j-full": "full", "trj": "full",
    "r_only": "r_only", "r-only": "r_only", "tr1": "r_only",
    "j_only": "j_only", "j-only": "j_only", "t1j": "j_only",
    "plain": "plain", "t11": "plain",
}

# (perm, labels) with labels as actual elements of the label group
RawGen = Tuple[List[int], List[object]]


@dataclass(frozen=True)
class AdicDecomposition:
    """n = sum of 2^m over strictly increasing exponents ``digits``."""

    digits: Tuple[int, ...]

    @property
    def u(self) -> int:
        return len(self.digits)

    @property
    def n(self) -> int:
        return sum(1 << m for m in self.digits)

    @property
    def sizes(self) -> List[int]:
        return [1 << m for m in self.digits]

    @property
    def offsets(self) -> List[int]:
        out, acc = [], 0
        for s in self.sizes:
            out.append(acc)
            acc += s
        return out


def adic(n: int) -> AdicDecomposition:
    if n < 1:
        raise BadParameter("adic decomposition needs n >= 1")
    return AdicDecomposition(tuple(i for i in range(n.bit_length()) if n >> i & 1))


# ---------------------------------------------------------------------------
# raw generator lists


def _shift(gen: RawGen, offset: int, total: int, one) -> RawGen:
    perm, labels = gen
    size = len(perm)
    p = list(range(total))
    lab = [one] * total
    for j in range(size):
        p[offset + j] = offset + perm[j]
        lab[offset + j] = labels[j]
    return p, lab


def _twisted_gens(level: int, tgens: Sequence, rgens: Sequence, inv, one,
                  use_r: bool, use_j: bool) -> List[RawGen]:
    """Generators of w_level(T, R, J) (or a variant) over 2^level blocks."""
    if level == 0:
        return [([0], [t]) for t in tgens]
    sub = _twisted_gens(level - 1, tgens, rgens, inv, one, use_r, use_j)
    half = 1 << (level - 1)
    total = 2 * half
    out = [_shift(g, 0, total, one) for g in sub] + [_shift(g, half, total, one) for g in sub]
    if use_r:
        for r in rgens:
            lab = [one] * total
            lab[0] = r
            lab[half] = inv(r)
            out.append((list(range(total)), lab))
    if use_j:
        out.append(([j + half for j in range(half)] + list(range(half)), [one] * total))
    return out


def _cyclic_wreath_gens(level: int, base_gens: Sequence, one, p: int = 2) -> List[RawGen]:
    """Generators of the level-fold wreath of the base with Z_p, over p^level blocks."""
    if level == 0:
        return [([0], [b]) for b in base_gens]
    sub = _cyclic_wreath_gens(level - 1, base_gens, one, p)
    size = p ** (level - 1)
    total = size * p
    out = []
    for k in range(p):
        out.extend(_shift(g, k * size, total, one) for g in sub)
    out.append(([(j + size) % total for j in range(total)], [one] * total))
    return out


def _dedupe(gens: List[RawGen]) -> List[RawGen]:
    seen, out = set(), []
    for perm, lab in gens:
        key = (tuple(perm), tuple(map(repr, lab)))
        if key not in seen:
            seen.add(key)
            out.append((perm, lab))
    return out


def _realise(law: MonomialLaw, gens: List[RawGen]) -> list:
    out = []
    for perm, lab in _dedupe(gens):
        g = law.make(perm, lab)
        if g != law.identity:
            out.append(g)
    return out


# ---------------------------------------------------------------------------
# ordinary wreath products


def wreath_cyclic(Q: Group, p: int = 2, cap: int = DEFAULT_CAP) -> Group:
    """Q wr Z_p with the base Q^p as perm-trivial elements."""
    law = MonomialLaw(p, Q)
    raw = _cyclic_wreath_gens(1, Q.gens, Q.identity, p)
    return closure(law, _realise(law, raw), cap=cap, name=f"{Q.name}wrZ{p}")


def wreath_z2(Q: Group, cap: int = DEFAULT_CAP) -> Group:
    return wreath_cyclic(Q, 2, cap)


def iterated_wreath(T: Group, n: int, cap: int = DEFAULT_CAP) -> Group:
    """w_n(T) = w_(n-1)(T) wr Z_2, over 2^n blocks labelled by T."""
    if n < 0:
        raise BadParameter("level must be nonnegative")
    law = MonomialLaw(1 << n, T)
    raw = _cyclic_wreath_gens(n, T.gens, T.identity, 2)
    return closure(law, _realise(law, raw), cap=cap, name=f"w{n}({T.name})")


def sylow_symmetric(p: int, n: int, cap: int = DEFAULT_CAP) -> Group:
    """Sylow p-subgroup of S_(p^n) as block permutations with trivial labels."""
    one = trivial_group()
    law = MonomialLaw(p ** n, one)
    raw = _cyclic_wreath_gens(n, [], one.identity, p)
    return closure(law, _realise(law, raw), cap=cap, name=f"Syl{p}(S{p ** n})")


def block_diagonal_wreaths(B: Group, levels: Sequence[int], cap: int = DEFAULT_CAP) -> Group:
    """diag(w_l1(B), w_l2(B), ...) as one monomial group over B."""
    sizes = [1 << lv for lv in levels]
    total = sum(sizes)
    law = MonomialLaw(total, B)
    raw: List[RawGen] = []
    offset = 0
    for lv, size in zip(levels, sizes):
        raw.extend(_shift(g, offset, total, B.identity)
                   for g in _cyclic_wreath_gens(lv, B.gens, B.identity, 2))
        offset += size
    name = "x".join(f"w{lv}({B.name})" for lv in levels)
    return closure(law, _realise(law, raw), cap=cap, name=name)


def base_subgroup(G: Group) -> Group:
    """Perm-trivial elements of a monomial group."""
    ident = G.identity[0]
    members = [x for x in G.elements if x[0] == ident]
    H = Group(G.law, members[1:], members, parent=G, name="base")
    return H


# ---------------------------------------------------------------------------
# twisted wreath products


@dataclass
class TwistParams:
    """T, R and the semidirect product TR that labels every block."""

    T: Group
    R: Group
    TR: Group
    action: str = ""

    @classmethod
    def from_action(cls, act: ActionSpec) -> "TwistParams":
        return cls(act.T, act.R, act.semidirect(), act.name)

    def t_part(self, x):
        return x[0]

    def r_part(self, x):
        return x[1]

    def embed_t(self, t):
        return (t, self.R.identity)

    def embed_r(self, r):
        return (self.T.identity, r)

    @property
    def t_gens(self) -> list:
        return [self.embed_t(t) for t in self.T.gens]

    @property
    def r_gens(self) -> list:
        return [self.embed_r(r) for r in self.R.gens]


def _normalise_variant(variant: str) -> str:
    try:
        return _VARIANT_ALIASES[variant.lower()]
    except KeyError:
        raise BadParameter(f"unknown variant {variant!r}") from None


class TwistedSystem:
    """All groups of the twisted wreath family for one TR and block count.

    ``n`` is the number of blocks; it is split into segments of sizes 2^m_i
    from its 2-adic representation, smallest first.  All groups share one
    monomial law with labels in TR, so membership between them is direct.
    """

    def __init__(self, params: TwistParams, n: int, cap: int = DEFAULT_CAP):
        self.params = params
        self.n = n
        self.decomp = adic(n)
        self.cap = cap
        self.law = MonomialLaw(n, params.TR)
        self.one = params.TR.identity

    def _w_gens(self, tgens, rgens, variant: str) -> List[RawGen]:
        variant = _normalise_variant(variant)
        use_r = variant in ("full", "r_only")
        use_j = variant in ("full", "j_only")
        inv = self.params.TR.inv
        raw: List[RawGen] = []
        for m, off in zip(self.decomp.digits, self.decomp.offsets):
            for g in _twisted_gens(m, tgens, rgens, inv, self.one, use_r, use_j):
                raw.append(_shift(g, off, self.n, self.one))
        return raw

    def _u_gens(self, rgens) -> List[RawGen]:
        offs = self.decomp.offsets
        raw = []
        for j in range(len(offs) - 1):
            for r in rgens:
                lab = [self.one] * self.n
                lab[offs[j]] = r
                lab[offs[j + 1]] = r
                raw.append((list(range(self.n)), lab))
        return raw

    def generate(self, tgens=None, rgens=None, variant: str = "full",
                 with_u: bool = True, u_rgens=None, name: str = "") -> Group:
        """Closure of W(tgens, rgens, variant) together with U(u_rgens).

        ``tgens``/``rgens`` are TR elements; they default to generators of T
        and R.  ``u_rgens`` defaults to ``rgens`` when the variant uses R.
        """
        p = self.params
        tgens = p.t_gens if tgens is None else list(tgens)
        rgens = p.r_gens if rgens is None else list(rgens)
        raw = self._w_gens(tgens, rgens, variant)
        if with_u:
            if u_rgens is None:
                u_rgens = rgens if _normalise_variant(variant) in ("full", "r_only") else []
            raw += self._u_gens(u_rgens)
        return closure(self.law, _realise(self.law, raw), cap=self.cap, name=name)

    # the groups named in the construction
    @cached_property
    def S(self) -> Group:
        """S(T, R, J) = W(T, R, J) x| U(R)."""
        return self.generate(name=f"S({self.params.T.name},{self.params.R.name},J;n={self.n})")

    @cached_property
    def W(self) -> Group:
        return self.generate(with_u=False, name="W(T,R,J)")

    @cached_property
    def S_TR1(self) -> Group:
        """S(T, R, 1) = W(T, R, 1) x| U(R)."""
        return self.generate(variant="r_only", name="S(T,R,1)")

    @cached_property
    def W_TR1(self) -> Group:
        return self.generate(variant="r_only", with_u=False, name="W(T,R,1)")

    @cached_property
    def W_11J(self) -> Group:
        """Permutation-only part W(1, 1, J)."""
        return self.generate(tgens=[], rgens=[], variant="j_only", with_u=False, name="W(1,1,J)")

    @cached_property
    def S_T11(self) -> Group:
        """S(T, 1, 1) = W(T, 1, 1), a direct product of n copies of T."""
        return self.generate(variant="plain", with_u=False, name="S(T,1,1)")

    @cached_property
    def U(self) -> Group:
        return build_U(self.params, self.decomp, law=self.law, cap=self.cap)

    @cached_property
    def ambient(self) -> Group:
        """W(TR, 1, J), which contains S(T, R, J)."""
        tr_gens = list(self.params.TR.gens)
        return self.generate(tgens=tr_gens, rgens=[], variant="j_only", with_u=False,
                             name="W(TR,1,J)")

    def parity_ok(self, x) -> bool:
        """Even number of blocks whose label has a nontrivial R-part."""
        r_one = self.params.R.identity
        labels = self.law.labels.elements
        return sum(1 for i in x[1] if labels[i][1] != r_one) % 2 == 0


def twisted_wreath(params: TwistParams, n: int, variant: str = "full",
                   cap: int = DEFAULT_CAP) -> Group:
    """w_n(T, R, J) and its variants over 2^n blocks with labels in TR.

    variant: ``full`` = w_n(T,R,J), ``r_only`` = w_n(T,R,1),
    ``j_only`` = w_n(T,1,J), ``plain`` = w_n(T,1,1).
    """
    variant = _normalise_variant(variant)
    law = MonomialLaw(1 << n, params.TR)
    use_r = variant in ("full", "r_only")
    use_j = variant in ("full", "j_only")
    raw = _twisted_gens(n, params.t_gens, params.r_gens, params.TR.inv, params.TR.identity,
                        use_r, use_j)
    return closure(law, _realise(law, raw), cap=cap, name=f"w{n}[{variant}]")


def diagonal_D(params: TwistParams, n: int, cap: int = DEFAULT_CAP) -> Group:
    """D_n = < diag(r, 1, ..., 1) : r in R > over 2^n blocks."""
    law = MonomialLaw(1 << n, params.TR)
    one = params.TR.identity
    gens = [law.diag([r] + [one] * ((1 << n) - 1)) for r in params.r_gens]
    return closure(law, gens, cap=cap, name=f"D_{n}")


def diagonal_R(params: TwistParams, n: int, cap: int = DEFAULT_CAP) -> Group:
    """R_n = < diag(d_(n-1)(r), d_(n-1)(r)^-1) > over 2^n blocks (n >= 1)."""
    if n < 1:
        raise BadParameter("R_n needs n >= 1")
    law = MonomialLaw(1 << n, params.TR)
    one = params.TR.identity
    half = 1 << (n - 1)
    gens = []
    for r in params.r_gens:
        lab = [one] * (2 * half)
        lab[0], lab[half] = r, params.TR.inv(r)
        gens.append(law.diag(lab))
    return closure(law, gens, cap=cap, name=f"R_{n}")


def build_U(params: TwistParams, decomp: AdicDecomposition, law: MonomialLaw = None,
            cap: int = DEFAULT_CAP) -> Group:
    """U(R): trivial when u = 1, else generated by diag(.., d(r), d(r), ..)."""
    law = law or MonomialLaw(decomp.n, params.TR)
    one = params.TR.identity
    offs = decomp.offsets
    gens = []
    for j in range(decomp.u - 1):
        for r in params.r_gens:
            lab = [one] * decomp.n
            lab[offs[j]] = r
            lab[offs[j + 1]] = r
            gens.append(law.diag(lab))
    return closure(law, gens, cap=cap, name="U(R)")


def build_S(params: TwistParams, n: int, cap: int = DEFAULT_CAP) -> Group:
    return TwistedSystem(params, n, cap).S


# ---------------------------------------------------------------------------
# the group V = S x| D for even-dimensional orthogonal groups with odd half-dimension


class OmegaOddHalfSystem:
    """V = < S, d(e) x, d(f) y > inside < S, d(e), d(f) > x <x, y>.

    S is S(T, R, J) for the central-product action over (half_dim - 1)/2
    blocks; <x, y> is dihedral of order 2^(t+1) with o(xy) = 2^t.
    """

    def __init__(self, params: TwistParams, half_dim: int, t: int, cap: int = DEFAULT_CAP):
        if half_dim < 3 or half_dim % 2 == 0:
            raise BadParameter("half dimension must be odd and at least 3")
        if t < 2:
            raise BadParameter("t must be at least 2")
        self.params = params
        self.half_dim = half_dim
        self.t = t
        self.cap = cap
        self.inner = TwistedSystem(params, (half_dim - 1) // 2, cap)
        self.Dxy = dihedral(t + 1, names=("c", "x"))
        self.law = ProductLaw([self.inner.law, self.Dxy.law])

    def _xy(self):
        c, x = self.Dxy.gens
        y = self.Dxy.mul(c, x)
        return x, y

    def _d(self, r):
        inner = self.inner
        return inner.law.diag([r] + [inner.one] * (inner.n - 1))

    @cached_property
    def V(self) -> Group:
        e, f = self.params.r_gens
        x, y = self._xy()
        one_d = self.Dxy.identity
        gens = [(s, one_d) for s in self.inner.S.gens]
        gens += [(self._d(e), x), (self._d(f), y)]
        return closure(self.law, gens, cap=self.cap, name=f"V(n={self.half_dim})")

    @cached_property
    def D(self) -> Group:
        e, f = self.params.r_gens
        x, y = self._xy()
        return closure(self.law, [(self._d(e), x), (self._d(f), y)], cap=self.cap, name="D")

    def embed_S(self, s):
        return (s, self.Dxy.identity)


def build_omega_n_odd_half(params: TwistParams, half_dim: int, t: int,
                           cap: int = DEFAULT_CAP) -> Group:
    return OmegaOddHalfSystem(params, half_dim, t, cap).V
