"""Independent cross-check through explicit 2x2 matrices over a prime field."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Tuple

from .errors import BadParameter
from .groups import Group, Law, center, derived_subgroup
from .rank import rank_report

MAX_Q = 11


def _is_prime(q: int) -> bool:
    return q >= 2 and all(q % p for p in range(2, int(q ** 0.5) + 1))


class MatrixLaw(Law):
    """Invertible 2x2 matrices (a, b, c, d) = [[a, b], [c, d]] modulo q."""

    kind = "matrix"

    def __init__(self, q: int):
        self.q = q
        self.identity = (1, 0, 0, 1)

    def mul(self, x, y):
        a, b, c, d = x
        e, f, g, h = y
        q = self.q
        return ((a * e + b * g) % q, (a * f + b * h) % q,
                (c * e + d * g) % q, (c * f + d * h) % q)

    def det(self, x) -> int:
        a, b, c, d = x
        return (a * d - b * c) % self.q

    def inv(self, x):
        a, b, c, d = x
        q = self.q
        k = pow(self.det(x), -1, q)
        return ((d * k) % q, (-b * k) % q, (-c * k) % q, (a * k) % q)

    def format(self, x):
        a, b, c, d = x
        return [[a, b], [c, d]]

    def parse(self, obj):
        (a, b), (c, d) = obj
        x = (a % self.q, b % self.q, c % self.q, d % self.q)
        if self.det(x) == 0:
            raise ValueError("singular matrix")
        return x

    def descriptor(self):
        return {"law": "matrix", "q": self.q}


def gl2(q: int) -> Group:
    """All of GL(2, q), enumerated directly."""
    if not _is_prime(q) or q % 2 == 0 or q > MAX_Q:
        raise BadParameter(f"gl2 needs an odd prime q <= {MAX_Q}, got {q}")
    law = MatrixLaw(q)
    elements = [law.identity]
    elements += [x for x in product(range(q), repeat=4)
                 if law.det(x) and x != law.identity]
    # generators of GL(2, q): a primitive diagonal and a transvection-swap pair
    prim = next(g for g in range(2, q) if all(pow(g, (q - 1) // p, q) != 1
                                             for p in range(2, q) if _is_prime(p) and (q - 1) % p == 0))
    gens = [(prim, 0, 0, 1), (q - 1, 1, q - 1, 0)]
    return Group(law, gens, elements, name=f"GL(2,{q})")


def two_part(m: int) -> int:
    return m & -m


def normalizer_members(G: Group, H: Group) -> list:
    members = H.index
    return [g for g in G.elements
            if all(G.conj(g, h) in members for h in H.gens)]


def sylow2(G: Group) -> Group:
    """A Sylow 2-subgroup of G, grown one step at a time inside normalizers.

    If P is a 2-subgroup that is not Sylow, then N_G(P)/P has even order,
    so some g in N_G(P) outside P has g^2 in P and <P, g> is twice as big.
    """
    target = two_part(G.order)
    P = Group(G.law, [], [G.identity], parent=G, name="P")
    while P.order < target:
        step = None
        for g in normalizer_members(G, P):
            if g not in P.index and G.mul(g, g) in P.index:
                step = g
                break
        if step is None:  # pragma: no cover - impossible by Sylow theory
            raise RuntimeError("no 2-element found in the normalizer")
        P = G.subgroup(list(P.gens) + [step])
    assert P.order == target
    P.name = f"Syl2({G.name})" if G.name else "Syl2"
    return P


@dataclass(frozen=True)
class Fingerprint:
    order: int
    order_histogram: Tuple[Tuple[int, int], ...]
    center_order: int
    derived_order: int
    rank: int
    normal_rank: int


def invariant_fingerprint(G: Group) -> Fingerprint:
    hist = tuple(sorted(Counter(G.orders()).items()))
    rep = rank_report(G)
    return Fingerprint(G.order, hist, center(G).order, derived_subgroup(G).order,
                       rep.rank, rep.normal_rank)
