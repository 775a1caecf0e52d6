"""Base 2-groups and the R-actions used for the classical-group Sylow subgroups.

Sizes are parametrised by an exponent ``t``:

=========================  ======================  ==========
kind                       generators              order
=========================  ======================  ==========
cyclic                     c                       2^t
elem_abelian               x1 .. xt                2^t
dihedral                   v, w  (o(v) = 2^(t-1))  2^t
quaternion                 v, w  (o(v) = 2^t)      2^(t+1)
semidihedral               v, w  (o(v) = 2^(t+1))  2^(t+2)
central_product_dihedral   d, g, h, k              2^(2t+1)
=========================  ======================  ==========

``dihedral(2)`` is the Klein four group.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .errors import BadParameter
from .groups import (
    CyclicLaw,
    ElementaryAbelianLaw,
    Group,
    MetacyclicLaw,
    MonomialLaw,
    closure,
    semidirect_product,
)

KINDS = ("cyclic", "elem_abelian", "dihedral", "quaternion", "semidihedral",
         "central_product_dihedral")

_MIN_T = {"cyclic": 0, "elem_abelian": 0, "dihedral": 2, "quaternion": 2,
          "semidihedral": 2, "central_product_dihedral": 2}

_ALIASES = {
    "z": "cyclic", "c": "cyclic", "cyclic": "cyclic",
    "e": "elem_abelian", "elem_abelian": "elem_abelian", "elemab": "elem_abelian",
    "d": "dihedral", "dihedral": "dihedral",
    "q": "quaternion", "quaternion": "quaternion",
    "sd": "semidihedral", "semidihedral": "semidihedral",
    "cpd": "central_product_dihedral", "central_product_dihedral": "central_product_dihedral",
}


@dataclass(frozen=True)
class BaseGroupSpec:
    kind: str
    t: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise BadParameter(f"unknown base group kind {self.kind!r}")
        if self.t < _MIN_T[self.kind]:
            raise BadParameter(f"{self.kind} needs t >= {_MIN_T[self.kind]}, got {self.t}")

    @classmethod
    def parse(cls, text: str) -> "BaseGroupSpec":
        """Parse ``kind,t``; the kind may carry an order suffix (``q8,2``)."""
        kind, _, t = text.partition(",")
        kind = kind.strip().lower().rstrip("0123456789")
        if kind not in _ALIASES or not t.strip():
            raise BadParameter(f"cannot parse base group {text!r}")
        return cls(_ALIASES[kind], int(t))


def cyclic(m: int, name: str = "c") -> Group:
    law = CyclicLaw(m, name)
    return closure(law, [law.generator()] if m > 1 else [], names=[name] if m > 1 else None,
                   name=f"Z{m}")


def elementary_abelian(k: int, names=None) -> Group:
    law = ElementaryAbelianLaw(k, names)
    return closure(law, [1 << i for i in range(k)], names=list(law.names), name=f"E{1 << k}")


def metacyclic(m: int, r: int, s: int, names=("v", "w"), name: str = "") -> Group:
    law = MetacyclicLaw(m, r, s, names)
    return closure(law, law.generators(), names=list(names), name=name)


def dihedral(t: int, names=("v", "w")) -> Group:
    """Dihedral group of order 2^t: o(v) = 2^(t-1), o(w) = 2, w v w = v^-1."""
    m = 1 << (t - 1)
    return metacyclic(m, -1, 0, names, name=f"D{1 << t}")


def quaternion(t: int) -> Group:
    """Generalized quaternion group of order 2^(t+1): o(v) = 2^t, w^2 = v^(2^(t-1))."""
    m = 1 << t
    return metacyclic(m, -1, m // 2, name=f"Q{2 * m}")


def semidihedral(t: int) -> Group:
    """Semidihedral group of order 2^(t+2): o(v) = 2^(t+1), w v w = v^(2^t - 1)."""
    m = 1 << (t + 1)
    return metacyclic(m, m // 2 - 1, 0, name=f"SD{2 * m}")


def central_product_dihedral(t: int) -> Group:
    """Central product of two dihedral groups of order 2^(t+1).

    Realised as 2x2 monomial matrices over D = <u, w> (o(u) = 2^t):
    d = diag(u, u^-1), g = diag(u, u), h = antidiag(1, 1), k = antidiag(w, w).
    """
    D = dihedral(t + 1, names=("u", "w"))
    law = MonomialLaw(2, D)
    u, w = D.gens
    one = D.identity
    ui = D.inv(u)
    gens = [law.diag([u, ui]), law.diag([u, u]), law.make([1, 0], [one, one]),
            law.make([1, 0], [w, w])]
    m = 1 << t
    return closure(law, gens, names=["d", "g", "h", "k"], name=f"D{2 * m}oD{2 * m}")


def build_base(spec: BaseGroupSpec) -> Group:
    t = spec.t
    if spec.kind == "cyclic":
        return cyclic(1 << t)
    if spec.kind == "elem_abelian":
        return elementary_abelian(t)
    if spec.kind == "dihedral":
        return dihedral(t)
    if spec.kind == "quaternion":
        return quaternion(t)
    if spec.kind == "semidihedral":
        return semidihedral(t)
    return central_product_dihedral(t)


# ---------------------------------------------------------------------------
# actions


@dataclass
class ActionSpec:
    """Action of R on T by generator images.

    ``images[r][x]`` is a word in T's generators giving r x r^-1.
    """

    name: str
    T: Group
    R: Group
    images: Dict[str, Dict[str, str]] = field(default_factory=dict)
    t: int = 0

    def image_lists(self) -> List[List[object]]:
        out = []
        for rname in self.R.names:
            img = self.images[rname]
            out.append([self.T.word(img[x]) for x in self.T.names])
        return out

    def semidirect(self) -> Group:
        return semidirect_product(self.T, self.R, self.image_lists(),
                                  name=f"{self.T.name}:{self.R.name}")


def action_sl_su_I(t: int) -> ActionSpec:
    """Quaternion T, R = <e> of order 2: e v e^-1 = v^-1, e w e^-1 = v w."""
    _check_t(t)
    return ActionSpec("sl_su_I", quaternion(t), cyclic(2, "e"),
                      {"e": {"v": "v^-1", "w": "v*w"}}, t)


def action_sl_su_II(t: int) -> ActionSpec:
    """Quaternion T, R = <e> of order 2^t: e v e^-1 = v, e w e^-1 = v w."""
    _check_t(t)
    return ActionSpec("sl_su_II", quaternion(t), cyclic(1 << t, "e"),
                      {"e": {"v": "v", "w": "v*w"}}, t)


def action_omega_odd(t: int) -> ActionSpec:
    """Dihedral T of order 2^t, R = <e> of order 2: e v e = v^-1, e w e = v w."""
    _check_t(t)
    return ActionSpec("omega_odd", dihedral(t), cyclic(2, "e"),
                      {"e": {"v": "v^-1", "w": "v*w"}}, t)


def action_omega_even(t: int) -> ActionSpec:
    """Central product T of two dihedral groups, R = <e, f> = Z2 x Z2."""
    _check_t(t)
    return ActionSpec(
        "omega_even", central_product_dihedral(t), elementary_abelian(2, ("e", "f")),
        {"e": {"d": "g^-1", "g": "d^-1", "h": "g*k", "k": "d*h"},
         "f": {"d": "g", "g": "d", "h": "k", "k": "h"}},
        t,
    )


ACTIONS = {
    "sl_su_I": action_sl_su_I,
    "sl_su_II": action_sl_su_II,
    "omega_odd": action_omega_odd,
    "omega_even": action_omega_even,
}


def _check_t(t: int):
    if t < 2:
        raise BadParameter(f"t must be at least 2, got {t}")


def split_tr(TR: Group, x) -> Tuple[object, object]:
    """(T-part, R-part) of an element of a semidirect product."""
    return x[0], x[1]
