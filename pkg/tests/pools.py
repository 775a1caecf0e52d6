"""Named collections of constructed groups shared by several test modules."""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, List, Tuple

from sylowrank.catalog import FamilySpec, construct_sylow, supported_specs
from sylowrank.constructions import TwistParams, twisted_wreath, wreath_z2
from sylowrank.groups import direct_product
from sylowrank.presentations import (
    ACTIONS,
    central_product_dihedral,
    cyclic,
    dihedral,
    elementary_abelian,
    quaternion,
    semidihedral,
)

Builder = Tuple[str, Callable]

ACCEPTANCE_ROWS = [
    ("sl", 4, 3, 3, 2), ("sl", 4, 5, 3, 3), ("su", 4, 5, 3, 2), ("su", 4, 3, 3, 3),
    ("sp", 2, 3, 1, 1), ("sp", 4, 3, 2, 2), ("sp", 6, 3, 3, 3),
    ("omega_odd", 5, 3, 4, 4), ("omega_odd", 5, 7, 4, 2),
    ("omega_even_plus", 4, 3, 3, 3), ("omega_even_plus", 4, 7, 3, 2),
    ("omega_even_minus", 6, 3, 5, 5), ("omega_even_minus", 6, 7, 5, 3),
    ("gl", 2, 3, 2, 1), ("gl", 3, 3, 3, 2), ("gl", 3, 5, 3, 3), ("u", 2, 5, 2, 1),
    ("o_odd", 5, 3, 4, 4), ("o_odd", 5, 7, 4, 2),
]


def base_builders() -> List[Builder]:
    out: List[Builder] = []
    for m in (2, 4, 8, 16):
        out.append((f"Z{m}", lambda m=m: cyclic(m)))
    for k in (1, 2, 3, 4):
        out.append((f"E{1 << k}", lambda k=k: elementary_abelian(k)))
    for t in (2, 3, 4, 5):
        out.append((f"D{1 << t}", lambda t=t: dihedral(t)))
    for t in (2, 3, 4):
        out.append((f"Q{2 << t}", lambda t=t: quaternion(t)))
    for t in (2, 3):
        out.append((f"SD{4 << t}", lambda t=t: semidihedral(t)))
    out.append(("D8oD8", lambda: central_product_dihedral(2)))
    out.append(("D16oD16", lambda: central_product_dihedral(3)))
    return out


def semidirect_builders() -> List[Builder]:
    out: List[Builder] = []
    for name, make in ACTIONS.items():
        for t in (2, 3):
            out.append((f"TR[{name},{t}]", lambda make=make, t=t: make(t).semidirect()))
    return out


def wreath_builders() -> List[Builder]:
    out: List[Builder] = []
    for label, make in base_builders():
        if label in ("Z2", "Z4", "E4", "D8", "Q8", "SD16", "Z8", "D16", "Q16"):
            out.append((f"{label}wrZ2", lambda make=make: wreath_z2(make())))
    return out


def twisted_builders() -> List[Builder]:
    out: List[Builder] = []
    for name in ("sl_su_I", "omega_odd"):
        for variant in ("full", "r_only", "j_only", "plain"):
            out.append((f"w1[{name},2,{variant}]",
                        lambda name=name, variant=variant:
                        twisted_wreath(TwistParams.from_action(ACTIONS[name](2)), 1, variant)))
    return out


def catalog_builders(max_order: int) -> List[Builder]:
    out: List[Builder] = []
    for spec in supported_specs(max_order):
        out.append((spec.label(), lambda spec=spec: construct_sylow(spec)))
    return out


def product_builders() -> List[Builder]:
    return [
        ("Z4xZ2", lambda: direct_product(cyclic(4), cyclic(2))),
        ("Q8xD8", lambda: direct_product(quaternion(2), dihedral(3))),
    ]


@lru_cache(maxsize=None)
def build(label: str):
    for name, make in all_builders(1 << 10):
        if name == label:
            return make()
    raise KeyError(label)


@lru_cache(maxsize=None)
def all_builders(max_order: int) -> Tuple[Builder, ...]:
    return tuple(base_builders() + semidirect_builders() + wreath_builders()
                 + twisted_builders() + product_builders() + catalog_builders(max_order))


def catalog_group(family: str, n: int, q: int):
    return construct_sylow(FamilySpec(family, n, q))
