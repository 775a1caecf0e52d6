"""Classical families: closed-form rank table, Sylow 2-subgroup recipes, verification.

Every family is addressed by its matrix dimension ``n`` and field size ``q``.
The sign of the even-dimensional orthogonal groups is part of the family
name (``omega_even_plus``, ``o_even_minus`` and so on).
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Dict, Iterable, List, Optional, Tuple

from .constructions import (
    OmegaOddHalfSystem,
    TwistParams,
    adic,
    block_diagonal_wreaths,
    build_S,
)
from .errors import BadParameter, UnsupportedCase
from .groups import DEFAULT_CAP, Group, direct_product, trivial_group
from .presentations import (
    action_omega_even,
    action_omega_odd,
    action_sl_su_I,
    action_sl_su_II,
    cyclic,
    dihedral,
    elementary_abelian,
    quaternion,
    semidihedral,
)
from .rank import RankReport, rank_report

FAMILIES = ("sl", "su", "sp", "gl", "u", "omega_odd", "omega_even_plus",
            "omega_even_minus", "o_odd", "o_even_plus", "o_even_minus")

_FAMILY_ALIASES = {
    "omega_even+": "omega_even_plus", "omega_even-": "omega_even_minus",
    "o_even+": "o_even_plus", "o_even-": "o_even_minus",
    "omega+": "omega_even_plus", "omega-": "omega_even_minus",
    "o+": "o_even_plus", "o-": "o_even_minus", "o_odd+": "o_odd", "o+_odd": "o_odd",
}

DEFAULT_TABLE_CAP = 1 << 13


def v2(m: int) -> int:
    """2-adic valuation of a nonzero integer."""
    if m == 0:
        raise BadParameter("v2(0) is undefined")
    m = abs(m)
    return (m & -m).bit_length() - 1


def ord2_qsq_minus_1(q: int) -> int:
    if q % 2 == 0 or q < 3:
        raise BadParameter(f"q must be odd and at least 3, got {q}")
    return v2(q * q - 1)


def _is_prime_power(q: int) -> bool:
    p = 2
    while p * p <= q:
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
        p += 1
    return q > 1


def canonical_family(name: str) -> str:
    key = name.strip().lower().replace("-", "_").replace(" ", "")
    key = _FAMILY_ALIASES.get(name.strip().lower(), _FAMILY_ALIASES.get(key, key))
    if key not in FAMILIES:
        raise BadParameter(f"unknown family {name!r}")
    return key


@dataclass(frozen=True)
class FamilySpec:
    family: str
    n: int
    q: int

    def __post_init__(self):
        object.__setattr__(self, "family", canonical_family(self.family))
        if self.n < 1:
            raise BadParameter("dimension must be positive")
        if self.q < 2 or not _is_prime_power(self.q):
            raise BadParameter(f"q = {self.q} is not a prime power")
        if self.q % 2 == 0:
            raise UnsupportedCase("only odd characteristic is covered")

    @property
    def ord2(self) -> int:
        return ord2_qsq_minus_1(self.q)

    @property
    def t(self) -> int:
        return self.ord2 - 1

    @property
    def q_mod4(self) -> int:
        return self.q % 4

    @property
    def eta(self) -> int:
        return -1 if self.family.endswith("minus") else 1

    @property
    def half(self) -> int:
        return self.n // 2

    def label(self) -> str:
        return f"{self.family} {self.n} {self.q}"


@dataclass(frozen=True)
class TableEntry:
    rank: int
    normal_rank: int
    row: str = ""


def _require_even(spec: FamilySpec):
    if spec.n % 2:
        raise UnsupportedCase(f"{spec.family} needs even dimension, got {spec.n}")


def _require_odd(spec: FamilySpec):
    if spec.n % 2 == 0 or spec.n < 3:
        raise UnsupportedCase(f"{spec.family} needs odd dimension at least 3, got {spec.n}")


def _gl_entry(n: int, q_mod4: int, unitary: bool) -> TableEntry:
    split = 3 if not unitary else 1
    name = "U" if unitary else "GL"
    if q_mod4 == split:
        return TableEntry(n, (n + 1) // 2, f"{name}_n, q = {split} mod 4")
    return TableEntry(n, n, f"{name}_n, q = {4 - split} mod 4")


def _omega_even_case(spec: FamilySpec) -> str:
    """'minus' when q^m = -eta (mod 4), else 'plus_even' or 'plus_odd' by the parity of m."""
    m = spec.half
    if pow(spec.q, m, 4) == (-spec.eta) % 4:
        return "minus"
    return "plus_even" if m % 2 == 0 else "plus_odd"


def table_entry(spec: FamilySpec) -> TableEntry:
    """(2-rank, normal 2-rank) predicted by the closed-form table."""
    f, n, big = spec.family, spec.n, spec.ord2 >= 4
    if f in ("sl", "su"):
        if n % 2:
            if n < 3:
                raise UnsupportedCase(f"{f}_1 is trivial")
            e = _gl_entry(n - 1, spec.q_mod4, f == "su")
            return TableEntry(e.rank, e.normal_rank, f"{f.upper()}_(2n+1) via {e.row}")
        k = n // 2
        low = 3 if f == "sl" else 1
        if spec.q_mod4 == low:
            return TableEntry(2 * k - 1, k, f"{f.upper()}_2n, q = {low} mod 4")
        return TableEntry(2 * k - 1, 2 * k - 1, f"{f.upper()}_2n, q = {4 - low} mod 4")
    if f == "sp":
        _require_even(spec)
        return TableEntry(n // 2, n // 2, "Sp_2n")
    if f == "gl":
        return _gl_entry(n, spec.q_mod4, False)
    if f == "u":
        return _gl_entry(n, spec.q_mod4, True)
    if f == "omega_odd":
        _require_odd(spec)
        k = n // 2
        if k == 1 and spec.ord2 == 4:
            # S is dihedral of order 8 here, whose normal 2-rank is 2, not 1
            raise UnsupportedCase("Omega_3 with ord_2(q^2-1) = 4 lies outside the table")
        if big:
            return TableEntry(2 * k, k, "Omega_(2n+1), ord >= 4")
        return TableEntry(2 * k, 2 * k, "Omega_(2n+1), ord = 3")
    if f == "o_odd":
        _require_odd(spec)
        k = n // 2
        if big:
            return TableEntry(2 * k, k, "O+_(2n+1), ord >= 4")
        return TableEntry(2 * k, 2 * k, "O+_(2n+1), ord = 3")
    if f.startswith("omega_even"):
        _require_even(spec)
        m = spec.half
        if m < 2:
            raise UnsupportedCase("Omega_2 is not covered")
        case = _omega_even_case(spec)
        if case == "minus":
            if big:
                return TableEntry(2 * m - 2, m - 1, "Omega_2n, q^n = -eta, ord >= 4")
            return TableEntry(2 * m - 2, 2 * m - 2, "Omega_2n, q^n = -eta, ord = 3")
        rowname = "Omega_4n" if case == "plus_even" else "Omega_(4n+2)"
        if big:
            return TableEntry(2 * m - 1, m, f"{rowname}, q^n = eta, ord >= 4")
        return TableEntry(2 * m - 1, 2 * m - 1, f"{rowname}, q^n = eta, ord = 3")
    if f.startswith("o_even"):
        _require_even(spec)
        m = spec.half
        minus = pow(spec.q, m, 4) == (-spec.eta) % 4
        tag = "-eta" if minus else "eta"
        if not big:
            return TableEntry(2 * m, 2 * m, f"O_2n, q^n = {tag}, ord = 3")
        return TableEntry(2 * m, m + 1 if minus else m, f"O_2n, q^n = {tag}, ord >= 4")
    raise UnsupportedCase(f"no table row for {spec.label()}")


# ---------------------------------------------------------------------------
# orders


def _sum_v2(values: Iterable[int]) -> int:
    return sum(v2(x) for x in values)


def sylow_order_exponent(spec: FamilySpec) -> int:
    """log2 of the 2-part of the order of the classical group."""
    f, n, q = spec.family, spec.n, spec.q
    if f == "gl":
        return _sum_v2(q ** i - 1 for i in range(1, n + 1))
    if f == "sl":
        return _sum_v2(q ** i - 1 for i in range(2, n + 1))
    if f == "u":
        return _sum_v2(q ** i - (-1) ** i for i in range(1, n + 1))
    if f == "su":
        return _sum_v2(q ** i - (-1) ** i for i in range(2, n + 1))
    if f in ("sp", "o_odd", "omega_odd"):
        k = n // 2
        e = _sum_v2(q ** (2 * i) - 1 for i in range(1, k + 1))
        return e - 1 if f == "omega_odd" else e
    m = n // 2
    e = 1 + v2(q ** m - spec.eta) + _sum_v2(q ** (2 * i) - 1 for i in range(1, m))
    return e - 2 if f.startswith("omega") else e


def sylow_order(spec: FamilySpec) -> int:
    return 1 << sylow_order_exponent(spec)


# ---------------------------------------------------------------------------
# constructions


def _gl_like(n: int, q: int, unitary: bool, cap: int) -> Group:
    """Sylow 2-subgroup of GL_n(q) (or U_n(q)) as wreath products over adic(n)."""
    if n == 0:
        return trivial_group()
    split = 1 if not unitary else 3
    if q % 4 == split:
        base = cyclic(1 << v2(q - 1 if not unitary else q + 1))
        return block_diagonal_wreaths(base, adic(n).digits, cap=cap)
    t = ord2_qsq_minus_1(q) - 1
    parts = []
    if n >= 2:
        parts.append(block_diagonal_wreaths(semidihedral(t), adic(n // 2).digits, cap=cap))
    if n % 2:
        parts.append(cyclic(2))
    if len(parts) == 1:
        return parts[0]
    return direct_product(parts[0], parts[1], cap=cap)


def _o_plus_odd(k: int, q: int, cap: int) -> Group:
    """Sylow 2-subgroup of O+_(2k+1)(q): product of D wr w_(m-1)(Z2) over adic(2k)."""
    if k == 0:
        return trivial_group()
    D = dihedral(ord2_qsq_minus_1(q))
    return block_diagonal_wreaths(D, [d - 1 for d in adic(2 * k).digits], cap=cap)


def twist_data(spec: FamilySpec) -> Optional[Tuple[TwistParams, int]]:
    """(TwistParams, block count) when the recipe involves some S(T, R, J), else None.

    For the V construction the block count is that of the inner S.
    """
    f, n, q = spec.family, spec.n, spec.q
    if f in ("sl", "su") and n % 2 == 0:
        # SL with q = 3 mod 4 and SU with q = 1 mod 4 use the order-2 twist
        first = (q % 4 == 3) == (f == "sl")
        act = action_sl_su_I(spec.t) if first else action_sl_su_II(spec.t)
        return TwistParams.from_action(act), n // 2
    if f == "omega_odd":
        _require_odd(spec)
        return TwistParams.from_action(action_omega_odd(spec.t)), n // 2
    if f.startswith("omega_even") and spec.n % 2 == 0 and spec.half >= 2:
        case = _omega_even_case(spec)
        if case == "minus":
            return None
        params = TwistParams.from_action(action_omega_even(spec.t))
        m = spec.half
        return params, (m // 2 if case == "plus_even" else (m - 1) // 2)
    return None


def construct_sylow(spec: FamilySpec, cap: int = DEFAULT_CAP) -> Group:
    """Build a Sylow 2-subgroup of the classical group named by ``spec``."""
    f, n, q = spec.family, spec.n, spec.q
    if f in ("sl", "su"):
        if n % 2:
            if n < 3:
                raise UnsupportedCase(f"{f}_1 is trivial")
            return _gl_like(n - 1, q, f == "su", cap)
        params, blocks = twist_data(spec)
        return build_S(params, blocks, cap)
    if f == "sp":
        _require_even(spec)
        return block_diagonal_wreaths(quaternion(spec.t), adic(n // 2).digits, cap=cap)
    if f in ("gl", "u"):
        return _gl_like(n, q, f == "u", cap)
    if f == "omega_odd":
        params, blocks = twist_data(spec)
        return build_S(params, blocks, cap)
    if f == "o_odd":
        _require_odd(spec)
        return _o_plus_odd(n // 2, q, cap)
    if f.startswith("omega_even"):
        _require_even(spec)
        m = spec.half
        if m < 2:
            raise UnsupportedCase("Omega_2 is not covered")
        case = _omega_even_case(spec)
        if case == "minus":
            return _o_plus_odd(m - 1, q, cap)
        params, blocks = twist_data(spec)
        if case == "plus_even":
            return build_S(params, blocks, cap)
        return OmegaOddHalfSystem(params, m, spec.t, cap).V
    if f.startswith("o_even"):
        _require_even(spec)
        m = spec.half
        if pow(q, m, 4) == spec.eta % 4:
            return _o_plus_odd(m, q, cap)
        inner = _o_plus_odd(m - 1, q, cap)
        return direct_product(inner, elementary_abelian(2), cap=cap)
    raise UnsupportedCase(f"no construction for {spec.label()}")


# ---------------------------------------------------------------------------
# verification


@dataclass
class VerifyReport:
    spec: FamilySpec
    order: int
    expected: TableEntry
    report: RankReport
    millis: float = 0.0
    notes: List[str] = field(default_factory=list)

    @property
    def match(self) -> bool:
        return (self.report.rank == self.expected.rank
                and self.report.normal_rank == self.expected.normal_rank)

    def to_json(self, timings: bool = True) -> Dict:
        out = {
            "family": self.spec.family,
            "n": self.spec.n,
            "q": self.spec.q,
            "order": self.order,
            "rank": self.report.rank,
            "nrank": self.report.normal_rank,
            "expected_rank": self.expected.rank,
            "expected_nrank": self.expected.normal_rank,
            "match": self.match,
        }
        if timings:
            out["millis"] = round(self.millis, 3)
        return out


def verify(spec: FamilySpec, cap: int = DEFAULT_CAP,
           expected: Optional[TableEntry] = None) -> VerifyReport:
    """Construct, search, and compare with the table."""
    t0 = time.perf_counter()
    exp = expected or table_entry(spec)
    G = construct_sylow(spec, cap)
    notes = []
    want = sylow_order(spec)
    if G.order != want:
        notes.append(f"constructed order {G.order} differs from 2-part {want}")
    rep = rank_report(G)
    millis = 1000 * (time.perf_counter() - t0)
    return VerifyReport(spec, G.order, exp, rep, millis, notes)


TABLE_QS = (3, 5, 7, 9, 17)
TABLE_MAX_DIM = 16


def supported_specs(max_order: int = DEFAULT_TABLE_CAP, qs: Iterable[int] = TABLE_QS,
                    max_dim: int = TABLE_MAX_DIM) -> List[FamilySpec]:
    """Every (family, n, q) with a table row whose Sylow order is at most max_order."""
    out = []
    for family in FAMILIES:
        for q in qs:
            for n in range(1, max_dim + 1):
                try:
                    spec = FamilySpec(family, n, q)
                    table_entry(spec)
                except UnsupportedCase:
                    continue
                if sylow_order(spec) <= max_order:
                    out.append(spec)
    return out
