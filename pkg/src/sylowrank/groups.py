"""Finite group engine.

A :class:`Law` fixes how elements look and multiply (cyclic, metacyclic,
direct and semidirect products, monomial block matrices, ...).  A
:class:`Group` is a fully enumerated set of elements of one law, produced
by breadth-first closure over a list of generators.

Elements are canonical nested tuples of ints, so Python equality and hashing
coincide with group equality.
"""

from __future__ import annotations

import re
from collections import deque
from typing import Dict, Iterable, List, Optional, Sequence

from .errors import CapExceeded, ContextMismatch, InvalidAction

DEFAULT_CAP = 1 << 16

_TOKEN = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(-?\d+))?$")


def eval_word(word: str, named: Dict[str, object], mul, inv, identity):
    """Evaluate a word such as ``"v^-1*w*e^2"`` from named generators."""
    word = word.strip()
    result = identity
    if word in ("", "1"):
        return result
    for token in word.split("*"):
        token = token.strip()
        m = _TOKEN.match(token)
        if not m or m.group(1) not in named:
            raise ValueError(f"bad token {token!r} in word {word!r}")
        g = named[m.group(1)]
        k = int(m.group(2)) if m.group(2) is not None else 1
        if k < 0:
            g, k = inv(g), -k
        for _ in range(k):
            result = mul(result, g)
    return result


def _power_word(name: str, k: int) -> str:
    return name if k == 1 else f"{name}^{k}"


# ---------------------------------------------------------------------------
# laws


class Law:
    """Multiplication rule and text form for one family of elements."""

    kind = "abstract"
    identity: object

    def mul(self, a, b):
        raise NotImplementedError

    def inv(self, a):
        raise NotImplementedError

    def format(self, a):
        """JSON-compatible normal form of ``a``."""
        raise NotImplementedError

    def parse(self, obj):
        raise NotImplementedError

    def descriptor(self) -> dict:
        raise NotImplementedError

    def encode(self, a) -> bytes:
        return repr(a).encode()

    def __eq__(self, other):
        return type(self) is type(other) and self.descriptor() == other.descriptor()

    def __hash__(self):
        return hash(repr(self.descriptor()))


class CyclicLaw(Law):
    """Z_m written multiplicatively as powers of one named generator."""

    kind = "cyclic"

    def __init__(self, m: int, name: str = "c"):
        if m < 1:
            raise ValueError("cyclic order must be positive")
        self.m = m
        self.name = name
        self.identity = 0

    def mul(self, a, b):
        return (a + b) % self.m

    def inv(self, a):
        return (-a) % self.m

    def generator(self):
        return 1 % self.m

    def format(self, a):
        return "1" if a == 0 else _power_word(self.name, a)

    def parse(self, obj):
        return eval_word(obj, {self.name: self.generator()}, self.mul, self.inv, 0)

    def descriptor(self):
        return {"law": "cyclic", "m": self.m, "name": self.name}


class ElementaryAbelianLaw(Law):
    """(Z_2)^k as bitmasks; generator ``i`` is bit ``i``."""

    kind = "elemab"

    def __init__(self, k: int, names: Optional[Sequence[str]] = None):
        self.k = k
        self.names = tuple(names) if names else tuple(f"x{i + 1}" for i in range(k))
        self.identity = 0

    def mul(self, a, b):
        return a ^ b

    def inv(self, a):
        return a

    def format(self, a):
        parts = [self.names[i] for i in range(self.k) if a >> i & 1]
        return "*".join(parts) if parts else "1"

    def parse(self, obj):
        named = {n: 1 << i for i, n in enumerate(self.names)}
        return eval_word(obj, named, self.mul, self.inv, 0)

    def descriptor(self):
        return {"law": "elemab", "k": self.k, "names": list(self.names)}


class MetacyclicLaw(Law):
    """Groups <v, w | v^m = 1, w v w^-1 = v^r, w^2 = v^s>.

    Elements are pairs ``(a, b)`` standing for ``v^a w^b`` with ``b`` in {0, 1}.
    Dihedral: r = -1, s = 0.  Generalized quaternion: r = -1, s = m/2.
    Semidihedral: r = m/2 - 1, s = 0.
    """

    kind = "metacyclic"

    def __init__(self, m: int, r: int, s: int, names: Sequence[str] = ("v", "w")):
        r %= m
        s %= m
        if (r * r) % m != 1 % m or (r * s - s) % m != 0:
            raise ValueError(f"inconsistent metacyclic parameters m={m} r={r} s={s}")
        self.m, self.r, self.s = m, r, s
        self.names = tuple(names)
        self.identity = (0, 0)

    def mul(self, a, b):
        a0, a1 = a
        b0, b1 = b
        e = a0 + (self.r * b0 if a1 else b0)
        f = a1 + b1
        if f == 2:
            e += self.s
            f = 0
        return (e % self.m, f)

    def inv(self, a):
        a0, a1 = a
        if not a1:
            return ((-a0) % self.m, 0)
        return ((-self.r * (a0 + self.s)) % self.m, 1)

    def generators(self):
        return [(1 % self.m, 0), (0, 1)]

    def format(self, a):
        a0, a1 = a
        parts = []
        if a0:
            parts.append(_power_word(self.names[0], a0))
        if a1:
            parts.append(self.names[1])
        return "*".join(parts) if parts else "1"

    def parse(self, obj):
        named = dict(zip(self.names, self.generators()))
        return eval_word(obj, named, self.mul, self.inv, self.identity)

    def descriptor(self):
        return {"law": "metacyclic", "m": self.m, "r": self.r, "s": self.s,
                "names": list(self.names)}


class ProductLaw(Law):
    """Direct product; elements are tuples of component elements."""

    kind = "product"

    def __init__(self, factors: Sequence[Law]):
        self.factors = tuple(factors)
        self.identity = tuple(f.identity for f in self.factors)

    def mul(self, a, b):
        return tuple(f.mul(x, y) for f, x, y in zip(self.factors, a, b))

    def inv(self, a):
        return tuple(f.inv(x) for f, x in zip(self.factors, a))

    def embed(self, i: int, x):
        out = list(self.identity)
        out[i] = x
        return tuple(out)

    def format(self, a):
        return [f.format(x) for f, x in zip(self.factors, a)]

    def parse(self, obj):
        return tuple(f.parse(x) for f, x in zip(self.factors, obj))

    def descriptor(self):
        return {"law": "product", "factors": [f.descriptor() for f in self.factors]}


class SemidirectLaw(Law):
    """T x| R on pairs ``(t, r)``: (t1, r1)(t2, r2) = (t1 * r1(t2), r1 r2).

    ``auts`` maps every element r of R to a dict describing t -> r t r^-1.
    """

    kind = "semidirect"

    def __init__(self, T: "Group", R: "Group", auts: Dict[object, Dict[object, object]],
                 gen_images: List[List[object]]):
        self.T, self.R = T, R
        self.auts = auts
        self.gen_images = gen_images
        self.identity = (T.identity, R.identity)
        self._inv_r = {r: R.law.inv(r) for r in R.elements}

    def mul(self, a, b):
        t1, r1 = a
        t2, r2 = b
        return (self.T.law.mul(t1, self.auts[r1][t2]), self.R.law.mul(r1, r2))

    def inv(self, a):
        t, r = a
        ri = self._inv_r[r]
        return (self.auts[ri][self.T.law.inv(t)], ri)

    def embed_t(self, t):
        return (t, self.R.identity)

    def embed_r(self, r):
        return (self.T.identity, r)

    def format(self, a):
        return [self.T.law.format(a[0]), self.R.law.format(a[1])]

    def parse(self, obj):
        return (self.T.law.parse(obj[0]), self.R.law.parse(obj[1]))

    def descriptor(self):
        return {
            "law": "semidirect",
            "T": group_descriptor(self.T),
            "R": group_descriptor(self.R),
            "action": [[self.T.law.format(x) for x in imgs] for imgs in self.gen_images],
        }


class MonomialLaw(Law):
    """N x N monomial matrices with entries in an enumerated label group.

    An element ``(perm, labels)`` is the matrix P(perm) * diag(labels), where
    P(perm)[i][j] = 1 iff i = perm[j] and labels are indices into
    ``label_group.elements``.  Hence

        (p, a) * (s, b) = (p o s, c),   c[j] = a[s[j]] * b[j].
    """

    kind = "monomial"

    def __init__(self, blocks: int, label_group: "Group"):
        self.blocks = blocks
        self.labels = label_group
        L = label_group
        elems = L.elements
        idx = L.index
        self._size = len(elems)
        # label products are memoised on demand; large label groups are sparse in use
        self._memo: Dict[int, int] = {}
        self.linv = [idx[L.law.inv(x)] for x in elems]
        self.identity = (tuple(range(blocks)), (0,) * blocks)

    def label_mul(self, i: int, j: int) -> int:
        key = i * self._size + j
        k = self._memo.get(key)
        if k is None:
            L = self.labels
            k = L.index[L.law.mul(L.elements[i], L.elements[j])]
            self._memo[key] = k
        return k

    def mul(self, a, b):
        p, la = a
        s, lb = b
        memo = self._memo
        size = self._size
        out = []
        for k, y in zip(s, lb):
            x = la[k]
            if not x:
                out.append(y)
            elif not y:
                out.append(x)
            else:
                z = memo.get(x * size + y)
                out.append(z if z is not None else self.label_mul(x, y))
        return (tuple([p[k] for k in s]), tuple(out))

    def inv(self, a):
        p, la = a
        n = self.blocks
        pinv = [0] * n
        for j, pj in enumerate(p):
            pinv[pj] = j
        return (tuple(pinv), tuple(self.linv[la[pinv[j]]] for j in range(n)))

    def label_index(self, x) -> int:
        return self.labels.index[x]

    def make(self, perm: Sequence[int], labels: Sequence[object]):
        """Element from a permutation and actual label-group elements."""
        return (tuple(perm), tuple(self.labels.index[x] for x in labels))

    def diag(self, labels: Sequence[object]):
        return self.make(range(self.blocks), labels)

    def label(self, a, j):
        return self.labels.elements[a[1][j]]

    def format(self, a):
        fmt = self.labels.law.format
        return {"perm": format_cycles(a[0]),
                "labels": [fmt(self.labels.elements[i]) for i in a[1]]}

    def parse(self, obj):
        perm = parse_cycles(obj["perm"], self.blocks)
        labels = [self.labels.law.parse(x) for x in obj["labels"]]
        if len(labels) != self.blocks:
            raise ValueError("label count does not match block count")
        return self.make(perm, labels)

    def descriptor(self):
        return {"law": "monomial", "blocks": self.blocks,
                "labels": group_descriptor(self.labels)}


def format_cycles(perm: Sequence[int]) -> str:
    """1-based cycle notation; ``(a b)`` sends a to b."""
    seen = set()
    out = []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc = []
        j = start
        while j not in seen:
            seen.add(j)
            cyc.append(j + 1)
            j = perm[j]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) or "()"


def parse_cycles(text: str, n: int) -> List[int]:
    perm = list(range(n))
    for body in re.findall(r"\(([^)]*)\)", text):
        pts = [int(x) - 1 for x in body.split()]
        for a, b in zip(pts, pts[1:] + pts[:1]):
            perm[a] = b
    if sorted(perm) != list(range(n)):
        raise ValueError(f"not a permutation: {text!r}")
    return perm


# ---------------------------------------------------------------------------
# groups


class Group:
    """A finite group: a law, generators, and the full element list.

    Elements are stored in breadth-first order from the identity, so the
    listing is deterministic for a given generator list.
    """

    def __init__(self, law: Law, generators: Sequence, elements: Sequence,
                 names: Optional[Sequence[str]] = None, parent: "Optional[Group]" = None,
                 name: str = ""):
        self.law = law
        self.gens = list(generators)
        self.elements = list(elements)
        self.index = {x: i for i, x in enumerate(self.elements)}
        self.names = list(names) if names else []
        self.parent = parent
        self.name = name
        self._orders = None

    # basic protocol
    @property
    def identity(self):
        return self.law.identity

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, x):
        return x in self.index

    def __repr__(self):
        label = self.name or self.law.kind
        return f"<Group {label} order={self.order}>"

    def multiply(self, g, h):
        """Checked product; both factors must belong to this group."""
        if g not in self.index or h not in self.index:
            raise ContextMismatch("element not in this group")
        return self.law.mul(g, h)

    def mul(self, g, h):
        return self.law.mul(g, h)

    def inv(self, g):
        return self.law.inv(g)

    def conj(self, g, x):
        """g x g^-1."""
        law = self.law
        return law.mul(law.mul(g, x), law.inv(g))

    def commute(self, a, b) -> bool:
        return self.law.mul(a, b) == self.law.mul(b, a)

    def power(self, g, k: int):
        if k < 0:
            g, k = self.law.inv(g), -k
        result = self.identity
        base = g
        while k:
            if k & 1:
                result = self.law.mul(result, base)
            base = self.law.mul(base, base)
            k >>= 1
        return result

    def element_order(self, g) -> int:
        k, x = 1, g
        while x != self.identity:
            x = self.law.mul(x, g)
            k += 1
        return k

    def orders(self) -> List[int]:
        if self._orders is None:
            self._orders = [self.element_order(x) for x in self.elements]
        return self._orders

    def encode(self, g) -> bytes:
        return self.law.encode(g)

    # names and words
    @property
    def named(self) -> Dict[str, object]:
        return dict(zip(self.names, self.gens))

    def gen(self, name: str):
        return self.named[name]

    def word(self, text: str):
        """Evaluate a word in the named generators."""
        return eval_word(text, self.named, self.law.mul, self.law.inv, self.identity)

    def format(self, g):
        return self.law.format(g)

    # structure
    def is_abelian(self) -> bool:
        return all(self.commute(a, b) for i, a in enumerate(self.gens) for b in self.gens[i + 1:])

    def is_elementary_abelian(self) -> bool:
        return self.is_abelian() and all(self.law.mul(g, g) == self.identity for g in self.gens)

    def subgroup(self, generators: Iterable, cap: int = DEFAULT_CAP) -> "Group":
        gens = list(generators)
        for g in gens:
            if g not in self.index:
                raise ContextMismatch("generator not in parent group")
        H = closure(self.law, gens, cap=cap)
        H.parent = self
        return H

    def is_subgroup_of(self, other: "Group") -> bool:
        return all(x in other.index for x in self.gens)


def closure(law: Law, generators: Sequence, cap: int = DEFAULT_CAP,
            names: Optional[Sequence[str]] = None, name: str = "") -> Group:
    """Enumerate the group generated by ``generators`` breadth-first.

    Raises CapExceeded as soon as more than ``cap`` elements are found.
    """
    gens = list(generators)
    ident = law.identity
    elements = [ident]
    seen = {ident}
    mul = law.mul
    queue = deque([ident])
    uniq = list(dict.fromkeys(g for g in gens if g != ident))
    while queue:
        x = queue.popleft()
        for g in uniq:
            y = mul(x, g)
            if y not in seen:
                seen.add(y)
                elements.append(y)
                if len(elements) > cap:
                    raise CapExceeded(f"closure exceeded cap {cap}")
                queue.append(y)
    return Group(law, gens, elements, names=names, name=name)


def trivial_group() -> Group:
    return closure(CyclicLaw(1), [], name="1")


# ---------------------------------------------------------------------------
# centralizers, classes, normality


def centralizer(G: Group, x) -> Group:
    """C_G(x) as a subgroup of G."""
    members = [g for g in G.elements if G.commute(g, x)]
    return _subgroup_from_members(G, members)


def center(G: Group) -> Group:
    members = [z for z in G.elements if all(G.commute(z, g) for g in G.gens)]
    return _subgroup_from_members(G, members)


def _subgroup_from_members(G: Group, members: List) -> Group:
    # members is already a subgroup; a small generating set comes from
    # adding elements not yet generated.
    gens: List = []
    current = {G.identity}
    for m in members:
        if m not in current:
            gens.append(m)
            current = set(closure(G.law, gens, cap=len(members)).elements)
    H = Group(G.law, gens, sorted(members, key=G.index.__getitem__), parent=G)
    return H


def conjugacy_class(G: Group, x) -> List:
    """Orbit of x under conjugation by the generators of G."""
    ginv = [(g, G.inv(g)) for g in G.gens]
    mul = G.law.mul
    seen = {x: None}
    queue = deque([x])
    while queue:
        y = queue.popleft()
        for g, gi in ginv:
            z = mul(mul(g, y), gi)
            if z not in seen:
                seen[z] = None
                queue.append(z)
    return list(seen)


def conjugacy_classes(G: Group, elements: Optional[Iterable] = None) -> List[List]:
    """Partition ``elements`` (default all of G) into G-classes.

    Classes appear in order of their first member in ``G.elements``.
    """
    pool = G.elements if elements is None else list(elements)
    done = set()
    out = []
    for x in pool:
        if x in done:
            continue
        cls = conjugacy_class(G, x)
        done.update(cls)
        cls.sort(key=G.index.__getitem__)
        out.append(cls)
    return out


def is_normal(H: Group, G: Group) -> bool:
    """True iff H is a normal subgroup of G (checked on generators)."""
    if not all(h in G.index for h in H.gens):
        return False
    return all(G.conj(g, h) in H.index for g in G.gens for h in H.gens)


def normal_closure(G: Group, xs: Iterable) -> Group:
    seeds = set()
    for x in xs:
        seeds.update(conjugacy_class(G, x))
    seeds.discard(G.identity)
    gens = sorted(seeds, key=G.index.__getitem__)
    H = closure(G.law, gens, cap=G.order)
    H.parent = G
    return H


def derived_subgroup(G: Group) -> Group:
    law = G.law
    comms = []
    for i, a in enumerate(G.gens):
        for b in G.gens[i + 1:]:
            comms.append(law.mul(law.mul(a, b), law.mul(law.inv(a), law.inv(b))))
    return normal_closure(G, comms)


# ---------------------------------------------------------------------------
# products


def direct_product(A: Group, B: Group, cap: int = DEFAULT_CAP, name: str = "") -> Group:
    return direct_product_many([A, B], cap=cap, name=name)


def direct_product_many(groups: Sequence[Group], cap: int = DEFAULT_CAP, name: str = "") -> Group:
    total = 1
    for G in groups:
        total *= G.order
    if total > cap:
        raise CapExceeded(f"direct product of order {total} exceeds cap {cap}")
    law = ProductLaw([G.law for G in groups])
    gens = []
    names = []
    for i, G in enumerate(groups):
        for j, g in enumerate(G.gens):
            gens.append(law.embed(i, g))
            names.append(G.names[j] + f"_{i + 1}" if j < len(G.names) else f"g{i + 1}_{j + 1}")
    return closure(law, gens, cap=cap, names=names, name=name)


def project(G: Group, x, i: int):
    """Component ``i`` of an element of a product-law group."""
    return x[i]


def extend_homomorphism(A: Group, B: Group, images: Sequence) -> Dict:
    """Extend generator images to a homomorphism A -> B.

    Walks the Cayley graph of A; raises InvalidAction when two paths to the
    same element disagree, i.e. the images violate a relation of A.
    """
    if len(images) != len(A.gens):
        raise InvalidAction("one image per generator required")
    mul_a, mul_b = A.law.mul, B.law.mul
    phi = {A.identity: B.identity}
    queue = deque([A.identity])
    pairs = list(zip(A.gens, images))
    while queue:
        x = queue.popleft()
        fx = phi[x]
        for g, img in pairs:
            y = mul_a(x, g)
            fy = mul_b(fx, img)
            old = phi.get(y)
            if old is None:
                phi[y] = fy
                queue.append(y)
            elif old != fy:
                raise InvalidAction("generator images violate a relation")
    return phi


def automorphism(T: Group, images: Sequence) -> Dict:
    """Automorphism of T from generator images, verified bijective."""
    phi = extend_homomorphism(T, T, images)
    if len(set(phi.values())) != T.order:
        raise InvalidAction("generator images do not define a bijection")
    return phi


def semidirect_product(T: Group, R: Group, gen_images: Sequence[Sequence],
                       cap: int = DEFAULT_CAP, name: str = "") -> Group:
    """T x| R where R's i-th generator acts on T by t_j -> gen_images[i][j].

    The action is r t r^-1.  The assignment is extended over all of R and
    checked against R's relations.
    """
    if T.order * R.order > cap:
        raise CapExceeded(f"semidirect product of order {T.order * R.order} exceeds cap {cap}")
    gen_auts = [automorphism(T, imgs) for imgs in gen_images]
    if len(gen_auts) != len(R.gens):
        raise InvalidAction("one image list per generator of R required")
    ident = {t: t for t in T.elements}
    auts = {R.identity: ident}
    queue = deque([R.identity])
    mul = R.law.mul
    while queue:
        r = queue.popleft()
        ar = auts[r]
        for g, ag in zip(R.gens, gen_auts):
            y = mul(r, g)
            # conj by r*g is conj by g followed by conj by r
            ay = {t: ar[ag[t]] for t in T.elements}
            old = auts.get(y)
            if old is None:
                auts[y] = ay
                queue.append(y)
            elif old != ay:
                raise InvalidAction("action is inconsistent with the relations of R")
    law = SemidirectLaw(T, R, auts, [list(x) for x in gen_images])
    gens = [law.embed_t(t) for t in T.gens] + [law.embed_r(r) for r in R.gens]
    names = T.names + R.names if (T.names and R.names) else None
    return closure(law, gens, cap=cap, names=names, name=name)


# ---------------------------------------------------------------------------
# descriptors (used by serialization)


def group_descriptor(G: Group) -> dict:
    return {"law": G.law.descriptor(),
            "generators": [G.law.format(g) for g in G.gens],
            "names": list(G.names), "name": G.name}


def law_from_descriptor(d: dict) -> Law:
    kind = d["law"]
    if kind == "cyclic":
        return CyclicLaw(d["m"], d.get("name", "c"))
    if kind == "elemab":
        return ElementaryAbelianLaw(d["k"], d.get("names"))
    if kind == "metacyclic":
        return MetacyclicLaw(d["m"], d["r"], d["s"], d.get("names", ("v", "w")))
    if kind == "product":
        return ProductLaw([law_from_descriptor(f) for f in d["factors"]])
    if kind == "semidirect":
        T = group_from_descriptor(d["T"])
        R = group_from_descriptor(d["R"])
        images = [[T.law.parse(x) for x in imgs] for imgs in d["action"]]
        G = semidirect_product(T, R, images, cap=T.order * R.order)
        return G.law
    if kind == "monomial":
        return MonomialLaw(d["blocks"], group_from_descriptor(d["labels"]))
    if kind == "matrix":
        from .oracle import MatrixLaw
        return MatrixLaw(d["q"])
    raise ValueError(f"unknown law kind {kind!r}")


def group_from_descriptor(d: dict, cap: int = DEFAULT_CAP) -> Group:
    law = law_from_descriptor(d["law"])
    gens = [law.parse(x) for x in d["generators"]]
    return closure(law, gens, cap=cap, names=d.get("names") or None, name=d.get("name", ""))
