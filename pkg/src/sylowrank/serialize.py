"""Text form of constructed groups.

A group file looks like::

    sylowrank-group 1
    name w1(Q8)
    backend monomial
    blocks 2
    label-group Q8 8
    law {"blocks": 2, "labels": {...}, "law": "monomial"}
    order 128
    generators 3
    gen1 {"labels": ["v", "1"], "perm": "()"}
    ...

Every JSON fragment is written with sorted keys and no optional spaces, so
``dumps(loads(text)) == text`` holds byte for byte.  Monomial generators
carry their block permutation in 1-based cycle notation and their labels as
normal-form words of the label group.
"""

from __future__ import annotations

import json
from typing import List

from .errors import CapExceeded, MalformedInput
from .groups import DEFAULT_CAP, Group, MonomialLaw, closure, law_from_descriptor

MAGIC = "sylowrank-group 1"


def _js(obj) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _gen_names(G: Group) -> List[str]:
    names = list(G.names)
    return [names[i] if i < len(names) else f"g{i + 1}" for i in range(len(G.gens))]


def dumps(G: Group) -> str:
    law = G.law
    lines = [MAGIC, f"name {G.name or '-'}", f"backend {law.kind}"]
    if isinstance(law, MonomialLaw):
        lines.append(f"blocks {law.blocks}")
        lines.append(f"label-group {law.labels.name or '-'} {law.labels.order}")
    else:
        lines.append("blocks 0")
    lines.append(f"law {_js(law.descriptor())}")
    lines.append(f"order {G.order}")
    lines.append(f"generators {len(G.gens)}")
    for name, g in zip(_gen_names(G), G.gens):
        lines.append(f"{name} {_js(law.format(g))}")
    return "\n".join(lines) + "\n"


def _field(line: str, key: str) -> str:
    head, _, rest = line.partition(" ")
    if head != key:
        raise MalformedInput(f"expected {key!r} line, got {line[:40]!r}")
    return rest


def loads(text: str, cap: int = DEFAULT_CAP) -> Group:
    lines = text.splitlines()
    try:
        if not lines or lines[0] != MAGIC:
            raise MalformedInput("missing sylowrank-group header")
        i = 1
        name = _field(lines[i], "name")
        i += 1
        backend = _field(lines[i], "backend")
        i += 1
        blocks = int(_field(lines[i], "blocks"))
        i += 1
        if backend == "monomial":
            _field(lines[i], "label-group")
            i += 1
        law = law_from_descriptor(json.loads(_field(lines[i], "law")))
        i += 1
        if law.kind != backend or getattr(law, "blocks", 0) != blocks:
            raise MalformedInput("header disagrees with the law descriptor")
        order = int(_field(lines[i], "order"))
        count = int(_field(lines[i + 1], "generators"))
        i += 2
        gen_lines = lines[i:i + count]
        if len(gen_lines) != count or any(ln.strip() for ln in lines[i + count:]):
            raise MalformedInput("generator count does not match")
        names, gens = [], []
        for ln in gen_lines:
            gname, _, body = ln.partition(" ")
            names.append(gname)
            gens.append(law.parse(json.loads(body)))
    except MalformedInput:
        raise
    except CapExceeded:
        raise
    except (ValueError, KeyError, IndexError, TypeError) as exc:
        raise MalformedInput(f"cannot parse group file: {exc}") from exc
    G = closure(law, gens, cap=cap, names=names, name="" if name == "-" else name)
    if G.order != order:
        raise MalformedInput(f"file declares order {order}, generators give {G.order}")
    return G


def dump(G: Group, path: str) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dumps(G))


def load(path: str, cap: int = DEFAULT_CAP) -> Group:
    with open(path, encoding="utf-8") as fh:
        return loads(fh.read(), cap=cap)
