"""JSON reading and writing for algebras, representations and mesh specs."""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path as FsPath

from .linalg import ExactMatrix, as_scalar
from .mesh import MeshCategory
from .modules import Representation
from .quiver import BoundQuiverAlgebra, Quiver, build_algebra


def scalar_str(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def matrix_to_json(m: ExactMatrix) -> list:
    return [[scalar_str(x) for x in row] for row in m.tolist()]


def load_json(source) -> object:
    """A JSON document from a path, a JSON string, or an already-parsed object."""
    if isinstance(source, (dict, list)):
        return source
    text = str(source)
    if not text.lstrip().startswith(("{", "[")):
        text = FsPath(text).read_text()
    return json.loads(text)


def algebra_from_json(doc) -> BoundQuiverAlgebra:
    doc = load_json(doc)
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ValueError("algebra document needs a 'vertices' list")
    arrows = [(a["name"], a["from"], a["to"]) for a in doc.get("arrows", [])]
    q = Quiver(doc["vertices"], arrows)
    rels = []
    for rel in doc.get("relations", []):
        rels.append([(as_scalar(t.get("coeff", 1)), list(t["path"])) for t in rel])
    return build_algebra(q, rels)


def algebra_to_json(alg: BoundQuiverAlgebra) -> dict:
    return {
        "vertices": list(alg.vertices),
        "arrows": [{"name": a.name, "from": a.source, "to": a.target} for a in alg.quiver.arrows],
        "relations": [[{"coeff": scalar_str(c), "path": list(p.arrows)} for c, p in rel]
                      for rel in alg.relations],
    }


def representation_from_json(alg: BoundQuiverAlgebra, doc) -> Representation:
    doc = load_json(doc)
    dims = {str(k): int(v) for k, v in doc.get("dims", {}).items()}
    unknown = set(dims) - set(alg.vertices)
    if unknown:
        raise ValueError(f"unknown vertices {sorted(unknown)}")
    maps = {}
    for name, rows in doc.get("maps", {}).items():
        a = alg.quiver.arrow.get(name)
        if a is None:
            raise ValueError(f"unknown arrow {name!r}")
        maps[name] = ExactMatrix([[as_scalar(x) for x in r] for r in rows],
                                 dims.get(a.target, 0), dims.get(a.source, 0))
    return Representation(alg, dims, maps)


def representation_to_json(M: Representation) -> dict:
    return {"dims": {v: M.dims[v] for v in M.vertices},
            "maps": {a: matrix_to_json(m) for a, m in M.maps.items()}}


def mesh_from_spec(doc, validate: bool = True) -> MeshCategory:
    doc = load_json(doc)
    if doc.get("type", "A") != "A":
        raise ValueError("only type A mesh categories are supported")
    window = doc.get("window", [-6, 6])
    return MeshCategory(int(doc["n"]), (int(window[0]), int(window[1])), validate)


def mesh_spec(mc: MeshCategory) -> dict:
    return {"type": "A", "n": mc.n, "window": list(mc.window)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_default)


def _default(x):
    if isinstance(x, Fraction):
        return scalar_str(x)
    if isinstance(x, tuple):
        return list(x)
    raise TypeError(f"cannot serialize {type(x).__name__}")
