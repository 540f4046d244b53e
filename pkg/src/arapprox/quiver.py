"""Quivers, paths and bound quiver algebras with an explicit path basis."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

from .errors import CycleDetected, InadmissibleRelation, UnknownVertex
from .linalg import ZERO, ONE, SubspaceReducer, as_scalar


class Arrow(NamedTuple):
    name: str
    source: str
    target: str


class Path(NamedTuple):
    """A directed path, arrows listed source-to-target.

    Trivial paths have ``arrows == ()`` and ``source == target``.
    """
    source: str
    target: str
    arrows: tuple = ()

    @property
    def length(self) -> int:
        return len(self.arrows)

    def sort_key(self):
        return (len(self.arrows), self.arrows, self.source)

    def __str__(self) -> str:
        if not self.arrows:
            return f"e{self.source}"
        return "".join(self.arrows) if all(len(a) == 1 for a in self.arrows) \
            else "*".join(self.arrows)


def concat(p: Path, q: Path) -> Path:
    """``p`` followed by ``q``."""
    if p.target != q.source:
        raise ValueError(f"cannot concatenate {p} and {q}")
    return Path(p.source, q.target, p.arrows + q.arrows)


class Quiver:
    def __init__(self, vertices: Sequence, arrows: Iterable = ()):
        self.vertices = [str(v) for v in vertices]
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("vertex labels must be unique")
        self.arrows: list[Arrow] = []
        for a in arrows:
            a = Arrow(*map(str, a))
            if a.source not in self.vertices or a.target not in self.vertices:
                raise UnknownVertex(f"arrow {a.name} refers to an unknown vertex")
            self.arrows.append(a)
        names = [a.name for a in self.arrows]
        if len(set(names)) != len(names):
            raise ValueError("arrow names must be unique")
        self.arrow = {a.name: a for a in self.arrows}

    def out_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.source == v]

    def in_arrows(self, v: str) -> list[Arrow]:
        return [a for a in self.arrows if a.target == v]

    def check_vertex(self, v) -> str:
        v = str(v)
        if v not in self.vertices:
            raise UnknownVertex(f"unknown vertex {v!r}")
        return v

    def topological_order(self) -> list[str]:
        indeg = {v: 0 for v in self.vertices}
        for a in self.arrows:
            indeg[a.target] += 1
        ready = [v for v in self.vertices if indeg[v] == 0]
        order = []
        while ready:
            v = ready.pop(0)
            order.append(v)
            for a in self.out_arrows(v):
                indeg[a.target] -= 1
                if indeg[a.target] == 0:
                    ready.append(a.target)
        if len(order) != len(self.vertices):
            raise CycleDetected("quiver has a directed cycle")
        return order

    def is_acyclic(self) -> bool:
        try:
            self.topological_order()
        except CycleDetected:
            return False
        return True

    def __repr__(self) -> str:
        arrows = ", ".join(f"{a.name}:{a.source}->{a.target}" for a in self.arrows)
        return f"Quiver({self.vertices}, [{arrows}])"


def linear_quiver(n: int) -> Quiver:
    """A_n with arrows i+1 -> i, so that P(i) has composition series i/.../1."""
    return Quiver([str(i) for i in range(1, n + 1)],
                  [(f"a{i + 1}{i}", str(i + 1), str(i)) for i in range(1, n)])


def alternating_quiver(n: int) -> Quiver:
    """A_n with alternating orientation 1 -> 2 <- 3 -> 4 ..."""
    arrows = []
    for i in range(1, n):
        s, t = (i, i + 1) if i % 2 else (i + 1, i)
        arrows.append((f"a{s}{t}", str(s), str(t)))
    return Quiver([str(i) for i in range(1, n + 1)], arrows)


def enumerate_paths(q: Quiver) -> list[Path]:
    """All paths, trivial ones included, ordered by (length, lexicographic)."""
    q.topological_order()
    paths = [Path(v, v) for v in q.vertices]
    frontier = [Path(v, v) for v in q.vertices]
    while frontier:
        nxt = [Path(p.source, a.target, p.arrows + (a.name,))
               for p in frontier for a in q.out_arrows(p.target)]
        paths.extend(nxt)
        frontier = nxt
    return sorted(paths, key=Path.sort_key)


Relation = list  # list of (Fraction, Path)


@dataclass
class _Block:
    paths: list            # all paths source -> target, in descending order
    index: dict
    reducer: SubspaceReducer
    basis: list            # basis paths (the non-pivot paths), ascending


@dataclass(eq=False)
class BoundQuiverAlgebra:
    """kQ / I with I generated by admissible relations.

    ``path_basis`` lists paths whose classes form a basis of the quotient;
    :meth:`reduce` writes any path (or combination) in that basis.
    """
    quiver: Quiver
    relations: list
    path_basis: list = field(default_factory=list)
    _blocks: dict = field(default_factory=dict, repr=False)

    @property
    def dim(self) -> int:
        return len(self.path_basis)

    @property
    def vertices(self) -> list[str]:
        return self.quiver.vertices

    def basis_paths(self, source, target) -> list[Path]:
        b = self._blocks.get((str(source), str(target)))
        return list(b.basis) if b else []

    def reduce(self, combo) -> dict:
        """Normal form of a path or a list of (coeff, path) pairs as {basis path: coeff}."""
        if isinstance(combo, Path):
            combo = [(ONE, combo)]
        out: dict = {}
        by_block: dict = {}
        for c, p in combo:
            by_block.setdefault((p.source, p.target), []).append((as_scalar(c), p))
        for key, terms in by_block.items():
            blk = self._blocks.get(key)
            if blk is None:
                continue
            v = [ZERO] * len(blk.paths)
            for c, p in terms:
                v[blk.index[p]] += c
            w = blk.reducer.reduce(v)
            for p in blk.basis:
                x = w[blk.index[p]]
                if x:
                    out[p] = out.get(p, ZERO) + x
        return {p: c for p, c in out.items() if c}

    def coords(self, combo, source, target) -> tuple:
        """Coordinates of a combination in the basis of the (source, target) block."""
        nf = self.reduce(combo)
        return tuple(nf.get(p, ZERO) for p in self.basis_paths(source, target))

    def paths_from(self, v) -> list[Path]:
        return [p for p in self.path_basis if p.source == str(v)]

    def paths_to(self, v) -> list[Path]:
        return [p for p in self.path_basis if p.target == str(v)]

    def __repr__(self) -> str:
        return f"BoundQuiverAlgebra({self.quiver!r}, dim={self.dim})"


def _parse_path(q: Quiver, spec) -> Path:
    if isinstance(spec, Path):
        return spec
    names = [str(x) for x in spec]
    if not names:
        raise InadmissibleRelation("relations may not contain trivial paths")
    unknown = [a for a in names if a not in q.arrow]
    if unknown:
        raise InadmissibleRelation(f"unknown arrows in relation: {unknown}")
    for a, b in zip(names, names[1:]):
        if q.arrow[a].target != q.arrow[b].source:
            raise InadmissibleRelation(f"arrows {a}, {b} do not compose")
    return Path(q.arrow[names[0]].source, q.arrow[names[-1]].target, tuple(names))


def build_algebra(q: Quiver, relations: Iterable = ()) -> BoundQuiverAlgebra:
    """Bound quiver algebra with a path basis found by per-block elimination.

    ``relations`` is a list of relations, each a list of ``(coeff, path)``
    where path is a :class:`Path` or a list of arrow names in composition
    order.
    """
    all_paths = enumerate_paths(q)
    rels = []
    for rel in relations:
        terms = [(as_scalar(c), _parse_path(q, p)) for c, p in rel]
        terms = [(c, p) for c, p in terms if c]
        if not terms:
            raise InadmissibleRelation("empty relation")
        ends = {(p.source, p.target) for _, p in terms}
        if len(ends) != 1:
            raise InadmissibleRelation("relation paths must share source and target")
        if any(p.length < 2 for _, p in terms):
            raise InadmissibleRelation("relation paths must have length at least 2")
        rels.append(terms)

    into = {v: [p for p in all_paths if p.target == v] for v in q.vertices}
    outof = {v: [p for p in all_paths if p.source == v] for v in q.vertices}
    generators: dict = {}
    for terms in rels:
        s, t = terms[0][1].source, terms[0][1].target
        for u in into[s]:
            for w in outof[t]:
                comb = [(c, concat(concat(u, p), w)) for c, p in terms]
                generators.setdefault((u.source, w.target), []).append(comb)

    blocks = {}
    for s in q.vertices:
        for t in q.vertices:
            ps = [p for p in all_paths if p.source == s and p.target == t]
            if not ps:
                continue
            ps = sorted(ps, key=Path.sort_key, reverse=True)
            index = {p: i for i, p in enumerate(ps)}
            vecs = []
            for comb in generators.get((s, t), []):
                v = [ZERO] * len(ps)
                for c, p in comb:
                    v[index[p]] += c
                vecs.append(v)
            red = SubspaceReducer(vecs, len(ps))
            basis = sorted((ps[i] for i in red.free), key=Path.sort_key)
            blocks[(s, t)] = _Block(ps, index, red, basis)
    path_basis = sorted((p for b in blocks.values() for p in b.basis), key=Path.sort_key)
    return BoundQuiverAlgebra(q, rels, path_basis, blocks)


def path_algebra(q: Quiver) -> BoundQuiverAlgebra:
    return build_algebra(q, [])


def underlying_line(q: Quiver) -> list[str]:
    """Vertices of a type-A quiver in line order, starting at vertex ``"1"`` if it is an end.

    Raises ``ValueError`` when the underlying graph is not a path.
    """
    nbrs = {v: set() for v in q.vertices}
    for a in q.arrows:
        if a.source == a.target:
            raise ValueError("loops are not allowed in a type-A quiver")
        nbrs[a.source].add(a.target)
        nbrs[a.target].add(a.source)
    n = len(q.vertices)
    if len(q.arrows) != n - 1 or any(len(s) > 2 for s in nbrs.values()):
        raise ValueError("underlying graph is not of type A")
    if n == 1:
        return list(q.vertices)
    ends = [v for v in q.vertices if len(nbrs[v]) == 1]
    start = "1" if "1" in ends else ends[0]
    order, prev = [start], None
    while len(order) < n:
        nxt = [w for w in nbrs[order[-1]] if w != prev]
        if not nxt:
            raise ValueError("underlying graph is not connected")
        prev = order[-1]
        order.append(nxt[0])
    return order
