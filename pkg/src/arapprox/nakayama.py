"""Classical Nakayama functors between projective and injective modules.

A morphism P(i) -> P(j) is the same thing as an element u of e_j A e_i
(u spanned by basis paths j ~> i), acting by q |-> u.q.  N sends it to the
dual of right multiplication by u, which is a morphism I(i) -> I(j).
"""
from __future__ import annotations

from typing import Callable

from .errors import NotInjective, NotProjective
from .linalg import ExactMatrix, hstack
from .modules import (
    Representation, RepMorphism, hom_dim, identity, injective_envelope,
    injective_sum, projective_cover, projective_sum,
)
from .quiver import BoundQuiverAlgebra, Path, concat


class FunctorTable:
    """An additive functor given by an object map and a morphism action."""

    def __init__(self, name: str, object_map: Callable, morphism_action: Callable):
        self.name = name
        self._obj = object_map
        self._mor = morphism_action

    def obj(self, X):
        return self._obj(X)

    def mor(self, f):
        return self._mor(f)

    def __call__(self, x):
        if isinstance(x, RepMorphism):
            return self.mor(x)
        return self.obj(x)

    def __repr__(self) -> str:
        return f"<FunctorTable {self.name}>"


def _times(alg: BoundQuiverAlgebra, u_coeffs, u_src, u_tgt, q: Path, on_left: bool) -> tuple:
    """Coordinates of u.q (on_left) or q.u, with u given in the basis u_src ~> u_tgt."""
    combo = []
    for c, p in zip(u_coeffs, alg.basis_paths(u_src, u_tgt)):
        if c:
            combo.append((c, concat(p, q) if on_left else concat(q, p)))
    if on_left:
        return alg.coords(combo, u_src, q.target)
    return alg.coords(combo, q.source, u_tgt)


def _trivial_index(alg: BoundQuiverAlgebra, i: str) -> int:
    return alg.basis_paths(i, i).index(Path(i, i))


def _offsets(alg, vertices, dim_fn) -> list[dict]:
    out, acc = [], {v: 0 for v in alg.vertices}
    for i in vertices:
        out.append(dict(acc))
        for v in alg.vertices:
            acc[v] += dim_fn(i, v)
    return out


def projective_element(f: RepMorphism, k: int, l: int) -> tuple:
    """The element u in e_j A e_i of the block P(i_k) -> P(j_l) of a map of standard sums."""
    alg = f.source.algebra
    src, tgt = f.source.summands[1], f.target.summands[1]
    i, j = src[k], tgt[l]
    so = _offsets(alg, src, lambda a, v: len(alg.basis_paths(a, v)))[k][i]
    to = _offsets(alg, tgt, lambda a, v: len(alg.basis_paths(a, v)))[l][i]
    col = so + _trivial_index(alg, i)
    d = len(alg.basis_paths(j, i))
    return tuple(f.maps[i][to + r, col] for r in range(d))


def injective_element(g: RepMorphism, k: int, l: int) -> tuple:
    """The element u in e_j A e_i of the block I(i_k) -> I(j_l) of a map of standard sums."""
    alg = g.source.algebra
    src, tgt = g.source.summands[1], g.target.summands[1]
    i, j = src[k], tgt[l]
    so = _offsets(alg, src, lambda a, v: len(alg.basis_paths(v, a)))[k][j]
    to = _offsets(alg, tgt, lambda a, v: len(alg.basis_paths(v, a)))[l][j]
    row = to + _trivial_index(alg, j)
    d = len(alg.basis_paths(j, i))
    return tuple(g.maps[j][row, so + c] for c in range(d))


def projective_block(alg, u, i, j, v) -> ExactMatrix:
    """Vertex-v matrix of P(i) -> P(j), q |-> u.q."""
    cols = [_times(alg, u, j, i, q, True) for q in alg.basis_paths(i, v)]
    return ExactMatrix.from_columns(cols, len(alg.basis_paths(j, v)))


def injective_block(alg, u, i, j, v) -> ExactMatrix:
    """Vertex-v matrix of I(i) -> I(j): dual of w |-> w.u on paths v ~> j."""
    cols = [_times(alg, u, j, i, w, False) for w in alg.basis_paths(v, j)]
    return ExactMatrix.from_columns(cols, len(alg.basis_paths(v, i))).T


def _assemble(alg, src, tgt, elements, block_fn, src_dim, tgt_dim) -> dict:
    maps = {}
    for v in alg.vertices:
        rows = []
        for l, j in enumerate(tgt):
            blocks = [block_fn(alg, elements[l][k], i, j, v) for k, i in enumerate(src)]
            if blocks:
                rows.append(hstack(blocks, rows=tgt_dim(j, v)))
            else:
                rows.append(ExactMatrix.zeros(tgt_dim(j, v), 0))
        total_cols = sum(src_dim(i, v) for i in src)
        if rows:
            data = [list(r) for m in rows for r in m.tolist()]
            maps[v] = ExactMatrix(data, sum(m.rows for m in rows), total_cols)
        else:
            maps[v] = ExactMatrix.zeros(0, total_cols)
    return maps


def _standard_projective(M: Representation):
    """(vertices, iso P -> M) with P a standard projective sum, or raise."""
    if M.summands and M.summands[0] == "P":
        return M.summands[1], identity(M)
    P, p = projective_cover(M)
    if P.total_dim != M.total_dim:
        raise NotProjective("module has a non-projective summand")
    return P.summands[1], p


def _standard_injective(M: Representation):
    if M.summands and M.summands[0] == "I":
        return M.summands[1], identity(M)
    I, j = injective_envelope(M)
    if I.total_dim != M.total_dim:
        raise NotInjective("module has a non-injective summand")
    return I.summands[1], j


def nakayama_object(M: Representation) -> Representation:
    verts, _ = _standard_projective(M)
    return injective_sum(M.algebra, verts)


def conakayama_object(M: Representation) -> Representation:
    verts, _ = _standard_injective(M)
    return projective_sum(M.algebra, verts)


def nakayama_morphism(f: RepMorphism) -> RepMorphism:
    alg = f.source.algebra
    src, ps = _standard_projective(f.source)
    tgt, pt = _standard_projective(f.target)
    if ps.source is not f.source or pt.source is not f.target:
        f = pt.inverse() @ f @ ps
    elements = [[projective_element(f, k, l) for k in range(len(src))]
                for l in range(len(tgt))]
    size = lambda a, v: len(alg.basis_paths(v, a))  # noqa: E731
    maps = _assemble(alg, src, tgt, elements, injective_block, size, size)
    return RepMorphism(injective_sum(alg, src), injective_sum(alg, tgt), maps, check=False)


def conakayama_morphism(g: RepMorphism) -> RepMorphism:
    alg = g.source.algebra
    src, js = _standard_injective(g.source)
    tgt, jt = _standard_injective(g.target)
    if js.target is not g.source or jt.target is not g.target:
        g = jt @ g @ js.inverse()
    elements = [[injective_element(g, k, l) for k in range(len(src))]
                for l in range(len(tgt))]
    size = lambda a, v: len(alg.basis_paths(a, v))  # noqa: E731
    maps = _assemble(alg, src, tgt, elements, projective_block, size, size)
    return RepMorphism(projective_sum(alg, src), projective_sum(alg, tgt), maps, check=False)


def nakayama_on_projectives(alg: BoundQuiverAlgebra) -> FunctorTable:
    """N = - (x) D(A) restricted to projectives: P(i) |-> I(i)."""
    return FunctorTable("N", nakayama_object, nakayama_morphism)


def conakayama_on_injectives(alg: BoundQuiverAlgebra) -> FunctorTable:
    """N^- = Hom(D(A), -) restricted to injectives: I(i) |-> P(i)."""
    return FunctorTable("N-", conakayama_object, conakayama_morphism)


def nakayama_duality_dims(P: Representation, M: Representation) -> tuple[int, int]:
    """(dim Hom(P, M), dim Hom(M, N P)); the two agree for projective P."""
    NP = nakayama_object(P)
    return hom_dim(P, M), hom_dim(M, NP)
