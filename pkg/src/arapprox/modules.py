"""The module category mod A of a bound quiver algebra as a computable linear category.

Modules are quiver representations: a space ``k^dims[v]`` at each vertex and
a matrix ``maps[a]`` of shape ``dims[target] x dims[source]`` per arrow.
"""
from __future__ import annotations

import random
from fractions import Fraction
from typing import Optional, Sequence

import sympy

from .category import LinearCategory
from .errors import AlgebraMismatch, UndecidableDecomposition
from .linalg import (
    ONE, ZERO, Coordinates, ExactMatrix, SubspaceReducer, block_diag,
    column_space, hstack, kernel_basis, left_inverse, left_null, right_inverse,
    solve, solve_matrix, vstack,
)
from .quiver import BoundQuiverAlgebra, Path, concat


class Representation:
    """A finite dimensional representation satisfying the algebra's relations.

    ``summands`` records how a module was built when it is a standard direct
    sum of indecomposable projectives (``("P", vertices)``) or injectives
    (``("I", vertices)``); the Nakayama functors read it.
    """

    def __init__(self, algebra: BoundQuiverAlgebra, dims: dict, maps: Optional[dict] = None,
                 check: bool = True, summands: Optional[tuple] = None, name: str = ""):
        self.algebra = algebra
        q = algebra.quiver
        self.dims = {v: int(dims.get(v, 0)) for v in q.vertices}
        maps = dict(maps or {})
        self.maps: dict = {}
        for a in q.arrows:
            shape = (self.dims[a.target], self.dims[a.source])
            m = maps.pop(a.name, None)
            if m is None:
                m = ExactMatrix.zeros(*shape)
            elif not isinstance(m, ExactMatrix):
                m = ExactMatrix(m, *shape)
            if m.shape != shape:
                raise ValueError(f"arrow {a.name}: expected shape {shape}, got {m.shape}")
            self.maps[a.name] = m
        if maps:
            raise ValueError(f"unknown arrows {sorted(maps)}")
        self.summands = summands
        self.name = name
        self._cache: dict = {}
        if check:
            for rel in algebra.relations:
                s = rel[0][1].source
                t = rel[0][1].target
                acc = ExactMatrix.zeros(self.dims[t], self.dims[s])
                for c, p in rel:
                    acc = acc + self.path_matrix(p).scale(c)
                if not acc.is_zero():
                    raise ValueError("representation violates a relation of the algebra")

    @property
    def vertices(self) -> list[str]:
        return self.algebra.quiver.vertices

    def dim_vector(self) -> tuple:
        return tuple(self.dims[v] for v in self.vertices)

    @property
    def total_dim(self) -> int:
        return sum(self.dims.values())

    def is_zero(self) -> bool:
        return self.total_dim == 0

    def path_matrix(self, p: Path) -> ExactMatrix:
        m = ExactMatrix.identity(self.dims[p.source])
        for a in p.arrows:
            m = self.maps[a] @ m
        return m

    def __repr__(self) -> str:
        nm = f" {self.name}" if self.name else ""
        return f"<Representation{nm} dims={self.dim_vector()}>"


class RepMorphism:
    """Vertex-indexed tuple of matrices commuting with the arrow maps."""

    def __init__(self, source: Representation, target: Representation, maps: dict,
                 check: bool = True):
        if source.algebra is not target.algebra:
            raise AlgebraMismatch("source and target live over different algebras")
        self.source = source
        self.target = target
        self.maps = {}
        for v in source.vertices:
            shape = (target.dims[v], source.dims[v])
            m = maps.get(v)
            if m is None:
                m = ExactMatrix.zeros(*shape)
            elif not isinstance(m, ExactMatrix):
                m = ExactMatrix(m, *shape)
            if m.shape != shape:
                raise ValueError(f"vertex {v}: expected shape {shape}, got {m.shape}")
            self.maps[v] = m
        if check:
            for a in source.algebra.quiver.arrows:
                lhs = target.maps[a.name] @ self.maps[a.source]
                rhs = self.maps[a.target] @ source.maps[a.name]
                if lhs != rhs:
                    raise ValueError(f"square for arrow {a.name} does not commute")

    def __matmul__(self, other: "RepMorphism") -> "RepMorphism":
        """Composite self o other."""
        if other.target is not self.source and other.target.dims != self.source.dims:
            raise ValueError("morphisms are not composable")
        return RepMorphism(other.source, self.target,
                           {v: self.maps[v] @ other.maps[v] for v in self.maps}, check=False)

    def __add__(self, other: "RepMorphism") -> "RepMorphism":
        return RepMorphism(self.source, self.target,
                           {v: self.maps[v] + other.maps[v] for v in self.maps}, check=False)

    def __neg__(self) -> "RepMorphism":
        return self.scale(-1)

    def __sub__(self, other: "RepMorphism") -> "RepMorphism":
        return self + (-other)

    def scale(self, c) -> "RepMorphism":
        return RepMorphism(self.source, self.target,
                           {v: m.scale(c) for v, m in self.maps.items()}, check=False)

    def flat(self) -> tuple:
        return tuple(x for v in self.source.vertices for x in self.maps[v].flat())

    def is_zero(self) -> bool:
        return all(m.is_zero() for m in self.maps.values())

    def is_mono(self) -> bool:
        return all(m.rank() == m.cols for m in self.maps.values())

    def is_epi(self) -> bool:
        return all(m.rank() == m.rows for m in self.maps.values())

    def is_iso(self) -> bool:
        return all(m.rows == m.cols and m.rank() == m.rows for m in self.maps.values())

    def inverse(self) -> "RepMorphism":
        return RepMorphism(self.target, self.source,
                           {v: m.inverse() for v, m in self.maps.items()}, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RepMorphism):
            return NotImplemented
        return self.maps == other.maps

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        return f"<RepMorphism {self.source.dim_vector()} -> {self.target.dim_vector()}>"


def identity(M: Representation) -> RepMorphism:
    return RepMorphism(M, M, {v: ExactMatrix.identity(d) for v, d in M.dims.items()},
                       check=False)


def zero_morphism(M: Representation, N: Representation) -> RepMorphism:
    return RepMorphism(M, N, {}, check=False)


def zero_module(alg: BoundQuiverAlgebra) -> Representation:
    return Representation(alg, {}, check=False)


# ---------------------------------------------------------------------------
# Hom spaces

class HomBasis:
    """A basis of Hom(source, target) together with a coordinate map."""

    def __init__(self, source: Representation, target: Representation, basis: list):
        self.source = source
        self.target = target
        self.basis = basis
        self._coords = None

    def __len__(self) -> int:
        return len(self.basis)

    def __iter__(self):
        return iter(self.basis)

    def __getitem__(self, i):
        return self.basis[i]

    @property
    def dim(self) -> int:
        return len(self.basis)

    def coords(self, f: RepMorphism) -> tuple:
        if self._coords is None:
            n = sum(self.source.dims[v] * self.target.dims[v] for v in self.source.vertices)
            self._coords = Coordinates([b.flat() for b in self.basis], n)
        c = self._coords(f.flat())
        if c is None:
            raise ValueError("morphism is not in the span of the basis")
        return c

    def element(self, coeffs: Sequence) -> RepMorphism:
        out = zero_morphism(self.source, self.target)
        for c, b in zip(coeffs, self.basis):
            if c:
                out = out + b.scale(c)
        return out


def _hom_constraints(M: Representation, N: Representation):
    verts = M.vertices
    offset, pos = {}, 0
    for v in verts:
        offset[v] = pos
        pos += N.dims[v] * M.dims[v]
    rows = []
    for a in M.algebra.quiver.arrows:
        s, t = a.source, a.target
        Na, Ma = N.maps[a.name], M.maps[a.name]
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [ZERO] * pos
                # (N_a f_s)[r, c] = sum_k N_a[r, k] f_s[k, c]
                for k in range(N.dims[s]):
                    x = Na[r, k]
                    if x:
                        row[offset[s] + k * M.dims[s] + c] += x
                # -(f_t M_a)[r, c] = -sum_k f_t[r, k] M_a[k, c]
                for k in range(M.dims[t]):
                    x = Ma[k, c]
                    if x:
                        row[offset[t] + r * M.dims[t] + k] -= x
                rows.append(row)
    return ExactMatrix(rows, len(rows), pos), offset


def hom_basis(M: Representation, N: Representation) -> HomBasis:
    """Basis of Hom(M, N) from one kernel computation on the commuting-square system."""
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("modules live over different algebras")
    key = ("hom", id(N))
    cached = M._cache.get(key)
    if cached is not None and cached[0] is N:
        return cached[1]
    system, offset = _hom_constraints(M, N)
    basis = []
    for vec in kernel_basis(system):
        maps = {}
        for v in M.vertices:
            r, c = N.dims[v], M.dims[v]
            maps[v] = ExactMatrix.from_flat(r, c, vec[offset[v]:offset[v] + r * c])
        basis.append(RepMorphism(M, N, maps, check=False))
    hb = HomBasis(M, N, basis)
    M._cache[key] = (N, hb)
    return hb


def hom_dim(M: Representation, N: Representation) -> int:
    return len(hom_basis(M, N))


# ---------------------------------------------------------------------------
# Sub- and quotient modules, kernels, cokernels, images

def subrepresentation(M: Representation, bases: dict) -> tuple[Representation, RepMorphism]:
    """Submodule spanned at each vertex by the (independent) columns of ``bases[v]``."""
    bases = {v: bases.get(v, ExactMatrix.zeros(M.dims[v], 0)) for v in M.vertices}
    linv = {v: left_inverse(b) for v, b in bases.items()}
    maps = {}
    for a in M.algebra.quiver.arrows:
        img = M.maps[a.name] @ bases[a.source]
        x = linv[a.target] @ img
        if bases[a.target] @ x != img:
            raise ValueError("subspaces are not closed under the arrow maps")
        maps[a.name] = x
    U = Representation(M.algebra, {v: b.cols for v, b in bases.items()}, maps, check=False)
    return U, RepMorphism(U, M, bases, check=False)


def quotient_by(M: Representation, quotient_maps: dict) -> tuple[Representation, RepMorphism]:
    """Quotient given by full-row-rank matrices ``Q_v`` whose kernels form a submodule."""
    rinv = {v: right_inverse(q) for v, q in quotient_maps.items()}
    maps = {a.name: quotient_maps[a.target] @ M.maps[a.name] @ rinv[a.source]
            for a in M.algebra.quiver.arrows}
    C = Representation(M.algebra, {v: q.rows for v, q in quotient_maps.items()}, maps,
                       check=False)
    return C, RepMorphism(M, C, quotient_maps, check=False)


def kernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    bases = {}
    for v, m in f.maps.items():
        vecs = kernel_basis(m)
        bases[v] = ExactMatrix.from_columns(vecs, m.cols)
    return subrepresentation(f.source, bases)


def cokernel(f: RepMorphism) -> tuple[Representation, RepMorphism]:
    return quotient_by(f.target, {v: left_null(m) for v, m in f.maps.items()})


def image(f: RepMorphism) -> tuple[Representation, RepMorphism, RepMorphism]:
    """(Im f, M ->> Im f, Im f >-> N)."""
    bases = {v: column_space(m) for v, m in f.maps.items()}
    Im, mono = subrepresentation(f.target, bases)
    epi = RepMorphism(f.source, Im,
                      {v: left_inverse(bases[v]) @ f.maps[v] for v in f.maps}, check=False)
    return Im, epi, mono


def factor_through_cokernel(proj: RepMorphism, h: RepMorphism) -> RepMorphism:
    """The unique map hbar: coker -> X with hbar o proj = h (h must kill the kernel of proj)."""
    maps = {v: h.maps[v] @ right_inverse(proj.maps[v]) for v in proj.maps}
    return RepMorphism(proj.target, h.target, maps)


def factor_through_mono(mono: RepMorphism, h: RepMorphism) -> RepMorphism:
    """The unique map hbar with mono o hbar = h (image of h inside image of mono)."""
    maps = {}
    for v in mono.maps:
        x = solve_matrix(mono.maps[v], h.maps[v])
        if x is None:
            raise ValueError("morphism does not factor through the monomorphism")
        maps[v] = x
    return RepMorphism(h.source, mono.source, maps)


# ---------------------------------------------------------------------------
# Radical, top, socle

def radical(M: Representation) -> tuple[Representation, RepMorphism]:
    q = M.algebra.quiver
    bases = {}
    for v in M.vertices:
        ins = [M.maps[a.name] for a in q.in_arrows(v)]
        bases[v] = column_space(hstack(ins, rows=M.dims[v])) if ins \
            else ExactMatrix.zeros(M.dims[v], 0)
    return subrepresentation(M, bases)


def top(M: Representation) -> tuple[Representation, RepMorphism]:
    _, inc = radical(M)
    return cokernel(inc)


def socle(M: Representation) -> tuple[Representation, RepMorphism]:
    q = M.algebra.quiver
    bases = {}
    for v in M.vertices:
        outs = [M.maps[a.name] for a in q.out_arrows(v)]
        if outs:
            vecs = kernel_basis(vstack(outs, cols=M.dims[v]))
        else:
            vecs = kernel_basis(ExactMatrix.zeros(0, M.dims[v]))
        bases[v] = ExactMatrix.from_columns(vecs, M.dims[v])
    return subrepresentation(M, bases)


def radical_layers(M: Representation) -> list[dict]:
    layers = []
    cur = M
    while not cur.is_zero():
        R, _ = radical(cur)
        layers.append({v: cur.dims[v] - R.dims[v] for v in M.vertices})
        cur = R
    return layers


def label(M: Representation) -> str:
    """Stacked composition-style label from the radical series, e.g. ``"3/2/1"``."""
    if M.is_zero():
        return "0"
    parts = []
    for layer in radical_layers(M):
        names = [v for v in M.vertices for _ in range(layer[v])]
        parts.append(",".join(names))
    return "/".join(parts)


# ---------------------------------------------------------------------------
# Indecomposable projectives, injectives, simples and their standard sums

def _arrow_path(alg: BoundQuiverAlgebra, name: str) -> Path:
    a = alg.quiver.arrow[name]
    return Path(a.source, a.target, (name,))


def projective(alg: BoundQuiverAlgebra, i) -> Representation:
    """P(i): basis at v = basis paths i ~> v, arrows act by appending."""
    i = alg.quiver.check_vertex(i)
    dims = {v: len(alg.basis_paths(i, v)) for v in alg.vertices}
    maps = {}
    for a in alg.quiver.arrows:
        cols = [alg.coords(concat(p, _arrow_path(alg, a.name)), i, a.target)
                for p in alg.basis_paths(i, a.source)]
        maps[a.name] = ExactMatrix.from_columns(cols, dims[a.target])
    return Representation(alg, dims, maps, check=False, summands=("P", (i,)), name=f"P({i})")


def injective(alg: BoundQuiverAlgebra, i) -> Representation:
    """I(i): dual of the paths v ~> i, arrows act by the transpose of prepending."""
    i = alg.quiver.check_vertex(i)
    dims = {v: len(alg.basis_paths(v, i)) for v in alg.vertices}
    maps = {}
    for a in alg.quiver.arrows:
        # w in basis(t, i) |-> a.w in basis(s, i), then transpose
        cols = [alg.coords(concat(_arrow_path(alg, a.name), w), a.source, i)
                for w in alg.basis_paths(a.target, i)]
        pre = ExactMatrix.from_columns(cols, dims[a.source])
        maps[a.name] = pre.T
    return Representation(alg, dims, maps, check=False, summands=("I", (i,)), name=f"I({i})")


def simple(alg: BoundQuiverAlgebra, i) -> Representation:
    i = alg.quiver.check_vertex(i)
    return Representation(alg, {i: 1}, check=False, name=f"S({i})")


def direct_sum(mods: Sequence[Representation], alg: Optional[BoundQuiverAlgebra] = None):
    """(M_1 + ... + M_r, inclusions, projections)."""
    if not mods:
        if alg is None:
            raise ValueError("algebra required for the empty direct sum")
        Z = zero_module(alg)
        return Z, [], []
    alg = mods[0].algebra
    if any(m.algebra is not alg for m in mods):
        raise AlgebraMismatch("summands live over different algebras")
    dims = {v: sum(m.dims[v] for m in mods) for v in alg.vertices}
    maps = {a.name: block_diag([m.maps[a.name] for m in mods]) for a in alg.quiver.arrows}
    summands = None
    kinds = {m.summands[0] for m in mods if m.summands}
    if len(kinds) == 1 and all(m.summands for m in mods):
        summands = (kinds.pop(), tuple(v for m in mods for v in m.summands[1]))
    S = Representation(alg, dims, maps, check=False, summands=summands)
    incs, projs = [], []
    offs = {v: 0 for v in alg.vertices}
    for m in mods:
        inc, proj = {}, {}
        for v in alg.vertices:
            d, o = m.dims[v], offs[v]
            e = ExactMatrix.identity(dims[v])
            inc[v] = e.submatrix(range(dims[v]), range(o, o + d))
            proj[v] = e.submatrix(range(o, o + d), range(dims[v]))
            offs[v] += d
        incs.append(RepMorphism(m, S, inc, check=False))
        projs.append(RepMorphism(S, m, proj, check=False))
    return S, incs, projs


def projective_sum(alg: BoundQuiverAlgebra, vertices: Sequence) -> Representation:
    if not vertices:
        return Representation(alg, {}, check=False, summands=("P", ()))
    return direct_sum([projective(alg, i) for i in vertices])[0]


def injective_sum(alg: BoundQuiverAlgebra, vertices: Sequence) -> Representation:
    if not vertices:
        return Representation(alg, {}, check=False, summands=("I", ()))
    return direct_sum([injective(alg, i) for i in vertices])[0]


def _block_offsets(alg, vertices, dim_fn) -> list[dict]:
    offs, acc = [], {v: 0 for v in alg.vertices}
    for i in vertices:
        offs.append(dict(acc))
        for v in alg.vertices:
            acc[v] += dim_fn(i, v)
    return offs


def morphism_from_elements(M: Representation, vertices: Sequence, elements: Sequence):
    """The map P(i_1)+...+P(i_r) -> M sending e_{i_k} to ``elements[k]`` in M_{i_k}."""
    alg = M.algebra
    P = projective_sum(alg, vertices)
    maps = {}
    for v in alg.vertices:
        cols = []
        for i, m in zip(vertices, elements):
            for p in alg.basis_paths(i, v):
                cols.append(M.path_matrix(p).apply(m))
        maps[v] = ExactMatrix.from_columns(cols, M.dims[v])
    return P, RepMorphism(P, M, maps, check=False)


def morphism_to_injectives(M: Representation, vertices: Sequence, functionals: Sequence):
    """The map M -> I(i_1)+...+I(i_r) induced by linear forms on M_{i_k}."""
    alg = M.algebra
    I = injective_sum(alg, vertices)
    maps = {}
    for v in alg.vertices:
        rows = []
        for i, phi in zip(vertices, functionals):
            for w in alg.basis_paths(v, i):
                rows.append(ExactMatrix([phi], 1, M.dims[i]) @ M.path_matrix(w))
        maps[v] = vstack(rows, cols=M.dims[v])
    return I, RepMorphism(M, I, maps, check=False)


def projective_cover(M: Representation) -> tuple[Representation, RepMorphism]:
    """(P, p) with p lifting a basis of top M; P is a standard projective sum."""
    _, q = top(M)
    verts, elems = [], []
    for v in M.vertices:
        qv = q.maps[v]
        if qv.rows == 0:
            continue
        lifts = right_inverse(qv)
        for c in range(lifts.cols):
            verts.append(v)
            elems.append(lifts.column(c))
    return morphism_from_elements(M, verts, elems)


def injective_envelope(M: Representation) -> tuple[Representation, RepMorphism]:
    """(I, j) with j restricting to a dual basis on the socle; I a standard injective sum."""
    _, inc = socle(M)
    verts, funcs = [], []
    for v in M.vertices:
        s = inc.maps[v]
        if s.cols == 0:
            continue
        linv = left_inverse(s)
        for r in range(linv.rows):
            verts.append(v)
            funcs.append(linv.row(r))
    return morphism_to_injectives(M, verts, funcs)


def minimal_projective_presentation(M: Representation):
    """(P1, p1, P0, p0) with P1 -> P0 -> M -> 0 exact and both covers minimal."""
    P0, p0 = projective_cover(M)
    K, k = kernel(p0)
    P1, c = projective_cover(K)
    return P1, k @ c, P0, p0


def minimal_injective_copresentation(M: Representation):
    """(i0, I0, i1, I1) with 0 -> M -> I0 -> I1 exact and both envelopes minimal."""
    I0, i0 = injective_envelope(M)
    C, c = cokernel(i0)
    I1, j = injective_envelope(C)
    return i0, I0, j @ c, I1


def is_projective(M: Representation) -> bool:
    P, _ = projective_cover(M)
    return P.total_dim == M.total_dim


def is_injective(M: Representation) -> bool:
    I, _ = injective_envelope(M)
    return I.total_dim == M.total_dim


# ---------------------------------------------------------------------------
# Endomorphisms, decomposition, isomorphism

class ModuleCategory(LinearCategory):
    """mod A behind the generic linear-category interface."""

    def __init__(self, algebra: BoundQuiverAlgebra):
        super().__init__()
        self.algebra = algebra

    def _key(self, X):
        return id(X)

    def hom(self, X, Y):
        return hom_basis(X, Y).basis

    def compose(self, f, g):
        return g @ f

    def coords(self, f, X, Y):
        return hom_basis(X, Y).coords(f)

    def combine(self, X, Y, coeffs):
        return hom_basis(X, Y).element(coeffs)

    def identity(self, X):
        return identity(X)

    def end_radical(self, X):
        red = X._cache.get("end_rad")
        if red is None:
            red = LinearCategory.end_radical(self, X)
            X._cache["end_rad"] = red
        return red

    def is_iso(self, X, Y) -> bool:
        return is_isomorphic(X, Y)


def _cat(M: Representation) -> ModuleCategory:
    return ModuleCategory(M.algebra)


def end_radical(M: Representation) -> list[RepMorphism]:
    """Basis of rad End(M) via the trace form on End(M)."""
    red = _cat(M).end_radical(M)
    E = hom_basis(M, M)
    return [E.element(row) for row in _reducer_basis(red)]


def _reducer_basis(red: SubspaceReducer) -> list:
    return [tuple(r) for r in red.rows]


def end_quotient_dim(M: Representation) -> int:
    return _cat(M).end_quotient_dim(M)


def _min_poly(A: ExactMatrix) -> list:
    """Coefficients c_0..c_d (monic) of the minimal polynomial of a square matrix."""
    n = A.rows
    powers = [ExactMatrix.identity(n)]
    while True:
        cur = powers[-1] @ A
        cols = [p.flat() for p in powers]
        mat = ExactMatrix.from_columns(cols, n * n)
        x = solve(mat, cur.flat())
        if x is not None:
            return [-c for c in x] + [ONE]
        powers.append(cur)


def _poly_eval(coeffs: Sequence, A: ExactMatrix) -> ExactMatrix:
    n = A.rows
    out = ExactMatrix.zeros(n, n)
    for c in reversed(coeffs):
        out = out @ A + ExactMatrix.identity(n).scale(c)
    return out


def _factor(coeffs: Sequence) -> list[tuple[list, int]]:
    x = sympy.Symbol("x")
    poly = sympy.Poly([sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
                      x, domain="QQ")
    _, factors = poly.factor_list()
    out = []
    for f, e in factors:
        cs = [Fraction(int(sympy.fraction(c)[0]), int(sympy.fraction(c)[1]))
              for c in reversed(f.all_coeffs())]
        out.append((cs, e))
    return out


def _total(f: RepMorphism) -> ExactMatrix:
    return block_diag([f.maps[v] for v in f.source.vertices])


def _candidates(E: HomBasis):
    basis = E.basis
    yield from basis
    for i in range(len(basis)):
        for j in range(i + 1, len(basis)):
            yield basis[i] + basis[j]
    rng = random.Random(0)
    for _ in range(24):
        yield E.element([rng.randint(-3, 3) for _ in basis])


def _split(M: Representation):
    """A nontrivial splitting of M by generalized kernels, or None."""
    E = hom_basis(M, M)
    for phi in _candidates(E):
        if phi.is_zero():
            continue
        mp = _min_poly(_total(phi))
        facs = _factor(mp)
        if len(facs) < 2:
            continue
        bases = []
        for coeffs, e in facs:
            part = {}
            for v in M.vertices:
                ev = _poly_eval(coeffs, phi.maps[v])
                pw = ExactMatrix.identity(M.dims[v])
                for _ in range(e):
                    pw = pw @ ev
                part[v] = ExactMatrix.from_columns(kernel_basis(pw), M.dims[v])
            bases.append(part)
        return bases
    return None


def decompose(M: Representation) -> list[tuple[Representation, RepMorphism, RepMorphism]]:
    """Krull-Schmidt decomposition: list of (summand, inclusion, projection).

    Summands satisfy sum(inclusion o projection) = id_M.  Raises
    :class:`UndecidableDecomposition` when End(M)/rad has dimension > 1 and
    no element splits M over the rationals.
    """
    cached = M._cache.get("decompose")
    if cached is not None:
        return cached
    if M.is_zero():
        return []
    if end_quotient_dim(M) == 1:
        out = [(M, identity(M), identity(M))]
        M._cache["decompose"] = out
        return out
    parts = _split(M)
    if parts is None:
        raise UndecidableDecomposition(
            "End/rad has dimension > 1 but no splitting element was found")
    full = {v: hstack([p[v] for p in parts], rows=M.dims[v]) for v in M.vertices}
    inv = {v: m.inverse() for v, m in full.items()}
    out = []
    offs = {v: 0 for v in M.vertices}
    for part in parts:
        U, inc = subrepresentation(M, part)
        proj = {}
        for v in M.vertices:
            d = part[v].cols
            proj[v] = inv[v].submatrix(range(offs[v], offs[v] + d), range(M.dims[v]))
            offs[v] += d
        pr = RepMorphism(M, U, proj, check=False)
        for W, i2, p2 in decompose(U):
            out.append((W, inc @ i2, p2 @ pr))
    M._cache["decompose"] = out
    return out


def is_indecomposable(M: Representation) -> bool:
    if M.is_zero():
        raise ValueError("the zero module is neither decomposable nor indecomposable")
    if end_quotient_dim(M) == 1:
        return True
    if _split(M) is not None:
        return False
    raise UndecidableDecomposition("End/rad has dimension > 1; refusing to guess")


def _iso_indec(U: Representation, V: Representation) -> bool:
    if U.dim_vector() != V.dim_vector():
        return False
    return _cat(U).is_iso_indecomposable(U, V)


def is_isomorphic(M: Representation, N: Representation) -> bool:
    if M.algebra is not N.algebra:
        raise AlgebraMismatch("modules live over different algebras")
    if M.dim_vector() != N.dim_vector():
        return False
    if M.is_zero():
        return True
    left = [U for U, _, _ in decompose(M)]
    right = [V for V, _, _ in decompose(N)]
    if len(left) != len(right):
        return False
    for U in left:
        for k, V in enumerate(right):
            if _iso_indec(U, V):
                del right[k]
                break
        else:
            return False
    return True


def radical_hom(M: Representation, N: Representation) -> list[RepMorphism]:
    """Basis of rad(M, N): f with every component g o pi_l f iota_k radical in End(M_k)."""
    H = hom_basis(M, N)
    if not H.basis:
        return []
    cat = _cat(M)
    rows = []
    for Mk, ik, _ in decompose(M):
        red = cat.end_radical(Mk)
        if not red.free:
            continue
        for Nl, _, pl in decompose(N):
            comps = [pl @ f @ ik for f in H.basis]
            for g in hom_basis(Nl, Mk).basis:
                E = hom_basis(Mk, Mk)
                cols = [red.quotient_coords(E.coords(g @ c)) for c in comps]
                for q in range(len(red.free)):
                    rows.append([col[q] for col in cols])
    n = len(H.basis)
    if not rows:
        return list(H.basis)
    return [H.element(v) for v in kernel_basis(ExactMatrix(rows, len(rows), n))]


def change_basis(M: Representation, g: dict) -> tuple[Representation, RepMorphism]:
    """Isomorphic copy g.M together with the isomorphism M -> g.M."""
    maps = {a.name: g[a.target] @ M.maps[a.name] @ g[a.source].inverse()
            for a in M.algebra.quiver.arrows}
    N = Representation(M.algebra, M.dims, maps, check=False)
    return N, RepMorphism(M, N, g, check=False)


def random_basis_change(M: Representation, rng: random.Random):
    g = {}
    for v, d in M.dims.items():
        while True:
            m = ExactMatrix([[rng.randint(-3, 3) for _ in range(d)] for _ in range(d)], d, d)
            if m.det() != 0:
                break
        g[v] = m
    return change_basis(M, g)


def is_split_epi(f: RepMorphism) -> bool:
    """Whether f o s = id for some s (exact linear solve over Hom(target, source))."""
    H = hom_basis(f.target, f.source)
    if not H.basis:
        return f.target.is_zero()
    cols = [(f @ s).flat() for s in H.basis]
    return solve(ExactMatrix.from_columns(cols, len(cols[0])),
                 identity(f.target).flat()) is not None


def is_split_mono(f: RepMorphism) -> bool:
    H = hom_basis(f.target, f.source)
    if not H.basis:
        return f.source.is_zero()
    cols = [(r @ f).flat() for r in H.basis]
    return solve(ExactMatrix.from_columns(cols, len(cols[0])),
                 identity(f.source).flat()) is not None


def factors_through(f: RepMorphism, epi: RepMorphism) -> bool:
    """Whether f = epi o h for some h: source(f) -> source(epi)."""
    H = hom_basis(f.source, epi.source)
    if f.is_zero():
        return True
    if not H.basis:
        return False
    cols = [(epi @ h).flat() for h in H.basis]
    return solve(ExactMatrix.from_columns(cols, len(cols[0])), f.flat()) is not None


def extends_through(g: RepMorphism, mono: RepMorphism) -> bool:
    """Whether g = h o mono for some h: target(mono) -> target(g)."""
    H = hom_basis(mono.target, g.target)
    if g.is_zero():
        return True
    if not H.basis:
        return False
    cols = [(h @ mono).flat() for h in H.basis]
    return solve(ExactMatrix.from_columns(cols, len(cols[0])), g.flat()) is not None
