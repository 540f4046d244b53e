"""Auslander-Reiten translates, almost split sequences and AR quivers in mod A."""
from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .errors import BoundExceeded, IsProjective, NotIndecomposable
from .linalg import ExactMatrix, SubspaceReducer, kernel_basis, solve
from .modules import (
    Representation, RepMorphism, cokernel, decompose, direct_sum,
    end_radical, extends_through, factor_through_cokernel, factor_through_mono,
    factors_through, hom_basis, is_indecomposable, is_injective,
    is_isomorphic, is_projective, is_split_epi, kernel, label,
    minimal_injective_copresentation, minimal_projective_presentation, projective,
    projective_cover, radical_hom, random_basis_change, socle, top, zero_module,
)
from .nakayama import conakayama_morphism, nakayama_morphism
from .quiver import BoundQuiverAlgebra

DEFAULT_CAP = 64


def dimension_cap() -> int:
    """The exploration cap, overridable through ``AR_APPROX_CAP``."""
    raw = os.environ.get("AR_APPROX_CAP")
    if raw:
        cap = int(raw)
        if cap < 1:
            raise ValueError("AR_APPROX_CAP must be at least 1")
        return cap
    return DEFAULT_CAP


# ---------------------------------------------------------------------------
# Translates

def tau_data(M: Representation):
    """(tau M, inclusion into N P1, N p1) for the minimal presentation of M."""
    P1, p1, P0, p0 = minimal_projective_presentation(M)
    np1 = nakayama_morphism(p1)
    T, k = kernel(np1)
    return T, k, np1


def tau(M: Representation) -> Representation:
    """tau M = Ker(N p1) where P1 -> P0 -> M -> 0 is a minimal presentation."""
    if M.is_zero():
        return zero_module(M.algebra)
    return tau_data(M)[0]


def tau_inverse_data(M: Representation):
    i0, I0, i1, I1 = minimal_injective_copresentation(M)
    ni1 = conakayama_morphism(i1)
    C, c = cokernel(ni1)
    return C, c, ni1


def tau_inverse(M: Representation) -> Representation:
    """tau^- M = Coker(N^- i1) where 0 -> M -> I0 -> I1 is a minimal copresentation."""
    if M.is_zero():
        return zero_module(M.algebra)
    return tau_inverse_data(M)[0]


# ---------------------------------------------------------------------------
# Ext^1 and almost split sequences

class Ext1:
    """Ext^1(C, T) as Hom(K, T) modulo maps extending to P0, with K = Ker(P0 -> C)."""

    def __init__(self, C: Representation, T: Representation):
        self.C, self.T = C, T
        self.P0, self.p0 = projective_cover(C)
        self.K, self.k = kernel(self.p0)
        self.hom_KT = hom_basis(self.K, T)
        restricted = [self.hom_KT.coords(g @ self.k) for g in hom_basis(self.P0, T)]
        self._red = SubspaceReducer(restricted, len(self.hom_KT))
        self.representatives = [self.hom_KT[i] for i in self._red.free]

    @property
    def dim(self) -> int:
        return len(self.representatives)

    def class_of(self, g: RepMorphism) -> tuple:
        return self._red.quotient_coords(self.hom_KT.coords(g))

    def cocycle(self, coeffs: Sequence) -> RepMorphism:
        out = self.hom_KT.element([0] * len(self.hom_KT))
        for c, g in zip(coeffs, self.representatives):
            if c:
                out = out + g.scale(c)
        return out

    def action(self, phi: RepMorphism) -> ExactMatrix:
        """Matrix of the right action of phi in End(C) on Ext^1(C, T) (pullback along phi)."""
        target = phi @ self.p0
        H = hom_basis(self.P0, self.P0)
        cols = [(self.p0 @ h).flat() for h in H]
        x = solve(ExactMatrix.from_columns(cols, len(target.flat())), target.flat())
        psi0 = H.element(x)
        psiK = factor_through_mono(self.k, psi0 @ self.k)
        return ExactMatrix.from_columns([self.class_of(g @ psiK) for g in self.representatives],
                                        self.dim)

    def materialize(self, g: RepMorphism):
        """Pushout of 0 -> K -> P0 -> C -> 0 along g: returns (E, T -> E, E -> C)."""
        S, (iT, iP), (pT, pP) = direct_sum([self.T, self.P0])
        phi = iP @ self.k - iT @ g
        E, q = cokernel(phi)
        mono = q @ iT
        epi = factor_through_cokernel(q, self.p0 @ pP)
        return E, mono, epi


def ext1_basis(C: Representation, T: Representation) -> list[RepMorphism]:
    """Cocycle representatives (maps K -> T) of a basis of Ext^1(C, T)."""
    return Ext1(C, T).representatives


@dataclass
class ARSequence:
    left: Representation
    middle: Representation
    right: Representation
    mono: RepMorphism
    epi: RepMorphism

    def labels(self) -> tuple[str, str, str]:
        return label(self.left), label(self.middle), label(self.right)


def ar_sequence(C: Representation) -> ARSequence:
    """Almost split sequence ending in C from a socle element of Ext^1(C, tau C)."""
    if is_projective(C):
        raise IsProjective("a projective module is not the end of an almost split sequence")
    if not is_indecomposable(C):
        raise NotIndecomposable("almost split sequences end in indecomposable modules")
    T = tau(C)
    ext = Ext1(C, T)
    rows = []
    for phi in end_radical(C):
        act = ext.action(phi)
        rows.extend(act.tolist())
    if rows:
        socle_vecs = kernel_basis(ExactMatrix(rows, len(rows), ext.dim))
    else:
        socle_vecs = [tuple(1 if i == j else 0 for j in range(ext.dim)) for i in range(ext.dim)]
    if not socle_vecs:
        raise ArithmeticError("Ext^1(C, tau C) has a zero socle")
    g = ext.cocycle(socle_vecs[0])
    E, mono, epi = ext.materialize(g)
    return ARSequence(T, E, C, mono, epi)


def class_annihilated(seq: ARSequence) -> bool:
    """Whether the class of the sequence is killed by rad End(C) (pullbacks split)."""
    ext = Ext1(seq.right, seq.left)
    # recover the class: lift p0 through the epi and restrict to K
    H = hom_basis(ext.P0, seq.middle)
    cols = [(seq.epi @ h).flat() for h in H]
    x = solve(ExactMatrix.from_columns(cols, len(ext.p0.flat())), ext.p0.flat())
    lift = H.element(x)
    g = factor_through_mono(seq.mono, lift @ ext.k)
    cls = ext.class_of(g)
    for phi in end_radical(seq.right):
        if any(ext.action(phi).apply(cls)):
            return False
    return any(cls)


def is_short_exact(mono: RepMorphism, epi: RepMorphism) -> bool:
    if not mono.is_mono() or not epi.is_epi() or not (epi @ mono).is_zero():
        return False
    return all(mono.source.dims[v] + epi.target.dims[v] == mono.target.dims[v]
               for v in mono.source.vertices)


def verify_almost_split(seq: ARSequence, corpus: Sequence[Representation]) -> bool:
    """Exact check of the almost split property against a complete list of indecomposables.

    For indecomposable X and C the non-split-epis X -> C are exactly rad(X, C),
    so lifting a basis of the radical suffices; dually on the left.
    """
    if not is_short_exact(seq.mono, seq.epi):
        return False
    if is_split_epi(seq.epi):
        return False
    for X in corpus:
        for f in radical_hom(X, seq.right):
            if not factors_through(f, seq.epi):
                return False
        for g in radical_hom(seq.left, X):
            if not extends_through(g, seq.mono):
                return False
    return True


# ---------------------------------------------------------------------------
# AR quiver

@dataclass
class ARQuiver:
    nodes: list
    arrows: dict = field(default_factory=dict)        # (i, j) -> multiplicity
    translation: dict = field(default_factory=dict)   # i -> index of tau(node i)

    def labels(self) -> list[str]:
        return [label(M) for M in self.nodes]

    def index_of(self, M: Representation) -> Optional[int]:
        return _find(self.nodes, M)

    def to_json(self) -> dict:
        labels = self.labels()
        return {
            "nodes": [{"id": k, "label": labels[k], "dims": list(M.dim_vector())}
                      for k, M in enumerate(self.nodes)],
            "arrows": [{"from": i, "to": j, "multiplicity": m}
                       for (i, j), m in sorted(self.arrows.items())],
            "translation": [{"from": i, "to": j} for i, j in sorted(self.translation.items())],
        }

    def to_dot(self) -> str:
        lines = ["digraph ARQuiver {", "  rankdir=LR;"]
        for k, M in enumerate(self.nodes):
            dv = "".join(str(d) for d in M.dim_vector())
            lines.append(f'  n{k} [label="{dv}\\n{label(M)}"];')
        for (i, j), m in sorted(self.arrows.items()):
            extra = f' [label="{m}"]' if m > 1 else ""
            lines.append(f"  n{i} -> n{j}{extra};")
        for i, j in sorted(self.translation.items()):
            lines.append(f"  n{i} -> n{j} [style=dashed, constraint=false];")
        lines.append("}")
        return "\n".join(lines)


def _find(nodes: Sequence[Representation], M: Representation) -> Optional[int]:
    for k, N in enumerate(nodes):
        if N.dim_vector() == M.dim_vector() and is_isomorphic(N, M):
            return k
    return None


def indecomposables(alg: BoundQuiverAlgebra, cap: Optional[int] = None) -> list[Representation]:
    """Close {P(i)} under tau^- and summands of almost split middles."""
    cap = dimension_cap() if cap is None else cap
    nodes: list = []
    queue: list = []

    def add(M):
        if M.total_dim > cap:
            raise BoundExceeded(f"found an indecomposable of dimension {M.total_dim} > cap {cap}")
        if _find(nodes, M) is None:
            nodes.append(M)
            queue.append(M)

    for v in alg.vertices:
        add(projective(alg, v))
    while queue:
        X = queue.pop(0)
        if not is_injective(X):
            Y = tau_inverse(X)
            for Z, _, _ in decompose(Y):
                add(Z)
        if not is_projective(X):
            for Z, _, _ in decompose(ar_sequence(X).middle):
                add(Z)
    return nodes


def _irreducible_multiplicity(nodes, X, Y, rad) -> int:
    R = rad[(id(X), id(Y))]
    if not R:
        return 0
    H = hom_basis(X, Y)
    sq = []
    for Z in nodes:
        for f in rad[(id(X), id(Z))]:
            for g in rad[(id(Z), id(Y))]:
                sq.append(H.coords(g @ f))
    rad2 = SubspaceReducer(sq, len(H)).subspace_dim if sq else 0
    return len(R) - rad2


def ar_quiver(alg: BoundQuiverAlgebra, cap: Optional[int] = None) -> ARQuiver:
    """Nodes, irreducible-map multiplicities dim rad/rad^2 and the translation."""
    nodes = indecomposables(alg, cap)
    rad = {(id(X), id(Y)): radical_hom(X, Y) for X in nodes for Y in nodes}
    arrows = {}
    for i, X in enumerate(nodes):
        for j, Y in enumerate(nodes):
            m = _irreducible_multiplicity(nodes, X, Y, rad)
            if m:
                arrows[(i, j)] = m
    translation = {}
    for i, X in enumerate(nodes):
        if not is_projective(X):
            j = _find(nodes, tau(X))
            if j is not None:
                translation[i] = j
    return ARQuiver(nodes, arrows, translation)


# ---------------------------------------------------------------------------
# Property suite

@dataclass
class SuiteReport:
    checks: dict = field(default_factory=dict)      # part -> number of instances checked
    violations: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def check(self, part: str, cond: bool, detail: str = "") -> None:
        self.checks[part] = self.checks.get(part, 0) + 1
        if not cond:
            self.violations.append(f"{part}: {detail}")

    def summary(self) -> str:
        status = "ok" if self.ok else f"{len(self.violations)} violation(s)"
        parts = ", ".join(f"{k}={v}" for k, v in sorted(self.checks.items()))
        return f"{status} [{parts}]"


def _socle_dims(M: Representation) -> tuple:
    return socle(M)[0].dim_vector()


def _top_dims(M: Representation) -> tuple:
    return top(M)[0].dim_vector()


def _tau_copresentation_ok(A: Representation) -> bool:
    """tau A -> N P1 -> N P0 is a minimal injective copresentation."""
    T, k, np1 = tau_data(A)
    if not k.is_mono() or not (np1 @ k).is_zero():
        return False
    if _socle_dims(T) != _socle_dims(np1.source):
        return False
    C, c = cokernel(k)
    induced = factor_through_cokernel(c, np1)
    if not induced.is_mono():
        return False
    return _socle_dims(C) == _socle_dims(np1.target)


def _tau_inverse_presentation_ok(A: Representation) -> bool:
    """N^- I0 -> N^- I1 -> tau^- A is a minimal projective presentation."""
    C, c, ni1 = tau_inverse_data(A)
    if not c.is_epi() or not (c @ ni1).is_zero():
        return False
    if _top_dims(C) != _top_dims(ni1.target):
        return False
    Kc, kc = kernel(c)
    lift = factor_through_mono(kc, ni1)
    return lift.is_epi() and _top_dims(Kc) == _top_dims(ni1.source)


def tau_property_suite(alg: BoundQuiverAlgebra, corpus: Optional[list] = None,
                       seed: int = 0) -> SuiteReport:
    """Check the seven properties of tau and of tau^- on every indecomposable and pair."""
    rep = SuiteReport()
    if corpus is None:
        corpus = indecomposables(alg)
    rng = random.Random(seed)
    taus = [tau(A) for A in corpus]
    itaus = [tau_inverse(A) for A in corpus]
    proj = [is_projective(A) for A in corpus]
    inj = [is_injective(A) for A in corpus]
    for a, A in enumerate(corpus):
        name = label(A)
        # part 2: tau A = 0 iff A projective
        rep.check("tau.2", taus[a].is_zero() == proj[a], name)
        rep.check("itau.2", itaus[a].is_zero() == inj[a], name)
        if not proj[a]:
            rep.check("tau.3", not is_injective(taus[a]), name)
            rep.check("tau.4", _tau_copresentation_ok(A), name)
            rep.check("tau.5", is_isomorphic(tau_inverse(taus[a]), A), name)
            rep.check("tau.6", is_indecomposable(taus[a]), name)
        if not inj[a]:
            rep.check("itau.3", not is_projective(itaus[a]), name)
            rep.check("itau.4", _tau_inverse_presentation_ok(A), name)
            rep.check("itau.5", is_isomorphic(tau(itaus[a]), A), name)
            rep.check("itau.6", is_indecomposable(itaus[a]), name)
        # iso-invariance under a change of basis
        B, _ = random_basis_change(A, rng)
        rep.check("tau.iso-invariance", is_isomorphic(tau(B), taus[a]), name)
        rep.check("itau.iso-invariance", is_isomorphic(tau_inverse(B), itaus[a]), name)
    for a, A in enumerate(corpus):
        for b, B in enumerate(corpus):
            pair = f"{label(A)} + {label(B)}"
            S = direct_sum([A, B])[0]
            rep.check("tau.1", is_isomorphic(tau(S), direct_sum([taus[a], taus[b]])[0]), pair)
            rep.check("itau.1",
                      is_isomorphic(tau_inverse(S), direct_sum([itaus[a], itaus[b]])[0]), pair)
            if not proj[a] and not proj[b]:
                rep.check("tau.7", (a == b) == is_isomorphic(taus[a], taus[b]), pair)
            if not inj[a] and not inj[b]:
                rep.check("itau.7", (a == b) == is_isomorphic(itaus[a], itaus[b]), pair)
    # bijection between non-projective and non-injective indecomposables
    nonproj = [a for a in range(len(corpus)) if not proj[a]]
    noninj = [b for b in range(len(corpus)) if not inj[b]]
    images = [_find([corpus[b] for b in noninj], taus[a]) for a in nonproj]
    rep.check("bijection", len(nonproj) == len(noninj) and None not in images
              and len(set(images)) == len(images), f"{len(nonproj)} vs {len(noninj)}")
    return rep
