"""Placing mod kA_n (any orientation) as a slice of the mesh category of ZA_n.

The projective P(v) of the k-th vertex along the line sits in layer k; the
horizontal coordinate follows the irreducible maps between neighbouring
projectives, starting from the first vertex at (0, 1).  Every other
indecomposable is tau^{-m} P(v) and sits m steps to the right.
"""
from __future__ import annotations

from typing import Optional

from .artranslate import tau_inverse
from .errors import OutOfWindow, ValidationFailure, WindowTooSmall
from .mesh import MeshCategory
from .modules import (
    Representation, decompose, hom_dim, is_isomorphic, label, projective,
)
from .quiver import BoundQuiverAlgebra, underlying_line


class SliceLabelling:
    """A validated association between indecomposable modules and mesh vertices."""

    def __init__(self, mesh: MeshCategory, algebra: BoundQuiverAlgebra, entries: list):
        self.mesh = mesh
        self.algebra = algebra
        self.entries = entries          # list of (module, vertex)
        self.names = {label(M): v for M, v in entries}

    def __iter__(self):
        return iter(self.entries)

    def __len__(self) -> int:
        return len(self.entries)

    @property
    def modules(self) -> list:
        return [M for M, _ in self.entries]

    @property
    def vertices(self) -> list:
        return [v for _, v in self.entries]

    def vertex_of(self, M: Representation):
        for N, v in self.entries:
            if N.dim_vector() == M.dim_vector() and is_isomorphic(N, M):
                return v
        raise KeyError(f"module {label(M)} is not on the slice")

    def module_at(self, v) -> Optional[Representation]:
        for M, w in self.entries:
            if w == tuple(v):
                return M
        return None

    def vertex(self, name: str):
        """Vertex of the module with the given stacked label, e.g. ``"2/1"``."""
        try:
            return self.names[name]
        except KeyError:
            raise KeyError(f"no module labelled {name!r} on the slice") from None

    def labels(self) -> dict:
        return {v: label(M) for M, v in self.entries}

    def mismatches(self) -> list:
        """Pairs whose module hom dimension differs from the mesh hom dimension."""
        bad = []
        for M, v in self.entries:
            for N, w in self.entries:
                if hom_dim(M, N) != self.mesh.hom_dim(v, w):
                    bad.append((label(M), label(N)))
        return bad


def projective_positions(algebra: BoundQuiverAlgebra) -> dict:
    """vertex -> (i, layer) for the indecomposable projectives."""
    q = algebra.quiver
    line = underlying_line(q)
    pos = {line[0]: (0, 1)}
    for k in range(len(line) - 1):
        a, b = line[k], line[k + 1]
        i, j = pos[a]
        if any(x.source == b and x.target == a for x in q.arrows):
            # P(a) -> P(b) irreducible: (i, j) -> (i, j + 1)
            pos[b] = (i, j + 1)
        else:
            # P(b) -> P(a) irreducible: (i - 1, j + 1) -> (i, j)
            pos[b] = (i - 1, j + 1)
    return pos


def label_slice(mesh: MeshCategory, algebra: BoundQuiverAlgebra,
                validate: bool = True) -> SliceLabelling:
    """Embed the indecomposables of a type-A path algebra into the mesh window."""
    if len(algebra.vertices) != mesh.n:
        raise ValidationFailure(f"algebra has {len(algebra.vertices)} vertices, mesh has n={mesh.n}")
    if algebra.relations:
        raise ValidationFailure("only hereditary (relation-free) type-A algebras are placed")
    entries = []
    for v, (i, j) in projective_positions(algebra).items():
        M, m = projective(algebra, v), 0
        while not M.is_zero():
            parts = decompose(M)
            if len(parts) != 1:
                raise ValidationFailure("tau^- of an indecomposable split")
            M = parts[0][0]
            if not mesh.in_window((i + m, j)):
                raise OutOfWindow(f"vertex {(i + m, j)} of {label(M)} lies outside the window")
            entries.append((M, (i + m, j)))
            M, m = tau_inverse(M), m + 1
    entries.sort(key=lambda e: (e[1][0] * 2 + e[1][1], e[1][1]))
    lab = SliceLabelling(mesh, algebra, entries)
    if validate:
        if len(set(lab.vertices)) != len(entries):
            raise ValidationFailure("two modules were placed on the same vertex")
        try:
            bad = lab.mismatches()
        except WindowTooSmall as exc:
            raise ValidationFailure(f"window too small to validate the slice: {exc}") from exc
        if bad:
            raise ValidationFailure(f"hom dimensions disagree on {bad[:3]}")
    return lab
