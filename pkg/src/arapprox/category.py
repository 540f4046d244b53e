"""Shared machinery for Hom-finite Krull-Schmidt linear categories.

Both engines (modules over a bound quiver algebra, and the mesh category)
subclass :class:`LinearCategory`.  Subclasses supply ``hom``, ``compose``
and ``coords``; radicals and isomorphism tests for indecomposables are
derived here from those three.
"""
from __future__ import annotations

from typing import Sequence

from .linalg import ZERO, ONE, ExactMatrix, SubspaceReducer, kernel_basis


class LinearCategory:
    """Interface: objects are hashable, hom spaces come with a fixed basis.

    ``compose(f, g)`` means "f then g", i.e. the composite g o f.
    """

    def __init__(self):
        self._end_rad: dict = {}

    # -- to be provided --------------------------------------------------
    def hom(self, X, Y) -> list:
        raise NotImplementedError

    def compose(self, f, g):
        raise NotImplementedError

    def coords(self, f, X, Y) -> tuple:
        raise NotImplementedError

    def combine(self, X, Y, coeffs: Sequence):
        raise NotImplementedError

    def identity(self, X):
        raise NotImplementedError

    def source(self, f):
        return f.source

    def target(self, f):
        return f.target

    # -- derived ---------------------------------------------------------
    def hom_dim(self, X, Y) -> int:
        return len(self.hom(X, Y))

    def zero(self, X, Y):
        return self.combine(X, Y, [ZERO] * self.hom_dim(X, Y))

    def end_radical(self, X) -> SubspaceReducer:
        """Radical of End(X) as a subspace of End-coordinates.

        Characteristic-zero trace criterion: x is radical iff the trace of
        left multiplication by x*y on End(X) vanishes for every y.
        """
        key = self._key(X)
        if key in self._end_rad:
            return self._end_rad[key]
        basis = self.hom(X, X)
        m = len(basis)
        # struct[a][b] = coords of e_a * e_b  (= e_b then e_a)
        struct = [[self.coords(self.compose(eb, ea), X, X) for eb in basis] for ea in basis]
        tr = [sum((struct[k][c][c] for c in range(m)), ZERO) for k in range(m)]
        form = ExactMatrix([[sum((struct[a][b][k] * tr[k] for k in range(m)), ZERO)
                             for b in range(m)] for a in range(m)], m, m)
        red = SubspaceReducer(kernel_basis(form), m)
        self._end_rad[key] = red
        return red

    def _key(self, X):
        return X

    def end_quotient_dim(self, X) -> int:
        red = self.end_radical(X)
        return red.dim - red.subspace_dim

    def is_radical(self, f, X, Y) -> bool:
        """Whether f: X -> Y lies in rad(X, Y); X and Y indecomposable."""
        red = self.end_radical(X)
        return all(red.contains(self.coords(self.compose(f, g), X, X))
                   for g in self.hom(Y, X))

    def radical_basis_coords(self, X, Y) -> list[tuple]:
        """Coordinates (in hom(X, Y)) of a basis of rad(X, Y); X, Y indecomposable."""
        basis = self.hom(X, Y)
        back = self.hom(Y, X)
        red = self.end_radical(X)
        rows: list = []
        per_b = []
        for f in basis:
            per_b.append([red.quotient_coords(self.coords(self.compose(f, g), X, X))
                          for g in back])
        if not basis:
            return []
        for gi in range(len(back)):
            for q in range(len(red.free)):
                rows.append([per_b[b][gi][q] for b in range(len(basis))])
        if not rows:
            return [tuple(ONE if i == j else ZERO for j in range(len(basis)))
                    for i in range(len(basis))]
        return kernel_basis(ExactMatrix(rows, len(rows), len(basis)))

    def radical(self, X, Y) -> list:
        return [self.combine(X, Y, c) for c in self.radical_basis_coords(X, Y)]

    def is_iso_indecomposable(self, X, Y) -> bool:
        """X, Y indecomposable: iso iff some g o f is invertible in the local ring End(X)."""
        if X == Y:
            return True
        fs, gs = self.hom(X, Y), self.hom(Y, X)
        if not fs or not gs:
            return False
        red = self.end_radical(X)
        return any(not red.contains(self.coords(self.compose(f, g), X, X))
                   for f in fs for g in gs)


class SumMorphism:
    """A morphism between formal direct sums given as a matrix of components.

    ``blocks[l][k]`` is a morphism ``sources[k] -> targets[l]``.
    """

    def __init__(self, cat: LinearCategory, sources: Sequence, targets: Sequence,
                 blocks: Sequence[Sequence]):
        self.cat = cat
        self.sources = tuple(sources)
        self.targets = tuple(targets)
        self.blocks = [list(r) for r in blocks]

    @classmethod
    def from_coords(cls, cat, sources, targets, coeffs: Sequence) -> "SumMorphism":
        coeffs = list(coeffs)
        blocks, pos = [], 0
        for t in targets:
            row = []
            for s in sources:
                d = cat.hom_dim(s, t)
                row.append(cat.combine(s, t, coeffs[pos:pos + d]))
                pos += d
            blocks.append(row)
        return cls(cat, sources, targets, blocks)

    @classmethod
    def identity(cls, cat, objs) -> "SumMorphism":
        return cls(cat, objs, objs, [[cat.identity(s) if k == l else cat.zero(s, t)
                                      for k, s in enumerate(objs)]
                                     for l, t in enumerate(objs)])

    def coords(self) -> tuple:
        out: list = []
        for l, t in enumerate(self.targets):
            for k, s in enumerate(self.sources):
                out.extend(self.cat.coords(self.blocks[l][k], s, t))
        return tuple(out)

    def then(self, other: "SumMorphism") -> "SumMorphism":
        """self followed by other."""
        cat = self.cat
        blocks = []
        for m, t in enumerate(other.targets):
            row = []
            for k, s in enumerate(self.sources):
                acc = [ZERO] * cat.hom_dim(s, t)
                for l, mid in enumerate(self.targets):
                    comp = cat.compose(self.blocks[l][k], other.blocks[m][l])
                    acc = [a + b for a, b in zip(acc, cat.coords(comp, s, t))]
                row.append(cat.combine(s, t, acc))
            blocks.append(row)
        return SumMorphism(cat, self.sources, other.targets, blocks)

    def is_zero(self) -> bool:
        return not any(self.coords())

    def __eq__(self, other) -> bool:
        return (isinstance(other, SumMorphism) and self.sources == other.sources
                and self.targets == other.targets and self.coords() == other.coords())

    __hash__ = None  # type: ignore[assignment]
