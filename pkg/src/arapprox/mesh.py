"""A finite window of the mesh category of ZA_n.

Vertices are pairs ``(i, j)`` with ``1 <= j <= n``.  Arrows go
``(i, j) -> (i, j+1)`` and ``(i, j) -> (i+1, j-1)``, so the level
``2i + j`` rises by one along every arrow, and ``tau (i, j) = (i-1, j)``.

Hom spaces are the path spaces modulo the two-sided ideal generated by the
mesh sums (all signs +).  They are computed per source x one level at a
time: a path x ~> y (y != x) ends in an arrow z -> y, and an ideal element
either ends with such an arrow or is u.m_y with u a path x ~> tau y, so

    Hom(x, y) = Coker( Hom(x, tau y) --mesh--> sum_{z -> y} Hom(x, z) ).

This is exactly the elimination of the mesh ideal, organised by level.  A
query is answered only when every vertex of the strip at the intermediate
levels lies in the window; otherwise the window is too small for it.
"""
from __future__ import annotations

from typing import Iterable, NamedTuple, Optional, Sequence

from .category import LinearCategory
from .errors import Mismatch, OutOfWindow, ValidationFailure, WindowTooSmall
from .linalg import ONE, ZERO, ExactMatrix, SubspaceReducer, as_scalar

Vertex = tuple


class MeshMorphism(NamedTuple):
    source: tuple
    target: tuple
    coeffs: tuple

    def is_zero(self) -> bool:
        return not any(self.coeffs)


class _Table:
    """Hom(x, -) for one source x."""

    def __init__(self, x):
        self.x = x
        self.dims: dict = {x: 1}
        self.paths: dict = {x: [(x,)]}
        self.R: dict = {}               # (z, y) -> matrix of postcomposition with z -> y
        self.vanish: Optional[int] = None
        self.truncated: Optional[int] = None


def level(v) -> int:
    return 2 * v[0] + v[1]


class MeshCategory(LinearCategory):
    def __init__(self, n: int, window: Sequence[int] = (-6, 6), validate: bool = True):
        super().__init__()
        if n < 1:
            raise ValueError("n must be at least 1")
        lo, hi = int(window[0]), int(window[1])
        if lo > hi:
            raise ValueError("window must be nonempty")
        self.n = n
        self.window = (lo, hi)
        self._tables: dict = {}
        if validate:
            self.validate()

    # -- vertices and arrows -------------------------------------------------
    @property
    def vertices(self) -> list:
        lo, hi = self.window
        return [(i, j) for i in range(lo, hi + 1) for j in range(1, self.n + 1)]

    def in_window(self, v) -> bool:
        i, j = v
        return self.window[0] <= i <= self.window[1] and 1 <= j <= self.n

    def check(self, v) -> tuple:
        v = (int(v[0]), int(v[1]))
        if not 1 <= v[1] <= self.n:
            raise OutOfWindow(f"{v} is not a vertex of ZA_{self.n}")
        if not self.in_window(v):
            raise OutOfWindow(f"{v} lies outside the window {self.window}")
        return v

    def arrows_into(self, v) -> list:
        i, j = v
        out = []
        if j > 1:
            out.append((i, j - 1))
        if j < self.n:
            out.append((i - 1, j + 1))
        return out

    def arrows_out(self, v) -> list:
        i, j = v
        out = []
        if j < self.n:
            out.append((i, j + 1))
        if j > 1:
            out.append((i + 1, j - 1))
        return out

    def strip_level(self, lev: int) -> list:
        return [((lev - j) // 2, j) for j in range(1, self.n + 1) if (lev - j) % 2 == 0]

    # -- hom computation -----------------------------------------------------
    def _table(self, x) -> _Table:
        t = self._tables.get(x)
        if t is not None:
            return t
        t = _Table(x)
        lev = level(x)
        while True:
            lev += 1
            strip = self.strip_level(lev)
            if any(not self.in_window(v) for v in strip):
                t.truncated = lev
                break
            for y in strip:
                self._extend(t, y)
            if all(t.dims[y] == 0 for y in strip):
                t.vanish = lev
                break
        self._tables[x] = t
        return t

    def _extend(self, t: _Table, y) -> None:
        zs = self.arrows_into(y)
        dz = [t.dims.get(z, 0) for z in zs]
        offs = [sum(dz[:k]) for k in range(len(zs))]
        total = sum(dz)
        ty = (y[0] - 1, y[1])
        gens = []
        for b in range(t.dims.get(ty, 0)):
            vec = [ZERO] * total
            for z, o in zip(zs, offs):
                if t.dims.get(z, 0):
                    col = t.R[(ty, z)].column(b)
                    vec[o:o + len(col)] = col
            gens.append(vec)
        red = SubspaceReducer(gens, total)
        d = len(red.free)
        t.dims[y] = d
        paths = []
        for f in red.free:
            k = max(k for k in range(len(zs)) if offs[k] <= f and dz[k])
            paths.append(t.paths[zs[k]][f - offs[k]] + (y,))
        t.paths[y] = paths
        for z, o, dd in zip(zs, offs, dz):
            cols = []
            for b in range(dd):
                e = [ZERO] * total
                e[o + b] = ONE
                cols.append(red.quotient_coords(e))
            t.R[(z, y)] = ExactMatrix.from_columns(cols, d)

    def _resolve(self, x, y) -> tuple[_Table, bool]:
        """(table of x, whether y is stored); raises when the window cannot answer."""
        x, y = self.check(x), self.check(y)
        t = self._table(x)
        if y in t.dims:
            return t, True
        ly = level(y)
        if ly <= level(x):
            return t, False
        if t.vanish is not None and ly >= t.vanish:
            return t, False
        raise WindowTooSmall(f"hom({x}, {y}) needs vertices outside the window {self.window}")

    def hom_dim(self, x, y) -> int:
        t, stored = self._resolve(x, y)
        return t.dims[tuple(y)] if stored else 0

    def basis_paths(self, x, y) -> list:
        t, stored = self._resolve(x, y)
        return list(t.paths[tuple(y)]) if stored else []

    def hom(self, x, y) -> list:
        d = self.hom_dim(x, y)
        x, y = tuple(x), tuple(y)
        return [MeshMorphism(x, y, tuple(ONE if k == b else ZERO for k in range(d)))
                for b in range(d)]

    def coords(self, f, X=None, Y=None) -> tuple:
        return f.coeffs

    def combine(self, X, Y, coeffs) -> MeshMorphism:
        coeffs = tuple(as_scalar(c) for c in coeffs)
        if len(coeffs) != self.hom_dim(X, Y):
            raise Mismatch("coefficient count differs from the hom dimension")
        return MeshMorphism(tuple(X), tuple(Y), coeffs)

    def identity(self, X) -> MeshMorphism:
        X = self.check(X)
        return MeshMorphism(X, X, (ONE,))

    def morphism(self, x, y, coeffs: Iterable) -> MeshMorphism:
        return self.combine(self.check(x), self.check(y), list(coeffs))

    def _push(self, t: _Table, vec: tuple, path: Sequence) -> tuple:
        """Apply postcomposition with the arrows of ``path`` inside Hom(t.x, -)."""
        for a, b in zip(path, path[1:]):
            if (a, b) not in t.R:
                # past the vanishing level everything is zero
                return (ZERO,) * t.dims.get(path[-1], 0)
            vec = t.R[(a, b)].apply(vec)
        return tuple(vec)

    def path_coords(self, path: Sequence) -> tuple:
        """Coordinates of the class of a path (a vertex sequence) in Hom(start, end)."""
        path = [self.check(v) for v in path]
        for a, b in zip(path, path[1:]):
            if b not in self.arrows_out(a):
                raise Mismatch(f"{a} -> {b} is not an arrow")
        t, stored = self._resolve(path[0], path[-1])
        if not stored:
            return ()
        return self._push(t, (ONE,), path)

    def compose(self, f: MeshMorphism, g: MeshMorphism) -> MeshMorphism:
        """f followed by g."""
        if f.target != g.source:
            raise Mismatch(f"cannot compose {f.source}->{f.target} with {g.source}->{g.target}")
        x, w = f.source, g.target
        t, stored = self._resolve(x, w)
        if not stored:
            return MeshMorphism(x, w, ())
        out = [ZERO] * t.dims[w]
        if f.is_zero() or g.is_zero():
            return MeshMorphism(x, w, tuple(out))
        for c, p in zip(g.coeffs, self.basis_paths(g.source, w)):
            if c:
                v = self._push(t, f.coeffs, p)
                out = [a + c * b for a, b in zip(out, v)]
        return MeshMorphism(x, w, tuple(out))

    def is_iso(self, x, y) -> bool:
        return tuple(x) == tuple(y)

    # -- automorphisms -------------------------------------------------------
    def _image(self, v, fn):
        v = self.check(v)
        w = fn(v)
        if not self.in_window(w):
            raise OutOfWindow(f"image {w} of {v} lies outside the window {self.window}")
        return w

    def translate(self, v):
        return self._image(v, lambda v: (v[0] - 1, v[1]))

    def translate_inverse(self, v):
        return self._image(v, lambda v: (v[0] + 1, v[1]))

    def suspension(self, v):
        return self._image(v, lambda v: (v[0] + v[1], self.n + 1 - v[1]))

    def suspension_inverse(self, v):
        return self._image(v, lambda v: (v[0] - self.n - 1 + v[1], self.n + 1 - v[1]))

    def serre(self, v):
        """S = suspension o translate: (i, j) |-> (i + j - 1, n + 1 - j)."""
        return self._image(v, lambda v: (v[0] + v[1] - 1, self.n + 1 - v[1]))

    def serre_inverse(self, v):
        return self._image(v, lambda v: (v[0] - self.n + v[1], self.n + 1 - v[1]))

    def _transport(self, f: MeshMorphism, vmap) -> MeshMorphism:
        x, y = vmap(f.source), vmap(f.target)
        out = [ZERO] * self.hom_dim(x, y)
        for c, p in zip(f.coeffs, self.basis_paths(f.source, f.target)):
            if c:
                v = self.path_coords([vmap(u) for u in p])
                out = [a + c * b for a, b in zip(out, v)]
        return MeshMorphism(x, y, tuple(out))

    def serre_morphism(self, f: MeshMorphism) -> MeshMorphism:
        """Action of S on morphisms by transporting basis paths (S is a quiver automorphism)."""
        return self._transport(f, self.serre)

    def serre_inverse_morphism(self, f: MeshMorphism) -> MeshMorphism:
        return self._transport(f, self.serre_inverse)

    def suspension_morphism(self, f: MeshMorphism) -> MeshMorphism:
        return self._transport(f, self.suspension)

    # -- validation ----------------------------------------------------------
    def is_interior(self, x) -> bool:
        """Hom(x, -) is fully resolved inside the window and S x is in the window."""
        if not self.in_window(x):
            return False
        sx = (x[0] + x[1] - 1, self.n + 1 - x[1])
        return self.in_window(sx) and self._table(tuple(x)).vanish is not None

    def interior(self) -> list:
        return [v for v in self.vertices if self.is_interior(v)]

    def serre_violations(self) -> list:
        """Interior pairs (x, y) with dim hom(x, y) != dim hom(y, S x)."""
        inner = self.interior()
        bad = []
        for x in inner:
            sx = self.serre(x)
            for y in inner:
                if self.hom_dim(x, y) != self.hom_dim(y, sx):
                    bad.append((x, y))
        return bad

    def validate(self) -> None:
        inner = self.interior()
        if not inner:
            raise WindowTooSmall(f"window {self.window} has no interior vertices for n={self.n}")
        for x in inner:
            for y in inner:
                if self.hom_dim(x, y) > 1:
                    raise ValidationFailure(f"hom{x, y} has dimension > 1")
        bad = self.serre_violations()
        if bad:
            raise ValidationFailure(f"Serre duality fails on {len(bad)} pairs, e.g. {bad[0]}")
        if self.n == 3 and self.in_window((0, 1)) and self.in_window((0, 3)):
            if self.serre((0, 1)) != (0, 3):
                raise ValidationFailure("S does not send the vertex of 1 to that of 3/2/1")

    # -- export --------------------------------------------------------------
    def to_json(self, labels: Optional[dict] = None) -> dict:
        labels = labels or {}
        verts = self.vertices
        return {
            "type": "A", "n": self.n, "window": list(self.window),
            "vertices": [{"i": v[0], "j": v[1], "label": labels.get(v, "")} for v in verts],
            "arrows": [{"from": list(v), "to": list(w)}
                       for v in verts for w in self.arrows_out(v) if self.in_window(w)],
        }

    def to_dot(self, labels: Optional[dict] = None) -> str:
        labels = labels or {}
        name = lambda v: f'"{v[0]},{v[1]}"'  # noqa: E731
        lines = [f"digraph ZA{self.n} {{", "  rankdir=LR;"]
        for v in self.vertices:
            extra = f"\\n{labels[v]}" if v in labels else ""
            style = ", style=filled, fillcolor=lightgrey" if v in labels else ""
            lines.append(f'  {name(v)} [label="({v[0]},{v[1]}){extra}", '
                         f'pos="{level(v)},{v[1]}!"{style}];')
        for v in self.vertices:
            for w in self.arrows_out(v):
                if self.in_window(w):
                    lines.append(f"  {name(v)} -> {name(w)};")
        lines.append("}")
        return "\n".join(lines)


def build_mesh(n: int, window: Sequence[int] = (-6, 6), validate: bool = True) -> MeshCategory:
    return MeshCategory(n, window, validate)


def parse_vertex(text) -> tuple:
    """``"(0,1)"``, ``"0,1"`` or a pair -> (0, 1)."""
    if isinstance(text, (tuple, list)):
        if len(text) != 2:
            raise ValueError(f"not a vertex: {text!r}")
        return (int(text[0]), int(text[1]))
    s = str(text).strip().strip("()[] ")
    parts = [p for p in s.replace(";", ",").split(",") if p.strip()]
    if len(parts) != 2:
        raise ValueError(f"not a vertex: {text!r}")
    return (int(parts[0]), int(parts[1]))
