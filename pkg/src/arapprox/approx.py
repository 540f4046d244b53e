"""Approximations by a finitely generated additive subcategory and the Nakayama
functor built from covers of Serre images.

Everything here talks to the ambient category only through
:class:`~arapprox.category.LinearCategory`, so it runs over the mesh engine
and the module engine alike.  The suspension and Serre functor are needed
only by :func:`nu_via_approx`, :func:`nu_minus_via_approx` and
:func:`proper_diagnostics`; the mesh engine provides them.
"""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Optional, Sequence

from .category import LinearCategory, SumMorphism
from .errors import CoverNotStrong, IsProjective, Mismatch, NotRealized
from .linalg import ExactMatrix, SubspaceReducer, kernel_basis, rank, solve

RIGHT, LEFT = "right", "left"


class Subcategory:
    """add{A_1, ..., A_r} inside an ambient linear category."""

    def __init__(self, ambient: LinearCategory, objects: Sequence, check: bool = True):
        self.ambient = ambient
        self.objects = list(objects)
        if check:
            for k, A in enumerate(self.objects):
                if ambient.end_quotient_dim(A) != 1:
                    raise Mismatch(f"generator {A!r} does not have a local endomorphism ring")
                for B in self.objects[:k]:
                    if ambient.is_iso_indecomposable(A, B):
                        raise Mismatch(f"generators {B!r} and {A!r} are isomorphic")

    def __iter__(self):
        return iter(self.objects)

    def __len__(self) -> int:
        return len(self.objects)

    def shuffled(self, rng: random.Random) -> "Subcategory":
        objs = list(self.objects)
        rng.shuffle(objs)
        return Subcategory(self.ambient, objs, check=False)


@dataclass
class ApproxMap:
    """A map between an object T and a formal sum of generators.

    For ``side == "right"`` the components are ``summands[k] -> target``;
    for ``side == "left"`` they are ``target -> summands[k]`` (the "target"
    is then the object being approximated, kept under the same name).
    """
    sub: Subcategory
    side: str
    summands: list
    components: list
    target: object

    @property
    def cat(self) -> LinearCategory:
        return self.sub.ambient

    @property
    def source(self) -> list:
        """The approximating object as a list of generators."""
        return list(self.summands)

    def multiset(self) -> list:
        return sorted(map(repr, self.summands))

    def is_zero(self) -> bool:
        return all(not any(self.cat.coords(c, *self._ends(k)))
                   for k, c in enumerate(self.components))

    def _ends(self, k):
        if self.side == RIGHT:
            return self.summands[k], self.target
        return self.target, self.summands[k]

    def restrict(self, keep: Sequence[int]) -> "ApproxMap":
        return ApproxMap(self.sub, self.side, [self.summands[k] for k in keep],
                         [self.components[k] for k in keep], self.target)


def _rand_invertible(d: int, rng: random.Random) -> ExactMatrix:
    while True:
        m = ExactMatrix([[rng.randint(-2, 2) for _ in range(d)] for _ in range(d)], d, d)
        if m.det() != 0:
            return m


def _hom_basis(cat, X, Y, rng: Optional[random.Random]):
    basis = cat.hom(X, Y)
    if rng is None or len(basis) == 0:
        return basis
    g = _rand_invertible(len(basis), rng)
    return [cat.combine(X, Y, g.column(c)) for c in range(len(basis))]


def precover(sub: Subcategory, T, rng: Optional[random.Random] = None) -> ApproxMap:
    """Evaluation map  sum_i A_i^{dim Hom(A_i, T)} -> T  over a hom basis."""
    summands, comps = [], []
    for A in sub:
        for f in _hom_basis(sub.ambient, A, T, rng):
            summands.append(A)
            comps.append(f)
    return ApproxMap(sub, RIGHT, summands, comps, T)


def preenvelope(sub: Subcategory, T, rng: Optional[random.Random] = None) -> ApproxMap:
    """Coevaluation map  T -> sum_i A_i^{dim Hom(T, A_i)}."""
    summands, comps = [], []
    for A in sub:
        for f in _hom_basis(sub.ambient, T, A, rng):
            summands.append(A)
            comps.append(f)
    return ApproxMap(sub, LEFT, summands, comps, T)


def _induced_images(am: ApproxMap, G) -> list:
    """Coordinates in Hom(G, T) (right) or Hom(T, G) (left) of everything am induces."""
    cat = am.cat
    out = []
    for A, c in zip(am.summands, am.components):
        if am.side == RIGHT:
            for h in cat.hom(G, A):
                out.append(cat.coords(cat.compose(h, c), G, am.target))
        else:
            for h in cat.hom(A, G):
                out.append(cat.coords(cat.compose(c, h), am.target, G))
    return out


def _rank_and_dims(am: ApproxMap, G) -> tuple[int, int, int]:
    """(rank of the induced map, dim of its domain, dim of the hom space to hit)."""
    cat = am.cat
    imgs = _induced_images(am, G)
    goal = cat.hom_dim(G, am.target) if am.side == RIGHT else cat.hom_dim(am.target, G)
    r = rank(ExactMatrix.from_columns(imgs, goal)) if imgs and goal else 0
    return r, len(imgs), goal


def is_approximation(am: ApproxMap) -> bool:
    """Precover (or preenvelope) contract on every generator, decided by rank."""
    for G in am.sub:
        r, _, goal = _rank_and_dims(am, G)
        if r != goal:
            return False
    return True


def _minimize(am: ApproxMap, order: Optional[Sequence[int]]) -> ApproxMap:
    keep = list(range(len(am.summands)))
    order = list(reversed(keep)) if order is None else list(order)
    for k in order:
        trial = [x for x in keep if x != k]
        if is_approximation(am.restrict(trial)):
            keep = trial
    return am.restrict(keep)


def minimize(pc: ApproxMap, order: Optional[Sequence[int]] = None) -> ApproxMap:
    """Greedily drop indecomposable summands while the precover property survives."""
    if pc.side != RIGHT:
        raise Mismatch("minimize expects a precover; use minimize_left for preenvelopes")
    return _minimize(pc, order)


def minimize_left(pe: ApproxMap, order: Optional[Sequence[int]] = None) -> ApproxMap:
    if pe.side != LEFT:
        raise Mismatch("minimize_left expects a preenvelope")
    return _minimize(pe, order)


def is_strong(am: ApproxMap) -> bool:
    """Hom(G, source) -> Hom(G, T) (or dual) is bijective for every generator G."""
    for G in am.sub:
        r, n, goal = _rank_and_dims(am, G)
        if not (r == n == goal):
            return False
    return True


def is_strong_cover(am: ApproxMap, sub: Optional[Subcategory] = None) -> bool:
    if am.side != RIGHT:
        raise Mismatch("not a right approximation")
    return is_strong(am if sub is None else ApproxMap(sub, RIGHT, am.summands,
                                                      am.components, am.target))


def is_strong_envelope(am: ApproxMap, sub: Optional[Subcategory] = None) -> bool:
    if am.side != LEFT:
        raise Mismatch("not a left approximation")
    return is_strong(am if sub is None else ApproxMap(sub, LEFT, am.summands,
                                                      am.components, am.target))


def _blocks(cat, objs):
    """Index of End(sum objs): list of (k, l, offset, dim) for hom(objs[k], objs[l])."""
    out, pos = [], 0
    for l, B in enumerate(objs):
        for k, A in enumerate(objs):
            d = cat.hom_dim(A, B)
            out.append((k, l, pos, d))
            pos += d
    return out, pos


def minimality_certificate(am: ApproxMap) -> bool:
    """Every endomorphism psi of the source with c o psi = 0 (right case) lies in the radical.

    Radical membership is decided blockwise via rad(A_k, A_l) of the ambient engine.
    """
    cat = am.cat
    objs = am.summands
    if not objs:
        return True
    blocks, total = _blocks(cat, objs)
    # linear map psi |-> c o psi (right) or psi o c (left) in coordinates
    cols_per_unknown = []
    for k, l, off, d in blocks:
        A, B = objs[k], objs[l]
        for b, psi in enumerate(cat.hom(A, B)):
            img = []
            for kk, A2 in enumerate(objs):
                if am.side == RIGHT:
                    dim = cat.hom_dim(A2, am.target)
                    if kk == k:
                        img.extend(cat.coords(cat.compose(psi, am.components[l]), A, am.target))
                    else:
                        img.extend([0] * dim)
                else:
                    dim = cat.hom_dim(am.target, A2)
                    if kk == l:
                        img.extend(cat.coords(cat.compose(am.components[k], psi),
                                              am.target, B))
                    else:
                        img.extend([0] * dim)
            cols_per_unknown.append(img)
    rows = len(cols_per_unknown[0]) if cols_per_unknown else 0
    if total == 0:
        return True
    M = ExactMatrix.from_columns(cols_per_unknown, rows)
    null = kernel_basis(M)
    rad = {}
    for k, l, off, d in blocks:
        rad[(k, l)] = SubspaceReducer(cat.radical_basis_coords(objs[k], objs[l]), d)
    for v in null:
        for k, l, off, d in blocks:
            if d and not rad[(k, l)].contains(v[off:off + d]):
                return False
    return True


def is_right_minimal_indecomposable(am: ApproxMap) -> bool:
    """A nonzero map out of an indecomposable is right minimal (for covers with one summand)."""
    return len(am.summands) == 1 and not am.is_zero()


# ---------------------------------------------------------------------------
# Projective and injective generators

def projective_generators(sub: Subcategory) -> list:
    """Generators P with Hom(P, Sigma A) = 0 for all generators A."""
    cat = sub.ambient
    return [P for P in sub
            if all(cat.hom_dim(P, cat.suspension(A)) == 0 for A in sub)]


def injective_generators(sub: Subcategory) -> list:
    """Generators I with Hom(Sigma^{-1} A, I) = 0 for all generators A."""
    cat = sub.ambient
    return [I for I in sub
            if all(cat.hom_dim(cat.suspension_inverse(A), I) == 0 for A in sub)]


# ---------------------------------------------------------------------------
# Nakayama functor from strong covers

class ApproxNakayama:
    """nu on projective generators: nu P is the source of a strong cover of S P.

    ``covers[P]`` is the minimized cover alpha_P: nu P -> S P.  The morphism
    action solves alpha_{P'} o nu(p) = S(p) o alpha_P.
    """

    def __init__(self, sub: Subcategory, covers: dict, side: str = RIGHT):
        self.sub = sub
        self.covers = covers
        self.side = side

    @property
    def cat(self):
        return self.sub.ambient

    def obj(self, P) -> list:
        return list(self.covers[P].summands)

    def table(self) -> dict:
        return {P: self.obj(P) for P in self.covers}

    def _transport(self, p):
        cat = self.cat
        return cat.serre_morphism(p) if self.side == RIGHT else cat.serre_inverse_morphism(p)

    def mor(self, p) -> SumMorphism:
        """nu(p) for p: P -> P' between generators in the domain of the table."""
        cat = self.cat
        P, Q = cat.source(p), cat.target(p)
        a, b = self.covers[P], self.covers[Q]
        Sp = self._transport(p)
        src, tgt = a.summands, b.summands
        # unknown X: blocks X[l][k] in hom(src[k], tgt[l])
        unknowns = []
        for l, B in enumerate(tgt):
            for k, A in enumerate(src):
                for e in cat.hom(A, B):
                    unknowns.append((k, l, e))
        rows_goal = []
        eqs = []
        if self.side == RIGHT:
            # for each k:  sum_l b_l o X_lk = Sp o a_k  in hom(src[k], S Q)
            SQ = b.target
            for k, A in enumerate(src):
                goal = cat.coords(cat.compose(a.components[k], Sp), A, SQ)
                cols = []
                for kk, l, e in unknowns:
                    if kk == k:
                        cols.append(cat.coords(cat.compose(e, b.components[l]), A, SQ))
                    else:
                        cols.append((0,) * len(goal))
                eqs.append(cols)
                rows_goal.extend(goal)
        else:
            # left: for each l:  X_lk o a_k summed = b_l o S^-p  in hom(S^-P, tgt[l])
            SP = a.target
            for l, B in enumerate(tgt):
                goal = cat.coords(cat.compose(Sp, b.components[l]), SP, B)
                cols = []
                for k, ll, e in unknowns:
                    if ll == l:
                        cols.append(cat.coords(cat.compose(a.components[k], e), SP, B))
                    else:
                        cols.append((0,) * len(goal))
                eqs.append(cols)
                rows_goal.extend(goal)
        n = len(unknowns)
        full_cols = []
        for u in range(n):
            col = []
            for cols in eqs:
                col.extend(cols[u])
            full_cols.append(col)
        if n == 0:
            if any(rows_goal):
                raise CoverNotStrong("no morphism solves the naturality equation")
            x = ()
        else:
            x = solve(ExactMatrix.from_columns(full_cols, len(rows_goal)), rows_goal)
            if x is None:
                raise CoverNotStrong("no morphism solves the naturality equation")
            if len(kernel_basis(ExactMatrix.from_columns(full_cols, len(rows_goal)))):
                raise CoverNotStrong("the naturality equation has more than one solution")
        blocks = [[None] * len(src) for _ in tgt]
        acc = {}
        for (k, l, e), c in zip(unknowns, x):
            acc.setdefault((k, l), []).append(c)
        for l, B in enumerate(tgt):
            for k, A in enumerate(src):
                blocks[l][k] = cat.combine(A, B, acc.get((k, l), []))
        return SumMorphism(cat, src, tgt, blocks)

    def check_square(self, p) -> bool:
        """alpha_{P'} o nu(p) = S(p) o alpha_P, componentwise and exact."""
        cat = self.cat
        P, Q = cat.source(p), cat.target(p)
        a, b = self.covers[P], self.covers[Q]
        X = self.mor(p)
        Sp = self._transport(p)
        if self.side == RIGHT:
            SQ = b.target
            for k, A in enumerate(a.summands):
                lhs = [0] * cat.hom_dim(A, SQ)
                for l in range(len(b.summands)):
                    v = cat.coords(cat.compose(X.blocks[l][k], b.components[l]), A, SQ)
                    lhs = [s + t for s, t in zip(lhs, v)]
                rhs = cat.coords(cat.compose(a.components[k], Sp), A, SQ)
                if tuple(lhs) != tuple(rhs):
                    return False
            return True
        SP = a.target
        for l, B in enumerate(b.summands):
            lhs = [0] * cat.hom_dim(SP, B)
            for k in range(len(a.summands)):
                v = cat.coords(cat.compose(a.components[k], X.blocks[l][k]), SP, B)
                lhs = [s + t for s, t in zip(lhs, v)]
            rhs = cat.coords(cat.compose(Sp, b.components[l]), SP, B)
            if tuple(lhs) != tuple(rhs):
                return False
        return True


def nu_via_approx(sub: Subcategory, projectives: Optional[Sequence] = None,
                  rng: Optional[random.Random] = None,
                  order_rng: Optional[random.Random] = None) -> ApproxNakayama:
    """nu P = source of the minimized cover of S P, for each projective generator P.

    ``rng`` shuffles hom bases; ``order_rng`` shuffles the greedy drop order.
    """
    cat = sub.ambient
    if projectives is None:
        projectives = projective_generators(sub)
    covers = {}
    for P in projectives:
        pc = precover(sub, cat.serre(P), rng)
        order = None
        if order_rng is not None:
            order = list(range(len(pc.summands)))
            order_rng.shuffle(order)
        cov = minimize(pc, order)
        if not is_strong(cov):
            raise CoverNotStrong(f"the minimized cover of S({P!r}) is not strong")
        covers[P] = cov
    return ApproxNakayama(sub, covers, RIGHT)


def nu_minus_via_approx(sub: Subcategory, injectives: Optional[Sequence] = None,
                        rng: Optional[random.Random] = None) -> ApproxNakayama:
    """nu^- I = target of the minimized envelope of S^{-1} I, for each injective generator I."""
    cat = sub.ambient
    if injectives is None:
        injectives = injective_generators(sub)
    envs = {}
    for I in injectives:
        env = minimize_left(preenvelope(sub, cat.serre_inverse(I), rng))
        if not is_strong(env):
            raise CoverNotStrong(f"the minimized envelope of S^-1({I!r}) is not strong")
        envs[I] = env
    return ApproxNakayama(sub, envs, LEFT)


def natural_isomorphism(nu1: ApproxNakayama, nu2: ApproxNakayama) -> Optional[dict]:
    """theta_P: nu1 P -> nu2 P with alpha2_P o theta_P = alpha1_P, or None if absent.

    Each theta_P is the unique solution given by strongness of alpha2_P; it is
    returned only when it is invertible and the naturality squares commute on
    a hom basis between projective generators.
    """
    cat = nu1.cat
    thetas = {}
    for P, a in nu1.covers.items():
        b = nu2.covers.get(P)
        if b is None or sorted(map(repr, a.summands)) != sorted(map(repr, b.summands)):
            return None
        theta = _solve_through(cat, a, b)
        if theta is None or not _is_invertible(cat, theta):
            return None
        thetas[P] = theta
    for P in nu1.covers:
        for Q in nu1.covers:
            for p in cat.hom(P, Q):
                left = nu1.mor(p).then(thetas[Q])
                right = thetas[P].then(nu2.mor(p))
                if left != right:
                    return None
    return thetas


def _solve_through(cat, a: ApproxMap, b: ApproxMap) -> Optional[SumMorphism]:
    """X: source(a) -> source(b) with b o X = a (right approximations)."""
    unknowns = [(k, l, e) for l, B in enumerate(b.summands)
                for k, A in enumerate(a.summands) for e in cat.hom(A, B)]
    T = a.target
    goal, cols = [], [[] for _ in unknowns]
    for k, A in enumerate(a.summands):
        g = cat.coords(a.components[k], A, T)
        goal.extend(g)
        for u, (kk, l, e) in enumerate(unknowns):
            if kk == k:
                cols[u].extend(cat.coords(cat.compose(e, b.components[l]), A, T))
            else:
                cols[u].extend([0] * len(g))
    if not unknowns:
        x = () if not any(goal) else None
    else:
        x = solve(ExactMatrix.from_columns(cols, len(goal)), goal)
    if x is None:
        return None
    acc = {}
    for (k, l, e), c in zip(unknowns, x):
        acc.setdefault((k, l), []).append(c)
    blocks = [[cat.combine(A, B, acc.get((k, l), [])) for k, A in enumerate(a.summands)]
              for l, B in enumerate(b.summands)]
    return SumMorphism(cat, a.summands, b.summands, blocks)


def _is_invertible(cat, X: SumMorphism) -> bool:
    """Exact test: some Y has Y o X = id and X o Y = id (both linear in Y)."""
    src, tgt = X.sources, X.targets
    unknowns = [(k, l, e) for k, A in enumerate(src) for l, B in enumerate(tgt)
                for e in cat.hom(B, A)]
    cols = [[] for _ in unknowns]
    goal = []
    # (Y o X)[k2][k] = sum_l Y[k2][l] o X[l][k]
    for k2, A2 in enumerate(src):
        for k, A in enumerate(src):
            d = cat.hom_dim(A, A2)
            goal.extend(cat.coords(cat.identity(A), A, A) if k == k2 else (0,) * d)
            for u, (kk, l, e) in enumerate(unknowns):
                v = cat.coords(cat.compose(X.blocks[l][k], e), A, A2) if kk == k2 else (0,) * d
                cols[u].extend(v)
    # (X o Y)[l2][l] = sum_k X[l2][k] o Y[k][l]
    for l2, B2 in enumerate(tgt):
        for l, B in enumerate(tgt):
            d = cat.hom_dim(B, B2)
            goal.extend(cat.coords(cat.identity(B), B, B) if l == l2 else (0,) * d)
            for u, (k, ll, e) in enumerate(unknowns):
                v = cat.coords(cat.compose(e, X.blocks[l2][k]), B, B2) if ll == l else (0,) * d
                cols[u].extend(v)
    if not unknowns:
        return not any(goal)
    return solve(ExactMatrix.from_columns(cols, len(goal)), goal) is not None


def representability_check(sub: Subcategory, P, nuP: Sequence) -> bool:
    """dim Hom(M, nu P) = dim Hom(P, M) for every generator M."""
    cat = sub.ambient
    return all(sum(cat.hom_dim(M, X) for X in nuP) == cat.hom_dim(P, M) for M in sub)


def targets_injective(nu: ApproxNakayama) -> bool:
    """Every nu P has Hom(A, Sigma nu P) = 0 for all generators A."""
    cat = nu.cat
    return all(cat.hom_dim(A, cat.suspension(X)) == 0
               for P in nu.covers for X in nu.obj(P) for A in nu.sub)


def radical_preserved(nu: ApproxNakayama) -> bool:
    """nu maps rad(P, P') bijectively onto rad(nu P, nu P') for indecomposable images."""
    cat = nu.cat
    for P in nu.covers:
        for Q in nu.covers:
            if len(nu.obj(P)) != 1 or len(nu.obj(Q)) != 1:
                continue
            X, Y = nu.obj(P)[0], nu.obj(Q)[0]
            rad_src = cat.radical(P, Q)
            rad_tgt = cat.radical_basis_coords(X, Y)
            images = [nu.mor(p).blocks[0][0] for p in rad_src]
            red = SubspaceReducer(rad_tgt, cat.hom_dim(X, Y))
            if any(not red.contains(cat.coords(f, X, Y)) for f in images):
                return False
            if images:
                r = rank(ExactMatrix.from_columns([cat.coords(f, X, Y) for f in images],
                                                  cat.hom_dim(X, Y)))
            else:
                r = 0
            if r != len(rad_src) or len(rad_src) != len(rad_tgt):
                return False
    return True


# ---------------------------------------------------------------------------
# Diagnostics

@dataclass
class Diagnostics:
    vanishing: bool
    vanishing_failures: list
    projectives: list
    injectives: list
    enough_projectives: bool
    enough_injectives: bool
    notes: list = field(default_factory=list)

    @property
    def biconditional(self) -> bool:
        return self.enough_projectives == self.enough_injectives

    def to_json(self, name=repr) -> dict:
        return {
            "vanishing": self.vanishing,
            "vanishing_failures": [[name(a), name(b)] for a, b in self.vanishing_failures],
            "projectives": [name(p) for p in self.projectives],
            "injectives": [name(i) for i in self.injectives],
            "enough_projectives": self.enough_projectives,
            "enough_injectives": self.enough_injectives,
            "biconditional": self.biconditional,
        }


def proper_diagnostics(sub: Subcategory) -> Diagnostics:
    """Hom(A, Sigma^{-1} B) = 0, projective/injective generators, enough of each."""
    cat = sub.ambient
    fails = [(A, B) for A in sub for B in sub
             if cat.hom_dim(A, cat.suspension_inverse(B)) != 0]
    projs = projective_generators(sub)
    injs = injective_generators(sub)
    enough_p = all(any(cat.hom_dim(P, X) for P in projs) for X in sub)
    enough_i = all(any(cat.hom_dim(X, I) for I in injs) for X in sub)
    return Diagnostics(not fails, fails, projs, injs, enough_p, enough_i)


# ---------------------------------------------------------------------------
# tau as a cover

def find_realization(sub: Subcategory, modules: Sequence) -> dict:
    """Association generator -> module with matching hom dimensions on all pairs.

    Backtracking search; raises :class:`NotRealized` if there is none.
    """
    from .modules import hom_dim
    cat = sub.ambient
    gens = list(sub)
    mods = list(modules)
    if len(gens) > len(mods):
        raise NotRealized("fewer modules than generators")
    assign: list = []

    def ok(k, m):
        for kk, mm in enumerate(assign):
            if cat.hom_dim(gens[kk], gens[k]) != hom_dim(mods[mm], mods[m]):
                return False
            if cat.hom_dim(gens[k], gens[kk]) != hom_dim(mods[m], mods[mm]):
                return False
        return cat.hom_dim(gens[k], gens[k]) == hom_dim(mods[m], mods[m])

    def search(k):
        if k == len(gens):
            return True
        for m in range(len(mods)):
            if m not in assign and ok(k, m):
                assign.append(m)
                if search(k + 1):
                    return True
                assign.pop()
        return False

    if not search(0):
        raise NotRealized("no hom-dimension-preserving association exists")
    return {gens[k]: mods[m] for k, m in enumerate(assign)}


@dataclass
class TauCover:
    module_tau: object            # tau(realization A) in the module engine
    expected: object              # generator realizing it
    cover: ApproxMap              # minimized cover of Sigma^{-1} S A
    agrees: bool


def tau_as_cover(sub: Subcategory, realization: dict, A) -> TauCover:
    """Compare the module-engine tau with the minimized cover of Sigma^{-1} S A."""
    from .artranslate import tau
    from .modules import is_isomorphic, is_projective
    cat = sub.ambient
    if A not in realization:
        raise NotRealized(f"{A!r} has no realization")
    M = realization[A]
    if is_projective(M):
        raise IsProjective("tau of a projective is zero; there is no cover to compare")
    T = tau(M)
    match = [G for G, N in realization.items()
             if N.dim_vector() == T.dim_vector() and is_isomorphic(N, T)]
    if not match:
        raise NotRealized("tau A is not realized by a generator")
    X = match[0]
    target = cat.suspension_inverse(cat.serre(A))
    cov = minimize(precover(sub, target))
    agrees = (len(cov.summands) == 1 and cov.summands[0] == X and not cov.is_zero())
    return TauCover(T, X, cov, agrees)
