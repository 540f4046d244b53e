"""Independent reference computations used to freeze expected values.

None of these import the package's linear algebra; they work on plain lists
of Fractions or on closed-form combinatorial rules.
"""
from fractions import Fraction


def bareiss_rank(rows):
    """Rank by fraction-free (Bareiss) elimination on an integer-scaled copy."""
    # clear denominators row by row so the elimination stays in the integers
    m = []
    for r in rows:
        r = [Fraction(x) for x in r]
        den = 1
        for x in r:
            den = den * x.denominator // _gcd(den, x.denominator)
        m.append([int(x * den) for x in r])
    if not m:
        return 0
    nrows, ncols = len(m), len(m[0])
    rank, prev, col = 0, 1, 0
    while rank < nrows and col < ncols:
        piv = next((i for i in range(rank, nrows) if m[i][col] != 0), None)
        if piv is None:
            col += 1
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for i in range(rank + 1, nrows):
            for j in range(col + 1, ncols):
                m[i][j] = (m[i][j] * m[rank][col] - m[i][col] * m[rank][j]) // prev
            m[i][col] = 0
        prev = m[rank][col]
        rank += 1
        col += 1
    return rank


def _gcd(a, b):
    while b:
        a, b = b, a % b
    return a


def count_paths(vertices, arrows):
    """Number of directed paths (trivial ones included) by DFS from every vertex."""
    out = {v: [] for v in vertices}
    for s, t in arrows:
        out[s].append(t)

    def walk(v):
        return 1 + sum(walk(w) for w in out[v])
    return sum(walk(v) for v in vertices)


# ---------------------------------------------------------------------------
# mesh category of ZA_n by brute force

def za_arrows_out(n, v):
    i, j = v
    out = []
    if j < n:
        out.append((i, j + 1))
    if j > 1:
        out.append((i + 1, j - 1))
    return out


def za_level(v):
    return 2 * v[0] + v[1]


def za_paths(n, x, y):
    """All vertex sequences from x to y in ZA_n (levels increase by one per arrow)."""
    if za_level(y) < za_level(x):
        return []
    res = []

    def walk(p):
        v = p[-1]
        if v == y:
            res.append(tuple(p))
            return
        if za_level(v) >= za_level(y):
            return
        for w in za_arrows_out(n, v):
            walk(p + [w])
    walk([x])
    return res


def za_mesh_hom_dim(n, x, y):
    """dim Hom(x, y) in the mesh category: paths modulo the full two-sided mesh ideal.

    The ideal in this block is spanned by u.m_z.w over all meshes z and paths
    u: x -> tau z, w: z -> y, where m_z is the sum of the length-two paths tau z -> z.
    """
    paths = za_paths(n, x, y)
    if not paths:
        return 0
    index = {p: k for k, p in enumerate(paths)}
    gens = []
    # every z that can sit in the middle of a path from x to y
    candidates = set()
    for p in paths:
        candidates.update(p)
    for z in candidates:
        tz = (z[0] - 1, z[1])
        if za_level(tz) < za_level(x):
            continue
        mids = [w for w in za_arrows_out(n, tz) if z in za_arrows_out(n, w)]
        for u in za_paths(n, x, tz):
            for w in za_paths(n, z, y):
                vec = [0] * len(paths)
                for m in mids:
                    vec[index[u + (m,) + w]] += 1
                gens.append(vec)
    return len(paths) - bareiss_rank(gens)


# ---------------------------------------------------------------------------
# linear kA_n, arrows i+1 -> i: indecomposables are intervals [a, b]

def intervals(n):
    return [(a, b) for a in range(1, n + 1) for b in range(a, n + 1)]


def interval_label(a, b):
    return "/".join(str(k) for k in range(b, a - 1, -1))


def interval_hom_dim(m, nn):
    """Hom([a,b],[c,d]) = k iff a <= c <= b <= d, else 0.

    A nonzero map has image a quotient [x, b] of the source that is also a
    submodule [c, y] of the target; with arrows pointing down, quotients keep
    the top and submodules keep the socle.
    """
    (a, b), (c, d) = m, nn
    return 1 if a <= c <= b <= d else 0


def interval_tau(m, n):
    """tau [a, b] = [a-1, b-1]; projectives [1, b] go to zero."""
    a, b = m
    return None if a == 1 else (a - 1, b - 1)


def interval_module(alg, a, b):
    """The interval module with identity maps, built without the package's constructors."""
    from arapprox.modules import Representation
    dims = {str(v): (1 if a <= v <= b else 0) for v in range(1, len(alg.vertices) + 1)}
    maps = {}
    for arr in alg.quiver.arrows:
        s, t = int(arr.source), int(arr.target)
        if a <= s <= b and a <= t <= b:
            maps[arr.name] = [[1]]
    return Representation(alg, dims, maps)


def rep_hom_dim(M, N):
    """dim Hom(M, N) from the commuting-square equations, ranked by Bareiss."""
    verts = list(M.dims)
    offset, total = {}, 0
    for v in verts:
        offset[v] = total
        total += N.dims[v] * M.dims[v]
    rows = []
    for a in M.algebra.quiver.arrows:
        s, t = a.source, a.target
        Ma, Na = M.maps[a.name].tolist(), N.maps[a.name].tolist()
        # (N_a f_s - f_t M_a)[r][c] = 0
        for r in range(N.dims[t]):
            for c in range(M.dims[s]):
                row = [0] * total
                for k in range(N.dims[s]):
                    row[offset[s] + k * M.dims[s] + c] += Na[r][k]
                for k in range(M.dims[t]):
                    row[offset[t] + r * M.dims[t] + k] -= Ma[k][c]
                rows.append(row)
    return total - (bareiss_rank(rows) if rows else 0)
