"""Acceptance gate: nine end-to-end criteria, each timed and reported on one line.

Run with pytest (a PASS/FAIL line per criterion is added to the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""
import random
import sys
import time
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).resolve().parent))

from arapprox.approx import (  # noqa: E402
    Subcategory, find_realization, is_right_minimal_indecomposable, is_strong_cover,
    minimality_certificate, minimize, natural_isomorphism, nu_via_approx, precover,
    proper_diagnostics, representability_check, tau_as_cover,
)
from arapprox.artranslate import (  # noqa: E402
    ar_quiver, ar_sequence, indecomposables, tau, tau_property_suite, verify_almost_split,
)
from arapprox.linalg import ExactMatrix, rank  # noqa: E402
from arapprox.mesh import MeshCategory  # noqa: E402
from arapprox.modules import (  # noqa: E402
    hom_basis, is_isomorphic, is_projective, label, projective, simple,
)
from arapprox.nakayama import (  # noqa: E402
    conakayama_morphism, conakayama_object, nakayama_duality_dims, nakayama_morphism,
    nakayama_object,
)
from arapprox.quiver import alternating_quiver, linear_quiver, path_algebra  # noqa: E402
from arapprox.slice import label_slice  # noqa: E402

RESULTS = {}
CRITERIA = {}


def criterion(number, title, limit=None):
    def wrap(fn):
        CRITERIA[number] = (title, limit, fn)
        return fn
    return wrap


def evaluate(number):
    """Run a criterion once; record (ok, seconds, detail)."""
    if number in RESULTS:
        return RESULTS[number]
    title, limit, fn = CRITERIA[number]
    start = time.perf_counter()
    try:
        ok, detail = fn()
    except Exception as exc:  # a crash is a failure with its reason
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    elapsed = time.perf_counter() - start
    if limit is not None and elapsed >= limit:
        ok, detail = False, f"{detail}; took {elapsed:.2f}s, limit {limit}s"
    RESULTS[number] = (ok, elapsed, detail)
    return RESULTS[number]


def report_line(number):
    title, limit, _ = CRITERIA[number]
    ok, elapsed, detail = RESULTS[number]
    bound = f" < {limit:g}s" if limit is not None else ""
    return f"AC{number} {'PASS' if ok else 'FAIL'} ({elapsed:.2f}s{bound}) {title}: {detail}"


# ---------------------------------------------------------------------------
# shared instances

def _slice(q, window=(-8, 8)):
    mc = MeshCategory(len(q.vertices), window)
    return mc, label_slice(mc, path_algebra(q))


def _example():
    mc, lab = _slice(linear_quiver(3), (-6, 6))
    sub = Subcategory(mc, [lab.vertex(x) for x in ("1", "2/1", "2")])
    return mc, lab, sub


def acceptance_subcategories():
    """(name, subcategory, labels) for every subcategory the criteria quantify over."""
    subs = []
    for n in range(1, 5):
        mc, lab = _slice(linear_quiver(n))
        subs.append((f"slice kA{n}", Subcategory(mc, lab.vertices), lab.labels()))
    for n in (3, 4):
        mc, lab = _slice(alternating_quiver(n))
        subs.append((f"slice kA{n} alternating", Subcategory(mc, lab.vertices), lab.labels()))
    mc, lab, sub = _example()
    subs.append(("kA2 embedding", sub, lab.labels()))
    for v in lab.vertices:
        subs.append((f"add{{{lab.labels()[v]}}}", Subcategory(mc, [v]), lab.labels()))
    return subs


FIGURE_ARROWS = {("1", "2/1"), ("2/1", "2"), ("2/1", "3/2/1"),
                 ("3/2/1", "3/2"), ("2", "3/2"), ("3/2", "3")}


# ---------------------------------------------------------------------------
# the criteria

@criterion(1, "worked example A2 inside the mesh of A3", limit=5)
def ac1():
    mc, lab, sub = _example()
    names = lab.labels()
    s1 = mc.serre(lab.vertex("1"))
    if names.get(s1) != "3/2/1":
        return False, f"S(1) = {names.get(s1, s1)}"
    cov = minimize(precover(sub, s1))
    src = [names[v] for v in cov.source]
    if src != ["2/1"] or not is_strong_cover(cov):
        return False, f"cover source {src}, strong={is_strong_cover(cov)}"
    nu = nu_via_approx(sub)
    table = {names[P]: "+".join(names[x] for x in objs) for P, objs in nu.table().items()}
    kA2 = path_algebra(linear_quiver(2))
    classical = {label(projective(kA2, v)): label(nakayama_object(projective(kA2, v)))
                 for v in kA2.vertices}
    expected = {"1": "2/1", "2/1": "2"}
    if not table == classical == expected:
        return False, f"nu {table}, classical {classical}"
    return True, "S(1)=3/2/1, cover 2/1 -> 3/2/1 strong, nu = {1->2/1, 2/1->2} = classical"


@criterion(2, "AR data of kA3", limit=5)
def ac2():
    alg = path_algebra(linear_quiver(3))
    Q = ar_quiver(alg)
    L = Q.labels()
    arrows = {(L[i], L[j]) for (i, j), m in Q.arrows.items() for _ in range(m)}
    if len(Q.nodes) != 6 or arrows != FIGURE_ARROWS:
        return False, f"{len(Q.nodes)} nodes, arrows {sorted(arrows)}"
    S2 = simple(alg, "2")
    if label(tau(S2)) != "1":
        return False, f"tau(2) = {label(tau(S2))}"
    seq = ar_sequence(S2)
    want = [simple(alg, "1"), projective(alg, "2"), S2]
    if not all(is_isomorphic(a, b) for a, b in zip([seq.left, seq.middle, seq.right], want)):
        return False, f"sequence {seq.labels()}"
    if not verify_almost_split(seq, Q.nodes):
        return False, "sequence is not almost split"
    return True, "6 nodes with the figure's arrows, tau(2)=1, 0->1->2/1->2->0 almost split"


@criterion(3, "tau and inverse-tau property suite", limit=60)
def ac3():
    algs = {f"kA{n}": path_algebra(linear_quiver(n)) for n in (2, 3, 4)}
    algs["kA3 alternating"] = path_algebra(alternating_quiver(3))
    algs["kA4 alternating"] = path_algebra(alternating_quiver(4))
    parts = [f"{p}.{k}" for p in ("tau", "itau") for k in range(1, 8)]
    total = 0
    for name, alg in algs.items():
        rep = tau_property_suite(alg)
        if not rep.ok:
            return False, f"{name}: {rep.violations[:3]}"
        if name != "kA2":
            missing = [p for p in parts if not rep.checks.get(p)]
            if missing:
                return False, f"{name}: parts never exercised {missing}"
        total += sum(rep.checks.values())
    return True, f"{total} checks over {len(algs)} algebras, all 7+7 parts"


@criterion(4, "Serre dimension symmetry in the mesh", limit=30)
def ac4():
    pairs = 0
    for n in range(1, 5):
        mc = MeshCategory(n, (-8, 8), validate=False)
        inner = mc.interior()
        if not inner:
            return False, f"n={n}: no interior vertices"
        bad = mc.serre_violations()
        if bad:
            return False, f"n={n}: {len(bad)} violations, e.g. {bad[0]}"
        pairs += len(inner) ** 2
    return True, f"{pairs} interior pairs for n=1..4, window -8..8"


@criterion(5, "vanishing hypothesis and Dyer projectivity on slices")
def ac5():
    checked = 0
    quivers = [linear_quiver(n) for n in range(1, 5)] + [alternating_quiver(n) for n in (3, 4)]
    for q in quivers:
        mc, lab = _slice(q)
        verts = lab.vertices
        for v in verts:
            for w in verts:
                if mc.hom_dim(v, mc.suspension_inverse(w)) != 0:
                    return False, f"hom({v}, Sigma^-1 {w}) != 0"
        for M, v in lab:
            dyer = all(mc.hom_dim(v, mc.suspension(w)) == 0 for w in verts)
            if dyer != is_projective(M):
                return False, f"{label(M)}: Dyer {dyer}, module engine {is_projective(M)}"
            checked += 1
    return True, f"{checked} objects over {len(quivers)} slices"


def _nakayama_checks(alg):
    verts = alg.vertices
    for i in verts:
        for j in verts:
            P, Q = projective(alg, i), projective(alg, j)
            H = hom_basis(P, Q)
            NH = hom_basis(nakayama_object(P), nakayama_object(Q))
            if len(H) != len(NH):
                return f"dim Hom(P{i}, P{j}) != dim Hom(I{i}, I{j})"
            if len(H):
                cols = [NH.coords(nakayama_morphism(f)) for f in H]
                if rank(ExactMatrix.from_columns(cols, len(NH))) != len(H):
                    return f"N not faithful on Hom(P{i}, P{j})"
            for f in H:
                if conakayama_morphism(nakayama_morphism(f)).flat() != f.flat():
                    return f"N^- N differs from id on a map P{i} -> P{j}"
        if not is_isomorphic(conakayama_object(nakayama_object(projective(alg, i))),
                             projective(alg, i)):
            return f"N^- N P{i} is not P{i}"
    return None


@criterion(6, "Nakayama equivalence, duality and representability")
def ac6():
    algs = [path_algebra(linear_quiver(n)) for n in (2, 3, 4)]
    algs += [path_algebra(alternating_quiver(n)) for n in (3, 4)]
    for alg in algs:
        err = _nakayama_checks(alg)
        if err:
            return False, err
    kA4 = path_algebra(linear_quiver(4))
    pairs = 0
    for M in indecomposables(kA4):
        for v in kA4.vertices:
            d1, d2 = nakayama_duality_dims(projective(kA4, v), M)
            if d1 != d2:
                return False, f"duality dims ({d1}, {d2}) for P{v}, {label(M)}"
            pairs += 1
    gens = 0
    for name, sub, names in acceptance_subcategories():
        nu = nu_via_approx(sub)
        for P in nu.covers:
            if not representability_check(sub, P, nu.obj(P)):
                return False, f"{name}: representability fails at {names.get(P, P)}"
            gens += 1
    return True, (f"N full/faithful and N^-N = id on {len(algs)} algebras, "
                  f"{pairs} duality pairs, {gens} representable projective generators")


@criterion(7, "tau as the cover of Sigma^-1 S")
def ac7():
    checked = 0
    mc, lab = _slice(linear_quiver(3), (-6, 6))
    full = Subcategory(mc, lab.vertices)
    real = {v: M for M, v in lab}
    _, elab, esub = _example()
    ereal = find_realization(esub, indecomposables(path_algebra(linear_quiver(2))))
    for sub, realization, names in ((full, real, lab.labels()), (esub, ereal, elab.labels())):
        for A, M in realization.items():
            if is_projective(M):
                continue
            res = tau_as_cover(sub, realization, A)
            if not res.agrees or res.cover.is_zero():
                return False, f"{names[A]}: cover {[names[x] for x in res.cover.source]}"
            if not is_right_minimal_indecomposable(res.cover):
                return False, f"{names[A]}: cover is not right minimal"
            checked += 1
    return True, f"{checked} non-projective indecomposables agree"


@criterion(8, "choice independence over 20 shuffled reruns")
def ac8():
    mc, lab, sub = _example()
    base = nu_via_approx(sub)
    target = mc.serre(lab.vertex("1"))
    base_cover = minimize(precover(sub, target))
    for seed in range(20):
        rng = random.Random(seed)
        shuffled = sub.shuffled(rng)
        rerun = nu_via_approx(shuffled, rng=random.Random(1000 + seed),
                              order_rng=random.Random(2000 + seed))
        if natural_isomorphism(base, rerun) is None:
            return False, f"seed {seed}: no natural isomorphism"
        pc = precover(shuffled, target, random.Random(3000 + seed))
        order = list(range(len(pc.summands)))
        rng.shuffle(order)
        cov = minimize(pc, order)
        if cov.multiset() != base_cover.multiset():
            return False, f"seed {seed}: cover source {cov.multiset()}"
        for c in [cov] + list(rerun.covers.values()):
            if not minimality_certificate(c):
                return False, f"seed {seed}: a minimized cover fails the certificate"
    return True, "20 reruns naturally isomorphic, covers certified right minimal"


@criterion(9, "enough projectives iff enough injectives")
def ac9():
    flags = []
    for name, sub, _ in acceptance_subcategories():
        d = proper_diagnostics(sub)
        if not d.biconditional:
            return False, f"{name}: projectives {d.enough_projectives}, injectives {d.enough_injectives}"
        flags.append(d.enough_projectives)
    return True, f"{len(flags)} subcategories, flags agree ({sum(flags)} with both true)"


# ---------------------------------------------------------------------------
# pytest entry points

@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_acceptance(number):
    ok, elapsed, detail = evaluate(number)
    assert ok, report_line(number)


if __name__ == "__main__":
    failed = 0
    for k in sorted(CRITERIA):
        evaluate(k)
        print(report_line(k))
        failed += not RESULTS[k][0]
    sys.exit(1 if failed else 0)
