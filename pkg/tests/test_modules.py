import random

import pytest
from hypothesis import given, settings, strategies as st

from arapprox.errors import UndecidableDecomposition
from arapprox.linalg import ExactMatrix
from arapprox.modules import (
    Representation, cokernel, decompose, direct_sum, end_radical, hom_basis, hom_dim,
    identity, image, injective, injective_envelope, is_indecomposable, is_injective,
    is_isomorphic, is_projective, kernel, label, minimal_injective_copresentation,
    minimal_projective_presentation, projective, projective_cover, radical, radical_hom,
    random_basis_change, simple, socle, top, zero_morphism,
)
from arapprox.quiver import Quiver, linear_quiver, path_algebra
from oracles import interval_hom_dim, interval_label, interval_module, intervals, rep_hom_dim

A3 = path_algebra(linear_quiver(3))


def iv(a, b, alg=A3):
    return interval_module(alg, a, b)


def random_rep(alg, rng, maxdim=2):
    dims = {v: rng.randint(0, maxdim) for v in alg.vertices}
    maps = {}
    for a in alg.quiver.arrows:
        maps[a.name] = ExactMatrix([[rng.randint(-2, 2) for _ in range(dims[a.source])]
                                    for _ in range(dims[a.target])],
                                   dims[a.target], dims[a.source])
    return Representation(alg, dims, maps)


def test_projectives_and_injectives_of_kA3():
    assert projective(A3, "2").dim_vector() == (1, 1, 0)
    assert label(projective(A3, "2")) == "2/1"
    assert injective(A3, "1").dim_vector() == (1, 1, 1)
    assert label(injective(A3, "1")) == "3/2/1"
    assert is_isomorphic(projective(A3, "3"), injective(A3, "1"))


def test_simples_have_one_dimensional_endomorphisms():
    for v in A3.vertices:
        assert hom_dim(simple(A3, v), simple(A3, v)) == 1


def test_hom_basis_contains_identity():
    M = direct_sum([iv(1, 2), iv(2, 3)])[0]
    H = hom_basis(M, M)
    assert H.coords(identity(M)) is not None


def test_hom_from_P2_counts_vertex_2():
    rng = random.Random(7)
    P2 = projective(A3, "2")
    for _ in range(20):
        M = random_rep(A3, rng)
        assert hom_dim(P2, M) == M.dims["2"] == rep_hom_dim(P2, M)


def test_no_map_from_2_to_1():
    assert hom_dim(simple(A3, "2"), simple(A3, "1")) == 0 == rep_hom_dim(simple(A3, "2"),
                                                                           simple(A3, "1"))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_interval_hom_rule(n):
    alg = path_algebra(linear_quiver(n))
    for m in intervals(n):
        for k in intervals(n):
            assert hom_dim(iv(*m, alg), iv(*k, alg)) == interval_hom_dim(m, k)


@settings(max_examples=25, deadline=None)
@given(st.randoms(use_true_random=False))
def test_hom_dim_matches_oracle_on_random_reps(rnd):
    rng = random.Random(rnd.random())
    M, N = random_rep(A3, rng), random_rep(A3, rng)
    assert hom_dim(M, N) == rep_hom_dim(M, N)


def test_kernel_of_identity_and_cokernel_of_zero():
    M = iv(1, 3)
    assert kernel(identity(M))[0].is_zero()
    C, _ = cokernel(zero_morphism(iv(2, 2), M))
    assert C.dim_vector() == M.dim_vector()


def test_kernel_of_projective_onto_simple():
    P2 = projective(A3, "2")
    p = hom_basis(P2, simple(A3, "2"))[0]
    K, k = kernel(p)
    assert label(K) == "1"
    assert k.is_mono()


def test_image_factorization():
    f = hom_basis(iv(1, 2), iv(1, 3))[0]
    Im, epi, mono = image(f)
    assert mono @ epi == f
    assert label(Im) == "2/1"


def test_radical_top_socle():
    for v in A3.vertices:
        assert radical(simple(A3, v))[0].is_zero()
        assert is_isomorphic(top(projective(A3, v))[0], simple(A3, v))
    assert is_isomorphic(socle(injective(A3, "1"))[0], simple(A3, "1"))
    assert label(radical(projective(A3, "3"))[0]) == "2/1"


def test_projective_cover_of_projective_is_identity():
    for v in A3.vertices:
        P = projective(A3, v)
        Q, p = projective_cover(P)
        assert Q.dim_vector() == P.dim_vector() and p.is_iso()


def test_cover_of_2_and_envelope_of_1():
    Q, p = projective_cover(simple(A3, "2"))
    assert label(Q) == "2/1" and p.is_epi()
    I, j = injective_envelope(simple(A3, "1"))
    assert label(I) == "3/2/1" and j.is_mono()


def test_minimal_presentations():
    P1, p1, P0, p0 = minimal_projective_presentation(projective(A3, "2"))
    assert P1.is_zero() and p0.is_iso()
    P1, p1, P0, p0 = minimal_projective_presentation(simple(A3, "2"))
    assert label(P1) == "1" and label(P0) == "2/1"
    P1, p1, P0, p0 = minimal_projective_presentation(simple(A3, "3"))
    assert is_isomorphic(P1, projective(A3, "2")) and is_isomorphic(P0, projective(A3, "3"))
    assert (p0 @ p1).is_zero()
    i0, I0, i1, I1 = minimal_injective_copresentation(simple(A3, "1"))
    assert label(I0) == "3/2/1" and label(I1) == "3/2"


def test_projectivity_and_injectivity():
    assert is_projective(iv(1, 2)) and not is_projective(iv(2, 2))
    assert is_injective(iv(2, 3)) and not is_injective(iv(1, 2))


def test_decompose_two_copies_of_a_simple():
    S1 = simple(A3, "1")
    parts = decompose(direct_sum([S1, S1])[0])
    assert len(parts) == 2
    for N, inc, proj in parts:
        assert is_isomorphic(N, S1)
        assert (proj @ inc).is_iso()


def test_decompose_indecomposable_projective():
    parts = decompose(projective(A3, "2"))
    assert len(parts) == 1


@pytest.mark.parametrize("seed", range(6))
def test_decompose_recovers_summands(seed):
    rng = random.Random(seed)
    ivs = intervals(3)
    m, k = rng.sample(ivs, 2)
    S, _, _ = direct_sum([iv(*m), iv(*k)])
    S, _ = random_basis_change(S, rng)
    parts = decompose(S)
    got = sorted(label(N) for N, _, _ in parts)
    assert got == sorted([interval_label(*m), interval_label(*k)])
    total = None
    for N, inc, proj in parts:
        e = inc @ proj
        total = e if total is None else total + e
    assert total == identity(S)


def test_is_indecomposable():
    assert all(is_indecomposable(simple(A3, v)) for v in A3.vertices)
    assert not is_indecomposable(direct_sum([simple(A3, "1"), simple(A3, "2")])[0])


def test_end_radical_of_P3():
    P3 = projective(A3, "3")
    assert len(end_radical(P3)) == hom_dim(P3, P3) - 1


def test_radical_hom():
    M, N = iv(1, 2), iv(1, 3)
    assert len(radical_hom(M, N)) == hom_dim(M, N)
    assert len(radical_hom(M, M)) == len(end_radical(M))
    assert len(radical_hom(projective(A3, "1"), projective(A3, "2"))) == 1


def test_undecidable_decomposition_is_reported():
    # Kronecker module where b acts like t^2 + 1 on a: End is Q(i), dim 2, no split
    q = Quiver(["1", "2"], [("a", "1", "2"), ("b", "1", "2")])
    alg = path_algebra(q)
    M = Representation(alg, {"1": 2, "2": 2},
                       {"a": [[1, 0], [0, 1]], "b": [[0, -1], [1, 0]]})
    with pytest.raises(UndecidableDecomposition):
        decompose(M)
