import random

import pytest

from arapprox.errors import NotInjective, NotProjective
from arapprox.linalg import ExactMatrix, rank
from arapprox.modules import (
    direct_sum, hom_basis, identity, injective, is_isomorphic, kernel, label, projective,
    projective_sum, simple, zero_module, zero_morphism,
)
from arapprox.artranslate import indecomposables
from arapprox.nakayama import (
    conakayama_morphism, conakayama_object, conakayama_on_injectives, nakayama_duality_dims,
    nakayama_morphism, nakayama_object, nakayama_on_projectives,
)
from arapprox.quiver import alternating_quiver, linear_quiver, path_algebra

A3 = path_algebra(linear_quiver(3))
A4 = path_algebra(linear_quiver(4))


def test_nakayama_sends_projectives_to_injectives():
    N = nakayama_on_projectives(A3)
    for v in A3.vertices:
        assert is_isomorphic(N(projective(A3, v)), injective(A3, v))
    assert label(N(projective(A3, "1"))) == "3/2/1"


def test_nakayama_of_identity():
    P = projective(A3, "2")
    NP = nakayama_object(P)
    assert nakayama_morphism(identity(P)).flat() == identity(NP).flat()


def test_nakayama_of_the_map_P1_to_P2():
    P1, P2 = projective(A3, "1"), projective(A3, "2")
    (p,) = hom_basis(P1, P2)
    Np = nakayama_morphism(p)
    assert not Np.is_zero()
    assert label(Np.source) == "3/2/1" and label(Np.target) == "3/2"
    K, _ = kernel(Np)
    assert label(K) == "1"


def test_conakayama_on_injectives():
    Nm = conakayama_on_injectives(A3)
    for v in A3.vertices:
        assert is_isomorphic(Nm(injective(A3, v)), projective(A3, v))
    Z = zero_module(A3)
    assert conakayama_morphism(zero_morphism(injective(A3, "2"), injective(A3, "3"))).is_zero()
    assert conakayama_object(Z).is_zero()


@pytest.mark.parametrize("alg", [A3, A4, path_algebra(alternating_quiver(4))],
                         ids=["A3", "A4", "A4alt"])
def test_round_trip_on_random_maps(alg):
    rng = random.Random(3)
    verts = alg.vertices
    for _ in range(8):
        src = rng.sample(verts, rng.randint(1, 2))
        tgt = rng.sample(verts, rng.randint(1, 2))
        P, Q = projective_sum(alg, src), projective_sum(alg, tgt)
        H = hom_basis(P, Q)
        if not len(H):
            continue
        p = H.element([rng.randint(-3, 3) for _ in range(len(H))])
        back = conakayama_morphism(nakayama_morphism(p))
        assert back.flat() == p.flat()


@pytest.mark.parametrize("alg", [A3, A4, path_algebra(alternating_quiver(4))],
                         ids=["A3", "A4", "A4alt"])
def test_full_faithfulness_ranks(alg):
    for i in alg.vertices:
        for j in alg.vertices:
            P, Q = projective(alg, i), projective(alg, j)
            H = hom_basis(P, Q)
            NH = hom_basis(nakayama_object(P), nakayama_object(Q))
            assert len(H) == len(NH)
            if len(H):
                images = [nakayama_morphism(f) for f in H]
                cols = [NH.coords(g) for g in images]
                assert rank(ExactMatrix.from_columns(cols, len(NH))) == len(H)


def test_nakayama_on_a_sum_of_projectives():
    S, _, _ = direct_sum([projective(A3, "1"), projective(A3, "3")])
    NS = nakayama_object(S)
    expected = direct_sum([injective(A3, "1"), injective(A3, "3")])[0]
    assert NS.dim_vector() == (1, 1, 2)
    assert is_isomorphic(NS, expected)


def test_non_projective_is_rejected():
    with pytest.raises(NotProjective):
        nakayama_object(simple(A3, "2"))
    with pytest.raises(NotInjective):
        conakayama_object(simple(A3, "2"))


def test_duality_dims_examples():
    assert nakayama_duality_dims(projective(A3, "2"), simple(A3, "2")) == (1, 1)
    assert nakayama_duality_dims(projective(A3, "2"), zero_module(A3)) == (0, 0)


def test_duality_dims_on_kA4_corpus():
    for M in indecomposables(A4):
        for v in A4.vertices:
            d1, d2 = nakayama_duality_dims(projective(A4, v), M)
            assert d1 == d2 == M.dims[v]
