"""Nakayama functor of mod kA2 computed inside the mesh category of ZA3.

The indecomposables 1, 2/1, 2 of mod kA2 sit inside the slice of mod kA3.
For each projective generator P we take the Serre image S P, cover it by
the subcategory, minimize, and read off nu P as the source of the cover.

    python3 demos/worked_example.py
"""
from arapprox.approx import (
    Subcategory, is_strong_cover, minimality_certificate, minimize, nu_minus_via_approx,
    nu_via_approx, precover, proper_diagnostics,
)
from arapprox.mesh import build_mesh
from arapprox.modules import label, projective
from arapprox.nakayama import nakayama_object
from arapprox.quiver import linear_quiver, path_algebra
from arapprox.slice import label_slice


def main():
    mc = build_mesh(3, (-6, 6))
    lab = label_slice(mc, path_algebra(linear_quiver(3)))
    names = lab.labels()
    print("slice of mod kA3 in ZA3:")
    for v, name in sorted(names.items()):
        print(f"  {v}  {name}")

    sub = Subcategory(mc, [lab.vertex(x) for x in ("1", "2/1", "2")])
    d = proper_diagnostics(sub)
    print("\nsubcategory add{1, 2/1, 2}")
    print("  projective generators:", [names[p] for p in d.projectives])
    print("  injective generators: ", [names[i] for i in d.injectives])

    one = lab.vertex("1")
    s1 = mc.serre(one)
    print(f"\nS(1) = {names[s1]}")
    pc = precover(sub, s1)
    print("precover source:", [names[x] for x in pc.source])
    cov = minimize(pc)
    print("minimized:      ", [names[x] for x in cov.source],
          "strong:", is_strong_cover(cov), "certified minimal:", minimality_certificate(cov))

    nu = nu_via_approx(sub)
    num = nu_minus_via_approx(sub)
    print("\nnu via covers:")
    for P, objs in nu.table().items():
        print(f"  nu({names[P]}) = {' + '.join(names[x] for x in objs)}")
    print("nu^- via envelopes:")
    for I, objs in num.table().items():
        print(f"  nu^-({names[I]}) = {' + '.join(names[x] for x in objs)}")

    kA2 = path_algebra(linear_quiver(2))
    print("\nclassical Nakayama functor of kA2:")
    for v in kA2.vertices:
        P = projective(kA2, v)
        print(f"  {label(P)} -> {label(nakayama_object(P))}")


if __name__ == "__main__":
    main()
