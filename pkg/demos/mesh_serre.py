"""Hom spaces, Serre duality and suspension in the mesh category of ZA_n.

For each n the window -8..8 is built, the interior is listed and the
Serre dimension symmetry dim hom(x, y) = dim hom(y, S x) is counted.  Then
the slice of mod kA4 is placed in ZA4 and Ext^1 is read off as hom into
the suspension.

    python3 demos/mesh_serre.py
"""
from arapprox.artranslate import Ext1
from arapprox.mesh import build_mesh
from arapprox.modules import label
from arapprox.quiver import linear_quiver, path_algebra
from arapprox.slice import label_slice


def hom_table(mc, x, levels):
    row = []
    for y in mc.vertices:
        lev = 2 * (y[0] - x[0]) + (y[1] - x[1])
        if 0 <= lev <= levels and mc.hom_dim(x, y):
            row.append(y)
    return row


def main():
    for n in range(1, 5):
        mc = build_mesh(n, (-8, 8))
        inner = mc.interior()
        print(f"ZA{n}: {len(inner)} interior vertices, "
              f"{len(inner) ** 2} pairs, Serre violations: {len(mc.serre_violations())}")
        x = (0, 1)
        print(f"  nonzero hom from {x}: {hom_table(mc, x, 2 * n)}; S{x} = {mc.serre(x)}")

    mc = build_mesh(4, (-8, 8))
    lab = label_slice(mc, path_algebra(linear_quiver(4)))
    print("\nmod kA4 in ZA4: Ext^1(M, N) = hom(M, Sigma N)")
    agree = 0
    for M, v in lab:
        for N, w in lab:
            e = Ext1(M, N).dim
            assert e == mc.hom_dim(v, mc.suspension(w))
            agree += 1
            if e:
                print(f"  Ext^1({label(M)}, {label(N)}) = {e}")
    print(f"{agree} pairs checked")


if __name__ == "__main__":
    main()
