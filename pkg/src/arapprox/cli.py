"""Command line entry point: ``arapprox <group> <command> ...``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from . import artranslate, modules
from .approx import (
    Subcategory, is_strong_cover, minimality_certificate, minimize, nu_via_approx, precover,
    proper_diagnostics, representability_check,
)
from .errors import ArApproxError
from .mesh import MeshCategory, parse_vertex
from .nakayama import nakayama_object
from .quiver import linear_quiver, path_algebra
from .serialize import (
    algebra_from_json, algebra_to_json, dumps, load_json, mesh_from_spec,
    representation_from_json, representation_to_json,
)
from .slice import label_slice


class InputError(Exception):
    """Malformed user input (exit status 2)."""


def parse_window(text: str) -> tuple[int, int]:
    try:
        lo, hi = str(text).split("..")
        lo, hi = int(lo), int(hi)
    except ValueError:
        raise argparse.ArgumentTypeError(f"window must look like a..b, got {text!r}") from None
    if lo > hi:
        raise argparse.ArgumentTypeError("window must be nonempty")
    return lo, hi


def _cap(args) -> int:
    cap = args.cap if args.cap is not None else artranslate.dimension_cap()
    if cap < 1:
        raise InputError("the dimension cap must be at least 1")
    return cap


# ---------------------------------------------------------------------------
# helpers

def _load_algebra(path):
    try:
        return algebra_from_json(path)
    except (OSError, ValueError, KeyError, TypeError) as exc:
        raise InputError(f"cannot read algebra {path!r}: {exc}") from exc


def _resolve_module(alg, spec: str, cap: int):
    """A module given by its stacked label (e.g. "3/2/1") or as JSON (inline or file)."""
    s = spec.strip()
    if s.startswith("{") or s.endswith(".json") or os.path.exists(s):
        try:
            return representation_from_json(alg, s)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read module {spec!r}: {exc}") from exc
    for M in artranslate.indecomposables(alg, cap):
        if modules.label(M) == s:
            return M
    raise InputError(f"no indecomposable module labelled {spec!r}")


def _mesh_from_args(args) -> MeshCategory:
    if getattr(args, "spec", None):
        try:
            return mesh_from_spec(args.spec)
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise InputError(f"cannot read mesh spec: {exc}") from exc
    return MeshCategory(args.n, args.window)


def _vertex(text):
    try:
        return parse_vertex(text)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


class _Ambient:
    """Mesh plus the slice of mod kA_n used to resolve module names."""

    def __init__(self, mc: MeshCategory):
        self.mc = mc
        self.slice = label_slice(mc, path_algebra(linear_quiver(mc.n)))
        self.labels = self.slice.labels()

    def name(self, v) -> str:
        return self.labels.get(tuple(v), f"({v[0]},{v[1]})")

    def resolve(self, item):
        if isinstance(item, (list, tuple)):
            return self.mc.check(_vertex(item))
        s = str(item).strip()
        if s in self.slice.names:
            return self.slice.names[s]
        return self.mc.check(_vertex(s))


def _load_subcategory(path):
    try:
        doc = load_json(path)
    except (OSError, ValueError) as exc:
        raise InputError(f"cannot read subcategory {path!r}: {exc}") from exc
    if isinstance(doc, list):
        spec, objs = {"type": "A", "n": 3, "window": [-6, 6]}, doc
    elif isinstance(doc, dict) and "objects" in doc:
        spec, objs = doc.get("ambient", {"type": "A", "n": 3, "window": [-6, 6]}), doc["objects"]
    else:
        raise InputError("subcategory file must be a list of labels or {ambient, objects}")
    try:
        amb = _Ambient(mesh_from_spec(spec))
        gens = [amb.resolve(x) for x in objs]
    except (ValueError, KeyError, TypeError) as exc:
        raise InputError(f"bad subcategory entry: {exc}") from exc
    return amb, Subcategory(amb.mc, gens)


def _emit(args, payload: dict, text_lines: list, dot: Optional[str] = None) -> None:
    fmt = args.format
    if fmt == "dot":
        if dot is None:
            raise InputError("this command has no DOT output")
        print(dot)
    elif fmt == "json":
        print(dumps(payload))
    else:
        print("\n".join(text_lines))


# ---------------------------------------------------------------------------
# commands

def cmd_algebra_info(args):
    alg = _load_algebra(args.file)
    rows = []
    for v in alg.vertices:
        rows.append({"vertex": v,
                     "projective": modules.label(modules.projective(alg, v)),
                     "injective": modules.label(modules.injective(alg, v))})
    payload = {"algebra": algebra_to_json(alg), "dim": alg.dim,
               "acyclic": alg.quiver.is_acyclic(),
               "path_basis": [str(p) for p in alg.path_basis], "vertices": rows}
    lines = [f"vertices: {' '.join(alg.vertices)}",
             f"arrows: {' '.join(f'{a.name}:{a.source}->{a.target}' for a in alg.quiver.arrows)}",
             f"relations: {len(alg.relations)}",
             f"dimension: {alg.dim}",
             f"path basis: {' '.join(str(p) for p in alg.path_basis)}"]
    lines += [f"P({r['vertex']}) = {r['projective']}   I({r['vertex']}) = {r['injective']}"
              for r in rows]
    _emit(args, payload, lines)


def cmd_module_tau(args):
    alg = _load_algebra(args.file)
    M = _resolve_module(alg, args.module, _cap(args))
    T = artranslate.tau_inverse(M) if args.inverse else artranslate.tau(M)
    name = "tau^-" if args.inverse else "tau"
    payload = {"input": modules.label(M), "operation": name, "result": modules.label(T),
               "dims": list(T.dim_vector()), "module": representation_to_json(T)}
    _emit(args, payload, [f"{name}({modules.label(M)}) = {modules.label(T)}"])


def cmd_module_ar_seq(args):
    alg = _load_algebra(args.file)
    cap = _cap(args)
    C = _resolve_module(alg, args.module, cap)
    seq = artranslate.ar_sequence(C)
    corpus = artranslate.indecomposables(alg, cap)
    ok = artranslate.verify_almost_split(seq, corpus)
    left, mid, right = seq.labels()
    summands = sorted(modules.label(U) for U, _, _ in modules.decompose(seq.middle))
    payload = {"left": left, "middle": mid, "middle_summands": summands, "right": right,
               "almost_split": ok}
    _emit(args, payload,
          [f"0 -> {left} -> {' + '.join(summands)} -> {right} -> 0",
           f"almost split: {'yes' if ok else 'NO'}"])


def cmd_module_ar_quiver(args):
    alg = _load_algebra(args.file)
    Q = artranslate.ar_quiver(alg, _cap(args))
    if args.dot:
        args.format = "dot"
    labels = Q.labels()
    lines = [f"{len(Q.nodes)} indecomposables: {', '.join(labels)}"]
    lines += [f"  {labels[i]} -> {labels[j]}" + (f" (x{m})" if m > 1 else "")
              for (i, j), m in sorted(Q.arrows.items())]
    lines += [f"  tau({labels[i]}) = {labels[j]}" for i, j in sorted(Q.translation.items())]
    _emit(args, Q.to_json(), lines, Q.to_dot())


def cmd_mesh_build(args):
    mc = _mesh_from_args(args)
    labels = {}
    if args.label:
        labels = _Ambient(mc).labels
    inner = mc.interior()
    payload = dict(mc.to_json(labels), interior=[list(v) for v in inner], validated=True)
    lines = [f"ZA_{mc.n} window {mc.window[0]}..{mc.window[1]}: {len(mc.vertices)} vertices, "
             f"{len(inner)} interior", "validation: Serre symmetry and hom dims <= 1 passed"]
    _emit(args, payload, lines, mc.to_dot(labels))


def cmd_mesh_hom(args):
    mc = _mesh_from_args(args)
    x, y = mc.check(_vertex(args.v1)), mc.check(_vertex(args.v2))
    d = mc.hom_dim(x, y)
    paths = [[list(v) for v in p] for p in mc.basis_paths(x, y)]
    payload = {"source": list(x), "target": list(y), "dim": d, "basis_paths": paths}
    lines = [f"dim hom({x}, {y}) = {d}"]
    lines += ["  " + " -> ".join(f"({v[0]},{v[1]})" for v in p) for p in paths]
    _emit(args, payload, lines)


def cmd_mesh_serre(args):
    mc = _mesh_from_args(args)
    v = mc.check(_vertex(args.v))
    s = mc.serre(v)
    payload = {"vertex": list(v), "serre": list(s),
               "suspension": list(mc.suspension(v)), "translate": list(mc.translate(v))}
    _emit(args, payload, [f"S{v} = {s}"])


def _cover_payload(amb, cov):
    return {"target": amb.name(cov.target), "source": [amb.name(x) for x in cov.summands],
            "strong": is_strong_cover(cov), "right_minimal": minimality_certificate(cov)}


def cmd_subcat_cover(args):
    amb, sub = _load_subcategory(args.subfile)
    try:
        T = amb.resolve(args.target)
    except (ValueError, KeyError) as exc:
        raise InputError(str(exc)) from exc
    cov = minimize(precover(sub, T))
    payload = _cover_payload(amb, cov)
    src = " + ".join(payload["source"]) or "0"
    _emit(args, payload, [f"cover: {src} -> {payload['target']}",
                          f"strong: {payload['strong']}",
                          f"right minimal: {payload['right_minimal']}"])


def cmd_subcat_nu(args):
    amb, sub = _load_subcategory(args.subfile)
    nu = nu_via_approx(sub)
    rows = []
    for P, objs in nu.table().items():
        rows.append({"projective": amb.name(P), "nu": [amb.name(x) for x in objs],
                     "representable": representability_check(sub, P, objs)})
    payload = {"nu": rows}
    lines = [f"nu({r['projective']}) = {' + '.join(r['nu'])}" for r in rows]
    _emit(args, payload, lines)


def cmd_subcat_diagnostics(args):
    amb, sub = _load_subcategory(args.subfile)
    d = proper_diagnostics(sub)
    payload = d.to_json(amb.name)
    lines = [f"Hom(A, Sigma^-1 A) = 0: {d.vanishing}",
             f"projectives: {', '.join(amb.name(p) for p in d.projectives)}",
             f"injectives: {', '.join(amb.name(i) for i in d.injectives)}",
             f"enough projectives: {d.enough_projectives}",
             f"enough injectives: {d.enough_injectives}"]
    _emit(args, payload, lines)


def cmd_worked_example(args):
    mc = MeshCategory(3, (-6, 6))
    amb = _Ambient(mc)
    sub = Subcategory(mc, [amb.slice.vertex(x) for x in ("1", "2/1", "2")])
    one = amb.slice.vertex("1")
    s1 = mc.serre(one)
    cov = minimize(precover(sub, s1))
    nu = nu_via_approx(sub)
    kA2 = path_algebra(linear_quiver(2))
    classical = {modules.label(modules.projective(kA2, v)):
                 modules.label(nakayama_object(modules.projective(kA2, v)))
                 for v in kA2.vertices}
    table = {amb.name(P): " + ".join(amb.name(x) for x in objs) for P, objs in nu.table().items()}
    payload = {"serre": {amb.name(one): amb.name(s1)}, "cover": _cover_payload(amb, cov),
               "nu": table, "classical_nu_kA2": classical,
               "agrees": table == classical}
    lines = [f"S({amb.name(one)}) = {amb.name(s1)}",
             f"cover: {' + '.join(payload['cover']['source'])} -> {payload['cover']['target']}"
             f"  (strong: {payload['cover']['strong']})"]
    lines += [f"nu({k}) = {v}" for k, v in table.items()]
    lines.append(f"agrees with the classical Nakayama functor of kA2: {payload['agrees']}")
    _emit(args, payload, lines)


# ---------------------------------------------------------------------------
# parser

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["text", "json", "dot"], default="text")
    common.add_argument("--cap", type=int, default=None,
                        help="dimension cap for AR exploration (default 64 or $AR_APPROX_CAP)")
    mesh_opts = argparse.ArgumentParser(add_help=False)
    mesh_opts.add_argument("--n", type=int, default=3)
    mesh_opts.add_argument("--window", type=parse_window, default=(-6, 6),
                           help="horizontal range a..b")
    mesh_opts.add_argument("--spec", help='mesh spec JSON, e.g. {"type":"A","n":3,"window":[-6,6]}')

    p = argparse.ArgumentParser(prog="arapprox", parents=[common],
                                description="AR translates and approximation-based Nakayama functors")
    groups = p.add_subparsers(dest="group", required=True)

    g = groups.add_parser("algebra").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("info", parents=[common])
    c.add_argument("file")
    c.set_defaults(func=cmd_algebra_info)

    g = groups.add_parser("module").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("tau", parents=[common])
    c.add_argument("file")
    c.add_argument("module")
    c.add_argument("--inverse", action="store_true", help="compute tau^- instead")
    c.set_defaults(func=cmd_module_tau)
    c = g.add_parser("ar-seq", parents=[common])
    c.add_argument("file")
    c.add_argument("module")
    c.set_defaults(func=cmd_module_ar_seq)
    c = g.add_parser("ar-quiver", parents=[common])
    c.add_argument("file")
    c.add_argument("--dot", action="store_true")
    c.set_defaults(func=cmd_module_ar_quiver)

    g = groups.add_parser("mesh").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("build", parents=[common, mesh_opts])
    c.add_argument("--label", action="store_true", help="label the mod kA_n slice")
    c.set_defaults(func=cmd_mesh_build)
    c = g.add_parser("hom", parents=[common, mesh_opts])
    c.add_argument("v1")
    c.add_argument("v2")
    c.set_defaults(func=cmd_mesh_hom)
    c = g.add_parser("serre", parents=[common, mesh_opts])
    c.add_argument("v")
    c.set_defaults(func=cmd_mesh_serre)

    g = groups.add_parser("subcat").add_subparsers(dest="cmd", required=True)
    c = g.add_parser("cover", parents=[common])
    c.add_argument("subfile")
    c.add_argument("target")
    c.set_defaults(func=cmd_subcat_cover)
    c = g.add_parser("nu", parents=[common])
    c.add_argument("subfile")
    c.set_defaults(func=cmd_subcat_nu)
    c = g.add_parser("diagnostics", parents=[common])
    c.add_argument("subfile")
    c.set_defaults(func=cmd_subcat_diagnostics)

    c = groups.add_parser("paper-example", parents=[common],
                          help="nu of mod kA2 from strong covers inside ZA3, with the cover of S(1)")
    c.set_defaults(func=cmd_worked_example)
    return p


def _join_negative_values(argv: list) -> list:
    """Allow ``--window -6..6`` (argparse would read -6..6 as an option)."""
    out, k = [], 0
    while k < len(argv):
        if argv[k] in ("--window",) and k + 1 < len(argv):
            out.append(f"{argv[k]}={argv[k + 1]}")
            k += 2
        else:
            out.append(argv[k])
            k += 1
    return out


def main(argv: Optional[list] = None) -> int:
    argv = _join_negative_values(list(sys.argv[1:] if argv is None else argv))
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except InputError as exc:
        print(json.dumps({"error": "malformed-input", "message": str(exc)}), file=sys.stderr)
        return 2
    except ArApproxError as exc:
        print(json.dumps(exc.record(), sort_keys=True), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
