"""Command-line front end: ``ruled-locus <command> ...``.

Documents are read from a path argument or from stdin ("-" or omitted) and
written to stdout as canonical JSON.  Exit code 1 means an invalid
document (with {"error": ...} on stderr), exit code 2 a mathematical
degeneracy (cone input, indeterminate or infinite triangle counts).
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from concurrent.futures import ProcessPoolExecutor

from . import io
from .birational import DegenerateExtension, calcexp_curve, extension_is_trivializable, extension_to_surface
from .degrees import boundary_degree, m_degree, paper_degrees, poncelet_degree, rank3_degree
from .exact import GF
from .lines import (GenerationError, act_pgl2, act_pgl4, boundary_compose, dual_surface, gen_cone,
                    gen_developable, gen_point_cone, gen_rank3, gen_rank5, gen_type_a,
                    random_split_form, splitting_type, stability, validate)
from .locus import (DegenerateSurface, check_main_theorem, is_developable, phi, phi_rank,
                    pinch_points, psi_biform, psi_determinantal)
from .poncelet import count_triangles_exact, find_triangles_bruteforce

EXIT_INVALID = 1
EXIT_DEGENERATE = 2

KINDS = ("type-a", "cone", "rank5", "rank3", "developable", "boundary", "point-cone")


class Degenerate(Exception):
    """Carries a partial result to print before exiting with code 2."""

    def __init__(self, message, result=None):
        super().__init__(message)
        self.result = result


def _read_text(path):
    if path in (None, "-"):
        return sys.stdin.read()
    try:
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise io.DocumentError(f"cannot read {path}: {exc}") from exc


def _read(path):
    return io.loads(_read_text(path))


def _emit(doc):
    sys.stdout.write(io.dumps(doc) + "\n")


def _form_doc(f):
    return [f.field.to_str(c) for c in f.coeffs]


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_gen(args):
    F = io.parse_field(args.field)
    d, s = args.d, args.seed
    a = args.a if args.a is not None else max(1, d // 2)
    try:
        if args.kind == "type-a":
            psi = gen_type_a(d, a, seed=s, field=F)
        elif args.kind == "cone":
            psi = gen_cone(d, a, seed=s, field=F)
        elif args.kind == "rank5":
            psi = gen_rank5(d, seed=s, field=F)
        elif args.kind == "rank3":
            psi = gen_rank3(d, a, seed=s, field=F)
        elif args.kind == "developable":
            if d % 2 or d < 2:
                raise ValueError("developable surfaces have even degree d = 2e - 2")
            psi = gen_developable(d // 2 + 1, seed=s, field=F)
        elif args.kind == "boundary":
            k = args.xi_degree
            if not 1 <= k < d:
                raise ValueError("need 1 <= xi degree < d")
            d2 = d - k
            a2 = args.a if args.a is not None else max(1, d2 // 2)
            xi, _ = random_split_form(k, seed=s, field=F)
            psi = boundary_compose(gen_type_a(d2, a2, seed=s, field=F), xi)
        else:
            psi = gen_point_cone(d, seed=s, field=F)
    except (ValueError, GenerationError) as exc:
        raise io.DocumentError(str(exc)) from exc
    _emit(io.surface_to_doc(psi))


def analyze_doc(doc):
    """Analysis report of one surface document (a plain dict)."""
    t0 = time.perf_counter()
    psi = io.surface_from_doc(doc)
    F = psi.field
    rep = validate(psi)
    out = {"d": psi.d, "field": io.field_doc(F),
           "validity": {"decomposable": rep.decomposable, "base_point_free": rep.base_point_free,
                        "in_R_d": rep.in_R_d}}
    if rep.boundary_factor is not None:
        out["validity"]["common_factor"] = _form_doc(rep.boundary_factor)
    if not rep.decomposable:
        raise Degenerate("forms are not Pluecker coordinates of lines", out)
    st = stability(psi)
    out["stability"] = {"class": st.kind.value, "witness_type": st.witness_type,
                        "witness": None if st.witness is None else [F.to_str(x) for x in st.witness],
                        "relations": st.kernel_dim}
    out["phi_rank"] = phi_rank(psi)
    if not rep.base_point_free:
        raise Degenerate("surface has base points", out)
    try:
        sp = splitting_type(psi)
        out["splitting_type"] = {"a_Q": sp.a_Q, "b_K": sp.b_K}
        G = psi_biform(psi)
    except (DegenerateSurface, ArithmeticError) as exc:
        out["timing_s"] = round(time.perf_counter() - t0, 4)
        raise Degenerate(str(exc), out) from exc
    out["psi"] = io.curve_to_doc(G)
    out["developable"] = is_developable(G)
    try:
        out["pinch_form"] = _form_doc(pinch_points(psi, G).normalized())
    except DegenerateSurface:
        out["pinch_form"] = None
    try:
        chk = check_main_theorem(psi)
        out["theorem"] = {"holds": chk.holds,
                          "scalar": None if chk.scalar is None else F.to_str(chk.scalar)}
    except (DegenerateSurface, ArithmeticError) as exc:
        out["theorem"] = {"holds": None, "reason": str(exc)}
    tri = None
    if psi.d == 5:
        tri = count_triangles_exact(G)
        out["triangles"] = _count_doc(tri)
    out["timing_s"] = round(time.perf_counter() - t0, 4)
    if tri is not None and tri.status != "finite":
        raise Degenerate(f"triangle count is {tri.status}", out)
    return out


def _analyze_line(line):
    """Worker for batch mode: returns (exit code, output document)."""
    try:
        return 0, analyze_doc(io.loads(line))
    except io.DocumentError as exc:
        return EXIT_INVALID, {"error": str(exc)}
    except Degenerate as exc:
        res = dict(exc.result or {})
        res["degenerate"] = str(exc)
        return EXIT_DEGENERATE, res


def _threads():
    raw = os.environ.get("RULED_LOCUS_THREADS")
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise io.DocumentError("RULED_LOCUS_THREADS must be an integer")
    return os.cpu_count() or 1


def cmd_analyze(args):
    if not args.batch:
        code, doc = _analyze_line(_read_text(args.path))
        if code == EXIT_INVALID:
            raise io.DocumentError(doc["error"])
        _emit(doc)
        if code == EXIT_DEGENERATE:
            sys.stderr.write(io.dumps({"error": doc["degenerate"], "degenerate": True}) + "\n")
        return code
    lines = [ln for ln in _read_text(args.path).splitlines() if ln.strip()]
    workers = min(_threads(), max(1, len(lines)))
    if workers == 1:
        results = [_analyze_line(ln) for ln in lines]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            # map preserves input order
            results = list(pool.map(_analyze_line, lines, chunksize=1))
    code = 0
    for c, doc in results:
        _emit(doc)
        code = max(code, c)
    return code


def cmd_psi(args):
    psi = io.surface_from_doc(_read(args.path))
    try:
        if args.method == "biform":
            _emit(io.curve_to_doc(psi_biform(psi)))
        elif args.method == "det":
            _emit(io.curve_to_doc(psi_determinantal(psi)))
        else:
            chk = check_main_theorem(psi)
            F = psi.field
            doc = {"biform": io.curve_to_doc(chk.biform), "det": io.curve_to_doc(chk.determinantal),
                   "proportional": chk.holds,
                   "scalar": None if chk.scalar is None else F.to_str(chk.scalar)}
            _emit(doc)
            if not chk.holds:
                raise io.DocumentError("the two constructions disagree")
    except (DegenerateSurface, ArithmeticError) as exc:
        raise Degenerate(str(exc)) from exc
    return 0


def cmd_phi(args):
    psi = io.surface_from_doc(_read(args.path))
    M = phi(psi)
    doc = io.matrix_to_doc(M, psi.field)
    doc["rank"] = phi_rank(psi)
    _emit(doc)


def cmd_dual(args):
    _emit(io.surface_to_doc(dual_surface(io.surface_from_doc(_read(args.path)))))


def cmd_act(args):
    psi = io.surface_from_doc(_read(args.path))
    try:
        if args.pgl4:
            g = io.matrix_from_doc(_read(args.pgl4), 4, psi.field)
            out = act_pgl4(psi, g)
        else:
            h = io.matrix_from_doc(_read(args.pgl2), 2, psi.field)
            out = act_pgl2(psi, h)
    except ValueError as exc:
        raise io.DocumentError(str(exc)) from exc
    _emit(io.surface_to_doc(out))


def _count_doc(c):
    doc = {"status": c.status, "count": c.count}
    if c.vertices is not None:
        doc["vertices"] = _form_doc(c.vertices)
    if c.reduced_count is not None:
        doc["distinct"] = c.reduced_count
        doc["multiplicity"] = c.multiplicity
    if c.reason:
        doc["reason"] = c.reason
    return doc


def cmd_triangles(args):
    X = io.curve_from_doc(_read(args.path))
    if X.degree != 3:
        raise io.DocumentError("triangles need a cubic")
    mode = args.mode
    if mode == "exact":
        c = count_triangles_exact(X)
        _emit(_count_doc(c))
        if c.status != "finite":
            raise Degenerate(c.reason or c.status)
        return 0
    if not mode.startswith("brute:"):
        raise io.DocumentError("mode must be exact or brute:P")
    try:
        F = GF(int(mode[6:]))
    except ValueError as exc:
        raise io.DocumentError(str(exc)) from exc
    if X.field.characteristic and X.field != F:
        raise io.DocumentError("curve is over a different prime field")
    try:
        Xp = type(X)(3, [F(c) for c in X.coeffs], F)
    except ZeroDivisionError as exc:
        raise io.DocumentError(f"curve does not reduce mod {F.p}: {exc}") from exc
    if Xp.is_zero():
        raise Degenerate(f"curve vanishes mod {F.p}")
    try:
        tris = find_triangles_bruteforce(Xp)
    except ValueError as exc:
        raise io.DocumentError(str(exc)) from exc
    _emit({"p": F.p, "count": len(tris),
           "triangles": [[[str(int(x)) for x in pt] for pt in tri] for tri in tris]})
    return 0


def cmd_degrees(args):
    d = args.d
    if d < 3:
        raise io.DocumentError("need d >= 3")
    doc = paper_degrees(d).as_dict()
    doc["poncelet"] = {str(n): poncelet_degree(n) for n in range(d - 1)}
    doc["m"] = {str(a): m_degree(a, d) for a in range(1, d // 2 + 1)}
    doc["rank3"] = {str(a): rank3_degree(a, d) for a in range(1, d // 2 + 1)}
    if d >= 4:
        doc["boundary"] = boundary_degree(d)
    _emit(doc)


def cmd_from_extension(args):
    E = io.extension_from_doc(_read(args.path))
    if not extension_is_trivializable(E):
        raise Degenerate("extension is not trivializable")
    try:
        psi = extension_to_surface(E)
        C = calcexp_curve(E)
        G = psi_biform(psi)
    except (DegenerateExtension, DegenerateSurface, GenerationError, ArithmeticError) as exc:
        raise Degenerate(str(exc)) from exc
    _emit({"surface": io.surface_to_doc(psi), "curve": io.curve_to_doc(C),
           "psi": io.curve_to_doc(G), "equal": C.is_proportional(G)})


def cmd_selftest(args):
    from .selftest import run_all

    results = run_all(quick=args.quick, log=lambda line: print(line, flush=True))
    ok = all(r.passed for r in results)
    print(f"{sum(r.passed for r in results)}/{len(results)} criteria passed")
    return 0 if ok else EXIT_INVALID


# ---------------------------------------------------------------------------

def build_parser():
    p = argparse.ArgumentParser(prog="ruled-locus",
                                description="Meeting-pair curves of rational ruled surfaces.")
    sub = p.add_subparsers(dest="command", required=True)

    g = sub.add_parser("gen", help="random surface from a stratum")
    g.add_argument("--kind", choices=KINDS, required=True)
    g.add_argument("--d", type=int, required=True)
    g.add_argument("--a", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--field", default="q", help="q or fp:P")
    g.add_argument("--xi-degree", type=int, default=1, help="boundary kind: degree of the factor")
    g.set_defaults(func=cmd_gen)

    a = sub.add_parser("analyze", help="analysis report of a surface")
    a.add_argument("path", nargs="?")
    a.add_argument("--batch", action="store_true", help="one document per line")
    a.set_defaults(func=cmd_analyze)

    s = sub.add_parser("psi", help="curve of meeting pairs")
    s.add_argument("path", nargs="?")
    s.add_argument("--method", choices=("biform", "det", "both"), default="biform")
    s.set_defaults(func=cmd_psi)

    f = sub.add_parser("phi", help="quadratic form on S_d and its rank")
    f.add_argument("path", nargs="?")
    f.set_defaults(func=cmd_phi)

    du = sub.add_parser("dual", help="dual surface")
    du.add_argument("path", nargs="?")
    du.set_defaults(func=cmd_dual)

    ac = sub.add_parser("act", help="PGL4 or PGL2 action")
    grp = ac.add_mutually_exclusive_group(required=True)
    grp.add_argument("--pgl4", metavar="G.json")
    grp.add_argument("--pgl2", metavar="H.json")
    ac.add_argument("path", nargs="?")
    ac.set_defaults(func=cmd_act)

    t = sub.add_parser("triangles", help="Poncelet triangles of a cubic")
    t.add_argument("path", nargs="?")
    t.add_argument("--mode", default="exact", help="exact or brute:P")
    t.set_defaults(func=cmd_triangles)

    de = sub.add_parser("degrees", help="degree table")
    de.add_argument("--d", type=int, required=True)
    de.set_defaults(func=cmd_degrees)

    fe = sub.add_parser("from-extension", help="surface and curve from an extension datum")
    fe.add_argument("path", nargs="?")
    fe.set_defaults(func=cmd_from_extension)

    st = sub.add_parser("selftest", help="run the acceptance checks")
    st.add_argument("--quick", action="store_true")
    st.set_defaults(func=cmd_selftest)
    return p


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        return args.func(args) or 0
    except io.DocumentError as exc:
        sys.stderr.write(io.dumps({"error": str(exc)}) + "\n")
        return EXIT_INVALID
    except Degenerate as exc:
        if exc.result is not None:
            res = dict(exc.result)
            res["degenerate"] = str(exc)
            _emit(res)
        sys.stderr.write(io.dumps({"error": str(exc), "degenerate": True}) + "\n")
        return EXIT_DEGENERATE


if __name__ == "__main__":
    sys.exit(main())
