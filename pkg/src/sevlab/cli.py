"""Command line: reports on face numbers, lattices, datasets, characters and
the higher-rank family, plus the bundled verification suites."""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
import time
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from .errors import SevlabError

ALGEBRA_CHOICES = ["R", "C", "H", "O"]
A_OF = {"R": 1, "C": 2, "H": 4, "O": 8}
SUITES = ["core", "triangulations", "characters", "highrank", "all"]


def _plain(x):
    if isinstance(x, Fraction):
        return str(x) if x.denominator != 1 else int(x)
    if isinstance(x, dict):
        return {str(k): _plain(v) for k, v in x.items()}
    if isinstance(x, (list, tuple, set, frozenset)):
        items = sorted(x) if isinstance(x, (set, frozenset)) else x
        return [_plain(v) for v in items]
    return x


class Report:
    """Named checks with expected and actual values; failures drive the exit code."""

    def __init__(self, command: str, params: dict, seed: int):
        self.command = command
        self.params = params
        self.seed = seed
        self.results: Dict[str, dict] = {}
        self.failures: List[str] = []
        self.body: Optional[str] = None
        self.table: Optional[List[List]] = None
        self._t0 = time.perf_counter()

    def check(self, name: str, expected, actual) -> bool:
        ok = _plain(expected) == _plain(actual)
        self.results[name] = {"expected": _plain(expected), "actual": _plain(actual), "status": "pass" if ok else "fail"}
        if not ok:
            self.failures.append(name)
        return ok

    def info(self, name: str, actual) -> None:
        self.results[name] = {"expected": None, "actual": _plain(actual), "status": "info"}

    def skip(self, name: str, why: str) -> None:
        self.results[name] = {"expected": None, "actual": why, "status": "skipped"}

    def error(self, name: str, exc: Exception) -> None:
        self.results[name] = {"expected": None, "actual": f"{type(exc).__name__}: {exc}", "status": "fail"}
        self.failures.append(name)

    def as_dict(self) -> dict:
        return {
            "command": self.command,
            "params": self.params,
            "results": self.results,
            "failures": self.failures,
            "seed": self.seed,
            "elapsed_ms": int(1000 * (time.perf_counter() - self._t0)),
        }

    def render(self, fmt: str) -> str:
        if fmt == "json":
            return json.dumps(self.as_dict(), indent=2) + "\n"
        if fmt == "csv":
            buf = io.StringIO()
            w = csv.writer(buf, lineterminator="\n")
            if self.table is not None:
                w.writerows(self.table)
            else:
                w.writerow(["name", "expected", "actual", "status"])
                for k, r in self.results.items():
                    w.writerow([k, json.dumps(r["expected"]), json.dumps(r["actual"]), r["status"]])
            return buf.getvalue()
        lines = []
        if self.body is not None:
            lines.append(self.body.rstrip("\n"))
        for k, r in self.results.items():
            if r["status"] == "fail" and r["expected"] is not None:
                lines.append(f"[fail] {k}: expected {json.dumps(r['expected'])}, got {json.dumps(r['actual'])}")
            else:
                lines.append(f"[{r['status']}] {k}: {json.dumps(r['actual'])}")
        lines.append(f"{len(self.failures)} failure(s)")
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# checks shared by the subcommands and the verify suites
# ---------------------------------------------------------------------------


def check_faces(rep: Report, alg: str, method: str = "both") -> List[int]:
    from .cominuscule import identify_interval, make_pair
    from .data import FACE_TABLE
    from .simplicial import klee_solve

    a = A_OF[alg]
    klee = kostant = None
    if method in ("klee", "both"):
        klee = list(klee_solve(a).f[1:])
        rep.check(f"{alg}.faces.klee", FACE_TABLE[alg], klee)
    if method in ("kostant", "both"):
        kostant = identify_interval(make_pair(a)).dims()
        rep.check(f"{alg}.faces.kostant", FACE_TABLE[alg], kostant)
    if method == "both":
        rep.check(f"{alg}.faces.match", True, klee == kostant)
    return klee if klee is not None else kostant


def check_core(rep: Report, alg: str) -> None:
    from math import comb

    from .cominuscule import all_components, check_structure, make_pair

    a = A_OF[alg]
    pair = make_pair(a)
    tot: Dict[int, int] = {}
    for c in all_components(pair):
        tot[c.degree] = tot.get(c.degree, 0) + c.dim
    N = 3 * a + 3
    rep.check(f"{alg}.kostant.total", 2 ** N, sum(tot.values()))
    rep.check(f"{alg}.kostant.per_degree", [comb(N, k) for k in range(N + 1)], [tot.get(k, 0) for k in range(N + 1)])
    s = check_structure(pair)
    rep.check(f"{alg}.structure.tightness", True, s.tightness)
    rep.check(f"{alg}.structure.duality", True, s.duality)
    rep.check(f"{alg}.structure.partition", True, s.partition)
    rep.check(f"{alg}.structure.edges", True, s.edges)
    if a != 1:
        rep.check(f"{alg}.structure.counts", True, s.counts)
    rep.info(f"{alg}.structure.component_counts", s.component_counts)


def check_links(rep: Report, alg: str) -> None:
    from .data import LINK_TABLE
    from .simplicial import link_f_vectors, link_facet_formula, so_vector_power_dim

    a = A_OF[alg]
    lf = list(link_f_vectors(a).f[1:])
    rep.check(f"{alg}.links.f", LINK_TABLE[alg], lf)
    rep.check(f"{alg}.links.facets", LINK_TABLE[alg][-1], link_facet_formula(a))
    rep.check(f"{alg}.links.so_dim", link_facet_formula(a), so_vector_power_dim(a))


def check_rp2(rep: Report) -> None:
    from .data import dataset
    from .simplicial import automorphism_group, check_manifold_properties, f_vector
    from .wedge import bold_selection, compare_rp2_diagram, contraction_rank, coordinate_forms, enumerate_selections, l3_span

    c = dataset("RP2_min").complex
    rep.check("R.dataset.f", [6, 15, 10], list(f_vector(c).f[1:]))
    p = check_manifold_properties(c, 1)
    rep.check("R.dataset.properties", [], p.failures)
    rep.check("R.dataset.euler", 1, p.euler)
    rep.info("R.dataset.automorphisms", len(automorphism_group(c)))
    span = l3_span()
    rep.check("R.l3.dim", 10, span.dim)
    d = compare_rp2_diagram(span)
    rep.check("R.l3.diagram_matched", 10, d.matched)
    rep.check("R.l3.diagram_signs", 10, d.exact_sign)
    rep.check("R.l3.coefficient_two", True, d.coefficient_two)
    total, good, facets = enumerate_selections(span)
    rep.info("R.bold.choices", total)
    rep.check("R.bold.closed_surfaces", 1, good)
    rep.check("R.bold.dataset", [list(f) for f in c.facets], [list(f) for f in sorted(facets[0])] if facets else None)
    bold_selection(span, c)
    bold = [{m: Fraction(1)} for m in bold_selection(span, c).values()]
    rep.check("R.contraction.rank", 15, contraction_rank(bold, coordinate_forms(6)))


def check_cp2(rep: Report) -> None:
    from .data import dataset
    from .simplicial import automorphism_group, check_manifold_properties, f_vector, verify_automorphisms
    from .wedge import cp2_match, top_span

    c = dataset("CP2_min").complex
    gens = dataset("CP2_generators").generators
    rep.check("C.dataset.facets", 36, len(c.facets))
    rep.check("C.dataset.f", [9, 36, 84, 90, 36], list(f_vector(c).f[1:]))
    p = check_manifold_properties(c, 2)
    rep.check("C.dataset.properties", [], p.failures)
    rep.check("C.dataset.euler", 3, p.euler)
    h = verify_automorphisms(c, [gens["h1"], gens["h2"]])
    rep.check("C.H.order", 9, h.order)
    rep.check("C.H.transitive", True, h.transitive)
    rep.check("C.H.facet_orbits", [9, 9, 9, 9], [len(o) for o in h.facet_orbits])
    rep.info("C.generated.order", verify_automorphisms(c, list(gens.values())).order)
    rep.check("C.automorphisms.order_at_least_54", True, len(automorphism_group(c)) >= 54)
    m = cp2_match(top_span(2), c, dataset("CP2_dictionary").dictionary, gens)
    rep.check("C.dictionary.highest_facet", [3, 4, 6, 8, 9], m.highest_facet)
    rep.check("C.dictionary.support_sizes", True, set(m.support_sizes) <= {1, 2, 4})
    rep.check("C.dictionary.one_facet_each", True, m.one_facet_each)
    rep.check("C.dictionary.failures", [], m.failures)


def check_hp2(rep: Report) -> None:
    from .data import HP2_M1, dataset, m1_vertices, pair_permutation
    from .exact import group_closure, orbits
    from .wedge import m1_weight_check

    gens = list(dataset("HP2_generators").generators.values())
    g = group_closure(gens)
    rep.check("H.group.order", 60, g.order())
    pg = [pair_permutation(x) for x in gens]
    rep.check("H.pairs.transitive", 1, len(orbits(pg, list(range(1, 16)))))
    rep.info("H.M1.vertices", m1_vertices())
    m = m1_weight_check(HP2_M1)
    rep.check("H.M1.weight", [5, 5, 2, 2, 2, 2], m.weight)
    rep.check("H.M1.highest", True, m.highest)
    rep.info("H.M1.dim", m.dim)


def check_defectivity(rep: Report, seed: int) -> None:
    from .wedge import defectivity_check, generic_decomposable_control

    for a in (1, 2):
        d = defectivity_check(a)
        rep.check(f"defectivity.a{a}.vanishing", True, d.vanishing)
        rep.info(f"defectivity.a{a}.dim", d.dim)
    rep.check("defectivity.control_nonzero", True, generic_decomposable_control(seed))


def check_euler(rep: Report, alg: str, seed: int, count: int = 5, points=None) -> None:
    from .branching import check_scheme_at, euler_char_at_point, regular_points, restriction_scheme
    from .simplicial import chi_top

    a = A_OF[alg]
    scheme = restriction_scheme(a)
    pts = points if points is not None else regular_points(scheme, count, seed)
    vals = []
    for p in pts:
        check_scheme_at(scheme, p)
        vals.append(euler_char_at_point(a, p))
    rep.info(f"{alg}.euler.points", [[str(x) for x in p] for p in pts])
    rep.check(f"{alg}.euler.values", [chi_top(a)] * len(pts), vals)


def check_invariants(rep: Report, alg: str) -> None:
    from .branching import cartan_splitting_check, expected_invariant_pattern, invariant_dims

    a = A_OF[alg]
    r = invariant_dims(a)
    rep.check(f"{alg}.invariants.rule_vs_constant_term", r.by_constant_term, r.by_rule)
    rep.check(f"{alg}.invariants.pattern", expected_invariant_pattern(a), r.by_rule)
    rep.check(f"{alg}.cartan_splitting", True, cartan_splitting_check(a))


def check_highrank(rep: Report, a: int, n: int) -> None:
    from .branching import expected_invariant_pattern, higher_invariants
    from .highrank import (
        alternating_sum,
        completeness,
        expected_alternating_sum,
        f_closed_form,
        f_highrank,
    )

    f = f_highrank(a, n)
    rep.info(f"a{a}.n{n}.f", f)
    rep.check(f"a{a}.n{n}.completeness", True, completeness(a, n))
    rep.check(f"a{a}.n{n}.alternating_sum", expected_alternating_sum(a, n), alternating_sum(a, n))
    if a in (1, 2):
        rep.check(f"a{a}.n{n}.closed_form", f, [f_closed_form(a, n, k) for k in range(a * n + 1)])
    if n <= 4:
        rep.check(f"a{a}.n{n}.invariants", expected_invariant_pattern(a, n), higher_invariants(a, n))


def check_rank2_agreement(rep: Report, a: int) -> None:
    from .cominuscule import identify_interval, make_pair
    from .highrank import f_highrank

    rep.check(f"a{a}.n2.rank2_agreement", identify_interval(make_pair(a)).dims(), f_highrank(a, 2))


# ---------------------------------------------------------------------------
# suites
# ---------------------------------------------------------------------------


def _suite_core(rep: Report, args) -> None:
    for alg in ALGEBRA_CHOICES:
        check_faces(rep, alg)
        check_core(rep, alg)
        check_links(rep, alg)


def _suite_triangulations(rep: Report, args) -> None:
    check_rp2(rep)
    check_cp2(rep)
    check_hp2(rep)
    check_defectivity(rep, args.seed)


def _suite_characters(rep: Report, args) -> None:
    for alg in ("R", "C", "H"):
        check_euler(rep, alg, args.seed)
        check_invariants(rep, alg)
    if args.skip_optional:
        rep.skip("O.euler.values", "optional tier skipped")
    else:
        check_euler(rep, "O", args.seed, count=3)


def _suite_highrank(rep: Report, args) -> None:
    for a in (1, 2, 4):
        check_rank2_agreement(rep, a)
        for n in range(2, 7):
            check_highrank(rep, a, n)


SUITE_FUNCS: Dict[str, Callable] = {
    "core": _suite_core,
    "triangulations": _suite_triangulations,
    "characters": _suite_characters,
    "highrank": _suite_highrank,
}


def _guard(rep: Report, name: str, fn: Callable, *a) -> None:
    try:
        fn(rep, *a)
    except SevlabError as e:
        rep.error(name, e)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def cmd_faces(args) -> Report:
    rep = Report("faces", {"algebra": args.algebra, "method": args.method}, args.seed)
    f = check_faces(rep, args.algebra, args.method)
    rep.table = [["k", "f_k"]] + [[k, x] for k, x in enumerate(f)]
    rep.body = "\n".join(f"f_{k} = {x}" for k, x in enumerate(f))
    return rep


def cmd_hasse(args) -> Report:
    from .cominuscule import hasse_dot, make_pair, pair_ideals

    rep = Report("hasse", {"algebra": args.algebra, "highlight": args.highlight}, args.seed)
    pair = make_pair(A_OF[args.algebra])
    rep.body = hasse_dot(pair, args.highlight)
    rep.info("nodes", len(pair_ideals(pair)))
    return rep


def cmd_links(args) -> Report:
    rep = Report("links", {"algebra": args.algebra}, args.seed)
    check_links(rep, args.algebra)
    return rep


def cmd_triangulation(args) -> Report:
    from .data import dataset
    from .simplicial import SimplicialComplex, automorphism_group, check_manifold_properties, f_vector, h_from_f

    rep = Report("triangulation", {"dataset": args.dataset, "file": args.file, "a": args.a}, args.seed)
    if args.file:
        with open(args.file) as fh:
            c = SimplicialComplex.from_text(fh.read())
    else:
        ds = dataset(args.dataset)
        if ds.complex is None:
            rep.info("payload", ds.payload())
            rep.info("sha256", ds.digest())
            return rep
        c = ds.complex
        rep.info("sha256", ds.digest())
    fv = f_vector(c)
    rep.info("f", list(fv.f[1:]))
    rep.info("h", list(h_from_f(fv).h))
    rep.info("euler", fv.euler())
    a = args.a if args.a is not None else {6: 1, 9: 2, 15: 4, 27: 8}.get(c.n_vertices)
    if a is not None:
        p = check_manifold_properties(c, a)
        rep.check("tight", True, p.tight)
        rep.check("dual", True, p.dual)
        rep.check("defective", True, p.defective)
        rep.check("pseudomanifold", True, p.pseudo)
    if args.automorphisms:
        rep.info("automorphism_order", len(automorphism_group(c)))
    if args.emit:
        rep.body = c.to_text()
    return rep


def cmd_wedge(args) -> Report:
    rep = Report("wedge", {"algebra": args.algebra}, args.seed)
    alg = args.algebra
    if alg == "R":
        _guard(rep, "R", check_rp2)
    elif alg == "C":
        _guard(rep, "C", check_cp2)
    elif alg == "H":
        _guard(rep, "H", check_hp2)
    else:
        rep.skip("O", "no explicit wedge model for a = 8")
    if alg in ("R", "C"):
        from .wedge import defectivity_check

        d = defectivity_check(A_OF[alg])
        rep.check(f"defectivity.a{d.a}.vanishing", True, d.vanishing)
    return rep


def _parse_point(text: str) -> List[Fraction]:
    return [Fraction(x) for x in text.split(",")]


def cmd_euler(args) -> Report:
    rep = Report("euler", {"algebra": args.algebra, "points": args.points, "point": args.point}, args.seed)
    pts = [_parse_point(p) for p in args.point] if args.point else None
    _guard(rep, "euler", check_euler, args.algebra, args.seed, args.points, pts)
    return rep


def cmd_invariants(args) -> Report:
    from .branching import expected_invariant_pattern, higher_invariants

    rep = Report("invariants", {"algebra": args.algebra, "n": args.n}, args.seed)
    if args.n == 2:
        _guard(rep, "invariants", check_invariants, args.algebra)
    else:
        a = A_OF[args.algebra]
        rep.check(f"{args.algebra}.n{args.n}.invariants", expected_invariant_pattern(a, args.n), higher_invariants(a, args.n))
    return rep


def cmd_highrank(args) -> Report:
    from .highrank import L_highrank, label_text

    rep = Report("highrank", {"a": args.a, "n": args.n}, args.seed)
    L = L_highrank(args.a, args.n)
    rep.body = "\n".join(f"L^{k}: " + " + ".join(f"{label_text(lab)}({d})" for lab, d in L[k]) for k in sorted(L))
    check_highrank(rep, args.a, args.n)
    if args.n == 2:
        check_rank2_agreement(rep, args.a)
    rep.table = [["k", "f_k"]] + [[k, sum(d for _, d in L[k + 1])] for k in range(len(L))]
    return rep


def cmd_verify(args) -> Report:
    rep = Report("verify", {"suite": args.suite, "skip_optional": args.skip_optional}, args.seed)
    names = list(SUITE_FUNCS) if args.suite == "all" else [args.suite]
    for s in names:
        _guard(rep, s, SUITE_FUNCS[s], args)
    return rep


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=0, help="seed for sampled torus points")
    common.add_argument("--format", choices=["text", "json", "csv"], default="text")
    common.add_argument("--out", help="write the report (or DOT / complex text) here")
    common.add_argument("--skip-optional", action="store_true", help="skip the a = 8 character tier")

    p = argparse.ArgumentParser(prog="sevlab", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("faces", parents=[common], help="face numbers by Klee relations and/or Kostant components")
    s.add_argument("--algebra", choices=ALGEBRA_CHOICES, required=True)
    s.add_argument("--method", choices=["klee", "kostant", "both"], default="both")
    s.set_defaults(func=cmd_faces)

    s = sub.add_parser("hasse", parents=[common], help="DOT picture of the ideal lattice")
    s.add_argument("--algebra", choices=ALGEBRA_CHOICES, required=True)
    s.add_argument("--highlight", choices=["interval", "dual", "both", "none"], default="both")
    s.set_defaults(func=cmd_hasse)

    s = sub.add_parser("links", parents=[common], help="vertex link face numbers")
    s.add_argument("--algebra", choices=ALGEBRA_CHOICES, required=True)
    s.set_defaults(func=cmd_links)

    s = sub.add_parser("triangulation", parents=[common], help="properties of a stored or given complex")
    g = s.add_mutually_exclusive_group(required=True)
    g.add_argument("--dataset", choices=["RP2_min", "CP2_min", "CP2_dictionary", "CP2_generators", "HP2_generators", "HP2_pair_table", "HP2_M1"])
    g.add_argument("--file", help="complex in the n_vertices= text format")
    s.add_argument("--a", type=int, choices=[1, 2, 4, 8])
    s.add_argument("--automorphisms", action="store_true", help="compute the full automorphism group")
    s.add_argument("--emit", action="store_true", help="print the complex in text format")
    s.set_defaults(func=cmd_triangulation)

    s = sub.add_parser("wedge", parents=[common], help="explicit exterior algebra checks")
    s.add_argument("--algebra", choices=ALGEBRA_CHOICES, required=True)
    s.set_defaults(func=cmd_wedge)

    s = sub.add_parser("euler", parents=[common], help="restricted Euler characteristic at torus points")
    s.add_argument("--algebra", choices=ALGEBRA_CHOICES, required=True)
    s.add_argument("--points", type=int, default=5)
    s.add_argument("--point", action="append", help="explicit point, comma separated rationals")
    s.set_defaults(func=cmd_euler)

    s = sub.add_parser("invariants", parents=[common], help="invariant lines per degree")
    s.add_argument("--algebra", choices=["R", "C", "H"], required=True)
    s.add_argument("--n", type=int, default=2)
    s.set_defaults(func=cmd_invariants)

    s = sub.add_parser("highrank", parents=[common], help="the family L^k for J_{n+1}")
    s.add_argument("--a", type=int, choices=[1, 2, 4], required=True)
    s.add_argument("--n", type=int, default=2)
    s.set_defaults(func=cmd_highrank)

    s = sub.add_parser("verify", parents=[common], help="run a verification suite")
    s.add_argument("suite", choices=SUITES, nargs="?", default="all")
    s.set_defaults(func=cmd_verify)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "euler" and args.algebra == "O" and args.skip_optional:
        print("a = 8 is the optional tier; drop --skip-optional", file=sys.stderr)
        return 2
    try:
        rep = args.func(args)
    except (SevlabError, ValueError) as e:
        print(f"sevlab: {type(e).__name__}: {e}", file=sys.stderr)
        return 2
    text = rep.render(args.format)
    if args.out:
        try:
            with open(args.out, "w") as fh:
                fh.write(rep.body if args.command == "hasse" and rep.body else text)
        except OSError as e:
            print(f"sevlab: {e}", file=sys.stderr)
            return 2
        if args.command == "hasse":
            sys.stdout.write(rep.render(args.format) if args.format != "text" else f"wrote {args.out}\n")
    else:
        sys.stdout.write(text)
    return 1 if rep.failures else 0


if __name__ == "__main__":
    sys.exit(main())
