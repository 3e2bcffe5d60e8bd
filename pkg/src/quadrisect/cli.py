"""
Command-line interface.

Exit codes: 0 success, 1 a validation failure (including a representation
that does not extend over the tangles), 2 a usage or parse error.
"""

import argparse
import json
import sys
from itertools import combinations

from .constructions import lens_diagram, mutual_braid_move, spun_diagram, sum_diagrams
from .covers import CoverError, branched_cover_homology, check_extends, cyclic_genus_bound, riemann_hurwitz_genus
from .heegaard import extract_heegaard, heegaard_complex
from .homology import chain_homology
from .io import FormatError, parse_diagram, parse_rho, serialize_diagram, serialize_rho
from .presentations import link_group, sphere_group, surface_group, tangle_group
from .tangles import BraidWord, build_surface_complex
from .validate import validate_diagram

OK, FAILED, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def dump_json(report):
    """Deterministic JSON: sorted keys, compact separators, trailing newline."""
    return json.dumps(report, sort_keys=True, separators=(",", ":")) + "\n"


def _read(path):
    try:
        if path == "-":
            return sys.stdin.read()
        with open(path) as fh:
            return fh.read()
    except OSError as exc:
        raise UsageError(f"{path}: {exc.strerror}") from None


def _load_diagram(path):
    try:
        return parse_diagram(_read(path))
    except (FormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _load_rho(path, D):
    try:
        return parse_rho(_read(path), D.punctures)
    except (FormatError, ValueError) as exc:
        raise UsageError(f"{path}: {exc}") from None


def _parse_braid(text, strands=None):
    letters = BraidWord.parse(text, 10**9).letters
    if strands is None:
        top = max((i for i, _ in letters), default=1) + 1
        strands = top + top % 2
    return BraidWord(strands, letters)


def _pair_key(key):
    return f"{key[0]}{key[1]}"


# Commands.  Each returns (exit code, report dict, text lines).


def cmd_validate(args):
    D = _load_diagram(args.diagram)
    rep = validate_diagram(D, tietze=not args.no_tietze, budget=args.budget)
    lines = [f"{c.status:12s} {c.name}  ({c.detail})" for c in rep.checks]
    open_checks = sum(c.status == "inconclusive" for c in rep.checks)
    if not rep.passed:
        lines.append(f"INVALID: {len(rep.failures())} check(s) failed")
    elif open_checks:
        lines.append(f"no check failed; {open_checks} inconclusive")
    else:
        lines.append("all checks passed (necessary conditions only)")
    return (OK if rep.passed else FAILED), {"command": "validate", **rep.to_dict()}, lines


def cmd_surface(args):
    D = _load_diagram(args.diagram)
    S = build_surface_complex(D)
    report = {
        "command": "surface",
        "bridges": D.bridges,
        "euler_characteristic": S.euler_characteristic,
        "orientable": S.orientable,
        "genus": S.genus,
        "components": S.components,
        "pair_counts": {_pair_key(k): v for k, v in sorted(S.pair_counts.items())},
        "triple_counts": {str(k): v for k, v in sorted(S.triple_counts.items())},
    }
    kind = "genus" if S.orientable else "cross-caps"
    lines = [
        f"bridges: {D.bridges}",
        f"euler characteristic: {S.euler_characteristic}",
        f"orientable: {'yes' if S.orientable else 'no'} ({kind} {S.genus})",
        "c_ij: " + " ".join(f"c{k}={v}" for k, v in report["pair_counts"].items()),
        "s_i: " + " ".join(f"s{k}={v}" for k, v in report["triple_counts"].items()),
    ]
    return OK, report, lines


def cmd_heegaard(args):
    D = _load_diagram(args.diagram)
    order = tuple(int(c) - 1 for c in args.order)
    if sorted(order) != [0, 1, 2, 3]:
        raise UsageError("--order must be a permutation of 1234")
    H = extract_heegaard(D, order)
    h1 = chain_homology(heegaard_complex(H))[1]
    report = {"command": "heegaard", "H1": h1.to_json(), **H.to_dict()}
    lines = [
        f"H1(Y) = {h1}",
        f"alpha curves: {len(H.alpha)}, beta curves: {len(H.beta)}",
    ]
    lines += [f"alpha{r}: {' '.join(map(str, c))}" for r, c in enumerate(H.alpha)]
    lines += [f"beta{s}: {' '.join(map(str, c))}" for s, c in enumerate(H.beta)]
    label = "Q" if H.orientable else "Q (mod 2)"
    lines.append(f"{label}:")
    lines += ["  " + " ".join(f"{v:3d}" for v in row) for row in H.Q]
    return OK, report, lines


def cmd_presentations(args):
    D = _load_diagram(args.diagram)
    T = D.tangles
    groups = {"sphere": sphere_group(D.bridges)}
    for i in range(4):
        groups[f"tangle{i + 1}"] = tangle_group(T[i])
    for i, j in combinations(range(4), 2):
        groups[f"link{i + 1}{j + 1}"] = link_group(T[i], T[j])
    for trio in combinations(range(4), 3):
        groups["surface" + "".join(str(k + 1) for k in trio)] = surface_group(*(T[k] for k in trio))
    report = {"command": "presentations", "groups": {}}
    lines = []
    for name, G in groups.items():
        names = G.generators
        report["groups"][name] = {
            "generators": list(names),
            "relators": [r.format(names) for r in G.relators],
        }
        lines.append(f"[{name}]")
        lines.append(G.to_text().rstrip())
    return OK, report, lines


def cmd_cover(args):
    D = _load_diagram(args.diagram)
    rho = _load_rho(args.rho, D)
    basis = args.basis.split() if args.basis else None
    try:
        res = branched_cover_homology(D, rho, tree=args.tree, basis=basis, details=True)
    except CoverError as exc:
        return FAILED, {"command": "cover", "error": str(exc)}, [f"error: {exc}"]
    lags = [[list(v) for v in L.basis] for L in res.lagrangian_data.lagrangians]
    report = {
        "command": "cover",
        "sheets": rho.sheets,
        "genus": res.genus,
        "basis": list(res.lagrangian_data.basis_names),
        "lagrangians": lags,
        "H": res.to_json(),
    }
    lines = [f"sheets: {rho.sheets}", f"central surface genus: {res.genus}"]
    for k, L in enumerate(lags, start=1):
        lines.append(f"L{k}: " + " ".join("(" + ",".join(map(str, v)) + ")" for v in L))
    lines += [f"H{k} = {g}" for k, g in enumerate(res.groups)]
    return OK, report, lines


def cmd_rh(args):
    D = _load_diagram(args.diagram)
    rho = _load_rho(args.rho, D)
    report = {"command": "rh", "sheets": rho.sheets, "bridges": D.bridges}
    try:
        g = riemann_hurwitz_genus(D.bridges, rho)
    except CoverError as exc:
        report["error"] = str(exc)
        return FAILED, report, [f"error: {exc}"]
    bound = cyclic_genus_bound(D.bridges, rho.sheets)
    extends = check_extends(rho, D)
    report.update({"genus": g, "cyclic_bound": bound, "extends": extends})
    lines = [f"genus {g}", f"cyclic bound {bound}"]
    if not extends:
        lines.append("warning: rho does not extend over the tangles")
    return (OK if extends else FAILED), report, lines


def _emit_diagram(D, args, kind):
    text = serialize_diagram(D)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    report = {"command": "gen", "kind": kind, "bridges": D.bridges, "q4d": text}
    return OK, report, [] if args.output else text.rstrip("\n").splitlines()


def cmd_gen_spun(args):
    try:
        beta = _parse_braid(args.word, args.strands)
        D = spun_diagram(beta)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_diagram(D, args, "spun")


def cmd_gen_lens(args):
    if args.p < 1:
        raise UsageError("p must be positive")
    return _emit_diagram(lens_diagram(args.p), args, "lens")


def cmd_gen_sum(args):
    D1, D2 = _load_diagram(args.first), _load_diagram(args.second)
    try:
        D = sum_diagrams(D1, D2, mode=args.mode)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    return _emit_diagram(D, args, f"{args.mode} sum")


def cmd_move_braid(args):
    D = _load_diagram(args.diagram)
    rho = _load_rho(args.rho, D) if args.rho else None
    try:
        w = _parse_braid(args.word, D.punctures)
        new, new_rho = mutual_braid_move(D, w, rho)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    text = serialize_diagram(new)
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    report = {"command": "move", "word": str(w), "q4d": text}
    lines = [] if args.output else text.rstrip("\n").splitlines()
    if new_rho is not None:
        rho_text = serialize_rho(new_rho)
        report["rho"] = rho_text
        if args.rho_output:
            with open(args.rho_output, "w") as fh:
                fh.write(rho_text)
        else:
            lines += ["# transported rho"] + ["# " + s for s in rho_text.rstrip("\n").splitlines()]
    return OK, report, lines


def build_parser():
    parser = argparse.ArgumentParser(
        prog="quadrisect",
        description="Bridge quadrisections of 3-manifolds in S^5.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def command(name, func, help_text, diagram=True):
        p = sub.add_parser(name, help=help_text)
        if diagram:
            p.add_argument("diagram", help=".q4d file, or - for stdin")
        p.add_argument("--json", action="store_true", help="machine-readable report")
        p.set_defaults(func=func)
        return p

    p = command("validate", cmd_validate, "run the necessary-condition checks")
    p.add_argument("--no-tietze", action="store_true", help="skip the free-group checks")
    p.add_argument("--budget", type=int, default=20_000, help="Tietze step budget")

    command("surface", cmd_surface, "central surface: chi, genus, orientability, c_ij, s_i")

    p = command("heegaard", cmd_heegaard, "extended Heegaard diagram and H1 of the 3-manifold")
    p.add_argument("--order", default="1234", help="tangle order, e.g. 1324")

    command("presentations", cmd_presentations, "export the tangle, link and surface groups")

    p = command("cover", cmd_cover, "homology of the branched cover of S^5")
    p.add_argument("--rho", required=True, help=".rho file")
    p.add_argument("--tree", default="bfs", choices=["bfs", "dfs", "bfs-reverse"])
    p.add_argument("--basis", help="lifted generators spanning H1 of the cover surface, e.g. 'x3_1 x4_1'")

    p = command("rh", cmd_rh, "Riemann-Hurwitz genus of the cover surface")
    p.add_argument("--rho", required=True, help=".rho file")

    gen = sub.add_parser("gen", help="generate a diagram")
    gsub = gen.add_subparsers(dest="kind", required=True)

    def generator(name, func, help_text):
        p = gsub.add_parser(name, help=help_text)
        p.add_argument("-o", "--output", help="write the .q4d here instead of stdout")
        p.add_argument("--json", action="store_true")
        p.set_defaults(func=func)
        return p

    p = generator("spun", cmd_gen_spun, "spin of a knot given as a plat braid")
    p.add_argument("-w", "--word", required=True, help="plat braid, e.g. \"s2 s2 s2\"")
    p.add_argument("--strands", type=int, help="strand count (default: smallest even that fits)")
    p = generator("lens", cmd_gen_lens, "lens space L(p,1)")
    p.add_argument("-p", type=int, required=True)
    p = generator("sum", cmd_gen_sum, "distant or connected sum of two diagrams")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--mode", default="connected", choices=["connected", "distant"])

    move = sub.add_parser("move", help="modify a diagram")
    msub = move.add_subparsers(dest="kind", required=True)
    p = msub.add_parser("braid", help="mutual braid move: append a braid to every tangle")
    p.add_argument("diagram")
    p.add_argument("-w", "--word", required=True)
    p.add_argument("--rho", help="representation to transport along the move")
    p.add_argument("-o", "--output")
    p.add_argument("--rho-output")
    p.add_argument("--json", action="store_true")
    p.set_defaults(func=cmd_move_braid)
    return parser


def run(argv=None, out=None, err=None):
    """Run one command; returns the exit code."""
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return USAGE if exc.code else OK
    try:
        code, report, lines = args.func(args)
    except UsageError as exc:
        err.write(f"quadrisect: error: {exc}\n")
        return USAGE
    report["exit_code"] = code
    if args.json:
        out.write(dump_json(report))
    else:
        for line in lines:
            out.write(line + "\n")
    return code


def main(argv=None):
    sys.exit(run(argv))


if __name__ == "__main__":
    main()
