"""Command-line front end.

    hfkbraid <command> "<braid word>" [--json] [--dot] [--max-crossings N]
             [--no-leaf-invariants]

Exit codes: 0 ok, 1 parse error, 2 failed precondition, 3 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys

from .braid import BraidSyntaxError, BraidWord, EvenStrandCount, format_braid, parse_braid
from .diagram import DisconnectedDiagram, closure_diagram
from .floer import (GenusBoundError, NotStaircase, SignPatternError, eftekhary_check_braid,
                    hfk_from_torsion, staircase_hfk, staircase_parse, torsion_coeffs)
from .foxcalc import TorsionNormalizationError, format_group_element, h1_of_monodromy, refined_torsion
from .freegroup import abelianize, format_word, monodromy_of_braid
from .intlinalg import NotRationalHomologySphere, alexander_from_monodromy
from .laurent import LaurentPoly
from .restree import (TreeCapExceeded, TreeConfig, det_additivity_audit, is_quasi_alternating_annular,
                      leaf_census, tree_to_dict, tree_to_dot, wehrli_tree)

COMMANDS = ("alex", "h1", "torsion", "hfk", "hfplus", "tree", "qprime", "staircase", "report")

QPRIME_CAP = 14

PRECONDITION_ERRORS = (EvenStrandCount, NotRationalHomologySphere, TorsionNormalizationError,
                       SignPatternError, GenusBoundError, NotStaircase, DisconnectedDiagram)


def _poly(p: LaurentPoly):
    return {"pairs": p.to_pairs(), "text": str(p)}


def _group(g):
    return {"invariants": list(g.invariants), "free_rank": g.free_rank, "order": g.order, "text": str(g)}


# -- stages: each returns (json-able dict, list of text lines) ------------

def stage_alex(w: BraidWord):
    w.require_odd()
    f = monodromy_of_braid(w)
    a = abelianize(f)
    delta = alexander_from_monodromy(a)
    images = [format_word(img, "γ") for img in f.images]
    data = {"monodromy": images, "A": a, "alexander": _poly(delta)}
    lines = [f"γ{i + 1} -> {img}" for i, img in enumerate(images)]
    lines += ["A = " + json.dumps(a), f"Delta = {delta}"]
    return data, lines


def stage_h1(w: BraidWord):
    w.require_odd()
    g = h1_of_monodromy(monodromy_of_braid(w))
    data = _group(g)
    data["generator_images"] = [format_group_element(h) for h in g.generator_images]
    lines = [f"H1 = {g}"]
    lines += [f"γ{i + 1} -> {x}" for i, x in enumerate(data["generator_images"])]
    return data, lines


def stage_torsion(w: BraidWord):
    tor = refined_torsion(w)
    polys = tor.polys()
    data = {"group": _group(tor.group),
            "coefficients": [{"label": format_group_element(h), "poly": _poly(p)} for h, p in polys.items()],
            "unit": {"sign": tor.unit_sign, "t_shift": tor.unit_t_shift,
                     "translation": format_group_element(tor.unit_translation)},
            "conjugation_symmetric": tor.conjugation_symmetric}
    lines = [f"H1 = {tor.group}"]
    lines += [f"{format_group_element(h):>12}: {p}" for h, p in polys.items()]
    return data, lines


def stage_hfk(w: BraidWord):
    tor = refined_torsion(w)
    tab = hfk_from_torsion(tor, w.genus)
    cols = []
    lines = [f"genus {tab.genus}; columns j = {tab.genus}..{-tab.genus} (grading = j mod 2)"]
    for s in tab.labels:
        col = tab.column(s)
        cols.append({"label": format_group_element(s), "ranks": [[j, r] for j, r in sorted(col.items())]})
        cells = " ".join(f"{col.get(j, 0):>3}" for j in range(tab.genus, -tab.genus - 1, -1))
        lines.append(f"{format_group_element(s):>12}: {cells}")
    lines.append(f"top rank {tab.top_rank()}, total rank {tab.total_rank()}")
    data = {"genus": tab.genus, "columns": cols, "top_rank": tab.top_rank(), "total_rank": tab.total_rank()}
    return data, lines


def stage_hfplus(w: BraidWord):
    w.require_odd()
    delta = alexander_from_monodromy(abelianize(monodromy_of_braid(w)))
    tc = torsion_coeffs(delta)
    data = {"t": [[s, v] for s, v in sorted(tc.t.items())], "b": [[s, v] for s, v in sorted(tc.b.items())]}
    lines = ["t_s: " + ", ".join(f"t{s}={v}" for s, v in sorted(tc.t.items())),
             "b_s: " + ", ".join(f"b{s}={v}" for s, v in sorted(tc.b.items()))]
    return data, lines


def _zsum(d):
    return " + ".join(f"Z^{r}_({g})" if r != 1 else f"Z_({g})" for g, r in sorted(d.items())) or "0"


def stage_staircase(w: BraidWord):
    rep = eftekhary_check_braid(w)
    f = staircase_parse(rep.staircase)
    hf = staircase_hfk(f)
    data = {"staircase": format_braid(rep.staircase), "m": f.m, "s": f.s, "T": f.T_total,
            "hfk_top": [[g, r] for g, r in sorted(hf.top.items())],
            "hfk_next": [[g, r] for g, r in sorted(hf.next_level.items())],
            "hf_plus": [[g, r] for g, r in sorted(hf.hf_plus.items())],
            "hf_plus_total": rep.hf_plus_total,
            "cohomology": {"h0": rep.cohomology.h0, "h1": rep.cohomology.h1,
                           "chi_curves": rep.cohomology.chi_curves, "total": rep.cohomology.total},
            "agrees": rep.agrees}
    lines = []
    if rep.staircase != w:
        lines.append(f"not in staircase form; using the equivalent staircase braid {format_braid(rep.staircase)}")
    lines += [f"m = {f.m}, s = {f.s}, T = {f.T_total}",
              f"HFK(j=g)   = {_zsum(hf.top)}",
              f"HFK(j=g-1) = {_zsum(hf.next_level)}",
              f"HF+(s_(g-2)) = {_zsum(hf.hf_plus)}  (total {rep.hf_plus_total})",
              f"H*(F - C): H0 = {rep.cohomology.h0}, H1 = {rep.cohomology.h1} (total {rep.cohomology.total})"]
    if not rep.agrees:
        lines.append(f"MISMATCH: HF+ total {rep.hf_plus_total} != H* total {rep.cohomology.total} "
                     f"for the loops of {format_braid(w)}")
    return data, lines


def stage_tree(w: BraidWord, config: TreeConfig, dot: bool = False):
    d = closure_diagram(w)
    root = wehrli_tree(d, config)
    census = leaf_census(root)
    data = {"leaves": len(census), "diagram_determinant": d.determinant(),
            "additivity_failures": [list(x) for x in det_additivity_audit(root)],
            "census": [{"id": r.node_id, "components": r.components, "link_determinant": r.link_determinant,
                        "alexander": None if r.alexander is None else _poly(r.alexander),
                        "determinant": r.determinant, "signature": r.signature} for r in census],
            "tree": tree_to_dict(root)}
    if dot:
        return data, tree_to_dot(root).splitlines()
    lines = [f"{len(census)} leaves, diagram determinant {d.determinant()}"]
    for r in census:
        extra = "" if r.alexander is None else f"  Delta = {r.alexander}, det {r.determinant}, sigma {r.signature}"
        lines.append(f"{r.node_id}: {r.components} comp.{extra}")
    return data, lines


def _cert_dict(c):
    return {"crossing": c.crossing, "determinant": c.determinant, "children": [_cert_dict(x) for x in c.children]}


def stage_qprime(w: BraidWord, config: TreeConfig):
    d = closure_diagram(w)
    ok, cert = is_quasi_alternating_annular(d, max_crossings=config.max_crossings)
    data = {"in_Q_prime": ok, "certificate": _cert_dict(cert) if cert else None}
    return data, [f"Q': {'yes' if ok else 'no certificate found'}"]


def _run(cmd: str, w: BraidWord, args):
    cap = args.max_crossings
    if cap is None:
        cap = QPRIME_CAP if cmd == "qprime" else TreeConfig.max_crossings
    config = TreeConfig(max_crossings=cap, leaf_invariants=not args.no_leaf_invariants)
    simple = {"alex": stage_alex, "h1": stage_h1, "torsion": stage_torsion, "hfk": stage_hfk,
              "hfplus": stage_hfplus, "staircase": stage_staircase}
    if cmd in simple:
        return simple[cmd](w)
    if cmd == "tree":
        return stage_tree(w, config, args.dot)
    if cmd == "qprime":
        return stage_qprime(w, config)
    # report: every stage that applies, with failures recorded as warnings
    data = {"input": format_braid(w)}
    lines = [f"input: {format_braid(w)}"]
    warnings = []
    for name in ("alex", "h1", "torsion", "hfk", "hfplus", "staircase", "tree"):
        try:
            sd, sl = stage_tree(w, config) if name == "tree" else simple[name](w)
        except PRECONDITION_ERRORS + (TreeCapExceeded,) as e:
            warnings.append(f"{name}: {type(e).__name__}: {e}")
            continue
        if name == "tree":
            sd.pop("tree")
        data[name] = sd
        lines += ["", f"[{name}]"] + sl
    data["warnings"] = warnings
    if warnings:
        lines += ["", "[warnings]"] + warnings
    return data, lines


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(prog="hfkbraid", description="Knot Floer ranks of the lifted braid axis.")
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("braid", help='e.g. "b=3: s1 s2^-1 s1 s2^-1"')
    ap.add_argument("--json", action="store_true")
    ap.add_argument("--dot", action="store_true", help="DOT export (tree only)")
    ap.add_argument("--max-crossings", type=int, default=None,
                    help=f"crossing cap (default {TreeConfig.max_crossings} for tree, {QPRIME_CAP} for qprime)")
    ap.add_argument("--no-leaf-invariants", action="store_true")
    args = ap.parse_args(argv)
    try:
        w = parse_braid(args.braid)
    except BraidSyntaxError as e:
        print(f"parse error: {e}", file=sys.stderr)
        return 1
    try:
        data, lines = _run(args.command, w, args)
    except PRECONDITION_ERRORS as e:
        print(f"precondition failed ({type(e).__name__}): {e}", file=sys.stderr)
        return 2
    except TreeCapExceeded as e:
        print(f"cap exceeded: {e}", file=sys.stderr)
        return 3
    if args.json and not (args.command == "tree" and args.dot):
        data = {"command": args.command, "input": format_braid(w), **data}
        print(json.dumps(data, indent=2, ensure_ascii=False))
    else:
        print("\n".join(lines))
    return 0


if __name__ == "__main__":
    sys.exit(main())
