"""Command line: check, gen, decompose, regular, subspace.

Exit codes: 0 when every requested law holds, 1 when one fails, 2 on bad
input (unreadable or malformed files, size caps, unsupported operations).
"""
import argparse
import json
import sys
from fractions import Fraction

from . import builders
from .dimension import CARDINALITY_WAIVER, classify_type, is_irreducible
from .equivalence import perspectivity, scan_regular_relations, verify_regular
from .errors import LatticeError, NotALattice, OrthoError
from .fileformat import build, parse_lattice_text, serialize
from .lattice import CONTINUITY_WAIVER, poset_from_covers, validate_complete_lattice
from .modularity import check_distributive, check_modular
from .ortho import OrthoLattice, center, check_r_property, is_abelian, is_factorial
from .suite import SUITES, run_property_suite
from .subspace import q2_snapshot, q4_snapshot

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2


class InputError(Exception):
    pass


def ratio(x):
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def _emit(data, as_json, text_lines):
    if as_json:
        print(json.dumps(data, sort_keys=True, indent=2))
    else:
        print("\n".join(text_lines))


def _read(path):
    try:
        with open(path, encoding="utf-8") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None


def _labels(L, ids):
    return [L.labels[int(i)] for i in ids]


def build_report(parsed, enumerate_relations=False):
    """Report for a parsed file; lattice and ortho failures become violations."""
    flags = dict.fromkeys(
        ("lattice", "modular", "distributive", "ortho", "abelian", "factorial", "r_property", "irreducible"))
    report = {
        "name": parsed.name,
        "element_count": len(parsed.elements),
        "flags": flags,
        "center": [],
        "minimal": [],
        "type_tag": "unclassified",
        "regular_relations_found": "not-enumerated",
        "violations": [],
        "waivers": [CONTINUITY_WAIVER, CARDINALITY_WAIVER],
    }
    try:
        L = build(parsed.__class__(parsed.name, parsed.elements, parsed.covers, []))
    except NotALattice:
        P = poset_from_covers(parsed.elements, parsed.covers)
        fail = validate_complete_lattice(P).first_failure()
        flags["lattice"] = False
        report["violations"].append({"law": "lattice", "detail": fail.name,
                                     "witness": _labels(P, fail.witness or ())})
        return report
    flags["lattice"] = True
    mod = check_modular(L)
    flags["modular"] = mod.holds
    if not mod:
        report["violations"].append({"law": "modular", "witness": _labels(L, mod.witness)})
    flags["distributive"] = check_distributive(L).holds
    flags["irreducible"] = is_irreducible(L)
    report["minimal"] = _labels(L, L.atoms())
    OL = L
    if parsed.ortho:
        try:
            OL = build(parsed)
        except OrthoError as exc:
            flags["ortho"] = False
            report["violations"].append({"law": "ortho", "detail": str(exc),
                                         "witness": list(exc.witness or ())})
            return report
        flags["ortho"] = True
        flags["abelian"] = is_abelian(OL)
        flags["factorial"] = is_factorial(OL)
        report["center"] = _labels(OL, sorted(center(OL)))
        r = check_r_property(OL)
        flags["r_property"] = r.ok
        if not r.ok:
            f = r.first_failure()
            report["violations"].append({"law": "r_property", "witness": _labels(OL, f.witness)})
    cls = classify_type(OL)
    report["type_tag"] = cls.type_tag
    report["classification"] = {"failed_stage": cls.failed_stage, "reason": cls.reason,
                                "stages_passed": cls.stages}
    if cls.dimension is not None:
        report["dimensions"] = {OL.labels[i]: ratio(v) for i, v in cls.dimension.dim_of.items()}
    if enumerate_relations and isinstance(OL, OrthoLattice):
        report["regular_relations_found"] = len(scan_regular_relations(OL).relations)
    return report


def cmd_check(args):
    parsed = parse_lattice_text(_read(args.file))
    report = build_report(parsed, args.enumerate)
    lines = [f"{report['name']}: {report['element_count']} elements, type {report['type_tag']}"]
    lines += [f"  {k}: {v}" for k, v in sorted(report["flags"].items())]
    if "dimensions" in report:
        lines.append("  dimensions: " + " ".join(f"{k}={v}" for k, v in report["dimensions"].items()))
    for v in report["violations"]:
        lines.append(f"  VIOLATION {v['law']}: {' '.join(v['witness'])}")
    _emit(report, args.json, lines)
    return EXIT_VIOLATION if report["violations"] else EXIT_OK


def _parse_factors(spec):
    out = []
    for item in spec.split(","):
        kind, _, arg = item.strip().partition(":")
        out.append(_generate(kind, int(arg) if arg else None))
    return out


def _generate(kind, param=None, factors=None):
    if kind == "boolean":
        return builders.gen_boolean(param if param is not None else 2)
    if kind == "lm":
        return builders.gen_horizontal_sum(param if param is not None else 2)
    if kind == "chain":
        return builders.gen_chain(param if param is not None else 2)
    if kind == "pentagon":
        return builders.gen_pentagon()
    if kind == "hexagon":
        return builders.gen_hexagon()
    if kind == "twogen":
        return builders.gen_two_generator_ortho()
    if kind == "q2":
        return q2_snapshot()
    if kind == "q4":
        return q4_snapshot()
    if kind == "product":
        if not factors:
            raise InputError("product needs --factors, e.g. boolean:1,lm:2")
        return builders.gen_product(_parse_factors(factors))
    raise InputError(f"unknown kind {kind}")


GEN_KINDS = ("boolean", "lm", "chain", "pentagon", "hexagon", "twogen", "q2", "q4", "product")


def cmd_gen(args):
    param = args.atoms if args.kind == "boolean" else args.m if args.kind == "lm" else args.length
    L = _generate(args.kind, param, args.factors)
    name = args.kind if param is None else f"{args.kind}{param}"
    sys.stdout.write(serialize(L, name))
    return EXIT_OK


def cmd_decompose(args):
    L = build(parse_lattice_text(_read(args.file)))
    if not isinstance(L, OrthoLattice):
        raise InputError("decompose needs an orthocomplement")
    sig = builders.decompose_central(L)
    data = {"name": L.name, "element_count": L.n, **sig.to_dict()}
    text = f"{L.name}: 2^{sig.boolean_exponent}" + "".join(f" x L_{m}" for m in sig.sum_sizes)
    _emit(data, args.json, [text])
    return EXIT_OK


def cmd_regular(args):
    L = build(parse_lattice_text(_read(args.file)))
    if not isinstance(L, OrthoLattice):
        raise InputError("regular needs an orthocomplement")
    rel = perspectivity(L)
    diag = verify_regular(L, rel)
    data = {
        "name": L.name,
        "perspectivity": {
            "classes": rel.labelled_classes(),
            "closure_needed": rel.closure_needed,
            "regular": diag.ok,
            "failures": [{"law": c.name, "witness": _labels(L, c.witness or ())} for c in diag.failures()],
        },
        "regular_relations_found": "not-enumerated",
    }
    lines = [f"{L.name}: perspectivity classes " + " ".join("{" + ",".join(c) + "}" for c in rel.labelled_classes()),
             f"  regular: {diag.ok}"]
    for c in diag.failures():
        lines.append(f"  VIOLATION {c.name}: {' '.join(_labels(L, c.witness or ()))}")
    if args.enumerate:
        scan = scan_regular_relations(L)
        data["regular_relations_found"] = len(scan.relations)
        data["partitions_scanned"] = scan.scanned
        data["relations"] = [r.labelled_classes() for r in scan.relations]
        data["equal_to_perspectivity"] = [r == rel for r in scan.relations]
        lines.append(f"  regular relations: {len(scan.relations)} (of {scan.scanned} antichain partitions)")
        for r in scan.relations:
            lines.append("    " + " ".join("{" + ",".join(c) + "}" for c in r.labelled_classes())
                         + ("  = perspectivity" if r == rel else ""))
    _emit(data, args.json, lines)
    return EXIT_OK if diag.ok else EXIT_VIOLATION


def cmd_subspace(args):
    report = run_property_suite(args.dim, args.trials, args.seed, args.suite)
    data = report.to_dict()
    lines = [f"Q^{args.dim}, {args.trials} trials, seed {args.seed}, suite {args.suite}"]
    for name, t in report.laws.items():
        status = "ok" if t.passed == t.checked else "FAIL"
        lines.append(f"  {status:4} {name}: {t.passed}/{t.checked} (nonvacuous {t.nonvacuous})")
        if t.counterexample:
            lines.append(f"       counterexample: {' '.join(t.counterexample)}")
    _emit(data, args.json, lines)
    return EXIT_OK if report.ok else EXIT_VIOLATION


def _dim(text):
    v = int(text)
    if not 2 <= v <= 6:
        raise argparse.ArgumentTypeError("dimension must be in [2, 6]")
    return v


def _seed(text):
    v = int(text)
    if not 0 <= v < 2 ** 64:
        raise argparse.ArgumentTypeError("seed must be an unsigned 64-bit integer")
    return v


def _positive(text):
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be at least 1")
    return v


def make_parser():
    p = argparse.ArgumentParser(prog="hilbert-lattice", description="Finite ortholattice checks and the subspace model of Q^n.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="run every structural check on a lattice file")
    c.add_argument("file")
    c.add_argument("--json", action="store_true")
    c.add_argument("--enumerate", action="store_true", help="count regular relations by brute force")
    c.set_defaults(func=cmd_check)

    g = sub.add_parser("gen", help="write a generated lattice file to stdout")
    g.add_argument("kind", choices=GEN_KINDS)
    g.add_argument("--m", type=_positive, help="number of orthogonal pairs for lm")
    g.add_argument("--atoms", type=_positive, help="number of atoms for boolean")
    g.add_argument("--length", type=_positive, help="number of elements for chain")
    g.add_argument("--factors", help="comma list for product, e.g. boolean:1,lm:2")
    g.set_defaults(func=cmd_gen)

    d = sub.add_parser("decompose", help="split a modular ortholattice along its center")
    d.add_argument("file")
    d.add_argument("--json", action="store_true")
    d.set_defaults(func=cmd_decompose)

    r = sub.add_parser("regular", help="perspectivity classes and regularity")
    r.add_argument("file")
    r.add_argument("--json", action="store_true")
    r.add_argument("--enumerate", action="store_true", help="scan all partitions (small lattices only)")
    r.set_defaults(func=cmd_regular)

    s = sub.add_parser("subspace", help="seeded property suite on subspaces of Q^n")
    s.add_argument("--dim", type=_dim, default=3)
    s.add_argument("--trials", type=_positive, default=200)
    s.add_argument("--seed", type=_seed, default=0)
    s.add_argument("--suite", choices=SUITES, default="all")
    s.add_argument("--json", action="store_true")
    s.set_defaults(func=cmd_subspace)
    return p


def main(argv=None):
    parser = make_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (InputError, LatticeError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
