"""Command line front end: ``burnside-induction <verb> --group ...``.

Exit codes: 0 success, 1 a requested verification failed, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import warnings
from typing import Sequence

from .burnside import marks_of, subgroup_key, table_of_marks
from .decomposition import (
    SubgroupCollection,
    idempotent_expansion_reduced,
    lefschetz,
    marks_by_fixed_points,
)
from .exactnum import fmt_rational
from .induction import (
    BUILDERS,
    RingSpec,
    all_subgroups,
    canonicity_check,
    centralizer_collection,
    cyclic_subgroups,
    formula,
    formula_from_json,
    mackey_restrict_formula,
    primordial_subgroups,
    verify_character,
    verify_idempotent_support,
    wedge_report,
)
from .permgroup import GroupError, PermGroup, Permutation, named_group

VERBS = ("group", "subgroups", "marks", "lefschetz", "formula", "verify", "restrict", "canonicity", "wedge")


class UsageError(Exception):
    pass


def parse_collection(G: PermGroup, spec: str) -> SubgroupCollection:
    """``cyclic``, ``all``, ``primordial:p,q``, ``centralizers-of:<spec>`` or a JSON
    list of generator lists. Explicit lists are closed under conjugation."""
    spec = spec.strip()
    if spec == "cyclic":
        return cyclic_subgroups(G)
    if spec == "all":
        return all_subgroups(G)
    if spec == "primordial" or spec.startswith("primordial:"):
        return primordial_subgroups(G, RingSpec.parse(spec.partition(":")[2]))
    if spec.startswith("centralizers-of:"):
        return centralizer_collection(parse_collection(G, spec.partition(":")[2]))
    try:
        data = json.loads(spec)
    except json.JSONDecodeError as exc:
        raise UsageError(f"malformed collection: {spec!r}") from exc
    if not isinstance(data, list) or not all(isinstance(x, list) for x in data):
        raise UsageError("a JSON collection must be a list of generator lists")
    members = []
    for gens in data:
        try:
            members.append(G.subgroup([Permutation.parse(G.degree, str(s)) for s in gens]))
        except (GroupError, ValueError) as exc:
            raise UsageError(f"malformed collection member {gens!r}: {exc}") from exc
    return SubgroupCollection.closed(G, members)


def default_collection(which: str, ring: RingSpec) -> str:
    primes = "all" if ring.all_primes else ",".join(str(p) for p in sorted(ring.noninvertible_primes))
    base = f"primordial:{primes}"
    return base if which == "subgroup" else f"centralizers-of:{base}"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--group", help="S4, A4, C12, D8, Q8, V4 or perm:<degree>:<gen>;<gen>")
    common.add_argument("--collection", help="cyclic | all | primordial:p,q | centralizers-of:<collection> | JSON")
    common.add_argument("--decomposition", choices=("subgroup", "centralizer"), default="subgroup")
    common.add_argument("--ring-primes", default="none", help="p,q | all | none")
    common.add_argument("--verify", action="store_true")
    common.add_argument("--json", action="store_true")
    common.add_argument("--to", help="subgroup to restrict to, as a group spec")
    common.add_argument("--order-cap", type=int)
    common.add_argument("--formula", help="formula JSON file, '-' for stdin")
    common.add_argument("--recipe", choices=sorted(BUILDERS), default="subgroup-closed-cyclic")
    common.add_argument("--prime", type=int)

    parser = argparse.ArgumentParser(prog="burnside-induction", description="Induction formulae from Burnside ring Lefschetz invariants.")
    sub = parser.add_subparsers(dest="verb", required=True)
    for verb in VERBS:
        sub.add_parser(verb, parents=[common])
    return parser


def _group(args) -> PermGroup:
    if not args.group:
        raise UsageError("--group is required")
    return named_group(args.group, order_cap=args.order_cap)


def _read_formula(args, G: PermGroup | None):
    if not args.formula:
        raise UsageError("--formula is required")
    try:
        if args.formula == "-":
            text = sys.stdin.read()
        else:
            with open(args.formula) as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read formula: {exc}") from exc
    try:
        return formula_from_json(text, G)
    except (KeyError, TypeError, json.JSONDecodeError) as exc:
        raise UsageError(f"malformed formula file: {exc}") from exc


def _class_record(cls) -> dict:
    H = cls.representative
    return {
        "number": cls.number,
        "order": cls.order,
        "class_size": cls.size,
        "generators": [str(g) for g in H.generators],
        "key": subgroup_key(H),
    }


def _emit(out, args, data: dict, lines: list[str]) -> None:
    if args.json:
        out.write(json.dumps(data, indent=2, sort_keys=True) + "\n")
    else:
        out.write("\n".join(lines) + "\n")


def cmd_group(args, out) -> int:
    G = _group(args)
    classes = G.conjugacy_classes_of_subgroups()
    data = {
        "name": G.name,
        "order": G.order,
        "degree": G.degree,
        "generators": [str(g) for g in G.generators],
        "element_classes": [{"representative": str(G.elements[i]), "size": s} for i, s in G.element_classes()],
        "subgroups": len(G.all_subgroups()),
        "subgroup_classes": len(classes),
    }
    lines = [
        f"group {G.name}: order {G.order}, degree {G.degree}",
        "generators: " + " ".join(data["generators"]),
        f"subgroups: {data['subgroups']} in {data['subgroup_classes']} conjugacy classes",
        "element classes: " + ", ".join(f"{e['representative']} x{e['size']}" for e in data["element_classes"]),
    ]
    _emit(out, args, data, lines)
    return 0


def cmd_subgroups(args, out) -> int:
    G = _group(args)
    recs = [_class_record(c) for c in G.conjugacy_classes_of_subgroups()]
    lines = [
        f"H{r['number']}: order {r['order']}, {r['class_size']} conjugate(s), generated by {' '.join(r['generators']) or '()'}"
        for r in recs
    ]
    _emit(out, args, {"group": G.name, "classes": recs}, lines)
    return 0


def cmd_marks(args, out) -> int:
    G = _group(args)
    tom = table_of_marks(G)
    rows = [list(r) for r in tom.marks]
    data = {"group": G.name, "classes": [_class_record(c) for c in tom.classes], "marks": rows}
    lines = [f"table of marks of {G.name} (row H, column K: |(G/H)^K|)", str(tom)]
    _emit(out, args, data, lines)
    return 0


def _collection(args, G: PermGroup) -> SubgroupCollection:
    ring = RingSpec.parse(args.ring_primes)
    return parse_collection(G, args.collection or default_collection(args.decomposition, ring))


def cmd_lefschetz(args, out) -> int:
    G = _group(args)
    E = _collection(args, G)
    x = lefschetz(E, args.decomposition)
    marks = marks_of(x)
    poset_marks = marks_by_fixed_points(E, args.decomposition)
    reduced = idempotent_expansion_reduced(E, args.decomposition)
    consistent = list(marks) == poset_marks and [m - 1 for m in marks] == reduced
    data = {
        "group": G.name,
        "decomposition": args.decomposition,
        "collection": [subgroup_key(c.representative) for c in E.classes],
        "transitive": x.to_records(),
        "marks": [fmt_rational(m) for m in marks],
        "reduced_idempotent": [str(v) for v in reduced],
        "consistent": consistent,
    }
    lines = [f"{args.decomposition} decomposition invariant of {G.name}, {len(E.classes)} classes in E"]
    lines += [
        f"  {r['coefficient']} [G/H] with H = <{','.join(r['generators']) or '1'}> of order {r['order']}"
        for r in data["transitive"]
    ]
    lines.append("marks: " + " ".join(data["marks"]))
    lines.append("reduced idempotent coordinates: " + " ".join(data["reduced_idempotent"]))
    lines.append(f"fixed-point posets agree: {str(consistent).lower()}")
    _emit(out, args, data, lines)
    return 0 if consistent or not args.verify else 1


def cmd_formula(args, out) -> int:
    G = _group(args)
    ring = RingSpec.parse(args.ring_primes)
    E = _collection(args, G)
    f = formula(G, E, args.decomposition, ring)
    verified = None
    if args.verify:
        verified = verify_character(f).ok
        if ring.all_primes or ring.noninvertible_primes:
            verified = verified and verify_idempotent_support(G, E, args.decomposition).ok
    if args.json:
        out.write(f.to_json(verified) + "\n")
    else:
        out.write(f.display() + "\n")
        out.write(f"hypothesis_ok: {str(f.hypothesis_ok).lower()}\n")
        if verified is not None:
            out.write(f"verified: {str(verified).lower()}\n")
    return 1 if verified is False else 0


def cmd_verify(args, out) -> int:
    G = _group(args) if args.group else None
    f = _read_formula(args, G)
    rep = verify_character(f)
    data = rep.to_dict()
    lines = [f"verified: {str(rep.ok).lower()}"] + [f"  at {r['element']}: residual {r['residual']}" for r in data["residuals"]]
    _emit(out, args, data, lines)
    return 0 if rep.ok else 1


def cmd_restrict(args, out) -> int:
    G = _group(args) if args.group else None
    f = _read_formula(args, G)
    if not args.to:
        raise UsageError("--to is required")
    K = named_group(args.to, order_cap=args.order_cap)
    r = mackey_restrict_formula(f, K)
    ok = verify_character(r).ok if args.verify else None
    if args.json:
        out.write(r.to_json(ok) + "\n")
    else:
        out.write(r.display() + "\n")
        if ok is not None:
            out.write(f"verified: {str(ok).lower()}\n")
    return 1 if ok is False else 0


def cmd_canonicity(args, out) -> int:
    G = _group(args)
    if not args.to:
        raise UsageError("--to is required")
    K = named_group(args.to, order_cap=args.order_cap)
    rep = canonicity_check(G, args.recipe, K)
    data = {
        "recipe": args.recipe,
        "canonical": rep.canonical,
        "restricted": rep.restricted.to_dict(),
        "direct": rep.direct.to_dict(),
    }
    lines = [
        f"recipe {args.recipe}: canonical = {str(rep.canonical).lower()}",
        "restricted: " + rep.restricted.display(),
        "direct:     " + rep.direct.display(),
    ]
    _emit(out, args, data, lines)
    return 0


def cmd_wedge(args, out) -> int:
    G = _group(args)
    if args.prime is None:
        raise UsageError("--prime is required")
    if args.collection is None:
        args.collection = f"centralizers-of:primordial:{args.prime}"
    E = parse_collection(G, args.collection)
    rep = wedge_report(formula(G, E, "centralizer"), args.prime)
    lines = [f"formal wedge splitting of BG for {G.name} at p = {args.prime}, hypothesis_ok: {str(rep['hypothesis_ok']).lower()}"]
    if rep["warning"]:
        lines.append("warning: " + rep["warning"])
    lines += [f"  {w['coefficient']} BC with C = {w['centralizer']}" for w in rep["wedge"]]
    _emit(out, args, rep, lines)
    return 0


COMMANDS = {
    "group": cmd_group,
    "subgroups": cmd_subgroups,
    "marks": cmd_marks,
    "lefschetz": cmd_lefschetz,
    "formula": cmd_formula,
    "verify": cmd_verify,
    "restrict": cmd_restrict,
    "canonicity": cmd_canonicity,
    "wedge": cmd_wedge,
}


def run(argv: Sequence[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 2
    try:
        with warnings.catch_warnings():
            warnings.simplefilter("always")
            warnings.showwarning = lambda msg, *a, **k: print(f"warning: {msg}", file=sys.stderr)
            return COMMANDS[args.verb](args, out)
    except (UsageError, GroupError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
