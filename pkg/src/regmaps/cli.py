"""Command line front end.

Exit statuses: 0 success, 1 verification mismatch, 2 parse error,
3 contract violation, 4 theorem-violation diagnostic, 5 resource limit.
Environment variables are never consulted; all knobs are flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from .census import (DEFAULT_CENSUS_MAX_ORDER, census_classify,
                     enumerate_flagged, enumerate_oriented)
from .classify import (certify_sylow_structure, classify, detect_p_map,
                       identify_exceptional)
from .coset_enum import DEFAULT_MAX_COSETS, todd_coxeter
from .errors import (ContractViolation, ParseError, ResourceLimitExceeded,
                     TheoremViolation)
from .grammar import (GroupFile, _is_prime, format_group_file,
                      parse_group_file, realize_group_file)
from .group import DEFAULT_MAX_ORDER, coset_action, is_primitive, o_p
from .maps import quotient_map
from .reporting import TOOL_VERSION, map_section, new_document
from .verify import all_passed, verify_corpus


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ContractViolation(f"cannot read {path}: {exc}") from exc


def _realize(text: str, args):
    gf = parse_group_file(text)
    return realize_group_file(
        gf,
        max_cosets=args.max_cosets or DEFAULT_MAX_COSETS,
        max_order=getattr(args, "max_order", None) or DEFAULT_MAX_ORDER)


def _select_map(rz, wanted):
    if wanted is not None:
        if wanted not in rz.maps:
            raise ContractViolation(f"no map named {wanted!r} in the file")
        return rz.maps[wanted], wanted
    if len(rz.maps) == 1:
        name = next(iter(rz.maps))
        return rz.maps[name], name
    if not rz.maps:
        raise ContractViolation("the file declares no maps")
    raise ContractViolation("several maps declared; pick one with --map")


def _vertex_primitive(m) -> bool:
    perms, _ = coset_action(m.group, m.vertex_subgroup)
    return is_primitive(perms, m.group.order // m.vertex_subgroup.order)


def _emit(doc, args) -> None:
    if args.json:
        print(doc.to_json())
        return
    g = doc.group
    print(f"group: order {g['group_order']}, solvable={g['solvable']},"
          f" p-core orders {g['p_core_orders']}")
    for sec in doc.maps:
        line = (f"map {sec['name']} ({sec['kind']}):"
                f" V/E/F = {sec['vertices']}/{sec['edges']}/{sec['faces']},"
                f" euler {sec['euler']}, {sec['genus_kind']}={sec['genus']},"
                f" valency {sec['valency']}")
        if sec.get("degenerate"):
            line += f", degenerate {sec['degenerate']}"
        print(line)
        if "p" in sec:
            print(f"  p-map ({sec['p']},{sec['k']}): normal={sec['normal']},"
                  f" status={sec['orientation_status']},"
                  f" exceptional={sec['exceptional_case']},"
                  f" quotient_order={sec['quotient_order']}")
        elif "exceptional_case" in sec:
            print(f"  exceptional family: {sec['exceptional_case']}")
        if "vertex_primitive" in sec:
            print(f"  vertex action primitive: {sec['vertex_primitive']}")
        if "sylow_structure" in sec:
            print(f"  sylow structure: {sec['sylow_structure']}")
    for d in doc.diagnostics:
        print(f"diagnostic: {d}")


def cmd_analyze(args) -> int:
    text = _read(args.file)
    rz = _realize(text, args)
    m, name = _select_map(rz, args.map)
    doc = new_document("analyze", text, rz.group)
    status = 0
    cl = st = None
    primitive = None
    if not m.degenerate:
        primitive = _vertex_primitive(m)
        if detect_p_map(m) is not None:
            try:
                cl = classify(m)
                if cl.normal and primitive:
                    st = certify_sylow_structure(m)
            except TheoremViolation as exc:
                doc.diagnostics.append(str(exc))
                status = 4
    section = map_section(name, m, cl, st)
    if primitive is not None:
        section["vertex_primitive"] = primitive
    doc.maps.append(section)
    _emit(doc, args)
    return status


def cmd_quotient(args) -> int:
    if args.p < 2 or not _is_prime(args.p):
        raise ContractViolation(f"--p must be a prime, got {args.p}")
    text = _read(args.file)
    rz = _realize(text, args)
    m, name = _select_map(rz, args.map)
    core = o_p(rz.group, args.p)
    qm, _ = quotient_map(m, core)
    doc = new_document("quotient", text, rz.group)
    doc.group["p"] = args.p
    doc.group["p_core_order"] = core.order
    status = 0
    section = map_section(f"{name}/core", qm)
    source_nonnormal = False
    if not m.degenerate and detect_p_map(m) is not None:
        try:
            source_nonnormal = not classify(m).normal
        except TheoremViolation as exc:
            doc.diagnostics.append(str(exc))
            status = 4
    try:
        section["exceptional_case"] = identify_exceptional(qm, args.p).label()
    except TheoremViolation as exc:
        section["exceptional_case"] = None
        doc.diagnostics.append(f"no exceptional identification: {exc}")
        if source_nonnormal:
            status = 4
    doc.maps.append(section)
    _emit(doc, args)
    return status


def cmd_census(args) -> int:
    text = _read(args.file)
    rz = _realize(text, args)
    bound = args.max_order or DEFAULT_CENSUS_MAX_ORDER
    if args.kind == "oriented":
        entries = enumerate_oriented(rz.group, max_order=bound,
                                     threads=args.threads)
    else:
        entries = enumerate_flagged(rz.group, max_order=bound,
                                    threads=args.threads)
    census_classify(entries)
    doc = new_document("census", text, rz.group)
    rows = []
    status = 0
    for entry in entries:
        row = {
            "tuple": list(entry.tuple_),
            "class_size": entry.class_size,
            "degenerate": list(entry.degenerate),
        }
        row.update(entry.report.to_dict())
        if entry.classification is not None:
            row.update(entry.classification.to_dict())
        rows.append(row)
        for v in entry.violations:
            doc.diagnostics.append(f"tuple {entry.tuple_}: {v}")
            status = 4
    doc.census = {
        "kind": args.kind,
        "class_count": len(entries),
        "total_tuples": sum(e.class_size for e in entries),
        "entries": rows,
    }
    if args.json:
        print(doc.to_json())
    else:
        print(f"group: order {rz.group.order}; {args.kind} census:"
              f" {len(entries)} classes,"
              f" {doc.census['total_tuples']} tuples")
        for row in rows:
            extra = ""
            if "p" in row:
                extra = (f", p-map ({row['p']},{row['k']})"
                         f" normal={row['normal']}"
                         f" exceptional={row['exceptional_case']}")
            if row["degenerate"]:
                extra += f", degenerate {row['degenerate']}"
            print(f"  {tuple(row['tuple'])}: x{row['class_size']},"
                  f" V/E/F = {row['vertices']}/{row['edges']}/{row['faces']},"
                  f" {row['genus_kind']}={row['genus']}{extra}")
        for d in doc.diagnostics:
            print(f"diagnostic: {d}")
    return status


def cmd_verify_corpus(args) -> int:
    rows = verify_corpus(directory=args.corpus_dir,
                         max_cosets=args.max_cosets or DEFAULT_MAX_COSETS)
    ok = all_passed(rows)
    if args.json:
        print(json.dumps({
            "tool_version": TOOL_VERSION,
            "passed": ok,
            "checks": [{"example": r.example, "check": r.check,
                        "ok": r.ok, "detail": r.detail} for r in rows],
        }, sort_keys=True, indent=2))
    else:
        for r in rows:
            mark = "PASS" if r.ok else "FAIL"
            tail = "" if r.ok else f"  [{r.detail}]"
            print(f"{mark}  {r.example:24} {r.check}{tail}")
        good = sum(1 for r in rows if r.ok)
        print(f"{good}/{len(rows)} checks passed")
    return 0 if ok else 1


def cmd_tc(args) -> int:
    text = _read(args.file)
    gf = parse_group_file(text)
    if gf.mode != "gens":
        raise ContractViolation("tc needs a presentation-mode file")
    ct = todd_coxeter(gf.presentation, (),
                      max_cosets=args.max_cosets or DEFAULT_MAX_COSETS)
    exported = None
    if args.export_perms:
        perm_gf = GroupFile(
            name=gf.name, mode="perm", gen_names=gf.gen_names,
            presentation=None,
            perm_cycles=tuple(tuple(p.cycles()) for p in ct.gen_perms()),
            matrices=(), modulus=None, maps=gf.maps)
        exported = format_group_file(perm_gf)
    if args.json:
        doc = {"tool_version": TOOL_VERSION, "cosets": ct.n}
        if exported is not None:
            doc["perm_file"] = exported
        print(json.dumps(doc, sort_keys=True, indent=2))
    else:
        print(f"cosets: {ct.n}")
        if exported is not None:
            print(exported, end="")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="regmaps",
        description="Algebraic maps on surfaces: analysis, quotients,"
                    " censuses and coset enumeration over group files.")
    p.add_argument("--version", action="version", version=TOOL_VERSION)
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp, max_order=True):
        sp.add_argument("--json", action="store_true",
                        help="machine-readable output")
        sp.add_argument("--max-cosets", type=int, default=None,
                        help="coset enumeration bound")
        if max_order:
            sp.add_argument("--max-order", type=int, default=None,
                            help="group order bound")

    a = sub.add_parser("analyze", help="report on one declared map")
    a.add_argument("file")
    a.add_argument("--map", default=None, help="map name to analyze")
    common(a)
    a.set_defaults(func=cmd_analyze)

    q = sub.add_parser("quotient", help="quotient a map by its p-core")
    q.add_argument("file")
    q.add_argument("--map", default=None)
    q.add_argument("--p", type=int, required=True, help="the prime p")
    common(q)
    q.set_defaults(func=cmd_quotient)

    c = sub.add_parser("census", help="all maps on the group, up to"
                                      " isomorphism")
    c.add_argument("file")
    c.add_argument("--kind", choices=("oriented", "flagged"), required=True)
    c.add_argument("--threads", type=int, default=1)
    common(c)
    c.set_defaults(func=cmd_census)

    v = sub.add_parser("verify-corpus", help="run the pinned regression"
                                             " suite on the bundled corpus")
    v.add_argument("--corpus-dir", default=None,
                   help="read corpus files from a directory instead of the"
                        " package data")
    common(v, max_order=False)
    v.set_defaults(func=cmd_verify_corpus)

    t = sub.add_parser("tc", help="coset enumeration on a presentation")
    t.add_argument("file")
    t.add_argument("--export-perms", action="store_true",
                   help="print the enumerated generators as a"
                        " permutation-mode group file")
    common(t, max_order=False)
    t.set_defaults(func=cmd_tc)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except ResourceLimitExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 5
    except TheoremViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 4
    except ContractViolation as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
