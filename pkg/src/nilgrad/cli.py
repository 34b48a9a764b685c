"""Command-line front end.

    nilgrad model ID [--out FILE]
    nilgrad verify FILE|ID [--jacobi] [--charseq] [--graded] [--p2] [--expect-charseq 7,1,1]
    nilgrad extend FILE|ID (--degree D | --family t=2,k=2) [--nilindex P] [--charseq ..] [--p2]
    nilgrad cohomology FILE|ID [--degree D]
    nilgrad table 1|2 [--m-range 4-7] [--q-range 1-3]
    nilgrad roots TYPE [--prop1] [--pcheck]
    nilgrad repairs ID

Exit status: 0 success, 1 a check failed, 2 usage or input error.  With
``--json`` the machine-readable report goes to stdout and the text report to
stderr.  Nothing is read from the environment.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from .cohomology import h2_dim
from .exactla import as_fraction
from .extensions import (ExtensionSpec, enumerate_graded_extensions, fingerprint, graded_slice)
from .grading import natural_graded_verdict
from .liecore import (LieAlgebra, centralizer_property, characteristic_sequence, jacobi_violations,
                      lower_central_series)
from .models import (ModelId, ModelRangeError, ModelUnavailable, catalog_ids, claimed_charseq, make,
                     repair_report)

SCHEMA_VERSION = "1"

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# documents


def rational_str(x) -> str:
    x = as_fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rational(text) -> Fraction:
    if isinstance(text, int):
        return Fraction(text)
    if not isinstance(text, str):
        raise ValueError(f"coefficient {text!r} is not a rational string")
    try:
        return Fraction(text.strip())
    except ValueError:
        raise ValueError(f"coefficient {text!r} is not of the form p/q") from None


def to_document(g: LieAlgebra, provenance: str | None = None) -> dict:
    doc = {
        "schema_version": SCHEMA_VERSION,
        "dim": g.dim,
        "labels": list(g.labels),
        "brackets": [{"i": i + 1, "j": j + 1, "k": k + 1, "coeff": rational_str(c)}
                     for i, j, k, c in g.structure_constants()],
        "grading": list(g.degrees) if g.degrees is not None else None,
        "provenance": provenance,
    }
    return doc


def from_document(doc: dict) -> LieAlgebra:
    """Inverse of :func:`to_document`; indices in documents are 1-based."""
    if not isinstance(doc, dict):
        raise ValueError("document must be a JSON object")
    if str(doc.get("schema_version")) != SCHEMA_VERSION:
        raise ValueError(f"unsupported schema_version {doc.get('schema_version')!r}")
    n = doc.get("dim")
    if not isinstance(n, int) or n < 0:
        raise ValueError("dim must be a non-negative integer")
    table: dict = {}
    for e in doc.get("brackets", []):
        i, j, k = e["i"], e["j"], e["k"]
        if not (isinstance(i, int) and isinstance(j, int) and isinstance(k, int)):
            raise ValueError(f"bracket indices must be integers: {e}")
        if not i < j:
            raise ValueError(f"bracket entry needs i < j: {e}")
        if not (1 <= i and j <= n and 1 <= k <= n):
            raise ValueError(f"bracket index out of range: {e}")
        c = e["coeff"]
        if isinstance(c, str) and any(ch in c for ch in ".eE"):
            raise ValueError(f"coefficient {c!r} is not of the form p/q")
        table.setdefault((i - 1, j - 1), {})
        row = table[(i - 1, j - 1)]
        row[k - 1] = row.get(k - 1, Fraction(0)) + parse_rational(c)
    return LieAlgebra(n, table, doc.get("labels"), doc.get("grading"), doc.get("provenance"))


def _json_default(o):
    if isinstance(o, Fraction):
        return rational_str(o)
    if isinstance(o, tuple):
        return list(o)
    raise TypeError(f"cannot serialize {type(o).__name__}")


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True, default=_json_default)


def load_target(text: str) -> tuple[LieAlgebra, str | None]:
    """A document path or a model id; returns (algebra, model id or None)."""
    path = Path(text)
    if text.endswith(".json") or path.is_file():
        try:
            doc = json.loads(path.read_text())
        except OSError as exc:
            raise UsageError(f"cannot read {text}: {exc.strerror}") from None
        except json.JSONDecodeError as exc:
            raise UsageError(f"{text}: invalid JSON ({exc.msg})") from None
        try:
            g = from_document(doc)
        except (KeyError, ValueError, IndexError, TypeError) as exc:
            raise UsageError(f"{text}: {exc}") from None
        return g, doc.get("provenance")
    try:
        mid = ModelId.parse(text)
        return make(mid), str(mid)
    except (ModelRangeError, ModelUnavailable, ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None


def _int_list(text: str) -> tuple:
    try:
        return tuple(int(x) for x in text.replace("(", "").replace(")", "").split(",") if x.strip())
    except ValueError:
        raise UsageError(f"expected a comma separated list of integers, got {text!r}") from None


def _range(text: str) -> range:
    lo, sep, hi = text.partition("-")
    try:
        a = int(lo)
        b = int(hi) if sep else a
    except ValueError:
        raise UsageError(f"expected a range like 4-7, got {text!r}") from None
    if b < a:
        raise UsageError(f"empty range {text!r}")
    return range(a, b + 1)


def _emit(args, text_lines: list[str], payload: dict) -> None:
    text = "\n".join(text_lines)
    if args.json:
        if text:
            print(text, file=sys.stderr)
        print(dumps(payload))
    else:
        print(text)


def identify(g: LieAlgebra, seed: int = 0) -> list[str]:
    """Catalog models with the same fingerprint as g."""
    fp = None
    out = []
    for mid in catalog_ids(m_values=range(3, 10)):
        try:
            h = make(mid)
        except (ModelRangeError, ModelUnavailable):
            continue
        if h.dim != g.dim:
            continue
        if fp is None:
            fp = fingerprint(g, seed)
        if fingerprint(h, seed) == fp:
            out.append(str(mid))
    return out


# ---------------------------------------------------------------------------
# commands


def cmd_model(args) -> int:
    try:
        mid = ModelId.parse(args.id)
        g = make(mid)
    except (ModelRangeError, ModelUnavailable, ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    doc = to_document(g, str(mid))
    if args.out:
        Path(args.out).write_text(dumps(doc) + "\n")
        lines = [f"{mid}: dim {g.dim}, {len(doc['brackets'])} brackets -> {args.out}"]
        _emit(args, lines, {"model": str(mid), "dim": g.dim, "brackets": len(doc["brackets"]),
                            "out": args.out})
    else:
        print(dumps(doc))
    return OK


def verify_report(g: LieAlgebra, provenance: str | None, checks: list[str], expect_cs=None,
                  seed: int = 0) -> dict:
    results = []
    if "jacobi" in checks:
        bad = jacobi_violations(g)
        item = {"check": "jacobi", "computed": len(bad), "expected": 0, "pass": not bad}
        if bad:
            i, j, k, _ = bad[0]
            item["triple"] = [g.labels[i], g.labels[j], g.labels[k]]
        results.append(item)
        if bad:
            # the remaining invariants assume a Lie algebra
            return {"target": provenance, "dim": g.dim, "results": results,
                    "pass": False}
    if "charseq" in checks:
        cs = tuple(characteristic_sequence(g, seed=seed).blocks) if not g.is_abelian() else (1,) * g.dim
        exp = tuple(expect_cs) if expect_cs else None
        if exp is None and provenance:
            try:
                exp = tuple(claimed_charseq(ModelId.parse(provenance)))
            except (ValueError, KeyError):
                exp = None
        results.append({"check": "charseq", "computed": cs, "expected": exp,
                        "pass": exp is None or cs == exp})
    if "graded" in checks:
        v = natural_graded_verdict(g, seed=seed)
        results.append({"check": "graded", "computed": v.verdict, "expected": "naturally graded",
                        "graded_in_given_basis": v.graded_in_given_basis,
                        "invariants": {k: list(map(_plain, val)) for k, val in v.invariants.items()},
                        "pass": v.verdict == "naturally graded"})
    if "p2" in checks:
        rep = centralizer_property(g)
        results.append({"check": "p2", "computed": rep.variant, "expected": "P2", "holds_P": rep.holds_P,
                        "pass": rep.variant == "P2"})
    return {"target": provenance, "dim": g.dim, "results": results,
            "pass": all(r["pass"] for r in results)}


def _plain(x):
    return list(x) if isinstance(x, tuple) else x


def _fmt(x) -> str:
    if isinstance(x, (tuple, list)):
        return "(" + ",".join(str(a) for a in x) + ")"
    return str(x)


def cmd_verify(args) -> int:
    g, prov = load_target(args.target)
    checks = [c for c in ("jacobi", "charseq", "graded", "p2") if getattr(args, c)]
    if args.all or not checks:
        checks = ["jacobi", "charseq", "graded", "p2"]
    elif "jacobi" not in checks:
        checks.insert(0, "jacobi")
    expect = _int_list(args.expect_charseq) if args.expect_charseq else None
    rep = verify_report(g, prov, checks, expect, args.seed)
    lines = [f"{prov or args.target}: dim {g.dim}"]
    for r in rep["results"]:
        status = "pass" if r["pass"] else "FAIL"
        extra = ""
        if r["check"] == "jacobi" and not r["pass"]:
            extra = f"  Jacobi fails on ({', '.join(r['triple'])})"
        exp = "-" if r["expected"] is None else _fmt(r["expected"])
        lines.append(f"  {r['check']:8s} {status}  computed {_fmt(r['computed'])}  expected {exp}{extra}")
    lines.append("all checks pass" if rep["pass"] else "verification failed")
    _emit(args, lines, rep)
    return OK if rep["pass"] else FAIL


def _parse_family(text: str) -> tuple:
    fields = {}
    for item in text.split(","):
        key, eq, val = item.partition("=")
        if not eq:
            raise UsageError(f"bad family item {item!r}; expected t=..,k=..")
        fields.setdefault(key.strip(), []).append(val.strip())
    try:
        if "t" in fields:
            t = Fraction(fields.pop("t")[0])
        elif "q" in fields:
            t = Fraction(int(fields.pop("q")[0]) + 1, 2)
        else:
            raise UsageError("family needs t=.. (or q=.. for depth (q+1)/2)")
        ks = tuple(int(k) for k in fields.pop("k", []))
    except ValueError:
        raise UsageError(f"cannot read family {text!r}") from None
    if fields:
        raise UsageError(f"unknown family fields {sorted(fields)}")
    return (t, ks)


def cmd_extend(args) -> int:
    g, prov = load_target(args.base)
    if args.degree is None and args.family is None:
        raise UsageError("give --degree or --family")
    family = _parse_family(args.family) if args.family else None
    spec = ExtensionSpec(target_degree=args.degree, target_nilindex=args.nilindex,
                         required_charseq=_int_list(args.charseq) if args.charseq else None,
                         require_P2=args.p2, family=family, require_natural=not args.no_natural)
    try:
        spec.resolved_degree()
        classes = enumerate_graded_extensions(g, None, spec, seed=args.seed)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    out_dir = Path(args.out_dir) if args.out_dir else None
    if out_dir:
        out_dir.mkdir(parents=True, exist_ok=True)
    payload = {"base": prov, "count": len(classes), "classes": []}
    lines = [f"{prov or args.base}: {len(classes)} class{'es' if len(classes) != 1 else ''}"]
    for n, cls in enumerate(classes, 1):
        ext = cls.extended
        entry = {"document": to_document(ext, None), "certificate": cls.certificate,
                 "cochain": {f"{ext.labels[i]},{ext.labels[j]}": rational_str(c)
                             for (i, j), c in sorted(cls.cochain.coeffs.items())}}
        names = identify(ext, args.seed) if args.identify else []
        entry["matches"] = names
        payload["classes"].append(entry)
        terms = ""
        for (i, j), c in sorted(cls.cochain.coeffs.items()):
            sign = "-" if c < 0 else "+"
            terms += f" {sign} {rational_str(abs(c))} {ext.labels[i]}^{ext.labels[j]}"
        terms = terms[3:] if terms.startswith(" + ") else terms.lstrip()
        lines.append(f"  class {n}: d{ext.labels[-1]} = {terms}")
        lines.append(f"    stratum {cls.certificate['stratum']}, nilindex {cls.certificate['nilindex']}"
                     + (f", matches {', '.join(names)}" if names else ""))
        if out_dir:
            (out_dir / f"class_{n}.json").write_text(dumps(entry["document"]) + "\n")
    _emit(args, lines, payload)
    return OK


def cmd_cohomology(args) -> int:
    g, prov = load_target(args.target)
    payload = {"target": prov, "dim": g.dim, "h2_dim": h2_dim(g)}
    lines = [f"{prov or args.target}: dim H^2 = {payload['h2_dim']}"]
    if g.degrees is not None:
        degs = [args.degree] if args.degree is not None else range(2, 2 * max(g.degrees) + 1)
        slices = {}
        for d in degs:
            sl = graded_slice(g, d)
            if sl.support:
                slices[d] = {"pairs": len(sl.support), "cocycles": sl.cocycles.dim,
                             "coboundaries": sl.coboundaries.dim, "h": sl.h_dim}
                lines.append(f"  degree {d}: Z {sl.cocycles.dim}, B {sl.coboundaries.dim}, H {sl.h_dim}")
        payload["graded"] = slices
    elif args.degree is not None:
        raise UsageError("algebra carries no grading")
    _emit(args, lines, payload)
    return OK


def cmd_table(args) -> int:
    from .tables import TYPE_CORRECTIONS, table_rows
    which = args.which
    m_values = _range(args.m_range) if args.m_range else (range(4, 8) if which == 1 else range(4, 6))
    q_values = _range(args.q_range) if args.q_range else range(1, 4)
    rows = table_rows(which, m_values, q_values, seed=args.seed)
    lines = [f"Table {which}", f"  {'model':24s} {'dim':>4s}  {'ch.s.':14s} type"]
    payload = {"table": which, "rows": [], "unexplained": 0, "explained": 0}
    for r in rows:
        c = r.computed
        status = "ok"
        if r.diffs:
            status = "corrected" if r.ok else "MISMATCH"
        lines.append(f"  {r.model:24s} {_fmt(c['dim']):>4s}  {_fmt(c['ch.s.']):14s} {_fmt(c['type'])}  {status}")
        for col, printed, got, explained in r.diffs:
            tag = "explained by correction" if explained else "unexplained"
            lines.append(f"      {col}: printed {_fmt(printed)}, computed {_fmt(got)} ({tag})")
        if r.note:
            lines.append(f"      {r.note}")
        payload["rows"].append({"model": r.model, "params": r.params, "row": r.row.label,
                                "printed": {"dim": r.row.dim_text, "ch.s.": r.row.charseq_text,
                                            "type": r.row.type_text},
                                "expected": r.expected, "computed": r.computed,
                                "diffs": [{"column": d[0], "printed": d[1], "computed": d[2],
                                           "explained": d[3]} for d in r.diffs],
                                "ok": r.ok})
        payload["unexplained"] += sum(1 for d in r.diffs if not d[3])
        payload["explained"] += sum(1 for d in r.diffs if d[3])
    used = sorted({r.row.label for r in rows if r.diffs and r.ok})
    for label in used:
        fix = TYPE_CORRECTIONS[label]
        lines.append(f"  correction {label}: type read as {fix.corrected_text}; {fix.reason}")
    lines.append(f"{len(rows)} rows, {payload['explained']} corrected cells, "
                 f"{payload['unexplained']} unexplained diffs")
    _emit(args, lines, payload)
    return OK if payload["unexplained"] == 0 else FAIL


def cmd_roots(args) -> int:
    from .roots import (RootSystemError, borel_nilradical_P_check, delta_minus, format_root, height,
                        middle_height, parse_type, proposition1_pair)
    try:
        rs = parse_type(args.type)
    except RootSystemError as exc:
        raise UsageError(str(exc)) from None
    top = rs.highest_root
    payload = {"type": rs.name, "positive_roots": len(rs.positive_roots), "highest_root": top,
               "height": height(top), "strata": [len(s.roots) for s in rs.strata()]}
    lines = [f"{rs.name}: {len(rs.positive_roots)} positive roots, delta = {format_root(top)}, "
             f"ht(delta) = {height(top)}"]
    if args.prop1 or not (args.prop1 or args.pcheck):
        pair = proposition1_pair(rs)
        k = middle_height(rs)
        if pair is None:
            payload["prop1"] = None
            lines.append(f"  no pair in height {k} with a root sum")
        else:
            a, b = pair
            s = tuple(x + y for x, y in zip(a, b))
            ident = None
            if s == top:
                ident = "delta"
            else:
                for i in range(rs.rank):
                    if s == delta_minus(rs, i + 1):
                        ident = f"delta - a{i + 1}"
            payload["prop1"] = {"height": k, "w1": a, "w2": b, "sum": s, "identity": ident}
            lines.append(f"  w1 = {format_root(a)}, w2 = {format_root(b)} (height {k})")
            lines.append(f"  w1 + w2 = {format_root(s)}" + (f" = {ident}" if ident else ""))
    if args.pcheck:
        rep = borel_nilradical_P_check(rs)
        payload["pcheck"] = {"holds_P": rep.holds_P, "variant": rep.variant, "nilindex": rep.nilindex,
                             "k": rep.k, "witness": rep.witness}
        lines.append(f"  nilradical: nilindex {rep.nilindex}, (P) {'holds' if rep.holds_P else 'fails'}, "
                     f"variant {rep.variant}")
    _emit(args, lines, payload)
    return OK


def cmd_repairs(args) -> int:
    try:
        mid = ModelId.parse(args.id)
        entries = repair_report(mid, certify=not args.no_certificate)
    except (ModelRangeError, ValueError, KeyError) as exc:
        raise UsageError(str(exc)) from None
    lines = [f"{mid}: {len(entries)} entr{'y' if len(entries) == 1 else 'ies'}"]
    for e in entries:
        lines.append(f"  [{e.kind}] {e.location} ({e.source})")
        lines.append(f"    printed: {e.printed_variant}")
        lines.append(f"    adopted: {e.adopted_variant}")
        lines.append(f"    why: {e.justification or 'UNDOCUMENTED'}")
    payload = {"model": str(mid), "entries": [e.__dict__ for e in entries]}
    _emit(args, lines, payload)
    return OK if all(e.justification for e in entries) else FAIL


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="nilgrad", description="Exact computations with graded nilpotent Lie algebras.")
    sub = p.add_subparsers(dest="command", required=True)

    def common(sp):
        sp.add_argument("--json", action="store_true", help="machine-readable report on stdout")
        sp.add_argument("--seed", type=int, default=0, help="seed for characteristic-vector sampling")

    sp = sub.add_parser("model", help="write a catalog model as a JSON document")
    sp.add_argument("id", help='model id, e.g. "Q:m=4" or "g21q:m=4,t=1,q=2"')
    sp.add_argument("--out", help="output file (default: print the document)")
    common(sp)
    sp.set_defaults(func=cmd_model)

    sp = sub.add_parser("verify", help="check Jacobi, characteristic sequence, grading, (P2)")
    sp.add_argument("target", help="document path or model id")
    for flag in ("jacobi", "charseq", "graded", "p2", "all"):
        sp.add_argument(f"--{flag}", action="store_true")
    sp.add_argument("--expect-charseq", help="expected characteristic sequence, e.g. 7,1,1")
    common(sp)
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("extend", help="graded central extensions by one dimension, up to equivalence")
    sp.add_argument("base", help="document path or model id")
    sp.add_argument("--degree", type=int, help="degree of the new vector")
    sp.add_argument("--family", help="t=..,k=..[,k=..]; t may be a half-integer like 3/2, or give q=.. for (q+1)/2")
    sp.add_argument("--nilindex", type=int, help="required nilindex of the extension")
    sp.add_argument("--charseq", help="required characteristic sequence, e.g. 7,1,1")
    sp.add_argument("--p2", action="store_true", help="keep only (P2) extensions")
    sp.add_argument("--no-natural", action="store_true", help="skip the natural-grading filter")
    sp.add_argument("--identify", action="store_true", help="name catalog models with the same fingerprint")
    sp.add_argument("--out-dir", help="write one document per class here")
    common(sp)
    sp.set_defaults(func=cmd_extend)

    sp = sub.add_parser("cohomology", help="dim H^2 and its graded slices")
    sp.add_argument("target", help="document path or model id")
    sp.add_argument("--degree", type=int)
    common(sp)
    sp.set_defaults(func=cmd_cohomology)

    sp = sub.add_parser("table", help="recompute a summary table and diff it against the printed cells")
    sp.add_argument("which", type=int, choices=(1, 2))
    sp.add_argument("--m-range", help="e.g. 4-7")
    sp.add_argument("--q-range", help="e.g. 1-3 (table 2)")
    common(sp)
    sp.set_defaults(func=cmd_table)

    sp = sub.add_parser("roots", help="root system data, the middle-height pair and the nilradical check")
    sp.add_argument("type", help='e.g. "E8", "B5"')
    sp.add_argument("--prop1", action="store_true", help="middle-height pair with a root sum")
    sp.add_argument("--pcheck", action="store_true", help="centralizer property of the Borel nilradical")
    common(sp)
    sp.set_defaults(func=cmd_roots)

    sp = sub.add_parser("repairs", help="printed vs adopted laws of a model")
    sp.add_argument("id")
    sp.add_argument("--no-certificate", action="store_true", help="skip the Jacobi/charseq certificate")
    common(sp)
    sp.set_defaults(func=cmd_repairs)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"nilgrad: error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
