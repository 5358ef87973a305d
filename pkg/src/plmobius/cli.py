"""Command-line front end: ``plmobius verify | export | enumerate``."""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import claims, embeddings, exports
from . import factorizations as fz

EXIT_OK, EXIT_REFUTED, EXIT_USAGE, EXIT_IO = 0, 1, 2, 3


class UsageError(Exception):
    pass


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _claim_ids(args) -> list[str]:
    ids = list(args.ids)
    if args.claims:
        ids += [s.strip() for s in args.claims.split(",") if s.strip()]
    return ids or ["all"]


def verify_report(ids) -> tuple[dict, int]:
    try:
        reports = claims.run_claims(ids)
    except KeyError as e:
        raise UsageError(f"unknown claim id {e.args[0]!r}") from None
    counts = {v: sum(r.verdict == v for r in reports) for v in claims.VERDICTS}
    status = EXIT_REFUTED if claims.run_failed(reports) else EXIT_OK
    doc = {
        "schema": claims.SCHEMA,
        "claims": [r.as_dict() for r in reports],
        "summary": counts,
        "exit_status": status,
    }
    return doc, status


def _verify_text(doc: dict) -> str:
    width = max((len(c["claim_id"]) for c in doc["claims"]), default=0)
    lines = [f"{c['claim_id']:<{width}}  {c['verdict']:<9}  {c['details']}" for c in doc["claims"]]
    s = doc["summary"]
    lines.append(" ".join(f"{k}={s[k]}" for k in claims.VERDICTS))
    return "\n".join(lines) + "\n"


def enumerate_report(kind: str) -> dict:
    if kind == "rainbow-factorizations":
        canon = fz.canonical_rainbow_factorization()
        rows = [
            {
                "index": k,
                "colors": "".join(str(c) for c in f.colors),
                "canonical": f.colors == canon.colors,
                "plane_rule": fz.classify_four_cycles(f).plane_rule_holds(),
            }
            for k, f in enumerate(fz.enumerate_rainbow_factorizations())
        ]
        return {"schema": claims.SCHEMA, "kind": kind, "edges": [list(e) for e in fz.build_q4().edges],
                "count": len(rows), "entries": rows}
    if kind == "toroidal-subgraphs":
        rows = [
            {
                "signature": s.signature(),
                "plane": list(s.plane),
                "deleted": [list(e) for e in sorted(s.deleted)],
                "surface": s.surface.as_dict(),
                "census": {str(k): v for k, v in s.census().items()},
                "faces": [list(w.vertices) for w in s.complex.faces],
            }
            for s in embeddings.twelve_toroidal_subgraphs()
        ]
        return {"schema": claims.SCHEMA, "kind": kind, "count": len(rows), "entries": rows}
    raise UsageError(f"unknown enumeration {kind!r}")


def _enumerate_text(doc: dict) -> str:
    lines = []
    for row in doc["entries"]:
        if doc["kind"] == "rainbow-factorizations":
            flag = " canonical" if row["canonical"] else ""
            lines.append(f"{row['index']:3d} {row['colors']}{flag}")
        else:
            s = row["surface"]
            lines.append(f"{row['signature']} plane x{row['plane'][0]}x{row['plane'][1]} "
                         f"V={s['V']} E={s['E']} F={s['F']} chi={s['chi']}")
    lines.append(f"count={doc['count']}")
    return "\n".join(lines) + "\n"


def do_export(kind: str, out: str) -> list[str]:
    try:
        files = exports.export_files(kind)
    except ValueError as e:
        raise UsageError(str(e)) from None
    base = Path(out)
    written = []
    for name, text in sorted(files.items()):
        path = base / name
        try:
            base.mkdir(parents=True, exist_ok=True)
            with open(path, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(text)
        except OSError as e:
            raise OSError(f"cannot write {path}: {e.strerror or e}") from None
        written.append(str(path))
    return written


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="plmobius", description="Exact checks for the Mobius-strip compound.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", help="run the claims ledger")
    v.add_argument("ids", nargs="*", help="claim ids, or 'all' (default)")
    v.add_argument("--claims", help="comma-separated claim ids")
    v.add_argument("--format", choices=("text", "json"), default="text")
    v.add_argument("--out", help="write the report here instead of stdout")

    e = sub.add_parser("export", help="write canonical files")
    e.add_argument("kind", choices=exports.EXPORT_KINDS)
    e.add_argument("--out", default=".", help="output directory")

    n = sub.add_parser("enumerate", help="stream an enumeration")
    n.add_argument("kind", choices=("rainbow-factorizations", "toroidal-subgraphs"))
    n.add_argument("--format", choices=("text", "json"), default="text")
    n.add_argument("--out", help="write the report here instead of stdout")

    sub.add_parser("list", help="print the registered claim ids")
    return p


def _emit(text: str, out: str | None) -> None:
    if out is None:
        sys.stdout.write(text)
        return
    try:
        Path(out).write_text(text, encoding="utf-8")
    except OSError as e:
        raise OSError(f"cannot write {out}: {e.strerror or e}") from None


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK
    try:
        if args.command == "verify":
            doc, status = verify_report(_claim_ids(args))
            _emit(dumps(doc) if args.format == "json" else _verify_text(doc), args.out)
            return status
        if args.command == "export":
            for path in do_export(args.kind, args.out):
                print(path)
            return EXIT_OK
        if args.command == "enumerate":
            doc = enumerate_report(args.kind)
            _emit(dumps(doc) if args.format == "json" else _enumerate_text(doc), args.out)
            return EXIT_OK
        if args.command == "list":
            for c in claims.REGISTRY:
                print(f"{c.claim_id}\t{c.kind}\t{c.statement}")
            return EXIT_OK
    except UsageError as e:
        print(f"plmobius: error: {e}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as e:
        print(f"plmobius: error: {e}", file=sys.stderr)
        return EXIT_IO
    return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
