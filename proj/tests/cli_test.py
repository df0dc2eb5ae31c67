#!/usr/bin/env python3
"""End-to-end checks of the pk binary: exit codes, JSON schemas, text/JSON agreement."""

import argparse
import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema
import referencing

failures = []


def check(ok, what):
    if not ok:
        failures.append(what)


class Cli:
    def __init__(self, binary, schemas):
        self.binary = binary
        resources = []
        self.schemas = {}
        for path in pathlib.Path(schemas).glob("*.schema.json"):
            doc = json.loads(path.read_text())
            jsonschema.Draft202012Validator.check_schema(doc)
            self.schemas[path.name] = doc
            resource = referencing.Resource.from_contents(doc)
            resources.append((path.name, resource))
            resources.append((doc["$id"], resource))
        self.registry = referencing.Registry().with_resources(resources)

    def run(self, *args, stdin=None):
        proc = subprocess.run([self.binary, *args], input=stdin, capture_output=True, text=True)
        return proc.returncode, proc.stdout, proc.stderr

    def json(self, schema, *args, code=0, stdin=None):
        rc, out, err = self.run("--format", "json", *args, stdin=stdin)
        check(rc == code, f"{args}: exit {rc}, want {code} ({err.strip()})")
        try:
            doc = json.loads(out)
        except json.JSONDecodeError:
            check(False, f"{args}: output is not JSON")
            return None
        validator = jsonschema.Draft202012Validator(self.schemas[schema], registry=self.registry)
        errors = list(validator.iter_errors(doc))
        check(not errors, f"{args}: schema {schema}: {errors[0].message if errors else ''}")
        return doc


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--pk", required=True)
    parser.add_argument("--schemas", required=True)
    parser.add_argument("--pins", required=True)
    args = parser.parse_args()
    cli = Cli(args.pk, args.schemas)

    # parse
    doc = cli.json("parse.schema.json", "parse", "6*2:2:2 0")
    check(doc and doc["unreduced"] == "6*2.1.2.1.2 0.1", "parse unreduced form")
    doc = cli.json("parse.schema.json", "parse", "--emit-diagram", "i,1")
    check(doc and len(doc["diagram"]["nodes"]) == 2, "parse i,1 diagram has 2 nodes")
    rc, _, err = cli.run("parse", "6*2..3")
    check(rc == 1 and "EmptySlot" in err, f"parse 6*2..3 exit {rc}: {err.strip()}")

    # invariants
    doc = cli.json("det.schema.json", "det", "2 2")
    check(doc and doc["determinant"] == 5, "det 2 2")
    doc = cli.json("pseudodet.schema.json", "pseudodet", "9*.i")
    check(doc and doc["pseudodet"] == 15, "pseudodet 9*.i")
    doc = cli.json("pseudodet.schema.json", "pseudodet", "--witness", "(i,i,i),3,-3")
    check(doc and len(doc["resolutions"]) == 8, "pseudodet resolutions")
    doc = cli.json("colorable.schema.json", "colorable", "--mod", "7", "6*2.2 0.i.1.1.1")
    check(doc and doc["colorable"] is True, "colorable mod 7")
    cli.json("colorable.schema.json", "colorable", "--mod", "3", "--witness", "3 i 3")
    doc = cli.json("strong.schema.json", "strong", "--mod", "3", "--witness", "2 1,2 1,-(i,1,1)")
    check(doc is not None and "strong" in doc, "strong output")
    cli.json("colorings.schema.json", "colorings", "--mod", "9", "--limit", "3", "(3)(i)(-3)")
    cli.json("colorings.schema.json", "colorings", "--mod", "3", "--strong", "3 i 3")
    doc = cli.json("kh.schema.json", "kh", "(3)(i)(-3)")
    check(doc and doc["holds"] and doc["modulus"] == 9 and len(doc["witnesses"]) == 2, "kh pin")
    check(doc and all(w["coloring"]["colors"] == 7 for w in doc["witnesses"]), "kh colors")
    doc = cli.json("coloring-numbers.schema.json", "coloring-numbers", "--bound", "15", "9*.i")
    check(doc and {3, 5, 15} <= set(doc["numbers"]), "coloring numbers of 9*.i")

    # several symbols, one bad: array with an error entry, exit 1
    doc = cli.json("pseudodet.schema.json", "pseudodet", "3 i 3", "3 x", code=1)
    check(doc and isinstance(doc, list) and "error" in doc[1], "mixed batch")
    doc = cli.json("det.schema.json", "det", "--stdin", stdin="3\n2 2\n")
    check(doc and [d["determinant"] for d in doc] == [3, 5], "stdin batch")
    rc, _, _ = cli.run("det", "3 i 3")
    check(rc == 1, "det with precrossings exits 1")

    # usage errors
    for bad in (["colorable", "3"], ["nosuch"], ["colorable", "--mod", "x", "3"]):
        rc, _, _ = cli.run(*bad)
        check(rc == 2, f"{bad}: exit {rc}, want 2")
    rc, _, _ = cli.run("families", "show", "99")
    check(rc == 2, "families show 99 exits 2")

    # census
    doc = cli.json("census.schema.json", "census", args.pins)
    hist = {h["pseudodet"]: h["count"] for h in doc["histogram"]} if doc else {}
    check(hist == {3: 2, 9: 2, 15: 1, 25: 1, 27: 1, 125: 1}, f"census histogram {hist}")
    with tempfile.TemporaryDirectory() as tmp:
        empty = pathlib.Path(tmp) / "empty.txt"
        empty.write_text("# nothing\n")
        doc = cli.json("census.schema.json", "census", str(empty))
        check(doc and doc["histogram"] == [] and doc["total"] == 0, "empty census")
        pair = pathlib.Path(tmp) / "pair.txt"
        pair.write_text("3 i 3\n(3)(i)(-3)\n")
        doc = cli.json("census.schema.json", "census", str(pair))
        hist = {h["pseudodet"]: h["count"] for h in doc["histogram"]} if doc else {}
        check(hist == {3: 1, 9: 1}, "two-symbol census")
        bad = pathlib.Path(tmp) / "bad.txt"
        bad.write_text("x\n(\n")
        cli.json("census.schema.json", "census", str(bad), code=1)

    # families
    doc = cli.json("families-list.schema.json", "families", "list")
    check(doc and len(doc) == 64, "families list length")
    doc = cli.json("families-show.schema.json", "families", "show", "1")
    check(doc and doc["formula"] == "gcd((2p+1)(2q+1),4pq-1)", "families show 1")
    doc = cli.json("families-verify.schema.json", "families", "verify", "--rows", "1")
    check(doc and doc["summary"]["PASS"] == 1, "verify row 1")
    doc = cli.json("families-verify.schema.json", "families", "verify", "--rows", "17-19")
    check(doc and all(r["status"] == "PASS" for r in doc["reports"]), "verify rows 17-19")
    doc = cli.json("families-verify.schema.json", "families", "verify", "--rows", "64")
    check(doc and doc["reports"][0]["status"] == "FLAGGED", "flagged rows exit 0")
    cli.json("families-verify.schema.json", "families", "verify")

    # text and JSON report the same values
    rc, out, _ = cli.run("pseudodet", "4 1 i,5,-5")
    check(rc == 0 and out.strip() == "125", f"text pseudodet: {out.strip()}")
    rc, out, _ = cli.run("colorable", "--mod", "3", "3 i 3")
    check(rc == 0 and out.strip() == "true", f"text colorable: {out.strip()}")

    for f in failures:
        print("FAIL:", f)
    print(f"{len(failures)} failure(s)")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
