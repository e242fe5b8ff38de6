#!/usr/bin/env python3
"""Runs the CLI on the samples and checks every report against the report
schema, the exit codes, and that two runs print the same bytes.

usage: check_reports.py <monoid-ideals binary> <source dir>
"""

import json
import subprocess
import sys
from pathlib import Path

from jsonschema import Draft202012Validator
from referencing import Registry, Resource

binary, root = sys.argv[1], Path(sys.argv[2])
samples = root / "samples"

schemas = {name: json.loads((root / "schemas" / f"{name}.schema.json").read_text())
           for name in ("monoid", "ideal", "report")}
registry = Registry().with_resources(
    (s["$id"], Resource.from_contents(s)) for s in schemas.values())
validators = {name: Draft202012Validator(s, registry=registry) for name, s in schemas.items()}

failures = []


def check(document, schema, what):
    errors = sorted(validators[schema].iter_errors(document), key=lambda e: list(e.path))
    for e in errors:
        failures.append(f"{what}: {'/'.join(map(str, e.path))}: {e.message}")


def sample(name):
    return str(samples / name)


for path in sorted(samples.glob("*.json")):
    document = json.loads(path.read_text())
    schema = "monoid" if document.get("kind") in ("finite", "free", "presented") else "ideal"
    check(document, schema, path.name)

cases = [
    (["classify", "--monoid", sample("free_ab.json"), "--ideal", sample("gen_aa.json"),
      "--radius", "5"], 0),
    (["classify", "--monoid", sample("fm3.json"), "--ideal", sample("fm3_az.json")], 0),
    (["classify", "--monoid", sample("fm3.json"), "--ideal", sample("fm3_a_not_ideal.json")], 0),
    (["classify", "--monoid", sample("bicyclic.json"), "--ideal", sample("gen_ab.json"),
      "--radius", "4"], 0),
    (["closure", "--monoid", sample("free_ab.json"), "--ideal", sample("pairset_ab.json"),
      "--radius", "3"], 0),
    (["closure", "--monoid", sample("free_ab.json"), "--ideal", sample("subset_a_squared.json"),
      "--radius", "3"], 0),
    (["construct", "--monoid", sample("free_a.json"), "--what", "sqrt", "--ideal",
      sample("gen_a.json"), "--radius", "4"], 0),
    (["construct", "--monoid", sample("commutative_ab.json"), "--what", "square",
      "--radius", "3"], 0),
    (["construct", "--monoid", sample("braid.json"), "--what", "sqrt", "--max-rules", "1"], 3),
    (["complete", "--monoid", sample("bicyclic.json")], 0),
    (["complete", "--monoid", sample("braid.json")], 0),
    (["verify", "--monoid", sample("free_ab.json"), "--claims", "C3,C10,C11", "--radius", "3"], 0),
    (["verify", "--monoid", sample("fm3.json"), "--claims", "all"], 0),
    (["mine", "--order", "3", "--claims", "all", "--seed", "7"], 0),
    (["classify", "--monoid", sample("free_ab.json"), "--ideal", sample("fm3_z.json")], 2),
    (["classify", "--monoid", sample("gen_a.json"), "--ideal", sample("gen_a.json")], 2),
    (["classify", "--monoid", str(samples / "missing.json"), "--ideal", sample("gen_a.json")], 2),
    (["verify", "--monoid", sample("free_a.json"), "--claims", "C7"], 2),
    (["mine", "--order", "6"], 2),
]

for args, expected in cases:
    what = " ".join(a.rsplit("/", 1)[-1] for a in args)
    runs = [subprocess.run([binary, *args], capture_output=True, timeout=300) for _ in range(2)]
    if runs[0].returncode != expected:
        failures.append(f"{what}: exit {runs[0].returncode}, expected {expected}")
    if runs[0].stdout != runs[1].stdout:
        failures.append(f"{what}: output differs between runs")
    try:
        report = json.loads(runs[0].stdout)
    except json.JSONDecodeError as e:
        failures.append(f"{what}: not JSON ({e})")
        continue
    check(report, "report", what)
    if report.get("exitCode") != expected:
        failures.append(f"{what}: exitCode {report.get('exitCode')}")
    if (report.get("error") is None) != (expected == 0):
        failures.append(f"{what}: error field {report.get('error')}")

for f in failures:
    print(f)
print(f"{len(cases)} commands, {len(failures)} failures")
sys.exit(1 if failures else 0)
