#!/usr/bin/env python3
# Copyright 2026 The ramify Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Golden-file, schema and exit-code tests for the ramify CLI.

Run with --update to rewrite the golden files from the current binary.
"""

import argparse
import json
import os
import subprocess
import sys
from pathlib import Path

import jsonschema

# name, argv, expected exit code, compare against golden
CASES = [
    ("reduce_p2", ["reduce", "-p", "2", "--kappa", "t^-4"], 0),
    ("reduce_f4", ["reduce", "-p", "2", "-f", "2", "--kappa", "g*t^-6 + t^-3 + g + t"], 0),
    ("reduce_p3_cancel", ["reduce", "-p", "3", "--kappa", "t^-3 + 2*t^-1 + t^-3*2"], 0),
    ("classify_heis_p3", ["classify", "--group", "heis", "-p", "3", "--beta1", "t^-1", "--beta2", "t^-5",
                          "--kappa3", "0"], 0),
    ("classify_mod_p3", ["classify", "--group", "mod", "-p", "3", "--beta1", "t^-1", "--beta2", "2*t^-2"], 0),
    ("classify_q8_f4", ["classify", "--group", "q8", "-p", "2", "-f", "2", "--beta1", "t^-1", "--beta2",
                        "g^2*t^-1"], 0),
    ("classify_d8_kappa3", ["classify", "--group", "d8", "-p", "2", "--beta1", "t^-1", "--beta2", "t^-3",
                            "--kappa3", "t^-5"], 0),
    ("classify_d8_full", ["classify", "--group", "d8", "-p", "2", "--beta1", "t^-1", "--beta2", "t^-3",
                          "--choice", "Sigma1Full"], 0),
    ("classify_heis_closed", ["classify", "--group", "heis", "-p", "5", "--beta1", "t^-2 + t^-1",
                              "--beta2", "3*t^-7", "--kappa3", "t^-40", "--closed-form-ladder"], 0),
    ("decompose_p3_s", ["decompose", "-p", "3", "--beta1", "t^-1", "--beta2", "t^-5"], 0),
    ("decompose_p3_minus_one", ["decompose", "-p", "3", "--beta1", "t^-1", "--beta2", "2*t^-2"], 0),
    ("sweep_d8", ["sweep", "-p", "2", "--groups", "d8", "--umax", "7", "--seed", "5"], 0),
    ("sweep_p3_table", ["sweep", "-p", "3", "--umax", "8", "--per-cell", "3", "--seed", "11", "--output", "table"],
     0),
    ("sweep_p3_csv", ["sweep", "-p", "3", "--umax", "5", "--seed", "11", "--output", "csv"], 0),
    ("selftest_p3", ["selftest", "-p", "3", "--trials", "200", "--seed", "7"], 0),
    ("error_dependent", ["classify", "--group", "heis", "-p", "3", "--beta1", "t^-1", "--beta2", "2*t^-1"], 1),
    ("error_group", ["classify", "--group", "d8", "-p", "3", "--beta1", "t^-1", "--beta2", "t^-2"], 1),
    ("error_parse", ["reduce", "-p", "2", "--kappa", "t^^"], 2),
    ("error_field", ["reduce", "-p", "2", "--modulus", "1,0,1", "-f", "2", "--kappa", "t^-1"], 2),
    ("error_precision", ["reduce", "-p", "3", "--kappa", "O(t^0)"], 1),
]

# argv, expected exit code; output is not JSON (CLI11 usage errors).
USAGE_CASES = [
    ["classify", "-p", "3", "--beta1", "t^-1"],
    ["reduce", "-p", "4", "--kappa", "t^-1"],
    ["sweep", "--output", "xml"],
    [],
]


def run(binary, argv, env=None):
    proc = subprocess.run([binary] + argv, capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--ramify", required=True)
    ap.add_argument("--schema", required=True)
    ap.add_argument("--golden", required=True)
    ap.add_argument("--update", action="store_true")
    args = ap.parse_args()

    schema = json.loads(Path(args.schema).read_text())
    jsonschema.Draft202012Validator.check_schema(schema)
    validator = jsonschema.Draft202012Validator(schema)
    golden = Path(args.golden)
    env = {k: v for k, v in os.environ.items() if k != "RAMIFY_PRECISION"}
    failures = []

    for name, argv, want in CASES:
        code, out = run(args.ramify, argv, env)
        if code != want:
            failures.append(f"{name}: exit {code}, expected {want}")
        is_json = "--output" not in argv or argv[argv.index("--output") + 1] == "json"
        if is_json:
            try:
                doc = json.loads(out)
            except json.JSONDecodeError as e:
                failures.append(f"{name}: output is not JSON ({e})")
                continue
            errors = sorted(validator.iter_errors(doc), key=lambda e: list(e.path))
            if errors:
                failures.append(f"{name}: schema violation: {errors[0].message}")
        path = golden / (name + (".json" if is_json else ".txt"))
        if args.update:
            path.write_text(out)
        elif not path.exists():
            failures.append(f"{name}: missing golden file {path}")
        elif path.read_text() != out:
            failures.append(f"{name}: output differs from {path}")

    for argv in USAGE_CASES:
        code, _ = run(args.ramify, argv, env)
        if code != 2:
            failures.append(f"usage {argv}: exit {code}, expected 2")

    # Same seed, different thread counts: byte-identical.
    sweep = ["sweep", "-p", "3", "--umax", "10", "--per-cell", "2", "--seed", "99"]
    outs = {run(args.ramify, sweep + ["--threads", str(n)], env)[1] for n in (1, 2, 4)}
    if len(outs) != 1:
        failures.append("sweep output depends on the thread count")
    outs = {run(args.ramify, ["selftest", "-p", "5", "--trials", "40", "--seed", "3", "--threads", str(n)], env)[1]
            for n in (1, 3)}
    if len(outs) != 1:
        failures.append("selftest output depends on the thread count")

    # RAMIFY_PRECISION sets the default precision; --precision overrides it.
    env5 = dict(env, RAMIFY_PRECISION="5")
    doc = json.loads(run(args.ramify, ["reduce", "-p", "2", "--kappa", "t^-4"], env5)[1])
    if doc.get("precision") != 5 or doc.get("input") != "t^-4 + O(t^5)":
        failures.append(f"RAMIFY_PRECISION ignored: {doc.get('precision')}, {doc.get('input')}")
    doc = json.loads(run(args.ramify, ["reduce", "-p", "2", "--kappa", "t^-4", "--precision", "3"], env5)[1])
    if doc.get("precision") != 3:
        failures.append("--precision does not override RAMIFY_PRECISION")

    # Precision retry is recorded.
    doc = json.loads(run(args.ramify, ["reduce", "-p", "3", "--kappa", "t^3", "--precision", "0"], env)[1])
    if doc.get("precision_retries") != 1 or doc.get("precision") != 1:
        failures.append(f"precision retry not recorded: {doc}")

    for f in failures:
        print("FAIL", f)
    print(f"{len(CASES)} golden cases, {len(USAGE_CASES)} usage cases, {len(failures)} failures")
    return 1 if failures else 0


if __name__ == "__main__":
    sys.exit(main())
