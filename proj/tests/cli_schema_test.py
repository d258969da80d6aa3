"""CLI contract: schema validity, byte-identical reruns, exit codes, env precedence.

usage: cli_schema_test.py <toepsense binary> <schema file>
"""

import json
import os
import subprocess
import sys

import jsonschema

BIN, SCHEMA = sys.argv[1], sys.argv[2]

RUNS = [
    ["analyze", "--n", "6", "--d", "3", "--perm", "1 3 4 5 6 2"],
    ["analyze", "--n", "6", "--d", "3", "--perm", "3 1 2 5 6 4"],
    ["usp", "--n", "6", "--d", "3", "--perm", "1 2 3 4 5 6"],
    ["usp", "--n", "6", "--d", "3", "--perm", "3 1 2 5 6 4", "--oracle"],
    ["oracle-rank", "--n", "6", "--d", "3", "--perm", "2 3 4 5 6 1", "--power", "2"],
    ["oracle-rank", "--n", "7", "--d", "3", "--perm", "1 3 4 5 6 7 2"],
    ["symdet", "--n", "6", "--d", "3", "--perm", "3 1 2 5 6 4"],
    ["symdet", "--n", "4", "--d", "2", "--perm", "2 1 3 4", "--terms"],
    ["symdet", "--n", "6", "--d", "3", "--perm", "1 2 3 4 5 6"],
    ["conjecture", "--d", "3"],
    ["conjecture", "--d", "3", "--symmetry", "--workers", "2"],
    ["conjecture", "--d", "2", "--n", "5", "--exploratory"],
    ["demo", "--n", "6", "--d", "3", "--perm", "1 3 4 5 6 2", "--seed", "4"],
    ["demo", "--n", "6", "--d", "3", "--perm", "2 3 4 5 6 1", "--mode", "witness", "--candidates"],
    ["fixtures", "--run", "all"],
    ["fixtures", "--run", "example3"],
    ["fixtures", "--list"],
]

failures = []


def run(args, env=None):
    merged = {k: v for k, v in os.environ.items() if not k.startswith("TOEPSENSE_")}
    merged.update(env or {})
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=merged)


def expect(cond, what):
    if not cond:
        failures.append(what)
        print("FAIL", what)


with open(SCHEMA) as fh:
    validator = jsonschema.Draft202012Validator(json.load(fh))

for args in RUNS:
    label = " ".join(args)
    first, second = run(args), run(args)
    expect(first.returncode == 0, f"{label}: exit {first.returncode}: {first.stderr.strip()}")
    expect(first.stdout == second.stdout, f"{label}: stdout differs between runs")
    expect(first.stderr != "", f"{label}: no summary on stderr")
    try:
        doc = json.loads(first.stdout)
    except json.JSONDecodeError as e:
        expect(False, f"{label}: stdout is not JSON ({e})")
        continue
    errors = sorted(validator.iter_errors(doc), key=str)
    expect(not errors, f"{label}: schema: {errors[0].message if errors else ''}")

# timing fields are opt-in and still schema-valid
timed = run(["conjecture", "--d", "2", "--timing"])
doc = json.loads(timed.stdout)
expect("wall_seconds" in doc and "workers" in doc, "conjecture --timing lacks timing fields")
expect(not list(validator.iter_errors(doc)), "conjecture --timing fails the schema")
expect("wall_seconds" not in json.loads(run(["conjecture", "--d", "2"]).stdout),
       "timing present without --timing")

# spot values
ex1 = json.loads(run(RUNS[0]).stdout)
expect(ex1["analysis"]["r0"] == 4 and ex1["analysis"]["eligible"] == [[1, 1]]
       and ex1["analysis"]["predicted_rank"] == 6 and ex1["analysis"]["usp"] == "holds",
       "analyze example 1 values")
expect(json.loads(run(RUNS[2]).stdout)["usp"] == "holds", "usp identity")

# usage errors exit 1 with the position reported
for args, needle in [
    (["analyze", "--n", "6", "--d", "3", "--perm", "1 2 2 4 5 6"], "entry 3"),
    (["analyze", "--n", "6", "--d", "3", "--perm", "1 2 x 4 5 6"], "entry 3"),
    (["analyze", "--n", "6", "--d", "3", "--perm", "(1 2 3)"], "cycle notation"),
    (["analyze", "--n", "6", "--d", "3", "--perm", "1 2 3 4 5"], "expected 6"),
    (["analyze", "--n", "6", "--d", "3", "--perm", "1 2 3 4 5 6", "--bogus"], "--bogus"),
    (["fixtures", "--run", "example9"], "unknown fixture"),
    (["conjecture", "--d", "3", "--n", "7"], "exploratory"),
    (["conjecture", "--d", "5"], "--long"),
    (["frobnicate"], ""),
]:
    r = run(args)
    expect(r.returncode == 1, f"{' '.join(args)}: exit {r.returncode}, expected 1")
    expect(needle in r.stderr, f"{' '.join(args)}: stderr lacks '{needle}': {r.stderr.strip()}")
    expect(r.stdout == "", f"{' '.join(args)}: wrote to stdout on error")

# a two-element field loses rank against the cyclic formula: verification failure
bad = run(["oracle-rank", "--n", "6", "--d", "3", "--perm", "3 4 5 6 1 2",
           "--prime", "2", "--trials", "1", "--seed", "1"])
expect(bad.returncode == 2, f"unverified oracle-rank exit {bad.returncode}, expected 2")

# flags > env > defaults
usp = ["usp", "--n", "6", "--d", "3", "--perm", "3 1 2 5 6 4", "--oracle"]
cfg = json.loads(run(usp).stdout)["oracle_config"]
expect(cfg == {"prime": 2**61 - 1, "seed": 20250101, "trials": 3}, f"defaults {cfg}")
env = {"TOEPSENSE_SEED": "5", "TOEPSENSE_TRIALS": "4", "TOEPSENSE_PRIME": "2147483647"}
cfg = json.loads(run(usp, env).stdout)["oracle_config"]
expect(cfg == {"prime": 2147483647, "seed": 5, "trials": 4}, f"env {cfg}")
cfg = json.loads(run(usp + ["--seed", "9"], env).stdout)["oracle_config"]
expect(cfg["seed"] == 9 and cfg["trials"] == 4, f"flag over env {cfg}")
expect(run(usp, {"TOEPSENSE_PRIME": "100"}).returncode == 1, "composite prime accepted")

print(f"{len(failures)} failure(s)")
sys.exit(1 if failures else 0)
