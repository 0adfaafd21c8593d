#!/usr/bin/env python3
"""End-to-end checks of the catermin CLI exit-code and output contract."""
import csv
import io
import json
import os
import subprocess
import sys
import tempfile

BIN = sys.argv[1]
failures = []


def run(*args, env=None):
    e = dict(os.environ)
    e.pop("CATERMIN_GUARD_OVERRIDE", None)
    if env:
        e.update(env)
    return subprocess.run([BIN, *args], capture_output=True, text=True, env=e)


def check(name, cond):
    if not cond:
        failures.append(name)
        print(f"FAIL: {name}")


# mpoly
r = run("mpoly", "--spine", "4,2,3")
check("mpoly coeffs", r.returncode == 0 and json.loads(r.stdout) == ["1", "7", "11"])
r = run("mpoly", "--spine", "3")
check("mpoly star", r.returncode == 0 and json.loads(r.stdout) == ["1", "3"])
r = run("mpoly", "--spine", "4,x")
check("mpoly parse error exit 2", r.returncode == 2)
r = run("mpoly")
check("mpoly missing input exit 2", r.returncode == 2)

# hosoya, from spine and from an edge file
r = run("hosoya", "--spine", "4,2,3")
check("hosoya 19", r.returncode == 0 and json.loads(r.stdout)["hosoya"] == "19")
with tempfile.NamedTemporaryFile("w", suffix=".edges", delete=False) as f:
    f.write("0 1\n1 2\n2 3\n")
    path = f.name
r = run("hosoya", "--edges", path)
check("hosoya P4 from edges", r.returncode == 0 and json.loads(r.stdout)["hosoya"] == "5")
os.unlink(path)

# energy: all three methods agree
r = run("energy", "--spine", "4,2,3", "--method", "all")
vals = [v["value"] for v in json.loads(r.stdout)]
check("energy all methods", r.returncode == 0 and len(vals) == 3)
check("energy pinned", all(abs(v - 7.38465) < 1e-4 for v in vals))

# extremal
r = run("extremal", "--reduced", "4,3,2")
out = json.loads(r.stdout)
check("extremal spine", r.returncode == 0 and out["spine"] == [4, 2, 3])
check("extremal hosoya", out["hosoya"] == "19")
r = run("extremal", "--reduced", "5,5,5,4,4,4,4,3,3,3")
check("extremal paper spine",
      json.loads(r.stdout)["spine"] == [5, 3, 5, 3, 4, 4, 4, 4, 3, 5])
r = run("extremal", "--full", "1,1")
check("extremal all-leaves exit 3", r.returncode == 3)
r = run("extremal", "--full", "3,1,1")
check("extremal bad degree sum exit 3", r.returncode == 3)

# enumerate
r = run("enumerate", "--reduced", "4,3,2")
check("enumerate class of 3", r.returncode == 0 and len(json.loads(r.stdout)) == 3)
r = run("enumerate", "--max-len", "2", "--max-entry", "3")
check("enumerate sequences",
      json.loads(r.stdout) == [[2], [3], [2, 2], [3, 2], [3, 3]])

# verify: clean sweep, guard, counterexample, inconclusive-free
r = run("verify", "min", "--max-len", "4", "--max-entry", "4", "--x", "1/4,1,4",
        "--jobs", "2")
check("verify min sweep exit 0", r.returncode == 0)
reports = json.loads(r.stdout)
check("verify min all pass", all(rep["success"] for rep in reports))
r = run("verify", "min", "--max-len", "50", "--max-entry", "6")
check("verify guard exit 2", r.returncode == 2)
r = run("verify", "majorization", "--n", "8", "--max-degree", "5")
check("verify majorization exit 0", r.returncode == 0)
r = run("verify", "maxdeg", "--n", "10", "--d", "3")
check("verify known deviation exit 1", r.returncode == 1)
rep = json.loads(r.stdout)[0]
check("deviation witness recorded",
      any(c["spine"] == [3, 2, 3, 2, 3] for c in rep["counterexamples"]))
r = run("verify", "diameter", "--n", "8", "--m", "4")
check("verify diameter exit 0", r.returncode == 0)
r = run("verify", "min", "--x", "0", "--reduced", "3,2")
check("nonpositive x exit 2", r.returncode == 2)
r = run("verify", "min", "--x", "0.5", "--reduced", "3,2")
check("float x rejected exit 2", r.returncode == 2)

# determinism of report output, elapsed_ms aside
def stripped(text):
    reps = json.loads(text)
    for rp in reps:
        rp.pop("elapsed_ms", None)
    return reps

a = run("verify", "min", "--max-len", "3", "--max-entry", "4", "--jobs", "4")
b = run("verify", "min", "--max-len", "3", "--max-entry", "4", "--jobs", "1")
check("parallel run deterministic", stripped(a.stdout) == stripped(b.stdout))

# plotdata
r = run("plotdata", "--reduced", "4,3,2", "--x-max", "2", "--points", "9")
rows = list(csv.reader(io.StringIO(r.stdout)))
check("plotdata 27 rows", r.returncode == 0 and len(rows) == 28)
r = run("plotdata", "--reduced", "4,3,2", "--x-max", "1", "--points", "1")
rows = list(csv.reader(io.StringIO(r.stdout)))[1:]
check("plotdata at x=1 gives Hosoya",
      sorted(row[2] for row in rows) == ["19", "22", "23"])
r = run("plotdata", "--reduced", "")
check("plotdata empty sequence exit 2", r.returncode == 2)

# chain
r = run("chain", "--from", "2,2,2,2,1,1", "--to", "4,2,1,1,1,1")
steps = json.loads(r.stdout)
check("chain endpoints", r.returncode == 0 and steps[0] == [2, 2, 2, 2, 1, 1]
      and steps[-1] == [4, 2, 1, 1, 1, 1])
r = run("chain", "--from", "2,2,1,1", "--to", "3,2,1,1,1")
check("chain length mismatch exit 2", r.returncode == 2)

# --out writes the same content as stdout
with tempfile.TemporaryDirectory() as d:
    p = os.path.join(d, "out.json")
    r = run("mpoly", "--spine", "4,2,3", "--out", p)
    with open(p) as f:
        check("--out file content", json.load(f) == ["1", "7", "11"])

# guard override
r = run("enumerate", "--max-len", "50", "--max-entry", "2",
        env={"CATERMIN_GUARD_OVERRIDE": "1"})
check("guard override", r.returncode == 0 and len(json.loads(r.stdout)) == 50)

# malformed input never exits 0
for args in (["hosoya", "--spine", "0"], ["hosoya", "--spine", "2,,3"],
             ["extremal", "--reduced", "1,2"], ["verify", "bogus"],
             ["chain", "--from", "2,1", "--to", "2,1,1"]):
    r = run(*args)
    check("nonzero exit for " + " ".join(args), r.returncode != 0)

if failures:
    print(f"{len(failures)} CLI checks failed")
    sys.exit(1)
print("all CLI checks passed")
