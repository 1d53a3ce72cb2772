#!/usr/bin/env python3
"""Drives the command-line tool end to end and checks output and exit codes."""
import json
import os
import subprocess
import sys

BIN = sys.argv[1]
failures = 0


def run(args, env=None):
    full_env = dict(os.environ)
    if env:
        full_env.update(env)
    return subprocess.run([BIN] + args, capture_output=True, text=True, env=full_env)


def check(name, ok, detail=""):
    global failures
    if ok:
        print("ok   " + name)
    else:
        failures += 1
        print("FAIL " + name + ("  " + detail if detail else ""))


def parsed(result):
    return json.loads(result.stdout)


# tableau rendering
r = run(["tableau", "4213", "--rank", "4"])
check("tableau text exit", r.returncode == 0, str(r.returncode))
check("tableau text rows", r.stdout == "4\n2 4\n1 2 3 4\ncanonical: 4241234\n", repr(r.stdout))

r = run(["tableau", "4213", "--rank", "4", "--json"])
check(
    "tableau json",
    r.returncode == 0
    and parsed(r)
    == {"word": "4213", "rank": 4, "rows": [[1, 2, 3, 4], [2, 4], [4]], "canonical": "4241234"},
    r.stdout,
)

r = run(["tableau", "e", "--rank", "3"])
check("empty tableau", r.returncode == 0 and r.stdout == "(empty)\ncanonical: e\n", repr(r.stdout))

r = run(["tableau", "503", "--rank", "5"])
check("bad word exit", r.returncode == 2 and "error:" in r.stderr, r.stderr)

# matrix rendering
r = run(["matrix", "4213", "--rank", "4"])
rows = [line.split() for line in r.stdout.strip().split("\n")]
check("matrix text first row", r.returncode == 0 and rows[0] == ["0", "1", "2", "2", "3"], r.stdout)
check("matrix text bottom", rows[4] == ["-inf", "-inf", "-inf", "-inf", "0"], r.stdout)

r = run(["matrix", "4213", "--rank", "4", "--json"])
doc = parsed(r)
check(
    "matrix json entries",
    doc["entries"][0] == [0, 1, 2, 2, 3] and doc["entries"][4] == [None, None, None, None, 0],
    r.stdout,
)
check("matrix json tags", doc["word"] == "4213" and doc["semiring"] == "trop")

r = run(["matrix", "11", "--rank", "2", "--semiring", "bool", "--json"])
check(
    "boolean matrix",
    r.returncode == 0 and parsed(r)["entries"] == [[1, 0, 1], [0, 1, 1], [0, 0, 1]],
    r.stdout,
)

r = run(["matrix", "12", "--rank", "2", "--semiring", "nosuch"])
check("unknown semiring exit", r.returncode == 2 and "error:" in r.stderr, r.stderr)

# identity checking
r = run(["check", "xyxzx = xyzx", "--rank", "2"])
check("holding identity", r.returncode == 0 and "holds at rank 2" in r.stdout, r.stdout)

r = run(["check", "xyxzx = xyzx", "--rank", "2", "--json"])
check(
    "holding identity json",
    parsed(r)
    == {
        "identity": "xyxzx = xyzx",
        "rank": 2,
        "mode": "congruence",
        "holds": True,
        "witness": None,
    },
    r.stdout,
)

r = run(["check", "xxyx = xyxx", "--rank", "3", "--json"])
doc = parsed(r)
check(
    "failing identity json",
    r.returncode == 1 and doc["holds"] is False and doc["witness"] == {"word": "xxy", "side": "lhs"},
    r.stdout,
)

r = run(["check", "xxyx = xyxx", "--rank", "3"])
check("failing identity text", r.returncode == 1 and "xxy" in r.stdout and "lhs" in r.stdout, r.stdout)

r = run(["check", "xyx", "--rank", "2"])
check("identity parse error", r.returncode == 2 and "error:" in r.stderr, r.stderr)

r = run(["check", "x*x = x*xx", "--rank", "2", "--json"])
doc = parsed(r)
check(
    "starred check routes to tables",
    r.returncode == 0 and doc["mode"] == "exhaustive" and doc["holds"] is True and doc["evaluations"] == 5,
    r.stdout,
)

r = run(["check", "xy = yx", "--rank", "2", "--involution", "--json"])
doc = parsed(r)
check(
    "exhaustive counterexample",
    r.returncode == 1
    and doc["holds"] is False
    and set(doc["counterexample"]["assignment"]) == {"x", "y"}
    and doc["counterexample"]["lhs"] != doc["counterexample"]["rhs"],
    r.stdout,
)

# witness construction
r = run(["witness", "xxyx = xyxx", "--rank", "3", "--json"])
doc = parsed(r)
check(
    "witness json",
    r.returncode == 0
    and doc["distinguisher"] == {"word": "xxy", "side": "lhs"}
    and doc["target"] == 3
    and doc["assignment"] == {"x": "23", "y": "1"}
    and doc["lhs_word"] == "2323123"
    and doc["rhs_word"] == "2312323"
    and doc["lhs_rows"] == [[1, 2, 3], [2, 3], [3]]
    and doc["rhs_rows"] == [[1, 2, 3], [2, 3]],
    r.stdout,
)

r = run(["witness", "xyxy = yxyx", "--rank", "2", "--json"])
check(
    "witness of a holding identity",
    r.returncode == 1 and parsed(r) == {"identity": "xyxy = yxyx", "rank": 2, "holds": True},
    r.stdout,
)

r = run(["witness", "x*x = x*xx", "--rank", "2"])
check("starred witness rejected", r.returncode == 2 and "error:" in r.stderr, r.stderr)

# enumeration
r = run(["enumerate", "--rank", "2", "--json"])
doc = parsed(r)
check("enumerate size", r.returncode == 0 and doc["size"] == 5 and doc["identity"] == 0, r.stdout)

r = run(["enumerate", "--rank", "2", "--table", "--jtrivial", "--json"])
doc = parsed(r)
check(
    "enumerate table",
    doc["j_trivial"] is True
    and len(doc["elements"]) == 5
    and doc["elements"][0] == "e"
    and doc["elements"][doc["zero"]] == "212"
    and len(doc["table"]) == 5
    and all(len(row) == 5 for row in doc["table"]),
    r.stdout,
)

r = run(["enumerate", "--rank", "7"])
check("enumeration cap", r.returncode == 2 and "error:" in r.stderr, r.stderr)

r = run(["enumerate", "--rank", "7", "--json"], env={"STYLIC_MAX_RANK": "7"})
check(
    "enumeration cap override",
    r.returncode == 0 and parsed(r)["size"] == 4140,
    r.stdout if r.returncode == 0 else r.stderr,
)

# randomized verification
r = run(["verify", "--rank", "2", "--samples", "200"])
check(
    "verify rank 2",
    r.returncode == 0 and "all suites passed" in r.stdout and "band-counts" in r.stdout,
    r.stdout,
)

r = run(["verify", "--rank", "3", "--samples", "100", "--json"])
doc = parsed(r)
check(
    "verify json",
    r.returncode == 0 and doc["ok"] is True and all(s["failures"] == 0 for s in doc["suites"]),
    r.stdout,
)

# matrix counterexample search
r = run(["search", "x*x = x*xx", "--rank", "2", "--json"])
doc = parsed(r)
check(
    "search finds a separation",
    r.returncode == 0
    and doc["found"] is True
    and set(doc["assignment"]) == {"x"}
    and len(doc["assignment"]["x"]) == 3
    and doc["lhs"] != doc["rhs"],
    r.stdout,
)

r = run(["search", "x = x", "--rank", "2", "--budget", "50"])
check(
    "search exhausts its budget",
    r.returncode == 1 and "no counterexample in 50 samples" in r.stdout,
    r.stdout,
)

# top-level behaviour
r = run([])
check("missing subcommand", r.returncode == 2)

r = run(["--help"])
check("help exits cleanly", r.returncode == 0 and "tableau" in r.stdout)

print()
if failures:
    print("%d cli checks failed" % failures)
    sys.exit(1)
print("all cli checks passed")
