"""End-to-end checks of the command-line tool: exit codes, determinism, schemas."""
import json
import os
import subprocess
import sys
import tempfile

import jsonschema

BINARY, SCHEMAS = sys.argv[1], sys.argv[2]
failures = 0


def run(*args, env=None):
    proc = subprocess.run([BINARY, *args], capture_output=True, text=True, env=env)
    return proc.returncode, proc.stdout, proc.stderr


def check(ok, label):
    global failures
    print(("PASS " if ok else "FAIL ") + label)
    if not ok:
        failures += 1


def schema(name):
    with open(os.path.join(SCHEMAS, name + ".schema.json")) as f:
        return json.load(f)


def peak_set(word):
    return {i + 1 for i in range(1, len(word) - 1) if word[i - 1] < word[i] > word[i + 1]}


CASES = [
    ("stats", ["stats", "4,1,3,9,6,8"], 0),
    ("shuffles", ["shuffles", "3,1", "2,6", "--left", "--stat", "Pk"], 0),
    ("certify", ["certify", "--notion", "shuffle", "--stat", "Epk", "--max-size", "6"], 0),
    ("certify", ["certify", "--notion", "head-graft", "--stat", "Pk", "--max-size", "4"], 1),
    ("lacunar", ["lacunar", "--n", "3"], 0),
    ("qsym-eval", ["qsym", "eval", "(F[3] - F[1,2]) < F[2]"], 0),
    ("qsym-eval", ["qsym", "eval", "F[1] * M[2]", "--basis", "M"], 0),
    ("qsym-check", ["qsym", "check", "--pairs", "50", "--max-size", "4"], 0),
    ("kernel", ["kernel", "--stat", "Epk", "--n", "4", "--generators", "f", "--m-binomial"], 0),
    ("kernel", ["kernel", "--stat", "maj", "--n", "4", "--m-binomial"], 1),
    ("ideal-matrix", ["ideal-matrix", "--max-degree", "4"], 0),
    ("enriched-gamma", ["enriched", "gamma", "--n", "3"], 0),
    ("enriched-kpoly", ["enriched", "kpoly", "--n", "3", "--lambda", "1,3"], 0),
    ("enriched-prodcheck", ["enriched", "prodcheck", "--n", "3"], 0),
    ("enriched-lindep", ["enriched", "lindep", "--n", "4"], 0),
    ("tables-paper", ["tables", "paper", "--max-degree", "5"], 0),
]

docs = {}
for name, args, expected_rc in CASES:
    label = " ".join(args)
    rc, out, err = run(*args)
    check(rc == expected_rc, f"exit code {rc} for: {label}")
    try:
        doc = json.loads(out)
        jsonschema.validate(doc, schema(name))
        check(True, f"schema {name} for: {label}")
    except (json.JSONDecodeError, jsonschema.ValidationError) as e:
        check(False, f"schema {name} for: {label}: {e}")
        continue
    rc2, out2, _ = run(*args)
    check(rc2 == rc and out2 == out, f"deterministic output for: {label}")
    docs[label] = doc

lac = docs.get("lacunar --n 3")
check(lac is not None and lac["result"]["sets"] == [[1, 3], [1], [2], [3]], "lacunar n = 3 lists the four sets")

hg = docs.get("certify --notion head-graft --stat Pk --max-size 4")
if hg is not None:
    paper_a, paper_b = ([3, 1], 2), ([3, 4], 2)
    differ = peak_set([paper_a[1]] + paper_a[0]) != peak_set([paper_b[1]] + paper_b[0])
    key = "st pi={} |pi|=2 [a>pi1]=0"
    check(differ and any(w["key"] == key for w in hg["witnesses"]),
          "head-graft Pk: the class of (3,1),2 vs (3,4),2 is reported")
    for w in hg["witnesses"]:
        rep, wit = w["representative"], w["witness"]
        check(peak_set(rep["sigma"] + rep["pi"]) != peak_set(wit["sigma"] + wit["pi"]),
              f"head-graft witness {w['id']} rechecks")

ev = docs.get("qsym eval (F[3] - F[1,2]) < F[2]")
check(ev is not None and ev["result"]["basis"] == "F" and len(ev["result"]["terms"]) == 6, "qsym eval gives six F terms")

rc, _, err = run("certify", "--notion", "bogus", "--stat", "Pk")
check(rc == 2 and "error" in err, "unknown notion is a usage error")
rc, _, _ = run("lacunar")
check(rc == 2, "missing required option is a usage error")
rc, _, _ = run("qsym", "eval", "F[1] ? F[2]")
check(rc == 2, "malformed expression is a usage error")

rc, tsv, _ = run("--output", "tsv", "lacunar", "--n", "3")
check(rc == 0 and tsv.splitlines() == ["set", "{1,3}", "{1}", "{2}", "{3}"], "tsv output")
rc, text, _ = run("--output", "text", "lacunar", "--n", "3")
check(rc == 0 and "command: lacunar" in text, "text output")

with tempfile.TemporaryDirectory() as tmp:
    rc, out, _ = run("--out-dir", tmp, "lacunar", "--n", "4")
    path = os.path.join(tmp, "lacunar.json")
    check(rc == 0 and os.path.exists(path) and open(path).read() == out, "--out-dir writes the report")
    env_dir = os.path.join(tmp, "env")
    env = dict(os.environ, SHUFCOMPAT_OUTPUT_DIR=env_dir)
    rc, out, _ = run("stats", "2,1,3", env=env)
    path = os.path.join(env_dir, "stats.json")
    check(rc == 0 and os.path.exists(path) and open(path).read() == out, "SHUFCOMPAT_OUTPUT_DIR writes the report")

print(f"{failures} checks failed")
sys.exit(1 if failures else 0)
