"""End-to-end checks of the cauchy-gof executable.

usage: cli_integration.py <cauchy-gof binary> <schemas dir>
"""

import json
import pathlib
import subprocess
import sys
import tempfile

import jsonschema

BIN = sys.argv[1]
SCHEMAS = pathlib.Path(sys.argv[2])

failures = []


def run(*args, stdin=None):
    return subprocess.run([BIN, *map(str, args)], input=stdin, capture_output=True, text=True)


def check(name, cond, detail=""):
    print(("ok   " if cond else "FAIL ") + name + (f"  ({detail})" if detail and not cond else ""))
    if not cond:
        failures.append(name)


def schema(name):
    return json.loads((SCHEMAS / f"{name}.schema.json").read_text())


def validates(doc, name):
    try:
        jsonschema.validate(doc, schema(name))
        return True, ""
    except jsonschema.ValidationError as e:
        return False, e.message


with tempfile.TemporaryDirectory() as tmp:
    tmp = pathlib.Path(tmp)

    # sample -> test round trip
    r = run("sample", "--dist", "cauchy", "--n", 50, "--seed", 4, "-o", tmp / "c.txt")
    check("sample exits 0", r.returncode == 0, r.stderr)
    values = [float(v) for v in (tmp / "c.txt").read_text().split()]
    check("sample writes n lines", len(values) == 50)

    r = run("test", tmp / "c.txt", "--calibration-reps", 500)
    check("test exits 0", r.returncode == 0, r.stderr)
    report = json.loads(r.stdout)
    ok, msg = validates(report, "test_report")
    check("test report matches schema", ok, msg)
    check("reject follows critical value", report["reject"] == (report["statistic"] > report["critical_value"]))

    # CSV input with a named column gives the same statistic
    rows = "x,y\n" + "\n".join(f"{i},{v!r}" for i, v in enumerate(values)) + "\n"
    (tmp / "c.csv").write_text(rows)
    r = run("test", tmp / "c.csv", "--column", "y", "--calibration-reps", 500)
    check("csv column input", r.returncode == 0 and json.loads(r.stdout)["statistic"] == report["statistic"], r.stderr)

    r = run("test", "-", "--calibration-reps", 500, stdin=(tmp / "c.txt").read_text())
    check("standard input", r.returncode == 0 and json.loads(r.stdout)["statistic"] == report["statistic"], r.stderr)

    # p-value mode
    r = run("sample", "--dist", "normal", "--n", 50, "--seed", 2, "-o", tmp / "n.txt")
    r = run("test", tmp / "n.txt", "--pvalue-reps", 199, "--baselines", "--calibration-reps", 500)
    check("p-value test exits 0", r.returncode == 0, r.stderr)
    rep = json.loads(r.stdout)
    ok, msg = validates(rep, "test_report")
    check("p-value report matches schema", ok, msg)
    check("reject follows p-value", rep["decision_rule"] == "p_value" and rep["reject"] == (rep["p_value"] < rep["level"]))
    check("normal sample rejected", rep["reject"])

    for fmt in ("csv", "markdown"):
        r = run("test", tmp / "c.txt", "--calibration-reps", 200, "--format", fmt)
        check(f"test --format {fmt}", r.returncode == 0 and "statistic" in r.stdout, r.stderr)

    # exit codes
    (tmp / "two.txt").write_text("1\n2\n")
    check("two observations -> 3", run("test", tmp / "two.txt").returncode == 3)
    (tmp / "same.txt").write_text("5\n5\n5\n5\n")
    check("identical observations -> 3", run("test", tmp / "same.txt").returncode == 3)
    (tmp / "bad.txt").write_text("1\n2\nabc\n")
    check("ill-formed input -> 2", run("test", tmp / "bad.txt").returncode == 2)
    (tmp / "empty.txt").write_text("# nothing\n\n")
    check("empty input -> 2", run("test", tmp / "empty.txt").returncode == 2)
    check("missing file -> 2", run("test", tmp / "missing.txt").returncode == 2)
    check("missing --dist -> 2", run("sample", "--n", 5).returncode == 2)
    check("bad distribution -> 2", run("sample", "--dist", "t:-1", "--n", 5).returncode == 2)
    check("bad exponent -> 2", run("test", tmp / "c.txt", "--exponent", 0.7).returncode == 2)
    check("bad format -> 2", run("calibrate", "--reps", 100, "--format", "xml").returncode == 2)
    check("no verb -> 2", run().returncode == 2)

    # tukey:0 reduces to the normal draw path
    run("sample", "--dist", "tukey:0", "--n", 10, "--seed", 1, "-o", tmp / "tk.txt")
    run("sample", "--dist", "normal", "--n", 10, "--seed", 1, "-o", tmp / "nm.txt")
    check("tukey:0 equals normal", (tmp / "tk.txt").read_bytes() == (tmp / "nm.txt").read_bytes())

    # alpha = 1 stable is the standard Cauchy law
    run("sample", "--dist", "stable:1", "--n", 1000, "--seed", 6, "-o", tmp / "s1.txt")
    r = run("test", tmp / "s1.txt", "--pvalue-reps", 99)
    check("stable:1 sample accepted", r.returncode == 0 and not json.loads(r.stdout)["reject"], r.stderr)

    # calibrate: determinism, single level, schema
    args = ("calibrate", "--n", "10,20", "--reps", 400, "--format", "json", "--seed", 3)
    a, b = run(*args), run(*args, "--workers", 3)
    check("calibrate deterministic", a.returncode == 0 and a.stdout == b.stdout, a.stderr)
    ok, msg = validates(json.loads(a.stdout), "critical_value_table")
    check("calibration matches schema", ok, msg)
    one = json.loads(run("calibrate", "--n", 20, "--reps", 200, "--levels", "0.10", "--format", "json").stdout)
    check("single level -> single row", len(one["tables"][0]["rows"]) == 1)
    md = run("calibrate", "--n", "10,20", "--reps", 200)
    check("calibrate markdown", md.returncode == 0 and md.stdout.startswith("| Sig. | n"), md.stdout[:80])

    # power
    r = run("power", "--n", 20, "--alts", "normal,cauchy:1,2,t:4", "--a", "2,6", "--reps", 200,
            "--calibration-reps", 400, "--format", "json", "--baselines")
    check("power exits 0", r.returncode == 0, r.stderr)
    doc = json.loads(r.stdout)
    ok, msg = validates(doc, "power_table")
    check("power matches schema", ok, msg)
    check("power tables per a", len(doc["tables"]) == 2 and len(doc["tables"][0]["rows"]) == 3)
    check("cauchy:1,2 parsed as one alternative", doc["tables"][0]["rows"][1]["alternative"] == "cauchy:1,2")
    check("missing --alts -> 2", run("power", "--reps", 100).returncode == 2)

if failures:
    print(f"{len(failures)} checks failed")
    sys.exit(1)
print("all checks passed")
