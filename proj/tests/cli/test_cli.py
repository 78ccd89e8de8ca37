"""End-to-end checks of the onebridge command line: exit codes, JSON schemas,
and agreement between sweep records and the per-command outputs."""

import argparse
import json
import os
import pathlib
import subprocess
import sys
import tempfile
import unittest

import jsonschema
from referencing import Registry, Resource

BINARY = None
SCHEMAS = None
REGISTRY = None


def load_schemas(directory):
    resources = {}
    for path in sorted(pathlib.Path(directory).glob("*.schema.json")):
        doc = json.loads(path.read_text())
        resources[path.name.removesuffix(".schema.json")] = doc
    registry = Registry().with_resources((doc["$id"], Resource.from_contents(doc)) for doc in resources.values())
    return resources, registry


def validate(instance, name):
    validator = jsonschema.Draft202012Validator(SCHEMAS[name], registry=REGISTRY)
    validator.validate(instance)


def run(*args, env=None):
    full_env = dict(os.environ)
    full_env.pop("ONEBRIDGE_OUTPUT_DIR", None)
    full_env.update(env or {})
    return subprocess.run([BINARY, *map(str, args)], capture_output=True, text=True, env=full_env, timeout=300)


def run_json(*args):
    proc = run(*args)
    return proc.returncode, json.loads(proc.stdout)


def family_args(family):
    if family["family"] == 1:
        return ["--family", 1, "--w", family["w"], "--k", family["k"], "--m", family["m"]]
    return ["--family", family["family"], "--n", family["n"], "--k", family["k"], "--m", family["m"]]


class ExitCodes(unittest.TestCase):
    def test_classify_figure_example(self):
        code, out = run_json("classify", "--family", 1, "--w", 5, "--k", 1, "--m", 0, "--format", "json")
        self.assertEqual(code, 0)
        validate(out, "classify")
        self.assertTrue(out["is_knot"])
        self.assertEqual(out["permutation"], "(1 3 4 5 2)")

    def test_classify_generic_parameters(self):
        code, out = run_json("classify", "--w", 3, "--t", 1, "--b", 1, "--m", 0, "--format", "json")
        validate(out, "classify")
        self.assertEqual(code, 0 if out["is_knot"] else 1)
        self.assertEqual(out["params"], {"w": 3, "t": 1, "b": 1, "m": 0})

    def test_classify_text(self):
        proc = run("classify", "--family", 1, "--w", 5, "--k", 1, "--m", 0)
        self.assertEqual(proc.returncode, 0)
        self.assertIn("(1 3 4 5 2)", proc.stdout)

    def test_usage_errors(self):
        for args in (
            ["classify", "--w", 2, "--t", 1, "--b", 1],
            ["classify", "--family", 1, "--w", 5, "--k", 3, "--m", 0],
            ["classify", "--family", 2, "--n", 1, "--k", 1, "--m", 0],
            ["classify", "--bogus"],
            ["nlo", "--family", 2, "--n", 2, "--k", 1, "--m", 0, "--policy", "optimistic"],
            ["sweep", "--family", 7],
            ["sweep", "--max-m", -1],
            ["frobnicate"],
        ):
            with self.subTest(args=args):
                self.assertEqual(run(*args).returncode, 2)

    def test_audit_finding(self):
        code, out = run_json("audit", "--family", 1, "--w", 3, "--k", 1, "--m", 0)
        self.assertEqual(code, 1)
        validate(out, "audit")
        self.assertTrue(out["finding"])
        self.assertEqual((out["report"]["v"], out["report"]["v_star"], out["report"]["discrepancy"]), (4, 6, 2))

    def test_nlo_bound(self):
        code, out = run_json("nlo", "--family", 2, "--n", 2, "--k", 1, "--m", 0, "--policy", "claimed")
        self.assertEqual(code, 0)
        validate(out, "nlo")
        self.assertTrue(out["criterion"]["pass"])
        self.assertTrue(out["verification"]["ok"])
        self.assertEqual(out["bound"]["criterion_bound"], {"numerator": 14, "denominator": 1})

    def test_other_commands(self):
        for command, schema in (("present", "present"), ("alexander", "alexander"), ("script", "script")):
            with self.subTest(command=command):
                code, out = run_json(command, "--family", 3, "--n", 3, "--k", 2, "--m", 1)
                self.assertEqual(code, 0)
                validate(out, schema)


class Certificates(unittest.TestCase):
    def setUp(self):
        self.tmp = tempfile.TemporaryDirectory()
        self.dir = pathlib.Path(self.tmp.name)
        self.args = ["nlo", "--family", 2, "--n", 3, "--k", 1, "--m", 1]

    def tearDown(self):
        self.tmp.cleanup()

    def write_cert(self):
        proc = run(*self.args, "--cert-out", "cert.json", env={"ONEBRIDGE_OUTPUT_DIR": str(self.dir)})
        self.assertEqual(proc.returncode, 0, proc.stderr)
        cert = json.loads((self.dir / "cert.json").read_text())
        validate(cert, "certificate")
        return cert

    def test_round_trip(self):
        cert = self.write_cert()
        code, out = run_json(*self.args, "--cert-in", self.dir / "cert.json")
        self.assertEqual(code, 0)
        self.assertTrue(out["verification"]["ok"])
        self.assertEqual(out["certificate_steps"], len(cert["steps"]))

    def test_tampered_certificate_is_a_finding(self):
        cert = self.write_cert()
        cert["steps"][1]["result"]["relation"] = ">="
        path = self.dir / "tampered.json"
        path.write_text(json.dumps(cert))
        code, out = run_json(*self.args, "--cert-in", path)
        self.assertEqual(code, 1)
        self.assertFalse(out["verification"]["ok"])
        self.assertEqual(out["verification"]["failed_step"], 1)

    def test_certificate_for_other_knot_is_rejected(self):
        self.write_cert()
        code, out = run_json("nlo", "--family", 2, "--n", 2, "--k", 1, "--m", 0, "--cert-in", self.dir / "cert.json")
        self.assertEqual(code, 1)
        self.assertFalse(out["verification"]["ok"])

    def test_unreadable_certificates(self):
        bad = self.dir / "bad.json"
        bad.write_text("{not json")
        self.assertEqual(run(*self.args, "--cert-in", bad).returncode, 2)
        cert = self.write_cert()
        cert["version"] = 99
        bad.write_text(json.dumps(cert))
        self.assertEqual(run(*self.args, "--cert-in", bad).returncode, 2)
        self.assertEqual(run(*self.args, "--cert-in", self.dir / "missing.json").returncode, 2)


class Sweep(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        proc = run("sweep", "--family", "all", "--max-n", 4, "--max-m", 1, "--format", "jsonl")
        cls.code = proc.returncode
        cls.lines = proc.stdout.splitlines()
        cls.records = [json.loads(line) for line in cls.lines]

    def test_one_line_per_parameter_set(self):
        expected = sum((w - 2) // 2 for w in range(3, 12)) * 2 + 2 * sum(n - 1 for n in range(2, 5)) * 2
        self.assertEqual(len(self.records), expected)
        keys = {json.dumps(r["family"], sort_keys=True) for r in self.records}
        self.assertEqual(len(keys), len(self.records))

    def test_records_match_schema(self):
        for record in self.records:
            validate(record, "sweep_record")

    def test_verdicts(self):
        for r in self.records:
            with self.subTest(family=r["family"]):
                self.assertEqual(r["failures"], [])
                self.assertTrue(r["is_knot"] and r["closed_form_match"] and r["relator_rederived"])
                self.assertTrue(r["framing_simplified"] and r["certificate"]["ok"] and r["criterion"]["pass"])
                self.assertTrue(r["alexander"]["match"])
                self.assertEqual(r["status"], "finding" if r["findings"] else "pass")
        self.assertEqual(self.code, 1 if any(r["findings"] for r in self.records) else 0)

    def test_records_agree_with_single_commands(self):
        for r in self.records[:: max(1, len(self.records) // 12)]:
            args = family_args(r["family"])
            with self.subTest(family=r["family"]):
                _, classify = run_json("classify", *args, "--format", "json")
                self.assertEqual(classify["permutation"], r["permutation"])
                _, present = run_json("present", *args)
                self.assertEqual(present["presentation"]["relator"], r["relator"])
                _, audit = run_json("audit", *args)
                self.assertEqual(audit["report"], r["audit"])
                _, alex = run_json("alexander", *args)
                self.assertEqual(alex["fox"], r["alexander"]["fox"])
                self.assertEqual(alex["burau"], r["alexander"]["burau"])
                _, nlo = run_json("nlo", *args)
                self.assertEqual(nlo["criterion"], r["criterion"])
                self.assertEqual(nlo["bound"], r["bound"])
                self.assertEqual(nlo["certificate_steps"], r["certificate"]["steps"])

    def test_parallel_output_is_identical(self):
        proc = run("sweep", "--family", "all", "--max-n", 4, "--max-m", 1, "--format", "jsonl", "--jobs", 4)
        self.assertEqual(proc.stdout.splitlines(), self.lines)

    def test_output_directory_override(self):
        with tempfile.TemporaryDirectory() as tmp:
            proc = run("sweep", "--family", 3, "--max-n", 3, "--max-m", 0, "--format", "jsonl", "--output", "out.jsonl",
                       env={"ONEBRIDGE_OUTPUT_DIR": tmp})
            self.assertIn(proc.returncode, (0, 1))
            lines = pathlib.Path(tmp, "out.jsonl").read_text().splitlines()
            self.assertEqual(len(lines), 3)
            for line in lines:
                validate(json.loads(line), "sweep_record")

    def test_audited_policy(self):
        proc = run("sweep", "--family", 2, "--max-n", 3, "--max-m", 1, "--format", "jsonl", "--policy", "audited")
        for line in proc.stdout.splitlines():
            r = json.loads(line)
            validate(r, "sweep_record")
            self.assertEqual(r["bound"]["policy"], "audited")
            self.assertEqual(r["bound"]["criterion_bound"], {"numerator": r["audit"]["v_star"], "denominator": 1})


def main():
    global BINARY, SCHEMAS, REGISTRY
    parser = argparse.ArgumentParser()
    parser.add_argument("--binary", required=True)
    parser.add_argument("--schemas", required=True)
    args, rest = parser.parse_known_args()
    BINARY = args.binary
    SCHEMAS, REGISTRY = load_schemas(args.schemas)
    unittest.main(argv=[sys.argv[0], *rest], verbosity=2)


if __name__ == "__main__":
    main()
