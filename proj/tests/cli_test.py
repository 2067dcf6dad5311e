#!/usr/bin/env python3
"""End-to-end checks of the plumbforge binary: schemas, round trips, exit codes, pipes."""
import json
import os
import subprocess
import sys
import tempfile
import unittest

import jsonschema

BIN = os.environ.get("PLUMBFORGE_BIN", "build/plumbforge")
ROOT = os.environ.get("PLUMBFORGE_ROOT", os.path.join(os.path.dirname(__file__), ".."))
DATA = os.path.join(ROOT, "data")
SCHEMA = os.path.join(ROOT, "schema")


def run(*args, stdin=None, env=None):
    e = dict(os.environ)
    e.pop("PLUMBFORGE_CAP", None)
    if env:
        e.update(env)
    return subprocess.run([BIN, *args], input=stdin, capture_output=True, text=True, env=e, timeout=120)


def schema(name):
    with open(os.path.join(SCHEMA, name + ".schema.json")) as f:
        return json.load(f)


class Cli(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.tmp = tempfile.TemporaryDirectory()
        cls.d = cls.tmp.name
        with open(os.path.join(cls.d, "inv.json"), "w") as f:
            json.dump({"b1": 0, "b2_zero": 0, "b2": 2, "b2_plus": 0}, f)
        with open(os.path.join(cls.d, "g1b4.graph"), "w") as f:
            f.write("vertices 1\nv 0 weight -4 genus 1\n")

    @classmethod
    def tearDownClass(cls):
        cls.tmp.cleanup()

    def ok_json(self, name, *args, stdin=None):
        r = run(*args, "--json", stdin=stdin)
        self.assertEqual(r.returncode, 0, r.stderr)
        doc = json.loads(r.stdout)
        jsonschema.validate(doc, schema(name))
        return doc

    def test_analyze_min_elliptic(self):
        doc = self.ok_json("analyze", "analyze", os.path.join(DATA, "min_elliptic_n1.graph"))
        self.assertEqual(doc["Z_min"], [1, 1, 2, 1, 1])
        self.assertTrue(doc["minimally_elliptic"])

    def test_pg_bound(self):
        doc = self.ok_json("pg-bound", "pg-bound", os.path.join(DATA, "single_g4_b4.graph"))
        self.assertEqual((doc["bound"], doc["exact"]), (6, True))

    def test_envelope_and_classify(self):
        env = self.ok_json("envelope", "envelope", os.path.join(DATA, "d444.graph"))
        self.assertEqual(env["gorenstein"][0]["b2_minus"], 10)
        doc = self.ok_json("classify", "classify", os.path.join(DATA, "d444.graph"), os.path.join(self.d, "inv.json"))
        self.assertEqual(doc["verdict"]["status"], "unexpected")

    def test_openbook(self):
        doc = self.ok_json("openbook", "openbook", os.path.join(self.d, "g1b4.graph"))
        self.assertEqual((doc["page_genus"], doc["page_boundary"]), (1, 4))
        jsonschema.validate(doc["word"], schema("word"))

    def test_pipe(self):
        word = run("family", "triangle", "--k", "0")
        self.assertEqual(word.returncode, 0)
        doc = self.ok_json("fibration", "fibration", "--graph", os.path.join(DATA, "d444.graph"), stdin=word.stdout)
        self.assertEqual(doc["report"]["b2"], 3)
        self.assertEqual(doc["verdict"]["matches"], ["minimal_resolution"])

    def test_family_json_word(self):
        doc = self.ok_json("word", "family", "min-elliptic", "--k", "1", "--filling", "2")
        fib = self.ok_json("fibration", "fibration", "-", stdin=json.dumps(doc))
        self.assertEqual(fib["report"]["b2"], 16)

    def test_word_round_trip(self):
        text = run("family", "xgbm", "--g", "4", "--b", "3", "--m", "2").stdout
        js = run("family", "xgbm", "--g", "4", "--b", "3", "--m", "2", "--json").stdout
        a = run("fibration", "-", "--json", stdin=text).stdout
        b = run("fibration", "-", "--json", stdin=js).stdout
        self.assertEqual(a, b)
        self.assertIn("ledger", text)

    def test_graph_round_trip(self):
        t = os.path.join(self.d, "t.graph")
        j = os.path.join(self.d, "t.json")
        run("family", "triangle", "--k", "2", "--graph-out", t)
        run("family", "triangle", "--k", "2", "--graph-out", j)
        with open(j) as f:
            jsonschema.validate(json.load(f), schema("graph"))
        self.assertEqual(run("analyze", t, "--json").stdout, run("analyze", j, "--json").stdout)
        with open(os.path.join(DATA, "d444.graph")) as f:
            self.assertEqual(run("analyze", "-", "--json", stdin=f.read()).stdout,
                             run("analyze", os.path.join(DATA, "d444.graph"), "--json").stdout)

    def test_cusp(self):
        doc = self.ok_json("cusp", "cusp", "--weights", "15,4,4")
        self.assertTrue(doc["non_smoothable"])
        out = os.path.join(self.d, "words")
        doc = self.ok_json("cusp", "cusp", "--weights", "5,4,4", "--emit-words", out)
        for f in doc["fillings"]:
            with open(f["word_file"]) as w:
                rep = self.ok_json("fibration", "fibration", "-", stdin=w.read())
            self.assertEqual(rep["report"]["b2"], f["b2"])

    def test_incidence(self):
        doc = self.ok_json("incidence", "incidence", "--deltas", "1", "--ls", "3")
        self.assertEqual(doc["matrices"][0]["rows"], [[2, 1]])
        doc = self.ok_json("incidence", "incidence", "--deltas", "0,0", "--ls", "1,1", "--pairwise", "0,1;1,0")
        self.assertEqual(doc["count"], 1)

    def test_deterministic(self):
        args = ["cusp", "--weights", "4,4,4,4,4,5", "--json"]
        self.assertEqual(run(*args).stdout, run(*args).stdout)

    def test_tables(self):
        r = run("envelope", os.path.join(DATA, "d444.graph"))
        self.assertEqual(r.returncode, 0)
        self.assertIn("p_g_max", r.stdout)

    def test_domain_error(self):
        r = run("family", "xgbm", "--g", "3", "--b", "2", "--m", "0")
        self.assertEqual(r.returncode, 1)
        err = json.loads(r.stderr)
        jsonschema.validate(err, schema("error"))
        self.assertEqual(err["error"], "not_applicable")

    def test_cap_env(self):
        r = run("incidence", "--deltas", "0,0,0,0", "--ls", "10,10,10,10", env={"PLUMBFORGE_CAP": "100"})
        self.assertEqual(r.returncode, 1)
        self.assertEqual(json.loads(r.stderr)["error"], "cap_exceeded")
        r = run("incidence", "--deltas", "0", "--ls", "2", env={"PLUMBFORGE_CAP": "zero"})
        self.assertEqual(r.returncode, 2)

    def test_usage_errors(self):
        self.assertEqual(run("analyze", "--bogus").returncode, 2)
        self.assertEqual(run("frobnicate").returncode, 2)
        self.assertEqual(run("analyze", os.path.join(self.d, "missing.graph")).returncode, 2)
        r = run("analyze", "-", stdin="vertices 2\nv 0 weight -2 genus 0\n")
        self.assertEqual(r.returncode, 1)
        self.assertEqual(json.loads(r.stderr)["error"], "parse_error")
        indefinite = "vertices 2\nv 0 weight -1 genus 0\nv 1 weight -1 genus 0\ne 0 1\n"
        doc = self.ok_json("analyze", "analyze", "-", stdin=indefinite)
        self.assertFalse(doc["negative_definite"])
        r = run("envelope", "-", stdin=indefinite)
        self.assertEqual(r.returncode, 1)
        jsonschema.validate(json.loads(r.stderr), schema("error"))
        self.assertEqual(json.loads(r.stderr)["error"], "indefinite_lattice")


if __name__ == "__main__":
    unittest.main(verbosity=2)
