"""End-to-end checks of the command-line tool: JSON shapes, exit codes, stability."""
import itertools
import json
import os
import random
import subprocess
import sys
import tempfile

BINARY = sys.argv[1]
CACHE = tempfile.mkdtemp(prefix="glindex-cli-")
failures = []


def run(*args, stdin=None):
    proc = subprocess.run([BINARY, "--cache-dir", CACHE, *args], input=stdin,
                          capture_output=True, text=True)
    return proc.returncode, proc.stdout, proc.stderr


def expect(name, condition):
    if not condition:
        failures.append(name)
    print(("ok   " if condition else "FAIL ") + name)


def dump(obj):
    return json.dumps(obj)


def clutter_doc(n, d, circuits):
    return {"n": n, "d": d, "circuits": [list(c) for c in circuits]}


def complement_doc(doc):
    every = itertools.combinations(range(1, doc["n"] + 1), doc["d"])
    present = {tuple(c) for c in doc["circuits"]}
    return clutter_doc(doc["n"], doc["d"], [c for c in every if c not in present])


code, out, _ = run("catalog")
names = json.loads(out)["names"]
expect("catalog lists names", code == 0 and "D1_6" in names and "conca" in names)

code, out, _ = run("catalog", "--name", "D1_6")
d16 = json.loads(out)
code, out, _ = run("classify", "-", stdin=dump(d16))
expect("classify D1_6", json.loads(out) == {"complement_C_free": True, "D_free": False,
                                             "index_gt1": True, "index_sq_gt1": False})

_, out, _ = run("catalog", "--name", "B")
bbar = complement_doc(json.loads(out))
_, out, _ = run("betti", "-", stdin=dump(bbar))
expect("betti of the bipyramid complement has [1, 5, 1]", [1, 5, 1] in json.loads(out)["graded"])
_, out2, _ = run("betti", "-", stdin=dump(bbar))
expect("betti output is byte-stable", out == out2)
_, out2, _ = run("--field", "2", "betti", "-", stdin=dump(bbar))
expect("betti over GF(2) matches here", out == out2)

_, out, _ = run("catalog", "--name", "conca")
conca = json.loads(out)
_, out, _ = run("linpres", "-", stdin=dump(conca))
expect("conca is linearly presented", json.loads(out) == {"linearly_presented": True, "witness": None})
_, out, _ = run("linpres", "--power", "2", "-", stdin=dump(conca))
expect("conca square is not", json.loads(out)["linearly_presented"] is False)
_, out, _ = run("index", "-", stdin=dump(conca))
expect("index of conca is above 1", json.loads(out)["index"] == "inf" or json.loads(out)["index"] > 1)

code, out, _ = run("enumerate", "--d", "2", "--k", "1", "--n", "4")
expect("enumerate graphs on 4 vertices", code == 0 and json.loads(out)["count"] == 1)
code, out, _ = run("census-105")
expect("census", json.loads(out)["cases"] == 105)
code, out, _ = run("kappa", "--d", "2")
expect("kappa 2", json.loads(out)["kappa"] == 4)

code, out, _ = run("check-free", "--family", "D", "-", stdin=dump(d16))
expect("D1_6 is not D-free", code == 0 and json.loads(out)["free"] is False)

code, _, err = run("betti", "-", stdin="{")
expect("malformed JSON exits 2", code == 2 and err)
code, _, _ = run("betti", "-", stdin=dump({"vars": 2, "generators": [[1, 0]], "n": 2}))
expect("ambiguous input exits 2", code == 2)
code, _, _ = run("enumerate", "--d", "5", "--k", "1", "--n", "3")
expect("unsupported range exits 3", code == 3)
code, _, err = run("betti", "-", stdin=dump({"vars": 2, "generators": [[1, 0], [1, 1]]}))
expect("non-minimal input warns", code == 0 and "warning" in err)

env_cache = tempfile.mkdtemp(prefix="glindex-env-")
proc = subprocess.run([BINARY, "--cache-dir", CACHE, "check-free", "--family", "D", "-"],
                      input=dump(d16), capture_output=True, text=True,
                      env={**os.environ, "GLINDEX_CACHE_DIR": env_cache})
expect("environment cache directory wins", os.path.exists(os.path.join(env_cache, "family_d.json")))

# classify agreement over the catalog and a random corpus
rng = random.Random(5)
corpus = [json.loads(run("catalog", "--name", n)[1]) for n in names if n != "conca"]
for _ in range(25):
    n = rng.choice([5, 6, 7])
    every = list(itertools.combinations(range(1, n + 1), 3))
    missing = rng.sample(every, rng.randint(0, 4))
    corpus.append(clutter_doc(n, 3, [c for c in every if c not in missing]))
agree = True
for doc in corpus:
    result = json.loads(run("classify", "-", stdin=dump(doc))[1])
    if result["complement_C_free"] != result["index_gt1"]:
        agree = False
    if result["index_gt1"] and result["D_free"] != result["index_sq_gt1"]:
        agree = False
expect("classify agreement on %d clutters" % len(corpus), agree)

sys.exit(1 if failures else 0)
