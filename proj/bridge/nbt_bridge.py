#!/usr/bin/env python3
"""Volumes and isometry checks in SnapPy for link JSON written by `nbt export link`.

    nbt_bridge.py run --jobs-file jobs.json --out volumes.csv [--procs N]

jobs.json is a list of objects:
    {"name": "...", "link": "path.json", "fillings": {"fixed": [1, 1]},
     "expected_volume": 5.3334, "census": "s776", "same_as": "other job"}
Only "name" and "link" are required. Link paths are relative to the jobs file.
"""

import argparse
import csv
import itertools
import json
import multiprocessing
import os
import sys
import warnings

AXIS = "A"
RETRIES = 8
VOLUME_TOL = 1e-6
COLUMNS = ["name", "cusps", "volume", "solution_type", "quality", "expected", "isometric", "error"]


def axis_augmented(strands, word):
    # strand n+1 loops once around strands 1..n
    return strands + 1, list(word) + list(range(strands, 0, -1)) + list(range(1, strands + 1))


def load_link(path, overrides):
    with open(path) as f:
        j = json.load(f)
    n = j["braid"]["strands"]
    word = j["braid"]["word"]
    names, owner, fill = [], {}, {}
    for c in j["components"]:
        names.append(c["name"])
        for s in c["strands"]:
            owner[s] = c["name"]
        fill[c["name"]] = c.get("filling")
    if j.get("axis", False):
        n, word = axis_augmented(n, word)
        names.append(AXIS)
        owner[n] = AXIS
        fill[AXIS] = j.get("axis_filling")
    for name, pair in (overrides or {}).items():
        if name not in fill:
            raise ValueError("no component named %r" % name)
        fill[name] = pair
    for name, pair in fill.items():
        if pair is None:
            continue
        b, a = pair
        if a == 0 and b == 0:
            raise ValueError("filling (0, 0) on %r" % name)
        if a == 0:
            raise ValueError("component %r has coefficient inf; erase it first" % name)
    return n, word, names, owner, fill


def linking_matrix(n, word, names, owner):
    at = [owner[p] for p in range(1, n + 1)]
    idx = {name: i for i, name in enumerate(names)}
    k = len(names)
    twice = [[0] * k for _ in range(k)]
    for l in word:
        i = abs(l)
        x, y = idx[at[i - 1]], idx[at[i]]
        if x != y:
            twice[x][y] += 1 if l > 0 else -1
            twice[y][x] += 1 if l > 0 else -1
        at[i - 1], at[i] = at[i], at[i - 1]
    return [[v // 2 for v in row] for row in twice]


def build(path, overrides):
    import snappy

    n, word, names, owner, fill = load_link(path, overrides)
    want = linking_matrix(n, word, names, owner)
    # SnapPy's sigma_i is the mirror of ours
    link = snappy.Link(braid_closure=[-l for l in word])
    got = link.linking_matrix()
    k = len(names)
    if len(got) != k:
        raise ValueError("SnapPy sees %d components, the JSON has %d" % (len(got), k))
    found = [p for p in itertools.permutations(range(k))
             if all(abs(got[p[a]][p[b]]) == abs(want[a][b]) for a in range(k) for b in range(k))]
    if not found:
        raise ValueError("linking matrix does not match")
    slots = {tuple(fill.get(names[a]) and tuple(fill[names[a]]) for a in sorted(range(k), key=lambda a: p[a]))
             for p in found}
    if len(slots) > 1:
        raise ValueError("cusp order is ambiguous for these fillings")
    order = found[0]
    M = link.exterior()
    pairs = [(0, 0)] * k
    for a, name in enumerate(names):
        if fill.get(name) is not None:
            pairs[order[a]] = tuple(fill[name])
    M.dehn_fill(pairs)
    return M


def quality(M):
    kind = M.solution_type()
    return kind, "ok" if kind == "all tetrahedra positively oriented" else "degenerate"


def isometry(A, B):
    """'true', 'false' or 'inconclusive'. 'false' needs the volumes to differ."""
    if abs(float(A.volume()) - float(B.volume())) > VOLUME_TOL:
        return "false"
    X, Y = A.copy(), B.copy()
    for _ in range(RETRIES):
        try:
            if X.is_isometric_to(Y):
                return "true"
        except RuntimeError:
            pass
        X.randomize()
        Y.randomize()
    return "inconclusive"


def run_job(args):
    job, base = args
    row = dict.fromkeys(COLUMNS, "")
    row["name"] = job["name"]
    try:
        M = build(os.path.join(base, job["link"]), job.get("fillings"))
        row["cusps"] = sum(1 for c in M.cusp_info() if c.get("filling", (0, 0)) == (0, 0))
        row["volume"] = "%.10f" % float(M.volume())
        row["solution_type"], row["quality"] = quality(M)
        if "expected_volume" in job:
            row["expected"] = str(abs(float(M.volume()) - job["expected_volume"]) < 1e-4)
        if "census" in job:
            import snappy

            row["isometric"] = isometry(M, snappy.Manifold(job["census"]))
        other = job.get("same_as")
        if other:
            o = job["_jobs"].get(other)
            if o is None:
                raise ValueError("same_as: no job named %r" % other)
            row["isometric"] = isometry(M, build(os.path.join(base, o["link"]), o.get("fillings")))
    except Exception as e:  # noqa: BLE001 reported per row
        row["error"] = str(e)
    return row


def run(jobs, base, procs):
    # workers return plain rows; SnapPy objects do not cross process boundaries
    named = {j["name"]: j for j in jobs}
    tasks = [(dict(j, _jobs=named), base) for j in jobs]
    if procs == 1:
        return [run_job(t) for t in tasks]
    with multiprocessing.Pool(procs) as pool:
        return pool.map(run_job, tasks)


def main(argv=None):
    warnings.filterwarnings("ignore")
    ap = argparse.ArgumentParser(prog="bridge")
    sub = ap.add_subparsers(dest="cmd", required=True)
    r = sub.add_parser("run", help="compute volumes for a jobs file")
    r.add_argument("--jobs-file", required=True)
    r.add_argument("--out", required=True)
    r.add_argument("--procs", type=int, default=1)
    a = ap.parse_args(argv)

    with open(a.jobs_file) as f:
        jobs = json.load(f)
    rows = run(jobs, os.path.dirname(os.path.abspath(a.jobs_file)), max(1, a.procs)) if jobs else []
    with open(a.out, "w", newline="") as f:
        w = csv.DictWriter(f, fieldnames=COLUMNS)
        w.writeheader()
        w.writerows(rows)
    bad = [r for r in rows if r["error"] or r["quality"] != "ok" or r["isometric"] == "false"
           or r["expected"] == "False"]
    for r in bad:
        print("%s: %s" % (r["name"], r["error"] or r["quality"] or r["isometric"]), file=sys.stderr)
    return 1 if bad else 0


if __name__ == "__main__":
    sys.exit(main())
