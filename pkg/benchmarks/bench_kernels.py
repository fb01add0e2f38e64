"""Compare the compiled kernels with the pure-Python fallback.

Run ``python3 benchmarks/bench_kernels.py``.  Each backend is timed in a
fresh interpreter (the choice is made at import time through
``SKEINPBW_PURE``) on the confluence certificate of the genus-2 daisy,
which is dominated by word reduction, and on a batch of Laurent products.
"""

import json
import os
import subprocess
import sys

WORKLOAD = r"""
import json, time, random
from skeinpbw import kernels
from skeinpbw.laurent import Laurent
from skeinpbw.ribbon import CiliatedGraph, build_presentation
from skeinpbw.relators import build_rewrite_system

g = CiliatedGraph.from_json({
    "vertices": [{"id": "v0", "half_edges": ["h1", "h3", "h2", "h4", "h5", "h7", "h6", "h8"]}],
    "edges": [{"id": e, "half_edges": p} for e, p in
              [("a", ["h1", "h2"]), ("b", ["h3", "h4"]), ("c", ["h5", "h6"]), ("d", ["h7", "h8"])]]})
rs = build_rewrite_system(build_presentation(g))
t0 = time.perf_counter()
rep = rs.certify_confluence()
t1 = time.perf_counter()
rng = random.Random(1)
polys = [Laurent({rng.randint(-20, 20): rng.randint(-9, 9) for _ in range(12)}) for _ in range(200)]
t2 = time.perf_counter()
acc = Laurent({0: 1})
for p in polys:
    for r in polys[:40]:
        acc = p * r + acc
t3 = time.perf_counter()
print(json.dumps({"backend": kernels.BACKEND, "triples": rep["critical_triples"],
                  "failures": len(rep["failures"]), "certify_s": t1 - t0,
                  "laurent_s": t3 - t2}))
"""


def run(pure):
    env = dict(os.environ)
    if pure:
        env["SKEINPBW_PURE"] = "1"
    else:
        env.pop("SKEINPBW_PURE", None)
    out = subprocess.run([sys.executable, "-c", WORKLOAD], env=env, check=True,
                         capture_output=True, text=True).stdout
    return json.loads(out.strip().splitlines()[-1])


def main():
    fast, slow = run(False), run(True)
    if fast["backend"] != "cython":
        print("compiled kernels not built; only the fallback is available")
    for r in (fast, slow):
        print(f"{r['backend']:>7}: certify {r['certify_s']:.2f} s ({r['triples']} triples, "
              f"{r['failures']} failures), laurent {r['laurent_s']:.2f} s")
    if fast["backend"] == "cython":
        print(f"speedup: certify x{slow['certify_s'] / fast['certify_s']:.2f}, "
              f"laurent x{slow['laurent_s'] / fast['laurent_s']:.2f}")


if __name__ == "__main__":
    main()
