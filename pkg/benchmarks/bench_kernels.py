"""Time the compiled and pure-Python kernel backends on the same workloads.

Each workload runs in a fresh interpreter so the backend choice made at import
time is honoured. Usage: ``python3 benchmarks/bench_kernels.py [--repeat 3]``.
"""

import argparse
import os
import subprocess
import sys

WORKLOADS = {
    "drinfeld_image(3,3,5)": "from affschur import yangian; yangian.drinfeld_image(3, 3, 5)",
    "relation grid (thickness<=2)": (
        "from affschur import relations\n"
        "for name in relations.RELATIONS:\n"
        "    for p in relations.relation_grid(name, max_thickness=2, max_degree=2):\n"
        "        relations.check_relation(name, N=5, **p)"
    ),
    "schur products AS(3,3)": (
        "from itertools import product\n"
        "from affschur.aschur import compose, xi\n"
        "from affschur.combinat import coset_matrices, enumerate_compositions\n"
        "W = enumerate_compositions(3, 3)\n"
        "for l, m, n in product(W, repeat=3):\n"
        "    for A in coset_matrices(l, m):\n"
        "        for B in coset_matrices(m, n):\n"
        "            compose(xi(A), xi(B))"
    ),
}

TIMER = (
    "import time\n"
    "from affschur import kernels\n"
    "start = time.perf_counter()\n"
    "{body}\n"
    "print(kernels.BACKEND, time.perf_counter() - start)"
)


def run(body: str, pure: bool) -> tuple[str, float]:
    env = dict(os.environ)
    env.pop("AFFSCHUR_PURE_PYTHON", None)
    if pure:
        env["AFFSCHUR_PURE_PYTHON"] = "1"
    out = subprocess.run(
        [sys.executable, "-c", TIMER.format(body=body)], env=env, capture_output=True, text=True, check=True
    ).stdout.split()
    return out[0], float(out[1])


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()
    print(f"{'workload':32} {'backend':8} {'best s':>8}")
    for name, body in WORKLOADS.items():
        best = {}
        for pure in (False, True):
            times = [run(body, pure) for _ in range(args.repeat)]
            backend = times[0][0]
            best[pure] = min(t for _, t in times)
            print(f"{name:32} {backend:8} {best[pure]:8.3f}")
        print(f"{'':32} {'speedup':8} {best[True] / best[False]:8.2f}x")


if __name__ == "__main__":
    main()
