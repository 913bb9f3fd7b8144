"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5]

Each workload is run under both backends; results are checked equal before
timings are reported.
"""
import argparse
import random
import timeit

from fermat_adjoint import _kernels


def _bareiss_rows(seed, n_rows, n_cols):
    rng = random.Random(seed)
    return [[rng.randint(-3, 3) for _ in range(n_cols)] for _ in range(n_rows)]


WORKLOADS = {
    "residue_counts p=13 v=13 d=40": (
        "residue_counts", (list(range(13)), 13, 40)),
    "residue_counts p=29 v=15 d=30": (
        "residue_counts", (list(range(0, 29, 2)), 29, 30)),
    "reachable_residues p=61 v=20 d=60": (
        "reachable_residues", (list(range(1, 60, 3)), 61, 60)),
    "bareiss_rank 400x12": (
        "bareiss_rank", (_bareiss_rows(1, 400, 12), 12)),
    "bareiss_rank 12x12 x200": (
        "bareiss_many", ([_bareiss_rows(s, 12, 12) for s in range(200)], 12)),
}


def _call(kernels, name, args):
    if name == "bareiss_many":
        mats, cols = args
        return [kernels.bareiss_rank(m, cols) for m in mats]
    return getattr(kernels, name)(*args)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args(argv)
    backends = _kernels.BACKENDS
    if "cython" not in backends:
        print("compiled extension not built; timing the Python fallback only")
    print(f"{'workload':36} " + " ".join(f"{b:>10}" for b in backends) + "   speedup")
    for label, (name, params) in WORKLOADS.items():
        results = {b: _call(k, name, params) for b, k in backends.items()}
        if len({repr(r) for r in results.values()}) != 1:
            raise SystemExit(f"backends disagree on {label}")
        times = {}
        for b, k in backends.items():
            runs = timeit.repeat(lambda: _call(k, name, params), number=1, repeat=args.repeat)
            times[b] = min(runs)
        cells = " ".join(f"{times[b] * 1e3:8.2f}ms" for b in backends)
        speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
        print(f"{label:36} {cells} {speed}")


if __name__ == "__main__":
    main()
