"""Compare the compiled kernels against the pure-Python fallback.

Times the hot primitives (distance bracketing and the three construction
kernels) on the same random corpus under both implementations and prints
the per-call cost and speedup. Run from the repository root:

    python3 benchmarks/bench_kernels.py [--pairs N] [--tol T] [--seed S]
"""

import argparse
import random
import time

from pmspace import _kernels_py

try:
    from pmspace import _kernels_cy
except ImportError:
    _kernels_cy = None


def random_tuples(rng: random.Random, max_jumps: int) -> tuple[tuple, tuple]:
    n = rng.randint(0, max_jumps)
    locs = sorted({round(rng.uniform(0.0, 8.0), 6) for _ in range(n)})
    levels = sorted({round(rng.uniform(0.001, 1.0), 6) for _ in range(n)})
    m = min(len(locs), len(levels))
    return tuple(locs[:m]), tuple(levels[:m])


def make_corpus(seed: int, pairs: int, max_jumps: int) -> list[tuple]:
    rng = random.Random(seed)
    out = []
    for _ in range(pairs):
        lf, vf = random_tuples(rng, max_jumps)
        lg, vg = random_tuples(rng, max_jumps)
        out.append((lf, vf, lg, vg))
    return out


def run(kern, corpus: list[tuple], tol: float) -> dict[str, float]:
    times: dict[str, float] = {}

    t0 = time.perf_counter()
    for lf, vf, lg, vg in corpus:
        kern.levy_bracket(lf, vf, lg, vg, tol)
    times["levy_bracket"] = time.perf_counter() - t0

    for name, op in (("star_sum", 0), ("star_conorm", 1), ("star_pointwise", 2)):
        fn = getattr(kern, name)
        t0 = time.perf_counter()
        for lf, vf, lg, vg in corpus:
            fn(lf, vf, lg, vg, op)
        times[name] = time.perf_counter() - t0

    return times


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--pairs", type=int, default=2000)
    ap.add_argument("--max-jumps", type=int, default=8)
    ap.add_argument("--tol", type=float, default=1e-12)
    ap.add_argument("--seed", type=int, default=20240817)
    args = ap.parse_args()

    corpus = make_corpus(args.seed, args.pairs, args.max_jumps)

    print(f"corpus: {args.pairs} pairs, up to {args.max_jumps} jumps, tol {args.tol:g}")
    py = run(_kernels_py, corpus, args.tol)
    if _kernels_cy is None:
        print("compiled backend not available; showing pure Python only")
        for name, dt in py.items():
            print(f"{name:16s} python {dt * 1e6 / args.pairs:9.2f} us/call")
        return

    cy = run(_kernels_cy, corpus, args.tol)

    # sanity: both backends must agree bit for bit on this corpus
    for lf, vf, lg, vg in corpus[:200]:
        assert _kernels_py.levy_bracket(lf, vf, lg, vg, args.tol) == \
            _kernels_cy.levy_bracket(lf, vf, lg, vg, args.tol)
        assert tuple(_kernels_py.star_sum(lf, vf, lg, vg, 0)) == \
            tuple(_kernels_cy.star_sum(lf, vf, lg, vg, 0))

    header = f"{'kernel':16s} {'python':>12s} {'compiled':>12s} {'speedup':>9s}"
    print(header)
    print("-" * len(header))
    for name in py:
        us_py = py[name] * 1e6 / args.pairs
        us_cy = cy[name] * 1e6 / args.pairs
        print(f"{name:16s} {us_py:9.2f} us {us_cy:9.2f} us {py[name] / cy[name]:8.1f}x")


if __name__ == "__main__":
    main()
