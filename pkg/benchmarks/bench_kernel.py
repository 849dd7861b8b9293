"""Time the compiled and pure-Python normal-form kernels on random words.

    python3 benchmarks/bench_kernel.py [--words 300] [--length 30]
"""
import argparse
import os
import random
import sys
import timeit

sys.path.insert(0, os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "tests"))

from conftest import load  # noqa: E402
from twistlab import kernel  # noqa: E402
from twistlab.words import context  # noqa: E402

CASES = ["g1", "p5", "h3", "affine_a2", "tree6_1"]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--words", type=int, default=300)
    ap.add_argument("--length", type=int, default=30)
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernel._ckernel is None:
        sys.exit("compiled kernel not available; build with pip install -e . --no-build-isolation")
    rng = random.Random(0)
    print(f"{'matrix':<10} {'python ms':>10} {'cython ms':>10} {'speedup':>8}")
    for name in CASES:
        M = load(name)
        ctx = context(M)
        words = [bytes(rng.randrange(M.rank) for _ in range(args.length)) for _ in range(args.words)]
        for w in words:
            assert kernel.normal_form_python(w, ctx) == kernel.normal_form(w, ctx)

        def run(fn):
            def body():
                for w in words:
                    try:
                        fn(w, ctx)
                    except OverflowError:
                        kernel.normal_form_python(w, ctx)
            return min(timeit.repeat(body, number=1, repeat=args.repeat)) * 1e3

        py = run(kernel.normal_form_python)
        cy = run(kernel.normal_form_compiled)
        print(f"{name:<10} {py:>10.1f} {cy:>10.1f} {py / cy:>7.1f}x")


if __name__ == "__main__":
    main()
