"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat N]

Each row times one kernel on the same inputs under both backends.
"""

import argparse
import random
import timeit

from mihailova import _pykernels as py

try:
    from mihailova import _ckernels as cy
except ImportError:
    cy = None


def _letters(rng, n, rank):
    return [(rng.randint(1, rank), rng.choice((-1, 1))) for _ in range(n)]


def _workloads(rng):
    raw = _letters(rng, 4000, 2)
    u = py.reduce_syllables(_letters(rng, 400, 14))
    v = py.invert_syllables(u)[:300] + py.reduce_syllables(_letters(rng, 100, 14))
    word = py.reduce_syllables(_letters(rng, 60, 2))
    a, b, c, d = py.sanov_eval(word)
    m = ((2, 1, 0, 1), (1, 1, 0, 0), (0, 0, 1, 2), (0, 1, 0, 1))
    return [
        ("reduce_syllables (4000 letters)", lambda k: k.reduce_syllables(raw)),
        ("concat_reduce (400 + 400 syllables)", lambda k: k.concat_reduce(u, v)),
        ("sanov_eval (length-60 word)", lambda k: k.sanov_eval(word)),
        ("sanov_peel (length-60 word)", lambda k: k.sanov_peel(a, b, c, d)),
        ("mat_mul (4x4)", lambda k: k.mat_mul(m, m)),
    ]


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--number", type=int, default=200)
    args = parser.parse_args()
    rng = random.Random(7)
    print(f"{'kernel':40} {'python us':>11} {'cython us':>11} {'speedup':>8}")
    for label, fn in _workloads(rng):
        if cy is not None:
            assert fn(py) == fn(cy), label
        t_py = min(timeit.repeat(lambda: fn(py), number=args.number, repeat=args.repeat)) / args.number
        if cy is None:
            print(f"{label:40} {t_py * 1e6:11.2f} {'n/a':>11} {'n/a':>8}")
            continue
        t_cy = min(timeit.repeat(lambda: fn(cy), number=args.number, repeat=args.repeat)) / args.number
        print(f"{label:40} {t_py * 1e6:11.2f} {t_cy * 1e6:11.2f} {t_py / t_cy:7.1f}x")


if __name__ == "__main__":
    main()
