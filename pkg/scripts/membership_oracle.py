"""Compare the one-relator decision procedure with a dense span computation.

The oracle lives in tests/oracles.py; run from the repository root.
"""

import argparse
import random
import sys
import time
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "tests"))

from conftest import random_poly  # noqa: E402
from oracles import span_membership  # noqa: E402

from bracealg.onerelator import OneRelatorIdeal  # noqa: E402
from bracealg.words import enumerate_marked  # noqa: E402


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    ap.add_argument("--max-degree", type=int, default=5)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    agree = members = 0
    t = time.perf_counter()
    for _ in range(args.cases):
        letters = ["x1", "x2"][: rng.randint(1, 2)]
        f = random_poly(rng, letters, 3, 2)
        ideal = OneRelatorIdeal(f, letters)
        room = args.max_degree - f.degree + 1
        h = random_poly(rng, letters, args.max_degree)
        if room >= 1 and rng.random() < 0.5:
            u = rng.choice(enumerate_marked(letters, rng.randint(1, room)))
            h = ideal.psi(u) * rng.choice([1, -2, 3])
        verdict = ideal.decide(h).member
        members += verdict
        agree += verdict == span_membership(ideal.relator, letters, h)
    print(f"{agree}/{args.cases} agree, {members} members, {time.perf_counter() - t:.2f}s")
    return 0 if agree == args.cases else 1


if __name__ == "__main__":
    sys.exit(main())
