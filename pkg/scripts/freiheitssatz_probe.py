"""Probe random relators involving x2 against random elements over x1 alone."""

import argparse
import random

from bracealg.algebra import Polynomial
from bracealg.notation import serialize
from bracealg.onerelator import freiheitssatz_probe
from bracealg.words import enumerate_normal


def random_poly(rng, letters, max_degree, terms=3):
    out = Polynomial.zero()
    for _ in range(terms):
        w = rng.choice(enumerate_normal(letters, rng.randint(1, max_degree)))
        out = out + Polynomial.word(w) * rng.choice([-2, -1, 1, 2, 3])
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--cases", type=int, default=50)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    done = held = 0
    while done < args.cases:
        f = random_poly(rng, ["x1", "x2"], 3)
        h = random_poly(rng, ["x1"], 4)
        if "x2" not in f.letters() or not h:
            continue
        ok = freiheitssatz_probe(f, h, 2)
        held += ok
        done += 1
        if not ok:
            print("counterexample:", serialize(f), "|", serialize(h))
    print(f"{held}/{done} probes: h not in the ideal")


if __name__ == "__main__":
    main()
