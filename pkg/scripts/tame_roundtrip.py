"""Decompose seeded random tame maps and recompose them."""

import argparse
import time

from bracealg.automorphisms import compose_factors, decompose_tame, random_tame


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--seeds", type=int, default=50)
    ap.add_argument("--max-steps", type=int, default=4)
    ap.add_argument("--max-deg", type=int, default=3)
    ap.add_argument("--max-total-degree", type=int, default=9)
    args = ap.parse_args()
    for seed in range(args.seeds):
        steps = 1 + seed % args.max_steps
        phi, _ = random_tame(seed, steps, args.max_deg, args.max_total_degree)
        t = time.perf_counter()
        d = decompose_tame(phi)
        ok = d.tame and compose_factors(d.factors) == phi
        ms = (time.perf_counter() - t) * 1000
        print(f"seed {seed:>3} steps {steps} deg {phi.f1.degree},{phi.f2.degree} "
              f"factors {len(d.factors):>2} {'ok' if ok else 'FAIL'} {ms:.1f}ms")


if __name__ == "__main__":
    main()
