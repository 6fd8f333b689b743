"""Count normal words by degree and alphabet size, marked and unmarked."""

import argparse

from bracealg.words import alphabet, catalan, enumerate_marked, enumerate_normal


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--max-degree", type=int, default=7)
    ap.add_argument("--letters", type=int, default=2)
    args = ap.parse_args()
    letters = alphabet(args.letters)
    print(f"{'d':>3} {'catalan':>8} {'normal':>8} {'one y':>8}")
    for d in range(1, args.max_degree + 1):
        normal = len(enumerate_normal(letters, d))
        marked = len(enumerate_marked(letters, d)) if d <= 6 else "-"
        print(f"{d:>3} {catalan(d - 1):>8} {normal:>8} {marked:>8}")


if __name__ == "__main__":
    main()
