#!/usr/bin/env python3
"""Run the worked examples through the full pipeline and print the reports."""

import argparse
import time

from hfkbraid.cli import main as cli_main

EXAMPLES = [
    ("figure-eight closure, genus 1", "report", "b=3: s1 s2^-1 s1 s2^-1"),
    ("sigma_1^n sigma_2^m, (m, n) = (-3, 2)", "report", "b=3: s1^2 s2^-3"),
    ("pseudo-Anosov, genus 2", "report", "b=5: s1^-2 s3^-1 s2^2 s4 s3^-1"),
    ("staircase s1^2 s2^2 s3^2 s4^2", "staircase", "b=5: s1^2 s2^2 s3^2 s4^2"),
    ("staircase s1^2 s2^2 s3^2 s4^2: tree", "tree", "b=5: s1^2 s2^2 s3^2 s4^2"),
    ("non-staircase loops s1 s2 s3 s4 s5 s4 s6", "staircase", "b=7: s1 s2 s3 s4 s5 s4 s6"),
]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args()
    for title, cmd, braid in EXAMPLES:
        print(f"==== {title}: {cmd} {braid!r}")
        t0 = time.perf_counter()
        code = cli_main([cmd, braid] + (["--json"] if args.json else []))
        print(f"---- exit {code}, {time.perf_counter() - t0:.2f}s\n")


if __name__ == "__main__":
    main()
