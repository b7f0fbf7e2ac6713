#!/usr/bin/env python3
"""Survey staircase braids: HF+ at s_(g-2) against H*(F - C) for every
staircase form up to a size bound, then the same comparison for positive
braids whose loop sets are not in staircase form."""

import argparse
import itertools
from dataclasses import dataclass

from hfkbraid.braid import BraidWord, format_braid
from hfkbraid.floer import NotStaircase, StaircaseForm, StaircaseWord, eftekhary_check, eftekhary_check_braid


@dataclass(frozen=True)
class SurveyConfig:
    max_genus: int = 2
    max_exponent: int = 3
    random_words: int = 200
    word_length: int = 7
    seed: int = 0


def staircase_forms(cfg: SurveyConfig):
    for g in range(1, cfg.max_genus + 1):
        n = 2 * g
        # a word is a run of even length starting at some index; words separated by a gap
        def layouts(pos):
            yield []
            for start in range(pos, n + 1):
                for k in range(1, (n - start + 1) // 2 + 1):
                    for rest in layouts(start + 2 * k + 1):
                        yield [(start, k)] + rest
        for lay in layouts(1):
            if not lay:
                continue
            sizes = [2 * k for _, k in lay]
            for exps in itertools.product(range(1, cfg.max_exponent + 1), repeat=sum(sizes)):
                words, i = [], 0
                for (start, k), s in zip(lay, sizes):
                    words.append(StaircaseWord(start, exps[i:i + s]))
                    i += s
                yield StaircaseForm(n + 1, tuple(words))


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    for f, v in SurveyConfig.__dataclass_fields__.items():
        ap.add_argument("--" + f.replace("_", "-"), type=int, default=v.default)
    cfg = SurveyConfig(**{k: v for k, v in vars(ap.parse_args()).items()})

    total = bad = 0
    for f in staircase_forms(cfg):
        total += 1
        if not eftekhary_check(f).agrees:
            bad += 1
            print("disagreement:", f)
    print(f"staircase forms: {total} checked, {bad} disagreements")

    import random
    rng = random.Random(cfg.seed)
    seen = set()
    mism = 0
    for _ in range(cfg.random_words):
        g = rng.randint(1, cfg.max_genus + 1)
        w = BraidWord(2 * g + 1, tuple((rng.randint(1, 2 * g), 1) for _ in range(cfg.word_length)))
        if w in seen:
            continue
        seen.add(w)
        try:
            rep = eftekhary_check_braid(w)
        except NotStaircase:
            continue  # no staircase word reachable by the search
        if not rep.agrees:
            mism += 1
            print(f"{format_braid(w):<40} ~ {format_braid(rep.staircase):<32} "
                  f"HF+ {rep.hf_plus_total}  H* {rep.cohomology.total}")
    print(f"non-staircase sample: {len(seen)} words, {mism} mismatches")


if __name__ == "__main__":
    main()
