"""Per-depth census of the exchange tree: closed-form case labels in the -1
component and the bit length of the largest c-matrix entry.

    python scripts/case_census.py --depth 14
"""

import argparse
from collections import Counter
from dataclasses import dataclass

from markov_farey import closedform as cf
from markov_farey import farey as fy


@dataclass
class CensusConfig:
    depth: int = 12


def census(cfg: CensusConfig):
    per_depth: dict[int, Counter] = {}
    max_bits: dict[int, int] = {}
    for T, w in fy.iter_tree(cfg.depth):
        d = len(w)
        if not w or w[0] is fy.ParityClass.Cm1:
            per_depth.setdefault(d, Counter())[cf.classify(T).value] += 1
        M = cf.c_matrix(T)
        bits = max(abs(x) for row in M.complementary for x in row).bit_length()
        max_bits[d] = max(max_bits.get(d, 0), bits)
    return per_depth, max_bits


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depth", type=int, default=CensusConfig.depth)
    cfg = CensusConfig(depth=parser.parse_args().depth)
    per_depth, max_bits = census(cfg)
    labels = [c.value for c in cf.CaseLabel]
    print("depth " + " ".join(f"{l:>8}" for l in labels) + "  max-bits")
    for d in range(cfg.depth + 1):
        counts = per_depth.get(d, Counter())
        print(f"{d:>5} " + " ".join(f"{counts[l]:>8}" for l in labels) + f"  {max_bits[d]:>8}")


if __name__ == "__main__":
    main()
