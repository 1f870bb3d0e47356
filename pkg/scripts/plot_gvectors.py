"""Write the g-vector scatter (SVG and CSV) for a range of depths into an output directory.

    python scripts/plot_gvectors.py --depths 4 8 10 --out figures/
"""

import argparse
from pathlib import Path

from markov_farey import plot


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--depths", type=int, nargs="+", default=[6, 10])
    parser.add_argument("--out", type=Path, default=Path("figures"))
    args = parser.parse_args()
    args.out.mkdir(parents=True, exist_ok=True)
    for depth in args.depths:
        points = plot.collect_gvectors(depth)
        (args.out / f"gvectors_depth{depth}.csv").write_text(plot.to_csv(points))
        (args.out / f"gvectors_depth{depth}.svg").write_text(plot.to_svg(points))
        print(f"depth {depth}: {len(points)} g-vectors")


if __name__ == "__main__":
    main()
