"""Print P and T_d for a handful of small closed braids.

    python3 scripts/invariant_table.py --max-d 3
"""

from __future__ import annotations

import argparse

from yhlinks import BraidWord, homfly, td
from yhlinks.braid import components, linking_matrix

SAMPLES = {
    "unknot": BraidWord(1),
    "2-unlink": BraidWord(2),
    "Hopf+": BraidWord(2, (1, 1)),
    "Hopf-": BraidWord(2, (-1, -1)),
    "trefoil": BraidWord(2, (1, 1, 1)),
    "figure-eight": BraidWord(3, (1, -2, 1, -2)),
    "Whitehead": BraidWord(3, (1, 1, -2, 1, -2)),
    "L4a1": BraidWord(2, (1, 1, 1, 1)),
    "trefoil+unknot": BraidWord(3, (1, 1, 1, 2, 2)),
    "3-chain": BraidWord(3, (1, 1, 2, 2)),
}


def main() -> None:
    ap = argparse.ArgumentParser()
    ap.add_argument("--max-d", type=int, default=3)
    ap.add_argument("--method", default="both", choices=["matrix", "sublink", "both"])
    args = ap.parse_args()

    for name, beta in SAMPLES.items():
        print(f"== {name}  [{beta}]  components={len(components(beta))}  lk={linking_matrix(beta)}")
        print(f"   P    = {homfly(beta)}")
        for d in range(1, args.max_d + 1):
            print(f"   T_{d}  = {td(beta, d, args.method)}")


if __name__ == "__main__":
    main()
