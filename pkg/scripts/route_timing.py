"""Wall-clock comparison of the matrix route and the sublink route on random braids.

    python3 scripts/route_timing.py --count 30 --max-n 5 --max-len 10 --max-d 3
"""

from __future__ import annotations

import argparse
import dataclasses
import random
import time

from yhlinks.braid import random_braid
from yhlinks.invariants import td_via_matrix, td_via_sublinks


@dataclasses.dataclass
class TimingConfig:
    count: int = 30
    max_n: int = 5
    max_len: int = 10
    max_d: int = 3
    seed: int = 0


def run(cfg: TimingConfig) -> dict[tuple[int, int], list[float]]:
    rng = random.Random(cfg.seed)
    # (n, d) -> [matrix seconds, sublink seconds, samples]
    table: dict[tuple[int, int], list[float]] = {}
    for _ in range(cfg.count):
        n = rng.randint(2, cfg.max_n)
        beta = random_braid(n, rng.randint(0, cfg.max_len), rng)
        for d in range(1, cfg.max_d + 1):
            t0 = time.perf_counter()
            a = td_via_matrix(beta, d)
            t1 = time.perf_counter()
            b = td_via_sublinks(beta, d)
            t2 = time.perf_counter()
            if a != b:
                raise SystemExit(f"routes disagree on {beta} at d={d}")
            row = table.setdefault((n, d), [0.0, 0.0, 0])
            row[0] += t1 - t0
            row[1] += t2 - t1
            row[2] += 1
    return table


def main() -> None:
    ap = argparse.ArgumentParser()
    for f in dataclasses.fields(TimingConfig):
        ap.add_argument("--" + f.name.replace("_", "-"), type=int, default=f.default)
    cfg = TimingConfig(**vars(ap.parse_args()))
    table = run(cfg)
    print(f"{'n':>2} {'d':>2} {'runs':>5} {'matrix ms':>10} {'sublink ms':>11}")
    for (n, d), (tm, ts, k) in sorted(table.items()):
        print(f"{n:>2} {d:>2} {int(k):>5} {1000 * tm / k:>10.2f} {1000 * ts / k:>11.2f}")


if __name__ == "__main__":
    main()
