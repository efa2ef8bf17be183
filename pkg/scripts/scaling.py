"""Time the validity test on cylinder grids of doubling size."""

from __future__ import annotations

import argparse
import math
import time
from dataclasses import dataclass, field

from orthoradial.io_cli.generator import grid_rep
from orthoradial.validity import is_valid


@dataclass
class Config:
    shapes: list[tuple[int, int]] = field(default_factory=lambda: [(32, 32), (45, 45), (64, 64), (90, 91)])
    repeats: int = 3
    jobs: int = 1


def run(cfg: Config) -> list[float]:
    is_valid(grid_rep(4, 4))  # compile the kernels first
    is_valid(grid_rep(32, 32))
    times: list[float] = []
    prev = 1
    for rings, spokes in cfg.shapes:
        rep = grid_rep(rings, spokes)
        best = float("inf")
        for _ in range(cfg.repeats):
            t0 = time.process_time()
            is_valid(rep, jobs=cfg.jobs)
            best = min(best, time.process_time() - t0)
        n = rings * spokes
        # growth normalised to an exact doubling of n
        ratio = f"  x{(best / times[-1]) ** (1 / math.log2(n / prev)):.2f} per doubling" if times else ""
        prev = n
        times.append(best)
        print(f"{rings:4d} x {spokes:4d}  n={rings * spokes:6d}  {best:8.3f}s{ratio}", flush=True)
    return times


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--repeats", type=int, default=Config.repeats)
    p.add_argument("--jobs", type=int, default=Config.jobs)
    p.add_argument("--shape", action="append", default=None, metavar="RxS",
                   help="grid shape, repeatable (default: 32x32 45x45 64x64 90x91)")
    a = p.parse_args()
    cfg = Config(repeats=a.repeats, jobs=a.jobs)
    if a.shape:
        cfg.shapes = [tuple(int(x) for x in s.lower().split("x")) for s in a.shape]
    run(cfg)
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
