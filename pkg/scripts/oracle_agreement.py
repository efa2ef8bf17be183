"""Compare the validity search with brute-force cycle enumeration on random instances."""

from __future__ import annotations

import argparse
import random
import time
from dataclasses import dataclass

from orthoradial.io_cli.generator import perturbed_rep
from orthoradial.validity import is_valid, oracle_validity


@dataclass
class Config:
    count: int = 1000
    seed: int = 0
    min_n: int = 3
    max_n: int = 12


def run(cfg: Config) -> int:
    t0 = time.perf_counter()
    invalid = disagree = 0
    for i in range(cfg.count):
        rng = random.Random(cfg.seed + i)
        rep = perturbed_rep(rng, rng.randint(cfg.min_n, cfg.max_n))
        fast = is_valid(rep).valid
        slow = oracle_validity(rep).valid
        invalid += not fast
        if fast != slow:
            disagree += 1
            print(f"seed {cfg.seed + i}: search says {fast}, oracle says {slow}")
    print(f"{cfg.count} instances, {invalid} invalid, {disagree} disagreements, "
          f"{time.perf_counter() - t0:.1f}s")
    return 1 if disagree else 0


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    a = p.parse_args()
    return run(Config(count=a.count, seed=a.seed, max_n=a.max_n))


if __name__ == "__main__":
    raise SystemExit(main())
