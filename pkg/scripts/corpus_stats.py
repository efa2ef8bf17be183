"""Draw every instance of a random corpus and summarise what the pipeline did."""

from __future__ import annotations

import argparse
import random
from collections import Counter
from dataclasses import dataclass

from orthoradial.errors import NotValid
from orthoradial.io_cli.generator import perturbed_rep
from orthoradial.pipeline import PipelineConfig, draw


@dataclass
class Config:
    count: int = 500
    seed: int = 0
    max_n: int = 12
    compact: bool = False


def run(cfg: Config) -> Counter:
    stats: Counter = Counter()
    growth = []
    for i in range(cfg.count):
        rng = random.Random(cfg.seed + i)
        rep = perturbed_rep(rng, rng.randint(3, cfg.max_n))
        try:
            res = draw(rep, PipelineConfig(compact=cfg.compact))
        except NotValid as exc:
            stats[f"invalid ({exc.witness.kind.value})"] += 1
            continue
        s = res.rect.stats
        stats["drawn"] += 1
        stats["augmentations"] += s.augmentations
        stats["vertical ports"] += s.vertical_ports
        stats["horizontal ports"] += s.horizontal_ports
        stats["horizontal insertions"] += s.horizontal_insertions
        size_in = rep.graph.num_vertices + rep.graph.num_darts // 2
        g = res.rect.rep.graph
        growth.append((g.num_vertices + g.num_darts // 2) / size_in)
    for k, v in sorted(stats.items()):
        print(f"{k:24s} {v}")
    if growth:
        print(f"{'max size growth':24s} {max(growth):.2f}")
    return stats


def main() -> int:
    p = argparse.ArgumentParser(description=__doc__)
    p.add_argument("--count", type=int, default=Config.count)
    p.add_argument("--seed", type=int, default=Config.seed)
    p.add_argument("--max-n", type=int, default=Config.max_n)
    p.add_argument("--compact", action="store_true")
    a = p.parse_args()
    run(Config(a.count, a.seed, a.max_n, a.compact))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
