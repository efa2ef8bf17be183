"""Small hand-built instances used by tests, scripts and examples."""

from __future__ import annotations

import random

from .builders import rep_from_drawing
from .io_cli.generator import grid_rep, spiral_rep
from .representation import OrthoRadialRep


def ring(k: int = 4) -> OrthoRadialRep:
    """A single essential cycle of ``k`` vertices."""
    return grid_rep(1, k)


def grid(rings: int = 2, spokes: int = 4) -> OrthoRadialRep:
    return grid_rep(rings, spokes)


def staircase(seed: int = 0, n: int = 12) -> OrthoRadialRep:
    """Locally consistent, but one ring climbs a step: undrawable without bends."""
    return spiral_rep(random.Random(seed), n)


def l_shape() -> OrthoRadialRep:
    """Two rings; the face between two spokes has exactly one concave corner (vertex 6)."""
    coords = {0: (0, 0), 1: (0, 8), 2: (8, 0), 3: (8, 4), 4: (8, 8), 5: (4, 8), 6: (4, 4)}
    edges = [(0, 1), (1, 0), (2, 3), (3, 4), (4, 2),
             (0, 2), (1, 5), (5, 4), (3, 6), (6, 5)]
    return rep_from_drawing(coords, edges)


def comb_face() -> OrthoRadialRep:
    """Face with one notch on its outer side and two on its inner side.

    Vertex 6 is a horizontal port whose three candidates are the right
    side 3 -> 7 and the down edges 10 -> 11 and 14 -> 15 of the inner
    notches, in this order.
    """
    coords = {
        0: (0, 0), 1: (0, 4), 2: (0, 8), 3: (0, 16),
        5: (4, 4), 6: (4, 8),
        7: (12, 16), 8: (12, 12), 9: (8, 12), 10: (8, 10), 11: (12, 10), 12: (12, 6),
        13: (8, 6), 14: (8, 4), 15: (12, 4), 16: (12, 0),
        4: (0, 20), 17: (12, 20),
    }
    # ring 0: 0 1 2 3 4 ; ring 12: 16 15 12 11 8 7 17
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0),
             (16, 15), (15, 12), (12, 11), (11, 8), (8, 7), (7, 17), (17, 16),
             (0, 16), (3, 7), (4, 17),
             (1, 5), (5, 6), (6, 2),
             (9, 8), (10, 9), (10, 11),
             (13, 12), (14, 13), (14, 15)]
    return rep_from_drawing(coords, edges)


def with_bridges() -> OrthoRadialRep:
    """Two-ring grid with a pendant path 10 - 8 - 9 hanging into one face."""
    coords = {0: (0, 0), 1: (0, 4), 2: (0, 8), 3: (0, 12),
              4: (8, 0), 5: (8, 4), 6: (8, 8), 7: (8, 12),
              8: (2, 6), 9: (4, 6), 10: (0, 6)}
    edges = [(0, 1), (1, 10), (10, 2), (2, 3), (3, 0), (4, 5), (5, 6), (6, 7), (7, 4),
             (0, 4), (1, 5), (2, 6), (3, 7), (10, 8), (8, 9)]
    return rep_from_drawing(coords, edges)
