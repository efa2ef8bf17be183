"""The full drawing pipeline: validity, rectangulation, flows, coordinates, projection."""

from __future__ import annotations

from dataclasses import dataclass, field

from .compaction import (OrthoRadialDrawing, build_networks, crossings, extract_rotations,
                         feasible_flow, flows_to_coordinates, is_outlying, project_back, squeeze)
from .errors import InconsistentIntegration, NotValid
from .rectangulation import RectangularRep, RectangulationConfig, rectangulate
from .representation import OrthoRadialRep
from .validity import is_valid


@dataclass
class PipelineConfig:
    compact: bool = False  # minimum total flow, then drop empty rings and ticks
    keep_augmentation: bool = False
    jobs: int = 1
    self_check: bool = True  # re-read the drawing: angles, planarity, outlying e*
    rectangulation: RectangulationConfig = field(default_factory=RectangulationConfig)


@dataclass
class DrawResult:
    drawing: OrthoRadialDrawing  # projected, or the rectangular one with keep_augmentation
    full: OrthoRadialDrawing
    rect: RectangularRep


def draw(rep: OrthoRadialRep, cfg: PipelineConfig | None = None) -> DrawResult:
    """Bend-free drawing of a valid representation; raises NotValid with a witness otherwise."""
    cfg = cfg or PipelineConfig()
    res = is_valid(rep, jobs=cfg.jobs)
    if not res.valid:
        raise NotValid(res.witness)
    rcfg = RectangulationConfig(**{**cfg.rectangulation.__dict__, "check_input": False})
    rect = rectangulate(rep, rcfg)
    n_ver, n_hor = build_networks(rect.rep)
    f_ver = feasible_flow(n_ver, compact=cfg.compact)
    f_hor = feasible_flow(n_hor, compact=cfg.compact)
    full = flows_to_coordinates(rect.rep, n_ver, f_ver, n_hor, f_hor)
    drawing = project_back(full, rect.rep, rep)
    if cfg.compact:
        full, drawing = squeeze(full), squeeze(drawing)
    if cfg.self_check:
        check_drawing(drawing, rep)
    return DrawResult(full if cfg.keep_augmentation else drawing, full, rect)


def check_drawing(drawing: OrthoRadialDrawing, rep: OrthoRadialRep) -> None:
    if extract_rotations(drawing, rep) != rep.rot:
        raise InconsistentIntegration("drawn angles differ from the representation")
    bad = crossings(drawing)
    if bad:
        raise InconsistentIntegration(f"drawing is not plane: {bad[:5]}")
    if not is_outlying(drawing, rep):
        raise InconsistentIntegration("reference edge is not outlying in the drawing")
