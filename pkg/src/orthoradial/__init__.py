"""Ortho-radial representations: validity testing, rectangulation and bend-free drawings."""

from .compaction import OrthoRadialDrawing
from .pipeline import DrawResult, PipelineConfig, draw
from .rectangulation import RectangulationConfig, Strategy, rectangulate
from .representation import OrthoRadialRep
from .validity import ValidityResult, is_valid, oracle_validity

__all__ = [
    "DrawResult",
    "OrthoRadialDrawing",
    "OrthoRadialRep",
    "PipelineConfig",
    "RectangulationConfig",
    "Strategy",
    "ValidityResult",
    "draw",
    "is_valid",
    "oracle_validity",
    "rectangulate",
]
