"""Bisected vertex levelings of link diagrams and the presentations built from them:
braid words, arc presentations and delta diagrams, each checked against the
Kauffman bracket.
"""

from .arc import ArcPresentation, arc_to_pd, to_arc
from .braid import BraidWord, braid_to_pd, to_braid
from .delta import DeltaDiagram, DeltaError, delta_bound, to_delta, verify_delta
from .diagram import (Crossing, DiagramError, LinkDiagram, TrivialDiagramError, parse_pd, parse_pd_json,
                      read_diagrams, reduce_nugatory, serialize_pd, trace_components, trace_faces, validate)
from .invariants import Verdict, bracket, bracket_naive, bracket_sweep, f_poly, same_link, writhe
from .leveling import Leveling, LevelingError, compute_leveling, verify_leveling, widths
from .poly import LaurentPoly
from .rectilinear import RectDiagram, rect_to_pd, to_rectilinear, verify_rectilinear

__all__ = [
    "ArcPresentation", "arc_to_pd", "to_arc",
    "BraidWord", "braid_to_pd", "to_braid",
    "DeltaDiagram", "DeltaError", "delta_bound", "to_delta", "verify_delta",
    "Crossing", "DiagramError", "LinkDiagram", "TrivialDiagramError", "parse_pd", "parse_pd_json",
    "read_diagrams", "reduce_nugatory", "serialize_pd", "trace_components", "trace_faces", "validate",
    "Verdict", "bracket", "bracket_naive", "bracket_sweep", "f_poly", "same_link", "writhe",
    "Leveling", "LevelingError", "compute_leveling", "verify_leveling", "widths",
    "LaurentPoly",
    "RectDiagram", "rect_to_pd", "to_rectilinear", "verify_rectilinear",
]
