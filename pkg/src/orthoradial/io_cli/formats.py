"""JSON instance and drawing files."""

from __future__ import annotations

import json
from collections import defaultdict
from dataclasses import dataclass
from typing import Any, Sequence

from ..builders import rep_from_rotations
from ..compaction import EdgeGeometry, OrthoRadialDrawing
from ..errors import OrthoRadialError, ParseError
from ..plane_graph import Tag
from ..representation import OrthoRadialRep, degrees_to_rot


@dataclass
class Instance:
    rep: OrthoRadialRep
    names: list[str]


def dart_slots(rep: OrthoRadialRep) -> list[int]:
    """Slot of every dart: the index of its edge among the edges joining the same pair."""
    g = rep.graph
    slot = [0] * g.num_darts
    count: dict[tuple[int, int], int] = defaultdict(int)
    for d in g.edges():
        key = (min(g.tail[d], g.head(d)), max(g.tail[d], g.head(d)))
        slot[d] = slot[g.twin[d]] = count[key]
        count[key] += 1
    return slot


def instance_to_dict(rep: OrthoRadialRep, names: Sequence[str] | None = None,
                     angles: bool = False) -> dict[str, Any]:
    g = rep.graph
    names = [str(v) for v in range(g.num_vertices)] if names is None else [str(x) for x in names]
    slot = dart_slots(rep)
    adjacency, values = {}, {}
    for v in range(g.num_vertices):
        ds = g.darts_at(v)
        adjacency[names[v]] = [[names[g.head(d)], slot[d]] for d in ds]
        values[names[v]] = [(2 - rep.rot[d]) * 90 if angles else rep.rot[d] for d in ds]

    def dart(d: int) -> list:
        return [names[g.tail[d]], names[g.head(d)], slot[d]]

    return {
        "vertices": names,
        "adjacency": adjacency,
        ("angles" if angles else "rotations"): values,
        "outer_face": dart(min(g.face_walk(rep.outer))),
        "central_face": dart(min(g.face_walk(rep.central))),
        "reference_edge": dart(rep.ref),
    }


def dumps_instance(rep: OrthoRadialRep, names: Sequence[str] | None = None, angles: bool = False) -> str:
    return json.dumps(instance_to_dict(rep, names, angles), indent=1) + "\n"


def _entry(x: Any) -> tuple[str, int]:
    if isinstance(x, str):
        return x, 0
    if isinstance(x, list) and len(x) == 2 and isinstance(x[0], str) and isinstance(x[1], int):
        return x[0], x[1]
    raise ParseError(f"bad adjacency entry {x!r}; expected name or [name, slot]")


def instance_from_dict(doc: dict[str, Any]) -> Instance:
    try:
        names = [str(x) for x in doc["vertices"]]
        index = {x: i for i, x in enumerate(names)}
        if len(index) != len(names):
            raise ParseError("duplicate vertex names")
        adj_doc = doc["adjacency"]
        adjacency = []
        for x in names:
            row = []
            for entry in adj_doc.get(x, []):
                w, s = _entry(entry)
                if w not in index:
                    raise ParseError(f"vertex {x} lists unknown neighbour {w}")
                row.append((index[w], s))
            adjacency.append(row)
        if "rotations" in doc:
            rot_doc = doc["rotations"]
            rotations = [[int(r) for r in rot_doc[x]] for x in names]
        elif "angles" in doc:
            ang_doc = doc["angles"]
            rotations = [[degrees_to_rot(int(a)) for a in ang_doc[x]] for x in names]
        else:
            raise ParseError("instance needs 'rotations' or 'angles'")

        def dart(key: str) -> tuple[int, int, int]:
            u, v, *rest = doc[key]
            if u not in index or v not in index:
                raise ParseError(f"{key} refers to unknown vertices")
            return index[u], index[v], int(rest[0]) if rest else 0

        rep = rep_from_rotations(len(names), adjacency, rotations, dart("outer_face"),
                                 dart("central_face"), dart("reference_edge"))
    except ParseError:
        raise
    except OrthoRadialError as exc:
        raise ParseError(f"{type(exc).__name__}: {exc}") from exc
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed instance: {type(exc).__name__}: {exc}") from exc
    return Instance(rep, names)


def loads_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    if not isinstance(doc, dict):
        raise ParseError("instance must be a JSON object")
    return instance_from_dict(doc)


def load_instance(path: str) -> Instance:
    with open(path, encoding="utf-8") as fh:
        return loads_instance(fh.read())


# ----------------------------------------------------------------------
# drawings
# ----------------------------------------------------------------------
def vertex_names(drawing: OrthoRadialDrawing, names: Sequence[str] | None) -> dict[int, str]:
    """Input vertices keep their names; synthetic ones get ``<provenance>_<id>``."""
    out = {}
    for v in drawing.vertices:
        if names is not None and v < len(names):
            out[v] = str(names[v])
        elif names is None and drawing.vertex_tags.get(v, Tag.ORIGINAL.value) == Tag.ORIGINAL.value:
            out[v] = str(v)
        else:
            out[v] = f"{drawing.vertex_tags.get(v, 'synthetic')}_{v}"
    return out


def drawing_to_dict(drawing: OrthoRadialDrawing, names: Sequence[str] | None = None,
                    keep_tags: bool = False) -> dict[str, Any]:
    name = vertex_names(drawing, names)
    doc: dict[str, Any] = {
        "phi_total": drawing.phi,
        "vertices": {name[v]: {"ring": drawing.ring[v], "tick": drawing.tick[v]} for v in drawing.vertices},
        "edges": [],
    }
    for e in drawing.edges:
        item = {"u": name[e.u], "v": name[e.v], "kind": e.kind, "extent": e.extent}
        if keep_tags:
            item["provenance"] = e.tag
        doc["edges"].append(item)
    if keep_tags:
        doc["vertex_provenance"] = {name[v]: drawing.vertex_tags.get(v, Tag.ORIGINAL.value)
                                    for v in drawing.vertices}
    return doc


def drawing_from_dict(doc: dict[str, Any]) -> tuple[OrthoRadialDrawing, list[str]]:
    try:
        names = list(doc["vertices"])
        index = {x: i for i, x in enumerate(names)}
        ring = [int(doc["vertices"][x]["ring"]) for x in names]
        tick = [int(doc["vertices"][x]["tick"]) for x in names]
        prov = doc.get("vertex_provenance", {})
        tags = {i: prov.get(x, Tag.ORIGINAL.value) for i, x in enumerate(names)}
        edges = []
        for e in doc["edges"]:
            if e["kind"] not in ("radial", "arc"):
                raise ParseError(f"unknown edge kind {e['kind']!r}")
            edges.append(EdgeGeometry(index[e["u"]], index[e["v"]], e["kind"], int(e["extent"]),
                                      e.get("provenance", Tag.ORIGINAL.value)))
        drawing = OrthoRadialDrawing(ring, tick, int(doc["phi_total"]), edges, list(range(len(names))), tags)
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed drawing: {type(exc).__name__}: {exc}") from exc
    return drawing, names


def dumps_drawing(drawing: OrthoRadialDrawing, names: Sequence[str] | None = None,
                  keep_tags: bool = False) -> str:
    return json.dumps(drawing_to_dict(drawing, names, keep_tags), indent=1) + "\n"


def loads_drawing(text: str) -> tuple[OrthoRadialDrawing, list[str]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"not valid JSON: {exc}") from exc
    return drawing_from_dict(doc)
