from .editor import DiagramEditor
from .faces import ccw_next, face_nodes, faces, genus, rotation, sign_for_rotation
from .isomorphism import diagram_graph, diagram_hash, is_isomorphic
from .surgery import (
    abstract_graph,
    broken_ends,
    complement_is_closed,
    complement_is_single_cycle,
    constituent_cycles,
    cut_edge,
    cut_edge_of,
    default_cut_position,
    extract_subdiagram,
    extract_subdiagram_with_map,
    mirror,
    reglue,
    require_closed,
    require_edge,
    reverse_edge,
    vertex_free_edges,
)
from .validate import validate

__all__ = [
    "DiagramEditor",
    "ccw_next",
    "face_nodes",
    "faces",
    "genus",
    "rotation",
    "sign_for_rotation",
    "diagram_graph",
    "diagram_hash",
    "is_isomorphic",
    "abstract_graph",
    "broken_ends",
    "complement_is_closed",
    "complement_is_single_cycle",
    "constituent_cycles",
    "cut_edge",
    "cut_edge_of",
    "default_cut_position",
    "extract_subdiagram",
    "extract_subdiagram_with_map",
    "mirror",
    "reglue",
    "require_closed",
    "require_edge",
    "reverse_edge",
    "vertex_free_edges",
    "validate",
]
