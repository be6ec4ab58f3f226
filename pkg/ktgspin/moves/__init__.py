from .mn import mn_endpoint_descend, mn_endpoint_descend_with_record
from .patterns import Move, MoveKind, applicable_moves, is_applicable
from .rewrite import apply_move
from .search import SimplificationTrace, TraceStep, replay_trace, simplify

__all__ = [
    "Move",
    "MoveKind",
    "applicable_moves",
    "is_applicable",
    "apply_move",
    "mn_endpoint_descend",
    "mn_endpoint_descend_with_record",
    "SimplificationTrace",
    "TraceStep",
    "replay_trace",
    "simplify",
]
