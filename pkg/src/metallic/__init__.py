"""Metallic numeration, metallic trees and navigation in {p,4} and {p+2,3}."""

from .arithmetic import Ordering, add, compare, complement, decrement, increment, subtract
from .navigation import (
    Neighbor,
    PathTrace,
    Tiling,
    black_father,
    central_neighbors,
    father,
    neighbors_black,
    neighbors_white,
    path_black,
    path_bottom_up,
    path_top_down,
    path_via_strips,
)
from .numeration import (
    Grade,
    MetallicCode,
    Representation,
    code,
    decode,
    encode,
    is_canonical,
    normalize,
    seq_b,
    seq_m,
    seq_M,
)
from .trees import NodeClass, TreeKind, classify, preferred_son, successor

__all__ = [
    "Grade", "MetallicCode", "Representation", "code", "decode", "encode", "is_canonical",
    "normalize", "seq_b", "seq_m", "seq_M",
    "Ordering", "add", "compare", "complement", "decrement", "increment", "subtract",
    "NodeClass", "TreeKind", "classify", "preferred_son", "successor",
    "Neighbor", "PathTrace", "Tiling", "black_father", "central_neighbors", "father",
    "neighbors_black", "neighbors_white", "path_black", "path_bottom_up", "path_top_down",
    "path_via_strips",
]
