"""Exact S_{1,2} / S_{1,r-1} edge-decomposition of regular graphs."""

from stardecomp.errors import (
    BadCenterSet,
    BadOrder,
    InvalidOrder,
    MalformedGraph6,
    NotBipartite,
    NotCubic,
    NotIndependent,
    NotRegular,
    PreconditionViolated,
    ScaleExceeded,
    StarDecompError,
    UnsupportedSize,
    VertexOutOfRange,
)
from stardecomp.graph import Graph, encode_graph6, parse_graph6

__all__ = [
    "BadCenterSet",
    "BadOrder",
    "Graph",
    "InvalidOrder",
    "MalformedGraph6",
    "NotBipartite",
    "NotCubic",
    "NotIndependent",
    "NotRegular",
    "PreconditionViolated",
    "ScaleExceeded",
    "StarDecompError",
    "UnsupportedSize",
    "VertexOutOfRange",
    "encode_graph6",
    "parse_graph6",
]
