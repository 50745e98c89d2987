"""Interaction graphs K4T of planted trees and reconstruction of the tree."""

from .canonical import canonical_form, is_isomorphic
from .complex import (
    BuildOptions,
    ComplexGraph,
    InteractionVertex,
    adjacent,
    build_complex,
    enumerate_vertices,
    lambda_set,
    prune_isolated,
    weight_toward,
)
from .graphio import GraphFormatError, export_graph, import_graph
from .reconstruct import ReconstructionError, ReconstructionResult, reconstruct
from .tree import (
    CoreTree,
    RootedPlaneTree,
    TreeParseError,
    core_tree,
    direction,
    homeo_reduce,
    is_stacked,
    parse_tree,
    serialize_tree,
    subdivide,
)

__all__ = [
    "BuildOptions", "ComplexGraph", "CoreTree", "GraphFormatError", "InteractionVertex",
    "ReconstructionError", "ReconstructionResult", "RootedPlaneTree", "TreeParseError",
    "adjacent", "build_complex", "canonical_form", "core_tree", "direction",
    "enumerate_vertices", "export_graph", "homeo_reduce", "import_graph", "is_isomorphic",
    "is_stacked", "lambda_set", "parse_tree", "prune_isolated", "reconstruct",
    "serialize_tree", "subdivide", "weight_toward",
]
