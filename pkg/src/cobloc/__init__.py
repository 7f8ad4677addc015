"""Canonical 2D open/closed cobordisms with boundary, their localisations and invertible TFTs."""
from .errors import CobError
from .expr import eval_expr, parse, pretty
from .glue import compose, compose_all, tensor, tensor_all
from .kernels import BACKEND
from .surface import (ArcCycle, Cobordism, Component, MarkedCircle, ObjectSig, Slot,
                      euler_char, from_json, identity, omega, theta, to_json)

__version__ = "0.1.0"

__all__ = [
    "BACKEND", "ArcCycle", "CobError", "Cobordism", "Component", "MarkedCircle", "ObjectSig",
    "Slot", "compose", "compose_all", "euler_char", "eval_expr", "from_json", "identity",
    "omega", "parse", "pretty", "tensor", "tensor_all", "theta", "to_json",
]
