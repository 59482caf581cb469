"""Boundary-interpolating neural network operators on a triangle."""
from .activation import Activation, Kernel, kernel_from, make_activation, register_activation
from .geometry import Segment, Triangle
from .operators import Kind, OperatorSpec, apply, eval_gbs, eval_prod, eval_sx, eval_sy
from .targets import TargetFunction, from_expression, get_target

__all__ = [
    "Activation", "Kernel", "kernel_from", "make_activation", "register_activation",
    "Segment", "Triangle",
    "Kind", "OperatorSpec", "apply", "eval_sx", "eval_sy", "eval_prod", "eval_gbs",
    "TargetFunction", "from_expression", "get_target",
]
