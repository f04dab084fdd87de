"""Mod 2 Steenrod algebra, its twisted version over K(Z/2,1) x K(Z/2,2), and module checks."""

from .expr import ParseError, parse, parse_poly, parse_steenrod, parse_twisted
from .fpmod import AlgebraKind, ModulePresentation, induce_along_phi, realize, tensor_with_plain
from .series import InexactDivision, NegativeCoefficient, PoincareSeries
from .steenrod import AlgebraId, SteenrodElement, adem_normalize, coproduct, multiply
from .twisted import TwistedElement, TwistedSubalgebraId, multiply_twisted, phi, phi_extended, psi
from .unstable import K, BOType, PolyElement, sq_action

__all__ = [
    "AlgebraId",
    "AlgebraKind",
    "BOType",
    "InexactDivision",
    "K",
    "ModulePresentation",
    "NegativeCoefficient",
    "ParseError",
    "PoincareSeries",
    "PolyElement",
    "SteenrodElement",
    "TwistedElement",
    "TwistedSubalgebraId",
    "adem_normalize",
    "coproduct",
    "induce_along_phi",
    "multiply",
    "multiply_twisted",
    "parse",
    "parse_poly",
    "parse_steenrod",
    "parse_twisted",
    "phi",
    "phi_extended",
    "psi",
    "realize",
    "sq_action",
    "tensor_with_plain",
]
__version__ = "0.1.0"
