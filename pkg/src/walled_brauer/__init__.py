"""Computations in the walled Brauer algebra B_{r,s}(delta)."""

from .cells import (
    ModuleElement,
    ModuleLabel,
    ModuleVector,
    X_set,
    act_diagram,
    act_element,
    annihilator,
    module_basis,
    module_dim,
    module_labels,
    theta_set,
    v_f,
    verify_theorem1,
)
from .coefficients import DELTA, DeltaPoly, RatFunc
from .diagrams import WalledDiagram, compose, enumerate_diagrams, word_to_diagram
from .elements import AlgebraElement, left_mul_gen, mul, parse_element
from .normal_form import NormalWord, enumerate_basis, genfun, normal_word_of, parse_normal
from .rewriting import reduce, reduce_prime, reduce_second
from .symmetric import SpechtModule, check_tableau, specht_dim, standard_tableaux
from .words import Context, parse_word, run

__version__ = "0.1.0"

__all__ = [
    "AlgebraElement", "Context", "DELTA", "DeltaPoly", "ModuleElement", "ModuleLabel",
    "ModuleVector", "NormalWord", "RatFunc", "SpechtModule", "WalledDiagram", "X_set",
    "act_diagram", "act_element", "annihilator", "check_tableau", "compose",
    "enumerate_basis", "enumerate_diagrams", "genfun", "left_mul_gen", "module_basis",
    "module_dim", "module_labels", "mul", "normal_word_of", "parse_element",
    "parse_normal", "parse_word", "reduce", "reduce_prime", "reduce_second", "run",
    "specht_dim", "standard_tableaux", "theta_set", "v_f", "verify_theorem1",
    "word_to_diagram",
]
