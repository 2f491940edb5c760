"""Exact exterior calculus on C^n and the classification of natural
differential operators between bundles of holomorphic forms."""

__version__ = "0.1.0"

from .scalars import I, ONE, ZERO, Scalar  # noqa: E402
from .polynomials import Polynomial  # noqa: E402
from .forms import Form, exterior_derivative, pullback, taylor_component, wedge  # noqa: E402
from .tensors import CovariantTensor, alt_embed, nabla, skew_symmetrize, tensor_product  # noqa: E402
from .graded import (  # noqa: E402
    GradedMonomial,
    GradedPolynomial,
    GradedVariable,
    degree_and_homogeneity,
    evaluate,
    gmul,
)
from .jets import JetGerm, compose, invert, random_unitriangular_automorphism, scaling_germ  # noqa: E402
from .classifier import (  # noqa: E402
    OperatorBasis,
    OperatorSignature,
    apply_operator,
    enumerate_basis,
    solve_degree_equation,
)
from .parsing import parse_form, parse_graded, parse_map  # noqa: E402

__all__ = [
    "Scalar", "I", "ONE", "ZERO", "Polynomial",
    "Form", "wedge", "exterior_derivative", "pullback", "taylor_component",
    "CovariantTensor", "nabla", "skew_symmetrize", "alt_embed", "tensor_product",
    "GradedVariable", "GradedMonomial", "GradedPolynomial", "gmul", "evaluate",
    "degree_and_homogeneity",
    "JetGerm", "compose", "invert", "scaling_germ", "random_unitriangular_automorphism",
    "OperatorSignature", "OperatorBasis", "solve_degree_equation", "enumerate_basis",
    "apply_operator",
    "parse_form", "parse_map", "parse_graded",
]
