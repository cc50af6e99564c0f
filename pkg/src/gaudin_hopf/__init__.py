"""Hamiltonian Hopf bifurcations in generalized su(2) Gaudin systems on S^2 x S^2."""
from .model import DomainError, FixedPoint, ModelParams, PhasePoint

__version__ = "0.1.0"

__all__ = ["DomainError", "FixedPoint", "ModelParams", "PhasePoint", "__version__"]
