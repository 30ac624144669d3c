"""Exact computations on charged higher-level Fock spaces of affine sl_m."""

from .errors import InvariantError
from .fock import AffineWeight, FockSpaceParams, FockVector

__all__ = ["AffineWeight", "FockSpaceParams", "FockVector", "InvariantError"]
__version__ = "0.1.0"
