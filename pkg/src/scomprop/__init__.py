"""Exact computations in the free prop on the suspended commutative operad.

Surjection-indexed bases (``mu`` reference and ``nu``), the partition
quotient ``E_Lambda`` and Ext dimensions between simple functors computed
as ranks of idempotent sandwiches.
"""
from .combinatorics import Partition, Permutation, Surjection
from .config import Bounds
from .ext import ExtQuery, ExtResult, ext_dim, ext_symmetric_power, ext_table
from .group_algebra import GroupAlgebraElement, e_sign, e_triv, hook_length_dim, young_idempotent
from .linear import LinCombo, span_dimension
from .partition_cat import LambdaMorphism, odot, p_element, star_compose
from .prop import EMorphism, compose, nu_act, nu_compose, nu_tensor, phi, sandwich, tensor

__all__ = [
    "Bounds", "EMorphism", "ExtQuery", "ExtResult", "GroupAlgebraElement", "LambdaMorphism",
    "LinCombo", "Partition", "Permutation", "Surjection", "compose", "e_sign", "e_triv",
    "ext_dim", "ext_symmetric_power", "ext_table", "hook_length_dim", "nu_act", "nu_compose",
    "nu_tensor", "odot", "p_element", "phi", "sandwich", "span_dimension", "star_compose",
    "tensor", "young_idempotent",
]
