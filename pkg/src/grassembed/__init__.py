"""Exact representation-theory engine for holomorphic isometric embeddings of Gr_m(C^{m+2}) into quadrics."""

ENGINE_VERSION = "0.1.0"
SCHEMA_VERSION = 1

from .partitions import Cell, Partition, cells, compare, conjugate  # noqa: E402
from .symfunc import SchurExpansion, SparsePolynomial, adams2, multiply, schur_decompose, schur_polynomial  # noqa: E402
from .dims import dim_gl, example_formula, remark_formula  # noqa: E402
from .lr import LRQuery, SquareSplit, lr_coefficients, square_split, su_label, tensor_decompose  # noqa: E402
from .moduli import (  # noqa: E402
    PairConfig,
    center_weight,
    full_report,
    gs_module,
    gs_threshold,
    lemma_components,
    lowest_weight,
    moduli_complement,
)

__all__ = [
    "ENGINE_VERSION",
    "SCHEMA_VERSION",
    "Cell",
    "Partition",
    "cells",
    "compare",
    "conjugate",
    "SchurExpansion",
    "SparsePolynomial",
    "adams2",
    "multiply",
    "schur_decompose",
    "schur_polynomial",
    "dim_gl",
    "example_formula",
    "remark_formula",
    "LRQuery",
    "SquareSplit",
    "lr_coefficients",
    "square_split",
    "su_label",
    "tensor_decompose",
    "PairConfig",
    "center_weight",
    "full_report",
    "gs_module",
    "gs_threshold",
    "lemma_components",
    "lowest_weight",
    "moduli_complement",
]
