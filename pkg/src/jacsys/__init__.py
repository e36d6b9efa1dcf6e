"""Exact construction and solution of the coefficient systems attached to
powers of Laurent series in ``x^-1``, with the Jacobian-pair checks built
on them."""

from jacsys.errors import JacsysError
from jacsys.laurent import TruncatedLaurentSeries, Window, monic_nth_root, project, series_mul, series_pow, split
from jacsys.systems import (
    EquationSet,
    SolutionTuple,
    SystemSpec,
    build_generalized,
    build_homogeneous,
    build_modified,
    build_sparse,
    build_standard,
    check_w_homogeneity,
    extend_solution,
    residual,
)

__version__ = "0.1.0"

__all__ = [
    "EquationSet",
    "JacsysError",
    "SolutionTuple",
    "SystemSpec",
    "TruncatedLaurentSeries",
    "Window",
    "build_generalized",
    "build_homogeneous",
    "build_modified",
    "build_sparse",
    "build_standard",
    "check_w_homogeneity",
    "extend_solution",
    "monic_nth_root",
    "project",
    "residual",
    "series_mul",
    "series_pow",
    "split",
]
