"""Exact Lights Out solvers on arbitrary simple graphs, plus a play service.

The package is organised around GF(2) linear algebra (`f2linalg`), graph
construction (`graph`), the press-game itself and its variants (`game`),
integer machinery for the k-colored generalisation (`zlinalg`, `colored`),
minimum-weight press searches (`minweight`), a gate-level hardware model
(`circuit`), and two front doors: a command line (`cli`) and a REST
service (`service`).
"""

from .f2linalg import BitMatrix, BitVector, dot, image_contains, kernel_basis, row_reduce, solve

__all__ = [
    "BitMatrix",
    "BitVector",
    "dot",
    "image_contains",
    "kernel_basis",
    "row_reduce",
    "solve",
]
