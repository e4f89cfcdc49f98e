"""Integer lattice helpers: unimodular reduction, Smith invariants, exact solves."""

from functools import reduce
from math import gcd

import numpy as np
from sympy import Matrix, ZZ
from sympy.core.intfunc import igcdex
from sympy.matrices.normalforms import smith_normal_form


def content(vector: list[int] | tuple[int, ...]) -> int:
    """gcd of the entries (0 for the zero vector)."""
    return reduce(gcd, (abs(int(v)) for v in vector), 0)


def is_primitive(vector: list[int] | tuple[int, ...]) -> bool:
    return content(vector) == 1


def row_kernel(row: list[int]) -> list[list[int]]:
    """Basis of {x in Z^k : row . x = 0}.

    Column operations built from extended gcd steps turn ``row`` into
    (g, 0, ..., 0); the accumulated unimodular matrix U then has the kernel
    basis as its columns 1..k-1.
    """
    k = len(row)
    if k == 0:
        return []
    current = np.array([int(v) for v in row], dtype=object)
    U = np.eye(k, dtype=object)
    for j in range(1, k):
        a, b = current[0], current[j]
        if b == 0:
            continue
        s, t, g = igcdex(int(a), int(b))
        col0 = U[:, 0].copy()
        colj = U[:, j].copy()
        U[:, 0] = s * col0 + t * colj
        U[:, j] = (-b // g) * col0 + (a // g) * colj
        current[0], current[j] = g, 0
    if current[0] == 0:
        # Zero row: everything is in the kernel.
        return [[int(v) for v in U[:, j]] for j in range(k)]
    return [[int(v) for v in U[:, j]] for j in range(1, k)]


def invariant_factors(columns: list[list[int]], nrows: int) -> list[int]:
    """Invariant factors of Z^nrows / span(columns), one per row, in divisibility order.

    Zeros stand for free summands and are listed last.
    """
    if nrows == 0:
        return []
    cols = [c for c in columns if any(c)]
    if not cols:
        return [0] * nrows
    M = Matrix(nrows, len(cols), lambda i, j: int(cols[j][i]))
    D = smith_normal_form(M, domain=ZZ)
    diagonal = [abs(int(D[i, i])) for i in range(min(D.shape))]
    diagonal += [0] * (nrows - len(diagonal))
    return _canonical_chain(diagonal)


def _canonical_chain(diagonal: list[int]) -> list[int]:
    """Rewrite a diagonal presentation so that d_1 | d_2 | ... with zeros last."""
    finite = [d for d in diagonal if d != 0]
    zeros = len(diagonal) - len(finite)
    changed = True
    while changed:
        changed = False
        for i in range(len(finite)):
            for j in range(i + 1, len(finite)):
                a, b = finite[i], finite[j]
                if b % a != 0:
                    g = gcd(a, b)
                    finite[i], finite[j] = g, a * b // g
                    changed = True
    return sorted(finite) + [0] * zeros


def integer_det(rows: list[tuple[int, ...]] | list[list[int]]) -> int:
    if not rows:
        return 1
    return int(Matrix([list(r) for r in rows]).det())


def unimodular_inverse(rows: list[tuple[int, ...]] | list[list[int]]) -> list[list[int]]:
    """Exact inverse of a determinant +-1 integer matrix."""
    if not rows:
        return []
    inverse = Matrix([list(r) for r in rows]).inv()
    return [[int(inverse[i, j]) for j in range(inverse.shape[1])] for i in range(inverse.shape[0])]


def mat_vec(matrix: list[list[int]] | tuple[tuple[int, ...], ...], vector: tuple[int, ...]) -> tuple[int, ...]:
    if not matrix:
        return ()
    product = np.array(matrix, dtype=object).dot(np.array(vector, dtype=object))
    return tuple(int(v) for v in product)


def transpose(matrix: list[list[int]]) -> list[list[int]]:
    if not matrix:
        return []
    return [list(col) for col in zip(*matrix)]
