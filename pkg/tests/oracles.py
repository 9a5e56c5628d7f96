"""Independent recomputations used to cross-check the library.

These deliberately avoid the code paths under test: the product oracle
assembles one big linear system over all dim^3 structure coefficients
and hands it to the generic eliminator, and the sympy helpers rebuild
matrices in a foreign CAS.
"""

import sympy

from symplie.linalg import Matrix, solve
from symplie.rationals import Q, qstr
from symplie.symplectic import ProductTensor


def brute_force_canonical_product(algebra, form) -> ProductTensor:
    """Solve 3*omega(ei o ej, ew) = omega([ei,ej], ew) + omega([ei,ew], ej)
    for every structure coefficient at once (dim^3 unknowns)."""
    n = algebra.dim
    om = form.matrix
    if n == 0:
        return ProductTensor(0, ())
    size = n * n * n
    rows = []
    rhs = []
    zero = Q(0)
    for i in range(n):
        for j in range(n):
            for w in range(n):
                row = [zero] * size
                for k in range(n):
                    c = om.entry(k, w)
                    if c:
                        row[(i * n + j) * n + k] = 3 * c
                rows.append(row)
                acc = zero
                for k, c in enumerate(algebra.table[i][j]):
                    if c:
                        acc += c * om.entry(k, w)
                for k, c in enumerate(algebra.table[i][w]):
                    if c:
                        acc += c * om.entry(k, j)
                rhs.append(acc)
    x = solve(Matrix.from_rows(rows), rhs)
    table = tuple(
        tuple(tuple(x[(i * n + j) * n + k] for k in range(n)) for j in range(n))
        for i in range(n))
    return ProductTensor(n, table)


def to_sympy(m: Matrix) -> sympy.Matrix:
    return sympy.Matrix(m.rows, m.cols,
                        [sympy.Rational(qstr(x)) for row in m.entries for x in row])


def sympy_rank(m: Matrix) -> int:
    if m.rows == 0 or m.cols == 0:
        return 0
    return to_sympy(m).rank()
