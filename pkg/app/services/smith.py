from __future__ import annotations

from dataclasses import dataclass

from app.core.errors import InputError
from app.models import IntMatrix, SNFResult


@dataclass(frozen=True)
class SmithData:
    """Smith form together with V⁻¹, which kernel and quotient coordinates need."""

    result: SNFResult
    V_inverse: IntMatrix

    @property
    def rank(self) -> int:
        return self.result.rank


def smith_normal_form(matrix: IntMatrix) -> SNFResult:
    """Return U, D, V with D = U·A·V in Smith form.

    The pivot is the nonzero entry of least absolute value in the remaining
    block, ties broken by lowest (row, col), so the output is deterministic.
    """

    return smith_decomposition(matrix).result


def smith_decomposition(matrix: IntMatrix) -> SmithData:
    m, n = matrix.shape
    d = matrix.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()
    v_inv = IntMatrix.identity(n).to_rows()

    for t in range(min(m, n)):
        while True:
            pivot = _find_pivot(d, t, m, n)
            if pivot is None:
                return _package(u, d, v, v_inv, m, n)
            i, j = pivot
            if i != t:
                d[t], d[i] = d[i], d[t]
                u[t], u[i] = u[i], u[t]
            if j != t:
                _swap_columns(d, t, j)
                _swap_columns(v, t, j)
                v_inv[t], v_inv[j] = v_inv[j], v_inv[t]

            p = d[t][t]
            clean = True
            for i in range(t + 1, m):
                q = d[i][t] // p
                if q:
                    _add_row_multiple(d, i, t, -q)
                    _add_row_multiple(u, i, t, -q)
                if d[i][t]:
                    clean = False
            for j in range(t + 1, n):
                q = d[t][j] // p
                if q:
                    _add_column_multiple(d, j, t, -q)
                    _add_column_multiple(v, j, t, -q)
                    # V ← V·E with E = I − q·e_t·e_jᵀ, so V⁻¹ ← E⁻¹·V⁻¹ adds q·row j to row t.
                    _add_row_multiple(v_inv, t, j, q)
                if d[t][j]:
                    clean = False
            if not clean:
                continue

            offender = _first_non_multiple(d, t, m, n)
            if offender is None:
                break
            _add_row_multiple(d, t, offender, 1)
            _add_row_multiple(u, t, offender, 1)

        if d[t][t] < 0:
            d[t] = [-x for x in d[t]]
            u[t] = [-x for x in u[t]]

    return _package(u, d, v, v_inv, m, n)


def kernel_basis(matrix: IntMatrix) -> IntMatrix:
    """Columns form a basis of ker(A) ⊆ ℤ^cols; the basis is saturated."""

    data = smith_decomposition(matrix)
    return data.result.V.select_columns(range(data.rank, matrix.cols))


def determinant(matrix: IntMatrix) -> int:
    """Fraction-free Bareiss elimination."""

    if not matrix.is_square:
        raise InputError(f"determinant of a non-square {matrix.rows}x{matrix.cols} matrix")
    size = matrix.rows
    if size == 0:
        return 1
    a = matrix.to_rows()
    sign = 1
    previous = 1
    for k in range(size - 1):
        if a[k][k] == 0:
            swap = next((i for i in range(k + 1, size) if a[i][k]), None)
            if swap is None:
                return 0
            a[k], a[swap] = a[swap], a[k]
            sign = -sign
        for i in range(k + 1, size):
            for j in range(k + 1, size):
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // previous
        previous = a[k][k]
    return sign * a[size - 1][size - 1]


def _find_pivot(d: list[list[int]], t: int, m: int, n: int) -> tuple[int, int] | None:
    best: tuple[int, int] | None = None
    best_abs = 0
    for i in range(t, m):
        row = d[i]
        for j in range(t, n):
            value = abs(row[j])
            if value and (best is None or value < best_abs):
                best, best_abs = (i, j), value
    return best


def _first_non_multiple(d: list[list[int]], t: int, m: int, n: int) -> int | None:
    p = d[t][t]
    for i in range(t + 1, m):
        for j in range(t + 1, n):
            if d[i][j] % p:
                return i
    return None


def _swap_columns(rows: list[list[int]], a: int, b: int) -> None:
    for row in rows:
        row[a], row[b] = row[b], row[a]


def _add_row_multiple(rows: list[list[int]], target: int, source: int, factor: int) -> None:
    src = rows[source]
    rows[target] = [x + factor * y for x, y in zip(rows[target], src)]


def _add_column_multiple(rows: list[list[int]], target: int, source: int, factor: int) -> None:
    for row in rows:
        row[target] += factor * row[source]


def _package(
    u: list[list[int]], d: list[list[int]], v: list[list[int]], v_inv: list[list[int]], m: int, n: int
) -> SmithData:
    result = SNFResult(
        U=IntMatrix.from_rows(u, cols=m),
        D=IntMatrix.from_rows(d, cols=n),
        V=IntMatrix.from_rows(v, cols=n),
    )
    return SmithData(result=result, V_inverse=IntMatrix.from_rows(v_inv, cols=n))
