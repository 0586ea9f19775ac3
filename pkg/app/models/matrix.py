from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from app.core.errors import InputError


@dataclass(frozen=True)
class IntMatrix:
    """Exact integer matrix stored row-major; entries are Python ints."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise InputError(f"matrix dimensions must be nonnegative, got {self.rows}x{self.cols}")
        if len(self.entries) != self.rows * self.cols:
            raise InputError(
                f"matrix of shape {self.rows}x{self.cols} needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        if any(not isinstance(value, int) or isinstance(value, bool) for value in self.entries):
            raise InputError("matrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        width = len(rows[0]) if rows else (cols or 0)
        if cols is not None and cols != width:
            raise InputError(f"declared {cols} columns but rows have {width}")
        for index, row in enumerate(rows):
            if len(row) != width:
                raise InputError(f"row {index} has {len(row)} entries, expected {width}")
        return cls(len(rows), width, tuple(int(value) for row in rows for value in row))

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "IntMatrix":
        return cls(rows, cols, (0,) * (rows * cols))

    @classmethod
    def identity(cls, size: int) -> "IntMatrix":
        return cls.diagonal([1] * size, size, size)

    @classmethod
    def diagonal(cls, values: Sequence[int], rows: int, cols: int) -> "IntMatrix":
        if len(values) > min(rows, cols):
            raise InputError(f"{len(values)} diagonal entries do not fit a {rows}x{cols} matrix")
        data = [0] * (rows * cols)
        for index, value in enumerate(values):
            data[index * cols + index] = int(value)
        return cls(rows, cols, tuple(data))

    @classmethod
    def block_diagonal(cls, first: "IntMatrix", second: "IntMatrix") -> "IntMatrix":
        top = [row + [0] * second.cols for row in first.to_rows()]
        bottom = [[0] * first.cols + row for row in second.to_rows()]
        return cls.from_rows(top + bottom, cols=first.cols + second.cols)

    @classmethod
    def blocks(cls, grid: Sequence[Sequence["IntMatrix"]]) -> "IntMatrix":
        """Assemble a block matrix; blocks in a row share a height, blocks in a column a width."""

        widths = [block.cols for block in grid[0]] if grid else []
        result: list[list[int]] = []
        for block_row in grid:
            if [block.cols for block in block_row] != widths:
                raise InputError("block widths do not line up")
            height = block_row[0].rows if block_row else 0
            if any(block.rows != height for block in block_row):
                raise InputError("block heights do not line up")
            for i in range(height):
                line: list[int] = []
                for block in block_row:
                    line.extend(block.row(i))
                result.append(line)
        return cls.from_rows(result, cols=sum(widths))

    @property
    def shape(self) -> tuple[int, int]:
        return (self.rows, self.cols)

    @property
    def is_zero(self) -> bool:
        return not any(self.entries)

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def __getitem__(self, index: tuple[int, int]) -> int:
        i, j = index
        if not (0 <= i < self.rows and 0 <= j < self.cols):
            raise IndexError(f"index {index} outside {self.rows}x{self.cols} matrix")
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> list[int]:
        return list(self.entries[i * self.cols : (i + 1) * self.cols])

    def column(self, j: int) -> list[int]:
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def to_rows(self) -> list[list[int]]:
        return [self.row(i) for i in range(self.rows)]

    def diagonal_entries(self) -> list[int]:
        return [self[i, i] for i in range(min(self.rows, self.cols))]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([self.column(j) for j in range(self.cols)], cols=self.rows)

    def select_rows(self, indices: Iterable[int]) -> "IntMatrix":
        return IntMatrix.from_rows([self.row(i) for i in indices], cols=self.cols)

    def select_columns(self, indices: Iterable[int]) -> "IntMatrix":
        picked = list(indices)
        return IntMatrix.from_rows(
            [[self[i, j] for j in picked] for i in range(self.rows)], cols=len(picked)
        )

    def scaled(self, factor: int) -> "IntMatrix":
        return IntMatrix(self.rows, self.cols, tuple(factor * value for value in self.entries))

    def __neg__(self) -> "IntMatrix":
        return self.scaled(-1)

    def __add__(self, other: "IntMatrix") -> "IntMatrix":
        if self.shape != other.shape:
            raise InputError(
                f"cannot add {self.rows}x{self.cols} and {other.rows}x{other.cols} matrices"
            )
        return IntMatrix(self.rows, self.cols, tuple(a + b for a, b in zip(self.entries, other.entries)))

    def __sub__(self, other: "IntMatrix") -> "IntMatrix":
        return self + (-other)

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise InputError(
                f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols} matrix"
            )
        columns = [other.column(j) for j in range(other.cols)]
        data: list[int] = []
        for i in range(self.rows):
            row = self.row(i)
            data.extend(sum(a * b for a, b in zip(row, column)) for column in columns)
        return IntMatrix(self.rows, other.cols, tuple(data))

    def __str__(self) -> str:
        return str(self.to_rows()) if self.rows else f"[] (0x{self.cols})"
