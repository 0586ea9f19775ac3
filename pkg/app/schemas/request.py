from __future__ import annotations

from typing import Any

from pydantic import BaseModel, ConfigDict, Field, NonNegativeInt, StrictInt, field_validator, model_validator

from app.models import ChainMap, FinPoset, IntMatrix, PerfectComplex


class MatrixPayload(BaseModel):
    """A bare list of rows, or ``{"entries": [...], "cols": c}`` when rows may be empty."""

    model_config = ConfigDict(extra="forbid")

    entries: list[list[StrictInt]]
    cols: NonNegativeInt | None = None

    @model_validator(mode="before")
    @classmethod
    def _accept_bare_rows(cls, data: Any) -> Any:
        if isinstance(data, list):
            return {"entries": data}
        return data

    @model_validator(mode="after")
    def _check_rectangular(self) -> "MatrixPayload":
        widths = {len(row) for row in self.entries}
        if len(widths) > 1:
            raise ValueError(f"rows have different lengths {sorted(widths)}")
        if self.entries and self.cols is not None and widths != {self.cols}:
            raise ValueError(f"rows have {widths.pop()} entries but cols is {self.cols}")
        return self

    def to_matrix(self, cols: int | None = None) -> IntMatrix:
        declared = self.cols if self.cols is not None else cols
        if cols is not None and declared != cols:
            raise ValueError(f"matrix declares {declared} columns, expected {cols}")
        return IntMatrix.from_rows(self.entries, cols=declared)


class ModulePayload(BaseModel):
    """Cokernel presentation: each relation row has one entry per generator."""

    model_config = ConfigDict(extra="forbid")

    generators: NonNegativeInt
    relations: MatrixPayload = Field(default_factory=lambda: MatrixPayload(entries=[]))

    def to_presentation(self) -> tuple[IntMatrix, int]:
        return self.relations.to_matrix(cols=self.generators), self.generators


class ComplexPayload(BaseModel):
    """Differentials listed for degrees bottom_degree + 1 … top."""

    model_config = ConfigDict(extra="forbid")

    bottom_degree: StrictInt = 0
    ranks: list[NonNegativeInt]
    differentials: list[MatrixPayload] = Field(default_factory=list)

    @model_validator(mode="after")
    def _check_count(self) -> "ComplexPayload":
        expected = max(len(self.ranks) - 1, 0)
        if len(self.differentials) != expected:
            raise ValueError(f"{len(self.ranks)} degrees need {expected} differentials, got {len(self.differentials)}")
        return self

    def to_complex(self) -> PerfectComplex:
        matrices = tuple(
            payload.to_matrix(cols=self.ranks[index + 1]) for index, payload in enumerate(self.differentials)
        )
        return PerfectComplex(self.bottom_degree, tuple(self.ranks), matrices)


class ChainMapPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    source: ComplexPayload
    target: ComplexPayload
    components: dict[int, MatrixPayload] = Field(default_factory=dict)

    def to_chain_map(self) -> ChainMap:
        source, target = self.source.to_complex(), self.target.to_complex()
        return ChainMap.from_mapping(
            source,
            target,
            {n: payload.to_matrix(cols=source.rank(n)) for n, payload in self.components.items()},
        )


class PosetPayload(BaseModel):
    model_config = ConfigDict(extra="forbid")

    points: list[str]
    covers: list[tuple[str, str]] = Field(default_factory=list)

    @field_validator("points")
    @classmethod
    def _distinct(cls, points: list[str]) -> list[str]:
        if len(set(points)) != len(points):
            raise ValueError("point names must be distinct")
        return points

    def to_poset(self) -> FinPoset:
        return FinPoset.from_covers(self.points, self.covers)
