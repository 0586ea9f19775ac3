from __future__ import annotations

from typing import Literal, Optional, Union

from pydantic import BaseModel

from app.models import FgAbGroup, K0Class, PerfectComplex, SNFResult, ThickSupport, VerifyReport

PointList = Union[list[int], list[str]]
SupportValue = Union[Literal["full"], PointList]


def render_support(support: ThickSupport) -> SupportValue:
    return "full" if support.full else support.sorted_points()


class CanonicalFormSchema(BaseModel):
    rank: int
    invariant_factors: list[int]

    @classmethod
    def of(cls, module: FgAbGroup) -> "CanonicalFormSchema":
        return cls(rank=module.free_rank, invariant_factors=list(module.invariant_factors))


class SupportSchema(BaseModel):
    support: SupportValue


class K0ClassSchema(BaseModel):
    support: Union[Literal["full"], list[int]]
    coords: Union[int, list[int]]

    @classmethod
    def of(cls, klass: K0Class) -> "K0ClassSchema":
        if klass.full:
            return cls(support="full", coords=klass.coords[0])
        return cls(support=list(klass.primes), coords=list(klass.coords))


class SNFSchema(BaseModel):
    U: list[list[int]]
    D: list[list[int]]
    V: list[list[int]]
    diagonal: list[int]

    @classmethod
    def of(cls, result: SNFResult) -> "SNFSchema":
        return cls(
            U=result.U.to_rows(),
            D=result.D.to_rows(),
            V=result.V.to_rows(),
            diagonal=result.diagonal,
        )


class SplitPieceSchema(BaseModel):
    support: SupportValue
    module: CanonicalFormSchema


class SplitSchema(BaseModel):
    pieces: list[SplitPieceSchema]


class HomologyGroupSchema(BaseModel):
    degree: int
    group: CanonicalFormSchema


class HomologySchema(BaseModel):
    homology: list[HomologyGroupSchema]


class ComplexSchema(BaseModel):
    bottom_degree: int
    ranks: list[int]
    differentials: list[list[list[int]]]

    @classmethod
    def of(cls, complex_: PerfectComplex) -> "ComplexSchema":
        return cls(
            bottom_degree=complex_.bottom_degree,
            ranks=list(complex_.ranks),
            differentials=[d.to_rows() for d in complex_.differentials],
        )


class DecompositionSchema(BaseModel):
    support: SupportValue
    parts: list[SupportValue]
    indecomposable: bool


class LocalitySchema(BaseModel):
    local: bool
    maximal_points: Optional[list[str]] = None


class EnumerationSchema(BaseModel):
    count: int
    supports: list[list[str]]


class HomExtSchema(BaseModel):
    functor: Literal["hom", "ext1"]
    group: CanonicalFormSchema


class SuiteTallySchema(BaseModel):
    suite: str
    trials: int
    failures: int


class VerifyReportSchema(BaseModel):
    suite: str
    trials: int
    failures: int
    seed: int
    failure_witnesses: list[str]
    wall_time_ms: int
    breakdown: list[SuiteTallySchema] = []

    @classmethod
    def of(cls, report: VerifyReport) -> "VerifyReportSchema":
        return cls(
            suite=report.suite,
            trials=report.trials,
            failures=report.failures,
            seed=report.seed,
            failure_witnesses=list(report.failure_witnesses),
            wall_time_ms=report.wall_time_ms,
            breakdown=[
                SuiteTallySchema(suite=t.suite, trials=t.trials, failures=t.failures) for t in report.breakdown
            ],
        )
