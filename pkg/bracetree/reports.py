"""
Pydantic models for every JSON document the package emits.
"""
from typing import List, Optional

from pydantic import BaseModel, Field, computed_field

from bracetree.errors import FreenessError


class SeriesPayload(BaseModel):
    order: int = Field(..., ge=0, description="Truncation order N")
    coeffs: List[str] = Field(..., description="Coefficients of degrees 0..N as decimal strings")


class EnumerationPayload(BaseModel):
    kind: str = Field(..., description="planar or rooted")
    weight: int = Field(..., description="Total vertex grade of every listed tree")
    alphabet: List[str] = Field(..., description="Decoration symbols in canonical order")
    count: int = Field(..., description="Number of trees")
    trees: List[str] = Field(..., description="Serialized trees in canonical order")


class TermPayload(BaseModel):
    coefficient: str = Field(..., description="Exact rational coefficient")
    basis: str = Field(..., description="Serialized tree or forest")


class ProductPayload(BaseModel):
    op: str = Field(..., description="Product that was evaluated")
    text: str = Field(..., description="Combination in the text grammar")
    terms: List[TermPayload] = Field(default_factory=list, description="Terms in canonical order")


class BlockReport(BaseModel):
    weight: int = Field(..., description="Number of vertices (graded)")
    fertility: int = Field(..., description="Number of children of the root")
    dim: int = Field(..., description="Number of basis trees in the block")
    star_span: int = Field(..., description="Rank of star products inside the block")
    complement: int = Field(..., description="Generators chosen inside the block")


class DegreeReport(BaseModel):
    n: int = Field(..., description="Degree")
    dim: int = Field(..., description="Dimension of the free brace algebra in degree n")
    star_span: int = Field(..., description="Dimension of the span of star products")
    complement: int = Field(..., description="Size of the graded complement V(n)")
    expected_generators: int = Field(..., description="Coefficient of the generator series")
    prelie_full_rank: Optional[bool] = Field(
        None, description="Whether V(n) and pre-Lie products span degree n"
    )
    prelie_rank: Optional[int] = Field(None, description="Rank of V(n) plus pre-Lie products")
    complement_trees: List[str] = Field(default_factory=list, description="Generators of V(n)")
    blocks: List[BlockReport] = Field(default_factory=list, description="Per-fertility breakdown")
    failures: List[str] = Field(default_factory=list, description="Failed checks")

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return not self.failures


class FreenessReport(BaseModel):
    alphabet: List[str] = Field(..., description="Decoration symbols")
    grades: List[int] = Field(..., description="Grade of each decoration symbol")
    max_degree: int = Field(..., description="Largest verified degree")
    degrees: List[DegreeReport] = Field(default_factory=list, description="Per-degree results")

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return all(degree.passed for degree in self.degrees)

    def raise_for_failures(self) -> None:
        """Raise FreenessError naming the first failing degree, if any."""
        for degree in self.degrees:
            if degree.failures:
                raise FreenessError(
                    degree.n,
                    "; ".join(degree.failures),
                    expected=degree.expected_generators,
                    actual=degree.complement,
                )


class AxiomReport(BaseModel):
    axiom: str = Field(..., description="Identity under test")
    cases: int = Field(..., description="Number of checked instances")
    counterexamples: List[str] = Field(default_factory=list, description="Failing inputs")

    @computed_field  # type: ignore[misc]
    @property
    def passed(self) -> bool:
        return not self.counterexamples
