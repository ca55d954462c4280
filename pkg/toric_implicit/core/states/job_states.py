from typing import List, Literal, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field, computed_field, model_validator

from toric_implicit.core.geometry.lattice import LatticePolygon
from toric_implicit.core.linalg.exact_linalg import RATIONAL, FieldSpec, prime_field
from toric_implicit.core.poly.polynomial import Parametrization


class ExpectedResults(BaseModel):
    """Reference values a fixture records for its job."""

    nu: Optional[int] = Field(default=None, description="Degree at which the reference size was reported")
    rows: Optional[int] = None
    cols: Optional[int] = None
    d: Optional[int] = None
    alpha: Optional[int] = None
    default_nu: Optional[int] = None
    implicit_degree: Optional[int] = None
    implicit: Optional[str] = Field(default=None, description="Implicit equation in T1..T4")


class JobSpec(BaseModel):
    model_config = ConfigDict(extra="forbid")

    name: Optional[str] = Field(default=None, description="Short label used in reports")
    description: Optional[str] = None
    polynomials: List[str] = Field(min_length=4, max_length=4, description="f1..f4 in the polynomial grammar")
    embedding: Literal["nprime", "n", "rectangle", "custom"] = "nprime"
    polytope: Optional[List[Tuple[int, int]]] = Field(default=None, description="Vertices of a custom Q")
    d: Optional[int] = Field(default=None, ge=1, description="Scale of a custom Q")
    nu: Optional[int] = Field(default=None, ge=0, description="Degree override; 2d - alpha when absent")
    field: Literal["rational", "prime"] = "rational"
    prime: Optional[int] = None
    seed: int = 0
    out: Optional[str] = None
    expected: Optional[ExpectedResults] = None

    @model_validator(mode="after")
    def _check_embedding(self):
        if self.polytope is not None and self.embedding == "nprime":
            self.embedding = "custom"
        if self.embedding == "custom" and (self.polytope is None or self.d is None):
            raise ValueError("a custom embedding needs both polytope and d")
        return self

    def parametrization(self) -> Parametrization:
        return Parametrization.from_strings(self.polynomials)

    def custom_polytope(self) -> Optional[LatticePolygon]:
        return LatticePolygon(vertices=self.polytope) if self.polytope is not None else None

    def field_spec(self) -> FieldSpec:
        return RATIONAL if self.field == "rational" else prime_field(self.prime)


class AnalyzeReport(BaseModel):
    N: LatticePolygon
    newton_d: int = Field(description="Homothety factor of N(f)")
    Nprime: LatticePolygon
    translation: Tuple[int, int]
    embedding: str
    Q: LatticePolygon
    d: int
    alpha: int
    nu0: int = Field(description="Regularity bound 2d - alpha")
    nu: int = Field(description="Degree the matrix is built at: the override, else nu0")
    basis_nu0: int = Field(description="|basis(nu0)|")
    basis_nu0_plus_d: int = Field(description="|basis(nu0 + d)|")
    basis_nu: int = Field(description="|basis(nu)|, the predicted row count")
    basis_nu_plus_d: int
    normalized_area: int = Field(description="Upper value of deg(g) * deg(S)")

    @computed_field
    @property
    def predicted_rows(self) -> int:
        return self.basis_nu


class CheckResult(BaseModel):
    name: str
    passed: bool
    detail: str = ""


class VerifyReport(BaseModel):
    job: Optional[str] = None
    nu: int
    shape: Tuple[int, int]
    checks: List[CheckResult] = Field(default_factory=list)

    @computed_field
    @property
    def passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @computed_field
    @property
    def failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)
