"""
File schemas for gptkit inputs and outputs.

Exact scalars are written as "p/q" strings (integers without a slash);
numeric qubit values are written as decimal strings.
"""

from typing import Dict, List, Optional

from pydantic import BaseModel, Field, field_validator, model_validator

Row = List[str]


class SystemSchema(BaseModel):
    """A single system: states, effects, unit and optional Gram matrix."""
    name: str
    dim: int = Field(gt=0)
    numeric: bool = Field(default=False, description="Numeric qubit instead of an exact polytope system")
    states: List[Row] = Field(default_factory=list)
    effects: List[Row] = Field(default_factory=list)
    unit: Row
    gram: Optional[List[Row]] = None

    @model_validator(mode="after")
    def check_dimensions(self):
        for label, rows in (("states", self.states), ("effects", self.effects)):
            for k, row in enumerate(rows):
                if len(row) != self.dim:
                    raise ValueError(f"{label}[{k}] has {len(row)} entries, expected {self.dim}")
        if len(self.unit) != self.dim:
            raise ValueError(f"unit has {len(self.unit)} entries, expected {self.dim}")
        if not self.numeric and not self.states:
            raise ValueError("exact systems need at least one state")
        return self


class ConeSchema(BaseModel):
    generators: Optional[List[Row]] = None
    halfspaces: Optional[List[Row]] = None


class JointSchema(BaseModel):
    """A composite system, optionally carrying one joint state."""
    left: str
    right: str
    rule: str
    coords: Optional[List[Row]] = Field(default=None, description="n x m coefficient matrix of a joint state")
    left_system: SystemSchema
    right_system: SystemSchema
    cone: Optional[ConeSchema] = None
    nesting_verified: Optional[bool] = Field(default=None, description="Minimal tensor product checked to lie inside the cone")

    @field_validator("rule")
    @classmethod
    def known_rule(cls, value: str) -> str:
        if value not in ("min", "max", "genmax", "explicit", "quantum"):
            raise ValueError(f"unknown composition rule {value!r}")
        return value


class MeasurementsSchema(BaseModel):
    """Binary measurements: left[x] = [e_{x,0}, e_{x,1}], right[y] likewise."""
    left: List[List[Row]]
    right: List[List[Row]]

    @field_validator("left", "right")
    @classmethod
    def two_binary(cls, value):
        if len(value) != 2 or any(len(m) != 2 for m in value):
            raise ValueError("exactly two binary measurements per side are required")
        return value


class CoordRepSchema(BaseModel):
    dim: int
    effects: List[Row]
    states: List[Row]
    conjugate_basis: List[Row]
    effect_labels: List[str] = Field(default_factory=list)
    state_labels: List[str] = Field(default_factory=list)


class RedundancySchema(BaseModel):
    axis: str
    label: str
    coefficients: Dict[str, str]


class ReductionReport(BaseModel):
    effects: int
    states: int
    rank: int
    effect_classes: List[List[str]]
    state_classes: List[List[str]]
    redundant: List[RedundancySchema] = Field(default_factory=list)
    effect_relations: Dict[str, Dict[str, str]] = Field(default_factory=dict)
    state_relations: Dict[str, Dict[str, str]] = Field(default_factory=dict)


class AnalysisReport(BaseModel):
    system: str
    dim: int
    valid: bool
    violations: List[str] = Field(default_factory=list)
    state_norms: List[str] = Field(default_factory=list)
    effect_norms: List[str] = Field(default_factory=list)
    unrestricted: Optional[bool] = None
    restriction_witness: Optional[Row] = None
    emax_vertices: Optional[List[Row]] = None
    joint_measurability: Optional[List[List[bool]]] = Field(
        default=None, description="Pairwise joint measurability of the listed effects")
    hasse_edges: List[List[int]] = Field(default_factory=list, description="Covering pairs [i, j] with e_i < e_j")


class ChshReport(BaseModel):
    S: str
    correlators: List[List[str]]
    behavior: List[str] = Field(description="p(a,b|x,y) at index ((a*2+b)*2+x)*2+y")
    no_signaling: bool
    state: Optional[List[Row]] = None


class RunManifest(BaseModel):
    """Provenance for a CLI run: inputs, options and output digests."""
    toolkit_version: str
    command: str
    options: Dict[str, str] = Field(default_factory=dict)
    inputs: Dict[str, str] = Field(default_factory=dict, description="path -> sha256")
    outputs: Dict[str, str] = Field(default_factory=dict, description="path -> sha256")
