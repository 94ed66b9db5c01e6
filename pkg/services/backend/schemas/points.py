"""
Point-set file schemas
"""
from typing import List

from pydantic import BaseModel, Field, field_validator, model_validator


class PointSetFile(BaseModel):
    """
    Points added to the embedded Hamming set, one numerator list per point
    (coordinates times n, blocks concatenated).
    """
    n: int = Field(ge=2)
    m: int = Field(ge=1)
    points: List[List[int]] = Field(default_factory=list)

    @model_validator(mode='after')
    def validate_lengths(self):
        for index, point in enumerate(self.points):
            if len(point) != self.n * self.m:
                raise ValueError(f"point {index} has {len(point)} coordinates, expected {self.n * self.m}")
        return self


class RootPointModel(BaseModel):
    """Extended point: numerators of the rational part plus sign * sqrt(beta_sq)"""
    n: int = Field(ge=2)
    nums: List[int]
    beta_sq: str
    sign: int = 1

    @field_validator('sign')
    @classmethod
    def validate_sign(cls, v):
        if v not in (1, -1):
            raise ValueError(f"sign must be 1 or -1, got {v}")
        return v
