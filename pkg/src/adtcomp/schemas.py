"""adtcomp schemas

Parameter models, wire payloads and result rows shared by the library and the CLI.
"""

from enum import Enum
from fractions import Fraction
from typing import Annotated, List, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field, TypeAdapter, field_validator, model_validator


# ===== Enums =====

class NetworkClass(str, Enum):
    """Degeneracy class of a 2x2 network"""
    DEGENERATE = "degenerate"
    NON_DEGENERATE = "non-degenerate"


class Scheme(str, Enum):
    """Code construction labels"""
    AUTO = "auto"
    UNCODED = "uncoded"
    DEGENERATE = "degenerate"
    CASE1 = "case1"
    CASE2 = "case2"
    GAP1 = "gap1"
    LUSER = "luser"
    COMPOSE = "compose"
    CUSTOM = "custom"


class Orientation(str, Enum):
    """Which side of a gap-1 model is stronger"""
    UP = "up"      # direct link one level stronger than cross
    DOWN = "down"  # cross link one level stronger than direct


class OracleStatus(str, Enum):
    ACHIEVABLE = "achievable"
    IMPOSSIBLE = "impossible"
    UNKNOWN = "unknown"


class OracleMode(str, Enum):
    EXHAUSTIVE = "exhaustive"
    RANDOM = "random"


# ===== Network parameters =====

class NetworkParams2x2(BaseModel):
    """General two-user network: n_ij levels from transmitter i to receiver j"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["2x2"] = "2x2"
    n11: int = Field(ge=0)
    n12: int = Field(ge=0)
    n21: int = Field(ge=0)
    n22: int = Field(ge=0)

    @property
    def q(self) -> int:
        return max(self.n11, self.n12, self.n21, self.n22)

    @property
    def num_users(self) -> int:
        return 2

    def link_levels(self, tx: int, rx: int) -> int:
        """Levels on the link from transmitter `tx` to receiver `rx` (0-based)."""
        return ((self.n11, self.n12), (self.n21, self.n22))[tx][rx]

    def as_tuple(self) -> tuple[int, int, int, int]:
        return (self.n11, self.n12, self.n21, self.n22)

    def is_symmetric(self) -> bool:
        return self.n11 == self.n22 and self.n12 == self.n21

    def describe(self) -> str:
        return f"(n11,n12,n21,n22)=({self.n11},{self.n12},{self.n21},{self.n22})"


class NetworkParamsSym(BaseModel):
    """Symmetric L-user network: n direct levels, m cross levels"""
    model_config = ConfigDict(frozen=True)

    kind: Literal["sym"] = "sym"
    m: int = Field(ge=0)
    n: int = Field(ge=0)
    L: int = Field(default=2, ge=2)

    @property
    def q(self) -> int:
        return max(self.m, self.n)

    @property
    def alpha(self) -> Fraction:
        return Fraction(min(self.m, self.n), self.q) if self.q else Fraction(0)

    @property
    def num_users(self) -> int:
        return self.L

    def link_levels(self, tx: int, rx: int) -> int:
        return self.n if tx == rx else self.m

    def to_2x2(self) -> NetworkParams2x2:
        return NetworkParams2x2(n11=self.n, n12=self.m, n21=self.m, n22=self.n)

    def mirrored(self) -> "NetworkParamsSym":
        return NetworkParamsSym(m=self.n, n=self.m, L=self.L)

    def describe(self) -> str:
        return f"(m,n,L)=({self.m},{self.n},{self.L})"


NetworkParams = Annotated[Union[NetworkParams2x2, NetworkParamsSym], Field(discriminator="kind")]

_params_adapter: TypeAdapter = TypeAdapter(NetworkParams)


def parse_params(payload: dict | str) -> NetworkParams2x2 | NetworkParamsSym:
    """Parse params from a dict or a JSON string, dispatching on `kind`."""
    if isinstance(payload, str):
        return _params_adapter.validate_json(payload)
    return _params_adapter.validate_python(payload)


# ===== Wire payloads =====

class MatrixPayload(BaseModel):
    """{"rows": r, "cols": c, "data": ["0101...", ...]}, column 0 first"""
    rows: int = Field(ge=0)
    cols: int = Field(ge=0)
    data: List[str] = Field(default_factory=list)

    @field_validator("data")
    @classmethod
    def _only_bits(cls, value: List[str]) -> List[str]:
        for row in value:
            if set(row) - {"0", "1"}:
                raise ValueError(f"matrix row {row!r} contains characters other than 0/1")
        return value

    @model_validator(mode="after")
    def _shape_matches(self) -> "MatrixPayload":
        if len(self.data) != self.rows:
            raise ValueError(f"expected {self.rows} rows, got {len(self.data)}")
        if any(len(row) != self.cols for row in self.data):
            raise ValueError(f"every row must have {self.cols} entries")
        return self


class CodePayload(BaseModel):
    """Serialized LinearCode"""
    params: NetworkParams
    N: int = Field(ge=1)
    K: int = Field(ge=0)
    V: List[MatrixPayload]
    label: str = Scheme.CUSTOM.value


# ===== Result rows =====

class SweepRow(BaseModel):
    """One parameter point of a capacity sweep; rationals as paired integers"""
    m: int
    n: int
    L: int
    alpha_num: int
    alpha_den: int
    capacity_num: int
    capacity_den: int
    sep_num: int
    sep_den: int
    cutset: int
    upper3_num: Optional[int] = None
    upper3_den: Optional[int] = None
    achieved_num: Optional[int] = None
    achieved_den: Optional[int] = None
    scheme: Optional[str] = None

    @classmethod
    def columns(cls) -> List[str]:
        return list(cls.model_fields.keys())


class CurveSample(BaseModel):
    """Normalized-capacity sample for plotting against alpha"""
    alpha_num: int
    alpha_den: int
    normcap_num: int
    normcap_den: int
    sepnorm_num: int
    sepnorm_den: int


__all__ = [
    # Enums
    "NetworkClass",
    "Scheme",
    "Orientation",
    "OracleStatus",
    "OracleMode",
    # Params
    "NetworkParams2x2",
    "NetworkParamsSym",
    "NetworkParams",
    "parse_params",
    # Payloads
    "MatrixPayload",
    "CodePayload",
    # Rows
    "SweepRow",
    "CurveSample",
]
