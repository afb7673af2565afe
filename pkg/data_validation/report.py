from typing import Dict, List, Literal, Optional, Tuple

from pydantic import BaseModel, Field, field_validator

EdgeModel = Tuple[int, int]


def _canonical_edges(edges: List[EdgeModel]) -> List[EdgeModel]:
    for u, v in edges:
        if not u < v:
            raise ValueError(f"edge ({u}, {v}) is not canonical (u < v)")
    return edges


class GraphMeta(BaseModel):
    n: int
    m: int
    source: str


class TraceReport(BaseModel):
    picked: List[EdgeModel] = Field(default_factory=list)
    value_after: List[float] = Field(default_factory=list)
    loss: List[float] = Field(default_factory=list)
    exhausted: bool = False
    evaluations: int = 0

    @field_validator('picked')
    @classmethod
    def picked_is_canonical(cls, picked):
        return _canonical_edges(picked)


class ScoreSummary(BaseModel):
    min: float
    mean: float
    max: float
    ranking: str = 'strict'


class RunReport(BaseModel):
    graph: GraphMeta
    measure: Literal['thr', 'fi', 'rr']
    algorithm: Literal['exact', 'greedy', 'greedy-eager']
    k: int
    initial_value: float
    solutions: List[List[EdgeModel]] = Field(default_factory=list)
    trace: Optional[TraceReport] = None
    scores: Optional[ScoreSummary] = None
    seed: Optional[int] = None
    tol: float
    timings_ms: Dict[str, float] = Field(default_factory=dict)

    @field_validator('solutions')
    @classmethod
    def solutions_are_canonical(cls, solutions):
        for solution in solutions:
            _canonical_edges(solution)
        return solutions


class MeasureReport(BaseModel):
    graph: GraphMeta
    measure: Literal['thr', 'fi', 'rr']
    value: float
    deleted: List[EdgeModel] = Field(default_factory=list)
    tol: float
    timings_ms: Dict[str, float] = Field(default_factory=dict)

    @field_validator('deleted')
    @classmethod
    def deleted_is_canonical(cls, deleted):
        return _canonical_edges(deleted)
