"""Model package for shared Pydantic schemas."""

from src.models.assignment import Assignment
from src.models.doe_grid import DoeGrid
from src.models.evaluated_assignment import EvaluatedAssignment
from src.models.exact_result import ExactResult
from src.models.ga_params import GaParams
from src.models.ga_result import GaResult, StopReason
from src.models.gqap_instance import GqapInstance
from src.models.instance_ranges import InstanceRanges
from src.models.model_stats import ModelStats
from src.models.neighborhood import Neighborhood
from src.models.population import Population
from src.models.run_record import CSV_COLUMNS, RunRecord

__all__ = [
    "Assignment",
    "CSV_COLUMNS",
    "DoeGrid",
    "EvaluatedAssignment",
    "ExactResult",
    "GaParams",
    "GaResult",
    "GqapInstance",
    "InstanceRanges",
    "ModelStats",
    "Neighborhood",
    "Population",
    "RunRecord",
    "StopReason",
]
