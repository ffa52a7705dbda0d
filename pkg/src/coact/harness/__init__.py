"""Construction checks: each builds the generating sets of a construction on a concrete
instance and compares what they generate with a brute-force target."""
from .registry import CHECKS, CheckError, run_check
from .report import ConstructionReport

__all__ = ["CHECKS", "CheckError", "ConstructionReport", "run_check"]
