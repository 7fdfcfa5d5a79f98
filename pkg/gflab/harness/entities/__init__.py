"""Package to handle all entities of the gflab harness."""

# isort:skip_file
# flake8: noqa
# The order is important for the documentation

from .report import Check, ReportFormat, RunResult, TheoremReport, Verdict
from .config import ExperimentConfig, ProcessConfig, ProcessKind, Scope, Tolerances
from .preset import Preset
