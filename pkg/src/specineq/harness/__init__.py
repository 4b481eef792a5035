"""Grid-checkable inequality statements with interval verdicts."""
from .cases import (
    CASES,
    CHAIN_CASES,
    Case,
    CaseEvaluationError,
    CaseId,
    Param,
    chain_members,
    check_point,
    get_case,
    list_cases,
    member_value,
)
from .grid import Axis, BudgetExceeded, GridError, GridSpec, default_budget, parse_override
from .scan import CheckReport, scan_grid, scan_monotonicity, search_counterexample
from .verdict import Constituent, Direction, Outcome, Verdict, judge
