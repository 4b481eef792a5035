"""Error-bounded special functions and a grid harness for inequalities among them."""
from .series import Approximation, EULER_GAMMA, TailBound, compensated_sum, sum_tail_bounded
from .specfun import (
    ContractError,
    DomainError,
    FunctionId,
    RangeError,
    digamma,
    evaluate,
    gamma,
    k_digamma,
    k_gamma,
    log_gamma,
    p_digamma,
    p_gamma,
    polygamma,
    q_digamma,
    q_gamma,
)

__version__ = "0.1.0"
