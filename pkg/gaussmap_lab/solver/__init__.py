from gaussmap_lab.solver.certificate import Certificate, verify_solution
from gaussmap_lab.solver.lm import (
    INFEASIBLE,
    MAX_ITER,
    SOLVED,
    LevenbergMarquardt,
    SolveConfig,
    SolveResult,
    jacobian,
    scan,
    solve,
    solve_spec,
)
from gaussmap_lab.solver.system import ConstraintSystem, case_two_system

__all__ = [
    "INFEASIBLE",
    "MAX_ITER",
    "SOLVED",
    "Certificate",
    "ConstraintSystem",
    "LevenbergMarquardt",
    "SolveConfig",
    "SolveResult",
    "case_two_system",
    "jacobian",
    "scan",
    "solve",
    "solve_spec",
    "verify_solution",
]
