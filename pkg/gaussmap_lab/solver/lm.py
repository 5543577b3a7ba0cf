"""Levenberg–Marquardt over real variables with seeded multistart and barrier clamping."""
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from gaussmap_lab.core.config import settings
from gaussmap_lab.core.exceptions import ConfigError, GaussmapError
from gaussmap_lab.core.logging import LoggerMixin
from gaussmap_lab.schemas.solve import SolveSpec
from gaussmap_lab.solver.certificate import Certificate
from gaussmap_lab.solver.system import ConstraintSystem, Vector
from gaussmap_lab.tasks.worker import parallel_map

SOLVED = "Solved"
INFEASIBLE = "Infeasible"
MAX_ITER = "MaxIter"

CONVERGED = "converged"
STALLED = "stalled"
EXHAUSTED = "max_iter"
INVALID_START = "invalid_start"

_STEP = 1e-7
_POLISH_STEPS = 3
_CERTIFY_ATTEMPTS = 5
_DRAW_ATTEMPTS = 100


@dataclass(frozen=True)
class SolveConfig:
    max_iterations: int = field(default_factory=lambda: settings.SOLVER_MAX_ITER)
    residual_tol: float = field(default_factory=lambda: settings.SOLVER_RESIDUAL_TOL)
    starts: int = field(default_factory=lambda: settings.SOLVER_STARTS)
    seed: int = field(default_factory=lambda: settings.SOLVER_SEED)
    box: float = field(default_factory=lambda: settings.SOLVER_BOX)
    bounds: Optional[tuple[tuple[float, float], ...]] = None
    damping: float = 1e-3
    damping_up: float = 10.0
    damping_down: float = 0.1
    damping_max: float = 1e12
    scan_samples: int = 0
    threads: Optional[int] = None

    def __post_init__(self) -> None:
        errors = []
        if self.residual_tol <= 0:
            errors.append("residual_tol must be positive")
        if self.starts < 1:
            errors.append("starts must be at least 1")
        if self.max_iterations < 1:
            errors.append("max_iterations must be at least 1")
        if self.box <= 0:
            errors.append("box must be positive")
        if not 0 < self.damping_down < 1 < self.damping_up:
            errors.append("damping schedule needs 0 < down < 1 < up")
        if errors:
            raise ConfigError("; ".join(errors))

    @classmethod
    def from_spec(cls, spec: SolveSpec) -> "SolveConfig":
        return cls(
            max_iterations=spec.max_iter,
            residual_tol=spec.tol,
            starts=spec.starts,
            seed=spec.seed,
            box=spec.box,
        )

    def limits(self, dimension: int) -> tuple[Vector, Vector]:
        if self.bounds is None:
            return np.full(dimension, -self.box), np.full(dimension, self.box)
        if len(self.bounds) != dimension:
            raise ConfigError(f"{len(self.bounds)} bounds for {dimension} variables")
        lo, hi = np.array(self.bounds, dtype=float).T
        return lo, hi


@dataclass(frozen=True)
class StartOutcome:
    index: int
    x: tuple[float, ...]
    residual_norm: float
    iterations: int
    reason: str


@dataclass(frozen=True)
class SolveResult:
    status: str
    names: tuple[str, ...]
    x: tuple[float, ...]
    params: dict[str, complex]
    residual_norm: float
    start_index: int
    iterations: int
    outcomes: tuple[StartOutcome, ...]
    certificate: Optional[Certificate] = None
    notes: tuple[str, ...] = ()

    @property
    def heuristic(self) -> bool:
        """Infeasible only means that no start reached the tolerance."""
        return self.status == INFEASIBLE

    @property
    def converged_starts(self) -> int:
        return sum(1 for o in self.outcomes if o.reason == CONVERGED)


@dataclass(frozen=True)
class ScanSample:
    index: int
    x: tuple[float, ...]
    residual_norm: float


def _norm(r: Optional[Vector]) -> float:
    return float("inf") if r is None else float(np.linalg.norm(r))


def jacobian(system: ConstraintSystem, x: Vector, r0: Optional[Vector] = None, stencil: int = 3) -> Vector:
    """Central differences with step 1e-7·(1 + |x_j|); one-sided next to the domain boundary."""
    x = np.asarray(x, dtype=float)
    r0 = system.evaluate(x) if r0 is None else r0
    if r0 is None:
        raise ConfigError("the Jacobian needs a point inside the validity domain", family=system.family)
    J = np.zeros((r0.size, x.size))
    for j in range(x.size):
        h = _STEP * (1.0 + abs(x[j]))
        e = np.zeros_like(x)
        e[j] = h
        plus, minus = system.evaluate(x + e), system.evaluate(x - e)
        if plus is not None and minus is not None:
            column = (plus - minus) / (2 * h)
            if stencil == 5:
                plus2, minus2 = system.evaluate(x + 2 * e), system.evaluate(x - 2 * e)
                if plus2 is not None and minus2 is not None:
                    column = (-plus2 + 8 * plus - 8 * minus + minus2) / (12 * h)
        elif plus is not None:
            column = (plus - r0) / h
        elif minus is not None:
            column = (r0 - minus) / h
        else:
            column = np.zeros(r0.size)
        J[:, j] = column
    return J


def scan(
    system: ConstraintSystem,
    samples: int = 256,
    seed: int = 0,
    keep: int = 8,
    config: Optional[SolveConfig] = None,
) -> list[ScanSample]:
    """‖residual‖ at seeded uniform samples of the box; the best `keep` valid ones, lowest first."""
    config = config or SolveConfig(seed=seed)
    lo, hi = config.limits(system.dimension)
    rng = np.random.default_rng(seed)
    points = [lo + (hi - lo) * rng.random(system.dimension) for _ in range(samples)]
    norms = parallel_map(lambda x: _norm(system.evaluate(x)), points, config.threads)
    ranked = sorted(
        (ScanSample(k, tuple(float(v) for v in x), n) for k, (x, n) in enumerate(zip(points, norms)) if np.isfinite(n)),
        key=lambda s: (s.residual_norm, s.index),
    )
    return ranked[:keep]


class LevenbergMarquardt(LoggerMixin):
    def __init__(self, config: Optional[SolveConfig] = None):
        self.config = config or SolveConfig()

    def initial_points(self, system: ConstraintSystem) -> list[Vector]:
        """Seeded starts; the system's center, when set, is start 0."""
        cfg = self.config
        lo, hi = cfg.limits(system.dimension)
        points: list[Vector] = []
        if system.center is not None:
            points.append(np.clip(system.center, lo, hi))
        if cfg.scan_samples > 0:
            best = scan(system, cfg.scan_samples, cfg.seed, keep=cfg.starts, config=cfg)
            points.extend(np.array(s.x) for s in best)
            return points[: cfg.starts]

        rng = np.random.default_rng(cfg.seed)
        while len(points) < cfg.starts:
            x = lo + (hi - lo) * rng.random(system.dimension)
            for _ in range(_DRAW_ATTEMPTS):
                if system.valid(x):
                    break
                x = lo + (hi - lo) * rng.random(system.dimension)
            points.append(x)
        return points

    def run(self, system: ConstraintSystem, x0: Vector, index: int = 0) -> StartOutcome:
        cfg = self.config
        lo, hi = cfg.limits(system.dimension)
        x = np.clip(np.asarray(x0, dtype=float), lo, hi)
        r = system.evaluate(x)
        if r is None:
            return StartOutcome(index, tuple(x), float("inf"), 0, INVALID_START)

        cost = _norm(r)
        lam = cfg.damping
        polish = 0
        reason = EXHAUSTED
        iterations = 0
        for iterations in range(1, cfg.max_iterations + 1):
            if cost < cfg.residual_tol:
                polish += 1
                if polish > _POLISH_STEPS:
                    reason = CONVERGED
                    break

            J = jacobian(system, x, r)
            A = J.T @ J
            grad = J.T @ r
            scaling = np.diag(np.maximum(np.diag(A), 1e-12))

            accepted = False
            step = np.zeros_like(x)
            while lam <= cfg.damping_max:
                try:
                    step = np.linalg.solve(A + lam * scaling, -grad)
                except np.linalg.LinAlgError:
                    lam *= cfg.damping_up
                    continue
                candidate = np.clip(x + step, lo, hi)
                r_new = system.evaluate(candidate)
                if r_new is not None and _norm(r_new) < cost:
                    x, r, cost = candidate, r_new, _norm(r_new)
                    lam = max(lam * cfg.damping_down, 1e-15)
                    accepted = True
                    break
                lam *= cfg.damping_up

            if not accepted or np.linalg.norm(step) <= 1e-15 * (1.0 + np.linalg.norm(x)):
                reason = CONVERGED if cost < cfg.residual_tol else STALLED
                break
        else:
            if cost < cfg.residual_tol:
                reason = CONVERGED

        self.logger.debug(
            "start finished",
            extra={"start": index, "reason": reason, "residual_norm": cost, "iterations": iterations},
        )
        return StartOutcome(index, tuple(float(v) for v in x), cost, iterations, reason)

    def _certify(self, system: ConstraintSystem, outcome: StartOutcome) -> tuple[bool, Optional[Certificate], str]:
        if system.certify is None:
            return True, None, ""
        params = system.params(np.array(outcome.x))
        try:
            certificate = system.certify(params)
        except GaussmapError as exc:
            return False, None, f"start {outcome.index}: certification failed with {exc.code}"
        if certificate.passed:
            return True, certificate, ""
        return False, certificate, f"start {outcome.index}: certificate failing {certificate.failing}"

    def solve(self, system: ConstraintSystem) -> SolveResult:
        cfg = self.config
        self.logger.info(
            "solve started",
            extra={"family": system.family, "dimension": system.dimension, "starts": cfg.starts, "seed": cfg.seed},
        )
        points = self.initial_points(system)
        outcomes = parallel_map(lambda item: self.run(system, item[1], item[0]), list(enumerate(points)), cfg.threads)
        ranked = sorted(outcomes, key=lambda o: (o.residual_norm, o.index))

        notes: list[str] = list(system.notes)
        chosen, status, certificate = ranked[0], None, None
        converged = [o for o in ranked if o.reason == CONVERGED]
        for outcome in converged[:_CERTIFY_ATTEMPTS]:
            ok, cert, note = self._certify(system, outcome)
            if note:
                notes.append(note)
            if ok:
                chosen, status, certificate = outcome, SOLVED, cert
                break
            if certificate is None:
                certificate = cert

        if status is None:
            exhausted = all(o.reason == EXHAUSTED for o in outcomes)
            status = MAX_ITER if exhausted else INFEASIBLE
            if status == INFEASIBLE:
                notes.append("heuristic verdict: no start reached the tolerance with a passing certificate")

        result = SolveResult(
            status=status,
            names=system.names,
            x=chosen.x,
            params=system.params(np.array(chosen.x)),
            residual_norm=chosen.residual_norm,
            start_index=chosen.index,
            iterations=chosen.iterations,
            outcomes=tuple(outcomes),
            certificate=certificate,
            notes=tuple(notes),
        )
        self.logger.info(
            "solve finished",
            extra={
                "family": system.family,
                "status": result.status,
                "residual_norm": result.residual_norm,
                "converged_starts": result.converged_starts,
            },
        )
        return result


def solve(system: ConstraintSystem, config: Optional[SolveConfig] = None) -> SolveResult:
    return LevenbergMarquardt(config).solve(system)


def solve_spec(spec: SolveSpec) -> SolveResult:
    return solve(ConstraintSystem.from_spec(spec), SolveConfig.from_spec(spec))


__all__ = [
    "INFEASIBLE",
    "MAX_ITER",
    "SOLVED",
    "LevenbergMarquardt",
    "ScanSample",
    "SolveConfig",
    "SolveResult",
    "StartOutcome",
    "jacobian",
    "scan",
    "solve",
    "solve_spec",
]
