"""Steady-state GA driver: steps 0-2, then select / cross / mutate /
repair / replace until the iteration cap or the stall limit is hit."""

from __future__ import annotations

import logging
import time

import numpy as np

from src.evaluation.cost import evaluate
from src.ga_engine.operators import (
    best_member,
    init_population,
    one_point_crossover,
    repair_unfit,
    replace_into,
    swap_mutation,
    tournament_pair,
)
from src.logger import logger
from src.models import GaParams, GaResult, GqapInstance, Population, StopReason


def _log_population(iteration: int, label: str, pop: Population) -> None:
    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            "Iteration %s: %s fitness=%s unfitness=%s",
            iteration,
            label,
            pop.total_fitness,
            pop.total_unfitness,
        )


def run_ga(inst: GqapInstance, params: GaParams) -> GaResult:
    """Run the GA once; equal (inst, params) give equal results except elapsed.

    K counts non-duplicate children that did not improve the best feasible
    cost and resets on every strict improvement. Duplicates and abandoned
    tournaments consume an iteration without touching K.
    """
    started = time.perf_counter()
    rng = np.random.default_rng(params.seed)

    population = init_population(inst, params, rng)
    leader = best_member(population)
    best = leader.assignment
    found = leader.feasible
    z_best = leader.fitness if found else params.sentinel_fitness
    trace: list[tuple[int, float]] = [(0, z_best)]
    logger.info(
        "GA start on '%s': n_pop=%s max_k=%s seed=%s initial z=%s",
        inst.name,
        params.n_pop,
        params.max_k,
        params.seed,
        z_best,
    )

    iteration = 0
    k_iter = 0
    if inst.machine_count < 2 or inst.location_count < 2:
        # Without a crossover point, or with a single possible assignment,
        # reproduction cannot produce a new child; the initial best stands.
        logger.info(
            "Instance %sx%s admits no new children, skipping reproduction",
            inst.machine_count,
            inst.location_count,
        )
        return GaResult(
            best_assignment=best,
            z_best=z_best,
            found_feasible=found,
            iterations_run=0,
            k_at_stop=0,
            stop_reason=StopReason.STALL,
            improvement_trace=tuple(trace),
            elapsed=time.perf_counter() - started,
        )

    while iteration < params.max_iter and k_iter < params.max_k:
        iteration += 1
        parents = tournament_pair(population, rng, params)
        if parents is None:
            logger.debug("Iteration %s: no distinct second parent", iteration)
            continue
        child = one_point_crossover(parents[0], parents[1], rng)
        mutated, happened = swap_mutation(child, rng)
        repaired = repair_unfit(inst, mutated, rng)
        logger.debug(
            "Iteration %s: pool=[%s | %s] child=%s mutation=%s repaired=%s",
            iteration,
            parents[0],
            parents[1],
            child,
            happened,
            repaired != mutated,
        )
        if population.contains(repaired):
            logger.debug("Iteration %s: duplicate child %s", iteration, repaired)
            continue

        _log_population(iteration, "before", population)
        population, accepted = replace_into(
            population, evaluate(inst, repaired), params
        )
        _log_population(iteration, "after" if accepted else "unchanged", population)

        leader = best_member(population)
        if leader.feasible and (not found or leader.fitness < z_best):
            found = True
            best, z_best = leader.assignment, leader.fitness
            trace.append((iteration, z_best))
            k_iter = 0
            logger.info("Iteration %s: new best %s z=%s", iteration, best, z_best)
        else:
            k_iter += 1
            if not found:
                best = leader.assignment

    stop_reason = StopReason.STALL if k_iter >= params.max_k else StopReason.ITER_CAP
    elapsed = time.perf_counter() - started
    if not found:
        logger.warning(
            "GA on '%s' found no feasible solution in %s iterations",
            inst.name,
            iteration,
        )
    logger.info(
        "GA stop on '%s': reason=%s iterations=%s z_best=%s elapsed=%.3fs",
        inst.name,
        stop_reason.value,
        iteration,
        z_best,
        elapsed,
    )
    return GaResult(
        best_assignment=best,
        z_best=z_best,
        found_feasible=found,
        iterations_run=iteration,
        k_at_stop=k_iter,
        stop_reason=stop_reason,
        improvement_trace=tuple(trace),
        elapsed=elapsed,
    )


__all__ = ["run_ga"]
