from collections import Counter

import numpy as np
import pytest

from src.evaluation import evaluate
from src.exact_milp import brute_force_optimum
from src.ga_engine import (
    best_of,
    crossover_at,
    hold_tournament,
    init_population,
    one_point_crossover,
    repair_unfit,
    replace_into,
    run_ga,
    swap_genes,
    swap_mutation,
    tournament_pair,
)
from src.instance_model import generate_random_instance
from src.local_search import steepest_descent
from src.models import Assignment, GaParams, Population, StopReason
from tests.helpers import ScriptedRng, random_instances, random_population, scored

PARAMS = GaParams(n_pop=5, max_k=10)


def test_tournament_draws_parents_from_the_population(mating_population):
    # Members 2 vs 3, then 3 vs 4 (second draw skips the first index).
    rng = ScriptedRng(1, 1, 2, 2)

    parents = tournament_pair(mating_population, rng, PARAMS)

    assert parents == (
        Assignment.of(3, 1, 1, 2, 4, 1),
        Assignment.of(2, 3, 4, 1, 1, 2),
    )
    assert rng.exhausted


def test_tournament_redraws_duplicate_second_parent(mating_population):
    rng = ScriptedRng(1, 1, 1, 0, 2, 2)

    parent1, parent2 = tournament_pair(mating_population, rng, PARAMS)

    assert parent1 != parent2
    assert parent2 == Assignment.of(2, 3, 4, 1, 1, 2)


def test_tournament_gives_up_on_identical_population():
    inst = generate_random_instance(4, 1, seed=0)
    pop = random_population(inst, 3, np.random.default_rng(0))
    params = GaParams(n_pop=3, max_k=5, tournament_retry_cap=4)

    assert tournament_pair(pop, np.random.default_rng(1), params) is None


def test_crossover_at_worked_cut():
    child = crossover_at(
        Assignment.of(3, 1, 1, 2, 4, 1), Assignment.of(2, 3, 4, 1, 1, 2), 2, True
    )

    assert child == Assignment.of(3, 1, 4, 1, 1, 2)


def test_crossover_draws_cut_and_orientation():
    rng = ScriptedRng(2, 0)
    child = one_point_crossover(
        Assignment.of(3, 1, 1, 2, 4, 1), Assignment.of(2, 3, 4, 1, 1, 2), rng
    )

    assert child == Assignment.of(3, 1, 4, 1, 1, 2)


def test_crossover_second_orientation():
    child = crossover_at(Assignment.of(1, 1, 1), Assignment.of(2, 2, 2), 1, False)

    assert child == Assignment.of(2, 1, 1)


def test_crossover_rejects_bad_cut():
    with pytest.raises(ValueError, match="cut point"):
        crossover_at(Assignment.of(1, 2), Assignment.of(2, 1), 2, True)
    with pytest.raises(ValueError, match="two machines"):
        one_point_crossover(
            Assignment.of(1), Assignment.of(2), np.random.default_rng()
        )


def test_swap_genes_worked_positions():
    assert swap_genes(Assignment.of(3, 1, 4, 1, 1, 2), 3, 5) == Assignment.of(
        3, 1, 1, 1, 4, 2
    )


def test_swap_mutation_draws_positions():
    child = Assignment.of(3, 1, 4, 1, 1, 2)

    mutated, happened = swap_mutation(child, ScriptedRng(2, 3))

    assert mutated == Assignment.of(3, 4, 1, 1, 1, 2)
    assert happened


def test_swap_of_equal_genes_is_not_a_mutation():
    child = Assignment.of(3, 1, 4, 1, 1, 2)

    mutated, happened = swap_mutation(child, ScriptedRng(2, 4))

    assert mutated == child
    assert not happened


def test_replacement_drops_most_unfit(replacement_population):
    child = scored("2 3 2 1 1 4", 20595, 20)

    new_pop, accepted = replace_into(replacement_population, child, PARAMS)

    assert accepted
    assert replacement_population.total_unfitness == 150
    assert new_pop.total_unfitness == 60
    assert new_pop.members[4] == child
    assert new_pop.members[:4] == replacement_population.members[:4]


def test_best_of_prefers_feasible(replacement_population):
    assert best_of(replacement_population, PARAMS) == (
        Assignment.of(3, 1, 4, 2, 1, 1),
        17165,
    )


def test_best_of_without_feasible_members_uses_sentinel(mating_population):
    best, z = best_of(mating_population, PARAMS)

    assert best == Assignment.of(1, 2, 3, 1, 4, 1)
    assert z == 9_999_999


def test_replacement_rejects_duplicates(replacement_population):
    child = scored("3 1 4 2 1 1", 17165, 0)

    new_pop, accepted = replace_into(replacement_population, child, PARAMS)

    assert not accepted
    assert new_pop is replacement_population


def test_feasible_population_replaces_most_costly():
    pop = Population(
        members=(
            scored("1 1 1 1 1 1", 10, 0),
            scored("2 2 2 2 2 2", 30, 0),
            scored("3 3 3 3 3 3", 30, 0),
        )
    )

    new_pop, accepted = replace_into(pop, scored("4 4 4 4 4 4", 20, 0), PARAMS)
    dropped, rejected = replace_into(pop, scored("4 4 4 4 4 1", 5, 7), PARAMS)

    assert accepted
    assert new_pop.members[1].slots == (4, 4, 4, 4, 4, 4)
    assert not rejected
    assert dropped is pop


def test_repair_moves_machine_to_spare_location(tight_instance):
    repaired = repair_unfit(tight_instance, Assignment.of(1, 1, 2), ScriptedRng(0))

    assert repaired == Assignment.of(2, 1, 2)
    assert evaluate(tight_instance, repaired).feasible


def test_repair_leaves_feasible_child_alone(tight_instance):
    rng = ScriptedRng()
    child = Assignment.of(1, 2, 2)

    assert repair_unfit(tight_instance, child, rng) is child


def test_init_population_shape_and_range():
    inst = generate_random_instance(6, 4, seed=5)
    params = GaParams(n_pop=20, max_k=5)
    pop = init_population(inst, params, np.random.default_rng(3))

    assert len(pop) == 20
    assert all(len(m.assignment) == 6 for m in pop.members)
    assert all(1 <= k <= 4 for m in pop.members for k in m.slots)


def test_crossover_takes_every_gene_from_a_parent():
    rng = np.random.default_rng(101)
    for _ in range(1000):
        m = int(rng.integers(2, 9))
        p1 = Assignment.from_zero_based(rng.integers(0, 5, size=m))
        p2 = Assignment.from_zero_based(rng.integers(0, 5, size=m))

        child = one_point_crossover(p1, p2, rng)

        straight = [c == a for c, a in zip(child.slots, p1.slots)]
        crossed = [c == b for c, b in zip(child.slots, p2.slots)]
        assert all(x or y for x, y in zip(straight, crossed))
        assert any(
            child == crossover_at(p1, p2, cut, orient)
            for cut in range(1, m)
            for orient in (True, False)
        )


def test_mutation_preserves_gene_multiset():
    rng = np.random.default_rng(102)
    for _ in range(1000):
        m = int(rng.integers(2, 9))
        child = Assignment.from_zero_based(rng.integers(0, 4, size=m))

        mutated, happened = swap_mutation(child, rng)

        assert Counter(mutated.slots) == Counter(child.slots)
        differing = sum(a != b for a, b in zip(mutated.slots, child.slots))
        assert differing == (2 if happened else 0)


def test_repair_never_increases_unfitness():
    rng = np.random.default_rng(103)
    instances = list(random_instances(40, seed=7))
    for trial in range(1000):
        inst = instances[trial % len(instances)]
        child = Assignment.from_zero_based(
            rng.integers(0, inst.location_count, size=inst.machine_count)
        )

        repaired = repair_unfit(inst, child, rng)

        before = evaluate(inst, child).unfitness
        assert evaluate(inst, repaired).unfitness <= before
        if before == 0:
            assert repaired == child


def test_repair_only_moves_machines_off_overused_locations():
    rng = np.random.default_rng(105)
    instances = list(random_instances(40, seed=8))
    moved_any = False
    for trial in range(1000):
        inst = instances[trial % len(instances)]
        child = Assignment.from_zero_based(
            rng.integers(0, inst.location_count, size=inst.machine_count)
        )
        loads = evaluate(inst, child).loads
        overused = {
            k + 1
            for k in range(inst.location_count)
            if loads[k] > inst.capacity[k]
        }

        repaired = repair_unfit(inst, child, rng)

        moved = [i for i in range(1, len(child) + 1) if repaired[i] != child[i]]
        moved_any = moved_any or bool(moved)
        assert all(child[i] in overused for i in moved)

    assert moved_any


def test_tournament_winner_is_no_worse_than_loser():
    rng = np.random.default_rng(104)
    instances = list(random_instances(20, seed=8))
    for trial in range(1000):
        inst = instances[trial % len(instances)]
        pop = random_population(inst, int(rng.integers(2, 8)), rng)

        winner, loser = hold_tournament(pop, rng)

        assert winner.fitness <= loser.fitness
        assert winner is not loser


def test_replacement_keeps_size_and_rejects_duplicates():
    rng = np.random.default_rng(105)
    instances = list(random_instances(20, seed=9))
    for trial in range(1000):
        inst = instances[trial % len(instances)]
        pop = random_population(inst, int(rng.integers(2, 8)), rng)
        existing = pop.members[int(rng.integers(len(pop)))]
        fresh = evaluate(
            inst,
            Assignment.from_zero_based(
                rng.integers(0, inst.location_count, size=inst.machine_count)
            ),
        )

        same, accepted = replace_into(pop, existing, PARAMS)
        new_pop, _ = replace_into(pop, fresh, PARAMS)

        assert not accepted and same is pop
        assert len(new_pop) == len(pop)


def test_run_ga_is_deterministic():
    inst = generate_random_instance(6, 4, seed=21)
    params = GaParams(n_pop=8, max_k=30, max_iter=2000, seed=4)

    first = run_ga(inst, params)
    second = run_ga(inst, params)

    assert first.model_copy(update={"elapsed": 0.0}) == second.model_copy(
        update={"elapsed": 0.0}
    )


def test_run_ga_result_is_consistent():
    inst = generate_random_instance(6, 4, seed=22)
    params = GaParams(n_pop=10, max_k=50, max_iter=3000, seed=1)

    result = run_ga(inst, params)

    assert result.found_feasible
    assert evaluate(inst, result.best_assignment).feasible
    assert evaluate(inst, result.best_assignment).fitness == result.z_best
    assert result.iterations_run <= params.max_iter
    assert result.improvement_trace[0][0] == 0
    assert result.improvement_trace[-1][1] == result.z_best
    costs = [z for _, z in result.improvement_trace]
    assert costs == sorted(costs, reverse=True)
    if result.stop_reason is StopReason.STALL:
        assert result.k_at_stop == params.max_k


def test_run_ga_stops_at_iteration_cap():
    inst = generate_random_instance(6, 4, seed=23)

    result = run_ga(inst, GaParams(n_pop=6, max_k=10_000, max_iter=25, seed=2))

    assert result.iterations_run == 25
    assert result.stop_reason is StopReason.ITER_CAP


def test_run_ga_single_machine(single_instance):
    result = run_ga(single_instance, GaParams(n_pop=2, max_k=5, max_iter=10))

    assert result.best_assignment == Assignment.of(1)
    assert result.z_best == 5
    assert result.iterations_run == 0


def test_run_ga_single_location_reports_sentinel_when_infeasible():
    inst = generate_random_instance(4, 1, seed=3).model_copy(
        update={"capacity": np.array([1.0])}
    )

    result = run_ga(inst, GaParams(n_pop=3, max_k=5, max_iter=50, seed=0))

    assert not result.found_feasible
    assert result.z_best == 9_999_999
    assert result.best_assignment == Assignment.of(1, 1, 1, 1)


def test_run_ga_single_location_returns_at_once():
    inst = generate_random_instance(5, 1, seed=4)

    result = run_ga(inst, GaParams(n_pop=4, max_k=50, max_iter=100_000, seed=1))

    assert result.found_feasible
    assert result.best_assignment == Assignment.of(1, 1, 1, 1, 1)
    assert result.iterations_run == 0


def test_ga_with_local_search_matches_exhaustive_optimum():
    hits = 0
    instances = list(random_instances(30, seed=2024))
    for number, inst in enumerate(instances):
        params = GaParams(n_pop=10, max_k=100, max_iter=5000, seed=number)
        result = run_ga(inst, params)
        assert result.found_feasible

        _, z = steepest_descent(inst, result.best_assignment)
        optimum = brute_force_optimum(inst)

        assert z >= optimum.z_opt - 1e-9
        hits += z <= optimum.z_opt + 1e-9
    assert hits >= 0.8 * len(instances)
