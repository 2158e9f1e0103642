import pytest

from cubecover.bounds import lower_bound_f
from cubecover.constructions import construct_facet_cover, construct_pipeline_cover, verify_covering
from cubecover.cube import Params, covers
from cubecover.polychromatic import color_class, scheme
from cubecover.solver import (
    ResourceError,
    brute_force_min_cover,
    build_incidence,
    greedy_cover,
    solve_min_cover,
)

# Minimum covering sizes found by the solver.  Independent checks where they
# exist: f(n, 1, 0) is the vertex cover number 2^(n-1) of Q_n; f(n, 2, 1) is
# e(Q_n) minus the C_4-free edge numbers 9, 24, 56; f(n, n-1, l) is
# ceil(2n / (n - l)); every n <= 4 value also agrees with brute force.
EXACT_F = {
    (2, 1, 0): 2,
    (3, 1, 0): 4, (3, 2, 0): 2, (3, 2, 1): 3,
    (4, 1, 0): 8, (4, 2, 0): 5, (4, 2, 1): 8, (4, 3, 0): 2, (4, 3, 1): 3, (4, 3, 2): 4,
    (5, 1, 0): 16, (5, 2, 0): 10, (5, 3, 0): 6, (5, 3, 1): 8, (5, 3, 2): 14,
    (5, 4, 0): 2, (5, 4, 1): 3, (5, 4, 2): 4, (5, 4, 3): 5,
    (6, 5, 0): 2, (6, 5, 1): 3, (6, 5, 2): 3, (6, 5, 3): 4, (6, 5, 4): 6,
}
SLOW_F = {(5, 2, 1): 24}


@pytest.mark.parametrize(
    "p, n_cand, n_targ, degree",
    [((3, 2, 1), 12, 6, 2), ((4, 3, 2), 24, 8, 2), ((5, 3, 1), 80, 40, 6)],
)
def test_build_incidence_examples(p, n_cand, n_targ, degree):
    inst = build_incidence(Params(*p))
    assert len(inst.candidates) == n_cand
    assert len(inst.targets) == n_targ
    assert all(len(s) == degree for s in inst.incidence)
    assert inst.degree == degree


def test_incidence_matches_covers():
    for n in range(2, 6):
        for d in range(1, n):
            for l in range(d):
                inst = build_incidence(Params(n, d, l))
                for q, row in zip(inst.candidates, inst.incidence):
                    assert row == {j for j, t in enumerate(inst.targets) if covers(q, t)}


def test_build_incidence_budget():
    with pytest.raises(ResourceError, match="candidates"):
        build_incidence(Params(12, 6, 3), max_entries=10 ** 6)


@pytest.mark.parametrize("p, f", sorted(EXACT_F.items()))
def test_exact_values(p, f, solved):
    res = solved(*p)
    assert res.proved_optimal
    assert res.size == f == len(res.cover)
    assert verify_covering(res.cover).ok
    assert res.size >= lower_bound_f(Params(*p))


@pytest.mark.slow
@pytest.mark.parametrize("p, f", sorted(SLOW_F.items()))
def test_exact_values_slow(p, f, solved):
    res = solved(*p)
    assert res.proved_optimal and res.size == f
    assert verify_covering(res.cover).ok


def test_solver_examples(solved):
    assert solved(3, 2, 1).size == 3
    assert solved(4, 3, 2).size == 4
    res = solved(4, 2, 1)
    assert res.lower_bound == 8 and res.size >= 8


def test_brute_force_examples():
    inst = build_incidence(Params(3, 2, 1))
    assert brute_force_min_cover(inst, 2) is None
    cs = brute_force_min_cover(inst, 3)
    assert len(cs) == 3 and verify_covering(cs).ok
    assert brute_force_min_cover(inst, 0) is None
    cs = brute_force_min_cover(build_incidence(Params(4, 3, 1)), 3)
    assert len(cs) == 3 and verify_covering(cs).ok


def test_brute_force_blowup():
    with pytest.raises(ResourceError):
        brute_force_min_cover(build_incidence(Params(5, 3, 1)), 20)


def test_solver_agrees_with_brute_force_small(solved):
    for n in range(2, 5):
        for d in range(1, n):
            for l in range(d):
                inst = build_incidence(Params(n, d, l))
                if len(inst.candidates) > 24 or solved(n, d, l).size > 4:
                    continue
                brute = brute_force_min_cover(inst, 4)
                assert len(brute) == solved(n, d, l).size


def test_solver_never_beats_constructions(solved):
    for (n, d, l), f in EXACT_F.items():
        if d == n - 1 and l <= n - 2:
            assert f <= len(construct_facet_cover(n, l))
        assert f <= len(construct_pipeline_cover(n, d, l, seed=1))
        s = scheme(d, l)
        for t in s.palette():
            assert f <= len(color_class(n, s, t))


def test_budget_exhaustion_reports_incumbent():
    inst = build_incidence(Params(5, 3, 1))
    res = solve_min_cover(inst, budget=10)
    assert not res.proved_optimal
    assert res.nodes_explored == 10
    assert res.size == len(greedy_cover(inst))
    assert verify_covering(res.cover).ok


def test_deterministic():
    inst = build_incidence(Params(4, 2, 0))
    a, b = solve_min_cover(inst), solve_min_cover(inst)
    assert a == b


def test_greedy_cover_is_a_cover():
    for p in [(4, 2, 1), (5, 3, 2), (5, 2, 0)]:
        inst = build_incidence(Params(*p))
        chosen = greedy_cover(inst)
        assert verify_covering(inst.to_covering_set(chosen)).ok
        assert len(set(chosen)) == len(chosen)


def test_result_json_shape(solved):
    data = solved(3, 2, 1).to_dict()
    assert data["f"] == 3 and data["proved_optimal"] is True
    assert (data["n"], data["d"], data["l"]) == (3, 2, 1)
    assert len(data["cover"]) == 3
