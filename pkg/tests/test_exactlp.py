import random
from dataclasses import replace
from fractions import Fraction as F

import numpy as np
import pytest
from scipy.optimize import linprog

from fairgraph import exactlp
from fairgraph.exactlp import EQ, GE, LE, LinearProgram, solve, verify_certificate


def test_max_with_two_caps():
    lp = LinearProgram([1])
    lp.add([1], LE, F(1, 2))
    lp.add([1], LE, F(1, 3))
    sol = solve(lp)
    assert sol.status == exactlp.OPTIMAL
    assert sol.objective == F(1, 3)
    assert verify_certificate(lp, sol)


def test_unbounded():
    lp = LinearProgram([1])
    lp.add([1], GE, 0)
    assert solve(lp).status == exactlp.UNBOUNDED


def test_infeasible():
    lp = LinearProgram([0])
    lp.add([1], EQ, 1)
    lp.add([1], EQ, 2)
    assert solve(lp).status == exactlp.INFEASIBLE


def test_perturbed_primal_rejected():
    lp = LinearProgram([1, 1])
    lp.add([1, 2], LE, 4)
    lp.add([3, 1], LE, 6)
    sol = solve(lp)
    assert verify_certificate(lp, sol)
    bad = replace(sol, primal=[sol.primal[0] + F(1, 7), sol.primal[1]])
    assert not verify_certificate(lp, bad)


def test_objective_mismatch_rejected():
    lp = LinearProgram([1, 1])
    lp.add([1, 2], LE, 4)
    lp.add([3, 1], LE, 6)
    sol = solve(lp)
    assert not verify_certificate(lp, replace(sol, objective=sol.objective + 1))


def test_non_optimal_status_rejected():
    lp = LinearProgram([1])
    lp.add([1], GE, 0)
    assert not verify_certificate(lp, solve(lp))


def test_free_and_bounded_variables():
    # min x + y with x free, -3 <= y <= 5, x + y >= -10, x >= -4
    lp = LinearProgram([1, 1], sense="min", lower=[None, -3], upper=[None, 5])
    lp.add([1, 1], GE, -10)
    lp.add([1, 0], GE, -4)
    sol = solve(lp)
    assert sol.objective == -7
    assert verify_certificate(lp, sol)


def test_beale_cycling_example_terminates():
    # classic instance on which the textbook largest-coefficient rule cycles
    lp = LinearProgram([F(3, 4), -150, F(1, 50), -6])
    lp.add([F(1, 4), -60, F(-1, 25), 9], LE, 0)
    lp.add([F(1, 2), -90, F(-1, 50), 3], LE, 0)
    lp.add([0, 0, 1, 0], LE, 1)
    sol = solve(lp)
    assert sol.objective == F(1, 20)
    assert verify_certificate(lp, sol)


def test_deterministic():
    lp = LinearProgram([1, 1, 1])
    lp.add([1, 1, 0], LE, 1)
    lp.add([0, 1, 1], LE, 1)
    lp.add([1, 0, 1], LE, 1)
    a, b = solve(lp), solve(lp)
    assert (a.primal, a.dual, a.objective) == (b.primal, b.dual, b.objective)


def test_results_are_fractions():
    lp = LinearProgram([1])
    lp.add([3], LE, 1)
    sol = solve(lp)
    assert type(sol.objective) is F and all(type(x) is F for x in sol.primal + sol.dual)


def _random_lp(rng):
    n, m = rng.randint(1, 5), rng.randint(1, 5)
    sense = rng.choice(["max", "min"])
    lp = LinearProgram([rng.randint(-5, 5) for _ in range(n)], sense=sense,
                       upper=[rng.choice([None, rng.randint(1, 6)]) for _ in range(n)])
    for _ in range(m):
        lp.add([rng.randint(-4, 4) for _ in range(n)], rng.choice([LE, GE, EQ]), rng.randint(-5, 8))
    return lp


def _scipy(lp):
    sign = -1 if lp.sense == "max" else 1
    c = np.array([float(x) * sign for x in lp.objective])
    aub, bub, aeq, beq = [], [], [], []
    for con in lp.constraints:
        row = [float(a) for a in con.coeffs]
        if con.relation == LE:
            aub.append(row), bub.append(float(con.rhs))
        elif con.relation == GE:
            aub.append([-a for a in row]), bub.append(-float(con.rhs))
        else:
            aeq.append(row), beq.append(float(con.rhs))
    bounds = [(None if lo is None else float(lo), None if hi is None else float(hi))
              for lo, hi in zip(lp.lower, lp.upper)]
    res = linprog(c, A_ub=aub or None, b_ub=bub or None, A_eq=aeq or None, b_eq=beq or None,
                  bounds=bounds, method="highs")
    return res.status, (res.fun * sign if res.status == 0 else None)


def test_random_lps_agree_with_highs():
    rng = random.Random(7)
    status_map = {0: exactlp.OPTIMAL, 2: exactlp.INFEASIBLE, 3: exactlp.UNBOUNDED}
    for _ in range(300):
        lp = _random_lp(rng)
        sol = solve(lp)
        st, val = _scipy(lp)
        assert sol.status == status_map[st]
        if sol.optimal:
            assert float(sol.objective) == pytest.approx(val, abs=1e-7)
            assert verify_certificate(lp, sol)
