import json
import math
from fractions import Fraction

import pytest

import qsym


def test_beta_values():
    b1 = qsym.beta_number(1)
    assert b1.pretty() == "-1/(1+q)"
    assert b1 == qsym.beta_higher(1)
    assert qsym.beta_higher(0, r=3) == qsym.RatFun(1)
    assert qsym.limit_at_one(qsym.beta_number(2)) == Fraction(1, 6)
    assert qsym.evaluate(b1, 6) == Fraction(-1, 7)
    assert json.loads(b1.to_json()) == {"num": [[0, "-1"]], "den": [[0, "1"], [1, "1"]]}
    assert qsym.RatFun.from_json(b1.to_json()) == b1


def test_ratfun_arithmetic():
    q = qsym.q_power(1)
    one = qsym.RatFun(1)
    assert (q * q - one) / (q - one) == q + one
    assert qsym.q_bracket(3) == one + q + q * q
    assert qsym.RatFun([(0, "1")], [(0, "1"), (1, "1")]) == -qsym.beta_number(1)
    with pytest.raises(qsym.DivisionByZero):
        one / qsym.RatFun(0)
    with pytest.raises(qsym.PoleError):
        (one / (q + one)).eval("-1")


def test_errors_map_to_python_types():
    with pytest.raises(qsym.DegeneracyError) as info:
        qsym.beta_weighted(1, h=0)
    assert "degenerate" in str(info.value)
    assert issubclass(qsym.DegeneracyError, ValueError)
    with pytest.raises(qsym.DomainError):
        qsym.beta_higher(-1)
    with pytest.raises(qsym.ResourceError):
        qsym.check("thm3", 2, r=1, w1=9, w2=1, x=0)


def test_weighted_bridge_and_classical_limit():
    for n in range(5):
        for x in range(3):
            assert qsym.beta_weighted(n, 1, arg=x) == qsym.beta_higher(n, arg=x)
    assert qsym.classical_bernoulli_higher(1, 2) == -1
    assert qsym.limit_at_one(qsym.beta_higher(3, r=2, arg=1)) == qsym.classical_bernoulli_higher(3, 2, 1)


def test_identity_checks():
    assert qsym.check("recurrence", 3).holds
    rep = qsym.check("thm4", 3, r=2, w1=2, w2=3, x=0)
    assert rep.holds and rep.lhs == rep.rhs
    assert qsym.check("thm6", 2, h=4, r=2, w1=3, w2=2, x=1).holds
    assert "limit-q1" in qsym.identity_names()


def test_sweep_and_mutation():
    reports = qsym.sweep(["thm3"], n=(0, 2), r=(1, 1), w1=(1, 2), w2=(1, 2), x=(0, 1), threads=2)
    assert len(reports) == 24 and all(r.holds for r in reports)
    mutated = qsym.sweep(["thm4"], n=(0, 1), r=(1, 1), w1=(1, 2), w2=(1, 2), x=(0, 0), mutate=True)
    assert any(not r.holds for r in mutated)


def test_volkenborn():
    assert qsym.p_valuation(Fraction(3, 4), 2) == -2
    assert qsym.p_valuation(0, 5) == math.inf
    assert qsym.riemann_sum_multi(0, 2, 0, p=3, N=2) == 1
    rep = qsym.convergence_report("single", 2, p=5, N=4)
    assert rep["monotone"] and rep["q0"] == 6
    assert rep["points"][-1][1] >= 3
    zero = qsym.convergence_report("multi", 0, r=2, p=3, N=3)
    assert all(v == math.inf for _, v in zero["points"])
    with pytest.raises(qsym.DomainError):
        qsym.convergence_report("single", 1, p=6)


def test_cli_in_process():
    code, out, _ = qsym.run_cli("table", "--max-n", 1)
    assert code == 0
    assert out == 'n,r,w,arg,ratfun\n0,1,1,0,"1"\n1,1,1,0,"-1/(1+q)"\n'
    assert qsym.run_cli("verify", "--identity", "thm4", "--max-w", 50)[0] == 3
