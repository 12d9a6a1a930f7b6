"""Exact Carlitz q-Bernoulli polynomials as rational functions in q.

Rational numbers cross the boundary as ``fractions.Fraction``; rational
functions are ``RatFun`` values compared by cross-multiplication.
"""

import json
import math
from fractions import Fraction

from . import _qsym
from ._qsym import (
    CheckReport,
    DegeneracyError,
    DivisionByZero,
    DomainError,
    Error,
    PoleError,
    RatFun,
    ResourceError,
    beta_higher,
    beta_number,
    beta_weighted,
    identity_names,
    is_nondegenerate,
    q_binomial,
    q_bracket,
    q_factorial,
    q_power,
    sweep,
    t_sum,
    t_sum_h,
)

__all__ = [
    "CheckReport", "DegeneracyError", "DivisionByZero", "DomainError", "Error", "PoleError", "RatFun",
    "ResourceError", "beta_higher", "beta_number", "beta_weighted", "check", "classical_bernoulli_higher",
    "convergence_report", "evaluate", "identity_names", "is_nondegenerate", "limit_at_one", "p_valuation",
    "q_binomial", "q_bracket", "q_factorial", "q_power", "riemann_sum_multi", "riemann_sum_weighted", "run_cli",
    "sweep", "t_sum", "t_sum_h",
]


def _text(value):
    return str(Fraction(value))


def evaluate(f, q0):
    """Value of ``f`` at the rational ``q0``."""
    return Fraction(f.eval(_text(q0)))


def limit_at_one(f):
    return Fraction(f.limit_at_one())


def classical_bernoulli_higher(n, r, x=0):
    return Fraction(_qsym.classical_bernoulli_higher(n, r, _text(x)))


def check(identity, n, **params):
    """Run one identity check; ``params`` are r, h, w1, w2, x as needed."""
    return _qsym.check(identity, n, **params)


def p_valuation(r, p):
    """v_p(r); ``math.inf`` for zero."""
    v = _qsym.p_valuation(_text(r), p)
    return math.inf if v is None else v


def _q0(q0):
    return None if q0 is None else _text(q0)


def riemann_sum_multi(n, r, x, p, N, q0=None, budget=1_000_000, threads=1):
    return Fraction(_qsym.riemann_sum_multi(n, r, x, p, N, _q0(q0), budget, threads))


def riemann_sum_weighted(n, h, r, x, p, N, q0=None, budget=1_000_000, threads=1):
    return Fraction(_qsym.riemann_sum_weighted(n, h, r, x, p, N, _q0(q0), budget, threads))


def convergence_report(family, n, r=1, h=1, x=0, p=5, N=3, q0=None, budget=1_000_000, threads=1):
    """Report as a dict; infinite valuations become ``math.inf``."""
    rep = json.loads(_qsym.convergence_report(family, n, r, h, x, p, N, _q0(q0), budget, threads))
    rep["q0"] = Fraction(rep["q0"])
    rep["points"] = [(level, math.inf if v == "inf" else v) for level, v in rep["points"]]
    return rep


def run_cli(*args):
    """Run the command-line front end in-process; returns (code, stdout, stderr)."""
    return _qsym.run_cli([str(a) for a in args])
