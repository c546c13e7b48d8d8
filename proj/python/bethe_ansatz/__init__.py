"""Exact checks for gl_N XXX spin chains and Gaudin models.

Problems are dicts in the same shape as the CLI's JSON files; rationals are
strings such as "3/4".
"""

import json
from fractions import Fraction

from . import _core
from ._core import BetheError, commands

__all__ = ["BetheError", "commands", "run", "rational_R", "fused_R", "transfer_matrix"]


def _problem_text(problem):
    return problem if isinstance(problem, str) else json.dumps(problem)


def _fractions(rows):
    return [[Fraction(x) for x in row] for row in rows]


def run(command, problem, *, seed=None, tol=None, samples=None):
    """Run a CLI command in-process. Returns (report dict, exit code)."""
    text, code = _core.run_json(command, _problem_text(problem), seed, tol, samples)
    return json.loads(text), code


def rational_R(N, u):
    return _fractions(_core.rational_R(N, str(Fraction(u))))


def fused_R(N, k, l, u):
    return _fractions(_core.fused_R(N, k, l, str(Fraction(u))))


def transfer_matrix(problem, k):
    """T_k(u) of the problem's chain and twist at its "u"."""
    return _fractions(_core.transfer_matrix(_problem_text(problem), k))
