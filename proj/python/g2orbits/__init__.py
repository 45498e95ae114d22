"""Exact classification of adjoint orbit types of G2."""

import json
from fractions import Fraction

from g2orbits import _core
from g2orbits._core import G2Error

__all__ = [
    "G2Error",
    "annihilator_structure",
    "classify",
    "derivations",
    "fixed_subalgebra_structure",
    "multiplication_table",
    "oct_mul",
    "roots",
    "run_cli",
    "scan",
]


def _text(x):
    if isinstance(x, bool) or not isinstance(x, (int, str, Fraction)):
        raise TypeError(f"expected int, str or Fraction, got {type(x).__name__}")
    return str(x)


def _fractions(values):
    return [Fraction(v) for v in values]


def multiplication_table():
    return json.loads(_core.multiplication_table())


def derivations():
    return json.loads(_core.derivations())


def roots():
    return json.loads(_core.roots())


def classify(tau, project=False, convention="short=sp1xu1"):
    return json.loads(_core.classify([_text(t) for t in tau], project, convention))


def scan(radius, format="json"):
    out = _core.scan(radius, format)
    return json.loads(out) if format == "json" else out


def oct_mul(x, y):
    return _fractions(json.loads(_core.oct_mul([_text(v) for v in x], [_text(v) for v in y])))


def fixed_subalgebra_structure(which):
    return json.loads(_core.fixed_subalgebra_structure(which))


def annihilator_structure(x):
    return json.loads(_core.annihilator_structure([_text(v) for v in x]))


def run_cli(args):
    return _core.run_cli(list(args))
