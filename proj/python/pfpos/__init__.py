"""Exact positivity proofs for P-finite sequences."""

import json
from fractions import Fraction

from ._core import ParseError, Spec, UnderdeterminedError, parse_spec, remark_spec
from . import _core

__all__ = [
    "ParseError",
    "Spec",
    "UnderdeterminedError",
    "parse_spec",
    "remark_spec",
    "term",
    "prove",
    "classify",
    "cfinite_phi",
    "map_region",
    "coverage_fraction",
]


def _q(x):
    return str(Fraction(x)) if not isinstance(x, str) else x


def term(spec, n):
    """Exact f(n) as a Fraction."""
    return Fraction(_core.eval_term(spec, n))


def prove(spec, algorithm="auto", max_iter=50):
    """Verdict dict: status, engine, certificate, witness, verified, ..."""
    return json.loads(_core.prove_json(spec, algorithm, max_iter))


def classify(spec):
    return json.loads(_core.classify_json(spec))


def cfinite_phi(u, v, rho):
    return _core.cfinite_phi(_q(u), _q(v), rho)


def map_region(grid_step, rho_max):
    rows = json.loads(_core.map_region_json(_q(grid_step), rho_max))
    for r in rows:
        r["u"], r["v"] = Fraction(r["u"]), Fraction(r["v"])
    return rows


def coverage_fraction(grid_step):
    return Fraction(_core.coverage_fraction(_q(grid_step)))
