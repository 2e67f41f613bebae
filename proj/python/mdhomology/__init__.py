"""Moderately discontinuous homology of Holder complexes and snakes.

Complexes, snakes, arcs and profiles are plain dicts in the JSON layouts used
by the mdh command-line tool. Exponents are strings such as "3/2" or "inf".
"""

import json as _json

from . import _core
from ._core import (
    ArithmeticError,
    CapacityError,
    ConsistencyError,
    CoverageError,
    DegeneracyError,
    DomainError,
    InputError,
    MdhError,
    PreconditionError,
    UnsupportedSizeError,
    make_gluing_word,
    node_counts,
)

__all__ = [
    "MdhError", "InputError", "DomainError", "PreconditionError", "CoverageError", "ArithmeticError",
    "ConsistencyError", "DegeneracyError", "CapacityError", "UnsupportedSizeError",
    "mdh_inner", "inner_profile", "b_reduce", "simplify", "is_isomorphic", "link_betti", "quotient_rank",
    "validate_snake_name", "make_gluing_word", "node_counts", "mdh1_basic_snake",
    "realize_snake", "realize_bubble_snake", "realize_nonsnake_bubble", "tord", "tord_numeric",
    "outer_profile", "build_target_snake", "weak_equiv_same_homology", "rank_at",
]


def _dump(obj):
    return obj if isinstance(obj, str) else _json.dumps(obj)


def _exp(value):
    return str(value)


def mdh_inner(complex, b, degree=1):
    return _core.mdh_inner(_dump(complex), _exp(b), degree)


def inner_profile(complex, degree=1):
    return _json.loads(_core.inner_profile(_dump(complex), degree))


def b_reduce(complex, b):
    return _json.loads(_core.b_reduce(_dump(complex), _exp(b)))


def simplify(complex):
    return _json.loads(_core.simplify(_dump(complex)))


def is_isomorphic(a, b, max_vertices=12):
    return _core.is_isomorphic(_dump(a), _dump(b), max_vertices)


def link_betti(complex):
    return _core.link_betti(_dump(complex))


def quotient_rank(complex, b, merges=()):
    return _core.quotient_rank(_dump(complex), _exp(b), [tuple(p) for p in merges])


def validate_snake_name(word):
    if isinstance(word, str):
        word = word.split()
    return [{"kind": k, "position": p, "detail": d} for k, p, d in _core.validate_snake_name(list(word))]


def mdh1_basic_snake(snake):
    return _json.loads(_core.mdh1_basic_snake(_dump(snake)))


def realize_snake(snake):
    return _json.loads(_core.realize_snake(_dump(snake)))


def realize_bubble_snake(beta, alpha):
    return _json.loads(_core.realize_bubble_snake(_exp(beta), _exp(alpha)))


def realize_nonsnake_bubble(k, beta, alphas):
    return _json.loads(_core.realize_nonsnake_bubble(k, _exp(beta), [_exp(a) for a in alphas]))


def tord(a, b):
    return _core.tord(_dump(a), _dump(b))


def tord_numeric(a, b):
    return _core.tord_numeric(_dump(a), _dump(b))


def outer_profile(snake=None, model=None, degree=1):
    """Oracle profile of a snake dict or of a hand-supplied link model dict."""
    if (snake is None) == (model is None):
        raise TypeError("give exactly one of snake= or model=")
    if snake is not None:
        return _json.loads(_core.outer_profile_snake(_dump(snake), degree))
    return _json.loads(_core.outer_profile_model(_dump(model), degree))


def build_target_snake(ks, qs, beta=1):
    return _json.loads(_core.build_target_snake(list(ks), [_exp(q) for q in qs], _exp(beta)))


def weak_equiv_same_homology(a, b):
    return _json.loads(_core.weak_equiv_same_homology(_dump(a), _dump(b)))


def rank_at(profile, b):
    """Rank of a profile dict at b (a string, int or Fraction; "inf" allowed)."""
    from fractions import Fraction

    if str(b) == "inf":
        return profile["at_infinity"]
    x = Fraction(str(b))
    for row in profile["intervals"]:
        lo = Fraction(row["from"])
        if lo <= x and (row["to"] == "inf" or x < Fraction(row["to"])):
            return row["rank"]
    raise DomainError("b below 1")
