"""Exact computations with unipotent numerical monoids."""

import json

from ._core import (
    EntryOverflow,
    Error,
    Infeasible,
    InputError,
    Matrix,
    Monoid,
    NotClosed,
    PatternGroup,
    Undecided,
    ValidationError,
    adjoin,
    apery_contains,
    apery_core,
    apery_maximal,
    enumerate_irreducible,
    enumerate_monoids,
    export_dot,
    factor_via_apery,
    frobenius,
    from_generators,
    fundamental_monoid,
    ideal_min_generators,
    intersect,
    is_irreducible,
    minimal_generators,
    oversemigroups,
    pseudo_frobenius,
    run_cli,
    s_leq,
    special_gaps,
    torsion_monoid,
    type_numbers,
)
from . import _core


def vec(*entries):
    """First-row shorthand: vec(1, 2) is the P(3) element with first row (1, 2)."""
    return Matrix.from_vector(list(entries))


def invariants(s):
    return json.loads(_core.invariants_json(s))


def classify(s):
    return json.loads(_core.classify_json(s))


def verify(s):
    return json.loads(_core.verify_json(s))


def idempotent_lattice(s):
    return json.loads(_core.idempotent_lattice_json(s))


def load(path):
    with open(path) as f:
        return Monoid.from_json(f.read())
