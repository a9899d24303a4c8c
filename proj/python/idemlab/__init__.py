"""Finite groups, cellular covers and the idempotent functor Idem."""

import json
import os

from ._core import (
    BudgetExceeded,
    CapExceeded,
    Group,
    InvalidInput,
    ParseError,
    SessionOptions,
    are_isomorphic,
    count_homs,
    load_group_file,
    named_group,
    oracle_suites,
    parse_group,
    schur_multiplier,
)
from . import _core

__all__ = [
    "BudgetExceeded", "CapExceeded", "Group", "InvalidInput", "ParseError",
    "are_isomorphic", "count_homs", "covers", "group", "idem", "info",
    "load_group_file", "named_group", "oracle", "oracle_suites", "parse_group",
    "schur_multiplier", "verify_table",
]


def _options(cache_dir=None, cap_order=None, budget=None, jobs=None):
    o = SessionOptions()
    if cache_dir is not None:
        o.cache_dir = os.fspath(cache_dir)
    if cap_order is not None:
        o.cap_order = cap_order
    if budget is not None:
        o.budget = budget
    if jobs is not None:
        o.jobs = jobs
    return o


def group(spec):
    """A Group, a built-in name, or a path to a group file."""
    if isinstance(spec, Group):
        return spec
    if os.path.exists(spec):
        return load_group_file(spec)
    return named_group(spec)


def info(g, **opts):
    return json.loads(_core._info(group(g), _options(**opts)))


def covers(g, **opts):
    return json.loads(_core._covers(group(g), _options(**opts)))


def idem(g, iterate=0, inf=False, **opts):
    return json.loads(_core._idem(group(g), iterate, inf, _options(**opts)))


def verify_table(corpus, **opts):
    return json.loads(_core._verify_table(os.fspath(corpus), _options(**opts)))


def oracle(name, **opts):
    return json.loads(_core._oracle(name, _options(**opts)))
