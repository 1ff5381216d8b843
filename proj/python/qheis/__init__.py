"""Exact computations in the quantum Heisenberg algebra H_{p,q} at roots of unity.

Structured results (PBW elements, modules, descriptors) are returned as
plain dicts in the same JSON schema the ``qheis`` command prints.
"""

import json as _json

from . import _core
from ._core import DomainError, classify_pair, is_central, ord_pq, pi_degree, pi_degree_snf

__all__ = [
    "DomainError",
    "build_module",
    "classify",
    "classify_pair",
    "iso_test",
    "is_central",
    "is_simple",
    "normal_form",
    "ord_pq",
    "pi_degree",
    "pi_degree_snf",
    "run",
    "scan_orders",
    "verify_relations",
]


def _text(doc):
    return doc if isinstance(doc, str) else _json.dumps(doc)


def scan_orders(m, n):
    return _json.loads(_core.scan_orders(m, n))


def normal_form(expr, m, n, k1=None, k2=None):
    return _json.loads(_core.normal_form(expr, m, n, k1, k2))


def build_module(kind, m, n, k1=None, k2=None, mu=None, lam=None, gamma=None):
    """Scalars are expressions in g, e.g. ``"g^2 + 1"``."""
    return _json.loads(_core.build_module(kind, m, n, k1, k2, mu, lam, gamma))


def verify_relations(rep):
    return _core.verify_relations(_text(rep))


def is_simple(rep):
    return _core.is_simple(_text(rep))


def classify(rep):
    return _json.loads(_core.classify(_text(rep)))


def iso_test(a, b, m, n, k1=None, k2=None):
    """Returns (isomorphic, witness shift or None)."""
    return _core.iso_test(_text(a), _text(b), m, n, k1, k2)


def run(*args):
    """Runs one command line; returns (exit code, stdout, stderr)."""
    return _core.run([str(a) for a in args])
