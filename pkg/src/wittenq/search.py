"""Exhaustive enumeration of string / string^c GCI instances within bounds.

The diagonal Diophantine equations determine the ambient dimensions from
the degree columns (n_b + 1 = sum_a d_ab^2 [+ k c_b^2]), so only degree
rows and spin^c coefficients are enumerated.  Instances are emitted in a
canonical form: degree rows sorted, ambient factors (columns) sorted,
deduplicated up to column permutation.  Row signs are not quotiented.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Optional

from .gci import (GCIData, codim_ok, condition_report, dims, is_string,
                  is_stringc, stringc_coefficient)


@dataclass
class SearchQuery:
    s_max: int = 2
    t_max: int = 4
    d_max: int = 4
    c_max: int = 2
    target_real_dim: Optional[int] = None
    positive: bool = True
    require_codim: bool = True
    q_order: int = 20


@dataclass
class FoundInstance:
    g: GCIData
    report: object  # ConditionReport

    def key(self):
        return (self.g.n, self.g.D, self.g.C)


def _degree_values(q: SearchQuery):
    if q.positive:
        return list(range(1, q.d_max + 1))
    return [v for v in range(-q.d_max, q.d_max + 1)]


def _canonical(n, D, C):
    """Sort rows, then sort ambient factors by (n, column, c), rebuilding D."""
    s = len(n)
    cols = []
    for b in range(s):
        col = tuple(row[b] for row in D)
        cols.append((n[b], col, C[b] if C is not None else 0))
    order = sorted(range(s), key=lambda b: cols[b])
    n2 = tuple(n[b] for b in order)
    C2 = tuple(C[b] for b in order) if C is not None else None
    D2 = tuple(sorted(tuple(row[b] for b in order) for row in D))
    return n2, D2, C2


def _row_multisets(q: SearchQuery, s, t):
    values = _degree_values(q)
    rows = sorted(itertools.product(values, repeat=s))
    return itertools.combinations_with_replacement(rows, t)


def _emit(q: SearchQuery, n, D, C, check):
    n, D, C = _canonical(n, D, C)
    g = GCIData(n, D, C, q_order=q.q_order)
    if not check(g):
        return None
    if q.require_codim and not codim_ok(g):
        return None
    if q.target_real_dim is not None and dims(g)[1] != q.target_real_dim:
        return None
    return FoundInstance(g, condition_report(g))


def find_string(q: SearchQuery):
    """All canonical string instances within bounds (n derived from columns)."""
    found = {}
    for s in range(1, q.s_max + 1):
        for t in range(1, q.t_max + 1):
            for D in _row_multisets(q, s, t):
                n = [sum(row[b] ** 2 for row in D) - 1 for b in range(s)]
                if any(v < 1 for v in n) or sum(n) < t:
                    continue
                inst = _emit(q, n, D, None, is_string)
                if inst is not None:
                    found.setdefault(inst.key(), inst)
    return [found[k] for k in sorted(found)]


def find_stringc(q: SearchQuery, parity):
    """Canonical string^c instances; parity selects the dim 4k or 4k+2 branch."""
    if parity not in ("dim4k", "dim4k2"):
        raise ValueError("parity must be 'dim4k' or 'dim4k2'")
    coef = 3 if parity == "dim4k" else 1
    residue = 0 if parity == "dim4k" else 2
    found = {}
    for s in range(1, q.s_max + 1):
        cvals = list(range(-q.c_max, q.c_max + 1))
        for t in range(1, q.t_max + 1):
            for D in _row_multisets(q, s, t):
                for C in itertools.product(cvals, repeat=s):
                    n = [sum(row[b] ** 2 for row in D) + coef * C[b] ** 2 - 1
                         for b in range(s)]
                    if any(v < 1 for v in n) or sum(n) < t:
                        continue
                    if (sum(n) - t) * 2 % 4 != residue:
                        continue

                    def check(g):
                        return (is_stringc(g)
                                and stringc_coefficient(g) == coef)

                    inst = _emit(q, n, D, C, check)
                    if inst is not None:
                        found.setdefault(inst.key(), inst)
    return [found[k] for k in sorted(found)]
