"""Unrooted census tables from rooted and k-rooted series (orbit counting).

For maps with ``n`` edges, ``2n c_n = c'_n + sum_{k>=2} phi(k) c_n^(k)``: the
rooted count plus the totient-weighted counts of maps carrying a rotation of
order ``k``.  Each family comes with an *assembly plan*, a list of
``BurnsideTerm``s saying which catalog series to substitute at ``x^k``,
multiplied by which monomial.  Evaluating the plan gives the series whose
coefficient of ``x^n`` (resp. ``xb^i xw^j``) must be divisible by ``2n``
(resp. ``2(i+j)``); the quotient is the census entry.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Callable, Dict, List, Optional, Sequence, Tuple, Union

from . import formulas
from .series import Series1, Series2, SeriesError

MODES = ("by_edges", "by_vertices_faces")
SMALLEST_MAP = {"maps": 1, "two_connected": 1, "three_connected": 6}


class DivisibilityError(SeriesError):
    """An assembled Burnside coefficient is not a multiple of its orbit size."""


@dataclass(frozen=True)
class BurnsideTerm:
    """``phi-weight * monomial * series(x^k)``.

    ``k`` is a fixed power when ``summed`` is false; otherwise the term stands
    for ``sum_{k >= k} phi(k) series(x^k)``.
    """

    name: str
    k: int
    shift: Union[int, Tuple[int, int]] = 0
    summed: bool = False


def _plan_1v(family: str, variant: str = "primed") -> List[BurnsideTerm]:
    T = BurnsideTerm
    if family == "maps":
        return [T("F", 1), T("F_vf", 2, 1), T("F_ff", 2, 2), T("F_vv", 2, 0, True)]
    if family == "two_connected":
        return [T("G", 1), T("G_vf", 2, 1), T("G_ff", 2, 2), T("G_vv", 2, 0, True)]
    if family == "three_connected":
        vf1, ff1 = ("H_vf_prime", "H_ff_prime") if variant == "primed" else ("H_vf", "H_ff")
        return [T("H", 1), T(vf1, 2, 1), T("H_vf", 2, 1), T(ff1, 2, 2), T("H_ff", 2, 2),
                T("H_vv_2", 2, 0), T("H_vv_ge3", 3, 0, True)]
    raise ValueError(f"unknown family {family!r}")


def _plan_2v(family: str, variant: str = "primed") -> List[BurnsideTerm]:
    T = BurnsideTerm
    if family == "maps":
        return [T("F", 1, (0, 0)), T("F_bf", 2, (0, 1)), T("F_wf", 2, (1, 0)), T("F_ff", 2, (1, 1)),
                T("F_bb", 2, (1, -1), True), T("F_ww", 2, (-1, 1), True), T("F_bw", 2, (0, 0), True)]
    if family == "two_connected":
        return [T("G", 1, (0, 0)), T("G_bf", 2, (0, 1)), T("G_wf", 2, (1, 0)), T("G_ff", 2, (1, 1)),
                T("G_bb", 2, (1, -1), True), T("G_ww", 2, (-1, 1), True), T("G_bw", 2, (0, 0), True)]
    if family == "three_connected":
        bf1, wf1 = ("H_bf_prime", "H_wf_prime") if variant == "primed" else ("H_bf", "H_wf")
        return [T("H", 1, (0, 0)),
                T(bf1, 2, (0, 1)), T("H_bf", 2, (0, 1)), T(wf1, 2, (1, 0)), T("H_wf", 2, (1, 0)),
                T("H_ff_prime", 2, (1, 1)), T("H_ff", 2, (1, 1)),
                T("H_bb_2", 2, (1, -1)), T("H_ww_2", 2, (-1, 1)), T("H_bw_2", 2, (0, 0)),
                T("H_bb_ge3", 3, (1, -1), True), T("H_ww_ge3", 3, (-1, 1), True),
                T("H_bw_ge3", 3, (0, 0), True)]
    raise ValueError(f"unknown family {family!r}")


def assembly_plan(family: str, variables: int, variant: str = "primed") -> List[BurnsideTerm]:
    """The Burnside line of ``family``.

    ``variant="printed"`` reproduces the 3-connected line with the axial-face
    families ``H_vf'``/``H_bf'`` replaced by their unprimed namesakes, which
    is how that line is sometimes typeset; it does not give integer counts.
    """
    return _plan_1v(family, variant) if variables == 1 else _plan_2v(family, variant)


# ---------------------------------------------------------------------------
# totient
# ---------------------------------------------------------------------------


@lru_cache(maxsize=None)
def _totients(limit: int) -> Tuple[int, ...]:
    phi = list(range(limit + 1))
    for p in range(2, limit + 1):
        if phi[p] == p:  # p is prime
            for m in range(p, limit + 1, p):
                phi[m] -= phi[m] // p
    return tuple(phi)


def totient(k: int) -> int:
    if k < 1:
        raise ValueError("totient is defined for k >= 1")
    size = 64
    while size < k:
        size *= 2
    return _totients(size)[k]


# ---------------------------------------------------------------------------
# tables
# ---------------------------------------------------------------------------


@dataclass
class CensusTable:
    family: str
    mode: str
    max: int
    entries: Dict = field(default_factory=dict)  # n -> count, or (i, j) -> count

    def rows(self):
        first = SMALLEST_MAP.get(self.family, 1)
        if self.mode == "by_edges":
            return [(n, self.entries[n]) for n in range(first, self.max + 1)]
        out = []
        for d in range(first, self.max + 1):
            for i in range(d + 1):
                out.append(((i, d - i), self.entries[(i, d - i)]))
        return out

    def as_list(self) -> List[int]:
        """Edge counts ``c_1 .. c_max``."""
        return [self.entries[n] for n in range(1, self.max + 1)]

    def row_sums(self) -> Dict[int, int]:
        sums: Dict[int, int] = {}
        for (i, j), c in self.entries.items():
            sums[i + j] = sums.get(i + j, 0) + c
        return sums

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        if self.mode == "by_edges":
            w.writerow(["n", "count"])
            for n, c in self.rows():
                w.writerow([n, str(c)])
        else:
            w.writerow(["i", "j", "count"])
            for (i, j), c in self.rows():
                w.writerow([i, j, str(c)])
        return buf.getvalue()

    def to_json(self) -> str:
        if self.mode == "by_edges":
            entries = [{"n": n, "count": str(c)} for n, c in self.rows()]
        else:
            entries = [{"i": i, "j": j, "count": str(c)} for (i, j), c in self.rows()]
        doc = {"family": self.family, "mode": self.mode, "max": self.max, "entries": entries}
        return json.dumps(doc, indent=1) + "\n"


# ---------------------------------------------------------------------------
# assembly
# ---------------------------------------------------------------------------

SeriesSource = Callable[[str, int], Union[Series1, Series2]]


def _catalog_source(catalog) -> SeriesSource:
    return lambda name, degree: catalog[name].truncate(degree)


def _default_source_1v(family: str, N: int) -> SeriesSource:
    cat = formulas.family_catalog_1v(family, N)
    return _catalog_source(cat)


def _default_source_2v(family: str, N: int) -> SeriesSource:
    built: Dict[int, Dict[str, Series2]] = {}
    plan = assembly_plan(family, 2)

    def need(name):
        return max(N // t.k for t in plan if t.name == name)

    def source(name, degree):
        d = need(name)
        if d not in built:
            names = tuple(t.name for t in plan if need(t.name) == d)
            if family == "three_connected":
                built[d] = formulas.three_connected_2v(None, d, names)
            elif family == "maps":
                built[d] = formulas.maps_2v(None, d)
            else:
                built[d] = formulas.two_connected_2v(None, d)
        return built[d][name].truncate(degree)

    return source


def _term_series(term: BurnsideTerm, k: int, source: SeriesSource, N: int):
    s = source(term.name, N // k).power_substitute(k)
    if isinstance(s, Series1):
        return s.laurent_shift(term.shift).normalized().truncate(N)
    return s.laurent_shift(*term.shift).normalized().truncate(N)


def burnside_sum(family: str, N: int, variables: int, source: Optional[SeriesSource] = None,
                 plan: Optional[Sequence[BurnsideTerm]] = None):
    """The series ``sum 2n c_n x^n`` (or its two-variable analogue) to order ``N``."""
    if plan is None:
        plan = assembly_plan(family, variables)
    if source is None:
        source = (_default_source_1v if variables == 1 else _default_source_2v)(family, N)
    total = Series1.zero(N) if variables == 1 else Series2.zero(N)
    for term in plan:
        ks = range(term.k, N + 1) if term.summed else [term.k]
        for k in ks:
            if k > N and term.summed:
                break
            piece = _term_series(term, k, source, N)
            total = total + (piece.scale(totient(k)) if term.summed else piece)
    return total


def _divide(c, size, where) -> int:
    if not isinstance(c, int) or c % size:
        raise DivisibilityError(f"Burnside coefficient {c} at {where} is not divisible by {size}")
    q = c // size
    if q < 0:
        raise DivisibilityError(f"negative census entry {q} at {where}")
    return q


def census_edges(family: str, N: int, catalog=None,
                 plan: Optional[Sequence[BurnsideTerm]] = None) -> CensusTable:
    """Unrooted maps of ``family`` counted by edges, ``n = 1 .. N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    source = _catalog_source(catalog) if catalog is not None else None
    s = burnside_sum(family, N, 1, source, plan)
    entries = {n: _divide(s[n], 2 * n, f"n={n}") for n in range(1, N + 1)}
    if s[0] != 0:
        raise DivisibilityError(f"Burnside sum has a constant term {s[0]}")
    return CensusTable(family, "by_edges", N, entries)


def census_vertices_faces(family: str, N: int, catalog=None,
                          plan: Optional[Sequence[BurnsideTerm]] = None) -> CensusTable:
    """Unrooted maps with ``i+1`` vertices and ``j+1`` faces, ``1 <= i + j <= N``."""
    if N < 1:
        raise ValueError("N must be >= 1")
    source = _catalog_source(catalog) if catalog is not None else None
    s = burnside_sum(family, N, 2, source, plan)
    entries = {}
    for d in range(1, N + 1):
        for i in range(d + 1):
            entries[(i, d - i)] = _divide(s[i, d - i], 2 * d, f"(i, j)={(i, d - i)}")
    if s[0, 0] != 0:
        raise DivisibilityError(f"Burnside sum has a constant term {s[0, 0]}")
    return CensusTable(family, "by_vertices_faces", N, entries)


@dataclass
class CrossCheckReport:
    family: str
    checked: int
    mismatches: List[Tuple[int, int, int]]  # (n, edge count, row sum)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def cross_check_tables(t_edges: CensusTable, t_vf: CensusTable) -> CrossCheckReport:
    """Euler's relation: the (i, j) entries with ``i + j = n`` sum to ``c_n``."""
    if t_edges.family != t_vf.family:
        raise ValueError("tables belong to different families")
    top = min(t_edges.max, t_vf.max)
    sums = t_vf.row_sums()
    bad = [(n, t_edges.entries[n], sums.get(n, 0)) for n in range(1, top + 1)
           if t_edges.entries[n] != sums.get(n, 0)]
    return CrossCheckReport(t_edges.family, top, bad)
