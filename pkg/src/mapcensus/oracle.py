"""Brute-force census of small planar maps, used to cross-check the formulas.

Maps are rotation systems on darts ``0 .. 2n-1``: ``alpha(d) = d ^ 1`` pairs
the two halves of an edge and ``sigma`` lists the darts counterclockwise
around each vertex.  Faces are the cycles of ``sigma o alpha``.

All maps with ``n`` edges are grown from the classes with ``n - 1`` edges by
inserting one edge, either as a pendant edge in a corner or as a chord
joining two corners of the same face.  Deleting a non-bridge edge (or a
leaf edge of a tree) shows every map arises this way.  Duplicates are
removed with a canonical code: the smallest breadth-first relabeling over
all root darts.  Only rotations are used, never reflections, so classes are
orientation-preserving isomorphism classes.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from .burnside import CensusTable, census_edges, census_vertices_faces
from .formulas import FAMILIES

DEFAULT_BUDGET = 6
MAX_BUDGET = 7
BUDGET_ENV = "MAPCENSUS_ORACLE_BUDGET"


class OracleBudgetError(ValueError):
    """Requested more edges than the enumeration budget allows."""


def oracle_budget(explicit: Optional[int] = None) -> int:
    if explicit is not None:
        budget = explicit
    else:
        budget = int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))
    if not 1 <= budget <= MAX_BUDGET:
        raise OracleBudgetError(f"oracle budget must be between 1 and {MAX_BUDGET}, got {budget}")
    return budget


@dataclass(frozen=True)
class RotationMap:
    n_edges: int
    sigma: Tuple[int, ...]

    @staticmethod
    def alpha(d: int) -> int:
        return d ^ 1

    def __post_init__(self):
        if len(self.sigma) != 2 * self.n_edges or sorted(self.sigma) != list(range(2 * self.n_edges)):
            raise ValueError("sigma must be a permutation of the darts")

    def _cycles(self, perm: Sequence[int]) -> List[List[int]]:
        seen = [False] * len(perm)
        out = []
        for start in range(len(perm)):
            if seen[start]:
                continue
            cyc = []
            d = start
            while not seen[d]:
                seen[d] = True
                cyc.append(d)
                d = perm[d]
            out.append(cyc)
        return out

    def phi(self) -> Tuple[int, ...]:
        return tuple(self.sigma[d ^ 1] for d in range(2 * self.n_edges))

    def vertices(self) -> List[List[int]]:
        return self._cycles(self.sigma)

    def faces(self) -> List[List[int]]:
        return self._cycles(self.phi())

    @property
    def n_vertices(self) -> int:
        return len(self.vertices())

    @property
    def n_faces(self) -> int:
        return len(self.faces())

    def is_connected(self) -> bool:
        if self.n_edges == 0:
            return True
        seen = {0}
        stack = [0]
        while stack:
            d = stack.pop()
            for e in (self.sigma[d], d ^ 1):
                if e not in seen:
                    seen.add(e)
                    stack.append(e)
        return len(seen) == 2 * self.n_edges

    def is_planar(self) -> bool:
        return self.n_vertices - self.n_edges + self.n_faces == 2

    def vertex_of(self) -> List[int]:
        owner = [0] * (2 * self.n_edges)
        for v, cyc in enumerate(self.vertices()):
            for d in cyc:
                owner[d] = v
        return owner

    def edges(self) -> List[Tuple[int, int]]:
        owner = self.vertex_of()
        return [(owner[2 * e], owner[2 * e + 1]) for e in range(self.n_edges)]


LOOP_MAP = RotationMap(1, (1, 0))
LINK_MAP = RotationMap(1, (0, 1))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------


def _trace(m: RotationMap, root: int) -> Tuple[int, ...]:
    label = {root: 0}
    order = [root]
    i = 0
    while i < len(order):
        d = order[i]
        i += 1
        for e in (m.sigma[d], d ^ 1):
            if e not in label:
                label[e] = len(order)
                order.append(e)
    code = []
    for d in order:
        code.append(label[m.sigma[d]])
        code.append(label[d ^ 1])
    return tuple(code)


def canonical_code(m: RotationMap) -> Tuple[int, ...]:
    return min(_trace(m, r) for r in range(2 * m.n_edges))


def automorphism_count(m: RotationMap) -> int:
    """Number of orientation-preserving automorphisms (root darts with the minimal trace)."""
    traces = [_trace(m, r) for r in range(2 * m.n_edges)]
    best = min(traces)
    return sum(t == best for t in traces)


def from_code(code: Sequence[int]) -> RotationMap:
    """Rebuild a map from its canonical code; darts are renamed so that alpha is ``d ^ 1``."""
    n = len(code) // 4
    sig = code[0::2]
    alp = code[1::2]
    rename: Dict[int, int] = {}
    for d in range(2 * n):
        if d not in rename:
            e = alp[d]
            rename[d] = len(rename)
            rename[e] = len(rename)
    sigma = [0] * (2 * n)
    for d in range(2 * n):
        sigma[rename[d]] = rename[sig[d]]
    return RotationMap(n, tuple(sigma))


# ---------------------------------------------------------------------------
# enumeration
# ---------------------------------------------------------------------------


def _insert_after(sigma: List[int], d: int, x: int) -> None:
    sigma[x] = sigma[d]
    sigma[d] = x


def _extensions(m: RotationMap) -> Iterator[RotationMap]:
    n = m.n_edges
    x, y = 2 * n, 2 * n + 1
    darts = range(2 * n)
    # pendant edge: x after corner d, y alone at a new vertex
    for d in darts:
        s = list(m.sigma) + [0, 0]
        _insert_after(s, d, x)
        s[y] = y
        yield RotationMap(n + 1, tuple(s))
    # chord between two corners (a loop when both corners sit at one vertex)
    for d1 in darts:
        for d2 in darts:
            s = list(m.sigma) + [0, 0]
            _insert_after(s, d1, x)
            _insert_after(s, d2 if d2 != d1 else x, y)
            cand = RotationMap(n + 1, tuple(s))
            if cand.is_planar():
                yield cand
        s = list(m.sigma) + [0, 0]
        _insert_after(s, d1, y)
        _insert_after(s, y, x)
        yield RotationMap(n + 1, tuple(s))


def enumerate_classes(n_max: int, budget: Optional[int] = None) -> Dict[int, Dict[Tuple[int, ...], RotationMap]]:
    """Canonical code -> representative, for every edge count ``1 .. n_max``."""
    if n_max > oracle_budget(budget):
        raise OracleBudgetError(f"n_max={n_max} exceeds the oracle budget {oracle_budget(budget)}")
    levels: Dict[int, Dict[Tuple[int, ...], RotationMap]] = {}
    if n_max < 1:
        return levels
    levels[1] = {canonical_code(m): m for m in (LOOP_MAP, LINK_MAP)}
    for n in range(2, n_max + 1):
        found: Dict[Tuple[int, ...], RotationMap] = {}
        for m in levels[n - 1].values():
            for ext in _extensions(m):
                code = canonical_code(ext)
                if code not in found:
                    found[code] = ext
        levels[n] = found
    return levels


def enumerate_maps(n_max: int, budget: Optional[int] = None) -> Iterator[RotationMap]:
    """One representative per unrooted class, ``1 <= edges <= n_max``."""
    for n, classes in enumerate_classes(n_max, budget).items():
        for code in sorted(classes):
            yield classes[code]


# ---------------------------------------------------------------------------
# connectivity
# ---------------------------------------------------------------------------


def _simple_graph(m: RotationMap) -> nx.Graph:
    g = nx.Graph()
    g.add_nodes_from(range(m.n_vertices))
    g.add_edges_from((a, b) for a, b in m.edges() if a != b)
    return g


def has_loop(m: RotationMap) -> bool:
    return any(a == b for a, b in m.edges())


def has_multiple_edge(m: RotationMap) -> bool:
    seen = set()
    for a, b in m.edges():
        key = (min(a, b), max(a, b))
        if key in seen:
            return True
        seen.add(key)
    return False


def is_2connected(m: RotationMap) -> bool:
    if m.n_edges == 1:
        return True  # loop-map and link-map, by convention
    if has_loop(m):
        return False
    g = _simple_graph(m)
    return next(nx.articulation_points(g), None) is None


def is_3connected(m: RotationMap) -> bool:
    if has_loop(m) or has_multiple_edge(m) or m.n_vertices < 4:
        return False
    return nx.node_connectivity(_simple_graph(m)) >= 3


def connectivity_class(m: RotationMap) -> Dict[str, bool]:
    return {"is_2connected": is_2connected(m), "is_3connected": is_3connected(m)}


_FILTERS = {
    "maps": lambda m: True,
    "two_connected": is_2connected,
    "three_connected": is_3connected,
}


# ---------------------------------------------------------------------------
# census and comparison
# ---------------------------------------------------------------------------


def oracle_census(family: str, mode: str, n_max: int, budget: Optional[int] = None,
                  classes=None) -> CensusTable:
    keep = _FILTERS[family]
    if classes is None:
        classes = enumerate_classes(n_max, budget)
    if mode == "by_edges":
        entries = {n: 0 for n in range(1, n_max + 1)}
    elif mode == "by_vertices_faces":
        entries = {(i, d - i): 0 for d in range(1, n_max + 1) for i in range(d + 1)}
    else:
        raise ValueError(f"unknown mode {mode!r}")
    for n in range(1, n_max + 1):
        for m in classes[n].values():
            if not keep(m):
                continue
            key = n if mode == "by_edges" else (m.n_vertices - 1, m.n_faces - 1)
            entries[key] += 1
    return CensusTable(family, mode, n_max, entries)


def rooted_counts(family: str, n_max: int, budget: Optional[int] = None, classes=None) -> List[int]:
    """Rooted maps per edge count: each class weighs ``2n / |Aut+|``."""
    keep = _FILTERS[family]
    if classes is None:
        classes = enumerate_classes(n_max, budget)
    out = []
    for n in range(1, n_max + 1):
        out.append(sum(2 * n // automorphism_count(m) for m in classes[n].values() if keep(m)))
    return out


def rooted_quadrangulations(n_faces_max: int, budget: Optional[int] = None, classes=None) -> List[int]:
    """Rooted quadrangulations with ``1 .. n_faces_max`` faces (they have ``2n`` edges)."""
    if classes is None:
        classes = enumerate_classes(2 * n_faces_max, budget)
    out = []
    for f in range(1, n_faces_max + 1):
        total = 0
        for m in classes[2 * f].values():
            faces = m.faces()
            if len(faces) == f and all(len(c) == 4 for c in faces):
                total += 4 * f // automorphism_count(m)
        out.append(total)
    return out


@dataclass
class OracleReport:
    n_max: int
    compared: List[Tuple[str, str]] = field(default_factory=list)
    mismatches: List[Tuple[str, str, object, int, int]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def as_text(self) -> str:
        lines = [f"oracle vs formulas, up to {self.n_max} edges"]
        for fam, mode in self.compared:
            bad = [m for m in self.mismatches if m[:2] == (fam, mode)]
            lines.append(f"{'FAIL' if bad else 'PASS'}  {fam:<16} {mode}")
            for _, _, key, got, want in bad:
                lines.append(f"      at {key}: oracle {got}, formula {want}")
        lines.append("agreement" if self.ok else f"{len(self.mismatches)} mismatching entries")
        return "\n".join(lines) + "\n"


def oracle_vs_formula(n_max: int, budget: Optional[int] = None,
                      families: Iterable[str] = FAMILIES) -> OracleReport:
    classes = enumerate_classes(n_max, budget)
    rep = OracleReport(n_max)
    for fam in families:
        for mode, formula in (("by_edges", census_edges), ("by_vertices_faces", census_vertices_faces)):
            got = oracle_census(fam, mode, n_max, classes=classes)
            want = formula(fam, n_max)
            rep.compared.append((fam, mode))
            for key, count in sorted(got.entries.items()):
                if count != want.entries[key]:
                    rep.mismatches.append((fam, mode, key, count, want.entries[key]))
    return rep


def dump_codes(path: str, n_max: int, budget: Optional[int] = None) -> int:
    """Write ``edges<TAB>code`` lines, sorted, for regression diffs; returns the line count."""
    classes = enumerate_classes(n_max, budget)
    lines = []
    for n in sorted(classes):
        for code in sorted(classes[n]):
            lines.append(f"{n}\t{' '.join(map(str, code))}")
    with open(path, "w", encoding="utf-8") as fh:
        fh.write("\n".join(lines) + "\n")
    return len(lines)
