"""Coxeter matrices and diagram-level predicates.

Generators are the integers ``0 .. rank-1``.  Generator subsets are plain
``frozenset``\\ s of indices.  Adjacency always means adjacency in the defining
graph (``m_st`` finite); the Coxeter-Dynkin diagram (``m_st >= 3``, including
``inf``) is used for irreducibility and finite-type recognition.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Optional

import networkx as nx

from .errors import InvalidMatrix, InvalidSubset, NotFC, PreconditionError


class _Infinity:
    """The order ``inf``.  Supports equality and ordering against ints only."""

    __slots__ = ()

    def __repr__(self):
        return "inf"

    __str__ = __repr__

    def __reduce__(self):
        return "INF"

    def __eq__(self, other):
        return other is self

    def __hash__(self):
        return hash("twistlab.inf")

    def __lt__(self, other):
        return False

    def __le__(self, other):
        return other is self

    def __gt__(self, other):
        return other is not self

    def __ge__(self, other):
        return True


INF = _Infinity()


def is_finite(m) -> bool:
    return m is not INF


@dataclass(frozen=True)
class CoxeterMatrix:
    entries: tuple
    _hash: int = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        rows = tuple(tuple(INF if (m is INF or m == math.inf) else m for m in row)
                     for row in self.entries)
        n = len(rows)
        if n == 0:
            raise InvalidMatrix("rank must be positive")
        for i, row in enumerate(rows):
            if len(row) != n:
                raise InvalidMatrix(f"row {i} has {len(row)} entries, expected {n}")
            for j, m in enumerate(row):
                if m is not INF and (not isinstance(m, int) or isinstance(m, bool)):
                    raise InvalidMatrix(f"entry ({i},{j}) is not an order: {m!r}")
                if i == j and m != 1:
                    raise InvalidMatrix(f"diagonal entry ({i},{i}) must be 1")
                if i != j:
                    if m is not INF and m < 2:
                        raise InvalidMatrix(f"entry ({i},{j}) must be >= 2")
                    if rows[j][i] != m:
                        raise InvalidMatrix(f"asymmetric entries at ({i},{j})")
        object.__setattr__(self, "entries", rows)
        object.__setattr__(self, "_hash", hash(rows))

    def __hash__(self):
        return self._hash

    @property
    def rank(self) -> int:
        return len(self.entries)

    @property
    def generators(self) -> frozenset:
        return frozenset(range(self.rank))

    def m(self, s: int, t: int):
        return self.entries[s][t]

    def adjacent(self, s: int, t: int) -> bool:
        return s != t and self.entries[s][t] is not INF

    def commute(self, s: int, t: int) -> bool:
        return self.entries[s][t] == 2

    def finite_orders(self) -> set:
        return {m for row in self.entries for m in row if m is not INF and m >= 2}

    def is_right_angled(self) -> bool:
        return all(m in (1, 2) or m is INF for row in self.entries for m in row)

    @classmethod
    def from_edges(cls, rank: int, edges: dict, default=INF) -> "CoxeterMatrix":
        rows = [[1 if i == j else default for j in range(rank)] for i in range(rank)]
        for (i, j), m in edges.items():
            rows[i][j] = rows[j][i] = m
        return cls(tuple(map(tuple, rows)))

    @classmethod
    def right_angled(cls, rank: int, edges: Iterable) -> "CoxeterMatrix":
        return cls.from_edges(rank, {tuple(e): 2 for e in edges})

    @classmethod
    def from_graph(cls, graph: nx.Graph) -> "CoxeterMatrix":
        """Right-angled matrix of a graph; nodes are relabelled 0..n-1 in sorted order."""
        nodes = sorted(graph.nodes())
        index = {v: i for i, v in enumerate(nodes)}
        return cls.right_angled(len(nodes), [(index[a], index[b]) for a, b in graph.edges()])

    def defining_graph(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.rank))
        for s, t in itertools.combinations(range(self.rank), 2):
            if self.adjacent(s, t):
                g.add_edge(s, t, m=self.entries[s][t])
        return g

    def dynkin_diagram(self) -> nx.Graph:
        g = nx.Graph()
        g.add_nodes_from(range(self.rank))
        for s, t in itertools.combinations(range(self.rank), 2):
            if self.entries[s][t] >= 3:
                g.add_edge(s, t, m=self.entries[s][t])
        return g


def subset(M: CoxeterMatrix, J) -> frozenset:
    J = frozenset(J)
    for j in J:
        if not isinstance(j, int) or not 0 <= j < M.rank:
            raise InvalidSubset(f"generator {j!r} out of range for rank {M.rank}")
    return J


def _key(J) -> tuple:
    return tuple(sorted(J))


def sort_subsets(subsets) -> list:
    return sorted((frozenset(J) for J in subsets), key=_key)


def perp(M: CoxeterMatrix, J) -> frozenset:
    J = subset(M, J)
    return frozenset(s for s in range(M.rank)
                     if s not in J and all(M.commute(s, j) for j in J))


def _components(M: CoxeterMatrix, vertices, edge) -> list:
    vertices = sorted(vertices)
    g = nx.Graph()
    g.add_nodes_from(vertices)
    g.add_edges_from((s, t) for s, t in itertools.combinations(vertices, 2) if edge(s, t))
    return sorted((frozenset(c) for c in nx.connected_components(g)), key=min)


def irreducible_components(M: CoxeterMatrix, J) -> list:
    J = subset(M, J)
    return _components(M, J, lambda s, t: M.m(s, t) >= 3)


def graph_components(M: CoxeterMatrix, vertices) -> list:
    """Connected components of the defining graph induced on ``vertices``."""
    return _components(M, vertices, M.adjacent)


def is_irreducible(M: CoxeterMatrix, J) -> bool:
    return len(irreducible_components(M, J)) == 1


# -- finite-type classification -------------------------------------------

def _classify_irreducible(M: CoxeterMatrix, C) -> Optional[str]:
    C = sorted(C)
    n = len(C)
    if n == 1:
        return "A1"
    labels = {}
    for s, t in itertools.combinations(C, 2):
        m = M.m(s, t)
        if m is INF:
            return None
        if m >= 3:
            labels[(s, t)] = m
    if n == 2:
        m = labels[(C[0], C[1])]
        return {3: "A2", 4: "B2", 6: "G2"}.get(m, f"I2({m})")
    if len(labels) != n - 1:
        return None  # a connected graph with n-1 edges is a tree
    big = [(e, m) for e, m in labels.items() if m > 3]
    degree = {v: 0 for v in C}
    for s, t in labels:
        degree[s] += 1
        degree[t] += 1
    if len(big) > 1:
        return None
    if big:
        (s, t), m = big[0]
        if max(degree.values()) > 2:
            return None
        at_end = degree[s] == 1 or degree[t] == 1
        if m == 4:
            if at_end:
                return f"B{n}"
            return "F4" if n == 4 else None
        if m == 5 and at_end and n in (3, 4):
            return f"H{n}"
        return None
    branch = [v for v in C if degree[v] >= 3]
    if not branch:
        return f"A{n}"
    if len(branch) > 1 or degree[branch[0]] != 3:
        return None
    centre = branch[0]
    adj = {v: set() for v in C}
    for s, t in labels:
        adj[s].add(t)
        adj[t].add(s)
    arms = []
    for start in adj[centre]:
        length, prev, cur = 1, centre, start
        while True:
            nxt = adj[cur] - {prev}
            if not nxt:
                break
            if len(nxt) > 1:
                return None
            prev, cur = cur, nxt.pop()
            length += 1
        arms.append(length)
    arms.sort()
    if arms[0] == 1 and arms[1] == 1:
        return f"D{n}"
    return {(1, 2, 2): "E6", (1, 2, 3): "E7", (1, 2, 4): "E8"}.get(tuple(arms))


_EXCEPTIONAL_ORDERS = {"E6": 51840, "E7": 2903040, "E8": 696729600, "F4": 1152,
                       "G2": 12, "H3": 120, "H4": 14400}


def _type_order(name: str) -> int:
    if name in _EXCEPTIONAL_ORDERS:
        return _EXCEPTIONAL_ORDERS[name]
    if name.startswith("I2("):
        return 2 * int(name[3:-1])
    family, n = name[0], int(name[1:])
    if family == "A":
        return math.factorial(n + 1)
    if family == "B":
        return 2 ** n * math.factorial(n)
    if family == "D":
        return 2 ** (n - 1) * math.factorial(n)
    raise ValueError(name)


def coxeter_type(M: CoxeterMatrix, J) -> Optional[list]:
    """Finite types of the irreducible components of ``J``, or None if W_J is infinite."""
    types = []
    for C in irreducible_components(M, J):
        name = _classify_irreducible(M, C)
        if name is None:
            return None
        types.append(name)
    return types


def is_spherical(M: CoxeterMatrix, J) -> bool:
    return coxeter_type(M, J) is not None


def spherical_order(M: CoxeterMatrix, J) -> int:
    types = coxeter_type(M, J)
    if types is None:
        raise PreconditionError(f"{_key(J)} is not spherical")
    return math.prod(_type_order(t) for t in types)


def maximal_cliques(M: CoxeterMatrix) -> list:
    return sort_subsets(nx.find_cliques(M.defining_graph()))


def is_fc(M: CoxeterMatrix) -> bool:
    return all(is_spherical(M, C) for C in maximal_cliques(M))


def maximal_spherical_subsets(M: CoxeterMatrix) -> list:
    if not is_fc(M):
        raise NotFC("maximal spherical subsets are only enumerated for type FC")
    return maximal_cliques(M)


def irreducible_spherical_subsets(M: CoxeterMatrix) -> list:
    # spherical subsets are cliques of the defining graph
    found = set()
    for clique in maximal_cliques(M):
        members = sorted(clique)
        for k in range(1, len(members) + 1):
            for J in itertools.combinations(members, k):
                J = frozenset(J)
                if J not in found and is_irreducible(M, J) and is_spherical(M, J):
                    found.add(J)
    return sorted(found, key=lambda J: (len(J), _key(J)))


# -- separation and rigidity -----------------------------------------------

@dataclass(frozen=True)
class SeparationWitness:
    J: frozenset
    components: tuple

    @property
    def partitions(self) -> int:
        return 2 ** len(self.components) - 2


def complement_components(M: CoxeterMatrix, J) -> list:
    """Components of S \\ (J u J-perp) in the defining graph."""
    J = subset(M, J)
    rest = M.generators - J - perp(M, J)
    return graph_components(M, rest)


def weakly_separates(M: CoxeterMatrix, J) -> Optional[SeparationWitness]:
    J = subset(M, J)
    if not J or not is_irreducible(M, J) or not is_spherical(M, J):
        raise PreconditionError(f"{_key(J)} is not irreducible spherical")
    comps = complement_components(M, J)
    if len(comps) >= 2:
        return SeparationWitness(J, tuple(comps))
    return None


def separating_subsets(M: CoxeterMatrix) -> list:
    return [w for J in irreducible_spherical_subsets(M)
            if (w := weakly_separates(M, J)) is not None]


def is_k_rigid(M: CoxeterMatrix, k: int) -> bool:
    if k < 1:
        raise PreconditionError("k must be positive")
    return all(len(w.J) < k for w in separating_subsets(M))


def is_good(M: CoxeterMatrix, t: int, r: int, J1) -> bool:
    J1 = subset(M, J1)
    if t not in J1 or r in J1:
        raise PreconditionError("need t in J1 and r outside J1")
    if not is_irreducible(M, J1) or not is_spherical(M, J1):
        raise PreconditionError(f"{_key(J1)} is not irreducible spherical")
    if M.adjacent(t, r):
        return True
    removed = {t} | perp(M, {t})
    rest = J1 - removed
    if not rest:
        return False
    for comp in graph_components(M, M.generators - removed):
        if r in comp:
            return rest <= comp
    return False
