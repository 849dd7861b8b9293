"""Bases, markings, the moves between them and their half-spaces."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import networkx as nx

from .coxeter import (CoxeterMatrix, complement_components, graph_components, irreducible_spherical_subsets,
                      is_fc, is_irreducible, is_spherical, perp, subset)
from .davis import HalfSpace, halfspace_of_wall, wall_distance
from .errors import (InconsistentClass, NoValidOrdering, PreconditionError, ValidationFailed)
from .status import Answer
from .words import (GroupElement, Unknown, canonical, conjugate, generator_reflection,
                    reflection, format_word)
from .davis import walls_intersect


@dataclass(frozen=True)
class Base:
    core: int
    support: frozenset
    letters: tuple  # j1 ... jn
    word: GroupElement

    def __str__(self):
        return f"({self.core}, {format_word(self.letters)})"


@dataclass(frozen=True, order=False)
class Marking:
    base: Base
    marker: int

    @property
    def core(self):
        return self.base.core

    @property
    def support(self):
        return self.base.support

    @property
    def key(self):
        return (self.core, len(self.support), sorted(self.support), self.marker)

    def __lt__(self, other):
        return self.key < other.key

    def __str__(self):
        return f"(({self.core}, {format_word(sorted(self.support))}), {self.marker})"


def _irreducible_ordering(M: CoxeterMatrix, s: int, J) -> list:
    order, chosen = [], {s}
    rest = sorted(J - {s})
    while rest:
        for j in rest:
            if is_irreducible(M, chosen | {j}):
                break
        else:
            raise NoValidOrdering(f"cannot grow {sorted(chosen)} irreducibly inside {sorted(J)}")
        order.append(j)
        chosen.add(j)
        rest.remove(j)
    return order


def validate_base(M: CoxeterMatrix, s: int, letters, cutoff: int = 60) -> Base:
    """Check the four base conditions for w = letters[0] ... letters[-1]."""
    letters = tuple(letters)
    J = frozenset(letters) | {s}
    if len(set(letters)) != len(letters) or s in letters:
        raise ValidationFailed("i", f"letters {list(letters)} are not distinct elements other than {s}")
    w = canonical(M, letters)
    n = len(letters)
    ys = generator_reflection(M, s)
    d = wall_distance(M, w, ys, n)
    if isinstance(d, Unknown) or d != n:
        raise ValidationFailed("ii", f"distance from {w!r} to the wall of {s} is {d}, expected {n}")
    for i in range(n):
        prefix = canonical(M, letters[:i])
        r = reflection(M, conjugate(prefix, canonical(M, letters[i:i + 1])))
        if walls_intersect(M, r, ys, cutoff) is not Answer.YES:
            raise ValidationFailed("iii", f"inversion wall {r!r} of {w!r} misses the wall of {s}")
    if not is_spherical(M, J):
        raise ValidationFailed("iv", f"support {sorted(J)} is not spherical")
    return Base(s, J, letters, w)


def make_base(M: CoxeterMatrix, s: int, J) -> Base:
    J = subset(M, J)
    if s not in J:
        raise PreconditionError(f"core {s} not in support {sorted(J)}")
    if not is_irreducible(M, J) or not is_spherical(M, J):
        raise PreconditionError(f"{sorted(J)} is not irreducible spherical")
    return validate_base(M, s, _irreducible_ordering(M, s, J))


def _standing(M: CoxeterMatrix):
    if not is_irreducible(M, M.generators) or is_spherical(M, M.generators) or not is_fc(M):
        raise PreconditionError("markings need an irreducible, non-spherical matrix of type FC")


def valid_markers(M: CoxeterMatrix, J) -> list:
    return [m for m in range(M.rank)
            if m not in J and any(not M.adjacent(m, j) for j in J)]


def enumerate_markings(M: CoxeterMatrix, core: int) -> list:
    _standing(M)
    out = []
    for J in irreducible_spherical_subsets(M):
        if core not in J:
            continue
        base = make_base(M, core, J)
        out.extend(Marking(base, m) for m in valid_markers(M, J))
    return sorted(out)


def k_mu(mu: Marking) -> frozenset:
    if mu.support != {mu.core}:
        return mu.support - {mu.core}
    return frozenset({mu.marker})


def marking_component(M: CoxeterMatrix, mu: Marking) -> frozenset:
    """Component of S minus (s u s-perp) holding the marking's non-commuting data."""
    s = mu.core
    removed = {s} | perp(M, {s})
    K = mu.support - removed if mu.support != {s} else frozenset({mu.marker})
    for comp in complement_components(M, {s}):
        if K <= comp:
            return comp
    raise PreconditionError(f"marking {mu} has data in several components")


def related_by_move(M: CoxeterMatrix, mu1: Marking, mu2: Marking):
    if mu1.core != mu2.core:
        raise PreconditionError("markings have different cores")
    J1, J2, m1, m2 = mu1.support, mu2.support, mu1.marker, mu2.marker
    if J1 == J2 and M.adjacent(m1, m2):
        return "M1"
    if m1 == m2:
        for big, small in ((J1, J2), (J2, J1)):
            extra = big - small
            if small < big and len(extra) == 1 and M.adjacent(m1, next(iter(extra))):
                return "M2"
    return None


def move_graph(M: CoxeterMatrix, core: int) -> nx.Graph:
    markings = enumerate_markings(M, core)
    g = nx.Graph()
    g.add_nodes_from(markings)
    for a, b in itertools.combinations(markings, 2):
        move = related_by_move(M, a, b)
        if move:
            g.add_edge(a, b, move=move)
    return g


def equivalence_classes(M: CoxeterMatrix, core: int) -> list:
    g = move_graph(M, core)
    classes = [sorted(c) for c in nx.connected_components(g)]
    return sorted(classes, key=lambda c: c[0].key)


def phi_of_marking(amb: CoxeterMatrix, gens, mu: Marking, cutoff: int = 60) -> HalfSpace:
    """Half-space of the core's ambient wall containing the translated marker wall."""
    s_amb = reflection(amb, gens[mu.core])
    w_amb = gens.image(mu.base.letters)
    K = reflection(amb, conjugate(w_amb, gens[mu.marker]))
    return halfspace_of_wall(amb, s_amb, K, cutoff)


def component_halfspace(amb: CoxeterMatrix, gens, s: int, A) -> HalfSpace:
    M = gens.claimed
    A = subset(M, A)
    if A not in complement_components(M, {s}):
        raise PreconditionError(f"{sorted(A)} is not a component for core {s}")
    found = None
    witness = None
    for mu in enumerate_markings(M, s):
        if marking_component(M, mu) != A:
            continue
        phi = phi_of_marking(amb, gens, mu)
        if found is None:
            found, witness = phi, mu
        elif phi != found:
            raise InconsistentClass(f"markings {witness} and {mu} give {found} and {phi}")
    if found is None:
        raise PreconditionError(f"no marking with core {s} lands in {sorted(A)}")
    return found


def is_admissible(M: CoxeterMatrix, P, mu: Marking) -> bool:
    P = subset(M, P)
    if not is_irreducible(M, P) or is_spherical(M, P):
        raise PreconditionError(f"{sorted(P)} is not irreducible non-spherical")
    p, J, m = mu.core, mu.support, mu.marker
    if p not in P:
        return False

    def together(L, X):
        removed = L | perp(M, L)
        target = (P - removed) | X
        return any(target <= comp for comp in graph_components(M, M.generators - removed))

    for L in irreducible_spherical_subsets(M):
        if p in L and not J <= L and not together(L, J - L - perp(M, L)):
            return False
        if J <= L and not together(L, {m}):
            return False
    return True
