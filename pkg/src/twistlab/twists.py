"""Elementary twists, the complexity of a generating set and the descent search."""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from functools import total_ordering
from typing import Optional

from .coxeter import (INF, CoxeterMatrix, complement_components, irreducible_components,
                      is_good, maximal_spherical_subsets, perp, separating_subsets, subset,
                      weakly_separates)
from .davis import (CellData, find_conjugator, halfspace_of_wall, maximal_cell, set_distance,
                    side_of, walls_intersect)
from .errors import (ConjugatorNotFoundWithinRadius, Inconclusive, InvalidMove, PreconditionError,
                     StepBudgetExceeded, TwistlabError, WitnessDisagreement)
from .genset import DEFAULT_CUTOFF, GeneratingSet
from .markings import component_halfspace, enumerate_markings, phi_of_marking
from .status import Answer, Check, combine
from .words import (GroupElement, Unknown, conjugate, enumerate_coset, generator, generator_reflection,
                    is_reflection, longest_element, multiply, order_bounded, reflection)


def _key(J):
    return tuple(sorted(J))


@dataclass(frozen=True)
class TwistMove:
    J: frozenset
    A: frozenset
    B: frozenset

    def __post_init__(self):
        for name in ("J", "A", "B"):
            object.__setattr__(self, name, frozenset(getattr(self, name)))

    @property
    def key(self):
        return (len(self.J), _key(self.J), _key(self.B))

    def to_dict(self):
        return {"J": _key(self.J), "A": _key(self.A), "B": _key(self.B)}

    def __str__(self):
        return f"J={list(_key(self.J))} A={list(_key(self.A))} B={list(_key(self.B))}"


@total_ordering
@dataclass(frozen=True)
class Complexity:
    k1: int
    k2: int

    def __lt__(self, other):
        return (self.k1, self.k2) < (other.k1, other.k2)

    def __str__(self):
        return f"({self.k1}, {self.k2})"

    def to_list(self):
        return [self.k1, self.k2]


# -- twists -------------------------------------------------------------------

def enumerate_twists(claimed: CoxeterMatrix, only_z2: bool = False) -> list:
    """One representative per unordered split; A holds the component of least element."""
    moves = []
    for witness in separating_subsets(claimed):
        if only_z2 and len(witness.J) != 1:
            continue
        first, *others = witness.components
        for k in range(1, len(others) + 1):
            for chosen in itertools.combinations(others, k):
                B = frozenset().union(*chosen)
                A = frozenset().union(first, *(c for c in others if c not in chosen))
                moves.append(TwistMove(witness.J, A, B))
    return sorted(moves, key=lambda mv: mv.key)


def check_move(claimed: CoxeterMatrix, move: TwistMove):
    if not move.B or not move.A:
        raise InvalidMove("both sides of the split must be nonempty")
    try:
        witness = weakly_separates(claimed, move.J)
    except TwistlabError as exc:
        raise InvalidMove(str(exc)) from None
    if witness is None:
        raise InvalidMove(f"{_key(move.J)} does not weakly separate")
    rest = claimed.generators - move.J - perp(claimed, move.J)
    if move.A & move.B or move.A | move.B != rest:
        raise InvalidMove("A and B must partition the complement of J and its perp")
    for comp in witness.components:
        if not (comp <= move.A or comp <= move.B):
            raise InvalidMove(f"component {_key(comp)} is split by the move")


def _twisted_matrix(claimed: CoxeterMatrix, move: TwistMove) -> CoxeterMatrix:
    # conjugating B by w_J relabels its bonds to J by the diagram automorphism
    wJ = longest_element(claimed, move.J)
    sigma = {j: conjugate(wJ, generator(claimed, j)).word[0] for j in move.J}
    rows = [list(row) for row in claimed.entries]
    for b in move.B:
        for j in move.J:
            rows[b][j] = rows[j][b] = claimed.m(b, sigma[j])
    return CoxeterMatrix(tuple(map(tuple, rows)))


def apply_twist(gens: GeneratingSet, move: TwistMove, cutoff: int = DEFAULT_CUTOFF) -> GeneratingSet:
    claimed = gens.claimed
    check_move(claimed, move)
    wJ = gens.image(longest_element(claimed, move.J).word)
    new = tuple(conjugate(wJ, g) if i in move.B else g for i, g in enumerate(gens.generators))
    result = GeneratingSet(gens.ambient, new, _twisted_matrix(claimed, move)).check(cutoff)
    if len(move.J) == 1 and result.claimed != claimed:
        raise InvalidMove("a Z2 twist changed the Coxeter matrix")
    return result


# -- E sets and complexity --------------------------------------------------------

def witness_pairs(claimed: CoxeterMatrix, component, I) -> list:
    return [(t, r) for t in sorted(component) for r in sorted(I)
            if not claimed.adjacent(t, r) and t != r and is_good(claimed, t, r, component)]


def compute_E(amb: CoxeterMatrix, gens: GeneratingSet, J, I, radius: int,
              cell: Optional[CellData] = None) -> tuple:
    claimed = gens.claimed
    J, I = subset(claimed, J), subset(claimed, I)
    maximal = maximal_spherical_subsets(claimed)
    if J not in maximal or I not in maximal or J == I:
        raise PreconditionError("compute_E needs two distinct maximal spherical subsets")
    if cell is None:
        cell = maximal_cell(amb, gens, J, radius)
    E = set(cell.D)
    for comp in irreducible_components(claimed, J):
        pairs = witness_pairs(claimed, comp, I)
        if not pairs:
            continue
        chosen = None
        for t, r in pairs:
            phi = halfspace_of_wall(amb, reflection(amb, gens[t]), reflection(amb, gens[r]))
            part = frozenset(c for c in cell.D if phi.contains(c))
            if chosen is None:
                chosen = (t, r, part)
            elif part != chosen[2]:
                raise WitnessDisagreement(
                    f"component {_key(comp)}: witnesses {chosen[:2]} and {(t, r)} select different chambers")
        E &= chosen[2]
    return tuple(sorted(E))


@dataclass
class ComplexityData:
    value: Complexity
    cells: dict
    E: dict = field(default_factory=dict)


def complexity_data(amb: CoxeterMatrix, gens: GeneratingSet, radius: int) -> ComplexityData:
    claimed = gens.claimed
    maximal = maximal_spherical_subsets(claimed)
    cells = {J: maximal_cell(amb, gens, J, radius) for J in maximal}
    E = {}
    for J, I in itertools.permutations(maximal, 2):
        E[J, I] = compute_E(amb, gens, J, I, radius, cells[J])
    k1 = k2 = 0
    for J, I in itertools.combinations(maximal, 2):
        k1 += set_distance(cells[J].C, cells[I].C)
        k2 += set_distance(E[J, I], E[I, J])
    return ComplexityData(Complexity(k1, k2), cells, E)


def complexity(amb: CoxeterMatrix, gens: GeneratingSet, radius: int) -> Complexity:
    return complexity_data(amb, gens, radius).value


# -- descent ----------------------------------------------------------------------

def component_halfspaces(amb: CoxeterMatrix, gens: GeneratingSet, s: int) -> list:
    return [(A, component_halfspace(amb, gens, s, A))
            for A in complement_components(gens.claimed, {s})]


def _candidates(s: int, phis: list) -> list:
    """Z2 splits at core s, most promising first."""
    comps = [A for A, _ in phis]
    sides = {}
    for A, phi in phis:
        sides.setdefault(phi.side, []).append(A)
    first = comps[0]
    ordered = []
    if len(sides) > 1:
        (fam,) = [f for f in sides.values() if first not in f]
        rest = [A for A in comps if A not in fam]
        ordered.append((frozenset().union(*rest), frozenset().union(*fam)))
    # remaining splits by signature; the orientation with the least component in A
    for k in range(1, len(comps)):
        for chosen in itertools.combinations(comps[1:], k):
            B = frozenset().union(*chosen)
            A = frozenset().union(*(c for c in comps if c not in chosen))
            if (A, B) not in ordered:
                ordered.append((A, B))
    return [TwistMove({s}, A, B) for A, B in ordered]


def incompatible_cores(amb: CoxeterMatrix, gens: GeneratingSet) -> list:
    out = []
    for s in range(gens.rank):
        phis = component_halfspaces(amb, gens, s)
        if len({phi.side for _, phi in phis}) > 1:
            out.append((s, phis))
    return out


def find_descending_twist(amb: CoxeterMatrix, gens: GeneratingSet, radius: int,
                          current: Optional[Complexity] = None):
    """First Z2 twist (core order, then split signature) that lowers the complexity."""
    bad = incompatible_cores(amb, gens)
    if not bad:
        return None
    if current is None:
        current = complexity(amb, gens, radius)
    for s, phis in bad:
        for move in _candidates(s, phis):
            after = complexity(amb, apply_twist(gens, move), radius)
            if after < current:
                return move, after
    raise Inconclusive(f"incompatible components at cores {[s for s, _ in bad]} "
                       f"but no Z2 twist lowers complexity {current} at radius {radius}")


@dataclass(frozen=True)
class Step:
    move: TwistMove
    before: Complexity
    after: Complexity

    def to_dict(self):
        return {"move": self.move.to_dict(), "complexity_before": self.before.to_list(),
                "complexity_after": self.after.to_list()}


@dataclass(frozen=True)
class ReduceResult:
    steps: tuple
    final: GeneratingSet
    conjugator: Optional[GroupElement]
    status: str

    @property
    def moves(self):
        return [st.move for st in self.steps]


def geometric_criterion(amb: CoxeterMatrix, gens: GeneratingSet) -> bool:
    """All markings with a common core pick the same half-space."""
    for s in range(gens.rank):
        sides = {phi_of_marking(amb, gens, mu) for mu in enumerate_markings(gens.claimed, s)}
        if len(sides) > 1:
            return False
    return True


def reduce(amb: CoxeterMatrix, gens: GeneratingSet, radius: int = 8, max_steps: int = 32) -> ReduceResult:
    steps = []
    current = complexity(amb, gens, radius)
    while True:
        found = find_descending_twist(amb, gens, radius, current)
        if found is None:
            break
        if len(steps) >= max_steps:
            raise StepBudgetExceeded(f"no fixed point after {max_steps} twists")
        move, after = found
        assert after < current, (after, current)
        steps.append(Step(move, current, after))
        gens = apply_twist(gens, move)
        current = after
    if not geometric_criterion(amb, gens):
        return ReduceResult(tuple(steps), gens, None, "stalled")
    found = find_conjugator(amb, gens.generators, radius)
    if found is None:
        raise ConjugatorNotFoundWithinRadius(f"no conjugator within radius {radius}")
    g, letters = found
    if sorted(letters) != list(range(amb.rank)):
        return ReduceResult(tuple(steps), gens, None, "stalled")
    return ReduceResult(tuple(steps), gens, g, "conjugate")


# -- reports ----------------------------------------------------------------------

@dataclass(frozen=True)
class ReportItem:
    name: str
    status: Check
    detail: str = ""


@dataclass(frozen=True)
class Report:
    items: tuple

    @property
    def status(self) -> Check:
        return combine(item.status for item in self.items)


def _generation(amb: CoxeterMatrix, gens: GeneratingSet, radius: int) -> ReportItem:
    targets = {generator(amb, s) for s in range(amb.rank)}
    seen = {GroupElement(amb, ())}
    frontier = list(seen)
    for depth in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for g in gens.generators:
                y = multiply(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
        if targets <= seen:
            return ReportItem("generation", Check.PASS, f"ambient generators reached at depth {depth}")
    missing = sorted(t.word[0] for t in targets - seen)
    return ReportItem("generation", Check.INCONCLUSIVE,
                      f"ambient generators {missing} not reached within depth {radius}")


def verify_genset(amb: CoxeterMatrix, gens: GeneratingSet, radius: int = 8,
                  cutoff: int = DEFAULT_CUTOFF) -> Report:

    items = []
    claimed = gens.claimed
    for i, g in enumerate(gens.generators):
        ok = order_bounded(amb, g, 2) == 2
        items.append(ReportItem(f"involution {i}", Check.PASS if ok else Check.FAIL, repr(g)))
    refl = {}
    for i, g in enumerate(gens.generators):
        r = is_reflection(amb, g)
        refl[i] = r
        items.append(ReportItem(f"reflection {i}", Check.PASS if r else Check.FAIL,
                                f"{r.u!r} {r.s} {r.u.inverse()!r}" if r else repr(g)))
    for i, j in itertools.combinations(range(gens.rank), 2):
        want = claimed.m(i, j)
        got = order_bounded(amb, multiply(gens[i], gens[j]), cutoff)
        name = f"order {i},{j}"
        if not isinstance(got, Unknown):
            items.append(ReportItem(name, Check.PASS if got == want else Check.FAIL,
                                    f"claimed {want}, observed {got}"))
        elif want is not INF:
            items.append(ReportItem(name, Check.FAIL, f"claimed {want}, no relation up to {cutoff}"))
        elif refl[i] and refl[j] and walls_intersect(amb, refl[i], refl[j], cutoff) is Answer.NO:
            items.append(ReportItem(name, Check.PASS, "infinite, certified by the root pairing"))
        else:
            items.append(ReportItem(name, Check.INCONCLUSIVE, f"no relation up to {cutoff}"))
    for i, j in itertools.combinations(range(gens.rank), 2):
        if claimed.m(i, j) is INF:
            continue
        found = find_conjugator(amb, (gens[i], gens[j]), radius)
        name = f"angle {i},{j}"
        if found:
            g, letters = found
            items.append(ReportItem(name, Check.PASS, f"conjugated to {list(letters)} by {g!r}"))
        else:
            items.append(ReportItem(name, Check.INCONCLUSIVE, f"no conjugator within radius {radius}"))
    items.append(_generation(amb, gens, radius))
    return Report(tuple(items))


# -- three-generator spherical check ------------------------------------------------

_TRIANGLES = {(3, 3), (3, 4), (4, 3), (3, 5), (5, 3)}


def triangle_matrix(p: int, q: int) -> CoxeterMatrix:
    return CoxeterMatrix.from_edges(3, {(0, 1): p, (1, 2): q, (0, 2): 2})


def triangle_lemma_check(p: int, q: int) -> tuple:
    """Chambers c of the spherical (2, p, q) group meeting the three side conditions."""
    if (p, q) not in _TRIANGLES:
        raise PreconditionError(f"unsupported triangle type (2,{p},{q})")
    M = triangle_matrix(p, q)
    s1, s2, s3 = (generator(M, i) for i in range(3))
    w1, w3 = generator_reflection(M, 0), generator_reflection(M, 2)
    e = GroupElement(M, ())
    out = []
    for c in enumerate_coset(M, {0, 1, 2}):
        side1 = side_of(M, w1, c)
        side3 = side_of(M, w3, c)
        if side1 is not side_of(M, w1, e):
            continue
        if any(side_of(M, w1, x) is not side1 for x in (s2 * c, s2 * s3 * c)):
            continue
        if any(side_of(M, w3, x) is not side3 for x in (s2 * c, s2 * s1 * c)):
            continue
        out.append(c)
    return tuple(out)
