import itertools
import random

import networkx as nx
import pytest

from conftest import IRREDUCIBLE_TREES, RIGID_FC, load, load_genset
from twistlab.coxeter import (INF, CoxeterMatrix, irreducible_components, is_good, maximal_spherical_subsets,
                              spherical_order, weakly_separates)
from twistlab.davis import halfspace_of_wall, maximal_cell, side_of
from twistlab.errors import InvalidMove, PreconditionError
from twistlab.genset import GeneratingSet
from twistlab.status import Check
from twistlab.twists import (Complexity, TwistMove, apply_twist, complexity, compute_E,
                             enumerate_twists, find_descending_twist, reduce, triangle_lemma_check,
                             triangle_matrix, verify_genset)
from twistlab.words import canonical, conjugate, enumerate_coset, reflection

G1, P5 = load("g1"), load("p5")
TWISTED = ["p5_twisted.gens", "g1_twisted.gens", "p5_twisted_conj.gens", "g1_twisted_conj.gens"]


def test_enumerate_twists_examples():
    assert [str(m) for m in enumerate_twists(P5)] == ["J=[2] A=[0] B=[4]"]
    assert enumerate_twists(load("square")) == []
    assert [str(m) for m in enumerate_twists(G1)] == ["J=[1] A=[0] B=[2]"]
    moves = enumerate_twists(load("tree6_1"), only_z2=True)
    assert moves and all(len(m.J) == 1 for m in moves)
    # one representative per unordered split
    assert len({(m.J, frozenset({m.A, m.B})) for m in moves}) == len(moves)


def test_apply_twist_examples():
    std = GeneratingSet.standard(P5)
    out = apply_twist(std, TwistMove({2}, {0}, {4}))
    assert [g.word for g in out.generators] == [(0,), (1,), (2,), (3,), (2, 4, 2)]
    with pytest.raises(InvalidMove):
        apply_twist(std, TwistMove({2}, {0, 4}, set()))
    with pytest.raises(InvalidMove):
        apply_twist(std, TwistMove({1}, {0}, {2, 3, 4}))
    with pytest.raises(InvalidMove):
        apply_twist(std, TwistMove({2}, {0}, {4, 1}))


@pytest.mark.parametrize("name", RIGID_FC)
def test_twists_are_involutions_and_keep_the_matrix(name):
    M = load(name)
    std = GeneratingSet.standard(M)
    for move in enumerate_twists(M, only_z2=True):
        once = apply_twist(std, move)
        assert once.claimed == M
        assert apply_twist(once, move) == std


def test_twist_with_larger_support_relabels_the_matrix():
    # J = {0,1} of type A2 in a rank-4 matrix whose complement splits in two
    M = CoxeterMatrix.from_edges(4, {(0, 1): 3, (0, 2): 3, (1, 3): 4})
    assert weakly_separates(M, {0, 1}) is not None
    (move,) = [m for m in enumerate_twists(M) if m.J == {0, 1}]
    assert move.B == {3}
    out = apply_twist(GeneratingSet.standard(M), move)
    # conjugating 3 by w_J swaps its bonds to 0 and 1
    assert out.claimed.m(0, 3) == 4 and out.claimed.m(1, 3) is INF
    assert apply_twist(out, move).generators == GeneratingSet.standard(M).generators


@pytest.mark.parametrize("name", ["g1", "p5", "tree6_1"])
def test_twisted_sets_generate(name):
    M = load(name)
    for move in enumerate_twists(M, only_z2=True):
        report = verify_genset(M, apply_twist(GeneratingSet.standard(M), move), radius=4)
        gen = [i for i in report.items if i.name == "generation"]
        assert gen[0].status is Check.PASS


def test_compute_E_examples():
    std = GeneratingSet.standard(G1)
    assert [c.word for c in compute_E(G1, std, {0, 1}, {1, 2}, 4)] == [()]
    p5 = GeneratingSet.standard(P5)
    # neither component of {3,4} has a good vertex towards {0,1}, so E is the whole antipodal set
    E = compute_E(P5, p5, {3, 4}, {0, 1}, 4)
    assert E == maximal_cell(P5, p5, {3, 4}, 4).D and len(E) == 4
    with pytest.raises(PreconditionError):
        compute_E(P5, p5, {3, 4}, {3, 4}, 4)


@pytest.mark.parametrize("source", RIGID_FC + TWISTED)
def test_E_does_not_depend_on_the_witness(source):
    gens = load_genset(source) if source.endswith(".gens") else GeneratingSet.standard(load(source))
    maximal = maximal_spherical_subsets(gens.claimed)
    for J, I in itertools.permutations(maximal, 2):
        compute_E(gens.ambient, gens, J, I, 4)  # raises on disagreement


def test_complexity_examples():
    for name in RIGID_FC:
        assert complexity(load(name), GeneratingSet.standard(load(name)), 4) == Complexity(0, 0)
    assert complexity(P5, load_genset("p5_twisted.gens"), 6) == Complexity(1, 1)
    assert complexity(G1, load_genset("g1_twisted.gens"), 6) == Complexity(0, 1)
    assert Complexity(0, 5) < Complexity(1, 0)


def test_find_descending_twist_examples():
    assert find_descending_twist(P5, GeneratingSet.standard(P5), 6) is None
    move, after = find_descending_twist(P5, load_genset("p5_twisted.gens"), 6)
    assert str(move) == "J=[2] A=[0] B=[4]" and after == Complexity(0, 0)
    move, after = find_descending_twist(G1, load_genset("g1_twisted.gens"), 6)
    assert move.J == {1} and move.B == {2} and after == Complexity(0, 0)


def test_reduce_examples():
    res = reduce(P5, GeneratingSet.standard(P5))
    assert res.moves == [] and res.final.is_standard() and res.conjugator.is_identity()
    res = reduce(P5, load_genset("p5_twisted.gens"))
    assert len(res.moves) == 1 and res.final.is_standard() and res.conjugator.is_identity()
    res = reduce(P5, load_genset("p5_twisted_conj.gens"))
    assert len(res.moves) == 1 and res.status == "conjugate"
    assert res.conjugator == canonical(P5, [1, 0])
    res = reduce(G1, load_genset("g1_twisted_conj.gens"))
    assert res.status == "conjugate" and res.conjugator == canonical(G1, [0, 2])


def _conjugated(gens, g):
    return GeneratingSet(gens.ambient, tuple(conjugate(g, x) for x in gens.generators), gens.claimed)


@pytest.mark.slow
@pytest.mark.parametrize("name", ["g1", "p5"] + IRREDUCIBLE_TREES[:3])
def test_random_twist_sequences_reduce(name):
    M = load(name)
    rng = random.Random(name)
    moves = enumerate_twists(M, only_z2=True)
    for _ in range(3):
        gens = GeneratingSet.standard(M)
        for _ in range(rng.randint(1, 3)):
            gens = apply_twist(gens, rng.choice(moves))
        g = canonical(M, [rng.randrange(M.rank) for _ in range(2)])
        res = reduce(M, _conjugated(gens, g), radius=8)
        assert res.status == "conjugate"
        before = [s.before for s in res.steps]
        after = [s.after for s in res.steps]
        assert all(a < b for a, b in zip(after, before))
        assert all(b == a for b, a in zip(before[1:], after))
        conj = _conjugated(res.final, res.conjugator.inverse())
        assert sorted(x.word for x in conj.generators) == [(s,) for s in range(M.rank)]


def test_verify_examples():
    assert verify_genset(P5, GeneratingSet.standard(P5)).status is Check.PASS
    report = verify_genset(P5, load_genset("p5_twisted.gens"))
    assert report.status is Check.PASS
    angle = [i for i in report.items if i.name == "angle 3,4"][0]
    assert angle.detail == "conjugated to [3, 4] by [2]"
    bad = GeneratingSet(P5, (canonical(P5, [0, 2]),) + GeneratingSet.standard(P5).generators[1:], P5)
    report = verify_genset(P5, bad)
    assert report.status is Check.FAIL
    assert [i.status for i in report.items if i.name == "involution 0"] == [Check.FAIL]


@pytest.mark.parametrize("p, q, order", [(3, 3, 24), (3, 4, 48), (3, 5, 120)])
def test_triangle_group_sides(p, q, order):
    M = triangle_matrix(p, q)
    assert len(enumerate_coset(M, {0, 1, 2})) == order == spherical_order(M, {0, 1, 2})
    assert [c.word for c in triangle_lemma_check(p, q)] == [(), (1,)]


def test_triangle_check_rejects_other_types():
    with pytest.raises(PreconditionError):
        triangle_lemma_check(4, 4)


def _good_path_sides(gens, radius=4):
    """Side of E against the wall reached along a Dynkin path, compared with the side of r's wall."""
    M, amb = gens.claimed, gens.ambient
    maximal = maximal_spherical_subsets(M)
    checked = 0
    for J in maximal:
        cell = maximal_cell(amb, gens, J, radius)
        for J1 in irreducible_components(M, J):
            dyn = M.dynkin_diagram().subgraph(J1)
            for I in maximal:
                if I == J:
                    continue
                for t, r in itertools.product(sorted(J1), sorted(I)):
                    if r == t or M.adjacent(t, r) or not is_good(M, t, r, J1):
                        continue
                    K = reflection(amb, gens[r])
                    phi = halfspace_of_wall(amb, reflection(amb, gens[t]), K)
                    E = [c for c in cell.D if phi.contains(c)]
                    for j0 in sorted(J1):
                        if not is_good(M, j0, r, J1):
                            continue
                        path = nx.shortest_path(dyn, j0, t)
                        n = next(i for i, j in enumerate(path) if not M.adjacent(j, r))
                        u = gens.image(tuple(reversed(path[1:n + 1])))
                        X = reflection(amb, conjugate(u, gens[j0]))
                        want = halfspace_of_wall(amb, X, K).side
                        assert {side_of(amb, X, c) for c in E} == {want}, (J, I, t, r, j0)
                        checked += 1
    return checked


@pytest.mark.parametrize("source", ["g1", "cycle4_m3", "cycle5_m3", "g1_twisted.gens", "g1_twisted_conj.gens"])
def test_path_wall_sides(source):
    gens = load_genset(source) if source.endswith(".gens") else GeneratingSet.standard(load(source))
    assert _good_path_sides(gens) > 0
