"""Generating sets of reflections inside an ambient Coxeter system."""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .coxeter import INF, CoxeterMatrix
from .errors import MatrixMismatch, PreconditionError
from .words import GroupElement, Unknown, generator, multiply, order_bounded

DEFAULT_CUTOFF = 60


def _pair_order(ambient, a, b, cutoff):
    k = order_bounded(ambient, multiply(a, b), cutoff)
    return INF if isinstance(k, Unknown) else k


@dataclass(frozen=True)
class GeneratingSet:
    """Elements of W(ambient) indexed like the generators of ``claimed``.

    Construction checks that every element is an involution and that pairwise
    product orders agree with ``claimed`` up to the cutoff.
    """

    ambient: CoxeterMatrix
    generators: tuple
    claimed: CoxeterMatrix

    def __post_init__(self):
        object.__setattr__(self, "generators", tuple(self.generators))
        if len(self.generators) != self.claimed.rank:
            raise PreconditionError(
                f"{len(self.generators)} generators for a claimed matrix of rank {self.claimed.rank}")
        for g in self.generators:
            if not isinstance(g, GroupElement) or g.matrix != self.ambient:
                raise MatrixMismatch("generators must be elements of the ambient group")

    def __getitem__(self, i) -> GroupElement:
        return self.generators[i]

    def __len__(self):
        return len(self.generators)

    @property
    def rank(self):
        return self.claimed.rank

    def image(self, word) -> GroupElement:
        """Ambient element spelled by a word in the claimed generators."""
        if not word:
            return GroupElement(self.ambient, ())
        return multiply(*(self.generators[j] for j in word))

    def check(self, cutoff: int = DEFAULT_CUTOFF) -> "GeneratingSet":
        for i, g in enumerate(self.generators):
            if order_bounded(self.ambient, g, 2) != 2:
                raise PreconditionError(f"generator {i} = {g} is not an involution")
        for i, j in itertools.combinations(range(self.rank), 2):
            want = self.claimed.m(i, j)
            got = _pair_order(self.ambient, self[i], self[j], cutoff)
            if want != got:
                raise PreconditionError(
                    f"generators {i},{j}: claimed order {want}, observed {got} (cutoff {cutoff})")
        return self

    def is_standard(self) -> bool:
        return self.claimed == self.ambient and all(
            g.word == (i,) for i, g in enumerate(self.generators))

    @classmethod
    def standard(cls, M: CoxeterMatrix) -> "GeneratingSet":
        return cls(M, tuple(generator(M, s) for s in range(M.rank)), M)

    @classmethod
    def build(cls, ambient: CoxeterMatrix, generators, claimed=None,
              cutoff: int = DEFAULT_CUTOFF) -> "GeneratingSet":
        """Validated generating set; ``claimed`` defaults to the observed orders."""
        generators = tuple(generators)
        if claimed is None:
            n = len(generators)
            rows = [[1 if i == j else None for j in range(n)] for i in range(n)]
            for i, j in itertools.combinations(range(n), 2):
                rows[i][j] = rows[j][i] = _pair_order(ambient, generators[i], generators[j], cutoff)
            claimed = CoxeterMatrix(tuple(map(tuple, rows)))
        return cls(ambient, generators, claimed).check(cutoff)
