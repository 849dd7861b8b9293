"""Group elements, reflections and ball enumeration.

Every element is stored by its canonical word: the shortlex-least reduced
expression over the generator order ``0 < 1 < ...``.  Equality of elements is
equality of canonical words.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

from . import kernel
from ._rep import RepContext
from .coxeter import CoxeterMatrix, is_spherical, spherical_order, subset
from .errors import InvalidSubset, MatrixMismatch, NotSpherical, PreconditionError


@lru_cache(maxsize=64)
def context(M: CoxeterMatrix) -> RepContext:
    return RepContext(M)


@lru_cache(maxsize=1 << 18)
def _nf(M: CoxeterMatrix, word: bytes) -> bytes:
    return kernel.normal_form(word, context(M))


@dataclass(frozen=True)
class GroupElement:
    matrix: CoxeterMatrix
    word: tuple

    def __repr__(self):
        return format_word(self.word)

    def __len__(self):
        return len(self.word)

    @property
    def key(self):
        """Shortlex sort key."""
        return (len(self.word), self.word)

    def __lt__(self, other):
        return self.key < other.key

    def __mul__(self, other):
        return multiply(self, other)

    def inverse(self):
        return inverse(self)

    def is_identity(self) -> bool:
        return not self.word


def format_word(word) -> str:
    return "[" + ",".join(str(s) for s in word) + "]"


def _check_letters(M: CoxeterMatrix, word) -> bytes:
    try:
        raw = bytes(word)
    except (TypeError, ValueError):
        raise InvalidSubset(f"not a word: {word!r}") from None
    if any(s >= M.rank for s in raw):
        raise InvalidSubset(f"word {list(raw)} has letters outside 0..{M.rank - 1}")
    return raw


def _elem(M, raw: bytes) -> GroupElement:
    return GroupElement(M, tuple(_nf(M, raw)))


def canonical(M: CoxeterMatrix, word) -> GroupElement:
    return _elem(M, _check_letters(M, word))


def identity(M: CoxeterMatrix) -> GroupElement:
    return GroupElement(M, ())


def generator(M: CoxeterMatrix, s: int) -> GroupElement:
    if not 0 <= s < M.rank:
        raise InvalidSubset(f"generator {s} out of range")
    return GroupElement(M, (s,))


def _same(a: GroupElement, b: GroupElement):
    if a.matrix is not b.matrix and a.matrix != b.matrix:
        raise MatrixMismatch("elements live over different Coxeter matrices")


def multiply(*elements: GroupElement) -> GroupElement:
    first = elements[0]
    for e in elements[1:]:
        _same(first, e)
    return _elem(first.matrix, b"".join(bytes(e.word) for e in elements))


def inverse(a: GroupElement) -> GroupElement:
    return _elem(a.matrix, bytes(reversed(a.word)))


def conjugate(g: GroupElement, x: GroupElement) -> GroupElement:
    """g x g^-1"""
    _same(g, x)
    return _elem(g.matrix, bytes(g.word) + bytes(x.word) + bytes(reversed(g.word)))


def length(a: GroupElement) -> int:
    return len(a.word)


def left_descents(a: GroupElement) -> list:
    M = a.matrix
    return [s for s in range(M.rank) if len(_nf(M, bytes((s,)) + bytes(a.word))) < len(a.word)]


# -- orders -------------------------------------------------------------------

@dataclass(frozen=True)
class Unknown:
    cutoff: int

    def __repr__(self):
        return f"Unknown({self.cutoff})"


def order_bounded(M: CoxeterMatrix, g: GroupElement, cutoff: int):
    """Least k <= cutoff with g^k = 1, else ``Unknown(cutoff)``."""
    if cutoff < 1:
        raise PreconditionError("cutoff must be positive")
    if g.is_identity():
        return 1
    ctx = context(M)
    X = ctx.matrix_of(g.word)
    P = X
    for k in range(2, cutoff + 1):
        P = ctx.matmul(P, X)
        if ctx.is_identity(P):
            return k
    return Unknown(cutoff)


def longest_element(M: CoxeterMatrix, J) -> GroupElement:
    J = sorted(subset(M, J))
    if not is_spherical(M, J):
        raise NotSpherical(f"{J} is not spherical")
    w = b""
    while True:
        for j in J:
            nxt = _nf(M, w + bytes((j,)))
            if len(nxt) > len(w):
                w = nxt
                break
        else:
            return GroupElement(M, tuple(w))


# -- reflections --------------------------------------------------------------

@dataclass(frozen=True)
class Reflection:
    """A reflection ``element = u s u^-1`` with the shortlex-least such ``u``."""

    element: GroupElement
    u: GroupElement
    s: int

    def __repr__(self):
        return repr(self.element)

    @property
    def matrix(self):
        return self.element.matrix


def _prefixes(g: GroupElement, k: int) -> list:
    """All u of length k with l(u^-1 g) = l(g) - k, as canonical byte words."""
    M = g.matrix
    level = {b"": bytes(g.word)}
    for _ in range(k):
        nxt = {}
        for u, rest in level.items():
            for s in range(M.rank):
                shorter = _nf(M, bytes((s,)) + rest)
                if len(shorter) < len(rest):
                    v = _nf(M, u + bytes((s,)))
                    if v not in nxt:
                        nxt[v] = shorter
        level = nxt
    return sorted(level.items(), key=lambda kv: (len(kv[0]), kv[0]))


def is_reflection(M: CoxeterMatrix, g: GroupElement) -> Optional[Reflection]:
    n = len(g)
    if n % 2 == 0:
        return None
    for u, rest in _prefixes(g, n // 2):
        middle = _nf(M, rest + u)
        if len(middle) == 1:
            return Reflection(g, GroupElement(M, tuple(u)), middle[0])
    return None


def reflection(M: CoxeterMatrix, g: GroupElement) -> Reflection:
    r = is_reflection(M, g)
    if r is None:
        raise PreconditionError(f"{g} is not a reflection")
    return r


def reflection_of(M: CoxeterMatrix, u: GroupElement, s: int) -> Reflection:
    """The reflection u s u^-1, with its canonical witness."""
    return reflection(M, conjugate(u, generator(M, s)))


def generator_reflection(M: CoxeterMatrix, s: int) -> Reflection:
    return Reflection(generator(M, s), identity(M), s)


# -- enumeration --------------------------------------------------------------

def _levels(M: CoxeterMatrix, letters, base: bytes = b"") -> Iterator[list]:
    # canonical words are prefix-closed, so level k+1 extends level k
    letters = sorted(letters)
    level = [b""]
    yield level
    while level:
        nxt = []
        for u in level:
            for s in letters:
                v = u + bytes((s,))
                if _nf(M, v) == v:
                    nxt.append(v)
        level = nxt
        if level:
            yield level


def iter_ball(M: CoxeterMatrix, radius: int) -> Iterator[GroupElement]:
    """Elements of length <= radius in shortlex order."""
    for k, level in enumerate(_levels(M, range(M.rank))):
        if k > radius:
            return
        for u in level:
            yield GroupElement(M, tuple(u))


def enumerate_ball(M: CoxeterMatrix, radius: int) -> list:
    if radius < 0:
        raise PreconditionError("radius must be non-negative")
    return list(iter_ball(M, radius))


def enumerate_coset(M: CoxeterMatrix, J, base: Optional[GroupElement] = None) -> list:
    """``base * W_J`` (default base = identity), sorted shortlex."""
    J = subset(M, J)
    if not is_spherical(M, J):
        raise NotSpherical(f"{sorted(J)} is not spherical")
    expected = spherical_order(M, J)
    members = [GroupElement(M, tuple(u)) for level in _levels(M, J) for u in level]
    assert len(members) == expected, (len(members), expected)
    if base is None or base.is_identity():
        return members
    return sorted(multiply(base, x) for x in members)
