"""Independent reference implementations used only by the tests.

Nothing here calls into the root-system kernel: words are handled by braid
moves and letter cancellation, groups are enumerated through a floating-point
reflection representation.
"""

import math
from collections import deque

import numpy as np

from twistlab.coxeter import INF


def _braid_neighbours(M, word):
    n = len(word)
    for i in range(n - 1):
        s, t = word[i], word[i + 1]
        if s == t:
            continue
        m = M.m(s, t)
        if m is INF or i + m > n:
            continue
        block = word[i:i + m]
        if all(block[k] == (s if k % 2 == 0 else t) for k in range(m)):
            swapped = tuple(t if k % 2 == 0 else s for k in range(m))
            yield word[:i] + swapped + word[i + m:]


def braid_class(M, word, limit=200000):
    """All words reachable by braid moves, or None if a square ss appears."""
    word = tuple(word)
    seen = {word}
    queue = deque([word])
    while queue:
        w = queue.popleft()
        for i in range(len(w) - 1):
            if w[i] == w[i + 1]:
                return w, i
        for v in _braid_neighbours(M, w):
            if v not in seen:
                seen.add(v)
                if len(seen) > limit:
                    raise RuntimeError("braid class too large for the oracle")
                queue.append(v)
    return seen


def tits_reduce(M, word):
    """Shortlex-least reduced word, by braid moves and deleting squares."""
    word = tuple(word)
    while True:
        found = braid_class(M, word)
        if isinstance(found, tuple) and len(found) == 2 and isinstance(found[1], int):
            w, i = found
            word = w[:i] + w[i + 2:]
            continue
        return min(found, key=lambda w: (len(w), w))


def float_generators(M):
    n = M.rank
    B = np.empty((n, n))
    for i in range(n):
        for j in range(n):
            m = M.m(i, j)
            B[i, j] = -1.0 if m is INF else -math.cos(math.pi / m)
    mats = []
    for s in range(n):
        R = np.eye(n)
        # s(v) = v - 2 B(alpha_s, v) alpha_s
        R[s, :] -= 2 * B[s, :]
        mats.append(R)
    return mats


def cayley_closure(M, J, cap):
    """|W_J| by breadth-first closure in a float representation, or None past cap."""
    J = sorted(J)
    if not J:
        return 1
    gens = float_generators(M)
    n = M.rank
    ident = np.eye(n)

    def key(X):
        return (np.round(X, 6) + 0.0).tobytes()

    seen = {key(ident)}
    frontier = [ident]
    while frontier:
        stack = np.array(frontier)
        nxt = []
        for j in J:
            prod = stack @ gens[j]
            for X in prod:
                k = key(X)
                if k not in seen:
                    seen.add(k)
                    nxt.append(X)
                    if len(seen) > cap:
                        return None
        frontier = nxt
    return len(seen)
