"""Exact Tits representation over Z[2cos(pi/L)] and the pure-Python kernel.

Simple roots alpha_s have doubled Gram entries ``b_st = -2cos(pi/m_st)``
(``-2`` for ``inf``, ``b_ss = 2``).  All of them lie in the ring generated by
``c = 2cos(pi/L)``, with ``L`` the lcm of the orders other than 2 and 3, so
vectors are kept as integer coordinates in the power basis of ``c``.
Signs of nonzero ring elements are certified by interval evaluation with
increasing precision; zero is decided exactly on the coordinates.
"""

from __future__ import annotations

import math
import threading
from array import array
from functools import reduce

import mpmath
import numpy as np

from .coxeter import INF, CoxeterMatrix

_IV_LOCK = threading.Lock()


def _minpoly_2cos(L: int) -> list:
    """Monic integer minimal polynomial of 2cos(pi/L), low degree first."""
    roots = [2 * math.cos(k * math.pi / L) for k in range(1, L) if math.gcd(k, 2 * L) == 1]
    coeffs = np.poly(roots)  # high degree first
    ints = [int(round(float(x))) for x in coeffs]
    if any(abs(float(x) - i) > 1e-6 for x, i in zip(coeffs, ints)):
        raise ArithmeticError(f"minimal polynomial of 2cos(pi/{L}) not resolved")
    return ints[::-1]


class RepContext:
    """Per-matrix arithmetic data shared by both kernels."""

    def __init__(self, M: CoxeterMatrix):
        self.matrix = M
        n = self.rank = M.rank
        exotic = sorted(m for m in M.finite_orders() if m not in (2, 3))
        self.L = reduce(math.lcm, exotic, 1)
        if self.L == 1:
            self.d = 1
            self.poly = [0, 1]
        else:
            self.poly = _minpoly_2cos(self.L)
            self.d = len(self.poly) - 1
        d = self.d
        # reduced powers c^0 .. c^(2d-2)
        powers = []
        for e in range(2 * d - 1):
            if e < d:
                v = [0] * d
                v[e] = 1
            else:
                prev = powers[-1]
                top = prev[-1]
                v = [0] + prev[:-1]
                v = [x - top * a for x, a in zip(v, self.poly[:-1])]
            powers.append(v)
        self.mult = [[tuple(powers[i + k]) for k in range(d)] for i in range(d)]
        self.zero = (0,) * d
        self.one = (1,) + (0,) * (d - 1)
        self.b = [[self._gram(M, s, t) for t in range(n)] for s in range(n)]
        self.cval = 2 * math.cos(math.pi / self.L) if self.L > 1 else 0.0
        self._c_args = None

    def const(self, k: int) -> tuple:
        return (k,) + (0,) * (self.d - 1)

    def _chebyshev(self, k: int) -> tuple:
        # 2cos(k*theta) as a polynomial in 2cos(theta)
        v0, v1 = self.const(2), tuple(1 if i == 1 else 0 for i in range(self.d))
        if k == 0:
            return v0
        for _ in range(k - 1):
            v0, v1 = v1, self.sub(self.mul(v1, tuple(1 if i == 1 else 0 for i in range(self.d))), v0)
        return v1

    def _gram(self, M, s, t) -> tuple:
        if s == t:
            return self.const(2)
        m = M.m(s, t)
        if m is INF:
            return self.const(-2)
        if m == 2:
            return self.zero
        if m == 3:
            return self.const(-1)
        return self.neg(self._chebyshev(self.L // m))

    # -- ring arithmetic on coordinate tuples --------------------------------

    def add(self, x, y):
        return tuple(a + b for a, b in zip(x, y))

    def sub(self, x, y):
        return tuple(a - b for a, b in zip(x, y))

    def neg(self, x):
        return tuple(-a for a in x)

    def mul(self, x, y):
        d = self.d
        if d == 1:
            return (x[0] * y[0],)
        out = [0] * d
        for i, xi in enumerate(x):
            if not xi:
                continue
            row = self.mult[i]
            for k, yk in enumerate(y):
                if not yk:
                    continue
                p = xi * yk
                for l, t in enumerate(row[k]):
                    if t:
                        out[l] += p * t
        return tuple(out)

    def to_float(self, x) -> float:
        return sum(a * self.cval ** i for i, a in enumerate(x))

    def sign(self, x) -> int:
        """Exact sign of a ring element."""
        if not any(x):
            return 0
        if self.d == 1:
            return 1 if x[0] > 0 else -1
        iv = mpmath.iv
        prec = max(abs(a).bit_length() for a in x) + 4 * self.d + 64
        with _IV_LOCK:
            old = iv.prec
            try:
                while True:
                    iv.prec = prec
                    c = 2 * iv.cos(iv.pi / self.L)
                    val = iv.mpf(0)
                    p = iv.mpf(1)
                    for a in x:
                        if a:
                            val += a * p
                        p *= c
                    if val.a > 0:
                        return 1
                    if val.b < 0:
                        return -1
                    prec *= 2
            finally:
                iv.prec = old

    # -- vectors and matrices (lists of columns) ----------------------------

    def identity_matrix(self):
        n = self.rank
        return [[self.one if i == j else self.zero for i in range(n)] for j in range(n)]

    def right_mul_gen(self, X, s):
        """X <- X * rho(s), in place."""
        cs = X[s]
        bs = self.b[s]
        for j in range(self.rank):
            if j == s or not any(bs[j]):
                continue
            coef = bs[j]
            X[j] = [self.sub(x, self.mul(coef, y)) for x, y in zip(X[j], cs)]
        X[s] = [self.neg(y) for y in cs]

    def matrix_of(self, word):
        X = self.identity_matrix()
        for s in word:
            self.right_mul_gen(X, s)
        return X

    def matmul(self, A, B):
        n = self.rank
        out = []
        for col in B:
            acc = [self.zero] * n
            for k, coef in enumerate(col):
                if any(coef):
                    acc = [self.add(a, self.mul(coef, x)) for a, x in zip(acc, A[k])]
            out.append(acc)
        return out

    def is_identity(self, X) -> bool:
        return all(X[j][i] == (self.one if i == j else self.zero)
                   for j in range(self.rank) for i in range(self.rank))

    def root(self, u, s):
        """u(alpha_s)."""
        return self.matrix_of(u)[s]

    def form(self, x, y):
        """Doubled bilinear form 2B(x, y)."""
        total = self.zero
        for i, xi in enumerate(x):
            if not any(xi):
                continue
            for j, yj in enumerate(y):
                if any(yj) and any(self.b[i][j]):
                    total = self.add(total, self.mul(self.mul(xi, self.b[i][j]), yj))
        return total

    def root_is_negative(self, v) -> bool:
        for x in v:
            if any(x):
                return self.sign(x) < 0
        raise ArithmeticError("zero vector is not a root")

    # -- arguments for the compiled kernel ------------------------------------

    def c_args(self):
        if self._c_args is None:
            n, d = self.rank, self.d
            b = array("q", [c for row in self.b for v in row for c in v])
            T = array("q", [c for row in self.mult for v in row for c in v])
            cpow = array("d", [self.cval ** i for i in range(d)])
            self._c_args = (n, d, b, T, cpow)
        return self._c_args


# -- pure-Python kernel -------------------------------------------------------

def _nf_int(word: bytes, n: int, b) -> bytes:
    X = [[1 if i == j else 0 for i in range(n)] for j in range(n)]
    nz = [[j for j in range(n) if j != s and b[s][j][0]] for s in range(n)]

    def rmul(s):
        cs = X[s]
        bs = b[s]
        for j in nz[s]:
            coef = bs[j][0]
            X[j] = [x - coef * y for x, y in zip(X[j], cs)]
        X[s] = [-y for y in cs]

    for s in reversed(word):
        rmul(s)
    out = bytearray()
    while True:
        for s in range(n):
            for v in X[s]:
                if v:
                    break
            if v < 0:
                break
        else:
            return bytes(out)
        out.append(s)
        rmul(s)


def normal_form(word: bytes, ctx: RepContext) -> bytes:
    """Shortlex-least reduced word of the element spelled by ``word``.

    Builds rho(w^-1); column s is w^-1(alpha_s), negative exactly when s is a
    left descent.  Peeling the least left descent each step gives the
    lexicographically least reduced word.
    """
    if ctx.d == 1:
        return _nf_int(word, ctx.rank, ctx.b)
    X = ctx.identity_matrix()
    for s in reversed(word):
        ctx.right_mul_gen(X, s)
    out = bytearray()
    while True:
        for s in range(ctx.rank):
            if ctx.root_is_negative(X[s]):
                break
        else:
            return bytes(out)
        out.append(s)
        ctx.right_mul_gen(X, s)
