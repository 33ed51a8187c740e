"""Orbit dimensions on n_gamma from explicit matrix Lie algebras (types A-D).

Root vectors are concrete matrices in sl(n), so(n) or sp(2n); brackets are
matrix commutators, so no structure-constant table is shared with the C++ code.
"""

import random
from fractions import Fraction as F

from cascade import cascade
from roots import RootSystem, add, dot, sub


def zeros(n):
    return [[F(0)] * n for _ in range(n)]


def mat_mul(a, b):
    n = len(a)
    out = zeros(n)
    for i in range(n):
        for k in range(n):
            if a[i][k]:
                aik = a[i][k]
                for j in range(n):
                    if b[k][j]:
                        out[i][j] += aik * b[k][j]
    return out


def commutator(a, b):
    ab, ba = mat_mul(a, b), mat_mul(b, a)
    return [[x - y for x, y in zip(r1, r2)] for r1, r2 in zip(ab, ba)]


def E(n, i, j, c=1):
    m = zeros(n)
    m[i][j] = F(c)
    return m


def plus(*ms):
    n = len(ms[0])
    out = zeros(n)
    for m in ms:
        for i in range(n):
            for j in range(n):
                out[i][j] += m[i][j]
    return out


def root_vector(family, l, root):
    """Matrix for a positive root written in epsilon coordinates."""
    nz = [(k, v) for k, v in enumerate(root) if v != 0]
    if family == "A":
        (i, _), (j, _) = nz
        return E(l + 1, i, j) if root[i] > 0 else E(l + 1, j, i)
    n = {"B": 2 * l + 1, "C": 2 * l, "D": 2 * l}[family]
    if len(nz) == 1:
        (i, v), = nz
        if family == "C":  # 2 e_i
            return E(n, i, l + i)
        return plus(E(n, i, 2 * l), E(n, 2 * l, l + i, -1))  # e_i in so(2l+1)
    (i, vi), (j, vj) = nz
    if vi > 0 and vj < 0:  # e_i - e_j
        return plus(E(n, i, j), E(n, l + j, l + i, -1))
    sign = 1 if family == "C" else -1  # e_i + e_j
    return plus(E(n, i, l + j), E(n, j, l + i, sign))


def proportion(a, b):
    """c with a = c b, or None."""
    c = None
    for ra, rb in zip(a, b):
        for x, y in zip(ra, rb):
            if y == 0:
                if x != 0:
                    return None
                continue
            if c is None:
                c = x / y
            elif x != c * y:
                return None
    return c if c is not None else F(0)


class MatrixNilpotent:
    def __init__(self, family, l):
        self.rs = RootSystem(family, l)
        self.steps = cascade(self.rs)
        self.basis = [r for s in self.steps for r in s["layer"]]
        self.layer = {r: k for k, s in enumerate(self.steps) for r in s["layer"]}
        self.index = {r: i for i, r in enumerate(self.basis)}
        mats = [root_vector(family, l, r) for r in self.basis]
        d = len(self.basis)
        self.table = {}
        for i in range(d):
            for j in range(d):
                s = add(self.basis[i], self.basis[j])
                br = commutator(mats[i], mats[j])
                if s in self.index:
                    c = proportion(br, mats[self.index[s]])
                    assert c is not None and c != 0, "bracket not along the sum root"
                    self.table[i, j] = (self.index[s], c)
                else:
                    assert all(x == 0 for row in br for x in row), "bracket leaves n_gamma"

    def dim(self):
        return len(self.basis)

    def center(self, s):
        return self.index[self.steps[s]["highest"]]

    def skew_rank(self, lam, idx=None):
        idx = list(range(self.dim())) if idx is None else idx
        m = []
        for i in idx:
            row = []
            for j in idx:
                t = self.table.get((i, j))
                row.append(t[1] * lam[t[0]] if t else F(0))
            m.append(row)
        return rank(m)

    def orbit_point(self, lam, rng):
        d = self.dim()
        x = [F(rng.randint(-3, 3)) for _ in range(d)]
        mu, term = list(lam), list(lam)
        for m in range(1, d + 1):
            nxt = [F(0)] * d
            for (i, j), (k, c) in self.table.items():
                if x[i] and term[k]:
                    nxt[j] += x[i] * c * term[k]
            nxt = [v / -m for v in nxt]
            if not any(nxt):
                break
            mu = [a + b for a, b in zip(mu, nxt)]
            term = nxt
        return mu


def rank(m):
    m = [list(r) for r in m]
    rk, rows = 0, len(m)
    cols = len(m[0]) if m else 0
    for c in range(cols):
        piv = next((r for r in range(rk, rows) if m[r][c] != 0), None)
        if piv is None:
            continue
        m[rk], m[piv] = m[piv], m[rk]
        for r in range(rk + 1, rows):
            if m[r][c]:
                f = m[r][c] / m[rk][c]
                m[r] = [a - f * b for a, b in zip(m[r], m[rk])]
        rk += 1
    return rk


def rankable_dims(n, rng):
    out = []
    for k in range(len(n.steps) + 1):
        lam = [F(0)] * n.dim()
        for s in range(k):
            lam[n.center(s)] = F(rng.choice([v for v in range(-7, 8) if v]), rng.randint(1, 5))
        out.append(n.skew_rank(lam))
    return out


def s_gamma(n):
    rs = n.rs
    top = n.steps[0]["highest"]
    beta = next(a for a in rs.simple if dot(a, top) != 0)
    levi = {r for r in rs.roots if r not in n.index and tuple(-x for x in r) not in n.index}
    keep = [i for i, g in enumerate(n.basis) if g != beta and sub(g, beta) not in levi]
    return beta, keep


def restricted_dims(n, rng):
    beta, keep = s_gamma(n)
    c = n.dim() - len(keep)
    out = []
    for k in range(1, len(n.steps) + 1):
        lam = [F(0)] * n.dim()
        for s in range(k):
            lam[n.center(s)] = F(rng.choice([v for v in range(-7, 8) if v]))
        mu = n.orbit_point(lam, rng)
        out.append(n.skew_rank(mu, keep))
    return c, out


if __name__ == "__main__":
    rng = random.Random(7)
    for f, l in [("A", 4), ("C", 3), ("C", 4), ("B", 4), ("B", 5), ("D", 5)]:
        n = MatrixNilpotent(f, l)
        print(f + str(l), n.dim(), rankable_dims(n, rng), restricted_dims(n, rng))
