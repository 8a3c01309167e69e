#!/usr/bin/env python3
"""Generate reference character tables from explicit matrix groups.

Groups are enumerated by closure from generators; classes come from
conjugation orbits; characters from simultaneous eigenvectors of the class
multiplication matrices (Burnside's method). Values are recovered exactly as
sums of roots of unity via eigenvalue multiplicities along the power maps.

Output: crates/core/tests/data/<name>.json in the table exchange format.

    python3 scripts/gen_reference_tables.py
"""

import cmath
import json
import math
import os
import sys
from collections import deque

import numpy as np

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "tests", "data")


class PrimeField:
    def __init__(self, p):
        self.p = p
        self.size = p
        self.elements = list(range(p))

    def add(self, a, b):
        return (a + b) % self.p

    def sub(self, a, b):
        return (a - b) % self.p

    def mul(self, a, b):
        return (a * b) % self.p

    def neg(self, a):
        return (-a) % self.p

    def inv(self, a):
        return pow(a, self.p - 2, self.p)

    def frob(self, a):
        return a


class F9:
    """F_3[i] with i^2 = -1; element a + b*i stored as a + 3*b."""

    def __init__(self):
        self.p = 3
        self.size = 9
        self.elements = list(range(9))

    @staticmethod
    def split(x):
        return x % 3, x // 3

    @staticmethod
    def join(a, b):
        return (a % 3) + 3 * (b % 3)

    def add(self, x, y):
        a, b = self.split(x)
        c, d = self.split(y)
        return self.join(a + c, b + d)

    def sub(self, x, y):
        a, b = self.split(x)
        c, d = self.split(y)
        return self.join(a - c, b - d)

    def neg(self, x):
        a, b = self.split(x)
        return self.join(-a, -b)

    def mul(self, x, y):
        a, b = self.split(x)
        c, d = self.split(y)
        return self.join(a * c - b * d, a * d + b * c)

    def inv(self, x):
        for y in self.elements:
            if self.mul(x, y) == 1:
                return y
        raise ZeroDivisionError

    def frob(self, x):
        a, b = self.split(x)
        return self.join(a, -b)


def mat_mul(F, A, B, n):
    out = []
    for i in range(n):
        for j in range(n):
            s = 0
            for k in range(n):
                s = F.add(s, F.mul(A[i * n + k], B[k * n + j]))
            out.append(s)
    return tuple(out)


def identity(n):
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def rank(F, M, n):
    rows = [list(M[i * n:(i + 1) * n]) for i in range(n)]
    r = 0
    for c in range(n):
        piv = next((i for i in range(r, n) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = F.inv(rows[r][c])
        rows[r] = [F.mul(inv, x) for x in rows[r]]
        for i in range(n):
            if i != r and rows[i][c] != 0:
                f = rows[i][c]
                rows[i] = [F.sub(x, F.mul(f, y)) for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


def minus_scalar(F, M, lam, n):
    return tuple(F.sub(M[i], lam) if i // n == i % n else M[i] for i in range(n * n))


def support(F, M, n):
    """Codimension of the largest eigenspace, scanning eigenvalues in F."""
    best = 1
    for lam in F.elements:
        if lam == 0:
            continue
        best = max(best, n - rank(F, minus_scalar(F, M, lam, n), n))
    return n - best


def is_transvection(F, M, n):
    for lam in F.elements:
        if lam == 0:
            continue
        N = minus_scalar(F, M, lam, n)
        if rank(F, N, n) == 1 and all(x == 0 for x in mat_mul(F, N, N, n)):
            return True
    return False


class Group:
    """Finite group given by hashable elements and a multiplication."""

    def __init__(self, gens, mul, one):
        self.mul = mul
        self.one = one
        elems = [one]
        index = {one: 0}
        queue = deque([one])
        while queue:
            g = queue.popleft()
            for s in gens:
                h = mul(g, s)
                if h not in index:
                    index[h] = len(elems)
                    elems.append(h)
                    queue.append(h)
        self.elems = elems
        self.index = index
        self.order = len(elems)
        n = self.order
        self.table = None
        self.inverse = [0] * n
        self.gens = [index[s] for s in gens]
        self._mul_cache = {}
        for i, g in enumerate(elems):
            h = g
            while True:
                nxt = mul(h, g)
                if nxt == one:
                    self.inverse[i] = index[h]
                    break
                h = nxt

    def m(self, i, j):
        key = (i, j)
        v = self._mul_cache.get(key)
        if v is None:
            v = self.index[self.mul(self.elems[i], self.elems[j])]
            self._mul_cache[key] = v
        return v

    def elem_order(self, i):
        k, h = 1, i
        while h != 0:
            h = self.m(h, i)
            k += 1
        return k

    def classes(self):
        cls = [-1] * self.order
        classes = []
        for i in range(self.order):
            if cls[i] >= 0:
                continue
            c = len(classes)
            orbit = [i]
            cls[i] = c
            queue = deque([i])
            while queue:
                x = queue.popleft()
                for s in self.gens:
                    y = self.m(self.m(self.inverse[s], x), s)
                    if cls[y] < 0:
                        cls[y] = c
                        orbit.append(y)
                        queue.append(y)
            classes.append(orbit)
        return cls, classes


def character_table(G):
    cls, classes = G.classes()
    orders = [G.elem_order(c[0]) for c in classes]
    # identity first, then by order and size; ties keep discovery order
    perm = sorted(range(len(classes)), key=lambda k: (orders[k], len(classes[k]), k))
    relabel = {old: new for new, old in enumerate(perm)}
    classes = [classes[k] for k in perm]
    orders = [orders[k] for k in perm]
    cls = [relabel[c] for c in cls]
    r = len(classes)
    sizes = [len(c) for c in classes]

    # a[i][j][k] = #{x in C_i : x^{-1} z_k in C_j} for a fixed z_k in C_k
    a = np.zeros((r, r, r))
    for k in range(r):
        z = classes[k][0]
        for x in range(G.order):
            y = G.m(G.inverse[x], z)
            a[cls[x], cls[y], k] += 1
    rng = np.random.default_rng(12345)
    coeffs = rng.normal(size=r)
    M = sum(coeffs[i] * a[i].T for i in range(r))
    _, vecs = np.linalg.eig(M.T)
    chars = []
    for col in range(r):
        w = vecs[:, col]
        w = w / w[0]
        norm = sum(abs(w[j]) ** 2 / sizes[j] for j in range(r))
        deg = math.sqrt(G.order / norm.real)
        values = [w[j] * deg / sizes[j] for j in range(r)]
        chars.append(values)

    # power maps
    powers = {}
    for k in range(r):
        g = classes[k][0]
        m = orders[k]
        seq = []
        h = 0
        for _ in range(m):
            seq.append(cls[h])
            h = G.m(h, g)
        powers[k] = seq

    exact = []
    for values in chars:
        row = []
        for k in range(r):
            m = orders[k]
            mult = []
            for e in range(m):
                s = sum(values[powers[k][t]] * cmath.exp(-2j * math.pi * e * t / m) for t in range(m)) / m
                v = round(s.real)
                if abs(s - v) > 1e-6 or v < 0:
                    sys.exit(f"non-integral eigenvalue multiplicity {s}")
                mult.append(v)
            row.append((m, mult))
        exact.append(row)
    return classes, sizes, orders, cls, exact, chars


def literal(m, mult):
    terms = []
    for e, c in enumerate(mult):
        if c == 0:
            continue
        if e == 0:
            terms.append(str(c))
        else:
            root = f"E({m})" + (f"^{e}" if e != 1 else "")
            terms.append(root if c == 1 else f"{c}*{root}")
    return "+".join(terms) if terms else "0"


def write_table(name, G, order_name, rep_matrix=None, F=None, n=None, extra=None, class_prefix=True):
    classes, sizes, orders, cls, exact, numeric = character_table(G)
    r = len(classes)
    letters = {}
    names = []
    for k in range(r):
        o = orders[k]
        idx = letters.get(o, 0)
        letters[o] = idx + 1
        names.append(f"{o}{chr(ord('a') + idx)}")
    degrees = [round(row[0].real) for row in numeric]
    order = sorted(range(r), key=lambda i: (degrees[i], [round(abs(v), 6) for v in numeric[i]], [round(v.imag, 6) for v in numeric[i]]))
    doc = {"name": order_name, "order": G.order}
    if extra:
        doc.update(extra)
    class_docs = []
    centre = [all(abs(abs(row[k]) - abs(row[0])) < 1e-9 for row in numeric) for k in range(r)]
    for k in range(r):
        c = {"name": names[k], "size": sizes[k], "order": orders[k], "central": bool(centre[k])}
        if rep_matrix is not None:
            M = rep_matrix(G.elems[classes[k][0]])
            c["support"] = support(F, M, n)
            if is_transvection(F, M, n):
                c["transvection"] = True
        class_docs.append(c)
    doc["classes"] = class_docs
    doc["characters"] = [
        {"name": f"X{j + 1}", "values": [literal(*exact[i][k]) for k in range(r)]}
        for j, i in enumerate(order)
    ]
    os.makedirs(OUT, exist_ok=True)
    path = os.path.join(OUT, f"{name}.json")
    with open(path, "w") as fh:
        json.dump(doc, fh, indent=2, ensure_ascii=False)
        fh.write("\n")
    print(f"{path}: order {G.order}, {r} classes, degrees {sorted(degrees)}")


def psl2(p):
    F = PrimeField(p)

    def canon(A):
        B = tuple(F.neg(x) for x in A)
        return min(A, B)

    def mul(A, B):
        return canon(mat_mul(F, A, B, 2))

    gens = [canon((1, 1, 0, 1)), canon((0, p - 1, 1, 0))]
    G = Group(gens, mul, canon(identity(2)))
    extra = {"characteristic": p, "lie": {"n": 2, "q": p, "epsilon": "+", "rank": 1}}
    write_table(f"psl2_{p}_reference", G, f"PSL2({p})", rep_matrix=lambda A: A, F=F, n=2, extra=extra)


def su3_3():
    F = F9()
    n = 3

    def herm(v, w):
        # h(v, w) = sum conj(v_i) w_{2-i}
        s = 0
        for i in range(3):
            s = F.add(s, F.mul(F.frob(v[i]), w[2 - i]))
        return s

    vectors = [(a, b, c) for a in range(9) for b in range(9) for c in range(9) if (a, b, c) != (0, 0, 0)]
    isotropic = [v for v in vectors if herm(v, v) == 0]
    trace_zero = [x for x in F.elements if x != 0 and F.add(x, F.frob(x)) == 0]
    gens = set()
    for v in isotropic:
        # row vector v^dagger J: (v^dagger J)_j = conj(v_{2-j})
        vj = [F.frob(v[2 - j]) for j in range(3)]
        for a in trace_zero:
            T = list(identity(3))
            for i in range(3):
                for j in range(3):
                    T[i * 3 + j] = F.add(T[i * 3 + j], F.mul(a, F.mul(v[i], vj[j])))
            gens.add(tuple(T))
    gens = sorted(gens)

    def mul(A, B):
        return mat_mul(F, A, B, 3)

    G = Group(gens, mul, identity(3))
    if G.order != 6048:
        sys.exit(f"unexpected SU3(3) order {G.order}")
    extra = {"characteristic": 3, "lie": {"n": 3, "q": 3, "epsilon": "-", "rank": 1}}
    write_table("psu3_3", G, "PSU3(3)", rep_matrix=lambda A: A, F=F, n=n, extra=extra)


def q8():
    # left multiplication by i and j on quaternion coordinates (1, i, j, k)
    i = (0, -1, 0, 0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0)
    j = (0, 0, -1, 0, 0, 0, 0, 1, 1, 0, 0, 0, 0, -1, 0, 0)

    def mul(A, B):
        return tuple(sum(A[r * 4 + k] * B[k * 4 + c] for k in range(4)) for r in range(4) for c in range(4))

    G = Group([i, j], mul, identity(4))
    write_table("q8", G, "Q8")


if __name__ == "__main__":
    q8()
    psl2(5)
    psl2(7)
    su3_3()
