#!/usr/bin/env python3
"""Derive exact affine representations for the ten flat manifold groups.

Maps act on row vectors, x -> x*L + t, stored as augmented 4x4 matrices
[[L, 0], [t, 1]]. A word is evaluated as the left-to-right matrix product,
so the leftmost letter is applied first.

For each manifold the linear parts are fixed by hand (planar rotation or
glide block plus the fibre sign), h is the unit translation along the fibre,
and the remaining translations are solved from the relator equations. Free
parameters are set to the first small-rational assignment whose image has a
rank-3 translation subgroup. Output is the C++ table used by catalog.cpp.
"""

import itertools
import sys
from fractions import Fraction

import sympy as sp

I2 = sp.eye(2)
R2 = -sp.eye(2)
R4 = sp.Matrix([[0, 1], [-1, 0]])
R3 = sp.Matrix([[0, 1], [-1, -1]])
R6 = -R3 * R3
GLIDE = sp.Matrix([[1, 0], [0, -1]])


def linear(planar, fibre):
    m = sp.zeros(3, 3)
    m[:2, :2] = planar
    m[2, 2] = fibre
    return m


def presentation(b, eps, g, pairs):
    n = len(pairs)
    orientable_base = eps in ("o1", "o2")
    gp = 2 * g if orientable_base else g
    names = [f"s{k+1}" for k in range(n)] + [f"v{j+1}" for j in range(gp)] + ["h"]
    h = n + gp
    rels = []
    for k, (a, bk) in enumerate(pairs):
        rels.append([(k, 1), (h, 1), (k, -1), (h, -1)])
        rels.append([(k, a), (h, bk)])
    signs = []
    for j in range(gp):
        if eps in ("o1", "n1"):
            e = 1
        elif eps in ("o2", "n2"):
            e = -1
        elif eps == "n3":
            e = 1 if j == 0 else -1
        else:
            e = 1 if j < 2 else -1
        signs.append(e)
        v = n + j
        rels.append([(v, 1), (h, 1), (v, -1), (h, -e)])
    last = [(k, 1) for k in range(n)]
    if orientable_base:
        for i in range(g):
            a, c = n + 2 * i, n + 2 * i + 1
            last += [(a, 1), (c, 1), (a, -1), (c, -1)]
    else:
        last += [(n + j, 2) for j in range(gp)]
    if b != 0:
        last.append((h, -b))
    rels.append(last)
    return names, rels, signs


def aug(lin, t):
    m = sp.eye(4)
    m[:3, :3] = lin
    m[3, :3] = t
    return m


def evaluate(mats, word):
    out = sp.eye(4)
    for gen, e in word:
        m = mats[gen] if e > 0 else mats[gen].inv()
        for _ in range(abs(e)):
            out = out * m
    return out


def _mul(a, b):
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(4)) for j in range(4)) for i in range(4))


def _inv(m):
    inv = sp.Matrix(m).inv()
    return tuple(tuple(Fraction(int(x.p), int(x.q)) for x in inv.row(i)) for i in range(4))


def _extend_basis(basis, vec):
    """Add vec to an echelon basis (list of (pivot, row)); True if it was independent."""
    vec = list(vec)
    for pivot, row in basis:
        if vec[pivot]:
            f = vec[pivot] / row[pivot]
            vec = [x - f * y for x, y in zip(vec, row)]
    for i, x in enumerate(vec):
        if x:
            basis.append((i, vec))
            return True
    return False


def translation_rank(mats):
    """Rank of the translations g^k, k = order of g's linear part, over short words g."""
    frac = [tuple(tuple(Fraction(int(x.p), int(x.q)) for x in m.row(i)) for i in range(4)) for m in mats]
    letters = []
    for m in frac:
        letters += [m, _inv(m)]
    ident = tuple(tuple(Fraction(int(i == j)) for j in range(4)) for i in range(4))
    found = []
    for length in range(1, 4):
        for word in itertools.product(letters, repeat=length):
            m = ident
            for p in word:
                m = _mul(m, p)
            power = m
            for _ in range(12):
                if all(power[i][j] == (i == j) for i in range(3) for j in range(3)):
                    break
                power = _mul(power, m)
            if _extend_basis(found, list(power[3][:3])) and len(found) == 3:
                return 3
    return len(found)


def derive(b, eps, g, pairs, lin):
    names, rels, _ = presentation(b, eps, g, pairs)
    h = len(names) - 1
    syms = []
    mats = []
    for i, L in enumerate(lin):
        if i == h:
            t = sp.Matrix([[0, 0, 1]])
        else:
            t = sp.Matrix([sp.symbols(f"t{i}_{c}") for c in range(3)]).T
            syms += list(t)
        mats.append(aug(L, t))
    eqs = []
    for r in rels:
        m = evaluate(mats, r)
        assert sp.simplify(m[:3, :3] - sp.eye(3)) == sp.zeros(3, 3), (names, r)
        eqs += [sp.expand(x) for x in m[3, :3]]
    eqs = [e for e in eqs if e != 0]
    if eqs:
        (sol_tuple,) = sp.linsolve(eqs, syms)
        sol = dict(zip(syms, sol_tuple))
    else:
        sol = {s: s for s in syms}
    free = sorted(set().union(*[sp.sympify(v).free_symbols for v in sol.values()]), key=str)
    choices = [0, Fraction(1, 2), 1]
    for assign in itertools.product(choices, repeat=len(free)):
        sub = {s: sp.Rational(v) for s, v in zip(free, assign)}
        full = {s: sp.nsimplify(sol.get(s, s).subs(sub)) for s in syms}
        concrete = [m.subs(full) for m in mats]
        if all(evaluate(concrete, r) == sp.eye(4) for r in rels) and translation_rank(concrete) == 3:
            return names, concrete
    raise RuntimeError(f"no rank-3 solution for {eps} {pairs}")


CATALOG = [
    ("M1", 0, "o1", 1, [], lambda n: [linear(I2, 1)] * 2 + [sp.eye(3)]),
    ("M2", -2, "o1", 0, [(2, 1)] * 4, lambda n: [linear(R2, 1)] * 4 + [sp.eye(3)]),
    ("M3", -1, "o1", 0, [(3, 1)] * 3, lambda n: [linear(R3, 1)] * 3 + [sp.eye(3)]),
    ("M4", -1, "o1", 0, [(2, 1), (4, 1), (4, 1)],
     lambda n: [linear(R2, 1), linear(R4, 1), linear(R4, 1), sp.eye(3)]),
    ("M5", -1, "o1", 0, [(2, 1), (3, 1), (6, 1)],
     lambda n: [linear(R2, 1), linear(R3, 1), linear(R6, 1), sp.eye(3)]),
    ("M6", -1, "n2", 1, [(2, 1), (2, 1)],
     lambda n: [linear(R2, 1)] * 2 + [linear(GLIDE, -1), sp.eye(3)]),
    ("N1", 0, "n1", 2, [], lambda n: [linear(GLIDE, 1)] * 2 + [sp.eye(3)]),
    ("N2", 1, "n1", 2, [], lambda n: [linear(GLIDE, 1)] * 2 + [sp.eye(3)]),
    ("N3", 0, "n3", 2, [], lambda n: [linear(GLIDE, 1), linear(GLIDE, -1), sp.eye(3)]),
    ("N4", 1, "n3", 2, [], lambda n: [linear(GLIDE, 1), linear(GLIDE, -1), sp.eye(3)]),
]


def cxx_rational(x):
    x = sp.Rational(x)
    return f"{x.p}" if x.q == 1 else f"{x.p}/{x.q}"


def main():
    out = sys.stdout
    for ident, b, eps, g, pairs, lin in CATALOG:
        names, mats = derive(b, eps, g, pairs, lin(len(pairs)))
        out.write(f"// {ident}\n{{\n")
        for name, m in zip(names, mats):
            L = ", ".join(cxx_rational(m[i, j]) for i in range(3) for j in range(3))
            t = ", ".join(cxx_rational(m[3, j]) for j in range(3))
            out.write(f'    affine("{L}", "{t}"),  // {name}\n')
        out.write("},\n")


if __name__ == "__main__":
    main()
