#!/usr/bin/env python3
"""Offline fixture generator for the kzero corpus.

Everything under fixtures/ is produced by this script, by brute force:

  * group multiplication tables from explicit element models
    (permutations, dihedral/quaternion presentations, cyclic groups),
  * representation rings Rep(G) from explicit character tables, with
    tensor multiplicities N_ij^k computed by character orthogonality,
  * restriction functors Rep(G) -> Rep(H) from induced character inner
    products over an explicit subgroup embedding,
  * the hand-specified small fusion rings (Fibonacci, Ising,
    Tambara-Yamagami over Z/2 x Z/2).

Every multiplicity is an inner product of complex character values,
rounded to the nearest integer with a 1e-9 integrality gate, so a typo
in a character table cannot survive silently.  The C++ test suite
re-validates all emitted files against the ring/functor axioms.

Usage:  python3 tools/charoracle.py [fixtures-dir]
"""

import cmath
import os
import sys
from itertools import permutations

TOL = 1e-9


def compose(p, q):
    return tuple(p[q[x]] for x in range(len(p)))


def parity(p):
    inv = sum(1 for a in range(len(p)) for b in range(a + 1, len(p)) if p[a] > p[b])
    return -1 if inv % 2 else 1


def fixed_points(p):
    return sum(1 for x in range(len(p)) if p[x] == x)


def cycle_type(p):
    seen, lens = set(), []
    for x in range(len(p)):
        if x in seen:
            continue
        c, y = 0, x
        while y not in seen:
            seen.add(y)
            y = p[y]
            c += 1
        lens.append(c)
    return tuple(sorted(lens, reverse=True))


class Group:
    def __init__(self, name, elements, mul_fn):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        n = len(self.elements)
        self.order = n
        self.mul = [[self.index[mul_fn(a, b)] for b in self.elements] for a in self.elements]
        assert self.mul[0] == list(range(n)), "identity must be element 0"

    def table_lines(self):
        return [" ".join(str(v) for v in row) for row in self.mul]


def perm_group(name, degree, predicate=lambda p: True):
    elems = [p for p in sorted(permutations(range(degree))) if predicate(p)]
    assert elems[0] == tuple(range(degree))
    return Group(name, elems, compose)


def cyclic_group(n):
    return Group("z%d" % n, range(n), lambda a, b: (a + b) % n)


def klein_group():
    elems = [(0, 0), (1, 0), (0, 1), (1, 1)]
    return Group("z2z2", elems, lambda a, b: (a[0] ^ b[0], a[1] ^ b[1]))


def dihedral8():
    # element (k, s) is r^k s^s with r^4 = s^2 = e, s r s = r^-1
    elems = [(k, s) for s in (0, 1) for k in range(4)]

    def mul(a, b):
        k1, s1 = a
        k2, s2 = b
        return ((k1 + (k2 if s1 == 0 else -k2)) % 4, s1 ^ s2)

    return Group("d4", elems, mul)


def quaternion8():
    # units +-1, +-i, +-j, +-k encoded as (sign, axis), axis in "1ijk"
    elems = [(1, "1"), (-1, "1"), (1, "i"), (-1, "i"),
             (1, "j"), (-1, "j"), (1, "k"), (-1, "k")]
    basic = {("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
             ("i", "1"): (1, "i"), ("j", "1"): (1, "j"), ("k", "1"): (1, "k"),
             ("i", "i"): (-1, "1"), ("j", "j"): (-1, "1"), ("k", "k"): (-1, "1"),
             ("i", "j"): (1, "k"), ("j", "i"): (-1, "k"),
             ("j", "k"): (1, "i"), ("k", "j"): (-1, "i"),
             ("k", "i"): (1, "j"), ("i", "k"): (-1, "j")}

    def mul(a, b):
        s, ax = basic[(a[1], b[1])]
        return (a[0] * b[0] * s, ax)

    return Group("q8", elems, mul)


def as_int(z, what):
    r = round(z.real)
    if abs(z.real - r) > TOL or abs(z.imag) > TOL:
        raise AssertionError("non-integral multiplicity %r in %s" % (z, what))
    return int(r)


class RepRing:
    """Rep(G) as a based ring, from an explicit character table."""

    def __init__(self, name, group, labels, chars):
        self.name = name
        self.group = group
        self.labels = labels
        self.chars = chars  # chars[i][g] complex, indexed by group element
        n = len(chars)
        self.rank = n
        assert all(abs(c - 1) < TOL for c in chars[0]), "character 0 must be trivial"
        order = group.order
        # duals: conjugate characters
        self.dual = []
        for i in range(n):
            matches = [j for j in range(n)
                       if all(abs(chars[i][g].conjugate() - chars[j][g]) < TOL for g in range(order))]
            assert len(matches) == 1, "dual of %s ambiguous" % labels[i]
            self.dual.append(matches[0])
        # N_ij^k = <chi_i chi_j, chi_k>
        self.nz = {}
        for i in range(n):
            for j in range(n):
                for k in range(n):
                    s = sum(chars[i][g] * chars[j][g] * chars[k][g].conjugate()
                            for g in range(order)) / order
                    v = as_int(s, "%s: N(%d,%d,%d)" % (name, i, j, k))
                    assert v >= 0
                    if v:
                        self.nz[(i, j, k)] = v


class HandRing:
    def __init__(self, name, labels, dual, nz):
        self.name = name
        self.labels = labels
        self.rank = len(labels)
        self.dual = dual
        self.nz = dict(nz)


def restriction(name, big, small, embedding):
    """Multiplicity matrix of Res: Rep(big.group) -> Rep(small.group).

    embedding maps small-group element indices to big-group element indices.
    """
    h = small.group.order
    m = {}
    for i in range(big.rank):
        for j in range(small.rank):
            s = sum(big.chars[i][embedding[x]] * small.chars[j][x].conjugate()
                    for x in range(h)) / h
            v = as_int(s, "%s: m(%d,%d)" % (name, i, j))
            assert v >= 0
            if v:
                m[(i, j)] = v
    return {"name": name, "source": big.name, "target": small.name, "m": m}


def s3_chars(g):
    triv = [1 + 0j] * g.order
    sgn = [complex(parity(p)) for p in g.elements]
    std = [complex(fixed_points(p) - 1) for p in g.elements]
    return [triv, sgn, std]


def s4_chars(g):
    v2_by_type = {(1, 1, 1, 1): 2, (2, 1, 1): 0, (2, 2): 2, (3, 1): -1, (4,): 0}
    triv = [1 + 0j] * g.order
    sgn = [complex(parity(p)) for p in g.elements]
    v2 = [complex(v2_by_type[cycle_type(p)]) for p in g.elements]
    v3 = [complex(fixed_points(p) - 1) for p in g.elements]
    v3s = [complex(parity(p) * (fixed_points(p) - 1)) for p in g.elements]
    return [triv, sgn, v2, v3, v3s]


def a4_chars(g):
    w = cmath.exp(2j * cmath.pi / 3)
    v4 = {(0, 1, 2, 3), (1, 0, 3, 2), (2, 3, 0, 1), (3, 2, 1, 0)}
    c = (1, 2, 0, 3)   # 3-cycle generating A4/V4
    cosets = []
    for t in range(3):
        rep = tuple(range(4))
        for _ in range(t):
            rep = compose(c, rep)
        cosets.append({compose(rep, v) for v in v4})

    def klass(p):
        for t in range(3):
            if p in cosets[t]:
                return t
        raise AssertionError

    triv = [1 + 0j] * g.order
    chi1 = [w ** klass(p) for p in g.elements]
    chi2 = [w ** (2 * klass(p)) for p in g.elements]
    t3 = [complex(fixed_points(p) - 1) for p in g.elements]
    return [triv, chi1, chi2, t3]


def d4_chars(g):
    def onedim(a, b):
        return [complex((-1) ** (a * k + b * s)) for (k, s) in g.elements]

    m = [complex([2, 0, -2, 0][k]) if s == 0 else 0j for (k, s) in g.elements]
    return [onedim(0, 0), onedim(0, 1), onedim(1, 0), onedim(1, 1), m]


def q8_chars(g):
    image = {"1": (0, 0), "i": (1, 0), "j": (0, 1), "k": (1, 1)}

    def onedim(a, b):
        out = []
        for (sign, ax) in g.elements:
            x, y = image[ax]
            out.append(complex((-1) ** (a * x + b * y)))
        return out

    m = [complex(2 * sign) if ax == "1" else 0j for (sign, ax) in g.elements]
    return [onedim(0, 0), onedim(1, 0), onedim(0, 1), onedim(1, 1), m]


def zn_chars(g):
    n = g.order
    return [[cmath.exp(2j * cmath.pi * j * k / n) for k in range(n)] for j in range(n)]


def zn_labels(n):
    if n == 1:
        return ["1"]
    if n == 2:
        return ["1", "eps"]
    return ["1"] + ["w%d" % j if j > 1 else "w" for j in range(1, n)]


PROV = "# generated by tools/charoracle.py (character-table brute force); do not edit by hand"


def emit_ring(path, ring):
    lines = [PROV, "ring %s" % ring.name, "rank %d" % ring.rank,
             "labels %s" % " ".join(ring.labels),
             "dual %s" % " ".join(str(d) for d in ring.dual)]
    for (i, j, k) in sorted(ring.nz):
        lines.append("nz %d %d %d %d" % (i, j, k, ring.nz[(i, j, k)]))
    lines.append("end")
    write(path, lines)


def emit_functor(path, f):
    lines = [PROV, "functor %s" % f["name"], "source %s" % f["source"], "target %s" % f["target"]]
    for (i, j) in sorted(f["m"]):
        lines.append("m %d %d %d" % (i, j, f["m"][(i, j)]))
    lines.append("end")
    write(path, lines)


def emit_group(path, g):
    lines = [PROV, "group %s" % g.name, "order %d" % g.order, "mul"]
    lines += g.table_lines()
    lines.append("end")
    write(path, lines)


def write(path, lines):
    os.makedirs(os.path.dirname(path), exist_ok=True)
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print("wrote %s" % path)


def group_unit_rows(rank):
    nz = {}
    for j in range(rank):
        nz[(0, j, j)] = 1
        if j:
            nz[(j, 0, j)] = 1
    return nz


def hand_rings():
    fib = HandRing("fib", ["1", "tau"], [0, 1],
                   {**group_unit_rows(2), (1, 1, 0): 1, (1, 1, 1): 1})
    ising = HandRing("ising", ["1", "psi", "sigma"], [0, 1, 2],
                     {**group_unit_rows(3),
                      (1, 1, 0): 1, (1, 2, 2): 1, (2, 1, 2): 1,
                      (2, 2, 0): 1, (2, 2, 1): 1})
    # Tambara-Yamagami over Z/2 x Z/2: group part {1,a,b,c}, m self-dual
    ty = {**group_unit_rows(5)}
    klein = {(1, 1): 0, (2, 2): 0, (3, 3): 0, (1, 2): 3, (2, 1): 3,
             (1, 3): 2, (3, 1): 2, (2, 3): 1, (3, 2): 1}
    for (i, j), k in klein.items():
        ty[(i, j, k)] = 1
    for gidx in (1, 2, 3):
        ty[(gidx, 4, 4)] = 1
        ty[(4, gidx, 4)] = 1
    for k in range(4):
        ty[(4, 4, k)] = 1
    return [fib, ising, HandRing("ty-z2z2", ["1", "a", "b", "c", "m"], [0, 1, 2, 3, 4], ty)]


def main():
    outdir = sys.argv[1] if len(sys.argv) > 1 else "fixtures"

    s3 = perm_group("s3", 3)
    s4 = perm_group("s4", 4)
    a4 = perm_group("a4", 4, lambda p: parity(p) == 1)
    d4 = dihedral8()
    q8 = quaternion8()
    zs = {n: cyclic_group(n) for n in range(1, 7)}
    groups = [s3, s4, a4, d4, q8, klein_group()] + [zs[n] for n in (2, 3, 4, 5, 6)]

    reps = {}
    reps["rep-s3"] = RepRing("rep-s3", s3, ["1", "s", "rho"], s3_chars(s3))
    reps["rep-s4"] = RepRing("rep-s4", s4, ["1", "sgn", "chi2", "std", "stds"], s4_chars(s4))
    reps["rep-a4"] = RepRing("rep-a4", a4, ["1", "w", "w2", "t"], a4_chars(a4))
    reps["rep-d4"] = RepRing("rep-d4", d4, ["1", "a", "b", "c", "m"], d4_chars(d4))
    reps["rep-q8"] = RepRing("rep-q8", q8, ["1", "a", "b", "c", "m"], q8_chars(q8))
    for n in range(1, 7):
        reps["rep-z%d" % n] = RepRing("rep-z%d" % n, zs[n], zn_labels(n), zn_chars(zs[n]))

    # subgroup embeddings (small-group element index -> big-group element index)
    def embed(big, small, image_fn):
        out = []
        for e in small.elements:
            img = image_fn(e)
            out.append(big.index[img])
        return out

    def power(g, x, n):
        acc = 0
        for _ in range(n):
            acc = g.mul[acc][x]
        return acc

    c3_s3 = s3.index[(1, 2, 0)]          # a 3-cycle in S3
    t_s3 = s3.index[(1, 0, 2)]           # a transposition in S3
    c3_a4 = a4.index[(1, 2, 0, 3)]       # a 3-cycle in A4

    functors = [
        restriction("res-s3-z3", reps["rep-s3"], reps["rep-z3"],
                    [power(s3, c3_s3, k) for k in range(3)]),
        restriction("res-s3-z2", reps["rep-s3"], reps["rep-z2"],
                    [power(s3, t_s3, k) for k in range(2)]),
        restriction("res-s4-s3", reps["rep-s4"], reps["rep-s3"],
                    embed(s4, s3, lambda p: (p[0], p[1], p[2], 3))),
        restriction("res-s4-a4", reps["rep-s4"], reps["rep-a4"],
                    embed(s4, a4, lambda p: p)),
        restriction("res-a4-z3", reps["rep-a4"], reps["rep-z3"],
                    [power(a4, c3_a4, k) for k in range(3)]),
        restriction("res-d4-z4", reps["rep-d4"], reps["rep-z4"],
                    [d4.index[(k, 0)] for k in range(4)]),
        restriction("res-q8-z4", reps["rep-q8"], reps["rep-z4"],
                    [power(q8, q8.index[(1, "i")], k) for k in range(4)]),
    ]

    for g in groups:
        emit_group(os.path.join(outdir, "groups", g.name + ".group"), g)
    for ring in hand_rings():
        emit_ring(os.path.join(outdir, "rings", ring.name + ".ring"), ring)
    for name in sorted(reps):
        emit_ring(os.path.join(outdir, "rings", name + ".ring"), reps[name])
    for f in functors:
        emit_functor(os.path.join(outdir, "functors", f["name"] + ".functor"), f)


if __name__ == "__main__":
    main()
