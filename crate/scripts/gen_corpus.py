#!/usr/bin/env python3
"""Regenerates the JSON corpus under data/ (groups, schemes, groupoids, involutions, algebras)."""
import itertools
import json
import os

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")


def dump(sub, name, obj):
    path = os.path.join(ROOT, sub, name)
    with open(path, "w") as f:
        json.dump(obj, f, separators=(",", ":"))
        f.write("\n")


def group_from_elements(elems, mul):
    idx = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    table = [[idx[mul(a, b)] for b in elems] for a in elems]
    ident = next(i for i in range(n) if all(table[i][j] == j for j in range(n)))
    inverse = [next(j for j in range(n) if table[i][j] == ident) for i in range(n)]
    return {"order": n, "table": table, "inverse": inverse}


def compose(p, q):
    return tuple(p[q[x]] for x in range(len(q)))


def perm_group(gens, degree):
    ident = tuple(range(degree))
    elems = [ident]
    frontier = [ident]
    seen = {ident}
    while frontier:
        nxt = []
        for e in frontier:
            for g in gens:
                h = compose(g, e)
                if h not in seen:
                    seen.add(h)
                    elems.append(h)
                    nxt.append(h)
        frontier = nxt
    return elems


def quaternion_group():
    # elements as (sign, unit) with unit in 1,i,j,k
    units = ["1", "i", "j", "k"]
    mult = {
        ("1", "1"): (1, "1"), ("1", "i"): (1, "i"), ("1", "j"): (1, "j"), ("1", "k"): (1, "k"),
        ("i", "1"): (1, "i"), ("i", "i"): (-1, "1"), ("i", "j"): (1, "k"), ("i", "k"): (-1, "j"),
        ("j", "1"): (1, "j"), ("j", "i"): (-1, "k"), ("j", "j"): (-1, "1"), ("j", "k"): (1, "i"),
        ("k", "1"): (1, "k"), ("k", "i"): (1, "j"), ("k", "j"): (-1, "i"), ("k", "k"): (-1, "1"),
    }
    elems = [(s, u) for u in units for s in (1, -1)]

    def mul(a, b):
        s, u = mult[(a[1], b[1])]
        return (a[0] * b[0] * s, u)

    return elems, mul


def main():
    for n in range(1, 9):
        elems = list(range(n))
        dump("groups", f"z{n}.json", group_from_elements(elems, lambda a, b, n=n: (a + b) % n))
    s3 = perm_group([(1, 0, 2), (1, 2, 0)], 3)
    dump("groups", "s3.json", group_from_elements(s3, compose))
    s4 = perm_group([(1, 0, 2, 3), (1, 2, 3, 0)], 4)
    dump("groups", "s4.json", group_from_elements(s4, compose))
    d4 = perm_group([(1, 2, 3, 0), (0, 3, 2, 1)], 4)
    dump("groups", "d4.json", group_from_elements(d4, compose))
    q8, qmul = quaternion_group()
    dump("groups", "q8.json", group_from_elements(q8, qmul))

    # involutive automorphisms
    for n in (3, 4, 5):
        dump("involutions", f"z{n}_inversion.json", {"perm": [(-a) % n for a in range(n)]})
    s3_idx = {e: i for i, e in enumerate(s3)}
    t = (1, 0, 2)
    conj = [s3_idx[compose(compose(t, e), t)] for e in s3]
    dump("involutions", "s3_conj_transposition.json", {"perm": conj})
    q_idx = {e: i for i, e in enumerate(q8)}
    x = (1, "i")
    xinv = (-1, "i")
    dump("involutions", "q8_conj_i.json", {"perm": [q_idx[qmul(qmul(x, e), xinv)] for e in q8]})

    # association schemes given by relation matrices
    def cycle_scheme(n):
        mats = []
        for d in range(n // 2 + 1):
            mats.append([[1 if min((a - b) % n, (b - a) % n) == d else 0 for b in range(n)] for a in range(n)])
        return mats

    dump("schemes", "c5.json", {"classes": 3, "matrices": cycle_scheme(5)})
    pairs = list(itertools.combinations(range(5), 2))
    def rel(a, b):
        if a == b:
            return 0
        return 1 if not set(a) & set(b) else 2
    pet = [[[1 if rel(a, b) == r else 0 for b in pairs] for a in pairs] for r in range(3)]
    dump("schemes", "petersen.json", {"classes": 3, "matrices": pet})
    # C5 intersection numbers with p[1][1][0] broken
    n = 3
    p = [[[0.0] * n for _ in range(n)] for _ in range(n)]
    mats = cycle_scheme(5)
    for i in range(n):
        for j in range(n):
            for k in range(n):
                xk, yk = next((a, b) for a in range(5) for b in range(5) if mats[k][a][b])
                p[i][j][k] = float(sum(mats[i][xk][z] * mats[j][z][yk] for z in range(5)))
    dump("schemes", "c5_p.json", {"classes": 3, "p": p})
    p[1][1][0] = -1.0
    dump("schemes", "broken.json", {"classes": 3, "p": p})

    # groupoids: arrows with src/tgt, compose a∘b defined when src(a) == tgt(b)
    def pair_groupoid(k):
        arrows = [(t, s) for t in range(k) for s in range(k)]  # (tgt, src)
        idx = {a: i for i, a in enumerate(arrows)}
        comp = []
        for a in arrows:
            for b in arrows:
                if a[1] == b[0]:
                    comp.append({"a": idx[a], "b": idx[b], "ab": idx[(a[0], b[1])]})
        return {"objects": k, "arrows": [{"src": s, "tgt": t} for (t, s) in arrows], "compose": comp}

    for k in range(1, 5):
        dump("groupoids", f"pair{k}.json", pair_groupoid(k))
    # disjoint union of two copies of Z/2 (objects 0 and 1)
    arrows = [{"src": 0, "tgt": 0}, {"src": 0, "tgt": 0}, {"src": 1, "tgt": 1}, {"src": 1, "tgt": 1}]
    comp = []
    for base in (0, 2):
        for a in range(2):
            for b in range(2):
                comp.append({"a": base + a, "b": base + b, "ab": base + (a + b) % 2})
    dump("groupoids", "z2_disjoint_z2.json", {"objects": 2, "arrows": arrows, "compose": comp})
    # one-object groupoid = Z/3
    comp = [{"a": a, "b": b, "ab": (a + b) % 3} for a in range(3) for b in range(3)]
    dump("groupoids", "z3_single.json", {"objects": 1, "arrows": [{"src": 0, "tgt": 0}] * 3, "compose": comp})

    # M2(C) in the matrix-unit basis e_ij -> index 2i+j, with two hand-built antipodes
    def m2_structure():
        s = []
        for i in range(2):
            for j in range(2):
                for l in range(2):
                    s.append({"i": 2 * i + j, "j": 2 * j + l, "k": 2 * i + l, "re": 1.0, "im": 0.0})
        return s

    def unit_vec(v):
        return [[x, 0.0] for x in v]

    star = [{"i": 2 * i + j, "k": 2 * j + i, "re": 1.0, "im": 0.0} for i in range(2) for j in range(2)]

    def antipode_from(mat_fn):
        entries = []
        for i in range(2):
            for j in range(2):
                a = [[0.0, 0.0], [0.0, 0.0]]
                a[i][j] = 1.0
                r = mat_fn(a)
                for p_ in range(2):
                    for q in range(2):
                        if abs(r[p_][q]) > 0:
                            entries.append({"i": 2 * i + j, "k": 2 * p_ + q, "re": r[p_][q], "im": 0.0})
        return entries

    def mm(a, b):
        return [[sum(a[r][t] * b[t][c] for t in range(2)) for c in range(2)] for r in range(2)]

    def tr(a):
        return [[a[c][r] for c in range(2)] for r in range(2)]

    v = [[0.0, 1.0], [-1.0, 0.0]]
    vinv = [[0.0, -1.0], [1.0, 0.0]]
    u = [[0.0, 0.5], [2.0, 0.0]]
    base = {"dim": 4, "unit": unit_vec([1, 0, 0, 1]), "structure": m2_structure(), "star": star}
    dump("algebras", "m2.json", base)
    dump("algebras", "m2_quaternionic.json", dict(base, antipode=antipode_from(lambda a: mm(mm(v, tr(a)), vinv))))
    dump("algebras", "m2_twisted.json", dict(base, antipode=antipode_from(lambda a: mm(mm(u, tr(a)), u))))
    # C[x]/(x^2) with x* = x: not a C*-algebra
    dump("algebras", "dual_numbers.json", {
        "dim": 2, "unit": unit_vec([1, 0]),
        "structure": [{"i": 0, "j": 0, "k": 0, "re": 1.0, "im": 0.0},
                      {"i": 0, "j": 1, "k": 1, "re": 1.0, "im": 0.0},
                      {"i": 1, "j": 0, "k": 1, "re": 1.0, "im": 0.0}],
        "star": [{"i": 0, "k": 0, "re": 1.0, "im": 0.0}, {"i": 1, "k": 1, "re": 1.0, "im": 0.0}],
    })

    # matrix coalgebra M2^c with the transpose anti-coalgebra map
    delta = []
    for i in range(2):
        for j in range(2):
            for k in range(2):
                delta.append({"i": 2 * i + j, "j": 2 * i + k, "k": 2 * k + j, "re": 1.0, "im": 0.0})
    dump("coalgebras", "m2c.json", {
        "dim": 4, "counit": unit_vec([1, 0, 0, 1]), "delta": delta, "star": star,
    })


if __name__ == "__main__":
    main()
