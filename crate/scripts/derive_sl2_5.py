#!/usr/bin/env python3
"""Derive permutation generators for SL(2,5) acting on the nonzero vectors of F_5^2.

Closes the two generators [[1,1],[0,1]] and [[0,4],[1,0]] under matrix
multiplication mod 5, checks that the closure is exactly the set of all 2x2
matrices of determinant 1 (found by brute force over all 625 matrices), and
writes the generators as image lists on the 24 nonzero vectors, numbered in
lexicographic order of (x, y).

Usage: python3 scripts/derive_sl2_5.py > crates/core/corpus/sl2_5.txt
"""

from itertools import product

P = 5
GENERATORS = [((1, 1), (0, 1)), ((0, 4), (1, 0))]


def mat_mul(a, b):
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(2)) % P for j in range(2))
        for i in range(2)
    )


def det(m):
    return (m[0][0] * m[1][1] - m[0][1] * m[1][0]) % P


def closure(gens):
    identity = ((1, 0), (0, 1))
    seen = {identity}
    frontier = [identity]
    while frontier:
        nxt = []
        for m in frontier:
            for g in gens:
                x = mat_mul(m, g)
                if x not in seen:
                    seen.add(x)
                    nxt.append(x)
        frontier = nxt
    return seen


def main():
    brute = {
        ((a, b), (c, d))
        for a, b, c, d in product(range(P), repeat=4)
        if det(((a, b), (c, d))) == 1
    }
    group = closure(GENERATORS)
    assert group == brute, "generators do not produce SL(2,5)"
    assert len(group) == 120
    center = [m for m in group if all(mat_mul(m, g) == mat_mul(g, m) for g in group)]
    assert len(center) == 2

    vectors = [v for v in product(range(P), repeat=2) if v != (0, 0)]
    index = {v: i for i, v in enumerate(vectors)}

    print("# SL(2,5) acting on the 24 nonzero vectors of F_5^2")
    print("# generated by scripts/derive_sl2_5.py; |G| = 120, |Z(G)| = 2")
    print(f"perm {len(vectors)}")
    for m in GENERATORS:
        images = []
        for x, y in vectors:
            image = ((m[0][0] * x + m[0][1] * y) % P, (m[1][0] * x + m[1][1] * y) % P)
            images.append(str(index[image]))
        print(" ".join(images))


if __name__ == "__main__":
    main()
