"""Breadth-first Hurwitz orbit of the standard factorization of the full twist
in B_3, computed on reduced Burau matrices (faithful on B_3).

Prints the number of factorizations first reached after 0, 1, 2, ... moves,
stopping once `budget` factorizations have been seen.

    python3 oracles/hurwitz_burau.py [budget]
"""
import sys

# Laurent polynomials in t: tuple of (exponent, coefficient), sorted, no zeros.


def padd(a, b):
    out = dict(a)
    for e, c in b:
        out[e] = out.get(e, 0) + c
    return tuple(sorted((e, c) for e, c in out.items() if c))


def pmul(a, b):
    out = {}
    for e1, c1 in a:
        for e2, c2 in b:
            out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
    return tuple(sorted((e, c) for e, c in out.items() if c))


def pneg(a):
    return tuple((e, -c) for e, c in a)


ZERO = ()
ONE = ((0, 1),)
T = ((1, 1),)
MT = ((1, -1),)


def mmul(x, y):
    return tuple(
        tuple(
            padd(pmul(x[i][0], y[0][j]), pmul(x[i][1], y[1][j])) for j in range(2)
        )
        for i in range(2)
    )


def minv(x):
    (a, b), (c, d) = x
    det = padd(pmul(a, d), pneg(pmul(b, c)))
    assert len(det) == 1 and abs(det[0][1]) == 1, det
    e, s = det[0]
    inv = ((-e, s),)  # 1/(s t^e) = s t^-e since s = ±1
    return (
        (pmul(d, inv), pneg(pmul(b, inv))),
        (pneg(pmul(c, inv)), pmul(a, inv)),
    )


S1 = ((MT, ONE), (ZERO, ONE))
S2 = ((ONE, ZERO), (T, MT))
GEN = {1: S1, 2: S2, -1: minv(S1), -2: minv(S2)}
IDENT = ((ONE, ZERO), (ZERO, ONE))


def word(letters):
    m = IDENT
    for l in letters:
        m = mmul(m, GEN[l])
    return m


def standard():
    # Δ² = (σ₁σ₂)³ with σ₂ = (σ₁σ₂)σ₁(σ₁σ₂)⁻¹
    s2 = word([1, 2, 1, -2, -1])
    assert s2 == S2
    return tuple([S1, s2] * 3)


def check_full_twist(f):
    prod = IDENT
    for m in f:
        prod = mmul(prod, m)
    assert prod == word([1, 2, 1, 1, 2, 1])


def moves(f):
    for i in range(len(f) - 1):
        a, b = f[i], f[i + 1]
        right = f[:i] + (mmul(mmul(a, b), minv(a)), a) + f[i + 2 :]
        left = f[:i] + (b, mmul(mmul(minv(b), a), b)) + f[i + 2 :]
        yield right
        yield left


def orbit_levels(budget):
    start = standard()
    check_full_twist(start)
    seen = {start}
    frontier = [start]
    levels = [1]
    truncated = False
    while frontier:
        new = []
        new_set = set()
        for f in frontier:
            for g in moves(f):
                if g not in seen and g not in new_set:
                    new_set.add(g)
                    new.append(g)
        if not new:
            break
        room = budget - len(seen)
        if len(new) > room:
            levels.append(room)
            truncated = True
            seen.update(new[:room])
            break
        levels.append(len(new))
        seen.update(new)
        frontier = new
    return levels, len(seen), truncated


if __name__ == "__main__":
    budget = int(sys.argv[1]) if len(sys.argv) > 1 else 100_000
    levels, size, truncated = orbit_levels(budget)
    print("levels", levels)
    print("size", size, "truncated", truncated)
