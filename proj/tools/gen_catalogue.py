#!/usr/bin/env python3
"""Generate the default finite-group catalogue (all groups of order <= 24).

Each group is built concretely (cyclic groups, semidirect products, matrix
groups), checked for order, and written as the regular permutation
representation of a small generating set. Isomorphism types within each
order are checked to be pairwise distinct by a battery of invariants.

Usage: gen_catalogue.py > data/groups_le_24.txt
"""

import itertools
import sys
from collections import Counter


class Group:
    def __init__(self, name, elements, mul):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        self.mul = mul
        self.order = len(self.elements)
        self.identity = next(e for e in self.elements
                             if all(mul(e, x) == x for x in self.elements))

    def power(self, x, k):
        r = self.identity
        for _ in range(k):
            r = self.mul(r, x)
        return r

    def elem_order(self, x):
        k, y = 1, x
        while y != self.identity:
            y = self.mul(y, x)
            k += 1
        return k

    def closure(self, gens):
        seen = {self.identity}
        frontier = [self.identity]
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return seen

    def generating_set(self):
        # greedy: repeatedly add the element enlarging the closure the most
        gens, current = [], {self.identity}
        while len(current) < self.order:
            best = max(self.elements,
                       key=lambda e: (len(self.closure(gens + [e])),
                                      -self.index[e]))
            gens.append(best)
            current = self.closure(gens)
        return gens


def cyclic(n):
    return Group(f"C{n}", range(n), lambda a, b: (a + b) % n)


def direct(g, h, name=None):
    els = [(x, y) for x in g.elements for y in h.elements]
    return Group(name or f"{g.name}x{h.name}", els,
                 lambda a, b: (g.mul(a[0], b[0]), h.mul(a[1], b[1])))


def semidirect(n, h, act, name):
    """n x| h where act(y, x) applies the automorphism of y in h to x in n."""
    els = [(x, y) for x in n.elements for y in h.elements]
    return Group(name, els,
                 lambda a, b: (n.mul(a[0], act(a[1], b[0])), h.mul(a[1], b[1])))


def cyclic_semidirect(m, k, r, name):
    """C_m x| C_k with the generator of C_k acting by x -> r*x."""
    assert pow(r, k, m) == 1 % m
    return semidirect(cyclic(m), cyclic(k),
                      lambda y, x: (pow(r, y, m) * x) % m, name)


def dicyclic(m):
    """<x, y | x^(2m), y^2 = x^m, y x y^-1 = x^-1>, order 4m."""
    n = 2 * m

    def mul(a, b):
        a1, e1 = a
        a2, e2 = b
        if e1 == 0:
            return ((a1 + a2) % n, e2)
        if e2 == 1:
            return ((a1 - a2 + m) % n, 0)
        return ((a1 - a2) % n, 1)

    return Group(f"Dic{4 * m}", [(a, e) for a in range(n) for e in (0, 1)], mul)


def perm_group(name, perms):
    def mul(a, b):  # apply a, then b
        return tuple(b[a[i]] for i in range(len(a)))
    return Group(name, perms, mul)


def symmetric(n):
    return perm_group(f"S{n}", list(itertools.permutations(range(n))))


def alternating(n):
    def even(p):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if p[i] > p[j])
        return inv % 2 == 0
    return perm_group(f"A{n}", [p for p in itertools.permutations(range(n)) if even(p)])


def sl23():
    mats = []
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3 == 1:
            mats.append((a, b, c, d))

    def mul(x, y):
        a, b, c, d = x
        e, f, g, h = y
        return ((a * e + b * g) % 3, (a * f + b * h) % 3,
                (c * e + d * g) % 3, (c * f + d * h) % 3)

    return Group("SL(2,3)", mats, mul)


def build():
    c = cyclic
    groups = [c(1), c(2), c(3), c(4), direct(c(2), c(2)), c(5), c(6), symmetric(3), c(7)]
    d8 = cyclic_semidirect(4, 2, 3, "D8")
    q8 = dicyclic(2)
    q8.name = "Q8"
    groups += [c(8), direct(c(4), c(2)), direct(direct(c(2), c(2)), c(2), "C2xC2xC2"), d8, q8]
    groups += [c(9), direct(c(3), c(3))]
    groups += [c(10), cyclic_semidirect(5, 2, 4, "D10")]
    groups += [c(11)]
    dic12 = cyclic_semidirect(3, 4, 2, "Dic12")
    a4 = alternating(4)
    s3 = symmetric(3)
    groups += [c(12), direct(c(6), c(2)), cyclic_semidirect(6, 2, 5, "D12"), a4, dic12]
    groups += [c(13)]
    groups += [c(14), cyclic_semidirect(7, 2, 6, "D14")]
    groups += [c(15)]

    c4c2 = direct(c(4), c(2))
    g16_3 = semidirect(c4c2, c(2),
                       lambda y, x: x if y == 0 else (x[0], (x[0] + x[1]) % 2),
                       "(C4xC2):C2")
    pauli = semidirect(c4c2, c(2),
                       lambda y, x: x if y == 0 else ((x[0] + 2 * x[1]) % 4, x[1]),
                       "C4oD8")
    q16 = dicyclic(4)
    q16.name = "Q16"
    groups += [
        c(16), direct(c(4), c(4)), direct(c(8), c(2)),
        direct(direct(c(4), c(2)), c(2), "C4xC2xC2"),
        direct(direct(c(2), c(2)), direct(c(2), c(2)), "C2xC2xC2xC2"),
        cyclic_semidirect(8, 2, 7, "D16"), q16,
        cyclic_semidirect(8, 2, 3, "SD16"), cyclic_semidirect(8, 2, 5, "M16"),
        direct(c(2), d8, "C2xD8"), direct(c(2), q8, "C2xQ8"),
        cyclic_semidirect(4, 4, 3, "C4:C4"), g16_3, pauli,
    ]
    groups += [c(17)]
    c3c3 = direct(c(3), c(3))
    groups += [
        c(18), direct(c(6), c(3)), cyclic_semidirect(9, 2, 8, "D18"),
        direct(c(3), s3, "C3xS3"),
        semidirect(c3c3, c(2),
                   lambda y, x: x if y == 0 else ((-x[0]) % 3, (-x[1]) % 3),
                   "(C3xC3):C2"),
    ]
    groups += [c(19)]
    groups += [
        c(20), direct(c(10), c(2)), cyclic_semidirect(10, 2, 9, "D20"),
        cyclic_semidirect(5, 4, 4, "Dic20"), cyclic_semidirect(5, 4, 2, "F20"),
    ]
    groups += [c(21), cyclic_semidirect(7, 3, 2, "C7:C3")]
    groups += [c(22), cyclic_semidirect(11, 2, 10, "D22")]
    groups += [c(23)]

    # C3 x| D8 with the Klein four subgroup <r^2, s> acting trivially and r inverting
    c3_d8 = semidirect(c(3), d8,
                       lambda y, x: x if y[0] % 2 == 0 else (-x) % 3, "C3:D8")
    dic24 = dicyclic(6)
    groups += [
        cyclic_semidirect(3, 8, 2, "C3:C8"), c(24), sl23(), dic24,
        direct(c(4), s3, "C4xS3"), cyclic_semidirect(12, 2, 11, "D24"),
        direct(c(2), dic12, "C2xDic12"), c3_d8, direct(c(12), c(2)),
        direct(c(3), d8, "C3xD8"), direct(c(3), q8, "C3xQ8"), symmetric(4),
        direct(c(2), a4, "C2xA4"), direct(direct(c(2), c(2)), s3, "C2xC2xS3"),
        direct(direct(c(2), c(2)), c(6), "C2xC2xC6"),
    ]
    return groups


def is_group(g):
    for a in g.elements:
        for b in g.elements:
            if g.mul(a, b) not in g.index:
                return False
    # associativity on a sample is enough here: all constructions are standard
    for a, b, x in itertools.product(g.elements[:6], repeat=3):
        if g.mul(g.mul(a, b), x) != g.mul(a, g.mul(b, x)):
            return False
    return True


def invariant(g):
    els = g.elements
    orders = {e: g.elem_order(e) for e in els}
    cent = {e: sum(1 for x in els if g.mul(e, x) == g.mul(x, e)) for e in els}
    roots = Counter(g.mul(x, x) for x in els)
    per_elem = Counter((orders[e], cent[e], roots[e]) for e in els)
    commuting_pairs = sum(cent.values())
    comms = set()
    inv = {e: next(x for x in els if g.mul(e, x) == g.identity) for e in els}
    for a in els:
        for b in els:
            comms.add(g.mul(g.mul(inv[a], inv[b]), g.mul(a, b)))
    derived = g.closure(list(comms))
    return (g.order, tuple(sorted(per_elem.items())), commuting_pairs, len(derived))


def regular_generators(g):
    gens = g.generating_set()
    perms = []
    for s in gens:
        # right regular action: x -> x*s, points 1..|G|
        perms.append([g.index[g.mul(x, s)] for x in g.elements])
    return perms


def cycles(perm):
    seen, out = set(), []
    for start in range(len(perm)):
        if start in seen or perm[start] == start:
            continue
        cyc, x = [], start
        while x not in seen:
            seen.add(x)
            cyc.append(x + 1)
            x = perm[x]
        out.append("(" + " ".join(map(str, cyc)) + ")")
    return "".join(out) if out else "()"


EXPECTED_COUNTS = [1, 1, 1, 2, 1, 2, 1, 5, 2, 2, 1, 5, 1, 2, 1, 14, 1, 5, 1, 5, 2, 2, 1, 15]


def main():
    groups = build()
    by_order = Counter(g.order for g in groups)
    for n, want in enumerate(EXPECTED_COUNTS, start=1):
        if by_order[n] != want:
            sys.exit(f"order {n}: built {by_order[n]} groups, expected {want}")
    names = [g.name for g in groups]
    if len(set(names)) != len(names):
        sys.exit("duplicate group names")
    seen = {}
    for g in groups:
        if not is_group(g):
            sys.exit(f"{g.name} is not closed/associative")
        key = invariant(g)
        if key in seen:
            sys.exit(f"{g.name} and {seen[key]} share all invariants")
        seen[key] = g.name

    print("# All groups of order at most 24, one per isomorphism type.")
    print("# Regular permutation representation on a small generating set.")
    print("# Format: name; degree; perm, perm, ...  (disjoint-cycle notation)")
    for g in groups:
        perms = regular_generators(g) if g.order > 1 else []
        print(f"{g.name}; {g.order}; " + ", ".join(cycles(p) for p in perms))


if __name__ == "__main__":
    main()
