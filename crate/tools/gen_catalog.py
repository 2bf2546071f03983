#!/usr/bin/env python3
"""Generate data/groups.cat and data/families.json.

Builds every isomorphism class of finite groups of order 2..24 from explicit
constructions (cyclic, dihedral, dicyclic, semidirect products, matrix groups),
verifies pairwise non-isomorphism and the per-order census, realizes each group
as a permutation group, and writes the catalog.  Family fixtures are written
with their elements mapped into the catalog realization, so the Rust side never
has to solve presentations.

Run from the repository root:  python3 tools/gen_catalog.py
"""

import json
import os
import sys
from fractions import Fraction
from itertools import product

# ---------------------------------------------------------------------------
# Abstract finite groups
# ---------------------------------------------------------------------------


class FinGroup:
    """A finite group given by an element list and a multiplication function.

    Elements must be hashable.  `action` optionally gives a faithful action on
    points 0..degree-1 (used for a small-degree permutation realization);
    otherwise the left regular representation is used.
    """

    def __init__(self, name, elements, mult, one, gens, action=None, degree=None):
        self.name = name
        self.elements = list(elements)
        self.mult = mult
        self.one = one
        self.gens = list(gens)
        self.action = action
        self.degree = degree
        self.index = {e: i for i, e in enumerate(self.elements)}
        assert len(self.index) == len(self.elements), name
        assert one in self.index, name
        got = closure(self.gens, mult, one)
        assert len(got) == len(self.elements), (
            f"{name}: generators give {len(got)} of {len(self.elements)} elements"
        )

    @property
    def order(self):
        return len(self.elements)

    def power(self, g, k):
        r = self.one
        for _ in range(k):
            r = self.mult(r, g)
        return r

    def inv(self, g):
        h = g
        while self.mult(h, g) != self.one:
            h = self.mult(h, g)
        return h

    def elt_order(self, g):
        k, h = 1, g
        while h != self.one:
            h = self.mult(h, g)
            k += 1
        return k

    def order_stats(self):
        stats = {}
        for g in self.elements:
            o = self.elt_order(g)
            stats[o] = stats.get(o, 0) + 1
        return tuple(sorted(stats.items()))

    def class_sizes(self):
        seen = set()
        sizes = []
        for g in self.elements:
            if g in seen:
                continue
            cls = {self.mult(self.mult(x, g), self.inv(x)) for x in self.elements}
            seen |= cls
            sizes.append(len(cls))
        return tuple(sorted(sizes))

    def center_order(self):
        return sum(
            1
            for g in self.elements
            if all(self.mult(g, x) == self.mult(x, g) for x in self.elements)
        )

    def invariants(self):
        return (self.order, self.order_stats(), self.class_sizes(), self.center_order())

    def word(self, names, expr):
        """Evaluate e.g. 'g1*g2^3' over named elements."""
        result = self.one
        for factor in expr.split("*"):
            factor = factor.strip()
            if "^" in factor:
                base, exp = factor.split("^")
                val = self.power(names[base.strip()], int(exp))
            else:
                val = names[factor]
            result = self.mult(result, val)
        return result


def closure(gens, mult, one):
    seen = {one}
    frontier = [one]
    while frontier:
        nxt = []
        for x in frontier:
            for g in gens:
                y = mult(x, g)
                if y not in seen:
                    seen.add(y)
                    nxt.append(y)
        frontier = nxt
    return seen


# -- constructions ----------------------------------------------------------


def cyclic(n, name=None):
    mult = lambda a, b: (a + b) % n
    return FinGroup(
        name or f"Z/{n}",
        range(n),
        mult,
        0,
        [1] if n > 1 else [],
        action=lambda g, p: (p + g) % n,
        degree=n,
    )


def direct(a, b, name=None):
    mult = lambda x, y: (a.mult(x[0], y[0]), b.mult(x[1], y[1]))
    gens = [(g, b.one) for g in a.gens] + [(a.one, g) for g in b.gens]
    action = None
    degree = None
    if a.action and b.action:
        da = a.degree

        def action(g, p):
            if p < da:
                return a.action(g[0], p)
            return da + b.action(g[1], p - da)

        degree = a.degree + b.degree
    return FinGroup(
        name or f"{a.name}x{b.name}",
        product(a.elements, b.elements),
        mult,
        (a.one, b.one),
        gens,
        action=action,
        degree=degree,
    )


def semidirect(n_grp, h_grp, phi, name):
    """phi: h-element -> (n-element -> n-element) automorphism of N."""

    def mult(x, y):
        return (n_grp.mult(x[0], phi(x[1])(y[0])), h_grp.mult(x[1], y[1]))

    gens = [(g, h_grp.one) for g in n_grp.gens] + [(n_grp.one, g) for g in h_grp.gens]
    return FinGroup(
        name, product(n_grp.elements, h_grp.elements), mult, (n_grp.one, h_grp.one), gens
    )


def dihedral(n, name=None):
    # (rotation, flip); flip conjugates rotation to its inverse.
    def mult(x, y):
        r1, f1 = x
        r2, f2 = y
        if f1 == 0:
            return ((r1 + r2) % n, f2)
        return ((r1 - r2) % n, 1 - f2)

    def action(g, p):
        r, f = g
        return (r + p) % n if f == 0 else (r - p) % n

    return FinGroup(
        name or f"D{n}",
        product(range(n), range(2)),
        mult,
        (0, 0),
        [(1, 0), (0, 1)],
        action=action,
        degree=n,
    )


def dicyclic(n, name=None):
    # <a,b | a^(2n)=1, b^2=a^n, b a b^-1 = a^-1>, order 4n; elements a^i b^j.
    m = 2 * n

    def mult(x, y):
        i1, j1 = x
        i2, j2 = y
        if j1 == 0:
            i, j = (i1 + i2) % m, j2
        else:
            i, j = (i1 - i2) % m, 1 - j2
            if j2 == 1:  # b^2 = a^n
                i = (i + n) % m
        return (i, j)

    return FinGroup(
        name or f"Dic{n}", product(range(m), range(2)), mult, (0, 0), [(1, 0), (0, 1)]
    )


def perm_group(gens, degree, name):
    """Subgroup of S_degree generated by permutations given as image tuples.

    Composition convention: (a*b)(x) = a(b(x)), i.e. b acts first.
    """

    def mult(a, b):
        return tuple(a[b[i]] for i in range(degree))

    one = tuple(range(degree))
    elements = sorted(closure(gens, mult, one))
    return FinGroup(
        name, elements, mult, one, gens, action=lambda g, p: g[p], degree=degree
    )


def cycles_to_perm(degree, cycles):
    img = list(range(degree))
    for cyc in cycles:
        for i, p in enumerate(cyc):
            img[p - 1] = cyc[(i + 1) % len(cyc)] - 1
    return tuple(img)


def matrix_group(gens, mult, one, name):
    elements = sorted(closure(gens, mult, one))
    return FinGroup(name, elements, mult, one, gens)


def sl23():
    def mult(a, b):
        (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
        return (
            (a11 * b11 + a12 * b21) % 3,
            (a11 * b12 + a12 * b22) % 3,
            (a21 * b11 + a22 * b21) % 3,
            (a21 * b12 + a22 * b22) % 3,
        )

    return matrix_group([(1, 1, 0, 1), (0, 2, 1, 0)], mult, (1, 0, 0, 1), "SL(2,3)")


def pauli16():
    # 2x2 matrices over Z[i] generated by X, Z, iI; entries as Gaussian ints.
    def cm(a, b):
        return (a[0] * b[0] - a[1] * b[1], a[0] * b[1] + a[1] * b[0])

    def ca(a, b):
        return (a[0] + b[0], a[1] + b[1])

    def mult(a, b):
        (a11, a12, a21, a22), (b11, b12, b21, b22) = a, b
        return (
            ca(cm(a11, b11), cm(a12, b21)),
            ca(cm(a11, b12), cm(a12, b22)),
            ca(cm(a21, b11), cm(a22, b21)),
            ca(cm(a21, b12), cm(a22, b22)),
        )

    z0, z1, zi = (0, 0), (1, 0), (0, 1)
    x_mat = (z0, z1, z1, z0)
    z_mat = (z1, z0, z0, (-1, 0))
    ii_mat = (zi, z0, z0, zi)
    one = (z1, z0, z0, z1)
    return matrix_group([x_mat, z_mat, ii_mat], mult, one, "D4oZ/4")


# ---------------------------------------------------------------------------
# Isomorphism testing
# ---------------------------------------------------------------------------


def generating_sequence(g):
    gens = []
    have = {g.one}
    for e in g.elements:
        if e not in have:
            gens.append(e)
            have = closure(gens, g.mult, g.one)
            if len(have) == g.order:
                break
    return gens


def find_isomorphism(a, b):
    """Return a dict a-element -> b-element, or None."""
    if a.invariants() != b.invariants():
        return None
    gens = generating_sequence(a)
    orders = [a.elt_order(g) for g in gens]
    pools = [[e for e in b.elements if b.elt_order(e) == o] for o in orders]

    # Word table: every element of A as (parent, generator-index).
    word = {a.one: None}
    order_list = [a.one]
    frontier = [a.one]
    while frontier:
        nxt = []
        for x in frontier:
            for gi, g in enumerate(gens):
                y = a.mult(x, g)
                if y not in word:
                    word[y] = (x, gi)
                    order_list.append(y)
                    nxt.append(y)
        frontier = nxt
    assert len(order_list) == a.order

    for images in product(*pools):
        phi = {a.one: b.one}
        for y in order_list[1:]:
            x, gi = word[y]
            phi[y] = b.mult(phi[x], images[gi])
        if len(set(phi.values())) != a.order:
            continue
        ok = all(
            phi[a.mult(x, y)] == b.mult(phi[x], phi[y])
            for x in a.elements
            for y in a.elements
        )
        if ok:
            return phi
    return None


# ---------------------------------------------------------------------------
# The catalog: constructions per order
# ---------------------------------------------------------------------------

CENSUS = {
    2: 1, 3: 1, 4: 2, 5: 1, 6: 2, 7: 1, 8: 5, 9: 2, 10: 2, 11: 1, 12: 5,
    13: 1, 14: 2, 15: 1, 16: 14, 17: 1, 18: 5, 19: 1, 20: 5, 21: 2, 22: 2,
    23: 1, 24: 15,
}


def inversion_sd(n_grp, h_grp, name):
    def phi(h):
        if h == h_grp.one:
            return lambda x: x
        # any non-identity of H=Z/2 inverts N; for larger H use parity of h
        return lambda x: n_grp.inv(x)

    return semidirect(n_grp, h_grp, phi, name)


def cyc_sd(m, n, k, name):
    """Z/m semidirect Z/n, generator of Z/n acting by x -> k*x."""
    assert pow(k, n, m) == 1 % m
    nn = cyclic(m)
    hh = cyclic(n)

    def phi(h):
        kk = pow(k, h, m)
        return lambda x: (kk * x) % m

    return semidirect(nn, hh, phi, name)


def transvection_sd_16():
    # (Z/4 x Z/2) : Z/2 with non-central Z/4: the involution sends the
    # order-4 generator a to a*b and fixes b.
    nn = direct(cyclic(4), cyclic(2))
    hh = cyclic(2)

    def phi(h):
        if h == 0:
            return lambda x: x
        return lambda x: (x[0], (x[1] + x[0]) % 2)

    return semidirect(nn, hh, phi, "(Z/4xZ/2):Z/2b")


def group34():
    # <g1,g2,g3 | g1^2=g2^2=g3^4=1, [g2,g3]=1, g1 g2 g1 = g2 g3^2, g1 g3 g1 = g3>
    # N = <g3> x <g2> = Z/4 x Z/2, H = <g1> = Z/2.
    nn = direct(cyclic(4), cyclic(2))
    hh = cyclic(2)

    def phi(h):
        if h == 0:
            return lambda x: x
        return lambda x: ((x[0] + 2 * x[1]) % 4, x[1])

    return semidirect(nn, hh, phi, "(Z/4xZ/2):Z/2")


def c3_sd_d4(kernel, name):
    """Z/3 semidirect D4, reflections outside `kernel` invert."""
    nn = cyclic(3)
    hh = dihedral(4)

    def in_kernel(h):
        r, f = h
        if kernel == "C4":
            return f == 0
        # kernel <r^2, s>: elements with r+f even ... explicit: {(0,0),(2,0),(0,1),(2,1)}
        return r % 2 == 0

    def phi(h):
        if in_kernel(h):
            return lambda x: x
        return lambda x: (-x) % 3

    return semidirect(nn, hh, phi, name)


def c3_sd_q8():
    nn = cyclic(3)
    hh = dicyclic(2, "Q8")

    def phi(h):
        # kernel <a> (the i-cyclic subgroup): elements (i, 0)
        if h[1] == 0:
            return lambda x: x
        return lambda x: (-x) % 3

    return semidirect(nn, hh, phi, "Z/3:Q8")


def s4():
    return perm_group(
        [cycles_to_perm(4, [(1, 2)]), cycles_to_perm(4, [(1, 2, 3, 4)])], 4, "S4"
    )


def a4():
    return perm_group(
        [cycles_to_perm(4, [(1, 2, 3)]), cycles_to_perm(4, [(1, 2), (3, 4)])], 4, "A4"
    )


def s3():
    return perm_group(
        [cycles_to_perm(3, [(1, 2)]), cycles_to_perm(3, [(1, 2, 3)])], 3, "S3"
    )


def abelian(factors, name=None):
    g = cyclic(factors[0])
    for f in factors[1:]:
        g = direct(g, cyclic(f))
    if name:
        g.name = name
    return g


def constructions():
    """Pool of constructions per order.  Fixture groups must appear first in
    their order so they survive dedup as the catalog representative."""
    pool = {n: [] for n in CENSUS}
    pool[2] = [cyclic(2)]
    pool[3] = [cyclic(3)]
    pool[4] = [cyclic(4), abelian([2, 2], "Z/2xZ/2")]
    pool[5] = [cyclic(5)]
    pool[6] = [cyclic(6), s3()]
    pool[7] = [cyclic(7)]
    pool[8] = [
        dicyclic(2, "Q8"),
        abelian([2, 4], "Z/2xZ/4"),
        dihedral(4, "D4"),
        cyclic(8),
        abelian([2, 2, 2], "Z/2xZ/2xZ/2"),
    ]
    pool[9] = [cyclic(9), abelian([3, 3], "Z/3xZ/3")]
    pool[10] = [cyclic(10), dihedral(5, "D5")]
    pool[11] = [cyclic(11)]
    pool[12] = [
        a4(),
        cyclic(12),
        abelian([2, 6], "Z/2xZ/6"),
        dihedral(6, "D6"),
        dicyclic(3, "Dic3"),
    ]
    pool[13] = [cyclic(13)]
    pool[14] = [cyclic(14), dihedral(7, "D7")]
    pool[15] = [cyclic(15)]
    pool[16] = [
        group34(),
        cyclic(16),
        abelian([2, 8], "Z/2xZ/8"),
        abelian([4, 4], "Z/4xZ/4"),
        abelian([2, 2, 4], "Z/2xZ/2xZ/4"),
        abelian([2, 2, 2, 2], "Z/2xZ/2xZ/2xZ/2"),
        dihedral(8, "D8"),
        cyc_sd(8, 2, 3, "SD16"),
        cyc_sd(8, 2, 5, "M4(2)"),
        dicyclic(4, "Q16"),
        inversion_sd(cyclic(4), cyclic(4), "Z/4:Z/4"),
        transvection_sd_16(),
        direct(dihedral(4, "D4"), cyclic(2), "D4xZ/2"),
        direct(dicyclic(2, "Q8"), cyclic(2), "Q8xZ/2"),
        pauli16(),
    ]
    pool[17] = [cyclic(17)]
    pool[18] = [
        cyclic(18),
        abelian([3, 6], "Z/3xZ/6"),
        dihedral(9, "D9"),
        direct(cyclic(3), s3(), "Z/3xS3"),
        inversion_sd(abelian([3, 3]), cyclic(2), "(Z/3xZ/3):Z/2"),
    ]
    pool[19] = [cyclic(19)]
    pool[20] = [
        cyclic(20),
        abelian([2, 10], "Z/2xZ/10"),
        dihedral(10, "D10"),
        dicyclic(5, "Dic5"),
        cyc_sd(5, 4, 2, "Z/5:Z/4"),
    ]
    pool[21] = [cyclic(21), cyc_sd(7, 3, 2, "Z/7:Z/3")]
    pool[22] = [cyclic(22), dihedral(11, "D11")]
    pool[23] = [cyclic(23)]
    pool[24] = [
        s4(),
        cyclic(24),
        abelian([2, 12], "Z/2xZ/12"),
        abelian([2, 2, 6], "Z/2xZ/2xZ/6"),
        cyc_sd(3, 8, 2, "Z/3:Z/8"),
        sl23(),
        dicyclic(6, "Dic6"),
        direct(cyclic(4), s3(), "Z/4xS3"),
        dihedral(12, "D12"),
        direct(cyclic(2), dicyclic(3, "Dic3"), "Z/2xDic3"),
        direct(cyclic(3), dihedral(4, "D4"), "Z/3xD4"),
        direct(cyclic(3), dicyclic(2, "Q8"), "Z/3xQ8"),
        direct(cyclic(2), a4(), "Z/2xA4"),
        direct(abelian([2, 2]), s3(), "Z/2xZ/2xS3"),
        c3_sd_d4("C4", "Z/3:D4(a)"),
        c3_sd_d4("K", "Z/3:D4(b)"),
        c3_sd_q8(),
    ]
    return pool


# ---------------------------------------------------------------------------
# Permutation realization and output
# ---------------------------------------------------------------------------


def realize(g):
    """Return (degree, {element: image tuple}) for a faithful permutation rep."""
    if g.action is not None:
        deg = g.degree
        rep = {e: tuple(g.action(e, p) for p in range(deg)) for e in g.elements}
    else:
        # left regular representation on the element list
        deg = g.order
        rep = {
            e: tuple(g.index[g.mult(e, x)] for x in g.elements) for e in g.elements
        }
    imgs = set(rep.values())
    assert len(imgs) == g.order, f"{g.name}: representation not faithful"
    return deg, rep


def perm_to_cycles(img):
    n = len(img)
    seen = [False] * n
    out = []
    for i in range(n):
        if seen[i] or img[i] == i:
            seen[i] = True
            continue
        cyc = [i]
        seen[i] = True
        j = img[i]
        while j != i:
            cyc.append(j)
            seen[j] = True
            j = img[j]
        out.append("(" + ",".join(str(p + 1) for p in cyc) + ")")
    return "".join(out) if out else "()"


def rh_genus(n, base_genus, orders):
    val = 2 * n * (base_genus - 1) + sum(n - Fraction(n, m) for m in orders)
    g = Fraction(val + 2, 2)
    assert g.denominator == 1 and g >= 0, (n, base_genus, orders, g)
    return int(g)


# ---------------------------------------------------------------------------
# Fixtures
# ---------------------------------------------------------------------------


def build_fixtures(catalog):
    """catalog: {order: [FinGroup]} after dedup; fixture groups are the reps."""

    def find(order, name):
        for i, g in enumerate(catalog[order]):
            if g.name == name:
                return i + 1, g
        raise KeyError((order, name))

    fixtures = []

    def add(label, aliases, node, order, gname, base_genus, named_exprs,
            hyperbolic, branch, expect, notes=""):
        idx, g = find(order, gname)
        deg, rep = realize(g)
        names = {k: g.word({}, v) if False else None for k, v in []}
        # resolve named elements: values are expressions over earlier names
        names = {}
        for key, expr in named_exprs:
            names[key] = g.word(names, expr) if isinstance(expr, str) else expr(g)
        hyp = [
            (g.word(names, wa), g.word(names, wb)) for wa, wb in hyperbolic
        ]
        bra = [g.word(names, w) for w in branch]
        # verify the surface relation and generation
        prod = g.one
        for x in bra:
            prod = g.mult(prod, x)
        for (alpha, beta) in hyp:
            comm = g.mult(
                g.mult(alpha, beta), g.mult(g.inv(alpha), g.inv(beta))
            )
            prod = g.mult(prod, comm)
        assert prod == g.one, f"{label}: surface relation fails"
        gen_set = bra + [e for ab in hyp for e in ab]
        assert len(closure(gen_set, g.mult, g.one)) == g.order, (
            f"{label}: vector does not generate"
        )
        orders = [g.elt_order(x) for x in bra]
        assert sorted(orders) == expect["signature"], (
            f"{label}: signature {sorted(orders)} != {expect['signature']}"
        )
        genus = rh_genus(g.order, base_genus, orders)
        assert genus == expect["genus"], f"{label}: genus {genus}"
        fixtures.append(
            {
                "label": label,
                "aliases": aliases,
                "node": node,
                "group": {"order": order, "index": idx, "name": g.name},
                "base_genus": base_genus,
                "hyperbolic": [
                    [perm_to_cycles(rep[a]), perm_to_cycles(rep[b])] for a, b in hyp
                ],
                "branch": [perm_to_cycles(rep[x]) for x in bra],
                "named_elements": {
                    k: perm_to_cycles(rep[v]) for k, v in names.items()
                },
                "expect": expect,
                "notes": notes,
            }
        )

    # ---- the six families over elliptic base -------------------------------
    add(
        "(1e)", ["(26)"], "(1e)=(26)", 2, "Z/2", 1,
        [("u", lambda g: 1)],
        [("u^0", "u^0")],
        ["u", "u"],
        {
            "signature": [2, 2], "genus": 2, "r": 2, "n_delta": 2,
            "dim_family": 2, "star": True,
            "h0_nontrivial": [[1, 1]],
            "blocks": [[1, 1, True], [1, 1, True]],
        },
        "Same subvariety as family (26) of the genus-0 tables.",
    )
    add(
        "(2e)", [], "(2e)", 2, "Z/2", 1,
        [("u", lambda g: 1)],
        [("u^0", "u^0")],
        ["u", "u", "u", "u"],
        {
            "signature": [2, 2, 2, 2], "genus": 3, "r": 4, "n_delta": 4,
            "dim_family": 4, "star": True,
            "h0_nontrivial": [[1, 2]],
            "blocks": [[1, 1, True], [2, 1, True]],
        },
        "The bielliptic locus in genus 3.",
    )
    add(
        "(3e)", [], "(31)=(3e)", 3, "Z/3", 1,
        [("u", lambda g: 1)],
        [("u^0", "u^0")],
        ["u", "u^2"],
        {
            "signature": [3, 3], "genus": 3, "r": 2, "n_delta": 2,
            "dim_family": 2, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1]],
            "blocks": [[1, 1, True], [2, 1, True]],
        },
        "Same subvariety as family (31).",
    )
    add(
        "(4e)", [], "(32)=(4e)", 4, "Z/4", 1,
        [("u", lambda g: 1)],
        [("u", "u^0")],
        ["u^2", "u^2"],
        {
            "signature": [2, 2], "genus": 3, "r": 2, "n_delta": 2,
            "dim_family": 2, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1]],
            "blocks": [[1, 1, True], [2, 1, True]],
        },
        "Same subvariety as family (32).",
    )
    add(
        "(5e)", [], "(7)=(23)=(34)=(5e)", 8, "Q8", 1,
        [("i", lambda g: (1, 0)), ("j", lambda g: (0, 1))],
        [("i", "j")],
        ["i^2"],
        {
            "signature": [2], "genus": 3, "r": 1, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[2, 1]],
            "blocks": [[1, 1, True], [2, 1, False]],
        },
        "Prym map constant; its image is the square of the elliptic curve "
        "y^2 = x^3 - x (lattice Z + iZ).",
    )
    add(
        "(6e)", [], "(6e)", 3, "Z/3", 1,
        [("u", lambda g: 1)],
        [("u^0", "u^0")],
        ["u", "u", "u"],
        {
            "signature": [3, 3, 3], "genus": 4, "r": 3, "n_delta": 3,
            "dim_family": 3, "star": True,
            "h0_nontrivial": [[1, 2], [1, 1]],
            "blocks": [[1, 1, True], [3, 1, True]],
        },
    )

    # ---- the genus-0 realizations analysed family by family ----------------
    add(
        "(34)", ["(7)", "(23)"], "(7)=(23)=(34)=(5e)", 16, "(Z/4xZ/2):Z/2", 0,
        [
            ("g3", lambda g: (((1, 0), 0))),
            ("g2", lambda g: (((0, 1), 0))),
            ("g1", lambda g: (((0, 0), 1))),
        ],
        [],
        ["g1", "g1*g2*g3^3", "g2*g3^2", "g3^3"],
        {
            "signature": [2, 2, 2, 4], "genus": 3, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[1, 1], [2, 1]],
            "blocks": [[1, 1, True], [1, 2, False]],
        },
        "Same family as (5e); the elliptic quotient moves, the Prym is fixed.",
    )
    add(
        "(33)", ["(35)"], "(33)=(35)", 24, "S4", 0,
        [
            ("g1", lambda g: cycles_to_perm(4, [(1, 2)])),
            ("g2", lambda g: cycles_to_perm(4, [(1, 2, 3)])),
            ("g3", lambda g: cycles_to_perm(4, [(1, 3), (2, 4)])),
            ("g4", lambda g: cycles_to_perm(4, [(1, 4), (2, 3)])),
        ],
        [],
        ["g1*g2^2", "g3*g4", "g1", "g2^2*g4"],
        {
            "signature": [2, 2, 2, 3], "genus": 3, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[3, 1]],
            "blocks": [[1, 3, True]],
        },
    )
    add(
        "(9)", [], "(9)", 6, "Z/6", 0,
        [("g1", lambda g: 3), ("g2", lambda g: 2)],
        [],
        ["g1", "g2^2", "g2^2", "g1*g2^2"],
        {
            "signature": [2, 3, 3, 6], "genus": 3, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1], [1, 1]],
            "blocks": [[1, 1, False], [2, 1, True]],
        },
    )
    add(
        "(22)", [], "(22)", 8, "Z/2xZ/4", 0,
        [
            ("g1", lambda g: (0, 1)),
            ("g2", lambda g: (1, 0)),
            ("g3", lambda g: (0, 2)),
        ],
        [],
        ["g3", "g2*g3", "g1*g2", "g1*g3"],
        {
            "signature": [2, 2, 4, 4], "genus": 3, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1], [1, 1]],
            "blocks": [[1, 1, False], [2, 1, True]],
        },
        "JC is isogenous to E x F^2 through the quotient family (4)=(29).",
    )
    add(
        "(31)", [], "(31)=(3e)", 6, "S3", 0,
        [
            ("g1", lambda g: cycles_to_perm(3, [(1, 2)])),
            ("g2", lambda g: cycles_to_perm(3, [(1, 2, 3)])),
        ],
        [],
        ["g1*g2^2", "g1*g2", "g1", "g1*g2^2", "g2^2"],
        {
            "signature": [2, 2, 2, 2, 3], "genus": 3, "r": 5, "n_delta": 2,
            "dim_family": 2, "star": True,
            "h0_nontrivial": [[1, 1], [2, 1]],
            "blocks": [[1, 1, True], [1, 2, True]],
        },
    )
    add(
        "(32)", [], "(32)=(4e)", 8, "D4", 0,
        [("x", lambda g: (1, 0)), ("y", lambda g: (0, 1))],
        [],
        ["x^3*y", "y", "x^2", "y", "x*y"],
        {
            "signature": [2, 2, 2, 2, 2], "genus": 3, "r": 5, "n_delta": 2,
            "dim_family": 2, "star": True,
            "h0_nontrivial": [[1, 1], [2, 1]],
            "blocks": [[1, 1, True], [1, 2, True]],
        },
    )
    add(
        "(27)", [], "(27)", 4, "Z/2xZ/2", 0,
        [("g1", lambda g: (1, 0)), ("g2", lambda g: (0, 1))],
        [],
        ["g2", "g1*g2", "g1", "g1*g2", "g1", "g2"],
        {
            "signature": [2, 2, 2, 2, 2, 2], "genus": 3, "r": 6, "n_delta": 3,
            "dim_family": 3, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1], [1, 1]],
            "blocks": [[1, 1, True], [1, 1, True], [1, 1, True]],
        },
    )
    add(
        "(12)", [], "(12)", 6, "Z/6", 0,
        [("g1", lambda g: 3), ("g2", lambda g: 2)],
        [],
        ["g1", "g1*g2", "g1*g2", "g1*g2"],
        {
            "signature": [2, 6, 6, 6], "genus": 4, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1], [1, 2]],
            "blocks": [[1, 1, True], [1, 1, False], [2, 1, False]],
        },
    )
    add(
        "(38)", ["(25)"], "(25)=(38)", 18, "Z/3xS3", 0,
        [
            ("g1", lambda g: (0, cycles_to_perm(3, [(1, 2)]))),
            ("g2", lambda g: (1, tuple(range(3)))),
            ("g3", lambda g: (0, cycles_to_perm(3, [(1, 2, 3)]))),
        ],
        [],
        ["g1*g3^2", "g1*g3", "g2*g3", "g2^2"],
        {
            "signature": [2, 2, 3, 3], "genus": 4, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[1, 1], [1, 1], [2, 1]],
            "blocks": [[2, 1, True], [1, 2, False]],
        },
    )
    add(
        "(37)", [], "(37)", 12, "A4", 0,
        [
            ("g1", lambda g: cycles_to_perm(4, [(1, 2, 3)])),
            ("g2", lambda g: cycles_to_perm(4, [(1, 2), (3, 4)])),
            ("g3", lambda g: cycles_to_perm(4, [(1, 3), (2, 4)])),
        ],
        [],
        ["g3", "g1*g3", "g1", "g1*g2*g3"],
        {
            "signature": [2, 3, 3, 3], "genus": 4, "r": 4, "n_delta": 1,
            "dim_family": 1, "star": True,
            "h0_nontrivial": [[1, 1], [3, 1]],
            "blocks": [[1, 1, False], [1, 3, True]],
        },
    )
    return fixtures


# ---------------------------------------------------------------------------


def main():
    root = os.path.dirname(os.path.dirname(os.path.abspath(__file__)))
    pool = constructions()
    catalog = {}
    for order in sorted(pool):
        kept = []
        for g in pool[order]:
            assert g.order == order, (g.name, g.order, order)
            if any(find_isomorphism(g, h) is not None for h in kept):
                print(f"  dropping duplicate construction {g.name} (order {order})")
                continue
            kept.append(g)
        assert len(kept) == CENSUS[order], (
            f"order {order}: built {len(kept)} classes, census says {CENSUS[order]}"
        )
        catalog[order] = kept
        print(f"order {order:2d}: {len(kept):2d} groups: "
              + ", ".join(g.name for g in kept))

    lines = [
        "# Catalog of all isomorphism classes of finite groups of order 2..24,",
        "# given by permutation generators.",
        "# Record format: `order index degree ; gen1 ; gen2 ... # name`",
        "# Counts per order follow the standard small-group census.",
        "# Generated by tools/gen_catalog.py; do not edit by hand.",
    ]
    for order in sorted(catalog):
        for idx, g in enumerate(catalog[order], start=1):
            deg, rep = realize(g)
            gens = " ; ".join(perm_to_cycles(rep[x]) for x in g.gens)
            lines.append(f"{order} {idx} {deg} ; {gens} # {g.name}")
    os.makedirs(os.path.join(root, "data"), exist_ok=True)
    cat_path = os.path.join(root, "data", "groups.cat")
    with open(cat_path, "w") as fh:
        fh.write("\n".join(lines) + "\n")
    print(f"wrote {cat_path} ({sum(len(v) for v in catalog.values())} groups)")

    fixtures = build_fixtures(catalog)
    fix_path = os.path.join(root, "data", "families.json")
    with open(fix_path, "w") as fh:
        json.dump({"schema_version": 1, "families": fixtures}, fh, indent=2)
        fh.write("\n")
    print(f"wrote {fix_path} ({len(fixtures)} fixtures)")


if __name__ == "__main__":
    sys.exit(main())
