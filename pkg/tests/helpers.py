"""Shared generators and independent oracles for the test suite.

Everything here is deliberately written from the definitions rather than
through the package's own code paths wherever it serves as an oracle:
the ordering property checker walks the graph directly, the balancing
oracle enumerates twist vectors against the window inequalities spelled
out with cleared denominators, and the truncated determinant oracle is a
permutation-sum over integer polynomial vectors.
"""

import itertools
import random
from fractions import Fraction
from math import lcm

from nodalstab import BundleClass, Component, Polarization, TreeLikeCurve


# ---------------------------------------------------------------- generators

def random_tree_edges(rng: random.Random, n: int):
    """Uniform random labelled tree on ids 1..n via a Pruefer sequence."""
    if n == 1:
        return []
    if n == 2:
        return [(1, 2)]
    seq = [rng.randint(1, n) for _ in range(n - 2)]
    degree = {i: 1 for i in range(1, n + 1)}
    for v in seq:
        degree[v] += 1
    edges = []
    leaves = sorted(i for i in degree if degree[i] == 1)
    for v in seq:
        leaf = leaves.pop(0)
        edges.append((leaf, v))
        degree[v] -= 1
        if degree[v] == 1:
            import bisect
            bisect.insort(leaves, v)
    edges.append((leaves[0], leaves[1]))
    return edges


def random_curve(rng: random.Random, n_max=8, genus_max=3) -> TreeLikeCurve:
    n = rng.randint(1, n_max)
    comps = []
    for i in range(1, n + 1):
        internal = rng.randint(0, 1) if genus_max >= 1 else 0
        genus = rng.randint(0, genus_max - internal)
        comps.append(Component(id=i, geometric_genus=genus, internal_nodes=internal))
    return TreeLikeCurve(components=tuple(comps), edges=tuple(random_tree_edges(rng, n)))


def random_bundle(rng: random.Random, c: TreeLikeCurve, ranks=(2, 3, 4), d_bound=20):
    return BundleClass(rank=rng.choice(list(ranks)),
                       multidegree={i: rng.randint(-d_bound, d_bound) for i in c.ids})


def random_polarization(rng: random.Random, c: TreeLikeCurve) -> Polarization:
    raw = {i: rng.randint(1, 9) for i in c.ids}
    total = sum(raw.values())
    return Polarization(weights={i: Fraction(v, total) for i, v in raw.items()})


# ----------------------------------------------------------- graph utilities

def adjacency(c: TreeLikeCurve):
    adj = {i: set() for i in c.ids}
    for a, b in c.edges:
        if a != b:
            adj[a].add(b)
            adj[b].add(a)
    return adj


def induced_connected(c: TreeLikeCurve, subset) -> bool:
    subset = set(subset)
    if not subset:
        return False
    adj = adjacency(c)
    seen = {next(iter(subset))}
    stack = list(seen)
    while stack:
        v = stack.pop()
        for w in adj[v]:
            if w in subset and w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == subset


def connected_subcurves(c: TreeLikeCurve):
    """All nonempty connected component subsets, by brute enumeration."""
    ids = list(c.ids)
    out = []
    for mask in range(1, 1 << len(ids)):
        subset = {ids[k] for k in range(len(ids)) if mask >> k & 1}
        if induced_connected(c, subset):
            out.append(frozenset(subset))
    return out


def ordering_satisfies_one_branch(c: TreeLikeCurve, perm) -> bool:
    """The ordering property, checked straight from the definition:
    for every position i < N the higher-positioned components induce a
    connected subtree and component i has exactly one neighbor there."""
    pos = {cid: k + 1 for k, cid in enumerate(perm)}
    adj = adjacency(c)
    n = len(perm)
    for k in range(n - 1):
        i = k + 1
        higher = {cid for cid in perm if pos[cid] > i}
        if not induced_connected(c, higher):
            return False
        if len(adj[perm[k]] & higher) != 1:
            return False
    return True


# ----------------------------------------------- window inequalities, by hand

def window_data(c: TreeLikeCurve, ordering, bc, pol):
    """Integers (den, bounds, base sums, shift vectors) for the window
    inequalities, derived from the definitions with cleared denominators."""
    ids = sorted(c.ids)
    idx = {cid: k for k, cid in enumerate(ids)}
    adj = adjacency(c)
    r = bc.rank
    rho = {comp.id: comp.arithmetic_genus for comp in c.components}
    chi_comp = {i: bc.multidegree[i] + r * (1 - rho[i]) for i in ids}
    chi = sum(chi_comp.values()) - r * (len(ids) - 1)
    den = lcm(*[pol.weights[i].denominator for i in ids])
    w_int = {i: pol.weights[i] * den for i in ids}
    rows = []
    for k in range(len(ordering.perm)):
        g = ordering.g_sets[k]
        base = sum(chi_comp[i] for i in g)
        shift = [0] * len(ids)
        for i in g:
            shift[idx[i]] -= len(adj[i])
            for j in adj[i]:
                shift[idx[j]] += 1
        lower_scaled = int(sum(w_int[i] for i in g)) * chi + den * r * (len(g) - 1)
        rows.append((base, shift, lower_scaled))
    return ids, den, r, rows


def passes_windows(ids, den, r, rows, a_by_index) -> bool:
    for base, shift, lower_scaled in rows:
        s = base + r * sum(u * a for u, a in zip(shift, a_by_index))
        scaled = den * s
        if not lower_scaled <= scaled <= lower_scaled + den * r:
            return False
    return True


def brute_force_solutions(c, ordering, bc, pol, bound):
    """Every twist vector in the box making all windows pass."""
    ids, den, r, rows = window_data(c, ordering, bc, pol)
    sols = []
    for a in itertools.product(range(-bound, bound + 1), repeat=len(ids)):
        if passes_windows(ids, den, r, rows, a):
            sols.append(dict(zip(ids, a)))
    return sols


# ------------------------------------------- truncated-ring oracle arithmetic

def poly_add(a, b):
    n = max(len(a), len(b))
    return [(a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(n)]


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def permutation_sign(perm) -> int:
    sign = 1
    seen = [False] * len(perm)
    for i in range(len(perm)):
        if seen[i]:
            continue
        length = 0
        j = i
        while not seen[j]:
            seen[j] = True
            j = perm[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def leibniz_det(entries):
    """Determinant of a matrix of integer polynomials (coefficient lists),
    as the full permutation sum over Z[x]."""
    r = len(entries)
    total = [0]
    for perm in itertools.permutations(range(r)):
        prod = [permutation_sign(perm)]
        for i in range(r):
            prod = poly_mul(prod, entries[i][perm[i]])
        total = poly_add(total, prod)
    return total


def truncate_mod(poly, p, n):
    out = [x % p for x in poly[:n + 1]]
    return tuple(out + [0] * (n + 1 - len(out)))
