"""Permutations of {1..n}, small permutation groups, graph automorphisms,
orbits on k-subsets, and isomorphism/stabilizer searches for 2-colorings.

Groups are kept explicit: generators plus an optional materialized element
list.  Materialization is capped at 10^5 elements; everything in scope here
(dihedral groups, stabilizers inside S6..S8, automorphism groups of helper
graphs on <= 12 points) stays far below that.
"""

import itertools
from dataclasses import dataclass

from .johnson import JohnsonGraph, mask_elements

MATERIALIZE_CAP = 10**5


class Permutation:
    """A bijection of {1..n}; images[i-1] is the image of i."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a bijection of 1..{len(images)}: {images}")
        self.images = images

    @classmethod
    def identity(cls, n):
        return cls(range(1, n + 1))

    @classmethod
    def from_cycles(cls, text, n):
        """Parse cycle notation like "(1,2)(3,4)"; "()" is the identity."""
        images = list(range(1, n + 1))
        body = text.replace(" ", "")
        if body in ("", "()"):
            return cls(images)
        if not (body.startswith("(") and body.endswith(")")):
            raise ValueError(f"bad cycle notation: {text!r}")
        for chunk in body[1:-1].split(")("):
            cycle = [int(s) for s in chunk.split(",")]
            if len(set(cycle)) != len(cycle):
                raise ValueError(f"repeated point in cycle: {text!r}")
            for a, b in zip(cycle, cycle[1:] + cycle[:1]):
                if not 1 <= a <= n:
                    raise ValueError(f"point {a} outside 1..{n}")
                images[a - 1] = b
        return cls(images)

    def to_cycles(self):
        """Cycle notation, fixed points omitted; identity prints as "()"."""
        n = len(self.images)
        seen = [False] * n
        parts = []
        for start in range(1, n + 1):
            if seen[start - 1] or self.images[start - 1] == start:
                continue
            cycle = [start]
            seen[start - 1] = True
            x = self.images[start - 1]
            while x != start:
                cycle.append(x)
                seen[x - 1] = True
                x = self.images[x - 1]
            parts.append("(" + ",".join(map(str, cycle)) + ")")
        return "".join(parts) if parts else "()"

    @property
    def n(self):
        return len(self.images)

    def __call__(self, point):
        return self.images[point - 1]

    def __mul__(self, other):
        # (p * q)(x) = p(q(x))
        return Permutation(self.images[q - 1] for q in other.images)

    def inverse(self):
        inv = [0] * len(self.images)
        for i, img in enumerate(self.images):
            inv[img - 1] = i + 1
        return Permutation(inv)

    def order(self):
        k = 1
        p = self
        ident = Permutation.identity(self.n)
        while p != ident:
            p = p * self
            k += 1
        return k

    def on_mask(self, mask):
        """Apply to a subset given as a bitmask (bit e-1 <-> element e)."""
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << (self.images[low.bit_length() - 1] - 1)
            mask &= mask - 1
        return out

    def on_tuple(self, elements):
        return tuple(sorted(self.images[e - 1] for e in elements))

    def __eq__(self, other):
        return isinstance(other, Permutation) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Permutation({self.to_cycles()!r})"


class PermGroup:
    """A permutation group on {1..n} given by generators.

    Elements are materialized on demand (breadth-first closure of the
    generators) and cached; the closure aborts past MATERIALIZE_CAP.
    """

    def __init__(self, n, generators, elements=None):
        self.n = n
        self.generators = tuple(generators)
        for g in self.generators:
            if g.n != n:
                raise ValueError("generator degree mismatch")
        self._elements = list(elements) if elements is not None else None

    @classmethod
    def trivial(cls, n):
        return cls(n, [], [Permutation.identity(n)])

    @classmethod
    def symmetric(cls, n):
        gens = []
        if n >= 2:
            gens.append(Permutation.from_cycles("(1,2)", n))
        if n >= 3:
            gens.append(Permutation.from_cycles("(" + ",".join(map(str, range(1, n + 1))) + ")", n))
        return cls(n, gens)

    @classmethod
    def from_elements(cls, n, elements):
        elements = list(elements)
        return cls(n, _generating_subset(n, elements), elements)

    def elements(self):
        if self._elements is None:
            self._elements = _closure(self.n, self.generators)
        return self._elements

    @property
    def order(self):
        return len(self.elements())

    def __contains__(self, perm):
        return perm in set(self.elements())

    def element_order_multiset(self):
        """Sorted tuple of the orders of all elements."""
        return tuple(sorted(g.order() for g in self.elements()))

    def is_abelian(self):
        els = self.elements()
        return all(a * b == b * a for a, b in itertools.combinations(els, 2))


def _closure(n, generators, cap=MATERIALIZE_CAP):
    ident = Permutation.identity(n)
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for g in generators:
                q = g * p
                if q not in seen:
                    seen.add(q)
                    if len(seen) > cap:
                        raise ValueError(f"group exceeds materialization cap {cap}")
                    nxt.append(q)
        frontier = nxt
    return sorted(seen, key=lambda p: p.images)


def _generating_subset(n, elements):
    """Greedy small generating set for an explicitly listed group."""
    gens = []
    have = {Permutation.identity(n)}
    for p in sorted(elements, key=lambda q: q.images):
        if p not in have:
            gens.append(p)
            have = set(_closure(n, gens))
            if len(have) == len(elements):
                break
    return gens


def is_dihedral(group):
    """Constructive dihedral test: order 2m with a rotation r of order m and
    an involution s inverting it, the two together generating the group."""
    order = group.order
    if order % 2 or order < 2:
        return False
    m = order // 2
    els = group.elements()
    involutions = [s for s in els if s.order() == 2]
    for r in els:
        if r.order() != m:
            continue
        r_inv = r.inverse()
        for s in involutions:
            if s * r * s == r_inv and len(_closure(group.n, [r, s])) == order:
                return True
    # m = 1: the group of order 2 is dihedral by convention
    return m == 1


@dataclass(frozen=True)
class HelperGraph:
    """A small simple graph on {1..n} used to seed orbit constructions."""

    n: int
    edges: frozenset

    def __post_init__(self):
        for e in self.edges:
            a, b = tuple(e)
            if a == b:
                raise ValueError("loops not allowed")
            if not (1 <= a <= self.n and 1 <= b <= self.n):
                raise ValueError(f"edge {set(e)} outside 1..{self.n}")

    @classmethod
    def from_edge_list(cls, n, pairs):
        return cls(n, frozenset(frozenset(p) for p in pairs))

    @classmethod
    def cycle(cls, n):
        return cls.from_edge_list(n, [(i, i % n + 1) for i in range(1, n + 1)])

    def degree(self, v):
        return sum(1 for e in self.edges if v in e)

    def neighbors(self, v):
        return sorted(next(iter(e - {v})) for e in self.edges if v in e)

    def to_json(self):
        return {"n": self.n, "edges": sorted(sorted(e) for e in self.edges)}

    @classmethod
    def from_json(cls, obj):
        return cls.from_edge_list(obj["n"], obj["edges"])


def automorphism_group(h):
    """All adjacency-preserving bijections of a helper graph, by backtracking
    over point images with degree and partial-adjacency pruning."""
    n = h.n
    if n > 12:
        raise ValueError("automorphism search limited to n <= 12")
    adj = [[False] * (n + 1) for _ in range(n + 1)]
    for e in h.edges:
        a, b = tuple(e)
        adj[a][b] = adj[b][a] = True
    deg = [h.degree(v) for v in range(1, n + 1)]
    # assign high-degree, high-constraint points first
    order = sorted(range(1, n + 1), key=lambda v: (-deg[v - 1], v))
    autos = []
    image = [0] * (n + 1)
    used = [False] * (n + 1)

    def extend(depth):
        if depth == n:
            autos.append(Permutation(image[1:]))
            return
        v = order[depth]
        for w in range(1, n + 1):
            if used[w] or deg[w - 1] != deg[v - 1]:
                continue
            ok = True
            for u in order[:depth]:
                if adj[v][u] != adj[w][image[u]]:
                    ok = False
                    break
            if ok:
                image[v] = w
                used[w] = True
                extend(depth + 1)
                used[w] = False
        image[v] = 0

    extend(0)
    return PermGroup.from_elements(n, autos)


def vertex_action(g, perm):
    """The permutation a point permutation induces on graph vertex indices."""
    return [g.index[perm.on_mask(m)] for m in g.vertices]


def orbits_on_ksubsets(group, n, k, graph=None):
    """Partition J(n,k) into orbits of the induced action of a group on [n].

    Only the generators are used (orbits are the connected components under
    generator moves), so the group never needs materializing.  Parts are
    numbered by their smallest vertex in canonical order.
    """
    from .coloring import PartColoring

    if group.n != n:
        raise ValueError("group degree must equal n")
    g = graph if graph is not None else JohnsonGraph(n, k)
    gen_actions = [vertex_action(g, p) for p in group.generators]
    part_of = [-1] * g.vertex_count
    orbit_reps = []
    for start in range(g.vertex_count):
        if part_of[start] >= 0:
            continue
        label = len(orbit_reps)
        orbit_reps.append(start)
        stack = [start]
        part_of[start] = label
        while stack:
            v = stack.pop()
            for act in gen_actions:
                w = act[v]
                if part_of[w] < 0:
                    part_of[w] = label
                    stack.append(w)
    # representatives are discovered in canonical order already
    return PartColoring(g, [p + 1 for p in part_of])


CYCLE_ORBIT_LABELS = {
    (1, 1, 2): "A",
    (1, 2, 3): "B",
    (1, 3, 4): "C",
    (1, 4, 5): "D",
    (2, 2, 4): "E",
    (2, 3, 5): "F",
    (2, 4, 4): "G",
    (3, 3, 4): "H",
}


def classify_cycle_orbit(v):
    """Label a 3-subset of {1..10} by the sorted multiset of pairwise cyclic
    distances on the 10-cycle: A{1,1,2} ... H{3,3,4}."""
    x, y, z = sorted(v)

    def cdist(a, b):
        d = abs(a - b)
        return min(d, 10 - d)

    key = tuple(sorted((cdist(x, y), cdist(y, z), cdist(x, z))))
    try:
        return CYCLE_ORBIT_LABELS[key]
    except KeyError:
        raise AssertionError(f"impossible distance multiset {key} for {v}") from None


@dataclass(frozen=True)
class ColoringIso:
    """Witness that a point permutation (optionally composed with the
    complementation map of J(2k,k)) carries one 2-coloring onto another."""

    perm: Permutation
    complement: bool
    swaps_parts: bool


def _find_set_maps(n, sources, targets, find_all=False):
    """Point permutations g of [n] with g(sources[i]) = targets[i] for all i.

    Sources/targets are families of sets of vertex masks over the same
    J(n,k).  Backtracks over point images, checking every vertex as soon as
    all its elements have images.  Returns the first witness (or all of
    them, sorted) under ascending image order.
    """
    member_of_src = {}
    for fam, vs in enumerate(sources):
        for m in vs:
            member_of_src[m] = fam
    member_of_tgt = {}
    for fam, vs in enumerate(targets):
        for m in vs:
            member_of_tgt[m] = fam
    if sorted(map(len, sources)) != sorted(map(len, targets)):
        return [] if find_all else None
    if any(len(sources[i]) != len(targets[i]) for i in range(len(sources))):
        return [] if find_all else None

    # vertices (masks) grouped by their largest element, so each gets
    # checked exactly once, at the moment its last point is assigned
    k = min((m.bit_count() for m in member_of_src), default=0)
    by_last = [[] for _ in range(n + 1)]
    for m in member_of_src:
        by_last[m.bit_length()].append(m)

    image = [0] * (n + 1)
    used = [False] * (n + 1)
    found = []

    def extend(p):
        if p > n:
            found.append(Permutation(image[1:]))
            return not find_all
        for w in range(1, n + 1):
            if used[w]:
                continue
            image[p] = w
            ok = True
            for m in by_last[p]:
                img = 0
                mm = m
                while mm:
                    low = mm & -mm
                    img |= 1 << (image[low.bit_length()] - 1)
                    mm &= mm - 1
                if member_of_tgt.get(img, -1) != member_of_src[m]:
                    ok = False
                    break
            if ok:
                used[w] = True
                if extend(p + 1):
                    return True
                used[w] = False
        image[p] = 0
        return False

    extend(1)
    if find_all:
        return found
    return found[0] if found else None


def _complement_masks(masks, n):
    full = (1 << n) - 1
    return {full ^ m for m in masks}


def coloring_isomorphic(c1, c2, allow_complement=False):
    """Search for a map carrying {X1,X2} of one 2-coloring onto the other's
    unordered part pair; returns a ColoringIso witness or None.

    The map is a point permutation of [n], optionally composed with the
    complementation map when n = 2k.  Backtracking assigns point images in
    ascending order, so the witness is deterministic.
    """
    g1, g2 = c1.graph, c2.graph
    if (g1.n, g1.k) != (g2.n, g2.k):
        raise ValueError("colorings live on different Johnson graphs")
    if c1.m != 2 or c2.m != 2:
        raise ValueError("coloring_isomorphic handles 2-part colorings")
    if allow_complement and g1.n != 2 * g1.k:
        raise ValueError("complementation map needs n = 2k")
    n = g1.n
    x1 = c1.part_masks(1)
    comps = (False, True) if allow_complement else (False,)
    for target_part, swapped in ((1, False), (2, True)):
        for use_comp in comps:
            t = c2.part_masks(target_part)
            if use_comp:
                t = _complement_masks(t, n)
            if len(t) != len(x1):
                continue
            perm = _find_set_maps(n, [x1], [t])
            if perm is not None:
                return ColoringIso(perm=perm, complement=use_comp, swaps_parts=swapped)
    return None


def coloring_isomorphic_bruteforce(c1, c2, allow_complement=False):
    """Oracle twin of coloring_isomorphic: scan all n! point permutations.

    Only sensible for small n; tests use it at n = 6.
    """
    g1, g2 = c1.graph, c2.graph
    if (g1.n, g1.k) != (g2.n, g2.k):
        raise ValueError("colorings live on different Johnson graphs")
    n = g1.n
    x1 = c1.part_masks(1)
    targets = []
    for part, swapped in ((1, False), (2, True)):
        t = c2.part_masks(part)
        if len(t) == len(x1):
            targets.append((t, False, swapped))
            if allow_complement and n == 2 * g1.k:
                targets.append((_complement_masks(t, n), True, swapped))
    for images in itertools.permutations(range(1, n + 1)):
        perm = Permutation(images)
        img = {perm.on_mask(m) for m in x1}
        for t, use_comp, swapped in targets:
            if img == t:
                return ColoringIso(perm=perm, complement=use_comp, swaps_parts=swapped)
    return None


def stabilizer(c, mode="fix-each-part"):
    """All point permutations of [n] preserving a coloring.

    mode "fix-each-part": every part is fixed setwise.
    mode "fix-pair": the set of parts is preserved (parts may be permuted).
    Scans S_n directly, so n is capped at 8.
    """
    if mode not in ("fix-each-part", "fix-pair"):
        raise ValueError(f"unknown mode {mode!r}")
    g = c.graph
    if g.n > 8:
        raise ValueError("stabilizer scan limited to n <= 8")
    parts = [c.part_masks(p) for p in range(1, c.m + 1)]
    part_set = {frozenset(p) for p in parts}
    kept = []
    for images in itertools.permutations(range(1, g.n + 1)):
        perm = Permutation(images)
        imgs = [frozenset(perm.on_mask(m) for m in p) for p in parts]
        if mode == "fix-each-part":
            ok = all(img == frozenset(p) for img, p in zip(imgs, parts))
        else:
            ok = set(imgs) == part_set
        if ok:
            kept.append(perm)
    return PermGroup.from_elements(g.n, kept)
