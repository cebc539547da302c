"""Johnson graphs J(n,k).

Vertices are the k-subsets of {1,...,n}; two subsets are adjacent when they
share exactly k-1 elements, so the graph is regular of valency k(n-k) and
d(x,y) = k - |x & y| is the graph distance.

Vertices are stored as n-bit masks (bit e-1 set iff element e belongs to the
subset) and ordered by mask value, which is the colexicographic order on
subsets.  All public I/O uses sorted integer tuples.
"""

from math import comb

MAX_VERTICES = 10**6


def vertex_mask(elements, n):
    """Pack an iterable of elements from 1..n into a bitmask, validating it."""
    mask = 0
    count = 0
    for e in elements:
        if not 1 <= e <= n:
            raise ValueError(f"element {e} outside 1..{n}")
        bit = 1 << (e - 1)
        if mask & bit:
            raise ValueError(f"duplicate element {e}")
        mask |= bit
        count += 1
    return mask


def mask_elements(mask):
    """Unpack a bitmask into the sorted tuple of its elements."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


class JohnsonGraph:
    """The Johnson graph J(n,k), immutable after construction."""

    def __init__(self, n, k):
        if not (isinstance(n, int) and isinstance(k, int) and 1 <= k <= n):
            raise ValueError(f"require 1 <= k <= n, got n={n}, k={k}")
        if comb(n, k) > MAX_VERTICES:
            raise ValueError(f"J({n},{k}) has {comb(n, k)} vertices, over the cap")
        self.n = n
        self.k = k
        self.vertices = self._enumerate_masks(n, k)
        self.index = {m: i for i, m in enumerate(self.vertices)}
        self._neighbors = None

    @staticmethod
    def _enumerate_masks(n, k):
        masks = []
        # Gosper's hack walks k-bit masks in increasing (colex) order.
        v = (1 << k) - 1
        limit = 1 << n
        while v < limit:
            masks.append(v)
            c = v & -v
            r = v + c
            v = (((r ^ v) >> 2) // c) | r
        return masks

    @property
    def vertex_count(self):
        return len(self.vertices)

    @property
    def valency(self):
        return self.k * (self.n - self.k)

    def contains(self, v):
        return self.to_mask(v) in self.index

    def to_mask(self, v):
        """Accept a vertex given as mask or element iterable; return its mask."""
        if isinstance(v, int):
            return v
        return vertex_mask(v, self.n)

    def vertex_index(self, v):
        mask = self.to_mask(v)
        try:
            return self.index[mask]
        except KeyError:
            raise ValueError(f"{mask_elements(mask)} is not a vertex of J({self.n},{self.k})") from None

    def vertex_tuple(self, i):
        return mask_elements(self.vertices[i])

    def adjacent(self, x, y):
        mx, my = self.to_mask(x), self.to_mask(y)
        return (mx & my).bit_count() == self.k - 1

    def neighbor_indices(self, i):
        """Indices of the neighbors of vertex i, in canonical vertex order."""
        if self._neighbors is None:
            self._neighbors = self._build_neighbors()
        return self._neighbors[i]

    def _build_neighbors(self):
        n, index = self.n, self.index
        all_bits = (1 << n) - 1
        table = []
        for v in self.vertices:
            row = []
            rest = all_bits & ~v
            out = v
            while out:
                e = out & -out
                keep = v & ~e
                add = rest
                while add:
                    f = add & -add
                    row.append(index[keep | f])
                    add &= add - 1
                out &= out - 1
            row.sort()
            table.append(row)
        return table


def build_johnson(n, k):
    """Construct J(n,k); vertices are all k-subsets, adjacency is |x & y| = k-1."""
    return JohnsonGraph(n, k)


def distance(g, x, y):
    """Graph distance in J(n,k): k minus the intersection size."""
    mx, my = g.to_mask(x), g.to_mask(y)
    if mx not in g.index or my not in g.index:
        raise ValueError("vertex not in graph")
    return g.k - (mx & my).bit_count()


def neighborhood(g, v):
    """All k(n-k) vertices at distance 1 from v, sorted canonically."""
    i = g.vertex_index(v)
    return [g.vertex_tuple(j) for j in g.neighbor_indices(i)]


def johnson_eigenvalue(n, k, i):
    """The i-th adjacency eigenvalue (k-i)(n-k-i)-i of J(n,k), for 0 <= i <= k."""
    if not 0 <= i <= k:
        raise ValueError(f"eigenvalue index {i} outside 0..{k}")
    return (k - i) * (n - k - i) - i


def complement_map(g, v):
    """Map a vertex of J(2k,k) to its set complement, the unique antipode."""
    if g.n != 2 * g.k:
        raise ValueError(f"complement map needs n = 2k, got n={g.n}, k={g.k}")
    mask = g.to_mask(v)
    if mask not in g.index:
        raise ValueError("vertex not in graph")
    return mask_elements(((1 << g.n) - 1) ^ mask)
