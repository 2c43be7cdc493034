"""Exact classical graph oracles: generators, products, coloring solvers.

Everything here is integer combinatorics with no floating point, so the
solvers can serve as independent ground truth for the operator-algebraic
constructions. All solvers are exact branch-and-bound with explicit size
guards; exceeding a guard raises SizeGuardError rather than running forever.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from math import comb


class SizeGuardError(RuntimeError):
    """An exact-solver instance exceeds the supported size."""


_CHROMATIC_VERTEX_LIMIT = 26
_BFOLD_VERTEX_LIMIT = {1: 26, 2: 18, 3: 12}
_KNESER_VERTEX_LIMIT = 512

PRODUCT_KINDS = ("cartesian", "categorical", "lexicographic", "strong")


class ClassicalGraph:
    """A finite simple undirected graph on vertices 0..n-1."""

    def __init__(self, vertex_count: int, edges):
        n = int(vertex_count)
        if n < 1:
            raise ValueError("vertex count must be positive")
        norm = set()
        for u, v in edges:
            u, v = int(u), int(v)
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError("edge (%d, %d) out of range for %d vertices" % (u, v, n))
            if u == v:
                raise ValueError("loops are not allowed: (%d, %d)" % (u, v))
            norm.add((min(u, v), max(u, v)))
        self.vertex_count = n
        self.edges = frozenset(norm)
        adj = [set() for _ in range(n)]
        for u, v in norm:
            adj[u].add(v)
            adj[v].add(u)
        self._adj = tuple(frozenset(s) for s in adj)

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset:
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self._adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def complement(self) -> "ClassicalGraph":
        n = self.vertex_count
        edges = [(u, v) for u in range(n) for v in range(u + 1, n)
                 if not self.has_edge(u, v)]
        return ClassicalGraph(n, edges)

    def relabel(self, perm) -> "ClassicalGraph":
        """Image under the vertex bijection v -> perm[v]."""
        perm = [int(p) for p in perm]
        if sorted(perm) != list(range(self.vertex_count)):
            raise ValueError("not a vertex permutation")
        return ClassicalGraph(self.vertex_count,
                              [(perm[u], perm[v]) for u, v in self.edges])

    def __eq__(self, other):
        return (isinstance(other, ClassicalGraph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return "ClassicalGraph(n=%d, m=%d)" % (self.vertex_count, self.edge_count)


# ---------------------------------------------------------------------------
# generators

def complete(n: int) -> ClassicalGraph:
    return ClassicalGraph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def path(n: int) -> ClassicalGraph:
    return ClassicalGraph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> ClassicalGraph:
    if n <= 2:
        return path(n)
    return ClassicalGraph(n, [(i, (i + 1) % n) for i in range(n)])


def petersen() -> ClassicalGraph:
    """Petersen graph, outer cycle 0-4, inner pentagram 5-9, spokes i -- i+5.

    Isomorphic to kneser(5, 2) via outer i -> {2i, 2i+1} and inner
    i -> {2i+2, 2i+4} (mod 5).
    """
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, 5 + i) for i in range(5)]
    return ClassicalGraph(10, edges)


def kneser(c: int, b: int) -> ClassicalGraph:
    """Kneser graph: b-subsets of [c], adjacent iff disjoint.

    Vertices are the subsets in lexicographic order of their sorted tuples.
    """
    c, b = int(c), int(b)
    if b < 1 or c < b:
        raise ValueError("need c >= b >= 1")
    if comb(c, b) > _KNESER_VERTEX_LIMIT:
        raise SizeGuardError("Kneser graph K(%d, %d) has %d vertices (limit %d)"
                             % (c, b, comb(c, b), _KNESER_VERTEX_LIMIT))
    subsets = list(combinations(range(c), b))
    index = {s: i for i, s in enumerate(subsets)}
    edges = []
    for i, s in enumerate(subsets):
        ss = set(s)
        for j in range(i + 1, len(subsets)):
            if not ss & set(subsets[j]):
                edges.append((i, index[subsets[j]]))
    return ClassicalGraph(len(subsets), edges)


def kneser_vertices(c: int, b: int) -> list:
    """The subset labels matching kneser(c, b)'s vertex order."""
    return list(combinations(range(c), b))


_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_MASK64 = (1 << 64) - 1


def random_graph(n: int, p: float, seed: int) -> ClassicalGraph:
    """Seeded Erdos-Renyi graph, reproducible across platforms and languages.

    The generator is a 64-bit linear congruential generator with Knuth's
    MMIX constants: state <- state * 6364136223846793005
    + 1442695040888963407 (mod 2^64), starting from ``seed``. For each pair
    (u, v) with u < v in lexicographic order, one step is taken and the edge
    is included iff (state >> 11) / 2^53 < p.
    """
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    state = int(seed) & _MASK64
    edges = []
    for u in range(n):
        for v in range(u + 1, n):
            state = (state * _LCG_MULT + _LCG_INC) & _MASK64
            if (state >> 11) / 2.0 ** 53 < p:
                edges.append((u, v))
    return ClassicalGraph(n, edges)


# ---------------------------------------------------------------------------
# products

def classical_product(g: ClassicalGraph, h: ClassicalGraph,
                      kind: str) -> ClassicalGraph:
    """One of the four graph products on vertex pairs (v, a) -> v*|V(h)| + a."""
    if kind not in PRODUCT_KINDS:
        raise ValueError("unknown product kind %r; expected one of %r"
                         % (kind, PRODUCT_KINDS))
    ng, nh = g.vertex_count, h.vertex_count
    edges = []
    for v in range(ng):
        for a in range(nh):
            i = v * nh + a
            for w in range(ng):
                for b in range(nh):
                    j = w * nh + b
                    if j <= i:
                        continue
                    gv = g.has_edge(v, w)
                    ha = h.has_edge(a, b)
                    if kind == "cartesian":
                        e = (gv and a == b) or (v == w and ha)
                    elif kind == "categorical":
                        e = gv and ha
                    elif kind == "lexicographic":
                        e = gv or (v == w and ha)
                    else:
                        e = (gv and a == b) or (v == w and ha) or (gv and ha)
                    if e:
                        edges.append((i, j))
    return ClassicalGraph(ng * nh, edges)


# ---------------------------------------------------------------------------
# serialization

def parse_dimacs(text: str) -> ClassicalGraph:
    """Parse the DIMACS coloring format: 'p edge N M' then 'e u v' lines,
    vertices 1-indexed. Comment lines start with 'c'."""
    n = None
    edges = []
    for raw in text.splitlines():
        tok = raw.split()
        if not tok or tok[0] == "c":
            continue
        if tok[0] == "p":
            if len(tok) != 4 or tok[1] != "edge":
                raise ValueError("bad DIMACS problem line: %r" % raw)
            n = int(tok[2])
        elif tok[0] == "e":
            if len(tok) != 3:
                raise ValueError("bad DIMACS edge line: %r" % raw)
            edges.append((int(tok[1]) - 1, int(tok[2]) - 1))
        else:
            raise ValueError("unrecognized DIMACS line: %r" % raw)
    if n is None:
        raise ValueError("DIMACS input has no problem line")
    return ClassicalGraph(n, edges)


def to_dimacs(g: ClassicalGraph) -> str:
    lines = ["p edge %d %d" % (g.vertex_count, g.edge_count)]
    lines += ["e %d %d" % (u + 1, v + 1) for u, v in sorted(g.edges)]
    return "\n".join(lines) + "\n"


def graph_to_obj(g: ClassicalGraph) -> dict:
    return {"v": 1, "kind": "classical_graph", "vertices": g.vertex_count,
            "edges": [[u, v] for u, v in sorted(g.edges)]}


def graph_from_obj(obj: dict) -> ClassicalGraph:
    if obj.get("kind") != "classical_graph":
        raise ValueError("not a classical_graph object")
    if obj.get("v") != 1:
        raise ValueError("unsupported version %r" % obj.get("v"))
    return ClassicalGraph(obj["vertices"], [tuple(e) for e in obj["edges"]])


# ---------------------------------------------------------------------------
# b-fold assignments

@dataclass(frozen=True)
class BFoldAssignment:
    """A b-fold coloring: every vertex receives a b-subset of [0, c)."""

    palette_size: int
    fold: int
    assignment: tuple

    def validate(self, graph: ClassicalGraph) -> None:
        if len(self.assignment) != graph.vertex_count:
            raise ValueError("assignment covers %d vertices, graph has %d"
                             % (len(self.assignment), graph.vertex_count))
        for v, s in enumerate(self.assignment):
            if len(s) != self.fold:
                raise ValueError("vertex %d has %d colors, fold is %d"
                                 % (v, len(s), self.fold))
            if not all(0 <= x < self.palette_size for x in s):
                raise ValueError("vertex %d uses a color outside the palette" % v)
        for u, v in graph.edges:
            if self.assignment[u] & self.assignment[v]:
                raise ValueError("adjacent vertices %d, %d share a color" % (u, v))

    def colors_used(self) -> set:
        out = set()
        for s in self.assignment:
            out |= s
        return out


# ---------------------------------------------------------------------------
# exact solvers

def max_independent_set(g: ClassicalGraph, within=None) -> frozenset:
    """A maximum independent set, exact, by bitset branch and bound.

    ``within`` restricts the search to an induced subgraph. Deterministic:
    branching always picks the lowest-index vertex of maximum residual
    degree.
    """
    n = g.vertex_count
    adj = [0] * n
    for u, v in g.edges:
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    if within is None:
        avail0 = (1 << n) - 1
    else:
        avail0 = 0
        for v in within:
            avail0 |= 1 << v
    best_size = -1
    best_set = 0

    def rec(avail: int, cur: int, size: int) -> None:
        nonlocal best_size, best_set
        if size + avail.bit_count() <= best_size:
            return
        if avail == 0:
            if size > best_size:
                best_size, best_set = size, cur
            return
        pick, pick_deg = -1, -1
        m = avail
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            d = (adj[v] & avail).bit_count()
            if d == 0:
                # isolated within avail: always take it
                rec(avail & ~(1 << v), cur | (1 << v), size + 1)
                return
            if d > pick_deg:
                pick, pick_deg = v, d
        rec(avail & ~(1 << pick) & ~adj[pick], cur | (1 << pick), size + 1)
        rec(avail & ~(1 << pick), cur, size)

    rec(avail0, 0, 0)
    return frozenset(v for v in range(n) if (best_set >> v) & 1)


def clique_number(g: ClassicalGraph) -> int:
    return len(max_independent_set(g.complement()))


def _dsatur_greedy(g: ClassicalGraph) -> list:
    """DSATUR greedy proper coloring (upper bound witness)."""
    n = g.vertex_count
    colors = [-1] * n
    satur = [set() for _ in range(n)]
    for _ in range(n):
        v = max((u for u in range(n) if colors[u] == -1),
                key=lambda u: (len(satur[u]), g.degree(u), -u))
        c = 0
        while c in satur[v]:
            c += 1
        colors[v] = c
        for w in g.neighbors(v):
            satur[w].add(c)
    return colors


def _peel_coloring(g: ClassicalGraph) -> list:
    """Color classes by repeatedly removing an exact maximum independent set.

    Often meets the ceil(n / alpha) lower bound on vertex-transitive
    instances, which lets the exact solver finish without search.
    """
    n = g.vertex_count
    colors = [-1] * n
    remaining = set(range(n))
    c = 0
    while remaining:
        s = max_independent_set(g, within=remaining)
        for v in s:
            colors[v] = c
        remaining -= s
        c += 1
    return colors


def _feasible_coloring(g: ClassicalGraph, c: int, clique=()):
    """A proper c-coloring, or None. Backtracking with dynamic
    most-constrained-vertex ordering, first-use color symmetry breaking,
    and fail-first propagation on the neighbors' allowed-color masks.

    ``clique`` vertices are pre-colored 0, 1, ... up front; sound because
    any proper coloring can be relabeled to agree on a clique, and fresh
    colors beyond it can still be renamed in order of first use.
    """
    n = g.vertex_count
    nbrs = [sorted(g.neighbors(v)) for v in range(n)]
    degree = [len(x) for x in nbrs]
    full = (1 << c) - 1
    colors = [-1] * n
    ncnt = [[0] * c for _ in range(n)]
    allowed = [full] * n
    uncolored = set(range(n))

    def assign(v: int, col: int):
        """Place v, restricting neighbors. Returns (undo list, dead flag)."""
        colors[v] = col
        uncolored.discard(v)
        bit = 1 << col
        touched = []
        dead = False
        for w in nbrs[v]:
            if colors[w] == -1:
                ncnt[w][col] += 1
                if ncnt[w][col] == 1:
                    allowed[w] &= ~bit
                    touched.append(w)
                    if allowed[w] == 0:
                        dead = True
        return touched, dead

    def unassign(v: int, col: int, touched) -> None:
        bit = 1 << col
        for w in nbrs[v]:
            if colors[w] == -1:
                ncnt[w][col] -= 1
        for w in touched:
            allowed[w] |= bit
        colors[v] = -1
        uncolored.add(v)

    start_used = -1
    for col, v in enumerate(sorted(clique)):
        if col >= c:
            return None
        _, dead = assign(v, col)
        start_used = col
        if dead:
            return None

    def rec(max_used: int) -> bool:
        if not uncolored:
            return True
        v, best = -1, (c + 1, -1)
        for u in uncolored:
            key = (allowed[u].bit_count(), -degree[u])
            if key < best:
                v, best = u, key
        cap = full if max_used + 1 >= c - 1 else (1 << (max_used + 2)) - 1
        cand = allowed[v] & cap
        while cand:
            bit = cand & -cand
            cand &= cand - 1
            col = bit.bit_length() - 1
            touched, dead = assign(v, col)
            if not dead and rec(max(max_used, col)):
                return True
            unassign(v, col, touched)
        return False

    return colors if rec(start_used) else None


def chromatic_exact(g: ClassicalGraph) -> int:
    """The chromatic number, exact.

    Lower bound: max of the clique number and ceil(n / alpha); upper bound:
    the better of DSATUR greedy and independent-set peeling; the gap is
    closed by feasibility search with a maximum clique pre-colored.
    """
    n = g.vertex_count
    if n > _CHROMATIC_VERTEX_LIMIT:
        raise SizeGuardError("chromatic_exact supports at most %d vertices, got %d"
                             % (_CHROMATIC_VERTEX_LIMIT, n))
    if not g.edges:
        return 1
    alpha = len(max_independent_set(g))
    clique = max_independent_set(g.complement())
    lb = max(len(clique), -(-n // alpha))
    ub = min(max(_dsatur_greedy(g)) + 1, max(_peel_coloring(g)) + 1)
    c = lb
    while c < ub:
        if _feasible_coloring(g, c, clique) is not None:
            return c
        c += 1
    return ub


def _bfold_feasible(g: ClassicalGraph, b: int, c: int):
    """A proper b-fold coloring with palette [0, c), or None.

    Vertices are processed in index order; candidate sets reuse any allowed
    already-introduced colors and take fresh colors only as the next unused
    indices, which breaks the color-permutation symmetry completely.
    """
    n = g.vertex_count
    assign = [None] * n

    def rec(v: int, used: int) -> bool:
        if v == n:
            return True
        forbidden = set()
        for w in g.neighbors(v):
            if assign[w] is not None:
                forbidden |= assign[w]
        avail = [col for col in range(used) if col not in forbidden]
        for s in range(min(b, len(avail)), -1, -1):
            fresh = b - s
            if used + fresh > c:
                continue
            for reuse in combinations(avail, s):
                assign[v] = frozenset(reuse) | frozenset(range(used, used + fresh))
                if rec(v + 1, used + fresh):
                    return True
        assign[v] = None
        return False

    return tuple(assign) if rec(0, 0) else None


def bfold_exact(g: ClassicalGraph, b: int):
    """The b-fold chromatic number with a witness: (value, BFoldAssignment).

    Exhaustive subset-assignment branch and bound. Lower bound:
    max(b * omega, ceil(b * n / alpha)); upper bound: b palette-disjoint
    copies of a greedy proper coloring. The witness is re-validated before
    being returned.
    """
    b = int(b)
    if b < 1:
        raise ValueError("fold must be >= 1")
    if b not in _BFOLD_VERTEX_LIMIT:
        raise SizeGuardError("bfold_exact supports folds 1..%d, got %d"
                             % (max(_BFOLD_VERTEX_LIMIT), b))
    n = g.vertex_count
    if n > _BFOLD_VERTEX_LIMIT[b]:
        raise SizeGuardError("bfold_exact at fold %d supports at most %d vertices, got %d"
                             % (b, _BFOLD_VERTEX_LIMIT[b], n))
    if not g.edges:
        witness = BFoldAssignment(b, b, tuple(frozenset(range(b)) for _ in range(n)))
        witness.validate(g)
        return b, witness
    alpha = len(max_independent_set(g))
    lb = max(b * clique_number(g), -(-(b * n) // alpha))
    greedy = _dsatur_greedy(g)
    ub = b * (max(greedy) + 1)
    ub_witness = tuple(frozenset(range(greedy[v] * b, greedy[v] * b + b))
                       for v in range(n))
    c = lb
    while c < ub:
        asg = _bfold_feasible(g, b, c)
        if asg is not None:
            witness = BFoldAssignment(c, b, asg)
            witness.validate(g)
            return c, witness
        c += 1
    witness = BFoldAssignment(ub, b, ub_witness)
    witness.validate(g)
    return ub, witness


def graph_homomorphism(g: ClassicalGraph, h: ClassicalGraph):
    """An edge-preserving map V(g) -> V(h) as a tuple, or None.

    Plain backtracking, independent of the coloring solvers, so the two can
    cross-check each other.
    """
    n = g.vertex_count
    order = sorted(range(n), key=lambda v: (-g.degree(v), v))
    assign = [-1] * n

    def rec(i: int) -> bool:
        if i == n:
            return True
        v = order[i]
        for w in range(h.vertex_count):
            if all(h.has_edge(w, assign[u])
                   for u in g.neighbors(v) if assign[u] != -1):
                assign[v] = w
                if rec(i + 1):
                    return True
                assign[v] = -1
        return False

    return tuple(assign) if rec(0) else None


def kneser_hom_check(g: ClassicalGraph, c: int, b: int) -> bool:
    """Whether a homomorphism g -> kneser(c, b) exists.

    Equivalent to chi_b(g) <= c; serves as an independent route to b-fold
    chromatic numbers.
    """
    if g.vertex_count > _CHROMATIC_VERTEX_LIMIT:
        raise SizeGuardError("kneser_hom_check supports at most %d vertices, got %d"
                             % (_CHROMATIC_VERTEX_LIMIT, g.vertex_count))
    return graph_homomorphism(g, kneser(c, b)) is not None
