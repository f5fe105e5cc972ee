"""Built-in test corpus: plane bipartite graphs with embeddings, Eulerian
digraphs, and generators for random Eulerian digraphs and flat matrices.

The verify suites and the acceptance tests both draw on these instances.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .graphkit import Digraph
from .planardual import plane_from_coords


def _cycle(k):
    """Even plane cycle on vertices 0..k-1, parts = parity classes."""
    import math
    edges = [(i, (i + 1) % k) for i in range(k)]
    coords = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k))
              for i in range(k)]
    part1 = [i for i in range(k) if i % 2 == 0]
    return k, edges, part1, coords, None


def _grid(rows, cols):
    """rows x cols grid graph; parts = checkerboard classes."""
    n = rows * cols
    vid = lambda r, c: r * cols + c
    edges = []
    for r in range(rows):
        for c in range(cols):
            if c + 1 < cols:
                edges.append((vid(r, c), vid(r, c + 1)))
            if r + 1 < rows:
                edges.append((vid(r, c), vid(r + 1, c)))
    coords = [(c, -r) for r in range(rows) for c in range(cols)]
    part1 = [vid(r, c) for r in range(rows) for c in range(cols)
             if (r + c) % 2 == 0]
    return n, edges, part1, coords, None


def _theta(lengths):
    """Two hubs joined by internally disjoint paths of the given even
    lengths, drawn as stacked arcs of subdivision points."""
    assert all(l % 2 == 0 for l in lengths)
    u, v = 0, 1
    n = 2
    edges = []
    coords = [(-2.0, 0.0), (2.0, 0.0)]
    for pi, length in enumerate(lengths):
        y = float(len(lengths) - 1 - 2 * pi)
        prev = u
        for s in range(length - 1):
            coords.append((-2.0 + 4.0 * (s + 1) / length, y))
            edges.append((prev, n))
            prev = n
            n += 1
        edges.append((prev, v))
    # 2-color by BFS parity (paths are even, so this is consistent).
    adj = {w: set() for w in range(n)}
    for a, b in edges:
        adj[a].add(b)
        adj[b].add(a)
    color = {0: 0}
    stack = [0]
    while stack:
        w = stack.pop()
        for x in adj[w]:
            if x not in color:
                color[x] = 1 - color[w]
                stack.append(x)
    part1 = [w for w in range(n) if color[w] == 0]
    return n, edges, part1, coords, None


def _doubled_cycle(k, doubled):
    """Even cycle with the listed edge positions doubled; the extra copy
    bends outward so rotations stay planar."""
    import math
    edges = [(i, (i + 1) % k) for i in range(k)]
    bends = {}
    for pos in doubled:
        i, j = pos, (pos + 1) % k
        mid_angle = 2 * math.pi * (pos + 0.5) / k
        bends[len(edges)] = (1.5 * math.cos(mid_angle),
                             1.5 * math.sin(mid_angle))
        edges.append((i, j))
    coords = [(math.cos(2 * math.pi * i / k), math.sin(2 * math.pi * i / k))
              for i in range(k)]
    part1 = [i for i in range(k) if i % 2 == 0]
    return k, edges, part1, coords, bends


def _k23():
    n = 5
    edges = [(0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4)]
    coords = [(-1.0, 0.0), (1.0, 0.0), (0.0, 1.0), (0.0, 0.0), (0.0, -1.0)]
    part1 = [0, 1]
    return n, edges, part1, coords, None


#: name -> (n, edges, part1, coords, bends); all connected, bridgeless,
#: plane, bipartite.
PLANE_BIPARTITE = {
    "C4": _cycle(4),
    "C6": _cycle(6),
    "C8": _cycle(8),
    "C10": _cycle(10),
    "grid2x3": _grid(2, 3),
    "grid2x4": _grid(2, 4),
    "theta222": _theta((2, 2, 2)),
    "theta224": _theta((2, 2, 4)),
    "theta244": _theta((2, 4, 4)),
    "K23": _k23(),
    "C4-doubled": _doubled_cycle(4, (0, 1, 2, 3)),
    "C4-one-double": _doubled_cycle(4, (0,)),
    "C4-two-doubles": _doubled_cycle(4, (0, 2)),
    "C6-one-double": _doubled_cycle(6, (0,)),
    "C6-doubled": _doubled_cycle(6, (0, 1, 2, 3, 4, 5)),
}


def plane_bipartite(name):
    n, edges, part1, coords, bends = PLANE_BIPARTITE[name]
    P = plane_from_coords(n, edges, coords, part1=part1, bends=bends)
    return P, part1


def eulerian_small(max_edges=6):
    """All connected Eulerian multi-digraphs with at most max_edges edges,
    on labeled vertex sets of size 2..5, plus the directed 6-cycle.

    Enumerated as nondecreasing sequences of arc indices.
    """
    from itertools import combinations_with_replacement

    from .graphkit import is_connected

    out = []
    for n in range(2, 6):
        arcs = [(a, b) for a in range(n) for b in range(n) if a != b]
        min_e = n  # every vertex needs in = out >= 1
        for e in range(min_e, max_edges + 1):
            for combo in combinations_with_replacement(range(len(arcs)), e):
                deg = [0] * n
                used = [False] * n
                ok = True
                for idx in combo:
                    a, b = arcs[idx]
                    deg[a] += 1
                    deg[b] -= 1
                    used[a] = used[b] = True
                if any(deg) or not all(used):
                    continue
                D = Digraph(n, [arcs[i] for i in combo])
                if is_connected(D):
                    out.append(D)
    out.append(Digraph(6, [(i, (i + 1) % 6) for i in range(6)]))
    return out


def random_eulerian(rng: random.Random, max_edges=10):
    """Random connected Eulerian multi-digraph built from directed cycles
    through a shared vertex."""
    from .graphkit import is_connected

    while True:
        n = rng.randint(3, 5)
        edges = []
        while max_edges - len(edges) >= 2:
            length = rng.randint(2, min(n, max_edges - len(edges)))
            verts = [0] + rng.sample(range(1, n), length - 1)
            rng.shuffle(verts)
            for i in range(length):
                edges.append((verts[i], verts[(i + 1) % length]))
            if len(edges) >= rng.randint(4, max_edges):
                break
        used = sorted({v for e in edges for v in e})
        relabel = {v: i for i, v in enumerate(used)}
        D = Digraph(len(used), [(relabel[t], relabel[h]) for t, h in edges])
        if len(D.edges) <= max_edges and is_connected(D):
            return D


def random_flat_matrix(rng: random.Random, d=None, N=None):
    """Random integer flat matrix of full row rank: all-ones last row with
    small random integers above."""
    from .exactnum import Matrix

    d = d or rng.randint(2, 4)
    N = N or rng.randint(d + 1, d + 4)
    while True:
        rows = [[Fraction(rng.randint(-3, 3)) for _ in range(N)]
                for _ in range(d - 1)]
        rows.append([Fraction(1)] * N)
        m = Matrix(rows)
        if m.rank() == d:
            return m


def random_semibalanced(rng: random.Random):
    """Random connected leveled digraph: heads one level below tails.

    Returns a Digraph whose incidence matrix is flat (witnessed by the
    level functional).
    """
    from .graphkit import is_connected

    while True:
        n = rng.randint(3, 6)
        levels = [rng.randint(0, 2) for _ in range(n)]
        pairs = [(a, b) for a in range(n) for b in range(n)
                 if levels[a] == levels[b] + 1]
        if not pairs:
            continue
        m = rng.randint(n - 1, min(len(pairs) * 2, n + 4))
        edges = [rng.choice(pairs) for _ in range(m)]
        D = Digraph(n, edges)
        if is_connected(D):
            return D, levels
