"""Exact path sequences by enumeration and by subset dynamic programming.

Both routes return ``(P_0, ..., P_rho)`` where ``P_h`` is the number of
undirected simple paths with ``h`` edges.  They share no counting code: the
enumerator counts each path once from its smaller endpoint, the DP counts
directed paths over vertex subsets and halves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from pathseq.graph_core import Graph, UnsupportedSizeError, is_connected, iter_bits

DFS_MAX_N = 14
DP_MAX_N = 24

# primes below 2**58: n residues of this size sum without leaving int64
_MODULI = (288230376151711717, 288230376151711687)
_INT64_SAFE_N = 21  # (n-1)! < 2**63 up to here, which bounds every DP cell


class ClassificationError(ValueError):
    """The graph is not a starlike tree centered at the given vertex."""


def _trim(counts: list[int], n: int) -> tuple[int, ...]:
    if n == 0:
        return (0,)
    while len(counts) > 1 and counts[-1] == 0:
        counts.pop()
    return tuple(counts)


def path_sequence_dfs(g: Graph) -> tuple[int, ...]:
    """Enumerate every simple path, counting it from its smaller endpoint."""
    n = g.n
    if n > DFS_MAX_N:
        raise UnsupportedSizeError(
            f"enumeration is limited to n <= {DFS_MAX_N} (got n={n}); use path_sequence_dp")
    adj = g.adj
    counts = [0] * max(n, 1)
    counts[0] = n

    def walk(v: int, visited: int, length: int, higher: int) -> None:
        free = adj[v] & ~visited
        if not free:
            return
        counts[length + 1] += (free & higher).bit_count()
        for w in iter_bits(free):
            walk(w, visited | 1 << w, length + 1, higher)

    for s in range(n):
        walk(s, 1 << s, 0, -(1 << (s + 1)))
    return _trim(counts, n)


def _layers(n: int) -> tuple[list[np.ndarray], np.ndarray]:
    """Masks grouped by popcount, plus each mask's position inside its group."""
    masks = np.arange(1 << n, dtype=np.int64)
    pop = np.bitwise_count(masks)
    order = np.argsort(pop, kind="stable")
    bounds = np.searchsorted(pop[order], np.arange(n + 2))
    layers = [masks[order[bounds[k]:bounds[k + 1]]] for k in range(n + 1)]
    index = np.empty(1 << n, dtype=np.int64)
    for layer in layers:
        index[layer] = np.arange(len(layer), dtype=np.int64)
    return layers, index


def _column_total(col: np.ndarray, modulus: int | None) -> int:
    if modulus is None:
        return int(col.sum())
    lo = int((col & ((1 << 29) - 1)).sum())
    hi = int((col >> 29).sum())
    return (hi << 29) + lo


def _directed_layer_totals(g: Graph, modulus: int | None) -> list[int]:
    """``totals[k]`` = number of directed simple paths on ``k + 1`` vertices."""
    n = g.n
    layers, index = _layers(n)
    nbrs = [np.fromiter(iter_bits(g.adj[w]), dtype=np.int64) for w in range(n)]
    # f[i, v]: directed paths covering exactly layers[k][i] and ending at v
    f = np.zeros((len(layers[1]), n), dtype=np.int64)
    f[index[layers[1]], np.arange(n)] = 1
    totals = [n]
    for k in range(2, n + 1):
        targets = layers[k]
        nxt = np.zeros((len(targets), n), dtype=np.int64)
        for w in range(n):
            if len(nbrs[w]) == 0:
                continue
            sel = np.nonzero(targets >> w & 1)[0]
            prev = index[targets[sel] ^ (1 << w)]
            # cells with v outside the subset are zero, so no membership test is needed
            col = f[np.ix_(prev, nbrs[w])].sum(axis=1)
            if modulus is not None:
                col %= modulus
            nxt[sel, w] = col
        f = nxt
        total = sum(_column_total(f[:, w], modulus) for w in range(n))
        if modulus is not None:
            total %= modulus
        elif total == 0:
            break
        totals.append(total)
    return totals


def _crt(residues: list[int], moduli: tuple[int, ...]) -> int:
    x, m = 0, 1
    for r, p in zip(residues, moduli):
        t = ((r - x) * pow(m, -1, p)) % p
        x += m * t
        m *= p
    return x


def path_sequence_dp(g: Graph) -> tuple[int, ...]:
    """Count paths by a layered DP over (vertex subset, endpoint) states.

    Only two popcount layers are held at once.  Cells are int64, which is exact
    while ``(n-1)! < 2**63`` (n <= 21); larger graphs run the same DP modulo
    two 58-bit primes and rebuild the exact counts by CRT.
    """
    n = g.n
    if n > DP_MAX_N:
        raise UnsupportedSizeError(f"subset DP is limited to n <= {DP_MAX_N}, got n={n}")
    if n <= 1:
        return (n,)
    if g.edge_count == 0:
        return (n,)
    if n <= _INT64_SAFE_N:
        directed = _directed_layer_totals(g, None)
    else:
        per_mod = [_directed_layer_totals(g, p) for p in _MODULI]
        directed = [_crt([res[k] for res in per_mod], _MODULI) for k in range(len(per_mod[0]))]
        assert math.prod(_MODULI) > math.factorial(n)
    counts = [n] + [d // 2 for d in directed[1:]]
    return _trim(counts, n)


def longest_path_length(g: Graph) -> int:
    return len(path_sequence_dp(g)) - 1


def path_sequence(g: Graph) -> tuple[int, ...]:
    """Path sequence by whichever oracle is cheaper for this size."""
    if g.n <= 9:
        return path_sequence_dfs(g)
    return path_sequence_dp(g)


def z_ranges(h: int) -> tuple[range, range, range]:
    """Offsets ``a`` admitted for the three through-center path shapes."""
    if h % 2 == 0:
        return range(0, h - 1), range(0, h // 2), range(1, h // 2 + 1)
    return range(0, h - 1), range(0, (h - 1) // 2), range(1, (h - 1) // 2 + 1)


@dataclass
class PathTypeCounts:
    """Length-``h`` paths of a starlike tree bucketed by where the center sits.

    x1/x2: center is an end, other end a leaf / a degree-2 vertex.
    y1/y2: center absent, both ends degree 2 / one end a leaf.
    z1[a]: center interior, one end a leaf ``a + 1`` steps away, the other end
    degree 2.  z2[a]: both ends leaves, nearer one ``a + 1`` steps away.
    z3[a]: both ends degree 2, nearer one ``a`` steps away.
    """

    h: int
    x1: int = 0
    x2: int = 0
    y1: int = 0
    y2: int = 0
    z1: dict[int, int] = field(default_factory=dict)
    z2: dict[int, int] = field(default_factory=dict)
    z3: dict[int, int] = field(default_factory=dict)

    @classmethod
    def zeros(cls, h: int) -> PathTypeCounts:
        r1, r2, r3 = z_ranges(h)
        return cls(h, z1=dict.fromkeys(r1, 0), z2=dict.fromkeys(r2, 0), z3=dict.fromkeys(r3, 0))

    @property
    def total(self) -> int:
        return (self.x1 + self.x2 + self.y1 + self.y2
                + sum(self.z1.values()) + sum(self.z2.values()) + sum(self.z3.values()))


def _check_starlike(g: Graph, center: int) -> None:
    if not 0 <= center < g.n:
        raise ClassificationError(f"center {center} out of range")
    if g.edge_count != g.n - 1 or not is_connected(g):
        raise ClassificationError("graph is not a tree")
    if g.degree(center) < 3:
        raise ClassificationError(f"center {center} has degree {g.degree(center)} < 3")
    for v in range(g.n):
        if v != center and g.degree(v) > 2:
            raise ClassificationError(f"vertex {v} other than the center has degree >= 3")


def classify_starlike_paths(g: Graph, center: int, h: int) -> PathTypeCounts:
    """Enumerate the length-``h`` paths of a starlike tree and bucket them."""
    if g.n > DFS_MAX_N:
        raise UnsupportedSizeError(f"classification enumerates paths; n <= {DFS_MAX_N} required")
    if h < 1:
        raise ValueError("path length h must be >= 1")
    _check_starlike(g, center)
    out = PathTypeCounts.zeros(h)
    deg = g.degrees()

    def record(path: list[int]) -> None:
        a_end, b_end = path[0], path[-1]
        if center in (a_end, b_end):
            other = b_end if a_end == center else a_end
            if deg[other] == 1:
                out.x1 += 1
            else:
                out.x2 += 1
            return
        if center not in path:
            if deg[a_end] == 1 or deg[b_end] == 1:
                out.y2 += 1
            else:
                out.y1 += 1
            return
        i = path.index(center)
        d_a, d_b = i, h - i
        leaf_a, leaf_b = deg[a_end] == 1, deg[b_end] == 1
        if leaf_a and leaf_b:
            a = min(d_a, d_b) - 1
            out.z2[a] = out.z2.get(a, 0) + 1
        elif leaf_a or leaf_b:
            a = (d_a if leaf_a else d_b) - 1
            out.z1[a] = out.z1.get(a, 0) + 1
        else:
            a = min(d_a, d_b)
            out.z3[a] = out.z3.get(a, 0) + 1

    def walk(path: list[int], visited: int) -> None:
        if len(path) == h + 1:
            if path[-1] > path[0]:
                record(path)
            return
        for w in iter_bits(g.adj[path[-1]] & ~visited):
            path.append(w)
            walk(path, visited | 1 << w)
            path.pop()

    for s in range(g.n):
        walk([s], 1 << s)
    return out
