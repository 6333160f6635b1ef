"""Bitset maximum-clique branch and bound with greedy-colouring bounds.

Vertex sets are ``uint64`` word arrays; ``adj[v]`` is the neighbourhood
bitset of vertex ``v``.  Compiled with numba.
"""
import numba as nb
import numpy as np

_ONE = np.uint64(1)


@nb.njit(cache=True)
def _lowbit(x):
    b = 0
    while x > _ONE:
        x >>= _ONE
        b += 1
    return b


@nb.njit(cache=True)
def _colour(P, adj, verts, cols):
    # greedy sequential colouring; vertices listed by colour class
    W = P.shape[0]
    U = P.copy()
    Q = np.empty(W, np.uint64)
    cnt = 0
    colour = 0
    while True:
        left = False
        for w in range(W):
            if U[w]:
                left = True
                break
        if not left:
            return cnt
        colour += 1
        for w in range(W):
            Q[w] = U[w]
        for w in range(W):
            while Q[w]:
                low = Q[w] & (~Q[w] + _ONE)
                v = w * 64 + _lowbit(low)
                Q[w] &= ~low
                U[w] &= ~low
                for ww in range(W):
                    Q[ww] &= ~adj[v, ww]
                verts[cnt] = v
                cols[cnt] = colour
                cnt += 1


@nb.njit(cache=True)
def max_clique(adj, P0, base, best0, node_limit):
    """Largest clique inside candidate set ``P0`` extending ``base`` fixed vertices.

    Only cliques of total size above ``best0`` are reported.  Returns
    ``(best, members, nodes, complete)``; ``members`` lists the vertices
    added to the base, empty when nothing beat ``best0``.
    """
    N, W = adj.shape
    depth = N + 1
    P = np.zeros((depth, W), np.uint64)
    verts = np.zeros((depth, N), np.int64)
    cols = np.zeros((depth, N), np.int64)
    pos = np.zeros(depth, np.int64)
    chosen = np.zeros(depth, np.int64)
    bestc = np.zeros(depth, np.int64)
    best = best0
    bestlen = 0
    P[0] = P0
    pos[0] = _colour(P[0], adj, verts[0], cols[0]) - 1
    d = 0
    nodes = 0
    while d >= 0:
        i = pos[d]
        if i < 0 or base + d + cols[d, i] <= best:
            d -= 1
            continue
        v = verts[d, i]
        pos[d] -= 1
        P[d, v // 64] &= ~(_ONE << np.uint64(v % 64))
        chosen[d] = v
        empty = True
        for w in range(W):
            P[d + 1, w] = P[d, w] & adj[v, w]
            if P[d + 1, w]:
                empty = False
        nodes += 1
        if nodes > node_limit:
            return best, bestc[:bestlen].copy(), nodes, False
        if empty:
            if base + d + 1 > best:
                best = base + d + 1
                bestlen = d + 1
                for t in range(d + 1):
                    bestc[t] = chosen[t]
        else:
            d += 1
            pos[d] = _colour(P[d], adj, verts[d], cols[d]) - 1
    return best, bestc[:bestlen].copy(), nodes, True


def to_bits(mask):
    """Pack a boolean array (or matrix, row-wise) into uint64 words."""
    mask = np.atleast_2d(np.asarray(mask, dtype=bool))
    N = mask.shape[1]
    W = (N + 63) // 64
    padded = np.zeros((mask.shape[0], W * 64), dtype=bool)
    padded[:, :N] = mask
    weights = _ONE << np.arange(64, dtype=np.uint64)
    return (padded.reshape(mask.shape[0], W, 64) * weights).sum(axis=2, dtype=np.uint64)


def colour_bound(adj, P):
    """Number of colours the greedy colouring uses on candidate set ``P``."""
    N = adj.shape[0]
    verts = np.zeros(N, np.int64)
    cols = np.zeros(N, np.int64)
    cnt = _colour(np.ascontiguousarray(P), adj, verts, cols)
    return int(cols[cnt - 1]) if cnt else 0
