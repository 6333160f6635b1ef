"""Index arithmetic on the Hamming space F_q^n.

A vector ``x`` is identified with ``sum(x[i] * q**(n-1-i))`` so that integer
order is lexicographic order with the first coordinate most significant.
These helpers only use the digit structure (``q`` symbols per coordinate);
no field arithmetic is involved.
"""
from itertools import combinations, product
from math import comb

import numpy as np


def place_values(q, n):
    return q ** np.arange(n - 1, -1, -1, dtype=np.int64)


def to_index(words, q):
    words = np.atleast_2d(np.asarray(words, dtype=np.int64))
    return words @ place_values(q, words.shape[1])


def from_index(idx, q, n):
    idx = np.asarray(idx, dtype=np.int64)
    return (idx[..., None] // place_values(q, n)) % q


def all_vectors(q, n):
    """Every vector of F_q^n in lexicographic order, shape ``(q**n, n)``."""
    return from_index(np.arange(q ** n, dtype=np.int64), q, n)


def ball_volume(q, n, r):
    return sum(comb(n, j) * (q - 1) ** j for j in range(min(r, n) + 1))


def ball_patterns(q, n, r):
    """Additive offsets (mod q, digit-wise) reaching every point of a radius-r ball."""
    rows = [np.zeros(n, dtype=np.int64)]
    for j in range(1, min(r, n) + 1):
        for support in combinations(range(n), j):
            for shift in product(range(1, q), repeat=j):
                row = np.zeros(n, dtype=np.int64)
                row[list(support)] = shift
                rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(-1, n)


def ball_indices(centers, q, n, r, patterns=None, chunk=4096):
    """Indices of all points within distance ``r`` of each center index.

    Returns an array of shape ``(len(centers), ball_volume)``.
    """
    if patterns is None:
        patterns = ball_patterns(q, n, r)
    centers = np.asarray(centers, dtype=np.int64)
    pv = place_values(q, n)
    out = np.empty((len(centers), len(patterns)), dtype=np.int64)
    for start in range(0, len(centers), chunk):
        digits = from_index(centers[start:start + chunk], q, n)
        moved = (digits[:, None, :] + patterns[None, :, :]) % q
        out[start:start + chunk] = moved @ pv
    return out


def bfs_distances(sources, q, n):
    """Distance from every point of F_q^n to the nearest source (multi-source BFS)."""
    total = q ** n
    dist = np.full(total, -1, dtype=np.int64)
    frontier = np.unique(np.asarray(sources, dtype=np.int64))
    dist[frontier] = 0
    pv = place_values(q, n)
    level = 0
    while frontier.size:
        level += 1
        nxt = []
        for w in pv:
            digit = (frontier // w) % q
            for shift in range(1, q):
                nb = frontier + (((digit + shift) % q) - digit) * w
                nb = nb[dist[nb] < 0]
                if nb.size:
                    dist[nb] = level
                    nxt.append(nb)
        frontier = np.unique(np.concatenate(nxt)) if nxt else np.empty(0, dtype=np.int64)
    return dist


def pack_binary(words):
    """Pack 0/1 rows (n <= 64) into uint64 integers for popcount distances."""
    words = np.asarray(words, dtype=np.uint64)
    n = words.shape[1]
    shifts = np.arange(n - 1, -1, -1, dtype=np.uint64)
    return np.bitwise_or.reduce(words << shifts, axis=1) if n else np.zeros(len(words), np.uint64)


def pairwise_min_distance(words, q, chunk=2048):
    """Minimum Hamming distance over distinct pairs of rows."""
    words = np.asarray(words, dtype=np.int64)
    m, n = words.shape
    best = n + 1
    if q == 2 and n <= 64:
        packed = pack_binary(words)
        for i in range(m - 1):
            d = np.bitwise_count(packed[i + 1:] ^ packed[i])
            best = min(best, int(d.min()))
            if best <= 1:
                break
        return best
    for start in range(0, m, chunk):
        block = words[start:start + chunk]
        for i in range(len(block)):
            rest = words[start + i + 1:]
            if len(rest) == 0:
                continue
            d = (rest != block[i]).sum(axis=1)
            best = min(best, int(d.min()))
    return best


def distances_to(points, words, q):
    """Hamming distance matrix ``(len(points), len(words))``."""
    points = np.atleast_2d(np.asarray(points, dtype=np.int64))
    words = np.atleast_2d(np.asarray(words, dtype=np.int64))
    if q == 2 and points.shape[1] <= 64:
        return np.bitwise_count(pack_binary(points)[:, None] ^ pack_binary(words)[None, :]).astype(np.int64)
    return (points[:, None, :] != words[None, :, :]).sum(axis=2)
