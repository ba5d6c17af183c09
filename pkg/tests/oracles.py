"""Independent reference implementations used to cross-check the package.

Everything here is deliberately written in a different style from the
library code: plain dict/loop arithmetic, no numpy vectorization (except
the eigen oracle, which delegates to numpy.linalg.eig), no shared helpers.
Tests compare library output against these at stated tolerances.
"""

from __future__ import annotations

import itertools
import random

import numpy as np


# ---------------------------------------------------------------------------
# graph oracles


def simrank_oracle(
    nodes,
    edges,
    decay: float = 0.8,
    max_iterations: int = 10,
    epsilon: float = 1e-4,
):
    """Brute-force all-pairs SimRank on dicts.

    Iterates S_{k+1}(u,v) = decay/(|N(u)||N(v)|) * sum over neighbor pairs
    of S_k, with S(u,u) pinned to 1 and off-diagonal start 0. Stops when the
    largest elementwise change drops below epsilon.
    """
    nodes = list(nodes)
    neigh = {u: set() for u in nodes}
    for a, b in edges:
        if a == b:
            continue
        neigh[a].add(b)
        neigh[b].add(a)
    sim = {(u, v): (1.0 if u == v else 0.0) for u in nodes for v in nodes}
    for _ in range(max_iterations):
        nxt = {}
        delta = 0.0
        for u in nodes:
            for v in nodes:
                if u == v:
                    nxt[(u, v)] = 1.0
                    continue
                nu, nv = neigh[u], neigh[v]
                if not nu or not nv:
                    value = 0.0
                else:
                    acc = 0.0
                    for a in nu:
                        for b in nv:
                            acc += sim[(a, b)]
                    value = decay * acc / (len(nu) * len(nv))
                nxt[(u, v)] = value
                delta = max(delta, abs(value - sim[(u, v)]))
        sim = nxt
        if delta < epsilon:
            break
    return sim


def pagerank_oracle(nodes, edges, damping: float = 0.85, iterations: int = 200):
    """Unnormalized-teleport PageRank: P(u) = (1-d) + d * sum P(v)/deg(v)."""
    nodes = list(nodes)
    neigh = {u: [] for u in nodes}
    for a, b in edges:
        if a == b:
            continue
        neigh[a].append(b)
        neigh[b].append(a)
    rank = {u: 1.0 for u in nodes}
    for _ in range(iterations):
        nxt = {}
        for u in nodes:
            acc = 0.0
            for v in neigh[u]:
                acc += rank[v] / len(neigh[v])
            nxt[u] = (1.0 - damping) + damping * acc
        if max(abs(nxt[u] - rank[u]) for u in nodes) < 1e-13:
            rank = nxt
            break
        rank = nxt
    return rank


def all_labeled_graphs(n: int):
    """Yield every labeled simple graph on nodes 0..n-1 as an edge list."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1 << len(pairs)):
        yield [pairs[i] for i in range(len(pairs)) if mask >> i & 1]


def random_graph(n: int, p: float, rng: random.Random):
    """G(n, p) edge list over nodes 0..n-1."""
    return [
        (a, b)
        for a, b in itertools.combinations(range(n), 2)
        if rng.random() < p
    ]


def structured_graphs(sizes=(6, 7, 8)):
    """Named mid-size topologies for the SimRank oracle suite."""
    out = []
    for n in sizes:
        out.append((f"path-{n}", [(i, i + 1) for i in range(n - 1)]))
        out.append((f"cycle-{n}", [(i, (i + 1) % n) for i in range(n)]))
        out.append((f"star-{n}", [(0, i) for i in range(1, n)]))
        out.append((f"complete-{n}", list(itertools.combinations(range(n), 2))))
    out.append(("bipartite-3-3", [(a, b) for a in range(3) for b in range(3, 6)]))
    out.append(("bipartite-2-6", [(a, b) for a in range(2) for b in range(2, 8)]))
    out.append(("binary-tree-7", [(0, 1), (0, 2), (1, 3), (1, 4), (2, 5), (2, 6)]))
    out.append(
        ("caterpillar-8", [(0, 1), (1, 2), (2, 3), (1, 4), (1, 5), (2, 6), (3, 7)])
    )
    rng = random.Random(8128)
    for i in range(4):
        out.append((f"random-8-{i}", random_graph(8, 0.35, rng)))
    return out


# ---------------------------------------------------------------------------
# content oracle


def cbprs_oracle(user, posts, table, extractor, visibility_of):
    """Naive per-entity recomputation of a user's content risk.

    Walks raw post/comment text, re-extracts entities, adds up sensitivities
    one entity at a time in extraction order, and applies the post visibility.
    Mirrors the pipeline arithmetic order so equality can be exact.
    """
    total = 0.0
    per_post = {}
    for post in posts:
        if post.author != user:
            continue
        vis = visibility_of(post)
        s_post = 0.0
        for entity in extractor.extract(post.text):
            s_post += table[entity.entity_type]
        risk = s_post * vis
        comment_sum = 0.0
        for comment in post.comments:
            s_comment = 0.0
            for entity in extractor.extract(comment.text):
                s_comment += table[entity.entity_type]
            comment_sum += s_comment * vis
        per_post[post.id] = risk + comment_sum
        total += per_post[post.id]
    return total, per_post


# ---------------------------------------------------------------------------
# weighting oracle


def ahp_eigen_oracle(matrix):
    """Principal eigenvector and lambda_max via a dense eigen decomposition."""
    arr = np.asarray(matrix, dtype=float)
    eigenvalues, eigenvectors = np.linalg.eig(arr)
    idx = int(np.argmax(eigenvalues.real))
    lam = float(eigenvalues[idx].real)
    vec = np.abs(eigenvectors[:, idx].real)
    vec = vec / vec.sum()
    return tuple(float(x) for x in vec), lam


def minmax_oracle(values):
    lo, hi = min(values), max(values)
    if hi == lo:
        return [0.5 for _ in values]
    return [(v - lo) / (hi - lo) for v in values]
