"""Graph-based privacy risk: structural similarity and node importance.

SimRank gives pairwise structural similarity (two users are similar when
their neighbors are similar); the importance side uses the classic
unnormalized-teleport PageRank recurrence, whose fixed point sums to the
node count on graphs without isolated nodes. Both are combined into a
single per-user graph risk.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np
import scipy.sparse as sp

from .model import SocialGraph, UserId

PAIR_SCOPE_NEIGHBORS = "neighbors-only"
PAIR_SCOPE_ALL = "all-pairs"


@dataclass(frozen=True)
class SimRankParams:
    decay: float = 0.8
    max_iterations: int = 10
    epsilon: float = 1e-4
    pair_scope: str = PAIR_SCOPE_NEIGHBORS

    def __post_init__(self):
        if not (0.0 < self.decay < 1.0):
            raise ValueError(f"decay must be in (0, 1), got {self.decay}")
        if self.pair_scope not in (PAIR_SCOPE_NEIGHBORS, PAIR_SCOPE_ALL):
            raise ValueError(f"unknown pair_scope {self.pair_scope!r}")


@dataclass(frozen=True)
class PageRankParams:
    damping: float = 0.85
    max_iterations: int = 100
    epsilon: float = 1e-8

    def __post_init__(self):
        if not (0.0 < self.damping < 1.0):
            raise ValueError(f"damping must be in (0, 1), got {self.damping}")


@dataclass(frozen=True)
class SgprsWeights:
    """Similarity carries more weight than importance: it tracks attribute
    risk more strongly in correlation terms, so the default split normalizes
    0.68 / 0.55 to sum 1."""

    w_sim: float = 0.553
    w_imp: float = 0.447

    def __post_init__(self):
        if abs(self.w_sim + self.w_imp - 1.0) > 1e-6:
            raise ValueError("similarity and importance weights must sum to 1")
        if self.w_sim < self.w_imp:
            raise ValueError("similarity weight must not be below importance weight")


class SimilarityScores:
    """Materialized SimRank values for a set of node pairs.

    Pairs are stored under canonical (small, large) keys; lookups accept
    either order. Pairs outside the materialized set read as 0.0, which is
    exact for node pairs that never interact under the decay horizon and an
    explicit contract for neighbors-only scope (only the pairs the
    structural-risk aggregation consumes are kept).
    """

    def __init__(self, values: dict[tuple[UserId, UserId], float], scope: str):
        self._values = values
        self.scope = scope

    @staticmethod
    def _key(u: UserId, v: UserId) -> tuple[UserId, UserId]:
        return (u, v) if u <= v else (v, u)

    def get(self, u: UserId, v: UserId, default: float = 0.0) -> float:
        return self._values.get(self._key(u, v), default)

    def __getitem__(self, pair: tuple[UserId, UserId]) -> float:
        return self._values[self._key(*pair)]

    def __contains__(self, pair: tuple[UserId, UserId]) -> bool:
        return self._key(*pair) in self._values

    def __len__(self) -> int:
        return len(self._values)

    def items(self):
        return self._values.items()


def _adjacency_matrix(graph: SocialGraph, index: dict[UserId, int]) -> sp.csr_matrix:
    n = len(index)
    if not graph.edges:
        return sp.csr_matrix((n, n))
    rows = []
    cols = []
    for u, v in graph.edges:
        rows.append(index[u])
        cols.append(index[v])
        rows.append(index[v])
        cols.append(index[u])
    data = np.ones(len(rows))
    return sp.csr_matrix((data, (rows, cols)), shape=(n, n))


def simrank(graph: SocialGraph, params: SimRankParams = SimRankParams()) -> SimilarityScores:
    """Fixed-point structural similarity over all node pairs.

    Starts from the identity (every node fully similar to itself, zero
    elsewhere) and iterates the decay-weighted neighbor average until the
    largest per-pair change drops below epsilon or the iteration budget runs
    out. The update runs densely over the full pair matrix; ``pair_scope``
    selects how much of the result is materialized:

    - ``all-pairs``: every pair (quadratic in node count, small graphs only).
    - ``neighbors-only``: the diagonal plus one value per edge, the exact
      set the structural-risk aggregation reads.
    """
    if graph.size == 0:
        raise ValueError("graph is empty")
    nodes = graph.nodes
    index = {node: i for i, node in enumerate(nodes)}
    n = len(nodes)
    adjacency = _adjacency_matrix(graph, index)
    degrees = np.asarray(adjacency.sum(axis=1)).ravel()
    inv_deg = np.divide(1.0, degrees, out=np.zeros_like(degrees), where=degrees > 0)

    scores = np.eye(n)
    for _ in range(params.max_iterations):
        # decay / (|N(u)||N(v)|) * sum over neighbor pairs, then restore the
        # self-similarity base case
        updated = adjacency @ scores @ adjacency
        updated = np.asarray(updated)
        updated *= params.decay
        updated *= inv_deg[:, None]
        updated *= inv_deg[None, :]
        np.fill_diagonal(updated, 1.0)
        delta = float(np.max(np.abs(updated - scores)))
        scores = updated
        if delta < params.epsilon:
            break

    values: dict[tuple[UserId, UserId], float] = {}
    if params.pair_scope == PAIR_SCOPE_ALL:
        for i, u in enumerate(nodes):
            for j in range(i, n):
                values[(u, nodes[j])] = float(scores[i, j])
    else:
        for u in nodes:
            values[(u, u)] = 1.0
        for u, v in graph.edges:
            values[(u, v)] = float(scores[index[u], index[v]])
    return SimilarityScores(values, scope=params.pair_scope)


def structural_risk(
    graph: SocialGraph,
    sim: SimilarityScores,
    neighbor_risk: Mapping[UserId, float],
) -> dict[UserId, float]:
    """Average similarity-weighted risk of a user's neighborhood.

    ``neighbor_risk`` must cover every node (normalized attribute risk in
    the full pipeline). Isolated nodes score 0.
    """
    missing = [n for n in graph.nodes if n not in neighbor_risk]
    if missing:
        raise ValueError(f"neighbor_risk missing nodes, e.g. {missing[:5]}")
    result: dict[UserId, float] = {}
    for node in graph.nodes:
        neighbors = graph.neighbors(node)
        if not neighbors:
            result[node] = 0.0
            continue
        total = 0.0
        for other in neighbors:
            total += sim.get(node, other) * neighbor_risk[other]
        result[node] = total / len(neighbors)
    return result


def pagerank(graph: SocialGraph, params: PageRankParams = PageRankParams()) -> dict[UserId, float]:
    """Iterate P(u) = (1 - d) + d * sum of P(v)/deg(v) over neighbors v.

    This is the unnormalized-teleport recurrence: with no isolated nodes the
    fixed point sums to the node count, and on regular graphs every node
    holds exactly 1. Isolated nodes settle at (1 - d). Stops when the L1
    change drops below epsilon.
    """
    if graph.size == 0:
        raise ValueError("graph is empty")
    nodes = graph.nodes
    index = {node: i for i, node in enumerate(nodes)}
    adjacency = _adjacency_matrix(graph, index)
    degrees = np.asarray(adjacency.sum(axis=1)).ravel()
    inv_deg = np.divide(1.0, degrees, out=np.zeros_like(degrees), where=degrees > 0)

    ranks = np.ones(len(nodes))
    base = 1.0 - params.damping
    for _ in range(params.max_iterations):
        updated = base + params.damping * (adjacency @ (ranks * inv_deg))
        delta = float(np.abs(updated - ranks).sum())
        ranks = updated
        if delta < params.epsilon:
            break
    return {node: float(ranks[index[node]]) for node in nodes}


def importance_risk(pr: Mapping[UserId, float]) -> dict[UserId, float]:
    """Normalize PageRank against the network maximum; the top user maps to 1."""
    if not pr:
        raise ValueError("pagerank map is empty")
    top = max(pr.values())
    if top <= 0:
        raise ValueError("maximum pagerank must be positive")
    return {node: value / top for node, value in pr.items()}


def sgprs(
    struct_risk: Mapping[UserId, float],
    imp_risk: Mapping[UserId, float],
    weights: SgprsWeights = SgprsWeights(),
) -> dict[UserId, float]:
    """Weighted mix of structural similarity risk and importance risk."""
    if set(struct_risk) != set(imp_risk):
        raise ValueError("structural and importance risk maps cover different nodes")
    return {
        node: weights.w_sim * struct_risk[node] + weights.w_imp * imp_risk[node]
        for node in struct_risk
    }
