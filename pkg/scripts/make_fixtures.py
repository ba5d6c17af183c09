#!/usr/bin/env python3
"""Build the benchmark fixture: a 4,039-node community graph plus manifest.

The defaults reproduce the graph used by the scale test in the acceptance
suite; pass --nodes/--seed to build variants. The output directory ends up
holding graph.txt and manifest.json, ready for `privrisk score --manifest`.
"""

import argparse
import sys
import time
from pathlib import Path

from privrisk.ingest import (
    DatasetManifest,
    generate_community_graph,
    save_edge_list,
    save_manifest,
)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--out", type=Path, default=Path("fixtures/snap4039"))
    parser.add_argument("--nodes", type=int, default=4039)
    parser.add_argument("--communities", type=int, default=14)
    parser.add_argument("--mean-degree", type=float, default=43.6875)
    parser.add_argument("--rewire", type=float, default=0.06)
    parser.add_argument("--graph-seed", type=int, default=20240501)
    parser.add_argument("--dataset-seed", type=int, default=1)
    args = parser.parse_args(argv)

    args.out.mkdir(parents=True, exist_ok=True)
    start = time.perf_counter()
    graph = generate_community_graph(
        args.nodes,
        n_communities=args.communities,
        mean_degree=args.mean_degree,
        rewire_fraction=args.rewire,
        seed=args.graph_seed,
    )
    graph_path = args.out / "graph.txt"
    save_edge_list(graph, graph_path)
    save_manifest(
        DatasetManifest(graph_path=str(graph_path), seed=args.dataset_seed),
        args.out / "manifest.json",
    )
    elapsed = time.perf_counter() - start
    print(
        f"wrote {graph.size} nodes / {len(graph.edges)} edges to {graph_path} "
        f"({elapsed:.1f}s)"
    )
    print(f"manifest: {args.out / 'manifest.json'} (seed {args.dataset_seed})")
    return 0


if __name__ == "__main__":
    sys.exit(main())
