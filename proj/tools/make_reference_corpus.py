#!/usr/bin/env python3
"""Write graph6 corpora of all connected graphs on n vertices (3 <= n <= 7).

Graphs come from the networkx graph atlas, so the files are produced by an
encoder that shares no code with the C++ library.
"""
import argparse
import pathlib

import networkx as nx


def main() -> None:
    parser = argparse.ArgumentParser()
    parser.add_argument("outdir", type=pathlib.Path)
    args = parser.parse_args()
    args.outdir.mkdir(parents=True, exist_ok=True)

    by_n = {}
    for graph in nx.graph_atlas_g():
        n = graph.number_of_nodes()
        if n < 3 or not nx.is_connected(graph):
            continue
        by_n.setdefault(n, []).append(nx.to_graph6_bytes(graph, header=False))

    for n, lines in sorted(by_n.items()):
        path = args.outdir / f"connected{n}.g6"
        path.write_bytes(b"".join(lines))
        print(f"{path}: {len(lines)} graphs")


if __name__ == "__main__":
    main()
