#!/usr/bin/env python3
"""Writes the external graph6 corpus used by the codec differential tests.

corpus.g6        one graph6 record per line, encoded by networkx
corpus_edges.txt the same graphs as "n: u-v u-v ..." lines, one per record

Regenerate with: python3 make_corpus.py  (networkx 3.x, fixed seeds)
"""
import pathlib

import networkx as nx

OUT = pathlib.Path(__file__).resolve().parent


def graphs():
    # every graph of order 1..7 in the atlas
    for g in nx.graph_atlas_g():
        if g.number_of_nodes() > 0:
            yield nx.convert_node_labels_to_integers(g)
    # random graphs up to the library's 64-vertex capacity, both header forms
    seed = 7
    for n in list(range(8, 41)) + [61, 62, 63, 64]:
        for p in (0.1, 0.3, 0.5, 0.9):
            seed += 1
            yield nx.gnp_random_graph(n, p, seed=seed)
    for n in range(2, 12):
        yield nx.path_graph(n)
        yield nx.cycle_graph(max(n, 3))
        yield nx.complete_graph(n)


def main():
    g6_lines, edge_lines = [], []
    for g in graphs():
        g6_lines.append(nx.to_graph6_bytes(g, header=False).decode().rstrip("\n"))
        edges = sorted((min(u, v), max(u, v)) for u, v in g.edges())
        edge_lines.append(f"{g.number_of_nodes()}: " + " ".join(f"{u}-{v}" for u, v in edges))
    (OUT / "corpus.g6").write_text("\n".join(g6_lines) + "\n")
    (OUT / "corpus_edges.txt").write_text("\n".join(edge_lines) + "\n")
    print(f"wrote {len(g6_lines)} graphs")


if __name__ == "__main__":
    main()
