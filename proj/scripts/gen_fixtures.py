#!/usr/bin/env python3
"""Generate rotation systems for the fixture graphs via networkx planar embeddings.

Output is pasted into src/fixtures.cpp. Run once; the artifact itself never
depends on Python.
"""
import networkx as nx


def emit(name, g):
    g = nx.convert_node_labels_to_integers(g, ordering="sorted")
    ok, emb = nx.check_planarity(g)
    assert ok, name
    data = emb.get_data()
    n = g.number_of_nodes()
    print(f"// {name}: V={n} E={g.number_of_edges()}")
    print(f"static const std::vector<std::vector<int>> k_{name} = {{")
    for v in range(n):
        nbrs = ", ".join(str(w) for w in data[v])
        print(f"    {{{nbrs}}},")
    print("};")
    print()


def cube():
    g = nx.Graph()
    for i in range(4):
        g.add_edge(i, (i + 1) % 4)
        g.add_edge(i + 4, (i + 1) % 4 + 4)
        g.add_edge(i, i + 4)
    return g


emit("tetrahedron", nx.complete_graph(4))
emit("cube", cube())
emit("dodecahedron", nx.dodecahedral_graph())
emit("tutte", nx.tutte_graph())
