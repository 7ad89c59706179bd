#!/usr/bin/env python3
"""Brute-force reference values for the C++ test suites.

Independent of the C++ code path: permutations are tuples, graphs are
networkx graphs, subset searches use itertools.combinations. Run once,
inspect, and copy the printed numbers into the fixtures.
"""
import itertools
import sys

import networkx as nx


def cayley(n, pairs):
    g = nx.Graph()
    perms = list(itertools.permutations(range(1, n + 1)))
    for p in perms:
        g.add_node(p)
        for k, l in pairs:
            q = list(p)
            q[k - 1], q[l - 1] = q[l - 1], q[k - 1]
            g.add_edge(p, tuple(q))
    return g


def cycle_pairs(n):
    return [(i, i + 1) for i in range(1, n)] + [(1, n)]


def path_pairs(n):
    return [(i, i + 1) for i in range(1, n)]


def s(p):
    return "".join(map(str, p))


def four_cycles(g):
    nodes = sorted(g.nodes())
    idx = {v: i for i, v in enumerate(nodes)}
    cycles = set()
    for a in nodes:
        for b, d in itertools.combinations(g[a], 2):
            for c in set(g[b]) & set(g[d]):
                if c == a:
                    continue
                cyc = [a, b, c, d]
                ids = [idx[x] for x in cyc]
                m = ids.index(min(ids))
                rot = ids[m:] + ids[:m]
                if rot[1] > rot[3]:
                    rot = [rot[0], rot[3], rot[2], rot[1]]
                cycles.add(tuple(rot))
    return cycles


def comp_profile(g, removed):
    h = g.subgraph([v for v in g if v not in removed])
    comps = [h.subgraph(c) for c in nx.connected_components(h)]
    return comps


def main():
    mb4 = cayley(4, cycle_pairs(4))
    mb5 = cayley(5, cycle_pairs(5))
    mb3 = cayley(3, cycle_pairs(3))
    b3 = cayley(3, path_pairs(3))
    b4 = cayley(4, path_pairs(4))
    s4 = cayley(4, [(1, 2), (1, 3), (1, 4)])
    ug5 = cayley(5, cycle_pairs(4) + [(4, 5)])

    print("graph6 K3", nx.to_graph6_bytes(nx.complete_graph(3), header=False))
    print("graph6 C4", nx.to_graph6_bytes(nx.cycle_graph(4), header=False))
    print("graph6 P4", nx.to_graph6_bytes(nx.path_graph(4), header=False))

    for name, g in [("mb3", mb3), ("mb4", mb4), ("mb5", mb5), ("b3", b3), ("b4", b4), ("s4", s4), ("ug5", ug5)]:
        print(name, "order", g.number_of_nodes(), "size", g.number_of_edges(),
              "kappa", nx.node_connectivity(g), "girth", nx.girth(g),
              "4cycles", len(four_cycles(g)))

    u = (1, 2, 3, 4)
    v = (2, 1, 4, 3)
    print("cn mb4 1234 2143", len(set(mb4[u]) & set(mb4[v])))

    # disconnecting census on MB4, |F| <= 7
    nodes = sorted(mb4.nodes())
    census = {}
    worst = {}
    cyclic_cut_found = False
    good2_found = False
    for k in range(0, 8):
        cnt = 0
        w = 0
        for F in itertools.combinations(nodes, k):
            comps = comp_profile(mb4, set(F))
            if len(comps) < 2:
                continue
            cnt += 1
            sizes = sorted(c.number_of_nodes() for c in comps)
            w = max(w, sum(sizes) - sizes[-1])
            cyc = sum(1 for c in comps if c.number_of_edges() >= c.number_of_nodes())
            if cyc >= 2:
                cyclic_cut_found = True
            if all(d >= 2 for c in comps for _, d in c.degree()):
                good2_found = True
        census[k] = cnt
        worst[k] = w
        print("mb4 |F|=%d disconnecting=%d worst_residual=%d" % (k, cnt, w), flush=True)
    print("mb4 cyclic cut of size <=7:", cyclic_cut_found, " 2-good cut <=7:", good2_found)

    # N(C4) witness analysis on MB4
    c = [(1, 2, 3, 4), (2, 1, 3, 4), (2, 1, 4, 3), (1, 2, 4, 3)]
    F = set().union(*[set(mb4[x]) for x in c]) - set(c)
    comps = comp_profile(mb4, F)
    sizes = sorted(cc.number_of_nodes() for cc in comps)
    print("mb4 N(C4) |F|", len(F), "component sizes", sizes)

    # min |N(S)| over 4-subsets of MB4
    best = None
    for S in itertools.combinations(nodes, 4):
        N = set().union(*[set(mb4[x]) for x in S]) - set(S)
        key = (len(N), [nodes.index(x) for x in S])
        if best is None or key < best:
            best = key
    print("mb4 min |N(S)|", best[0], "witness", [s(nodes[i]) for i in best[1]])

    if "--mb5" in sys.argv:
        n5 = sorted(mb5.nodes())
        nb = {v: 0 for v in n5}
        pos = {v: i for i, v in enumerate(n5)}
        for v in n5:
            m = 0
            for w in mb5[v]:
                m |= 1 << pos[w]
            nb[v] = m
        best = None
        for S in itertools.combinations(range(120), 4):
            sm = 0
            um = 0
            for i in S:
                sm |= 1 << i
                um |= nb[n5[i]]
            c = bin(um & ~sm).count("1")
            if best is None or c < best[0]:
                best = (c, S)
        print("mb5 min |N(S)|", best[0], "witness", [s(n5[i]) for i in best[1]])


if __name__ == "__main__":
    main()
