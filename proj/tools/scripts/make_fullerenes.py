#!/usr/bin/env python3
"""Generate bundled fullerene web files by face-spiral windup.

Enumerates hexagon placements in the face spiral, winds up the dual
triangulation, builds the trivalent primal graph, deduplicates isomers and
writes each one in the web file format with a counterclockwise rotation
taken from a planar embedding.
"""
import itertools
import sys
from collections import deque

import networkx as nx


def windup(sizes):
    n = len(sizes)
    need = list(sizes)
    adj = [set() for _ in range(n)]

    def connect(a, b):
        if b in adj[a]:
            raise ValueError("double")
        adj[a].add(b)
        adj[b].add(a)
        need[a] -= 1
        need[b] -= 1
        if need[a] < 0 or need[b] < 0:
            raise ValueError("overfull")

    open_faces = deque([0])
    for k in range(1, n):
        connect(k, open_faces[-1])
        if len(open_faces) > 1 or k > 1:
            if open_faces[0] != open_faces[-1]:
                connect(k, open_faces[0])
        while len(open_faces) > 1 and need[open_faces[0]] == 0:
            open_faces.popleft()
            if open_faces[0] != open_faces[-1] or len(open_faces) == 1:
                if open_faces[0] not in adj[k]:
                    connect(k, open_faces[0])
        while len(open_faces) > 1 and need[open_faces[-1]] == 0:
            open_faces.pop()
            if open_faces and open_faces[-1] not in adj[k]:
                connect(k, open_faces[-1])
        open_faces.append(k)
    if any(need):
        raise ValueError("open")
    return adj


def primal_from_dual(adj):
    g = nx.Graph()
    for a in range(len(adj)):
        g.add_edges_from((a, b) for b in adj[a])
    tris = sorted({tuple(sorted((a, b, c))) for a in g for b in g[a] for c in g[b]
                   if c in g[a] and a < b < c})
    primal = nx.Graph()
    primal.add_nodes_from(range(len(tris)))
    edge_owner = {}
    for t, (a, b, c) in enumerate(tris):
        for e in ((a, b), (a, c), (b, c)):
            edge_owner.setdefault(e, []).append(t)
    for owners in edge_owner.values():
        if len(owners) != 2:
            raise ValueError("not a triangulation")
        primal.add_edge(*owners)
    return primal


def check_fullerene(g, atoms):
    if g.number_of_nodes() != atoms or any(d != 3 for _, d in g.degree()):
        return None
    ok, emb = nx.check_planarity(g)
    if not ok:
        return None
    seen = set()
    sizes = []
    for u, v in emb.edges():
        if (u, v) in seen:
            continue
        face = emb.traverse_face(u, v, mark_half_edges=seen)
        sizes.append(len(face))
    if sorted(set(sizes)) not in ([5], [5, 6]) or sizes.count(5) != 12:
        return None
    return emb


def isomers(atoms):
    faces = atoms // 2 + 2
    hexes = faces - 12
    found = []
    for pos in itertools.combinations(range(faces), hexes):
        sizes = [6 if i in pos else 5 for i in range(faces)]
        try:
            dual = windup(sizes)
            g = primal_from_dual(dual)
        except (ValueError, IndexError):
            continue
        emb = check_fullerene(g, atoms)
        if emb is None:
            continue
        if any(nx.is_isomorphic(g, h) for h, _ in found):
            continue
        found.append((g, emb))
    return found


def write_web(path, title, emb):
    g = nx.Graph(emb)
    edges = sorted(tuple(sorted(e)) for e in g.edges())
    eid = {e: i for i, e in enumerate(edges)}
    lines = [f"# {title}", f"# V={g.number_of_nodes()} E={len(edges)}"]
    for v in sorted(g.nodes()):
        ccw = list(reversed(list(emb.neighbors_cw_order(v))))
        lines.append(f"vertex v{v}: " + " ".join(f"h{v}_{w}" for w in ccw))
    for (a, b) in edges:
        lines.append(f"edge e{eid[(a, b)]}: h{a}_{b} h{b}_{a}")
    with open(path, "w") as f:
        f.write("\n".join(lines) + "\n")


def main(outdir):
    for atoms in (20, 24, 26, 28):
        found = isomers(atoms)
        print(atoms, "isomers:", len(found))
        for k, (_, emb) in enumerate(found):
            write_web(f"{outdir}/c{atoms}_{k}.web", f"fullerene C{atoms} isomer {k}", emb)


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else ".")
