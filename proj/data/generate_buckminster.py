#!/usr/bin/env python3
"""Writes buckminster.emb: the truncated icosahedron with its spherical rotation system.

Vertices are the points u + (v - u)/3 for every ordered icosahedron edge (u, v).
Rotations come from sorting each vertex's neighbours by angle in the plane
tangent to the sphere at that vertex.
"""
import itertools
import math
import sys

import numpy as np


def icosahedron():
    phi = (1 + 5 ** 0.5) / 2
    pts = []
    for a, b in itertools.product((-1, 1), repeat=2):
        pts += [(0, a, b * phi), (a, b * phi, 0), (b * phi, 0, a)]
    pts = np.array(pts, dtype=float)
    d = np.linalg.norm(pts[:, None] - pts[None], axis=2)
    edges = [(i, j) for i in range(12) for j in range(i + 1, 12) if abs(d[i, j] - 2) < 1e-9]
    return pts, edges


def main(out):
    pts, ico_edges = icosahedron()
    arcs = [(u, v) for u, v in ico_edges] + [(v, u) for u, v in ico_edges]
    arcs.sort()
    index = {a: i for i, a in enumerate(arcs)}
    xyz = np.array([pts[u] + (pts[v] - pts[u]) / 3 for u, v in arcs])

    edges = set()
    for u, v in ico_edges:
        edges.add(tuple(sorted((index[(u, v)], index[(v, u)]))))
    d = np.linalg.norm(xyz[:, None] - xyz[None], axis=2)
    side = min(d[a, b] for a, b in edges)
    for a in range(60):
        for b in range(a + 1, 60):
            if abs(d[a, b] - side) < 1e-9:
                edges.add((a, b))
    edges = sorted(edges)
    assert len(edges) == 90

    nbrs = {v: [] for v in range(60)}
    for a, b in edges:
        nbrs[a].append(b)
        nbrs[b].append(a)
    edge_id = {e: i for i, e in enumerate(edges)}

    lines = [f"60 {len(edges)}"] + [f"{a} {b}" for a, b in edges] + ["rotations"]
    for v in range(60):
        normal = xyz[v] / np.linalg.norm(xyz[v])
        ref = xyz[nbrs[v][0]] - xyz[v]
        e1 = ref - normal * ref.dot(normal)
        e1 /= np.linalg.norm(e1)
        e2 = np.cross(normal, e1)

        def angle(w):
            r = xyz[w] - xyz[v]
            return math.atan2(r.dot(e2), r.dot(e1))

        order = sorted(nbrs[v], key=angle)
        lines.append(f"{v}: " + " ".join(str(edge_id[tuple(sorted((v, w)))]) for w in order))
    with open(out, "w") as f:
        f.write("# truncated icosahedron (C60), generated by generate_buckminster.py\n")
        f.write("\n".join(lines) + "\n")


if __name__ == "__main__":
    main(sys.argv[1] if len(sys.argv) > 1 else "buckminster.emb")
