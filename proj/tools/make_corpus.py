#!/usr/bin/env python3
"""Regenerates the JSON complexes in corpus/."""

import itertools
import json
import pathlib
import sys


def closure(facets):
    cells = set()
    for f in facets:
        f = tuple(sorted(f))
        for r in range(1, len(f) + 1):
            cells.update(itertools.combinations(f, r))
    top = max(len(c) for c in cells) - 1
    by_dim = [sorted(c for c in cells if len(c) == n + 1) for n in range(top + 1)]
    index = [{c: j for j, c in enumerate(level)} for level in by_dim]
    faces = [[[] for _ in by_dim[0]]]
    for n in range(1, top + 1):
        faces.append([[index[n - 1][c[:i] + c[i + 1:]] for i in range(n + 1)] for c in by_dim[n]])
    labels = [[list(c) for c in level] for level in by_dim]
    return faces, labels


def closure_args(facets):
    faces, labels = closure(facets)
    return faces, "delta", labels


def write(out, name, faces, kind="delta", labels=None, basepoint=0, truncation=None):
    if truncation is None:
        truncation = len(faces)
    lines = ["{", f'  "name": {json.dumps(name)},', f'  "kind": "{kind}",', f'  "truncation": {truncation},',
             f'  "basepoint": {basepoint},', '  "cells": [']
    lines += ["    " + json.dumps(level, separators=(",", ":")) + ("," if n + 1 < len(faces) else "") for n, level in enumerate(faces)]
    lines.append("  ]" + ("," if labels else ""))
    if labels:
        lines.append('  "labels": [')
        lines += ["    " + json.dumps(level, separators=(",", ":")) + ("," if n + 1 < len(labels) else "") for n, level in enumerate(labels)]
        lines.append("  ]")
    lines.append("}")
    (out / f"{name}.json").write_text("\n".join(lines) + "\n")


def surface_check(facets, euler):
    edges = {}
    for f in facets:
        for e in itertools.combinations(sorted(f), 2):
            edges[e] = edges.get(e, 0) + 1
    assert len({tuple(sorted(f)) for f in facets}) == len(facets), "repeated triangle"
    assert all(c == 2 for c in edges.values()), "edge not shared by exactly two triangles"
    verts = {v for f in facets for v in f}
    assert len(verts) - len(edges) + len(facets) == euler, "wrong Euler characteristic"


def klein_facets(size):
    def vertex(i, j):
        if j == size:
            i, j = (-i) % size, 0
        return (i % size) * size + (j % size)

    facets = []
    for i in range(size):
        for j in range(size):
            a, b, c, d = vertex(i, j), vertex(i + 1, j), vertex(i, j + 1), vertex(i + 1, j + 1)
            facets += [[a, b, d], [a, c, d]]
    return facets


def rp4():
    # Antipodal quotient of the boundary of the 5-dimensional cross-polytope:
    # an n-cell is a set of n+1 coordinates with signs, up to a global sign.
    def normal(coords, signs):
        signs = tuple(signs) if signs[0] > 0 else tuple(-s for s in signs)
        return (tuple(coords), signs)

    by_dim = []
    for n in range(5):
        level = set()
        for coords in itertools.combinations(range(5), n + 1):
            for signs in itertools.product((1, -1), repeat=n + 1):
                level.add(normal(coords, signs))
        by_dim.append(sorted(level))
    index = [{c: j for j, c in enumerate(level)} for level in by_dim]
    faces = [[[] for _ in by_dim[0]]]
    for n in range(1, 5):
        faces.append([[index[n - 1][normal(c[:i] + c[i + 1:], s[:i] + s[i + 1:])] for i in range(n + 1)]
                      for c, s in by_dim[n]])
    return faces


def main():
    out = pathlib.Path(sys.argv[1] if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "corpus")
    out.mkdir(exist_ok=True)
    for k in range(6):
        write(out, f"simplex_{k}", *closure_args([list(range(k + 1))]))
    write(out, "boundary_simplex_3", *closure_args(itertools.combinations(range(4), 3)))
    write(out, "circle_3", *closure_args([[0, 1], [1, 2], [0, 2]]))
    torus = [[0, 1, 3], [1, 2, 4], [2, 3, 5], [3, 4, 6], [4, 5, 0], [5, 6, 1], [6, 0, 2],
             [0, 2, 3], [1, 3, 4], [2, 4, 5], [3, 5, 6], [4, 6, 0], [5, 0, 1], [6, 1, 2]]
    surface_check(torus, 0)
    write(out, "torus_7", *closure_args(torus))
    rp2 = [[0, 1, 2], [0, 2, 3], [0, 3, 4], [0, 4, 5], [0, 5, 1],
           [1, 2, 4], [2, 3, 5], [3, 4, 1], [4, 5, 2], [5, 1, 3]]
    surface_check(rp2, 1)
    write(out, "rp2_6", *closure_args(rp2))
    klein = klein_facets(3)
    surface_check(klein, 0)
    write(out, "klein_9", *closure_args(klein))
    write(out, "rp4_5", rp4(), truncation=5)

    # One-vertex complexes; face lists are (d0, d1, ...).
    write(out, "circle_1", [[[]], [[0, 0]]])
    write(out, "torus_1", [[[]], [[0, 0]] * 3, [[1, 2, 0], [0, 2, 1]]])
    write(out, "klein_1", [[[]], [[0, 0]] * 3, [[1, 2, 0], [0, 1, 2]]])
    write(out, "rp2_1", [[[]], [[0, 0]] * 2, [[0, 1, 0], [1, 0, 0]]])
    write(out, "sphere2_1", [[[]], [[0, 0]], [[0, 0, 0], [0, 0, 0]]])

    # Δ²/∂Δ²: every face of the 2-cell is the degenerate edge at the vertex.
    degenerate_edge = {"cell": 0, "degeneracy": [0]}
    write(out, "sphere2_collapsed", [[[]], [], [[degenerate_edge] * 3]], kind="simplicial", truncation=4)


if __name__ == "__main__":
    main()
