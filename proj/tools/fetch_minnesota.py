#!/usr/bin/env python3
"""Write the Minnesota road network as a 1-based edge list.

The adjacency matrix ships with PyGSP (pygsp/data/pointclouds/minnesota.mat,
originally from MatlabBGL). The raw network has two components; like PyGSP's
``Minnesota(connected=True)`` we add the edge 349-355 (1-based) and binarize the
weights, which gives 2642 vertices and 3304 edges.

    pip install pygsp scipy
    python tools/fetch_minnesota.py data/minnesota.edges
"""

import argparse
import pathlib
import sys


def load_adjacency(mat_path=None):
    import scipy.io
    import scipy.sparse

    if mat_path is None:
        import pygsp

        mat_path = pathlib.Path(pygsp.__file__).parent / "data" / "pointclouds" / "minnesota.mat"
    data = scipy.io.loadmat(str(mat_path))
    adjacency = scipy.sparse.lil_matrix(data["A"])
    adjacency[348, 354] = 1
    adjacency[354, 348] = 1
    return scipy.sparse.coo_matrix(adjacency)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("output", type=pathlib.Path)
    parser.add_argument("--mat", type=pathlib.Path, help="path to minnesota.mat")
    args = parser.parse_args(argv)

    adjacency = load_adjacency(args.mat)
    edges = sorted({(min(i, j), max(i, j)) for i, j in zip(adjacency.row, adjacency.col) if i != j})
    args.output.parent.mkdir(parents=True, exist_ok=True)
    with args.output.open("w") as out:
        out.write(f"# Minnesota road network: {adjacency.shape[0]} vertices, {len(edges)} edges\n")
        for i, j in edges:
            out.write(f"{i + 1} {j + 1} 1\n")
    print(f"wrote {len(edges)} edges to {args.output}", file=sys.stderr)


if __name__ == "__main__":
    main()
